//! Witness families, gadgets and seeded random graphs.
//!
//! Numbering is fixed per family: core vertices first, then leaves grouped
//! by owner in core order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};

pub const REGULAR_RETRY_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gadget {
    /// Path A–B–A.
    P3Ab,
    /// Edge A–C.
    K2Ac,
    /// Triangle with one A and two C vertices.
    K3Acc,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Complete(usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
    /// `K_n` with `k+1` pendant leaves on every vertex.
    Hnk(usize, usize),
    /// `K_n` with one pendant leaf on every vertex.
    KPrime(usize),
    Fig1Gadget(Gadget),
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomRegular {
        n: usize,
        d: usize,
        seed: u64,
    },
}

fn pairs_of(n: usize) -> impl Iterator<Item = (u32, u32)> {
    (0..n as u32).flat_map(move |u| (u + 1..n as u32).map(move |v| (u, v)))
}

fn complete(n: usize) -> Graph {
    let e: Vec<_> = pairs_of(n).collect();
    Graph::from_edges(n, &e).expect("simple by construction")
}

/// `core` plus `per` pendant leaves on each core vertex, numbered after the core.
fn with_pendants(core: Graph, per: usize) -> Graph {
    let n = core.order();
    let mut g = core;
    for v in 0..n {
        for j in 0..per {
            let leaf = Vertex((n + v * per + j) as u32);
            g.add_vertex(leaf);
            g.add_edge(Vertex(v as u32), leaf).expect("fresh leaf");
        }
    }
    g
}

fn gadget(which: Gadget) -> (Graph, Partition) {
    use Label::*;
    let (g, labels) = match which {
        Gadget::P3Ab => (Graph::from_edges(3, &[(0, 1), (1, 2)]), vec![A, B, A]),
        Gadget::K2Ac => (Graph::from_edges(2, &[(0, 1)]), vec![A, C]),
        Gadget::K3Acc => (
            Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
            vec![A, C, C],
        ),
    };
    let p = Partition::from_pairs(
        PartitionMode::Abc,
        labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| (Vertex(i as u32), l)),
    );
    (g.expect("simple by construction"), p)
}

/// Builds the graph for `spec`; gadgets come with their labeling.
pub fn generate(spec: &GenSpec) -> Result<(Graph, Option<Partition>), GenError> {
    let invalid = |m: &str| Err(GenError::InvalidSpec(format!("{spec}: {m}")));
    let g = match *spec {
        GenSpec::Complete(n) if n >= 1 => complete(n),
        GenSpec::Star(t) => with_pendants(Graph::new(1), t),
        GenSpec::Path(n) if n >= 1 => {
            let e: Vec<_> = (1..n as u32).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &e).expect("simple")
        }
        GenSpec::Cycle(n) if n >= 3 => {
            let e: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
            Graph::from_edges(n, &e).expect("simple")
        }
        GenSpec::Hnk(n, k) if n >= 1 => with_pendants(complete(n), k + 1),
        GenSpec::KPrime(n) if n >= 1 => with_pendants(complete(n), 1),
        GenSpec::Fig1Gadget(which) => {
            let (g, p) = gadget(which);
            return Ok((g, Some(p)));
        }
        GenSpec::Gnp { n, p, seed } if n >= 1 && (0.0..=1.0).contains(&p) => gnp(n, p, seed),
        GenSpec::RandomRegular { n, d, seed } if n >= 1 => random_regular(n, d, seed)?,
        _ => return invalid("parameters out of range"),
    };
    Ok((g, None))
}

/// Erdős–Rényi `G(n, p)`; identical seeds give identical edge sets.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e: Vec<_> = pairs_of(n).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &e).expect("simple by construction")
}

/// Simple `d`-regular graph from the pairing model, rejecting pairings with
/// loops or repeated edges.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GenError> {
    if (n * d) % 2 == 1 || d >= n.max(1) {
        return Err(GenError::InfeasibleDegree { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<u32> = (0..n as u32)
        .flat_map(|v| std::iter::repeat_n(v, d))
        .collect();
    'attempt: for _ in 0..REGULAR_RETRY_LIMIT {
        points.shuffle(&mut rng);
        let mut g = Graph::new(n);
        for pair in points.chunks(2) {
            if g.add_edge(Vertex(pair[0]), Vertex(pair[1])).is_err() {
                continue 'attempt;
            }
        }
        return Ok(g);
    }
    Err(GenError::RetryLimit(REGULAR_RETRY_LIMIT))
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gadget::P3Ab => "p3ab",
            Gadget::K2Ac => "k2ac",
            Gadget::K3Acc => "k3acc",
        })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Complete(n) => write!(f, "complete:n={n}"),
            GenSpec::Star(t) => write!(f, "star:t={t}"),
            GenSpec::Path(n) => write!(f, "path:n={n}"),
            GenSpec::Cycle(n) => write!(f, "cycle:n={n}"),
            GenSpec::Hnk(n, k) => write!(f, "hnk:n={n},k={k}"),
            GenSpec::KPrime(n) => write!(f, "kprime:n={n}"),
            GenSpec::Fig1Gadget(g) => write!(f, "fig1:{g}"),
            GenSpec::Gnp { n, p, seed } => write!(f, "gnp:n={n},p={p},seed={seed}"),
            GenSpec::RandomRegular { n, d, seed } => write!(f, "regular:n={n},d={d},seed={seed}"),
        }
    }
}

impl FromStr for GenSpec {
    type Err = GenError;

    /// `complete:n=4`, `star:t=5`, `path:n=5`, `cycle:n=5`, `hnk:n=3,k=2`,
    /// `kprime:n=3`, `fig1:p3ab|k2ac|k3acc`, `gnp:n=30,p=0.2,seed=42`,
    /// `regular:n=10,d=3,seed=7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::InvalidSpec(s.to_string());
        let (family, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        if family == "fig1" {
            return Ok(GenSpec::Fig1Gadget(match rest {
                "p3ab" => Gadget::P3Ab,
                "k2ac" => Gadget::K2Ac,
                "k3acc" => Gadget::K3Acc,
                _ => return Err(bad()),
            }));
        }
        let mut kv = std::collections::BTreeMap::new();
        for part in rest.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            kv.insert(k.trim(), v.trim());
        }
        let mut take = |key: &str| kv.remove(key).ok_or_else(bad);
        let spec = match family {
            "complete" => GenSpec::Complete(take("n")?.parse().map_err(|_| bad())?),
            "star" => GenSpec::Star(take("t")?.parse().map_err(|_| bad())?),
            "path" => GenSpec::Path(take("n")?.parse().map_err(|_| bad())?),
            "cycle" => GenSpec::Cycle(take("n")?.parse().map_err(|_| bad())?),
            "hnk" => GenSpec::Hnk(
                take("n")?.parse().map_err(|_| bad())?,
                take("k")?.parse().map_err(|_| bad())?,
            ),
            "kprime" => GenSpec::KPrime(take("n")?.parse().map_err(|_| bad())?),
            "gnp" => GenSpec::Gnp {
                n: take("n")?.parse().map_err(|_| bad())?,
                p: take("p")?.parse().map_err(|_| bad())?,
                seed: take("seed")?.parse().map_err(|_| bad())?,
            },
            "regular" => GenSpec::RandomRegular {
                n: take("n")?.parse().map_err(|_| bad())?,
                d: take("d")?.parse().map_err(|_| bad())?,
                seed: take("seed")?.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        if !kv.is_empty() {
            return Err(bad());
        }
        Ok(spec)
    }
}
