//! Witness objects for `α_C(G) ≥ bound`, checkable independently of how they
//! were produced.

use std::collections::BTreeSet;

use sha2::{Digest, Sha256};

use crate::classes::ForestClass;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::{fmt_rat, int, parse_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestCertificate {
    pub vertex_set: BTreeSet<Vertex>,
    pub class: ForestClass,
    pub claimed_bound: Rat,
}

impl ForestCertificate {
    pub fn new<I: IntoIterator<Item = Vertex>>(
        vertices: I,
        class: ForestClass,
        bound: Rat,
    ) -> Self {
        ForestCertificate {
            vertex_set: vertices.into_iter().collect(),
            class,
            claimed_bound: bound,
        }
    }

    pub fn len(&self) -> usize {
        self.vertex_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_set.is_empty()
    }

    /// `|vertex_set| ≥ claimed_bound`, compared exactly.
    pub fn meets_bound(&self) -> bool {
        int(self.len() as i64) >= self.claimed_bound
    }

    /// Structured text record. `trace` is a one-line summary and may be empty.
    pub fn to_record(&self, g: &Graph, trace: &str) -> String {
        let verts: Vec<String> = self.vertex_set.iter().map(|v| v.to_string()).collect();
        format!(
            "graph={}\nclass={}\nbound={}\nsize={}\nvertices={}\ntrace={}\n",
            graph_hash(g),
            self.class,
            fmt_rat(&self.claimed_bound),
            self.len(),
            verts.join(" "),
            trace
        )
    }

    /// Parses [`ForestCertificate::to_record`] output. Returns the
    /// certificate and the recorded graph hash.
    pub fn from_record(text: &str) -> Result<(ForestCertificate, String), String> {
        let mut hash = None;
        let mut class = None;
        let mut bound = None;
        let mut verts = None;
        let mut size = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("malformed line `{line}`"))?;
            match k {
                "graph" => hash = Some(v.to_string()),
                "class" => class = Some(v.parse::<ForestClass>()?),
                "bound" => bound = Some(parse_rat(v).ok_or_else(|| format!("bad bound `{v}`"))?),
                "size" => size = Some(v.parse::<usize>().map_err(|e| e.to_string())?),
                "vertices" => {
                    let vs = v
                        .split_whitespace()
                        .map(|x| x.parse::<u32>().map(Vertex))
                        .collect::<Result<BTreeSet<_>, _>>()
                        .map_err(|e| format!("bad vertex list: {e}"))?;
                    verts = Some(vs);
                }
                "trace" => {}
                other => return Err(format!("unknown key `{other}`")),
            }
        }
        let cert = ForestCertificate {
            vertex_set: verts.ok_or("missing vertices")?,
            class: class.ok_or("missing class")?,
            claimed_bound: bound.ok_or("missing bound")?,
        };
        if size.is_some_and(|s| s != cert.len()) {
            return Err("size does not match vertex list".into());
        }
        Ok((cert, hash.ok_or("missing graph hash")?))
    }
}

/// Short content hash of the graph's canonical edge list.
pub fn graph_hash(g: &Graph) -> String {
    let digest = Sha256::digest(g.to_edge_list().as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Per-part degree constraints inside the chosen forest: caps 2/1/0 for an
/// ABC partition; for an AB partition every forest edge `vw` with `w ∈ B`
/// needs `v ∈ A` with forest degree 1.
pub fn respects_partition(forest: &Graph, labels: &Partition) -> bool {
    match labels.mode() {
        PartitionMode::Abc => forest.vertices().all(|v| {
            let cap = match labels.get(v) {
                Some(Label::A) => 2,
                Some(Label::B) => 1,
                Some(Label::C) => 0,
                None => return false,
            };
            forest.degree(v) <= cap
        }),
        PartitionMode::Ab => forest.edges().all(|(u, v)| {
            let ok = |a: Vertex, b: Vertex| {
                labels.get(b) != Some(Label::B)
                    || (labels.get(a) == Some(Label::A) && forest.degree(a) == 1)
            };
            ok(u, v) && ok(v, u)
        }),
    }
}

/// Independent check of a certificate against `g`: membership, class, the
/// partition constraints when `labels` is given, and the size claim.
pub fn verify_certificate(g: &Graph, cert: &ForestCertificate, labels: Option<&Partition>) -> bool {
    let Ok(forest) = g.induced_subgraph(&cert.vertex_set) else {
        return false;
    };
    cert.class.contains(&forest)
        && labels.is_none_or(|p| respects_partition(&forest, p))
        && cert.meets_bound()
}
