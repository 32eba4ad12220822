//! Linear forests with per-part degree caps 2 / 1 / 0.

use super::engine::{self, Lemma, Move, Piece};
use super::{EngineOptions, ReductionTrace, Rule};
use crate::certificate::{respects_partition, ForestCertificate};
use crate::classes::{is_linear_forest, ForestClass};
use crate::error::ConstructError;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::{abc_weight, total_weight, BoundSpec, Rat};

pub(crate) struct Abc;

fn cap(l: Label) -> usize {
    match l {
        Label::A => 2,
        Label::B => 1,
        Label::C => 0,
    }
}

/// Label for a vertex that is about to gain one forest neighbour outside
/// the reduced instance: unchanged when its reduced degree leaves room,
/// otherwise one rank down.
fn make_room(piece: &Piece, x: Vertex, d_after: usize) -> Option<Label> {
    let l = piece.label(x);
    if d_after < cap(l) {
        Some(l)
    } else {
        l.demoted()
    }
}

fn first<I: IntoIterator<Item = Move>>(piece: &Piece, moves: I) -> Option<Move> {
    moves.into_iter().find(|m| piece.accepts(m))
}

fn keep_one(piece: &Piece, v: Vertex, rule: Rule) -> Option<Move> {
    if piece.label(v) == Label::C {
        return None;
    }
    for &x in piece.nbrs(v) {
        if piece.label(x) == Label::C {
            continue;
        }
        let mut remove: Vec<Vertex> = piece.nbrs(v).iter().copied().filter(|&w| w != x).collect();
        remove.push(v);
        let mut mv = Move::new(rule).remove(remove).take([v]);
        let d = piece.degree_after(x, &mv);
        let Some(l) = make_room(piece, x, d) else {
            continue;
        };
        mv = mv.relabel(x, l);
        if piece.accepts(&mv) {
            return Some(mv);
        }
    }
    None
}

/// `G - z + xy` around a degree-3 `B` vertex `v`, promoting `v`. The
/// preferred `z` is the lightest neighbour.
fn promote(piece: &Piece, v: Vertex) -> Option<Move> {
    if piece.label(v) != Label::B || piece.deg(v) != 3 {
        return None;
    }
    let mut nb: Vec<Vertex> = piece.nbrs(v).iter().copied().collect();
    nb.sort_by(|&a, &b| piece.f(a).cmp(&piece.f(b)).then(a.cmp(&b)));
    (0..3).find_map(|i| {
        let z = nb[i];
        let others: Vec<Vertex> = nb.iter().copied().filter(|&w| w != z).collect();
        let mv = Move::new(Rule::Promote)
            .remove([z])
            .edge(others[0], others[1])
            .relabel(v, Label::A);
        piece.accepts(&mv).then_some(mv)
    })
}

/// Two promotions around the degree-3 `B` neighbours of a deleted vertex.
fn double_promote(piece: &Piece, v: Vertex) -> Option<Move> {
    let b3: Vec<Vertex> = piece
        .nbrs(v)
        .iter()
        .copied()
        .filter(|&u| piece.label(u) == Label::B && piece.deg(u) == 3)
        .collect();
    for (i, &u) in b3.iter().enumerate() {
        for &w in &b3[i + 1..] {
            let mut mv = Move::new(Rule::DoublePromote).remove([v]);
            for y in [u, w] {
                let o: Vec<Vertex> = piece.nbrs(y).iter().copied().filter(|&t| t != v).collect();
                mv = mv.edge(o[0], o[1]).relabel(y, Label::A);
            }
            if piece.accepts(&mv) {
                return Some(mv);
            }
        }
    }
    None
}

/// Take `v`, delete it, and turn its neighbourhood into a clique whose
/// members are demoted: one rank when `v ∈ A` and the neighbourhood is
/// independent, or all the way to `C`.
fn clique(piece: &Piece, v: Vertex) -> Option<Move> {
    let l = piece.label(v);
    let nb: Vec<Vertex> = piece.nbrs(v).iter().copied().collect();
    if l == Label::C || nb.iter().any(|&x| piece.label(x) == Label::C) {
        return None;
    }
    let base = || {
        let mut mv = Move::new(Rule::Clique).remove([v]).take([v]);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                mv = mv.edge(x, y);
            }
        }
        mv
    };
    let independent = nb
        .iter()
        .enumerate()
        .all(|(i, &x)| nb[i + 1..].iter().all(|&y| !piece.g.has_edge(x, y)));
    let mut options = Vec::new();
    if l == Label::A && independent {
        let mut mv = base();
        for &x in &nb {
            mv = mv.relabel(x, piece.label(x).demoted().expect("not C"));
        }
        options.push(mv);
    }
    let mut mv = base();
    for &x in &nb {
        mv = mv.relabel(x, Label::C);
    }
    options.push(mv);
    first(piece, options)
}

/// Take a degree-3 `A` vertex `v`; two `B` neighbours `x, y` become `C`
/// and are joined, the third neighbour makes room.
fn hub(piece: &Piece, v: Vertex) -> Option<Move> {
    if piece.label(v) != Label::A || piece.deg(v) != 3 {
        return None;
    }
    let nb: Vec<Vertex> = piece.nbrs(v).iter().copied().collect();
    for (x, y, z) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (x, y, z) = (nb[x], nb[y], nb[z]);
        if piece.label(x) != Label::B || piece.label(y) != Label::B {
            continue;
        }
        let mv = Move::new(Rule::Hub)
            .remove([v])
            .edge(x, y)
            .relabel(x, Label::C)
            .relabel(y, Label::C)
            .take([v]);
        let d = piece.degree_after(z, &mv);
        let Some(lz) = make_room(piece, z, d) else {
            continue;
        };
        let mv = mv.relabel(z, lz);
        if piece.accepts(&mv) {
            return Some(mv);
        }
    }
    None
}

fn take_closed(piece: &Piece, f: &[Vertex]) -> Option<Move> {
    if !piece.admits(f) {
        return None;
    }
    let mv = Move::new(Rule::TakeClosed)
        .remove(piece.closed(f))
        .take(f.iter().copied());
    piece.accepts(&mv).then_some(mv)
}

/// Induced paths `a - b - c`, by middle vertex.
fn induced_p3(piece: &Piece) -> impl Iterator<Item = [Vertex; 3]> + '_ {
    piece.g.vertices().flat_map(move |b| {
        let nb: Vec<Vertex> = piece.nbrs(b).iter().copied().collect();
        let mut out = Vec::new();
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !piece.g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    })
}

impl Lemma for Abc {
    fn weight(label: Label, d: usize) -> Rat {
        abc_weight(label, d)
    }

    fn admissible(forest: &Graph, p: &Partition) -> bool {
        is_linear_forest(forest) && respects_partition(forest, p)
    }

    fn run_ok(run: &[Label]) -> bool {
        run.len() == 1 || (run[0] != Label::C && run[run.len() - 1] != Label::C)
    }

    fn run_dead(run: &[Label]) -> bool {
        run.len() >= 3 && run[1] != Label::A
    }

    fn cycle_cuts(labels: &[Label]) -> Vec<usize> {
        let m = labels.len();
        match labels.iter().position(|&l| l != Label::A) {
            None => vec![0],
            Some(c) => {
                let mut cuts = vec![(c + m - 1) % m, c, (c + 1) % m];
                cuts.sort();
                cuts.dedup();
                cuts
            }
        }
    }

    fn find_move(piece: &Piece) -> Option<Move> {
        let vs: Vec<Vertex> = piece.g.vertices().collect();
        let mv = first(
            piece,
            vs.iter().map(|&v| Move::new(Rule::Delete).remove([v])),
        )
        .or_else(|| {
            vs.iter()
                .filter(|&&v| piece.deg(v) == 1)
                .find_map(|&v| keep_one(piece, v, Rule::Leaf))
        })
        .or_else(|| vs.iter().find_map(|&v| promote(piece, v)))
        .or_else(|| vs.iter().find_map(|&v| take_closed(piece, &[v])))
        .or_else(|| vs.iter().find_map(|&v| keep_one(piece, v, Rule::KeepOne)))
        .or_else(|| vs.iter().find_map(|&v| clique(piece, v)))
        .or_else(|| vs.iter().find_map(|&v| hub(piece, v)))
        .or_else(|| vs.iter().find_map(|&v| double_promote(piece, v)))
        .or_else(|| {
            vs.iter().find_map(|&u| {
                piece
                    .near_above(u)
                    .into_iter()
                    .find_map(|w| take_closed(piece, &[u, w]))
            })
        })
        .or_else(|| {
            vs.iter().find_map(|&u| {
                piece.near_above(u).into_iter().find_map(|w| {
                    let mv = Move::new(Rule::PairDelete).remove([u, w]);
                    piece.accepts(&mv).then_some(mv)
                })
            })
        })
        .or_else(|| induced_p3(piece).find_map(|t| take_closed(piece, &t)));
        mv
    }
}

fn abc_partition(g: &Graph, p: &Partition) -> Result<Partition, ConstructError> {
    p.validate(g).map_err(ConstructError::BadPartition)?;
    Ok(Partition::from_pairs(PartitionMode::Abc, p.iter()))
}

/// Induced linear forest with degree caps 2 / 1 / 0 on `A / B / C` and at
/// least `Σ f(v)` vertices, with the weights of [`abc_weight`].
///
/// ```
/// use forestbound::constructors::abc_construct;
/// use forestbound::graph::Graph;
/// use forestbound::partition::Partition;
///
/// let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
/// let p = Partition::parse("0 A\n1 B\n2 A\n", None).unwrap();
/// let (cert, _) = abc_construct(&g, &p).unwrap();
/// assert_eq!(cert.len(), 2);
/// ```
pub fn abc_construct(
    g: &Graph,
    p: &Partition,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    abc_construct_with(g, p, &EngineOptions::default())
}

pub fn abc_construct_with(
    g: &Graph,
    p: &Partition,
    opts: &EngineOptions,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    let p = abc_partition(g, p)?;
    let bound = total_weight(g, &BoundSpec::AbcWeights, Some(&p))?;
    let trace = engine::run::<Abc>(g, &p, opts);
    engine::certify(g, &p, trace, ForestClass::LinearForest, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{alpha_exact_partitioned, DEFAULT_BUDGET};
    use crate::generators::{generate, Gadget, GenSpec};
    use crate::weights::{int, rat};

    fn rules_only() -> EngineOptions {
        EngineOptions {
            exact_threshold: 0,
            ..EngineOptions::default()
        }
    }

    fn gadget(gd: Gadget) -> (Graph, Partition) {
        let (g, p) = generate(&GenSpec::Fig1Gadget(gd)).unwrap();
        (g, p.unwrap())
    }

    #[test]
    fn gadget_examples() {
        for (gd, size, bound) in [
            (Gadget::P3Ab, 2, int(2)),
            (Gadget::K2Ac, 1, int(1)),
            (Gadget::K3Acc, 1, int(1)),
        ] {
            let (g, p) = gadget(gd);
            for opts in [EngineOptions::default(), rules_only()] {
                let (cert, _) = abc_construct_with(&g, &p, &opts).unwrap();
                assert_eq!(cert.len(), size, "{gd:?}");
                assert_eq!(cert.claimed_bound, bound);
            }
        }
    }

    #[test]
    fn cycles_by_rules() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p = Partition::uniform(&c5, PartitionMode::Abc, Label::A);
        let (cert, trace) = abc_construct_with(&c5, &p, &rules_only()).unwrap();
        assert_eq!(cert.len(), 4);
        assert_eq!(cert.claimed_bound, rat(10, 3));
        assert_eq!(trace.count(Rule::PathCycle), 1);
    }

    #[test]
    fn path_dp_matches_oracle() {
        use Label::*;
        let labels = [
            vec![A, B, A, C, A, A, B],
            vec![C, A, C, A, B, B, A, A],
            vec![B, B, B, A, A, A, C, C, A],
        ];
        for ls in labels {
            let n = ls.len();
            let edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
            for closed in [false, true] {
                let mut e = edges.clone();
                if closed {
                    e.push((n as u32 - 1, 0));
                }
                let g = Graph::from_edges(n, &e).unwrap();
                let p = Partition::from_pairs(
                    PartitionMode::Abc,
                    ls.iter().enumerate().map(|(i, &l)| (Vertex(i as u32), l)),
                );
                let piece = Piece::new::<Abc>(g.clone(), p.clone());
                let got = engine::path_cycle::<Abc>(&piece);
                let want = alpha_exact_partitioned(&g, &p, DEFAULT_BUDGET).unwrap();
                assert_eq!(got.len(), want.alpha, "{ls:?} closed={closed}");
                assert!(piece.admits(&got.into_iter().collect::<Vec<_>>()));
            }
        }
    }
}
