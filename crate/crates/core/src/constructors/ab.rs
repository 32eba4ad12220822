//! Star forests in which every edge into `B` comes from an `A` leaf.

use std::collections::BTreeSet;

use super::cubic::cubic_partition;
use super::engine::{self, Lemma, Move, Piece};
use super::{EngineOptions, ReductionTrace, Rule};
use crate::certificate::{respects_partition, ForestCertificate};
use crate::classes::{is_star_forest, ForestClass};
use crate::error::ConstructError;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::{ab_star_weight, total_weight, BoundSpec, Rat};

pub(crate) struct Ab;

fn first<I: IntoIterator<Item = Move>>(piece: &Piece, moves: I) -> Option<Move> {
    moves.into_iter().find(|m| piece.accepts(m))
}

/// Take `v ∈ A`, keep only its neighbour `t` and move `t` to `B`.
fn keep_one(piece: &Piece, v: Vertex, rule: Rule) -> Option<Move> {
    if piece.label(v) != Label::A {
        return None;
    }
    first(
        piece,
        piece.nbrs(v).iter().map(|&t| {
            let rest = piece.nbrs(v).iter().copied().filter(|&w| w != t);
            let mv = Move::new(rule).remove(rest.chain([v])).take([v]);
            if piece.degree_after(t, &mv) > 0 {
                mv.relabel(t, Label::B)
            } else {
                mv
            }
        }),
    )
}

/// Take a degree-2 `A` vertex on a triangle, moving the other two to `B`.
fn triangle(piece: &Piece, x: Vertex) -> Option<Move> {
    if piece.label(x) != Label::A || piece.deg(x) != 2 {
        return None;
    }
    let nb: Vec<Vertex> = piece.nbrs(x).iter().copied().collect();
    if !piece.g.has_edge(nb[0], nb[1]) {
        return None;
    }
    let mv = Move::new(Rule::Triangle)
        .remove([x])
        .relabel(nb[0], Label::B)
        .relabel(nb[1], Label::B)
        .take([x]);
    piece.accepts(&mv).then_some(mv)
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

fn is_a2(piece: &Piece, v: Vertex) -> bool {
    piece.label(v) == Label::A && piece.deg(v) == 2
}

/// Moves around two degree-2 `A` vertices `v, w` joined by a path
/// `v - x - y - w`, with `t` the other neighbour of `w`: take
/// `{v, x, w, t}` outright, or take `{v, x, w}` and keep `t` as a `B`
/// centre.
fn bridge(piece: &Piece, v: Vertex) -> Option<Move> {
    if !is_a2(piece, v) {
        return None;
    }
    for &x in piece.nbrs(v) {
        for &y in piece.nbrs(x) {
            if y == v || piece.g.has_edge(v, y) {
                continue;
            }
            for &w in piece.nbrs(y) {
                if w == x
                    || w == v
                    || !is_a2(piece, w)
                    || piece.g.has_edge(w, x)
                    || piece.g.has_edge(w, v)
                {
                    continue;
                }
                let Some(&t) = piece.nbrs(w).iter().find(|&&t| t != y) else {
                    continue;
                };
                if t == v || t == x {
                    continue;
                }
                if let Some(mv) = take_closed(piece, &[v, x, w, t]) {
                    return Some(Move {
                        rule: Rule::Bridge,
                        ..mv
                    });
                }
                let f = [v, x, w];
                if piece.g.has_edge(t, v) || piece.g.has_edge(t, x) || !piece.admits(&f) {
                    continue;
                }
                let mut remove = piece.closed(&f);
                remove.remove(&t);
                let mv = Move::new(Rule::Bridge)
                    .remove(remove)
                    .relabel(t, Label::B)
                    .take(f);
                if piece.accepts(&mv) {
                    return Some(mv);
                }
            }
        }
    }
    None
}

/// Whether every vertex is a degree-2 or degree-3 `A` vertex, and the
/// degree-2 ones are pairwise at distance at least 4 with nonadjacent
/// degree-3 neighbours.
fn endgame_shape(piece: &Piece) -> Option<Vec<Vertex>> {
    let g = &piece.g;
    if g.vertices()
        .any(|v| piece.label(v) != Label::A || !(2..=3).contains(&g.degree(v)))
    {
        return None;
    }
    let a2: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 2).collect();
    for &v in &a2 {
        let nb: Vec<Vertex> = g.neighbors(v).iter().copied().collect();
        if g.has_edge(nb[0], nb[1]) || nb.iter().any(|&u| g.degree(u) != 3) {
            return None;
        }
        let dist = g.distances_from(v);
        if a2
            .iter()
            .any(|&w| w != v && dist.get(&w).is_some_and(|&d| d < 4))
        {
            return None;
        }
    }
    Some(a2)
}

/// Contract every degree-2 vertex into an edge between its neighbours,
/// split the cubic result into two parts of induced degree ≤ 1, and take
/// the larger part together with the contracted vertices.
fn cubic_endgame(piece: &Piece) -> Option<BTreeSet<Vertex>> {
    let a2 = endgame_shape(piece)?;
    let mut h = piece.g.clone();
    for &v in &a2 {
        let nb: Vec<Vertex> = h.neighbors(v).iter().copied().collect();
        h.remove_vertex(v).ok()?;
        h.add_edge(nb[0], nb[1]).ok()?;
    }
    let (p1, p2) = if h.is_empty() {
        (BTreeSet::new(), BTreeSet::new())
    } else {
        cubic_partition(&h).ok()?
    };
    let mut f = if p1.len() >= p2.len() { p1 } else { p2 };
    f.extend(a2);
    let fv: Vec<Vertex> = f.iter().copied().collect();
    let enough = Rat::from_integer(f.len().into()) >= piece.total();
    (piece.admits(&fv) && enough).then_some(f)
}

impl Lemma for Ab {
    fn weight(label: Label, d: usize) -> Rat {
        ab_star_weight(label, d)
    }

    fn admissible(forest: &Graph, p: &Partition) -> bool {
        is_star_forest(forest) && respects_partition(forest, p)
    }

    fn run_ok(run: &[Label]) -> bool {
        match run.len() {
            1 => true,
            2 => run != [Label::B, Label::B],
            _ => run[0] == Label::A && run[2] == Label::A,
        }
    }

    fn run_dead(run: &[Label]) -> bool {
        run.len() >= 4
    }

    fn cycle_cuts(labels: &[Label]) -> Vec<usize> {
        (0..labels.len().min(4)).collect()
    }

    fn find_move(piece: &Piece) -> Option<Move> {
        let vs: Vec<Vertex> = piece.g.vertices().collect();
        first(
            piece,
            vs.iter().map(|&v| Move::new(Rule::Delete).remove([v])),
        )
        .or_else(|| {
            vs.iter()
                .filter(|&&v| piece.deg(v) == 1)
                .find_map(|&v| keep_one(piece, v, Rule::Leaf))
        })
        .or_else(|| vs.iter().find_map(|&v| triangle(piece, v)))
        .or_else(|| vs.iter().find_map(|&v| take_closed(piece, &[v])))
        .or_else(|| vs.iter().find_map(|&v| keep_one(piece, v, Rule::KeepOne)))
        .or_else(|| {
            vs.iter().find_map(|&u| {
                piece
                    .near_above(u)
                    .into_iter()
                    .find_map(|w| take_closed(piece, &[u, w]))
            })
        })
        .or_else(|| {
            vs.iter().find_map(|&b| {
                let nb: Vec<Vertex> = piece.nbrs(b).iter().copied().collect();
                nb.iter().enumerate().find_map(|(i, &a)| {
                    nb[i + 1..].iter().find_map(|&c| {
                        if piece.g.has_edge(a, c) {
                            None
                        } else {
                            take_closed(piece, &[a, b, c])
                        }
                    })
                })
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
        .or_else(|| vs.iter().find_map(|&v| bridge(piece, v)))
    }

    fn endgame(piece: &Piece) -> Option<BTreeSet<Vertex>> {
        cubic_endgame(piece)
    }
}

fn ab_partition(g: &Graph, p: &Partition) -> Result<Partition, ConstructError> {
    p.validate(g).map_err(ConstructError::BadPartition)?;
    if p.iter().any(|(_, l)| l == Label::C) {
        return Err(ConstructError::BadPartition(
            "label C in an AB partition".into(),
        ));
    }
    Ok(Partition::from_pairs(PartitionMode::Ab, p.iter()))
}

/// Induced star forest respecting an `A / B` partition (every forest edge
/// `vw` with `w ∈ B` has `v ∈ A` of forest degree 1) with at least
/// `Σ f(v)` vertices, with the weights of [`ab_star_weight`].
///
/// ```
/// use forestbound::constructors::ab_construct;
/// use forestbound::graph::Graph;
/// use forestbound::partition::{Label, Partition, PartitionMode};
///
/// let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
/// let p = Partition::uniform(&c5, PartitionMode::Ab, Label::A);
/// let (cert, _) = ab_construct(&c5, &p).unwrap();
/// assert_eq!(cert.len(), 3);
/// ```
pub fn ab_construct(
    g: &Graph,
    p: &Partition,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    ab_construct_with(g, p, &EngineOptions::default())
}

pub fn ab_construct_with(
    g: &Graph,
    p: &Partition,
    opts: &EngineOptions,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    let p = ab_partition(g, p)?;
    let bound = total_weight(g, &BoundSpec::AbStarWeights, Some(&p))?;
    let trace = engine::run::<Ab>(g, &p, opts);
    engine::certify(g, &p, trace, ForestClass::StarForest, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{alpha_exact_partitioned, DEFAULT_BUDGET};
    use crate::weights::{int, rat};

    fn rules_only() -> EngineOptions {
        EngineOptions {
            exact_threshold: 0,
            ..EngineOptions::default()
        }
    }

    fn labeled(g: &Graph, ls: &[Label]) -> Partition {
        Partition::from_pairs(PartitionMode::Ab, g.vertices().zip(ls.iter().copied()))
    }

    #[test]
    fn examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let cases = [
            (k2.clone(), vec![Label::A; 2], 2, rat(5, 3)),
            (c5.clone(), vec![Label::A; 5], 3, int(3)),
            (p3.clone(), vec![Label::B, Label::A, Label::B], 2, rat(8, 5)),
        ];
        for (g, ls, size, bound) in cases {
            let p = labeled(&g, &ls);
            for opts in [EngineOptions::default(), rules_only()] {
                let (cert, _) = ab_construct_with(&g, &p, &opts).unwrap();
                assert_eq!(cert.len(), size);
                assert_eq!(cert.claimed_bound, bound);
            }
        }
    }

    #[test]
    fn rejects_c_labels() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = Partition::from_pairs(
            PartitionMode::Abc,
            [(Vertex(0), Label::A), (Vertex(1), Label::C)],
        );
        assert!(matches!(
            ab_construct(&k2, &p),
            Err(ConstructError::BadPartition(_))
        ));
    }

    #[test]
    fn path_dp_matches_oracle() {
        use Label::*;
        let labels = [
            vec![A, B, A, A, A, B, B, A],
            vec![B, A, A, A, A, A, B],
            vec![A, A, A, A, A, A, A, A, A],
            vec![A, A, A],
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
                let p = labeled(&g, &ls);
                let piece = Piece::new::<Ab>(g.clone(), p.clone());
                let got = engine::path_cycle::<Ab>(&piece);
                let want = alpha_exact_partitioned(&g, &p, DEFAULT_BUDGET).unwrap();
                assert_eq!(got.len(), want.alpha, "{ls:?} closed={closed}");
                assert!(piece.admits(&got.into_iter().collect::<Vec<_>>()));
            }
        }
    }

    #[test]
    fn cubic_endgame_on_petersen() {
        let g = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let p = Partition::uniform(&g, PartitionMode::Ab, Label::A);
        let piece = Piece::new::<Ab>(g, p);
        let f = cubic_endgame(&piece).unwrap();
        assert!(f.len() >= 5);
    }
}
