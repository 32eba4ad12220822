//! Certified builders: each returns a vertex set together with the bound it
//! is claimed to meet, and every result passes [`verify_certificate`] before
//! it leaves this module.
//!
//! The two partitioned builders, [`abc_construct`] and [`ab_construct`],
//! run a reduction engine. Each move shrinks the graph and carries an
//! accounting check `f(G') + |taken| ≥ f(G)`; a move is applied only when
//! the check passes, so lifting a solution of the reduced instance never
//! loses ground. Small or degree-2 residuals are solved outright.

mod ab;
mod abc;
mod cubic;
mod engine;
mod kcat;
mod linear;
mod star;

use std::collections::BTreeSet;
use std::fmt;

use crate::exact::DEFAULT_BUDGET;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition};

pub use crate::certificate::verify_certificate;
pub use ab::{ab_construct, ab_construct_with};
pub use abc::{abc_construct, abc_construct_with};
pub use cubic::cubic_partition;
pub use kcat::{k_caterpillar_forest, k_caterpillar_forest_with};
pub use linear::{caterpillar_forest, greedy_linear_forest};
pub use star::{star_forest, star_forest_with};

/// Tuning for the reduction engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineOptions {
    /// Connected residuals with at most this many vertices go to the exact
    /// solver. Zero disables it except as a last resort.
    pub exact_threshold: usize,
    /// Node budget handed to the exact solver.
    pub budget: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            exact_threshold: 16,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Reduction moves and base cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Delete one vertex whose weight is covered by its neighbours' gains.
    Delete,
    /// Take a small forest `F` and delete `N[F]`.
    TakeClosed,
    /// Solve a path or cycle residual by dynamic programming.
    PathCycle,
    /// Take a degree-1 vertex after demoting (or, for stars, moving to `B`)
    /// its neighbour.
    Leaf,
    /// Take a vertex, delete all but one neighbour and demote (or, for
    /// stars, move to `B`) the one kept.
    KeepOne,
    /// Split into connected components.
    Split,
    /// `G - z + xy` around a degree-3 `B` vertex, which is promoted.
    Promote,
    /// Two promotions around the two degree-3 `B` neighbours of one vertex.
    DoublePromote,
    /// Take a vertex, delete it, demote its whole neighbourhood into a clique.
    Clique,
    /// Take a degree-3 `A` vertex with two `B` neighbours joined by an edge.
    Hub,
    /// Delete two vertices at distance at most 2.
    PairDelete,
    /// Take a degree-2 star vertex on a triangle, moving the other two to `B`.
    Triangle,
    /// Take two forest pieces near a pair of degree-2 vertices, keeping one
    /// neighbour as a `B` vertex.
    Bridge,
    /// Solve a cubic endgame through a bounded-degree bipartition.
    Cubic,
    /// Solve by exact search.
    Exact,
    /// Exact search on a residual where no move applies.
    Fallback,
    /// Forced deletion when nothing else applies; the result may miss its bound.
    Stuck,
}

impl Rule {
    /// Steps that solve a residual outright rather than reduce it.
    pub fn is_solve(self) -> bool {
        matches!(
            self,
            Rule::PathCycle | Rule::Cubic | Rule::Exact | Rule::Fallback
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Delete => "delete",
            Rule::TakeClosed => "take",
            Rule::PathCycle => "path-cycle",
            Rule::Leaf => "leaf",
            Rule::KeepOne => "keep-one",
            Rule::Split => "split",
            Rule::Promote => "promote",
            Rule::DoublePromote => "double-promote",
            Rule::Clique => "clique",
            Rule::Hub => "hub",
            Rule::PairDelete => "pair-delete",
            Rule::Triangle => "triangle",
            Rule::Bridge => "bridge",
            Rule::Cubic => "cubic",
            Rule::Exact => "exact",
            Rule::Fallback => "fallback",
            Rule::Stuck => "stuck",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One applied step. For reductions the delta fields describe the change to
/// the working graph; for solve steps `residual` holds the piece solved and
/// `taken` its solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub touched: Vec<Vertex>,
    pub removed: Vec<Vertex>,
    pub added_edges: Vec<(Vertex, Vertex)>,
    pub relabeled: Vec<(Vertex, Label)>,
    pub taken: Vec<Vertex>,
    pub residual: Option<(Graph, Partition)>,
}

/// Ordered record of everything an engine run did.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    /// Union of all `taken` sets: the lifted solution.
    pub fn taken(&self) -> BTreeSet<Vertex> {
        self.steps
            .iter()
            .flat_map(|s| s.taken.iter().copied())
            .collect()
    }

    /// Applies every reduction step to `(g, p)`. The result is the disjoint
    /// union of the residuals recorded by the solve steps.
    pub fn replay(&self, g: &Graph, p: &Partition) -> (Graph, Partition) {
        let mut g = g.clone();
        let mut p = p.clone();
        for s in self.steps.iter().filter(|s| !s.rule.is_solve()) {
            for &v in &s.removed {
                g.remove_vertex(v).expect("replayed vertex exists");
                p.remove(v);
            }
            for &(u, v) in &s.added_edges {
                g.ensure_edge(u, v).expect("replayed edge is valid");
            }
            for &(v, l) in &s.relabeled {
                p.set(v, l);
            }
        }
        (g, p)
    }

    /// Disjoint union of the residuals handed to solve steps.
    pub fn residual(&self, mode: crate::partition::PartitionMode) -> (Graph, Partition) {
        let mut g = Graph::default();
        let mut p = Partition::new(mode);
        for (rg, rp) in self.steps.iter().filter_map(|s| s.residual.as_ref()) {
            g = g.disjoint_union(rg).expect("residuals are disjoint");
            for (v, l) in rp.iter() {
                p.set(v, l);
            }
        }
        (g, p)
    }

    /// One-line summary: rule names with counts, in rule order.
    pub fn summary(&self) -> String {
        let mut counts = std::collections::BTreeMap::new();
        for s in &self.steps {
            *counts.entry(s.rule).or_insert(0usize) += 1;
        }
        counts
            .iter()
            .map(|(r, n)| format!("{r}:{n}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}
