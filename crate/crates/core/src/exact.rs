//! Exact `α_C(G)` for small graphs.
//!
//! Include/exclude branch-and-bound over vertices in ascending identifier
//! order. Every class handled here is hereditary, so a vertex that cannot
//! join the current partial solution on its own can be discarded for the
//! whole subtree; the bound is `|chosen| + |compatible candidates|`.
//! Graphs are packed into `u64` adjacency masks, which caps the order at 64.

use std::collections::BTreeSet;

use crate::classes::ForestClass;
use crate::error::OracleError;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleResult {
    pub alpha: usize,
    pub witness: BTreeSet<Vertex>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone)]
enum Constraint {
    Class(ForestClass),
    Abc(Vec<Label>),
    Ab(Vec<Label>),
}

struct Search {
    adj: Vec<u64>,
    constraint: Constraint,
    best: u64,
    best_size: u32,
    found: bool,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Search {
    fn degree(&self, v: usize, mask: u64) -> u32 {
        (self.adj[v] & mask).count_ones()
    }

    fn is_forest(&self, mask: u64) -> bool {
        let mut edges2 = 0u32;
        for v in bits(mask) {
            edges2 += self.degree(v, mask);
        }
        let mut comps = 0u32;
        let mut unseen = mask;
        while unseen != 0 {
            comps += 1;
            let mut frontier = unseen & unseen.wrapping_neg();
            unseen &= !frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v] & unseen;
                }
                unseen &= !next;
                frontier = next;
            }
        }
        edges2 / 2 + comps == mask.count_ones()
    }

    fn star_shaped(&self, mask: u64) -> bool {
        bits(mask).all(|v| {
            self.degree(v, mask) <= 1 || bits(self.adj[v] & mask).all(|w| self.degree(w, mask) <= 1)
        })
    }

    fn feasible(&self, mask: u64) -> bool {
        match &self.constraint {
            Constraint::Class(ForestClass::LinearForest) => {
                bits(mask).all(|v| self.degree(v, mask) <= 2) && self.is_forest(mask)
            }
            Constraint::Class(ForestClass::CaterpillarForest(k)) => {
                let cap = k.map_or(u32::MAX, |k| k as u32);
                bits(mask).all(|v| self.degree(v, mask) <= cap)
                    && bits(mask).all(|v| {
                        bits(self.adj[v] & mask)
                            .filter(|&w| self.degree(w, mask) >= 2)
                            .count()
                            <= 2
                    })
                    && self.is_forest(mask)
            }
            Constraint::Class(ForestClass::StarForest) => {
                self.star_shaped(mask) && self.is_forest(mask)
            }
            Constraint::Abc(labels) => {
                bits(mask).all(|v| {
                    let cap = match labels[v] {
                        Label::A => 2,
                        Label::B => 1,
                        Label::C => 0,
                    };
                    self.degree(v, mask) <= cap
                }) && self.is_forest(mask)
            }
            Constraint::Ab(labels) => {
                self.star_shaped(mask)
                    && bits(mask).all(|w| {
                        labels[w] != Label::B
                            || bits(self.adj[w] & mask)
                                .all(|v| labels[v] == Label::A && self.degree(v, mask) == 1)
                    })
                    && self.is_forest(mask)
            }
        }
    }

    fn dfs(&mut self, chosen: u64, cand: u64) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let size = chosen.count_ones();
        if size + cand.count_ones() <= self.best_size {
            return;
        }
        if cand == 0 {
            self.best = chosen;
            self.best_size = size;
            self.found = true;
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        let with = chosen | 1 << v;
        let mut compatible = 0;
        for u in bits(rest) {
            if self.feasible(with | 1 << u) {
                compatible |= 1 << u;
            }
        }
        self.dfs(with, compatible);
        self.dfs(chosen, rest);
    }
}

fn run(
    g: &Graph,
    constraint: impl FnOnce(&[Vertex]) -> Result<Constraint, OracleError>,
    floor: usize,
    budget: u64,
) -> Result<(Option<OracleResult>, bool), OracleError> {
    let n = g.order();
    if n > 64 {
        return Err(OracleError::TooLarge(n));
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: &Vertex| ids.binary_search(v).unwrap();
    let adj = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << index(w)))
        .collect();
    let mut s = Search {
        adj,
        constraint: constraint(&ids)?,
        best: 0,
        best_size: floor.saturating_sub(1) as u32,
        found: floor == 0,
        nodes: 0,
        budget,
        exhausted: false,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if n > 0 {
        s.dfs(0, all);
    }
    let result = s.found.then(|| OracleResult {
        alpha: s.best_size as usize,
        witness: bits(s.best).map(|i| ids[i]).collect(),
        nodes_explored: s.nodes,
    });
    Ok((result, s.exhausted))
}

fn finish((res, exhausted): (Option<OracleResult>, bool)) -> Result<OracleResult, OracleError> {
    let res = res.unwrap_or_default();
    if exhausted {
        Err(OracleError::BudgetExceeded(Box::new(res)))
    } else {
        Ok(res)
    }
}

/// Maximum order of an induced subgraph of `g` in `cls`, with a witness.
///
/// On budget exhaustion the best solution found so far comes back inside
/// [`OracleError::BudgetExceeded`].
pub fn alpha_exact(g: &Graph, cls: ForestClass, budget: u64) -> Result<OracleResult, OracleError> {
    finish(run(g, |_| Ok(Constraint::Class(cls)), 0, budget)?)
}

fn partition_constraint<'a>(
    p: &'a Partition,
    g: &Graph,
) -> impl FnOnce(&[Vertex]) -> Result<Constraint, OracleError> + 'a {
    let check = p.validate(g);
    move |ids: &[Vertex]| {
        check.map_err(OracleError::BadPartition)?;
        let labels = ids.iter().map(|&v| p.label(v)).collect();
        Ok(match p.mode() {
            PartitionMode::Abc => Constraint::Abc(labels),
            PartitionMode::Ab => Constraint::Ab(labels),
        })
    }
}

/// Constrained optimum: for an ABC partition, induced linear forests with
/// degree caps 2/1/0 on A/B/C; for an AB partition, induced star forests in
/// which every edge `vw` with `w ∈ B` has `v ∈ A` of forest degree 1.
pub fn alpha_exact_partitioned(
    g: &Graph,
    p: &Partition,
    budget: u64,
) -> Result<OracleResult, OracleError> {
    finish(run(g, partition_constraint(p, g), 0, budget)?)
}

/// Whether `g` has an induced member of `cls` on at least `size` vertices.
pub fn exists_at_least(
    g: &Graph,
    cls: ForestClass,
    size: usize,
    budget: u64,
) -> Result<bool, OracleError> {
    let (res, exhausted) = run(g, |_| Ok(Constraint::Class(cls)), size, budget)?;
    match res {
        Some(r) if size > 0 => Ok(r.alpha >= size),
        Some(_) => Ok(true),
        None if exhausted => Err(OracleError::BudgetExceeded(Box::default())),
        None => Ok(false),
    }
}
