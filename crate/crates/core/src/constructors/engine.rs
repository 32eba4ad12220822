//! Shared reduction engine for the partitioned builders.
//!
//! A worklist of pieces (graph plus partition) is reduced one move at a time.
//! Moves are local: the surplus `f(G') + |take| - f(G)` only involves the
//! vertices whose label or degree changes, so each candidate is scored
//! without copying the graph.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::{EngineOptions, ReductionTrace, Rule, TraceStep};
use crate::certificate::{verify_certificate, ForestCertificate};
use crate::classes::ForestClass;
use crate::error::{ConstructError, OracleError};
use crate::exact::alpha_exact_partitioned;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition};
use crate::weights::Rat;

/// The lemma-specific half of the engine.
pub(crate) trait Lemma {
    fn weight(label: Label, d: usize) -> Rat;

    /// Whether `forest` (an induced subgraph) is admissible under `p`.
    fn admissible(forest: &Graph, p: &Partition) -> bool;

    /// Whether a path run, taken whole, is admissible. Only called on runs
    /// none of whose right-anchored sub-runs were [`Lemma::run_dead`].
    fn run_ok(run: &[Label]) -> bool;

    /// Whether this run and every leftward extension of it are inadmissible.
    fn run_dead(run: &[Label]) -> bool;

    /// Positions of a cycle, one of which every admissible set must miss.
    fn cycle_cuts(labels: &[Label]) -> Vec<usize>;

    /// First reduction whose surplus is non-negative.
    fn find_move(piece: &Piece) -> Option<Move>;

    /// A direct solution for a piece no move reduces.
    fn endgame(_piece: &Piece) -> Option<BTreeSet<Vertex>> {
        None
    }
}

/// Working instance.
pub(crate) struct Piece {
    pub g: Graph,
    pub p: Partition,
    weight: fn(Label, usize) -> Rat,
    admissible: fn(&Graph, &Partition) -> bool,
}

/// A reduction: delete `remove`, add `add_edges`, relabel, and credit `take`
/// to the solution.
#[derive(Debug, Clone)]
pub(crate) struct Move {
    pub rule: Rule,
    pub remove: Vec<Vertex>,
    pub add_edges: Vec<(Vertex, Vertex)>,
    pub relabel: Vec<(Vertex, Label)>,
    pub take: Vec<Vertex>,
}

impl Move {
    pub fn new(rule: Rule) -> Self {
        Move {
            rule,
            remove: Vec::new(),
            add_edges: Vec::new(),
            relabel: Vec::new(),
            take: Vec::new(),
        }
    }

    pub fn remove<I: IntoIterator<Item = Vertex>>(mut self, vs: I) -> Self {
        self.remove.extend(vs);
        self
    }

    pub fn edge(mut self, u: Vertex, v: Vertex) -> Self {
        self.add_edges.push((u, v));
        self
    }

    pub fn relabel(mut self, v: Vertex, l: Label) -> Self {
        self.relabel.push((v, l));
        self
    }

    pub fn take<I: IntoIterator<Item = Vertex>>(mut self, vs: I) -> Self {
        self.take.extend(vs);
        self
    }
}

impl Piece {
    pub fn new<L: Lemma>(g: Graph, p: Partition) -> Self {
        Piece {
            g,
            p,
            weight: L::weight,
            admissible: L::admissible,
        }
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.p.label(v)
    }

    pub fn deg(&self, v: Vertex) -> usize {
        self.g.degree(v)
    }

    pub fn nbrs(&self, v: Vertex) -> &BTreeSet<Vertex> {
        self.g.neighbors(v)
    }

    pub fn weight_of(&self, l: Label, d: usize) -> Rat {
        (self.weight)(l, d)
    }

    pub fn f(&self, v: Vertex) -> Rat {
        self.weight_of(self.label(v), self.deg(v))
    }

    pub fn total(&self) -> Rat {
        self.g.vertices().map(|v| self.f(v)).sum()
    }

    /// Vertices at distance 1 or 2 from `v` with larger identifiers.
    pub fn near_above(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for &x in self.nbrs(v) {
            out.insert(x);
            out.extend(self.nbrs(x).iter().copied());
        }
        out.retain(|&w| w > v);
        out
    }

    /// Whether the set `s`, as an induced subgraph, is admissible.
    pub fn admits(&self, s: &[Vertex]) -> bool {
        let forest = self.g.induced_subgraph(s).expect("vertices of the piece");
        (self.admissible)(&forest, &self.p)
    }

    /// Closed neighbourhood of a set.
    pub fn closed(&self, s: &[Vertex]) -> BTreeSet<Vertex> {
        let mut out: BTreeSet<Vertex> = s.iter().copied().collect();
        for &v in s {
            out.extend(self.nbrs(v).iter().copied());
        }
        out
    }

    /// Degree a surviving vertex would have after `mv`.
    pub fn degree_after(&self, v: Vertex, mv: &Move) -> usize {
        let removed: BTreeSet<Vertex> = mv.remove.iter().copied().collect();
        self.degree_after_with(v, &removed, &self.new_edges(mv, &removed))
    }

    fn degree_after_with(
        &self,
        v: Vertex,
        removed: &BTreeSet<Vertex>,
        new_edges: &BTreeSet<(Vertex, Vertex)>,
    ) -> usize {
        let lost = self.nbrs(v).iter().filter(|w| removed.contains(w)).count();
        let gained = new_edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        self.deg(v) - lost + gained
    }

    fn new_edges(&self, mv: &Move, removed: &BTreeSet<Vertex>) -> BTreeSet<(Vertex, Vertex)> {
        mv.add_edges
            .iter()
            .filter(|&&(a, b)| {
                a != b && !removed.contains(&a) && !removed.contains(&b) && !self.g.has_edge(a, b)
            })
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect()
    }

    /// `f(G') + |take| - f(G)`.
    pub fn surplus(&self, mv: &Move) -> Rat {
        let removed: BTreeSet<Vertex> = mv.remove.iter().copied().collect();
        let new_edges = self.new_edges(mv, &removed);
        let relabel: BTreeMap<Vertex, Label> = mv
            .relabel
            .iter()
            .filter(|(v, _)| !removed.contains(v))
            .copied()
            .collect();
        let mut affected: BTreeSet<Vertex> = BTreeSet::new();
        for &v in &removed {
            affected.extend(self.nbrs(v).iter().copied());
        }
        for &(a, b) in &new_edges {
            affected.insert(a);
            affected.insert(b);
        }
        affected.extend(relabel.keys().copied());
        let mut s = Rat::from_integer(mv.take.len().into());
        for &v in &removed {
            s -= self.f(v);
        }
        for &v in affected.iter().filter(|v| !removed.contains(v)) {
            let l = relabel.get(&v).copied().unwrap_or(self.label(v));
            s += self.weight_of(l, self.degree_after_with(v, &removed, &new_edges));
            s -= self.f(v);
        }
        s
    }

    pub fn accepts(&self, mv: &Move) -> bool {
        self.surplus(mv) >= Rat::zero()
    }

    /// Applies `mv` and returns its trace step.
    pub fn apply(&mut self, mv: &Move) -> TraceStep {
        let removed: BTreeSet<Vertex> = mv.remove.iter().copied().collect();
        let new_edges = self.new_edges(mv, &removed);
        for &v in &removed {
            self.g
                .remove_vertex(v)
                .expect("move removes piece vertices");
            self.p.remove(v);
        }
        for &(a, b) in &new_edges {
            self.g.add_edge(a, b).expect("new edge between survivors");
        }
        let mut relabeled = Vec::new();
        for &(v, l) in mv.relabel.iter().filter(|(v, _)| !removed.contains(v)) {
            if self.p.get(v) != Some(l) {
                self.p.set(v, l);
                relabeled.push((v, l));
            }
        }
        let mut touched: BTreeSet<Vertex> = removed.clone();
        touched.extend(new_edges.iter().flat_map(|&(a, b)| [a, b]));
        touched.extend(relabeled.iter().map(|&(v, _)| v));
        touched.extend(mv.take.iter().copied());
        let mut taken = mv.take.clone();
        taken.sort();
        TraceStep {
            rule: mv.rule,
            touched: touched.into_iter().collect(),
            removed: removed.into_iter().collect(),
            added_edges: new_edges.into_iter().collect(),
            relabeled,
            taken,
            residual: None,
        }
    }

    fn solved(&self, rule: Rule, taken: BTreeSet<Vertex>) -> TraceStep {
        TraceStep {
            rule,
            touched: self.g.vertices().collect(),
            removed: Vec::new(),
            added_edges: Vec::new(),
            relabeled: Vec::new(),
            taken: taken.into_iter().collect(),
            residual: Some((self.g.clone(), self.p.clone())),
        }
    }
}

enum ExactOutcome {
    Optimal(BTreeSet<Vertex>),
    Partial(BTreeSet<Vertex>),
}

fn exact(piece: &Piece, budget: u64) -> Option<ExactOutcome> {
    match alpha_exact_partitioned(&piece.g, &piece.p, budget) {
        Ok(r) => Some(ExactOutcome::Optimal(r.witness)),
        Err(OracleError::BudgetExceeded(r)) => Some(ExactOutcome::Partial(r.witness)),
        Err(_) => None,
    }
}

/// Runs the engine to completion on `(g, p)`.
pub(crate) fn run<L: Lemma>(g: &Graph, p: &Partition, opts: &EngineOptions) -> ReductionTrace {
    let mut trace = ReductionTrace::default();
    let mut work = vec![Piece::new::<L>(g.clone(), p.restricted_to(g))];
    while let Some(mut piece) = work.pop() {
        if piece.g.is_empty() {
            continue;
        }
        let comps = piece.g.components();
        if comps.len() > 1 {
            trace.steps.push(TraceStep {
                rule: Rule::Split,
                touched: Vec::new(),
                removed: Vec::new(),
                added_edges: Vec::new(),
                relabeled: Vec::new(),
                taken: Vec::new(),
                residual: None,
            });
            for c in comps.iter().rev() {
                let cg = piece.g.induced_subgraph(c).expect("component");
                let cp = piece.p.restricted_to(&cg);
                work.push(Piece::new::<L>(cg, cp));
            }
            continue;
        }
        if piece.g.order() <= opts.exact_threshold {
            match exact(&piece, opts.budget) {
                Some(ExactOutcome::Optimal(w)) => {
                    trace.steps.push(piece.solved(Rule::Exact, w));
                    continue;
                }
                Some(ExactOutcome::Partial(w))
                    if Rat::from_integer(w.len().into()) >= piece.total() =>
                {
                    trace.steps.push(piece.solved(Rule::Exact, w));
                    continue;
                }
                _ => {}
            }
        }
        if piece.g.max_degree() <= 2 {
            let w = path_cycle::<L>(&piece);
            trace.steps.push(piece.solved(Rule::PathCycle, w));
            continue;
        }
        if let Some(mv) = L::find_move(&piece) {
            trace.steps.push(piece.apply(&mv));
            work.push(piece);
            continue;
        }
        if let Some(w) = L::endgame(&piece) {
            trace.steps.push(piece.solved(Rule::Cubic, w));
            continue;
        }
        if let Some(ExactOutcome::Optimal(w) | ExactOutcome::Partial(w)) =
            exact(&piece, opts.budget)
        {
            trace.steps.push(piece.solved(Rule::Fallback, w));
            continue;
        }
        let v = piece
            .g
            .vertices()
            .map(|v| (piece.surplus(&Move::new(Rule::Stuck).remove([v])), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("non-empty piece");
        trace
            .steps
            .push(piece.apply(&Move::new(Rule::Stuck).remove([v])));
        work.push(piece);
    }
    trace
}

/// Walk order of a connected graph with maximum degree at most 2, and
/// whether it closes into a cycle.
fn walk(g: &Graph) -> (Vec<Vertex>, bool) {
    let start = g
        .vertices()
        .find(|&v| g.degree(v) <= 1)
        .or_else(|| g.vertices().next())
        .expect("non-empty");
    let cycle = g.degree(start) == 2;
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| Some(w) != prev && w != start);
        match next {
            Some(w) => {
                prev = Some(cur);
                cur = w;
                order.push(w);
            }
            None => break,
        }
    }
    (order, cycle)
}

/// Optimal admissible selection on a path, by runs of consecutive vertices.
pub(crate) fn solve_path<L: Lemma>(labels: &[Label]) -> Vec<bool> {
    let m = labels.len();
    // best[i]: optimum on positions < i given position i is unselected.
    let mut best = vec![0usize; m + 1];
    let mut run = vec![0usize; m + 1];
    for i in 1..=m {
        best[i] = best[i - 1];
        for len in 1..=i {
            let r = &labels[i - len..i];
            if L::run_dead(r) {
                break;
            }
            if L::run_ok(r) {
                let start = i - len;
                let before = if start == 0 { 0 } else { best[start - 1] };
                if before + len > best[i] {
                    best[i] = before + len;
                    run[i] = len;
                }
            }
        }
    }
    let mut chosen = vec![false; m];
    let mut i = m;
    while i > 0 {
        let len = run[i];
        if len == 0 {
            i -= 1;
        } else {
            chosen[i - len..i].iter_mut().for_each(|c| *c = true);
            i = (i - len).saturating_sub(1);
        }
    }
    chosen
}

/// Optimal admissible set of a connected piece with maximum degree ≤ 2.
pub(crate) fn path_cycle<L: Lemma>(piece: &Piece) -> BTreeSet<Vertex> {
    let (order, cycle) = walk(&piece.g);
    let labels: Vec<Label> = order.iter().map(|&v| piece.label(v)).collect();
    let pick = |order: &[Vertex], chosen: &[bool]| -> BTreeSet<Vertex> {
        order
            .iter()
            .zip(chosen)
            .filter(|(_, &c)| c)
            .map(|(&v, _)| v)
            .collect()
    };
    if !cycle {
        return pick(&order, &solve_path::<L>(&labels));
    }
    let m = order.len();
    let mut best: Option<BTreeSet<Vertex>> = None;
    for j in L::cycle_cuts(&labels) {
        let rot: Vec<Vertex> = (1..m).map(|t| order[(j + t) % m]).collect();
        let rl: Vec<Label> = rot.iter().map(|&v| piece.label(v)).collect();
        let s = pick(&rot, &solve_path::<L>(&rl));
        if best.as_ref().is_none_or(|b| s.len() > b.len()) {
            best = Some(s);
        }
    }
    best.unwrap_or_default()
}

/// Wraps the lifted solution in a certificate and checks it.
pub(crate) fn certify(
    g: &Graph,
    p: &Partition,
    trace: ReductionTrace,
    class: ForestClass,
    bound: Rat,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    let cert = ForestCertificate::new(trace.taken(), class, bound);
    if verify_certificate(g, &cert, Some(p)) {
        Ok((cert, trace))
    } else {
        Err(ConstructError::BoundMiss(Box::new(cert)))
    }
}
