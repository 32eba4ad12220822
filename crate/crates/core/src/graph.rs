//! Simple undirected graphs with stable vertex identifiers.
//!
//! Vertices are created densely as `0..n`, but every identifier survives
//! deletions, so a subgraph reached after any number of reductions still
//! speaks the parent graph's language. Certificates are always expressed in
//! the identifiers of the graph they were built from.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::GraphError;

/// Opaque, stable vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Vertex {
    fn from(v: u32) -> Self {
        Vertex(v)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite simple undirected graph.
///
/// Adjacency is kept as ordered sets so iteration order (and therefore every
/// tie-break downstream) is by ascending identifier.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    /// Edgeless graph on vertices `0..n`.
    pub fn new(n: usize) -> Self {
        let adj = (0..n as u32)
            .map(|v| (Vertex(v), BTreeSet::new()))
            .collect();
        Graph { adj }
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(Vertex(u), Vertex(v))?;
        }
        Ok(g)
    }

    /// Graph on an arbitrary identifier set with no edges.
    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds the edge `uv`. Re-adding an existing edge is an error, as is a loop.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.check(u)?;
        self.check(v)?;
        if !self.adj.get_mut(&u).unwrap().insert(v) {
            return Err(GraphError::ParallelEdge(u, v));
        }
        self.adj.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    /// Adds `uv` unless already present. Returns whether the edge is new.
    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.add_edge(u, v).map(|_| true)
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<(), GraphError> {
        let nbrs = self.adj.remove(&v).ok_or(GraphError::UnknownVertex(v))?;
        for w in nbrs {
            self.adj.get_mut(&w).unwrap().remove(&v);
        }
        Ok(())
    }

    pub fn remove_vertices<'a, I: IntoIterator<Item = &'a Vertex>>(
        &mut self,
        vs: I,
    ) -> Result<(), GraphError> {
        for v in vs {
            self.remove_vertex(*v)?;
        }
        Ok(())
    }

    /// Copy of `self` without the given vertices.
    pub fn without(&self, vs: &[Vertex]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_vertices(vs)?;
        Ok(g)
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn size(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u..).map(move |&v| (u, v)))
    }

    /// Panics if `v` is not a vertex; use [`Graph::try_neighbors`] otherwise.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adj[&v]
    }

    pub fn try_neighbors(&self, v: Vertex) -> Result<&BTreeSet<Vertex>, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[&v].len()
    }

    pub fn try_degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.try_neighbors(v).map(BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Lowest-identifier vertex among those of maximum degree.
    pub fn max_degree_vertex(&self) -> Option<Vertex> {
        let mut best: Option<(usize, Vertex)> = None;
        for (&v, n) in &self.adj {
            if best.is_none_or(|(d, _)| n.len() > d) {
                best = Some((n.len(), v));
            }
        }
        best.map(|(_, v)| v)
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.adj
            .iter()
            .filter(|(_, n)| n.len() == 1)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Subgraph induced on `s`, identifiers preserved.
    pub fn induced_subgraph<'a, I>(&self, s: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let keep: BTreeSet<Vertex> = s.into_iter().copied().collect();
        if let Some(&v) = keep.iter().find(|v| !self.adj.contains_key(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let n = self.adj[&v].intersection(&keep).copied().collect();
                (v, n)
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            seen.insert(v);
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[&u] {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `src` (unreachable vertices absent).
    pub fn distances_from(&self, src: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::from([(src, 0)]);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for &w in &self.adj[&u] {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `true` iff the graph has no cycle.
    pub fn is_acyclic(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_degrees(self.adj.values().map(BTreeSet::len))
    }

    /// Union of two graphs on disjoint vertex sets.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for (&v, n) in &other.adj {
            if g.adj.insert(v, n.clone()).is_some() {
                return Err(GraphError::ParallelEdge(v, v));
            }
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v` with 0-based indices. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then_some((i + 1, l))
        });
        let (hline, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header `n m`".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut g = Graph::new(n as usize);
        let mut count = 0usize;
        for (ln, line) in lines {
            let [u, v] = parse_pair(ln, line)?;
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line: ln,
                    msg: format!("vertex index out of range (n = {n})"),
                });
            }
            g.add_edge(Vertex(u as u32), Vertex(v as u32))
                .map_err(|e| GraphError::Parse {
                    line: ln,
                    msg: e.to_string(),
                })?;
            count += 1;
        }
        if count != m as usize {
            return Err(GraphError::Parse {
                line: hline,
                msg: format!("header announces {m} edges, found {count}"),
            });
        }
        Ok(g)
    }

    /// Writes the edge-list format. Vertices are renumbered densely in
    /// ascending identifier order.
    pub fn to_edge_list(&self) -> String {
        let index: BTreeMap<Vertex, usize> =
            self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let mut out = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", index[&u], index[&v]));
        }
        out
    }
}

fn parse_pair(line: usize, s: &str) -> Result<[u64; 2], GraphError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    let bad = |msg: String| GraphError::Parse { line, msg };
    if parts.len() != 2 {
        return Err(bad(format!("expected two integers, got `{s}`")));
    }
    let a = parts[0]
        .parse()
        .map_err(|_| bad(format!("not an integer: `{}`", parts[0])))?;
    let b = parts[1]
        .parse()
        .map_err(|_| bad(format!("not an integer: `{}`", parts[1])))?;
    Ok([a, b])
}

/// Counts `n_d` of vertices of each degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    counts: Vec<u64>,
}

impl DegreeHistogram {
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut counts = Vec::new();
        for d in degrees {
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        DegreeHistogram { counts }
    }

    /// Histogram from explicit counts, `counts[d] = n_d`. Trailing zeros are trimmed.
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DegreeHistogram { counts }
    }

    pub fn count(&self, d: usize) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }

    /// Largest degree with a nonzero count (0 for the empty histogram).
    pub fn max_degree(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(d, n_d)` pairs with `n_d > 0`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| (d, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                g.add_edge(Vertex(u), Vertex(v)).unwrap();
            }
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn induced_on_two_vertices_of_k4_is_k2() {
        let h = complete(4)
            .induced_subgraph(&[Vertex(1), Vertex(3)])
            .unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.size(), 1);
        assert!(h.has_edge(Vertex(1), Vertex(3)));
    }

    #[test]
    fn cycle_minus_vertex_is_path() {
        let s: Vec<_> = (1..5).map(Vertex).collect();
        let h = cycle(5).induced_subgraph(&s).unwrap();
        assert_eq!(h.size(), 3);
        assert!(h.is_acyclic());
        assert_eq!(h.max_degree(), 2);
        assert_eq!(h.leaves(), vec![Vertex(1), Vertex(4)]);
    }

    #[test]
    fn induced_on_empty_set() {
        let h = complete(5).induced_subgraph(&[]).unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn induced_rejects_unknown_vertex() {
        let err = complete(3).induced_subgraph(&[Vertex(7)]).unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex(Vertex(7)));
    }

    #[test]
    fn identifiers_survive_deletion() {
        let mut g = cycle(6);
        g.remove_vertex(Vertex(2)).unwrap();
        assert!(!g.contains(Vertex(2)));
        assert_eq!(
            g.neighbors(Vertex(3)).iter().copied().collect::<Vec<_>>(),
            vec![Vertex(4)]
        );
        assert_eq!(g.components().len(), 1);
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        let mut g = Graph::new(3);
        assert_eq!(
            g.add_edge(Vertex(1), Vertex(1)),
            Err(GraphError::SelfLoop(Vertex(1)))
        );
        g.add_edge(Vertex(0), Vertex(1)).unwrap();
        assert!(matches!(
            g.add_edge(Vertex(1), Vertex(0)),
            Err(GraphError::ParallelEdge(..))
        ));
    }

    #[test]
    fn edge_list_roundtrip_with_comments() {
        let text = "# a claw\n4 3\n\n0 1\n0 2 # spoke\n0 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.degree(Vertex(0)), 3);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(Graph::parse_edge_list("").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn histogram_counts_degrees() {
        let mut g = complete(4);
        g.add_vertex(Vertex(9));
        let h = g.degree_histogram();
        assert_eq!(h.count(3), 4);
        assert_eq!(h.count(0), 1);
        assert_eq!(h.max_degree(), 3);
        assert_eq!(h.total(), 5);
    }

    #[test]
    fn max_degree_vertex_prefers_lowest_id() {
        let g = Graph::from_edges(5, &[(3, 0), (3, 1), (3, 4), (2, 0), (2, 1), (2, 4)]).unwrap();
        assert_eq!(g.max_degree_vertex(), Some(Vertex(2)));
    }
}
