//! Bipartition of a cubic graph with induced maximum degree at most 1.

use std::collections::BTreeSet;

use crate::error::ConstructError;
use crate::graph::{Graph, Vertex};

/// Local search from the all-in-part-1 assignment: while some vertex has at
/// least two neighbours on its own side, move the lowest such vertex. Each
/// move raises the cut size, so at most `|E|` moves happen.
///
/// ```
/// use forestbound::constructors::cubic_partition;
/// use forestbound::graph::Graph;
///
/// let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
/// let (a, b) = cubic_partition(&k4).unwrap();
/// assert_eq!((a.len(), b.len()), (2, 2));
/// ```
pub fn cubic_partition(g: &Graph) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>), ConstructError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(ConstructError::NotCubic(v, g.degree(v)));
    }
    let mut side: std::collections::BTreeMap<Vertex, bool> =
        g.vertices().map(|v| (v, false)).collect();
    let same = |side: &std::collections::BTreeMap<Vertex, bool>, v: Vertex| {
        g.neighbors(v)
            .iter()
            .filter(|w| side[w] == side[&v])
            .count()
    };
    // Vertices that may need to move; neighbours are re-queued after a move.
    let mut pending: BTreeSet<Vertex> = g.vertices().collect();
    while let Some(v) = pending.pop_first() {
        if same(&side, v) >= 2 {
            let s = !side[&v];
            side.insert(v, s);
            pending.extend(g.neighbors(v).iter().copied());
        }
    }
    let part = |s: bool| {
        side.iter()
            .filter(|&(_, &x)| x == s)
            .map(|(&v, _)| v)
            .collect()
    };
    Ok((part(false), part(true)))
}
