use std::collections::BTreeSet;

use crate::certificate::{verify_certificate, ForestCertificate};
use crate::classes::ForestClass;
use crate::error::ConstructError;
use crate::graph::{Graph, Vertex};
use crate::weights::{rat, total_weight, BoundSpec, Rat};

/// Paths whole, cycles minus their lowest vertex, once `Δ ≤ 2`.
fn take_paths(g: &Graph) -> BTreeSet<Vertex> {
    let mut out = BTreeSet::new();
    for comp in g.components() {
        let cycle = comp.iter().all(|&v| g.degree(v) == 2);
        out.extend(comp.iter().skip(usize::from(cycle)).copied());
    }
    out
}

fn greedy_set(g: &Graph) -> BTreeSet<Vertex> {
    let mut h = g.clone();
    while h.max_degree() >= 3 {
        let v = h.max_degree_vertex().expect("non-empty");
        h.remove_vertex(v).expect("vertex of h");
    }
    take_paths(&h)
}

/// Induced linear forest of order at least `Σ f(d(v))`: delete a
/// maximum-degree vertex while `Δ ≥ 3`, then keep every path and every
/// cycle but one vertex.
///
/// ```
/// use forestbound::constructors::greedy_linear_forest;
/// use forestbound::graph::Graph;
///
/// let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
/// let cert = greedy_linear_forest(&c5);
/// assert_eq!(cert.len(), 4);
/// assert_eq!(forestbound::weights::fmt_rat(&cert.claimed_bound), "10/3");
/// ```
pub fn greedy_linear_forest(g: &Graph) -> ForestCertificate {
    let bound = total_weight(g, &BoundSpec::FLin, None).expect("flin needs no parameters");
    ForestCertificate::new(greedy_set(g), ForestClass::LinearForest, bound)
}

/// Induced caterpillar forest of order at least `Σ 2/(d(v)+1)`: the leaves
/// together with a greedy linear forest of the rest.
///
/// ```
/// use forestbound::constructors::caterpillar_forest;
/// use forestbound::graph::Graph;
///
/// let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
/// let cert = caterpillar_forest(&claw).unwrap();
/// assert_eq!(cert.len(), 4);
/// ```
pub fn caterpillar_forest(g: &Graph) -> Result<ForestCertificate, ConstructError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(ConstructError::IsolatedVertexPresent(v));
    }
    let leaves = g.leaves();
    let rest = g.without(&leaves)?;
    let mut set = greedy_set(&rest);
    set.extend(leaves);
    let bound: Rat = g.vertices().map(|v| rat(2, g.degree(v) as i64 + 1)).sum();
    let cert = ForestCertificate::new(set, ForestClass::CaterpillarForest(None), bound);
    if verify_certificate(g, &cert, None) {
        Ok(cert)
    } else {
        Err(ConstructError::BoundMiss(Box::new(cert)))
    }
}
