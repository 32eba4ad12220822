use super::abc::abc_construct_with;
use super::{EngineOptions, ReductionTrace};
use crate::certificate::{verify_certificate, ForestCertificate};
use crate::classes::ForestClass;
use crate::error::ConstructError;
use crate::graph::{Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::{h_kg, Rat};

/// Deletes, lowest identifier first, every vertex carrying at least `k + 1`
/// leaves, recomputing leaves after each deletion.
fn drop_heavy(g: &Graph, k: usize) -> Graph {
    let mut h = g.clone();
    loop {
        let heavy = h
            .vertices()
            .find(|&u| h.neighbors(u).iter().filter(|&&w| h.degree(w) == 1).count() > k);
        match heavy {
            Some(u) => h.remove_vertex(u).expect("vertex of h"),
            None => return h,
        }
    }
}

/// Induced caterpillar forest of maximum degree at most `k` with at least
/// `Σ h_{k,G}(v)` vertices.
///
/// Leaves are set aside and every other vertex is labeled by how many leaves
/// it carries: at most `k - 2` gives `A`, `k - 1` gives `B`, `k` gives `C`.
/// The labeled remainder goes to [`abc_construct_with`](super::abc_construct_with)
/// and the leaves are put back.
///
/// ```
/// use forestbound::constructors::k_caterpillar_forest;
/// use forestbound::graph::Graph;
///
/// let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
/// let cert = k_caterpillar_forest(&claw, 3).unwrap();
/// assert_eq!(cert.len(), 4);
/// ```
pub fn k_caterpillar_forest(g: &Graph, k: usize) -> Result<ForestCertificate, ConstructError> {
    k_caterpillar_forest_with(g, k, &EngineOptions::default()).map(|(c, _)| c)
}

/// As [`k_caterpillar_forest`], also returning the trace of the labeled run.
pub fn k_caterpillar_forest_with(
    g: &Graph,
    k: usize,
    opts: &EngineOptions,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    let mut bound = Rat::default();
    for v in g.vertices() {
        bound += h_kg(g, k, v)?;
    }
    let h = drop_heavy(g, k);
    let leaves = h.leaves();
    let core = h.without(&leaves)?;
    let labels = core.vertices().map(|v| {
        let carried = h.neighbors(v).iter().filter(|&&w| h.degree(w) == 1).count();
        let l = if carried + 2 <= k {
            Label::A
        } else if carried + 1 == k {
            Label::B
        } else {
            Label::C
        };
        (v, l)
    });
    let p = Partition::from_pairs(PartitionMode::Abc, labels.collect::<Vec<(Vertex, Label)>>());
    let (inner, trace) = match abc_construct_with(&core, &p, opts) {
        Ok(r) => r,
        Err(ConstructError::BoundMiss(c)) => (*c, ReductionTrace::default()),
        Err(e) => return Err(e),
    };
    let mut set = inner.vertex_set;
    set.extend(leaves);
    let cert = ForestCertificate::new(set, ForestClass::CaterpillarForest(Some(k)), bound);
    if verify_certificate(g, &cert, None) {
        Ok((cert, trace))
    } else {
        Err(ConstructError::BoundMiss(Box::new(cert)))
    }
}
