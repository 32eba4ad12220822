use super::ab::ab_construct_with;
use super::{EngineOptions, ReductionTrace};
use crate::certificate::{verify_certificate, ForestCertificate};
use crate::classes::ForestClass;
use crate::error::ConstructError;
use crate::graph::Graph;
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::best_star_bound;

/// Induced star forest with at least `max_ε Σ f_ε(d(v))` vertices.
///
/// Leaves are set aside; a remaining vertex is `B` when it carries a leaf
/// and `A` otherwise. The labeled remainder goes to
/// [`ab_construct_with`](super::ab_construct_with) and the leaves are put
/// back as extra rays of their `B` centres.
///
/// ```
/// use forestbound::constructors::star_forest;
/// use forestbound::generators::{generate, GenSpec};
///
/// let (g, _) = generate(&GenSpec::KPrime(3)).unwrap();
/// assert_eq!(star_forest(&g).unwrap().len(), 4);
/// ```
pub fn star_forest(g: &Graph) -> Result<ForestCertificate, ConstructError> {
    star_forest_with(g, &EngineOptions::default()).map(|(c, _)| c)
}

/// As [`star_forest`], also returning the trace of the labeled run.
pub fn star_forest_with(
    g: &Graph,
    opts: &EngineOptions,
) -> Result<(ForestCertificate, ReductionTrace), ConstructError> {
    let bound = best_star_bound(g);
    let leaves = g.leaves();
    let core = g.without(&leaves)?;
    let p = Partition::from_pairs(
        PartitionMode::Ab,
        core.vertices()
            .map(|v| {
                let carries = g.neighbors(v).iter().any(|&w| g.degree(w) == 1);
                (v, if carries { Label::B } else { Label::A })
            })
            .collect::<Vec<_>>(),
    );
    let (inner, trace) = match ab_construct_with(&core, &p, opts) {
        Ok(r) => r,
        Err(ConstructError::BoundMiss(c)) => (*c, ReductionTrace::default()),
        Err(e) => return Err(e),
    };
    let mut set = inner.vertex_set;
    set.extend(leaves);
    let cert = ForestCertificate::new(set, ForestClass::StarForest, bound);
    if verify_certificate(g, &cert, None) {
        Ok((cert, trace))
    } else {
        Err(ConstructError::BoundMiss(Box::new(cert)))
    }
}
