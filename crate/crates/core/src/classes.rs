//! The three hereditary target classes and their recognizers.
//!
//! Isolated vertices belong to every class: a single vertex is a path, a
//! caterpillar, and a star.

use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestClass {
    /// Disjoint union of paths.
    LinearForest,
    /// Forest of caterpillars; `Some(k)` additionally caps the maximum degree at `k ≥ 2`.
    CaterpillarForest(Option<usize>),
    /// Forest in which every component has at most one vertex of degree ≥ 2.
    StarForest,
}

impl ForestClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            ForestClass::LinearForest => is_linear_forest(g),
            ForestClass::CaterpillarForest(k) => is_caterpillar_forest(g, k),
            ForestClass::StarForest => is_star_forest(g),
        }
    }
}

impl fmt::Display for ForestClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForestClass::LinearForest => write!(f, "linear"),
            ForestClass::CaterpillarForest(None) => write!(f, "caterpillar"),
            ForestClass::CaterpillarForest(Some(k)) => write!(f, "caterpillar:k={k}"),
            ForestClass::StarForest => write!(f, "star"),
        }
    }
}

impl FromStr for ForestClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "linear" => Ok(ForestClass::LinearForest),
            "caterpillar" => Ok(ForestClass::CaterpillarForest(None)),
            "star" => Ok(ForestClass::StarForest),
            other => {
                let k = other
                    .strip_prefix("caterpillar:k=")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| format!("unknown forest class `{other}`"))?;
                if k < 2 {
                    return Err(format!("caterpillar degree bound must be ≥ 2, got {k}"));
                }
                Ok(ForestClass::CaterpillarForest(Some(k)))
            }
        }
    }
}

/// Acyclic with maximum degree at most 2.
pub fn is_linear_forest(g: &Graph) -> bool {
    g.max_degree() <= 2 && g.is_acyclic()
}

/// Acyclic, degree-capped by `k` when given, and every vertex has at most two
/// non-leaf neighbours (equivalently: the non-leaf vertices of each tree
/// induce a path).
pub fn is_caterpillar_forest(g: &Graph, k: Option<usize>) -> bool {
    if k.is_some_and(|k| g.max_degree() > k) || !g.is_acyclic() {
        return false;
    }
    g.vertices()
        .all(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() <= 2)
}

/// Acyclic and no edge joins two vertices of degree ≥ 2 (no `P_4`).
pub fn is_star_forest(g: &Graph) -> bool {
    g.is_acyclic() && g.edges().all(|(u, v)| g.degree(u) <= 1 || g.degree(v) <= 1)
}
