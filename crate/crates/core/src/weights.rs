//! Degree-based weight functions and their sums, in exact rational arithmetic.
//!
//! Every lower bound in this crate has the form `Σ_v w(v)` where `w(v)`
//! depends on the degree of `v` (and, for [`h_kg`] and the partitioned
//! variants, on a little local information). Nothing here touches floating
//! point: certificates compare a vertex count against sums like `7/30`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::WeightError;
use crate::graph::{DegreeHistogram, Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};

/// Exact rational number.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, always with an explicit denominator.
pub fn fmt_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Rat::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Decimal approximation for display only.
pub fn approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Smallest integer `≥ r`.
pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

fn two_over(d: usize) -> Rat {
    rat(2, d as i64 + 1)
}

/// The weight for induced linear forests: `1, 5/6, 2/(d+1), ...`.
pub fn f_lin(d: usize) -> Rat {
    match d {
        0 => int(1),
        1 => rat(5, 6),
        _ => two_over(d),
    }
}

/// Upper end `2/((k+1)(k+2))` of the admissible ε-range for caterpillars.
pub fn caterpillar_eps_max(k: usize) -> Rat {
    rat(2, ((k + 1) * (k + 2)) as i64)
}

/// Upper end `1/6` of the admissible ε-range for stars.
pub fn star_eps_max() -> Rat {
    rat(1, 6)
}

fn check_k(k: usize) -> Result<(), WeightError> {
    if k < 2 {
        Err(WeightError::BadK(k))
    } else {
        Ok(())
    }
}

fn check_eps(eps: &Rat, max: Rat) -> Result<(), WeightError> {
    if eps.is_negative() || *eps > max {
        Err(WeightError::EpsOutOfRange(Box::new((eps.clone(), max))))
    } else {
        Ok(())
    }
}

/// One member of the extremal family for caterpillar forests of maximum
/// degree at most `k`.
pub fn f_k_eps(k: usize, eps: &Rat, d: usize) -> Result<Rat, WeightError> {
    check_k(k)?;
    check_eps(eps, caterpillar_eps_max(k))?;
    Ok(f_k_eps_unchecked(k, eps, d))
}

fn f_k_eps_unchecked(k: usize, eps: &Rat, d: usize) -> Rat {
    match d {
        0 => int(1),
        1 => int(1) - eps,
        d if d <= k => two_over(d),
        d => (int(k as i64 + 1) * eps).min(two_over(d)),
    }
}

/// `f_{k,ε}` at the top of the range: `1, k(k+3)/((k+1)(k+2)), 2/(d+1), ...`.
pub fn f_k(k: usize, d: usize) -> Result<Rat, WeightError> {
    f_k_eps(k, &caterpillar_eps_max(k), d)
}

/// Local weight of `v` that looks at the degree of a leaf's neighbour.
pub fn h_kg(g: &Graph, k: usize, v: Vertex) -> Result<Rat, WeightError> {
    check_k(k)?;
    let nbrs = g.try_neighbors(v)?;
    Ok(match nbrs.len() {
        0 => int(1),
        1 => {
            let w = *nbrs.iter().next().unwrap();
            let dw = g.degree(w);
            if dw <= k {
                int(1)
            } else {
                int(1) - rat(2, ((k + 1) * (dw + 1)) as i64)
            }
        }
        d => two_over(d),
    })
}

/// One member of the extremal family for star forests.
pub fn star_f_eps(eps: &Rat, d: usize) -> Result<Rat, WeightError> {
    check_eps(eps, star_eps_max())?;
    Ok(star_f_eps_unchecked(eps, d))
}

fn star_f_eps_unchecked(eps: &Rat, d: usize) -> Rat {
    match d {
        0 => int(1),
        1 => int(1) - eps,
        2 => rat(3, 5).min(rat(1, 2) + eps),
        d => two_over(d).min(rat(1, d as i64) + eps),
    }
}

/// Per-part weights for linear forests with degree caps 2 / 1 / 0 on A / B / C.
pub fn abc_weight(part: Label, d: usize) -> Rat {
    match (part, d) {
        (_, 0) => int(1),
        (Label::A, 1) | (Label::B, 1) => rat(5, 6),
        (Label::A, d) => two_over(d),
        (Label::B, 2) => rat(1, 3),
        (Label::B, d) => rat(4, 3 * (d as i64 + 1)),
        (Label::C, 1) | (Label::C, 2) => rat(1, 6),
        (Label::C, d) => rat(2, 3 * (d as i64 + 1)),
    }
}

/// Per-part weights for star forests with the B-edge condition.
///
/// Panics on [`Label::C`].
pub fn ab_star_weight(part: Label, d: usize) -> Rat {
    match (part, d) {
        (Label::A, 0) => int(1),
        (Label::A, 1) => rat(5, 6),
        (Label::A, 2) => rat(3, 5),
        (Label::A, d) => two_over(d),
        (Label::B, d) => rat(1, d as i64 + 1),
        (Label::C, _) => panic!("label C has no star-forest weight"),
    }
}

/// Increase of the ABC weight when the degree drops from `d` to `d-1`.
pub fn gain(part: Label, d: usize) -> Result<Rat, WeightError> {
    tables_checked();
    if d == 0 {
        return Err(WeightError::DegreeZero);
    }
    Ok(abc_weight(part, d - 1) - abc_weight(part, d))
}

/// Decrease of the ABC weight when the degree rises from `d` to `d+1`.
pub fn loss(part: Label, d: usize) -> Rat {
    tables_checked();
    abc_weight(part, d) - abc_weight(part, d + 1)
}

/// Increase of the AB star weight when the degree drops from `d ≥ 1` to `d-1`.
pub fn ab_gain(part: Label, d: usize) -> Rat {
    debug_assert!(d >= 1);
    ab_star_weight(part, d - 1) - ab_star_weight(part, d)
}

/// Reference gain table, rows `d = 1..=4` then the `d ≥ 5` row evaluated.
fn gain_reference(part: Label, d: usize) -> Rat {
    let d64 = d as i64;
    match (part, d) {
        (Label::A, 1..=3) => rat(1, 6),
        (Label::A, 4) => rat(1, 10),
        (Label::A, _) => rat(2, d64 * (d64 + 1)),
        (Label::B, 1) => rat(1, 6),
        (Label::B, 2) => rat(1, 2),
        (Label::B, 3) => int(0),
        (Label::B, 4) => rat(1, 15),
        (Label::B, _) => rat(4, 3 * d64 * (d64 + 1)),
        (Label::C, 1) => rat(5, 6),
        (Label::C, 2) | (Label::C, 3) => int(0),
        (Label::C, 4) => rat(1, 30),
        (Label::C, _) => rat(2, 3 * d64 * (d64 + 1)),
    }
}

/// Reference loss table, rows `d = 1..=3` then the `d ≥ 4` row evaluated.
fn loss_reference(part: Label, d: usize) -> Rat {
    let d64 = d as i64;
    match (part, d) {
        (Label::A, 1) | (Label::A, 2) => rat(1, 6),
        (Label::A, 3) => rat(1, 10),
        (Label::A, _) => rat(2, (d64 + 1) * (d64 + 2)),
        (Label::B, 1) => rat(1, 2),
        (Label::B, 2) => int(0),
        (Label::B, 3) => rat(1, 15),
        (Label::B, _) => rat(4, 3 * (d64 + 1) * (d64 + 2)),
        (Label::C, 1) | (Label::C, 2) => int(0),
        (Label::C, 3) => rat(1, 30),
        (Label::C, _) => rat(2, 3 * (d64 + 1) * (d64 + 2)),
    }
}

const TABLE_CHECK_DEPTH: usize = 64;

/// Asserts once per process that the weight differences reproduce the
/// hard-coded gain and loss tables.
fn tables_checked() {
    static CHECKED: OnceLock<()> = OnceLock::new();
    CHECKED.get_or_init(|| {
        for part in [Label::A, Label::B, Label::C] {
            for d in 1..=TABLE_CHECK_DEPTH {
                let g = abc_weight(part, d - 1) - abc_weight(part, d);
                assert_eq!(
                    g,
                    gain_reference(part, d),
                    "gain table mismatch at {part}, {d}"
                );
                let l = abc_weight(part, d) - abc_weight(part, d + 1);
                assert_eq!(
                    l,
                    loss_reference(part, d),
                    "loss table mismatch at {part}, {d}"
                );
            }
        }
    });
}

/// A bound function, in the canonical text encoding used on the command line.
///
/// `eps: None` means "the best ε for the graph at hand".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundSpec {
    FLin,
    FkEps { k: usize, eps: Option<Rat> },
    Fk { k: usize },
    HkG { k: usize },
    StarEps { eps: Option<Rat> },
    AbcWeights,
    AbStarWeights,
}

impl BoundSpec {
    pub fn needs_partition(&self) -> bool {
        matches!(self, BoundSpec::AbcWeights | BoundSpec::AbStarWeights)
    }

    /// Fills in an absent ε with the optimum for `hist`.
    pub fn resolve(&self, hist: &DegreeHistogram) -> Result<BoundSpec, WeightError> {
        Ok(match self {
            BoundSpec::FkEps { k, eps: None } => BoundSpec::FkEps {
                k: *k,
                eps: Some(epsilon_star(hist, *k)?.eps),
            },
            BoundSpec::StarEps { eps: None } => BoundSpec::StarEps {
                eps: Some(star_epsilon_opt(hist)),
            },
            other => other.clone(),
        })
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSpec::FLin => write!(f, "flin"),
            BoundSpec::FkEps { k, eps: Some(e) } => write!(f, "fkeps:k={k},eps={}", fmt_rat(e)),
            BoundSpec::FkEps { k, eps: None } => write!(f, "fkeps:k={k}"),
            BoundSpec::Fk { k } => write!(f, "fk:k={k}"),
            BoundSpec::HkG { k } => write!(f, "hkg:k={k}"),
            BoundSpec::StarEps { eps: Some(e) } => write!(f, "star:eps={}", fmt_rat(e)),
            BoundSpec::StarEps { eps: None } => write!(f, "star"),
            BoundSpec::AbcWeights => write!(f, "abc"),
            BoundSpec::AbStarWeights => write!(f, "abstar"),
        }
    }
}

impl FromStr for BoundSpec {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WeightError::InvalidSpec(s.to_string());
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut k = None;
        let mut eps = None;
        for kv in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, val) = kv.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "k" => k = Some(val.trim().parse::<usize>().map_err(|_| bad())?),
                "eps" => eps = Some(parse_rat(val).ok_or_else(bad)?),
                _ => return Err(bad()),
            }
        }
        let need_k = |k: Option<usize>| -> Result<usize, WeightError> {
            let k = k.ok_or_else(bad)?;
            check_k(k)?;
            Ok(k)
        };
        let spec = match name {
            "flin" if k.is_none() && eps.is_none() => BoundSpec::FLin,
            "fkeps" => {
                let k = need_k(k)?;
                if let Some(e) = &eps {
                    check_eps(e, caterpillar_eps_max(k))?;
                }
                BoundSpec::FkEps { k, eps }
            }
            "fk" if eps.is_none() => BoundSpec::Fk { k: need_k(k)? },
            "hkg" if eps.is_none() => BoundSpec::HkG { k: need_k(k)? },
            "star" if k.is_none() => {
                if let Some(e) = &eps {
                    check_eps(e, star_eps_max())?;
                }
                BoundSpec::StarEps { eps }
            }
            "abc" if k.is_none() && eps.is_none() => BoundSpec::AbcWeights,
            "abstar" if k.is_none() && eps.is_none() => BoundSpec::AbStarWeights,
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

/// `Σ_v w(v)` for the bound `spec`. `labels` is required exactly for the
/// partitioned variants and must label every vertex.
pub fn total_weight(
    g: &Graph,
    spec: &BoundSpec,
    labels: Option<&Partition>,
) -> Result<Rat, WeightError> {
    let spec = spec.resolve(&g.degree_histogram())?;
    let mut total = Rat::zero();
    for v in g.vertices() {
        let d = g.degree(v);
        let w = match &spec {
            BoundSpec::FLin => f_lin(d),
            BoundSpec::FkEps { k, eps: Some(e) } => f_k_eps(*k, e, d)?,
            BoundSpec::Fk { k } => f_k(*k, d)?,
            BoundSpec::HkG { k } => h_kg(g, *k, v)?,
            BoundSpec::StarEps { eps: Some(e) } => star_f_eps(e, d)?,
            BoundSpec::AbcWeights | BoundSpec::AbStarWeights => {
                let p = labels.ok_or(WeightError::MissingPartition)?;
                let l = p.get(v).ok_or(WeightError::MissingPartition)?;
                if spec == BoundSpec::AbcWeights {
                    abc_weight(l, d)
                } else {
                    if p.mode() != PartitionMode::Ab || l == Label::C {
                        return Err(WeightError::InvalidSpec(
                            "abstar needs an A/B partition".into(),
                        ));
                    }
                    ab_star_weight(l, d)
                }
            }
            BoundSpec::FkEps { eps: None, .. } | BoundSpec::StarEps { eps: None } => {
                unreachable!("resolved above")
            }
        };
        total += w;
    }
    Ok(total)
}

/// `t_{G,k}(ε) = Σ_d n_d · f_{k,ε}(d)` from a histogram alone.
pub fn caterpillar_total(hist: &DegreeHistogram, k: usize, eps: &Rat) -> Result<Rat, WeightError> {
    check_k(k)?;
    check_eps(eps, caterpillar_eps_max(k))?;
    Ok(hist
        .iter()
        .map(|(d, n)| int(n as i64) * f_k_eps_unchecked(k, eps, d))
        .sum())
}

/// `Σ_d n_d · f_ε(d)` for the star family.
pub fn star_total(hist: &DegreeHistogram, eps: &Rat) -> Result<Rat, WeightError> {
    check_eps(eps, star_eps_max())?;
    Ok(hist
        .iter()
        .map(|(d, n)| int(n as i64) * star_f_eps_unchecked(eps, d))
        .sum())
}

/// Optimal ε for the caterpillar family together with the threshold degree
/// `D*` that determines it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonChoice {
    pub eps: Rat,
    pub d_star: Option<usize>,
}

/// `ε* = 2/((k+1)(D*+1))` where `D*` is the least `D ≥ k+1` with
/// `(k+1)·Σ_{d=k+1}^{D} n_d ≥ n_1`; `ε* = 0` when no such `D` exists.
pub fn epsilon_star(hist: &DegreeHistogram, k: usize) -> Result<EpsilonChoice, WeightError> {
    check_k(k)?;
    let n1 = hist.count(1);
    let mut high = 0u64;
    // Past max(Δ, k+1) the partial sum no longer changes.
    for d in k + 1..=hist.max_degree().max(k + 1) {
        high += hist.count(d);
        if (k as u64 + 1) * high >= n1 {
            return Ok(EpsilonChoice {
                eps: rat(2, ((k + 1) * (d + 1)) as i64),
                d_star: Some(d),
            });
        }
    }
    Ok(EpsilonChoice {
        eps: Rat::zero(),
        d_star: None,
    })
}

/// Candidate ε values where the star total can change slope.
pub fn star_breakpoints(hist: &DegreeHistogram) -> Vec<Rat> {
    let mut pts = vec![Rat::zero(), rat(1, 10), star_eps_max()];
    for d in 3..=hist.max_degree() {
        let d = d as i64;
        pts.push(rat(d - 1, d * (d + 1)));
    }
    pts.sort();
    pts.dedup();
    pts
}

/// Smallest ε in `[0, 1/6]` maximizing the star total. The total is concave
/// and piecewise linear in ε, so a breakpoint attains the maximum.
pub fn star_epsilon_opt(hist: &DegreeHistogram) -> Rat {
    let mut best: Option<(Rat, Rat)> = None;
    for eps in star_breakpoints(hist) {
        let t = star_total(hist, &eps).expect("breakpoints lie in range");
        if best.as_ref().is_none_or(|(bt, _)| t > *bt) {
            best = Some((t, eps));
        }
    }
    best.map(|(_, e)| e).unwrap_or_else(Rat::zero)
}

/// Best caterpillar bound over the whole ε-range for `g`.
pub fn best_caterpillar_bound(g: &Graph, k: usize) -> Result<Rat, WeightError> {
    let hist = g.degree_histogram();
    caterpillar_total(&hist, k, &epsilon_star(&hist, k)?.eps)
}

/// Best star bound over the whole ε-range for `g`.
pub fn best_star_bound(g: &Graph) -> Rat {
    let hist = g.degree_histogram();
    star_total(&hist, &star_epsilon_opt(&hist)).expect("optimum lies in range")
}

/// `1 - r`, handy for complementary weights.
pub fn one_minus(r: &Rat) -> Rat {
    Rat::one() - r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn star(t: u32) -> Graph {
        let e: Vec<_> = (1..=t).map(|i| (0, i)).collect();
        Graph::from_edges(t as usize + 1, &e).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let e: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n as usize, &e).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &e).unwrap()
    }

    #[test]
    fn f_lin_values() {
        assert_eq!(f_lin(1), rat(5, 6));
        assert_eq!(f_lin(0), int(1));
        assert_eq!(f_lin(3), rat(1, 2));
    }

    #[test]
    fn f_k_eps_values() {
        assert_eq!(f_k_eps(2, &rat(1, 6), 1).unwrap(), rat(5, 6));
        assert_eq!(f_k_eps(2, &int(0), 3).unwrap(), int(0));
        assert_eq!(f_k_eps(3, &rat(1, 10), 5).unwrap(), rat(1, 3));
        assert!(matches!(
            f_k_eps(2, &rat(1, 5), 1),
            Err(WeightError::EpsOutOfRange(_))
        ));
        assert!(matches!(
            f_k_eps(2, &rat(-1, 5), 1),
            Err(WeightError::EpsOutOfRange(_))
        ));
        assert_eq!(f_k_eps(1, &int(0), 1), Err(WeightError::BadK(1)));
    }

    #[test]
    fn h_kg_values() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(h_kg(&k2, 2, Vertex(0)).unwrap(), int(1));
        assert_eq!(h_kg(&star(4), 2, Vertex(1)).unwrap(), rat(13, 15));
        assert_eq!(h_kg(&cycle(5), 2, Vertex(3)).unwrap(), rat(2, 3));
        assert!(h_kg(&cycle(5), 2, Vertex(9)).is_err());
    }

    #[test]
    fn star_f_eps_values() {
        assert_eq!(star_f_eps(&rat(1, 6), 2).unwrap(), rat(3, 5));
        assert_eq!(star_f_eps(&int(0), 3).unwrap(), rat(1, 3));
        assert_eq!(star_f_eps(&rat(1, 6), 1).unwrap(), rat(5, 6));
        assert!(star_f_eps(&rat(1, 5), 1).is_err());
    }

    #[test]
    fn part_weights() {
        assert_eq!(abc_weight(Label::B, 2), rat(1, 3));
        assert_eq!(abc_weight(Label::C, 1), rat(1, 6));
        assert_eq!(abc_weight(Label::A, 4), rat(2, 5));
        assert_eq!(ab_star_weight(Label::A, 2), rat(3, 5));
        assert_eq!(ab_star_weight(Label::B, 2), rat(1, 3));
        assert_eq!(ab_star_weight(Label::B, 0), int(1));
    }

    #[test]
    fn gain_and_loss_values() {
        assert_eq!(gain(Label::B, 2).unwrap(), rat(1, 2));
        assert_eq!(gain(Label::C, 1).unwrap(), rat(5, 6));
        assert_eq!(gain(Label::A, 5).unwrap(), rat(1, 15));
        assert_eq!(gain(Label::A, 0), Err(WeightError::DegreeZero));
        assert_eq!(loss(Label::B, 1), rat(1, 2));
        assert_eq!(loss(Label::C, 2), int(0));
        assert_eq!(loss(Label::A, 4), rat(1, 15));
    }

    #[test]
    fn totals() {
        assert_eq!(
            total_weight(&complete(4), &BoundSpec::FLin, None).unwrap(),
            int(2)
        );
        assert_eq!(
            total_weight(&claw(), &BoundSpec::FLin, None).unwrap(),
            int(3)
        );
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let labels = Partition::from_pairs(
            PartitionMode::Abc,
            [
                (Vertex(0), Label::A),
                (Vertex(1), Label::B),
                (Vertex(2), Label::A),
            ],
        );
        assert_eq!(
            total_weight(&p3, &BoundSpec::AbcWeights, Some(&labels)).unwrap(),
            int(2)
        );
        assert_eq!(
            total_weight(&p3, &BoundSpec::AbcWeights, None),
            Err(WeightError::MissingPartition)
        );
    }

    #[test]
    fn epsilon_star_examples() {
        let c = epsilon_star(&claw().degree_histogram(), 2).unwrap();
        assert_eq!(
            c,
            EpsilonChoice {
                eps: rat(1, 6),
                d_star: Some(3)
            }
        );
        let c = epsilon_star(&cycle(6).degree_histogram(), 3).unwrap();
        assert_eq!(
            c,
            EpsilonChoice {
                eps: caterpillar_eps_max(3),
                d_star: Some(4)
            }
        );
        let c = epsilon_star(&star(9).degree_histogram(), 2).unwrap();
        assert_eq!(
            c,
            EpsilonChoice {
                eps: int(0),
                d_star: None
            }
        );
    }

    #[test]
    fn star_epsilon_examples() {
        assert_eq!(star_epsilon_opt(&cycle(5).degree_histogram()), rat(1, 10));
        assert_eq!(
            star_epsilon_opt(&DegreeHistogram::from_counts(vec![0, 7])),
            int(0)
        );
        assert_eq!(star_epsilon_opt(&complete(4).degree_histogram()), rat(1, 6));
        assert_eq!(best_star_bound(&cycle(5)), int(3));
    }

    #[test]
    fn spec_text_roundtrip() {
        for s in [
            "flin",
            "fkeps:k=2,eps=1/6",
            "fkeps:k=3",
            "fk:k=4",
            "hkg:k=3",
            "star:eps=1/10",
            "star",
            "abc",
            "abstar",
        ] {
            let spec: BoundSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("fkeps:k=2,eps=1/5".parse::<BoundSpec>().is_err());
        assert!("hkg".parse::<BoundSpec>().is_err());
        assert!("hkg:k=1".parse::<BoundSpec>().is_err());
        assert!("nope".parse::<BoundSpec>().is_err());
    }

    #[test]
    fn rat_text() {
        assert_eq!(fmt_rat(&int(2)), "2/1");
        assert_eq!(parse_rat(" 7/30 "), Some(rat(7, 30)));
        assert_eq!(parse_rat("4"), Some(int(4)));
        assert_eq!(parse_rat("1/0"), None);
    }
}
