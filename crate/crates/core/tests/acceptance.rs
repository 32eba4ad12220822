//! Acceptance battery: criteria 1 to 8, one PASS/FAIL line each.
//!
//! Bounds are recomputed here from their definitions rather than taken from
//! the library's weight module, and forest membership is re-checked with a
//! local recognizer. All comparisons are exact (tolerance 0).

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use forestbound::constructors::{
    cubic_partition, greedy_linear_forest, k_caterpillar_forest, star_forest,
};
use forestbound::exact::{alpha_exact, alpha_exact_partitioned, DEFAULT_BUDGET};
use forestbound::generators::{gnp, random_regular};
use forestbound::graph::DegreeHistogram;
use forestbound::weights::{caterpillar_total, epsilon_star};
use forestbound::{ForestClass, Graph, Label, Partition, PartitionMode, Rat, Vertex};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn z(n: usize) -> Rat {
    q(n as i64, 1)
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    let e: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (u as u32, v as u32)).collect();
    Graph::from_edges(n, &e).unwrap()
}

fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    graph(n, &e)
}

/// `K_n` plus `per` pendant leaves on every vertex.
fn pendants(n: usize, per: usize) -> Graph {
    let mut e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for v in 0..n {
        for j in 0..per {
            e.push((v, n + v * per + j));
        }
    }
    graph(n + n * per, &e)
}

// Degree weights, straight from their definitions.

fn f_lin(d: usize) -> Rat {
    match d {
        0 => Rat::one(),
        1 => q(5, 6),
        d => q(2, d as i64 + 1),
    }
}

fn f_k_eps(k: usize, eps: &Rat, d: usize) -> Rat {
    match d {
        0 => Rat::one(),
        1 => Rat::one() - eps,
        d if d <= k => q(2, d as i64 + 1),
        d => (z(k + 1) * eps).min(q(2, d as i64 + 1)),
    }
}

fn star_f(eps: &Rat, d: usize) -> Rat {
    match d {
        0 => Rat::one(),
        1 => Rat::one() - eps,
        2 => q(3, 5).min(q(1, 2) + eps),
        d => q(2, d as i64 + 1).min(q(1, d as i64) + eps),
    }
}

fn h(g: &Graph, k: usize, v: Vertex) -> Rat {
    match g.degree(v) {
        0 => Rat::one(),
        1 => {
            let w = *g.neighbors(v).iter().next().unwrap();
            let dw = g.degree(w);
            if dw <= k {
                Rat::one()
            } else {
                Rat::one() - q(2, ((k + 1) * (dw + 1)) as i64)
            }
        }
        d => q(2, d as i64 + 1),
    }
}

fn sum_deg(g: &Graph, f: impl Fn(usize) -> Rat) -> Rat {
    g.vertices().map(|v| f(g.degree(v))).sum()
}

/// Best caterpillar total over `0`, `2/((k+1)(k+2))` and every kink
/// `2/((k+1)(d+1))`, `d > k`, of a degree histogram.
fn best_caterpillar(counts: &[u64], k: usize) -> Rat {
    let mut cands = vec![Rat::zero(), q(2, ((k + 1) * (k + 2)) as i64)];
    cands.extend(
        (k + 1..counts.len())
            .filter(|&d| counts[d] > 0)
            .map(|d| q(2, ((k + 1) * (d + 1)) as i64)),
    );
    cands
        .iter()
        .map(|e| hist_total(counts, k, e))
        .max()
        .unwrap()
}

fn hist_total(counts: &[u64], k: usize, eps: &Rat) -> Rat {
    counts
        .iter()
        .enumerate()
        .map(|(d, &c)| z(c as usize) * f_k_eps(k, eps, d))
        .sum()
}

/// Best star total over `0`, `1/10`, `1/6` and the kinks `(d-1)/(d(d+1))`.
fn best_star(g: &Graph) -> Rat {
    let mut cands = vec![Rat::zero(), q(1, 10), q(1, 6)];
    for v in g.vertices() {
        let d = g.degree(v) as i64;
        if d >= 3 {
            cands.push(q(d - 1, d * (d + 1)));
        }
    }
    cands
        .iter()
        .map(|e| sum_deg(g, |d| star_f(e, d)))
        .max()
        .unwrap()
}

// Local recognizers.

fn induced(g: &Graph, s: &BTreeSet<Vertex>) -> Graph {
    g.induced_subgraph(s).unwrap()
}

fn acyclic(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

fn is_linear(g: &Graph) -> bool {
    acyclic(g) && g.vertices().all(|v| g.degree(v) <= 2)
}

fn is_star_forest(g: &Graph) -> bool {
    acyclic(g)
        && g.components()
            .iter()
            .all(|c| c.iter().filter(|&&v| g.degree(v) >= 2).count() <= 1)
}

fn is_k_caterpillar(g: &Graph, k: usize) -> bool {
    if !acyclic(g) || g.vertices().any(|v| g.degree(v) > k) {
        return false;
    }
    let spine: BTreeSet<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 2).collect();
    is_linear(&induced(g, &spine))
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let e: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = graph(n, &e);
            let bound = sum_deg(&g, f_lin);
            let cert = greedy_linear_forest(&g);
            let alpha = alpha_exact(&g, ForestClass::LinearForest, DEFAULT_BUDGET)
                .unwrap()
                .alpha;
            let ok = cert.claimed_bound == bound
                && is_linear(&induced(&g, &cert.vertex_set))
                && z(cert.len()) >= bound
                && z(alpha) >= bound;
            if !ok {
                bad.push(format!("n={n} mask={mask}"));
            }
            checked += 1;
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} graphs, {} violations {bad:?}", bad.len()),
    )
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut expect = |g: &Graph, cls: ForestClass, want: usize, name: String| {
        let a = alpha_exact(g, cls, DEFAULT_BUDGET).unwrap().alpha;
        checked += 1;
        if a != want {
            bad.push(format!("{name}: {a} != {want}"));
        }
    };
    for k in [2, 3] {
        for d in 2..=8 {
            expect(
                &complete(d + 1),
                ForestClass::CaterpillarForest(Some(k)),
                2,
                format!("K{}", d + 1),
            );
        }
        for n in 1..=3 {
            let hnk = pendants(n, k + 1);
            expect(
                &hnk,
                ForestClass::CaterpillarForest(Some(k)),
                (k + 1) * n,
                format!("H({n},{k})"),
            );
        }
    }
    for n in 1..=6 {
        expect(
            &pendants(n, 1),
            ForestClass::StarForest,
            n + 1,
            format!("K'({n})"),
        );
    }
    let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    expect(&c5, ForestClass::StarForest, 3, "C5".into());
    outcome(bad.is_empty(), format!("{checked} equalities {bad:?}"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut bad = 0;
    for i in 0..1000 {
        let k = [2, 3, 4][i % 3];
        let delta = rng.gen_range(0..=30usize);
        let counts: Vec<u64> = (0..=delta).map(|_| rng.gen_range(0..=20)).collect();
        let hist = DegreeHistogram::from_counts(counts.clone());
        let eps = epsilon_star(&hist, k).unwrap().eps;
        let got = caterpillar_total(&hist, k, &eps).unwrap();
        if got != hist_total(&counts, k, &eps) || got != best_caterpillar(&counts, k) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("1000 histograms, {bad} mismatches"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = Vec::new();
    for i in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = [0.15, 0.3, 0.5][i % 3];
        let g = gnp(n, p, rng.gen());
        let mut counts = vec![0u64; n];
        g.vertices().for_each(|v| counts[g.degree(v)] += 1);
        for k in [2, 3] {
            let hb: Rat = g.vertices().map(|v| h(&g, k, v)).sum();
            let fb = best_caterpillar(&counts, k);
            let alpha = alpha_exact(&g, ForestClass::CaterpillarForest(Some(k)), DEFAULT_BUDGET)
                .unwrap()
                .alpha;
            let built = match k_caterpillar_forest(&g, k) {
                Ok(c) => {
                    c.claimed_bound == hb
                        && z(c.len()) >= hb
                        && is_k_caterpillar(&induced(&g, &c.vertex_set), k)
                }
                Err(_) => false,
            };
            if !(built && z(alpha) >= hb && z(alpha) >= fb) {
                bad.push(format!("graph {i} k={k}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("600 runs, {} failures {bad:?}", bad.len()),
    )
}

fn criterion_5() -> Outcome {
    use Label::*;
    // Gadget, labels, and the weight total from the tabulated values
    // f_A(1) = 5/6, f_A(2) = 2/3, f_B(2) = 1/3, f_C(1) = f_C(2) = 1/6.
    let gadgets = [
        (
            "P3 A-B-A",
            graph(3, &[(0, 1), (1, 2)]),
            vec![A, B, A],
            q(5, 6) + q(1, 3) + q(5, 6),
        ),
        ("K2 A-C", graph(2, &[(0, 1)]), vec![A, C], q(5, 6) + q(1, 6)),
        (
            "K3 A-C-C",
            complete(3),
            vec![A, C, C],
            q(2, 3) + q(1, 6) + q(1, 6),
        ),
    ];
    let mut bad = Vec::new();
    for (name, g, ls, f) in gadgets {
        let p = Partition::from_pairs(PartitionMode::Abc, g.vertices().zip(ls));
        let a = alpha_exact_partitioned(&g, &p, DEFAULT_BUDGET)
            .unwrap()
            .alpha;
        if z(a) != f {
            bad.push(format!("{name}: alpha {a} vs {f}"));
        }
    }
    outcome(bad.is_empty(), format!("3 gadgets tight {bad:?}"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for i in 0..20u64 {
        let n = 10 * (i as usize + 1);
        let g = random_regular(n, 3, 600 + i).unwrap();
        let start = Instant::now();
        let (a, b) = cubic_partition(&g).unwrap();
        let took = start.elapsed();
        slowest = slowest.max(took);
        let ok = a.len() + b.len() == n
            && a.is_disjoint(&b)
            && induced(&g, &a)
                .vertices()
                .all(|v| induced(&g, &a).degree(v) <= 1)
            && induced(&g, &b)
                .vertices()
                .all(|v| induced(&g, &b).degree(v) <= 1)
            && 2 * a.len().max(b.len()) >= n
            && took < Duration::from_secs(1);
        if !ok {
            bad.push(format!("n={n}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("20 cubic graphs up to n=200, slowest {slowest:?} {bad:?}"),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for i in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = [0.15, 0.3, 0.5][i % 3];
        let g = gnp(n, p, rng.gen());
        let bound = best_star(&g);
        let grid_ok = (0..=100).all(|j| sum_deg(&g, |d| star_f(&q(j, 600), d)) <= bound);
        let alpha = alpha_exact(&g, ForestClass::StarForest, DEFAULT_BUDGET)
            .unwrap()
            .alpha;
        let built = match star_forest(&g) {
            Ok(c) => {
                c.claimed_bound == bound
                    && z(c.len()) >= bound
                    && is_star_forest(&induced(&g, &c.vertex_set))
            }
            Err(_) => false,
        };
        if !(grid_ok && built && z(alpha) >= bound) {
            bad.push(format!("graph {i}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!("300 graphs, {} failures {bad:?}", bad.len()),
    )
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for d in [3usize, 4, 5] {
        for n in d + 1..=16 {
            if n * d % 2 == 1 {
                continue;
            }
            for s in 0..3u64 {
                let g = random_regular(n, d, 800 + 100 * d as u64 + 10 * n as u64 + s).unwrap();
                let a = alpha_exact(&g, ForestClass::LinearForest, DEFAULT_BUDGET)
                    .unwrap()
                    .alpha;
                checked += 1;
                if z(a) < q(2 * n as i64, d as i64 + 1) {
                    bad.push(format!("d={d} n={n} s={s}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} regular graphs {bad:?}"))
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        (
            "linear forests, all graphs on at most 6 vertices",
            criterion_1,
        ),
        ("witness families attain their values", criterion_2),
        ("optimal epsilon for caterpillar bounds", criterion_3),
        (
            "degree-bounded caterpillar forests on random graphs",
            criterion_4,
        ),
        ("three-part gadgets are tight", criterion_5),
        ("cubic bipartition", criterion_6),
        ("star forests on random graphs", criterion_7),
        ("regular graphs meet 2n/(d+1)", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {verdict}: {name} ({}; {:.1}s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!o.ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
