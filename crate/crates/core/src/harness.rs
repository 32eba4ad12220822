//! Verification batteries tying bounds, constructors and the exact oracle
//! together.
//!
//! Every suite first draws its instances from one seeded generator, then
//! checks them in parallel and sorts the records by key, so a run is a pure
//! function of `(suite, seed, sizes, count)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::certificate::verify_certificate;
use crate::classes::ForestClass;
use crate::constructors::{
    ab_construct, abc_construct, cubic_partition, greedy_linear_forest, k_caterpillar_forest,
    star_forest,
};
use crate::exact::{alpha_exact, alpha_exact_partitioned, DEFAULT_BUDGET};
use crate::generators::{generate, gnp, random_regular, Gadget, GenSpec};
use crate::graph::{DegreeHistogram, Graph, Vertex};
use crate::partition::{Label, Partition, PartitionMode};
use crate::weights::{
    best_caterpillar_bound, best_star_bound, caterpillar_eps_max, caterpillar_total, epsilon_star,
    fmt_rat, int, rat, total_weight, BoundSpec, Rat,
};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "FORESTBOUND_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ExhaustiveSmall,
    WitnessFamilies,
    RandomBounds,
    AbcLemma,
    StarLemma,
    Cubic,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ExhaustiveSmall,
        Suite::WitnessFamilies,
        Suite::RandomBounds,
        Suite::AbcLemma,
        Suite::StarLemma,
        Suite::Cubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ExhaustiveSmall => "exhaustive-small",
            Suite::WitnessFamilies => "witness-families",
            Suite::RandomBounds => "random-bounds",
            Suite::AbcLemma => "abc-lemma",
            Suite::StarLemma => "star-lemma",
            Suite::Cubic => "cubic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// What to run. `sizes` means vertex counts for `exhaustive-small` and
/// `cubic`, and the largest order for the random suites; `count` overrides
/// the number of random instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessConfig {
    pub suite: Suite,
    pub seed: u64,
    pub sizes: Option<Vec<usize>>,
    pub count: Option<usize>,
}

impl HarnessConfig {
    pub fn new(suite: Suite, seed: u64) -> Self {
        HarnessConfig {
            suite,
            seed,
            sizes: None,
            count: None,
        }
    }
}

/// One `key=value` line of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub key: String,
    pub fields: Vec<(String, String)>,
    pub pass: bool,
}

impl Record {
    fn new(key: impl Into<String>) -> Self {
        Record {
            key: key.into(),
            fields: Vec::new(),
            pass: true,
        }
    }

    fn field(mut self, k: &str, v: impl fmt::Display) -> Self {
        self.fields.push((k.to_string(), v.to_string()));
        self
    }

    fn check(mut self, ok: bool) -> Self {
        self.pass &= ok;
        self
    }

    pub fn to_line(&self) -> String {
        let mut s = format!("key={}", self.key);
        for (k, v) in &self.fields {
            s.push_str(&format!(" {k}={v}"));
        }
        s.push_str(&format!(" pass={}", self.pass));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub suite: Suite,
    pub seed: u64,
    pub records: Vec<Record>,
}

impl HarnessReport {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.pass).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Deterministic body: a header line, then one line per record.
    pub fn payload(&self) -> String {
        let mut out = format!(
            "suite={} seed={} records={} failures={}\n",
            self.suite,
            self.seed,
            self.records.len(),
            self.failures()
        );
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} records, {} failures: {}",
            self.suite,
            self.records.len(),
            self.failures(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n > 0)
}

fn par_map<T: Sync, F: Fn(&T) -> Record + Sync + Send>(items: &[T], f: F) -> Vec<Record> {
    let go = || items.par_iter().map(&f).collect::<Vec<_>>();
    match thread_cap() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(go),
            Err(_) => go(),
        },
        None => go(),
    }
}

pub fn run_suite(cfg: &HarnessConfig) -> HarnessReport {
    let mut records = match cfg.suite {
        Suite::ExhaustiveSmall => exhaustive_small(cfg),
        Suite::WitnessFamilies => witness_families(),
        Suite::RandomBounds => random_bounds(cfg),
        Suite::AbcLemma => abc_lemma(cfg),
        Suite::StarLemma => star_lemma(cfg),
        Suite::Cubic => cubic(cfg),
    };
    records.sort_by(|a, b| a.key.cmp(&b.key));
    HarnessReport {
        suite: cfg.suite,
        seed: cfg.seed,
        records,
    }
}

fn alpha(g: &Graph, cls: ForestClass) -> Option<usize> {
    alpha_exact(g, cls, DEFAULT_BUDGET).ok().map(|r| r.alpha)
}

fn ge(n: usize, bound: &Rat) -> bool {
    int(n as i64) >= *bound
}

fn fmt_opt(a: Option<usize>) -> String {
    a.map_or_else(|| "budget".to_string(), |a| a.to_string())
}

/// Graph on `0..n` whose edges are the set bits of `mask` over the pairs
/// `u < v` in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    let e: Vec<(u32, u32)> = pairs
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edges(n, &e).expect("simple by construction")
}

fn exhaustive_small(cfg: &HarnessConfig) -> Vec<Record> {
    let sizes = cfg.sizes.clone().unwrap_or_else(|| (1..=6).collect());
    sizes
        .into_iter()
        .map(|n| {
            let masks: Vec<u64> = (0..1u64 << (n * n.saturating_sub(1) / 2)).collect();
            let bad = par_map(&masks, |&m| {
                let g = graph_from_mask(n, m);
                let cert = greedy_linear_forest(&g);
                let a = alpha(&g, ForestClass::LinearForest);
                Record::new(format!("{m}"))
                    .check(verify_certificate(&g, &cert, None))
                    .check(a.is_some_and(|a| ge(a, &cert.claimed_bound) && a >= cert.len()))
            });
            let failing: Vec<&str> = bad
                .iter()
                .filter(|r| !r.pass)
                .map(|r| r.key.as_str())
                .collect();
            Record::new(format!("linear-n{n}"))
                .field("graphs", masks.len())
                .field("violations", failing.len())
                .field("first_bad_mask", failing.first().copied().unwrap_or("none"))
                .check(failing.is_empty())
        })
        .collect()
}

fn witness_families() -> Vec<Record> {
    let mut jobs: Vec<(String, GenSpec, ForestClass, usize)> = Vec::new();
    for k in [2, 3] {
        for d in 2..=8 {
            let key = format!("complete-d{d}-k{k}");
            jobs.push((
                key,
                GenSpec::Complete(d + 1),
                ForestClass::CaterpillarForest(Some(k)),
                2,
            ));
        }
        for n in 1..=3 {
            let key = format!("hnk-n{n}-k{k}");
            jobs.push((
                key,
                GenSpec::Hnk(n, k),
                ForestClass::CaterpillarForest(Some(k)),
                (k + 1) * n,
            ));
        }
    }
    for n in 1..=6 {
        jobs.push((
            format!("kprime-n{n}"),
            GenSpec::KPrime(n),
            ForestClass::StarForest,
            n + 1,
        ));
    }
    jobs.push((
        "cycle5-star".into(),
        GenSpec::Cycle(5),
        ForestClass::StarForest,
        3,
    ));
    let mut out = par_map(&jobs, |(key, spec, cls, want)| {
        let (g, _) = generate(spec).expect("family parameters are valid");
        let a = alpha(&g, *cls);
        let (size, ok) = match cls {
            ForestClass::CaterpillarForest(Some(k)) => match k_caterpillar_forest(&g, *k) {
                Ok(c) => (c.len(), true),
                Err(_) => (0, false),
            },
            _ => match star_forest(&g) {
                Ok(c) => (c.len(), true),
                Err(_) => (0, false),
            },
        };
        Record::new(key.clone())
            .field("spec", spec)
            .field("class", cls)
            .field("alpha", fmt_opt(a))
            .field("expected", want)
            .field("constructed", size)
            .check(a == Some(*want) && ok)
    });
    for gd in [Gadget::P3Ab, Gadget::K2Ac, Gadget::K3Acc] {
        let (g, p) = generate(&GenSpec::Fig1Gadget(gd)).expect("gadget");
        let p = p.expect("gadgets are labeled");
        let f = total_weight(&g, &BoundSpec::AbcWeights, Some(&p)).expect("labeled");
        let a = alpha_exact_partitioned(&g, &p, DEFAULT_BUDGET)
            .ok()
            .map(|r| r.alpha);
        out.push(
            Record::new(format!("gadget-{gd}"))
                .field("alpha", fmt_opt(a))
                .field("bound", fmt_rat(&f))
                .check(a.is_some_and(|a| int(a as i64) == f)),
        );
    }
    out
}

/// Largest caterpillar total over `0`, the range end, and every slope change
/// `2/((k+1)(d+1))` with `d > k`.
pub fn brute_caterpillar_max(hist: &DegreeHistogram, k: usize) -> Rat {
    let mut cands = vec![Rat::zero(), caterpillar_eps_max(k)];
    for d in k + 1..=hist.max_degree() {
        cands.push(rat(2, ((k + 1) * (d + 1)) as i64));
    }
    cands
        .iter()
        .map(|e| caterpillar_total(hist, k, e).expect("candidate in range"))
        .max()
        .expect("non-empty")
}

fn random_bounds(cfg: &HarnessConfig) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let hists: Vec<(usize, usize, DegreeHistogram)> = (0..cfg.count.unwrap_or(1000))
        .map(|i| {
            let k = 2 + i % 3;
            let delta = rng.gen_range(0..=30usize);
            let counts = (0..=delta).map(|_| rng.gen_range(0..=20u64)).collect();
            (i, k, DegreeHistogram::from_counts(counts))
        })
        .collect();
    let mut out = par_map(&hists, |(i, k, h)| {
        let choice = epsilon_star(h, *k).expect("k ≥ 2");
        let got = caterpillar_total(h, *k, &choice.eps).expect("ε* in range");
        let want = brute_caterpillar_max(h, *k);
        Record::new(format!("hist-{i:04}"))
            .field("k", k)
            .field("eps", fmt_rat(&choice.eps))
            .field("total", fmt_rat(&got))
            .field("brute", fmt_rat(&want))
            .check(got == want)
    });

    let max_n = cfg
        .sizes
        .as_ref()
        .and_then(|s| s.iter().max().copied())
        .unwrap_or(16);
    let mut regular = Vec::new();
    for d in [3usize, 4, 5] {
        for n in d + 1..=max_n {
            if n * d % 2 == 0 {
                for s in 0..2u64 {
                    regular.push((d, n, rng.gen::<u64>(), s));
                }
            }
        }
    }
    out.extend(par_map(&regular, |&(d, n, seed, s)| {
        let key = format!("regular-d{d}-n{n:02}-s{s}");
        let Ok(g) = random_regular(n, d, seed) else {
            return Record::new(key).field("error", "generator").check(false);
        };
        let a = alpha(&g, ForestClass::LinearForest);
        let bound = rat(2 * n as i64, d as i64 + 1);
        let cert = greedy_linear_forest(&g);
        Record::new(key)
            .field("alpha", fmt_opt(a))
            .field("bound", fmt_rat(&bound))
            .field("greedy", cert.len())
            .check(a.is_some_and(|a| ge(a, &bound)))
            .check(cert.claimed_bound == bound && verify_certificate(&g, &cert, None))
    }));

    let greedy: Vec<(usize, usize, f64, u64)> = (0..cfg.count.unwrap_or(500))
        .map(|i| {
            let n = rng.gen_range(1..=60);
            let p = [0.1, 0.3, 0.6][i % 3];
            (i, n, p, rng.gen())
        })
        .collect();
    out.extend(par_map(&greedy, |&(i, n, p, seed)| {
        let g = gnp(n, p, seed);
        let cert = greedy_linear_forest(&g);
        Record::new(format!("greedy-{i:04}"))
            .field("n", n)
            .field("p", p)
            .field("size", cert.len())
            .field("bound", fmt_rat(&cert.claimed_bound))
            .check(verify_certificate(&g, &cert, None))
    }));
    out
}

fn random_gnp(rng: &mut ChaCha8Rng, count: usize, max_n: usize) -> Vec<(usize, usize, f64, u64)> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            let p = [0.15, 0.3, 0.5][i % 3];
            (i, n, p, rng.gen())
        })
        .collect()
}

/// Random labelings of random graphs on at most 6 vertices.
fn labelings(
    rng: &mut ChaCha8Rng,
    count: usize,
    mode: PartitionMode,
) -> Vec<(usize, Graph, Partition)> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=6usize);
            let mask = rng.gen::<u64>() & ((1u64 << (n * (n - 1) / 2)) - 1);
            let g = graph_from_mask(n, mask);
            let parts = if mode == PartitionMode::Abc { 3 } else { 2 };
            let labels: Vec<(Vertex, Label)> = g
                .vertices()
                .map(|v| (v, [Label::A, Label::B, Label::C][rng.gen_range(0..parts)]))
                .collect();
            (i, g, Partition::from_pairs(mode, labels))
        })
        .collect()
}

/// `0-1,0-3,...`, or `none`.
fn compact_edges(g: &Graph) -> String {
    let e: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    if e.is_empty() {
        "none".into()
    } else {
        e.join(",")
    }
}

fn labeling_record(i: usize, g: &Graph, p: &Partition, spec: &BoundSpec) -> Record {
    let f = total_weight(g, spec, Some(p)).expect("labeled");
    let a = alpha_exact_partitioned(g, p, DEFAULT_BUDGET)
        .ok()
        .map(|r| r.alpha);
    let built = if p.mode() == PartitionMode::Abc {
        abc_construct(g, p)
    } else {
        ab_construct(g, p)
    };
    let size = built.as_ref().map(|(c, _)| c.len()).ok();
    Record::new(format!("labeling-{i:05}"))
        .field("n", g.order())
        .field("edges", compact_edges(g))
        .field(
            "labels",
            p.iter().map(|(_, l)| l.to_string()).collect::<String>(),
        )
        .field("bound", fmt_rat(&f))
        .field("alpha", fmt_opt(a))
        .field("constructed", fmt_opt(size))
        .check(a.is_some_and(|a| ge(a, &f)) && size.is_some())
}

fn abc_lemma(cfg: &HarnessConfig) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_n = cfg
        .sizes
        .as_ref()
        .and_then(|s| s.iter().max().copied())
        .unwrap_or(14);
    let graphs = random_gnp(&mut rng, cfg.count.unwrap_or(300), max_n);
    let jobs: Vec<_> = graphs
        .iter()
        .flat_map(|&(i, n, p, s)| [2usize, 3].map(|k| (i, n, p, s, k)))
        .collect();
    let mut out = par_map(&jobs, |&(i, n, p, seed, k)| {
        let g = gnp(n, p, seed);
        let h: Rat = g
            .vertices()
            .map(|v| crate::weights::h_kg(&g, k, v).expect("k ≥ 2"))
            .sum();
        let best = best_caterpillar_bound(&g, k).expect("k ≥ 2");
        let a = alpha(&g, ForestClass::CaterpillarForest(Some(k)));
        let built = k_caterpillar_forest(&g, k);
        Record::new(format!("kcat-{i:04}-k{k}"))
            .field("n", n)
            .field("p", p)
            .field("h_bound", fmt_rat(&h))
            .field("eps_bound", fmt_rat(&best))
            .field("alpha", fmt_opt(a))
            .field("constructed", fmt_opt(built.as_ref().ok().map(|c| c.len())))
            .check(built.is_ok())
            .check(a.is_some_and(|a| ge(a, &h) && ge(a, &best)))
    });
    let labeled = labelings(
        &mut rng,
        cfg.count.map_or(10_000, |c| c * 10),
        PartitionMode::Abc,
    );
    out.extend(par_map(&labeled, |(i, g, p)| {
        labeling_record(*i, g, p, &BoundSpec::AbcWeights)
    }));
    out
}

fn star_lemma(cfg: &HarnessConfig) -> Vec<Record> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_n = cfg
        .sizes
        .as_ref()
        .and_then(|s| s.iter().max().copied())
        .unwrap_or(14);
    let graphs = random_gnp(&mut rng, cfg.count.unwrap_or(300), max_n);
    let mut out = par_map(&graphs, |&(i, n, p, seed)| {
        let g = gnp(n, p, seed);
        let bound = best_star_bound(&g);
        let a = alpha(&g, ForestClass::StarForest);
        let built = star_forest(&g);
        Record::new(format!("star-{i:04}"))
            .field("n", n)
            .field("p", p)
            .field("bound", fmt_rat(&bound))
            .field("alpha", fmt_opt(a))
            .field("constructed", fmt_opt(built.as_ref().ok().map(|c| c.len())))
            .check(built.is_ok())
            .check(a.is_some_and(|a| ge(a, &bound)))
    });
    let labeled = labelings(
        &mut rng,
        cfg.count.map_or(10_000, |c| c * 10),
        PartitionMode::Ab,
    );
    out.extend(par_map(&labeled, |(i, g, p)| {
        labeling_record(*i, g, p, &BoundSpec::AbStarWeights)
    }));
    out
}

fn cubic(cfg: &HarnessConfig) -> Vec<Record> {
    let sizes = cfg.sizes.clone().unwrap_or_else(|| vec![20, 50, 100, 200]);
    let per = cfg.count.unwrap_or(20).div_ceil(sizes.len().max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let jobs: Vec<(usize, usize, u64)> = sizes
        .iter()
        .flat_map(|&n| (0..per).map(move |s| (n, s)))
        .map(|(n, s)| (n, s, rng.gen()))
        .collect();
    par_map(&jobs, |&(n, s, seed)| {
        let key = format!("cubic-n{n:03}-s{s:02}");
        let Ok(g) = random_regular(n, 3, seed) else {
            return Record::new(key).field("error", "generator").check(false);
        };
        let Ok((a, b)) = cubic_partition(&g) else {
            return Record::new(key).field("error", "not-cubic").check(false);
        };
        let da = g.induced_subgraph(&a).expect("subset").max_degree();
        let db = g.induced_subgraph(&b).expect("subset").max_degree();
        Record::new(key)
            .field("part1", a.len())
            .field("part2", b.len())
            .field("max_induced_degree", da.max(db))
            .check(da <= 1 && db <= 1 && 2 * a.len().max(b.len()) >= n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_enumerate_pairs() {
        let g = graph_from_mask(4, 0b111111);
        assert_eq!(g.size(), 6);
        assert_eq!(
            graph_from_mask(3, 0b010).edges().collect::<Vec<_>>(),
            [(Vertex(0), Vertex(2))]
        );
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_are_reproducible() {
        let mut cfg = HarnessConfig::new(Suite::StarLemma, 7);
        cfg.count = Some(5);
        cfg.sizes = Some(vec![8]);
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        assert_eq!(a.payload(), b.payload());
        assert!(a.passed(), "{}", a.payload());
    }
}
