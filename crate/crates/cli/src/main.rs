//! `forestbound`: evaluate bounds, build and check certificates, run the
//! exact oracle, generate graphs and run the verification harness.
//!
//! Exit codes: 0 pass, 2 bound violation, 3 parse or configuration error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use forestbound::constructors::{
    ab_construct_with, abc_construct_with, caterpillar_forest, greedy_linear_forest,
    k_caterpillar_forest_with, star_forest_with, EngineOptions, ReductionTrace,
};
use forestbound::exact::{alpha_exact, alpha_exact_partitioned};
use forestbound::generators::{generate, GenSpec};
use forestbound::harness::{run_suite, HarnessConfig, Suite};
use forestbound::weights::{
    approx, caterpillar_total, epsilon_star, fmt_rat, star_epsilon_opt, star_total, total_weight,
};
use forestbound::{
    verify_certificate, BoundSpec, ConstructError, ForestCertificate, ForestClass, Graph,
    Partition, PartitionMode,
};

#[derive(Parser)]
#[command(
    name = "forestbound",
    version,
    about = "Degree-sequence bounds for induced forests"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a bound (`flin`, `fkeps:k=2[,eps=1/6]`, `fk:k=2`, `hkg:k=3`,
    /// `star[:eps=1/10]`, `abc`, `abstar`).
    Bound {
        graph: PathBuf,
        spec: String,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Build a certified induced forest.
    Construct {
        graph: PathBuf,
        /// `linear`, `caterpillar`, `caterpillar:k=K`, `star`, `abc` or `ab`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        exact_threshold: Option<usize>,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
    /// Exact optimum by branch and bound (at most 64 vertices).
    Exact {
        graph: PathBuf,
        /// `linear`, `caterpillar[:k=K]`, `star`; or `abc` / `ab` with a partition.
        #[arg(long)]
        class: String,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long, default_value_t = forestbound::exact::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print a generated graph in edge-list format.
    Gen {
        /// e.g. `hnk:n=3,k=2`, `gnp:n=30,p=0.2,seed=42`, `fig1:p3ab`.
        spec: String,
        /// Also write the gadget labeling here.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Harness {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal ε for the caterpillar family (`--k`) or the star family.
    EpsilonOpt {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
}

enum Failure {
    Violation(String),
    Config(String),
}

impl Failure {
    fn config(e: impl std::fmt::Display) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::BoundMiss(_) => Failure::Violation(e.to_string()),
            other => Failure::config(other),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read(path)?)
        .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn read_partition(
    path: Option<&PathBuf>,
    mode: Option<PartitionMode>,
) -> Result<Option<Partition>, Failure> {
    path.map(|p| {
        Partition::parse(&read(p)?, mode)
            .map_err(|e| Failure::Config(format!("{}: {e}", p.display())))
    })
    .transpose()
}

fn show(r: &forestbound::Rat) -> String {
    format!("{} (~{:.6})", fmt_rat(r), approx(r))
}

fn cmd_bound(graph: &Path, spec: &str, partition: Option<&PathBuf>) -> Outcome {
    let g = read_graph(graph)?;
    let spec: BoundSpec = spec.parse().map_err(Failure::config)?;
    let p = read_partition(partition, None)?;
    let hist = g.degree_histogram();
    let resolved = spec.resolve(&hist).map_err(Failure::config)?;
    let total = total_weight(&g, &resolved, p.as_ref()).map_err(Failure::config)?;
    let mut out = String::new();
    match (&spec, &resolved) {
        (BoundSpec::FkEps { k, eps: None }, BoundSpec::FkEps { eps: Some(e), .. }) => {
            let d = epsilon_star(&hist, *k).map_err(Failure::config)?.d_star;
            out.push_str(&format!(
                "eps={} d_star={}\n",
                fmt_rat(e),
                d.map_or("none".to_string(), |d| d.to_string())
            ));
        }
        (BoundSpec::StarEps { eps: None }, BoundSpec::StarEps { eps: Some(e) }) => {
            out.push_str(&format!("eps={}\n", fmt_rat(e)));
        }
        _ => {}
    }
    out.push_str(&format!("bound={}\n", show(&total)));
    Ok(out)
}

fn options(exact_threshold: Option<usize>) -> EngineOptions {
    let mut o = EngineOptions::default();
    if let Some(t) = exact_threshold {
        o.exact_threshold = t;
    }
    o
}

fn cmd_construct(
    graph: &Path,
    class: &str,
    partition: Option<&PathBuf>,
    out: Option<&PathBuf>,
    exact_threshold: Option<usize>,
) -> Outcome {
    let g = read_graph(graph)?;
    let opts = options(exact_threshold);
    let need = |mode| -> Result<Partition, Failure> {
        read_partition(partition, Some(mode))?
            .ok_or_else(|| Failure::Config(format!("class `{class}` needs --partition")))
    };
    let (cert, labels, trace): (ForestCertificate, Option<Partition>, ReductionTrace) = match class
    {
        "abc" => {
            let p = need(PartitionMode::Abc)?;
            let (c, t) = abc_construct_with(&g, &p, &opts)?;
            (c, Some(p), t)
        }
        "ab" => {
            let p = need(PartitionMode::Ab)?;
            let (c, t) = ab_construct_with(&g, &p, &opts)?;
            (c, Some(p), t)
        }
        other => match other.parse::<ForestClass>().map_err(Failure::Config)? {
            ForestClass::LinearForest => {
                (greedy_linear_forest(&g), None, ReductionTrace::default())
            }
            ForestClass::CaterpillarForest(None) => {
                (caterpillar_forest(&g)?, None, ReductionTrace::default())
            }
            ForestClass::CaterpillarForest(Some(k)) => {
                let (c, t) = k_caterpillar_forest_with(&g, k, &opts)?;
                (c, None, t)
            }
            ForestClass::StarForest => {
                let (c, t) = star_forest_with(&g, &opts)?;
                (c, None, t)
            }
        },
    };
    let record = cert.to_record(&g, &trace.summary());
    let ok = verify_certificate(&g, &cert, labels.as_ref());
    let mut text = String::new();
    match out {
        Some(path) => fs::write(path, &record)
            .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?,
        None => text.push_str(&record),
    }
    let verdict = format!(
        "verdict={} size={} bound={}\n",
        if ok { "pass" } else { "fail" },
        cert.len(),
        show(&cert.claimed_bound)
    );
    text.push_str(&verdict);
    if ok {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn cmd_verify(graph: &Path, certificate: &Path, partition: Option<&PathBuf>) -> Outcome {
    let g = read_graph(graph)?;
    let (cert, hash) =
        ForestCertificate::from_record(&read(certificate)?).map_err(Failure::Config)?;
    let p = read_partition(partition, None)?;
    if hash != forestbound::certificate::graph_hash(&g) {
        return Err(Failure::Config(
            "certificate was issued for a different graph".into(),
        ));
    }
    if verify_certificate(&g, &cert, p.as_ref()) {
        Ok(format!("verdict=pass size={}\n", cert.len()))
    } else {
        Err(Failure::Violation(format!(
            "verdict=fail size={}\n",
            cert.len()
        )))
    }
}

fn cmd_exact(graph: &Path, class: &str, partition: Option<&PathBuf>, budget: u64) -> Outcome {
    let g = read_graph(graph)?;
    let res = match class {
        "abc" | "ab" => {
            let mode = if class == "abc" {
                PartitionMode::Abc
            } else {
                PartitionMode::Ab
            };
            let p = read_partition(partition, Some(mode))?
                .ok_or_else(|| Failure::Config(format!("class `{class}` needs --partition")))?;
            alpha_exact_partitioned(&g, &p, budget)
        }
        other => alpha_exact(&g, other.parse().map_err(Failure::Config)?, budget),
    };
    match res {
        Ok(r) => {
            let w: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            Ok(format!(
                "alpha={}\nwitness={}\nnodes={}\n",
                r.alpha,
                w.join(" "),
                r.nodes_explored
            ))
        }
        Err(e) => Err(Failure::config(e)),
    }
}

fn cmd_gen(spec: &str, partition_out: Option<&PathBuf>) -> Outcome {
    let spec: GenSpec = spec.parse().map_err(Failure::config)?;
    let (g, p) = generate(&spec).map_err(Failure::config)?;
    if let (Some(path), Some(p)) = (partition_out, &p) {
        fs::write(path, p.to_text())
            .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    }
    Ok(g.to_edge_list())
}

fn cmd_harness(
    suite: &str,
    seed: u64,
    sizes: Option<Vec<usize>>,
    count: Option<usize>,
    out: Option<&PathBuf>,
) -> Outcome {
    let suite: Suite = suite.parse().map_err(Failure::Config)?;
    let cfg = HarnessConfig {
        suite,
        seed,
        sizes,
        count,
    };
    let start = Instant::now();
    let report = run_suite(&cfg);
    let header = format!("# elapsed_ms={}\n", start.elapsed().as_millis());
    let mut text = String::new();
    match out {
        Some(path) => fs::write(path, report.payload())
            .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?,
        None => text.push_str(&report.payload()),
    }
    eprint!("{header}");
    text.push_str(&format!("# {}\n", report.summary()));
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Violation(text))
    }
}

fn cmd_epsilon_opt(graph: &Path, k: Option<usize>) -> Outcome {
    let g = read_graph(graph)?;
    let hist = g.degree_histogram();
    Ok(match k {
        Some(k) => {
            let c = epsilon_star(&hist, k).map_err(Failure::config)?;
            let t = caterpillar_total(&hist, k, &c.eps).map_err(Failure::config)?;
            format!(
                "eps={}\nd_star={}\nbound={}\n",
                fmt_rat(&c.eps),
                c.d_star.map_or("none".to_string(), |d| d.to_string()),
                show(&t)
            )
        }
        None => {
            let e = star_epsilon_opt(&hist);
            let t = star_total(&hist, &e).map_err(Failure::config)?;
            format!("eps={}\nbound={}\n", fmt_rat(&e), show(&t))
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let res = match &cli.cmd {
        Cmd::Bound {
            graph,
            spec,
            partition,
        } => cmd_bound(graph, spec, partition.as_ref()),
        Cmd::Construct {
            graph,
            class,
            partition,
            out,
            exact_threshold,
        } => cmd_construct(
            graph,
            class,
            partition.as_ref(),
            out.as_ref(),
            *exact_threshold,
        ),
        Cmd::Verify {
            graph,
            certificate,
            partition,
        } => cmd_verify(graph, certificate, partition.as_ref()),
        Cmd::Exact {
            graph,
            class,
            partition,
            budget,
        } => cmd_exact(graph, class, partition.as_ref(), *budget),
        Cmd::Gen {
            spec,
            partition_out,
        } => cmd_gen(spec, partition_out.as_ref()),
        Cmd::Harness {
            suite,
            seed,
            sizes,
            count,
            out,
        } => cmd_harness(suite, *seed, sizes.clone(), *count, out.as_ref()),
        Cmd::EpsilonOpt { graph, k } => cmd_epsilon_opt(graph, *k),
    };
    let mut stdout = std::io::stdout();
    match res {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Violation(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(2)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
