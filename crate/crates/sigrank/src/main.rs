use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use sigrank::report::{certificate_json, AnalysisReport};
use sigrank::sgr;
use sigrank::sweep::{self, SweepConfig};
use sigrank_core::{classify, expected_rank, generate, FamilySpec, Sign, SignedGraph, Signing};

#[derive(Parser)]
#[command(
    name = "sigrank",
    version,
    about = "Exact rank, girth and extremal classification of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants, rank and classification of a .sgr file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print only the classification of a .sgr file.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a family member as .sgr and report its closed-form rank.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output file; standard output if omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run the verification sweep. Exits 0 iff no counterexample is found.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Balance {
    #[arg(long, conflicts_with = "unbalanced")]
    balanced: bool,
    #[arg(long)]
    unbalanced: bool,
}

impl Balance {
    fn get(&self) -> Result<bool> {
        match (self.balanced, self.unbalanced) {
            (true, false) => Ok(true),
            (false, true) => Ok(false),
            _ => bail!("pass one of --balanced or --unbalanced"),
        }
    }
}

#[derive(Subcommand)]
enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
        #[command(flatten)]
        balance: Balance,
    },
    /// All-positive complete bipartite graph.
    Bipartite {
        a: usize,
        b: usize,
    },
    /// Complete tripartite graph built from vertex polarities and part
    /// signs.
    Tripartite {
        a: usize,
        b: usize,
        c: usize,
        /// One sign per vertex, e.g. `++-+-`; all positive by default.
        #[arg(long)]
        polarity: Option<String>,
        /// Part signs τ12 τ13 τ23, e.g. `+-+`.
        #[arg(long, default_value = "+++")]
        base: String,
    },
    /// Cycle with pendant leaves, e.g. `--leaves 0:1,2:3`.
    Unicyclic {
        cycle_len: usize,
        #[arg(long, default_value = "")]
        leaves: String,
    },
    Theta {
        p: usize,
        l: usize,
        q: usize,
        /// One sign per edge in sorted edge order.
        #[arg(long)]
        signs: Option<String>,
    },
    T1 {
        #[arg(long, conflicts_with = "signs")]
        all_six_cycles_unbalanced: bool,
        #[arg(long)]
        signs: Option<String>,
    },
    /// Cycle joined to the centre of a star with `k` leaves.
    CycleStar {
        g: usize,
        k: usize,
        #[command(flatten)]
        balance: Balance,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest order of the labelled (dense) enumeration.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Largest order of the isomorphism-class (sparse) enumeration; 0 skips it.
    #[arg(long, default_value_t = 10)]
    sparse_max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_cyclomatic: usize,
    /// Extra underlying graphs in graph6 format; repeatable.
    #[arg(long = "graph6")]
    graph6: Vec<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Comma-separated check names; `default` and `all` expand.
    #[arg(long, default_value = "default")]
    checks: String,
    #[arg(long, default_value_t = 20)]
    max_counterexamples: usize,
    #[arg(long)]
    json: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Write counterexamples as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    sgr::parse(&text).with_context(|| format!("{}", path.display()))
}

fn parse_signs(text: &str) -> Result<Vec<Sign>> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            '+' => Ok(Sign::Positive),
            '-' => Ok(Sign::Negative),
            other => bail!("invalid sign `{other}`; use + or -"),
        })
        .collect()
}

fn signing(signs: &Option<String>) -> Result<Signing> {
    Ok(match signs {
        Some(s) => Signing::Explicit(parse_signs(s)?),
        None => Signing::AllPositive,
    })
}

fn parse_leaves(text: &str) -> Result<BTreeMap<usize, usize>> {
    let mut leaves = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (pos, count) = item
            .split_once(':')
            .with_context(|| format!("leaf spec `{item}` should look like POSITION:COUNT"))?;
        let pos: usize = pos
            .trim()
            .parse()
            .with_context(|| format!("bad position in `{item}`"))?;
        let count: usize = count.trim().parse().with_context(|| format!("bad count in `{item}`"))?;
        if leaves.insert(pos, count).is_some() {
            bail!("position {pos} listed twice");
        }
    }
    Ok(leaves)
}

fn family_spec(family: &Family) -> Result<FamilySpec> {
    Ok(match family {
        Family::Path { n } => FamilySpec::Path { n: *n },
        Family::Cycle { n, balance } => FamilySpec::Cycle {
            n: *n,
            balanced: balance.get()?,
        },
        Family::Bipartite { a, b } => FamilySpec::BalancedCompleteBipartite { a: *a, b: *b },
        Family::Tripartite {
            a,
            b,
            c,
            polarity,
            base,
        } => {
            let polarity = match polarity {
                Some(p) => parse_signs(p)?,
                None => vec![Sign::Positive; a + b + c],
            };
            let base: [Sign; 3] = parse_signs(base)?
                .try_into()
                .map_err(|_| anyhow::anyhow!("--base needs exactly three signs"))?;
            FamilySpec::TripartiteRank3 {
                sizes: [*a, *b, *c],
                polarity,
                base,
            }
        }
        Family::Unicyclic { cycle_len, leaves } => FamilySpec::CanonicalUnicyclic {
            cycle_len: *cycle_len,
            leaves: parse_leaves(leaves)?,
        },
        Family::Theta { p, l, q, signs } => FamilySpec::Theta {
            p: *p,
            l: *l,
            q: *q,
            signing: signing(signs)?,
        },
        Family::T1 {
            all_six_cycles_unbalanced,
            signs,
        } => {
            if *all_six_cycles_unbalanced {
                FamilySpec::t1_all_six_cycles_negative()
            } else {
                FamilySpec::T1 {
                    signing: signing(signs)?,
                }
            }
        }
        Family::CycleStar { g, k, balance } => FamilySpec::CycleStar {
            g: *g,
            k: *k,
            balanced: balance.get()?,
        },
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_analyze(file: &Path, json: bool) -> Result<ExitCode> {
    let report = AnalysisReport::build(&read_graph(file)?);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(file: &Path, json: bool) -> Result<ExitCode> {
    let g = read_graph(file)?;
    let report = AnalysisReport::build(&g);
    if json {
        let value = serde_json::json!({
            "schema": 1,
            "classification": report.classification,
        });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{}", report.verdict_line());
        if let Ok(c) = classify(&g) {
            let cert = certificate_json(&c.certificate);
            if !cert.is_null() {
                println!("{cert}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(family: &Family, output: Option<&Path>) -> Result<ExitCode> {
    let spec = family_spec(family)?;
    let g = generate(&spec)?;
    let expected = expected_rank(&spec)?;
    write_out(output, &sgr::format(&g))?;
    let line = match expected {
        Some(r) => format!("expected rank {r}"),
        None => "expected rank: no closed form for these parameters".to_string(),
    };
    // keep stdout a clean .sgr when it carries the graph
    if output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let config = SweepConfig {
        max_n_dense: args.max_n,
        max_n_sparse: args.sparse_max_n,
        max_cyclomatic: args.max_cyclomatic,
        graph6_sources: args.graph6.clone(),
        parallelism: args.jobs,
        checks: sweep::parse_checks(&args.checks)?,
        max_counterexamples: args.max_counterexamples,
    };
    let report = sweep::run(&config)?;
    let text = if args.json {
        report.to_json() + "\n"
    } else {
        let mut out = format!(
            "underlying graphs {}  signed instances {}  skipped {}  elapsed {} ms\n",
            report.underlying_graphs, report.instances_checked, report.skipped_graphs, report.elapsed_ms
        );
        for (name, t) in &report.checks {
            let status = if t.failed == 0 { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "{status}  {name:<24} evaluated {:>10}  failed {}\n",
                t.evaluated, t.failed
            ));
        }
        out.push_str(&format!("counterexamples: {}\n", report.counterexample_count));
        for c in &report.counterexamples {
            out.push_str(&format!(
                "-- {} ({:?}): expected {}; observed {}\n{}",
                c.check, c.source, c.expected, c.observed, c.graph
            ));
        }
        out
    };
    write_out(args.report.as_deref(), &text)?;
    if let Some(path) = &args.csv {
        std::fs::write(path, report.counterexamples_csv())
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(if report.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { file, json } => cmd_analyze(file, *json),
        Command::Classify { file, json } => cmd_classify(file, *json),
        Command::Generate { family, output } => cmd_generate(family, output.as_deref()),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
