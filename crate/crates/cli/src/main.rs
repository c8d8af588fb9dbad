use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use tev_core::cone::{cone_bounds, cone_case_search};
use tev_core::gold;
use tev_core::graph::{self, certify_three_ev, Graph};
use tev_core::multiplicity::enumerate_multiplicity_arrays;
use tev_core::pipeline::{self, check_consistency, compare_gold, run_sweep, write_outputs};
use tev_core::refinement::refute_all;
use tev_core::spectral::{check_spectral_conditions, enumerate_spectral};
use tev_core::valency::enumerate_valency_arrays;
use tev_core::{Candidate, Eigenvalue, Int, SearchConfig, SpectralParams, Toggles, ValencyArray};

const OUT_DIR_ENV: &str = "TEV_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "tev",
    version,
    about = "Feasibility search for graphs with spectrum {s, 1, -t}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full sweep and write table1.csv, table2.csv, candidates.json and manifest.json.
    Search(SearchArgs),
    /// List spectral parameter arrays for one t.
    Spectral {
        #[arg(long)]
        t: Int,
        #[command(flatten)]
        toggles: ToggleArgs,
    },
    /// List feasible valency arrays for one (t, n, s).
    Valencies {
        #[arg(long)]
        t: Int,
        #[arg(long)]
        n: Int,
        #[arg(long)]
        s: Int,
        #[command(flatten)]
        toggles: ToggleArgs,
    },
    /// List feasible multiplicity arrays for one valency array.
    Mults {
        #[arg(long)]
        t: Int,
        #[arg(long)]
        n: Int,
        #[arg(long)]
        s: Int,
        /// Valencies, comma- or space-separated.
        #[arg(long)]
        valencies: String,
    },
    /// Run the elimination checks on candidates read from JSON.
    Refute {
        /// A candidate object or an array of them, as in candidates.json.
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Switch::On)]
        apply_br_uniqueness: Switch,
        /// Print the full report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Bounds and case analysis for a vertex of full degree.
    Cone {
        #[arg(long)]
        t: Int,
    },
    /// Certify that a graph has exactly three distinct eigenvalues.
    Verify {
        /// Graph file: "n e" then e lines "u v", 0-based.
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        path: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<Builtin>,
        /// Expected eigenvalues, comma-separated, e.g. "5,1,-2" or "sqrt(6),0,-sqrt(6)".
        #[arg(long)]
        theta: Option<String>,
    },
    /// Print the reference tables, or compare an output directory against them.
    Tables {
        #[arg(long)]
        compare: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 3)]
    t_min: Int,
    #[arg(long, default_value_t = 29)]
    t_max: Int,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Output directory; the TEV_OUT_DIR environment variable takes precedence.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Exit with status 1 unless the results match the reference tables.
    #[arg(long)]
    expect_tables: bool,
    #[command(flatten)]
    toggles: ToggleArgs,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    apply_br_uniqueness: Switch,
}

#[derive(Args)]
struct ToggleArgs {
    #[arg(long, value_enum, default_value_t = Switch::On)]
    bracket_condition: Switch,
    #[arg(long, value_enum, default_value_t = Switch::Off)]
    apply_n_lower_bound: Switch,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    non_cone_cap: Switch,
}

impl ToggleArgs {
    fn toggles(&self) -> Toggles {
        Toggles {
            bracket_condition: self.bracket_condition.on(),
            apply_n_lower_bound: self.apply_n_lower_bound.on(),
            non_cone_cap: self.non_cone_cap.on(),
            ..Toggles::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

impl Switch {
    fn on(self) -> bool {
        matches!(self, Switch::On)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Petersen,
    PetersenCone,
    Fano,
    Clebsch,
}

/// Distinguishes bad input (exit 2) from a failed comparison (exit 1).
enum Failure {
    Mismatch(String),
    Invalid(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<tev_core::SearchError> for Failure {
    fn from(e: tev_core::SearchError) -> Self {
        Failure::Invalid(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Search(args) => search(args),
        Command::Spectral { t, toggles } => {
            println!("n,s,m,edge_double,walk_sum");
            for p in enumerate_spectral(t, &toggles.toggles())? {
                println!("{},{},{},{},{}", p.n, p.s, p.m, p.edge_double(), p.walk_sum());
            }
            Ok(())
        }
        Command::Valencies { t, n, s, toggles } => {
            let p = params(t, n, s)?;
            println!("omega,valencies");
            for v in enumerate_valency_arrays(&p, &toggles.toggles())? {
                println!("{},{}", v.omega, join(&v.valencies()));
            }
            Ok(())
        }
        Command::Mults { t, n, s, valencies } => {
            let p = params(t, n, s)?;
            let ks = parse_ints(&valencies)?;
            let v = ValencyArray::from_valencies(p, &ks)?;
            println!("multiplicities");
            for m in enumerate_multiplicity_arrays(&v) {
                println!("{}", join(&m.counts));
            }
            Ok(())
        }
        Command::Refute {
            path,
            apply_br_uniqueness,
            json,
        } => {
            let candidates = read_candidates(&path)?;
            let toggles = Toggles {
                apply_br_uniqueness: apply_br_uniqueness.on(),
                ..Toggles::default()
            };
            let report = refute_all(&candidates, &toggles);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)?
                );
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
        Command::Cone { t } => {
            let value = if (3..=6).contains(&t) {
                serde_json::to_value(cone_case_search(t)?)
            } else {
                serde_json::to_value(cone_bounds(t)?)
            }
            .map_err(anyhow::Error::from)?;
            println!("{}", serde_json::to_string_pretty(&value).map_err(anyhow::Error::from)?);
            Ok(())
        }
        Command::Verify { path, builtin, theta } => {
            let g = match (path, builtin) {
                (Some(p), _) => {
                    let text = fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    Graph::parse(&text).with_context(|| format!("parsing {}", p.display()))?
                }
                (None, Some(b)) => builtin_graph(b),
                (None, None) => return Err(Failure::Invalid(anyhow!("a graph file or --builtin is required"))),
            };
            let theta = theta.map(|s| parse_theta(&s)).transpose()?;
            let cert = certify_three_ev::<Int>(&g, theta);
            println!("{}", serde_json::to_string_pretty(&cert).map_err(anyhow::Error::from)?);
            if cert.ok {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!(
                    "certificate failed with {} issue(s)",
                    cert.failures.len()
                )))
            }
        }
        Command::Tables { compare } => tables(compare.as_deref()),
    }
}

fn search(args: SearchArgs) -> Result<(), Failure> {
    let mut toggles = args.toggles.toggles();
    toggles.apply_br_uniqueness = args.apply_br_uniqueness.on();
    let config = SearchConfig {
        t_min: args.t_min,
        t_max: args.t_max,
        jobs: args.jobs,
        toggles,
    };
    config.validate()?;
    let out = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or(args.out);

    let outcome = run_sweep(&config)?;
    write_outputs(&outcome, &out).with_context(|| format!("writing to {}", out.display()))?;
    check_consistency(&out).map_err(|e| anyhow!("output self-check failed: {e}"))?;

    for c in outcome.counts() {
        eprintln!("t={:>2}  |S|={:>4}  |K|={:>4}  |M|={}", c.t, c.s, c.k, c.m);
    }
    let r = &outcome.report;
    eprintln!(
        "{} candidate(s): {} refuted, {} flagged, {} open; wrote {}",
        r.entries.len(),
        r.refuted(),
        r.flagged(),
        r.open(),
        out.display()
    );

    if args.expect_tables {
        let diffs = compare_gold(&outcome);
        if !diffs.is_empty() {
            return Err(Failure::Mismatch(format!(
                "reference table mismatch:\n  {}",
                diffs.join("\n  ")
            )));
        }
        eprintln!("matches the reference tables");
    }
    Ok(())
}

fn tables(compare: Option<&Path>) -> Result<(), Failure> {
    let gold_counts: Vec<pipeline::StageCounts> = gold::TABLE1
        .iter()
        .map(|r| pipeline::StageCounts {
            t: r.t,
            s: r.s,
            k: r.k,
            m: r.m,
        })
        .collect();
    let Some(dir) = compare else {
        print!("{}", pipeline::table1_csv(&gold_counts));
        println!();
        println!("t,n,s,m,valencies,multiplicities");
        for r in &gold::TABLE2 {
            println!(
                "{},{},{},{},{},{}",
                r.t,
                r.n,
                r.s,
                r.m,
                join(r.valencies),
                join(r.multiplicities)
            );
        }
        return Ok(());
    };
    let path = dir.join("table1.csv");
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let mut lines = text.lines();
    if lines.next() != Some(pipeline::TABLE1_HEADER) {
        return Err(Failure::Invalid(anyhow!(
            "{} does not start with {:?}",
            path.display(),
            pipeline::TABLE1_HEADER
        )));
    }
    let mut diffs = Vec::new();
    for line in lines {
        let f = parse_ints(line).with_context(|| format!("bad row {line:?}"))?;
        let [t, s, k, m] = f[..] else {
            return Err(Failure::Invalid(anyhow!("bad row {line:?}")));
        };
        match gold::table1_row(t) {
            Some(g) if (g.s as Int, g.k as Int, g.m as Int) == (s, k, m) => {}
            Some(g) => diffs.push(format!(
                "t={t}: ({s}, {k}, {m}) vs reference ({}, {}, {})",
                g.s, g.k, g.m
            )),
            None => diffs.push(format!("t={t}: no reference row")),
        }
    }
    if diffs.is_empty() {
        println!("table1.csv matches the reference table");
        Ok(())
    } else {
        Err(Failure::Mismatch(diffs.join("\n")))
    }
}

fn params(t: Int, n: Int, s: Int) -> anyhow::Result<SpectralParams> {
    let p = SpectralParams::from_tns(t, n, s)?;
    let report = check_spectral_conditions(&p)?;
    if !report.all_pass() {
        eprintln!("note: (n, s, m) = ({n}, {s}, {}) fails {:?}", p.m, report.failed());
    }
    Ok(p)
}

fn parse_ints(s: &str) -> anyhow::Result<Vec<Int>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<Int>().with_context(|| format!("not an integer: {x:?}")))
        .collect()
}

fn parse_theta(s: &str) -> anyhow::Result<[Eigenvalue; 3]> {
    let vals: Vec<Eigenvalue> = s
        .split(',')
        .map(|x| x.trim().parse::<Eigenvalue>().map_err(|e| anyhow!("{x:?}: {}", e.0)))
        .collect::<anyhow::Result<_>>()?;
    vals.try_into()
        .map_err(|v: Vec<Eigenvalue>| anyhow!("expected three eigenvalues, got {}", v.len()))
}

fn join(v: &[Int]) -> String {
    v.iter().map(Int::to_string).collect::<Vec<_>>().join(" ")
}

fn builtin_graph(b: Builtin) -> Graph {
    match b {
        Builtin::Petersen => graph::build_petersen(),
        Builtin::PetersenCone => graph::build_cone(&graph::build_petersen()),
        Builtin::Fano => graph::build_fano(),
        Builtin::Clebsch => graph::build_clebsch(),
    }
}

fn read_candidates(path: &Path) -> anyhow::Result<Vec<Candidate>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let items = match value {
        Value::Array(items) => items,
        obj @ Value::Object(_) => vec![obj],
        _ => bail!("expected a candidate object or an array of them"),
    };
    items.iter().map(candidate_from_json).collect()
}

fn candidate_from_json(v: &Value) -> anyhow::Result<Candidate> {
    let int = |key: &str| v[key].as_i64().ok_or_else(|| anyhow!("missing integer field {key:?}"));
    let list = |key: &str| -> anyhow::Result<Vec<Int>> {
        v[key]
            .as_array()
            .ok_or_else(|| anyhow!("missing array field {key:?}"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| anyhow!("non-integer in {key:?}")))
            .collect()
    };
    let (t, n, s, m) = (int("t")?, int("n")?, int("s")?, int("m")?);
    Ok(Candidate::from_table(
        t,
        n,
        s,
        m,
        &list("valencies")?,
        &list("multiplicities")?,
    )?)
}
