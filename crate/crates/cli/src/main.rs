//! `paracon`: check explosion principles, list quasi-negations, mine separations.
//!
//! Exit codes: 0 when every requested result was computed, 1 on bad input, 2 when a
//! budget ran out or a verdict stayed unknown.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paracon::companions::CompanionLogic;
use paracon::gallery;
use paracon::io::{CheckEntry, LogicSpecFile, Report, ReportInput};
use paracon::miner::{self, SeparationQuery};
use paracon::par::Exec;
use paracon::principles::{battery, lfi, qn, Checker};
use paracon::structure::Condition;
use paracon::{Budget, CompanionMode, Error, Logic, PrincipleId, Status};

#[derive(Parser)]
#[command(name = "paracon", version, about = "Workbench for explosion and paraconsistency principles")]
struct Cli {
    /// Worker threads for partitionable scans (1 runs sequentially).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 2)]
    pool_vars: usize,
    #[arg(long, default_value_t = 3)]
    pool_depth: usize,
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, default_value_t = 6)]
    carrier_cap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    #[arg(long, default_value_t = 10)]
    window: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            pool_vars: self.pool_vars,
            pool_depth: self.pool_depth,
            max_size: self.max_size,
            carrier_cap: self.carrier_cap,
            seed: self.seed,
            samples: self.samples,
            window: self.window,
            ..Budget::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check principles against a logic.
    Check {
        /// Spec file, or builtin:NAME[:ARG].
        #[arg(long)]
        logic: String,
        /// Comma-separated principle ids.
        #[arg(long)]
        principle: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Quasi-negations of a formula or element.
    Qn {
        #[arg(long)]
        logic: String,
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The negation-kite laws for quasi-negations on a matrix.
    Kite {
        #[arg(long, default_value = "builtin:cpc")]
        logic: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Whether the premises entail the conclusion.
    Entail {
        #[arg(long)]
        logic: String,
        /// Comma-separated premises.
        #[arg(long, default_value = "")]
        premises: String,
        #[arg(long)]
        conclusion: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Entailment in a variable-inclusion companion of a matrix.
    Companion {
        #[arg(long)]
        base: String,
        /// left, pure_left, right or pure_right.
        #[arg(long)]
        mode: String,
        #[arg(long, default_value = "")]
        premises: String,
        #[arg(long)]
        conclusion: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search small finite structures for a separation.
    Mine {
        /// Requirements as ID=proven|refuted, comma-separated.
        #[arg(long, required_unless_present = "query")]
        require: Option<String>,
        /// A SeparationQuery as JSON; overrides the other flags.
        #[arg(long)]
        query: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_carrier: usize,
        #[arg(long, default_value_t = 1)]
        min_carrier: usize,
        /// Structural conditions: reflexive, monotonic, transitive, monotonic_for_trivial_sets.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        samples: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Maximal complementary pairs of a finite structure.
    Pairs {
        #[arg(long)]
        logic: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Search a one-formula consistency set for a matrix.
    LfiSearch {
        #[arg(long)]
        logic: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value = "¬")]
        negation: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List builtin logics.
    GalleryList {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the theorem battery.
    Battery {
        /// Carrier size: 1 to 3 exhaustive, 4 to 6 sampled.
        #[arg(long, default_value_t = 3)]
        carrier: usize,
        /// Samples for carriers above 3, and for the ECQ sub-battery.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also run the ECQ sub-battery on random (table, unary map) pairs.
        #[arg(long)]
        ecq: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_budget() { 2 } else { 1 }, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = Exec::from_jobs(cli.jobs);
    match run(cli.command, exec) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_logic(source: &str) -> Result<LogicSpecFile, Failure> {
    if source.starts_with("builtin:") {
        Ok(LogicSpecFile::builtin(source)?)
    } else {
        let text = std::fs::read_to_string(source).map_err(|e| Failure { code: 1, message: format!("{source}: {e}") })?;
        Ok(LogicSpecFile::from_json(&text)?)
    }
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
    use std::io::Write;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text => text(),
    };
    match std::io::stdout().lock().write_all(body.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(command: Command, exec: Exec) -> Outcome {
    match command {
        Command::Check { logic, principle, budget, format } => {
            let spec = read_logic(&logic)?;
            let loaded = spec.load()?;
            let principles = PrincipleId::parse_list(&principle)?;
            let budget = budget.budget();
            let checker = Checker::new(&loaded, &budget);
            let mut checks = Vec::new();
            for p in &principles {
                let start = Instant::now();
                let verdict = checker.check(p)?;
                checks.push(CheckEntry { principle: p.clone(), verdict, timing_ms: start.elapsed().as_secs_f64() * 1e3 });
            }
            let report = Report::new(&loaded, ReportInput { logic: spec, principles, budget }, checks);
            emit(format, &report, || render::report(&report))?;
            Ok(if report.checks.iter().any(|c| c.verdict.status == Status::Unknown) { 2 } else { 0 })
        }
        Command::Qn { logic, formula, budget, format } => {
            let loaded = read_logic(&logic)?.load()?;
            let q = qn::quasi_negations(&loaded, &formula, &budget.budget())?;
            emit(format, &q, || render::quasi_negations(&q))?;
            Ok(0)
        }
        Command::Kite { logic, budget, format } => {
            let Logic::Matrix(m) = read_logic(&logic)?.load()? else {
                return Err(Failure { code: 1, message: "the kite laws are checked on matrices".into() });
            };
            let laws = qn::kite(&m, &budget.budget())?;
            emit(format, &laws, || render::kite(&laws))?;
            Ok(0)
        }
        Command::Entail { logic, premises, conclusion, format } => {
            let loaded = read_logic(&logic)?.load()?;
            let holds = loaded.entails(&split_list(&premises), &conclusion)?;
            emit(format, &serde_json::json!({ "logic": loaded.name(), "entails": holds }), || format!("{holds}\n"))?;
            Ok(0)
        }
        Command::Companion { base, mode, premises, conclusion, format } => {
            let Logic::Matrix(m) = read_logic(&base)?.load()? else {
                return Err(Failure { code: 1, message: "companions are built over matrices".into() });
            };
            let mode: CompanionMode = mode.parse()?;
            let logic = Logic::Companion(CompanionLogic::new(m, mode));
            let holds = logic.entails(&split_list(&premises), &conclusion)?;
            emit(format, &serde_json::json!({ "logic": logic.name(), "entails": holds }), || format!("{holds}\n"))?;
            Ok(0)
        }
        Command::Mine { require, query, max_carrier, min_carrier, filter, seed, samples, format } => {
            let q = match query {
                Some(path) => serde_json::from_str::<SeparationQuery>(&std::fs::read_to_string(path)?)?,
                None => {
                    let filters = filter
                        .iter()
                        .map(|f| serde_json::from_value::<Condition>(serde_json::Value::String(f.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    SeparationQuery {
                        require: SeparationQuery::parse_requirements(require.as_deref().unwrap_or_default())?,
                        filters,
                        max_carrier,
                        min_carrier,
                        seed,
                        samples,
                    }
                }
            };
            let result = miner::find_separation(&q, exec)?;
            emit(format, &result, || render::mined(&result))?;
            Ok(if matches!(result, miner::MineResult::Unknown { .. }) { 2 } else { 0 })
        }
        Command::Pairs { logic, format } => {
            let Logic::Finite(s) = read_logic(&logic)?.load()? else {
                return Err(Failure { code: 1, message: "maximal pairs are computed on finite structures".into() });
            };
            let r = paracon::partial::report(&s)?;
            emit(format, &r, || render::pairs(&r))?;
            Ok(0)
        }
        Command::LfiSearch { logic, depth, negation, format } => {
            let Logic::Matrix(m) = read_logic(&logic)?.load()? else {
                return Err(Failure { code: 1, message: "consistency sets are searched on matrices".into() });
            };
            if depth > 4 {
                return Err(Failure { code: 1, message: "depth is limited to 4".into() });
            }
            let neg = m.signature().require(&negation)?;
            let found = lfi::find_consistency_set(&m, neg, depth)?.map(|f| f.display(m.signature()).to_string());
            emit(format, &serde_json::json!({ "logic": m.name(), "consistency_set": found }), || match &found {
                Some(f) => format!("○(p) = {{{f}}}\n"),
                None => format!("no one-formula consistency set up to depth {depth}\n"),
            })?;
            Ok(0)
        }
        Command::GalleryList { format } => {
            let list = gallery::list();
            emit(format, &list, || render::gallery(list))?;
            Ok(0)
        }
        Command::Battery { carrier, samples, seed, ecq, format } => {
            let mut reports = Vec::new();
            reports.push(match carrier {
                1..=3 => battery::exhaustive(carrier, exec),
                4..=6 => battery::sampled(carrier, samples, seed, exec),
                _ => return Err(Failure { code: 1, message: "carrier must be between 1 and 6".into() }),
            });
            if ecq {
                reports.push(battery::ecq_sampled(carrier.min(3), samples, seed, exec));
            }
            emit(format, &reports, || reports.iter().map(render::battery).collect())?;
            Ok(0)
        }
    }
}
