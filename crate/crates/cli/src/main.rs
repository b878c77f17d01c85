//! Command-line frontend: batch satisfaction checks, entailment and
//! equivalence queries, belief-family dumps, and law reports.
//!
//! Exit codes are a stable contract: 0 when the queried property holds,
//! 1 when it does not, 2 on any error (bad files, parse errors, scope
//! violations, exceeded caps).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use teamlog::{
    check_laws, entails, equivalent, load_structure, load_team, parse, Evaluator, LawReport,
    Scope, Structure, SymmetricDifference, Team, TeamFormula, TeamSpace, Theory, UpdateKind,
    UpdateOperator, Witness, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "teamlog", version, about = "Team-semantics model checker and entailment engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Model file (JSON).
    #[arg(long)]
    model: PathBuf,
    /// Enumeration cap on assignments; defaults to TEAMLOG_CAP or 4096.
    #[arg(long)]
    cap: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a team satisfies a formula.
    Check {
        #[command(flatten)]
        common: Common,
        /// Team file (JSON); its vars are the scope.
        #[arg(long)]
        team: PathBuf,
        /// Formula text (repeatable; the team must satisfy all).
        #[arg(long)]
        formula: Vec<String>,
        /// File containing one formula (repeatable).
        #[arg(long)]
        formula_file: Vec<PathBuf>,
    },
    /// Decide whether every team satisfying the left theory satisfies the
    /// right theory.
    Entail {
        #[command(flatten)]
        common: Common,
        /// Scope variables, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Premise formula (repeatable).
        #[arg(long)]
        lhs: Vec<String>,
        #[arg(long)]
        lhs_file: Vec<PathBuf>,
        /// Conclusion formula (repeatable).
        #[arg(long)]
        rhs: Vec<String>,
        #[arg(long)]
        rhs_file: Vec<PathBuf>,
    },
    /// Decide whether two formulas have the same satisfying teams.
    Equiv {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// List every team satisfying the formulas, as a JSON array in
    /// canonical order.
    Bel {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long)]
        formula: Vec<String>,
        #[arg(long)]
        formula_file: Vec<PathBuf>,
    },
    /// Check idempotence, associativity, and monotonicity of an update
    /// operator over the team space of the given scope.
    Laws {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, value_enum)]
        operator: OperatorName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OperatorName {
    Oplus,
    Otimes,
    Ominus,
    Odot,
    Symdiff,
}

impl OperatorName {
    fn instantiate(self) -> Box<dyn UpdateOperator> {
        match self {
            OperatorName::Oplus => Box::new(UpdateKind::Confident),
            OperatorName::Otimes => Box::new(UpdateKind::Credulous),
            OperatorName::Ominus => Box::new(UpdateKind::Skeptical),
            OperatorName::Odot => Box::new(UpdateKind::Openminded),
            OperatorName::Symdiff => Box::new(SymmetricDifference),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(holds) => {
            if holds {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cap_from(common: &Common) -> Result<u64, String> {
    if let Some(cap) = common.cap {
        return Ok(cap);
    }
    match std::env::var("TEAMLOG_CAP") {
        Ok(value) => value
            .parse()
            .map_err(|_| format!("TEAMLOG_CAP is not a number: {value}")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn load_formulas(texts: &[String], files: &[PathBuf]) -> Result<Vec<TeamFormula>, String> {
    let mut out = Vec::new();
    for text in texts {
        out.push(parse(text).map_err(|e| format!("in formula '{text}': {e}"))?);
    }
    for path in files {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let trimmed = text.trim();
        out.push(parse(trimmed).map_err(|e| format!("in {}: {e}", path.display()))?);
    }
    if out.is_empty() {
        return Err("no formula given (use --formula or --formula-file)".to_string());
    }
    Ok(out)
}

fn team_text(team: &Team, structure: &Structure) -> String {
    let data = team.to_data(structure);
    let rows = if data.rows.is_empty() {
        "(no rows)".to_string()
    } else {
        data.rows
            .iter()
            .map(|r| format!("({})", r.join(", ")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("vars [{}]: {rows}", data.vars.join(", "))
}

fn team_json(team: &Team, structure: &Structure) -> serde_json::Value {
    serde_json::to_value(team.to_data(structure)).expect("team serializes")
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Check {
            common,
            team,
            formula,
            formula_file,
        } => {
            let cap = cap_from(&common)?;
            let structure = load_structure(&common.model).map_err(|e| e.to_string())?;
            let team = load_team(&team, &structure).map_err(|e| e.to_string())?;
            let formulas = load_formulas(&formula, &formula_file)?;
            let mut evaluator = Evaluator::new(&structure, cap);
            let mut holds = true;
            let mut witness = None;
            for f in &formulas {
                let verdict = evaluator.evaluate(&team, f).map_err(|e| e.to_string())?;
                if !verdict.holds {
                    holds = false;
                }
                if witness.is_none() {
                    witness = verdict.witness;
                }
            }
            match common.format {
                Format::Text => {
                    println!("verdict: {}", if holds { "holds" } else { "does not hold" });
                    match &witness {
                        Some(Witness::Split { left, right }) => {
                            println!("witness split:");
                            println!("  left:  {}", team_text(left, &structure));
                            println!("  right: {}", team_text(right, &structure));
                        }
                        Some(Witness::Team(t)) => {
                            println!("witness team: {}", team_text(t, &structure));
                        }
                        None => {}
                    }
                }
                Format::Json => {
                    let witness_json = match &witness {
                        Some(Witness::Split { left, right }) => serde_json::json!({
                            "kind": "split",
                            "left": team_json(left, &structure),
                            "right": team_json(right, &structure),
                        }),
                        Some(Witness::Team(t)) => serde_json::json!({
                            "kind": "team",
                            "team": team_json(t, &structure),
                        }),
                        None => serde_json::Value::Null,
                    };
                    println!(
                        "{}",
                        serde_json::json!({ "holds": holds, "witness": witness_json })
                    );
                }
            }
            Ok(holds)
        }
        Command::Entail {
            common,
            vars,
            lhs,
            lhs_file,
            rhs,
            rhs_file,
        } => {
            let cap = cap_from(&common)?;
            let structure = load_structure(&common.model).map_err(|e| e.to_string())?;
            let premise =
                Theory::new(load_formulas(&lhs, &lhs_file)?).map_err(|e| e.to_string())?;
            let conclusion =
                Theory::new(load_formulas(&rhs, &rhs_file)?).map_err(|e| e.to_string())?;
            let scope = Scope::new(vars);
            let result = entails(&structure, &premise, &conclusion, &scope, cap)
                .map_err(|e| e.to_string())?;
            print_entailment(
                &structure,
                common.format,
                result.holds,
                "entails",
                "does not entail",
                result.counterexample.as_ref(),
                result.teams_examined,
            );
            Ok(result.holds)
        }
        Command::Equiv {
            common,
            vars,
            lhs,
            rhs,
        } => {
            let cap = cap_from(&common)?;
            let structure = load_structure(&common.model).map_err(|e| e.to_string())?;
            let left = parse(&lhs).map_err(|e| format!("in --lhs: {e}"))?;
            let right = parse(&rhs).map_err(|e| format!("in --rhs: {e}"))?;
            let scope = Scope::new(vars);
            let result =
                equivalent(&structure, &left, &right, &scope, cap).map_err(|e| e.to_string())?;
            print_entailment(
                &structure,
                common.format,
                result.holds,
                "equivalent",
                "not equivalent",
                result.counterexample.as_ref(),
                result.teams_examined,
            );
            Ok(result.holds)
        }
        Command::Bel {
            common,
            vars,
            formula,
            formula_file,
        } => {
            let cap = cap_from(&common)?;
            let structure = load_structure(&common.model).map_err(|e| e.to_string())?;
            let theory =
                Theory::new(load_formulas(&formula, &formula_file)?).map_err(|e| e.to_string())?;
            let scope = Scope::new(vars);
            let teams =
                teamlog::bel(&structure, &theory, &scope, cap).map_err(|e| e.to_string())?;
            let data: Vec<serde_json::Value> =
                teams.iter().map(|t| team_json(t, &structure)).collect();
            println!(
                "{}",
                serde_json::to_string(&data).expect("teams serialize")
            );
            Ok(true)
        }
        Command::Laws {
            common,
            vars,
            operator,
        } => {
            let cap = cap_from(&common)?;
            let structure = load_structure(&common.model).map_err(|e| e.to_string())?;
            let space = TeamSpace::new(&structure, Scope::new(vars), cap);
            let op = operator.instantiate();
            let reports = check_laws(op.as_ref(), &space).map_err(|e| e.to_string())?;
            let all_passed = reports.iter().all(|r| r.passed);
            match common.format {
                Format::Text => {
                    println!("operator: {}", op.name());
                    for report in &reports {
                        print_law_text(report, &structure);
                    }
                }
                Format::Json => {
                    let rendered: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "law": r.law.name(),
                                "passed": r.passed,
                                "counterexample": r.counterexample.as_ref().map(|teams| {
                                    teams
                                        .iter()
                                        .map(|t| team_json(t, &structure))
                                        .collect::<Vec<_>>()
                                }),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({ "operator": op.name(), "laws": rendered })
                    );
                }
            }
            Ok(all_passed)
        }
    }
}

fn print_law_text(report: &LawReport, structure: &Structure) {
    if report.passed {
        println!("{}: pass", report.law.name());
    } else {
        println!("{}: FAIL", report.law.name());
        if let Some(teams) = &report.counterexample {
            for (i, team) in teams.iter().enumerate() {
                println!("  counterexample[{i}]: {}", team_text(team, structure));
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn print_entailment(
    structure: &Structure,
    format: Format,
    holds: bool,
    yes: &str,
    no: &str,
    counterexample: Option<&Team>,
    examined: u64,
) {
    match format {
        Format::Text => {
            println!("verdict: {}", if holds { yes } else { no });
            if let Some(team) = counterexample {
                // The team-file JSON form, directly loadable by `check`.
                println!(
                    "counterexample: {}",
                    serde_json::to_string(&team.to_data(structure)).expect("team serializes")
                );
            }
            println!("teams examined: {examined}");
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "holds": holds,
                    "counterexample": counterexample.map(|t| team_json(t, structure)),
                    "teams_examined": examined,
                })
            );
        }
    }
}
