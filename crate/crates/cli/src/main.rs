use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lefschetz_core::props::{
    analyze, gin, has_wlp, is_completely_m_full, is_componentwise_linear, is_m_full, is_stable, m_full_certificate,
    minimal_monomial_generators, AnalyzeOptions, CertificateSummary, GenericityPolicy,
};
use lefschetz_core::{
    betti_table, format_ideal_file, hilbert_function, is_m_primary, parse_ideal_file_over, AlgebraError, FieldSpec,
    Ideal, ModuleTag,
};

use lefschetz_cli::document::{CommandResult, Family, Provenance, ReportDocument, Suite};
use lefschetz_cli::suites::{self, FamilyArgs};
use lefschetz_cli::{render, verify_exit_code};

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Fullness, Lefschetz and Betti computations for graded ideals")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Independent random draws per randomized decision (at least 2).
    #[arg(long, global = true, default_value_t = 3)]
    trials: u32,
    /// Rounds of redrawing before a disagreement is reported.
    #[arg(long, global = true, default_value_t = 5)]
    max_retries: u32,
    /// Field overriding the input file: `Q` or `p=<prime>`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Print the JSON report document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Record wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Skip {
    Gin,
    Betti,
    Cwl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Tag {
    Ideal,
    Quotient,
}

#[derive(Subcommand)]
enum Command {
    /// Every invariant and property of an m-primary ideal.
    Analyze {
        file: String,
        /// Parts to leave out.
        #[arg(long, value_enum, value_delimiter = ',')]
        skip: Vec<Skip>,
    },
    /// Run verification suites on a file or on a random family.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Ideal file; without it a random family is generated.
        file: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Family::Stable)]
        family: Family,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
    },
    /// Graded Betti numbers.
    Betti {
        file: String,
        #[arg(long, value_enum, default_value_t = Tag::Ideal)]
        tag: Tag,
    },
    /// Hilbert function of the quotient.
    Hilbert { file: String },
    /// Generic initial ideal for degree reverse lexicographic order.
    Gin { file: String },
    /// Stability of a monomial ideal.
    Stable { file: String },
    /// m-fullness, with the certificate degrees.
    Mfull { file: String },
    /// Complete m-fullness.
    Cmfull { file: String },
    /// Weak Lefschetz property.
    Wlp { file: String },
    /// Componentwise linearity.
    Cwl { file: String },
    /// Print instance `index` of a random family as an ideal file.
    Gen {
        #[arg(long, value_enum, default_value_t = Family::Stable)]
        family: Family,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "Q" || s == "QQ" {
        return Ok(FieldSpec::rationals());
    }
    let digits = s.strip_prefix("p=").unwrap_or(s);
    let p: u64 = digits.parse().map_err(|_| format!("expected `Q` or `p=<prime>`, got `{s}`"))?;
    FieldSpec::prime(p).map_err(|e| e.to_string())
}

enum Failure {
    Input(String),
    Genericity(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Genericity { .. } => Failure::Genericity(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read_ideal(path: &str, field: Option<&FieldSpec>) -> Result<Ideal, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?
    };
    parse_ideal_file_over(&text, field).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn exponents(gens: &[lefschetz_core::Monomial]) -> Vec<Vec<u32>> {
    gens.iter().map(|m| m.exponents().collect()).collect()
}

fn require_m_primary(ideal: &Ideal) -> Result<(), Failure> {
    if is_m_primary(ideal) {
        Ok(())
    } else {
        Err(Failure::Input("the ideal is not m-primary".into()))
    }
}

/// The report and the exit status of a successful run.
fn execute(cli: &Cli, policy: &GenericityPolicy) -> Result<(Option<Ideal>, &'static str, CommandResult, u8), Failure> {
    let field = cli.global.field.as_ref();
    let read = |path: &str| read_ideal(path, field);
    Ok(match &cli.command {
        Command::Analyze { file, skip } => {
            let ideal = read(file)?;
            require_m_primary(&ideal)?;
            let options = AnalyzeOptions {
                gin: !skip.contains(&Skip::Gin),
                betti: !skip.contains(&Skip::Betti),
                cwl: !skip.contains(&Skip::Cwl),
            };
            let report = analyze(&ideal, policy, options)?;
            (Some(ideal), "analyze", CommandResult::Analyze(report), 0)
        }
        Command::Verify { suite, file, count, family, n, maxdeg } => {
            let (ideal, result) = match file {
                Some(path) => {
                    let ideal = read(path)?;
                    let result = suites::verify_file(&ideal, path, &[*suite], policy);
                    (Some(ideal), result)
                }
                None => {
                    let args = FamilyArgs {
                        family: *family,
                        field: field.cloned().unwrap_or_default(),
                        n: *n,
                        maxdeg: *maxdeg,
                        count: *count,
                    };
                    (None, suites::verify_family(&args, &[*suite], policy)?)
                }
            };
            let code = verify_exit_code(&result.summary);
            (ideal, "verify", CommandResult::Verify(result), code)
        }
        Command::Betti { file, tag } => {
            let ideal = read(file)?;
            let tag = match tag {
                Tag::Ideal => ModuleTag::Ideal,
                Tag::Quotient => ModuleTag::Quotient,
            };
            let table = betti_table(&ideal, tag)?;
            (Some(ideal), "betti", CommandResult::Betti(table), 0)
        }
        Command::Hilbert { file } => {
            let ideal = read(file)?;
            let h = hilbert_function(&ideal)?;
            (Some(ideal), "hilbert", CommandResult::Hilbert(h), 0)
        }
        Command::Gin { file } => {
            let ideal = read(file)?;
            let j = gin(&ideal, policy)?;
            let result = CommandResult::Gin { generators: exponents(&minimal_monomial_generators(&j)?), stable: is_stable(&j)? };
            (Some(ideal), "gin", result, 0)
        }
        Command::Stable { file } => {
            let ideal = read(file)?;
            let result = CommandResult::Stable {
                generators: exponents(&minimal_monomial_generators(&ideal)?),
                stable: is_stable(&ideal)?,
            };
            (Some(ideal), "stable", result, 0)
        }
        Command::Mfull { file } => {
            let ideal = read(file)?;
            let outcome = is_m_full(&ideal, policy)?;
            let certificate = match &outcome.witness {
                Some(x) if is_m_primary(&ideal) => Some(CertificateSummary::new(&ideal, &m_full_certificate(&ideal, x)?)),
                _ => None,
            };
            (Some(ideal), "mfull", CommandResult::MFull { decision: outcome.decision, certificate }, 0)
        }
        Command::Cmfull { file } => {
            let ideal = read(file)?;
            let decision = is_completely_m_full(&ideal, policy)?;
            (Some(ideal), "cmfull", CommandResult::CompletelyMFull { decision }, 0)
        }
        Command::Wlp { file } => {
            let ideal = read(file)?;
            require_m_primary(&ideal)?;
            let outcome = has_wlp(&ideal, policy)?;
            let witness = outcome.witness.map(|l| l.to_polynomial(ideal.ring()).to_string());
            (Some(ideal), "wlp", CommandResult::Wlp { decision: outcome.decision, witness }, 0)
        }
        Command::Cwl { file } => {
            let ideal = read(file)?;
            let value = is_componentwise_linear(&ideal)?;
            (Some(ideal), "cwl", CommandResult::ComponentwiseLinear { value }, 0)
        }
        Command::Gen { family, n, maxdeg, index } => {
            let field = field.cloned().unwrap_or_default();
            let ideal = suites::family_instance(*family, &field, *n, *maxdeg, policy.seed, *index)?;
            let result = CommandResult::Gen { ideal: ideal.summary(), text: format_ideal_file(&ideal) };
            (None, "gen", result, 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let policy = match GenericityPolicy::new(cli.global.trials, cli.global.max_retries, cli.global.seed) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let (ideal, command, result, code) = match execute(&cli, &policy) {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Genericity(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let doc = ReportDocument {
        tool: "lefschetz".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.into(),
        provenance: Provenance {
            seed: cli.global.seed,
            policy,
            field: ideal.as_ref().map(|i| i.ring().field().clone()).or_else(|| cli.global.field.clone()),
            elapsed_ms: cli.global.timings.then(|| start.elapsed().as_millis() as u64),
        },
        input: ideal.as_ref().map(Ideal::summary),
        result,
    };
    if cli.global.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("report documents serialize"));
    } else {
        print!("{}", render::render(&doc));
    }
    if code == 1 {
        eprintln!("error: an asserted relation failed");
    } else if code == 3 {
        eprintln!("error: random draws kept disagreeing");
    }
    ExitCode::from(code)
}
