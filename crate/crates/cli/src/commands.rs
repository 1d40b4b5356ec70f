//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage, parse or
//! domain errors.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use jlring::decomp::{to_irreducible_basis, to_standard_basis};
use jlring::fait::Fait;
use jlring::{
    leq, segment_support_provider, Basis, Multisegment, OrderCertificate, TransferContext,
    VirtualRep,
};
use serde_json::{json, Value};

use crate::expr::{parse_expr, ParseError};
use crate::report::{CertificateEntry, Check, Report};
use crate::scenario::Scenario;
use crate::suites::{default_max_degree, run_suite, UnknownSuite};

#[derive(Debug, Parser)]
#[command(
    name = "jlring",
    version,
    about = "Grothendieck rings of GL(n,F) and GL(r,D) with the Jacquet-Langlands transfer"
)]
struct Cli {
    /// Scenario JSON file (default: d = 2, one family rho with p = 1, s = 2)
    #[arg(long, global = true, value_name = "FILE")]
    scenario: Option<PathBuf>,
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide A <= B and print a chain of elementary operations
    Order {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Product of two standard-basis elements
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Comultiplication
    Comul {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Aubert involution, slice by slice
    Dual {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Transfer from the inner form to GL(n,F)
    Jl {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Transfer from GL(n,F) to the inner form
    Lj {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rewrite a standard-basis element in the irreducible basis
    Decompose {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rewrite an irreducible-basis element in the standard basis
    Express {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Run a property suite: hopf, involution, transfer, order, conjecture, weyl
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "N")]
        max_degree: Option<u64>,
    },
    /// Run the quaternion counterexample to the converse of order monotonicity
    Fait,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum CliError {
    Parse { input: String, error: ParseError },
    Domain(jlring::Error),
    Suite(UnknownSuite),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { input, error } => write!(f, "{error}\n  in: {input}"),
            CliError::Domain(e) => write!(f, "error: {e}"),
            CliError::Suite(e) => write!(f, "error: {e}"),
            CliError::Usage(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<jlring::Error> for CliError {
    fn from(e: jlring::Error) -> Self {
        CliError::Domain(e)
    }
}

/// Runs the command line `args` (program name first) and captures its output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let scenario = match &cli.scenario {
        Some(path) => match Scenario::load(path) {
            Ok(s) => s,
            Err(e) => return failure(e.to_string()),
        },
        None => Scenario::default(),
    };
    match execute(&cli.command, &scenario) {
        Ok(report) => Outcome {
            code: exit_code(&report),
            stdout: if cli.json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(e) => failure(e.to_string()),
    }
}

fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn failure(message: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("{message}\n"),
    }
}

fn parse(input: &str, scenario: &Scenario) -> Result<VirtualRep, CliError> {
    parse_expr(input, scenario.ctx()).map_err(|error| CliError::Parse {
        input: input.to_string(),
        error,
    })
}

fn single_key(x: &VirtualRep, input: &str) -> Result<Multisegment, CliError> {
    match x.terms().iter().next() {
        Some((ms, 1)) if x.len() == 1 => Ok(ms.clone()),
        _ => Err(CliError::Usage(format!(
            "`{input}` is not a single multisegment such as Std(rho[0..1])"
        ))),
    }
}

fn standard(x: &VirtualRep) -> Result<VirtualRep, CliError> {
    Ok(match x.basis() {
        Basis::Standard => x.clone(),
        Basis::Irreducible => to_standard_basis(x, &segment_support_provider())?,
    })
}

fn certificate_entries(cert: &OrderCertificate) -> Vec<CertificateEntry> {
    cert.steps
        .iter()
        .map(|s| CertificateEntry {
            pair: [s.pair.0.to_string(), s.pair.1.to_string()],
            result: s.result.to_string(),
        })
        .collect()
}

fn check(property: impl Into<String>, passed: bool) -> Check {
    Check {
        property: property.into(),
        cases: 1,
        passed,
        counterexample: None,
        note: None,
    }
}

fn execute(command: &Command, scenario: &Scenario) -> Result<Report, CliError> {
    let tc = TransferContext::new(scenario.ctx().clone());
    let prov = segment_support_provider();
    let mut report = Report {
        command: String::new(),
        scenario: scenario.spec().clone(),
        inputs: Vec::new(),
        result: Value::Null,
        certificate: None,
        checks: None,
        text: Vec::new(),
    };
    let expression =
        |report: &mut Report,
         name: &str,
         input: &str,
         f: &dyn Fn(&VirtualRep) -> Result<VirtualRep, CliError>| {
            report.command = name.to_string();
            let x = parse(input, scenario)?;
            report.inputs.push(x.to_string());
            let y = f(&x)?;
            report.result = Value::String(y.to_string());
            report.text.push(y.to_string());
            Ok::<(), CliError>(())
        };
    match command {
        Command::Order { a, b } => {
            report.command = "order".into();
            let (x, y) = (parse(a, scenario)?, parse(b, scenario)?);
            report.inputs = vec![x.to_string(), y.to_string()];
            let (ka, kb) = (single_key(&x, a)?, single_key(&y, b)?);
            let (related, cert) = leq(&ka, &kb)?;
            report.result = Value::Bool(related);
            report.text.push(related.to_string());
            report.certificate = cert.as_ref().map(certificate_entries);
        }
        Command::Mul { a, b } => {
            report.command = "mul".into();
            let (x, y) = (parse(a, scenario)?, parse(b, scenario)?);
            report.inputs = vec![x.to_string(), y.to_string()];
            if x.basis() == Basis::Irreducible || y.basis() == Basis::Irreducible {
                return Err(CliError::Usage(
                    "products are defined on the standard basis; Irr(...) factors are rejected"
                        .into(),
                ));
            }
            let z = x.mul(&y)?;
            report.result = Value::String(z.to_string());
            report.text.push(z.to_string());
        }
        Command::Comul { a } => {
            report.command = "comul".into();
            let x = parse(a, scenario)?;
            report.inputs.push(x.to_string());
            let c = standard(&x)?.comult()?;
            report.result = Value::String(c.to_string());
            report.text.push(c.to_string());
        }
        Command::Dual { a } => expression(&mut report, "dual", a, &|x| {
            Ok(match x.basis() {
                Basis::Standard => x.aubert_graded()?,
                Basis::Irreducible => to_irreducible_basis(&standard(x)?.aubert_graded()?, &prov)?,
            })
        })?,
        Command::Jl { a } => expression(&mut report, "jl", a, &|x| Ok(tc.jl(&standard(x)?)?))?,
        Command::Lj { a } => expression(&mut report, "lj", a, &|x| Ok(tc.lj(&standard(x)?)?))?,
        Command::Decompose { a } => expression(&mut report, "decompose", a, &|x| {
            Ok(to_irreducible_basis(x, &prov)?)
        })?,
        Command::Express { a } => expression(&mut report, "express", a, &|x| {
            Ok(to_standard_basis(x, &prov)?)
        })?,
        Command::Check {
            suite,
            seed,
            max_degree,
        } => {
            report.command = "check".into();
            let n = max_degree.unwrap_or_else(|| default_max_degree(suite));
            if n == 0 {
                return Err(CliError::Usage("--max-degree must be positive".into()));
            }
            report.inputs = vec![
                format!("suite={suite}"),
                format!("seed={seed}"),
                format!("max_degree={n}"),
            ];
            let checks = run_suite(suite, scenario, *seed, n).map_err(CliError::Suite)?;
            let passed = checks.iter().all(|c| c.passed);
            report.result =
                json!({ "suite": suite, "seed": seed, "max_degree": n, "passed": passed });
            report
                .text
                .push(format!("suite {suite} (seed {seed}, max degree {n})"));
            report.checks = Some(checks);
        }
        Command::Fait => fait(&mut report)?,
    }
    Ok(report)
}

fn fait(report: &mut Report) -> Result<(), CliError> {
    report.command = "fait".into();
    let fait = Fait::new();
    let tc = TransferContext::new(fait.ctx.clone());
    let std = |ms: &Multisegment| VirtualRep::std(ms.side().expect("nonempty"), ms.clone());
    let jl_a = tc.jl(&std(&fait.a)?)?;
    let jl_b = tc.jl(&std(&fait.b)?)?;
    let ops = fait.a.elementary_ops();
    let (images_related, cert) = leq(&fait.sigma2, &fait.sigma1)?;
    let replayed = cert.as_ref().map(|c| c.replay(&fait.sigma1)).transpose()?;
    let (preimages_related, _) = leq(&fait.b, &fait.a)?;
    let steps = cert.as_ref().map_or(0, |c| c.steps.len());

    report.inputs = vec![std(&fait.a)?.to_string(), std(&fait.b)?.to_string()];
    report.result = json!({
        "a": fait.a.to_string(),
        "b": fait.b.to_string(),
        "jl_a": jl_a.to_string(),
        "jl_b": jl_b.to_string(),
        "elementary_ops_of_a": ops.iter().map(|op| op.result.to_string()).collect::<Vec<_>>(),
        "jl_b_leq_jl_a": images_related,
        "b_leq_a": preimages_related,
    });
    report.text = vec![
        format!("a = {}", fait.a),
        format!("b = {}", fait.b),
        format!("jl(Std(a)) = {jl_a}"),
        format!("jl(Std(b)) = {jl_b}"),
        format!("elementary operations on a: {}", ops.len()),
        format!("jl(b) <= jl(a): {images_related} ({steps} steps)"),
    ];
    report.certificate = cert.as_ref().map(certificate_entries);
    report.checks = Some(vec![
        check("jl(Std(a)) = Std(σ₁)", jl_a == std(&fait.sigma1)?),
        check("jl(Std(b)) = Std(σ₂)", jl_b == std(&fait.sigma2)?),
        check("a has exactly one elementary operation", ops.len() == 1),
        check(
            "σ₂ <= σ₁ with a 4-step certificate replaying σ₁ to σ₂",
            images_related && steps == 4 && replayed.as_ref() == Some(&fait.sigma2),
        ),
        check("b <= a fails", !preimages_related),
    ]);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_checks_exit_with_one() {
        let mut report = Report {
            command: "check".into(),
            scenario: Scenario::default().spec().clone(),
            inputs: vec![],
            result: Value::Null,
            certificate: None,
            checks: Some(vec![check("holds", true)]),
            text: vec![],
        };
        assert_eq!(exit_code(&report), 0);
        report.checks.as_mut().unwrap().push(check("fails", false));
        assert_eq!(exit_code(&report), 1);
        assert!(report.to_text().contains("FAIL fails [1 case]"));
    }

    #[test]
    fn single_key_rejects_combinations() {
        let ctx = Scenario::default();
        let x = parse("2*Std(rho[0..1])", &ctx).unwrap();
        assert!(matches!(
            single_key(&x, "2*Std(rho[0..1])"),
            Err(CliError::Usage(_))
        ));
        let y = parse("Irr(rho[0..1])", &ctx).unwrap();
        assert!(single_key(&y, "Irr(rho[0..1])").is_ok());
    }
}
