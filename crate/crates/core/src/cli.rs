//! The `algcheck` command line.
//!
//! [`run`] takes the argument list and returns the exit code with the text
//! meant for stdout and stderr, so the whole surface is testable in-process.
//! Exit codes: 0 when every check passes, 1 when an axiom or hypothesis
//! fails, 2 for parse, shape and usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::EvenLinearMap;
use crate::axioms::check_structure;
use crate::constructions::{self, Construction, Parameters};
use crate::document::{parse_document_with_bound, serialize_document, AlgebraDocument};
use crate::error::Error;
use crate::grading::DEFAULT_GROUP_BOUND;
use crate::operators::{check_operator_scoped, OperatorClaim, OperatorKind, Product, ProductScope};
use crate::scalar::{format_scalar, parse_scalar, Scalar};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "algcheck",
    version,
    about = "Check Hom-Poisson color algebras given by structure constants"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest accepted grading group order.
    #[arg(long, global = true, env = "ALGCHECK_GROUP_BOUND", default_value_t = DEFAULT_GROUP_BOUND)]
    group_bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductArg {
    Mu,
    Bracket,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every applicable axiom check.
    Validate {
        file: PathBuf,
        /// Also require epsilon-commutativity of mu.
        #[arg(long)]
        commutative: bool,
    },
    /// Check a named operator of the document.
    CheckOperator {
        file: PathBuf,
        #[arg(long)]
        name: String,
        /// centroid, averaging, rota-baxter or nijenhuis.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 0)]
        power: u32,
        #[arg(long, default_value = "0")]
        weight: String,
        /// Check a single product instead of all present ones.
        #[arg(long, value_enum)]
        product: Option<ProductArg>,
    },
    /// Apply a construction and re-certify the result.
    Twist {
        file: PathBuf,
        #[arg(long)]
        construction: String,
        /// Name of the operator (or bijection) in the document.
        #[arg(long)]
        operator: Option<String>,
        /// Name of the multiplier table in the document.
        #[arg(long)]
        multiplier: Option<String>,
        #[arg(long, default_value = "0")]
        weight: String,
        #[arg(long, default_value_t = 0)]
        power: u32,
        /// Coefficients of xi, comma separated.
        #[arg(long)]
        xi: Option<String>,
        /// The commutative factor A of a tensor product.
        #[arg(long = "with")]
        with: Option<PathBuf>,
        /// Operators to re-check as endomorphisms after a multiplier twist.
        #[arg(long)]
        endomorphism: Vec<String>,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Tensor a commutative algebra A with a Hom-Poisson algebra P.
    Tensor {
        file_a: PathBuf,
        file_p: PathBuf,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Print every violation of every applicable axiom.
    Report {
        file: PathBuf,
        #[arg(long)]
        commutative: bool,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Env {
    json: bool,
    bound: u64,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let env = Env {
        json: cli.json,
        bound: cli.group_bound,
    };
    let result = match cli.command {
        Command::Validate { file, commutative } => cmd_validate(&env, &file, commutative, false),
        Command::Report { file, commutative } => cmd_validate(&env, &file, commutative, true),
        Command::CheckOperator {
            file,
            name,
            kind,
            power,
            weight,
            product,
        } => cmd_check_operator(&env, &file, &name, &kind, power, &weight, product),
        Command::Twist {
            file,
            construction,
            operator,
            multiplier,
            weight,
            power,
            xi,
            with,
            endomorphism,
            output,
        } => {
            let params = TwistParams {
                operator,
                multiplier,
                weight,
                power,
                xi,
                with,
                endomorphisms: endomorphism,
            };
            cmd_twist(&env, &file, &construction, &params, &output)
        }
        Command::Tensor {
            file_a,
            file_p,
            output,
        } => {
            let params = TwistParams {
                with: Some(file_a),
                weight: "0".into(),
                ..TwistParams::default()
            };
            cmd_twist(&env, &file_p, "tensor", &params, &output)
        }
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn load(env: &Env, path: &Path) -> Result<AlgebraDocument, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::usage(format!("{}: cannot read file: {e}", path.display())))?;
    parse_document_with_bound(&text, env.bound)
        .map_err(|d| Outcome::usage(format!("{}: {d}", path.display())))
}

fn scalar_arg(flag: &str, text: &str) -> Result<Scalar, Outcome> {
    parse_scalar(text).map_err(|e| Outcome::usage(format!("--{flag}: {e}")))
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn code_for(holds: bool) -> i32 {
    if holds {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn json_out(code: i32, v: &Value) -> Outcome {
    Outcome {
        code,
        stdout: format!("{}\n", serde_json::to_string_pretty(v).expect("json")),
        stderr: String::new(),
    }
}

// Gate failures exit 1 with their report; everything else is a usage error.
fn error_outcome(env: &Env, e: Error) -> Outcome {
    match e {
        Error::Gate { gate, report } => {
            if env.json {
                json_out(
                    EXIT_FAIL,
                    &json!({ "gate": gate, "holds": false, "report": report.to_json() }),
                )
            } else {
                Outcome {
                    code: EXIT_FAIL,
                    stdout: format!("gate {gate}: FAIL\n{}", report.summary()),
                    stderr: String::new(),
                }
            }
        }
        Error::Singular => Outcome {
            code: EXIT_FAIL,
            stdout: String::new(),
            stderr: "hypothesis failed: the map is not invertible\n".into(),
        },
        other => Outcome::usage(format!("error: {other}")),
    }
}

fn cmd_validate(env: &Env, file: &Path, commutative: bool, full: bool) -> CmdResult {
    let doc = load(env, file)?;
    let a = &doc.algebra;
    let mut report = a
        .factor()
        .validate(a.group())
        .map_err(|e| error_outcome(env, e))?;
    report.extend(check_structure(a, commutative).map_err(|e| error_outcome(env, e))?);
    let code = code_for(report.holds());
    if env.json {
        return Ok(json_out(
            code,
            &json!({ "name": doc.name, "holds": report.holds(), "report": report.to_json() }),
        ));
    }
    let mut out = format!(
        "algebra {} (dimension {}, group {})\n",
        doc.name,
        a.dim(),
        a.group()
    );
    out.push_str(&if full {
        report.full_dump()
    } else {
        report.summary()
    });
    let _ = writeln!(out, "verdict: {}", verdict(report.holds()));
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn operator<'d>(doc: &'d AlgebraDocument, name: &str) -> Result<&'d EvenLinearMap, Outcome> {
    doc.operators.get(name).ok_or_else(|| {
        let known: Vec<&str> = doc.operators.keys().map(String::as_str).collect();
        Outcome::usage(format!(
            "unknown operator {name:?}; the document has [{}]",
            known.join(", ")
        ))
    })
}

fn cmd_check_operator(
    env: &Env,
    file: &Path,
    name: &str,
    kind: &str,
    power: u32,
    weight: &str,
    product: Option<ProductArg>,
) -> CmdResult {
    let doc = load(env, file)?;
    let map = operator(&doc, name)?.clone();
    let kind: OperatorKind = kind
        .parse()
        .map_err(|e: Error| Outcome::usage(e.to_string()))?;
    let weight = scalar_arg("weight", weight)?;
    let claim = OperatorClaim {
        map,
        kind,
        power,
        weight,
    };
    let scope = match product {
        None => ProductScope::All,
        Some(ProductArg::Mu) => ProductScope::Only(Product::Mu),
        Some(ProductArg::Bracket) => ProductScope::Only(Product::Bracket),
    };
    let report =
        check_operator_scoped(&doc.algebra, &claim, scope).map_err(|e| error_outcome(env, e))?;
    let code = code_for(report.holds());
    if env.json {
        return Ok(json_out(
            code,
            &json!({
                "operator": name,
                "kind": kind.label(),
                "power": power,
                "weight": format_scalar(&claim.weight),
                "holds": report.holds(),
                "report": report.to_json(),
            }),
        ));
    }
    let mut out = format!("operator {name} as {kind}\n");
    out.push_str(&report.summary());
    let _ = writeln!(out, "verdict: {}", verdict(report.holds()));
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

#[derive(Debug, Default)]
struct TwistParams {
    operator: Option<String>,
    multiplier: Option<String>,
    weight: String,
    power: u32,
    xi: Option<String>,
    with: Option<PathBuf>,
    endomorphisms: Vec<String>,
}

fn build(
    env: &Env,
    doc: &AlgebraDocument,
    name: &str,
    params: &TwistParams,
) -> Result<Construction, Outcome> {
    let mut p = Parameters {
        weight: scalar_arg("weight", &params.weight)?,
        power: params.power,
        ..Parameters::default()
    };
    if let Some(n) = &params.operator {
        p.operator = Some(operator(doc, n)?.clone());
    }
    if let Some(key) = &params.multiplier {
        let s = doc
            .multipliers
            .get(key)
            .ok_or_else(|| Outcome::usage(format!("unknown multiplier {key:?}")))?;
        p.multiplier = Some(s.clone());
    }
    if let Some(text) = &params.xi {
        p.xi = Some(
            text.split(',')
                .map(|t| scalar_arg("xi", t.trim()))
                .collect::<Result<_, _>>()?,
        );
    }
    if let Some(path) = &params.with {
        p.with = Some(load(env, path)?.algebra);
    }
    for n in &params.endomorphisms {
        p.endomorphisms.push((n.clone(), operator(doc, n)?.clone()));
    }
    constructions::apply(name, &doc.algebra, &p).map_err(|e| error_outcome(env, e))
}

/// The output document: the new algebra, the input's operators and
/// multipliers when they still fit, and the evidence in `metadata`.
fn output_document(doc: &AlgebraDocument, c: &Construction) -> AlgebraDocument {
    let mut out = AlgebraDocument::new(format!("{} / {}", doc.name, c.name), c.algebra.clone());
    if c.algebra.dim() == doc.algebra.dim() {
        for (k, m) in &doc.operators {
            if let Ok(m) = c.algebra.even_map(m.matrix().clone()) {
                out.operators.insert(k.clone(), m);
            }
        }
        out.multipliers = doc.multipliers.clone();
    }
    for (k, v) in &doc.metadata {
        out.metadata.insert(format!("input.{k}"), v.clone());
    }
    out.metadata.insert("construction".into(), c.name.clone());
    out.metadata.insert(
        "certification".into(),
        verdict(c.certified()).to_lowercase(),
    );
    out.metadata
        .insert("certification.report".into(), c.certification.summary());
    for (label, r) in &c.morphisms {
        out.metadata
            .insert(format!("morphism.{label}"), r.summary());
    }
    out
}

fn cmd_twist(env: &Env, file: &Path, name: &str, params: &TwistParams, output: &Path) -> CmdResult {
    if !constructions::NAMES.contains(&name) {
        return Err(Outcome::usage(format!(
            "unknown construction {name:?}; expected one of {}",
            constructions::NAMES.join(", ")
        )));
    }
    let doc = load(env, file)?;
    let c = build(env, &doc, name, params)?;
    let out_doc = output_document(&doc, &c);
    std::fs::write(output, serialize_document(&out_doc))
        .map_err(|e| Outcome::usage(format!("{}: cannot write: {e}", output.display())))?;
    let code = code_for(c.certified());
    if env.json {
        let morphisms: serde_json::Map<String, Value> = c
            .morphisms
            .iter()
            .map(|(l, r)| (l.clone(), r.to_json()))
            .collect();
        return Ok(json_out(
            code,
            &json!({
                "construction": c.name,
                "output": output.display().to_string(),
                "holds": c.certified(),
                "certification": c.certification.to_json(),
                "morphisms": morphisms,
            }),
        ));
    }
    let mut out = format!("construction {} -> {}\n", c.name, output.display());
    out.push_str(&c.certification.summary());
    for (label, r) in &c.morphisms {
        let _ = writeln!(out, "morphism {label}: {}", verdict(r.holds()));
        if !r.holds() {
            out.push_str(&indent(&r.summary()));
        }
    }
    let _ = writeln!(out, "verdict: {}", verdict(c.certified()));
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
