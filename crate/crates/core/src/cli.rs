//! Command-line front end. All results are JSON on standard output; `--verbose`
//! adds a human-readable summary on standard error.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed verification.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bordism::{configurations_json, realizability_json, Configuration};
use crate::classify::{classify_singularities, ParameterInput};
use crate::decompose::decompose;
use crate::diagrams::{AdeType, ExtendedDiagram};
use crate::error::Error;
use crate::roots::{Parameter, RootSystem};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "ade-quiver", version, about = "Singularities of quiver varieties over extended Dynkin quivers")]
struct Cli {
    /// Print a human-readable summary to standard error.
    #[arg(long, global = true)]
    verbose: bool,

    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Diagram type, e.g. E8 or D5.
    #[arg(long = "type")]
    adtype: AdeType,

    /// n comma-separated Gaussian rationals; lambda = (-d . tau, tau).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda", required_unless_present = "lambda")]
    tau: Option<String>,

    /// n + 1 comma-separated Gaussian rationals with lambda . delta = 0.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the roots of a finite ADE system.
    Roots {
        #[arg(long = "type")]
        adtype: AdeType,
        /// Report only the number of roots.
        #[arg(long)]
        count: bool,
    },
    /// Irreducible components of the roots orthogonal to tau.
    Decompose {
        #[arg(long = "type")]
        adtype: AdeType,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
    },
    /// Singular points of the quiver variety at weight lambda.
    Classify(ParamArgs),
    /// Slice quivers at each singular point.
    Slice(ParamArgs),
    /// Realizability of a configuration of singularities over a base type.
    Bordism {
        #[arg(long)]
        base: AdeType,
        /// Comma-separated types, e.g. A2,A1,D4.
        #[arg(long, required_unless_present = "enumerate", allow_hyphen_values = true)]
        parts: Option<String>,
        /// List every realizable configuration instead.
        #[arg(long, conflicts_with = "parts")]
        enumerate: bool,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single check by number.
        #[arg(long)]
        only: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidType(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Reply {
    json: serde_json::Value,
    summary: String,
    code: i32,
}

/// Parses `argv` (including the program name), runs the verb and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let (json, code) = match execute(&cli.verb) {
        Ok(reply) => {
            if cli.verbose {
                let _ = writeln!(err, "{}", reply.summary);
            }
            (reply.json, reply.code)
        }
        Err(Failure::Usage(m)) => (json!({ "error": m }), 1),
        Err(Failure::Domain(m)) => (json!({ "error": m }), 2),
    };
    if cli.verbose && code != 0 {
        let _ = writeln!(err, "error: {}", json.get("error").and_then(|e| e.as_str()).unwrap_or("see output"));
    }
    let text = serde_json::to_string(&json).expect("serializable");
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                let _ = writeln!(err, "cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = writeln!(out, "{text}");
        }
    }
    code
}

fn parse_parameter(args: &ParamArgs) -> Result<ParameterInput, Failure> {
    match (&args.tau, &args.lambda) {
        (Some(t), None) => Ok(ParameterInput::Tau(Parameter::parse_csv(t)?)),
        (None, Some(l)) => Ok(ParameterInput::Lambda(Parameter::parse_csv(l)?)),
        _ => Err(Failure::Usage("exactly one of --tau and --lambda is required".into())),
    }
}

fn parse_types(s: &str) -> Result<Vec<AdeType>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(Failure::from))
        .collect()
}

fn execute(verb: &Verb) -> Result<Reply, Failure> {
    let ok = |json: serde_json::Value, summary: String| Ok(Reply { json, summary, code: 0 });
    match verb {
        Verb::Roots { adtype, count } => {
            let rs = RootSystem::generate(*adtype);
            let n = rs.roots().len();
            if *count {
                ok(json!({ "count": n }), format!("{adtype}: {n} roots"))
            } else {
                ok(
                    json!({ "type": adtype.to_string(), "count": n, "maximal": rs.maximal(), "roots": rs.roots() }),
                    format!("{adtype}: {n} roots, maximal root {:?}", rs.maximal()),
                )
            }
        }
        Verb::Decompose { adtype, tau } => {
            let rs = RootSystem::generate(*adtype);
            let tau = Parameter::parse_csv(tau)?;
            let d = decompose(&rs, &tau)?;
            let summary = format!("{} orthogonal roots; components {:?}", d.slice.roots.len(), type_names(&d.types()));
            ok(d.to_json(), summary)
        }
        Verb::Classify(args) => {
            let ed = ExtendedDiagram::of_type(args.adtype);
            let lambda = parse_parameter(args)?.resolve(&ed)?;
            let c = classify_singularities(&ed, &lambda)?;
            let summary = format!("lambda = ({lambda}); singular points {:?}", type_names(&c.types()));
            ok(c.to_json(), summary)
        }
        Verb::Slice(args) => {
            let ed = ExtendedDiagram::of_type(args.adtype);
            let lambda = parse_parameter(args)?.resolve(&ed)?;
            let c = classify_singularities(&ed, &lambda)?;
            let slices: Vec<_> = c.singular_points.iter().map(|p| p.slice.to_json()).collect();
            let summary = format!("{} slice quivers", slices.len());
            ok(json!({ "lambda": lambda.to_strings(), "slices": slices }), summary)
        }
        Verb::Bordism { base, parts, enumerate } => {
            if *enumerate {
                let json = configurations_json(*base);
                let summary = format!("{} configurations over {base}", json["configurations"].as_array().map_or(0, Vec::len));
                return ok(json, summary);
            }
            let parts = parse_types(parts.as_deref().unwrap_or(""))?;
            let cfg = Configuration::new(*base, parts);
            let json = realizability_json(&cfg);
            let summary = format!("{base} with {:?}: realizable = {}", type_names(&cfg.parts), json["realizable"]);
            ok(json, summary)
        }
        Verb::Verify { seed, only } => {
            let outcomes = match only {
                Some(id) if (1..=verify::check_count()).contains(id) => vec![verify::run(*id, *seed)],
                Some(id) => return Err(Failure::Usage(format!("no check numbered {id}"))),
                None => verify::run_all(*seed),
            };
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let failed = outcomes.len() - passed;
            let checks: Vec<_> = outcomes
                .iter()
                .map(|o| json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail, "seconds": o.seconds }))
                .collect();
            let summary = outcomes
                .iter()
                .map(|o| format!("[{}] {:>2} {} ({:.2}s): {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.name, o.seconds, o.detail))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Reply {
                json: json!({ "passed": passed, "failed": failed, "checks": checks }),
                summary,
                code: if failed == 0 { 0 } else { 3 },
            })
        }
    }
}

fn type_names(types: &[AdeType]) -> Vec<String> {
    types.iter().map(ToString::to_string).collect()
}
