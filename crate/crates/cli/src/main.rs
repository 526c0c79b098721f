//! Command-line front end: JSON (or CSV) reports on stdout.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a sweep
//! detects an invariant or theorem violation.

use std::process::ExitCode;

use polyrec::bounds::constants_certificate;
use polyrec::criteria::condition_report;
use polyrec::decompose::{classify, complete_decomposition};
use polyrec::dickson::identity_suite;
use polyrec::harness::run_sweep;
use polyrec::parse::{parse_poly, poly_to_json, spec_from_json_str};
use polyrec::{Poly, RecurrenceSpec};
use serde_json::{json, Value};

const USAGE: &str = "usage: polyrec <command> [options]

commands:
  gen        --spec FILE --n N            n-th term of the recurrence
  decompose  --poly P                     complete decomposition with class tags
  classify   --poly P                     cyclic / dihedral / other
  check      --spec FILE --h P --n N      condition report for (spec, h, n)
  bound      --spec FILE [--degh D]       bound certificate (ledger with --degh)
  sweep      --spec FILE --max-n N [--jobs K] [--csv]
                                          full verification sweep
  identities [--max-n N] [--csv]          Chebyshev/Dickson identity suite

polynomials are written as coefficient arrays ([0, \"3/2\", 1]) or as text
(x^2+3/2*x); spec files are JSON objects with A0, A1, G0, G1 arrays.";

struct Args {
    positional: Vec<String>,
    flags: Vec<(String, Option<String>)>,
}

impl Args {
    fn parse(raw: &[String]) -> Result<Args, String> {
        let mut positional = Vec::new();
        let mut flags = Vec::new();
        let mut it = raw.iter().peekable();
        while let Some(arg) = it.next() {
            if let Some(name) = arg.strip_prefix("--") {
                let takes_value = !matches!(name, "csv");
                if takes_value {
                    let value = it
                        .next()
                        .ok_or_else(|| format!("--{name} expects a value"))?;
                    flags.push((name.to_string(), Some(value.clone())));
                } else {
                    flags.push((name.to_string(), None));
                }
            } else {
                positional.push(arg.clone());
            }
        }
        Ok(Args { positional, flags })
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.flags
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.as_deref())
    }

    fn required(&self, name: &str) -> Result<&str, String> {
        self.value(name)
            .ok_or_else(|| format!("missing required option --{name}"))
    }

    fn has(&self, name: &str) -> bool {
        self.flags.iter().any(|(n, _)| n == name)
    }

    fn usize_value(&self, name: &str) -> Result<usize, String> {
        self.required(name)?
            .parse::<usize>()
            .map_err(|_| format!("--{name} expects a nonnegative integer"))
    }
}

fn load_spec(args: &Args) -> Result<RecurrenceSpec, String> {
    let path = args.required("spec")?;
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    spec_from_json_str(&text).map_err(|e| format!("bad spec {path}: {e}"))
}

fn load_poly(args: &Args, name: &str) -> Result<Poly, String> {
    let text = args.required(name)?;
    parse_poly(text).map_err(|e| format!("bad polynomial for --{name}: {e}"))
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("valid json"));
}

fn run(command: &str, args: &Args) -> Result<ExitCode, String> {
    match command {
        "gen" => {
            let spec = load_spec(args)?;
            let n = args.usize_value("n")?;
            let term = spec.term(n);
            emit(&json!({
                "n": n,
                "coefficients": poly_to_json(&term),
                "text": term.to_string(),
                "degree": term.degree(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        "decompose" => {
            let poly = load_poly(args, "poly")?;
            let dec = complete_decomposition(&poly).map_err(|e| e.to_string())?;
            let chain: Vec<Value> = dec
                .chain
                .iter()
                .map(|(p, tag)| {
                    json!({
                        "coefficients": poly_to_json(p),
                        "text": p.to_string(),
                        "degree": p.degree(),
                        "class": tag.as_str(),
                    })
                })
                .collect();
            emit(&json!({ "input": poly.to_string(), "chain": chain }));
            Ok(ExitCode::SUCCESS)
        }
        "classify" => {
            let poly = load_poly(args, "poly")?;
            let tag = classify(&poly).map_err(|e| e.to_string())?;
            emit(&json!({ "input": poly.to_string(), "class": tag.as_str() }));
            Ok(ExitCode::SUCCESS)
        }
        "check" => {
            let spec = load_spec(args)?;
            let inner = load_poly(args, "h")?;
            let n = args.usize_value("n")?;
            let report = condition_report(&spec, &inner, n).map_err(|e| e.to_string())?;
            emit(&report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        "bound" => {
            let spec = load_spec(args)?;
            let cert = constants_certificate(&spec).map_err(|e| e.to_string())?;
            let mut out = cert.to_json();
            if let Some(raw) = args.value("degh") {
                let deg_h = raw
                    .parse::<u64>()
                    .map_err(|_| "--degh expects a nonnegative integer".to_string())?;
                let ledger = cert.ledger(deg_h).map_err(|e| e.to_string())?;
                out["ledger"] = ledger.to_json();
            }
            emit(&out);
            Ok(ExitCode::SUCCESS)
        }
        "sweep" => {
            let spec = load_spec(args)?;
            let max_n = args.usize_value("max-n")?;
            if max_n < 2 {
                return Err("--max-n must be at least 2".into());
            }
            let jobs = match args.value("jobs") {
                Some(raw) => raw
                    .parse::<usize>()
                    .ok()
                    .filter(|&j| j >= 1)
                    .ok_or_else(|| "--jobs expects a positive integer".to_string())?,
                None => 1,
            };
            let report = run_sweep(&spec, max_n, jobs).map_err(|e| e.to_string())?;
            if args.has("csv") {
                print!("{}", report.to_csv());
            } else {
                emit(&report.to_json());
            }
            if report.has_violation() {
                eprintln!("violation detected: see report");
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        "identities" => {
            let max_n = match args.value("max-n") {
                Some(raw) => raw
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n >= 2)
                    .ok_or_else(|| "--max-n expects an integer >= 2".to_string())?,
                None => 8,
            };
            let reports = identity_suite(max_n);
            let any_fail = reports.iter().any(|r| !r.status.passed());
            if args.has("csv") {
                println!("name,params,status");
                for r in &reports {
                    let status = match &r.status {
                        polyrec::dickson::IdentityStatus::ExactPass => "exact-pass".to_string(),
                        polyrec::dickson::IdentityStatus::NumericPass { max_residual } => {
                            format!("numeric-pass({max_residual:.2e})")
                        }
                        polyrec::dickson::IdentityStatus::Fail => "fail".to_string(),
                    };
                    println!("{},{},{}", r.name, r.params, status);
                }
            } else {
                let arr: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
                emit(&Value::Array(arr));
            }
            if any_fail {
                eprintln!("identity failure detected");
                return Ok(ExitCode::from(2));
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command: {other}\n\n{USAGE}")),
    }
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().skip(1).collect();
    if raw.is_empty() || raw[0] == "--help" || raw[0] == "-h" || raw[0] == "help" {
        println!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    let args = match Args::parse(&raw[1..]) {
        Ok(args) => args,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::FAILURE;
        }
    };
    if !args.positional.is_empty() {
        eprintln!("error: unexpected argument {:?}\n\n{USAGE}", args.positional[0]);
        return ExitCode::FAILURE;
    }
    match run(&raw[0], &args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
