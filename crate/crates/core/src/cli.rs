//! Command-line front end for the `ggg` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors, 3 when a group enumeration would exceed the budget.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::arcdiag::{build_c_tableau, ctr_composition, enumerate_column_tableaux, ggg, ColumnTableau};
use crate::charlab::{ggg_character, run_suite, InductionMethod, Report, Suite, SuiteConfig};
use crate::error::{Error, Result};
use crate::matgrp::{default_budget, PatternSubgroup};
use crate::partcomb::{green_polynomial, kostka_foulkes, Composition, Partition};
use crate::qpoly::LaurentPoly;
use crate::symfunc::{convert, hl_h, hl_p, hl_ptilde, hl_q, Basis, SymExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HlKind {
    P,
    Q,
    Ptilde,
    H,
}

#[derive(Debug, Parser)]
#[command(name = "ggg", version, about = "Generalized Gelfand-Graev characters of GL_n(F_q)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for group enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for `verify --sample`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include `elapsed_ms` in verification reports.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kostka-Foulkes polynomial K_{μλ}(q).
    Kf {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Green polynomial X^λ_μ(q).
    Green {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// A Hall-Littlewood function expanded in another basis.
    Hl {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum)]
        basis: HlKind,
        /// Target basis: m, e, h, p, s, HL-P, HL-Q, HL-Ptilde or HL-H.
        #[arg(long, default_value = "s")]
        target: Basis,
    },
    /// ctr, C_λ, the arc set ggg(λ) and the pattern of U_ctr(λ′).
    GggData {
        #[arg(long)]
        lambda: Partition,
        /// Also compute Γ_λ on unipotent classes over F_p.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Column tableaux with column lengths α.
    Tableaux {
        #[arg(long)]
        alpha: Composition,
        #[arg(long)]
        nonnesting: bool,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "list_suites")]
    pub suite: Option<Suite>,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    /// Induction method: class-restriction or group-sum.
    #[arg(long, default_value = "class-restriction")]
    pub method: InductionMethod,
    /// Report only this many cases, drawn with `--seed`. Every case is still checked.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long)]
    pub list_suites: bool,
}

/// Runs the CLI on `args` (including the program name), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            if code == EXIT_FAILED {
                let _ = writeln!(err, "verification failed");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let fmt = cli.format;
    let value = match &cli.command {
        Command::Kf { mu, lambda } => return Ok((poly_out(&kostka_foulkes(mu, lambda)?, fmt), EXIT_OK)),
        Command::Green { lambda, mu } => return Ok((poly_out(&green_polynomial(lambda, mu)?, fmt), EXIT_OK)),
        Command::Hl { lambda, basis, target } => {
            let f = match basis {
                HlKind::P => hl_p(lambda),
                HlKind::Q => hl_q(lambda),
                HlKind::Ptilde => hl_ptilde(lambda),
                HlKind::H => hl_h(lambda),
            };
            return Ok((sym_out(&convert(&f, *target)?, fmt), EXIT_OK));
        }
        Command::GggData { lambda, p } => ggg_data(lambda, *p)?,
        Command::Tableaux { alpha, nonnesting } => tableaux(alpha, *nonnesting),
        Command::Verify(args) => return verify(cli, args),
    };
    Ok((render(&value, fmt), EXIT_OK))
}

fn poly_out(f: &LaurentPoly, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(f).expect("serializable")),
        Format::Text => format!("{f}\n"),
        Format::Csv => {
            let mut s = String::from("exponent,coefficient\n");
            let v = serde_json::to_value(f).expect("serializable");
            for (e, c) in v.as_object().expect("map") {
                s.push_str(&format!("{e},{}\n", scalar(c)));
            }
            s
        }
    }
}

fn sym_out(f: &SymExpr, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(f).expect("serializable")),
        Format::Text => format!("{f}\n"),
        Format::Csv => {
            let mut s = String::from("basis,partition,coefficient\n");
            for (la, c) in f.terms() {
                s.push_str(&format!("{},\"{}\",\"{}\"\n", f.basis, la, c));
            }
            s
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(v: &Value, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(v).expect("serializable")),
        Format::Text | Format::Csv => {
            let mut s = String::new();
            flatten("", v, &mut s, fmt == Format::Csv);
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String, csv: bool) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out, csv);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out, csv);
            }
        }
        other => {
            if csv {
                out.push_str(&format!("{prefix},\"{}\"\n", scalar(other).replace('"', "\"\"")));
            } else {
                out.push_str(&format!("{prefix}: {}\n", scalar(other)));
            }
        }
    }
}

fn tableau_json(t: &ColumnTableau) -> Value {
    let sp = t.sp();
    json!({
        "rows": t.rows(),
        "sp": sp.arcs().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
        "nonnesting": sp.is_nonnesting(),
    })
}

fn ggg_data(lambda: &Partition, p: Option<u32>) -> Result<Value> {
    let ctr = ctr_composition(lambda)?;
    let c = build_c_tableau(lambda)?;
    let arcs = ggg(lambda)?;
    let u = PatternSubgroup::ctr(lambda, p.unwrap_or(2))?;
    let mut v = json!({
        "lambda": lambda.parts(),
        "ctr": ctr.parts(),
        "c_tableau": c.rows(),
        "ggg": arcs.arcs().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
        "pattern": u.positions(),
    });
    if let Some(p) = p {
        let gamma = ggg_character(lambda, p, InductionMethod::default(), default_budget())?;
        v["p"] = json!(p);
        v["gamma"] = gamma.to_json()["values"].clone();
    }
    Ok(v)
}

fn tableaux(alpha: &Composition, nonnesting: bool) -> Value {
    let list: Vec<Value> = enumerate_column_tableaux(alpha, nonnesting).iter().map(tableau_json).collect();
    json!({"alpha": alpha.parts(), "nonnesting_only": nonnesting, "count": list.len(), "tableaux": list})
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<(String, i32)> {
    if args.list_suites {
        let rows: Vec<Value> = Suite::ALL
            .iter()
            .map(|s| json!({"criterion": s.criterion(), "suite": s.name(), "description": s.description()}))
            .collect();
        let text = match cli.format {
            Format::Json => format!("{}\n", Value::Array(rows)),
            _ => Suite::ALL.iter().map(|s| format!("{:>2} {:<24} {}\n", s.criterion(), s.name(), s.description())).collect(),
        };
        return Ok((text, EXIT_OK));
    }
    let suite = args.suite.ok_or_else(|| Error::Invalid("--suite is required".into()))?;
    let cfg = SuiteConfig { n: args.n, p: args.p, budget: default_budget(), method: args.method };
    let start = Instant::now();
    let mut report = run_suite(suite, &cfg)?;
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    if let Some(k) = args.sample {
        report = sample_cases(report, k, cli.seed);
    }
    let text = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report.to_csv()?,
        Format::Text => report.to_text(),
    };
    Ok((text, code))
}

/// Keeps `k` cases chosen by a seeded generator, in their original order.
pub fn sample_cases(mut report: Report, k: usize, seed: u64) -> Report {
    let len = report.cases.len();
    if k >= len {
        return report;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keep = sample(&mut rng, len, k).into_vec();
    keep.sort_unstable();
    let cases = std::mem::take(&mut report.cases);
    report.cases = keep.into_iter().map(|i| cases[i].clone()).collect();
    report
}
