//! The `mlv` command line: evaluation, verification, sweeps, the summary
//! table and plot data.
//!
//! Exit codes: 0 when every result passes, 1 when any result fails, 2 for
//! usage, catalog, parameter-file and domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::complexfn::{digamma, gamma, hyp2f1, upper_incomplete_gamma};
use crate::error::{Error, Result};
use crate::mittag::{ml, MLParams};
use crate::quad::QuadConfig;
use crate::registry::params::{float_str, float_text};
use crate::registry::{
    self, catalog, format_complex, lookup, parse_complex, ParamAssignment, Status, Sym,
    VerificationResult,
};
use crate::zetafam::{hurwitz_zeta, lerch_phi, polylog, stieltjes_gamma1, LerchArgs};
use crate::ComplexScalar;

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Functions accepted by `eval`, with their argument names.
pub const EVAL_FUNCTIONS: &[(&str, &[&str])] = &[
    ("ml", &["alpha", "beta", "z"]),
    ("lerch_phi", &["z", "s", "v"]),
    ("hurwitz_zeta", &["s", "a"]),
    ("polylog", &["s", "z"]),
    ("digamma", &["z"]),
    ("gamma", &["z"]),
    ("inc_gamma", &["s", "z"]),
    ("hyp2f1", &["a", "b", "c", "z"]),
    ("stieltjes_gamma1", &["a"]),
];

#[derive(Debug, Parser)]
#[command(name = "mlv", version, about = "Verify Mittag-Leffler integral identities numerically")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, clap::Args)]
struct QuadArgs {
    /// Outer relative tolerance of the quadrature; inner integrals use a
    /// hundredth of it.
    #[arg(long, value_name = "REL")]
    quad_tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a special function at complex arguments (`re+imi` literals).
    Eval {
        function: String,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// Verify one identity, or the whole catalog, at its default samples.
    Verify {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// File of `name = value` lines overriding the first default sample.
        #[arg(long, value_name = "FILE", conflicts_with = "all")]
        params: Option<PathBuf>,
        /// Verification tolerance; defaults to each entry's own.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Evaluate the left-hand side across values of a parameter the
    /// right-hand side does not depend on.
    Sweep {
        id: String,
        #[arg(long)]
        param: String,
        /// Comma-separated complex literals.
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        /// Fixed parameters as `name=value`; repeatable.
        #[arg(long = "set", value_name = "NAME=VALUE", allow_hyphen_values = true)]
        set: Vec<String>,
        #[arg(long, value_name = "FILE")]
        params: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Reproduce the summary table of double integrals.
    Table {
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write `b,u,value` rows of E_b(-u) for plotting.
    PlotMl {
        /// Comma-separated indices in (0, 2].
        #[arg(long, default_value = "0.25,0.5,0.75,1")]
        b: String,
        /// `START:END` range of u.
        #[arg(long, default_value = "0:10")]
        u: String,
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Output path; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog.
    List {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Quadrature settings echoed into a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub command: String,
    pub target: Option<String>,
    #[serde(with = "registry::opt_float")]
    pub tol: Option<f64>,
    #[serde(with = "float_str")]
    pub rel_tol: f64,
    #[serde(with = "float_str")]
    pub outer_rel_tol: f64,
    #[serde(with = "float_str")]
    pub abs_tol: f64,
    pub max_level: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    /// Domain violations and quadrature failures.
    pub errors: usize,
}

impl Summary {
    pub fn of(results: &[VerificationResult]) -> Self {
        let count = |f: fn(Status) -> bool| results.iter().filter(|r| f(r.status)).count();
        Summary {
            total: results.len(),
            pass: count(|s| s == Status::Pass),
            fail: count(|s| s == Status::Fail),
            errors: count(|s| matches!(s, Status::DomainViolation | Status::QuadratureFailure)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub timestamp: String,
    pub config: ConfigEcho,
    pub results: Vec<VerificationResult>,
    pub summary: Summary,
    /// Largest pairwise relative deviation of the LHS values (sweeps only).
    #[serde(default, with = "registry::opt_float", skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    /// Table labels, parallel to `results` (table only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl Report {
    pub fn new(config: ConfigEcho, results: Vec<VerificationResult>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            config,
            summary: Summary::of(&results),
            results,
            deviation: None,
            labels: Vec::new(),
        }
    }

    /// 0 if everything passed, 2 if any point was outside its domain,
    /// otherwise 1.
    pub fn exit_code(&self) -> i32 {
        if self.results.iter().any(|r| r.status == Status::DomainViolation) {
            EXIT_USAGE
        } else if self.summary.pass == self.summary.total {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

/// Error carrying its exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonConvergence { .. } | Error::IntegrandNaN { .. } | Error::Inner { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Exit(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(EXIT_USAGE, msg.into())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "mlv: {msg}");
            code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, Exit> {
    match cmd {
        Command::Eval { function, args } => {
            let v = eval_function(&function, &args)?;
            emit(out, &format!("{}\n", format_complex(v, 16)))?;
            Ok(EXIT_PASS)
        }
        Command::Verify { id, all, params, tol, quad } => {
            let cfg = quad_config(&quad)?;
            let check_tol = |t: f64| {
                if t > 0.0 && t.is_finite() { Ok(()) } else { Err(usage(format!("--tol must be positive, got {t}"))) }
            };
            if let Some(t) = tol {
                check_tol(t)?;
            }
            let (target, results) = if all {
                let specs: Vec<_> = catalog().iter().collect();
                (None, registry::verify_samples(&specs, tol, &cfg))
            } else {
                let id = id.expect("clap requires an id without --all");
                let spec = lookup(&id)?;
                let results = match params {
                    Some(path) => {
                        let p = base_sample(spec).merged(&ParamAssignment::load(&path)?);
                        vec![registry::verify_spec(spec, &p, tol.unwrap_or(spec.tolerance), &cfg)]
                    }
                    None => registry::verify_samples(&[spec], tol, &cfg),
                };
                (Some(id), results)
            };
            let report = Report::new(echo("verify", target, tol, &cfg), results);
            emit_json(out, &report)?;
            Ok(report.exit_code())
        }
        Command::Sweep { id, param, values, set, params, tol, quad, format } => {
            let cfg = quad_config(&quad)?;
            let spec = lookup(&id)?;
            let sym: Sym = param.parse()?;
            let values = values
                .split(',')
                .map(parse_complex)
                .collect::<Result<Vec<_>>>()?;
            if values.is_empty() {
                return Err(usage("--values is empty"));
            }
            let mut fixed = base_sample(spec);
            if let Some(path) = params {
                fixed = fixed.merged(&ParamAssignment::load(&path)?);
            }
            for kv in &set {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| usage(format!("--set expects NAME=VALUE, got {kv:?}")))?;
                fixed.set(k.trim().parse::<Sym>()?, parse_complex(v)?);
            }
            let sweep = registry::sweep_invariance(&id, sym, &values, &fixed, tol, &cfg)?;
            let tol_used = tol.unwrap_or(spec.tolerance);
            let mut report = Report::new(echo("sweep", Some(format!("{id} {sym}")), tol, &cfg), sweep.results);
            report.deviation = Some(sweep.max_deviation);
            match format {
                Format::Csv | Format::Text => {
                    let mut w = csv_writer();
                    w.row(&["id", "param", "value_re", "value_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err", "status"])?;
                    for (r, v) in report.results.iter().zip(&values) {
                        let mut row = vec![r.id.clone(), sym.to_string(), float_text(v.re), float_text(v.im)];
                        row.extend(complex_cells(r.lhs));
                        row.extend(complex_cells(r.rhs));
                        row.push(opt_cell(r.rel_err));
                        row.push(r.status.to_string());
                        w.row(&row)?;
                    }
                    w.row(&["max_deviation".to_string(), float_text(sweep.max_deviation)])?;
                    w.finish(out)?;
                }
                Format::Json => emit_json(out, &report)?,
            }
            let code = report.exit_code();
            if code == EXIT_PASS && !(sweep.max_deviation <= tol_used) {
                return Ok(EXIT_FAIL);
            }
            Ok(code)
        }
        Command::Table { quad, format } => {
            let cfg = quad_config(&quad)?;
            let rows = registry::table_rows(&cfg);
            let labels: Vec<String> = rows.iter().map(|r| r.label.clone()).collect();
            let mut report = Report::new(
                echo("table", None, None, &cfg),
                rows.into_iter().map(|r| r.result).collect(),
            );
            report.labels = labels;
            match format {
                Format::Json => emit_json(out, &report)?,
                Format::Csv => {
                    let mut w = csv_writer();
                    w.row(&["id", "closed_form", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err", "status"])?;
                    for (r, label) in report.results.iter().zip(&report.labels) {
                        let mut row = vec![r.id.clone(), label.clone()];
                        row.extend(complex_cells(r.lhs));
                        row.extend(complex_cells(r.rhs));
                        row.push(opt_cell(r.rel_err));
                        row.push(r.status.to_string());
                        w.row(&row)?;
                    }
                    w.finish(out)?;
                }
                Format::Text => emit(out, &render_table(&report))?,
            }
            Ok(report.exit_code())
        }
        Command::PlotMl { b, u, points, out: path } => {
            let text = plot_ml_csv(&b, &u, points)?;
            match path {
                Some(p) => std::fs::write(&p, text)
                    .map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_PASS)
        }
        Command::List { format } => {
            let list = registry::list_identities();
            match format {
                Format::Json => emit_json(out, &list)?,
                Format::Csv | Format::Text => {
                    let mut w = csv_writer();
                    w.row(&["id", "dimension", "params", "anchor"])?;
                    for e in &list {
                        let params: Vec<String> = e.params.iter().map(|s| s.to_string()).collect();
                        w.row(&[e.id.clone(), e.dimension.to_string(), params.join(" "), e.anchor.clone()])?;
                    }
                    w.finish(out)?;
                }
            }
            Ok(EXIT_PASS)
        }
    }
}

fn quad_config(q: &QuadArgs) -> std::result::Result<QuadConfig, Exit> {
    let mut cfg = QuadConfig::default();
    if let Some(t) = q.quad_tol {
        cfg.outer_rel_tol = t;
        cfg.rel_tol = (t / 100.0).max(1e-14);
    }
    Ok(cfg.with_env_cap()?)
}

fn echo(command: &str, target: Option<String>, tol: Option<f64>, cfg: &QuadConfig) -> ConfigEcho {
    ConfigEcho {
        command: command.to_string(),
        target,
        tol,
        rel_tol: cfg.rel_tol,
        outer_rel_tol: cfg.outer_rel_tol,
        abs_tol: cfg.abs_tol,
        max_level: cfg.max_level,
    }
}

fn base_sample(spec: &registry::IdentitySpec) -> ParamAssignment {
    spec.default_samples.first().cloned().unwrap_or_default()
}

/// Evaluates one of [`EVAL_FUNCTIONS`] at the given literals.
pub fn eval_function(name: &str, args: &[String]) -> Result<ComplexScalar> {
    let (_, names) = EVAL_FUNCTIONS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| {
            let known: Vec<&str> = EVAL_FUNCTIONS.iter().map(|(n, _)| *n).collect();
            Error::Parse(format!("unknown function {name:?}; expected one of {}", known.join(", ")))
        })?;
    if args.len() != names.len() {
        return Err(Error::Parse(format!(
            "{name} takes {} arguments ({}), got {}",
            names.len(),
            names.join(", "),
            args.len()
        )));
    }
    let a = args.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>>>()?;
    match name {
        "ml" => {
            if a[0].im != 0.0 {
                return Err(Error::Domain(format!("alpha must be real, got {}", a[0])));
            }
            ml(MLParams::new(a[0].re, a[1])?, a[2])
        }
        "lerch_phi" => lerch_phi(LerchArgs::new(a[0], a[1], a[2])),
        "hurwitz_zeta" => hurwitz_zeta(a[0], a[1]),
        "polylog" => polylog(a[0], a[1]),
        "digamma" => digamma(a[0]),
        "gamma" => gamma(a[0]),
        "inc_gamma" => upper_incomplete_gamma(a[0], a[1]),
        "hyp2f1" => hyp2f1(a[0], a[1], a[2], a[3]),
        "stieltjes_gamma1" => stieltjes_gamma1(a[0]),
        _ => unreachable!("names come from EVAL_FUNCTIONS"),
    }
}

/// `b,u,value` rows of `E_b(-u)` on an equispaced grid.
pub fn plot_ml_csv(b_list: &str, u_range: &str, points: usize) -> Result<String> {
    let bs = b_list
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad b value {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(b) = bs.iter().find(|&&b| !(b > 0.0 && b <= 2.0)) {
        return Err(Error::Domain(format!("b must lie in (0, 2], got {b}")));
    }
    let (lo, hi) = u_range
        .split_once(':')
        .and_then(|(a, b)| Some((a.trim().parse::<f64>().ok()?, b.trim().parse::<f64>().ok()?)))
        .ok_or_else(|| Error::Parse(format!("--u expects START:END, got {u_range:?}")))?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) || points < 2 {
        return Err(Error::Domain(format!(
            "need a finite range START < END and at least 2 points, got {u_range} with {points}"
        )));
    }
    let mut text = String::from("b,u,value\n");
    for &b in &bs {
        let params = MLParams::one_param(b)?;
        for i in 0..points {
            let u = lo + (hi - lo) * i as f64 / (points - 1) as f64;
            let v = ml(params, ComplexScalar::new(-u, 0.0))?;
            text.push_str(&format!("{b},{},{}\n", float_text(u), float_text(v.re)));
        }
    }
    Ok(text)
}

/// Plain-text rendering of a table report.
pub fn render_table(report: &Report) -> String {
    let mut s = format!(
        "{:<16} {:<18} {:<9} {:<40} {}\n",
        "id", "status", "rel err", "computed LHS", "closed form"
    );
    for (r, label) in report.results.iter().zip(&report.labels) {
        let lhs = r.lhs.map(|z| format_complex(z, 12)).unwrap_or_else(|| "-".into());
        let rel = r.rel_err.map(|e| format!("{e:.2e}")).unwrap_or_else(|| "-".into());
        s.push_str(&format!("{:<16} {:<18} {:<9} {:<40} {}\n", r.id, r.status.to_string(), rel, lhs, label));
    }
    s.push_str(&format!(
        "{} rows: {} pass, {} fail, {} errors\n",
        report.summary.total, report.summary.pass, report.summary.fail, report.summary.errors
    ));
    s
}

fn complex_cells(z: Option<ComplexScalar>) -> [String; 2] {
    match z {
        Some(z) => [float_text(z.re), float_text(z.im)],
        None => [String::new(), String::new()],
    }
}

fn opt_cell(x: Option<f64>) -> String {
    x.map(float_text).unwrap_or_default()
}

/// Buffers CSV records and writes them out on [`CsvOut::finish`].
struct CsvOut(csv::Writer<Vec<u8>>);

fn csv_writer() -> CsvOut {
    CsvOut(csv::WriterBuilder::new().flexible(true).from_writer(Vec::new()))
}

impl CsvOut {
    fn row<S: AsRef<str>>(&mut self, cells: &[S]) -> std::result::Result<(), Exit> {
        self.0
            .write_record(cells.iter().map(|c| c.as_ref()))
            .map_err(|e| Exit(EXIT_USAGE, format!("csv: {e}")))
    }

    fn finish(self, out: &mut dyn Write) -> std::result::Result<(), Exit> {
        let bytes = self.0.into_inner().map_err(|e| Exit(EXIT_USAGE, format!("csv: {e}")))?;
        emit(out, &String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), Exit> {
    out.write_all(text.as_bytes()).map_err(|e| Exit(EXIT_USAGE, format!("write failed: {e}")))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::result::Result<(), Exit> {
    let text = serde_json::to_string_pretty(value).expect("report types serialize");
    emit(out, &format!("{text}\n"))
}
