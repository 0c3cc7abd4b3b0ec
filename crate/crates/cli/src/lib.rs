//! Command-line front end for the `riesz` library.
//!
//! Every command renders into an [`Outcome`] so the binary and the tests share one code path.
//! Exit codes: 0 success, 1 a validation or reconstruction check failed, 2 usage or domain
//! error, 3 I/O or zero-table file error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rug::Float;

use riesz::api::{rh_scan, riesz, riesz_derivative, riesz_general, MethodChoice, RieszQuery};
use riesz::series::{
    riesz_maclaurin_coefficients, theorem1_series, EvaluationResult, Method, MobiusProvider,
};
use riesz::zeros::{bundled_zeros, load_zeros, reconstruct_riesz, ZeroTable, DEFAULT_BRACKET_K};
use riesz::{digits_to_bits, RieszError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Terms used by the plain exponential sum in `validate`; its own error bound is reported.
pub const VALIDATE_THEOREM1_TERMS: u64 = 100_000;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "riesz",
    version,
    about = "Arbitrary-precision Riesz function evaluation"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Significant decimal digits (at least 10)
    #[arg(long, global = true, default_value_t = 40)]
    pub digits: u32,
    /// Absolute error tolerance
    #[arg(long, global = true, default_value = "1e-30")]
    pub tol: String,
    /// auto, maclaurin, theorem1 or kummer
    #[arg(long, global = true, default_value = "auto")]
    pub method: String,
    /// Exponent c in R_c (2 gives the Riesz function)
    #[arg(long, global = true, default_value_t = 2.0)]
    pub c: f64,
    /// Zero table: one ordinate per line, optionally followed by re/im of zeta'(rho)
    #[arg(long, global = true)]
    pub zeros: Option<PathBuf>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Riesz(x) (or R_c(x) with --c)
    Eval {
        #[arg(allow_negative_numbers = true)]
        x: String,
    },
    /// Diagnostic growth table over a geometric grid
    Scan {
        #[arg(allow_negative_numbers = true)]
        x_min: String,
        #[arg(allow_negative_numbers = true)]
        x_max: String,
        steps: usize,
    },
    /// Cross-check the three evaluation routes and the derivative identity
    Validate {
        #[arg(allow_negative_numbers = true)]
        xs: Vec<String>,
    },
    /// Rebuild Riesz(x) from zeta zeros and compare with the series value
    Zeros {
        #[arg(allow_negative_numbers = true)]
        xs: Vec<String>,
    },
    /// Exact Maclaurin coefficients of Riesz(4 pi^2 y)
    Coeffs {
        #[arg(default_value_t = 3)]
        n: usize,
        /// Print the coefficients of Riesz(4 pi^2 y)/2 instead
        #[arg(long)]
        halved: bool,
    },
}

/// Validated global settings.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub precision_decimal_digits: u32,
    pub tolerance: Float,
    pub method: MethodChoice,
    pub out: Option<PathBuf>,
    pub zeros: Option<PathBuf>,
    pub c: f64,
    pub jobs: Option<usize>,
}

impl CliConfig {
    pub fn precision_bits(&self) -> u32 {
        digits_to_bits(self.precision_decimal_digits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

fn error_outcome(e: &RieszError) -> Outcome {
    let code = match e {
        RieszError::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    };
    Outcome::fail(code, format!("error: {e}"))
}

impl TryFrom<&GlobalArgs> for CliConfig {
    type Error = String;

    fn try_from(g: &GlobalArgs) -> Result<Self, String> {
        if g.digits < 10 {
            return Err(format!("--digits must be at least 10, got {}", g.digits));
        }
        let tolerance = parse_float(&g.tol, 64).map_err(|e| format!("--tol: {e}"))?;
        if tolerance <= 0 {
            return Err("--tol must be positive".into());
        }
        let method: MethodChoice = g
            .method
            .parse()
            .map_err(|e: RieszError| format!("--method: {e}"))?;
        if g.c.is_nan() || g.c <= 0.0 || g.c.is_infinite() {
            return Err("--c must be a positive number".into());
        }
        if g.jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        Ok(CliConfig {
            precision_decimal_digits: g.digits,
            tolerance,
            method,
            out: g.out.clone(),
            zeros: g.zeros.clone(),
            c: g.c,
            jobs: g.jobs,
        })
    }
}

/// Parse a decimal string; NaN and infinities are rejected.
pub fn parse_float(s: &str, prec: u32) -> Result<Float, String> {
    let parsed = Float::parse(s.trim()).map_err(|_| format!("'{s}' is not a decimal number"))?;
    let v = Float::with_val(prec, parsed);
    if !v.is_finite() {
        return Err(format!("'{s}' is not finite"));
    }
    Ok(v)
}

fn parse_x(s: &str, prec: u32) -> Result<Float, Outcome> {
    let x = parse_float(s, prec).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))?;
    if x < 0 {
        return Err(Outcome::fail(
            EXIT_USAGE,
            format!("error: x = {s} is negative; only x >= 0 is supported"),
        ));
    }
    Ok(x)
}

/// Scientific notation with `digits` significant digits; exact zero prints as `0`.
pub fn sci(v: &Float, digits: u32) -> String {
    if v.is_zero() {
        "0".to_string()
    } else {
        format!("{:.*e}", digits.max(1) as usize, v)
    }
}

/// Three significant digits, for error bounds and deltas.
pub fn sci_short(v: &Float) -> String {
    sci(v, 3)
}

/// Parse arguments and run. Help and version requests exit 0; other parse errors exit 2.
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
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let config = match CliConfig::try_from(&cli.global) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: cannot start workers: {e}")),
    };
    let outcome = pool.install(|| dispatch(&cli.command, &config));
    deliver(outcome, &config)
}

fn dispatch(command: &Command, config: &CliConfig) -> Outcome {
    match command {
        Command::Eval { x } => cmd_eval(x, config),
        Command::Scan {
            x_min,
            x_max,
            steps,
        } => cmd_scan(x_min, x_max, *steps, config),
        Command::Validate { xs } => cmd_validate(xs, config),
        Command::Zeros { xs } => cmd_zeros(xs, config),
        Command::Coeffs { n, halved } => cmd_coeffs(*n, *halved),
    }
}

/// Moves stdout into `--out` when one was given.
fn deliver(mut outcome: Outcome, config: &CliConfig) -> Outcome {
    if let Some(path) = &config.out {
        if outcome.stdout.is_empty() {
            return outcome;
        }
        if let Err(e) = fs::write(path, &outcome.stdout) {
            return Outcome::fail(
                EXIT_IO,
                format!("error: cannot write {}: {e}", path.display()),
            );
        }
        outcome.stdout.clear();
    }
    outcome
}

fn evaluate(
    x: &Float,
    config: &CliConfig,
    method: MethodChoice,
) -> Result<EvaluationResult, RieszError> {
    if config.c == 2.0 {
        riesz(&RieszQuery::new(
            x.clone(),
            config.tolerance.clone(),
            method,
        )?)
    } else {
        if let MethodChoice::Fixed(m) = method {
            if m != Method::Kummer {
                return Err(RieszError::Domain(format!(
                    "method {m} is only available for c = 2"
                )));
            }
        }
        riesz_general(&MobiusProvider, config.c, x, &config.tolerance)
    }
}

pub fn cmd_eval(x: &str, config: &CliConfig) -> Outcome {
    let digits = config.precision_decimal_digits;
    let xf = match parse_x(x, config.precision_bits()) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match evaluate(&xf, config, config.method) {
        Ok(r) => Outcome::ok(format!(
            "{}, {}, {}, {}\n",
            sci(&xf, digits),
            sci(&r.value, digits),
            sci_short(&r.error_bound),
            r.method
        )),
        Err(e) => error_outcome(&e),
    }
}

fn metadata(out: &mut String, command: &str, config: &CliConfig, extra: &str) {
    let _ = writeln!(out, "# riesz {VERSION} {command}");
    let _ = writeln!(
        out,
        "# flags: digits={} tol={} method={} c={}{extra}",
        config.precision_decimal_digits,
        sci_short(&config.tolerance),
        match config.method {
            MethodChoice::Auto => "auto".to_string(),
            MethodChoice::Fixed(m) => m.to_string(),
        },
        config.c
    );
}

pub fn cmd_scan(x_min: &str, x_max: &str, steps: usize, config: &CliConfig) -> Outcome {
    let prec = config.precision_bits();
    let lo = match parse_x(x_min, prec) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let hi = match parse_x(x_max, prec) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let rows = match rh_scan(&lo, &hi, steps, config.c, &config.tolerance) {
        Ok(r) => r,
        Err(e) => return error_outcome(&e),
    };
    let digits = config.precision_decimal_digits;
    let mut out = String::new();
    metadata(
        &mut out,
        "scan",
        config,
        &format!(" x_min={x_min} x_max={x_max} steps={steps}"),
    );
    let _ = writeln!(
        out,
        "# diagnostic growth table: scaled = riesz / x^(1/(2c)); not evidence about any conjecture"
    );
    out.push_str("x,riesz,scaled,error_bound\n");
    for row in &rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            sci(&row.x, digits),
            sci(&row.riesz_value, digits),
            sci(&row.scaled_value, digits),
            sci_short(&row.error_bound)
        );
    }
    Outcome::ok(out)
}

struct ValidateRow {
    cells: Vec<String>,
    pass: bool,
}

fn abs_diff(a: &Float, b: &Float) -> Float {
    let p = a.prec().max(b.prec());
    Float::with_val(p, a - b).abs()
}

/// R'(x) by Richardson-extrapolated central differences of the series value.
fn finite_difference(x: &Float, config: &CliConfig) -> Result<Float, RieszError> {
    let p = x.prec().max(config.precision_bits());
    let h = Float::with_val(p, x * 1e-3f64);
    let central = |h: &Float| -> Result<Float, RieszError> {
        let plus = evaluate(&Float::with_val(p, x + h), config, MethodChoice::Auto)?;
        let minus = evaluate(&Float::with_val(p, x - h), config, MethodChoice::Auto)?;
        Ok(Float::with_val(p, &plus.value - &minus.value) / Float::with_val(p, h * 2u32))
    };
    let coarse = central(&h)?;
    let fine = central(&Float::with_val(p, &h / 2u32))?;
    Ok((fine * 4u32 - coarse) / 3u32)
}

fn derivative_check(x: &Float, config: &CliConfig) -> Result<(f64, bool), RieszError> {
    let identity = riesz_derivative(&MobiusProvider, config.c, x, &config.tolerance)?;
    let fd = finite_difference(x, config)?;
    let scale = Float::with_val(64, identity.value.abs_ref()).max(&config.tolerance);
    let rel = (abs_diff(&identity.value, &fd) / scale).to_f64();
    Ok((rel, rel <= 1e-6))
}

fn validate_row(x_text: &str, config: &CliConfig) -> ValidateRow {
    let digits = config.precision_decimal_digits;
    let x = match parse_x(x_text, config.precision_bits()) {
        Ok(v) => v,
        Err(o) => {
            return ValidateRow {
                cells: vec![csv_safe(x_text), csv_safe(o.stderr.trim()), "fail".into()],
                pass: false,
            }
        }
    };
    let results: Vec<Result<EvaluationResult, RieszError>> = vec![
        evaluate(&x, config, MethodChoice::Fixed(Method::Maclaurin)),
        theorem1_series(
            &MobiusProvider,
            config.c,
            &x,
            VALIDATE_THEOREM1_TERMS,
            config.precision_bits(),
        ),
        evaluate(&x, config, MethodChoice::Fixed(Method::Kummer)),
    ];
    let mut cells = vec![sci(&x, digits)];
    let mut pass = true;
    for r in &results {
        match r {
            Ok(r) => {
                cells.push(sci(&r.value, digits));
                cells.push(sci_short(&r.error_bound));
            }
            Err(e) => {
                // maclaurin is defined only for c = 2; that is not a failure
                let expected = config.c != 2.0 && matches!(e, RieszError::Domain(_));
                pass &= expected;
                cells.push(if expected {
                    "n/a".into()
                } else {
                    csv_safe(&format!("error: {e}"))
                });
                cells.push(String::new());
            }
        }
    }
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        match (&results[i], &results[j]) {
            (Ok(a), Ok(b)) => {
                cells.push(sci_short(&abs_diff(&a.value, &b.value)));
                pass &= a.agrees_with(b);
            }
            _ => cells.push("n/a".into()),
        }
    }
    if x.is_zero() {
        cells.push("n/a".into());
    } else {
        match derivative_check(&x, config) {
            Ok((rel, ok)) => {
                cells.push(format!("{rel:.2e}"));
                pass &= ok;
            }
            Err(e) => {
                cells.push(csv_safe(&format!("error: {e}")));
                pass = false;
            }
        }
    }
    cells.push(if pass { "pass" } else { "fail" }.into());
    ValidateRow { cells, pass }
}

fn csv_safe(s: &str) -> String {
    s.replace([',', '\n'], ";")
}

pub fn cmd_validate(xs: &[String], config: &CliConfig) -> Outcome {
    let default_list: Vec<String> = ["0.1", "1", "10", "100"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let xs = if xs.is_empty() { &default_list } else { xs };
    let mut out = String::new();
    metadata(
        &mut out,
        "validate",
        config,
        &format!(" theorem1_terms={VALIDATE_THEOREM1_TERMS}"),
    );
    out.push_str(
        "x,maclaurin,maclaurin_bound,theorem1,theorem1_bound,kummer,kummer_bound,\
         delta_mt,delta_mk,delta_tk,derivative_rel,status\n",
    );
    let mut all_pass = true;
    for x in xs {
        let row = validate_row(x, config);
        all_pass &= row.pass;
        out.push_str(&row.cells.join(","));
        out.push('\n');
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED },
    }
}

fn zero_table(config: &CliConfig) -> Result<ZeroTable, Outcome> {
    match &config.zeros {
        None => Ok(bundled_zeros()),
        Some(path) => load_zeros(path).map_err(|e| {
            Outcome::fail(
                EXIT_IO,
                format!("error: cannot use zero table {}: {e}", path.display()),
            )
        }),
    }
}

pub fn cmd_zeros(xs: &[String], config: &CliConfig) -> Outcome {
    let table = match zero_table(config) {
        Ok(t) => t,
        Err(o) => return o,
    };
    if table.is_empty() {
        return Outcome::fail(EXIT_USAGE, "error: table empty");
    }
    let default_list: Vec<String> = ["1", "10", "100"].iter().map(|s| s.to_string()).collect();
    let xs = if xs.is_empty() { &default_list } else { xs };
    let prec = config.precision_bits();
    let digits = config.precision_decimal_digits;
    let mut out = String::new();
    metadata(
        &mut out,
        "zeros",
        config,
        &format!(
            " zeros={} table_digits={} bracket_k={DEFAULT_BRACKET_K}",
            table.len(),
            table.precision_decimal_digits
        ),
    );
    out.push_str("x,reconstruction,riesz,delta,envelope,status\n");
    let mut all_pass = true;
    for x_text in xs {
        let x = match parse_x(x_text, prec) {
            Ok(v) => v,
            Err(o) => return o,
        };
        let rec = match reconstruct_riesz(&x, &table, DEFAULT_BRACKET_K, None, prec) {
            Ok(r) => r,
            Err(e) => return error_outcome(&e),
        };
        let reference = match evaluate(
            &x,
            &CliConfig {
                c: 2.0,
                ..config.clone()
            },
            MethodChoice::Auto,
        ) {
            Ok(r) => r,
            Err(e) => return error_outcome(&e),
        };
        let delta = abs_diff(&rec.value, &reference.value);
        let allowed =
            Float::with_val(64, &rec.error_estimate + &config.tolerance) + &reference.error_bound;
        let pass = delta <= allowed;
        all_pass &= pass;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            sci(&x, digits),
            sci(&rec.value, digits),
            sci(&reference.value, digits),
            sci_short(&delta),
            sci_short(&rec.error_estimate),
            if pass { "pass" } else { "fail" }
        );
    }
    Outcome {
        stdout: out,
        stderr: String::new(),
        code: if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED },
    }
}

/// 2/(c_{2k}(k−1)!) for k = 1..n, or half of each with `halved`.
pub fn cmd_coeffs(n: usize, halved: bool) -> Outcome {
    if n == 0 {
        return Outcome::fail(EXIT_USAGE, "error: n must be at least 1");
    }
    let mut out = String::new();
    for c in riesz_maclaurin_coefficients(n) {
        let c = if halved { c / 2u32 } else { c };
        let _ = writeln!(out, "{c}");
    }
    Outcome::ok(out)
}
