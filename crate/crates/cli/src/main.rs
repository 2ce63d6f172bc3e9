//! `bellgamma`: convergence tables, verification reports and constants.
//!
//! Exit codes: 0 success, 1 failed verification (or other runtime failure),
//! 2 usage error, 3 precision failure.

mod config;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bellgamma_core::asymptotics::{
    qn_log_asymptotic, qn_ratio, saddle_polynomial, saddle_roots, ExponentProfile, ProfileKind,
};
use bellgamma_core::numerics::{gamma_const, pi_const, zeta_const, BigFix};
use bellgamma_core::sequences::{convergence_row, write_csv, write_json, ApproxRecord};
use bellgamma_core::symring::alpha_mu;
use bellgamma_core::{Error, Rat};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use config::{base_digits, check_a, check_mu, parse_n_range, row_digits, UsageError};
use verify::{Params, Suite};

#[derive(Parser, Debug)]
#[command(name = "bellgamma", version, about = "Rational approximations to Bell-polynomial values at γ and ζ(m)")]
struct Cli {
    /// Working precision in decimal digits (default: BELLGAMMA_DIGITS or 50,
    /// raised to what each row needs unless given explicitly).
    #[arg(long, global = true)]
    digits: Option<u32>,

    /// Output format (default depends on the command).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One approximation p_(n,mu)/q_n with its measured error.
    Approx {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        n: usize,
    },
    /// Convergence rows over a range of n (`start:stop[:step]`, inclusive).
    Table {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        n: String,
    },
    /// Run a verification suite.
    Verify {
        /// lemma1, recurrences, integrality, bernoulli, bell, tail or saddle.
        #[arg(long)]
        suite: String,
        /// Restrict to one parameter a (default: the suite's standard sweep).
        #[arg(long)]
        a: Option<u32>,
        /// Largest n checked (suite-specific default).
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// γ, π and ζ(2), ..., ζ(zmax) to the working precision.
    Constants {
        #[arg(long, default_value_t = 5)]
        zmax: u32,
    },
    /// Coefficients b_m(a) and the exponents built from them.
    Asymptotics {
        #[arg(long)]
        a: u32,
        /// theorem-linear-form, theorem-qn or corollary (default: all).
        #[arg(long)]
        kind: Option<String>,
        /// Evaluate the exponents (and the q_n ratio) at this n.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Refined saddle roots of (-1)^u n (t-1)^a - t^(a-1).
    Roots {
        #[arg(long)]
        a: u32,
        #[arg(long, allow_hyphen_values = true)]
        u: i64,
        #[arg(long)]
        n: f64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Precision(String),
    Runtime(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) | Failure::Runtime(_) => 1,
            Failure::Precision(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Precision(m) | Failure::Runtime(m) => m,
        }
    }
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Incompatible(_) => Failure::Usage(e.to_string()),
            Error::Precision(_) => Failure::Precision(e.to_string()),
            Error::Identity(_) | Error::NoConvergence(_) => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(format!("I/O error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            Failure::Usage(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("bellgamma: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let base = base_digits()?;
    if cli.digits == Some(0) {
        return Err(Failure::Usage("--digits must be positive".into()));
    }
    match &cli.command {
        Command::Approx { a, mu, n } => {
            let a = check_a(*a)?;
            let mu = check_mu(a, *mu)?;
            let digits = row_digits(cli.digits, base, a, *n);
            let rec = convergence_row(a, mu, *n, digits)?;
            let mut out = open_output(&cli.out)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Csv => write_csv(&mut out, std::slice::from_ref(&rec))?,
                Format::Json => write_json(&mut out, std::slice::from_ref(&rec))?,
                Format::Text => approx_text(&mut out, &rec, digits)?,
            }
            out.flush()?;
            Ok(())
        }
        Command::Table { a, mu, n } => {
            let a = check_a(*a)?;
            let mu = check_mu(a, *mu)?;
            let ns = parse_n_range(n)?;
            // Rows are independent; collect keeps ascending n.
            let rows = ns
                .par_iter()
                .map(|&n| convergence_row(a, mu, n, row_digits(cli.digits, base, a, n)))
                .collect::<Result<Vec<_>, _>>()?;
            let mut out = open_output(&cli.out)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => write_csv(&mut out, &rows)?,
                Format::Json => write_json(&mut out, &rows)?,
                Format::Text => {
                    for r in &rows {
                        approx_text(&mut out, r, row_digits(cli.digits, base, a, r.n))?;
                        writeln!(out)?;
                    }
                }
            }
            out.flush()?;
            Ok(())
        }
        Command::Verify { suite, a, nmax } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            let a = a.map(check_a).transpose()?;
            let checks = verify::run(suite, &Params { a, nmax: *nmax });
            let mut out = open_output(&cli.out)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => {
                    for c in &checks {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{tag} {} {}: {}", c.suite, c.name, c.detail)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "suite,check,passed,detail")?;
                    for c in &checks {
                        writeln!(
                            out,
                            "{},{},{},{}",
                            c.suite,
                            c.name.replace(',', ";"),
                            c.passed,
                            c.detail.replace(',', ";")
                        )?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = checks
                        .iter()
                        .map(|c| json!({"suite": c.suite, "check": c.name, "passed": c.passed, "detail": c.detail}))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"))?;
                }
            }
            out.flush()?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(Failure::Verification(format!(
                    "{failed} of {} {} checks failed",
                    checks.len(),
                    suite.name()
                )));
            }
            Ok(())
        }
        Command::Constants { zmax } => {
            if *zmax < 2 {
                return Err(Failure::Usage("--zmax must be at least 2".into()));
            }
            let digits = cli.digits.unwrap_or(base);
            let mut values = vec![("gamma".to_string(), gamma_const(digits)?), ("pi".to_string(), pi_const(digits)?)];
            for m in 2..=*zmax {
                values.push((format!("zeta({m})"), zeta_const(m, digits)?));
            }
            let mut out = open_output(&cli.out)?;
            let render = |v: &BigFix| v.to_decimal_string(digits);
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => {
                    for (name, v) in &values {
                        writeln!(out, "{name} = {}", render(v))?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "name,digits,value")?;
                    for (name, v) in &values {
                        writeln!(out, "{name},{digits},{}", render(v))?;
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("digits".into(), json!(digits));
                    for (name, v) in &values {
                        obj.insert(name.clone(), json!(render(v)));
                    }
                    writeln!(out, "{}", serde_json::to_string_pretty(&obj).expect("JSON values serialize"))?;
                }
            }
            out.flush()?;
            Ok(())
        }
        Command::Asymptotics { a, kind, n } => {
            let a = check_a(*a)?;
            let kinds = match kind {
                Some(k) => vec![k.parse::<ProfileKind>()?],
                None => ProfileKind::ALL.to_vec(),
            };
            if *n == Some(0) {
                return Err(Failure::Usage("--n must be positive".into()));
            }
            asymptotics(cli, a, &kinds, *n)
        }
        Command::Roots { a, u, n } => {
            let a = check_a(*a)?;
            let roots = saddle_roots(a, *u, *n)?;
            let mut out = open_output(&cli.out)?;
            let rel = |r| {
                let p = saddle_polynomial(a, *u, *n, r);
                p.re.hypot(p.im) / n
            };
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => {
                    for (k, r) in roots.iter().enumerate() {
                        writeln!(out, "k={k} tau = {:+.15e} {:+.15e}i  |p|/n = {:.2e}", r.re, r.im, rel(*r))?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "a,u,n,k,re,im,residual")?;
                    for (k, r) in roots.iter().enumerate() {
                        writeln!(out, "{a},{u},{n},{k},{:.15e},{:.15e},{:.3e}", r.re, r.im, rel(*r))?;
                    }
                }
                Format::Json => {
                    let v: Vec<_> = roots
                        .iter()
                        .enumerate()
                        .map(|(k, r)| json!({"a": a, "u": u, "n": n, "k": k, "re": r.re, "im": r.im, "residual": rel(*r)}))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"))?;
                }
            }
            out.flush()?;
            Ok(())
        }
    }
}

fn approx_text(out: &mut dyn Write, r: &ApproxRecord, digits: u32) -> io::Result<()> {
    let alpha = alpha_mu(r.a, r.mu).map_err(|e| io::Error::other(e.to_string()))?;
    let ratio = BigFix::from_rat(&(&r.p / Rat::from_integer(r.q.clone())), digits);
    let err10 = r.err_log10();
    let exp = err10.floor();
    writeln!(out, "a = {}, mu = {}, n = {}", r.a, r.mu, r.n)?;
    writeln!(out, "alpha = {alpha}")?;
    writeln!(out, "p = {}", r.p)?;
    writeln!(out, "q = {}", r.q)?;
    writeln!(out, "p/q = {}", ratio.to_decimal_string(digits))?;
    writeln!(out, "|alpha - p/q| = {:.4}e{}", 10f64.powf(err10 - exp), exp as i64)?;
    writeln!(out, "log10 error = {:.6}", err10)?;
    writeln!(out, "log10 predicted (corollary exponent) = {:.6}", r.predicted_log10())?;
    writeln!(out, "digits = {digits}")
}

fn asymptotics(cli: &Cli, a: u32, kinds: &[ProfileKind], n: Option<u64>) -> Outcome {
    let profiles = kinds
        .iter()
        .map(|&k| ExponentProfile::new(a, k))
        .collect::<Result<Vec<_>, _>>()?;
    let q_info = match n {
        Some(n) if kinds.contains(&ProfileKind::TheoremQn) => {
            Some((qn_log_asymptotic(a, n)?, qn_ratio(a, n)?))
        }
        _ => None,
    };
    let mut out = open_output(&cli.out)?;
    let terms_text = |p: &ExponentProfile| {
        p.terms().map_or_else(
            || "(irrational cosine weights; evaluated numerically)".to_string(),
            |ts| format_terms(&ts),
        )
    };
    match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let b: Vec<String> = profiles[0].b.iter().map(ToString::to_string).collect();
            writeln!(out, "a = {a}")?;
            writeln!(out, "b = [{}]", b.join(", "))?;
            for p in &profiles {
                write!(out, "{}: {}", p.kind, terms_text(p))?;
                match n {
                    Some(n) => writeln!(out, "  (at n = {n}: {:.6})", p.eval(n as f64))?,
                    None => writeln!(out)?,
                }
            }
            if let (Some((log, ratio)), Some(n)) = (q_info, n) {
                writeln!(out, "ln q_n main term at n = {n}: {log:.6}")?;
                writeln!(out, "q_n / main term at n = {n}: {ratio:.6}")?;
            }
        }
        Format::Json => {
            let v: Vec<_> = profiles
                .iter()
                .map(|p| {
                    let mut v = p.to_json();
                    if let Some(n) = n {
                        v["n"] = json!(n);
                        v["value"] = json!(p.eval(n as f64));
                        if let (ProfileKind::TheoremQn, Some((log, ratio))) = (p.kind, q_info) {
                            v["ln_main_term"] = json!(log);
                            v["q_ratio"] = json!(ratio);
                        }
                    }
                    v
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"))?;
        }
        Format::Csv => {
            writeln!(out, "a,kind,b,exponent,n,value")?;
            for p in &profiles {
                let b: Vec<String> = p.b.iter().map(ToString::to_string).collect();
                let (ns, value) = match n {
                    Some(n) => (n.to_string(), format!("{:.6}", p.eval(n as f64))),
                    None => (String::new(), String::new()),
                };
                writeln!(out, "{a},{},{},{},{ns},{value}", p.kind, b.join(";"), terms_text(p).replace(',', ";"))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// `-9/2*n^(2/3) + 3/2*n^(1/3)`, with unit coefficients dropped.
fn format_terms(terms: &[bellgamma_core::asymptotics::ExponentTerm]) -> String {
    use bellgamma_core::numerics::rat;
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let neg = t.coeff < rat(0, 1);
        let mag = if neg { -t.coeff.clone() } else { t.coeff.clone() };
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if t.power == rat(0, 1) {
            s.push_str(&mag.to_string());
        } else if mag == rat(1, 1) {
            s.push_str(&format!("n^({})", t.power));
        } else {
            s.push_str(&format!("{mag}*n^({})", t.power));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
