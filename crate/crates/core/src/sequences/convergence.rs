//! Measured convergence of `p_{n,mu} / q_n` to `alpha_mu`.

use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;

use super::approx::{p_value, q_value};
use crate::asymptotics::corollary_exponent;
use crate::error::{Error, Result};
use crate::numerics::{gamma_const, zeta_const, BigFix, Rat};
use crate::symring::{alpha_mu, sp_eval};

/// Header of the CSV rendering of [`ApproxRecord`] rows.
pub const CSV_HEADER: &str = "a,mu,n,p_num,p_den,q,err_log10,predicted_log10";

const GUARD_DIGITS: u32 = 10;
const LOG_AGREEMENT: f64 = 1e-6;

/// One measured row: exact `p`, `q` and the natural log of `|alpha_mu - p/q|`.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRecord {
    pub a: u32,
    pub mu: u32,
    pub n: usize,
    pub p: Rat,
    pub q: BigInt,
    pub err_log: f64,
    /// Corollary exponent at this n (natural log scale).
    pub predicted_exponent: f64,
}

impl ApproxRecord {
    /// Recomputes `p` and `q` from their defining sums and compares.
    pub fn is_consistent(&self) -> Result<bool> {
        Ok(self.q == q_value(self.a, self.n)? && self.p == p_value(self.a, self.mu, self.n)?)
    }

    pub fn err_log10(&self) -> f64 {
        self.err_log / std::f64::consts::LN_10
    }

    pub fn predicted_log10(&self) -> f64 {
        self.predicted_exponent / std::f64::consts::LN_10
    }
}

/// Working precision `ceil(-E / ln 10) + 30` with E the corollary exponent.
pub fn default_digits(a: u32, n: usize) -> u32 {
    let e = corollary_exponent(a, n as f64);
    let decades = (-e / std::f64::consts::LN_10).ceil().max(0.0);
    decades as u32 + 30
}

fn signed_error(alpha: &crate::SymPoly, p: &Rat, q: &BigInt, digits: u32) -> Result<BigFix> {
    let g = gamma_const(digits)?;
    let zetas = (2..=alpha.max_zeta() as u32)
        .map(|m| zeta_const(m, digits))
        .collect::<Result<Vec<_>>>()?;
    let value = sp_eval(alpha, &g, &zetas)?;
    let approx = BigFix::from_rat(&(p / Rat::from_integer(q.clone())), digits);
    Ok(&value - &approx)
}

/// Builds the record for `(a, mu, n)`, measuring the error at `digits` and
/// `digits + 10`; disagreement between the two is a precision failure.
pub fn convergence_row(a: u32, mu: u32, n: usize, digits: u32) -> Result<ApproxRecord> {
    let alpha = alpha_mu(a, mu)?;
    let p = p_value(a, mu, n)?;
    let q = q_value(a, n)?;

    let coarse = signed_error(&alpha, &p, &q, digits)?;
    let fine = signed_error(&alpha, &p, &q, digits + GUARD_DIGITS)?;
    if coarse.is_zero() || fine.is_zero() {
        return Err(Error::Precision(format!(
            "|alpha - p/q| for a={a}, mu={mu}, n={n} vanishes at {digits} digits"
        )));
    }
    let err_log = coarse.ln_abs_f64();
    let check = fine.ln_abs_f64();
    if (err_log - check).abs() > LOG_AGREEMENT {
        return Err(Error::Precision(format!(
            "error for a={a}, mu={mu}, n={n} not resolved at {digits} digits \
             (ln|err| = {err_log:.6} vs {check:.6} with guard digits)"
        )));
    }
    Ok(ApproxRecord {
        a,
        mu,
        n,
        p,
        q,
        err_log,
        predicted_exponent: corollary_exponent(a, n as f64),
    })
}

/// Rounds to six significant digits and drops the exponent notation.
pub(crate) fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".into()
    } else {
        s
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    a: u32,
    mu: u32,
    n: usize,
    p_num: String,
    p_den: String,
    q: String,
    err_log10: &'a serde_json::Value,
    predicted_log10: &'a serde_json::Value,
}

fn log_value(x: f64) -> serde_json::Value {
    sig6(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(serde_json::Value::Null, serde_json::Value::Number)
}

pub fn write_csv<W: Write>(out: &mut W, rows: &[ApproxRecord]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.a,
            r.mu,
            r.n,
            r.p.numer(),
            r.p.denom(),
            r.q,
            sig6(r.err_log10()),
            sig6(r.predicted_log10())
        )?;
    }
    Ok(())
}

pub fn write_json<W: Write>(out: &mut W, rows: &[ApproxRecord]) -> std::io::Result<()> {
    let logs: Vec<_> = rows
        .iter()
        .map(|r| (log_value(r.err_log10()), log_value(r.predicted_log10())))
        .collect();
    let json: Vec<JsonRow> = rows
        .iter()
        .zip(&logs)
        .map(|(r, (e, p))| JsonRow {
            a: r.a,
            mu: r.mu,
            n: r.n,
            p_num: r.p.numer().to_string(),
            p_den: r.p.denom().to_string(),
            q: r.q.to_string(),
            err_log10: e,
            predicted_log10: p,
        })
        .collect();
    serde_json::to_writer_pretty(&mut *out, &json)?;
    writeln!(out)
}
