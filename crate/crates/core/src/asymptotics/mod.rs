//! Exponent coefficients `b_m(a)`, the growth and decay exponents built from
//! them, and the saddle-point roots behind the expansion.

mod saddle;

pub use saddle::{saddle_polynomial, saddle_roots, saddle_seed, CPoint};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::numerics::{factorial, gamma_const, poch, rat, BigFix, Rat};
use crate::powerseries::{ps_log1p, SeriesQ};
use crate::sequences::{aptekarev_value, q_value};

fn check_a(a: u32) -> Result<()> {
    if a < 2 {
        return Err(Error::Domain(format!("a = {a} must be at least 2")));
    }
    Ok(())
}

/// `b_1(a), ..., b_a(a)`: the coefficients through `z^a` of
/// `-a log(1 + sum_m (2-(m+1)/a)_m/(m+1)! z^m) - sum_m (2-m/a)_{m-1}/m! z^m`.
pub fn bm_coeffs(a: u32) -> Result<Vec<Rat>> {
    check_a(a)?;
    let order = a as usize;
    let a_rat = Rat::from_integer(BigInt::from(a));
    let inner = SeriesQ::from_fn(order, |m| {
        if m == 0 {
            return Rat::zero();
        }
        let x = rat(2, 1) - rat(m as i64 + 1, 1) / &a_rat;
        poch(&x, m as u64) / Rat::from_integer(factorial(m as u64 + 1))
    });
    let log = ps_log1p(&inner)?;
    Ok((1..=order)
        .map(|m| {
            let lin = lagrange_coeff_unchecked(a, m as u32);
            -(log.coeff(m) * &a_rat) - lin
        })
        .collect())
}

fn lagrange_coeff_unchecked(a: u32, m: u32) -> Rat {
    let x = rat(2, 1) - rat(i64::from(m), i64::from(a));
    poch(&x, u64::from(m) - 1) / Rat::from_integer(factorial(u64::from(m)))
}

/// `c_m = (2 - m/a)_{m-1} / m!`, the coefficient of `w^m` in the root of
/// `t = w (1 + t)^{1 - 1/a}`.
pub fn lagrange_coeff(a: u32, m: u32) -> Result<Rat> {
    check_a(a)?;
    if m == 0 {
        return Err(Error::Domain("Lagrange coefficients start at m = 1".into()));
    }
    Ok(lagrange_coeff_unchecked(a, m))
}

/// `cos(2 pi m / a)` when it is rational.
pub fn rational_cos(m: u32, a: u32) -> Option<Rat> {
    let g = m.gcd(&a);
    let (p, q) = ((m / g) % (a / g), a / g);
    let v = match (q, p) {
        (1, _) => rat(1, 1),
        (2, _) => rat(-1, 1),
        (3, _) => rat(-1, 2),
        (4, _) => rat(0, 1),
        (6, 1) | (6, 5) => rat(1, 2),
        _ => return None,
    };
    Some(v)
}

fn cos_f64(m: u32, a: u32) -> f64 {
    match rational_cos(m, a) {
        Some(c) => rat_to_f64(&c),
        None => (2.0 * std::f64::consts::PI * f64::from(m) / f64::from(a)).cos(),
    }
}

pub(crate) fn rat_to_f64(x: &Rat) -> f64 {
    let num = x.numer().to_f64().unwrap_or(f64::NAN);
    let den = x.denom().to_f64().unwrap_or(f64::NAN);
    if num.is_finite() && den.is_finite() {
        num / den
    } else {
        BigFix::from_rat(x, 20).to_f64()
    }
}

/// Which exponent a profile describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    /// Decay of the linear forms: weights `cos(2 pi m / a)`, m < a.
    TheoremLinearForm,
    /// Growth of q_n: unit weights, including the constant m = a term.
    TheoremQn,
    /// Decay of `alpha_mu - p/q`: weights `cos(2 pi m / a) - 1`, m < a.
    Corollary,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 3] = [
        ProfileKind::TheoremLinearForm,
        ProfileKind::TheoremQn,
        ProfileKind::Corollary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProfileKind::TheoremLinearForm => "theorem-linear-form",
            ProfileKind::TheoremQn => "theorem-qn",
            ProfileKind::Corollary => "corollary",
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProfileKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProfileKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Domain(format!("unknown exponent kind '{s}'")))
    }
}

/// One term `coeff * n^power` of an exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentTerm {
    pub coeff: Rat,
    pub power: Rat,
}

impl fmt::Display for ExponentTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power.is_zero() {
            write!(f, "{}", self.coeff)
        } else {
            write!(f, "{}*n^({})", self.coeff, self.power)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub a: u32,
    /// `b_1, ..., b_a`.
    pub b: Vec<Rat>,
    pub kind: ProfileKind,
}

impl ExponentProfile {
    pub fn new(a: u32, kind: ProfileKind) -> Result<Self> {
        Ok(ExponentProfile {
            a,
            b: bm_coeffs(a)?,
            kind,
        })
    }

    fn weight_f64(&self, m: u32) -> f64 {
        match self.kind {
            ProfileKind::TheoremQn => 1.0,
            ProfileKind::TheoremLinearForm => cos_f64(m, self.a),
            ProfileKind::Corollary => cos_f64(m, self.a) - 1.0,
        }
    }

    fn top(&self) -> u32 {
        match self.kind {
            ProfileKind::TheoremQn => self.a,
            _ => self.a - 1,
        }
    }

    /// The exponent as exact terms, or `None` when some `cos(2 pi m / a)` is irrational.
    pub fn terms(&self) -> Option<Vec<ExponentTerm>> {
        let mut out = Vec::new();
        for m in 1..=self.top() {
            let weight = match self.kind {
                ProfileKind::TheoremQn => rat(1, 1),
                ProfileKind::TheoremLinearForm => rational_cos(m, self.a)?,
                ProfileKind::Corollary => rational_cos(m, self.a)? - rat(1, 1),
            };
            let sign = if m % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            let coeff = sign * &self.b[m as usize - 1] * weight;
            if !coeff.is_zero() {
                out.push(ExponentTerm {
                    coeff,
                    power: rat(1, 1) - rat(i64::from(m), i64::from(self.a)),
                });
            }
        }
        Some(out)
    }

    /// `sum_m (-1)^m b_m w_m n^{1-m/a}` in double precision.
    pub fn eval(&self, n: f64) -> f64 {
        (1..=self.top())
            .map(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let power = 1.0 - f64::from(m) / f64::from(self.a);
                let np = if power == 0.0 { 1.0 } else { n.powf(power) };
                sign * rat_to_f64(&self.b[m as usize - 1]) * self.weight_f64(m) * np
            })
            .sum()
    }

    /// JSON object with `a`, `kind`, `b` as fraction strings and, when exact,
    /// the terms of the exponent.
    pub fn to_json(&self) -> serde_json::Value {
        let b: Vec<String> = self.b.iter().map(ToString::to_string).collect();
        let mut v = json!({ "a": self.a, "kind": self.kind.as_str(), "b": b });
        if let Some(terms) = self.terms() {
            v["terms"] = terms
                .iter()
                .map(|t| json!({ "coeff": t.coeff.to_string(), "power": t.power.to_string() }))
                .collect();
        }
        v
    }
}

fn profile_eval(a: u32, kind: ProfileKind, n: f64) -> f64 {
    ExponentProfile::new(a, kind)
        .expect("exponent profiles exist for a >= 2")
        .eval(n)
}

/// `sum_{m=1}^{a-1} (-1)^m b_m(a) cos(2 pi m / a) n^{1-m/a}`. Panics if `a < 2`.
pub fn linform_exponent(a: u32, n: f64) -> f64 {
    profile_eval(a, ProfileKind::TheoremLinearForm, n)
}

/// `sum_{m=1}^{a-1} (-1)^m b_m(a) (cos(2 pi m / a) - 1) n^{1-m/a}`. Panics if `a < 2`.
pub fn corollary_exponent(a: u32, n: f64) -> f64 {
    profile_eval(a, ProfileKind::Corollary, n)
}

/// `ln n!` by direct summation.
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// Natural log of the main term of q_n:
/// `n! exp(sum_{m=1}^{a} (-1)^m b_m n^{1-m/a}) / (sqrt(a) (2 pi)^{(a-1)/2} n^{a/2 + 1/(2a) - 1})`.
pub fn qn_log_asymptotic(a: u32, n: u64) -> Result<f64> {
    check_a(a)?;
    if n == 0 {
        return Err(Error::Domain("q_n asymptotics need n >= 1".into()));
    }
    let af = f64::from(a);
    let nf = n as f64;
    let power = af / 2.0 + 1.0 / (2.0 * af) - 1.0;
    let prefactor = 0.5 * af.ln() + (af - 1.0) / 2.0 * (2.0 * std::f64::consts::PI).ln();
    let exponent = ExponentProfile::new(a, ProfileKind::TheoremQn)?.eval(nf);
    Ok(ln_factorial(n) - prefactor - power * nf.ln() + exponent)
}

fn ln_bigint(x: &BigInt) -> f64 {
    BigFix::from_mantissa(x.clone(), 0).ln_abs_f64()
}

/// `q_n / exp(qn_log_asymptotic(a, n))`.
pub fn qn_ratio(a: u32, n: u64) -> Result<f64> {
    let q = q_value(a, n as usize)?;
    Ok((ln_bigint(&q) - qn_log_asymptotic(a, n)?).exp())
}

/// `(p~_n / q~_n - γ) / (2 pi e^{-2 sqrt(2n)})` for Aptekarev's sequences.
pub fn aptekarev_ratio(n: usize) -> Result<f64> {
    let decay = 2.0 * (2.0 * n as f64).sqrt();
    let digits = (decay / std::f64::consts::LN_10).ceil() as u32 + 30;
    let (q, p) = aptekarev_value(n);
    let approx = BigFix::from_rat(&(p / Rat::from_integer(q)), digits);
    let diff = &approx - &gamma_const(digits)?;
    if diff.is_zero() {
        return Err(Error::Precision(format!("error vanishes at {digits} digits")));
    }
    let sign = if diff.mantissa().is_negative() { -1.0 } else { 1.0 };
    let ln_ratio = diff.ln_abs_f64() - (2.0 * std::f64::consts::PI).ln() + decay;
    Ok(sign * ln_ratio.exp())
}
