//! Roots of `p_u(t) = (-1)^u n (t-1)^a - t^{a-1}` near `t = 1`.

use num_complex::Complex64;
use serde::Serialize;

use super::{check_a, lagrange_coeff_unchecked, rat_to_f64};
use crate::error::{Error, Result};

const MAX_ITER: usize = 100;
const POLISH_STEPS: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CPoint {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for CPoint {
    fn from(z: Complex64) -> Self {
        CPoint { re: z.re, im: z.im }
    }
}

impl From<CPoint> for Complex64 {
    fn from(p: CPoint) -> Self {
        Complex64::new(p.re, p.im)
    }
}

fn check(a: u32, u: i64, n: f64) -> Result<()> {
    check_a(a)?;
    if u.unsigned_abs() > u64::from(a) {
        return Err(Error::Domain(format!("|u| = {} exceeds a = {a}", u.abs())));
    }
    if !(n.is_finite() && n >= 1.0) {
        return Err(Error::Domain(format!("n = {n} must be finite and at least 1")));
    }
    Ok(())
}

fn sign_u(u: i64) -> f64 {
    if u % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `p_u(t)` and `p_u'(t)`.
fn eval(a: u32, u: i64, n: f64, t: Complex64) -> (Complex64, Complex64) {
    let s = sign_u(u) * n;
    let af = f64::from(a);
    let d = t - 1.0;
    let d_pow = d.powu(a - 1);
    let t_pow = t.powu(a - 2);
    let value = d_pow * d * s - t_pow * t;
    let deriv = d_pow * (s * af) - t_pow * (af - 1.0);
    (value, deriv)
}

/// `p_u(t)` as a point value.
pub fn saddle_polynomial(a: u32, u: i64, n: f64, t: CPoint) -> CPoint {
    eval(a, u, n, t.into()).0.into()
}

/// `1 + sum_{m=1}^{terms} c_m w^m` with `w = e^{i(2 pi k - pi u)/a} n^{-1/a}`.
pub fn saddle_seed(a: u32, u: i64, n: f64, k: u32, terms: u32) -> Result<CPoint> {
    check(a, u, n)?;
    let af = f64::from(a);
    let angle = (2.0 * std::f64::consts::PI * f64::from(k) - std::f64::consts::PI * u as f64) / af;
    let w = Complex64::from_polar(n.powf(-1.0 / af), angle);
    let mut t = Complex64::new(1.0, 0.0);
    let mut w_pow = Complex64::new(1.0, 0.0);
    for m in 1..=terms {
        w_pow *= w;
        t += w_pow * rat_to_f64(&lagrange_coeff_unchecked(a, m));
    }
    Ok(t.into())
}

fn newton(a: u32, u: i64, n: f64, seed: Complex64) -> Result<Complex64> {
    let mut t = seed;
    let target = 1e-10 * n;
    for _ in 0..MAX_ITER {
        let (value, deriv) = eval(a, u, n, t);
        if value.norm() < target {
            for _ in 0..POLISH_STEPS {
                let (v, d) = eval(a, u, n, t);
                if d.norm() == 0.0 || v.norm() == 0.0 {
                    break;
                }
                let next = t - v / d;
                if eval(a, u, n, next).0.norm() > v.norm() {
                    break;
                }
                t = next;
            }
            return Ok(t);
        }
        if deriv.norm() == 0.0 || !deriv.is_finite() {
            break;
        }
        t -= value / deriv;
    }
    let residual = eval(a, u, n, t).0.norm();
    Err(Error::NoConvergence(format!(
        "Newton from seed {seed} for a={a}, u={u}, n={n} stalled at {t} (|p| = {residual:e})"
    )))
}

/// All `a` roots of `p_u`, refined from the order-3 expansion seeds, in
/// the order k = 0, ..., a-1.
pub fn saddle_roots(a: u32, u: i64, n: f64) -> Result<Vec<CPoint>> {
    check(a, u, n)?;
    let roots = (0..a)
        .map(|k| {
            let seed = saddle_seed(a, u, n, k, 3)?;
            newton(a, u, n, seed.into())
        })
        .collect::<Result<Vec<_>>>()?;
    let min_gap = n.powf(-2.0 / f64::from(a));
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let gap = (roots[i] - roots[j]).norm();
            if gap <= min_gap {
                return Err(Error::NoConvergence(format!(
                    "roots {i} and {j} for a={a}, u={u}, n={n} coincide (gap {gap:e})"
                )));
            }
        }
    }
    Ok(roots.into_iter().map(CPoint::from).collect())
}
