//! Dense truncated power series with exact rational coefficients.
//!
//! A series of order N stores the coefficients of z^0 ..= z^N. Results of
//! every operation have the order of their inputs (the minimum, when two
//! orders differ); nothing beyond that order is represented.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{rat_int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rat>,
}

impl SeriesQ {
    /// Series of the given order from leading coefficients; missing ones are zero,
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        SeriesQ { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesQ::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        SeriesQ::new(vec![Rat::one()], order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        SeriesQ::new(vec![Rat::zero(), Rat::one()], order)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        SeriesQ {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        SeriesQ::new(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Termwise derivative; order drops by one (kept at zero for constants).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        SeriesQ::from_fn(order, |k| {
            self.coeffs
                .get(k + 1)
                .map(|c| c * rat_int(k as i64 + 1))
                .unwrap_or_else(Rat::zero)
        })
    }

    /// Antiderivative with zero constant term, truncated at `order`.
    pub fn integral(&self, order: usize) -> Self {
        SeriesQ::from_fn(order, |k| {
            if k == 0 {
                Rat::zero()
            } else {
                self.coeffs
                    .get(k - 1)
                    .map(|c| c / rat_int(k as i64))
                    .unwrap_or_else(Rat::zero)
            }
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = SeriesQ::one(self.order());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = ps_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = ps_mul(&base, &base);
            }
        }
        acc
    }
}

/// Truncated Cauchy product.
pub fn ps_mul(s: &SeriesQ, t: &SeriesQ) -> SeriesQ {
    let order = s.order().min(t.order());
    let mut out = vec![Rat::zero(); order + 1];
    for (i, a) in s.coeffs.iter().take(order + 1).enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in t.coeffs.iter().take(order + 1 - i).enumerate() {
            out[i + j] += a * b;
        }
    }
    SeriesQ { coeffs: out }
}

/// `1/s` by Newton iteration `r <- r (2 - s r)`, doubling correct terms each step.
pub fn ps_recip(s: &SeriesQ) -> Result<SeriesQ> {
    let c0 = s.coeff(0);
    if c0.is_zero() {
        return Err(Error::Domain(
            "reciprocal needs a nonzero constant term".into(),
        ));
    }
    let order = s.order();
    let mut r = SeriesQ::new(vec![c0.recip()], 0);
    let mut known = 1;
    while known <= order {
        known = (2 * known).min(order + 1);
        let target = known - 1;
        let r_t = r.truncate(target);
        let sr = ps_mul(&s.truncate(target), &r_t);
        let two_minus = &SeriesQ::new(vec![rat_int(2)], target) - &sr;
        r = ps_mul(&r_t, &two_minus);
    }
    Ok(r.truncate(order))
}

/// `exp(s)` from `(exp s)' = exp(s) s'`: `n e_n = sum_{k=1}^n k s_k e_{n-k}`.
pub fn ps_exp(s: &SeriesQ) -> Result<SeriesQ> {
    if !s.coeff(0).is_zero() {
        return Err(Error::Domain("exp needs a zero constant term".into()));
    }
    let order = s.order();
    let mut e: Vec<Rat> = Vec::with_capacity(order + 1);
    e.push(Rat::one());
    for n in 1..=order {
        let mut acc = Rat::zero();
        for k in 1..=n {
            let sk = s.coeff(k);
            if !sk.is_zero() {
                acc += sk * &e[n - k] * Rat::from_integer(BigInt::from(k));
            }
        }
        e.push(acc / rat_int(n as i64));
    }
    Ok(SeriesQ { coeffs: e })
}

/// `log(1 + s)` as the integral of `s' / (1 + s)`.
pub fn ps_log1p(s: &SeriesQ) -> Result<SeriesQ> {
    if !s.coeff(0).is_zero() {
        return Err(Error::Domain("log1p needs a zero constant term".into()));
    }
    let order = s.order();
    if order == 0 {
        return Ok(SeriesQ::zero(0));
    }
    let one_plus = &SeriesQ::one(order) + s;
    let quotient = ps_mul(&s.derivative(), &ps_recip(&one_plus.truncate(order - 1))?);
    Ok(quotient.integral(order))
}

fn zip_with(s: &SeriesQ, t: &SeriesQ, f: impl Fn(&Rat, &Rat) -> Rat) -> SeriesQ {
    let order = s.order().min(t.order());
    SeriesQ::from_fn(order, |k| f(s.coeff(k), t.coeff(k)))
}

impl<'a> Add<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn add(self, other: &SeriesQ) -> SeriesQ {
        zip_with(self, other, |a, b| a + b)
    }
}

impl<'a> Sub<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn sub(self, other: &SeriesQ) -> SeriesQ {
        zip_with(self, other, |a, b| a - b)
    }
}

impl<'a> Mul<&'a SeriesQ> for &'a SeriesQ {
    type Output = SeriesQ;
    fn mul(self, other: &SeriesQ) -> SeriesQ {
        ps_mul(self, other)
    }
}

impl Neg for &SeriesQ {
    type Output = SeriesQ;
    fn neg(self) -> SeriesQ {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{factorial, rat};
    use proptest::prelude::*;

    fn series(cs: &[i64], order: usize) -> SeriesQ {
        SeriesQ::new(cs.iter().map(|&c| rat(c, 1)).collect(), order)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(ps_mul(&series(&[1, 1], 2), &series(&[1, -1], 2)), series(&[1, 0, -1], 2));
    }

    #[test]
    fn recip_examples() {
        assert_eq!(ps_recip(&series(&[1, 1], 3)).unwrap(), series(&[1, -1, 1, -1], 3));
        assert!(ps_recip(&series(&[0, 1], 3)).is_err());
        assert_eq!(ps_recip(&series(&[4], 0)).unwrap().coeffs(), &[rat(1, 4)]);
    }

    #[test]
    fn exp_examples() {
        let e = ps_exp(&SeriesQ::var(4)).unwrap();
        let expected: Vec<Rat> = (0..=4).map(|k| Rat::new(1.into(), factorial(k))).collect();
        assert_eq!(e.coeffs(), expected.as_slice());
        assert!(ps_exp(&series(&[1], 3)).is_err());
    }

    #[test]
    fn log1p_examples() {
        let l = ps_log1p(&SeriesQ::var(3)).unwrap();
        assert_eq!(l.coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 2), rat(1, 3)]);
        assert_eq!(ps_log1p(&SeriesQ::zero(5)).unwrap(), SeriesQ::zero(5));
        assert!(ps_log1p(&series(&[2, 1], 3)).is_err());
    }

    /// log(1+s) by the Mercator sum over powers of s.
    fn mercator(s: &SeriesQ) -> SeriesQ {
        let order = s.order();
        let mut acc = SeriesQ::zero(order);
        let mut power = SeriesQ::one(order);
        for k in 1..=order as i64 {
            power = ps_mul(&power, s);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&rat(sign, k));
        }
        acc
    }

    fn arb_series(zero_constant: bool) -> impl Strategy<Value = SeriesQ> {
        (proptest::collection::vec((-9i64..10, 1i64..6), 1..=11), -5i64..6).prop_map(
            move |(cs, c0)| {
                let order = cs.len() - 1;
                let mut v: Vec<Rat> = cs.iter().map(|(n, d)| rat(*n, *d)).collect();
                v[0] = if zero_constant { rat(0, 1) } else if c0 == 0 { rat(1, 1) } else { rat(c0, 1) };
                SeriesQ::new(v, order)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn recip_is_inverse(s in arb_series(false)) {
            let r = ps_recip(&s).unwrap();
            prop_assert_eq!(ps_mul(&s, &r), SeriesQ::one(s.order()));
        }

        #[test]
        fn exp_log_round_trip(s in arb_series(true)) {
            let e = ps_exp(&s).unwrap();
            let back = ps_log1p(&(&e - &SeriesQ::one(s.order()))).unwrap();
            prop_assert_eq!(back, s.clone());
            let l = ps_log1p(&s).unwrap();
            prop_assert_eq!(ps_exp(&l).unwrap(), &SeriesQ::one(s.order()) + &s);
        }

        #[test]
        fn log1p_matches_mercator(s in arb_series(true)) {
            prop_assert_eq!(ps_log1p(&s).unwrap(), mercator(&s));
        }
    }
}
