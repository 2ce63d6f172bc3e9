//! Reference constants computed from scratch: γ and ζ(m) by Euler–Maclaurin
//! summation, π by Machin's formula.
//!
//! Every public value is certified by computing at two guard-digit levels
//! and requiring both to round to the same published digits.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bigfix::pow10;
use super::{binom_unchecked, BigFix, Rat};
use crate::error::{Error, Result};

/// Largest decimal precision the oracles accept.
pub const MAX_DIGITS: u32 = 10_000;

const GUARD: u32 = 10;

/// Lazily extended table of Bernoulli numbers B_0, B_1, ... (B_1 = -1/2).
struct BernoulliSeq {
    values: Vec<Rat>,
}

impl BernoulliSeq {
    fn new() -> Self {
        BernoulliSeq {
            values: vec![Rat::one()],
        }
    }

    fn get(&mut self, n: usize) -> &Rat {
        while self.values.len() <= n {
            let m = self.values.len() as u64;
            if m > 1 && m % 2 == 1 {
                self.values.push(Rat::zero());
                continue;
            }
            // sum_{j=0}^{m} C(m+1, j) B_j = 0
            let mut acc = Rat::zero();
            for (j, b) in self.values.iter().enumerate() {
                if !b.numer().is_zero() {
                    acc += b * Rat::from_integer(binom_unchecked(m + 1, j as u64));
                }
            }
            self.values.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
        }
        &self.values[n]
    }
}

/// Bernoulli numbers B_0 ..= B_n with the B_1 = -1/2 convention.
pub fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    let mut seq = BernoulliSeq::new();
    seq.get(n);
    seq.values.truncate(n + 1);
    seq.values
}

fn below_ulp(term: &Rat, scale: u32) -> bool {
    (term.numer().abs() * pow10(scale)) < *term.denom()
}

fn check_digits(digits: u32) -> Result<()> {
    if digits == 0 {
        return Err(Error::Domain("precision must be at least one digit".into()));
    }
    if digits > MAX_DIGITS {
        return Err(Error::Precision(format!(
            "requested {digits} digits, limit is {MAX_DIGITS}"
        )));
    }
    Ok(())
}

/// Runs `f` at two guard levels and returns the agreed rounding to `digits`.
fn certified(digits: u32, f: impl Fn(u32) -> Result<BigFix>) -> Result<BigFix> {
    let mut lo = f(digits + GUARD)?.rescale(digits);
    for extra in 1..=3 {
        let hi = f(digits + GUARD * (extra + 1))?.rescale(digits);
        if hi == lo {
            return Ok(hi);
        }
        lo = hi;
    }
    Err(Error::Precision(format!(
        "guard-digit runs disagree at {digits} digits"
    )))
}

/// Sum of 1/k^m for k in 1..=n at the given scale.
fn power_sum(n: u64, m: u32, scale: u32) -> BigFix {
    let unit = pow10(scale);
    let mut mantissa = BigInt::zero();
    for k in 1..=n {
        let den = num_traits::pow(BigInt::from(k), m as usize);
        mantissa += super::bigfix::div_round(&unit, &den);
    }
    BigFix::from_mantissa(mantissa, scale)
}

fn gamma_uncertified(work: u32) -> Result<BigFix> {
    let n = u64::from(work.max(10));
    // Each of the n reciprocals carries half an ulp of rounding error.
    let scale = work + 2 + (n as f64).log10().ceil() as u32;
    let n_big = BigInt::from(n);
    let mut acc = &power_sum(n, 1, scale) - &BigFix::from_int(n, scale).ln();
    acc = &acc - &BigFix::from_rat(&Rat::new(BigInt::one(), &n_big * 2), scale);

    let mut bern = BernoulliSeq::new();
    let n_sq = Rat::from_integer(&n_big * &n_big);
    let mut n_pow = n_sq.clone();
    for k in 1u64.. {
        if k > 4 * n {
            return Err(Error::NoConvergence(
                "Euler–Maclaurin tail for γ did not drop below working precision".into(),
            ));
        }
        let b = bern.get(2 * k as usize).clone();
        let term = b / (Rat::from_integer(BigInt::from(2 * k)) * &n_pow);
        if below_ulp(&term, scale) {
            break;
        }
        acc = &acc + &BigFix::from_rat(&term, scale);
        n_pow *= &n_sq;
    }
    Ok(acc.rescale(work))
}

/// Euler's constant γ correct to `digits` decimal places (rounded).
pub fn gamma_const(digits: u32) -> Result<BigFix> {
    check_digits(digits)?;
    certified(digits, gamma_uncertified)
}

fn zeta_uncertified(m: u32, work: u32) -> Result<BigFix> {
    let n = u64::from(work.max(10));
    let scale = work + 2 + (n as f64).log10().ceil() as u32;
    let n_big = BigInt::from(n);
    let n_rat = Rat::from_integer(n_big.clone());
    let m_big = BigInt::from(m);

    let mut acc = power_sum(n - 1, m, scale);
    let n_pow_m = num_traits::pow(n_rat.clone(), m as usize);
    // N^(1-m)/(m-1) + N^(-m)/2
    acc = &acc + &BigFix::from_rat(&(&n_rat / (&n_pow_m * Rat::from_integer(&m_big - 1))), scale);
    acc = &acc + &BigFix::from_rat(&(Rat::one() / (&n_pow_m * Rat::from_integer(BigInt::from(2)))), scale);

    let mut bern = BernoulliSeq::new();
    // running = (m)_{2j-1} / ((2j)! N^{m+2j-1})
    let mut running = Rat::from_integer(m_big.clone()) / (Rat::from_integer(BigInt::from(2)) * &n_pow_m * &n_rat);
    for j in 1u64.. {
        if j > 4 * n {
            return Err(Error::NoConvergence(format!(
                "Euler–Maclaurin tail for ζ({m}) did not drop below working precision"
            )));
        }
        let term = bern.get(2 * j as usize) * &running;
        if !term.numer().is_zero() && below_ulp(&term, scale) {
            break;
        }
        acc = &acc + &BigFix::from_rat(&term, scale);
        // advance (m)_{2j-1} -> (m)_{2j+1}, (2j)! -> (2j+2)!, N-power by 2
        let a = BigInt::from(m) + 2 * j - 1;
        let b = BigInt::from(m) + 2 * j;
        running = running * Rat::new(a * b, BigInt::from((2 * j + 1) * (2 * j + 2)) * &n_big * &n_big);
    }
    Ok(acc.rescale(work))
}

/// ζ(m) for integer m ≥ 2, correct to `digits` decimal places (rounded).
pub fn zeta_const(m: u32, digits: u32) -> Result<BigFix> {
    if m < 2 {
        return Err(Error::Domain(format!("zeta({m}) requires m >= 2")));
    }
    check_digits(digits)?;
    certified(digits, |w| zeta_uncertified(m, w))
}

fn arctan_inv(k: u64, scale: u32) -> BigFix {
    let k_big = BigInt::from(k);
    let k_sq = &k_big * &k_big;
    let mut power = BigFix::from_rat(&Rat::new(BigInt::one(), k_big), scale);
    let mut sum = BigFix::zero(scale);
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = power.div_int(&BigInt::from(2 * j + 1));
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        power = power.div_int(&k_sq);
        j += 1;
    }
    sum
}

fn pi_uncertified(work: u32) -> Result<BigFix> {
    let scale = work + 5;
    let a = arctan_inv(5, scale).mul_rat(&Rat::from_integer(BigInt::from(16)));
    let b = arctan_inv(239, scale).mul_rat(&Rat::from_integer(BigInt::from(4)));
    Ok((&a - &b).rescale(work))
}

/// π correct to `digits` decimal places (Machin's formula).
pub fn pi_const(digits: u32) -> Result<BigFix> {
    check_digits(digits)?;
    certified(digits, pi_uncertified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn bernoulli_small_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[10], rat(5, 66));
        assert_eq!(b[12], rat(-691, 2730));
    }

    #[test]
    fn gamma_ten_digits() {
        assert_eq!(gamma_const(10).unwrap().to_string(), "0.5772156649");
    }

    #[test]
    fn gamma_one_digit_rounds() {
        assert_eq!(gamma_const(1).unwrap().to_string(), "0.6");
    }

    #[test]
    fn gamma_reference_digits() {
        // OEIS A001620
        let expected = "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495";
        assert_eq!(gamma_const(100).unwrap().to_string(), expected);
    }

    #[test]
    fn gamma_precision_monotone() {
        let g50 = gamma_const(50).unwrap();
        let g60 = gamma_const(60).unwrap();
        assert_eq!(g50.rescale(10), gamma_const(10).unwrap());
        assert_eq!(g60.rescale(50), g50);
    }

    #[test]
    fn zeta_three() {
        assert_eq!(zeta_const(3, 10).unwrap().to_string(), "1.2020569032");
        // OEIS A002117
        assert_eq!(
            zeta_const(3, 40).unwrap().to_string(),
            "1.2020569031595942853997381615114499907650"
        );
    }

    #[test]
    fn zeta_even_matches_pi_powers() {
        let digits = 60;
        let work = digits + 10;
        let pi = pi_const(work).unwrap();
        let pi2 = &pi * &pi;
        let z2 = pi2.div_int(&BigInt::from(6)).rescale(digits);
        assert_eq!(zeta_const(2, digits).unwrap(), z2);
        let z4 = (&pi2 * &pi2).div_int(&BigInt::from(90)).rescale(digits);
        assert_eq!(zeta_const(4, digits).unwrap(), z4);
    }

    #[test]
    fn zeta_guard_agreement() {
        for m in 2..=6 {
            let lo = zeta_const(m, 40).unwrap();
            let hi = zeta_const(m, 50).unwrap();
            assert_eq!(hi.rescale(40), lo, "m={m}");
        }
    }

    #[test]
    fn pi_digits() {
        assert_eq!(
            pi_const(50).unwrap().to_string(),
            "3.14159265358979323846264338327950288419716939937511"
        );
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(zeta_const(1, 10), Err(Error::Domain(_))));
        assert!(matches!(gamma_const(MAX_DIGITS + 1), Err(Error::Precision(_))));
        assert!(gamma_const(0).is_err());
    }
}
