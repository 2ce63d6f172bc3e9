use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{neg_one_pow, BigFix, Rat};

/// Correction tail that separates the residue sum from the contour integral
/// when the pole order is maximal:
///
/// `(n+1)^{-a} sum_{k>=0} (-1)^{(u+1)k + a-1} k!^{a-1} / ((n+2)_k)^a`.
///
/// Terms are summed exactly until they fall below `10^{-(digits+5)}`.
pub fn tail_series(a: u32, u: i64, n: u64, digits: u32) -> Result<BigFix> {
    if a < 2 {
        return Err(Error::Domain(format!("a = {a} must be at least 2")));
    }
    if n < 1 {
        return Err(Error::Domain("tail series needs n >= 1".into()));
    }
    if u.unsigned_abs() > u64::from(a) {
        return Err(Error::Domain(format!("|u| = {} exceeds a = {a}", u.abs())));
    }
    let cutoff = num_traits::pow(BigInt::from(10), digits as usize + 5);
    // |term_k|, advanced by the ratio (k+1)^{a-1} / (n+2+k)^a
    let mut magnitude = Rat::one();
    let mut sum = Rat::zero();
    let mut k: u64 = 0;
    loop {
        let sign = neg_one_pow((u + 1) * k as i64 + i64::from(a) - 1);
        sum += &magnitude * Rat::from_integer(sign.into());
        let ratio = Rat::new(
            num_traits::pow(BigInt::from(k + 1), a as usize - 1),
            num_traits::pow(BigInt::from(n + 2 + k), a as usize),
        );
        magnitude *= ratio;
        k += 1;
        if (magnitude.numer().abs() * &cutoff) < *magnitude.denom() {
            break;
        }
    }
    let scaled = sum / Rat::from_integer(num_traits::pow(BigInt::from(n + 1), a as usize));
    Ok(BigFix::from_rat(&scaled, digits))
}

/// The bound `e / (n+1)^a` on the tail's absolute value, at `digits` precision.
pub fn tail_bound(a: u32, n: u64, digits: u32) -> BigFix {
    let work = digits + 5;
    // e = sum 1/k!
    let mut e = Rat::zero();
    let mut term = Rat::one();
    let cutoff = num_traits::pow(BigInt::from(10), work as usize);
    let mut k: u64 = 0;
    while term.numer() * &cutoff >= *term.denom() {
        e += &term;
        k += 1;
        term /= Rat::from_integer(k.into());
    }
    e += term;
    let bound = e / Rat::from_integer(num_traits::pow(BigInt::from(n + 1), a as usize));
    BigFix::from_rat(&bound, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn within_bound() {
        for a in 2..=4u32 {
            for u in -(a as i64)..=a as i64 {
                for n in [1u64, 5, 10, 20] {
                    let t = tail_series(a, u, n, 30).unwrap();
                    assert!(t.abs() <= tail_bound(a, n, 30), "a={a} u={u} n={n}");
                }
            }
        }
    }

    #[test]
    fn leading_term() {
        // With digits tiny relative to the second term, only k = 0 survives.
        for a in 2..=4u32 {
            let n = 1_000_000u64;
            let t = tail_series(a, 0, n, 2 + 6 * a).unwrap();
            let sign = if (a - 1) % 2 == 0 { 1 } else { -1 };
            let first = Rat::new(BigInt::from(sign), num_traits::pow(BigInt::from(n + 1), a as usize));
            let diff = (&t - &BigFix::from_rat(&first, t.scale())).abs();
            // next term is (n+1)^-a (n+2)^-a, far below the working precision
            assert!(diff.mantissa() <= &BigInt::from(1), "a={a}");
        }
    }

    #[test]
    fn a2_n10_bound() {
        let t = tail_series(2, 1, 10, 40).unwrap();
        let bound = tail_bound(2, 10, 40);
        assert!(t.abs() <= bound);
        assert_eq!(bound, BigFix::from_rat(&(tail_bound(2, 10, 60).to_rat()), 40));
        let e_approx = Rat::new(
            BigInt::from(2_718_281_828_459_045_235u64),
            BigInt::from(10u64.pow(18)) * 121,
        );
        let e_over_121 = BigFix::from_rat(&e_approx, 15);
        assert_eq!(bound.rescale(15), e_over_121);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(tail_series(1, 0, 5, 10).is_err());
        assert!(tail_series(3, 4, 5, 10).is_err());
        assert!(tail_series(3, 0, 0, 10).is_err());
    }
}
