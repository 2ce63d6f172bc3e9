//! Exact integer and rational primitives, fixed-point reals, and the
//! independent high-precision oracles for γ and ζ(m).

mod bigfix;
mod constants;

pub use bigfix::BigFix;
pub use constants::{bernoulli_numbers, gamma_const, pi_const, zeta_const, MAX_DIGITS};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Builds a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `n choose k`. Rejects `k > n`.
pub fn binom(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!("binom({n}, {k}): k exceeds n")));
    }
    Ok(binom_unchecked(n, k))
}

pub(crate) fn binom_unchecked(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `lcm(1, 2, ..., n)`, usually written D_n.
pub fn lcm_upto(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(k)))
}

/// Table `D_0, D_1, ..., D_n` with `D_0 = 1`.
pub fn lcm_table(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BigInt::one());
    let mut acc = BigInt::one();
    for k in 1..=n {
        acc = acc.lcm(&BigInt::from(k));
        out.push(acc.clone());
    }
    out
}

/// Rising factorial `x (x+1) ... (x+m-1)`; `poch(x, 0) = 1`.
pub fn poch(x: &Rat, m: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..m {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// True when the rational is an integer.
pub fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// `x^e` for a rational and a non-negative exponent.
pub fn rat_pow(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

/// Sign `(-1)^e` for any integer exponent.
pub fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    fn pascal(n: usize) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::one()]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![BigInt::one(); i + 1];
            for j in 1..i {
                row[j] = &prev[j - 1] + &prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        let mut oracle = BigInt::one();
        for k in 1..=20u32 {
            oracle *= k;
        }
        assert_eq!(oracle.to_string(), "2432902008176640000");
        assert_eq!(factorial(20), oracle);
    }

    #[test]
    fn binom_values() {
        assert_eq!(binom(4, 2).unwrap(), BigInt::from(6));
        for n in 0..10 {
            assert_eq!(binom(n, 0).unwrap(), BigInt::one());
        }
        let rows = pascal(30);
        assert_eq!(rows[30][15], BigInt::from(155117520));
        assert_eq!(binom(30, 15).unwrap(), rows[30][15]);
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binom(n as u64, k as u64).unwrap(), v);
            }
        }
    }

    #[test]
    fn binom_rejects_k_above_n() {
        assert!(binom(3, 4).is_err());
    }

    #[test]
    fn lcm_values() {
        fn pairwise(n: u64) -> u64 {
            (1..=n).fold(1, |acc, k| acc / num_integer::gcd(acc, k) * k)
        }
        assert_eq!(lcm_upto(1), BigInt::one());
        assert_eq!(lcm_upto(6), BigInt::from(pairwise(6)));
        assert_eq!(lcm_upto(6), BigInt::from(60));
        assert_eq!(lcm_upto(10), BigInt::from(2520));
        let table = lcm_table(40);
        for n in 1..=40 {
            assert_eq!(table[n as usize], BigInt::from(pairwise(n)));
        }
    }

    fn is_prime_power(mut x: u64) -> bool {
        if x < 2 {
            return false;
        }
        let mut p = 2;
        while x % p != 0 {
            p += 1;
        }
        while x % p == 0 {
            x /= p;
        }
        x == 1
    }

    #[test]
    fn lcm_divisibility_and_prime_power_steps() {
        let table = lcm_table(50);
        for n in 1..=50u64 {
            let d = &table[n as usize];
            for k in 1..=n {
                assert!((d % BigInt::from(k)).is_zero());
            }
            let step = d / &table[n as usize - 1];
            let step: u64 = step.try_into().unwrap();
            assert!(step == 1 || is_prime_power(step), "n={n} step={step}");
        }
    }

    #[test]
    fn poch_values() {
        assert_eq!(poch(&rat(1, 1), 4), rat(24, 1));
        assert_eq!(poch(&rat(-7, 3), 0), rat(1, 1));
        assert_eq!(poch(&rat(3, 2), 2), rat(15, 4));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn poch_step(x in small_rat(), m in 0u64..30) {
            let lhs = poch(&x, m + 1);
            let rhs = poch(&x, m) * (x.clone() + rat_int(m));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rat_canonical(n in -1000i64..1000, d in (-1000i64..1000).prop_filter("nonzero", |d| *d != 0)) {
            let r = rat(n, d);
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().abs().gcd(r.denom()).is_one() || r.numer().is_zero());
        }

        #[test]
        fn rat_field_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        }
    }
}
