//! Generalized Bernoulli polynomials B_n^{(m)}(x), defined by
//! `(z/(e^z - 1))^m e^{xz} = sum_n B_n^{(m)}(x) z^n / n!`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{factorial, Rat};
use crate::polyq::PolyQ;
use crate::powerseries::{ps_recip, SeriesQ};

pub const MAX_INDEX: u32 = 200;
pub const MAX_ORDER: u32 = 50;
pub const MAX_CSC_TERMS: usize = 50;

/// Coefficients of `(z/(e^z - 1))^m` through `z^n_max`.
fn todd_power(m: u32, n_max: usize) -> Result<SeriesQ> {
    // (e^z - 1)/z = sum_j z^j/(j+1)!
    let base = SeriesQ::from_fn(n_max, |j| Rat::new(BigInt::one(), factorial(j as u64 + 1)));
    Ok(ps_recip(&base)?.pow(m))
}

fn check_range(n: u32, m: u32) -> Result<()> {
    if n > MAX_INDEX || m == 0 || m > MAX_ORDER {
        return Err(Error::Domain(format!(
            "B_n^(m) supported for n <= {MAX_INDEX}, 1 <= m <= {MAX_ORDER}; got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// B_0^{(m)}(x), ..., B_{n_max}^{(m)}(x) from one series expansion.
pub fn gen_bernoulli_table(n_max: u32, m: u32) -> Result<Vec<PolyQ>> {
    check_range(n_max, m)?;
    let c = todd_power(m, n_max as usize)?;
    let inv_fact: Vec<Rat> = (0..=u64::from(n_max))
        .map(|i| Rat::new(BigInt::one(), factorial(i)))
        .collect();
    Ok((0..=n_max as usize)
        .map(|n| {
            let n_fact = Rat::from_integer(factorial(n as u64));
            // B_n(x) = n! sum_i c_{n-i} x^i / i!
            PolyQ::new(
                (0..=n)
                    .map(|i| c.coeff(n - i) * &inv_fact[i] * &n_fact)
                    .collect(),
            )
        })
        .collect())
}

/// B_n^{(m)}(x) as an exact polynomial in x.
pub fn gen_bernoulli(n: u32, m: u32) -> Result<PolyQ> {
    Ok(gen_bernoulli_table(n, m)?.pop().expect("table holds index n"))
}

/// B_n^{(m)}(x) at a rational point.
pub fn bernoulli_at(n: u32, m: u32, x: &Rat) -> Result<Rat> {
    Ok(gen_bernoulli(n, m)?.eval(x))
}

/// Coefficients of z^{2n}, n = 0..=terms, in `(z / sin z)^m`, by inverting
/// the sine series directly.
pub fn csc_power_coeffs_direct(m: u32, terms: usize) -> Result<Vec<Rat>> {
    let order = 2 * terms;
    // sin z / z = sum_j (-1)^j z^{2j} / (2j+1)!
    let sinc = SeriesQ::from_fn(order, |k| {
        if k % 2 == 1 {
            return Rat::zero();
        }
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        Rat::new(BigInt::from(sign), factorial(k as u64 + 1))
    });
    let s = ps_recip(&sinc)?.pow(m);
    Ok((0..=terms).map(|n| s.coeff(2 * n).clone()).collect())
}

/// Coefficients of z^{2n} in `(z / sin z)^m` via
/// `(-1)^n 4^n B_{2n}^{(m)}(m/2) / (2n)!`, cross-checked against the direct
/// inversion of the sine series.
pub fn csc_power_coeffs(m: u32, terms: usize) -> Result<Vec<Rat>> {
    if terms > MAX_CSC_TERMS {
        return Err(Error::Domain(format!(
            "at most {MAX_CSC_TERMS} terms supported, got {terms}"
        )));
    }
    let table = gen_bernoulli_table(2 * terms as u32, m)?;
    let half_m = Rat::new(BigInt::from(m), BigInt::from(2));
    let via_bernoulli: Vec<Rat> = (0..=terms)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let four_n = num_traits::pow(BigInt::from(4), n);
            table[2 * n].eval(&half_m) * Rat::new(four_n * sign, factorial(2 * n as u64))
        })
        .collect();
    let direct = csc_power_coeffs_direct(m, terms)?;
    if direct != via_bernoulli {
        return Err(Error::Identity(format!(
            "(z/sin z)^{m}: Bernoulli coefficients disagree with direct inversion"
        )));
    }
    Ok(via_bernoulli)
}

/// `(x-1)(x-2)...(x-m)`.
pub fn falling_from_one(m: u32) -> PolyQ {
    (1..=i64::from(m)).fold(PolyQ::constant(Rat::one()), |acc, k| {
        &acc * &PolyQ::linear(1, -k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{binom_unchecked, rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn low_order_values() {
        assert_eq!(gen_bernoulli(1, 2).unwrap(), PolyQ::linear(1, -1));
        for m in 1..=6 {
            assert_eq!(gen_bernoulli(0, m).unwrap(), PolyQ::constant(rat(1, 1)));
        }
        assert_eq!(gen_bernoulli(3, 4).unwrap(), falling_from_one(3));
        // classical Bernoulli polynomials
        assert_eq!(gen_bernoulli(2, 1).unwrap(), PolyQ::new(vec![rat(1, 6), rat(-1, 1), rat(1, 1)]));
    }

    #[test]
    fn classical_numbers_agree() {
        let nums = crate::numerics::bernoulli_numbers(20);
        let table = gen_bernoulli_table(20, 1).unwrap();
        for (n, b) in nums.iter().enumerate() {
            assert_eq!(&table[n].eval(&rat(0, 1)), b);
        }
    }

    #[test]
    fn point_values() {
        for m in (2..=12).step_by(2) {
            assert_eq!(bernoulli_at(m, m + 1, &rat(m as i64 + 2, 2)).unwrap(), rat(0, 1));
        }
        for m in 1..=6 {
            for n in 0..=4 {
                assert_eq!(bernoulli_at(2 * n + 1, m, &rat(m as i64, 2)).unwrap(), rat(0, 1));
            }
        }
        assert_eq!(bernoulli_at(0, 1, &rat(7, 3)).unwrap(), rat(1, 1));
    }

    #[test]
    fn falling_product_identity() {
        for m in 1..=15 {
            assert_eq!(gen_bernoulli(m, m + 1).unwrap(), falling_from_one(m), "m={m}");
        }
    }

    #[test]
    fn odd_index_vanishing() {
        for m in 1..=10 {
            let table = gen_bernoulli_table(21, m).unwrap();
            for n in 0..=10 {
                assert!(table[2 * n + 1].eval(&rat(m as i64, 2)).is_zero(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn even_order_weighted_sum_vanishes() {
        for m in (2..=20u32).step_by(2) {
            let table = gen_bernoulli_table(m, m + 1).unwrap();
            let x = rat(m as i64 + 1, 2);
            let mut acc = rat(0, 1);
            for k in 0..=m {
                acc += table[k as usize].eval(&x)
                    * Rat::from_integer(binom_unchecked(m.into(), k.into()) << k as usize);
            }
            assert!(acc.is_zero(), "m={m}");
        }
    }

    #[test]
    fn recursion_in_order() {
        for m in 1..=6u32 {
            let lower = gen_bernoulli_table(12, m).unwrap();
            let upper = gen_bernoulli_table(12, m + 1).unwrap();
            for n in 0..=12usize {
                let lhs = upper[n].scale(&rat_int(m));
                let mut rhs = lower[n].scale(&rat(m as i64 - n as i64, 1));
                if n > 0 {
                    let lin = PolyQ::linear(1, -(m as i64));
                    rhs = &rhs + &(&lin * &lower[n - 1]).scale(&rat(n as i64, 1));
                }
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn csc_examples() {
        let c1 = csc_power_coeffs(1, 3).unwrap();
        assert_eq!(c1[0], rat(1, 1));
        assert_eq!(c1[1], rat(1, 6));
        assert_eq!(c1[2], rat(7, 360));
        let c2 = csc_power_coeffs(2, 2).unwrap();
        assert_eq!(c2[1], rat(1, 3));
        // square of the m = 1 series
        let sq = crate::powerseries::ps_mul(
            &SeriesQ::new(c1.clone(), 3),
            &SeriesQ::new(c1.clone(), 3),
        );
        assert_eq!(sq.coeff(1), &c2[1]);
    }

    #[test]
    fn csc_two_routes_agree() {
        for m in 1..=5 {
            let via = csc_power_coeffs(m, 15).unwrap();
            assert_eq!(via, csc_power_coeffs_direct(m, 15).unwrap());
        }
    }

    #[test]
    fn ranges_enforced() {
        assert!(gen_bernoulli(201, 1).is_err());
        assert!(gen_bernoulli(3, 0).is_err());
        assert!(gen_bernoulli(3, 51).is_err());
        assert!(csc_power_coeffs(1, 51).is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-30i64..30, 1i64..7).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn addition_formula(m in 1u32..=5, x in small_rat(), y in small_rat()) {
            let table = gen_bernoulli_table(12, m).unwrap();
            for n in 0..=12usize {
                let lhs = table[n].eval(&(&x + &y));
                let mut rhs = rat(0, 1);
                for k in 0..=n {
                    rhs += table[k].eval(&y)
                        * num_traits::pow(x.clone(), n - k)
                        * Rat::from_integer(binom_unchecked(n as u64, k as u64));
                }
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
