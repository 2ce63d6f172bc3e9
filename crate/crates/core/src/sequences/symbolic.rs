//! The linear forms `p_{n,mu} - q_n alpha_mu` as exact polynomials in `g, z2, ...`.
//!
//! With `F(n,t) = n!^a / (Gamma(t+1)^(a-1) Gamma(n-t+1)^a) = e^{f(t)}`, the
//! derivatives of `f` at integer points are polynomials in γ and ζ(m), so the
//! sums `F_{n,nu} = sum_k (d/dt)^nu F(n,t)|_{t=k}` live in the same ring as
//! `alpha_mu`. The residual
//! `p_{n,mu} - q_n alpha_mu - sum_nu lambda_{mu,nu} F_{n,nu}`
//! must then vanish identically.

use num_bigint::BigInt;

use super::approx::{check_a, check_mu, weights};
use super::harmonic::HarmonicCache;
use crate::bell::{bell_eval, BellArgs};
use crate::error::{Error, Result};
use crate::numerics::Rat;
use crate::symring::{alpha_mu, lambda_coeff, point_scalar, sp_add, sp_mul, sp_sub, SymPoly};

fn f_deriv_cached(cache: &HarmonicCache, a: u32, n: usize, k: usize, m: usize) -> Result<SymPoly> {
    let max_zeta = (a - 1) as usize;
    let r = SymPoly::constant(max_zeta, cache.r_value(a, n, k, m));
    if m == 1 {
        return sp_sub(&r, &SymPoly::gamma(max_zeta));
    }
    // (m-1)! ((-1)^{m-1}(a-1) - a) = -(m-1)!(a + (-1)^m (a-1))
    let scalar = -point_scalar(a, m as u32);
    let z = SymPoly::zeta(max_zeta, m)?.scale(&Rat::from_integer(scalar));
    sp_add(&z, &r)
}

/// f^{(m)}(k) for `f(t) = a log n! - a log Gamma(n+1-t) - (a-1) log Gamma(t+1)`.
pub fn f_deriv_sym(a: u32, n: usize, k: usize, m: usize) -> Result<SymPoly> {
    check_a(a)?;
    if k > n || m == 0 || m as u32 >= a {
        return Err(Error::Domain(format!(
            "f^(m)(k) needs 0 <= k <= n and 1 <= m <= a-1; got a={a}, n={n}, k={k}, m={m}"
        )));
    }
    let cache = HarmonicCache::new(n, m);
    f_deriv_cached(&cache, a, n, k, m)
}

fn f_sum_cached(cache: &HarmonicCache, a: u32, mu: usize, n: usize) -> Result<SymPoly> {
    let max_zeta = (a - 1) as usize;
    let mut acc = SymPoly::zero(max_zeta);
    for (k, w) in weights(a, n).into_iter().enumerate() {
        let xs = (1..=mu)
            .map(|m| f_deriv_cached(cache, a, n, k, m))
            .collect::<Result<Vec<_>>>()?;
        let y = bell_eval(&BellArgs::new(xs, SymPoly::one(max_zeta)))?;
        acc = sp_add(&acc, &y.scale(&Rat::from_integer(w)))?;
    }
    Ok(acc)
}

/// F_{n,mu} = sum_k k! C(n,k)^a Y_mu(f'(k), ..., f^{(mu)}(k)), for 0 <= mu <= a-1.
pub fn f_sum_sym(a: u32, mu: u32, n: usize) -> Result<SymPoly> {
    check_a(a)?;
    if mu >= a {
        return Err(Error::Domain(format!("mu = {mu} must lie in 0..={}", a - 1)));
    }
    let cache = HarmonicCache::new(n, (mu as usize).max(1));
    f_sum_cached(&cache, a, mu as usize, n)
}

/// `(p_{n,mu} - q_n alpha_mu) - sum_{nu=1}^{mu} lambda_{mu,nu} F_{n,nu}`; identically zero
/// when the linear form decomposes as claimed.
pub fn linear_form_residual(a: u32, mu: u32, n: usize) -> Result<SymPoly> {
    check_mu(a, mu)?;
    let max_zeta = (a - 1) as usize;
    let cache = HarmonicCache::new(n, mu as usize);
    let p = super::approx::p_value_cached(&cache, a, mu, n)?;
    let q: BigInt = weights(a, n).into_iter().sum();

    let alpha = alpha_mu(a, mu)?;
    let mut residual = sp_sub(
        &SymPoly::constant(max_zeta, p),
        &alpha.scale(&Rat::from_integer(q)),
    )?;
    for nu in 1..=mu {
        let lambda = lambda_coeff(a, mu, nu)?;
        let f = f_sum_cached(&cache, a, nu as usize, n)?;
        residual = sp_sub(&residual, &sp_mul(&lambda, &f)?)?;
    }
    Ok(residual)
}

pub use linear_form_residual as lemma1_residual;

/// Coefficient `(-1)^mu q_n` expected in front of `g^mu` in F_{n,mu}.
pub fn leading_gamma_coeff(a: u32, mu: u32, n: usize) -> Result<Rat> {
    check_a(a)?;
    let q: BigInt = weights(a, n).into_iter().sum();
    let sign = if mu % 2 == 0 { 1 } else { -1 };
    Ok(Rat::from_integer(q * sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use crate::sequences::approx::{p_value, q_value};

    #[test]
    fn first_derivative_at_origin() {
        assert_eq!(f_deriv_sym(3, 0, 0, 1).unwrap(), SymPoly::gamma(2).neg());
    }

    #[test]
    fn second_derivative_structure() {
        for n in 0..5 {
            for k in 0..=n {
                let f = f_deriv_sym(3, n, k, 2).unwrap();
                assert_eq!(f.coeff(&[0, 1]), rat(-5, 1));
                let r = crate::sequences::harmonic::r_val(3, n, k, 2).unwrap();
                assert_eq!(f.coeff(&[0, 0]), r);
            }
        }
        assert!(f_deriv_sym(3, 2, 3, 1).is_err());
        assert!(f_deriv_sym(3, 2, 1, 3).is_err());
    }

    #[test]
    fn constant_parts_are_r_values() {
        for a in 2..=5 {
            for m in 1..a as usize {
                for k in 0..=4 {
                    let f = f_deriv_sym(a, 4, k, m).unwrap();
                    let r = crate::sequences::harmonic::r_val(a, 4, k, m).unwrap();
                    assert_eq!(f.coeff(&vec![0; (a - 1) as usize]), r);
                }
            }
        }
    }

    #[test]
    fn f_sum_examples() {
        for a in 2..=5 {
            for n in 0..8 {
                let f0 = f_sum_sym(a, 0, n).unwrap();
                assert_eq!(f0.as_constant(), Some(Rat::from_integer(q_value(a, n).unwrap())));
            }
        }
        assert_eq!(f_sum_sym(2, 1, 0).unwrap(), SymPoly::gamma(1).neg());
        let f = f_sum_sym(3, 1, 2).unwrap();
        assert_eq!(f.to_string(), "-11*g + 13/2");
        assert_eq!(f.coeff(&[0, 0]), p_value(3, 1, 2).unwrap());
    }

    #[test]
    fn leading_gamma_term() {
        for a in 2..=5 {
            for mu in 0..a {
                for n in 0..6 {
                    let f = f_sum_sym(a, mu, n).unwrap();
                    assert_eq!(f.gamma_degree().unwrap_or(0), mu);
                    let mut e = vec![0; (a - 1) as usize];
                    e[0] = mu;
                    assert_eq!(f.coeff(&e), leading_gamma_coeff(a, mu, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn residual_vanishes_on_examples() {
        assert!(linear_form_residual(2, 1, 3).unwrap().is_zero());
        assert!(linear_form_residual(4, 3, 5).unwrap().is_zero());
        assert!(linear_form_residual(3, 2, 0).unwrap().is_zero());
    }

    #[test]
    fn residual_detects_wrong_alpha() {
        // Swapping the point to the a+1 variant must break the identity.
        let cache = HarmonicCache::new(4, 2);
        let p = crate::sequences::approx::p_value_cached(&cache, 3, 2, 4).unwrap();
        let q = q_value(3, 4).unwrap();
        let wrong_alpha = alpha_mu(4, 2).unwrap();
        // restrict to the g, z2 symbols of a = 3
        let mut projected = SymPoly::zero(2);
        for (e, c) in wrong_alpha.terms() {
            projected = sp_add(&projected, &SymPoly::monomial(2, e[..2].to_vec(), c.clone())).unwrap();
        }
        let mut residual = sp_sub(&SymPoly::constant(2, p), &projected.scale(&Rat::from_integer(q))).unwrap();
        for nu in 1..=2 {
            let f = f_sum_sym(3, nu, 4).unwrap();
            residual = sp_sub(&residual, &sp_mul(&lambda_coeff(3, 2, nu).unwrap(), &f).unwrap()).unwrap();
        }
        assert!(!residual.is_zero());
    }
}
