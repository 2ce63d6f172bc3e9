use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::harmonic::HarmonicCache;
use crate::bell::{bell_eval, BellArgs};
use crate::error::{Error, Result};
use crate::numerics::{is_integral, lcm_upto, Rat};

pub(crate) fn check_a(a: u32) -> Result<()> {
    if a < 2 {
        return Err(Error::Domain(format!("a = {a} must be at least 2")));
    }
    Ok(())
}

pub(crate) fn check_mu(a: u32, mu: u32) -> Result<()> {
    check_a(a)?;
    if mu == 0 || mu >= a {
        return Err(Error::Domain(format!(
            "mu = {mu} must lie in 1..={}",
            a - 1
        )));
    }
    Ok(())
}

/// Weights `C(n,k)^a k!` for k = 0..=n.
pub(crate) fn weights(a: u32, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut binom = BigInt::one();
    let mut fact = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) / k;
            fact *= k;
        }
        out.push(num_traits::pow(binom.clone(), a as usize) * &fact);
    }
    out
}

/// q_n = sum_k C(n,k)^a k!.
pub fn q_value(a: u32, n: usize) -> Result<BigInt> {
    check_a(a)?;
    Ok(weights(a, n).into_iter().sum())
}

/// q_0, ..., q_{n_max}.
pub fn q_seq(a: u32, n_max: usize) -> Result<Vec<BigInt>> {
    check_a(a)?;
    Ok((0..=n_max)
        .into_par_iter()
        .map(|n| weights(a, n).into_iter().sum())
        .collect())
}

/// p_{n,mu} using a prepared harmonic table (needs n_max >= n, m_max >= mu).
pub fn p_value_cached(cache: &HarmonicCache, a: u32, mu: u32, n: usize) -> Result<Rat> {
    check_mu(a, mu)?;
    let mu = mu as usize;
    if cache.n_max() < n || cache.m_max() < mu {
        return Err(Error::Domain("harmonic cache too small".into()));
    }
    let mut acc = Rat::zero();
    for (k, w) in weights(a, n).into_iter().enumerate() {
        let xs: Vec<Rat> = (1..=mu).map(|m| cache.r_value(a, n, k, m)).collect();
        let y = bell_eval(&BellArgs::new(xs, Rat::one()))?;
        acc += y * Rat::from_integer(w);
    }
    Ok(acc)
}

/// p_{n,mu} = sum_k C(n,k)^a k! Y_mu(r_1(k), ..., r_mu(k)).
pub fn p_value(a: u32, mu: u32, n: usize) -> Result<Rat> {
    check_mu(a, mu)?;
    let cache = HarmonicCache::new(n, mu as usize);
    p_value_cached(&cache, a, mu, n)
}

/// p_{0,mu}, ..., p_{n_max,mu}.
pub fn p_seq(a: u32, mu: u32, n_max: usize) -> Result<Vec<Rat>> {
    check_mu(a, mu)?;
    let cache = HarmonicCache::new(n_max, mu as usize);
    (0..=n_max)
        .into_par_iter()
        .map(|n| p_value_cached(&cache, a, mu, n))
        .collect()
}

/// Whether D_n^mu p_{n,mu} is an integer, D_n = lcm(1..n).
pub fn integrality_check(a: u32, mu: u32, n: usize) -> Result<bool> {
    let p = p_value(a, mu, n)?;
    let d = num_traits::pow(lcm_upto(n as u64), mu as usize);
    Ok(is_integral(&(p * Rat::from_integer(d))))
}

/// The a = 2 numerators in their direct form sum_k C(n,k)^2 k! (2 H_{n-k} - H_k).
pub fn a2_numerators(n_max: usize) -> Vec<Rat> {
    let cache = HarmonicCache::new(n_max, 1);
    (0..=n_max)
        .map(|n| {
            weights(2, n)
                .into_iter()
                .enumerate()
                .fold(Rat::zero(), |acc, (k, w)| {
                    let h = cache.get(n - k, 1) * Rat::from_integer(2.into()) - cache.get(k, 1);
                    acc + h * Rat::from_integer(w)
                })
        })
        .collect()
}
