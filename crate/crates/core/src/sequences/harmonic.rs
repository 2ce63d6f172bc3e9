use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::{factorial, Rat};

/// Precomputed generalized harmonic numbers H_k^{(m)} for k <= n_max, 1 <= m <= m_max.
#[derive(Clone, Debug)]
pub struct HarmonicCache {
    // table[m - 1][k]
    table: Vec<Vec<Rat>>,
}

impl HarmonicCache {
    pub fn new(n_max: usize, m_max: usize) -> Self {
        let table = (1..=m_max)
            .map(|m| {
                let mut row = Vec::with_capacity(n_max + 1);
                row.push(Rat::zero());
                for k in 1..=n_max {
                    let den = num_traits::pow(BigInt::from(k), m);
                    let next = &row[k - 1] + Rat::new(BigInt::from(1), den);
                    row.push(next);
                }
                row
            })
            .collect();
        HarmonicCache { table }
    }

    pub fn n_max(&self) -> usize {
        self.table.first().map_or(0, |r| r.len() - 1)
    }

    pub fn m_max(&self) -> usize {
        self.table.len()
    }

    /// H_k^{(m)}; panics outside the cached range.
    pub fn get(&self, k: usize, m: usize) -> &Rat {
        &self.table[m - 1][k]
    }

    /// r_m(k) = (m-1)! (a H_{n-k}^{(m)} + (-1)^m (a-1) H_k^{(m)}).
    pub fn r_value(&self, a: u32, n: usize, k: usize, m: usize) -> Rat {
        let a_rat = Rat::from_integer(BigInt::from(a));
        let b_rat = Rat::from_integer(BigInt::from(a - 1));
        let right = self.get(k, m) * &b_rat;
        let inner = if m % 2 == 0 {
            self.get(n - k, m) * &a_rat + right
        } else {
            self.get(n - k, m) * &a_rat - right
        };
        inner * Rat::from_integer(factorial(m as u64 - 1))
    }
}

/// H_k^{(m)} = sum_{j=1}^k 1/j^m, with H_0^{(m)} = 0.
pub fn harmonic(k: usize, m: usize) -> Result<Rat> {
    if m == 0 {
        return Err(Error::Domain("harmonic order m must be positive".into()));
    }
    Ok((1..=k).fold(Rat::zero(), |acc, j| {
        acc + Rat::new(BigInt::from(1), num_traits::pow(BigInt::from(j), m))
    }))
}

/// r_m(k) for the family with parameter `a`, at index `n`.
pub fn r_val(a: u32, n: usize, k: usize, m: usize) -> Result<Rat> {
    if a < 2 {
        return Err(Error::Domain(format!("a = {a} must be at least 2")));
    }
    if k > n || m == 0 {
        return Err(Error::Domain(format!(
            "r_m(k) needs 0 <= k <= n and m >= 1; got n={n}, k={k}, m={m}"
        )));
    }
    let cache = HarmonicCache::new(n, m);
    Ok(cache.r_value(a, n, k, m))
}
