//! Complete exponential Bell polynomials Y_n over any [`Ring`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::{binom_unchecked, factorial};
use crate::ring::Ring;

/// Largest index accepted by the partition-sum evaluator.
pub const MAX_PARTITION_INDEX: usize = 20;

/// Arguments `x_1, ..., x_n` together with the ring's unit (needed when n = 0).
#[derive(Clone, Debug)]
pub struct BellArgs<R> {
    xs: Vec<R>,
    unit: R,
}

impl<R: Ring> BellArgs<R> {
    pub fn new(xs: Vec<R>, unit: R) -> Self {
        BellArgs { xs, unit }
    }

    /// Uses the first argument to supply the unit; `xs` must be non-empty.
    pub fn from_values(xs: Vec<R>) -> Result<Self> {
        let unit = xs
            .first()
            .map(Ring::one_like)
            .ok_or_else(|| Error::Domain("empty argument list needs an explicit unit".into()))?;
        Ok(BellArgs { xs, unit })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn values(&self) -> &[R] {
        &self.xs
    }

    fn check_homogeneous(&self) -> Result<()> {
        if self.xs.iter().all(|x| x.compatible(&self.unit)) {
            Ok(())
        } else {
            Err(Error::Incompatible(
                "Bell arguments come from different rings".into(),
            ))
        }
    }
}

/// All of Y_0, ..., Y_n by the recurrence
/// `Y_{j+1} = sum_k C(j,k) x_{k+1} Y_{j-k}`.
pub fn bell_prefix<R: Ring>(args: &BellArgs<R>) -> Result<Vec<R>> {
    args.check_homogeneous()?;
    let n = args.len();
    let mut ys: Vec<R> = Vec::with_capacity(n + 1);
    ys.push(args.unit.clone());
    for j in 0..n {
        let mut acc = args.unit.zero_like();
        for k in 0..=j {
            let x = &args.xs[k];
            let y = &ys[j - k];
            if x.is_zero_elem() || y.is_zero_elem() {
                continue;
            }
            let term = x.mul_ref(y).scale_int(&binom_unchecked(j as u64, k as u64));
            acc = acc.add_ref(&term);
        }
        ys.push(acc);
    }
    Ok(ys)
}

/// Y_n(x_1, ..., x_n) with n = `args.len()`.
pub fn bell_eval<R: Ring>(args: &BellArgs<R>) -> Result<R> {
    Ok(bell_prefix(args)?.pop().expect("prefix holds Y_0"))
}

/// `n! / prod_j (j!^{k_j} k_j!)` for a partition `sum_j j k_j = n`; `k[j-1]` is k_j.
///
/// Fails if the tuple is not a partition of n, or if the quotient is not an integer.
pub fn partition_multinomial(k: &[u64], n: u64) -> Result<BigInt> {
    let weight: u64 = k.iter().enumerate().map(|(j, &kj)| (j as u64 + 1) * kj).sum();
    if weight != n {
        return Err(Error::Domain(format!(
            "tuple {k:?} has weight {weight}, expected {n}"
        )));
    }
    let mut den = BigInt::from(1);
    for (j, &kj) in k.iter().enumerate() {
        if kj > 0 {
            den *= num_traits::pow(factorial(j as u64 + 1), kj as usize) * factorial(kj);
        }
    }
    let (q, r) = factorial(n).div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Identity(format!(
            "{n}!/{den} is not an integer for partition {k:?}"
        )));
    }
    Ok(q)
}

/// Visits every `(k_1, ..., k_n)` with `sum_j j k_j = n`.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[u64])) {
    fn rec(part: usize, remaining: usize, k: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
        if part == 0 {
            if remaining == 0 {
                visit(k);
            }
            return;
        }
        let max = remaining / part;
        for c in 0..=max {
            k[part - 1] = c as u64;
            rec(part - 1, remaining - c * part, k, visit);
        }
        k[part - 1] = 0;
    }
    let mut k = vec![0u64; n];
    rec(n, n, &mut k, &mut visit);
}

/// Y_n by the explicit sum over partitions of n; independent of [`bell_eval`].
pub fn bell_eval_partitions<R: Ring>(args: &BellArgs<R>) -> Result<R> {
    args.check_homogeneous()?;
    let n = args.len();
    if n > MAX_PARTITION_INDEX {
        return Err(Error::Domain(format!(
            "partition sum limited to n <= {MAX_PARTITION_INDEX}, got {n}"
        )));
    }
    let mut acc = args.unit.zero_like();
    let mut failure = None;
    for_each_partition(n, |k| {
        if failure.is_some() {
            return;
        }
        match partition_multinomial(k, n as u64) {
            Ok(c) => {
                let mut term = args.unit.scale_int(&c);
                for (j, &kj) in k.iter().enumerate() {
                    for _ in 0..kj {
                        term = term.mul_ref(&args.xs[j]);
                    }
                }
                acc = acc.add_ref(&term);
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(acc),
    }
}
