//! Shared inputs for the benchmarks.

use bellgamma_core::bell::BellArgs;
use bellgamma_core::numerics::rat;
use bellgamma_core::Rat;

/// Bell arguments `x_j = (-1)^j / j` for `j = 1..=len`.
pub fn harmonic_args(len: usize) -> BellArgs<Rat> {
    let xs = (1..=len as i64)
        .map(|j| rat(if j % 2 == 0 { 1 } else { -1 }, j))
        .collect();
    BellArgs::new(xs, rat(1, 1))
}
