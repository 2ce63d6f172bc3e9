use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numerics::Rat;

/// Commutative ring operations needed to evaluate Bell polynomials generically.
///
/// Elements carry their own context (e.g. the symbol set of a [`SymPoly`]),
/// so the identities are produced from an existing element.
///
/// [`SymPoly`]: crate::symring::SymPoly
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale_int(&self, k: &BigInt) -> Self;

    /// Whether `self` and `other` belong to the same ring instance.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn is_zero_elem(&self) -> bool {
        *self == self.zero_like()
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }

    fn one_like(&self) -> Self {
        Rat::one()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        self * Rat::from_integer(k.clone())
    }

    fn is_zero_elem(&self) -> bool {
        self.numer().is_zero()
    }
}

impl Ring for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }

    fn one_like(&self) -> Self {
        1.0
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        use num_traits::ToPrimitive;
        self * k.to_f64().unwrap_or(f64::NAN)
    }
}
