use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rat;

/// Fixed-point decimal real: `mantissa * 10^(-scale)`.
///
/// Binary operations work at the larger of the two scales and round to
/// nearest (ties away from zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFix {
    mantissa: BigInt,
    scale: u32,
}

pub(crate) fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), e as usize)
}

/// `num / den` rounded to the nearest integer, ties away from zero.
pub(crate) fn div_round(num: &BigInt, den: &BigInt) -> BigInt {
    debug_assert!(!den.is_zero());
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    let twice: BigInt = &num * 2;
    if num.is_negative() {
        -((-twice + &den).div_floor(&(&den * 2)))
    } else {
        (twice + &den).div_floor(&(&den * 2))
    }
}

impl BigFix {
    pub fn from_mantissa(mantissa: BigInt, scale: u32) -> Self {
        BigFix { mantissa, scale }
    }

    pub fn zero(scale: u32) -> Self {
        BigFix::from_mantissa(BigInt::zero(), scale)
    }

    pub fn from_int<T: Into<BigInt>>(n: T, scale: u32) -> Self {
        BigFix::from_mantissa(n.into() * pow10(scale), scale)
    }

    /// Nearest fixed-point value to an exact rational.
    pub fn from_rat(x: &Rat, scale: u32) -> Self {
        let num = x.numer() * pow10(scale);
        BigFix::from_mantissa(div_round(&num, x.denom()), scale)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFix::from_mantissa(self.mantissa.abs(), self.scale)
    }

    /// Re-expresses the value at another scale, rounding when the scale drops.
    pub fn rescale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                BigFix::from_mantissa(&self.mantissa * pow10(scale - self.scale), scale)
            }
            Ordering::Less => BigFix::from_mantissa(
                div_round(&self.mantissa, &pow10(self.scale - scale)),
                scale,
            ),
        }
    }

    fn aligned(&self, other: &BigFix) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        (
            self.rescale(scale).mantissa,
            other.rescale(scale).mantissa,
            scale,
        )
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn mul_rat(&self, x: &Rat) -> Self {
        let num = &self.mantissa * x.numer();
        BigFix::from_mantissa(div_round(&num, x.denom()), self.scale)
    }

    pub fn div(&self, other: &BigFix) -> Self {
        let (a, b, scale) = self.aligned(other);
        assert!(!b.is_zero(), "BigFix division by zero");
        BigFix::from_mantissa(div_round(&(a * pow10(scale)), &b), scale)
    }

    pub fn div_int(&self, d: &BigInt) -> Self {
        BigFix::from_mantissa(div_round(&self.mantissa, d), self.scale)
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = BigFix::from_int(1, self.scale);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Natural logarithm at this value's scale.
    ///
    /// Range-reduces by powers of two into [1, 2) and sums the atanh series;
    /// internal work carries ten guard digits.
    pub fn ln(&self) -> Self {
        assert!(
            self.mantissa.is_positive(),
            "logarithm of a non-positive BigFix"
        );
        let work = self.scale + 10;
        let x = self.rescale(work);
        let one = BigFix::from_int(1, work);
        let two = BigFix::from_int(2, work);
        let mut y = x;
        let mut shift: i64 = 0;
        while y >= two {
            y = y.div_int(&BigInt::from(2));
            shift += 1;
        }
        while y < one {
            y = BigFix::from_mantissa(y.mantissa * 2, work);
            shift -= 1;
        }
        let t = (&y - &one).div(&(&y + &one));
        let mut out = atanh_series(&t).mul_rat(&Rat::from_integer(BigInt::from(2)));
        if shift != 0 {
            let ln2 = ln2(work);
            out = &out + &BigFix::from_mantissa(ln2.mantissa * shift, work);
        }
        out.rescale(self.scale)
    }

    /// Natural logarithm of |x| as a double, valid for any nonzero magnitude.
    pub fn ln_abs_f64(&self) -> f64 {
        assert!(!self.mantissa.is_zero(), "logarithm of zero");
        let m = self.mantissa.abs();
        let bits = m.bits();
        let (lead, shift) = if bits > 60 {
            let s = bits - 60;
            ((&m >> s).to_f64().unwrap(), s)
        } else {
            (m.to_f64().unwrap(), 0)
        };
        lead.ln() + shift as f64 * std::f64::consts::LN_2
            - self.scale as f64 * std::f64::consts::LN_10
    }

    pub fn to_f64(&self) -> f64 {
        if self.mantissa.is_zero() {
            return 0.0;
        }
        let sign = if self.is_negative() { -1.0 } else { 1.0 };
        sign * self.ln_abs_f64().exp()
    }

    /// Decimal rendering with `digits` fractional digits (rounded).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let r = self.rescale(digits);
        let neg = r.mantissa.is_negative();
        let mut s = r.mantissa.abs().to_string();
        let digits = digits as usize;
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        let (int, frac) = s.split_at(s.len() - digits);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(int);
        if digits > 0 {
            out.push('.');
            out.push_str(frac);
        }
        out
    }
}

fn atanh_series(t: &BigFix) -> BigFix {
    let scale = t.scale();
    let t2 = t * t;
    let mut power = t.clone();
    let mut sum = BigFix::zero(scale);
    let mut k: u64 = 1;
    while !power.is_zero() {
        sum = &sum + &power.div_int(&BigInt::from(k));
        power = &power * &t2;
        k += 2;
    }
    sum
}

fn ln2(scale: u32) -> BigFix {
    let third = BigFix::from_rat(&Rat::new(BigInt::one(), BigInt::from(3)), scale);
    atanh_series(&third).mul_rat(&Rat::from_integer(BigInt::from(2)))
}

impl PartialOrd for BigFix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFix {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl<'a> Add<&'a BigFix> for &'a BigFix {
    type Output = BigFix;
    fn add(self, other: &BigFix) -> BigFix {
        let (a, b, scale) = self.aligned(other);
        BigFix::from_mantissa(a + b, scale)
    }
}

impl<'a> Sub<&'a BigFix> for &'a BigFix {
    type Output = BigFix;
    fn sub(self, other: &BigFix) -> BigFix {
        let (a, b, scale) = self.aligned(other);
        BigFix::from_mantissa(a - b, scale)
    }
}

impl<'a> Mul<&'a BigFix> for &'a BigFix {
    type Output = BigFix;
    fn mul(self, other: &BigFix) -> BigFix {
        let (a, b, scale) = self.aligned(other);
        BigFix::from_mantissa(div_round(&(a * b), &pow10(scale)), scale)
    }
}

impl Neg for BigFix {
    type Output = BigFix;
    fn neg(self) -> BigFix {
        BigFix::from_mantissa(-self.mantissa, self.scale)
    }
}

impl fmt::Display for BigFix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(self.scale))
    }
}
