//! Sparse polynomials over Q in the formal symbols `g` (Euler's constant)
//! and `z2, ..., zM` (zeta values).
//!
//! Lemma-style identities between the constants become exact polynomial
//! identities here: nothing is ever rounded.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bell::{bell_eval, BellArgs};
use crate::error::{Error, Result};
use crate::numerics::{binom, factorial, rat_int, BigFix, Rat};
use crate::ring::Ring;

/// Exponent vector `(e_g, e_z2, ..., e_zM)`.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    max_zeta: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl SymPoly {
    /// The zero polynomial in `g, z2, ..., z{max_zeta}`. `max_zeta = 1` means `g` only.
    pub fn zero(max_zeta: usize) -> Self {
        assert!(max_zeta >= 1, "at least the symbol g is required");
        SymPoly {
            max_zeta,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(max_zeta: usize, c: Rat) -> Self {
        let mut p = SymPoly::zero(max_zeta);
        p.add_term(vec![0; max_zeta], c);
        p
    }

    pub fn one(max_zeta: usize) -> Self {
        SymPoly::constant(max_zeta, Rat::one())
    }

    /// The symbol `g`.
    pub fn gamma(max_zeta: usize) -> Self {
        let mut e = vec![0; max_zeta];
        e[0] = 1;
        SymPoly::monomial(max_zeta, e, Rat::one())
    }

    /// The symbol `z{m}` for `2 <= m <= max_zeta`.
    pub fn zeta(max_zeta: usize, m: usize) -> Result<Self> {
        if m < 2 || m > max_zeta {
            return Err(Error::Domain(format!(
                "symbol z{m} outside z2..z{max_zeta}"
            )));
        }
        let mut e = vec![0; max_zeta];
        e[m - 1] = 1;
        Ok(SymPoly::monomial(max_zeta, e, Rat::one()))
    }

    pub fn monomial(max_zeta: usize, exponents: Monomial, c: Rat) -> Self {
        assert_eq!(exponents.len(), max_zeta, "exponent vector length");
        let mut p = SymPoly::zero(max_zeta);
        p.add_term(exponents, c);
        p
    }

    pub fn max_zeta(&self) -> usize {
        self.max_zeta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rat {
        self.terms.get(exponents).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant term, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Highest power of `g` appearing in any term.
    pub fn gamma_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0]).max()
    }

    /// Every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    fn add_term(&mut self, exponents: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &SymPoly) -> Result<()> {
        if self.max_zeta != other.max_zeta {
            return Err(Error::Incompatible(format!(
                "symbol sets g..z{} and g..z{}",
                self.max_zeta, other.max_zeta
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = SymPoly::zero(self.max_zeta);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }
}

/// Exact sum of two polynomials over the same symbol set.
pub fn sp_add(p: &SymPoly, q: &SymPoly) -> Result<SymPoly> {
    p.check_same(q)?;
    let mut out = p.clone();
    for (e, c) in &q.terms {
        out.add_term(e.clone(), c.clone());
    }
    Ok(out)
}

pub fn sp_sub(p: &SymPoly, q: &SymPoly) -> Result<SymPoly> {
    sp_add(p, &q.neg())
}

/// Exact product of two polynomials over the same symbol set.
pub fn sp_mul(p: &SymPoly, q: &SymPoly) -> Result<SymPoly> {
    p.check_same(q)?;
    let mut out = SymPoly::zero(p.max_zeta);
    for (ea, ca) in &p.terms {
        for (eb, cb) in &q.terms {
            let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    Ok(out)
}

/// Substitutes numeric values for the symbols: `gamma_val` for `g` and
/// `zeta_vals[i]` for `z{i+2}`. Works at the largest input scale.
pub fn sp_eval(p: &SymPoly, gamma_val: &BigFix, zeta_vals: &[BigFix]) -> Result<BigFix> {
    let needed = p.max_zeta - 1;
    if zeta_vals.len() < needed {
        return Err(Error::Domain(format!(
            "need values for z2..z{}, got {}",
            p.max_zeta,
            zeta_vals.len()
        )));
    }
    let scale = zeta_vals[..needed]
        .iter()
        .map(BigFix::scale)
        .chain(std::iter::once(gamma_val.scale()))
        .max()
        .unwrap_or(0);
    let values: Vec<BigFix> = std::iter::once(gamma_val)
        .chain(zeta_vals[..needed].iter())
        .map(|v| v.rescale(scale))
        .collect();
    // Powers are cached per symbol; exponents stay tiny.
    let mut powers: Vec<Vec<BigFix>> = values
        .iter()
        .map(|v| vec![BigFix::from_int(1, scale), v.clone()])
        .collect();
    let mut acc = BigFix::zero(scale);
    for (e, c) in &p.terms {
        let mut term = BigFix::from_rat(c, scale);
        for (i, &k) in e.iter().enumerate() {
            let table = &mut powers[i];
            while table.len() <= k as usize {
                let next = table.last().unwrap() * &values[i];
                table.push(next);
            }
            if k > 0 {
                term = &term * &table[k as usize];
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Scalar in front of `z_m` in the point at which the approximations converge:
/// `(m-1)! (a + (-1)^m (a-1))`.
pub fn point_scalar(a: u32, m: u32) -> BigInt {
    let a_big = BigInt::from(a);
    let tail = if m % 2 == 0 {
        &a_big + (&a_big - 1)
    } else {
        &a_big - (&a_big - 1)
    };
    factorial(u64::from(m - 1)) * tail
}

/// The Bell arguments `(g, 1!(2a-1) z2, ..., (len-1)!(a + (-1)^len (a-1)) z_len)`.
fn point_args(a: u32, len: u32, max_zeta: usize) -> Result<Vec<SymPoly>> {
    (1..=len)
        .map(|m| {
            if m == 1 {
                Ok(SymPoly::gamma(max_zeta))
            } else {
                Ok(SymPoly::zeta(max_zeta, m as usize)?.scale(&rat_int(point_scalar(a, m))))
            }
        })
        .collect()
}

fn check_a_mu(a: u32, mu: u32) -> Result<()> {
    if a < 2 {
        return Err(Error::Domain(format!("a = {a} must be at least 2")));
    }
    if mu < 1 || mu >= a {
        return Err(Error::Domain(format!("mu = {mu} must lie in 1..={}", a - 1)));
    }
    Ok(())
}

/// α_μ = Y_μ(g, 1!(2a-1) z2, 2! z3, ...) over the symbols `g, z2, ..., z{a-1}`.
pub fn alpha_mu(a: u32, mu: u32) -> Result<SymPoly> {
    check_a_mu(a, mu)?;
    let max_zeta = (a - 1) as usize;
    let args = BellArgs::new(point_args(a, mu, max_zeta)?, SymPoly::one(max_zeta));
    bell_eval(&args)
}

/// λ_{μ,ν} = C(μ,ν) · Y_{μ-ν}(g, 1!(2a-1) z2, ...).
pub fn lambda_coeff(a: u32, mu: u32, nu: u32) -> Result<SymPoly> {
    check_a_mu(a, mu)?;
    if nu < 1 || nu > mu {
        return Err(Error::Domain(format!("nu = {nu} must lie in 1..={mu}")));
    }
    let max_zeta = (a - 1) as usize;
    let args = BellArgs::new(point_args(a, mu - nu, max_zeta)?, SymPoly::one(max_zeta));
    let y = bell_eval(&args)?;
    Ok(y.scale(&rat_int(binom(u64::from(mu), u64::from(nu))?)))
}

impl Ring for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly::zero(self.max_zeta)
    }

    fn one_like(&self) -> Self {
        SymPoly::one(self.max_zeta)
    }

    fn add_ref(&self, other: &Self) -> Self {
        sp_add(self, other).expect("ring operands share a symbol set")
    }

    fn mul_ref(&self, other: &Self) -> Self {
        sp_mul(self, other).expect("ring operands share a symbol set")
    }

    fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&Rat::from_integer(k.clone()))
    }

    fn compatible(&self, other: &Self) -> bool {
        self.max_zeta == other.max_zeta
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

fn symbol_name(i: usize) -> String {
    if i == 0 {
        "g".to_string()
    } else {
        format!("z{}", i + 1)
    }
}

/// Renders like `g^2 + 2*g*z2 - 1/3*z3 + 5`; terms in descending lexicographic
/// order of exponent vectors, constant last.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        symbol_name(i)
                    } else {
                        format!("{}^{}", symbol_name(i), k)
                    }
                })
                .collect();
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}
