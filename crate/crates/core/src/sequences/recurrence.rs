//! Linear recurrences with polynomial coefficients, transcribed as published,
//! and an exact verifier.
//!
//! A [`RecurrenceSpec`] encodes
//! `sum_{j=0}^{order} c_j(n) f_{n+offset+j} = h(n)`,
//! where `h` is absent (homogeneous) or a ratio of polynomials in `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::approx::{p_seq, q_seq};
use crate::error::{Error, Result};
use crate::numerics::{rat, rat_int, Rat};
use crate::polyq::PolyQ;

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceSpec {
    /// Family the recurrence belongs to (several sequences share one family).
    pub family: &'static str,
    pub order: usize,
    /// Index shift of the lowest term: `c_0` multiplies `f_{n+offset}`.
    pub offset: i64,
    /// `coeffs[j]` multiplies `f_{n+offset+j}`; `coeffs[order]` is the leading one.
    pub coeffs: Vec<PolyQ>,
    /// Right-hand side as (numerator, denominator) polynomials in n.
    pub inhomogeneous: Option<(PolyQ, PolyQ)>,
    /// `f_0, ..., f_{order-1}`.
    pub initial: Vec<Rat>,
}

/// Outcome of checking a recurrence over a range of n.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub checked: Vec<i64>,
    /// Points where the leading coefficient (or the denominator of h) vanished.
    pub skipped: Vec<i64>,
    pub failures: Vec<i64>,
}

impl RecurrenceReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && !self.checked.is_empty()
    }
}

impl RecurrenceSpec {
    pub fn is_homogeneous(&self) -> bool {
        self.inhomogeneous.is_none()
    }

    fn lead(&self) -> &PolyQ {
        &self.coeffs[self.order]
    }

    fn rhs_at(&self, n: i64) -> Option<Rat> {
        match &self.inhomogeneous {
            None => Some(Rat::zero()),
            Some((num, den)) => {
                let d = den.eval_int(n);
                (!d.is_zero()).then(|| num.eval_int(n) / d)
            }
        }
    }

    /// Extends the initial values to `f_0, ..., f_{n_max}` by solving for the
    /// leading term.
    pub fn generate(&self, n_max: usize) -> Result<Vec<Rat>> {
        let mut f = self.initial.clone();
        f.truncate(n_max + 1);
        let mut n = -self.offset;
        while f.len() <= n_max {
            let top = (n + self.offset) as usize + self.order;
            debug_assert_eq!(top, f.len());
            let lead = self.lead().eval_int(n);
            let rhs = self.rhs_at(n);
            let (Some(rhs), false) = (rhs, lead.is_zero()) else {
                return Err(Error::Domain(format!(
                    "{}: cannot solve for f_{top} at n = {n}",
                    self.family
                )));
            };
            let base = (n + self.offset) as usize;
            let mut acc = rhs;
            for j in 0..self.order {
                acc -= self.coeffs[j].eval_int(n) * &f[base + j];
            }
            f.push(acc / lead);
            n += 1;
        }
        Ok(f)
    }
}

/// Checks the recurrence exactly at every n in `n_range` (inclusive).
///
/// Each point is scaled by the common denominator of all terms so the
/// comparison is made between integers.
pub fn recurrence_check(
    spec: &RecurrenceSpec,
    seq: &[Rat],
    n_range: std::ops::RangeInclusive<i64>,
) -> Result<RecurrenceReport> {
    let mut report = RecurrenceReport::default();
    for n in n_range {
        let base = n + spec.offset;
        let top = base + spec.order as i64;
        if base < 0 || top >= seq.len() as i64 {
            return Err(Error::Domain(format!(
                "{}: n = {n} needs f_{base}..f_{top}, sequence has {} terms",
                spec.family,
                seq.len()
            )));
        }
        let lead = spec.lead().eval_int(n);
        let rhs = spec.rhs_at(n);
        let (Some(rhs), false) = (rhs, lead.is_zero()) else {
            report.skipped.push(n);
            continue;
        };
        let terms: Vec<Rat> = (0..=spec.order)
            .map(|j| spec.coeffs[j].eval_int(n) * &seq[(base as usize) + j])
            .collect();
        let common = terms
            .iter()
            .chain(std::iter::once(&rhs))
            .fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
        let scaled = |x: &Rat| -> BigInt { x.numer() * (&common / x.denom()) };
        let lhs: BigInt = terms.iter().map(scaled).sum();
        if lhs == scaled(&rhs) {
            report.checked.push(n);
        } else {
            report.checked.push(n);
            report.failures.push(n);
        }
    }
    Ok(report)
}

fn p(coeffs: &[i64]) -> PolyQ {
    PolyQ::from_ints(coeffs)
}

fn lin(slope: i64, intercept: i64) -> PolyQ {
    PolyQ::linear(slope, intercept)
}

fn prod(factors: &[PolyQ]) -> PolyQ {
    PolyQ::product(factors.iter())
}

fn neg(x: PolyQ) -> PolyQ {
    -&x
}

fn ints(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat_int(v)).collect()
}

fn aptekarev_coeffs() -> Vec<PolyQ> {
    let n = PolyQ::x();
    vec![
        // f_{n-2}
        neg(prod(&[n.pow(2), lin(1, -1).pow(2), lin(16, 1)])),
        // f_{n-1}
        prod(&[n.pow(2), p(&[-7, 64, -240, 256])]),
        // f_n
        neg(p(&[-45, -82, 40, 128])),
        // f_{n+1}
        lin(16, -15),
    ]
}

fn rivoal_coeffs() -> Vec<PolyQ> {
    vec![
        neg(prod(&[lin(1, 2).pow(2), lin(8, 19), lin(8, 27)])),
        prod(&[lin(8, 27), p(&[25, 124, 105, 24])]),
        neg(prod(&[lin(1, 3), lin(8, 11), p(&[215, 145, 24])])),
        prod(&[lin(1, 3).pow(2), lin(8, 11), lin(8, 19)]),
    ]
}

fn a2_coeffs() -> Vec<PolyQ> {
    vec![lin(1, 1).pow(2), lin(-2, -4), p(&[1])]
}

fn a3_coeffs() -> Vec<PolyQ> {
    let n = PolyQ::x();
    vec![
        neg(prod(&[n.clone(), lin(1, -1).pow(3), lin(8, -1)])),
        prod(&[n.clone(), p(&[-5, 52, -75, 24])]),
        neg(p(&[-18, -32, 13, 24])),
        prod(&[lin(1, 1), lin(8, -9)]),
    ]
}

fn a4_coeffs() -> Vec<PolyQ> {
    let n = PolyQ::x();
    vec![
        prod(&[n.pow(2), lin(1, -1).pow(4), p(&[398, 2084, 3717, 2754, 729])]),
        neg(prod(&[
            n.pow(2),
            p(&[398, -2692, -17463, -12898, 37667, 61848, 28512, 2916]),
        ])),
        p(&[168, 2680, 13528, 24204, -13062, -85776, -82674, -18468, 4374]),
        neg(p(&[312, 1320, -2370, -13008, 947, 20862, 14661, 2916])),
        prod(&[lin(1, 2).pow(2), p(&[6, -4, -171, -162, 729])]),
    ]
}

/// All published recurrences, one spec per sequence, keyed by
/// `family/sequence` (e.g. `a3/p2`).
pub fn make_paper_recurrences() -> BTreeMap<String, RecurrenceSpec> {
    let mut out = BTreeMap::new();
    let mut add = |key: &str,
                   family: &'static str,
                   offset: i64,
                   coeffs: Vec<PolyQ>,
                   inhomogeneous: Option<(PolyQ, PolyQ)>,
                   initial: Vec<Rat>| {
        let order = coeffs.len() - 1;
        out.insert(
            key.to_string(),
            RecurrenceSpec {
                family,
                order,
                offset,
                coeffs,
                inhomogeneous,
                initial,
            },
        );
    };

    add("aptekarev/q", "aptekarev", -2, aptekarev_coeffs(), None, ints(&[1, 3, 50]));
    add("aptekarev/p", "aptekarev", -2, aptekarev_coeffs(), None, ints(&[0, 2, 31]));

    add("rivoal/Q", "rivoal", 0, rivoal_coeffs(), None, vec![rat(1, 1), rat(7, 1), rat(65, 2)]);
    add("rivoal/P", "rivoal", 0, rivoal_coeffs(), None, vec![rat(-1, 1), rat(4, 1), rat(77, 4)]);

    add("a2/q", "a2", 0, a2_coeffs(), None, ints(&[1, 2]));
    add(
        "a2/p",
        "a2",
        0,
        a2_coeffs(),
        Some((p(&[0, -1]), lin(1, 2))),
        ints(&[0, 1]),
    );

    add("a3/q", "a3", -2, a3_coeffs(), None, ints(&[1, 2, 11]));
    add("a3/p1", "a3", -2, a3_coeffs(), None, vec![rat(0, 1), rat(1, 1), rat(13, 2)]);
    add(
        "a3/p2",
        "a3",
        -2,
        a3_coeffs(),
        Some((
            p(&[-9, -12, 74, -17, 8]).scale(&rat(2, 1)),
            prod(&[PolyQ::x(), lin(1, 1)]),
        )),
        ints(&[0, 18, 95]),
    );

    add("a4/q", "a4", -2, a4_coeffs(), None, ints(&[1, 2, 19, 250]));
    add(
        "a4/p1",
        "a4",
        -2,
        a4_coeffs(),
        None,
        vec![rat(0, 1), rat(1, 1), rat(13, 1), rat(409, 3)],
    );
    add(
        "a4/p2",
        "a4",
        -2,
        a4_coeffs(),
        None,
        vec![rat(0, 1), rat(32, 1), rat(217, 1), rat(26444, 9)],
    );
    add(
        "a4/p3",
        "a4",
        -2,
        a4_coeffs(),
        Some((
            p(&[
                3184, 30840, 105332, 100424, -194460, -549106, -490669, -179680, -17424, 2754,
                729,
            ])
            .scale(&rat(-6, 1)),
            prod(&[PolyQ::x(), lin(1, 1).pow(2), lin(1, 2)]),
        )),
        vec![rat(0, 1), rat(60, 1), rat(402, 1), rat(50761, 9)],
    );
    out
}

/// Aptekarev's sequences from their explicit sums:
/// `q~_n = sum_k C(n,k)^2 (n+k)!`,
/// `p~_n = sum_k C(n,k)^2 (n+k)! (H_{n+k} + 2 H_{n-k} - 2 H_k)`.
pub fn aptekarev_seq(n_max: usize) -> (Vec<BigInt>, Vec<Rat>) {
    let ctx = AptekarevTables::new(n_max);
    (0..=n_max).map(|n| ctx.value(n)).unzip()
}

/// `(q~_n, p~_n)` for a single index.
pub fn aptekarev_value(n: usize) -> (BigInt, Rat) {
    AptekarevTables::new(n).value(n)
}

/// Factorials and harmonic numbers scaled by `D = lcm(1..2 n_max)`, so the
/// sums run over integers.
struct AptekarevTables {
    fact: Vec<BigInt>,
    d: BigInt,
    // d * H_j
    h: Vec<BigInt>,
}

impl AptekarevTables {
    fn new(n_max: usize) -> Self {
        let top = 2 * n_max;
        let d = crate::numerics::lcm_upto(top.max(1) as u64);
        let mut fact = vec![BigInt::one()];
        let mut h = vec![BigInt::zero()];
        for j in 1..=top {
            fact.push(&fact[j - 1] * j);
            h.push(&h[j - 1] + &d / j);
        }
        AptekarevTables { fact, d, h }
    }

    fn value(&self, n: usize) -> (BigInt, Rat) {
        let mut q = BigInt::zero();
        let mut p = BigInt::zero();
        let mut binom = BigInt::one();
        for k in 0..=n {
            if k > 0 {
                binom = binom * (n - k + 1) / k;
            }
            let w = &binom * &binom * &self.fact[n + k];
            let h = &self.h[n + k] + (&self.h[n - k] - &self.h[k]) * 2;
            p += &w * h;
            q += w;
        }
        (q, Rat::new(p, self.d.clone()))
    }
}

/// Rivoal's (P_n, Q_n), generated from their recurrence and initial values.
pub fn rivoal_seq(n_max: usize) -> Result<(Vec<Rat>, Vec<Rat>)> {
    let specs = make_paper_recurrences();
    Ok((
        specs["rivoal/P"].generate(n_max)?,
        specs["rivoal/Q"].generate(n_max)?,
    ))
}

/// The sequence each published recurrence is claimed to describe, computed
/// independently of that recurrence where an explicit formula exists.
pub fn reference_sequence(key: &str, n_max: usize) -> Result<Vec<Rat>> {
    let ints = |v: Vec<BigInt>| v.into_iter().map(Rat::from_integer).collect::<Vec<_>>();
    Ok(match key {
        "aptekarev/q" => ints(aptekarev_seq(n_max).0),
        "aptekarev/p" => aptekarev_seq(n_max).1,
        "rivoal/Q" => rivoal_seq(n_max)?.1,
        "rivoal/P" => rivoal_seq(n_max)?.0,
        "a2/q" => ints(q_seq(2, n_max)?),
        "a2/p" => p_seq(2, 1, n_max)?,
        "a3/q" => ints(q_seq(3, n_max)?),
        "a3/p1" => p_seq(3, 1, n_max)?,
        "a3/p2" => p_seq(3, 2, n_max)?,
        "a4/q" => ints(q_seq(4, n_max)?),
        "a4/p1" => p_seq(4, 1, n_max)?,
        "a4/p2" => p_seq(4, 2, n_max)?,
        "a4/p3" => p_seq(4, 3, n_max)?,
        other => return Err(Error::Domain(format!("unknown recurrence '{other}'"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_specs_in_five_families() {
        let specs = make_paper_recurrences();
        assert_eq!(specs.len(), 13);
        let mut families: Vec<_> = specs.values().map(|s| s.family).collect();
        families.sort();
        families.dedup();
        assert_eq!(families, vec!["a2", "a3", "a4", "aptekarev", "rivoal"]);
        for (key, spec) in &specs {
            assert_eq!(spec.initial.len(), spec.order, "{key}");
            assert_eq!(spec.coeffs.len(), spec.order + 1, "{key}");
        }
    }

    #[test]
    fn aptekarev_initial_values() {
        let (q, p) = aptekarev_seq(5);
        assert_eq!(&q[..3], &[1.into(), 3.into(), BigInt::from(50)]);
        assert_eq!(&p[..3], &[rat(0, 1), rat(2, 1), rat(31, 1)]);
        // recurrence-generated oracle
        let generated = make_paper_recurrences()["aptekarev/q"].generate(5).unwrap();
        assert_eq!(generated[5], Rat::from_integer(q[5].clone()));
    }

    #[test]
    fn rivoal_initial_values() {
        let (p, q) = rivoal_seq(2).unwrap();
        assert_eq!(q, vec![rat(1, 1), rat(7, 1), rat(65, 2)]);
        assert_eq!(p, vec![rat(-1, 1), rat(4, 1), rat(77, 4)]);
    }

    #[test]
    fn example_two_initial_values() {
        let specs = make_paper_recurrences();
        assert_eq!(specs["a4/p1"].initial[3], rat(409, 3));
    }

    #[test]
    fn a3_homogeneous_long_range() {
        let spec = &make_paper_recurrences()["a3/q"];
        let q: Vec<Rat> = q_seq(3, 200).unwrap().into_iter().map(Rat::from_integer).collect();
        let report = recurrence_check(spec, &q, 2..=199).unwrap();
        assert!(report.holds());
        assert!(report.skipped.is_empty());
    }

    #[test]
    fn a4_inhomogeneous_long_range() {
        let spec = &make_paper_recurrences()["a4/p3"];
        let p = p_seq(4, 3, 150).unwrap();
        assert!(recurrence_check(spec, &p, 2..=148).unwrap().holds());
    }

    #[test]
    fn perturbed_sequence_fails() {
        let spec = &make_paper_recurrences()["a2/q"];
        let mut q: Vec<Rat> = q_seq(2, 20).unwrap().into_iter().map(Rat::from_integer).collect();
        q[10] += rat(1, 1);
        let report = recurrence_check(spec, &q, 0..=18).unwrap();
        assert!(!report.holds());
        assert_eq!(report.failures, vec![8, 9, 10]);
    }

    #[test]
    fn generate_reproduces_explicit_sequences() {
        let specs = make_paper_recurrences();
        for key in ["a2/q", "a2/p", "a3/q", "a3/p2", "a4/q", "a4/p3", "aptekarev/p"] {
            let generated = specs[key].generate(30).unwrap();
            assert_eq!(generated, reference_sequence(key, 30).unwrap(), "{key}");
        }
    }

    #[test]
    fn too_short_sequence_is_an_error() {
        let spec = &make_paper_recurrences()["a4/q"];
        let q = vec![rat(1, 1); 5];
        assert!(recurrence_check(spec, &q, 2..=3).is_err());
    }

    #[test]
    fn zero_leading_coefficient_is_skipped() {
        // Leading coefficient (n+1)(8n-9) of the a = 3 recurrence never vanishes at
        // integers, but the inhomogeneous denominator n(n+1) does at n = 0.
        let spec = RecurrenceSpec {
            offset: 0,
            order: 1,
            coeffs: vec![p(&[1]), lin(1, -2)],
            inhomogeneous: None,
            initial: vec![rat(1, 1)],
            family: "test",
        };
        let seq = vec![rat(1, 1); 6];
        let report = recurrence_check(&spec, &seq, 0..=4).unwrap();
        assert_eq!(report.skipped, vec![2]);
    }
}
