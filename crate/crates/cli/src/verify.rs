//! Verification suites: each check yields one pass/fail line.

use std::str::FromStr;

use bellgamma_core::asymptotics::{saddle_polynomial, saddle_roots, saddle_seed};
use bellgamma_core::bell::{
    bell_eval, bell_eval_partitions, for_each_partition, partition_multinomial, BellArgs,
};
use bellgamma_core::bernoulli::{csc_power_coeffs, falling_from_one, gen_bernoulli_table};
use bellgamma_core::numerics::{binom, is_integral, lcm_table, rat, rat_int};
use bellgamma_core::sequences::{
    linear_form_residual, make_paper_recurrences, p_seq, q_seq, recurrence_check,
    reference_sequence, tail_bound, tail_series,
};
use bellgamma_core::{BigInt, PolyQ, Rat, SymPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma1,
    Recurrences,
    Integrality,
    Bernoulli,
    Bell,
    Tail,
    Saddle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lemma1,
        Suite::Recurrences,
        Suite::Integrality,
        Suite::Bernoulli,
        Suite::Bell,
        Suite::Tail,
        Suite::Saddle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Recurrences => "recurrences",
            Suite::Integrality => "integrality",
            Suite::Bernoulli => "bernoulli",
            Suite::Bell => "bell",
            Suite::Tail => "tail",
            Suite::Saddle => "saddle",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite '{s}' (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Report {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    /// Records a check whose body returns a success detail or a failure reason.
    fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Result<String, String>) {
        let (passed, detail) = match body() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail,
        });
    }
}

pub struct Params {
    pub a: Option<u32>,
    pub nmax: Option<usize>,
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

pub fn run(suite: Suite, params: &Params) -> Vec<Check> {
    let mut r = Report::new(suite);
    let a_list = |default: std::ops::RangeInclusive<u32>| -> Vec<u32> {
        params.a.map_or_else(|| default.collect(), |a| vec![a])
    };
    match suite {
        Suite::Lemma1 => {
            let nmax = params.nmax.unwrap_or(20);
            for a in a_list(2..=5) {
                for mu in 1..a {
                    r.check(format!("a={a} mu={mu} n=0..={nmax}"), || {
                        for n in 0..=nmax {
                            let res = linear_form_residual(a, mu, n).map_err(err)?;
                            if !res.is_zero() {
                                return Err(format!("nonzero residual at n={n}: {res}"));
                            }
                        }
                        Ok(format!("{} residuals identically zero", nmax + 1))
                    });
                }
            }
        }
        Suite::Recurrences => {
            let nmax = params.nmax.unwrap_or(150).max(3);
            for (key, spec) in make_paper_recurrences() {
                r.check(format!("{key} n=3..={nmax}"), || {
                    let seq = reference_sequence(&key, nmax + 4).map_err(err)?;
                    let rep = recurrence_check(&spec, &seq, 3..=nmax as i64).map_err(err)?;
                    if rep.holds() {
                        let kind = if spec.is_homogeneous() { "homogeneous" } else { "inhomogeneous" };
                        Ok(format!(
                            "{kind} order {} holds at {} points ({} skipped)",
                            spec.order,
                            rep.checked.len(),
                            rep.skipped.len()
                        ))
                    } else {
                        Err(format!("fails at n = {:?}", rep.failures))
                    }
                });
            }
        }
        Suite::Integrality => {
            let nmax = params.nmax.unwrap_or(100);
            let d = lcm_table(nmax as u64);
            for a in a_list(2..=5) {
                r.check(format!("a={a} q_n n=0..={nmax}"), || {
                    let qs = q_seq(a, nmax).map_err(err)?;
                    match qs.iter().position(|q| *q <= BigInt::from(0)) {
                        None => Ok("all positive integers".into()),
                        Some(n) => Err(format!("q_{n} not positive")),
                    }
                });
                for mu in 1..a {
                    r.check(format!("a={a} mu={mu} n=0..={nmax}"), || {
                        let ps = p_seq(a, mu, nmax).map_err(err)?;
                        for (n, p) in ps.iter().enumerate() {
                            let scale = Rat::from_integer(num_pow(&d[n], mu));
                            if !is_integral(&(p * scale)) {
                                return Err(format!("D_n^mu p_(n,mu) not integral at n={n}"));
                            }
                        }
                        Ok(format!("D_n^{mu} p_(n,{mu}) integral for {} values", nmax + 1))
                    });
                }
            }
        }
        Suite::Bernoulli => bernoulli_checks(&mut r),
        Suite::Bell => bell_checks(&mut r),
        Suite::Tail => {
            for a in a_list(2..=4) {
                r.check(format!("a={a} |u|<=a n in 5/10/20"), || {
                    let mut count = 0;
                    for u in -(a as i64)..=a as i64 {
                        for n in [5u64, 10, 20] {
                            let t = tail_series(a, u, n, 40).map_err(err)?;
                            let bound = tail_bound(a, n, 40);
                            if t.abs() > bound {
                                return Err(format!("u={u} n={n}: |{t}| exceeds {bound}"));
                            }
                            count += 1;
                        }
                    }
                    Ok(format!("{count} tails within e/(n+1)^a"))
                });
            }
        }
        Suite::Saddle => {
            let n = 1e6;
            for a in a_list(2..=4) {
                r.check(format!("a={a} |u|<=a n=10^6"), || {
                    let mut worst: f64 = 0.0;
                    for u in -(a as i64)..=a as i64 {
                        let roots = saddle_roots(a, u, n).map_err(err)?;
                        if roots.len() != a as usize {
                            return Err(format!("u={u}: {} roots", roots.len()));
                        }
                        for (k, root) in roots.iter().enumerate() {
                            let p = saddle_polynomial(a, u, n, *root);
                            let res = p.re.hypot(p.im) / n;
                            let seed = saddle_seed(a, u, n, k as u32, 3).map_err(err)?;
                            let off = (seed.re - root.re).hypot(seed.im - root.im);
                            if res >= 1e-8 || off >= 1e-3 {
                                return Err(format!(
                                    "u={u} k={k}: residual {res:e}, seed offset {off:e}"
                                ));
                            }
                            worst = worst.max(res);
                        }
                    }
                    Ok(format!("{} distinct roots per u, max |p|/n {worst:.1e}", a))
                });
            }
        }
    }
    r.checks
}

fn num_pow(x: &BigInt, e: u32) -> BigInt {
    (0..e).fold(BigInt::from(1), |acc, _| acc * x)
}

/// Deterministic spread of small rationals.
fn sample_rats(seed: i64, len: usize) -> Vec<Rat> {
    (0..len as i64)
        .map(|i| {
            let k = seed * 31 + i * 17;
            rat((k * 7919) % 23 - 11, (k * 104729) % 7 + 1)
        })
        .collect()
}

fn bell_rat(xs: Vec<Rat>) -> Result<Rat, String> {
    bell_eval(&BellArgs::new(xs, rat(1, 1))).map_err(err)
}

fn bell_checks(r: &mut Report) {
    r.check("recurrence = partition sum, n<=8", || {
        for n in 0..=8usize {
            for seed in 0..20 {
                let args = BellArgs::new(sample_rats(seed, n), rat(1, 1));
                if bell_eval(&args).map_err(err)? != bell_eval_partitions(&args).map_err(err)? {
                    return Err(format!("mismatch at n={n}"));
                }
            }
        }
        Ok("180 rational argument sets agree".into())
    });
    r.check("addition theorem, n<=7", || {
        for n in 0..=7usize {
            for seed in 0..10 {
                let x = sample_rats(seed, n);
                let y = sample_rats(seed + 100, n);
                let xy: Vec<Rat> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
                let mut rhs = rat(0, 1);
                for k in 0..=n {
                    let c = rat_int(binom(n as u64, k as u64).map_err(err)?);
                    rhs += c * bell_rat(x[..k].to_vec())? * bell_rat(y[..n - k].to_vec())?;
                }
                if bell_rat(xy)? != rhs {
                    return Err(format!("fails at n={n}"));
                }
            }
        }
        Ok("80 argument pairs satisfy it".into())
    });
    r.check("integer coefficients, n<=8", || {
        for n in 1..=8usize {
            let xs: Vec<SymPoly> = (1..=n)
                .map(|j| if j == 1 { Ok(SymPoly::gamma(n)) } else { SymPoly::zeta(n, j) })
                .collect::<Result<_, _>>()
                .map_err(err)?;
            let y = bell_eval(&BellArgs::new(xs, SymPoly::one(n))).map_err(err)?;
            if !y.terms().all(|(_, c)| c.is_integer() && c > &rat(0, 1)) {
                return Err(format!("Y_{n} has a non-positive or fractional coefficient"));
            }
        }
        Ok("all coefficients positive integers".into())
    });
    r.check("partition multinomials integral, n<=12", || {
        let mut count = 0;
        let mut failure = None;
        for n in 1..=12usize {
            for_each_partition(n, |k| {
                if failure.is_none() {
                    match partition_multinomial(k, n as u64) {
                        Ok(_) => count += 1,
                        Err(e) => failure = Some(e.to_string()),
                    }
                }
            });
        }
        failure.map_or(Ok(format!("{count} partitions")), Err)
    });
}

fn bernoulli_checks(r: &mut Report) {
    r.check("addition formula, n<=12 m<=5", || {
        for m in 1..=5u32 {
            let table = gen_bernoulli_table(12, m).map_err(err)?;
            for seed in 0..4 {
                let v = sample_rats(seed + 7 * i64::from(m), 2);
                let (x, y) = (&v[0], &v[1]);
                for n in 0..=12usize {
                    let mut rhs = rat(0, 1);
                    for k in 0..=n {
                        let c = rat_int(binom(n as u64, k as u64).map_err(err)?);
                        let xp = (0..n - k).fold(rat(1, 1), |acc, _| acc * x);
                        rhs += c * table[k].eval(y) * xp;
                    }
                    if table[n].eval(&(x + y)) != rhs {
                        return Err(format!("fails at m={m} n={n}"));
                    }
                }
            }
        }
        Ok("holds exactly".into())
    });
    r.check("recursion in the order, n<=12 m<=6", || {
        for m in 1..=6u32 {
            let lo = gen_bernoulli_table(12, m).map_err(err)?;
            let hi = gen_bernoulli_table(12, m + 1).map_err(err)?;
            let mi = i64::from(m);
            for n in 1..=12usize {
                let ni = n as i64;
                let rhs = &lo[n].scale(&rat(mi - ni, 1))
                    + &(&PolyQ::linear(1, -mi) * &lo[n - 1].scale(&rat(ni, 1)));
                if hi[n].scale(&rat(mi, 1)) != rhs {
                    return Err(format!("fails at m={m} n={n}"));
                }
            }
        }
        Ok("holds exactly".into())
    });
    r.check("B_m^(m+1)(x) = (x-1)...(x-m), m<=10", || {
        for m in 0..=10u32 {
            if gen_bernoulli_table(m, m + 1).map_err(err)?[m as usize] != falling_from_one(m) {
                return Err(format!("fails at m={m}"));
            }
        }
        Ok("holds exactly".into())
    });
    r.check("even-m binomial identity, m<=20", || {
        for m in (2..=20u32).step_by(2) {
            let b = gen_bernoulli_table(m, m + 1).map_err(err)?;
            let x = rat(i64::from(m) + 1, 2);
            let mut s = rat(0, 1);
            for k in 0..=m as usize {
                let c = rat_int(binom(u64::from(m), k as u64).map_err(err)? << k);
                s += c * b[k].eval(&x);
            }
            if s != rat(0, 1) || b[m as usize].eval(&rat(i64::from(m) + 2, 2)) != rat(0, 1) {
                return Err(format!("fails at m={m}"));
            }
        }
        Ok("holds exactly".into())
    });
    r.check("odd index vanishing at m/2, n<=10 m<=10", || {
        for m in 1..=10u32 {
            let b = gen_bernoulli_table(21, m).map_err(err)?;
            for n in 0..=10usize {
                if b[2 * n + 1].eval(&rat(i64::from(m), 2)) != rat(0, 1) {
                    return Err(format!("fails at m={m} n={n}"));
                }
            }
        }
        Ok("holds exactly".into())
    });
    r.check("(z/sin z)^m coefficients, N<=15 m<=5", || {
        for m in 1..=5u32 {
            csc_power_coeffs(m, 15).map_err(err)?;
        }
        Ok("Bernoulli formula equals direct inversion".into())
    });
}
