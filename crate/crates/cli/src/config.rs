//! Argument validation and the precision policy.

use std::ops::RangeInclusive;

use bellgamma_core::sequences::default_digits;

pub const DIGITS_ENV: &str = "BELLGAMMA_DIGITS";
pub const DEFAULT_DIGITS: u32 = 50;
pub const A_RANGE: RangeInclusive<u32> = 2..=8;

/// A usage problem: reported on stderr with exit code 2.
#[derive(Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn check_a(a: u32) -> Result<u32, UsageError> {
    if A_RANGE.contains(&a) {
        Ok(a)
    } else {
        Err(UsageError(format!(
            "--a {a} is outside {}..={}",
            A_RANGE.start(),
            A_RANGE.end()
        )))
    }
}

pub fn check_mu(a: u32, mu: u32) -> Result<u32, UsageError> {
    if mu >= 1 && mu < a {
        Ok(mu)
    } else {
        Err(UsageError(format!("--mu {mu} must lie in 1..={}", a - 1)))
    }
}

/// Parses `start:stop[:step]` (inclusive) or a single `n`.
pub fn parse_n_range(s: &str) -> Result<Vec<usize>, UsageError> {
    let bad = || UsageError(format!("invalid n range '{s}' (expected start:stop[:step])"));
    let parts: Vec<&str> = s.split(':').collect();
    let num = |p: &str| p.trim().parse::<usize>().map_err(|_| bad());
    let (start, stop, step) = match parts.as_slice() {
        [n] => {
            let n = num(n)?;
            (n, n, 1)
        }
        [a, b] => (num(a)?, num(b)?, 1),
        [a, b, c] => (num(a)?, num(b)?, num(c)?),
        _ => return Err(bad()),
    };
    if step == 0 || start > stop {
        return Err(bad());
    }
    Ok((start..=stop).step_by(step).collect())
}

/// Default precision: `BELLGAMMA_DIGITS` when set, else 50.
pub fn base_digits() -> Result<u32, UsageError> {
    match std::env::var(DIGITS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| UsageError(format!("{DIGITS_ENV}='{v}' is not a positive integer"))),
        Err(_) => Ok(DEFAULT_DIGITS),
    }
}

/// Precision for one convergence row: an explicit `--digits` is used as
/// given; otherwise the larger of the base default and the row's policy value.
pub fn row_digits(explicit: Option<u32>, base: u32, a: u32, n: usize) -> u32 {
    explicit.unwrap_or_else(|| base.max(default_digits(a, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_n_range("10:100:10").unwrap().len(), 10);
        assert_eq!(parse_n_range("0:5").unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(parse_n_range("7").unwrap(), vec![7]);
        assert_eq!(parse_n_range("1:10:4").unwrap(), vec![1, 5, 9]);
        for bad in ["", "5:1", "1:5:0", "a:b", "1:2:3:4", "-1:3"] {
            assert!(parse_n_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn parameter_bounds() {
        assert!(check_a(1).is_err());
        assert!(check_a(9).is_err());
        assert_eq!(check_a(8), Ok(8));
        assert!(check_mu(3, 3).is_err());
        assert!(check_mu(3, 0).is_err());
        assert_eq!(check_mu(3, 2), Ok(2));
    }

    #[test]
    fn digits_policy() {
        assert_eq!(row_digits(Some(12), 50, 3, 200), 12);
        assert_eq!(row_digits(None, 50, 2, 0), 50);
        assert!(row_digits(None, 50, 3, 200) > 50);
    }
}
