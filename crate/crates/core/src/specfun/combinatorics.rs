//! Exact integer combinatorics in checked 128-bit arithmetic.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`stirling2`] and [`perm_coeff`].
pub const MAX_COMB_N: u32 = 30;

const MAX_BELL_N: u32 = 25;

fn stirling_table() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n_max = MAX_COMB_N as usize;
        let mut s = vec![vec![0u128; n_max + 1]; n_max + 1];
        s[0][0] = 1;
        for n in 1..=n_max {
            for m in 1..=n {
                // S(n,m) = m S(n-1,m) + S(n-1,m-1); fits comfortably for n <= 30
                s[n][m] = (m as u128)
                    .checked_mul(s[n - 1][m])
                    .and_then(|v| v.checked_add(s[n - 1][m - 1]))
                    .expect("S2 table overflow below n = 30");
            }
        }
        s
    })
}

/// Stirling number of the second kind `S2(n, m)`, `0 <= m <= n <= 30`.
pub fn stirling2(n: u32, m: u32) -> Result<u128> {
    if n > MAX_COMB_N {
        return Err(Error::Overflow(format!("S2({n}, {m}): n above {MAX_COMB_N}")));
    }
    if m > n {
        return Err(Error::OutOfRange(format!("S2({n}, {m}) needs m <= n")));
    }
    Ok(stirling_table()[n as usize][m as usize])
}

/// Number of ordered selections of `k` from `n`, `n! / (n-k)!`.
pub fn perm_coeff(n: u32, k: u32) -> Result<u128> {
    if n > MAX_COMB_N {
        return Err(Error::Overflow(format!("T({n}, {k}): n above {MAX_COMB_N}")));
    }
    if k > n {
        return Err(Error::OutOfRange(format!("T({n}, {k}) needs k <= n")));
    }
    ((n - k + 1)..=n)
        .try_fold(1u128, |acc, j| acc.checked_mul(j as u128).ok_or_else(|| Error::Overflow(format!("T({n}, {k})"))))
}

pub fn factorial(n: u32) -> Result<u128> {
    (1..=n).try_fold(1u128, |acc, j| acc.checked_mul(j as u128).ok_or_else(|| Error::Overflow(format!("{n}!"))))
}

pub fn binomial(n: u32, k: u32) -> Result<u128> {
    if k > n {
        return Err(Error::OutOfRange(format!("C({n}, {k}) needs k <= n")));
    }
    let k = k.min(n - k);
    // running product stays an exact binomial at every step
    (1..=k).try_fold(1u128, |acc, j| {
        acc.checked_mul((n - k + j) as u128)
            .map(|v| v / j as u128)
            .ok_or_else(|| Error::Overflow(format!("C({n}, {k})")))
    })
}

/// `x (x-1) ... (x-n+1)`; the empty product is 1.
pub fn falling_factorial(x: f64, n: u32) -> f64 {
    (0..n).map(|j| x - j as f64).product()
}

/// Bell (Touchard) polynomial `B_n(x) = Σ S2(n,i) x^i`, `n <= 25`.
pub fn bell_poly(n: u32, x: f64) -> Result<f64> {
    if n > MAX_BELL_N {
        return Err(Error::OutOfRange(format!("Bell polynomial order {n} above {MAX_BELL_N}")));
    }
    let mut acc = 0.0;
    for i in (0..=n).rev() {
        acc = acc * x + stirling2(n, i)? as f64;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts set partitions of {0..n} into exactly m blocks by brute force.
    fn partitions_brute(n: usize, m: usize) -> u128 {
        fn go(i: usize, n: usize, blocks: usize, m: usize) -> u128 {
            if i == n {
                return (blocks == m) as u128;
            }
            // element i joins an existing block or opens a new one
            let mut total = blocks as u128 * go(i + 1, n, blocks, m);
            if blocks < m {
                total += go(i + 1, n, blocks + 1, m);
            }
            total
        }
        go(0, n, 0, m)
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling2(0, 0).unwrap(), 1);
        assert_eq!(stirling2(3, 2).unwrap(), 3);
        assert_eq!(stirling2(4, 2).unwrap(), 7);
        assert_eq!(stirling2(5, 0).unwrap(), 0);
    }

    #[test]
    fn stirling_matches_enumeration() {
        for n in 0..=9 {
            for m in 0..=n {
                assert_eq!(stirling2(n as u32, m as u32).unwrap(), partitions_brute(n, m), "S2({n},{m})");
            }
        }
    }

    #[test]
    fn stirling_errors() {
        assert!(matches!(stirling2(3, 4), Err(Error::OutOfRange(_))));
        assert!(matches!(stirling2(31, 2), Err(Error::Overflow(_))));
        assert!(stirling2(30, 15).is_ok());
    }

    #[test]
    fn perm_examples() {
        assert_eq!(perm_coeff(7, 0).unwrap(), 1);
        assert_eq!(perm_coeff(4, 2).unwrap(), 12);
        assert_eq!(perm_coeff(3, 3).unwrap(), 6);
        assert_eq!(perm_coeff(30, 30).unwrap(), factorial(30).unwrap());
        assert!(perm_coeff(2, 3).is_err());
        assert!(perm_coeff(31, 1).is_err());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(2.7, 0), 1.0);
        assert_eq!(falling_factorial(5.0, 2), 20.0);
        assert_eq!(falling_factorial(3.0, 3), 6.0);
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0).unwrap(), 1);
        assert_eq!(factorial(20).unwrap(), 2_432_902_008_176_640_000);
        assert!(factorial(34).is_ok());
        assert!(matches!(factorial(35), Err(Error::Overflow(_))));
        assert_eq!(binomial(10, 3).unwrap(), 120);
        assert_eq!(binomial(60, 30).unwrap(), 118_264_581_564_861_424);
        for n in 1..20u32 {
            for k in 1..n {
                assert_eq!(binomial(n, k).unwrap(), binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
            }
        }
    }

    #[test]
    fn bell_examples() {
        assert_eq!(bell_poly(0, 3.3).unwrap(), 1.0);
        assert_eq!(bell_poly(3, 1.0).unwrap(), 5.0);
        let x = 0.7;
        assert!((bell_poly(3, x).unwrap() - (x + 3.0 * x * x + x * x * x)).abs() < 1e-15);
        assert_eq!(bell_poly(4, 0.0).unwrap(), 0.0);
        assert!(bell_poly(26, 1.0).is_err());
    }

    #[test]
    fn bell_matches_dobinski() {
        // B_n(x) = e^{-x} Σ_j j^n x^j / j!
        for n in 0..=8u32 {
            for &x in &[0.3, 1.0, 2.5] {
                let mut term = 1.0f64; // x^j / j!
                let mut sum = if n == 0 { 1.0 } else { 0.0 };
                for j in 1..200 {
                    term *= x / j as f64;
                    sum += (j as f64).powi(n as i32) * term;
                }
                let want = (-x).exp() * sum;
                let got = bell_poly(n, x).unwrap();
                assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0), "B_{n}({x})");
            }
        }
    }
}
