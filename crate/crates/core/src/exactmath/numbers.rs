//! Bernoulli numbers, divisor-power sums and binomial coefficients.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::rational::{rat, Rational};
use crate::error::{Error, Result};

static BERNOULLI_TABLE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Exact Bernoulli number `B_k` for even `k` (and `k = 0`).
///
/// Computed from the recurrence `sum_{j=0}^{n} C(n+1, j) B_j = 0`, which fixes
/// `B_1 = -1/2` internally; odd indices are never exposed.
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k % 2 == 1 {
        return Err(Error::OddIndex(k));
    }
    let k = k as usize;
    let mut table = BERNOULLI_TABLE.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(rat(1));
    }
    while table.len() <= k {
        let n = table.len();
        let mut acc = Rational::zero();
        let mut c = BigInt::one(); // C(n+1, j)
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rational::from_integer(c.clone()) * b;
            }
            c = c * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        table.push(-acc / rat(n as i64 + 1));
    }
    Ok(table[k].clone())
}

/// `sigma_power(n) = sum_{d | n} d^power`, by trial division up to `sqrt(n)`.
pub fn sigma(power: u32, n: u64) -> BigInt {
    assert!(n >= 1, "sigma is defined for n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(power);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(power);
            }
        }
        d += 1;
    }
    total
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut c = BigInt::one();
    for i in 0..b {
        c = c * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::ratio;

    // Akiyama-Tanigawa: an independent route to B_n (with B_1 = +1/2).
    fn akiyama_tanigawa(n: usize) -> Rational {
        let mut a: Vec<Rational> = (0..=n).map(|m| ratio(1, m as i64 + 1)).collect();
        for m in 0..=n {
            a[m] = ratio(1, m as i64 + 1);
            for j in (1..=m).rev() {
                a[j - 1] = rat(j as i64) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1));
        assert_eq!(bernoulli(2).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli(4).unwrap(), ratio(-1, 30));
        assert_eq!(bernoulli(6).unwrap(), ratio(1, 42));
        assert_eq!(bernoulli(12).unwrap(), ratio(-691, 2730));
    }

    #[test]
    fn odd_index_rejected() {
        assert_eq!(bernoulli(3), Err(Error::OddIndex(3)));
        assert_eq!(bernoulli(1), Err(Error::OddIndex(1)));
    }

    #[test]
    fn agrees_with_akiyama_tanigawa_and_alternates() {
        for k in (2..=60).step_by(2) {
            let b = bernoulli(k).unwrap();
            assert_eq!(b, akiyama_tanigawa(k as usize), "B_{k}");
            assert!(!b.is_zero());
            let positive = b > rat(0);
            assert_eq!(positive, (k / 2) % 2 == 1, "sign of B_{k}");
        }
    }

    #[test]
    fn sigma_by_enumeration() {
        assert_eq!(sigma(3, 1), BigInt::from(1));
        assert_eq!(sigma(3, 2), BigInt::from(9));
        for power in [0u32, 1, 3, 11, 23] {
            for n in 1..=200u64 {
                let brute: BigInt = (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| BigInt::from(d).pow(power))
                    .sum();
                assert_eq!(sigma(power, n), brute, "sigma_{power}({n})");
            }
        }
        assert_eq!(sigma(11, 6), BigInt::from(362_976_252u64));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
