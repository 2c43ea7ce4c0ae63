//! Truncated q-expansions with exact rational coefficients.
//!
//! A `QExpansion` of precision `p` knows the coefficients of `q^0 .. q^{p-1}`
//! exactly and nothing beyond. Binary operations truncate to the smaller
//! precision of their operands; nothing is ever extrapolated.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    coeffs: Vec<Rational>,
    weight: Option<u32>,
}

impl QExpansion {
    /// Panics if `coeffs` is empty: a q-expansion always knows at least `a_0`.
    pub fn new(coeffs: Vec<Rational>, weight: Option<u32>) -> Self {
        assert!(!coeffs.is_empty(), "q-expansion needs a positive precision");
        QExpansion { coeffs, weight }
    }

    pub fn from_integers<I, T>(coeffs: I, weight: Option<u32>) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
            weight,
        )
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(vec![Rational::zero(); prec], None)
    }

    /// The constant `1`, tagged as weight 0.
    pub fn one(prec: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); prec];
        coeffs[0] = Rational::one();
        Self::new(coeffs, Some(0))
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn weight(&self) -> Option<u32> {
        self.weight
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `q^i`; panics past the known precision.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn with_weight(mut self, weight: Option<u32>) -> Self {
        self.weight = weight;
        self
    }

    pub fn truncate(&self, prec: usize) -> Self {
        assert!(
            prec >= 1 && prec <= self.prec(),
            "cannot truncate to {prec}"
        );
        QExpansion {
            coeffs: self.coeffs[..prec].to_vec(),
            weight: self.weight,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_rational_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    fn merged_weight(&self, other: &Self) -> Result<Option<u32>> {
        match (self.weight, other.weight) {
            (Some(a), Some(b)) if a != b => Err(Error::WeightMismatch(a, b)),
            (a, b) => Ok(a.or(b)),
        }
    }

    /// Coefficientwise sum truncated to the shared precision.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let weight = self.merged_weight(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QExpansion { coeffs, weight })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let weight = self.merged_weight(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QExpansion { coeffs, weight })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QExpansion {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            weight: self.weight,
        }
    }

    /// Truncated Cauchy product. Weights add when both are present.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        let mut coeffs = vec![Rational::zero(); prec];
        for (i, a) in self.coeffs[..prec].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..prec - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let weight = match (self.weight, other.weight) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        QExpansion { coeffs, weight }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QExpansion::one(self.prec());
        if self.weight.is_none() {
            acc.weight = None;
        }
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Normalized derivative `(q d/dq)^order`: `a_m` becomes `m^order a_m`.
    ///
    /// The weight tag is cleared for `order > 0`, since derivatives of modular
    /// forms are not modular.
    pub fn theta(&self, order: u32) -> Self {
        if order == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, a)| {
                if a.is_zero() {
                    Rational::zero()
                } else {
                    a * Rational::from_integer(BigInt::from(m).pow(order))
                }
            })
            .collect();
        QExpansion {
            coeffs,
            weight: None,
        }
    }
}

impl fmt::Display for QExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})*q", format_rational(c))?,
                _ => write!(f, "({})*q^{}", format_rational(c), i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec())
    }
}
