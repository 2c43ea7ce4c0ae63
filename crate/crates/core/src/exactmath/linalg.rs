//! Dense exact matrices: fraction-free rank and characteristic polynomials.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::rational::{common_denominator, format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RatMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a `rows x columns.len()` matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Rank by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators so the whole
    /// elimination runs over the integers; every division is exact.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let den = common_denominator(row);
                row.iter()
                    .map(|x| (x * Rational::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..rows {
                for c in col + 1..cols {
                    let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                    a[r][c] = v / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Monic characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier.
    ///
    /// The recurrence only divides by the step index, so integer input stays
    /// integral throughout. The result must have integer coefficients; a
    /// non-integral coefficient is reported as `NonIntegral`.
    pub fn charpoly(&self) -> Result<IntPolynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // coeffs[i] is the coefficient of x^i
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
        }
        let mut ints = Vec::with_capacity(n + 1);
        for c in coeffs {
            if !c.denom().is_one() {
                return Err(Error::NonIntegral(format_rational(&c)));
            }
            ints.push(c.to_integer());
        }
        Ok(IntPolynomial::new(ints))
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Free-function form of [`RatMatrix::rank`].
pub fn rank_exact(m: &RatMatrix) -> usize {
    m.rank()
}

/// Free-function form of [`RatMatrix::charpoly`].
pub fn poly_charpoly(m: &RatMatrix) -> Result<IntPolynomial> {
    m.charpoly()
}
