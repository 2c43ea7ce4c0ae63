//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients stored constant term first.
///
/// The zero polynomial has an empty coefficient list; otherwise the last
/// stored coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - root`
    pub fn linear(root: BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Division by a monic polynomial: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divrem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree();
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + j] -= &c * dc;
            }
            quot[i - d] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient by a monic divisor, or `None` if it does not divide.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut e = (self.degree() + 1).saturating_sub(db);
        while r.len() > db && !r.is_empty() {
            let lr = r.last().cloned().unwrap();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            e = e.saturating_sub(1);
        }
        let scale = num_traits::pow(lb, e);
        Self::new(r.into_iter().map(|c| c * &scale).collect())
    }

    /// Greatest common divisor over Q, returned primitive with positive
    /// leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return Self::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }
}

fn zip_with(
    a: &IntPolynomial,
    b: &IntPolynomial,
    f: impl Fn(BigInt, &BigInt) -> BigInt,
) -> IntPolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out: Vec<BigInt> = a.coeffs.clone();
    out.resize(n, BigInt::zero());
    for (i, x) in out.iter_mut().enumerate() {
        let y = b.coeffs.get(i).cloned().unwrap_or_default();
        *x = f(std::mem::take(x), &y);
    }
    IntPolynomial::new(out)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            match (show_mag, i) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}*x")?,
                (false, 1) => write!(f, "x")?,
                (true, _) => write!(f, "{mag}*x^{i}")?,
                (false, _) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), 1);
        assert!(p(&[24, 1]).is_monic());
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[-20468736, -1080, 1]).to_string(),
            "x^2 - 1080*x - 20468736"
        );
        assert_eq!(p(&[24, 1]).to_string(), "x + 24");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "3*x^3 - x");
    }

    #[test]
    fn division() {
        let f = &p(&[-1, 1]) * &p(&[1, 1, 1]);
        assert_eq!(f.div_exact_monic(&p(&[1, 1, 1])), Some(p(&[-1, 1])));
        assert_eq!(f.div_exact_monic(&p(&[1, 1])), None);
        let (q, r) = p(&[5, 0, 1]).divrem_monic(&p(&[1, 1]));
        assert_eq!((q, r), (p(&[-1, 1]), p(&[6])));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert!(p(&[-2, 0, 1]).is_squarefree());
        let sq = &p(&[-1, 1]) * &p(&[-1, 1]);
        assert!(!(&sq * &p(&[5, 1])).is_squarefree());
        assert_eq!(p(&[4, 6]).primitive_part(), p(&[2, 3]));
    }
}
