//! Level-1 spaces `M_k` and `S_k`: dimensions, Eisenstein series, `Delta`
//! and the diagonal (Miller) basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli, rat, sigma, QExpansion, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    FullSpace,
    CuspSpace,
}

impl SpaceKind {
    /// Exponent of the leading term of the first basis element.
    pub fn offset(self) -> usize {
        match self {
            SpaceKind::FullSpace => 0,
            SpaceKind::CuspSpace => 1,
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::FullSpace => write!(f, "M"),
            SpaceKind::CuspSpace => write!(f, "S"),
        }
    }
}

/// `dim M_k`; zero for negative or odd `k`.
pub fn dim_m(k: i64) -> usize {
    if k < 0 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// `dim S_k`; zero unless `k` is even and at least 4.
pub fn dim_s(k: i64) -> usize {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    dim_m(k).saturating_sub(1)
}

pub fn dim(k: i64, kind: SpaceKind) -> usize {
    match kind {
        SpaceKind::FullSpace => dim_m(k),
        SpaceKind::CuspSpace => dim_s(k),
    }
}

/// `E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n`, for even `k >= 4`.
pub fn eisenstein(k: u32, prec: usize) -> Result<QExpansion> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::BadWeight(k as i64));
    }
    if prec == 0 {
        return Err(Error::InsufficientPrecision {
            needed: 1,
            available: 0,
        });
    }
    let factor = -rat(2 * k as i64) / bernoulli(k)?;
    let mut coeffs = Vec::with_capacity(prec);
    coeffs.push(Rational::one());
    for n in 1..prec {
        coeffs.push(&factor * Rational::from_integer(sigma(k - 1, n as u64)));
    }
    Ok(QExpansion::new(coeffs, Some(k)))
}

/// `Delta = (E_4^3 - E_6^2) / 1728`, the normalized cusp form of weight 12.
pub fn delta(prec: usize) -> Result<QExpansion> {
    if prec < 2 {
        return Err(Error::InsufficientPrecision {
            needed: 2,
            available: prec,
        });
    }
    let e4 = eisenstein(4, prec)?;
    let e6 = eisenstein(6, prec)?;
    let num = e4.pow(3).sub(&e6.pow(2))?;
    Ok(num.scale(&Rational::new(BigInt::one(), BigInt::from(1728))))
}

/// An echelon basis of `M_k` or `S_k` known to a fixed precision.
///
/// Element `i` has leading term `q^(offset + i)` with coefficient 1. Bases
/// produced by [`miller_basis`] are fully reduced: element `i` also vanishes
/// at every other leading exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceBasis {
    weight: u32,
    kind: SpaceKind,
    prec: usize,
    basis: Vec<QExpansion>,
}

impl SpaceBasis {
    /// Wraps a caller-supplied echelon basis after checking its shape.
    pub fn from_echelon(weight: u32, kind: SpaceKind, elements: Vec<QExpansion>) -> Result<Self> {
        let expected = dim(weight as i64, kind);
        if elements.len() != expected {
            return Err(Error::Parse(format!(
                "expected {expected} basis elements for {kind}_{weight}, got {}",
                elements.len()
            )));
        }
        let prec = elements
            .iter()
            .map(QExpansion::prec)
            .min()
            .unwrap_or(expected + 1);
        if prec < expected + 1 {
            return Err(Error::InsufficientPrecision {
                needed: expected + 1,
                available: prec,
            });
        }
        let mut basis = Vec::with_capacity(expected);
        for (i, b) in elements.into_iter().enumerate() {
            let lead = kind.offset() + i;
            if b.valuation() != Some(lead) || !b.coeff(lead).is_one() {
                return Err(Error::Parse(format!(
                    "basis element {i} does not have leading term q^{lead}"
                )));
            }
            basis.push(b.truncate(prec).with_weight(Some(weight)));
        }
        Ok(SpaceBasis {
            weight,
            kind,
            prec,
            basis,
        })
    }

    fn build(k: u32, kind: SpaceKind, prec: usize) -> Result<Self> {
        let d = dim(k as i64, kind);
        if prec < d + 1 {
            return Err(Error::InsufficientPrecision {
                needed: d + 1,
                available: prec,
            });
        }
        if k == 0 && kind == SpaceKind::FullSpace {
            return Self::from_echelon(0, kind, vec![QExpansion::one(prec)]);
        }
        if d == 0 {
            return Ok(SpaceBasis {
                weight: k,
                kind,
                prec,
                basis: Vec::new(),
            });
        }
        let offset = kind.offset();
        let e4 = eisenstein(4, prec)?;
        let e6 = eisenstein(6, prec)?;
        let dl = delta(prec)?;
        let mut e4_pows = vec![QExpansion::one(prec)];
        let mut delta_pows = vec![QExpansion::one(prec)];
        let mut elements = Vec::with_capacity(d);
        for i in offset..offset + d {
            let rest = k as usize - 12 * i;
            let b = usize::from(!rest.is_multiple_of(4));
            let a = (rest - 6 * b) / 4;
            while e4_pows.len() <= a {
                let next = e4_pows.last().unwrap().mul(&e4);
                e4_pows.push(next);
            }
            while delta_pows.len() <= i {
                let next = delta_pows.last().unwrap().mul(&dl);
                delta_pows.push(next);
            }
            let mut f = e4_pows[a].mul(&delta_pows[i]);
            if b == 1 {
                f = f.mul(&e6);
            }
            elements.push(f);
        }
        // Clear each leading exponent from the elements above it, highest first.
        for j in (0..d).rev() {
            let lead = offset + j;
            for i in 0..j {
                let c = elements[i].coeff(lead).clone();
                if !c.is_zero() {
                    elements[i] = elements[i].sub(&elements[j].scale(&c))?;
                }
            }
        }
        Self::from_echelon(k, kind, elements)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn elements(&self) -> &[QExpansion] {
        &self.basis
    }

    pub fn leading_exponent(&self, i: usize) -> usize {
        self.kind.offset() + i
    }

    /// Coordinates of `f` in this basis, certified against every coefficient
    /// known to both `f` and the basis.
    pub fn coordinates(&self, f: &QExpansion) -> Result<Vec<Rational>> {
        if let Some(w) = f.weight() {
            if w != self.weight {
                return Err(Error::WeightMismatch(w, self.weight));
            }
        }
        let shared = f.prec().min(self.prec);
        let needed = self.dim() + 1;
        if shared < needed {
            return Err(Error::InsufficientPrecision {
                needed,
                available: shared,
            });
        }
        let mut residual = f.truncate(shared).into_coeffs();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, b) in self.basis.iter().enumerate() {
            let c = residual[self.leading_exponent(i)].clone();
            if !c.is_zero() {
                for (r, bc) in residual.iter_mut().zip(b.coeffs()) {
                    if !bc.is_zero() {
                        *r -= &c * bc;
                    }
                }
            }
            coords.push(c);
        }
        match residual.iter().position(|r| !r.is_zero()) {
            Some(index) => Err(Error::NotMember {
                weight: self.weight,
                index,
            }),
            None => Ok(coords),
        }
    }

    /// `sum coords[i] * basis[i]`, tagged with this space's weight.
    pub fn combination(&self, coords: &[Rational]) -> QExpansion {
        assert_eq!(
            coords.len(),
            self.dim(),
            "coordinate vector has the wrong length"
        );
        let mut acc = vec![Rational::zero(); self.prec];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (a, bc) in acc.iter_mut().zip(b.coeffs()) {
                if !bc.is_zero() {
                    *a += c * bc;
                }
            }
        }
        QExpansion::new(acc, Some(self.weight))
    }
}

type CacheKey = (u32, SpaceKind, usize);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<SpaceBasis>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<SpaceBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Miller basis of `M_k` or `S_k` to `prec` coefficients, memoized process-wide.
pub fn miller_basis(k: u32, kind: SpaceKind, prec: usize) -> Result<Arc<SpaceBasis>> {
    let key = (k, kind, prec);
    if let Some(b) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(Arc::clone(b));
    }
    let built = Arc::new(SpaceBasis::build(k, kind, prec)?);
    let mut w = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(w.entry(key).or_insert(built)))
}

pub fn coordinates(f: &QExpansion, space: &SpaceBasis) -> Result<Vec<Rational>> {
    space.coordinates(f)
}

/// The unique normalized cusp form of weight `k` when `dim S_k = 1`.
pub fn unique_cusp_form(k: u32, prec: usize) -> Result<QExpansion> {
    if dim_s(k as i64) != 1 {
        return Err(Error::UnsupportedCuspidalF(k));
    }
    Ok(miller_basis(k, SpaceKind::CuspSpace, prec)?.elements()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    // Monomials E4^a E6^b with 4a + 6b = k.
    fn monomial_count(k: i64) -> usize {
        if k < 0 {
            return 0;
        }
        (0..=k / 4)
            .filter(|a| (k - 4 * a) >= 0 && (k - 4 * a) % 6 == 0)
            .count()
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(dim_m(0), 1);
        assert_eq!(dim_m(12), 2);
        assert_eq!(dim_m(2), 0);
        assert_eq!(dim_m(-4), 0);
        assert_eq!(dim_m(7), 0);
        assert_eq!(dim_s(12), 1);
        assert_eq!(dim_s(10), 0);
        assert_eq!(dim_s(24), 2);
        assert_eq!(dim_s(0), 0);
        for k in (0..=600).step_by(2) {
            assert_eq!(dim_m(k), monomial_count(k), "dim M_{k}");
            assert_eq!(dim_m(k + 12), dim_m(k) + 1);
        }
    }

    #[test]
    fn eisenstein_examples() {
        let e4 = eisenstein(4, 4).unwrap();
        assert_eq!(e4.coeffs(), &[rat(1), rat(240), rat(2160), rat(6720)]);
        let e6 = eisenstein(6, 3).unwrap();
        assert_eq!(e6.coeff(1), &rat(-504));
        for k in (4..=40).step_by(2) {
            assert_eq!(eisenstein(k, 3).unwrap().coeff(0), &rat(1));
        }
        for bad in [0, 2, 3, 7] {
            assert_eq!(eisenstein(bad, 5), Err(Error::BadWeight(bad as i64)));
        }
    }

    #[test]
    fn e12_constant_has_691() {
        let e12 = eisenstein(12, 2).unwrap();
        assert_eq!(e12.coeff(1), &ratio(65520, 691));
    }

    #[test]
    fn delta_against_product_formula() {
        // q * prod (1 - q^n)^24
        let prec = 30;
        let mut prod = vec![0i64; prec];
        prod[1] = 1;
        for n in 1..prec {
            for _ in 0..24 {
                for i in (n..prec).rev() {
                    prod[i] -= prod[i - n];
                }
            }
        }
        let d = delta(prec).unwrap();
        assert_eq!(d, QExpansion::from_integers(prod, Some(12)));
        assert_eq!(d.coeff(2), &rat(-24));
        assert!(delta(1).is_err());
    }

    #[test]
    fn miller_shapes() {
        let m12 = miller_basis(12, SpaceKind::FullSpace, 6).unwrap();
        assert_eq!(m12.dim(), 2);
        assert_eq!(m12.elements()[0].coeff(0), &rat(1));
        assert_eq!(m12.elements()[0].coeff(1), &rat(0));
        assert_eq!(m12.elements()[1], delta(6).unwrap());
        let s12 = miller_basis(12, SpaceKind::CuspSpace, 6).unwrap();
        assert_eq!(s12.elements(), &[delta(6).unwrap()]);
        let m0 = miller_basis(0, SpaceKind::FullSpace, 4).unwrap();
        assert_eq!(m0.elements(), &[QExpansion::one(4)]);
        assert_eq!(miller_basis(7, SpaceKind::FullSpace, 3).unwrap().dim(), 0);
        assert_eq!(miller_basis(2, SpaceKind::FullSpace, 3).unwrap().dim(), 0);
        assert!(matches!(
            miller_basis(24, SpaceKind::CuspSpace, 2),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn full_basis_contains_cusp_basis() {
        for k in (4..=120).step_by(2) {
            let prec = dim_m(k) + 6;
            let full = miller_basis(k as u32, SpaceKind::FullSpace, prec).unwrap();
            let cusp = miller_basis(k as u32, SpaceKind::CuspSpace, prec).unwrap();
            assert_eq!(full.dim(), dim_m(k));
            assert_eq!(cusp.dim(), dim_s(k));
            let noncusp: Vec<_> = full
                .elements()
                .iter()
                .filter(|b| !b.coeff(0).is_zero())
                .collect();
            assert_eq!(noncusp.len(), 1, "k={k}");
            assert_eq!(&full.elements()[1..], cusp.elements(), "k={k}");
            for b in full.elements() {
                assert!(b.is_rational_integral());
            }
        }
    }

    #[test]
    fn coordinates_examples() {
        let s12 = miller_basis(12, SpaceKind::CuspSpace, 10).unwrap();
        assert_eq!(s12.coordinates(&delta(10).unwrap()).unwrap(), vec![rat(1)]);
        let m10 = miller_basis(10, SpaceKind::FullSpace, 10).unwrap();
        let p = eisenstein(4, 10).unwrap().mul(&eisenstein(6, 10).unwrap());
        assert_eq!(m10.coordinates(&p).unwrap(), vec![rat(1)]);
        assert_eq!(p, eisenstein(10, 10).unwrap());
        let junk = QExpansion::from_integers([0, 1, 1, 1, 1, 1, 1, 1, 1, 1], None);
        assert_eq!(
            s12.coordinates(&junk),
            Err(Error::NotMember {
                weight: 12,
                index: 2
            })
        );
    }

    #[test]
    fn eisenstein_is_modular() {
        for k in (4..=100).step_by(2) {
            let d = dim_m(k as i64);
            let prec = d + 10;
            let space = miller_basis(k, SpaceKind::FullSpace, prec).unwrap();
            let e = eisenstein(k, prec).unwrap();
            let coords = space.coordinates(&e).unwrap();
            assert_eq!(space.combination(&coords), e);
        }
    }

    #[test]
    fn from_echelon_rejects_bad_shapes() {
        let d = delta(5).unwrap();
        assert!(
            SpaceBasis::from_echelon(12, SpaceKind::CuspSpace, vec![d.scale(&rat(2))]).is_err()
        );
        assert!(SpaceBasis::from_echelon(12, SpaceKind::CuspSpace, vec![]).is_err());
        assert!(SpaceBasis::from_echelon(12, SpaceKind::CuspSpace, vec![d]).is_ok());
    }
}
