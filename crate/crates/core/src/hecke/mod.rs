//! Hecke operators on q-expansions, Hecke matrices on `S_k`, their
//! characteristic polynomials, and irreducibility certificates over Q.

mod factor;
mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{IntPolynomial, QExpansion, RatMatrix, Rational};
use crate::spaces::{dim_s, miller_basis, SpaceBasis, SpaceKind};

pub use factor::factor_monic_squarefree;

/// Default exclusive bound on the primes tried for a mod-p certificate.
pub const DEFAULT_PRIME_BUDGET: u64 = 100;

/// Coefficients of `f` needed to produce `out_prec` coefficients of `T_m f`.
pub fn hecke_input_precision(m: u32, out_prec: usize) -> usize {
    m as usize * (out_prec - 1) + 1
}

/// `T_m` acting on a weight-`k` q-expansion:
/// the coefficient of `q^n` is `sum_{d | gcd(m, n)} d^(k-1) a_{mn/d^2}`.
/// For `n = 0` this is `sigma_{k-1}(m) a_0`.
pub fn hecke_apply(f: &QExpansion, k: u32, m: u32, out_prec: usize) -> Result<QExpansion> {
    assert!(m >= 1 && out_prec >= 1);
    if let Some(w) = f.weight() {
        if w != k {
            return Err(Error::WeightMismatch(w, k));
        }
    }
    let needed = hecke_input_precision(m, out_prec);
    if f.prec() < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            available: f.prec(),
        });
    }
    let m = m as u64;
    let divisors: Vec<u64> = (1..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let powers: Vec<Rational> = divisors
        .iter()
        .map(|&d| Rational::from_integer(BigInt::from(d).pow(k.saturating_sub(1))))
        .collect();
    let coeffs = (0..out_prec as u64)
        .map(|n| {
            let g = m.gcd(&n);
            let mut acc = Rational::zero();
            for (d, pw) in divisors.iter().zip(&powers) {
                if g % d == 0 {
                    let a = f.coeff((m * n / (d * d)) as usize);
                    if !a.is_zero() {
                        acc += pw * a;
                    }
                }
            }
            acc
        })
        .collect();
    Ok(QExpansion::new(coeffs, Some(k)))
}

/// Matrix of `T_m` in the echelon basis `basis` of `S_k`.
/// The basis must know at least `m (dim + 1) + 1` coefficients.
pub fn hecke_matrix_in(basis: &SpaceBasis, m: u32) -> Result<RatMatrix> {
    let k = basis.weight();
    let d = basis.dim();
    if d == 0 {
        return Err(Error::EmptySpace(k));
    }
    let out_prec = d + 2;
    let columns = basis
        .elements()
        .iter()
        .map(|b| basis.coordinates(&hecke_apply(b, k, m, out_prec)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatMatrix::from_columns(d, &columns))
}

/// Matrix of `T_m` on the Miller basis of `S_k`; its entries are integers.
pub fn hecke_matrix(k: u32, m: u32) -> Result<RatMatrix> {
    let d = dim_s(k as i64);
    if d == 0 {
        return Err(Error::EmptySpace(k));
    }
    let basis = miller_basis(k, SpaceKind::CuspSpace, hecke_input_precision(m, d + 2))?;
    let matrix = hecke_matrix_in(&basis, m)?;
    if let Some(bad) = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .find(|&(i, j)| !matrix[(i, j)].denom().is_one())
    {
        return Err(Error::NonIntegral(matrix[bad].to_string()));
    }
    Ok(matrix)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyStatus {
    /// Irreducible modulo `prime`, hence over Q.
    IrreducibleCertified {
        prime: u64,
    },
    /// A complete factorization over Z found no proper factor.
    IrreducibleByFactorization,
    /// Verified factorization; the product of the factors is the polynomial.
    Reducible(Vec<IntPolynomial>),
    Unknown,
}

impl PolyStatus {
    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            PolyStatus::IrreducibleCertified { .. } | PolyStatus::IrreducibleByFactorization
        )
    }
}

impl fmt::Display for PolyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyStatus::IrreducibleCertified { prime } => write!(f, "irreducible (mod {prime})"),
            PolyStatus::IrreducibleByFactorization => write!(f, "irreducible (factorization)"),
            PolyStatus::Reducible(factors) => {
                let parts: Vec<String> = factors.iter().map(|g| format!("({g})")).collect();
                write!(f, "reducible: {}", parts.join(" * "))
            }
            PolyStatus::Unknown => write!(f, "unknown"),
        }
    }
}

/// Characteristic polynomial of `T_m` on `S_weight` and what is known about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckePolyRecord {
    pub weight: u32,
    pub index_m: u32,
    pub poly: IntPolynomial,
    pub status: PolyStatus,
}

pub fn charpoly(k: u32, m: u32) -> Result<HeckePolyRecord> {
    let poly = hecke_matrix(k, m)?.charpoly()?;
    Ok(HeckePolyRecord {
        weight: k,
        index_m: m,
        poly,
        status: PolyStatus::Unknown,
    })
}

/// Upgrades `rec.status` to a proof of irreducibility or a verified
/// factorization. Primes below `prime_budget` are tried for a mod-p witness
/// first; the fallback is a full factorization over Z.
pub fn certify_irreducible(rec: HeckePolyRecord, prime_budget: u64) -> HeckePolyRecord {
    let status = certify_poly(&rec.poly, prime_budget);
    HeckePolyRecord { status, ..rec }
}

pub fn certify_poly(f: &IntPolynomial, prime_budget: u64) -> PolyStatus {
    assert!(f.is_monic(), "Hecke polynomials are monic");
    if f.degree() == 0 {
        return PolyStatus::Reducible(Vec::new());
    }
    let g = f.gcd(&f.derivative());
    if g.degree() > 0 {
        let rest = f.div_exact_monic(&g).expect("gcd divides f");
        return PolyStatus::Reducible(vec![g, rest]);
    }
    for p in modp::primes_below(prime_budget) {
        let field = modp::Field::new(p);
        let fp = field.reduce(f);
        if field.is_squarefree(&fp) && field.is_irreducible(&fp) {
            return PolyStatus::IrreducibleCertified { prime: p };
        }
    }
    let factors = factor_monic_squarefree(f);
    if factors.len() == 1 {
        PolyStatus::IrreducibleByFactorization
    } else {
        PolyStatus::Reducible(factors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenReport {
    pub form: QExpansion,
    pub weight: u32,
    pub tested_indices: Vec<u32>,
    pub is_eigen: bool,
    /// `eigenvalues[i]` belongs to `tested_indices[i]`; empty unless `is_eigen`.
    pub eigenvalues: Vec<Rational>,
}

impl EigenReport {
    pub fn eigenvalue(&self, m: u32) -> Option<&Rational> {
        let i = self.tested_indices.iter().position(|&t| t == m)?;
        self.eigenvalues.get(i)
    }
}

/// Tests `T_m f = lambda_m f` for `1 <= m <= index_bound` on every coefficient
/// that `T_m f` can be computed to.
pub fn is_eigenform(f: &QExpansion, k: u32, index_bound: u32) -> Result<EigenReport> {
    let lead = f.valuation().ok_or(Error::ZeroForm)?;
    let needed = (index_bound as usize).pow(2).max(1);
    if f.prec() < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            available: f.prec(),
        });
    }
    let mut eigenvalues = Vec::new();
    let mut is_eigen = true;
    let tested_indices: Vec<u32> = (1..=index_bound).collect();
    for &m in &tested_indices {
        let out_prec = (f.prec() - 1) / m as usize + 1;
        let image = hecke_apply(f, k, m, out_prec)?;
        if lead >= out_prec {
            if image.is_zero() {
                return Err(Error::InsufficientPrecision {
                    needed: hecke_input_precision(m, lead + 1),
                    available: f.prec(),
                });
            }
            is_eigen = false;
            break;
        }
        let lambda = image.coeff(lead) / f.coeff(lead);
        let scaled = f.truncate(out_prec).scale(&lambda);
        if scaled.coeffs() != image.coeffs() {
            is_eigen = false;
            break;
        }
        eigenvalues.push(lambda);
    }
    if !is_eigen {
        eigenvalues.clear();
    }
    Ok(EigenReport {
        form: f.clone(),
        weight: k,
        tested_indices,
        is_eigen,
        eigenvalues,
    })
}

/// Outcome of a batch of Hecke-polynomial certifications.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MaedaScan {
    pub records: Vec<HeckePolyRecord>,
    /// Weights where `S_k = 0`, so there is no Hecke polynomial.
    pub skipped: Vec<u32>,
    pub errors: Vec<(u32, u32, Error)>,
}

impl MaedaScan {
    pub fn irreducible_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status.is_irreducible())
            .count()
    }

    pub fn reducible(&self) -> impl Iterator<Item = &HeckePolyRecord> {
        self.records
            .iter()
            .filter(|r| matches!(r.status, PolyStatus::Reducible(_)))
    }
}

/// Certifies the Hecke polynomials `T_m` on `S_k` for every `(k, m)` task,
/// in parallel. Output is sorted by `(k, m)`.
pub fn scan_tasks(tasks: &[(u32, u32)], prime_budget: u64) -> MaedaScan {
    // `None` marks a weight with S_k = 0.
    type TaskResult = ((u32, u32), Option<Result<HeckePolyRecord>>);
    let results: Vec<TaskResult> = tasks
        .par_iter()
        .map(|&(k, m)| {
            if k < 12 || k % 2 != 0 {
                return ((k, m), Some(Err(Error::BadWeight(k as i64))));
            }
            if dim_s(k as i64) == 0 {
                return ((k, m), None);
            }
            let rec = charpoly(k, m).map(|r| certify_irreducible(r, prime_budget));
            ((k, m), Some(rec))
        })
        .collect();
    let mut scan = MaedaScan::default();
    for ((k, m), r) in results {
        match r {
            None => {
                if !scan.skipped.contains(&k) {
                    scan.skipped.push(k);
                }
            }
            Some(Ok(rec)) => scan.records.push(rec),
            Some(Err(e)) => scan.errors.push((k, m, e)),
        }
    }
    scan.records.sort_by_key(|r| (r.weight, r.index_m));
    scan.skipped.sort_unstable();
    scan
}

/// [`scan_tasks`] over every even weight in `weights` and every `m` in `m_list`.
pub fn maeda_scan(
    weights: impl IntoIterator<Item = u32>,
    m_list: &[u32],
    prime_budget: u64,
) -> MaedaScan {
    let tasks: Vec<(u32, u32)> = weights
        .into_iter()
        .flat_map(|k| m_list.iter().map(move |&m| (k, m)))
        .collect();
    scan_tasks(&tasks, prime_budget)
}
