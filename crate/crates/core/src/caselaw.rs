//! Case analysis for `[f, g]_n` with `f` an eigenform: classification by the
//! dimensions of the spaces involved, enumeration of the residue classes of
//! `wt(g)` mod 12 where the dimensions coincide, and certificates linking a
//! bracket image to the reducibility of Hecke polynomials.
//!
//! The reasoning behind a certificate: the image of `[f, .]_n` on a rational
//! basis is a rational subspace of `S_target`. If it is a proper subspace and
//! some Hecke polynomial of weight `target` is irreducible over Q, the image
//! contains no eigenform. If it is all of `S_target`, an eigenform is hit.

use std::fmt;

use num_traits::{One, Zero};

use crate::bracket::{
    operator_matrix, rc_bracket, required_precision, BracketSpec, OperatorMatrix,
};
use crate::error::{Error, Result};
use crate::exactmath::{QExpansion, Rational};
use crate::hecke::{
    certify_irreducible, charpoly, is_eigenform, EigenReport, HeckePolyRecord, PolyStatus,
};
use crate::spaces::{dim_m, dim_s, eisenstein, miller_basis, unique_cusp_form, SpaceKind};

/// Bounds past which no new equality classes appear.
pub const DEFAULT_WTF_MAX: u32 = 26;
pub const DEFAULT_N_MAX: u32 = 12;
pub const DEFAULT_M_LIST: [u32; 3] = [2, 3, 5];
pub const RESIDUES: [u32; 6] = [0, 2, 4, 6, 8, 10];

/// Index bound used when verifying a constructed eigenform.
const WITNESS_INDEX_BOUND: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DimRelation {
    Greater,
    Equal,
    Less,
    EqualMinusOne,
}

impl DimRelation {
    /// Compares `dim S_target` against the dimension of the domain.
    pub fn of(target_dim: usize, domain_dim: usize) -> Self {
        match target_dim as i64 - domain_dim as i64 {
            d if d > 0 => DimRelation::Greater,
            0 => DimRelation::Equal,
            -1 => DimRelation::EqualMinusOne,
            _ => DimRelation::Less,
        }
    }
}

/// `Thm1*`: `f` Eisenstein, `g` cuspidal. `Thm2*`: neither cuspidal.
/// `Thm3*`: `f` cuspidal, `g` not. Within a family, `Case1` is a target
/// larger than the domain; `Thm2Case3` is equality, and the remaining case
/// covers the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremCase {
    Thm1Case1,
    Thm1Case2,
    Thm2Case1,
    Thm2Case2,
    Thm2Case3,
    Thm3Case1,
    Thm3Case2,
    TrivialBothCuspidal,
}

macro_rules! display_as_debug {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    )*};
}
display_as_debug!(DimRelation, TheoremCase);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseRecord {
    pub wtf: u32,
    pub f_cuspidal: bool,
    pub wtg_residue: u32,
    pub n: u32,
    pub dim_relation: DimRelation,
    pub theorem_case: TheoremCase,
}

impl CaseRecord {
    pub fn key(&self) -> (u32, u32, u32) {
        (self.wtf, self.wtg_residue, self.n)
    }

    /// Domain of `[f, .]_n` that decides this case.
    pub fn domain_kind(&self) -> SpaceKind {
        match self.theorem_case {
            TheoremCase::Thm1Case1 | TheoremCase::Thm1Case2 | TheoremCase::TrivialBothCuspidal => {
                SpaceKind::CuspSpace
            }
            TheoremCase::Thm3Case1 | TheoremCase::Thm3Case2
                if self.dim_relation == DimRelation::EqualMinusOne =>
            {
                SpaceKind::CuspSpace
            }
            _ => SpaceKind::FullSpace,
        }
    }
}

/// Smallest `wt(g) >= 4` in the residue class `r` mod 12.
pub fn representative(residue: u32) -> u32 {
    match residue % 12 {
        0 => 12,
        2 => 14,
        r => r,
    }
}

fn check_weight(k: u32) -> Result<()> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::BadWeight(k as i64));
    }
    Ok(())
}

pub fn is_cuspidal_capable(wtf: u32) -> bool {
    dim_s(wtf as i64) >= 1
}

pub fn classify(
    wtf: u32,
    f_cuspidal: bool,
    wtg: u32,
    g_cuspidal: bool,
    n: u32,
) -> Result<CaseRecord> {
    check_weight(wtf)?;
    check_weight(wtg)?;
    if n == 0 {
        return Err(Error::ProductCase);
    }
    if f_cuspidal && !is_cuspidal_capable(wtf) {
        return Err(Error::BadCuspidality(wtf));
    }
    if g_cuspidal && dim_s(wtg as i64) == 0 {
        return Err(Error::BadCuspidality(wtg));
    }
    let target = dim_s((wtf + wtg + 2 * n) as i64);
    let (dim_relation, theorem_case) = match (f_cuspidal, g_cuspidal) {
        (true, true) => (
            DimRelation::of(target, dim_s(wtg as i64)),
            TheoremCase::TrivialBothCuspidal,
        ),
        (false, true) => {
            let rel = DimRelation::of(target, dim_s(wtg as i64));
            let case = if rel == DimRelation::Greater {
                TheoremCase::Thm1Case1
            } else {
                TheoremCase::Thm1Case2
            };
            (rel, case)
        }
        (false, false) => {
            let rel = DimRelation::of(target, dim_m(wtg as i64));
            let case = match rel {
                DimRelation::Greater => TheoremCase::Thm2Case1,
                DimRelation::Equal => TheoremCase::Thm2Case3,
                DimRelation::Less | DimRelation::EqualMinusOne => TheoremCase::Thm2Case2,
            };
            (rel, case)
        }
        (true, false) => {
            let rel = DimRelation::of(target, dim_m(wtg as i64));
            let case = if rel == DimRelation::Greater {
                TheoremCase::Thm3Case1
            } else {
                TheoremCase::Thm3Case2
            };
            (rel, case)
        }
    };
    Ok(CaseRecord {
        wtf,
        f_cuspidal,
        wtg_residue: wtg % 12,
        n,
        dim_relation,
        theorem_case,
    })
}

/// `dim S_{wtf + wtg + 2n} - dim M_wtg` for a concrete `wtg`.
pub fn dim_difference(wtf: u32, wtg: u32, n: u32) -> i64 {
    dim_s((wtf + wtg + 2 * n) as i64) as i64 - dim_m(wtg as i64) as i64
}

/// The difference above on the residue class of `residue`, read at
/// `wtg = residue + 12t` for `t = 5..=15`.
///
/// Panics if it is not constant there: both dimension formulas grow by one
/// per period, so any variation is a bug in the formulas.
pub fn stable_difference(wtf: u32, residue: u32, n: u32) -> i64 {
    let first = dim_difference(wtf, residue + 60, n);
    for t in 6..=15 {
        let d = dim_difference(wtf, residue + 12 * t, n);
        assert_eq!(
            d, first,
            "unstable difference at wtf={wtf} r={residue} n={n} t={t}"
        );
    }
    first
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    /// `dim S_target = dim M_wtg`, any `wt(f)`.
    All,
    /// As `All`, restricted to `wt(f)` carrying a cusp form.
    Cuspidal,
    /// `dim S_target = dim M_wtg - 1` with `wt(f)` carrying a cusp form.
    MinusOne,
}

fn scan_classes(wtf_max: u32, n_max: u32, keep: impl Fn(u32, i64) -> bool) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for wtf in (4..=wtf_max).step_by(2) {
        for r in RESIDUES {
            for n in 1..=n_max {
                if keep(wtf, stable_difference(wtf, r, n)) {
                    out.push((wtf, r, n));
                }
            }
        }
    }
    out
}

/// Residue classes `(wt f, wt g mod 12, n)` with `dim S_target = dim M_wtg`,
/// labelled `Thm2Case3` (`f = E_wtf`).
pub fn enumerate_equality_classes(wtf_max: u32, n_max: u32) -> Vec<CaseRecord> {
    scan_classes(wtf_max, n_max, |_, d| d == 0)
        .into_iter()
        .map(|(wtf, r, n)| CaseRecord {
            wtf,
            f_cuspidal: false,
            wtg_residue: r,
            n,
            dim_relation: DimRelation::Equal,
            theorem_case: TheoremCase::Thm2Case3,
        })
        .collect()
}

/// The equality classes whose `wt f` admits a cuspidal eigenform,
/// labelled `Thm3Case2`.
pub fn enumerate_cuspidal_classes(wtf_max: u32, n_max: u32) -> Vec<CaseRecord> {
    scan_classes(wtf_max, n_max, |wtf, d| d == 0 && is_cuspidal_capable(wtf))
        .into_iter()
        .map(|(wtf, r, n)| CaseRecord {
            wtf,
            f_cuspidal: true,
            wtg_residue: r,
            n,
            dim_relation: DimRelation::Equal,
            theorem_case: TheoremCase::Thm3Case2,
        })
        .collect()
}

pub fn enumerate_minus_one_classes(wtf_max: u32, n_max: u32) -> Vec<CaseRecord> {
    scan_classes(wtf_max, n_max, |wtf, d| d == -1 && is_cuspidal_capable(wtf))
        .into_iter()
        .map(|(wtf, r, n)| CaseRecord {
            wtf,
            f_cuspidal: true,
            wtg_residue: r,
            n,
            dim_relation: DimRelation::EqualMinusOne,
            theorem_case: TheoremCase::Thm3Case2,
        })
        .collect()
}

pub fn enumerate(filter: ClassFilter, wtf_max: u32, n_max: u32) -> Vec<CaseRecord> {
    match filter {
        ClassFilter::All => enumerate_equality_classes(wtf_max, n_max),
        ClassFilter::Cuspidal => enumerate_cuspidal_classes(wtf_max, n_max),
        ClassFilter::MinusOne => enumerate_minus_one_classes(wtf_max, n_max),
    }
}

/// A concrete weight whose dimension difference departs from its class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryException {
    pub wtf: u32,
    pub wtg: u32,
    pub n: u32,
    pub stable: i64,
    pub actual: i64,
}

/// Concrete `4 <= wtg < 60` (residue 2 only from 14) whose difference
/// disagrees with the stable value of its residue class.
pub fn boundary_exceptions(wtf_max: u32, n_max: u32) -> Vec<BoundaryException> {
    let mut out = Vec::new();
    for wtf in (4..=wtf_max).step_by(2) {
        for n in 1..=n_max {
            for wtg in (4..60).step_by(2) {
                if wtg == 2 {
                    continue;
                }
                let stable = stable_difference(wtf, wtg % 12, n);
                let actual = dim_difference(wtf, wtg, n);
                if stable != actual {
                    out.push(BoundaryException {
                        wtf,
                        wtg,
                        n,
                        stable,
                        actual,
                    });
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// Both inputs cuspidal: `q^0` and `q^1` of the bracket vanish, so no
    /// normalized eigenform can result.
    BothCuspidal,
    /// `S_target = 0`.
    DegenerateTarget,
    /// No examined Hecke polynomial could be certified either way.
    NoWitness,
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InconclusiveReason::BothCuspidal => {
                write!(
                    f,
                    "both inputs cuspidal: q^0 and q^1 vanish, no eigenform possible"
                )
            }
            InconclusiveReason::DegenerateTarget => write!(f, "target cusp space is zero"),
            InconclusiveReason::NoWitness => write!(f, "no Hecke polynomial certified"),
        }
    }
}

/// An explicit `g` with `[f, g]_n` the normalized eigenform of a
/// one-dimensional target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenWitness {
    pub g_coordinates: Vec<Rational>,
    pub g: QExpansion,
    pub image: QExpansion,
    pub report: EigenReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The map onto `S_target` is surjective, so some `[f, g]_n` is an
    /// eigenform. A concrete rational `g` is given when `dim S_target = 1`.
    ForcedEigenform(Option<Box<EigenWitness>>),
    /// The image is a proper rational subspace and this polynomial is
    /// irreducible, so the image holds no eigenform.
    RuledOutByIrreducibility(HeckePolyRecord),
    /// Proper image, but every examined polynomial factors.
    WouldImplyReducibility(Vec<HeckePolyRecord>),
    Inconclusive(InconclusiveReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub record: CaseRecord,
    pub concrete_wtg: u32,
    pub operator: Option<OperatorMatrix>,
    pub outcome: Outcome,
}

impl Certificate {
    pub fn target_weight(&self) -> u32 {
        self.record.wtf + self.concrete_wtg + 2 * self.record.n
    }
}

/// The eigenform `f` used for a record: `E_wtf`, or the normalized cusp form
/// when `dim S_wtf = 1`.
pub fn eigenform_f(record: &CaseRecord, prec: usize) -> Result<QExpansion> {
    if record.f_cuspidal {
        if !is_cuspidal_capable(record.wtf) {
            return Err(Error::BadCuspidality(record.wtf));
        }
        unique_cusp_form(record.wtf, prec)
    } else {
        eisenstein(record.wtf, prec)
    }
}

pub fn certify(
    record: &CaseRecord,
    concrete_wtg: u32,
    prec: usize,
    m_list: &[u32],
) -> Result<Certificate> {
    check_weight(concrete_wtg)?;
    if concrete_wtg % 12 != record.wtg_residue {
        return Err(Error::ResidueMismatch {
            wtg: concrete_wtg,
            residue: record.wtg_residue,
        });
    }
    let done = |operator, outcome| {
        Ok(Certificate {
            record: *record,
            concrete_wtg,
            operator,
            outcome,
        })
    };
    if record.theorem_case == TheoremCase::TrivialBothCuspidal {
        return done(
            None,
            Outcome::Inconclusive(InconclusiveReason::BothCuspidal),
        );
    }
    let spec = BracketSpec::new(record.wtf, concrete_wtg, record.n);
    let target = spec.target_weight();
    let kind = record.domain_kind();
    let prec = prec
        .max(required_precision(&spec, kind))
        .max((WITNESS_INDEX_BOUND * WITNESS_INDEX_BOUND) as usize);
    let f = eigenform_f(record, prec)?;
    let op = operator_matrix(&f, concrete_wtg, record.n, kind)?;
    let target_dim = dim_s(target as i64);
    if target_dim == 0 {
        return done(
            Some(op),
            Outcome::Inconclusive(InconclusiveReason::DegenerateTarget),
        );
    }
    if op.rank < target_dim {
        let mut examined = Vec::new();
        for &m in m_list {
            let rec = certify_irreducible(charpoly(target, m)?, crate::hecke::DEFAULT_PRIME_BUDGET);
            if rec.status.is_irreducible() {
                return done(Some(op), Outcome::RuledOutByIrreducibility(rec));
            }
            examined.push(rec);
        }
        let outcome = if !examined.is_empty()
            && examined
                .iter()
                .all(|r| matches!(r.status, PolyStatus::Reducible(_)))
        {
            Outcome::WouldImplyReducibility(examined)
        } else {
            Outcome::Inconclusive(InconclusiveReason::NoWitness)
        };
        return done(Some(op), outcome);
    }
    if target_dim > 1 {
        return done(Some(op), Outcome::ForcedEigenform(None));
    }
    // One-dimensional target: hit the normalized form with a single basis element.
    let j = (0..op.cols())
        .find(|&j| !op.entries[(0, j)].is_zero())
        .expect("a surjective map has a nonzero column");
    let domain = miller_basis(concrete_wtg, kind, prec)?;
    let mut coords = vec![Rational::zero(); domain.dim()];
    coords[j] = Rational::one() / &op.entries[(0, j)];
    let g = domain.combination(&coords);
    let image = rc_bracket(&f, &g, record.n)?;
    let report = is_eigenform(&image, target, WITNESS_INDEX_BOUND)?;
    let witness = EigenWitness {
        g_coordinates: coords,
        g,
        image,
        report,
    };
    done(Some(op), Outcome::ForcedEigenform(Some(Box::new(witness))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use std::collections::BTreeSet;

    #[test]
    fn classification_examples() {
        let r = classify(4, false, 12, true, 1).unwrap();
        assert_eq!(r.theorem_case, TheoremCase::Thm1Case2);
        assert_eq!(r.dim_relation, DimRelation::Equal);
        assert_eq!(
            classify(12, true, 12, true, 1).unwrap().theorem_case,
            TheoremCase::TrivialBothCuspidal
        );
        let r = classify(26, false, 4, false, 8).unwrap();
        assert_eq!(r.theorem_case, TheoremCase::Thm2Case1);
        assert_eq!(r.dim_relation, DimRelation::Greater);
        let r = classify(12, true, 12, false, 1).unwrap();
        assert_eq!(r.dim_relation, DimRelation::EqualMinusOne);
        assert_eq!(r.theorem_case, TheoremCase::Thm3Case2);
    }

    #[test]
    fn classification_errors() {
        assert_eq!(
            classify(14, true, 12, false, 1),
            Err(Error::BadCuspidality(14))
        );
        assert_eq!(classify(5, false, 12, false, 1), Err(Error::BadWeight(5)));
        assert_eq!(classify(4, false, 2, false, 1), Err(Error::BadWeight(2)));
        assert_eq!(classify(4, false, 12, false, 0), Err(Error::ProductCase));
    }

    #[test]
    fn classify_is_consistent_with_dimensions() {
        for wtf in (4..=40).step_by(2) {
            for wtg in (4..=60).step_by(2) {
                for n in 1..=10 {
                    for (fc, gc) in [(false, false), (false, true), (true, false), (true, true)] {
                        let Ok(rec) = classify(wtf, fc, wtg, gc, n) else {
                            assert!(
                                (fc && !is_cuspidal_capable(wtf)) || (gc && dim_s(wtg as i64) == 0)
                            );
                            continue;
                        };
                        let target = dim_s((wtf + wtg + 2 * n) as i64);
                        let domain = if gc {
                            dim_s(wtg as i64)
                        } else {
                            dim_m(wtg as i64)
                        };
                        assert_eq!(rec.dim_relation, DimRelation::of(target, domain));
                        assert_eq!(rec, classify(wtf, fc, wtg, gc, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn stacked_circles_at_14_4() {
        let all = enumerate_equality_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX);
        let keys: BTreeSet<_> = all.iter().map(CaseRecord::key).collect();
        assert!(keys.contains(&(14, 4, 1)));
        assert!(keys.contains(&(14, 4, 2)));
    }

    #[test]
    fn minus_one_class_is_twelve_zero() {
        let recs = enumerate_minus_one_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX);
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| r.wtf == 12 && r.wtg_residue == 0));
        assert!(recs.iter().any(|r| r.n == 1));
        // wtg = 12t: dim S_{wtg + 14} = t = dim M_wtg - 1
        for t in 1..20u32 {
            assert_eq!(dim_s((12 * t + 14) as i64), t as usize);
            assert_eq!(dim_m((12 * t) as i64), t as usize + 1);
        }
    }

    #[test]
    fn no_boundary_exceptions() {
        assert!(boundary_exceptions(30, 12).is_empty());
    }

    #[test]
    fn certify_e4_on_s12() {
        let rec = classify(4, false, 12, true, 1).unwrap();
        let cert = certify(&rec, 12, 0, &DEFAULT_M_LIST).unwrap();
        let Outcome::ForcedEigenform(Some(w)) = &cert.outcome else {
            panic!("expected a concrete witness, got {:?}", cert.outcome);
        };
        // [E4, Delta]_1 = 4 q + ..., so g = Delta / 4.
        assert_eq!(w.g_coordinates, vec![crate::exactmath::ratio(1, 4)]);
        assert!(w.report.is_eigen);
        assert_eq!(w.image.coeff(1), &rat(1));
    }

    #[test]
    fn certify_degenerate_target() {
        let rec = classify(4, false, 4, false, 1).unwrap();
        let cert = certify(&rec, 4, 0, &DEFAULT_M_LIST).unwrap();
        assert_eq!(
            cert.outcome,
            Outcome::Inconclusive(InconclusiveReason::DegenerateTarget)
        );
    }

    #[test]
    fn certify_proper_image_ruled_out() {
        // A one-dimensional domain inside S_46, which has dimension 3.
        let rec = classify(26, false, 4, false, 8).unwrap();
        assert_eq!(rec.theorem_case, TheoremCase::Thm2Case1);
        let cert = certify(&rec, 4, 0, &DEFAULT_M_LIST).unwrap();
        assert_eq!(cert.operator.as_ref().unwrap().rank, 1);
        match &cert.outcome {
            Outcome::RuledOutByIrreducibility(h) => {
                assert_eq!(h.weight, 46);
                assert!(h.status.is_irreducible());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certify_both_cuspidal_and_errors() {
        let rec = classify(12, true, 12, true, 1).unwrap();
        let cert = certify(&rec, 12, 0, &DEFAULT_M_LIST).unwrap();
        assert_eq!(
            cert.outcome,
            Outcome::Inconclusive(InconclusiveReason::BothCuspidal)
        );
        let rec = classify(24, true, 12, false, 1).unwrap();
        assert_eq!(
            certify(&rec, 12, 0, &DEFAULT_M_LIST),
            Err(Error::UnsupportedCuspidalF(24))
        );
        let rec = classify(4, false, 12, true, 1).unwrap();
        assert!(matches!(
            certify(&rec, 16, 0, &DEFAULT_M_LIST),
            Err(Error::ResidueMismatch { .. })
        ));
    }
}
