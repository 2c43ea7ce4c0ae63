//! The Rankin-Cohen bracket and the linear operator `[f, .]_n`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, from_int, QExpansion, RatMatrix, Rational};
use crate::spaces::{dim, dim_s, miller_basis, SpaceKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BracketSpec {
    pub n: u32,
    pub wtf: u32,
    pub wtg: u32,
}

impl BracketSpec {
    pub fn new(wtf: u32, wtg: u32, n: u32) -> Self {
        BracketSpec { n, wtf, wtg }
    }

    pub fn target_weight(&self) -> u32 {
        self.wtf + self.wtg + 2 * self.n
    }
}

/// `[f, g]_n = sum_{r+s=n} (-1)^r C(n+wt f-1, s) C(n+wt g-1, r) f^(r) g^(s)`.
///
/// Both inputs must carry weight tags. The result is tagged with
/// `wt f + wt g + 2n` and has the smaller of the two precisions.
pub fn rc_bracket(f: &QExpansion, g: &QExpansion, n: u32) -> Result<QExpansion> {
    let wf = f.weight().ok_or(Error::MissingWeight)?;
    let wg = g.weight().ok_or(Error::MissingWeight)?;
    let prec = f.prec().min(g.prec());
    let (wf_i, wg_i, n_i) = (wf as i64, wg as i64, n as i64);
    let mut acc = QExpansion::zero(prec);
    for r in 0..=n {
        let s = n - r;
        let mut c = binomial(n_i + wf_i - 1, s as i64) * binomial(n_i + wg_i - 1, r as i64);
        if c == 0.into() {
            continue;
        }
        if r % 2 == 1 {
            c = -c;
        }
        let term = f.theta(r).mul(&g.theta(s)).scale(&from_int(c));
        acc = acc.add(&term)?;
    }
    Ok(acc.with_weight(Some(wf + wg + 2 * n)))
}

/// Matrix of `[f, .]_n` from a Miller basis of `M_wtg` or `S_wtg` into the
/// Miller basis of `S_{wt f + wtg + 2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub spec: BracketSpec,
    pub domain_kind: SpaceKind,
    /// Column `j` holds the target coordinates of the image of domain basis element `j`.
    pub entries: RatMatrix,
    pub rank: usize,
}

impl OperatorMatrix {
    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn is_injective(&self) -> bool {
        self.rank == self.cols()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank == self.rows()
    }
}

/// Coefficients `f` must know for [`operator_matrix`] to certify every column.
pub fn required_precision(spec: &BracketSpec, domain_kind: SpaceKind) -> usize {
    let target = dim_s(spec.target_weight() as i64);
    let domain = dim(spec.wtg as i64, domain_kind);
    (target + 3).max(target + domain + 2)
}

pub fn operator_matrix(
    f: &QExpansion,
    wtg: u32,
    n: u32,
    domain_kind: SpaceKind,
) -> Result<OperatorMatrix> {
    let wtf = f.weight().ok_or(Error::MissingWeight)?;
    let spec = BracketSpec::new(wtf, wtg, n);
    let needed = required_precision(&spec, domain_kind);
    if f.prec() < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            available: f.prec(),
        });
    }
    let prec = f.prec();
    let domain = miller_basis(wtg, domain_kind, prec)?;
    let target = miller_basis(spec.target_weight(), SpaceKind::CuspSpace, prec)?;
    let columns: Vec<Vec<Rational>> = domain
        .elements()
        .par_iter()
        .map(|g| target.coordinates(&rc_bracket(f, g, n)?))
        .collect::<Result<_>>()?;
    let entries = RatMatrix::from_columns(target.dim(), &columns);
    let rank = entries.rank();
    Ok(OperatorMatrix {
        spec,
        domain_kind,
        entries,
        rank,
    })
}

pub fn is_injective(m: &OperatorMatrix) -> bool {
    m.is_injective()
}
