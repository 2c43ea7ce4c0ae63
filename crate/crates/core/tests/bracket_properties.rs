use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use proptest::prelude::*;
use rankin_cohen::bracket::{operator_matrix, rc_bracket};
use rankin_cohen::exactmath::{binomial, rat, QExpansion, Rational};
use rankin_cohen::spaces::{delta, dim_s, eisenstein, miller_basis, SpaceKind};

const PREC: usize = 14;

/// Products `E4^a E6^b Delta^c`, a random modular form of known weight.
fn monomial(a: u32, b: u32, c: u32, prec: usize) -> QExpansion {
    let mut f = QExpansion::one(prec);
    f = f.mul(&eisenstein(4, prec).unwrap().pow(a));
    f = f.mul(&eisenstein(6, prec).unwrap().pow(b));
    f = f.mul(&delta(prec).unwrap().pow(c));
    f
}

fn form() -> impl Strategy<Value = QExpansion> {
    (0u32..3, 0u32..2, 0u32..2)
        .prop_filter("nonconstant", |&(a, b, c)| a + b + c > 0)
        .prop_map(|(a, b, c)| monomial(a, b, c, PREC))
}

fn same_weight_pair() -> impl Strategy<Value = (QExpansion, QExpansion)> {
    // Weight 12 has E4^3, E6^2 and Delta; weight 16 has E4^4, E4 Delta.
    prop_oneof![
        Just((monomial(3, 0, 0, PREC), monomial(0, 2, 0, PREC))),
        Just((monomial(3, 0, 0, PREC), monomial(0, 0, 1, PREC))),
        Just((monomial(4, 0, 0, PREC), monomial(1, 0, 1, PREC))),
    ]
}

fn scalar() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..6).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn antisymmetry(f in form(), g in form(), n in 0u32..=5) {
        let fg = rc_bracket(&f, &g, n).unwrap();
        let gf = rc_bracket(&g, &f, n).unwrap();
        let sign = if n % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(fg, gf.scale(&sign));
    }

    #[test]
    fn bilinearity(h in form(), (f1, f2) in same_weight_pair(), a in scalar(), b in scalar(), n in 0u32..=4) {
        let combo = f1.scale(&a).add(&f2.scale(&b)).unwrap();
        let left = rc_bracket(&combo, &h, n).unwrap();
        let right = rc_bracket(&f1, &h, n).unwrap().scale(&a)
            .add(&rc_bracket(&f2, &h, n).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(&left, &right);
        let left = rc_bracket(&h, &combo, n).unwrap();
        let right = rc_bracket(&h, &f1, n).unwrap().scale(&a)
            .add(&rc_bracket(&h, &f2, n).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cuspidality(f in form(), g in form(), n in 0u32..=5) {
        let image = rc_bracket(&f, &g, n).unwrap();
        let cusp_input = f.coeff(0).is_zero() || g.coeff(0).is_zero();
        if n > 0 || cusp_input {
            prop_assert!(image.coeff(0).is_zero());
        }
    }
}

/// Every bracket of Miller basis elements is a member of its target space,
/// checked with at least two coefficients beyond what determines it.
#[test]
fn modularity_consistency() {
    for wtf in (4..=16).step_by(2) {
        for wtg in (4..=16).step_by(2) {
            for n in 0..=4u32 {
                let target = wtf + wtg + 2 * n;
                let kind = if n > 0 {
                    SpaceKind::CuspSpace
                } else {
                    SpaceKind::FullSpace
                };
                let dt = if n > 0 {
                    dim_s(target as i64)
                } else {
                    rankin_cohen::spaces::dim_m(target as i64)
                };
                let prec = dt + 1 + 3;
                let fb = miller_basis(wtf, SpaceKind::FullSpace, prec).unwrap();
                let gb = miller_basis(wtg, SpaceKind::FullSpace, prec).unwrap();
                let tb = miller_basis(target, kind, prec).unwrap();
                for f in fb.elements() {
                    for g in gb.elements() {
                        let image = rc_bracket(f, g, n).unwrap();
                        assert!(image.prec() >= dt + 3);
                        tb.coordinates(&image).unwrap_or_else(|e| {
                            panic!("[M{wtf}, M{wtg}]_{n} not in {kind}_{target}: {e}")
                        });
                    }
                }
            }
        }
    }
}

/// Rational inputs give rational outputs, and the operator matrix between
/// rational bases has rational entries. With integral Miller bases and an
/// integral `f` the images are integral as well.
#[test]
fn rationality() {
    let e4 = eisenstein(4, 20).unwrap();
    let m = operator_matrix(&e4, 24, 2, SpaceKind::CuspSpace).unwrap();
    assert_eq!(m.rows(), dim_s(32));
    assert_eq!(m.cols(), dim_s(24));
    assert!(m.entries.is_integral());
    let int_image = rc_bracket(
        &e4,
        &miller_basis(24, SpaceKind::CuspSpace, 20)
            .unwrap()
            .elements()[1],
        2,
    )
    .unwrap();
    assert!(int_image.is_rational_integral());
}

/// For `f = E_k` and a domain element `q^i + O(q^(i+1))`, the image starts
/// with `C(n + k - 1, n) i^n q^i`.
#[test]
fn diagonal_image_leading_coefficient() {
    for k in [4u32, 6, 8, 10, 14] {
        for wtg in [12u32, 16, 24, 36] {
            for n in 1..=4u32 {
                let d = dim_s(wtg as i64);
                let prec = d + 3;
                let f = eisenstein(k, prec).unwrap();
                let basis = miller_basis(wtg, SpaceKind::CuspSpace, prec).unwrap();
                for (idx, b) in basis.elements().iter().enumerate() {
                    let i = idx + 1;
                    let image = rc_bracket(&f, b, n).unwrap();
                    for j in 0..i {
                        assert!(image.coeff(j).is_zero());
                    }
                    let expected = binomial((n + k - 1) as i64, n as i64) * BigInt::from(i).pow(n);
                    assert!(!expected.is_zero());
                    assert_eq!(image.coeff(i), &Rational::from_integer(expected));
                }
            }
        }
    }
}
