use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rankin_cohen::exactmath::IntPolynomial;
use rankin_cohen::exactmath::{RatMatrix, Rational};
use rankin_cohen::hecke::{certify_poly, DEFAULT_PRIME_BUDGET};
use rankin_cohen::hecke::{
    charpoly, hecke_input_precision, hecke_matrix, hecke_matrix_in, is_eigenform, PolyStatus,
};
use rankin_cohen::spaces::{delta, dim_s, miller_basis, SpaceBasis, SpaceKind};

fn cusp_weights() -> impl Iterator<Item = u32> {
    (12..=60).step_by(2).filter(|&k| dim_s(k as i64) > 0)
}

fn power_identity(d: usize, p: u64, k: u32) -> RatMatrix {
    RatMatrix::identity(d).scale(&Rational::from_integer(BigInt::from(p).pow(k - 1)))
}

#[test]
fn algebra_identities() {
    for k in cusp_weights() {
        let d = dim_s(k as i64);
        let t2 = hecke_matrix(k, 2).unwrap();
        let t3 = hecke_matrix(k, 3).unwrap();
        assert_eq!(&t2 * &t3, &t3 * &t2, "T2 T3 = T3 T2 at k={k}");
        assert_eq!(hecke_matrix(k, 6).unwrap(), &t2 * &t3, "T6 at k={k}");
        assert_eq!(
            hecke_matrix(k, 4).unwrap(),
            (&t2 * &t2).sub(&power_identity(d, 2, k)),
            "T4 at k={k}"
        );
        assert_eq!(
            hecke_matrix(k, 9).unwrap(),
            (&t3 * &t3).sub(&power_identity(d, 3, k)),
            "T9 at k={k}"
        );
    }
}

#[test]
fn delta_eigenvalues_multiplicative() {
    let report = is_eigenform(&delta(150).unwrap(), 12, 12).unwrap();
    assert!(report.is_eigen);
    let l = |m| report.eigenvalue(m).unwrap().clone();
    assert_eq!(l(6), l(2) * l(3));
    assert_eq!(l(10), l(2) * l(5));
    assert_eq!(l(12), l(4) * l(3));
}

/// Replaces each basis element by itself plus random multiples of the later
/// ones; leading terms are untouched, so the result is still echelon.
fn perturbed(basis: &SpaceBasis, rng: &mut ChaCha8Rng) -> SpaceBasis {
    let els = basis.elements();
    let mixed = (0..els.len())
        .map(|i| {
            let mut b = els[i].clone();
            for later in &els[i + 1..] {
                let c = Rational::new(
                    rng.gen_range(-9i64..=9).into(),
                    rng.gen_range(1i64..=4).into(),
                );
                b = b.add(&later.scale(&c)).unwrap();
            }
            b
        })
        .collect();
    SpaceBasis::from_echelon(basis.weight(), SpaceKind::CuspSpace, mixed).unwrap()
}

#[test]
fn charpoly_is_basis_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in cusp_weights() {
        let d = dim_s(k as i64);
        for m in [2u32, 3] {
            let basis =
                miller_basis(k, SpaceKind::CuspSpace, hecke_input_precision(m, d + 2)).unwrap();
            let other = perturbed(&basis, &mut rng);
            let poly = hecke_matrix_in(&other, m).unwrap().charpoly().unwrap();
            assert_eq!(poly, charpoly(k, m).unwrap().poly, "k={k} m={m}");
        }
    }
}

#[test]
fn reducible_verdicts_multiply_back() {
    let polys = [
        IntPolynomial::from_i64(&[-6, 1, 1]),
        IntPolynomial::from_i64(&[4, 0, -5, 0, 1]),
        &IntPolynomial::from_i64(&[1, 0, 1]) * &IntPolynomial::from_i64(&[-2, 0, 0, 1]),
        &charpoly(24, 2).unwrap().poly * &charpoly(12, 2).unwrap().poly,
    ];
    for f in &polys {
        let PolyStatus::Reducible(factors) = certify_poly(f, DEFAULT_PRIME_BUDGET) else {
            panic!("{f} should be reducible");
        };
        let product = factors.iter().fold(IntPolynomial::one(), |acc, g| &acc * g);
        assert_eq!(&product, f);
    }
}
