use rankin_cohen::bracket::rc_bracket;
use rankin_cohen::caselaw::{
    certify, classify, eigenform_f, enumerate_equality_classes, representative, Outcome,
    TheoremCase, DEFAULT_M_LIST,
};
use rankin_cohen::exactmath::rat;
use rankin_cohen::spaces::dim_s;

#[test]
fn saturation_beyond_default_bounds() {
    let base = enumerate_equality_classes(26, 12);
    assert_eq!(base, enumerate_equality_classes(40, 12));
    assert_eq!(base, enumerate_equality_classes(60, 30));
    assert!(base.iter().all(|r| r.wtf <= 24 && r.n <= 11));
}

/// Every certificate over a grid of small concrete cases satisfies the
/// outcome invariants: witnesses verify, and irreducibility verdicts
/// concern the target weight.
#[test]
fn certificate_invariants() {
    for wtf in [4u32, 6, 12, 16] {
        for wtg in [4u32, 12, 16, 22] {
            for n in 1..=3u32 {
                for (fc, gc) in [(false, false), (false, true), (true, false)] {
                    let Ok(rec) = classify(wtf, fc, wtg, gc, n) else {
                        continue;
                    };
                    let cert = certify(&rec, wtg, 0, &DEFAULT_M_LIST).unwrap();
                    let target = wtf + wtg + 2 * n;
                    match &cert.outcome {
                        Outcome::ForcedEigenform(Some(w)) => {
                            assert!(w.report.is_eigen, "{rec:?}");
                            assert!(w.report.tested_indices.contains(&5));
                            assert_eq!(w.image.coeff(1), &rat(1));
                            let f = eigenform_f(&rec, w.g.prec()).unwrap();
                            assert_eq!(rc_bracket(&f, &w.g, n).unwrap(), w.image);
                        }
                        Outcome::RuledOutByIrreducibility(h) => {
                            assert!(h.status.is_irreducible());
                            assert_eq!(h.weight, target);
                        }
                        _ => {}
                    }
                    if rec.theorem_case == TheoremCase::Thm1Case2 {
                        assert!(
                            matches!(cert.outcome, Outcome::ForcedEigenform(_)),
                            "{rec:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn one_dimensional_equality_targets_at_representatives() {
    let recs = enumerate_equality_classes(26, 12);
    let one_dim = recs
        .iter()
        .filter(|r| dim_s((r.wtf + representative(r.wtg_residue) + 2 * r.n) as i64) == 1)
        .count();
    assert_eq!(one_dim, 104);
}
