// The residue classes of wt(g) mod 12 where dim S_target = dim M_wt(g),
// their saturation, and the classification of a few concrete cases.
//
// Run with `cargo run --example enumerate_cases`.

use std::collections::BTreeMap;

use rankin_cohen::caselaw::{
    boundary_exceptions, classify, enumerate_cuspidal_classes, enumerate_equality_classes,
    enumerate_minus_one_classes, DEFAULT_N_MAX, DEFAULT_WTF_MAX,
};

pub fn run_example() -> Result<usize, String> {
    let all = enumerate_equality_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX);
    let mut per_wtf: BTreeMap<u32, usize> = BTreeMap::new();
    for r in &all {
        *per_wtf.entry(r.wtf).or_default() += 1;
    }
    println!("{} equality classes; per wt(f): {per_wtf:?}", all.len());
    if enumerate_equality_classes(40, 20) != all {
        return Err("enumeration is not saturated at the default bounds".into());
    }
    println!("unchanged at wt(f) <= 40, n <= 20");
    println!(
        "cuspidal-capable wt(f): {} classes",
        enumerate_cuspidal_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX).len()
    );
    for r in enumerate_minus_one_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX) {
        println!(
            "minus-one class: wt(f)={} wt(g)={} mod 12, n={}",
            r.wtf, r.wtg_residue, r.n
        );
    }
    println!(
        "boundary exceptions: {}",
        boundary_exceptions(DEFAULT_WTF_MAX, DEFAULT_N_MAX).len()
    );

    for (wtf, fc, wtg, gc, n) in [
        (4, false, 12, true, 1),
        (26, false, 4, false, 8),
        (14, false, 4, false, 1),
        (12, true, 12, false, 1),
        (12, true, 24, true, 2),
    ] {
        let r = classify(wtf, fc, wtg, gc, n).map_err(|e| e.to_string())?;
        println!(
            "wt(f)={wtf}{} wt(g)={wtg}{} n={n}: {} ({})",
            if fc { " cusp" } else { "" },
            if gc { " cusp" } else { "" },
            r.theorem_case,
            r.dim_relation
        );
    }
    Ok(all.len())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
