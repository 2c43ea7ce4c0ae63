// Hecke matrices on S_k, their characteristic polynomials, and eigenform
// detection for Delta and a non-eigenform in S_24.
//
// Run with `cargo run --example hecke_eigen -- 36`.

use rankin_cohen::exactmath::format_rational;
use rankin_cohen::hecke::{
    certify_irreducible, charpoly, hecke_matrix, is_eigenform, DEFAULT_PRIME_BUDGET,
};
use rankin_cohen::spaces::{delta, miller_basis, SpaceKind};

pub fn run_example(k: u32) -> Result<(), String> {
    let t2 = hecke_matrix(k, 2).map_err(|e| e.to_string())?;
    println!("T_2 on S_{k}:\n{t2}");
    let rec = certify_irreducible(
        charpoly(k, 2).map_err(|e| e.to_string())?,
        DEFAULT_PRIME_BUDGET,
    );
    println!("charpoly: {}\n{}", rec.poly, rec.status);

    let report =
        is_eigenform(&delta(50).map_err(|e| e.to_string())?, 12, 7).map_err(|e| e.to_string())?;
    let lambdas: Vec<String> = report
        .tested_indices
        .iter()
        .zip(&report.eigenvalues)
        .map(|(m, l)| format!("tau({m}) = {}", format_rational(l)))
        .collect();
    println!(
        "Delta is an eigenform: {}, {}",
        report.is_eigen,
        lambdas.join(", ")
    );

    let s24 = miller_basis(24, SpaceKind::CuspSpace, 30).map_err(|e| e.to_string())?;
    let sum = s24.elements()[0]
        .add(&s24.elements()[1])
        .map_err(|e| e.to_string())?;
    let report = is_eigenform(&sum, 24, 5).map_err(|e| e.to_string())?;
    println!(
        "first + second Miller element of S_24 is an eigenform: {}",
        report.is_eigen
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let k = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(24);
    if let Err(e) = run_example(k) {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
