// Certifies the Hecke polynomials T_m on S_k for a range of weights.
//
// Run with `cargo run --release --example maeda_scan -- 12 200 2`.

use std::time::Instant;

use rankin_cohen::hecke::{maeda_scan, PolyStatus, DEFAULT_PRIME_BUDGET};

pub fn run_example(k_min: u32, k_max: u32, m_list: &[u32]) -> Result<usize, String> {
    let start = Instant::now();
    let scan = maeda_scan((k_min..=k_max).step_by(2), m_list, DEFAULT_PRIME_BUDGET);
    for rec in &scan.records {
        let how = match &rec.status {
            PolyStatus::IrreducibleCertified { prime } => format!("irreducible mod {prime}"),
            other => other.to_string(),
        };
        println!(
            "k={:<4} m={:<2} deg={:<3} {how}",
            rec.weight,
            rec.index_m,
            rec.poly.degree()
        );
    }
    for (k, m, e) in &scan.errors {
        println!("k={k} m={m}: error: {e}");
    }
    println!(
        "{} of {} polynomials irreducible ({:.2?})",
        scan.irreducible_count(),
        scan.records.len(),
        start.elapsed()
    );
    let first_reducible = scan.reducible().next().map(|r| (r.weight, r.index_m));
    match first_reducible {
        Some((k, m)) => Err(format!("reducible Hecke polynomial at k={k} m={m}")),
        None => Ok(scan.records.len()),
    }
}

#[allow(dead_code)]
fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let k_min = args.first().copied().unwrap_or(12);
    let k_max = args.get(1).copied().unwrap_or(60);
    let m_list = if args.len() > 2 {
        args[2..].to_vec()
    } else {
        vec![2]
    };
    if let Err(e) = run_example(k_min, k_max, &m_list) {
        eprintln!("{e}");
        std::process::exit(3);
    }
}
