// Certificates for concrete cases: a forced eigenform with an explicit g,
// an image ruled out by an irreducible Hecke polynomial, and the
// exceptional wt(f) = 12 class.
//
// Run with `cargo run --example certify_case`.

use rankin_cohen::caselaw::{certify, classify, Outcome, DEFAULT_M_LIST};
use rankin_cohen::exactmath::format_rational;

pub fn run_example() -> Result<Vec<String>, String> {
    let mut lines = Vec::new();
    for (wtf, fc, wtg, gc, n) in [
        (4, false, 12, true, 1),
        (6, false, 16, false, 2),
        (26, false, 4, false, 8),
        (12, true, 12, false, 1),
        (12, true, 12, true, 1),
    ] {
        let rec = classify(wtf, fc, wtg, gc, n).map_err(|e| e.to_string())?;
        let cert = certify(&rec, wtg, 0, &DEFAULT_M_LIST).map_err(|e| e.to_string())?;
        let outcome = match &cert.outcome {
            Outcome::ForcedEigenform(Some(w)) => {
                let g: Vec<String> = w.g_coordinates.iter().map(format_rational).collect();
                let l2 = w
                    .report
                    .eigenvalue(2)
                    .map(format_rational)
                    .unwrap_or_default();
                format!("forced eigenform, g = [{}], lambda_2 = {l2}", g.join(", "))
            }
            Outcome::ForcedEigenform(None) => "forced eigenform (target dimension > 1)".to_string(),
            Outcome::RuledOutByIrreducibility(h) => {
                format!("ruled out: T_{} on S_{} {}", h.index_m, h.weight, h.status)
            }
            Outcome::WouldImplyReducibility(_) => "would contradict irreducibility".to_string(),
            Outcome::Inconclusive(reason) => format!("inconclusive: {reason}"),
        };
        let line = format!(
            "[{}, g]_{n}, wt(g)={wtg}, {}: {outcome}",
            if fc { "cusp f" } else { "E" },
            rec.theorem_case
        );
        println!("{line}");
        lines.push(line);
    }
    Ok(lines)
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
