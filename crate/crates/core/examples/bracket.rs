// Rankin-Cohen brackets of Eisenstein series and the matrix of
// `[E4, .]_n` between Miller bases.
//
// Run with `cargo run --example bracket`.

use rankin_cohen::bracket::{operator_matrix, rc_bracket};
use rankin_cohen::exactmath::rat;
use rankin_cohen::spaces::{delta, eisenstein, SpaceKind};

pub fn run_example(prec: usize) -> Result<(), String> {
    let e4 = eisenstein(4, prec).map_err(|e| e.to_string())?;
    let e6 = eisenstein(6, prec).map_err(|e| e.to_string())?;
    let b = rc_bracket(&e4, &e6, 1).map_err(|e| e.to_string())?;
    println!("[E4, E6]_1 = {b}");
    let expected = delta(prec).map_err(|e| e.to_string())?.scale(&rat(-3456));
    if b.coeffs() != expected.coeffs() {
        return Err("[E4, E6]_1 differs from -3456 Delta".into());
    }
    println!("          = -3456 Delta");

    let square = rc_bracket(&e4, &e4, 0).map_err(|e| e.to_string())?;
    let e8 = eisenstein(8, prec).map_err(|e| e.to_string())?;
    println!("E4^2 = E8: {}", square.coeffs() == e8.coeffs());

    for n in 1..=3 {
        let m = operator_matrix(&e4, 24, n, SpaceKind::CuspSpace).map_err(|e| e.to_string())?;
        println!(
            "[E4, .]_{n}: S_24 -> S_{} rank {} injective {}\n{}",
            m.spec.target_weight(),
            m.rank,
            m.is_injective(),
            m.entries
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    let prec = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    if let Err(e) = run_example(prec) {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
