// Writes the SVG plot of all equality classes.
//
// Run with `cargo run --example figure -- classes.svg`.

use std::path::Path;

use rankin_cohen::caselaw::{enumerate_equality_classes, DEFAULT_N_MAX, DEFAULT_WTF_MAX};
use rankin_cohen::cli::report;

pub fn run_example(path: &Path) -> Result<usize, String> {
    let records = enumerate_equality_classes(DEFAULT_WTF_MAX, DEFAULT_N_MAX);
    let title = format!(
        "dim S(wt f + wt g + 2n) = dim M(wt g): {}",
        report::footer(records.len())
    );
    let doc = report::svg(&records, DEFAULT_WTF_MAX, DEFAULT_N_MAX, &title);
    std::fs::write(path, &doc).map_err(|e| format!("{}: {e}", path.display()))?;
    println!(
        "wrote {} circles to {}",
        doc.matches("<circle").count(),
        path.display()
    );
    Ok(records.len())
}

#[allow(dead_code)]
fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "classes.svg".into());
    if let Err(e) = run_example(Path::new(&path)) {
        eprintln!("{e}");
        std::process::exit(2);
    }
}
