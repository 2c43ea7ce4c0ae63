//! Text, CSV and SVG renderings of enumerated case records.

use std::fmt::Write;

use crate::caselaw::{representative, CaseRecord};

const COLUMNS: [&str; 5] = ["wtf", "wtg_residue", "n", "dim_relation", "theorem_case"];

fn sorted(records: &[CaseRecord]) -> Vec<CaseRecord> {
    let mut v = records.to_vec();
    v.sort_by_key(CaseRecord::key);
    v
}

fn fields(r: &CaseRecord) -> [String; 5] {
    [
        r.wtf.to_string(),
        r.wtg_residue.to_string(),
        r.n.to_string(),
        r.dim_relation.to_string(),
        r.theorem_case.to_string(),
    ]
}

pub fn csv(records: &[CaseRecord]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in sorted(records) {
        out.push_str(&fields(&r).join(","));
        out.push('\n');
    }
    out
}

pub fn table(records: &[CaseRecord]) -> String {
    let rows: Vec<[String; 5]> = sorted(records).iter().map(fields).collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&COLUMNS);
    for row in &rows {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

pub fn footer(count: usize) -> String {
    format!("{count} classes")
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 60.0;
const BOTTOM: f64 = 70.0;
const GRAYS: [&str; 5] = ["#f0f0f0", "#c0c0c0", "#909090", "#606060", "#303030"];

/// One circle per record at `(wt f, smallest wt g in the residue class)`,
/// radius `3 + 2n`, shade darkening with `n`. Larger circles are drawn first
/// so stacked classes stay visible.
pub fn svg(records: &[CaseRecord], wtf_max: u32, n_max: u32, title: &str) -> String {
    let wtf_max = wtf_max.max(6);
    let n_max = n_max.max(1);
    let x = |wtf: u32| LEFT + (wtf - 4) as f64 / (wtf_max - 4) as f64 * (WIDTH - LEFT - RIGHT);
    let y = |rep: u32| HEIGHT - BOTTOM - (rep - 4) as f64 / 10.0 * (HEIGHT - TOP - BOTTOM);
    let x0 = LEFT;
    let x1 = WIDTH - RIGHT;
    let y0 = HEIGHT - BOTTOM;
    let y1 = TOP;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="800" height="600" viewBox="0 0 800 600">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="800" height="600" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="400" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        escape(title)
    );
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="1">"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>"#);
    let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>"#);
    for wtf in (4..=wtf_max).step_by(2) {
        let _ = writeln!(
            s,
            r#"<line x1="{0:.1}" y1="{y0}" x2="{0:.1}" y2="{1}"/>"#,
            x(wtf),
            y0 + 5.0
        );
    }
    for rep in (4..=14).step_by(2) {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{1:.1}" x2="{x0}" y2="{1:.1}"/>"#,
            x0 - 5.0,
            y(rep)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="12">"#);
    for wtf in (4..=wtf_max).step_by(2) {
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{}" text-anchor="middle">{wtf}</text>"#,
            x(wtf),
            y0 + 20.0
        );
    }
    for rep in (4..=14).step_by(2) {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{:.1}" text-anchor="end">{rep}</text>"#,
            x0 - 10.0,
            y(rep) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">wt(f)</text>"#,
        (x0 + x1) / 2.0,
        y0 + 45.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {0})">smallest wt(g) in class mod 12</text>"#,
        (y0 + y1) / 2.0
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="end">radius 3+2n, darker for larger n</text>"#,
        x1,
        y0 + 45.0
    );
    let _ = writeln!(s, "</g>");

    let mut draw = sorted(records);
    draw.sort_by_key(|r| (r.wtf, r.wtg_residue, std::cmp::Reverse(r.n)));
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="0.8" fill-opacity="0.85">"#
    );
    for r in &draw {
        let shade = (((r.n - 1) * 5) / n_max).min(4) as usize;
        let _ = writeln!(
            s,
            r#"<circle cx="{:.1}" cy="{:.1}" r="{}" fill="{}"><title>wtf={} r={} n={}</title></circle>"#,
            x(r.wtf),
            y(representative(r.wtg_residue)),
            3 + 2 * r.n,
            GRAYS[shade],
            r.wtf,
            r.wtg_residue,
            r.n
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caselaw::enumerate_equality_classes;

    #[test]
    fn csv_shape() {
        let recs = enumerate_equality_classes(26, 12);
        let text = csv(&recs);
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("wtf,wtg_residue,n,dim_relation,theorem_case")
        );
        assert_eq!(lines.count(), recs.len());
        assert_eq!(text, csv(&recs));
    }

    #[test]
    fn svg_circle_per_record() {
        let recs = enumerate_equality_classes(26, 12);
        let doc = svg(&recs, 26, 12, "t");
        assert_eq!(doc.matches("<circle").count(), recs.len());
        assert!(doc.starts_with("<?xml"));
    }
}
