//! The `rcforms` command-line surface. [`run`] takes arguments and output
//! streams explicitly and returns the process exit code, so tests drive it
//! in-process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 computation or I/O
//! error, 3 a reducible Hecke polynomial was found by `maeda-scan`.

pub mod cache;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bracket::{rc_bracket, BracketSpec};
use crate::caselaw::{self, CaseRecord, ClassFilter, Outcome};
use crate::error::Error;
use crate::exactmath::{format_rational, QExpansion};
use crate::hecke;
use crate::spaces::{delta, dim_s, eisenstein, miller_basis, SpaceKind};

use cache::{Cache, CacheLine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

/// Extra coefficients beyond `dim S_target` when no `--prec` is given.
const PREC_SURPLUS: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "rcforms",
    version,
    about = "Exact computations with level-1 modular forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rankin-Cohen bracket [f, g]_n of two forms.
    Bracket {
        f: FormSpec,
        g: FormSpec,
        n: u32,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Apply the Hecke operator T_m to a form.
    HeckeApply {
        f: FormSpec,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Characteristic polynomial of T_m on S_k, with an irreducibility verdict.
    Charpoly {
        k: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = hecke::DEFAULT_PRIME_BUDGET)]
        budget: u64,
    },
    /// Test whether a form is a Hecke eigenform for T_2..T_bound.
    Eigencheck {
        f: FormSpec,
        #[arg(long, default_value_t = 5)]
        bound: u32,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Case classification of [f, g]_n with f an eigenform.
    Classify {
        wtf: u32,
        f_kind: FormKind,
        wtg: u32,
        g_kind: FormKind,
        n: u32,
    },
    /// List the residue classes where dim S_target equals dim M_wtg.
    Enumerate {
        #[arg(long, default_value_t = caselaw::DEFAULT_WTF_MAX)]
        wtf_max: u32,
        #[arg(long, default_value_t = caselaw::DEFAULT_N_MAX)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify, then certify a concrete case.
    Certify {
        wtf: u32,
        f_kind: FormKind,
        wtg: u32,
        g_kind: FormKind,
        n: u32,
        #[arg(long)]
        prec: Option<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = caselaw::DEFAULT_M_LIST)]
        m: Vec<u32>,
    },
    /// Certify irreducibility of Hecke polynomials over a weight range.
    MaedaScan {
        k_min: u32,
        k_max: u32,
        #[arg(long, value_delimiter = ',', default_values_t = [2u32])]
        m: Vec<u32>,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = hecke::DEFAULT_PRIME_BUDGET)]
        budget: u64,
    },
    /// SVG plot of the enumerated classes.
    Figure {
        #[arg(long, default_value_t = caselaw::DEFAULT_WTF_MAX)]
        wtf_max: u32,
        #[arg(long, default_value_t = caselaw::DEFAULT_N_MAX)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Cuspidal,
    MinusOne,
}

impl From<FilterArg> for ClassFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => ClassFilter::All,
            FilterArg::Cuspidal => ClassFilter::Cuspidal,
            FilterArg::MinusOne => ClassFilter::MinusOne,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Svg,
}

/// Whether a form is taken cuspidal. `eis` and `full` both mean "not
/// necessarily cuspidal".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormKind {
    pub cuspidal: bool,
}

impl FromStr for FormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cusp" | "s" => Ok(FormKind { cuspidal: true }),
            "eis" | "full" | "m" => Ok(FormKind { cuspidal: false }),
            _ => Err(format!("expected cusp, eis or full, got {s:?}")),
        }
    }
}

/// `E<k>`, `Delta`, `M<k>:<i>` or `S<k>:<i>` (element `i` of the Miller basis).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSpec {
    Eisenstein(u32),
    Delta,
    Basis {
        kind: SpaceKind,
        weight: u32,
        index: usize,
    },
}

impl FormSpec {
    pub fn weight(&self) -> u32 {
        match *self {
            FormSpec::Eisenstein(k) => k,
            FormSpec::Delta => 12,
            FormSpec::Basis { weight, .. } => weight,
        }
    }

    pub fn build(&self, prec: usize) -> crate::Result<QExpansion> {
        match *self {
            FormSpec::Eisenstein(k) => eisenstein(k, prec),
            FormSpec::Delta => delta(prec.max(2)).map(|d| d.truncate(prec)),
            FormSpec::Basis {
                kind,
                weight,
                index,
            } => {
                let basis = miller_basis(weight, kind, prec)?;
                basis
                    .elements()
                    .get(index)
                    .cloned()
                    .ok_or(Error::NotMember { weight, index })
            }
        }
    }
}

impl FromStr for FormSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad form {s:?}: expected E<k>, Delta, M<k>:<i> or S<k>:<i>");
        if s == "Delta" {
            return Ok(FormSpec::Delta);
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "E" => rest.parse().map(FormSpec::Eisenstein).map_err(|_| bad()),
            "M" | "S" => {
                let (k, i) = rest.split_once(':').ok_or_else(bad)?;
                let kind = if head == "M" {
                    SpaceKind::FullSpace
                } else {
                    SpaceKind::CuspSpace
                };
                Ok(FormSpec::Basis {
                    kind,
                    weight: k.parse().map_err(|_| bad())?,
                    index: i.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Compute(e.into())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_COMPUTE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Bracket { f, g, n, prec } => cmd_bracket(f, g, n, prec, out),
        Command::HeckeApply { f, m, prec } => cmd_hecke_apply(f, m, prec, out),
        Command::Charpoly { k, m, budget } => cmd_charpoly(k, m, budget, out),
        Command::Eigencheck { f, bound, prec } => cmd_eigencheck(f, bound, prec, out),
        Command::Classify {
            wtf,
            f_kind,
            wtg,
            g_kind,
            n,
        } => {
            let rec = caselaw::classify(wtf, f_kind.cuspidal, wtg, g_kind.cuspidal, n)?;
            writeln!(out, "{}", describe_record(&rec))?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            wtf_max,
            n_max,
            filter,
            format,
            out: path,
        } => cmd_enumerate(wtf_max, n_max, filter, format, path.as_deref(), out, err),
        Command::Certify {
            wtf,
            f_kind,
            wtg,
            g_kind,
            n,
            prec,
            m,
        } => cmd_certify(wtf, f_kind, wtg, g_kind, n, prec, &m, out),
        Command::MaedaScan {
            k_min,
            k_max,
            m,
            cache,
            budget,
        } => cmd_maeda_scan(k_min, k_max, &m, cache.as_deref(), budget, out, err),
        Command::Figure {
            wtf_max,
            n_max,
            filter,
            out: path,
        } => cmd_enumerate(
            wtf_max,
            n_max,
            filter,
            Format::Svg,
            path.as_deref(),
            out,
            err,
        ),
    }
}

fn default_prec(weight: u32) -> usize {
    dim_s(weight as i64) + PREC_SURPLUS
}

fn print_series(series: &QExpansion, out: &mut dyn Write) -> std::io::Result<()> {
    for c in series.coeffs() {
        writeln!(out, "{}", format_rational(c))?;
    }
    Ok(())
}

fn cmd_bracket(
    f: FormSpec,
    g: FormSpec,
    n: u32,
    prec: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    let spec = BracketSpec::new(f.weight(), g.weight(), n);
    let target = spec.target_weight();
    let prec = prec.unwrap_or_else(|| default_prec(target)).max(1);
    let image = rc_bracket(&f.build(prec)?, &g.build(prec)?, n)?;
    writeln!(out, "weight {target}")?;
    print_series(&image, out)?;
    Ok(EXIT_OK)
}

fn cmd_hecke_apply(f: FormSpec, m: u32, prec: Option<usize>, out: &mut dyn Write) -> CmdResult {
    if m == 0 {
        return Err(Failure::Usage("--m must be positive".into()));
    }
    let k = f.weight();
    let prec = prec.unwrap_or_else(|| default_prec(k)).max(1);
    let form = f.build(hecke::hecke_input_precision(m, prec))?;
    let image = hecke::hecke_apply(&form, k, m, prec)?;
    writeln!(out, "weight {k}")?;
    print_series(&image, out)?;
    Ok(EXIT_OK)
}

fn cmd_charpoly(k: u32, m: u32, budget: u64, out: &mut dyn Write) -> CmdResult {
    if m == 0 {
        return Err(Failure::Usage("--m must be positive".into()));
    }
    let rec = hecke::certify_irreducible(hecke::charpoly(k, m)?, budget);
    writeln!(out, "{}", rec.poly)?;
    writeln!(out, "{}", rec.status)?;
    Ok(EXIT_OK)
}

fn cmd_eigencheck(f: FormSpec, bound: u32, prec: Option<usize>, out: &mut dyn Write) -> CmdResult {
    if bound < 2 {
        return Err(Failure::Usage("--bound must be at least 2".into()));
    }
    let k = f.weight();
    let need = (bound * bound) as usize;
    let prec = prec.unwrap_or_else(|| default_prec(k).max(need));
    let report = hecke::is_eigenform(&f.build(prec)?, k, bound)?;
    writeln!(
        out,
        "eigenform: {}",
        if report.is_eigen { "yes" } else { "no" }
    )?;
    if report.is_eigen {
        for (m, l) in report.tested_indices.iter().zip(&report.eigenvalues) {
            writeln!(out, "lambda_{m} = {}", format_rational(l))?;
        }
    }
    Ok(EXIT_OK)
}

fn describe_record(r: &CaseRecord) -> String {
    format!(
        "wtf={} f={} wtg_residue={} n={} dim_relation={} theorem_case={}",
        r.wtf,
        if r.f_cuspidal { "cusp" } else { "eis" },
        r.wtg_residue,
        r.n,
        r.dim_relation,
        r.theorem_case
    )
}

fn write_document(
    path: Option<&Path>,
    body: &str,
    footer: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match path {
        Some(p) => {
            std::fs::write(p, body)?;
            writeln!(out, "{footer}")?;
        }
        None => {
            out.write_all(body.as_bytes())?;
            writeln!(err, "{footer}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(
    wtf_max: u32,
    n_max: u32,
    filter: FilterArg,
    format: Format,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let records = caselaw::enumerate(filter.into(), wtf_max, n_max);
    let footer = report::footer(records.len());
    match format {
        Format::Table => {
            let body = report::table(&records);
            match path {
                Some(p) => {
                    std::fs::write(p, &body)?;
                    writeln!(out, "{footer}")?;
                }
                None => {
                    out.write_all(body.as_bytes())?;
                    writeln!(out, "{footer}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Format::Csv => write_document(path, &report::csv(&records), &footer, out, err),
        Format::Svg => {
            let title = format!("dim S(wt f + wt g + 2n) = dim M(wt g): {footer}");
            write_document(
                path,
                &report::svg(&records, wtf_max, n_max, &title),
                &footer,
                out,
                err,
            )
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_certify(
    wtf: u32,
    f_kind: FormKind,
    wtg: u32,
    g_kind: FormKind,
    n: u32,
    prec: Option<usize>,
    m_list: &[u32],
    out: &mut dyn Write,
) -> CmdResult {
    if m_list.contains(&0) {
        return Err(Failure::Usage("--m entries must be positive".into()));
    }
    let rec = caselaw::classify(wtf, f_kind.cuspidal, wtg, g_kind.cuspidal, n)?;
    writeln!(out, "{}", describe_record(&rec))?;
    let target = wtf + wtg + 2 * n;
    let prec = prec.unwrap_or_else(|| default_prec(target));
    let cert = caselaw::certify(&rec, wtg, prec, m_list)?;
    writeln!(out, "target: S_{target}, dim {}", dim_s(target as i64))?;
    if let Some(op) = &cert.operator {
        writeln!(
            out,
            "operator: {}_{wtg} -> S_{target}, rank {}, injective {}",
            op.domain_kind,
            op.rank,
            if op.is_injective() { "yes" } else { "no" }
        )?;
    }
    match &cert.outcome {
        Outcome::ForcedEigenform(witness) => {
            writeln!(out, "outcome: ForcedEigenform")?;
            match witness {
                Some(w) => {
                    let coords: Vec<String> = w.g_coordinates.iter().map(format_rational).collect();
                    writeln!(out, "g coordinates: {}", coords.join(" "))?;
                    writeln!(
                        out,
                        "verified eigenform: {}",
                        if w.report.is_eigen { "yes" } else { "no" }
                    )?;
                    for (m, l) in w.report.tested_indices.iter().zip(&w.report.eigenvalues) {
                        writeln!(out, "lambda_{m} = {}", format_rational(l))?;
                    }
                }
                None => writeln!(out, "witness: not constructed (dim S_{target} > 1)")?,
            }
        }
        Outcome::RuledOutByIrreducibility(h) => {
            writeln!(out, "outcome: RuledOutByIrreducibility")?;
            writeln!(
                out,
                "T_{} on S_{}: {} is {}",
                h.index_m, h.weight, h.poly, h.status
            )?;
        }
        Outcome::WouldImplyReducibility(hs) => {
            writeln!(out, "outcome: WouldImplyReducibility")?;
            for h in hs {
                writeln!(out, "T_{} on S_{}: {}", h.index_m, h.weight, h.status)?;
            }
        }
        Outcome::Inconclusive(reason) => {
            writeln!(out, "outcome: Inconclusive ({reason})")?;
        }
    }
    Ok(EXIT_OK)
}

/// Status line printed per record by `maeda-scan`.
pub fn scan_line(line: &CacheLine) -> String {
    format!(
        "k={} m={} deg={} {} {}",
        line.weight,
        line.index_m,
        line.degree(),
        line.status,
        line.poly()
    )
}

fn cmd_maeda_scan(
    k_min: u32,
    k_max: u32,
    m_list: &[u32],
    cache_path: Option<&Path>,
    budget: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if k_min < 12 || !k_min.is_multiple_of(2) || !k_max.is_multiple_of(2) || k_min > k_max {
        return Err(Failure::Usage(
            "bounds must be even with 12 <= k_min <= k_max".into(),
        ));
    }
    if m_list.is_empty() || m_list.contains(&0) {
        return Err(Failure::Usage("--m entries must be positive".into()));
    }
    let mut cache = match cache_path {
        Some(p) => Cache::load(p)?,
        None => Cache::default(),
    };
    let weights: Vec<u32> = (k_min..=k_max).step_by(2).collect();
    let tasks: Vec<(u32, u32)> = weights
        .iter()
        .filter(|&&k| dim_s(k as i64) > 0)
        .flat_map(|&k| m_list.iter().map(move |&m| (k, m)))
        .collect();
    let missing: Vec<(u32, u32)> = tasks
        .iter()
        .copied()
        .filter(|&(k, m)| cache.get(k, m).is_none())
        .collect();
    let scan = hecke::scan_tasks(&missing, budget);
    if let Some((k, m, e)) = scan.errors.first() {
        writeln!(err, "scan failed at k={k} m={m}")?;
        return Err(Failure::Compute(e.clone()));
    }
    for rec in &scan.records {
        cache.insert(CacheLine::from(rec));
    }
    if let Some(p) = cache_path {
        cache.save(p)?;
    }
    writeln!(
        err,
        "computed {} records, {} from cache",
        missing.len(),
        tasks.len() - missing.len()
    )?;

    let (mut irreducible, mut reducible, mut unknown) = (0usize, 0usize, 0usize);
    for &k in &weights {
        if dim_s(k as i64) == 0 {
            writeln!(out, "k={k} skipped (S_{k} = 0)")?;
            continue;
        }
        for &m in m_list {
            let line = cache.get(k, m).expect("every task is cached or computed");
            match line.status {
                s if s.is_irreducible() => irreducible += 1,
                cache::CacheStatus::Reducible => reducible += 1,
                _ => unknown += 1,
            }
            writeln!(out, "{}", scan_line(line))?;
        }
    }
    writeln!(
        out,
        "{} records: {irreducible} irreducible, {reducible} reducible, {unknown} unknown",
        irreducible + reducible + unknown
    )?;
    Ok(if reducible > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}
