//! Batch front end for the necklace Euler characteristic library.
//!
//! Subcommands:
//! - `genus0`: cycle-type character table of a genus-zero configuration space
//! - `necklace`: alternating multiplicities of necklace strata, with an
//!   optional brute-force cross-check column
//! - `torsors`: level-structure counts (full-order elements, cusps, boundary)
//! - `verify`: the cancellation grid plus purity and boundary consistency
//!
//! Output is deterministic: JSON rows come from serde structs with fixed
//! field order, CSV is a lossy text view of the same rows. Exit codes are
//! 0 on success, 1 on verification failure, 2 on usage or config errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use necklace_euler::{
    boundary_component_count, boundary_components_by_enumeration, cancellation_check,
    cancellation_check_with_adjustment, configuration_character, cusp_count,
    full_order_element_count, necklace_alternating, strata_alternating, LPolynomial,
    NecklaceSymmetry, MAX_TRUNCATION,
};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "necklace-euler", version, about = "Exact Euler characteristics of necklace strata", max_term_width = 100)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// JSON run configuration; explicit flags override its entries.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table of the configuration space of n points on a projective line.
    Genus0 {
        /// Number of points, at least 3.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Alternating Euler multiplicities of necklace strata.
    Necklace {
        /// Smallest number of markings (default 1).
        #[arg(long)]
        n: Option<usize>,
        /// Largest number of markings (default: the value of --n, or 12).
        #[arg(long)]
        n_max: Option<usize>,
        /// Slot symmetry to quotient by.
        #[arg(long)]
        symmetry: Option<NecklaceSymmetry>,
        /// Series truncation degree, at most 15.
        #[arg(long)]
        truncation: Option<usize>,
        /// Add a brute-force enumeration column (n <= 8 only) and fail on mismatch.
        #[arg(long)]
        oracle: bool,
    },
    /// Element orders, cusp counts, and boundary components at level m.
    Torsors {
        /// Smallest level (default 1).
        #[arg(long)]
        m: Option<u64>,
        /// Largest level (default: the value of --m, or 30).
        #[arg(long)]
        m_max: Option<u64>,
    },
    /// Run the cancellation grid and consistency checks; exit 0 only if all pass.
    Verify {
        /// Smallest number of markings (default 2).
        #[arg(long)]
        n: Option<usize>,
        /// Largest number of markings (default: the value of --n, or 10).
        #[arg(long)]
        n_max: Option<usize>,
        /// Smallest level (default 1).
        #[arg(long)]
        m: Option<u64>,
        /// Largest level (default: the value of --m, or 6).
        #[arg(long)]
        m_max: Option<u64>,
        /// Series truncation degree, at most 15.
        #[arg(long)]
        truncation: Option<usize>,
        /// Shift every Eisenstein rank by this amount before checking.
        #[arg(long, hide = true)]
        inject_eis_fault: Option<i64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

/// File-backed defaults for the command-line flags. Every field is optional;
/// a flag given on the command line wins over the file.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RunConfig {
    truncation: Option<usize>,
    n: Option<usize>,
    n_max: Option<usize>,
    m: Option<u64>,
    m_max: Option<u64>,
    symmetry: Option<String>,
    format: Option<String>,
    out: Option<PathBuf>,
    oracle: Option<bool>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

type RunResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> RunResult<()> {
    let config = match &cli.config {
        Some(path) => load_config(path)?,
        None => RunConfig::default(),
    };
    let format = resolve_format(cli.format, &config)?;
    let out = cli.out.clone().or_else(|| config.out.clone());

    let mut verification_errors: Vec<String> = Vec::new();
    let text = match cli.command {
        Command::Genus0 { n } => {
            let n = n.or(config.n).ok_or_else(|| usage("genus0 needs --n"))?;
            genus0_table(n, format)?
        }
        Command::Necklace { n, n_max, symmetry, truncation, oracle } => {
            let (lo, hi) = resolve_range(n.or(config.n), n_max.or(config.n_max), 1, 12)?;
            let symmetry = match symmetry {
                Some(s) => s,
                None => config_symmetry(&config)?
                    .ok_or_else(|| usage("necklace needs --symmetry cyclic|dihedral"))?,
            };
            let truncation = resolve_truncation(truncation.or(config.truncation), hi)?;
            let oracle = oracle || config.oracle.unwrap_or(false);
            necklace_table(lo, hi, symmetry, truncation, oracle, format)?
        }
        Command::Torsors { m, m_max } => {
            let (lo, hi) = resolve_range(m.or(config.m), m_max.or(config.m_max), 1, 30)?;
            torsors_table(lo, hi, format)?
        }
        Command::Verify { n, n_max, m, m_max, truncation, inject_eis_fault } => {
            let (n_lo, n_hi) = resolve_range(n.or(config.n), n_max.or(config.n_max), 2, 10)?;
            let (m_lo, m_hi) = resolve_range(m.or(config.m), m_max.or(config.m_max), 1, 6)?;
            if n_lo < 2 {
                return Err(usage("verify needs n >= 2"));
            }
            let truncation = resolve_truncation(truncation.or(config.truncation), n_hi)?;
            let (text, failures) =
                verify_report(n_lo, n_hi, m_lo, m_hi, truncation, inject_eis_fault, format)?;
            verification_errors = failures;
            text
        }
    };

    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if verification_errors.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(verification_errors.join("; ")))
    }
}

fn load_config(path: &PathBuf) -> RunResult<RunConfig> {
    let raw = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| usage(format!("invalid config {}: {e}", path.display())))
}

fn config_symmetry(config: &RunConfig) -> RunResult<Option<NecklaceSymmetry>> {
    match &config.symmetry {
        None => Ok(None),
        Some(s) => s.parse().map(Some).map_err(|e| usage(format!("in config: {e}"))),
    }
}

fn resolve_format(flag: Option<OutputFormat>, config: &RunConfig) -> RunResult<OutputFormat> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match config.format.as_deref() {
        None => Ok(OutputFormat::Json),
        Some("json") => Ok(OutputFormat::Json),
        Some("csv") => Ok(OutputFormat::Csv),
        Some(other) => Err(usage(format!("in config: unknown format {other:?}"))),
    }
}

/// A `--x`/`--x-max` pair resolves to an inclusive range: only `--x` means a
/// single value, only `--x-max` starts the range at the default low end.
fn resolve_range<T: Copy + Ord + std::fmt::Display>(
    single: Option<T>,
    max: Option<T>,
    default_lo: T,
    default_hi: T,
) -> RunResult<(T, T)> {
    let (lo, hi) = match (single, max) {
        (Some(a), Some(b)) => (a, b),
        (Some(a), None) => (a, a),
        (None, Some(b)) => (default_lo, b),
        (None, None) => (default_lo, default_hi),
    };
    if lo > hi {
        return Err(usage(format!("empty range: {lo} > {hi}")));
    }
    Ok((lo, hi))
}

fn resolve_truncation(requested: Option<usize>, n_hi: usize) -> RunResult<usize> {
    let truncation = requested.unwrap_or(12);
    if truncation > MAX_TRUNCATION {
        return Err(usage(format!("truncation {truncation} exceeds the maximum {MAX_TRUNCATION}")));
    }
    if n_hi > truncation {
        return Err(usage(format!("n-max {n_hi} exceeds truncation {truncation}; raise --truncation")));
    }
    Ok(truncation)
}

fn genus0_table(n: usize, format: OutputFormat) -> RunResult<String> {
    if n < 3 {
        return Err(usage(format!("genus0 needs n >= 3, got {n}")));
    }
    let table = configuration_character(n)
        .map_err(|e| Failure::Verification(e.to_string()))?;
    match format {
        OutputFormat::Json => {
            let json = table.to_json().map_err(|e| Failure::Verification(e.to_string()))?;
            let mut line = serde_json::to_string(&json)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            line.push('\n');
            Ok(line)
        }
        OutputFormat::Csv => {
            let mut text = String::from("n,cycle_type,poly\n");
            for (lambda, value) in table.iter() {
                let parts: Vec<String> = lambda.parts().iter().map(ToString::to_string).collect();
                writeln!(text, "{n},{},{value}", parts.join(" ")).unwrap();
            }
            Ok(text)
        }
    }
}

#[derive(Serialize)]
struct NecklaceRow {
    n: usize,
    symmetry: NecklaceSymmetry,
    alternating: Vec<(u32, i64)>,
    strata_oracle: Option<i64>,
}

fn poly_pairs_i64(poly: &LPolynomial) -> RunResult<Vec<(u32, i64)>> {
    let pairs = poly
        .to_i128_pairs()
        .map_err(|e| Failure::Verification(e.to_string()))?;
    pairs
        .into_iter()
        .map(|(e, c)| {
            i64::try_from(c)
                .map(|c| (e, c))
                .map_err(|_| Failure::Verification("coefficient exceeds i64".into()))
        })
        .collect()
}

fn constant_value(poly: &LPolynomial) -> RunResult<i64> {
    match poly_pairs_i64(poly)?.as_slice() {
        [] => Ok(0),
        [(0, c)] => Ok(*c),
        _ => Err(Failure::Verification(format!("expected a weight-zero constant, got {poly}"))),
    }
}

fn necklace_table(
    lo: usize,
    hi: usize,
    symmetry: NecklaceSymmetry,
    truncation: usize,
    oracle: bool,
    format: OutputFormat,
) -> RunResult<String> {
    if lo < 1 {
        return Err(usage("necklace needs n >= 1"));
    }
    let mut text = String::new();
    if format == OutputFormat::Csv {
        text.push_str("n,symmetry,alternating,strata_oracle\n");
    }
    for n in lo..=hi {
        let alternating = necklace_alternating(symmetry, n, truncation)
            .map_err(|e| Failure::Verification(e.to_string()))?;
        let strata = if oracle && n <= 8 {
            let value = strata_alternating(n, symmetry)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            if value != alternating {
                return Err(Failure::Verification(format!(
                    "strata enumeration disagrees at n={n} {symmetry}: series {alternating}, enumeration {value}"
                )));
            }
            Some(constant_value(&value)?)
        } else {
            None
        };
        match format {
            OutputFormat::Json => {
                let row = NecklaceRow {
                    n,
                    symmetry,
                    alternating: poly_pairs_i64(&alternating)?,
                    strata_oracle: strata,
                };
                writeln!(text, "{}", serde_json::to_string(&row).unwrap()).unwrap();
            }
            OutputFormat::Csv => {
                let oracle_cell = strata.map(|v| v.to_string()).unwrap_or_default();
                writeln!(text, "{n},{symmetry},{alternating},{oracle_cell}").unwrap();
            }
        }
    }
    Ok(text)
}

#[derive(Serialize)]
struct TorsorRow {
    m: u64,
    order_m_elements: u64,
    #[serde(rename = "cusps_X")]
    cusps_x: u64,
    stack_boundary: u64,
}

fn torsors_table(lo: u64, hi: u64, format: OutputFormat) -> RunResult<String> {
    if lo < 1 {
        return Err(usage("torsors needs m >= 1"));
    }
    let mut text = String::new();
    if format == OutputFormat::Csv {
        text.push_str("m,order_m_elements,cusps_X,stack_boundary\n");
    }
    for m in lo..=hi {
        let row = TorsorRow {
            m,
            order_m_elements: full_order_element_count(m),
            cusps_x: cusp_count(m),
            stack_boundary: boundary_component_count(m),
        };
        match format {
            OutputFormat::Json => {
                writeln!(text, "{}", serde_json::to_string(&row).unwrap()).unwrap();
            }
            OutputFormat::Csv => {
                writeln!(
                    text,
                    "{},{},{},{}",
                    row.m, row.order_m_elements, row.cusps_x, row.stack_boundary
                )
                .unwrap();
            }
        }
    }
    Ok(text)
}

/// Returns the row text together with the list of failed checks; the rows are
/// emitted even when some cells fail, so the report shows where.
fn verify_report(
    n_lo: usize,
    n_hi: usize,
    m_lo: u64,
    m_hi: u64,
    truncation: usize,
    fault: Option<i64>,
    format: OutputFormat,
) -> RunResult<(String, Vec<String>)> {
    if m_lo < 1 {
        return Err(usage("verify needs m >= 1"));
    }
    let mut text = String::new();
    if format == OutputFormat::Csv {
        text.push_str(
            "n,m,phi_m,eis_rank_total,cusp_rank_total,boundary_points,fiber_alt,weight0_residue,pass\n",
        );
    }
    let mut failures: Vec<String> = Vec::new();

    for m in m_lo..=m_hi {
        let formula = boundary_component_count(m);
        let enumerated = boundary_components_by_enumeration(m);
        if formula != enumerated {
            failures.push(format!(
                "boundary count at m={m}: formula {formula}, enumeration {enumerated}"
            ));
        }
    }

    for n in n_lo..=n_hi {
        for symmetry in [NecklaceSymmetry::Cyclic, NecklaceSymmetry::Dihedral] {
            let value = necklace_alternating(symmetry, n, truncation)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            if !value.is_constant() {
                failures.push(format!(
                    "alternating multiplicity not pure of weight zero at n={n} {symmetry}: {value}"
                ));
            }
        }
    }

    for n in n_lo..=n_hi {
        for m in m_lo..=m_hi {
            let report = match fault {
                None => cancellation_check(n, m, truncation),
                Some(shift) => cancellation_check_with_adjustment(n, m, truncation, shift),
            }
            .map_err(|e| Failure::Verification(e.to_string()))?;
            if !report.pass {
                failures.push(format!(
                    "weight-zero residue {} at n={n} m={m}",
                    report.weight0_residue
                ));
            }
            match format {
                OutputFormat::Json => {
                    writeln!(text, "{}", serde_json::to_string(&report).unwrap()).unwrap();
                }
                OutputFormat::Csv => {
                    writeln!(
                        text,
                        "{},{},{},{},{},{},{},{},{}",
                        report.n,
                        report.m,
                        report.phi_m,
                        report.eis_rank_total,
                        report.cusp_rank_total,
                        report.boundary_points,
                        report.fiber_alt,
                        report.weight0_residue,
                        report.pass
                    )
                    .unwrap();
                }
            }
        }
    }

    Ok((text, failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_resolution() {
        assert_eq!(resolve_range(Some(4), Some(7), 1, 12).unwrap(), (4, 7));
        assert_eq!(resolve_range(Some(4), None, 1, 12).unwrap(), (4, 4));
        assert_eq!(resolve_range(None, Some(7), 1, 12).unwrap(), (1, 7));
        assert_eq!(resolve_range::<usize>(None, None, 1, 12).unwrap(), (1, 12));
        assert!(resolve_range(Some(7), Some(4), 1, 12).is_err());
    }

    #[test]
    fn truncation_resolution() {
        assert_eq!(resolve_truncation(None, 10).unwrap(), 12);
        assert_eq!(resolve_truncation(Some(15), 15).unwrap(), 15);
        assert!(resolve_truncation(Some(16), 3).is_err());
        assert!(resolve_truncation(None, 13).is_err());
    }

    #[test]
    fn polynomial_rows_fit_in_table_cells() {
        let poly = LPolynomial::from_pairs(&[(0, -2), (1, 1)]);
        assert_eq!(poly_pairs_i64(&poly).unwrap(), vec![(0, -2), (1, 1)]);
        assert_eq!(constant_value(&LPolynomial::constant(-1)).unwrap(), -1);
        assert_eq!(constant_value(&LPolynomial::zero()).unwrap(), 0);
        assert!(constant_value(&poly).is_err());
    }
}
