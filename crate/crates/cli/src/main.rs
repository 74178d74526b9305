//! `qcodes`: exact verification and cataloging of quinary cyclic codes
//! whose generator polynomial is `(x+1) · m_α(x) · m_{α^e}(x)`.
//!
//! Subcommands: `verify` one code, `enumerate` a whole field, `theorem`
//! for the closed-form construction families, `factor` for polynomial
//! factorization over a prime field, and `tables diff` to reconcile a
//! published coset table against the computed catalog.

mod report;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use qcodes_core::catalog::CatalogEntry;
use qcodes_core::cosets;
use qcodes_core::families::{self, Family};
use qcodes_core::field::{self, FieldContext, TABLE_LIMIT};
use qcodes_core::poly::{self, text::ParseError, Factorization};
use qcodes_core::reference;
use qcodes_core::verifier::{self, CodeVerdict};

use report::{witness_field, ReportRecord};

const EXIT_NOT_OPTIMAL: u8 = 1;
const EXIT_INVALID_SPEC: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_OUTPUT_IO: u8 = 74;

/// Sweeps brute-force every coset of the field; past this order they stop
/// being desk-scale.
const SWEEP_LIMIT: u64 = 3200;

#[derive(Parser)]
#[command(
    name = "qcodes",
    version,
    about = "Exact minimum-distance verification and cataloging of quinary cyclic codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the exact parameters [n, k, d] of one code
    Verify(VerifyArgs),
    /// Sweep a field and list every optimal coset
    Enumerate(EnumerateArgs),
    /// Emit a construction family and verify each emitted exponent
    Theorem(TheoremArgs),
    /// Factor a polynomial over a prime field
    Factor(FactorArgs),
    /// Reference-table utilities
    Tables(TablesArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Extension degree m; the code lives in GF(p^m)
    #[arg(long)]
    m: u32,
    /// Second parity-check exponent e
    #[arg(long)]
    e: u64,
    /// Field characteristic
    #[arg(long, default_value_t = 5)]
    p: u32,
    /// Emit one JSON record instead of text
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit a CSV header and one row instead of text
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// leader, coset, length, d, optimal
    Csv,
    /// reference-table text, one coset per line
    TableText,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Extension degree m
    #[arg(long)]
    m: u32,
    /// Field characteristic
    #[arg(long, default_value_t = 5)]
    p: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::TableText)]
    format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for the sweep (0 = library default); ordering is
    /// independent of the worker count
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct TheoremArgs {
    /// Family token: thm1..thm11, remark2, or remark_p7
    #[arg(long)]
    name: String,
    /// Extension degree m
    #[arg(long)]
    m: u32,
    /// Emit JSON records, one line per exponent
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FactorArgs {
    /// Polynomial in x, e.g. "(x+1)^8-1" or its expanded form
    #[arg(long)]
    poly: String,
    /// Field characteristic
    #[arg(long, default_value_t = 5)]
    p: u32,
    /// Seed for the randomized equal-degree splitting stream
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct TablesArgs {
    #[command(subcommand)]
    action: TablesAction,
}

#[derive(Subcommand)]
enum TablesAction {
    /// Compare a reference table against the computed catalog
    Diff(TablesDiffArgs),
}

#[derive(Args)]
struct TablesDiffArgs {
    /// Extension degree m
    #[arg(long)]
    m: u32,
    /// Field characteristic
    #[arg(long, default_value_t = 5)]
    p: u32,
    /// Reference table path (defaults to the bundled table for m)
    #[arg(long = "ref")]
    reference: Option<PathBuf>,
    /// Directory holding the bundled reference tables
    #[arg(long, env = "QCODES_DATA_DIR", default_value = "data")]
    data_dir: PathBuf,
    /// Do not apply the sibling *_errata.txt overlay
    #[arg(long)]
    no_errata: bool,
    /// Emit JSON records instead of the human-readable report
    #[arg(long)]
    json: bool,
    /// Worker threads for the sweep (0 = library default)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure {
            code,
            msg: msg.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.msg);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Theorem(args) => cmd_theorem(args),
        Command::Factor(args) => cmd_factor(args),
        Command::Tables(args) => match args.action {
            TablesAction::Diff(args) => cmd_tables_diff(args),
        },
    }
}

/// Field construction guarded by friendly usage errors instead of panics.
fn build_context(p: u32, m: u32) -> Result<FieldContext, Failure> {
    if p < 3 || !field::is_prime(p) {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("p = {p} is not an odd prime"),
        ));
    }
    if m < 1 {
        return Err(Failure::new(EXIT_USAGE, "m must be at least 1"));
    }
    match (p as u64).checked_pow(m) {
        Some(q) if q <= TABLE_LIMIT as u64 => Ok(FieldContext::new(p, m)),
        _ => Err(Failure::new(
            EXIT_USAGE,
            format!("field of order {p}^{m} exceeds the table limit {TABLE_LIMIT}"),
        )),
    }
}

fn invalid_spec_reason(p: u32, m: u32, e: u64) -> String {
    let n = (p as u64).pow(m) - 1;
    if e < 1 || e >= n {
        format!("invalid spec: e = {e} outside 1..={}", n - 1)
    } else if e == n / 2 {
        format!("invalid spec: e = {e} equals the half-order exponent s")
    } else {
        format!("invalid spec: e = {e} lies in the cyclotomic coset of 1")
    }
}

fn support_coordinates(ctx: &FieldContext, witness: &verifier::Witness) -> String {
    witness
        .terms()
        .iter()
        .map(|&(i, _)| {
            let digits = ctx.coeffs(ctx.element_from_log(i));
            let inner = digits
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("({inner})")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let ctx = build_context(args.p, args.m)?;
    if !verifier::valid_spec(args.p, args.m, args.e) {
        return Err(Failure::new(
            EXIT_INVALID_SPEC,
            invalid_spec_reason(args.p, args.m, args.e),
        ));
    }
    let started = Instant::now();
    let verdict = verifier::verify_code(&ctx, args.e).expect("spec was validated above");
    let millis = started.elapsed().as_millis() as u64;

    if args.json || args.csv {
        let record = ReportRecord {
            command: "verify".into(),
            p: args.p,
            m: args.m,
            e: args.e,
            n: verdict.n,
            k: verdict.k,
            d: verdict.d,
            optimal: verdict.optimal,
            witness: verdict.witness.as_ref().map(witness_field),
            family: None,
            name: None,
            params: None,
            branch: None,
            hypothesis_ok: None,
            millis,
        };
        if args.json {
            println!("{}", record.to_json());
        } else {
            println!("{}", ReportRecord::CSV_HEADER);
            println!("{}", record.to_csv_row());
        }
    } else {
        println!(
            "n = {}  k = {}  d = {}  optimal = {}",
            verdict.n, verdict.k, verdict.d, verdict.optimal
        );
        if let Some(witness) = &verdict.witness {
            let terms = witness.terms();
            let exps: Vec<String> = terms.iter().map(|(i, _)| i.to_string()).collect();
            let coeffs: Vec<String> = terms.iter().map(|(_, c)| c.to_string()).collect();
            println!("witness exponents: {}", exps.join(", "));
            println!("witness coefficients: {}", coeffs.join(", "));
            println!(
                "witness support coordinates: {}",
                support_coordinates(&ctx, witness)
            );
        }
    }
    Ok(if verdict.optimal { 0 } else { EXIT_NOT_OPTIMAL })
}

/// Verdicts for every admissible coset leader, ascending, fanned out over
/// an optional fixed-size worker pool.
fn parallel_entries(ctx: &FieldContext, jobs: usize) -> Result<Vec<CatalogEntry>, Failure> {
    let (p, n) = (ctx.p() as u64, ctx.n() as u64);
    let leaders = cosets::all_leaders(p, n);
    let sweep = || {
        let mut entries: Vec<CatalogEntry> = leaders
            .par_iter()
            .filter_map(|&leader| {
                verifier::verify_code(ctx, leader).map(|verdict| CatalogEntry {
                    leader,
                    coset: cosets::orbit(leader, p, n),
                    verdict,
                })
            })
            .collect();
        entries.sort_by_key(|entry| entry.leader);
        entries
    };
    if jobs == 0 {
        Ok(sweep())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|err| Failure::new(EXIT_USAGE, format!("cannot build worker pool: {err}")))?;
        Ok(pool.install(sweep))
    }
}

fn sweep_context(p: u32, m: u32) -> Result<FieldContext, Failure> {
    let ctx = build_context(p, m)?;
    if (p as u64).pow(m) > SWEEP_LIMIT {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("full sweeps are capped at p^m <= {SWEEP_LIMIT}; got {p}^{m}"),
        ));
    }
    Ok(ctx)
}

fn render_table_text(ctx: &FieldContext, entries: &[CatalogEntry]) -> String {
    let mut out = format!(
        "# computed optimal cosets for p = {}, m = {} (n = {})\n\
         # one coset per line, leader first, conjugates in multiplication order\n",
        ctx.p(),
        ctx.m(),
        ctx.n()
    );
    for entry in entries {
        let row = entry
            .coset
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn render_catalog_csv(entries: &[CatalogEntry]) -> String {
    let mut out = String::from("leader,coset,length,d,optimal\n");
    for entry in entries {
        let coset = entry
            .coset
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            entry.leader,
            coset,
            entry.coset.len(),
            entry.verdict.d,
            entry.verdict.optimal
        ));
    }
    out
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|err| {
            Failure::new(
                EXIT_OUTPUT_IO,
                format!("cannot write {}: {err}", path.display()),
            )
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|err| Failure::new(EXIT_OUTPUT_IO, format!("cannot write output: {err}")))
        }
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> CmdResult {
    let ctx = sweep_context(args.p, args.m)?;
    let entries = parallel_entries(&ctx, args.jobs)?;
    let optimal: Vec<CatalogEntry> = entries
        .into_iter()
        .filter(|entry| entry.verdict.optimal)
        .collect();
    let text = match args.format {
        OutputFormat::TableText => render_table_text(&ctx, &optimal),
        OutputFormat::Csv => render_catalog_csv(&optimal),
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(0)
}

fn theorem_line(
    family: Family,
    record: &families::FamilyRecord,
    verdict: &CodeVerdict,
) -> String {
    let params = record
        .params
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut line = String::from(record.name);
    if let Some(branch) = record.branch {
        line.push_str(&format!(" branch={branch}"));
    }
    line.push_str(&format!(
        " params=({params}) e={} -> [{}, {}, {}] {}",
        record.e,
        verdict.n,
        verdict.k,
        verdict.d,
        if verdict.optimal {
            "optimal"
        } else {
            "not optimal"
        }
    ));
    if family.is_observational() {
        line.push_str(if record.hypothesis_ok {
            " hypothesis=held"
        } else {
            " hypothesis=violated"
        });
    }
    if let Some(witness) = &verdict.witness {
        line.push_str(&format!(" witness={}", witness_field(witness)));
    }
    line
}

fn cmd_theorem(args: TheoremArgs) -> CmdResult {
    let family = Family::from_token(&args.name).ok_or_else(|| {
        Failure::new(
            EXIT_USAGE,
            format!(
                "unknown family '{}'; known: thm1..thm11, remark2, remark_p7",
                args.name
            ),
        )
    })?;
    if !family.applicable(args.m) {
        return Err(Failure::new(
            EXIT_USAGE,
            format!(
                "family {} has no construction at m = {} (precondition not met)",
                family.token(),
                args.m
            ),
        ));
    }
    let ctx = build_context(family.prime(), args.m)?;
    let records = families::emitted(family, args.m);
    let mut all_optimal = true;
    for record in &records {
        let started = Instant::now();
        let verdict =
            verifier::verify_code(&ctx, record.e).expect("emitted exponents are valid specs");
        let millis = started.elapsed().as_millis() as u64;
        all_optimal &= verdict.optimal;
        if args.json {
            let out = ReportRecord {
                command: "theorem".into(),
                p: family.prime(),
                m: args.m,
                e: record.e,
                n: verdict.n,
                k: verdict.k,
                d: verdict.d,
                optimal: verdict.optimal,
                witness: verdict.witness.as_ref().map(witness_field),
                family: Some(family.token().into()),
                name: Some(record.name.into()),
                params: Some(record.params.clone()),
                branch: record.branch,
                hypothesis_ok: family.is_observational().then_some(record.hypothesis_ok),
                millis,
            };
            println!("{}", out.to_json());
        } else {
            println!("{}", theorem_line(family, record, &verdict));
        }
    }
    if !args.json {
        println!("emitted {} exponents", records.len());
    }
    // observational families report; they carry no optimality promise
    if family.is_observational() || all_optimal {
        Ok(0)
    } else {
        Ok(EXIT_NOT_OPTIMAL)
    }
}

fn caret_diagnostic(input: &str, err: &ParseError) -> String {
    let mut out = format!(
        "polynomial parse error at offset {}: {}\n  {input}\n  ",
        err.pos, err.msg
    );
    for _ in 0..err.pos {
        out.push(' ');
    }
    out.push('^');
    out
}

fn render_factorization(fac: &Factorization) -> String {
    if fac.factors.is_empty() {
        return fac.unit.to_string();
    }
    if fac.unit == 1 && fac.factors.len() == 1 && fac.factors[0].1 == 1 {
        return fac.factors[0].0.display();
    }
    let mut parts = Vec::new();
    if fac.unit != 1 {
        parts.push(fac.unit.to_string());
    }
    for (factor, multiplicity) in &fac.factors {
        let body = factor.display();
        parts.push(if *multiplicity == 1 {
            format!("({body})")
        } else {
            format!("({body})^{multiplicity}")
        });
    }
    parts.join(" * ")
}

fn cmd_factor(args: FactorArgs) -> CmdResult {
    if args.p < 3 || !field::is_prime(args.p) {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("p = {} is not an odd prime", args.p),
        ));
    }
    let f = poly::text::parse(&args.poly, args.p)
        .map_err(|err| Failure::new(EXIT_PARSE, caret_diagnostic(&args.poly, &err)))?;
    if f.is_zero() {
        println!("0");
        return Ok(0);
    }
    let fac = poly::factor(&f, args.p, args.seed);
    println!("{}", render_factorization(&fac));
    Ok(0)
}

fn default_table_name(p: u32, m: u32) -> Option<&'static str> {
    match (p, m) {
        (5, 4) => Some("table1.txt"),
        (5, 5) => Some("table2.txt"),
        _ => None,
    }
}

fn errata_sibling(path: &Path) -> Option<PathBuf> {
    let stem = path.file_stem()?.to_str()?;
    Some(path.with_file_name(format!("{stem}_errata.txt")))
}

fn cmd_tables_diff(args: TablesDiffArgs) -> CmdResult {
    let ctx = sweep_context(args.p, args.m)?;
    let path = match args.reference {
        Some(path) => path,
        None => {
            let name = default_table_name(args.p, args.m).ok_or_else(|| {
                Failure::new(
                    EXIT_USAGE,
                    format!(
                        "no bundled reference table for p = {}, m = {}; pass --ref",
                        args.p, args.m
                    ),
                )
            })?;
            args.data_dir.join(name)
        }
    };
    let text = fs::read_to_string(&path).map_err(|err| {
        Failure::new(
            EXIT_NO_INPUT,
            format!("cannot read reference table {}: {err}", path.display()),
        )
    })?;
    let mut table = reference::parse_table(&text)
        .map_err(|err| Failure::new(EXIT_PARSE, format!("{}: {err}", path.display())))?;

    let mut errata_note = String::from("none");
    if !args.no_errata {
        if let Some(errata_path) = errata_sibling(&path).filter(|p| p.is_file()) {
            let errata_text = fs::read_to_string(&errata_path).map_err(|err| {
                Failure::new(
                    EXIT_NO_INPUT,
                    format!("cannot read errata {}: {err}", errata_path.display()),
                )
            })?;
            let errata = reference::parse_errata(&errata_text)
                .map_err(|err| Failure::new(EXIT_PARSE, format!("{}: {err}", errata_path.display())))?;
            let edits = reference::apply_errata(&mut table, &errata)
                .map_err(|err| Failure::new(EXIT_PARSE, format!("{}: {err}", errata_path.display())))?;
            let plural = if edits == 1 { "" } else { "s" };
            errata_note = format!("{} ({edits} edit{plural})", errata_path.display());
        }
    }

    let n = ctx.n() as u64;
    let rows = table.rows.len();
    let studied = table.rows.iter().filter(|row| row.studied).count();
    let report = reference::evaluate(&table, args.p as u64, n);
    let computed: Vec<u64> = parallel_entries(&ctx, args.jobs)?
        .into_iter()
        .filter(|entry| entry.verdict.optimal)
        .map(|entry| entry.leader)
        .collect();
    let diff = reference::diff_leaders(&computed, &report.leaders);
    let clean = diff.is_empty() && report.issues.is_empty();

    if args.json {
        for (line, issue) in &report.issues {
            println!(
                "{}",
                serde_json::json!({"kind": "malformed", "line": line, "detail": issue.to_string()})
            );
        }
        for leader in &diff.missing {
            println!("{}", serde_json::json!({"kind": "missing", "leader": leader}));
        }
        for leader in &diff.spurious {
            println!("{}", serde_json::json!({"kind": "spurious", "leader": leader}));
        }
        println!(
            "{}",
            serde_json::json!({
                "kind": "summary",
                "reference": path.display().to_string(),
                "rows": rows,
                "studied": studied,
                "computed": computed.len(),
                "malformed": report.issues.len(),
                "missing": diff.missing.len(),
                "spurious": diff.spurious.len(),
                "clean": clean,
            })
        );
    } else {
        println!(
            "reference: {} ({rows} rows, {studied} studied)",
            path.display()
        );
        println!("errata: {errata_note}");
        println!("computed optimal cosets: {}", computed.len());
        if report.issues.is_empty() {
            println!("malformed rows: none");
        } else {
            println!("malformed rows: {}", report.issues.len());
            for (line, issue) in &report.issues {
                println!("  line {line}: {issue}");
            }
        }
        let fmt = |leaders: &[u64]| {
            leaders
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        if diff.missing.is_empty() {
            println!("missing from reference: none");
        } else {
            println!("missing from reference: {}", fmt(&diff.missing));
        }
        if diff.spurious.is_empty() {
            println!("not confirmed by computation: none");
        } else {
            println!("not confirmed by computation: {}", fmt(&diff.spurious));
        }
        println!("result: {}", if clean { "clean" } else { "discrepant" });
    }
    Ok(if clean { 0 } else { EXIT_NOT_OPTIMAL })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_spec_reasons_name_the_failure() {
        assert!(invalid_spec_reason(5, 4, 0).contains("outside"));
        assert!(invalid_spec_reason(5, 4, 700).contains("outside"));
        assert!(invalid_spec_reason(5, 4, 312).contains("half-order"));
        assert!(invalid_spec_reason(5, 4, 125).contains("coset of 1"));
    }

    #[test]
    fn caret_lands_under_the_offending_byte() {
        let err = ParseError {
            pos: 3,
            msg: "expected a factor".into(),
        };
        let text = caret_diagnostic("x^+2", &err);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "  x^+2");
        assert_eq!(lines[2], "     ^");
    }

    #[test]
    fn errata_sibling_swaps_the_file_stem() {
        let sib = errata_sibling(Path::new("data/table1.txt")).unwrap();
        assert_eq!(sib, Path::new("data/table1_errata.txt"));
    }

    #[test]
    fn factorization_rendering_handles_units_and_powers() {
        let f = poly::text::parse("3(x+1)^2x", 5).unwrap();
        let fac = poly::factor(&f, 5, None);
        assert_eq!(render_factorization(&fac), "3 * (x) * (x+1)^2");
        let bare = poly::factor(&poly::text::parse("x", 5).unwrap(), 5, None);
        assert_eq!(render_factorization(&bare), "x");
        let constant = poly::factor(&poly::text::parse("4", 5).unwrap(), 5, None);
        assert_eq!(render_factorization(&constant), "4");
    }

    #[test]
    fn table_names_cover_the_bundled_catalogs() {
        assert_eq!(default_table_name(5, 4), Some("table1.txt"));
        assert_eq!(default_table_name(5, 5), Some("table2.txt"));
        assert_eq!(default_table_name(5, 3), None);
        assert_eq!(default_table_name(7, 4), None);
    }
}
