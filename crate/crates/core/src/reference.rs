//! Published coset tables: parsing, errata overlays, validation, and
//! reconciliation against computed catalogs.
//!
//! A table is plain text with one cyclotomic coset per line, elements
//! separated by commas or whitespace. `#` starts a comment, a leading `*`
//! marks a coset as covered by the closed-form constructions. An errata
//! overlay is a second file of line edits applied before validation:
//!
//! ```text
//! OLD => NEW      replace a single mistyped element in place
//! - N             drop the whole line containing element N
//! + a,b,c,...     add a missing coset line
//! ```
//!
//! Validation is structural (range, repeats, orbit closure); semantic
//! reconciliation happens by diffing the surviving leaders against an
//! exhaustively computed catalog.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cosets;

/// One table line: its values as printed, whether it carried the studied
/// marker, and its 1-based source line (0 for rows added by errata).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    pub values: Vec<u64>,
    pub studied: bool,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReferenceTable {
    pub rows: Vec<ReferenceRow>,
}

/// Parse or application failure, pointing at a 1-based source line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_values(text: &str, line: usize) -> Result<Vec<u64>, TableError> {
    let mut values = Vec::new();
    for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        match token.parse::<u64>() {
            Ok(v) => values.push(v),
            Err(_) => {
                return Err(TableError {
                    line,
                    msg: format!("invalid integer '{token}'"),
                })
            }
        }
    }
    Ok(values)
}

pub fn parse_table(text: &str) -> Result<ReferenceTable, TableError> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let (studied, rest) = match body.strip_prefix('*') {
            Some(rest) => (true, rest),
            None => (false, body),
        };
        let values = parse_values(rest, line)?;
        if values.is_empty() {
            return Err(TableError {
                line,
                msg: String::from("empty coset line"),
            });
        }
        rows.push(ReferenceRow {
            values,
            studied,
            line,
        });
    }
    Ok(ReferenceTable { rows })
}

/// A single errata edit, tagged with its 1-based line in the errata file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub line: usize,
    pub op: ErratumOp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErratumOp {
    /// `OLD => NEW`: rewrite every occurrence of `OLD` in place.
    Replace { old: u64, new: u64 },
    /// `- N`: delete every row containing `N`.
    DropRowContaining(u64),
    /// `+ a,b,c,...`: append a new (unstudied) row.
    AddRow(Vec<u64>),
}

pub fn parse_errata(text: &str) -> Result<Vec<Erratum>, TableError> {
    let mut errata = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw).trim();
        if body.is_empty() {
            continue;
        }
        let op = if let Some((lhs, rhs)) = body.split_once("=>") {
            let parse_side = |side: &str, which: &str| {
                side.trim().parse::<u64>().map_err(|_| TableError {
                    line,
                    msg: format!("invalid {which} value '{}'", side.trim()),
                })
            };
            ErratumOp::Replace {
                old: parse_side(lhs, "old")?,
                new: parse_side(rhs, "new")?,
            }
        } else if let Some(rest) = body.strip_prefix('-') {
            let value = rest.trim().parse::<u64>().map_err(|_| TableError {
                line,
                msg: format!("invalid drop target '{}'", rest.trim()),
            })?;
            ErratumOp::DropRowContaining(value)
        } else if let Some(rest) = body.strip_prefix('+') {
            let values = parse_values(rest, line)?;
            if values.is_empty() {
                return Err(TableError {
                    line,
                    msg: String::from("empty added row"),
                });
            }
            ErratumOp::AddRow(values)
        } else {
            return Err(TableError {
                line,
                msg: format!("unrecognized erratum '{body}'"),
            });
        };
        errata.push(Erratum { line, op });
    }
    Ok(errata)
}

/// Apply edits in order; each `Replace` and `DropRowContaining` must match
/// at least one row or the overlay is reporting against the wrong table.
/// Returns the number of individual edits made.
pub fn apply_errata(table: &mut ReferenceTable, errata: &[Erratum]) -> Result<usize, TableError> {
    let mut edits = 0usize;
    for erratum in errata {
        match &erratum.op {
            ErratumOp::Replace { old, new } => {
                let mut hits = 0usize;
                for row in &mut table.rows {
                    for value in &mut row.values {
                        if value == old {
                            *value = *new;
                            hits += 1;
                        }
                    }
                }
                if hits == 0 {
                    return Err(TableError {
                        line: erratum.line,
                        msg: format!("no occurrence of {old} to replace"),
                    });
                }
                edits += hits;
            }
            ErratumOp::DropRowContaining(value) => {
                let before = table.rows.len();
                table.rows.retain(|row| !row.values.contains(value));
                let dropped = before - table.rows.len();
                if dropped == 0 {
                    return Err(TableError {
                        line: erratum.line,
                        msg: format!("no row contains {value}"),
                    });
                }
                edits += dropped;
            }
            ErratumOp::AddRow(values) => {
                table.rows.push(ReferenceRow {
                    values: values.clone(),
                    studied: false,
                    line: 0,
                });
                edits += 1;
            }
        }
    }
    Ok(edits)
}

/// Structural defect of a single row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowIssue {
    OutOfRange(u64),
    Repeated(u64),
    NotAClosedOrbit,
}

impl fmt::Display for RowIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowIssue::OutOfRange(v) => write!(f, "value {v} outside [0, n)"),
            RowIssue::Repeated(v) => write!(f, "value {v} repeated"),
            RowIssue::NotAClosedOrbit => write!(f, "not closed under multiplication by p"),
        }
    }
}

/// First structural defect of `row` over exponents mod `n`, if any: a value
/// outside `[0, n)`, a repeat, or a value set that is not a whole
/// cyclotomic coset.
pub fn row_issue(row: &ReferenceRow, p: u64, n: u64) -> Option<RowIssue> {
    for &value in &row.values {
        if value >= n {
            return Some(RowIssue::OutOfRange(value));
        }
    }
    for (idx, &value) in row.values.iter().enumerate() {
        if row.values[..idx].contains(&value) {
            return Some(RowIssue::Repeated(value));
        }
    }
    let leader = *row.values.iter().min().expect("rows are never empty");
    let mut orbit = cosets::orbit(leader, p, n);
    let mut values = row.values.clone();
    orbit.sort_unstable();
    values.sort_unstable();
    if orbit != values {
        return Some(RowIssue::NotAClosedOrbit);
    }
    None
}

/// Validation outcome for a whole table: leaders of the structurally sound
/// rows (ascending, deduplicated) and the defects found, each with its
/// source line.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TableReport {
    pub leaders: Vec<u64>,
    pub issues: Vec<(usize, RowIssue)>,
}

pub fn evaluate(table: &ReferenceTable, p: u64, n: u64) -> TableReport {
    let mut report = TableReport::default();
    for row in &table.rows {
        match row_issue(row, p, n) {
            Some(issue) => report.issues.push((row.line, issue)),
            None => report
                .leaders
                .push(*row.values.iter().min().expect("rows are never empty")),
        }
    }
    report.leaders.sort_unstable();
    report.leaders.dedup();
    report
}

/// Leaders of the structurally sound rows carrying the studied marker.
pub fn studied_leaders(table: &ReferenceTable, p: u64, n: u64) -> Vec<u64> {
    let mut leaders: Vec<u64> = table
        .rows
        .iter()
        .filter(|row| row.studied && row_issue(row, p, n).is_none())
        .map(|row| *row.values.iter().min().expect("rows are never empty"))
        .collect();
    leaders.sort_unstable();
    leaders.dedup();
    leaders
}

/// Set difference between a computed catalog and a reference's leaders.
/// `missing` are computed leaders absent from the reference; `spurious`
/// are reference leaders the computation rejects.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Discrepancies {
    pub missing: Vec<u64>,
    pub spurious: Vec<u64>,
}

impl Discrepancies {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.spurious.is_empty()
    }
}

pub fn diff_leaders(computed: &[u64], reference: &[u64]) -> Discrepancies {
    Discrepancies {
        missing: computed
            .iter()
            .filter(|leader| !reference.contains(leader))
            .copied()
            .collect(),
        spurious: reference
            .iter()
            .filter(|leader| !computed.contains(leader))
            .copied()
            .collect(),
    }
}
