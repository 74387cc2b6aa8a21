//! Report values and their TSV and JSON renderings.

use nbody_afm::model::{AfmSolution, BoundCharacter};
use nbody_afm::oracles::{OracleReport, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundDto {
    Upper,
    Lower,
    Unknown,
    Exact,
}

impl From<BoundCharacter> for BoundDto {
    fn from(b: BoundCharacter) -> Self {
        match b {
            BoundCharacter::UpperBound => BoundDto::Upper,
            BoundCharacter::LowerBound => BoundDto::Lower,
            BoundCharacter::Unknown => BoundDto::Unknown,
            BoundCharacter::Exact => BoundDto::Exact,
        }
    }
}

impl BoundDto {
    pub fn name(self) -> &'static str {
        match self {
            BoundDto::Upper => "upper",
            BoundDto::Lower => "lower",
            BoundDto::Unknown => "unknown",
            BoundDto::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionDto {
    pub mass: f64,
    #[serde(rename = "X0")]
    pub x0: f64,
    pub mu0: f64,
    pub r0_one: f64,
    pub r0_pair: f64,
    pub bound: BoundDto,
}

impl From<&AfmSolution> for SolutionDto {
    fn from(s: &AfmSolution) -> Self {
        SolutionDto {
            mass: s.mass,
            x0: s.x0,
            mu0: s.mu0,
            r0_one: s.r0_one,
            r0_pair: s.r0_pair,
            bound: s.bound_character.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDto {
    pub check: String,
    pub closed_form: f64,
    pub oracle_value: f64,
    pub relative_gap: f64,
    pub verdict: String,
}

impl ReportDto {
    pub fn new(check: &str, r: &OracleReport) -> Self {
        ReportDto {
            check: check.to_string(),
            closed_form: r.closed_form,
            oracle_value: r.oracle_value,
            relative_gap: r.relative_gap,
            verdict: match r.verdict {
                Verdict::Match => "match",
                Verdict::Violation => "violation",
            }
            .to_string(),
        }
    }

    pub fn is_match(&self) -> bool {
        self.verdict == "match"
    }
}

/// One TSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Shortest representation that reads back to the same bits.
    Num(f64),
    Fixed(f64, usize),
    Int(i64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) if *v != 0.0 && v.is_finite() && !(1e-4..1e15).contains(&v.abs()) => format!("{v:e}"),
            Cell::Num(v) => format!("{v}"),
            Cell::Fixed(v, digits) => format!("{v:.digits$}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// What a command produced, in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub json: Value,
    pub table: Table,
    /// False when a verification report came out as a violation.
    pub all_match: bool,
}

impl Rendered {
    pub fn new(json: Value, table: Table) -> Self {
        Rendered { json, table, all_match: true }
    }
}

pub fn solution_table(s: &SolutionDto) -> Table {
    let mut t = Table::new(&["mass", "X0", "mu0", "r0_one", "r0_pair", "bound"]);
    t.push(vec![
        Cell::Num(s.mass),
        Cell::Num(s.x0),
        Cell::Num(s.mu0),
        Cell::Num(s.r0_one),
        Cell::Num(s.r0_pair),
        Cell::Text(s.bound.name().into()),
    ]);
    t
}

pub fn reports_rendered(reports: Vec<ReportDto>) -> Rendered {
    let mut t = Table::new(&["check", "closed_form", "oracle_value", "relative_gap", "verdict"]);
    for r in &reports {
        t.push(vec![
            Cell::Text(r.check.clone()),
            Cell::Num(r.closed_form),
            Cell::Num(r.oracle_value),
            Cell::Num(r.relative_gap),
            Cell::Text(r.verdict.clone()),
        ]);
    }
    let all_match = reports.iter().all(ReportDto::is_match);
    Rendered { json: serde_json::json!({ "reports": reports }), table: t, all_match }
}
