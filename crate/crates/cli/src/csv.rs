//! Versioned CSV tables for decay ladders.

use std::fmt::Write;
use std::time::Instant;

use ssvis_core::projection::{ortho_cover_length, radial_cover_lenient};
use ssvis_core::{Error, Ifs, Point, Rational};

use crate::args::RhoLadder;

pub const VERSION_LINE: &str = "# ssvis-csv v1";
pub const PROJECT_HEADER: &str = "rho,cylinders,length,ms";
pub const RADIAL_HEADER: &str = "rho,cylinders,length,ms,c1_lower,status";
pub const BUDGET_MARKER: &str = "budget_exceeded";

#[derive(Debug, Clone, PartialEq)]
pub enum RowStatus {
    Ok,
    TooClose,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayRow {
    pub rho: Rational,
    pub cylinders: usize,
    pub length: f64,
    pub ms: Option<f64>,
    pub c1_lower: Option<f64>,
    pub status: RowStatus,
}

/// Rows of a ladder run, plus the cut at which the budget ran out if it did.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayTable {
    pub rows: Vec<DecayRow>,
    pub exhausted: Option<(Rational, Error)>,
}

/// Runs `step` on every rung; `step` receives a stopwatch reading in ms that
/// is `None` unless timing is on.
fn run<F>(ladder: &RhoLadder, timing: bool, mut step: F) -> Result<DecayTable, Error>
where
    F: FnMut(&Rational, &mut dyn FnMut() -> Option<f64>) -> Result<DecayRow, Error>,
{
    let mut rows = Vec::new();
    for (_, rho) in ladder.rungs() {
        let start = Instant::now();
        let mut stop = || timing.then(|| start.elapsed().as_secs_f64() * 1e3);
        match step(&rho, &mut stop) {
            Ok(row) => rows.push(row),
            Err(e @ Error::Budget { .. }) => return Ok(DecayTable { rows, exhausted: Some((rho, e)) }),
            Err(e) => return Err(e),
        }
    }
    Ok(DecayTable { rows, exhausted: None })
}

pub fn project_table(ifs: &Ifs, theta: f64, ladder: &RhoLadder, timing: bool) -> Result<DecayTable, Error> {
    run(ladder, timing, |rho, stop| {
        let (cylinders, length) = ortho_cover_length(ifs, theta, rho)?;
        Ok(DecayRow { rho: rho.clone(), cylinders, length, ms: stop(), c1_lower: None, status: RowStatus::Ok })
    })
}

pub fn radial_table(ifs: &Ifs, a: Point, ladder: &RhoLadder, timing: bool) -> Result<DecayTable, Error> {
    run(ladder, timing, |rho, stop| {
        let cover = radial_cover_lenient(ifs, a, rho)?;
        let length = cover.union_length();
        Ok(DecayRow {
            rho: rho.clone(),
            cylinders: cover.items.len(),
            length,
            ms: stop(),
            c1_lower: Some(cover.c1_lower),
            status: if cover.full_circle { RowStatus::TooClose } else { RowStatus::Ok },
        })
    })
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.3}")).unwrap_or_default()
}

pub fn write_project(table: &DecayTable) -> String {
    let mut out = format!("{VERSION_LINE}\n{PROJECT_HEADER}\n");
    for r in &table.rows {
        writeln!(out, "{},{},{},{}", r.rho, r.cylinders, r.length, opt(r.ms)).unwrap();
    }
    if let Some((rho, _)) = &table.exhausted {
        writeln!(out, "{rho},{BUDGET_MARKER},,").unwrap();
    }
    out
}

pub fn write_radial(table: &DecayTable) -> String {
    let mut out = format!("{VERSION_LINE}\n{RADIAL_HEADER}\n");
    for r in &table.rows {
        let c1 = r.c1_lower.map(|c| c.to_string()).unwrap_or_default();
        match r.status {
            RowStatus::Ok => writeln!(out, "{},{},{},{},{c1},ok", r.rho, r.cylinders, r.length, opt(r.ms)),
            RowStatus::TooClose => writeln!(out, "{},{},,{},{c1},too_close", r.rho, r.cylinders, opt(r.ms)),
        }
        .unwrap();
    }
    if let Some((rho, _)) = &table.exhausted {
        writeln!(out, "{rho},{BUDGET_MARKER},,,,").unwrap();
    }
    out
}
