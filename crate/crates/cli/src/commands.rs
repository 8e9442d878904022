//! Subcommand bodies. Each returns the full text to emit.

use std::fmt::Write;

use serde_json::{json, Value};
use ssvis_core::projection::{overlap_upper_bound, visibility_certificate, CertificateOptions};
use ssvis_core::symbolic::{classify, find_close_projections, recurrence_word, Schedule};
use ssvis_core::{similarity_dimension, Error, Ifs, Point, Word};

use crate::args::RhoLadder;
use crate::csv::{project_table, radial_table, write_project, write_radial, DecayTable, RowStatus};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Svg,
    Json,
    Text,
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Config(format!("format {format:?} is not available for `{command}`").to_lowercase())
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json serializes");
    s.push('\n');
    s
}

fn table_json(t: &DecayTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "rho": r.rho.to_string(),
                "cylinders": r.cylinders,
                "length": (r.status == RowStatus::Ok).then_some(r.length),
                "ms": r.ms,
                "c1_lower": r.c1_lower,
                "status": if r.status == RowStatus::Ok { "ok" } else { "too_close" },
            })
        })
        .collect();
    json!({ "rows": rows, "budget_exceeded_at": t.exhausted.as_ref().map(|(rho, _)| rho.to_string()) })
}

pub fn cmd_project(
    ifs: &Ifs,
    theta: f64,
    ladder: &RhoLadder,
    timing: bool,
    format: Format,
) -> Result<String, CliError> {
    let t = project_table(ifs, theta, ladder, timing)?;
    match format {
        Format::Csv => Ok(write_project(&t)),
        Format::Json => Ok(pretty(table_json(&t))),
        f => Err(unsupported(f, "project")),
    }
}

pub fn cmd_radial(ifs: &Ifs, a: Point, ladder: &RhoLadder, timing: bool, format: Format) -> Result<String, CliError> {
    let t = radial_table(ifs, a, ladder, timing)?;
    match format {
        Format::Csv => Ok(write_radial(&t)),
        Format::Json => Ok(pretty(table_json(&t))),
        f => Err(unsupported(f, "radial")),
    }
}

pub fn cmd_classify(ifs: &Ifs, format: Format) -> Result<String, CliError> {
    let c = classify(ifs)?;
    let size = c.closure.as_ref().map(|cl| cl.len());
    let witness = c.witness.as_ref().map(Word::to_string);
    match format {
        Format::Text => {
            let mut s = format!("case {}, K={}, {}", c.case, c.k, if c.finite { "finite" } else { "infinite" });
            if let Some(n) = size {
                write!(s, ", |S|={n}").unwrap();
            }
            if let Some(w) = &witness {
                write!(s, ", witness={w}").unwrap();
            }
            s.push('\n');
            Ok(s)
        }
        Format::Json => Ok(pretty(json!({
            "case": c.case.to_string(),
            "k": c.k,
            "finite": c.finite,
            "closure_size": size,
            "witness": witness,
        }))),
        f => Err(unsupported(f, "classify")),
    }
}

pub fn cmd_recurrence(ifs: &Ifs, u: &Word, delta: f64, format: Format) -> Result<String, CliError> {
    let cert = recurrence_word(ifs, u, delta)?;
    let (kind, blocks) = match &cert.schedule {
        Schedule::Finite(blocks) => (
            "finite",
            blocks
                .iter()
                .map(|b| json!({ "lead": b.lead.to_string(), "start": b.start, "offset": b.offset }))
                .collect::<Vec<_>>(),
        ),
        Schedule::Infinite { v, n, flip, .. } => (
            "infinite",
            vec![
                json!({ "v": v.to_string(), "n": n, "flip": flip.as_ref().map(|(j, _)| Word::single(*j).to_string()) }),
            ],
        ),
    };
    let examples: Vec<Value> =
        cert.verified_examples.iter().map(|(p, n)| json!({ "sequence": p.to_string(), "n": n })).collect();
    match format {
        Format::Text => {
            let mut s = format!("target {}\nschedule {kind}\nomega {} (length {})\n", u, cert.omega, cert.omega.len());
            if let Some(d) = cert.delta {
                writeln!(s, "delta {d}").unwrap();
            }
            for b in &blocks {
                writeln!(s, "block {b}").unwrap();
            }
            writeln!(s, "verified {} examples", examples.len()).unwrap();
            Ok(s)
        }
        Format::Json => Ok(pretty(json!({
            "target": u.to_string(),
            "delta": cert.delta,
            "omega": cert.omega.to_string(),
            "schedule": kind,
            "blocks": blocks,
            "verified_examples": examples,
        }))),
        f => Err(unsupported(f, "recurrence")),
    }
}

pub fn cmd_claim(ifs: &Ifs, theta: f64, n: usize, budget: usize, format: Format) -> Result<String, CliError> {
    let c = find_close_projections(ifs, theta, n, budget)?;
    let words: Vec<String> = c.words.iter().map(Word::to_string).collect();
    match format {
        Format::Text => Ok(format!("r {}\nwords {}\nspan {}\n", c.r, words.join(","), c.span)),
        Format::Json => Ok(pretty(json!({
            "r": c.r.to_string(),
            "words": words,
            "projections": c.projections,
            "span": c.span,
        }))),
        f => Err(unsupported(f, "claim")),
    }
}

pub fn cmd_certificate(
    ifs: &Ifs,
    a: Point,
    ladder: &[usize],
    delta: f64,
    budget: usize,
    format: Format,
) -> Result<String, CliError> {
    let mut rows = Vec::new();
    for &n in ladder {
        let opts = CertificateOptions { n, delta, budget, ..CertificateOptions::default() };
        match visibility_certificate(ifs, a, &opts) {
            Ok(c) => rows.push(json!({
                "n": n,
                "status": "ok",
                "r": c.claim.r.to_string(),
                "prefix": c.prefix.to_string(),
                "words": c.words.iter().map(Word::to_string).collect::<Vec<_>>(),
                "theta_prime": c.theta_prime,
                "mass": c.mass.to_string(),
                "mass_floor": c.mass_floor.to_string(),
                "inequality_holds": c.mass >= c.mass_floor,
                "interval_length": c.interval.length(),
                "ratio": c.ratio,
                "c1": c.c1,
                "c2": c.c2,
                "predicted_halfwidth": c.predicted_halfwidth,
            })),
            Err(e @ (Error::NotFound(_) | Error::ViewpointTooClose { .. } | Error::Budget { .. })) => {
                rows.push(json!({ "n": n, "status": "not-found", "reason": e.to_string() }))
            }
            Err(e) => return Err(e.into()),
        }
    }
    match format {
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                if r["status"] == "ok" {
                    let words: Vec<&str> = r["words"].as_array().unwrap().iter().filter_map(Value::as_str).collect();
                    writeln!(
                        s,
                        "N={} r={} prefix={} words={} M={} floor={} holds={} |I|={:.6e} ratio={:.6} c1={:.6} c2={:.6}",
                        r["n"],
                        r["r"].as_str().unwrap(),
                        r["prefix"].as_str().unwrap(),
                        words.join(","),
                        r["mass"].as_str().unwrap(),
                        r["mass_floor"].as_str().unwrap(),
                        r["inequality_holds"],
                        r["interval_length"].as_f64().unwrap(),
                        r["ratio"].as_f64().unwrap(),
                        r["c1"].as_f64().unwrap(),
                        r["c2"].as_f64().unwrap(),
                    )
                    .unwrap();
                } else {
                    writeln!(s, "N={} not-found: {}", r["n"], r["reason"].as_str().unwrap()).unwrap();
                }
            }
            Ok(s)
        }
        Format::Json => Ok(pretty(json!({ "viewpoint": a, "delta": delta, "rows": rows }))),
        f => Err(unsupported(f, "certificate")),
    }
}

pub fn cmd_overlap(
    ifs: &Ifs,
    theta: f64,
    branches: (usize, usize),
    ladder: &RhoLadder,
    format: Format,
) -> Result<String, CliError> {
    let (i, j) = branches;
    let m = ifs.len();
    if i == 0 || j == 0 || i > m || j > m {
        return Err(CliError::Config(format!("branches must lie in 1..={m}")));
    }
    let mut rows = Vec::new();
    for (_, rho) in ladder.rungs() {
        let b = overlap_upper_bound(ifs, theta, (i - 1) as u8, (j - 1) as u8, &rho)?;
        rows.push((rho, b));
    }
    match format {
        Format::Csv => {
            let mut s = format!("{}\nrho,cylinders_i,cylinders_j,bound\n", crate::csv::VERSION_LINE);
            for (rho, b) in &rows {
                writeln!(s, "{rho},{},{},{}", b.cylinders_i, b.cylinders_j, b.bound).unwrap();
            }
            Ok(s)
        }
        Format::Json => Ok(pretty(json!({
            "theta": theta,
            "branches": [i, j],
            "rows": rows.iter().map(|(rho, b)| json!({
                "rho": rho.to_string(),
                "bound": b.bound,
                "exact": b.exact.as_ref().map(ToString::to_string),
            })).collect::<Vec<_>>(),
        }))),
        f => Err(unsupported(f, "overlap")),
    }
}

pub fn cmd_render(ifs: &Ifs, depth: usize, a: Option<Point>, format: Format) -> Result<String, CliError> {
    match format {
        Format::Svg => Ok(crate::render::render_svg(ifs, depth, a)?),
        f => Err(unsupported(f, "render")),
    }
}

pub fn cmd_dimension(ifs: &Ifs, tol: f64, format: Format) -> Result<String, CliError> {
    let s = similarity_dimension(ifs, tol)?;
    let d = ifs.diameter();
    match format {
        Format::Text => Ok(format!(
            "similarity dimension {s}\nratio sum {}\ndiameter in [{}, {}]\n",
            ifs.ratio_sum(),
            d.lower,
            d.upper
        )),
        Format::Json => Ok(pretty(json!({
            "dimension": s,
            "ratio_sum": ifs.ratio_sum().to_string(),
            "one_set": ifs.is_one_set(),
            "diameter_lower": d.lower,
            "diameter_upper": d.upper,
        }))),
        f => Err(unsupported(f, "dimension")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::parse_ladder;

    #[test]
    fn classify_report() {
        let s = cmd_classify(&Ifs::four_corner(), Format::Text).unwrap();
        assert_eq!(s, "case A, K=0, finite, |S|=1\n");
    }

    #[test]
    fn certificate_rows() {
        let s = cmd_certificate(&Ifs::four_corner(), [-1.0, -1.0], &[2, 4], 0.1, 1 << 20, Format::Text).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("N=2 r=1/4 prefix= words=1,4 M=1/2"));
        assert!(lines.iter().all(|l| l.contains("holds=true")));
    }

    #[test]
    fn overlap_csv() {
        let s =
            cmd_overlap(&Ifs::four_corner(), 0.0, (1, 3), &parse_ladder("4^-n:1..2").unwrap(), Format::Csv).unwrap();
        assert!(s.lines().nth(2).unwrap().ends_with(",0.25"));
        assert!(
            cmd_overlap(&Ifs::four_corner(), 0.0, (0, 3), &parse_ladder("4^-n:1..2").unwrap(), Format::Csv).is_err()
        );
    }

    #[test]
    fn wrong_format() {
        let e = cmd_render(&Ifs::four_corner(), 1, None, Format::Csv).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }
}
