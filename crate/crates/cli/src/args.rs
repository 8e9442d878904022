//! Parsers for command-line values.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ssvis_core::{Point, Rational};

/// A real angle, or a multiple of π such as `pi/2`, `3pi/4`, `-pi`.
pub fn parse_theta(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let Some(idx) = t.find("pi") else {
        return t.parse::<f64>().map_err(|e| format!("bad angle `{s}`: {e}"));
    };
    let coef = match &t[..idx] {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.trim_end_matches('*').parse::<f64>().map_err(|e| format!("bad angle `{s}`: {e}"))?,
    };
    let den = match t[idx + 2..].strip_prefix('/') {
        None if t.len() == idx + 2 => 1.0,
        None => return Err(format!("bad angle `{s}`")),
        Some(d) => d.parse::<f64>().map_err(|e| format!("bad angle `{s}`: {e}"))?,
    };
    if den == 0.0 {
        return Err(format!("bad angle `{s}`: zero denominator"));
    }
    Ok(coef * PI / den)
}

pub fn parse_point(s: &str) -> Result<Point, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("expected `x,y`, got `{s}`"));
    }
    let x = parts[0].parse::<f64>().map_err(|e| format!("bad x in `{s}`: {e}"))?;
    let y = parts[1].parse::<f64>().map_err(|e| format!("bad y in `{s}`: {e}"))?;
    if !x.is_finite() || !y.is_finite() {
        return Err(format!("non-finite point `{s}`"));
    }
    Ok([x, y])
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|e| format!("bad fraction `{s}`: {e}"))?;
    let d: BigInt = d.trim().parse().map_err(|e| format!("bad fraction `{s}`: {e}"))?;
    if d.is_zero() {
        return Err(format!("bad fraction `{s}`: zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// `base^-n:n1..n2`, giving `ρ = base⁻ⁿ` for `n1 ≤ n ≤ n2`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoLadder {
    pub base: Rational,
    pub first: u32,
    pub last: u32,
}

impl RhoLadder {
    pub fn rungs(&self) -> Vec<(u32, Rational)> {
        (self.first..=self.last).map(|n| (n, num_traits::pow(self.base.recip(), n as usize))).collect()
    }
}

pub fn parse_ladder(s: &str) -> Result<RhoLadder, String> {
    let err = || format!("expected `base^-n:n1..n2`, got `{s}`");
    let (head, range) = s.split_once(':').ok_or_else(err)?;
    let base = head.strip_suffix("^-n").ok_or_else(err)?;
    let base = parse_rational(base)?;
    if base <= Rational::one() {
        return Err(format!("ladder base must exceed 1, got {base}"));
    }
    let (a, b) = range.split_once("..").ok_or_else(err)?;
    let first = a.trim().parse().map_err(|_| err())?;
    let last = b.trim().trim_start_matches('=').parse().map_err(|_| err())?;
    Ok(RhoLadder { base, first, last })
}
