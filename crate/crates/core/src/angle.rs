//! Exact angles: a rational multiple of π plus an integer combination of
//! declared irrational generators.
//!
//! Generators are assumed rationally independent of π and of each other, so
//! `q·π + Σ cₖ·αₖ` is a rational multiple of π exactly when every `cₖ` is zero.
//! Each generator carries a float approximation used only for geometry.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// A named irrational angle with its approximation in radians.
#[derive(Debug, Clone)]
pub struct Generator {
    label: Arc<str>,
    approx: f64,
}

impl Generator {
    pub fn new(label: impl Into<Arc<str>>, approx_radians: f64) -> Arc<Self> {
        Arc::new(Generator { label: label.into(), approx: approx_radians })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }
}

#[derive(Clone)]
pub struct AngleValue {
    /// Coefficient of π, kept in `[0, 2)`.
    rational: Ratio<i64>,
    /// Sorted by label, zero coefficients dropped.
    terms: Vec<(Arc<Generator>, i64)>,
}

fn reduce_mod_two(q: Ratio<i64>) -> Ratio<i64> {
    let two = Ratio::from_integer(2);
    let r = q % two;
    if r.is_negative() {
        r + two
    } else {
        r
    }
}

impl AngleValue {
    pub fn zero() -> Self {
        AngleValue { rational: Ratio::zero(), terms: Vec::new() }
    }

    /// The angle `num/den · π`.
    pub fn rational_pi(num: i64, den: i64) -> Self {
        AngleValue { rational: reduce_mod_two(Ratio::new(num, den)), terms: Vec::new() }
    }

    pub fn from_ratio_pi(q: Ratio<i64>) -> Self {
        AngleValue { rational: reduce_mod_two(q), terms: Vec::new() }
    }

    pub fn generator(g: Arc<Generator>) -> Self {
        AngleValue { rational: Ratio::zero(), terms: vec![(g, 1)] }
    }

    /// Coefficient of π in `[0, 2)`.
    pub fn rational_part(&self) -> Ratio<i64> {
        self.rational
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.terms.iter().map(|(g, c)| (g.as_ref(), *c))
    }

    pub fn generators(&self) -> impl Iterator<Item = &Arc<Generator>> {
        self.terms.iter().map(|(g, _)| g)
    }

    pub fn is_rational_multiple_of_pi(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.rational.is_zero()
    }

    pub fn coefficient_mass(&self) -> i64 {
        self.terms.iter().map(|(_, c)| c.abs()).sum()
    }

    /// Number of quarter turns when the angle is an exact multiple of π/2.
    pub fn quarter_turns(&self) -> Option<u8> {
        if !self.terms.is_empty() {
            return None;
        }
        let doubled = self.rational * Ratio::from_integer(2);
        doubled.is_integer().then(|| doubled.to_integer().mod_floor(&4) as u8)
    }

    /// Float value in `[0, 2π)`.
    pub fn approx(&self) -> f64 {
        let q = *self.rational.numer() as f64 / *self.rational.denom() as f64;
        let mut x = q * PI;
        for (g, c) in &self.terms {
            x += *c as f64 * g.approx;
        }
        let r = x.rem_euclid(TAU);
        // rem_euclid may round up to exactly TAU
        if r >= TAU {
            0.0
        } else {
            r
        }
    }

    /// `(cos, sin)` of the angle, exact for multiples of π/2.
    pub fn cos_sin(&self) -> (f64, f64) {
        match self.quarter_turns() {
            Some(0) => (1.0, 0.0),
            Some(1) => (0.0, 1.0),
            Some(2) => (-1.0, 0.0),
            Some(3) => (0.0, -1.0),
            _ => {
                let a = self.approx();
                (a.cos(), a.sin())
            }
        }
    }

    /// `k · self`.
    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return AngleValue::zero();
        }
        AngleValue {
            rational: reduce_mod_two(self.rational * Ratio::from_integer(k)),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }

    /// `sign · self` for an orientation sign of ±1.
    pub fn signed(&self, sign: i64) -> Self {
        if sign.is_one() {
            self.clone()
        } else {
            -self
        }
    }

    fn merge(&self, other: &AngleValue, sign: i64) -> AngleValue {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.label.cmp(&b.0.label),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (g, c) = &other.terms[j];
                    terms.push((g.clone(), sign * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1 + sign * other.terms[j].1;
                    if c != 0 {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let rational = if sign > 0 { self.rational + other.rational } else { self.rational - other.rational };
        AngleValue { rational: reduce_mod_two(rational), terms }
    }
}

impl Default for AngleValue {
    fn default() -> Self {
        AngleValue::zero()
    }
}

impl PartialEq for AngleValue {
    fn eq(&self, other: &Self) -> bool {
        self.rational == other.rational
            && self.terms.len() == other.terms.len()
            && self.terms.iter().zip(&other.terms).all(|((g, c), (h, d))| c == d && g.label == h.label)
    }
}

impl Eq for AngleValue {}

impl Hash for AngleValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rational.hash(state);
        for (g, c) in &self.terms {
            g.label.hash(state);
            c.hash(state);
        }
    }
}

impl Add for &AngleValue {
    type Output = AngleValue;

    fn add(self, rhs: &AngleValue) -> AngleValue {
        self.merge(rhs, 1)
    }
}

impl Sub for &AngleValue {
    type Output = AngleValue;

    fn sub(self, rhs: &AngleValue) -> AngleValue {
        self.merge(rhs, -1)
    }
}

impl Neg for &AngleValue {
    type Output = AngleValue;

    fn neg(self) -> AngleValue {
        AngleValue {
            rational: reduce_mod_two(-self.rational),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl fmt::Debug for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AngleValue({self})")
    }
}

impl fmt::Display for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rational.is_zero() && !self.terms.is_empty() {
            // omit the "0π" term
        } else if self.rational.is_integer() {
            write!(f, "{}π", self.rational.numer())?;
        } else {
            write!(f, "{}/{}π", self.rational.numer(), self.rational.denom())?;
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            let lead = k == 0 && self.rational.is_zero();
            match (*c < 0, lead) {
                (true, _) => f.write_str(if lead { "-" } else { " - " })?,
                (false, false) => f.write_str(" + ")?,
                (false, true) => {}
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            f.write_str(&g.label)?;
        }
        Ok(())
    }
}
