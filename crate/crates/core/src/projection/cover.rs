//! Interval covers of orthogonal projections and arc covers of radial
//! projections, one piece per cut-set cylinder.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::{dist, project, radial_angle, Point};
use crate::ifs::{Ifs, Rational};
use crate::symbolic::cutset::walk_cut_set;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq)]
pub struct IntervalItem {
    pub word: Word,
    pub center: f64,
    pub halfwidth: f64,
    pub mass: Rational,
}

/// The intervals `p_θ(c_u) ± λ_u·d_upper` over `u ∈ W(ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalCover {
    pub theta: f64,
    pub rho: Rational,
    pub items: Vec<IntervalItem>,
}

impl IntervalCover {
    pub fn intervals(&self) -> Vec<(f64, f64)> {
        self.items.iter().map(|it| (it.center - it.halfwidth, it.center + it.halfwidth)).collect()
    }

    pub fn total_mass(&self) -> Rational {
        self.items.iter().map(|it| &it.mass).sum()
    }
}

fn require_one_set(ifs: &Ifs) -> Result<()> {
    if ifs.is_one_set() {
        Ok(())
    } else {
        Err(Error::UnsupportedMeasure)
    }
}

pub fn ortho_cover(ifs: &Ifs, theta: f64, rho: &Rational) -> Result<IntervalCover> {
    require_one_set(ifs)?;
    let d = ifs.diameter().upper;
    let x_ref = ifs.reference_point();
    let items = walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| IntervalItem {
        word: Word::from_indices(c.word),
        center: project(theta, c.map.apply(x_ref)),
        halfwidth: c.ratio_f * d,
        mass: c.ratio.clone(),
    })?;
    Ok(IntervalCover { theta, rho: rho.clone(), items })
}

/// `(cylinder count, union length)` of the orthogonal cover without keeping
/// the items.
pub fn ortho_cover_length(ifs: &Ifs, theta: f64, rho: &Rational) -> Result<(usize, f64)> {
    require_one_set(ifs)?;
    let d = ifs.diameter().upper;
    let x_ref = ifs.reference_point();
    let mut iv = walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| {
        let p = project(theta, c.map.apply(x_ref));
        let h = c.ratio_f * d;
        (p - h, p + h)
    })?;
    let n = iv.len();
    Ok((n, interval_union_length(&mut iv)))
}

/// Merges intervals in place order and returns the disjoint union, sorted.
pub fn merge_intervals(intervals: &mut [(f64, f64)]) -> Vec<(f64, f64)> {
    intervals.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let mut out: Vec<(f64, f64)> = Vec::new();
    for &(lo, hi) in intervals.iter() {
        match out.last_mut() {
            Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

pub fn interval_union_length(intervals: &mut [(f64, f64)]) -> f64 {
    merge_intervals(intervals).iter().map(|(lo, hi)| hi - lo).sum()
}

pub fn union_length(cover: &IntervalCover) -> f64 {
    interval_union_length(&mut cover.intervals())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArcHalfwidth {
    Arc(f64),
    /// The disc of radius `s` contains the viewpoint.
    FullCircle,
}

/// Half the angle a disc of radius `s` at distance `dist` subtends.
pub fn arc_halfwidth(dist: f64, s: f64) -> ArcHalfwidth {
    if s >= dist {
        ArcHalfwidth::FullCircle
    } else {
        ArcHalfwidth::Arc((s / dist).asin())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcItem {
    pub word: Word,
    /// `P_a(c_u)` in `[0, 2π)`.
    pub center: f64,
    /// `π` when the cylinder disc contains the viewpoint.
    pub halfwidth: f64,
    pub mass: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArcCover {
    pub viewpoint: Point,
    pub rho: Rational,
    pub items: Vec<ArcItem>,
    pub full_circle: bool,
    /// `min_u (|a − c_u| − λ_u·d_upper)`, a lower bound on `dist(a, Λ)` when
    /// positive.
    pub c1_lower: f64,
}

impl ArcCover {
    pub fn union_length(&self) -> f64 {
        if self.full_circle {
            return TAU;
        }
        let arcs: Vec<(f64, f64)> = self.items.iter().map(|it| (it.center, it.halfwidth)).collect();
        arc_union_length(&arcs)
    }

    pub fn total_mass(&self) -> Rational {
        self.items.iter().map(|it| &it.mass).sum()
    }
}

struct RawArc {
    word: Vec<u8>,
    center: f64,
    halfwidth: Option<f64>,
    ratio: Rational,
    clearance: f64,
}

fn raw_arcs(ifs: &Ifs, a: Point, rho: &Rational) -> Result<Vec<RawArc>> {
    require_one_set(ifs)?;
    let d = ifs.diameter().upper;
    let x_ref = ifs.reference_point();
    walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| {
        let x = c.map.apply(x_ref);
        let s = c.ratio_f * d;
        let r = dist(a, x);
        RawArc {
            word: c.word.to_vec(),
            center: radial_angle(a, x),
            halfwidth: match arc_halfwidth(r, s) {
                ArcHalfwidth::Arc(h) => Some(h),
                ArcHalfwidth::FullCircle => None,
            },
            ratio: c.ratio.clone(),
            clearance: r - s,
        }
    })
}

fn assemble(a: Point, rho: &Rational, raw: Vec<RawArc>) -> ArcCover {
    let c1_lower = raw.iter().map(|r| r.clearance).fold(f64::INFINITY, f64::min);
    let full_circle = raw.iter().any(|r| r.halfwidth.is_none());
    let items = raw
        .into_iter()
        .map(|r| ArcItem {
            word: Word::from_indices(&r.word),
            center: r.center,
            halfwidth: r.halfwidth.unwrap_or(PI),
            mass: r.ratio,
        })
        .collect();
    ArcCover { viewpoint: a, rho: rho.clone(), items, full_circle, c1_lower }
}

/// Arc cover of `P_a(Λ)`; fails if some cylinder disc contains `a`.
pub fn radial_cover(ifs: &Ifs, a: Point, rho: &Rational) -> Result<ArcCover> {
    let raw = raw_arcs(ifs, a, rho)?;
    if let Some(bad) = raw.iter().find(|r| r.halfwidth.is_none()) {
        return Err(Error::ViewpointTooClose { word: Word::from_indices(&bad.word) });
    }
    Ok(assemble(a, rho, raw))
}

/// As [`radial_cover`], but flags `full_circle` instead of failing.
pub fn radial_cover_lenient(ifs: &Ifs, a: Point, rho: &Rational) -> Result<ArcCover> {
    Ok(assemble(a, rho, raw_arcs(ifs, a, rho)?))
}

/// Start of an arc, normalized to `[0, 2π)`.
fn arc_start(center: f64, halfwidth: f64) -> f64 {
    let s = (center - halfwidth).rem_euclid(TAU);
    if s >= TAU {
        0.0
    } else {
        s
    }
}

/// Length of the union of arcs `center ± halfwidth` on the circle.
pub fn arc_union_length(arcs: &[(f64, f64)]) -> f64 {
    let mut pieces = Vec::with_capacity(arcs.len() + 1);
    for &(c, h) in arcs {
        if h >= PI {
            return TAU;
        }
        let s = arc_start(c, h);
        let e = s + 2.0 * h;
        if e > TAU {
            pieces.push((s, TAU));
            pieces.push((0.0, e - TAU));
        } else {
            pieces.push((s, e));
        }
    }
    interval_union_length(&mut pieces).min(TAU)
}

/// Counter-clockwise angular distance from `from` to `to`, in `[0, 2π)`.
pub fn ccw_distance(from: f64, to: f64) -> f64 {
    let d = (to - from).rem_euclid(TAU);
    if d >= TAU {
        0.0
    } else {
        d
    }
}

/// Unsigned circular distance, in `[0, π]`.
pub fn circular_distance(x: f64, y: f64) -> f64 {
    let d = ccw_distance(x, y);
    d.min(TAU - d)
}

/// Smallest arc `(center, halfwidth)` containing every given arc.
pub fn smallest_enclosing_arc(arcs: &[(f64, f64)]) -> Option<(f64, f64)> {
    let mut best: Option<(f64, f64)> = None;
    for &(ck, hk) in arcs {
        let start = arc_start(ck, hk);
        let len = arcs.iter().map(|&(c, h)| ccw_distance(start, arc_start(c, h)) + 2.0 * h).fold(0.0f64, f64::max);
        if best.is_none_or(|(_, l)| len < l) {
            best = Some((start, len));
        }
    }
    best.map(|(start, len)| ((start + len / 2.0).rem_euclid(TAU), len / 2.0))
}
