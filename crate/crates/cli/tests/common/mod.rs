//! Brute-force reference computations for the four-corner set, written
//! without the library so they can cross-check it.
#![allow(dead_code)]

use std::f64::consts::TAU;

/// Corners of the four-corner maps, in symbol order.
pub const CORNERS: [[f64; 2]; 4] = [[0.0, 0.0], [0.75, 0.0], [0.0, 0.75], [0.75, 0.75]];
pub const DIAMETER: f64 = std::f64::consts::SQRT_2;
pub const BINS: usize = 1 << 16;

/// `S_u(0)` for a word of zero-based symbols.
pub fn center(word: &[u8]) -> [f64; 2] {
    let mut p = [0.0, 0.0];
    let mut scale = 1.0;
    for &s in word {
        p[0] += scale * CORNERS[s as usize][0];
        p[1] += scale * CORNERS[s as usize][1];
        scale *= 0.25;
    }
    p
}

/// All words of the given length, lexicographic.
pub fn words(depth: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..depth {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..4u8).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn points(depth: usize) -> Vec<[f64; 2]> {
    words(depth).iter().map(|w| center(w)).collect()
}

fn angle_from(a: [f64; 2], p: [f64; 2]) -> f64 {
    (p[1] - a[1]).atan2(p[0] - a[0]).rem_euclid(TAU)
}

fn bin_of(angle: f64) -> usize {
    ((angle / TAU * BINS as f64) as usize).min(BINS - 1)
}

/// Length of the circle bins hit by the directions from `a` to `pts`.
pub fn radial_point_raster(a: [f64; 2], pts: &[[f64; 2]]) -> f64 {
    let mut hit = vec![false; BINS];
    for &p in pts {
        hit[bin_of(angle_from(a, p))] = true;
    }
    hit.iter().filter(|&&h| h).count() as f64 * TAU / BINS as f64
}

/// Length of the circle bins touched by arcs `(center, halfwidth)`.
pub fn arc_raster(arcs: &[(f64, f64)]) -> f64 {
    let mut hit = vec![false; BINS];
    let w = TAU / BINS as f64;
    for &(c, h) in arcs {
        let start = (c - h).rem_euclid(TAU);
        let steps = ((2.0 * h) / w).ceil() as usize + 1;
        let first = bin_of(start);
        for k in 0..steps.min(BINS) {
            hit[(first + k) % BINS] = true;
        }
    }
    hit.iter().filter(|&&h| h).count() as f64 * w
}

fn project(theta: f64, p: [f64; 2]) -> f64 {
    theta.cos() * p[0] + theta.sin() * p[1]
}

/// Mass of depth-`depth` cylinders of branch `i` whose projected interval
/// touches a grid bin covered by a projected interval of branch `j`.
pub fn overlap_raster(theta: f64, i: u8, j: u8, depth: usize) -> f64 {
    let lambda = 0.25f64.powi(depth as i32);
    let half = lambda * DIAMETER;
    let intervals = |b: u8| -> Vec<(f64, f64)> {
        words(depth - 1)
            .into_iter()
            .map(|mut w| {
                w.insert(0, b);
                let c = project(theta, center(&w));
                (c - half, c + half)
            })
            .collect()
    };
    let ii = intervals(i);
    let jj = intervals(j);
    let lo = ii.iter().chain(&jj).map(|x| x.0).fold(f64::INFINITY, f64::min);
    let hi = ii.iter().chain(&jj).map(|x| x.1).fold(f64::NEG_INFINITY, f64::max);
    let w = (hi - lo) / BINS as f64;
    let bin = |x: f64| (((x - lo) / w) as usize).min(BINS - 1);
    let mut marked = vec![false; BINS];
    for &(a, b) in &jj {
        marked[bin(a)..=bin(b)].fill(true);
    }
    ii.iter().filter(|&&(a, b)| (bin(a)..=bin(b)).any(|k| marked[k])).count() as f64 * lambda
}

/// Largest circular gap of `{k·φ mod 2π : 0 ≤ k < n}`.
pub fn max_gap(phi: f64, n: usize) -> f64 {
    let mut pts: Vec<f64> = (0..n).map(|k| (k as f64 * phi).rem_euclid(TAU)).collect();
    pts.sort_by(f64::total_cmp);
    let mut g = pts[0] + TAU - pts[pts.len() - 1];
    for w in pts.windows(2) {
        g = g.max(w[1] - w[0]);
    }
    g
}

/// Union length of real intervals.
pub fn union_length(mut iv: Vec<(f64, f64)>) -> f64 {
    iv.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut total = 0.0;
    let mut cur: Option<(f64, f64)> = None;
    for (a, b) in iv {
        match cur {
            Some((s, e)) if a <= e => cur = Some((s, e.max(b))),
            Some((s, e)) => {
                total += e - s;
                cur = Some((a, b));
            }
            None => cur = Some((a, b)),
        }
    }
    if let Some((s, e)) = cur {
        total += e - s;
    }
    total
}
