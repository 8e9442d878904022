//! Planar point utilities and rigorous diameter bounds for attractors.

use num_traits::One;

use crate::error::{Error, Result};
use crate::ifs::{level_images, rational_to_f64, sample_points, FloatMap, Ifs, Rational};

pub type Point = [f64; 2];

#[inline]
pub fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn dist(a: Point, b: Point) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// `p_θ(x) = x · (cos θ, sin θ)`.
#[inline]
pub fn project(theta: f64, x: Point) -> f64 {
    let (s, c) = theta.sin_cos();
    x[0] * c + x[1] * s
}

/// Direction of `x` seen from `a`, in `[0, 2π)`.
#[inline]
pub fn radial_angle(a: Point, x: Point) -> f64 {
    let t = (x[1] - a[1]).atan2(x[0] - a[0]).rem_euclid(std::f64::consts::TAU);
    if t >= std::f64::consts::TAU {
        0.0
    } else {
        t
    }
}

#[inline]
fn cross(o: Point, a: Point, b: Point) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Fixed point of `x ↦ Ax + t`, solving `(I − A)x = t`.
pub fn fixed_point(map: &FloatMap) -> Point {
    let a = 1.0 - map.lin[0][0];
    let b = -map.lin[0][1];
    let c = -map.lin[1][0];
    let d = 1.0 - map.lin[1][1];
    let det = a * d - b * c;
    [(d * map.t[0] - b * map.t[1]) / det, (a * map.t[1] - c * map.t[0]) / det]
}

/// Convex hull, counter-clockwise, without collinear vertices.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|p, q| p[0].total_cmp(&q[0]).then(p[1].total_cmp(&q[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Diameter of a point set given by its hull vertices.
pub fn hull_diameter(hull: &[Point]) -> f64 {
    let mut best = 0.0f64;
    for (i, &p) in hull.iter().enumerate() {
        for &q in &hull[i + 1..] {
            best = best.max(dist(p, q));
        }
    }
    best
}

pub fn diameter(points: &[Point]) -> f64 {
    hull_diameter(&convex_hull(points))
}

fn segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let ab = sub(b, a);
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / len2).clamp(0.0, 1.0);
    dist(p, [a[0] + t * ab[0], a[1] + t * ab[1]])
}

/// Distance from `p` to a convex polygon given counter-clockwise (0 inside).
pub fn distance_to_convex(p: Point, hull: &[Point]) -> f64 {
    match hull.len() {
        0 => f64::INFINITY,
        1 => dist(p, hull[0]),
        2 => segment_distance(p, hull[0], hull[1]),
        n => {
            let edges = (0..n).map(|i| (hull[i], hull[(i + 1) % n]));
            if edges.clone().all(|(a, b)| cross(a, b, p) >= 0.0) {
                return 0.0;
            }
            edges.map(|(a, b)| segment_distance(p, a, b)).fold(f64::INFINITY, f64::min)
        }
    }
}

/// Whether all points lie within `tol` of one line.
pub fn collinear(points: &[Point], tol: f64) -> bool {
    let Some(&p0) = points.first() else { return true };
    let Some(&p1) = points.iter().max_by(|a, b| dist(p0, **a).total_cmp(&dist(p0, **b))) else {
        return true;
    };
    let len = dist(p0, p1);
    if len < tol {
        return true;
    }
    points.iter().all(|&p| (cross(p0, p1, p) / len).abs() < tol)
}

/// `[d_n, d_n / (1 − 2λ_max^depth)]` where `d_n` is the diameter of the
/// level-`depth` samples `{S_u(x_ref)}`.
pub fn diameter_bracket(ifs: &Ifs, depth: u32) -> Result<(f64, f64)> {
    if depth == 0 {
        return Err(Error::precondition("bracket depth must be at least 1"));
    }
    let shrink: Rational = num_traits::pow(ifs.ratio_max().clone(), depth as usize);
    let slack = &shrink + &shrink;
    if slack >= Rational::one() {
        return Err(Error::DepthTooShallow { depth });
    }
    let d_n = diameter(&sample_points(ifs, depth as usize)?);
    Ok((d_n, d_n / (1.0 - rational_to_f64(&slack))))
}

/// Diameter bounds used for every cover radius.
///
/// `hull` is the convex hull of sample points of the attractor, and
/// `inflation` an `r` with `Sᵢ(hull ⊕ B_r) ⊂ hull ⊕ B_r` for every map, so the
/// attractor lies inside `hull ⊕ B_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiameterBounds {
    pub lower: f64,
    pub upper: f64,
    pub depth: usize,
    pub hull: Vec<Point>,
    pub inflation: f64,
}

impl DiameterBounds {
    /// Axis-aligned box `[min, max]` containing the attractor.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = [f64::INFINITY; 2];
        let mut hi = [f64::NEG_INFINITY; 2];
        for p in &self.hull {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let r = self.inflation;
        ([lo[0] - r, lo[1] - r], [hi[0] + r, hi[1] + r])
    }
}

const HULL_SAMPLE_CAP: usize = 1 << 15;

pub(crate) fn diameter_bounds(ifs: &Ifs) -> DiameterBounds {
    let m = ifs.len();
    let cap = HULL_SAMPLE_CAP.min(ifs.limits().max_cylinders).max(m);
    let mut depth = 0;
    while m.saturating_pow(depth as u32 + 2) <= cap {
        depth += 1;
    }
    let seeds: Vec<Point> = (0..m as u8).map(|i| fixed_point(ifs.float_map(i))).collect();
    let hull = convex_hull(&level_images(ifs, seeds, depth));
    let lower = hull_diameter(&hull);

    let mut inflation = 0.0f64;
    for (i, s) in ifs.maps().iter().enumerate() {
        let f = ifs.float_map(i as u8);
        let excess = hull.iter().map(|&v| distance_to_convex(f.apply(v), &hull)).fold(0.0f64, f64::max);
        inflation = inflation.max(excess / (1.0 - rational_to_f64(&s.ratio)));
    }
    let mut upper = lower + 2.0 * inflation;
    if depth >= 1 {
        if let Ok((_, bracket_upper)) = diameter_bracket(ifs, depth as u32) {
            upper = upper.min(bracket_upper);
        }
    }
    DiameterBounds { lower, upper, depth, hull, inflation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::AngleValue;
    use crate::ifs::{rational, Orientation, Similitude};

    #[test]
    fn hull_of_square_with_interior() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [0.5, 0.5], [1.0, 1.0], [0.0, 1.0], [0.5, 0.0]];
        let h = convex_hull(&pts);
        assert_eq!(h.len(), 4);
        assert!((hull_diameter(&h) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(distance_to_convex([0.5, 0.5], &h), 0.0);
        assert!((distance_to_convex([2.0, 0.5], &h) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fixed_point_of_rotation() {
        let s = Similitude::new(
            rational(1, 2),
            AngleValue::rational_pi(1, 2),
            Orientation::Direct,
            [rational(1, 1), rational(0, 1)],
        )
        .unwrap();
        let f = s.to_float();
        let p = fixed_point(&f);
        let q = f.apply(p);
        assert!(dist(p, q) < 1e-15);
    }

    #[test]
    fn four_corner_bracket_contains_sqrt2() {
        let ifs = Ifs::four_corner();
        let (lo, hi) = diameter_bracket(&ifs, 5).unwrap();
        let d = 2f64.sqrt();
        assert!(lo <= d && d <= hi, "{lo} {hi}");
        assert!(hi - lo < 0.01);
        assert!(diameter_bracket(&ifs, 1).is_ok());
    }

    #[test]
    fn bracket_depth_too_shallow() {
        let z = || [rational(0, 1), rational(0, 1)];
        let ifs = Ifs::new(vec![
            Similitude::homothety(rational(2, 3), z()).unwrap(),
            Similitude::homothety(rational(1, 3), [rational(1, 3), rational(0, 1)]).unwrap(),
        ])
        .unwrap();
        assert_eq!(diameter_bracket(&ifs, 1), Err(Error::DepthTooShallow { depth: 1 }));
        assert!(diameter_bracket(&ifs, 2).is_ok());
    }

    #[test]
    fn degenerate_single_point() {
        let p = || [rational(1, 3), rational(1, 5)];
        let ifs = Ifs::new(vec![
            Similitude::homothety(rational(1, 2), p()).unwrap(),
            Similitude::homothety(rational(1, 2), p()).unwrap(),
        ])
        .unwrap();
        for depth in 2..6 {
            assert_eq!(diameter_bracket(&ifs, depth).unwrap().0, 0.0);
        }
        assert_eq!(ifs.diameter().upper, 0.0);
    }

    #[test]
    fn four_corner_invariant_hull_is_exact() {
        let d = Ifs::four_corner().diameter().clone();
        assert_eq!(d.inflation, 0.0);
        assert_eq!(d.upper, 2f64.sqrt());
        assert_eq!(d.bounding_box(), ([0.0, 0.0], [1.0, 1.0]));
    }

    #[test]
    fn rotating_ifs_bounds_are_consistent() {
        let ifs = Ifs::new(vec![
            Similitude::new(
                rational(1, 2),
                AngleValue::rational_pi(1, 3),
                Orientation::Direct,
                [rational(0, 1), rational(0, 1)],
            )
            .unwrap(),
            Similitude::new(
                rational(1, 2),
                AngleValue::rational_pi(1, 1),
                Orientation::Reflected,
                [rational(1, 1), rational(1, 2)],
            )
            .unwrap(),
        ])
        .unwrap();
        let d = ifs.diameter();
        assert!(d.lower <= d.upper);
        let pts = sample_points(&ifs, 10).unwrap();
        assert!(diameter(&pts) <= d.upper + 1e-12);
        let (lo, hi) = diameter_bracket(&ifs, 8).unwrap();
        assert!(lo <= d.upper && d.lower <= hi);
    }
}
