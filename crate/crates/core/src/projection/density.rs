//! Two-sided bounds on `ν_a` of circular intervals and the resulting density
//! ratios.

use std::f64::consts::PI;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::ifs::{Ifs, Rational};
use crate::projection::cover::{circular_distance, radial_cover};

/// A closed arc `center ± halfwidth` on the circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularInterval {
    pub center: f64,
    pub halfwidth: f64,
}

impl CircularInterval {
    pub fn new(center: f64, halfwidth: f64) -> Self {
        CircularInterval { center, halfwidth }
    }

    pub fn length(&self) -> f64 {
        2.0 * self.halfwidth
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureBounds {
    pub lower: Rational,
    pub upper: Rational,
    /// Set when the bounds fell back to `(0, 1)`.
    pub degraded: bool,
}

impl MeasureBounds {
    fn degraded() -> Self {
        MeasureBounds { lower: Rational::zero(), upper: Rational::one(), degraded: true }
    }
}

/// `lower` sums masses of arcs inside `interval`, `upper` masses of arcs
/// meeting it.
///
/// Intervals of length `π` or more are refused unless `allow_wide`, in which
/// case the bounds degrade to `(0, 1)`. A viewpoint inside some cylinder disc
/// also degrades.
pub fn radial_measure_bounds(
    ifs: &Ifs,
    a: Point,
    interval: CircularInterval,
    rho: &Rational,
    allow_wide: bool,
) -> Result<MeasureBounds> {
    if interval.length() >= PI {
        if allow_wide {
            return Ok(MeasureBounds::degraded());
        }
        return Err(Error::precondition(format!("interval of length {} is not shorter than pi", interval.length())));
    }
    let cover = match radial_cover(ifs, a, rho) {
        Ok(c) => c,
        Err(Error::ViewpointTooClose { .. }) => return Ok(MeasureBounds::degraded()),
        Err(e) => return Err(e),
    };
    let mut lower = Rational::zero();
    let mut upper = Rational::zero();
    for it in &cover.items {
        let d = circular_distance(it.center, interval.center);
        if d + it.halfwidth <= interval.halfwidth {
            lower += &it.mass;
        }
        if d <= it.halfwidth + interval.halfwidth {
            upper += &it.mass;
        }
    }
    Ok(MeasureBounds { lower, upper, degraded: false })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityRow {
    pub r: f64,
    pub rho: Rational,
    pub mass_lower: Rational,
    pub mass_upper: Rational,
    pub ratio_lower: f64,
    pub ratio_upper: f64,
    pub degraded: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityEstimate {
    pub viewpoint: Point,
    pub theta_prime: f64,
    pub rows: Vec<DensityRow>,
}

/// Rows of `ν_a([θ′ − r, θ′ + r]) / 2r` bounds. Each radius is paired with the
/// cut in `rho_schedule`, or with `ρ = min(r, 1)` when no schedule is given.
pub fn upper_density_estimate(
    ifs: &Ifs,
    a: Point,
    theta_prime: f64,
    radii: &[f64],
    rho_schedule: Option<&[Rational]>,
) -> Result<DensityEstimate> {
    if radii.iter().any(|&r| r.is_nan() || r <= 0.0) {
        return Err(Error::precondition("radii must be positive"));
    }
    if radii.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::precondition("radii must be strictly decreasing"));
    }
    if let Some(s) = rho_schedule {
        if s.len() != radii.len() {
            return Err(Error::precondition("cut schedule length differs from the radii"));
        }
    }
    let mut rows = Vec::with_capacity(radii.len());
    for (k, &r) in radii.iter().enumerate() {
        let rho = match rho_schedule {
            Some(s) => s[k].clone(),
            None => Rational::from_float(r.min(1.0))
                .ok_or_else(|| Error::precondition(format!("radius {r} is not finite")))?,
        };
        let b = radial_measure_bounds(ifs, a, CircularInterval::new(theta_prime, r), &rho, true)?;
        let to_f = crate::ifs::rational_to_f64;
        rows.push(DensityRow {
            r,
            ratio_lower: to_f(&b.lower) / (2.0 * r),
            ratio_upper: to_f(&b.upper) / (2.0 * r),
            rho,
            mass_lower: b.lower,
            mass_upper: b.upper,
            degraded: b.degraded,
        });
    }
    Ok(DensityEstimate { viewpoint: a, theta_prime, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::rational;
    use std::f64::consts::FRAC_PI_4;

    const A: Point = [-1.0, -1.0];

    #[test]
    fn interval_around_everything() {
        let ifs = Ifs::four_corner();
        let b = radial_measure_bounds(&ifs, A, CircularInterval::new(FRAC_PI_4, 1.2), &rational(1, 16), false).unwrap();
        assert_eq!((b.lower, b.upper), (rational(1, 1), rational(1, 1)));
    }

    #[test]
    fn interval_away_from_set() {
        let ifs = Ifs::four_corner();
        let b = radial_measure_bounds(&ifs, A, CircularInterval::new(PI + FRAC_PI_4, 0.5), &rational(1, 16), false)
            .unwrap();
        assert_eq!((b.lower, b.upper), (rational(0, 1), rational(0, 1)));
    }

    #[test]
    fn corner_direction_has_mass() {
        let ifs = Ifs::four_corner();
        let b =
            radial_measure_bounds(&ifs, A, CircularInterval::new(FRAC_PI_4, 0.05), &rational(1, 64), false).unwrap();
        assert!(b.lower > rational(0, 1));
        assert!(b.lower <= b.upper);
    }

    #[test]
    fn wide_interval_needs_override() {
        let ifs = Ifs::four_corner();
        let wide = CircularInterval::new(0.0, 2.0);
        assert!(radial_measure_bounds(&ifs, A, wide, &rational(1, 4), false).is_err());
        assert!(radial_measure_bounds(&ifs, A, wide, &rational(1, 4), true).unwrap().degraded);
    }

    #[test]
    fn density_rows() {
        let ifs = Ifs::four_corner();
        let est = upper_density_estimate(&ifs, A, FRAC_PI_4, &[PI / 2.0], None).unwrap();
        assert!((est.rows[0].ratio_upper - 1.0 / PI).abs() < 1e-15);

        let radii: Vec<f64> = (3..=8).map(|k| 2f64.powi(-k)).collect();
        let est = upper_density_estimate(&ifs, A, FRAC_PI_4, &radii, None).unwrap();
        assert_eq!(est.rows.len(), 6);
        assert!(est.rows.iter().all(|r| r.mass_lower <= r.mass_upper));

        let away = upper_density_estimate(&ifs, A, PI + FRAC_PI_4, &radii, None).unwrap();
        assert!(away.rows.iter().all(|r| r.ratio_upper == 0.0));
        assert!(upper_density_estimate(&ifs, A, 0.0, &[0.1, 0.2], None).is_err());
    }
}
