//! Visibility certificates: a prefix `w` with small rotation followed by `N`
//! cylinders whose centers line up along one ray from the viewpoint, giving
//! mass `M` inside a short circular interval.

use std::f64::consts::{FRAC_PI_2, PI};

use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::geometry::{dist, distance_to_convex, radial_angle, Point};
use crate::ifs::{compose_float, ortho_of, ratio_of, rational_to_f64, Ifs, Orientation, OrthoPart, Rational};
use crate::projection::cover::{
    arc_halfwidth, radial_cover, radial_cover_lenient, smallest_enclosing_arc, ArcHalfwidth,
};
use crate::projection::density::CircularInterval;
use crate::symbolic::claim::{find_close_projections, ClaimResult};
use crate::symbolic::recurrence::{angle_in_window, recurrence_word};
use crate::word::Word;

/// Passes of the direction/word refinement loop.
pub const MAX_REFINEMENTS: usize = 8;

/// Cut-set size at which the distance bound stops refining.
const DISTANCE_REFINE_CAP: f64 = 16384.0;

#[derive(Debug, Clone, PartialEq)]
pub struct CertificateOptions {
    pub n: usize,
    pub delta: f64,
    pub budget: usize,
    /// Word the constructed sequence starts with before the recurrence block.
    pub zoom: Word,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions { n: 2, delta: 0.1, budget: 1 << 20, zoom: Word::empty() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VisibilityCertificate {
    pub viewpoint: Point,
    pub n: usize,
    /// `P_a(x)`.
    pub theta_prime: f64,
    /// `θ′ + π/2` reduced to `[0, π)`.
    pub theta: f64,
    pub prefix: Word,
    pub prefix_ortho: OrthoPart,
    pub lambda_w: Rational,
    pub claim: ClaimResult,
    /// `v⁽ʲ⁾ = w·u⁽ʲ⁾`.
    pub words: Vec<Word>,
    /// `(center, halfwidth)` arc of each `v⁽ʲ⁾`.
    pub arcs: Vec<(f64, f64)>,
    pub interval: CircularInterval,
    /// `M = λ_w·Σλ_{u⁽ʲ⁾}`.
    pub mass: Rational,
    /// `λ_w·N·λ_min·r`, never above `mass`.
    pub mass_floor: Rational,
    pub ratio: f64,
    pub c1: f64,
    pub c2: f64,
    /// `c₂·λ_w·r`.
    pub predicted_halfwidth: f64,
    pub refinements: usize,
    pub converged: bool,
}

/// A positive lower bound on `dist(a, Λ)` from the invariant hull and from
/// radial covers at successively finer cuts.
pub fn distance_lower_bound(ifs: &Ifs, a: Point, budget: usize) -> Result<f64> {
    let bounds = ifs.diameter();
    let mut best = distance_to_convex(a, &bounds.hull) - bounds.inflation;
    let lambda = ifs.ratio_min().clone();
    let lambda_f = rational_to_f64(&lambda);
    let cap = DISTANCE_REFINE_CAP.min(budget as f64);
    let mut rho = Rational::one();
    loop {
        let next = &rho * &lambda;
        if 1.0 / (rational_to_f64(&next) * lambda_f) > cap {
            break;
        }
        rho = next;
        best = best.max(radial_cover_lenient(ifs, a, &rho)?.c1_lower);
    }
    if best > 0.0 {
        Ok(best)
    } else {
        // name a cylinder whose disc still contains a
        match radial_cover(ifs, a, &rho) {
            Err(e @ Error::ViewpointTooClose { .. }) => Err(e),
            _ => Err(Error::ViewpointTooClose { word: Word::empty() }),
        }
    }
}

pub fn visibility_certificate(ifs: &Ifs, a: Point, opts: &CertificateOptions) -> Result<VisibilityCertificate> {
    let n = opts.n;
    if n < 2 {
        return Err(Error::precondition(format!("need at least 2 words, got {n}")));
    }
    if !ifs.is_one_set() {
        return Err(Error::UnsupportedMeasure);
    }
    opts.zoom.validate(ifs.len())?;
    let c1 = distance_lower_bound(ifs, a, opts.budget)?;
    let x_ref = ifs.reference_point();
    let zoom_state = ortho_of(ifs, &opts.zoom);

    let mut x = compose_float(ifs, &opts.zoom).apply(x_ref);
    let mut previous: Option<Vec<Word>> = None;
    let mut refinements = 0;
    let (theta_prime, theta, claim, prefix, converged) = loop {
        refinements += 1;
        let theta_prime = radial_angle(a, x);
        let theta = (theta_prime + FRAC_PI_2).rem_euclid(PI);
        let claim = find_close_projections(ifs, theta, n, opts.budget)?;
        let rec = recurrence_word(ifs, &claim.words[0], opts.delta)?;
        let offset = rec.scheduled_offset(&zoom_state).ok_or_else(|| {
            Error::InternalConsistency(format!("recurrence block has no slot for prefix {}", opts.zoom))
        })?;
        let prefix = opts.zoom.concat(&Word::from_indices(&rec.omega[..offset]));
        x = compose_float(ifs, &opts.zoom.concat(&rec.omega)).apply(x_ref);
        let settled = previous.as_ref() == Some(&claim.words);
        if settled || refinements == MAX_REFINEMENTS {
            break (theta_prime, theta, claim, prefix, settled);
        }
        previous = Some(claim.words.clone());
    };

    let prefix_ortho = ortho_of(ifs, &prefix);
    if prefix_ortho.orientation != Orientation::Direct || !angle_in_window(&prefix_ortho.angle, opts.delta) {
        return Err(Error::InternalConsistency(format!("prefix {prefix} is not a small rotation")));
    }
    let lambda_w = ratio_of(ifs, &prefix);
    let d = ifs.diameter().upper;
    let words: Vec<Word> = claim.words.iter().map(|u| prefix.concat(u)).collect();
    let mut arcs = Vec::with_capacity(words.len());
    for v in &words {
        let c = compose_float(ifs, v).apply(x_ref);
        let s = rational_to_f64(&ratio_of(ifs, v)) * d;
        match arc_halfwidth(dist(a, c), s) {
            ArcHalfwidth::Arc(h) => arcs.push((radial_angle(a, c), h)),
            ArcHalfwidth::FullCircle => return Err(Error::ViewpointTooClose { word: v.clone() }),
        }
    }
    let (center, halfwidth) = smallest_enclosing_arc(&arcs).expect("at least two arcs");
    let interval = CircularInterval::new(center, halfwidth);

    let sum_u: Rational = claim.words.iter().map(|u| ratio_of(ifs, u)).sum();
    let mass = &lambda_w * &sum_u;
    let mass_floor = &lambda_w * Rational::from_integer(n.into()) * ifs.ratio_min() * &claim.r;
    if mass < mass_floor {
        return Err(Error::InternalConsistency(format!("mass {mass} is below its floor {mass_floor}")));
    }
    let c2 = PI * (3.0 * d + 1.0) / (2.0 * c1);
    let lw = lambda_w.to_f64().unwrap_or(0.0);
    Ok(VisibilityCertificate {
        viewpoint: a,
        n,
        theta_prime,
        theta,
        prefix,
        prefix_ortho,
        claim: claim.clone(),
        words,
        arcs,
        interval,
        ratio: rational_to_f64(&mass) / interval.length(),
        mass,
        mass_floor,
        c1,
        c2,
        predicted_halfwidth: c2 * lw * rational_to_f64(&claim.r),
        lambda_w,
        refinements,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::rational;

    fn opts(n: usize) -> CertificateOptions {
        CertificateOptions { n, ..CertificateOptions::default() }
    }

    #[test]
    fn four_corner_pair() {
        let cert = visibility_certificate(&Ifs::four_corner(), [-1.0, -1.0], &opts(2)).unwrap();
        assert!(cert.prefix.is_empty());
        let words: Vec<String> = cert.words.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["1", "4"]);
        assert_eq!(cert.mass, rational(1, 2));
        assert!(cert.mass >= cert.mass_floor);
        assert!((cert.ratio - 0.989).abs() < 0.01, "{}", cert.ratio);
        assert!(cert.converged);
    }

    #[test]
    fn four_corner_ladder_grows() {
        let ifs = Ifs::four_corner();
        let a = [-1.0, -1.0];
        let c4 = visibility_certificate(&ifs, a, &opts(4)).unwrap();
        assert_eq!(c4.claim.r, rational(1, 16));
        assert_eq!(c4.mass, rational(1, 4));
        let c2 = visibility_certificate(&ifs, a, &opts(2)).unwrap();
        assert!(c4.ratio >= c2.ratio);
        let expected = PI * (3.0 * ifs.diameter().upper + 1.0) / (2.0 * c4.c1);
        assert!((c4.c2 - expected).abs() < 1e-12);
    }

    #[test]
    fn rejects_single_word_and_close_viewpoint() {
        let ifs = Ifs::four_corner();
        assert!(visibility_certificate(&ifs, [-1.0, -1.0], &opts(1)).is_err());
        assert!(matches!(visibility_certificate(&ifs, [0.0, 0.0], &opts(2)), Err(Error::ViewpointTooClose { .. })));
    }

    #[test]
    fn distance_bound_is_below_true_distance() {
        let ifs = Ifs::four_corner();
        let c1 = distance_lower_bound(&ifs, [-1.0, -1.0], 1 << 20).unwrap();
        assert!(c1 > 0.0 && c1 <= 2f64.sqrt());
    }
}
