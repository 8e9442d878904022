//! Planar similitudes, iterated function systems and composition along words.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::angle::{AngleValue, Generator};
use crate::error::{Error, Result};
use crate::geometry::{self, DiameterBounds, Point};
use crate::word::{Word, MAX_ALPHABET};

pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// The sign ε of an orthogonal map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// ε = +1, a rotation.
    Direct,
    /// ε = −1, a reflection.
    Reflected,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Direct => 1,
            Orientation::Reflected => -1,
        }
    }

    pub fn then(self, other: Orientation) -> Orientation {
        if self == other {
            Orientation::Direct
        } else {
            Orientation::Reflected
        }
    }

    pub fn from_reflection(reflection: bool) -> Self {
        if reflection {
            Orientation::Reflected
        } else {
            Orientation::Direct
        }
    }
}

/// The orthogonal part 𝒪 of a similitude, encoded by its angle and orientation.
///
/// For ε = +1 this is the rotation by φ; for ε = −1 the reflection about the
/// line at angle φ/2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthoPart {
    pub angle: AngleValue,
    pub orientation: Orientation,
}

impl OrthoPart {
    pub fn identity() -> Self {
        OrthoPart { angle: AngleValue::zero(), orientation: Orientation::Direct }
    }

    pub fn new(angle: AngleValue, orientation: Orientation) -> Self {
        OrthoPart { angle, orientation }
    }

    /// `self ∘ other`: φ = φ₁ + ε₁φ₂, ε = ε₁ε₂.
    pub fn then(&self, other: &OrthoPart) -> OrthoPart {
        OrthoPart {
            angle: &self.angle + &other.angle.signed(self.orientation.sign()),
            orientation: self.orientation.then(other.orientation),
        }
    }

    pub fn inverse(&self) -> OrthoPart {
        match self.orientation {
            Orientation::Direct => OrthoPart { angle: -&self.angle, orientation: Orientation::Direct },
            Orientation::Reflected => self.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.orientation == Orientation::Direct && self.angle.is_zero()
    }

    /// Row-major matrix `[[cos, −ε sin], [sin, ε cos]]`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        let (c, s) = self.angle.cos_sin();
        let e = self.orientation.sign() as f64;
        [[c, -e * s], [s, e * c]]
    }

    /// Exact integer matrix when the angle is a multiple of π/2.
    fn exact_matrix(&self) -> Option<[[i64; 2]; 2]> {
        let (c, s) = match self.angle.quarter_turns()? {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        let e = self.orientation.sign();
        Some([[c, -e * s], [s, e * c]])
    }
}

/// One contracting similitude `x ↦ λ𝒪x + b` with exact data.
#[derive(Debug, Clone, PartialEq)]
pub struct Similitude {
    pub ratio: Rational,
    pub angle: AngleValue,
    pub orientation: Orientation,
    pub translation: [Rational; 2],
}

impl Similitude {
    pub fn new(
        ratio: Rational,
        angle: AngleValue,
        orientation: Orientation,
        translation: [Rational; 2],
    ) -> Result<Self> {
        if ratio <= Rational::zero() || ratio >= Rational::one() {
            return Err(Error::InvalidIfs(format!("ratio {ratio} is not in (0, 1)")));
        }
        Ok(Similitude { ratio, angle, orientation, translation })
    }

    /// A rotation-free homothety `x ↦ λx + b`.
    pub fn homothety(ratio: Rational, translation: [Rational; 2]) -> Result<Self> {
        Similitude::new(ratio, AngleValue::zero(), Orientation::Direct, translation)
    }

    pub fn ortho(&self) -> OrthoPart {
        OrthoPart::new(self.angle.clone(), self.orientation)
    }

    pub fn is_rotation_free(&self) -> bool {
        self.orientation == Orientation::Direct && self.angle.is_zero()
    }

    pub fn to_affine(&self) -> AffineMap {
        AffineMap {
            ratio: self.ratio.clone(),
            ortho: self.ortho(),
            translation: [rational_to_f64(&self.translation[0]), rational_to_f64(&self.translation[1])],
            exact_translation: Some(self.translation.clone()),
        }
    }

    pub fn to_float(&self) -> FloatMap {
        let l = rational_to_f64(&self.ratio);
        let o = self.ortho().matrix();
        FloatMap {
            lin: [[l * o[0][0], l * o[0][1]], [l * o[1][0], l * o[1][1]]],
            t: [rational_to_f64(&self.translation[0]), rational_to_f64(&self.translation[1])],
        }
    }
}

/// A composed similitude `S_u(x) = λ_u 𝒪_u x + b_u`.
///
/// The translation is carried in floating point; an exact copy is kept while
/// every orthogonal part along the word is a multiple of π/2.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    pub ratio: Rational,
    pub ortho: OrthoPart,
    pub translation: Point,
    pub exact_translation: Option<[Rational; 2]>,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            ratio: Rational::one(),
            ortho: OrthoPart::identity(),
            translation: [0.0, 0.0],
            exact_translation: Some([Rational::zero(), Rational::zero()]),
        }
    }

    pub fn angle(&self) -> &AngleValue {
        &self.ortho.angle
    }

    pub fn orientation(&self) -> Orientation {
        self.ortho.orientation
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let exact_translation = match (&self.exact_translation, &other.exact_translation) {
            (Some(b1), Some(b2)) => self.ortho.exact_matrix().map(|o| {
                let rot = |row: [i64; 2]| &b2[0] * BigInt::from(row[0]) + &b2[1] * BigInt::from(row[1]);
                [&b1[0] + &self.ratio * rot(o[0]), &b1[1] + &self.ratio * rot(o[1])]
            }),
            _ => None,
        };
        let translation = match &exact_translation {
            Some(b) => [rational_to_f64(&b[0]), rational_to_f64(&b[1])],
            None => {
                let l = rational_to_f64(&self.ratio);
                let o = self.ortho.matrix();
                let [x, y] = other.translation;
                [
                    self.translation[0] + l * (o[0][0] * x + o[0][1] * y),
                    self.translation[1] + l * (o[1][0] * x + o[1][1] * y),
                ]
            }
        };
        AffineMap {
            ratio: &self.ratio * &other.ratio,
            ortho: self.ortho.then(&other.ortho),
            translation,
            exact_translation,
        }
    }

    pub fn to_float(&self) -> FloatMap {
        let l = rational_to_f64(&self.ratio);
        let o = self.ortho.matrix();
        FloatMap { lin: [[l * o[0][0], l * o[0][1]], [l * o[1][0], l * o[1][1]]], t: self.translation }
    }
}

/// `λ𝒪x + b` evaluated in floating point.
pub fn apply(map: &AffineMap, x: Point) -> Point {
    map.to_float().apply(x)
}

/// A similitude as a plain float matrix, for enumeration hot loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatMap {
    pub lin: [[f64; 2]; 2],
    pub t: Point,
}

impl FloatMap {
    pub const IDENTITY: FloatMap = FloatMap { lin: [[1.0, 0.0], [0.0, 1.0]], t: [0.0, 0.0] };

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        [
            self.lin[0][0] * x[0] + self.lin[0][1] * x[1] + self.t[0],
            self.lin[1][0] * x[0] + self.lin[1][1] * x[1] + self.t[1],
        ]
    }

    /// `self ∘ other`.
    #[inline]
    pub fn compose(&self, other: &FloatMap) -> FloatMap {
        let a = &self.lin;
        let b = &other.lin;
        FloatMap {
            lin: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
            t: self.apply(other.t),
        }
    }
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_cylinders: usize,
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_cylinders: 1 << 22, max_depth: 64 }
    }
}

/// A planar IFS of `m ≥ 2` contracting similitudes.
#[derive(Debug)]
pub struct Ifs {
    maps: Vec<Similitude>,
    float_maps: Vec<FloatMap>,
    open_set_condition: bool,
    not_on_line: bool,
    limits: Limits,
    diameter: OnceLock<DiameterBounds>,
}

impl Clone for Ifs {
    fn clone(&self) -> Self {
        Ifs {
            maps: self.maps.clone(),
            float_maps: self.float_maps.clone(),
            open_set_condition: self.open_set_condition,
            not_on_line: self.not_on_line,
            limits: self.limits,
            diameter: self.diameter.clone(),
        }
    }
}

impl Ifs {
    pub fn new(maps: Vec<Similitude>) -> Result<Self> {
        if maps.len() < 2 {
            return Err(Error::InvalidIfs(format!("need at least 2 maps, got {}", maps.len())));
        }
        if maps.len() > MAX_ALPHABET {
            return Err(Error::InvalidIfs(format!("at most {MAX_ALPHABET} maps are supported")));
        }
        let mut seen: Vec<&Arc<Generator>> = Vec::new();
        for g in maps.iter().flat_map(|s| s.angle.generators()) {
            match seen.iter().find(|h| h.label() == g.label()) {
                Some(h) if h.approx() != g.approx() => {
                    return Err(Error::InvalidIfs(format!(
                        "generator {:?} declared with conflicting approximations {} and {}",
                        g.label(),
                        h.approx(),
                        g.approx()
                    )));
                }
                Some(_) => {}
                None => seen.push(g),
            }
        }
        let float_maps = maps.iter().map(Similitude::to_float).collect();
        Ok(Ifs {
            maps,
            float_maps,
            open_set_condition: false,
            not_on_line: false,
            limits: Limits::default(),
            diameter: OnceLock::new(),
        })
    }

    pub fn with_assertions(mut self, open_set_condition: bool, not_on_line: bool) -> Self {
        self.open_set_condition = open_set_condition;
        self.not_on_line = not_on_line;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// The four-corner Cantor set: four homotheties of ratio 1/4 at the
    /// corners of the unit square.
    pub fn four_corner() -> Self {
        let q = |n| rational(n, 4);
        let corners = [(0, 0), (3, 0), (0, 3), (3, 3)];
        let maps = corners
            .iter()
            .map(|&(x, y)| Similitude::homothety(q(1), [q(x), q(y)]).expect("ratio 1/4 is valid"))
            .collect();
        Ifs::new(maps).expect("four maps").with_assertions(true, true)
    }

    pub fn maps(&self) -> &[Similitude] {
        &self.maps
    }

    pub fn map(&self, index: u8) -> &Similitude {
        &self.maps[index as usize]
    }

    pub fn float_map(&self, index: u8) -> &FloatMap {
        &self.float_maps[index as usize]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn open_set_condition(&self) -> bool {
        self.open_set_condition
    }

    pub fn not_on_line(&self) -> bool {
        self.not_on_line
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn ratio_sum(&self) -> Rational {
        self.maps.iter().map(|s| &s.ratio).sum()
    }

    /// `Σλᵢ = 1` exactly.
    pub fn is_one_set(&self) -> bool {
        self.ratio_sum().is_one()
    }

    pub fn ratio_max(&self) -> &Rational {
        self.maps.iter().map(|s| &s.ratio).max().expect("m >= 2")
    }

    pub fn ratio_min(&self) -> &Rational {
        self.maps.iter().map(|s| &s.ratio).min().expect("m >= 2")
    }

    pub fn is_rotation_free(&self) -> bool {
        self.maps.iter().all(Similitude::is_rotation_free)
    }

    /// The fixed point of map 1, `(I − λ₁𝒪₁)⁻¹ b₁`.
    pub fn reference_point(&self) -> Point {
        geometry::fixed_point(&self.float_maps[0])
    }

    /// Cached bounds on the diameter of the attractor.
    pub fn diameter(&self) -> &DiameterBounds {
        self.diameter.get_or_init(|| geometry::diameter_bounds(self))
    }

    /// Whether the depth-2 sample points are collinear within 1e-9, a finite
    /// sanity check on the `not_on_line` assertion.
    pub fn appears_collinear(&self) -> bool {
        let depth = if self.len().pow(2) <= self.limits.max_cylinders { 2 } else { 1 };
        let pts = sample_points(self, depth).unwrap_or_default();
        geometry::collinear(&pts, 1e-9)
    }
}

/// `S_u` composed along `u`; the empty word gives the identity.
pub fn compose(ifs: &Ifs, u: &Word) -> Result<AffineMap> {
    u.validate(ifs.len())?;
    Ok(u.iter().fold(AffineMap::identity(), |acc, &i| acc.compose(&ifs.map(i).to_affine())))
}

/// Float-only composition of `S_u`.
pub fn compose_float(ifs: &Ifs, u: &[u8]) -> FloatMap {
    u.iter().fold(FloatMap::IDENTITY, |acc, &i| acc.compose(ifs.float_map(i)))
}

/// Exact orthogonal part `𝒪_u`.
pub fn ortho_of(ifs: &Ifs, u: &[u8]) -> OrthoPart {
    u.iter().fold(OrthoPart::identity(), |acc, &i| acc.then(&ifs.map(i).ortho()))
}

/// Exact ratio `λ_u`.
pub fn ratio_of(ifs: &Ifs, u: &[u8]) -> Rational {
    u.iter().fold(Rational::one(), |acc, &i| acc * &ifs.map(i).ratio)
}

/// `ν(Λ_u) = λ_u`, valid for 1-sets.
pub fn natural_measure(ifs: &Ifs, u: &Word) -> Result<Rational> {
    if !ifs.is_one_set() {
        return Err(Error::UnsupportedMeasure);
    }
    u.validate(ifs.len())?;
    Ok(ratio_of(ifs, u))
}

/// The `s` with `Σλᵢˢ = 1`, by bisection on `[0, 2]`.
pub fn similarity_dimension(ifs: &Ifs, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::precondition("tolerance must be positive"));
    }
    if ifs.is_one_set() {
        return Ok(1.0);
    }
    let ratios: Vec<f64> = ifs.maps.iter().map(|s| rational_to_f64(&s.ratio)).collect();
    let f = |s: f64| ratios.iter().map(|l| l.powf(s)).sum::<f64>() - 1.0;
    let sq: Rational = ifs.maps.iter().map(|s| &s.ratio * &s.ratio).sum();
    if sq > Rational::one() {
        return Err(Error::DimensionOutOfRange);
    }
    let (mut lo, mut hi) = (0.0f64, 2.0f64);
    let mut mid = 1.0;
    // f is strictly decreasing with f(lo) > 0 >= f(hi)
    while hi - lo > f64::EPSILON {
        mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v.abs() < tol {
            break;
        }
        if v > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(mid)
}

/// `{S_u(x_ref) : |u| = depth}` in lexicographic word order.
pub fn sample_points(ifs: &Ifs, depth: usize) -> Result<Vec<Point>> {
    let count = (ifs.len() as f64).powi(depth as i32);
    if count > ifs.limits.max_cylinders as f64 {
        return Err(Error::Budget { limit: ifs.limits.max_cylinders, depth_reached: 0 });
    }
    Ok(level_images(ifs, vec![ifs.reference_point()], depth))
}

/// `⋃_{|u| = depth} S_u(seeds)`, word-major then seed order.
pub(crate) fn level_images(ifs: &Ifs, seeds: Vec<Point>, depth: usize) -> Vec<Point> {
    let mut pts = seeds;
    for _ in 0..depth {
        let mut next = Vec::with_capacity(pts.len() * ifs.len());
        for f in &ifs.float_maps {
            next.extend(pts.iter().map(|&p| f.apply(p)));
        }
        pts = next;
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Generator;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn quarter_rotation() -> Similitude {
        Similitude::new(
            rational(1, 2),
            AngleValue::rational_pi(1, 2),
            Orientation::Direct,
            [rational(1, 1), rational(0, 1)],
        )
        .unwrap()
    }

    fn single_map_ifs(s: Similitude) -> Ifs {
        // a second copy keeps m >= 2; only symbol 1 is used
        Ifs::new(vec![s.clone(), s]).unwrap()
    }

    #[test]
    fn four_corner_compose_12() {
        let ifs = Ifs::four_corner();
        let m = compose(&ifs, &w("12")).unwrap();
        assert_eq!(m.ratio, rational(1, 16));
        assert!(m.angle().is_zero());
        assert_eq!(m.orientation(), Orientation::Direct);
        assert_eq!(m.exact_translation, Some([rational(3, 16), rational(0, 1)]));
        assert_eq!(m.translation, [3.0 / 16.0, 0.0]);
    }

    #[test]
    fn empty_word_is_identity() {
        let ifs = Ifs::four_corner();
        assert_eq!(compose(&ifs, &Word::empty()).unwrap(), AffineMap::identity());
    }

    #[test]
    fn quarter_rotation_squared() {
        let ifs = single_map_ifs(quarter_rotation());
        let m = compose(&ifs, &w("11")).unwrap();
        assert_eq!(m.ratio, rational(1, 4));
        assert_eq!(*m.angle(), AngleValue::rational_pi(1, 1));
        assert_eq!(m.orientation(), Orientation::Direct);
        assert_eq!(m.exact_translation, Some([rational(1, 1), rational(1, 2)]));
    }

    #[test]
    fn reflection_is_an_involution() {
        let refl = Similitude::new(
            rational(1, 3),
            AngleValue::rational_pi(1, 3),
            Orientation::Reflected,
            [rational(0, 1), rational(0, 1)],
        )
        .unwrap();
        let ifs = single_map_ifs(refl);
        let m = compose(&ifs, &w("11")).unwrap();
        assert!(m.angle().is_zero());
        assert_eq!(m.orientation(), Orientation::Direct);
    }

    #[test]
    fn out_of_range_symbol() {
        let ifs = Ifs::four_corner();
        assert_eq!(compose(&ifs, &w("15")), Err(Error::InvalidWord { symbol: 5, alphabet: 4 }));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(apply(&AffineMap::identity(), [3.0, 4.0]), [3.0, 4.0]);
        let ifs = Ifs::four_corner();
        assert_eq!(apply(&compose(&ifs, &w("2")).unwrap(), [0.0, 0.0]), [0.75, 0.0]);
        let rot = Similitude::new(
            rational(1, 2),
            AngleValue::rational_pi(1, 2),
            Orientation::Direct,
            [rational(0, 1), rational(0, 1)],
        )
        .unwrap();
        assert_eq!(apply(&rot.to_affine(), [1.0, 0.0]), [0.0, 0.5]);
    }

    #[test]
    fn irrational_angles_lose_exact_translation() {
        let a = Generator::new("a", 1.0);
        let s = Similitude::new(
            rational(1, 2),
            AngleValue::generator(a),
            Orientation::Direct,
            [rational(1, 1), rational(0, 1)],
        )
        .unwrap();
        let ifs = single_map_ifs(s);
        let m = compose(&ifs, &w("11")).unwrap();
        assert!(m.exact_translation.is_none());
        let expected = [1.0 + 0.5 * 1f64.cos(), 0.5 * 1f64.sin()];
        assert!((m.translation[0] - expected[0]).abs() < 1e-15);
        assert!((m.translation[1] - expected[1]).abs() < 1e-15);
    }

    #[test]
    fn natural_measure_examples() {
        let ifs = Ifs::four_corner();
        assert_eq!(natural_measure(&ifs, &w("12")).unwrap(), rational(1, 16));
        assert_eq!(natural_measure(&ifs, &Word::empty()).unwrap(), rational(1, 1));

        let z = [rational(0, 1), rational(0, 1)];
        let uneven = Ifs::new(vec![
            Similitude::homothety(rational(1, 2), z.clone()).unwrap(),
            Similitude::homothety(rational(1, 4), z.clone()).unwrap(),
            Similitude::homothety(rational(1, 4), z.clone()).unwrap(),
        ])
        .unwrap();
        assert_eq!(natural_measure(&uneven, &w("13")).unwrap(), rational(1, 8));

        let cantor = Ifs::new(vec![
            Similitude::homothety(rational(1, 3), z.clone()).unwrap(),
            Similitude::homothety(rational(1, 3), z).unwrap(),
        ])
        .unwrap();
        assert_eq!(natural_measure(&cantor, &w("1")), Err(Error::UnsupportedMeasure));
    }

    #[test]
    fn dimension_examples() {
        let z = || [rational(0, 1), rational(0, 1)];
        assert_eq!(similarity_dimension(&Ifs::four_corner(), 1e-12).unwrap(), 1.0);
        let cantor = Ifs::new(vec![
            Similitude::homothety(rational(1, 3), z()).unwrap(),
            Similitude::homothety(rational(1, 3), [rational(2, 3), rational(0, 1)]).unwrap(),
        ])
        .unwrap();
        let s = similarity_dimension(&cantor, 1e-12).unwrap();
        assert!((s - 2f64.ln() / 3f64.ln()).abs() < 1e-9, "{s}");
        let halves = Ifs::new(vec![
            Similitude::homothety(rational(1, 2), z()).unwrap(),
            Similitude::homothety(rational(1, 2), z()).unwrap(),
        ])
        .unwrap();
        assert_eq!(similarity_dimension(&halves, 1e-12).unwrap(), 1.0);

        let fat = Ifs::new((0..5).map(|_| Similitude::homothety(rational(1, 2), z()).unwrap()).collect()).unwrap();
        assert_eq!(similarity_dimension(&fat, 1e-12), Err(Error::DimensionOutOfRange));
    }

    #[test]
    fn sample_point_examples() {
        let ifs = Ifs::four_corner();
        assert_eq!(sample_points(&ifs, 0).unwrap(), vec![[0.0, 0.0]]);
        assert_eq!(sample_points(&ifs, 1).unwrap(), vec![[0.0, 0.0], [0.75, 0.0], [0.0, 0.75], [0.75, 0.75]]);
        assert_eq!(sample_points(&ifs, 3).unwrap().len(), 64);
        let tight = Ifs::four_corner().with_limits(Limits { max_cylinders: 100, max_depth: 8 });
        assert!(matches!(sample_points(&tight, 4), Err(Error::Budget { .. })));
    }

    #[test]
    fn ifs_validation() {
        let z = || [rational(0, 1), rational(0, 1)];
        assert!(Similitude::homothety(rational(5, 4), z()).is_err());
        assert!(Similitude::homothety(rational(0, 1), z()).is_err());
        assert!(Ifs::new(vec![Similitude::homothety(rational(1, 2), z()).unwrap()]).is_err());
        let a =
            Similitude::new(rational(1, 2), AngleValue::generator(Generator::new("a", 1.0)), Orientation::Direct, z())
                .unwrap();
        let b =
            Similitude::new(rational(1, 2), AngleValue::generator(Generator::new("a", 1.5)), Orientation::Direct, z())
                .unwrap();
        assert!(matches!(Ifs::new(vec![a, b]), Err(Error::InvalidIfs(_))));
    }

    #[test]
    fn collinearity_flag() {
        assert!(!Ifs::four_corner().appears_collinear());
        let line = Ifs::new(vec![
            Similitude::homothety(rational(1, 2), [rational(0, 1), rational(0, 1)]).unwrap(),
            Similitude::homothety(rational(1, 2), [rational(1, 2), rational(1, 2)]).unwrap(),
        ])
        .unwrap();
        assert!(line.appears_collinear());
    }
}
