//! Projections of rotation-free systems and bounds on the overlap of two
//! projected first-level pieces.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::project;
use crate::ifs::{rational_to_f64, similarity_dimension, Ifs, Rational};
use crate::projection::cover::merge_intervals;
use crate::symbolic::cutset::walk_cut_set;

/// A similitude `t ↦ ratio·t + translation` of the line.
#[derive(Debug, Clone, PartialEq)]
pub struct LineMap {
    pub ratio: Rational,
    pub translation: f64,
}

/// The line system whose attractor is `p_θ(Λ)`.
pub fn projected_ifs(ifs: &Ifs, theta: f64) -> Result<Vec<LineMap>> {
    if !ifs.is_rotation_free() {
        return Err(Error::UnsupportedForm);
    }
    Ok(ifs
        .maps()
        .iter()
        .map(|s| LineMap {
            ratio: s.ratio.clone(),
            translation: project(theta, [rational_to_f64(&s.translation[0]), rational_to_f64(&s.translation[1])]),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapBound {
    pub bound: f64,
    /// The same bound in exact arithmetic, for 1-sets.
    pub exact: Option<Rational>,
    pub cylinders_i: usize,
    pub cylinders_j: usize,
}

/// Upper bound on `ν_θ(p_θΛᵢ ∩ p_θΛⱼ)`: the mass of the cut-set cylinders of
/// branch `i` whose projected interval meets the cover of branch `j`.
///
/// `i` and `j` are zero-based. Masses are `λ_u` for 1-sets and `λ_u^s`
/// otherwise, with `s ≤ 1` the similarity dimension.
pub fn overlap_upper_bound(ifs: &Ifs, theta: f64, i: u8, j: u8, rho: &Rational) -> Result<OverlapBound> {
    let m = ifs.len();
    if i == j || i as usize >= m || j as usize >= m {
        return Err(Error::precondition(format!("branches {i}, {j} must be distinct symbols below {m}")));
    }
    projected_ifs(ifs, theta)?;
    let one_set = ifs.is_one_set();
    let s = if one_set { 1.0 } else { similarity_dimension(ifs, 1e-12)? };
    if s > 1.0 {
        return Err(Error::precondition(format!("similarity dimension {s} exceeds 1")));
    }
    let d = ifs.diameter().upper;
    let x_ref = ifs.reference_point();
    let items = walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| {
        let branch = c.word[0];
        if branch != i && branch != j {
            return None;
        }
        let p = project(theta, c.map.apply(x_ref));
        let h = c.ratio_f * d;
        Some((branch, p - h, p + h, c.ratio.clone(), c.ratio_f))
    })?;
    let mut cover_j: Vec<(f64, f64)> = items.iter().flatten().filter(|it| it.0 == j).map(|it| (it.1, it.2)).collect();
    let cylinders_j = cover_j.len();
    let union_j = merge_intervals(&mut cover_j);

    let meets = |lo: f64, hi: f64| {
        // first merged interval ending at or after lo
        let k = union_j.partition_point(|iv| iv.1 < lo);
        k < union_j.len() && union_j[k].0 <= hi
    };
    let mut exact = Rational::from_integer(0.into());
    let mut bound = 0.0;
    let mut cylinders_i = 0;
    for (_, lo, hi, ratio, ratio_f) in items.iter().flatten().filter(|it| it.0 == i) {
        cylinders_i += 1;
        if meets(*lo, *hi) {
            if one_set {
                exact += ratio;
            } else {
                bound += ratio_f.powf(s);
            }
        }
    }
    if one_set {
        bound = exact.to_f64().unwrap_or(f64::NAN);
    }
    Ok(OverlapBound { bound, exact: one_set.then_some(exact), cylinders_i, cylinders_j })
}
