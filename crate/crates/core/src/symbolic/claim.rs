//! Search for `N` distinct cut-set cylinders whose centers project close
//! together in a fixed direction.

use num_traits::One;

use crate::error::{Error, Result};
use crate::geometry::project;
use crate::ifs::{rational_to_f64, Ifs, Rational};
use crate::symbolic::cutset::walk_cut_set;
use crate::word::Word;

/// Rungs tried on the ladder `r = λ_min^k` before giving up.
pub const MAX_RUNGS: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct ClaimResult {
    pub r: Rational,
    /// Lexicographically sorted.
    pub words: Vec<Word>,
    /// `p_θ(c_u)` for each word, in the same order.
    pub projections: Vec<f64>,
    /// `max − min` of the projections.
    pub span: f64,
}

/// Walks `r = λ_min^k`, `k ≥ 1`, and returns the first rung at which `N`
/// centers `c_u = S_u(x_ref)`, `u ∈ W(r)`, project into a window of width
/// `r`. Among qualifying windows the smallest span wins, then the
/// lexicographically least word list.
pub fn find_close_projections(ifs: &Ifs, theta: f64, n: usize, budget: usize) -> Result<ClaimResult> {
    if n < 2 {
        return Err(Error::precondition(format!("need at least 2 words, got {n}")));
    }
    if !ifs.is_one_set() {
        return Err(Error::UnsupportedMeasure);
    }
    let x_ref = ifs.reference_point();
    let lambda = ifs.ratio_min().clone();
    let mut r = Rational::one();
    for _ in 0..MAX_RUNGS {
        r = &r * &lambda;
        let mut centers =
            match walk_cut_set(ifs, &r, budget, |c| (project(theta, c.map.apply(x_ref)), Word::from_indices(c.word))) {
                Ok(v) => v,
                Err(Error::Budget { limit, depth_reached }) => {
                    return Err(Error::NotFound(format!(
                    "no {n} close projections before the budget of {limit} cylinders ran out at depth {depth_reached}"
                )))
                }
                Err(e) => return Err(e),
            };
        if centers.len() < n {
            continue;
        }
        centers.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let width = rational_to_f64(&r);
        let mut best: Option<(f64, Vec<Word>, Vec<f64>)> = None;
        for win in centers.windows(n) {
            let span = win[n - 1].0 - win[0].0;
            if span > width {
                continue;
            }
            let mut pairs: Vec<(Word, f64)> = win.iter().map(|(p, w)| (w.clone(), *p)).collect();
            pairs.sort_by(|a, b| a.0.cmp(&b.0));
            let (words, projections): (Vec<Word>, Vec<f64>) = pairs.into_iter().unzip();
            let better = match &best {
                None => true,
                Some((s, ws, _)) => span < *s || (span == *s && words < *ws),
            };
            if better {
                best = Some((span, words, projections));
            }
        }
        if let Some((span, words, projections)) = best {
            return Ok(ClaimResult { r, words, projections, span });
        }
    }
    Err(Error::NotFound(format!("no {n} close projections within {MAX_RUNGS} ladder rungs")))
}
