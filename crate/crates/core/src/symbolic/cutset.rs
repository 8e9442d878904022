//! Enumeration of the cut-set `W(ρ) = {u : λ_u ≤ ρ < λ_{u'}}`.
//!
//! The walk is a depth-first traversal in lexicographic order. Subtrees below a
//! small frontier are visited in parallel and merged back in order, so results
//! never depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ifs::{rational_to_f64, FloatMap, Ifs, Rational};
use crate::word::Word;

/// A cut-set cylinder handed to walk visitors.
pub struct Cylinder<'a> {
    pub word: &'a [u8],
    pub ratio: &'a Rational,
    pub ratio_f: f64,
    /// The composed map `S_u` in floating point.
    pub map: &'a FloatMap,
}

struct Node {
    word: Vec<u8>,
    ratio: Rational,
    ratio_f: f64,
    map: FloatMap,
}

enum Task {
    Leaf(Node),
    Subtree(Node),
}

struct Walk<'a> {
    ifs: &'a Ifs,
    rho: &'a Rational,
    rho_f: f64,
    budget: usize,
    ratios_f: Vec<f64>,
    count: AtomicUsize,
    deepest: AtomicUsize,
}

impl Walk<'_> {
    /// `λ ≤ ρ`, deciding in floating point when the margin allows.
    fn at_most_rho(&self, ratio: &Rational, ratio_f: f64) -> bool {
        if ratio_f < self.rho_f * (1.0 - 1e-9) {
            true
        } else if ratio_f > self.rho_f * (1.0 + 1e-9) {
            false
        } else {
            ratio <= self.rho
        }
    }

    fn child(&self, node: &Node, i: u8) -> Node {
        let mut word = node.word.clone();
        word.push(i);
        Node {
            word,
            ratio: &node.ratio * &self.ifs.map(i).ratio,
            ratio_f: node.ratio_f * self.ratios_f[i as usize],
            map: node.map.compose(self.ifs.float_map(i)),
        }
    }

    fn note_depth(&self, depth: usize) -> Result<()> {
        self.deepest.fetch_max(depth, Ordering::Relaxed);
        if depth > self.ifs.limits().max_depth {
            return Err(self.budget_error());
        }
        Ok(())
    }

    fn budget_error(&self) -> Error {
        Error::Budget { limit: self.budget, depth_reached: self.deepest.load(Ordering::Relaxed) }
    }

    fn take_leaf(&self) -> Result<()> {
        if self.count.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(self.budget_error());
        }
        Ok(())
    }

    fn frontier(&self, node: Node, levels: usize, out: &mut Vec<Task>) -> Result<()> {
        if levels == 0 {
            out.push(Task::Subtree(node));
            return Ok(());
        }
        self.note_depth(node.word.len() + 1)?;
        for i in 0..self.ifs.len() as u8 {
            let c = self.child(&node, i);
            if self.at_most_rho(&c.ratio, c.ratio_f) {
                out.push(Task::Leaf(c));
            } else {
                self.frontier(c, levels - 1, out)?;
            }
        }
        Ok(())
    }

    fn descend<T, F>(&self, node: &Node, visit: &F, out: &mut Vec<T>) -> Result<()>
    where
        F: Fn(&Cylinder) -> T,
    {
        self.note_depth(node.word.len() + 1)?;
        for i in 0..self.ifs.len() as u8 {
            let c = self.child(node, i);
            if self.at_most_rho(&c.ratio, c.ratio_f) {
                self.take_leaf()?;
                out.push(visit(&Cylinder { word: &c.word, ratio: &c.ratio, ratio_f: c.ratio_f, map: &c.map }));
            } else {
                self.descend(&c, visit, out)?;
            }
        }
        Ok(())
    }
}

/// Visits every word of `W(ρ)` in lexicographic order and collects the
/// visitor's outputs in that order.
pub fn walk_cut_set<T, F>(ifs: &Ifs, rho: &Rational, budget: usize, visit: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Cylinder) -> T + Sync,
{
    if *rho <= Rational::zero() || *rho > Rational::one() {
        return Err(Error::precondition(format!("cut parameter {rho} must lie in (0, 1]")));
    }
    let walk = Walk {
        ifs,
        rho,
        rho_f: rational_to_f64(rho),
        budget,
        ratios_f: ifs.maps().iter().map(|s| rational_to_f64(&s.ratio)).collect(),
        count: AtomicUsize::new(0),
        deepest: AtomicUsize::new(0),
    };
    let root = Node { word: Vec::new(), ratio: Rational::one(), ratio_f: 1.0, map: FloatMap::IDENTITY };
    let mut levels = 1;
    while ifs.len().pow(levels as u32) < 64 && levels < 3 {
        levels += 1;
    }
    let mut tasks = Vec::new();
    walk.frontier(root, levels, &mut tasks)?;

    let parts = tasks
        .into_par_iter()
        .map(|task| {
            let mut out = Vec::new();
            match task {
                Task::Leaf(c) => {
                    walk.take_leaf()?;
                    out.push(visit(&Cylinder { word: &c.word, ratio: &c.ratio, ratio_f: c.ratio_f, map: &c.map }));
                }
                Task::Subtree(node) => walk.descend(&node, &visit, &mut out)?,
            }
            Ok(out)
        })
        .collect::<Result<Vec<Vec<T>>>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// The words of `W(ρ)`, lexicographically ordered.
pub fn cut_set(ifs: &Ifs, rho: &Rational) -> Result<Vec<Word>> {
    walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| Word::from_indices(c.word))
}

/// `(word, λ_u)` pairs of `W(ρ)`.
pub fn cut_set_with_ratios(ifs: &Ifs, rho: &Rational) -> Result<Vec<(Word, Rational)>> {
    walk_cut_set(ifs, rho, ifs.limits().max_cylinders, |c| (Word::from_indices(c.word), c.ratio.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::{ratio_of, rational, Limits, Similitude};

    fn uneven() -> Ifs {
        let z = || [rational(0, 1), rational(0, 1)];
        Ifs::new(vec![
            Similitude::homothety(rational(1, 2), z()).unwrap(),
            Similitude::homothety(rational(1, 4), [rational(1, 2), rational(0, 1)]).unwrap(),
            Similitude::homothety(rational(1, 4), [rational(0, 1), rational(1, 2)]).unwrap(),
        ])
        .unwrap()
    }

    fn strings(ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn four_corner_quarter() {
        let ifs = Ifs::four_corner();
        assert_eq!(strings(&cut_set(&ifs, &rational(1, 4)).unwrap()), ["1", "2", "3", "4"]);
        assert_eq!(strings(&cut_set(&ifs, &rational(3, 10)).unwrap()), ["1", "2", "3", "4"]);
        assert_eq!(strings(&cut_set(&ifs, &rational(1, 1)).unwrap()), ["1", "2", "3", "4"]);
    }

    #[test]
    fn uneven_quarter() {
        let ifs = uneven();
        let ws = cut_set(&ifs, &rational(1, 4)).unwrap();
        assert_eq!(strings(&ws), ["11", "12", "13", "2", "3"]);
        let total: Rational = ws.iter().map(|w| ratio_of(&ifs, w)).sum();
        assert_eq!(total, rational(1, 1));
    }

    #[test]
    fn boundary_ratio_is_exact() {
        // λ = 1/3 exactly equal to ρ must count as a leaf
        let z = || [rational(0, 1), rational(0, 1)];
        let ifs = Ifs::new(vec![
            Similitude::homothety(rational(1, 3), z()).unwrap(),
            Similitude::homothety(rational(2, 3), z()).unwrap(),
        ])
        .unwrap();
        let ws = cut_set_with_ratios(&ifs, &rational(1, 3)).unwrap();
        assert_eq!(ws[0].0.to_string(), "1");
        assert!(ws.iter().all(|(_, r)| *r <= rational(1, 3)));
    }

    #[test]
    fn budget_error_reports_depth() {
        let ifs = Ifs::four_corner().with_limits(Limits { max_cylinders: 100, max_depth: 64 });
        match cut_set(&ifs, &rational(1, 1024)) {
            Err(Error::Budget { limit: 100, depth_reached }) => assert!(depth_reached >= 2),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_rho() {
        let ifs = Ifs::four_corner();
        assert!(cut_set(&ifs, &rational(0, 1)).is_err());
        assert!(cut_set(&ifs, &rational(3, 2)).is_err());
    }

    #[test]
    fn parallel_and_serial_agree() {
        let ifs = uneven();
        let rho = rational(1, 500);
        let many = cut_set(&ifs, &rho).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = pool.install(|| cut_set(&ifs, &rho).unwrap());
        assert_eq!(many, one);
    }
}
