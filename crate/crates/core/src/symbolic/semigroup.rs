//! The semigroup generated by the orthogonal parts `𝒪ᵢ`, its breadth-first
//! closure, and the case analysis deciding whether it is finite or contains
//! an irrational rotation.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ifs::{ortho_of, Ifs, Orientation, OrthoPart};
use crate::word::Word;

/// Element budget used by [`classify`].
pub const DEFAULT_CLOSURE_BUDGET: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoElement {
    pub ortho: OrthoPart,
    /// Shortest, then lexicographically least, nonempty word `w` with `𝒪_w` equal
    /// to this element.
    pub representative: Word,
}

/// Result of a breadth-first closure, possibly cut short by its budget.
#[derive(Debug, Clone)]
pub struct Closure {
    pub elements: Vec<OrthoElement>,
    pub complete: bool,
    index: HashMap<OrthoPart, usize>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, ortho: &OrthoPart) -> Option<&OrthoElement> {
        self.index.get(ortho).map(|&i| &self.elements[i])
    }

    pub fn contains(&self, ortho: &OrthoPart) -> bool {
        self.index.contains_key(ortho)
    }

    /// Representative of `ortho⁻¹`.
    pub fn inverse_of(&self, ortho: &OrthoPart) -> Option<&Word> {
        self.get(&ortho.inverse()).map(|e| &e.representative)
    }

    pub fn identity(&self) -> Option<&OrthoElement> {
        self.get(&OrthoPart::identity())
    }
}

/// Breadth-first closure of `{𝒪ᵢ}` under composition.
///
/// Elements are discovered in shortest-then-lexicographic order of their
/// representatives; at most `budget` elements are kept.
pub fn semigroup_closure(ifs: &Ifs, budget: usize) -> Result<Closure> {
    let m = ifs.len();
    if budget < m {
        return Err(Error::precondition(format!("closure budget {budget} is below the alphabet size {m}")));
    }
    let gens: Vec<OrthoPart> = ifs.maps().iter().map(|s| s.ortho()).collect();
    let mut elements: Vec<OrthoElement> = Vec::new();
    let mut index: HashMap<OrthoPart, usize> = HashMap::new();
    let mut complete = true;

    for (i, g) in gens.iter().enumerate() {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(OrthoElement { ortho: g.clone(), representative: Word::single(i as u8) });
        }
    }
    let mut head = 0;
    'bfs: while head < elements.len() {
        for (i, g) in gens.iter().enumerate() {
            let next = elements[head].ortho.then(g);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= budget {
                complete = false;
                break 'bfs;
            }
            let mut rep = elements[head].representative.clone();
            rep.push(i as u8);
            index.insert(next.clone(), elements.len());
            elements.push(OrthoElement { ortho: next, representative: rep });
        }
        head += 1;
    }
    Ok(Closure { elements, complete, index })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemigroupCase {
    /// Every angle is a rational multiple of π.
    A,
    /// Some irrational-angle map is a rotation.
    B,
    /// All irrational-angle maps are reflections and two of them differ by an
    /// irrational angle.
    C1,
    /// Irrational reflections differing by rational angles, plus a
    /// rational-angle reflection.
    C2a,
    /// Irrational reflections differing by rational angles, every
    /// rational-angle map a rotation.
    C2b,
    /// Every map is an irrational reflection, pairwise differing by rational
    /// angles.
    C2c,
}

impl SemigroupCase {
    pub fn is_finite(self) -> bool {
        matches!(self, SemigroupCase::A | SemigroupCase::C2b | SemigroupCase::C2c)
    }
}

impl fmt::Display for SemigroupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SemigroupCase::A => "A",
            SemigroupCase::B => "B",
            SemigroupCase::C1 => "C1",
            SemigroupCase::C2a => "C2a",
            SemigroupCase::C2b => "C2b",
            SemigroupCase::C2c => "C2c",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct SemigroupClassification {
    pub case: SemigroupCase,
    /// Number of maps whose angle is not a rational multiple of π.
    pub k: usize,
    pub finite: bool,
    /// The full group, present iff `finite`.
    pub closure: Option<Closure>,
    /// A word whose orthogonal part is an irrational rotation, present iff
    /// the semigroup is infinite.
    pub witness: Option<Word>,
}

pub fn classify(ifs: &Ifs) -> Result<SemigroupClassification> {
    classify_with_budget(ifs, DEFAULT_CLOSURE_BUDGET)
}

pub fn classify_with_budget(ifs: &Ifs, budget: usize) -> Result<SemigroupClassification> {
    let maps = ifs.maps();
    let m = maps.len();
    let irrational: Vec<usize> = (0..m).filter(|&i| !maps[i].angle.is_rational_multiple_of_pi()).collect();
    let k = irrational.len();
    let word = |s: &[usize]| Word::from_indices(&s.iter().map(|&i| i as u8).collect::<Vec<_>>());

    let (case, witness) = if k == 0 {
        (SemigroupCase::A, None)
    } else if let Some(&i) = irrational.iter().find(|&&i| maps[i].orientation == Orientation::Direct) {
        (SemigroupCase::B, Some(word(&[i])))
    } else {
        let split = irrational.iter().enumerate().find_map(|(a, &i)| {
            irrational[a + 1..]
                .iter()
                .find(|&&j| !(&maps[i].angle - &maps[j].angle).is_rational_multiple_of_pi())
                .map(|&j| (i, j))
        });
        if let Some((i, j)) = split {
            (SemigroupCase::C1, Some(word(&[i, j])))
        } else if k == m {
            (SemigroupCase::C2c, None)
        } else {
            let reflection = (0..m)
                .find(|&j| maps[j].angle.is_rational_multiple_of_pi() && maps[j].orientation == Orientation::Reflected);
            match reflection {
                Some(j) => (SemigroupCase::C2a, Some(word(&[irrational[0], j]))),
                None => (SemigroupCase::C2b, None),
            }
        }
    };

    if let Some(w) = &witness {
        let o = ortho_of(ifs, w);
        if o.orientation != Orientation::Direct || o.angle.is_rational_multiple_of_pi() {
            return Err(Error::InternalConsistency(format!(
                "witness {w} for case {case} is not an irrational rotation"
            )));
        }
    }
    let closure = if case.is_finite() {
        let c = semigroup_closure(ifs, budget)?;
        if !c.complete {
            return Err(Error::InternalConsistency(format!(
                "case {case} should give a finite group but closure exceeded {budget} elements; \
                 are the declared generators independent?"
            )));
        }
        Some(c)
    } else {
        None
    };
    Ok(SemigroupClassification { case, k, finite: case.is_finite(), closure, witness })
}

/// A word `v̂` with `𝒪_v̂ = 𝒪_v⁻¹`, taken from the closure's representatives.
pub fn inverse_word(ifs: &Ifs, v: &Word) -> Result<Word> {
    v.validate(ifs.len())?;
    let class = classify(ifs)?;
    let closure = class.closure.as_ref().ok_or(Error::InfiniteSemigroup)?;
    inverse_in(closure, &ortho_of(ifs, v))
}

pub(crate) fn inverse_in(closure: &Closure, ortho: &OrthoPart) -> Result<Word> {
    closure
        .inverse_of(ortho)
        .cloned()
        .ok_or_else(|| Error::InternalConsistency(format!("closure lacks the inverse of {ortho:?}")))
}
