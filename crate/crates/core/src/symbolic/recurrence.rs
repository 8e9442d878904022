//! Recurrence words: finite blocks `ω` such that any sequence containing `ω`
//! has a position `n` where `σⁿi` starts with a target word `u`, `ε_{i|n} = +1`
//! and `φ_{i|n} ∈ [0, δ]`.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;

use num_integer::Integer;

use crate::angle::AngleValue;
use crate::error::{Error, Result};
use crate::ifs::{ortho_of, Ifs, Orientation, OrthoPart};
use crate::symbolic::semigroup::{classify, inverse_in, Closure};
use crate::word::Word;

/// Slack on float comparisons against the window `[0, δ]`.
pub const WINDOW_TOLERANCE: f64 = 1e-12;

/// Orbit length above which [`equidistribution_n`] gives up.
pub const MAX_ORBIT: usize = 1 << 24;

/// Whether `angle` lies in the closed window `[0, δ]` modulo 2π.
///
/// Rational multiples of π are decided exactly at zero.
pub fn angle_in_window(angle: &AngleValue, delta: f64) -> bool {
    if angle.is_zero() {
        return true;
    }
    let x = angle.approx();
    if angle.is_rational_multiple_of_pi() {
        return x <= delta + WINDOW_TOLERANCE;
    }
    x <= delta + WINDOW_TOLERANCE || x >= TAU - WINDOW_TOLERANCE
}

/// One block `τⱼ = (wⱼu)·hat(wⱼu)` of a finite-case recurrence word.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteBlock {
    /// The state `𝒪_{i|ℓ}` this block serves, equal to `sⱼ⁻¹`.
    pub prefix_state: OrthoPart,
    /// `wⱼ`, empty for the identity.
    pub lead: Word,
    /// Start of `τⱼ` inside `ω`.
    pub start: usize,
    /// Position of the `u` occurrence inside `ω`.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Schedule {
    Finite(Vec<FiniteBlock>),
    /// `ω = v^N`, or `v^N j* v^N` when some map reflects.
    Infinite {
        v: Word,
        v_ortho: OrthoPart,
        n: usize,
        flip: Option<(u8, OrthoPart)>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceCertificate {
    pub target: Word,
    /// `None` in the finite case, where hits have angle exactly zero.
    pub delta: Option<f64>,
    pub omega: Word,
    pub schedule: Schedule,
    /// `(sequence prefix, n)` pairs confirmed by [`verify_recurrence`].
    pub verified_examples: Vec<(Word, usize)>,
}

impl RecurrenceCertificate {
    /// Offset inside `ω` of a qualifying occurrence for a sequence whose
    /// first `ℓ` symbols have orthogonal part `state` and which continues
    /// with `ω`.
    pub fn scheduled_offset(&self, state: &OrthoPart) -> Option<usize> {
        match &self.schedule {
            Schedule::Finite(blocks) => blocks.iter().find(|b| &b.prefix_state == state).map(|b| b.offset),
            Schedule::Infinite { v, v_ortho, n, flip } => {
                let delta = self.delta?;
                let (base, mut cur) = match (state.orientation, flip) {
                    (Orientation::Direct, _) => (0, state.clone()),
                    (Orientation::Reflected, Some((_, j_ortho))) => {
                        let mut s = state.clone();
                        for _ in 0..*n {
                            s = s.then(v_ortho);
                        }
                        (n * v.len() + 1, s.then(j_ortho))
                    }
                    (Orientation::Reflected, None) => return None,
                };
                for k in 0..*n {
                    if cur.orientation == Orientation::Direct && angle_in_window(&cur.angle, delta) {
                        return Some(base + k * v.len());
                    }
                    cur = cur.then(v_ortho);
                }
                None
            }
        }
    }

    /// Window used when re-checking hits; zero in the finite case.
    pub fn check_delta(&self) -> f64 {
        self.delta.unwrap_or(0.0)
    }
}

/// All `n ≤ |prefix| − |u|` with `prefix[n..n+|u|) = u`, `ε_{prefix|n} = +1` and
/// `φ_{prefix|n} ∈ [0, δ]`.
pub fn verify_recurrence(ifs: &Ifs, prefix: &Word, u: &Word, delta: f64) -> Vec<usize> {
    let mut hits = Vec::new();
    if u.len() > prefix.len() {
        return hits;
    }
    let mut state = OrthoPart::identity();
    for n in 0..=prefix.len() - u.len() {
        if state.orientation == Orientation::Direct
            && prefix[n..n + u.len()] == u[..]
            && angle_in_window(&state.angle, delta)
        {
            hits.push(n);
        }
        if n < prefix.len() {
            state = state.then(&ifs.map(prefix[n]).ortho());
        }
    }
    hits
}

fn check_target(ifs: &Ifs, u: &Word) -> Result<()> {
    if u.is_empty() {
        return Err(Error::precondition("target word must be nonempty"));
    }
    u.validate(ifs.len())
}

/// `ω = τ₁…τ_t` over the finite group `{s₁,…,s_t}` of orthogonal parts.
pub fn recurrence_word_finite(ifs: &Ifs, u: &Word) -> Result<RecurrenceCertificate> {
    check_target(ifs, u)?;
    let class = classify(ifs)?;
    let closure = class.closure.as_ref().ok_or(Error::InfiniteSemigroup)?;
    finite_from_closure(ifs, u, closure)
}

fn finite_from_closure(ifs: &Ifs, u: &Word, closure: &Closure) -> Result<RecurrenceCertificate> {
    let mut omega = Word::empty();
    let mut blocks = Vec::with_capacity(closure.len());
    for element in &closure.elements {
        let lead = if element.ortho.is_identity() { Word::empty() } else { element.representative.clone() };
        let wu = lead.concat(u);
        let hat = inverse_in(closure, &ortho_of(ifs, &wu))?;
        let start = omega.len();
        blocks.push(FiniteBlock { prefix_state: element.ortho.inverse(), offset: start + lead.len(), lead, start });
        omega = omega.concat(&wu).concat(&hat);
    }
    let mut cert = RecurrenceCertificate {
        target: u.clone(),
        delta: None,
        omega,
        schedule: Schedule::Finite(blocks.clone()),
        verified_examples: Vec::new(),
    };
    let prefixes: Vec<Word> = blocks
        .iter()
        .map(|b| match closure.get(&b.prefix_state) {
            Some(e) if !e.ortho.is_identity() => e.representative.clone(),
            _ => Word::empty(),
        })
        .collect();
    record_examples(ifs, &mut cert, prefixes)?;
    Ok(cert)
}

/// `ω = v^N` (or `v^N j* v^N`) built from an irrational rotation `v` starting
/// with `u`.
pub fn recurrence_word_infinite(ifs: &Ifs, u: &Word, delta: f64) -> Result<RecurrenceCertificate> {
    check_target(ifs, u)?;
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::precondition(format!("window {delta} must be positive")));
    }
    let class = classify(ifs)?;
    let witness = class.witness.as_ref().ok_or(Error::FiniteSemigroup)?;

    let uu = u.concat(u);
    let v = if ortho_of(ifs, &uu).angle.is_rational_multiple_of_pi() { uu.concat(witness) } else { uu };
    let v_ortho = ortho_of(ifs, &v);
    if v_ortho.orientation != Orientation::Direct || v_ortho.angle.is_rational_multiple_of_pi() {
        return Err(Error::InternalConsistency(format!("block {v} is not an irrational rotation")));
    }
    let n = equidistribution_n(&v_ortho.angle, delta)?;
    let block = v.repeat(n);
    let flip = (0..ifs.len() as u8)
        .find(|&j| ifs.map(j).orientation == Orientation::Reflected)
        .map(|j| (j, ifs.map(j).ortho()));
    let omega = match &flip {
        None => block,
        Some((j, _)) => {
            let mut w = block.clone();
            w.push(*j);
            w.concat(&block)
        }
    };
    let mut cert = RecurrenceCertificate {
        target: u.clone(),
        delta: Some(delta),
        omega,
        schedule: Schedule::Infinite { v, v_ortho, n, flip },
        verified_examples: Vec::new(),
    };
    let mut prefixes = vec![Word::empty()];
    prefixes.extend((0..ifs.len() as u8).map(Word::single));
    record_examples(ifs, &mut cert, prefixes)?;
    Ok(cert)
}

/// Dispatches on finiteness of the semigroup; `delta` is ignored in the
/// finite case.
pub fn recurrence_word(ifs: &Ifs, u: &Word, delta: f64) -> Result<RecurrenceCertificate> {
    check_target(ifs, u)?;
    let class = classify(ifs)?;
    match &class.closure {
        Some(closure) => finite_from_closure(ifs, u, closure),
        None => recurrence_word_infinite(ifs, u, delta),
    }
}

fn record_examples(ifs: &Ifs, cert: &mut RecurrenceCertificate, prefixes: Vec<Word>) -> Result<()> {
    for p in prefixes {
        let state = ortho_of(ifs, &p);
        let offset = cert
            .scheduled_offset(&state)
            .ok_or_else(|| Error::InternalConsistency(format!("no scheduled position after prefix {p}")))?;
        let seq = p.concat(&cert.omega);
        let n = p.len() + offset;
        if !verify_recurrence(ifs, &seq, &cert.target, cert.check_delta()).contains(&n) {
            return Err(Error::InternalConsistency(format!(
                "scheduled position {n} fails verification after prefix {p}"
            )));
        }
        cert.verified_examples.push((seq, n));
    }
    Ok(())
}

/// Tracks circular gaps of a growing point set on a circle of length `period`.
struct Gaps<T> {
    points: BTreeSet<T>,
    gaps: BTreeMap<T, usize>,
}

impl<T: Ord + Copy> Gaps<T> {
    fn new() -> Self {
        Gaps { points: BTreeSet::new(), gaps: BTreeMap::new() }
    }

    fn add_gap(&mut self, g: T) {
        *self.gaps.entry(g).or_insert(0) += 1;
    }

    fn remove_gap(&mut self, g: T) {
        if let Some(c) = self.gaps.get_mut(&g) {
            *c -= 1;
            if *c == 0 {
                self.gaps.remove(&g);
            }
        }
    }

    /// `gap(a, b)` is the counter-clockwise distance from `a` to `b`, a full
    /// turn when `a == b`.
    fn insert(&mut self, p: T, gap: impl Fn(T, T) -> T) {
        if self.points.contains(&p) {
            return;
        }
        let prev = self.points.range(..p).next_back().or_else(|| self.points.iter().next_back()).copied();
        let next = self.points.range(p..).next().or_else(|| self.points.iter().next()).copied();
        if let (Some(a), Some(b)) = (prev, next) {
            self.remove_gap(gap(a, b));
            self.add_gap(gap(a, p));
            self.add_gap(gap(p, b));
        } else {
            self.add_gap(gap(p, p));
        }
        self.points.insert(p);
    }

    fn max_gap(&self) -> Option<T> {
        self.gaps.keys().next_back().copied()
    }
}

/// Order-preserving key for non-negative finite floats.
fn key(x: f64) -> u64 {
    x.to_bits()
}

fn unkey(k: u64) -> f64 {
    f64::from_bits(k)
}

/// Smallest `N` such that `{k·φ mod 2π : 0 ≤ k < N}` has every circular gap
/// below `δ`.
pub fn equidistribution_n(phi: &AngleValue, delta: f64) -> Result<usize> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::precondition(format!("window {delta} must be positive")));
    }
    if delta >= TAU {
        return Ok(1);
    }
    if phi.is_rational_multiple_of_pi() {
        // φ/2π = a/period in lowest terms; orbit points are multiples of 1/period
        let half = phi.rational_part() / num_rational::Ratio::from_integer(2);
        let period = *half.denom();
        let step = *half.numer();
        if TAU / period as f64 >= delta {
            return Err(Error::NeverEquidistributes { delta });
        }
        let mut gaps = Gaps::new();
        for k in 0..period {
            gaps.insert((k * step).mod_floor(&period), |a: i64, b: i64| if b > a { b - a } else { b + period - a });
            if let Some(g) = gaps.max_gap() {
                if (g as f64) * TAU / (period as f64) < delta {
                    return Ok(k as usize + 1);
                }
            }
        }
        return Err(Error::InternalConsistency("finite orbit failed its own gap bound".into()));
    }
    let x = phi.approx();
    let mut gaps = Gaps::new();
    for k in 0..MAX_ORBIT {
        let p = (k as f64 * x).rem_euclid(TAU);
        let p = if p >= TAU { 0.0 } else { p };
        gaps.insert(key(p), |a, b| {
            let (a, b) = (unkey(a), unkey(b));
            key(if b > a { b - a } else { b + TAU - a })
        });
        if gaps.max_gap().is_some_and(|g| unkey(g) < delta) {
            return Ok(k + 1);
        }
    }
    Err(Error::Budget { limit: MAX_ORBIT, depth_reached: MAX_ORBIT })
}
