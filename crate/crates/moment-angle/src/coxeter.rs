//! The right-angled Coxeter group `W_K`.
//!
//! `W_K` is generated by involutions `s_1, ..., s_m` with `(s_i s_j)^2 = 1`
//! whenever `{i, j}` is an edge of `K`. Two rewriting moves solve the word
//! problem: delete a pair of equal adjacent letters, and swap adjacent
//! commuting letters. Every element has a unique canonical form — the
//! reduced word that is lexicographically least within its commutation
//! class — computed here by a greedy least-available-letter linearization of
//! the dependence order.
//!
//! [`brute_equal`] is a deliberately strategy-free oracle for the word
//! problem: it explores entire rewrite closures breadth-first and decides
//! equality by closure intersection. The canonical-form path is tested
//! against it, not the other way around.

use crate::error::{Error, Result};
use crate::limits;
use crate::simplicial::SimplicialComplex;
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Presentation of a right-angled Coxeter group: `m` involutive generators
/// and a symmetric set of commuting pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RacgPresentation {
    m: u32,
    /// Adjacency mask per generator (0-based bit positions).
    commuting: Vec<u64>,
}

impl RacgPresentation {
    pub fn new(m: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        if m > 64 {
            return Err(Error::capacity(format!("{m} generators exceed the supported 64")));
        }
        let mut commuting = vec![0u64; m as usize];
        for &(i, j) in pairs {
            if i == 0 || j == 0 || i > m || j > m {
                return Err(Error::input(format!(
                    "generator pair ({i},{j}) out of range 1..={m}"
                )));
            }
            if i == j {
                return Err(Error::input(format!("pair ({i},{i}) is not allowed")));
            }
            commuting[(i - 1) as usize] |= 1u64 << (j - 1);
            commuting[(j - 1) as usize] |= 1u64 << (i - 1);
        }
        Ok(RacgPresentation { m, commuting })
    }

    /// The presentation attached to a simplicial complex: one generator per
    /// vertex, commuting pairs at the edges of the 1-skeleton.
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let pairs = k.edges();
        RacgPresentation::new(k.vertex_count(), &pairs).expect("edges are valid pairs")
    }

    pub fn generators(&self) -> u32 {
        self.m
    }

    pub fn commutes(&self, i: u32, j: u32) -> bool {
        i != j && self.commuting[(i - 1) as usize] >> (j - 1) & 1 == 1
    }

    pub fn commuting_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if self.commutes(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A word in the generators, not necessarily reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses the CLI word syntax: comma-separated generator indices, with
    /// `e` for the empty word.
    pub fn parse(s: &str, m: u32) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("bad generator index {part:?} in word")))?;
            if v == 0 || v > m {
                return Err(Error::input(format!("generator {v} out of range 1..={m}")));
            }
            letters.push(v);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Canonical reduced word: lexicographically least within its commutation
/// class, with cached support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    letters: Vec<u32>,
    support: u64,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { letters: Vec::new(), support: 0 }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Bitmask of the generators that occur (0-based bits).
    pub fn support_mask(&self) -> u64 {
        self.support
    }

    pub fn as_word(&self) -> Word {
        Word(self.letters.clone())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An element of `(Z/2)^m`: the per-generator occurrence parities of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    m: u32,
    mask: u64,
}

impl SignVector {
    pub fn zero(m: u32) -> Self {
        SignVector { m, mask: 0 }
    }

    pub fn from_mask(m: u32, mask: u64) -> Self {
        SignVector { m, mask: mask & mask_of(m) }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn generators(&self) -> u32 {
        self.m
    }

    pub fn bit(&self, i: u32) -> bool {
        self.mask >> (i - 1) & 1 == 1
    }

    /// Componentwise sum mod 2.
    pub fn add(&self, other: &SignVector) -> SignVector {
        SignVector { m: self.m, mask: self.mask ^ other.mask }
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 0
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            write!(f, "{}", if self.mask >> i & 1 == 1 { '-' } else { '+' })?;
        }
        Ok(())
    }
}

fn mask_of(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// The sign homomorphism `λ : W_K -> (Z/2)^m`, coordinate `i` the parity of
/// occurrences of `s_i`. Both defining relations preserve parities, so the
/// map is constant on rewrite classes.
pub fn lambda_map(m: u32, letters: &[u32]) -> SignVector {
    let mut mask = 0u64;
    for &l in letters {
        mask ^= 1u64 << (l - 1);
    }
    SignVector { m, mask }
}

/// Appends a generator to a reduced buffer, cancelling when possible: the
/// scan walks left past letters commuting with `x`; hitting an equal letter
/// cancels the pair, hitting a non-commuting letter blocks.
fn reduce_push(p: &RacgPresentation, buf: &mut Vec<u32>, x: u32) {
    let mut k = buf.len();
    loop {
        if k == 0 {
            buf.push(x);
            return;
        }
        let y = buf[k - 1];
        if y == x {
            buf.remove(k - 1);
            return;
        }
        if p.commutes(x, y) {
            k -= 1;
        } else {
            buf.push(x);
            return;
        }
    }
}

/// Lexicographically least linearization of the dependence order of a
/// reduced word: greedily emit the smallest generator whose earliest pending
/// occurrence has no pending non-commuting occurrence before it.
fn canonicalize(p: &RacgPresentation, letters: &[u32]) -> Vec<u32> {
    let n = letters.len();
    let mut used = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<usize> = None;
        for i in 0..n {
            if used[i] {
                continue;
            }
            let mut available = true;
            for (j, &lj) in letters.iter().enumerate().take(i) {
                if !used[j] && (lj == letters[i] || !p.commutes(lj, letters[i])) {
                    available = false;
                    break;
                }
            }
            if available && best.is_none_or(|b| letters[i] < letters[b]) {
                best = Some(i);
            }
        }
        let b = best.expect("a minimal occurrence always exists");
        used[b] = true;
        out.push(letters[b]);
    }
    out
}

fn assemble(letters: Vec<u32>) -> NormalForm {
    let support = letters.iter().fold(0u64, |a, &l| a | 1u64 << (l - 1));
    NormalForm { letters, support }
}

/// The canonical form of a word: reduce left to right, then take the least
/// representative of the commutation class. Equal group elements yield
/// identical normal forms.
pub fn normal_form(p: &RacgPresentation, w: &Word) -> NormalForm {
    let mut buf: Vec<u32> = Vec::with_capacity(w.0.len());
    for &x in &w.0 {
        reduce_push(p, &mut buf, x);
    }
    assemble(canonicalize(p, &buf))
}

/// Group multiplication on normal forms.
pub fn multiply(p: &RacgPresentation, a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut buf = a.letters.clone();
    for &x in &b.letters {
        reduce_push(p, &mut buf, x);
    }
    assemble(canonicalize(p, &buf))
}

/// Inversion: every generator is an involution, so the inverse is the
/// reversed word, renormalized.
pub fn invert(p: &RacgPresentation, a: &NormalForm) -> NormalForm {
    let reversed: Vec<u32> = a.letters.iter().rev().copied().collect();
    normal_form(p, &Word(reversed))
}

/// Right multiplication by a single generator.
pub fn multiply_generator(p: &RacgPresentation, a: &NormalForm, s: u32) -> NormalForm {
    let mut buf = a.letters.clone();
    reduce_push(p, &mut buf, s);
    assemble(canonicalize(p, &buf))
}

/// Membership in the standard parabolic subgroup generated by `T`: a reduced
/// word lies in `W_T` iff its support is contained in `T`.
pub fn parabolic_membership(w: &NormalForm, t_mask: u64) -> bool {
    w.support & !t_mask == 0
}

/// The minimal-length representative of the coset `w · W_T`, canonicalized:
/// strip descents into `T` until none remain.
pub fn coset_min(p: &RacgPresentation, w: &NormalForm, t_mask: u64) -> NormalForm {
    let mut current = w.clone();
    loop {
        let mut shortened = false;
        for i in 1..=p.generators() {
            if t_mask >> (i - 1) & 1 == 1 {
                let next = multiply_generator(p, &current, i);
                if next.len() < current.len() {
                    current = next;
                    shortened = true;
                    break;
                }
            }
        }
        if !shortened {
            return current;
        }
    }
}

/// All elements of length at most `radius`, grouped by length.
#[derive(Clone, Debug)]
pub struct Ball {
    spheres: Vec<Vec<NormalForm>>,
    set: HashSet<Vec<u32>>,
    radius: u32,
}

impl Ball {
    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Elements of each length, canonically ordered within a sphere.
    pub fn spheres(&self) -> &[Vec<NormalForm>] {
        &self.spheres
    }

    pub fn contains(&self, w: &NormalForm) -> bool {
        self.set.contains(&w.letters)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &NormalForm> {
        self.spheres.iter().flatten()
    }

    /// Per-length element counts, padded with zeros up to the radius.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        (0..=self.radius as usize)
            .map(|l| self.spheres.get(l).map_or(0, |s| s.len()))
            .collect()
    }
}

/// Breadth-first enumeration of the ball of the given radius, deduplicated
/// through canonical forms.
pub fn ball(p: &RacgPresentation, radius: u32) -> Result<Ball> {
    if radius > limits::max_radius() {
        return Err(Error::capacity(format!(
            "radius {radius} above the cap {} (override with MOMA_MAX_RADIUS)",
            limits::max_radius()
        )));
    }
    let cap = limits::max_ball_elements();
    let mut set: HashSet<Vec<u32>> = HashSet::new();
    set.insert(Vec::new());
    let mut spheres: Vec<Vec<NormalForm>> = vec![vec![NormalForm::identity()]];
    for len in 0..radius as usize {
        let mut next: Vec<NormalForm> = Vec::new();
        for widx in 0..spheres[len].len() {
            let w = spheres[len][widx].clone();
            for s in 1..=p.generators() {
                let cand = multiply_generator(p, &w, s);
                if cand.len() == len + 1 && !set.contains(&cand.letters) {
                    set.insert(cand.letters.clone());
                    if set.len() > cap {
                        return Err(Error::capacity(format!(
                            "ball exceeds {cap} elements (override with MOMA_MAX_BALL)"
                        )));
                    }
                    next.push(cand);
                }
            }
        }
        next.sort();
        if next.is_empty() {
            break;
        }
        spheres.push(next);
    }
    Ok(Ball { spheres, set, radius })
}

/// Per-length counts of the ball of the given radius.
pub fn sphere_sizes(p: &RacgPresentation, radius: u32) -> Result<Vec<usize>> {
    Ok(ball(p, radius)?.sphere_sizes())
}

/// Verdict of the strategy-free word-problem oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruteVerdict {
    Equal,
    NotEqual,
    /// Budget exhausted before the closures were complete.
    Indeterminate,
}

pub const DEFAULT_BRUTE_BUDGET: usize = 2_000_000;

const BRUTE_MAX_COMBINED: usize = 16;

/// Decides `w1 = w2` in `W` by exhaustive rewriting: the closures of both
/// words under deletions of equal adjacent letters and swaps of adjacent
/// commuting letters intersect iff the words represent the same element
/// (length-nonincreasing rewriting is complete for these presentations:
/// every reduced expression of the element appears in each closure).
pub fn brute_equal(
    p: &RacgPresentation,
    w1: &Word,
    w2: &Word,
    budget: usize,
) -> Result<BruteVerdict> {
    if w1.0.len() + w2.0.len() > BRUTE_MAX_COMBINED {
        return Err(Error::domain(format!(
            "combined word length {} above the oracle cap {BRUTE_MAX_COMBINED}",
            w1.0.len() + w2.0.len()
        )));
    }
    let mut budget = budget;
    let (first, first_complete) = rewrite_closure(p, &w1.0, &mut budget, None);
    if first.contains(&w2.0) {
        return Ok(BruteVerdict::Equal);
    }
    let (second, second_complete) = rewrite_closure(p, &w2.0, &mut budget, Some(&first));
    if second.iter().any(|w| first.contains(w)) {
        return Ok(BruteVerdict::Equal);
    }
    if first_complete && second_complete {
        Ok(BruteVerdict::NotEqual)
    } else {
        Ok(BruteVerdict::Indeterminate)
    }
}

/// Breadth-first closure of a word under the two rewrite moves. Returns the
/// visited set and whether it is complete within the budget. Stops early
/// when a member of `target` is reached.
fn rewrite_closure(
    p: &RacgPresentation,
    start: &[u32],
    budget: &mut usize,
    target: Option<&HashSet<Vec<u32>>>,
) -> (HashSet<Vec<u32>>, bool) {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        if let Some(t) = target {
            if t.contains(&w) {
                return (seen, true);
            }
        }
        for i in 0..w.len().saturating_sub(1) {
            if w[i] == w[i + 1] {
                let mut shorter = w.clone();
                shorter.drain(i..=i + 1);
                if !seen.contains(&shorter) {
                    if *budget == 0 {
                        return (seen, false);
                    }
                    *budget -= 1;
                    seen.insert(shorter.clone());
                    queue.push_back(shorter);
                }
            } else if p.commutes(w[i], w[i + 1]) {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                if !seen.contains(&swapped) {
                    if *budget == 0 {
                        return (seen, false);
                    }
                    *budget -= 1;
                    seen.insert(swapped.clone());
                    queue.push_back(swapped);
                }
            }
        }
    }
    (seen, true)
}
