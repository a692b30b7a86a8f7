//! Weyl group elements as integer matrices on the root lattice.
//!
//! A word `(i1, ..., ik)` denotes the product `s_i1 * ... * s_ik`; its action
//! on a vector applies `s_ik` first. Element identity is matrix equality.
//! Indices are 0-based internally and 1-based in every external format.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector};

/// Default cap on the number of elements produced by [`RootSystem::enumerate_upto`].
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Default iteration cap for the descent loop in [`RootSystem::canonicalize`].
pub const DEFAULT_DESCENT_CAP: usize = 100_000;

/// A Weyl group element: its action matrix (column `j` is the image of
/// `alpha_j`) plus the cached length and canonical reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    action: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Canonical reduced word, 0-based letters.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Canonical reduced word, 1-based letters.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn action(&self) -> &[i64] {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    fn entry(&self, r: usize, c: usize) -> i64 {
        self.action[r * self.rank + c]
    }

    /// Image of `alpha_i` in simple-root coordinates.
    pub fn column(&self, i: usize) -> Vec<i64> {
        (0..self.rank).map(|r| self.entry(r, i)).collect()
    }

    /// True when `w(alpha_i)` is a negative root, i.e. `i` is a right descent.
    pub fn has_right_descent(&self, i: usize) -> bool {
        column_is_negative(&self.action, self.rank, i)
    }

    /// Exact action on a vector in simple-root coordinates.
    pub fn apply(&self, v: &RootVector) -> Result<RootVector> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: v.rank(),
            });
        }
        let coords = (0..self.rank)
            .map(|r| {
                v.coords
                    .iter()
                    .enumerate()
                    .fold(BigRational::zero(), |acc, (c, x)| {
                        acc + x * BigInt::from(self.entry(r, c))
                    })
            })
            .collect();
        Ok(RootVector { coords })
    }

}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.word_1based().iter().map(usize::to_string).collect();
        write!(f, "[{}]", w.join(","))
    }
}

fn column_is_negative(action: &[i64], n: usize, i: usize) -> bool {
    (0..n).any(|r| action[r * n + i] < 0)
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Parses a comma-separated list of 1-based letters; empty means identity.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let i: usize = tok
                .parse()
                .map_err(|_| Error::InvalidWord(format!("{tok:?} is not an index")))?;
            if i == 0 || i > rank {
                return Err(Error::InvalidWord(format!(
                    "letter {i} is out of range 1..={rank}"
                )));
            }
            Ok(i - 1)
        })
        .collect()
}

/// Elements of length at most `bound`, sorted by (length, canonical word).
#[derive(Debug, Clone)]
pub struct WeylRange {
    bound: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    complete: bool,
}

impl WeylRange {
    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the range is the whole (finite) group.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    pub fn get(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        WeylElement {
            rank: n,
            action: identity_matrix(n),
            word: Vec::new(),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let mut m = identity_matrix(self.rank());
        self.right_mul_simple(&mut m, i);
        WeylElement {
            rank: self.rank(),
            action: m,
            word: vec![i],
        }
    }

    /// `m <- m * s_i`: column `j` becomes `col_j - a[i][j] * col_i`.
    fn right_mul_simple(&self, m: &mut [i64], i: usize) {
        let n = self.rank();
        let row = &self.cartan().rows()[i];
        for j in 0..n {
            let a = row[j];
            if j == i || a == 0 {
                continue;
            }
            for r in 0..n {
                m[r * n + j] -= a * m[r * n + i];
            }
        }
        for r in 0..n {
            m[r * n + i] = -m[r * n + i];
        }
    }

    /// `m <- s_i * m`: only row `i` changes.
    fn left_mul_simple(&self, m: &mut [i64], i: usize) {
        let n = self.rank();
        let row = &self.cartan().rows()[i];
        for c in 0..n {
            let pairing: i64 = (0..n).map(|k| row[k] * m[k * n + c]).sum();
            m[i * n + c] -= pairing;
        }
    }

    fn word_matrix(&self, word: &[usize]) -> Vec<i64> {
        let mut m = identity_matrix(self.rank());
        for &i in word {
            self.right_mul_simple(&mut m, i);
        }
        m
    }

    /// Element for an arbitrary (not necessarily reduced) word of 0-based letters.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::InvalidWord(format!(
                "letter {} is out of range 1..={}",
                bad + 1,
                self.rank()
            )));
        }
        self.canonicalize(self.word_matrix(word))
    }

    /// Length and canonical reduced word of a matrix by descent peeling:
    /// repeatedly strip the smallest right descent `i` (the smallest `i` with
    /// `w(alpha_i)` negative), replacing `w` by `w * s_i`.
    pub fn canonicalize(&self, action: Vec<i64>) -> Result<WeylElement> {
        self.canonicalize_capped(action, DEFAULT_DESCENT_CAP)
    }

    pub fn canonicalize_capped(&self, action: Vec<i64>, cap: usize) -> Result<WeylElement> {
        let n = self.rank();
        if action.len() != n * n {
            return Err(Error::RankMismatch {
                left: n * n,
                right: action.len(),
            });
        }
        let id = identity_matrix(n);
        let mut m = action.clone();
        let mut peeled = Vec::new();
        while m != id {
            if peeled.len() >= cap {
                return Err(Error::NotGroupElement {
                    iterations: peeled.len(),
                });
            }
            let i = (0..n)
                .find(|&i| column_is_negative(&m, n, i))
                .ok_or(Error::NotGroupElement {
                    iterations: peeled.len(),
                })?;
            self.right_mul_simple(&mut m, i);
            peeled.push(i);
        }
        peeled.reverse();
        Ok(WeylElement {
            rank: n,
            action,
            word: peeled,
        })
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        let n = self.rank();
        for r in [a.rank, b.rank] {
            if r != n {
                return Err(Error::RankMismatch { left: n, right: r });
            }
        }
        let mut m = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                m[r * n + c] = (0..n).map(|k| a.entry(r, k) * b.entry(k, c)).sum();
            }
        }
        self.canonicalize(m)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element_from_word(&rev).expect("reversed reduced word")
    }

    /// `w * s_i` without recanonicalizing.
    pub(crate) fn times_simple_raw(&self, w: &[i64], i: usize) -> Vec<i64> {
        let mut m = w.to_vec();
        self.right_mul_simple(&mut m, i);
        m
    }

    pub fn times_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.canonicalize(self.times_simple_raw(&w.action, i))
            .expect("product of group elements")
    }

    pub fn simple_times(&self, i: usize, w: &WeylElement) -> WeylElement {
        let mut m = w.action.clone();
        self.left_mul_simple(&mut m, i);
        self.canonicalize(m).expect("product of group elements")
    }

    /// Bruhat order test by right-to-left greedy matching against the
    /// canonical word of `w`: walking `w`'s letters from the right, strip the
    /// letter from `u` whenever it is a right descent of the current `u`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        if u.length() > w.length() {
            return false;
        }
        if u.length() == w.length() {
            return u == w;
        }
        let n = self.rank();
        let mut cur = u.action.clone();
        let mut remaining = u.length();
        for &i in w.word.iter().rev() {
            if remaining == 0 {
                break;
            }
            if column_is_negative(&cur, n, i) {
                self.right_mul_simple(&mut cur, i);
                remaining -= 1;
            }
        }
        remaining == 0
    }

    /// Inversion roots `s_i1 ... s_i(j-1) (alpha_ij)` along the canonical word,
    /// in word order, as integer coordinate vectors.
    pub(crate) fn inversion_roots(&self, word: &[usize]) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = identity_matrix(n);
        let mut out = Vec::with_capacity(word.len());
        for &i in word {
            out.push((0..n).map(|r| m[r * n + i]).collect());
            self.right_mul_simple(&mut m, i);
        }
        out
    }

    /// Positive roots sent negative by `w^-1`.
    pub fn inversions(&self, w: &WeylElement) -> Vec<RootVector> {
        self.inversion_roots(&w.word)
            .iter()
            .map(|r| RootVector::from_integers(r))
            .collect()
    }

    pub fn enumerate_upto(&self, bound: usize) -> Result<WeylRange> {
        self.enumerate_upto_capped(bound, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure under length-increasing right multiplication.
    pub fn enumerate_upto_capped(&self, bound: usize, cap: usize) -> Result<WeylRange> {
        let n = self.rank();
        let mut elements = vec![self.identity()];
        let mut level: Vec<WeylElement> = elements.clone();
        let mut complete = false;
        for _ in 0..bound {
            let mut seen: HashSet<Vec<i64>> = HashSet::new();
            let mut next = Vec::new();
            for w in &level {
                for i in 0..n {
                    if w.has_right_descent(i) {
                        continue;
                    }
                    let m = self.times_simple_raw(&w.action, i);
                    if seen.insert(m.clone()) {
                        if elements.len() + next.len() >= cap {
                            return Err(Error::ResourceCap { cap });
                        }
                        next.push(m);
                    }
                }
            }
            if next.is_empty() {
                complete = true;
                break;
            }
            level = next
                .into_iter()
                .map(|m| self.canonicalize(m))
                .collect::<Result<Vec<_>>>()?;
            elements.extend(level.iter().cloned());
        }
        if !complete {
            // a top element with no ascent means the group is exhausted
            complete = level
                .iter()
                .any(|w| (0..n).all(|i| w.has_right_descent(i)));
        }
        elements.sort_by(|a, b| {
            a.length()
                .cmp(&b.length())
                .then_with(|| a.word.cmp(&b.word))
        });
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.action.clone(), k))
            .collect();
        Ok(WeylRange {
            bound,
            elements,
            index,
            complete,
        })
    }

    /// The longest element, built by adding ascents until none remain.
    pub fn longest_element(&self) -> Result<WeylElement> {
        let roots = self.positive_roots_int().ok_or(Error::NotFiniteType)?;
        let n = self.rank();
        let mut m = identity_matrix(n);
        for _ in 0..roots.len() {
            let i = (0..n)
                .find(|&i| !column_is_negative(&m, n, i))
                .expect("finite group has an ascent below the top");
            self.right_mul_simple(&mut m, i);
        }
        self.canonicalize(m)
    }

    /// All reduced words of `w` (exponential; intended for tests and small ranks).
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if w.has_right_descent(i) {
                let shorter = self.times_simple(w, i);
                for mut word in self.reduced_words(&shorter) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }
}
