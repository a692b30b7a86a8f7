//! Fixed-point restrictions of Schubert classes.
//!
//! `xi^w(v)` is computed by the subword formula: for the canonical reduced
//! word `(i1, ..., iN)` of `v` and `beta(j) = s_i1 ... s_i(j-1) (alpha_ij)`,
//! sum `prod_{j in J} beta(j)` over the position sets `J` whose letters spell
//! a reduced word for `w`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{AlphaSign, RootPolynomial};
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, WeylRange};

/// Indexing convention of a restriction table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    KK,
    Arabia,
    Billey,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::KK => "KK",
            Convention::Arabia => "Arabia",
            Convention::Billey => "Billey",
        }
    }

    /// Arabia and Billey both index by `(w^-1, v^-1)` relative to KK.
    fn is_inverted(self) -> bool {
        !matches!(self, Convention::KK)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "KK" | "kk" => Ok(Convention::KK),
            "Arabia" | "arabia" => Ok(Convention::Arabia),
            "Billey" | "billey" => Ok(Convention::Billey),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}

/// `xi^w(v)` using the canonical reduced word of `v`.
pub fn billey_restrict(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> RootPolynomial {
    billey_restrict_with_word(rs, w, v.word())
}

/// `xi^w(v)` using an explicit reduced word for `v` (0-based letters).
pub fn billey_restrict_with_word(
    rs: &RootSystem,
    w: &WeylElement,
    v_word: &[usize],
) -> RootPolynomial {
    let n = rs.rank();
    if w.length() > v_word.len() {
        return RootPolynomial::zero(n);
    }
    let betas: Vec<RootPolynomial> = rs
        .inversion_roots(v_word)
        .iter()
        .map(|r| RootPolynomial::linear(r))
        .collect();
    let mut search = SubwordSearch {
        rs,
        target: w.action(),
        target_len: w.length(),
        word: v_word,
        betas: &betas,
        total: RootPolynomial::zero(n),
    };
    let start = rs.identity();
    search.descend(0, start.action().to_vec(), 0, RootPolynomial::one(n));
    search.total
}

struct SubwordSearch<'a> {
    rs: &'a RootSystem,
    target: &'a [i64],
    target_len: usize,
    word: &'a [usize],
    betas: &'a [RootPolynomial],
    total: RootPolynomial,
}

impl SubwordSearch<'_> {
    /// Depth-first over positions; `prefix` is the product of the letters
    /// taken so far, each of which increased the length.
    fn descend(&mut self, pos: usize, prefix: Vec<i64>, taken: usize, product: RootPolynomial) {
        if taken == self.target_len {
            if prefix == self.target {
                self.total = &self.total + &product;
            }
            return;
        }
        if self.word.len() - pos < self.target_len - taken {
            return;
        }
        let n = self.rs.rank();
        let letter = self.word[pos];
        let ascends = (0..n).all(|r| prefix[r * n + letter] >= 0);
        if ascends {
            let next = self.rs.times_simple_raw(&prefix, letter);
            let p = &product * &self.betas[pos];
            self.descend(pos + 1, next, taken + 1, p);
        }
        self.descend(pos + 1, prefix, taken, product);
    }
}

/// All restrictions `xi^w(v)` for `w, v` in a length-bounded range.
#[derive(Debug, Clone)]
pub struct RestrictionTable {
    rs: RootSystem,
    range: WeylRange,
    values: Vec<RootPolynomial>,
    convention: Convention,
}

impl RestrictionTable {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn range(&self) -> &WeylRange {
        &self.range
    }

    pub fn bound(&self) -> usize {
        self.range.bound()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Value at range indices `(w, v)`.
    pub fn at(&self, w: usize, v: usize) -> &RootPolynomial {
        &self.values[w * self.range.len() + v]
    }

    pub fn get(&self, w: &WeylElement, v: &WeylElement) -> Result<&RootPolynomial> {
        let wi = self.index(w)?;
        let vi = self.index(v)?;
        Ok(self.at(wi, vi))
    }

    pub(crate) fn index(&self, w: &WeylElement) -> Result<usize> {
        self.range.index_of(w).ok_or_else(|| Error::NotInRange {
            word: w.word_1based(),
        })
    }

    /// Entries in `(len w, word w, len v, word v)` order.
    pub fn entries(&self) -> impl Iterator<Item = (&WeylElement, &WeylElement, &RootPolynomial)> {
        let n = self.range.len();
        (0..n).flat_map(move |w| {
            (0..n).map(move |v| (self.range.get(w), self.range.get(v), self.at(w, v)))
        })
    }

    /// Re-indexes the stored values into `target`.
    pub fn convert_convention(&self, target: Convention) -> RestrictionTable {
        if self.convention.is_inverted() == target.is_inverted() {
            return RestrictionTable {
                convention: target,
                ..self.clone()
            };
        }
        let n = self.range.len();
        let inv: Vec<usize> = self
            .range
            .elements()
            .iter()
            .map(|w| {
                self.range
                    .index_of(&self.rs.inverse(w))
                    .expect("range is closed under inversion")
            })
            .collect();
        let mut values = Vec::with_capacity(n * n);
        for w in 0..n {
            for v in 0..n {
                values.push(self.at(inv[w], inv[v]).clone());
            }
        }
        RestrictionTable {
            rs: self.rs.clone(),
            range: self.range.clone(),
            values,
            convention: target,
        }
    }

    /// Checks support, homogeneity, diagonal and nonnegativity. Only
    /// meaningful in the KK convention.
    fn verify(&self) -> Result<()> {
        let fail = |w: &WeylElement, v: &WeylElement, reason: &str| Error::Inconsistent {
            u: Vec::new(),
            v: v.word_1based(),
            w: w.word_1based(),
            reason: reason.to_string(),
        };
        let n = self.range.len();
        for wi in 0..n {
            let w = self.range.get(wi);
            let diag: RootPolynomial = self
                .rs
                .inversion_roots(w.word())
                .iter()
                .fold(RootPolynomial::one(self.rs.rank()), |acc, r| {
                    &acc * &RootPolynomial::linear(r)
                });
            for vi in 0..n {
                let v = self.range.get(vi);
                let val = self.at(wi, vi);
                if self.rs.bruhat_leq(w, v) == val.is_zero() {
                    return Err(fail(w, v, "restriction support differs from Bruhat interval"));
                }
                if !val.is_homogeneous_of_degree(w.length() as u32) {
                    return Err(fail(w, v, "restriction is not homogeneous of degree l(w)"));
                }
                if wi == vi && *val != diag {
                    return Err(fail(w, v, "diagonal restriction is not the inversion product"));
                }
                if !matches!(val.alpha_sign(), AlphaSign::NonNeg | AlphaSign::Zero) {
                    return Err(fail(w, v, "restriction has a negative coefficient"));
                }
            }
        }
        Ok(())
    }
}

/// Builds the KK-convention table on `enumerate_upto(rs, bound)`.
pub fn restriction_table(rs: &RootSystem, bound: usize) -> Result<RestrictionTable> {
    let range = rs.enumerate_upto(bound)?;
    table_on_range(rs, range)
}

/// Builds the KK-convention table on an already enumerated range.
pub fn table_on_range(rs: &RootSystem, range: WeylRange) -> Result<RestrictionTable> {
    let elems = range.elements();
    let values: Vec<RootPolynomial> = (0..elems.len())
        .into_par_iter()
        .flat_map_iter(|wi| {
            elems
                .iter()
                .map(move |v| billey_restrict(rs, &elems[wi], v))
        })
        .collect();
    let table = RestrictionTable {
        rs: rs.clone(),
        range,
        values,
        convention: Convention::KK,
    };
    table.verify()?;
    Ok(table)
}
