//! Sparse polynomials with integer coefficients in the simple roots.
//!
//! A [`RootPolynomial`] is an element of the symmetric algebra on the root
//! lattice, written in the monomial basis `a1^e1 * ... * al^el`. Terms are
//! kept in a `BTreeMap` ordered by graded lexicographic order, so iteration
//! in reverse yields the canonical (descending) print order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign pattern of the coefficients of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlphaSign {
    Zero,
    NonNeg,
    NonPos,
    Mixed,
}

impl AlphaSign {
    pub fn as_str(self) -> &'static str {
        match self {
            AlphaSign::Zero => "zero",
            AlphaSign::NonNeg => "nonneg",
            AlphaSign::NonPos => "nonpos",
            AlphaSign::Mixed => "mixed",
        }
    }
}

/// Polynomial in `nvars` simple roots with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl RootPolynomial {
    pub fn zero(nvars: usize) -> Self {
        RootPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The simple root `a{i+1}` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), BigInt::one());
        p
    }

    /// Linear form `sum coords[i] * a{i+1}`.
    pub fn linear(coords: &[i64]) -> Self {
        let n = coords.len();
        let mut p = Self::zero(n);
        for (i, &c) in coords.iter().enumerate() {
            p.add_term(Monomial::var(n, i), BigInt::from(c));
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::RankMismatch {
                    left: nvars,
                    right: exp.len(),
                });
            }
            p.add_term(Monomial(exp), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded lex, descending.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Total degree if all terms share it; `None` for zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RankMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// `self += factor * other`, without allocating an intermediate product.
    pub fn add_mul_assign(&mut self, factor: &Self, other: &Self) -> Result<()> {
        self.check_rank(factor)?;
        self.check_rank(other)?;
        for (m1, c1) in &factor.terms {
            for (m2, c2) in &other.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Exact quotient by a nonzero homogeneous linear form.
    ///
    /// Division runs in lex order with `a1 > a2 > ...`; the leading variable
    /// of `lin` is its first variable with a nonzero coefficient, so the
    /// leading term of the remainder must be divisible by it at every step.
    pub fn exact_divide_linear(&self, lin: &Self) -> Result<Self> {
        self.check_rank(lin)?;
        if lin.is_zero() || lin.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidDivisor);
        }
        let n = self.nvars;
        // linear coefficients by variable
        let mut lc = vec![BigInt::zero(); n];
        for (m, c) in &lin.terms {
            let i = m.0.iter().position(|&e| e == 1).expect("degree-1 monomial");
            lc[i] = c.clone();
        }
        let lead = lc.iter().position(|c| !c.is_zero()).expect("nonzero");
        let lead_coeff = lc[lead].clone();

        let mut rem: BTreeMap<Vec<u32>, BigInt> = self
            .terms
            .iter()
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect();
        let mut quot = Self::zero(n);
        while let Some((m, c)) = rem.pop_last() {
            if m[lead] == 0 {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = c.div_rem(&lead_coeff);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let mut qm = m;
            qm[lead] -= 1;
            for (j, cj) in lc.iter().enumerate().skip(lead + 1) {
                if cj.is_zero() {
                    continue;
                }
                let mut e = qm.clone();
                e[j] += 1;
                let slot = rem.entry(e.clone()).or_insert_with(BigInt::zero);
                *slot -= &qc * cj;
                if slot.is_zero() {
                    rem.remove(&e);
                }
            }
            quot.add_term(Monomial(qm), qc);
        }
        Ok(quot)
    }

    /// Substitutes `a_i -> -a_i` for every variable.
    pub fn negate_variables(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let c = if m.degree() % 2 == 1 { -c } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn alpha_sign(&self) -> AlphaSign {
        let pos = self.terms.values().any(|c| c.is_positive());
        let neg = self.terms.values().any(|c| c.is_negative());
        match (pos, neg) {
            (false, false) => AlphaSign::Zero,
            (true, false) => AlphaSign::NonNeg,
            (false, true) => AlphaSign::NonPos,
            (true, true) => AlphaSign::Mixed,
        }
    }

    /// Value at `a_i := point[i]`.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::RankMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `a_i -> images[i]`.
    pub fn substitute(&self, images: &[RootPolynomial]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::RankMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<RootPolynomial>> = images
            .iter()
            .map(|p| vec![RootPolynomial::one(target), p.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = RootPolynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.checked_mul(&powers[i][e])?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }
}

impl Add for &RootPolynomial {
    type Output = RootPolynomial;
    /// Panics on rank mismatch; use [`RootPolynomial::checked_add`] otherwise.
    fn add(self, rhs: &RootPolynomial) -> RootPolynomial {
        self.checked_add(rhs).expect("rank mismatch in polynomial addition")
    }
}

impl Sub for &RootPolynomial {
    type Output = RootPolynomial;
    fn sub(self, rhs: &RootPolynomial) -> RootPolynomial {
        self.checked_sub(rhs)
            .expect("rank mismatch in polynomial subtraction")
    }
}

impl Mul for &RootPolynomial {
    type Output = RootPolynomial;
    fn mul(self, rhs: &RootPolynomial) -> RootPolynomial {
        self.checked_mul(rhs)
            .expect("rank mismatch in polynomial multiplication")
    }
}

impl Neg for &RootPolynomial {
    type Output = RootPolynomial;
    fn neg(self) -> RootPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    m.0.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("a{}", i + 1)
            } else {
                format!("a{}^{}", i + 1, e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Text rendering of a monomial with `1` for the empty product.
pub fn monomial_text(m: &Monomial) -> String {
    if m.degree() == 0 {
        "1".to_string()
    } else {
        fmt_monomial(m)
    }
}

/// Renders as `3*a1^2*a2 - a2^3`, terms in descending graded-lex order.
impl fmt::Display for RootPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", fmt_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", fmt_monomial(m))?;
            }
        }
        Ok(())
    }
}
