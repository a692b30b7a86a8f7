//! Equivariant structure constants by Bruhat-triangular elimination.
//!
//! For a pair `(u, v)` the constants `a^w_{uv}` are the unique solution of
//! `xi^u(z) xi^v(z) = sum_w a^w_{uv} xi^w(z)` over all fixed points `z`.
//! Since `xi^w(z)` vanishes unless `w <= z`, processing `z` in (length, word)
//! order determines `a^z` from the constants already found, after one exact
//! division by `xi^z(z)`, the product of the inversion roots of `z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::localize::{Convention, RestrictionTable};
use crate::poly::{AlphaSign, Monomial, RootPolynomial};
use crate::rootsys::RootSystem;
use crate::weyl::WeylElement;

/// Which Schubert basis a table expands in: `x` (constants `a`) or the
/// opposite basis `y` (constants `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    X,
    Y,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::X => "x",
            Basis::Y => "y",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" | "X" => Ok(Basis::X),
            "y" | "Y" => Ok(Basis::Y),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Constants `c^w_{uv}` for one pair, listed in (length, word) order of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    pub system: String,
    pub rank: usize,
    pub basis: Basis,
    pub u: WeylElement,
    pub v: WeylElement,
    pub values: Vec<(WeylElement, RootPolynomial)>,
}

impl StructureTable {
    pub fn value(&self, w: &WeylElement) -> Option<&RootPolynomial> {
        self.values.iter().find(|(x, _)| x == w).map(|(_, p)| p)
    }

    /// Expected degree of `c^w_{uv}`; negative means the constant must vanish.
    pub fn expected_degree(&self, w: &WeylElement, top: usize) -> i64 {
        let (lu, lv, lw) = (self.u.length() as i64, self.v.length() as i64, w.length() as i64);
        match self.basis {
            Basis::X => lu + lv - lw,
            Basis::Y => top as i64 - lu - lv + lw,
        }
    }
}

fn inconsistent(u: &WeylElement, v: &WeylElement, w: &WeylElement, reason: &str) -> Error {
    Error::Inconsistent {
        u: u.word_1based(),
        v: v.word_1based(),
        w: w.word_1based(),
        reason: reason.to_string(),
    }
}

/// Solves for `a^w_{uv}` over every `w` in the table's range with
/// `l(w) <= l(u) + l(v)`.
pub fn structure_constants(
    t: &RestrictionTable,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<StructureTable> {
    if t.convention() != Convention::KK {
        return Err(Error::WrongConvention { expected: "KK" });
    }
    let rs = t.root_system();
    let needed = u.length() + v.length();
    if !t.range().is_complete() && t.bound() < needed {
        return Err(Error::InsufficientBound {
            bound: t.bound(),
            needed,
        });
    }
    let ui = t.index(u)?;
    let vi = t.index(v)?;
    let n = rs.rank();

    let mut solved: Vec<(usize, RootPolynomial)> = Vec::new();
    let mut values = Vec::new();
    for (zi, z) in t.range().elements().iter().enumerate() {
        if z.length() > needed {
            break;
        }
        let mut numer = t.at(ui, zi) * t.at(vi, zi);
        for (wi, a) in &solved {
            let xi = t.at(*wi, zi);
            if !xi.is_zero() {
                numer = &numer - &(a * xi);
            }
        }
        if !(rs.bruhat_leq(u, z) && rs.bruhat_leq(v, z)) {
            if !numer.is_zero() {
                return Err(inconsistent(u, v, z, "nonzero numerator outside the support"));
            }
            values.push((z.clone(), RootPolynomial::zero(n)));
            continue;
        }
        let mut a = numer;
        for root in rs.inversion_roots(z.word()) {
            a = a
                .exact_divide_linear(&RootPolynomial::linear(&root))
                .map_err(|_| inconsistent(u, v, z, "numerator not divisible by xi^z(z)"))?;
        }
        let degree = (needed - z.length()) as u32;
        if !a.is_homogeneous_of_degree(degree) {
            return Err(inconsistent(u, v, z, "constant has the wrong degree"));
        }
        if !a.is_zero() {
            solved.push((zi, a.clone()));
        }
        values.push((z.clone(), a));
    }
    Ok(StructureTable {
        system: rs.name().to_string(),
        rank: n,
        basis: Basis::X,
        u: u.clone(),
        v: v.clone(),
        values,
    })
}

/// Outcome of [`verify_product_identity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductCheck {
    Holds,
    FailsAt(WeylElement),
}

impl ProductCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ProductCheck::Holds)
    }
}

/// Substitution `a_i -> w(alpha_i)` on polynomials.
fn act_on_polynomial(w: &WeylElement, p: &RootPolynomial) -> RootPolynomial {
    let images: Vec<RootPolynomial> = (0..w.rank())
        .map(|i| RootPolynomial::linear(&w.column(i)))
        .collect();
    p.substitute(&images).expect("ranks agree")
}

/// Restriction of the opposite class `y_w` at `z`: `w0 . xi^{w0 w}(w0 z)`.
pub fn opposite_restriction(
    t: &RestrictionTable,
    w0: &WeylElement,
    w: &WeylElement,
    z: &WeylElement,
) -> Result<RootPolynomial> {
    let rs = t.root_system();
    let val = t.get(&rs.multiply(w0, w)?, &rs.multiply(w0, z)?)?;
    Ok(act_on_polynomial(w0, val))
}

/// Re-checks `c_u(z) c_v(z) = sum_w c^w_{uv} c_w(z)` at every fixed point of
/// the table's range, using the restrictions of the basis `s` is written in.
pub fn verify_product_identity(t: &RestrictionTable, s: &StructureTable) -> Result<ProductCheck> {
    let rs = t.root_system();
    match s.basis {
        Basis::X => {
            let ui = t.index(&s.u)?;
            let vi = t.index(&s.v)?;
            let idx: Vec<(usize, &RootPolynomial)> = s
                .values
                .iter()
                .map(|(w, a)| t.index(w).map(|i| (i, a)))
                .collect::<Result<_>>()?;
            for zi in 0..t.range().len() {
                let lhs = t.at(ui, zi) * t.at(vi, zi);
                let mut rhs = RootPolynomial::zero(rs.rank());
                for (wi, a) in &idx {
                    rhs.add_mul_assign(a, t.at(*wi, zi))?;
                }
                if lhs != rhs {
                    return Ok(ProductCheck::FailsAt(t.range().get(zi).clone()));
                }
            }
        }
        Basis::Y => {
            if !t.range().is_complete() {
                return Err(Error::NotFiniteType);
            }
            let w0 = rs.longest_element()?;
            for z in t.range().elements() {
                let lhs = &opposite_restriction(t, &w0, &s.u, z)?
                    * &opposite_restriction(t, &w0, &s.v, z)?;
                let mut rhs = RootPolynomial::zero(rs.rank());
                for (w, b) in &s.values {
                    rhs.add_mul_assign(b, &opposite_restriction(t, &w0, w, z)?)?;
                }
                if lhs != rhs {
                    return Ok(ProductCheck::FailsAt(z.clone()));
                }
            }
        }
    }
    Ok(ProductCheck::Holds)
}

/// Transports an x-basis table for `(u, v)` to the y-basis table for
/// `(w0 u, w0 v)`: `b^{w0 w}_{w0 u, w0 v} = w0 . a^w_{uv}`, where `w0` acts
/// on polynomials by `a_i -> w0(alpha_i)`.
pub fn opposite_constants(
    rs: &RootSystem,
    s: &StructureTable,
    w0: &WeylElement,
) -> Result<StructureTable> {
    if !rs.is_finite() {
        return Err(Error::NotFiniteType);
    }
    if s.basis != Basis::X {
        return Err(Error::Parse("opposite constants need an x-basis table".into()));
    }
    let mut values: Vec<(WeylElement, RootPolynomial)> = s
        .values
        .iter()
        .map(|(w, a)| Ok((rs.multiply(w0, w)?, act_on_polynomial(w0, a))))
        .collect::<Result<_>>()?;
    values.sort_by(|(a, _), (b, _)| {
        a.length()
            .cmp(&b.length())
            .then_with(|| a.word().cmp(b.word()))
    });
    Ok(StructureTable {
        system: s.system.clone(),
        rank: s.rank,
        basis: Basis::Y,
        u: rs.multiply(w0, &s.u)?,
        v: rs.multiply(w0, &s.v)?,
        values,
    })
}

/// y-basis constants `b^w_{uv}` for all `w`; needs the full finite group.
pub fn y_structure_constants(
    t: &RestrictionTable,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<StructureTable> {
    let rs = t.root_system();
    if !rs.is_finite() {
        return Err(Error::NotFiniteType);
    }
    if !t.range().is_complete() {
        let needed = rs.longest_element()?.length();
        return Err(Error::InsufficientBound {
            bound: t.bound(),
            needed,
        });
    }
    let w0 = rs.longest_element()?;
    let a = structure_constants(t, &rs.multiply(&w0, u)?, &rs.multiply(&w0, v)?)?;
    opposite_constants(rs, &a, &w0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEntry {
    pub w: WeylElement,
    pub terms: Vec<(Monomial, BigInt)>,
    /// Sign pattern of the coefficients in the simple-root monomials.
    pub sign: AlphaSign,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub basis: Basis,
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Full monomial expansion of every nonzero constant with a sign verdict.
///
/// x-basis constants must have nonnegative coefficients in the monomials of
/// the simple roots. y-basis constants must be nonnegative combinations of
/// monomials in the negated simple roots `-a_i`, i.e. each coefficient has
/// sign `(-1)^degree`; for odd degree this is nonpositivity in the `a_i`.
pub fn positivity_certificate(s: &StructureTable) -> Certificate {
    let entries = s
        .values
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(w, p)| {
            let probe = match s.basis {
                Basis::X => p.clone(),
                Basis::Y => p.negate_variables(),
            };
            CertificateEntry {
                w: w.clone(),
                terms: p.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
                sign: p.alpha_sign(),
                ok: matches!(probe.alpha_sign(), AlphaSign::NonNeg | AlphaSign::Zero),
            }
        })
        .collect();
    Certificate {
        basis: s.basis,
        entries,
    }
}

/// Numeric values of a table at `a_i := nu_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub u: WeylElement,
    pub v: WeylElement,
    pub values: Vec<(WeylElement, BigRational)>,
    /// True once indices were relabelled to the `p^{uv}_w` convention.
    pub p_convention: bool,
}

impl Evaluation {
    /// Relabels `(u, v, w) -> (u^-1, v^-1, w^-1)`, so that entries read as
    /// `p^{u'v'}_{w'}`. Applying it twice restores the original labels.
    pub fn relabel_inverse(&self, rs: &RootSystem) -> Evaluation {
        Evaluation {
            u: rs.inverse(&self.u),
            v: rs.inverse(&self.v),
            values: self
                .values
                .iter()
                .map(|(w, x)| (rs.inverse(w), x.clone()))
                .collect(),
            p_convention: !self.p_convention,
        }
    }
}

/// Evaluates each constant at a point of the open positive cone.
pub fn billey_evaluate(s: &StructureTable, nu: &[BigRational]) -> Result<Evaluation> {
    if nu.len() != s.rank {
        return Err(Error::RankMismatch {
            left: s.rank,
            right: nu.len(),
        });
    }
    if let Some(index) = nu.iter().position(|x| !x.is_positive()) {
        return Err(Error::DomainViolation { index });
    }
    let values = s
        .values
        .iter()
        .map(|(w, p)| Ok((w.clone(), p.evaluate(nu)?)))
        .collect::<Result<_>>()?;
    Ok(Evaluation {
        u: s.u.clone(),
        v: s.v.clone(),
        values,
        p_convention: false,
    })
}
