//! Root systems built from (generalized) Cartan matrices.
//!
//! Pairing convention: `a[i][j] = <alpha_j, alpha_i^vee>`, so the simple
//! reflection acts by `s_i(alpha_j) = alpha_j - a[i][j] * alpha_i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::RootPolynomial;

/// Default cap on the number of roots produced by reflection closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!(
                    "row {} has {} entries, expected {rank}",
                    i + 1,
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry a[{0}][{0}] = {1}, expected 2",
                    i + 1,
                    row[i]
                )));
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry a[{}][{}] = {} is positive",
                        i + 1,
                        j + 1,
                        entries[i][j]
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a[{0}][{1}] and a[{1}][{0}] must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CartanMatrix { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Inverse over the rationals by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Vec<Vec<BigRational>>> {
        let n = self.rank;
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self.entries[i].iter().map(|&x| q(x)).collect();
                row.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::SingularCartan)?;
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Built-in types: `A<n>`, `B<n>`, `C<n>`, `D<n>`, `G2`, `F4`, `AffineA1`.
    pub fn builtin(name: &str) -> Result<(Self, Kind)> {
        let bad = || Error::InvalidCartan(format!("unknown root system type {name:?}"));
        if name == "AffineA1" {
            return Ok((CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]])?, Kind::General));
        }
        if name == "G2" {
            return Ok((CartanMatrix::new(vec![vec![2, -3], vec![-1, 2]])?, Kind::Finite));
        }
        if name == "F4" {
            let m = vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
            return Ok((CartanMatrix::new(m)?, Kind::Finite));
        }
        let (family, n) = name.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        let min = match family {
            "A" => 1,
            "B" | "C" => 2,
            "D" => 4,
            _ => return Err(bad()),
        };
        if n < min {
            return Err(bad());
        }
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        match family {
            // alpha_n short
            "B" => m[n - 1][n - 2] = -2,
            // alpha_n long
            "C" => m[n - 2][n - 1] = -2,
            "D" => {
                m[n - 2][n - 1] = 0;
                m[n - 1][n - 2] = 0;
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
            }
            _ => {}
        }
        Ok((CartanMatrix::new(m)?, Kind::Finite))
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Finite,
    General,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Finite => "finite",
            Kind::General => "general",
        }
    }
}

/// Vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub coords: Vec<BigRational>,
}

impl RootVector {
    pub fn from_integers(coords: &[i64]) -> Self {
        RootVector {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative()) && self.coords.iter().any(|c| c.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|c| !c.is_positive()) && self.coords.iter().any(|c| c.is_negative())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// The linear polynomial with these coordinates, when integral.
    pub fn to_polynomial(&self) -> Option<RootPolynomial> {
        self.to_integers().map(|c| RootPolynomial::linear(&c))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if abs.is_one() {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "{abs}*a{}", i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    name: String,
    cartan: CartanMatrix,
    kind: Kind,
    positive_roots: Option<Vec<Vec<i64>>>,
    fundamental_weights: Option<Vec<RootVector>>,
}

impl RootSystem {
    pub fn new(name: impl Into<String>, cartan: CartanMatrix, kind: Kind) -> Result<Self> {
        Self::with_cap(name, cartan, kind, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_cap(
        name: impl Into<String>,
        cartan: CartanMatrix,
        kind: Kind,
        cap: usize,
    ) -> Result<Self> {
        let (positive_roots, fundamental_weights) = match kind {
            Kind::General => (None, None),
            Kind::Finite => {
                let roots = reflection_closure(&cartan, cap)?;
                let inv = cartan.inverse()?;
                let n = cartan.rank();
                // omega_j is column j of the inverse Cartan matrix
                let weights = (0..n)
                    .map(|j| RootVector {
                        coords: (0..n).map(|k| inv[k][j].clone()).collect(),
                    })
                    .collect();
                (Some(roots), Some(weights))
            }
        };
        Ok(RootSystem {
            name: name.into(),
            cartan,
            kind,
            positive_roots,
            fundamental_weights,
        })
    }

    /// A built-in type by name; see [`CartanMatrix::builtin`].
    pub fn builtin(name: &str) -> Result<Self> {
        let (cartan, kind) = CartanMatrix::builtin(name)?;
        Self::new(name, cartan, kind)
    }

    /// Classifies the matrix by attempting finite-type closure.
    pub fn detect(name: impl Into<String>, cartan: CartanMatrix) -> Result<Self> {
        let name = name.into();
        match Self::new(name.clone(), cartan.clone(), Kind::Finite) {
            Err(Error::ClosureOverflow { .. }) | Err(Error::SingularCartan) => {
                Self::new(name, cartan, Kind::General)
            }
            other => other,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_finite(&self) -> bool {
        self.kind == Kind::Finite
    }

    /// Positive roots in simple-root coordinates (finite kind only).
    pub fn positive_roots(&self) -> Option<Vec<RootVector>> {
        self.positive_roots
            .as_ref()
            .map(|rs| rs.iter().map(|r| RootVector::from_integers(r)).collect())
    }

    pub(crate) fn positive_roots_int(&self) -> Option<&[Vec<i64>]> {
        self.positive_roots.as_deref()
    }

    pub fn fundamental_weights(&self) -> Option<&[RootVector]> {
        self.fundamental_weights.as_deref()
    }

    /// `<v, alpha_i^vee>` for `v` in simple-root coordinates.
    pub fn coroot_pairing(&self, v: &RootVector, i: usize) -> BigRational {
        v.coords
            .iter()
            .zip(&self.cartan.entries[i])
            .map(|(c, &a)| c * BigInt::from(a))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    pub fn reflect(&self, i: usize, v: &RootVector) -> RootVector {
        let mut out = v.clone();
        out.coords[i] -= self.coroot_pairing(v, i);
        out
    }

    #[cfg(test)]
    pub(crate) fn reflect_int(&self, i: usize, v: &mut [i64]) {
        let pairing: i64 = v.iter().zip(&self.cartan.entries[i]).map(|(c, a)| c * a).sum();
        v[i] -= pairing;
    }
}

/// Positive roots generated from the simple roots under simple reflections.
fn reflection_closure(cartan: &CartanMatrix, cap: usize) -> Result<Vec<Vec<i64>>> {
    let n = cartan.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = r.iter().zip(&cartan.entries[i]).map(|(c, a)| c * a).sum();
            let mut s = r.clone();
            s[i] -= pairing;
            if !seen.contains(&s) {
                if seen.len() >= cap {
                    return Err(Error::ClosureOverflow { cap });
                }
                seen.insert(s.clone());
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(pos)
}
