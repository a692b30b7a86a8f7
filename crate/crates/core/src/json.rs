//! JSON wire formats.
//!
//! Coefficients travel as decimal strings, words as arrays of 1-based
//! letters, and polynomial terms in descending graded-lex order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::localize::RestrictionTable;
use crate::poly::RootPolynomial;
use crate::rootsys::CartanMatrix;
use crate::structconst::{Certificate, StructureTable};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

impl From<&RootPolynomial> for PolynomialJson {
    fn from(p: &RootPolynomial) -> Self {
        PolynomialJson {
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self, nvars: usize) -> Result<RootPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        RootPolynomial::from_terms(nvars, terms)
    }
}

pub fn polynomial_json(p: &RootPolynomial) -> Value {
    serde_json::to_value(PolynomialJson::from(p)).expect("serializable")
}

pub fn element_json(w: &WeylElement) -> Value {
    json!({ "word": w.word_1based() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub rank: usize,
    pub entries: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

impl CartanJson {
    pub fn parse(text: &str) -> Result<Self> {
        let c: CartanJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidCartan(e.to_string()))?;
        if c.entries.len() != c.rank {
            return Err(Error::InvalidCartan(format!(
                "rank {} does not match {} rows",
                c.rank,
                c.entries.len()
            )));
        }
        Ok(c)
    }

    pub fn to_matrix(&self) -> Result<CartanMatrix> {
        CartanMatrix::new(self.entries.clone())
    }
}

/// Array of `{"w","v","value","convention"}` in table order.
pub fn restriction_table_json(t: &RestrictionTable) -> Value {
    Value::Array(
        t.entries()
            .map(|(w, v, p)| {
                json!({
                    "w": w.word_1based(),
                    "v": v.word_1based(),
                    "value": polynomial_json(p),
                    "convention": t.convention().as_str(),
                })
            })
            .collect(),
    )
}

pub fn certificate_json(c: &Certificate) -> Value {
    let monomials: Vec<Value> = c
        .entries
        .iter()
        .map(|e| {
            let terms: Vec<Value> = e
                .terms
                .iter()
                .map(|(m, k)| json!({ "exp": m.exponents(), "coeff": k.to_string() }))
                .collect();
            json!({
                "w": e.w.word_1based(),
                "terms": terms,
                "sign": e.sign.as_str(),
                "ok": e.ok,
            })
        })
        .collect();
    json!({ "verdict": c.verdict(), "monomials": monomials })
}

pub fn structure_table_json(s: &StructureTable, cert: &Certificate) -> Value {
    let values: Vec<Value> = s
        .values
        .iter()
        .map(|(w, p)| json!({ "w": w.word_1based(), "poly": polynomial_json(p) }))
        .collect();
    json!({
        "type": s.system,
        "basis": s.basis.as_str(),
        "u": s.u.word_1based(),
        "v": s.v.word_1based(),
        "values": values,
        "certificate": certificate_json(cert),
    })
}
