//! Exact equivariant Schubert calculus on flag varieties of finite-type and
//! length-truncated Kac-Moody root systems.
//!
//! The pipeline is: build a [`RootSystem`] from a Cartan matrix, enumerate
//! the Weyl group up to a length bound, tabulate fixed-point restrictions
//! `xi^w(v)` ([`localize`]), then solve for the structure constants
//! `a^w_{uv}` ([`structconst`]) and certify their signs.
//!
//! All arithmetic is exact: arbitrary-precision integer coefficients and
//! rational weight coordinates.

pub mod error;
pub mod json;
pub mod localize;
pub mod poly;
pub mod rootsys;
pub mod structconst;
pub mod weyl;

pub use error::{Error, Result};
pub use localize::{
    billey_restrict, billey_restrict_with_word, restriction_table, table_on_range, Convention,
    RestrictionTable,
};
pub use poly::{AlphaSign, Monomial, RootPolynomial};
pub use rootsys::{CartanMatrix, Kind, RootSystem, RootVector};
pub use structconst::{
    billey_evaluate, opposite_constants, opposite_restriction, positivity_certificate,
    structure_constants, verify_product_identity, y_structure_constants, Basis, Certificate,
    CertificateEntry, Evaluation, ProductCheck, StructureTable,
};
pub use weyl::{parse_word, WeylElement, WeylRange};

/// Engine version recorded in cache headers.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
