//! Exact computations with level-1 modular forms.
//!
//! Forms are represented only through truncated q-expansions with rational
//! coefficients. On top of that the crate provides Miller bases, the
//! Rankin-Cohen bracket, Hecke operators and their characteristic
//! polynomials, irreducibility certificates over Q, and the dimension-driven
//! case analysis deciding when a bracket `[f, g]_n` with `f` an eigenform can
//! itself be an eigenform.

pub mod bracket;
pub mod caselaw;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod hecke;
pub mod spaces;

pub use error::{Error, Result};
