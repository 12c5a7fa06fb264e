//! Degree-two factors of `f(X) - g(Y)` over the rationals and finite fields.

pub mod bipoly;
pub mod classify;
pub mod error;
pub mod field;
pub mod oracle;
pub mod parse;
pub mod pgl2;
pub mod print;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{AnyField, Fe, Field, FiniteField, Rationals};

pub type QPoly = unipoly::UniPoly<Rationals>;
pub type FqPoly = unipoly::UniPoly<FiniteField>;
pub type QBiPoly = bipoly::BiPoly<Rationals>;
pub type FqBiPoly = bipoly::BiPoly<FiniteField>;
