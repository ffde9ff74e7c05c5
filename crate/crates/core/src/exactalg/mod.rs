//! Exact scalar, polynomial, and truncated-power-series arithmetic.
//!
//! Everything is computed in `Q[r]` (rational-coefficient polynomials in the
//! family parameter `r`); there is no floating-point mode. Values are
//! immutable after construction and every operation is a pure function, so
//! they can be shared and sent across threads freely.

mod poly;
mod rat;
mod series;

pub use poly::ParamPoly;
pub use rat::{
    binomial, format_rat, is_negative, neg_one_pow, parse_rat, rat, rat_int, rat_pow, zero_pow,
    Int, Rat,
};
pub use series::{catalan_gf, Series};

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactAlgError {
    /// Polynomial division left a remainder; a claimed divisibility failed.
    #[error("polynomial division left a nonzero remainder")]
    NonZeroRemainder,
    /// A series denominator's constant term is not a nonzero rational.
    #[error("series denominator constant term is not a rational unit")]
    NonUnitConstantTerm,
    /// Composition inner series has a nonzero constant term.
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    /// Reversion (or a shift) requires vanishing low-order terms and a
    /// monic linear term.
    #[error("series low-order terms unsuitable for the requested operation")]
    BadLowOrderTerms,
    /// Square root requires constant term 1.
    #[error("series constant term must be 1")]
    BadConstantTerm,
    /// A string is not an exact rational literal.
    #[error("not an exact rational literal: {0:?}")]
    BadRationalLiteral(String),
}
