//! Exact-arithmetic Riordan-array algebra and the restricted
//! Chebyshev-Boubaker orthogonal polynomial family.
//!
//! The crate computes over `Q[r]` (dense rational-coefficient polynomials in
//! the family parameter `r`) with truncated formal power series, and ships a
//! registry of reference identities (matrix truncations, moment sequences,
//! Hankel transforms, continued fractions, and OEIS prefixes) that can be
//! machine-verified exactly via [`fixtures::verify_all`].
//!
//! Modules:
//! - [`exactalg`]: rationals, `Q[r]` polynomials, truncated power series.
//! - [`riordan`]: Riordan pairs, the group law, production matrices.
//! - [`hankel`]: Hankel determinants/transforms, J- and S-fractions,
//!   Chebyshev polynomials of the second kind.
//! - [`rcb`]: the polynomial family itself and all of its derived data.
//! - [`fixtures`]: embedded reference data keyed by claim id.
//! - [`report`]: the pass/fail report schema shared by the checks.

pub mod exactalg;
pub mod fixtures;
pub mod hankel;
pub mod rcb;
pub mod report;
pub mod riordan;
