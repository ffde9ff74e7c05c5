//! Riordan arrays: the group law, inverses, A/Z-sequences, production
//! matrices, the fundamental-theorem action, and row sums.
//!
//! A proper Riordan array is a pair of series (g, f) with g(0) = 1, f(0) = 0
//! and \[x^1\]f = 1; its matrix has entries T(n,k) = \[x^n\] g(x) f(x)^k.

mod matrix;
mod seqvec;

pub use matrix::TriMatrix;
pub use seqvec::SeqVec;

use crate::exactalg::{ExactAlgError, ParamPoly, Series};

/// Errors from Riordan-array operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RiordanError {
    /// The defining pair is not proper: g(0) = 1, f(0) = 0, [x^1]f = 1.
    #[error("series pair is not a proper Riordan array")]
    NotProper,
    /// A requested index or size exceeds the truncation order.
    #[error("requested index {requested} exceeds truncation order {order}")]
    OutOfOrder { requested: usize, order: usize },
    /// Triangular inversion requires a lower-triangular matrix.
    #[error("matrix is not lower triangular")]
    NotLowerTriangular,
    /// Triangular inversion met a diagonal entry that is not a rational unit.
    #[error("diagonal entry at row {row} is not a rational unit")]
    NonUnitDiagonal { row: usize },
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}

/// A proper Riordan array, represented by its defining series pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanPair {
    g: Series,
    f: Series,
}

impl RiordanPair {
    /// Build a proper Riordan array; both series are truncated to the
    /// shared order.
    pub fn new(g: Series, f: Series) -> Result<Self, RiordanError> {
        let order = g.order().min(f.order());
        if order < 2 {
            return Err(RiordanError::NotProper);
        }
        let g = g.truncate(order);
        let f = f.truncate(order);
        if !g.coeff(0).is_one() || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
            return Err(RiordanError::NotProper);
        }
        Ok(RiordanPair { g, f })
    }

    /// The identity element (1, x).
    pub fn identity(order: usize) -> Self {
        RiordanPair::new(Series::one(order), Series::x(order)).expect("identity pair is proper")
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// Matrix entry T(n,k) = \[x^n\] g f^k.
    pub fn entry(&self, n: usize, k: usize) -> Result<ParamPoly, RiordanError> {
        if n >= self.order() {
            return Err(RiordanError::OutOfOrder {
                requested: n,
                order: self.order(),
            });
        }
        if k > n {
            return Ok(ParamPoly::zero());
        }
        let mut col = self.g.clone();
        for _ in 0..k {
            col = &col * &self.f;
        }
        Ok(col.coeff(n).clone())
    }

    /// Dense lower-triangular truncation with `n_rows` rows.
    pub fn to_matrix(&self, n_rows: usize) -> Result<TriMatrix, RiordanError> {
        if n_rows > self.order() {
            return Err(RiordanError::OutOfOrder {
                requested: n_rows,
                order: self.order(),
            });
        }
        let mut cols: Vec<Series> = Vec::with_capacity(n_rows);
        let mut col = self.g.truncate(n_rows);
        for _ in 0..n_rows {
            cols.push(col.clone());
            col = &col * &self.f.truncate(n_rows);
        }
        let rows = (0..n_rows)
            .map(|n| (0..=n).map(|k| cols[k].coeff(n).clone()).collect())
            .collect();
        Ok(TriMatrix::from_rows(rows))
    }

    /// Riordan group law: (g1, f1) * (g2, f2) = (g1 * g2(f1), f2(f1)).
    ///
    /// The matrix of the product is the product of the matrices.
    pub fn multiply(&self, other: &RiordanPair) -> RiordanPair {
        let g = &self.g * &other.g.compose(&self.f).expect("f has zero constant term");
        let f = other.f.compose(&self.f).expect("f has zero constant term");
        RiordanPair::new(g, f).expect("product of proper arrays is proper")
    }

    /// Group inverse: (1/g(fbar), fbar) with fbar the reversion of f.
    pub fn inverse(&self) -> RiordanPair {
        let fbar = self.f.revert().expect("proper f reverts");
        let g_at = self.g.compose(&fbar).expect("fbar has zero constant term");
        let g = g_at.inverse().expect("g(fbar) has constant term 1");
        RiordanPair::new(g, fbar).expect("inverse of proper array is proper")
    }

    /// Fundamental-theorem action on a power series: g * a(f).
    ///
    /// Equals the matrix-vector product of the truncated matrix with the
    /// coefficient column of `a`.
    pub fn ftra_apply(&self, a: &Series) -> Series {
        ftra(&self.g, &self.f, a)
    }

    /// A-sequence: the coefficients of A(x) = x / fbar(x).
    ///
    /// Known to order - 1.
    pub fn a_sequence(&self, n_terms: usize) -> Result<SeqVec, RiordanError> {
        let fbar = self.f.revert()?;
        // x / fbar = 1 / (fbar / x); fbar/x has constant term 1.
        let a = fbar.shift_down(1)?.inverse()?;
        if n_terms > a.order() {
            return Err(RiordanError::OutOfOrder {
                requested: n_terms,
                order: a.order(),
            });
        }
        Ok(a.coeffs()[..n_terms].iter().cloned().collect())
    }

    /// Z-sequence: the coefficients of Z(x) = (1 - 1/g(fbar)) / fbar.
    ///
    /// Known to order - 1.
    pub fn z_sequence(&self, n_terms: usize) -> Result<SeqVec, RiordanError> {
        let fbar = self.f.revert()?;
        let g_at = self.g.compose(&fbar)?;
        let num = &Series::one(self.order()) - &g_at.inverse()?;
        // num vanishes at 0, fbar = x(1 + ...): cancel one power of x.
        let z = num.shift_down(1)?.divide(&fbar.shift_down(1)?)?;
        if n_terms > z.order() {
            return Err(RiordanError::OutOfOrder {
                requested: n_terms,
                order: z.order(),
            });
        }
        Ok(z.coeffs()[..n_terms].iter().cloned().collect())
    }

    /// Production matrix P = D^{-1} * Dbar, where Dbar drops the top row.
    ///
    /// Computed by exact triangular inversion of the truncated matrix, not
    /// through the series inverse, so it exists for any invertible
    /// triangular truncation.
    pub fn production_matrix(&self, size: usize) -> Result<TriMatrix, RiordanError> {
        if size + 1 > self.order() {
            return Err(RiordanError::OutOfOrder {
                requested: size + 1,
                order: self.order(),
            });
        }
        let t = self.to_matrix(size + 1)?;
        let t_inv = t.lower_triangular_inverse()?;
        let rows = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let mut acc = ParamPoly::zero();
                        for k in j.saturating_sub(1)..=i {
                            let a = t_inv.get(i, k);
                            if a.is_zero() {
                                continue;
                            }
                            let b = t.get(k + 1, j);
                            if b.is_zero() {
                                continue;
                            }
                            acc = &acc + &(&a * &b);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(TriMatrix::from_rows(rows))
    }

    /// Row sums of the truncated matrix.
    pub fn row_sums(&self, n_terms: usize) -> Result<SeqVec, RiordanError> {
        let m = self.to_matrix(n_terms)?;
        Ok(m.rows()
            .iter()
            .map(|row| row.iter().fold(ParamPoly::zero(), |acc, e| &acc + e))
            .collect())
    }

    /// Check the two defining recurrences entrywise on an `n_rows`
    /// truncation: the interior rows against the A-sequence and column 0
    /// against the Z-sequence.
    pub fn check_az_recurrences(&self, n_rows: usize) -> Result<RecurrenceReport, RiordanError> {
        let m = self.to_matrix(n_rows)?;
        let a = self.a_sequence(n_rows.min(self.order() - 1))?;
        let z = self.z_sequence(n_rows.min(self.order() - 1))?;
        Ok(check_az_on_matrix(&m, &a, &z))
    }
}

/// Fundamental-theorem action g * a(f) for any f with f(0) = 0.
///
/// This free form also covers pairs that are Riordan arrays in the wider
/// sense ([x^1]f not 1), which appear in several moment identities.
pub fn ftra(g: &Series, f: &Series, a: &Series) -> Series {
    g * &a.compose(f).expect("inner series must vanish at 0")
}

/// Entrywise A/Z recurrence check against explicit sequences.
///
/// Violations are data, not errors: the report carries the first location
/// where a recurrence fails.
pub fn check_az_on_matrix(m: &TriMatrix, a: &SeqVec, z: &SeqVec) -> RecurrenceReport {
    let n_rows = m.n_rows();
    for n in 0..n_rows.saturating_sub(1) {
        // column 0: d[n+1][0] = sum_j z_j d[n][j]
        let mut acc = ParamPoly::zero();
        for (j, zj) in z.iter().enumerate().take(n + 1) {
            acc = &acc + &(zj * &m.get(n, j));
        }
        if acc != m.get(n + 1, 0) {
            return RecurrenceReport::violation(n + 1, 0, m.get(n + 1, 0), acc);
        }
        // interior: d[n+1][k+1] = sum_j a_j d[n][k+j]
        for k in 0..=n {
            let mut acc = ParamPoly::zero();
            for (j, aj) in a.iter().enumerate().take(n + 1 - k) {
                acc = &acc + &(aj * &m.get(n, k + j));
            }
            if acc != m.get(n + 1, k + 1) {
                return RecurrenceReport::violation(n + 1, k + 1, m.get(n + 1, k + 1), acc);
            }
        }
    }
    RecurrenceReport::success(n_rows)
}

/// Outcome of an entrywise recurrence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub ok: bool,
    pub rows_checked: usize,
    pub first_violation: Option<RecurrenceViolation>,
}

/// First location where a recurrence failed, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceViolation {
    pub row: usize,
    pub col: usize,
    pub lhs: ParamPoly,
    pub rhs: ParamPoly,
}

impl RecurrenceReport {
    fn success(rows_checked: usize) -> Self {
        RecurrenceReport {
            ok: true,
            rows_checked,
            first_violation: None,
        }
    }

    fn violation(row: usize, col: usize, lhs: ParamPoly, rhs: ParamPoly) -> Self {
        RecurrenceReport {
            ok: false,
            rows_checked: row,
            first_violation: Some(RecurrenceViolation { row, col, lhs, rhs }),
        }
    }
}
