//! Dense matrices of `ParamPoly` entries.
//!
//! Rows may be ragged: lower-triangular content stores `n + 1` entries in row
//! `n`, while general (production, Hankel) matrices store fixed-width rows.
//! Missing entries read as zero, and equality is by logical content, so a
//! triangular truncation compares equal to the same matrix stored densely
//! with explicit zeros.

use std::fmt;

use crate::exactalg::ParamPoly;
use crate::exactalg::Rat;

use super::RiordanError;

/// Matrix of exact polynomial entries, row-major, possibly ragged.
#[derive(Clone, Debug, Eq)]
pub struct TriMatrix {
    rows: Vec<Vec<ParamPoly>>,
}

impl TriMatrix {
    pub fn from_rows(rows: Vec<Vec<ParamPoly>>) -> Self {
        TriMatrix { rows }
    }

    /// n x n identity.
    pub fn identity(n: usize) -> Self {
        TriMatrix {
            rows: (0..n)
                .map(|i| {
                    let mut row = vec![ParamPoly::zero(); i + 1];
                    row[i] = ParamPoly::one();
                    row
                })
                .collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Logical width: the longest stored row.
    pub fn width(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_square(&self) -> bool {
        self.n_rows() == self.width()
    }

    /// Entry (i, j); entries beyond the stored row read as zero.
    pub fn get(&self, i: usize, j: usize) -> ParamPoly {
        self.rows
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    pub fn rows(&self) -> &[Vec<ParamPoly>] {
        &self.rows
    }

    /// Matrix product (logical dimensions must chain).
    pub fn mat_mul(&self, other: &TriMatrix) -> TriMatrix {
        let n = self.n_rows();
        let inner = self.width().max(other.n_rows());
        let m = other.width();
        let rows = (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut acc = ParamPoly::zero();
                        for k in 0..inner {
                            let a = self.get(i, k);
                            if a.is_zero() {
                                continue;
                            }
                            let b = other.get(k, j);
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
        TriMatrix { rows }
    }

    /// Matrix-vector product over the logical width.
    pub fn mat_vec(&self, v: &[ParamPoly]) -> Vec<ParamPoly> {
        (0..self.n_rows())
            .map(|i| {
                let mut acc = ParamPoly::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if a.is_zero() || x.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&a * x);
                }
                acc
            })
            .collect()
    }

    /// Exact inverse of a lower-triangular matrix whose diagonal entries are
    /// nonzero rational constants (units of `Q[r]`).
    pub fn lower_triangular_inverse(&self) -> Result<TriMatrix, RiordanError> {
        let n = self.n_rows();
        for i in 0..n {
            for j in (i + 1)..self.rows[i].len() {
                if !self.rows[i][j].is_zero() {
                    return Err(RiordanError::NotLowerTriangular);
                }
            }
        }
        let mut inv: Vec<Vec<ParamPoly>> = Vec::with_capacity(n);
        let mut diag_inv: Vec<Rat> = Vec::with_capacity(n);
        for (i, _) in (0..n).enumerate() {
            let d = self.get(i, i);
            if !d.is_rational_unit() {
                return Err(RiordanError::NonUnitDiagonal { row: i });
            }
            diag_inv.push(Rat::from_integer(1.into()) / d.coeff(0));
            let mut row = vec![ParamPoly::zero(); i + 1];
            for j in 0..i {
                // X[i][j] = -(1/d_i) * sum_{k=j}^{i-1} L[i][k] X[k][j]
                let mut acc = ParamPoly::zero();
                for (k, inv_row) in inv.iter().enumerate().take(i).skip(j) {
                    let l = self.get(i, k);
                    if l.is_zero() || inv_row[j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&l * &inv_row[j]);
                }
                row[j] = (-&acc).scale(&diag_inv[i]);
            }
            row[i] = ParamPoly::constant(diag_inv[i].clone());
            inv.push(row);
        }
        Ok(TriMatrix { rows: inv })
    }

    /// Reverse each row in place (coefficient-array reversal).
    pub fn row_reversal(&self) -> TriMatrix {
        TriMatrix {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().rev().cloned().collect())
                .collect(),
        }
    }

    /// Evaluate every entry at a rational `r`-value.
    pub fn eval_r(&self, at: &Rat) -> TriMatrix {
        TriMatrix {
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|p| {
                            let v = p.eval(at);
                            if num_traits::Zero::is_zero(&v) {
                                ParamPoly::zero()
                            } else {
                                ParamPoly::constant(v)
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    /// Aligned plain-text rendering.
    pub fn render_text(&self) -> String {
        let width = self.width();
        let cells: Vec<Vec<String>> = (0..self.n_rows())
            .map(|i| (0..width).map(|j| self.get(i, j).render()).collect())
            .collect();
        let col_widths: Vec<usize> = (0..width)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&col_widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// JSON value: rows of polynomial coefficient arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|p| {
                                serde_json::Value::Array(
                                    p.coeff_strings()
                                        .into_iter()
                                        .map(serde_json::Value::String)
                                        .collect(),
                                )
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl PartialEq for TriMatrix {
    /// Logical equality: same dimensions, same entries with implied zeros.
    fn eq(&self, other: &Self) -> bool {
        if self.n_rows() != other.n_rows() || self.width() != other.width() {
            return false;
        }
        for i in 0..self.n_rows() {
            for j in 0..self.width() {
                if self.get(i, j) != other.get(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
