//! Hankel matrices and transforms over exact polynomial entries, plus the
//! continued-fraction machinery that characterizes them.
//!
//! The determinant engine is fraction-free (Bareiss) elimination over the
//! integral domain `Q[r]`, with deterministic first-nonzero pivoting, so the
//! same input always produces the same exact elimination path.

mod cf;
mod chebyshev;

pub use cf::{
    aerated_jfraction_via_unaerate, jfraction_extract, jfraction_to_gf, sfraction_extract,
    sfraction_to_gf, JFraction, SFraction,
};
pub use chebyshev::{chebyshev_u, chebyshev_u_at, chebyshev_u_half};

use crate::exactalg::{ExactAlgError, ParamPoly};
use crate::riordan::{SeqVec, TriMatrix};

/// Errors from Hankel and continued-fraction computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HankelError {
    /// The source sequence is too short for the requested transform depth.
    #[error("sequence supplies {got} terms but {needed} are needed")]
    InsufficientTerms { needed: usize, got: usize },
    /// Determinants require square matrices.
    #[error("matrix is not square")]
    NotSquare,
    /// Continued-fraction extraction requires a generating function with
    /// constant term 1.
    #[error("generating function must have constant term 1")]
    ConstantTermNotOne,
    /// The truncation order cannot support the requested depth.
    #[error("order {order} too small for extraction depth {depth}")]
    OrderTooSmall { order: usize, depth: usize },
    /// A zero Hankel block: the J-fraction stops existing at this depth.
    /// The coefficients extracted so far are preserved.
    #[error("zero Hankel block at depth {depth}")]
    ZeroHankelBlock { depth: usize, partial: JFraction },
    /// A zero pivot in S-fraction extraction, with the partial data.
    #[error("zero pivot at depth {depth}")]
    ZeroPivot { depth: usize, partial: SFraction },
    /// A continued-fraction coefficient left `Q[r]`; symbolic extraction
    /// cannot continue (rerun at a numeric `r`).
    #[error("continued-fraction coefficient leaves Q[r] at depth {depth}")]
    NonPolynomialCoefficient { depth: usize },
    /// Odd-indexed terms must vanish to strip aeration.
    #[error("sequence is not aerated: odd-index term {index} is nonzero")]
    NotAerated { index: usize },
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}

/// The (n+1) x (n+1) Hankel matrix with entry (i, j) = s[i + j].
pub fn hankel_matrix(s: &SeqVec, n: usize) -> Result<TriMatrix, HankelError> {
    let needed = 2 * n + 1;
    if s.len() < needed {
        return Err(HankelError::InsufficientTerms {
            needed,
            got: s.len(),
        });
    }
    let rows = (0..=n)
        .map(|i| (0..=n).map(|j| s.term(i + j).clone()).collect())
        .collect();
    Ok(TriMatrix::from_rows(rows))
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Pivoting picks the first row with a nonzero entry in the current column;
/// every interior division is exact in `Q[r]` by the Bareiss identity.
pub fn det_fraction_free(m: &TriMatrix) -> Result<ParamPoly, HankelError> {
    if !m.is_square() {
        return Err(HankelError::NotSquare);
    }
    let n = m.n_rows();
    if n == 0 {
        return Ok(ParamPoly::one());
    }
    let mut w: Vec<Vec<ParamPoly>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect();
    let mut sign_flip = false;
    let mut prev_pivot = ParamPoly::one();
    for k in 0..n - 1 {
        // deterministic pivot: first nonzero entry in column k at or below row k
        let pivot_row = match (k..n).find(|&i| !w[i][k].is_zero()) {
            Some(i) => i,
            None => return Ok(ParamPoly::zero()),
        };
        if pivot_row != k {
            w.swap(k, pivot_row);
            sign_flip = !sign_flip;
        }
        let pivot = w[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&pivot * &w[i][j]) - &(&w[i][k] * &w[k][j]);
                w[i][j] = t
                    .div_exact(&prev_pivot)
                    .expect("Bareiss division is exact over an integral domain");
            }
            w[i][k] = ParamPoly::zero();
        }
        prev_pivot = pivot;
    }
    let det = w[n - 1][n - 1].clone();
    Ok(if sign_flip { -&det } else { det })
}

/// Hankel transform: term n is the determinant of the order-n Hankel matrix.
pub fn hankel_transform(s: &SeqVec, max_n: usize) -> Result<SeqVec, HankelError> {
    (0..=max_n)
        .map(|n| det_fraction_free(&hankel_matrix(s, n)?))
        .collect()
}

/// A source sequence validated against a transform depth: the sequence
/// must supply `2 * max_n + 1` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSpec {
    source: SeqVec,
    max_n: usize,
}

impl HankelSpec {
    pub fn new(source: SeqVec, max_n: usize) -> Result<Self, HankelError> {
        let needed = 2 * max_n + 1;
        if source.len() < needed {
            return Err(HankelError::InsufficientTerms {
                needed,
                got: source.len(),
            });
        }
        Ok(HankelSpec { source, max_n })
    }

    pub fn source(&self) -> &SeqVec {
        &self.source
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// The (n+1)x(n+1) Hankel matrix for any n up to the validated depth.
    pub fn matrix(&self, n: usize) -> TriMatrix {
        assert!(n <= self.max_n);
        hankel_matrix(&self.source, n).expect("validated at construction")
    }

    /// The full transform h_0..h_{max_n}.
    pub fn transform(&self) -> SeqVec {
        hankel_transform(&self.source, self.max_n).expect("validated at construction")
    }
}

/// Hankel transform from J-fraction data alone:
/// h_n = prod_{k=1..n} b_k^(n+1-k).
///
/// Must agree with the determinant route wherever the J-fraction exists.
pub fn hankel_from_jfraction(cf: &JFraction, max_n: usize) -> Result<SeqVec, HankelError> {
    if cf.b.len() < max_n {
        return Err(HankelError::InsufficientTerms {
            needed: max_n,
            got: cf.b.len(),
        });
    }
    let mut out = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut h = ParamPoly::one();
        for k in 1..=n {
            let e = (n + 1 - k) as u32;
            h = &h * &cf.b[k - 1].pow(e);
        }
        out.push(h);
    }
    Ok(SeqVec::new(out))
}

/// Interleave zeros: a_0, 0, a_1, 0, a_2, ...
pub fn aerate(s: &SeqVec) -> SeqVec {
    let mut terms = Vec::with_capacity(s.len() * 2);
    for t in s.iter() {
        terms.push(t.clone());
        terms.push(ParamPoly::zero());
    }
    SeqVec::new(terms)
}

/// Strip interleaved zeros; errors if any odd-index term is nonzero.
pub fn unaerate(s: &SeqVec) -> Result<SeqVec, HankelError> {
    for (i, t) in s.iter().enumerate() {
        if i % 2 == 1 && !t.is_zero() {
            return Err(HankelError::NotAerated { index: i });
        }
    }
    Ok(SeqVec::new(s.iter().step_by(2).cloned().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat_int, ParamPoly};

    fn p(c: &[i64]) -> ParamPoly {
        ParamPoly::from_ints(c)
    }

    /// Cofactor-expansion determinant oracle for small matrices.
    fn det_cofactor(m: &TriMatrix) -> ParamPoly {
        let n = m.n_rows();
        if n == 0 {
            return ParamPoly::one();
        }
        if n == 1 {
            return m.get(0, 0);
        }
        let mut acc = ParamPoly::zero();
        for j in 0..n {
            let a = m.get(0, j);
            if a.is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<ParamPoly>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m.get(i, c)).collect())
                .collect();
            let minor = det_cofactor(&TriMatrix::from_rows(minor_rows));
            let term = &a * &minor;
            acc = if j % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    #[test]
    fn hankel_matrix_basics() {
        // moment prefix 1, 0, 1-r, 0 at n=1
        let s = SeqVec::new(vec![p(&[1]), p(&[0]), p(&[1, -1])]);
        let m = hankel_matrix(&s, 1).unwrap();
        assert_eq!(m.get(0, 0), p(&[1]));
        assert_eq!(m.get(0, 1), ParamPoly::zero());
        assert_eq!(m.get(1, 1), p(&[1, -1]));
        // n = 0
        let m0 = hankel_matrix(&s, 0).unwrap();
        assert_eq!(m0.n_rows(), 1);
        assert_eq!(m0.get(0, 0), p(&[1]));
        // insufficient terms
        assert!(matches!(
            hankel_matrix(&s, 2),
            Err(HankelError::InsufficientTerms { needed: 5, got: 3 })
        ));
    }

    #[test]
    fn hankel_matrix_catalan() {
        let cat = SeqVec::from_ints(&[1, 1, 2, 5, 14]);
        let m = hankel_matrix(&cat, 2).unwrap();
        let expect = TriMatrix::from_rows(vec![
            vec![p(&[1]), p(&[1]), p(&[2])],
            vec![p(&[1]), p(&[2]), p(&[5])],
            vec![p(&[2]), p(&[5]), p(&[14])],
        ]);
        assert_eq!(m, expect);
    }

    #[test]
    fn det_small_cases() {
        let m = TriMatrix::from_rows(vec![vec![p(&[1]), p(&[0])], vec![p(&[0]), p(&[1, -1])]]);
        assert_eq!(det_fraction_free(&m).unwrap(), p(&[1, -1]));
        assert_eq!(
            det_fraction_free(&TriMatrix::identity(5)).unwrap(),
            ParamPoly::one()
        );
        // Catalan Hankel determinant is 1
        let cat = SeqVec::from_ints(&[1, 1, 2, 5, 14, 42, 132]);
        let m3 = hankel_matrix(&cat, 3).unwrap();
        assert_eq!(det_fraction_free(&m3).unwrap(), ParamPoly::one());
        assert_eq!(det_cofactor(&m3), ParamPoly::one());
    }

    #[test]
    fn det_matches_cofactor_on_polynomial_entries() {
        // deterministic pseudo-random small polynomial entries
        let mut state = 1u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for size in 1..=4 {
            for _ in 0..8 {
                let rows: Vec<Vec<ParamPoly>> = (0..size)
                    .map(|_| (0..size).map(|_| p(&[next(), next()])).collect())
                    .collect();
                let m = TriMatrix::from_rows(rows);
                assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn det_with_zero_pivots_needs_row_swap() {
        // Hankel matrix of 0, 1, 0, -2, 0: leading zeros force pivoting
        let s = SeqVec::from_ints(&[0, 1, 0, -2, 0]);
        let m = hankel_matrix(&s, 2).unwrap();
        assert_eq!(det_fraction_free(&m).unwrap(), det_cofactor(&m));
    }

    #[test]
    fn transform_of_constant_sequence_is_rank_one() {
        let ones = SeqVec::from_ints(&[1, 1, 1, 1, 1, 1, 1]);
        let h = hankel_transform(&ones, 3).unwrap();
        assert_eq!(h, SeqVec::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn spec_validates_once_then_computes() {
        let ones = SeqVec::from_ints(&[1, 1, 1, 1, 1, 1, 1]);
        let spec = HankelSpec::new(ones.clone(), 3).unwrap();
        assert_eq!(spec.transform(), SeqVec::from_ints(&[1, 0, 0, 0]));
        assert_eq!(
            spec.matrix(1),
            TriMatrix::from_rows(vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[1])],])
        );
        assert!(matches!(
            HankelSpec::new(ones, 4),
            Err(HankelError::InsufficientTerms { needed: 9, got: 7 })
        ));
    }

    #[test]
    fn transform_of_moment_prefix_is_power_of_one_minus_r() {
        // 1, 0, 1-r, 0, (1-r)(2-r), 0, ... gives (1-r)^n
        let mu = SeqVec::new(vec![
            p(&[1]),
            p(&[0]),
            p(&[1, -1]),
            p(&[0]),
            p(&[2, -3, 1]),
            p(&[0]),
            p(&[5, -9, 5, -1]),
        ]);
        let h = hankel_transform(&mu, 3).unwrap();
        assert_eq!(h.term(0), &p(&[1]));
        assert_eq!(h.term(1), &p(&[1, -1]));
        assert_eq!(h.term(2), &(&p(&[1, -1]) * &p(&[1, -1])));
        assert_eq!(h.term(3), &(&(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, -1])));
    }

    #[test]
    fn aerate_unaerate_round_trip() {
        let s = SeqVec::new(vec![p(&[1]), p(&[1, -1]), p(&[2, -3, 1])]);
        let a = aerate(&s);
        assert_eq!(unaerate(&a).unwrap(), s);
        assert!(matches!(
            unaerate(&SeqVec::from_ints(&[1, 2, 3])),
            Err(HankelError::NotAerated { index: 1 })
        ));
    }

    #[test]
    fn unaerate_moment_prefix() {
        let mu = SeqVec::new(vec![p(&[1]), p(&[0]), p(&[1, -1]), p(&[0]), p(&[2, -3, 1])]);
        let u = unaerate(&mu).unwrap();
        assert_eq!(u, SeqVec::new(vec![p(&[1]), p(&[1, -1]), p(&[2, -3, 1])]));
    }

    #[test]
    fn product_formula_matches_determinants() {
        // random small integer b-lists: compare against the det route
        let bs = [
            vec![1i64, 1, 1, 1, 1],
            vec![2, -1, 3, 1, 2],
            vec![-1, 2, -2, 1, -3],
        ];
        for b in bs {
            let cf = JFraction {
                a: vec![ParamPoly::zero(); b.len()],
                b: b.iter().map(|&v| ParamPoly::from_int(v)).collect(),
            };
            let order = 2 * b.len() + 2;
            let gf = jfraction_to_gf(&cf, order);
            let s = SeqVec::new(gf.coeffs().to_vec());
            let via_det = hankel_transform(&s, 5).unwrap();
            let via_product = hankel_from_jfraction(&cf, 5).unwrap();
            assert_eq!(via_det, via_product, "b = {b:?}");
        }
        // all-ones b gives the all-ones transform
        let cf = JFraction {
            a: vec![ParamPoly::zero(); 4],
            b: vec![ParamPoly::one(); 4],
        };
        assert_eq!(
            hankel_from_jfraction(&cf, 4).unwrap(),
            SeqVec::from_ints(&[1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn moment_jfraction_product_gives_powers() {
        let cf = JFraction {
            a: vec![ParamPoly::zero(); 5],
            b: vec![p(&[1, -1]), p(&[1]), p(&[1]), p(&[1]), p(&[1])],
        };
        let h = hankel_from_jfraction(&cf, 4).unwrap();
        for n in 0..=4u32 {
            assert_eq!(h.term(n as usize), &p(&[1, -1]).pow(n));
        }
    }

    #[test]
    fn eval_r_specializes_transform() {
        let mu = SeqVec::new(vec![p(&[1]), p(&[0]), p(&[1, -1]), p(&[0]), p(&[2, -3, 1])]);
        let h = hankel_transform(&mu.eval_r(&rat_int(3)), 2).unwrap();
        assert_eq!(h, SeqVec::from_ints(&[1, -2, 4]));
    }
}
