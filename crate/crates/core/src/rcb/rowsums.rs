//! Row sums of the moment matrix, their Hankel transform, the associated
//! Chebyshev-like polynomial normal form, and the recurrence claim for the
//! second orthogonal family.

use crate::exactalg::{binomial, neg_one_pow, ParamPoly, Rat, Series};
use crate::hankel::{chebyshev_u_at, hankel_transform, jfraction_extract, HankelError};
use crate::report::{Check, Report};
use crate::riordan::{ftra, RiordanPair, SeqVec, TriMatrix};

use super::moments::sqrt_one_minus_4x2;
use super::{moment_matrix, FamilyContext};

/// Row sum s_n by the closed summation:
/// sum_{k=0}^{floor(n/2)} C(n, floor((n-2k)/2)) (-1)^k r^k.
pub fn row_sum_sequence(ctx: &FamilyContext, count: usize) -> SeqVec {
    (0..count)
        .map(|n| {
            let n = n as i64;
            let coeffs: Vec<Rat> = (0..=(n / 2))
                .map(|k| Rat::from_integer(binomial(n, (n - 2 * k) / 2) * neg_one_pow(k)))
                .collect();
            let p = ParamPoly::from_rats(coeffs);
            match ctx.numeric_r() {
                None => p,
                Some(r) => {
                    let v = p.eval(r);
                    if num_traits::Zero::is_zero(&v) {
                        ParamPoly::zero()
                    } else {
                        ParamPoly::constant(v)
                    }
                }
            }
        })
        .collect()
}

/// Row-sum generating function through the moment matrix:
/// the fundamental-theorem image of 1/(1-x).
pub fn rowsum_gf(ctx: &FamilyContext) -> Series {
    moment_matrix(ctx).ftra_apply(&Series::geometric(ctx.order()))
}

/// Row-sum generating function through the proof identity:
/// ((1 + x c(x^2))/sqrt(1-4x^2)) * (1/(1 - r x)) o (1 - c(x^2)).
pub fn rowsum_gf_proof_route(ctx: &FamilyContext) -> Series {
    let order = ctx.order();
    let c2 = aerated_catalan(order); // c(x^2)
    let g = (&Series::one(order) + &c2.shift_up(1))
        .divide(&sqrt_one_minus_4x2(order))
        .expect("unit constant term");
    let f = &Series::one(order) - &c2; // vanishes at 0
    let a = Series::geometric_in(&ctx.r_poly(), order);
    ftra(&g, &f, &a)
}

/// c(x^2) as a series.
pub(crate) fn aerated_catalan(order: usize) -> Series {
    let c = crate::exactalg::catalan_gf(order);
    Series::from_fn(order, |n| {
        if n % 2 == 0 {
            c.coeff(n / 2).clone()
        } else {
            ParamPoly::zero()
        }
    })
}

/// Closed radical form of the row-sum generating function, as a
/// (numerator, denominator) pair:
///
/// num = sqrt(1-4x^2) (x(r-1) - r) + 2x^2(r-1) + x(r+1) - r
/// den = 2 (2x - 1) (x^2 (r-1)^2 + r)
///
/// The denominator constant -2r is not a unit of `Q[r]`; verify by
/// cross-multiplication or at numeric r.
pub fn rowsum_gf_closed(ctx: &FamilyContext) -> (Series, Series) {
    let order = ctx.order();
    let r = ctx.r_poly();
    let one = ParamPoly::one();
    let r_minus_1 = &r - &one;
    let w = sqrt_one_minus_4x2(order);
    // x(r-1) - r
    let lin = Series::from_polys_at(&[-&r, r_minus_1.clone()], order);
    let num =
        &(&w * &lin) + &Series::from_polys_at(&[-&r, &r + &one, (&r_minus_1 + &r_minus_1)], order);
    // 2(2x-1)(x^2 (r-1)^2 + r) = (4x - 2)(x^2 (r-1)^2 + r)
    let den = {
        let quad = Series::from_polys_at(
            &[r.clone(), ParamPoly::zero(), &r_minus_1 * &r_minus_1],
            order,
        );
        let lin2 = Series::from_ints_at(&[-2, 4], order);
        &lin2 * &quad
    };
    (num, den)
}

/// H-hat polynomials: the `Q[r]` normal form of the row-sum Hankel values,
/// defined by H_0 = 1, H_1 = 1 - r, H_{n+1} = (1-r) H_n - r^2 H_{n-1}.
///
/// At every rational r != 0 this equals r^n U_n((1/r - 1)/2); see
/// [`hpoly_closed_at`].
pub fn hpoly_sequence(ctx: &FamilyContext, count: usize) -> SeqVec {
    let one_minus_r = match ctx.numeric_r() {
        None => ParamPoly::from_ints(&[1, -1]),
        Some(r) => ParamPoly::constant(ParamPoly::from_ints(&[1, -1]).eval(r)),
    };
    let r_sq = match ctx.numeric_r() {
        None => ParamPoly::from_ints(&[0, 0, 1]),
        Some(r) => ParamPoly::constant(r * r),
    };
    let mut terms: Vec<ParamPoly> = Vec::with_capacity(count);
    for n in 0..count {
        let next = match n {
            0 => ParamPoly::one(),
            1 => one_minus_r.clone(),
            _ => &(&one_minus_r * &terms[n - 1]) - &(&r_sq * &terms[n - 2]),
        };
        terms.push(next);
    }
    SeqVec::new(terms)
}

/// Closed form r^n U_n((1/r - 1)/2) at a nonzero rational r.
pub fn hpoly_closed_at(r: &Rat, n: usize) -> Rat {
    assert!(!num_traits::Zero::is_zero(r), "closed form needs r != 0");
    let y = (Rat::from_integer(1.into()) / r - Rat::from_integer(1.into()))
        / Rat::from_integer(2.into());
    let mut acc = chebyshev_u_at(n, &y);
    for _ in 0..n {
        acc *= r;
    }
    acc
}

/// Hankel transform of the row sums (determinant route).
pub fn rowsum_hankel(ctx: &FamilyContext, max_n: usize) -> Result<SeqVec, HankelError> {
    hankel_transform(&row_sum_sequence(ctx, 2 * max_n + 1), max_n)
}

/// Coefficient array of the H-hat polynomials: row n holds the ascending
/// r-coefficients of H_n padded to n+1 entries.
pub fn hpoly_coefficient_array(rows: usize) -> TriMatrix {
    let h = hpoly_sequence(&FamilyContext::symbolic(4), rows);
    TriMatrix::from_rows(
        (0..rows)
            .map(|n| {
                (0..=n)
                    .map(|j| ParamPoly::constant(h.term(n).coeff(j)))
                    .collect()
            })
            .collect(),
    )
}

/// Row-by-row reversal of the H-hat coefficient array.
pub fn hpoly_reversal(rows: usize) -> TriMatrix {
    hpoly_coefficient_array(rows).row_reversal()
}

/// The Riordan pair (1/(1+x+x^2), x/(1+x+x^2)).
pub fn reversal_pair(order: usize) -> RiordanPair {
    let den = Series::from_ints_at(&[1, 1, 1], order);
    RiordanPair::new(
        den.inverse().expect("unit constant"),
        Series::x(order).divide(&den).expect("unit constant"),
    )
    .expect("proper")
}

/// The binomial pair (1/(1-x), x/(1-x)).
pub fn binomial_pair(order: usize) -> RiordanPair {
    let den = Series::from_ints_at(&[1, -1], order);
    RiordanPair::new(
        den.inverse().expect("unit constant"),
        Series::x(order).divide(&den).expect("unit constant"),
    )
    .expect("proper")
}

/// The modified-Chebyshev pair (1/(1+x^2), x/(1+x^2)).
pub fn chebyshev_pair(order: usize) -> RiordanPair {
    let den = Series::from_ints_at(&[1, 0, 1], order);
    RiordanPair::new(
        den.inverse().expect("unit constant"),
        Series::x(order).divide(&den).expect("unit constant"),
    )
    .expect("proper")
}

/// The pair ((1 + x c(x^2))/sqrt(1-4x^2), (c(x^2)-1)/x) whose entries are
/// C(n+k, floor((n-k)/2)).
pub fn proof_identity_pair(order: usize) -> RiordanPair {
    let c2 = aerated_catalan(order + 1);
    let g = (&Series::one(order + 1) + &c2.shift_up(1))
        .divide(&sqrt_one_minus_4x2(order + 1))
        .expect("unit constant")
        .truncate(order);
    let f = (&c2 - &Series::one(order + 1))
        .shift_down(1)
        .expect("c(x^2) - 1 vanishes at 0");
    RiordanPair::new(g, f).expect("proper")
}

/// Identity checks around the H-hat coefficient array: the reversal equals
/// the (1/(1+x+x^2), x/(1+x+x^2)) truncation, and the factorization of the
/// modified Chebyshev array through the binomial array holds.
///
/// The product identity ships in both equivalent arrangements:
/// reversal_pair * binomial = chebyshev and chebyshev * binomial^{-1} =
/// reversal_pair.
pub fn rowsum_coeffarray_identities(rows: usize, order: usize) -> Report {
    let mut report = Report::new();
    let reversal = hpoly_reversal(rows);
    let pair_matrix = reversal_pair(order)
        .to_matrix(rows)
        .expect("rows within order");
    report.push(if reversal == pair_matrix {
        Check::pass(
            "rowsum_hankel.reversal_is_riordan",
            "reversal of the H-hat coefficient array vs (1/(1+x+x^2), x/(1+x+x^2))",
        )
    } else {
        Check::fail(
            "rowsum_hankel.reversal_is_riordan",
            "reversal of the H-hat coefficient array vs (1/(1+x+x^2), x/(1+x+x^2))",
            format!("{reversal}"),
            format!("{pair_matrix}"),
        )
    });

    let a = reversal_pair(order);
    let b = binomial_pair(order);
    let cheb = chebyshev_pair(order);
    let prod = a.multiply(&b);
    let lhs = prod
        .to_matrix(rows.max(12).min(order))
        .expect("within order");
    let rhs = cheb
        .to_matrix(rows.max(12).min(order))
        .expect("within order");
    report.push(if lhs == rhs {
        Check::pass(
            "rowsum_hankel.factorization",
            "(1/(1+x+x^2), x/(1+x+x^2)) times the binomial array vs the modified Chebyshev array",
        )
    } else {
        Check::fail(
            "rowsum_hankel.factorization",
            "(1/(1+x+x^2), x/(1+x+x^2)) times the binomial array vs the modified Chebyshev array",
            format!("{lhs}"),
            format!("{rhs}"),
        )
    });

    let via_inverse = cheb.multiply(&b.inverse());
    let lhs2 = via_inverse
        .to_matrix(rows.max(12).min(order))
        .expect("within order");
    let rhs2 = a.to_matrix(rows.max(12).min(order)).expect("within order");
    report.push(if lhs2 == rhs2 {
        Check::pass(
            "rowsum_hankel.factorization_inverse_form",
            "modified Chebyshev array times the inverse binomial array vs (1/(1+x+x^2), x/(1+x+x^2))",
        )
    } else {
        Check::fail(
            "rowsum_hankel.factorization_inverse_form",
            "modified Chebyshev array times the inverse binomial array vs (1/(1+x+x^2), x/(1+x+x^2))",
            format!("{lhs2}"),
            format!("{rhs2}"),
        )
    });
    report
}

/// Claimed recurrence data for the second orthogonal family:
/// alpha_n = r^{2n+1} / (H_{n-1} H_n), beta_n = H_{n-1} H_{n+1} / H_n^2,
/// n = 1..depth, evaluated at a rational r with nonvanishing H-hat values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceData {
    pub alpha: Vec<Rat>,
    pub beta: Vec<Rat>,
}

/// Formula values at a numeric r (requires H-hat nonzero up to depth+1).
pub fn qpoly_formula_data(r: &Rat, depth: usize) -> Option<RecurrenceData> {
    let ctx = FamilyContext::numeric(r.clone(), 4);
    let h = hpoly_sequence(&ctx, depth + 2);
    let hv: Vec<Rat> = h.iter().map(|p| p.coeff(0)).collect();
    if hv.iter().take(depth + 2).any(num_traits::Zero::is_zero) {
        return None;
    }
    let mut alpha = Vec::with_capacity(depth);
    let mut beta = Vec::with_capacity(depth);
    for n in 1..=depth {
        let mut r_pow = Rat::from_integer(1.into());
        for _ in 0..(2 * n + 1) {
            r_pow *= r;
        }
        alpha.push(r_pow / (&hv[n - 1] * &hv[n]));
        beta.push(&hv[n - 1] * &hv[n + 1] / (&hv[n] * &hv[n]));
    }
    Some(RecurrenceData { alpha, beta })
}

/// One compared coefficient in the recurrence-claim check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpolyComparison {
    pub name: String,
    pub formula: Rat,
    pub extracted: Rat,
    pub agree: bool,
}

/// Outcome of the recurrence-claim check at one r value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpolyReport {
    pub r: Rat,
    pub requested_depth: usize,
    pub achieved_depth: usize,
    pub completed: bool,
    pub comparisons: Vec<QpolyComparison>,
    pub all_agree: bool,
    pub first_disagreement: Option<String>,
}

/// Test the claimed alpha/beta formulas against the J-fraction actually
/// extracted from the row-sum generating function at a numeric r.
///
/// The claim is tested, not assumed: the report records agreement or the
/// first disagreeing coefficient, with both values. A zero Hankel block
/// during extraction truncates the comparison at the achieved depth.
pub fn qpoly_recurrence_check(r: &Rat, depth: usize, order: usize) -> QpolyReport {
    let ctx = FamilyContext::numeric(r.clone(), order.max(2 * depth + 3));
    let gf = rowsum_gf(&ctx);
    let (a, b, achieved) = match jfraction_extract(&gf, depth) {
        Ok(cf) => {
            let d = cf.a.len();
            (cf.a, cf.b, d)
        }
        Err(HankelError::ZeroHankelBlock { depth: d, partial }) => (partial.a, partial.b, d),
        Err(_) => (vec![], vec![], 0),
    };
    let formula = qpoly_formula_data(r, depth);
    let mut comparisons = Vec::new();
    if let Some(data) = &formula {
        // alpha_n corresponds to the extracted a_{n-1}; beta_n to b_{n-2}
        // in the J-fraction (beta_2 is the first block coefficient).
        for n in 1..=depth.min(achieved) {
            let extracted = a[n - 1].coeff(0);
            let agree = data.alpha[n - 1] == extracted;
            comparisons.push(QpolyComparison {
                name: format!("alpha_{n}"),
                formula: data.alpha[n - 1].clone(),
                extracted,
                agree,
            });
        }
        for n in 2..=depth {
            if n - 2 >= b.len() || n - 2 >= achieved {
                break;
            }
            let extracted = b[n - 2].coeff(0);
            let agree = data.beta[n - 1] == extracted;
            comparisons.push(QpolyComparison {
                name: format!("beta_{n}"),
                formula: data.beta[n - 1].clone(),
                extracted,
                agree,
            });
        }
    }
    let all_agree = !comparisons.is_empty() && comparisons.iter().all(|c| c.agree);
    let first_disagreement = comparisons
        .iter()
        .find(|c| !c.agree)
        .map(|c| c.name.clone());
    QpolyReport {
        r: r.clone(),
        requested_depth: depth,
        achieved_depth: achieved,
        completed: formula.is_some() && achieved == depth,
        comparisons,
        all_agree,
        first_disagreement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat_int;

    fn p(c: &[i64]) -> ParamPoly {
        ParamPoly::from_ints(c)
    }

    fn sym(order: usize) -> FamilyContext {
        FamilyContext::symbolic(order)
    }

    #[test]
    fn row_sums_match_matrix() {
        let ctx = sym(16);
        let s = row_sum_sequence(&ctx, 14);
        let from_matrix = moment_matrix(&ctx).row_sums(14).unwrap();
        assert_eq!(s, from_matrix);
        assert_eq!(s.term(0), &ParamPoly::one());
        assert_eq!(s.term(2), &p(&[2, -1]));
        assert_eq!(s.term(3), &p(&[3, -1]));
    }

    #[test]
    fn rowsum_gf_routes_agree() {
        let ctx = sym(20);
        let via_matrix = rowsum_gf(&ctx);
        let via_proof = rowsum_gf_proof_route(&ctx);
        assert_eq!(via_matrix, via_proof);
        let s = row_sum_sequence(&ctx, 20);
        assert_eq!(s.terms(), via_matrix.coeffs());
    }

    #[test]
    fn rowsum_closed_gf_cross_multiplied() {
        let ctx = sym(20);
        let q = rowsum_gf(&ctx);
        let (num, den) = rowsum_gf_closed(&ctx);
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn rowsum_closed_gf_numeric_points() {
        for rv in [1i64, 2, 3, 5, -2, 7] {
            let ctx = FamilyContext::numeric(rat_int(rv), 16);
            let q = rowsum_gf(&ctx);
            let (num, den) = rowsum_gf_closed(&ctx);
            let resolved = num.divide(&den).expect("unit at numeric r != 0");
            assert_eq!(q, resolved, "r = {rv}");
        }
    }

    #[test]
    fn hpoly_values_match_display() {
        let h = hpoly_sequence(&sym(4), 6);
        assert_eq!(h.term(0), &ParamPoly::one());
        assert_eq!(h.term(1), &p(&[1, -1]));
        assert_eq!(h.term(2), &p(&[1, -2]));
        assert_eq!(h.term(3), &p(&[1, -3, 1, 1]));
        assert_eq!(h.term(4), &p(&[1, -4, 3, 2, -1]));
        assert_eq!(h.term(5), &p(&[1, -5, 6, 2, -4]));
    }

    #[test]
    fn hpoly_matches_scaled_chebyshev_at_numeric_r() {
        for rv in [1i64, 2, 3, 5, -2] {
            let r = rat_int(rv);
            let ctx = FamilyContext::numeric(r.clone(), 4);
            let h = hpoly_sequence(&ctx, 11);
            for n in 0..11 {
                assert_eq!(
                    h.term(n).coeff(0),
                    hpoly_closed_at(&r, n),
                    "r = {rv}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn rowsum_hankel_matches_hpoly() {
        let ctx = sym(16);
        let h = rowsum_hankel(&ctx, 6).unwrap();
        let expect = hpoly_sequence(&ctx, 7);
        assert_eq!(h, expect);
    }

    #[test]
    fn rowsum_hankel_numeric_r2() {
        let ctx = FamilyContext::numeric(rat_int(2), 24);
        let h = rowsum_hankel(&ctx, 5).unwrap();
        assert_eq!(h, SeqVec::from_ints(&[1, -1, -3, 7, 5, -33]));
    }

    #[test]
    fn reversal_and_factorization() {
        let report = rowsum_coeffarray_identities(7, 14);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn qpoly_check_reports_disagreement() {
        // the claim is under test; at r = 2 the formula alpha_1 = 8/(1-2)
        // = -8 while the extracted a_0 = s_1/s_0 = 1, so the report must
        // complete and record the mismatch
        let r = rat_int(2);
        let rep = qpoly_recurrence_check(&r, 4, 24);
        assert!(rep.completed);
        assert_eq!(rep.achieved_depth, 4);
        assert!(!rep.comparisons.is_empty());
        let alpha1 = &rep.comparisons[0];
        assert_eq!(alpha1.name, "alpha_1");
        assert_eq!(alpha1.formula, rat_int(-8));
        assert_eq!(alpha1.extracted, rat_int(1));
        assert!(!alpha1.agree);
        assert!(rep.first_disagreement.is_some());
    }

    #[test]
    fn symbolic_rowsum_jfraction_leaves_the_polynomial_ring() {
        // the second block coefficient is (1-2r)/(1-r)^2, so symbolic
        // extraction must stop with NonPolynomialCoefficient; this is why
        // the recurrence probe runs at numeric r
        let ctx = FamilyContext::symbolic(16);
        let gf = rowsum_gf(&ctx);
        assert!(matches!(
            jfraction_extract(&gf, 4),
            Err(HankelError::NonPolynomialCoefficient { .. })
        ));
    }

    #[test]
    fn rowsum_gf_jfraction_round_trips_at_r2() {
        // extraction from the row-sum generating function at r = 2
        // reproduces the series to order 20
        let ctx = FamilyContext::numeric(rat_int(2), 24);
        let gf = rowsum_gf(&ctx);
        let cf = jfraction_extract(&gf, 10).unwrap();
        let back = crate::hankel::jfraction_to_gf(&cf, 21);
        assert_eq!(back, gf.truncate(21));
    }

    #[test]
    fn qpoly_depth_zero_is_trivially_consistent() {
        let rep = qpoly_recurrence_check(&rat_int(2), 0, 12);
        assert!(rep.comparisons.is_empty());
        assert!(!rep.all_agree);
        assert_eq!(rep.first_disagreement, None);
    }

    #[test]
    fn proof_identity_pair_entries_are_binomials() {
        let order = 13;
        let pair = proof_identity_pair(order);
        let m = pair.to_matrix(12).unwrap();
        for n in 0..12i64 {
            for k in 0..=n {
                let expect = binomial(n + k, (n - k) / 2);
                assert_eq!(
                    m.get(n as usize, k as usize),
                    ParamPoly::constant(Rat::from_integer(expect)),
                    "({n},{k})"
                );
            }
        }
    }
}
