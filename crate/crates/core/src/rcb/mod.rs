//! The restricted Chebyshev-Boubaker polynomial family.
//!
//! The family is defined by the Riordan pair ((1 + r x^2)/(1 + x^2),
//! x/(1 + x^2)). At r = 0 the rows are the modified Chebyshev polynomials
//! U_n(x/2); at r = 3 they are the Boubaker polynomials. This module builds
//! the coefficient array, its inverse (the moment matrix), the closed forms
//! for entries, central terms, moments and row sums, and the Hankel and
//! continued-fraction structure of each derived sequence.

mod central;
mod moments;
mod rowsums;
pub mod xpoly;

pub use central::{central_hankel_report, central_via_gf, CentralHankelReport};
pub use moments::{
    moment_closed_gf, moment_closed_gf_alt, moment_gf, moment_hankel, moment_hankel_unaerated,
    moments, moments_unaerated, unaerated_moment_gf_direct,
};
pub use rowsums::{
    binomial_pair, chebyshev_pair, hpoly_closed_at, hpoly_coefficient_array, hpoly_reversal,
    hpoly_sequence, proof_identity_pair, qpoly_formula_data, qpoly_recurrence_check, reversal_pair,
    row_sum_sequence, rowsum_coeffarray_identities, rowsum_gf, rowsum_gf_closed,
    rowsum_gf_proof_route, rowsum_hankel, QpolyComparison, QpolyReport, RecurrenceData,
};

use crate::exactalg::{binomial, neg_one_pow, rat, rat_int, zero_pow, Int, ParamPoly, Rat, Series};
use crate::riordan::{RiordanPair, SeqVec, TriMatrix};
use xpoly::XPoly;

/// How the parameter `r` is treated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RMode {
    /// Keep every result in `Q[r]`.
    Symbolic,
    /// Evaluate every result at an exact rational value of `r`.
    Numeric(Rat),
}

/// Evaluation context: the `r`-mode plus the series truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyContext {
    mode: RMode,
    order: usize,
}

/// Default truncation order; every displayed prefix needs far fewer terms.
pub const DEFAULT_ORDER: usize = 32;

impl FamilyContext {
    pub fn symbolic(order: usize) -> Self {
        FamilyContext {
            mode: RMode::Symbolic,
            order,
        }
    }

    pub fn numeric(r: Rat, order: usize) -> Self {
        FamilyContext {
            mode: RMode::Numeric(r),
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn with_order(&self, order: usize) -> Self {
        FamilyContext {
            mode: self.mode.clone(),
            order,
        }
    }

    pub fn mode(&self) -> &RMode {
        &self.mode
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.mode, RMode::Symbolic)
    }

    pub fn numeric_r(&self) -> Option<&Rat> {
        match &self.mode {
            RMode::Symbolic => None,
            RMode::Numeric(r) => Some(r),
        }
    }

    /// The parameter as a `Q[r]` element: the variable itself in symbolic
    /// mode, a constant in numeric mode.
    pub fn r_poly(&self) -> ParamPoly {
        match &self.mode {
            RMode::Symbolic => ParamPoly::var(),
            RMode::Numeric(r) => ParamPoly::constant(r.clone()),
        }
    }
}

/// g-component (1 + r x^2)/(1 + x^2) of the family pair.
pub fn family_g(ctx: &FamilyContext) -> Series {
    let order = ctx.order();
    let num = Series::from_polys_at(&[ParamPoly::one(), ParamPoly::zero(), ctx.r_poly()], order);
    let den = Series::from_ints_at(&[1, 0, 1], order);
    num.divide(&den)
        .expect("denominator has unit constant term")
}

/// f-component x/(1 + x^2), shared by every member of the family.
pub fn family_f(order: usize) -> Series {
    Series::x(order)
        .divide(&Series::from_ints_at(&[1, 0, 1], order))
        .expect("denominator has unit constant term")
}

/// The coefficient array of the family as a proper Riordan pair.
pub fn coefficient_array(ctx: &FamilyContext) -> RiordanPair {
    RiordanPair::new(family_g(ctx), family_f(ctx.order())).expect("family pair is proper")
}

/// The moment matrix: the group inverse of the coefficient array.
pub fn moment_matrix(ctx: &FamilyContext) -> RiordanPair {
    coefficient_array(ctx).inverse()
}

fn parity_mask_even(d: i64) -> bool {
    d.rem_euclid(2) == 0
}

/// Closed form for the array entry, ratio shape:
/// C((n+k)/2, k) * (1 - r(n-k)/(n+k+0^{n+k})) * (-1)^{(n-k)/2},
/// masked to even n-k.
pub fn coeff_closed_form(ctx: &FamilyContext, n: usize, k: usize) -> ParamPoly {
    let (n, k) = (n as i64, k as i64);
    if k > n || !parity_mask_even(n - k) {
        return ParamPoly::zero();
    }
    let top = binomial((n + k) / 2, k);
    let sign = neg_one_pow((n - k) / 2);
    let denom = n + k + if n + k == 0 { 1 } else { 0 };
    // 1 - r (n-k)/denom as a Q[r] element
    let lin = ParamPoly::from_rats(vec![rat_int(1), -rat(n - k, denom)]);
    lin.scale(&Rat::from_integer(top * sign)).reduce_in(ctx)
}

/// Closed form for the array entry, term-by-term shape with the generalized
/// binomial C(-1, 0) = 1 and the 0^{n+k} correction:
/// mask * [ (-1)^{(n-k)/2} C((n+k)/2, k) + r (-1)^{(n-k-2)/2} C((n+k-2)/2, k) ]
/// + r * 0^{n+k}.
pub fn coeff_closed_form_terms(ctx: &FamilyContext, n: usize, k: usize) -> ParamPoly {
    let (n, k) = (n as i64, k as i64);
    if k > n {
        return ParamPoly::zero();
    }
    let mut acc = ParamPoly::zero();
    if parity_mask_even(n - k) {
        let t1 = binomial((n + k) / 2, k) * neg_one_pow((n - k) / 2);
        let t2 = binomial((n + k - 2) / 2, k) * neg_one_pow((n - k) / 2 - 1);
        acc = &acc + &ParamPoly::constant(Rat::from_integer(t1));
        acc = &acc + &ParamPoly::from_rats(vec![rat_int(0), Rat::from_integer(t2)]);
    }
    let corr = zero_pow(n + k);
    if !num_traits::Zero::is_zero(&corr) {
        acc = &acc + &ParamPoly::from_rats(vec![rat_int(0), Rat::from_integer(corr)]);
    }
    acc.reduce_in(ctx)
}

/// Closed form for the array entry, grouped shape:
/// mask * (-1)^{(n-k)/2} * [ C((n+k)/2, k) - r C((n+k-2)/2, k) ] + r 0^{n+k}.
pub fn coeff_closed_form_grouped(ctx: &FamilyContext, n: usize, k: usize) -> ParamPoly {
    let (n, k) = (n as i64, k as i64);
    if k > n {
        return ParamPoly::zero();
    }
    let mut acc = ParamPoly::zero();
    if parity_mask_even(n - k) {
        let sign = neg_one_pow((n - k) / 2);
        let grouped = ParamPoly::from_rats(vec![
            Rat::from_integer(binomial((n + k) / 2, k)),
            Rat::from_integer(-binomial((n + k - 2) / 2, k)),
        ]);
        acc = &acc + &grouped.scale(&Rat::from_integer(sign));
    }
    let corr = zero_pow(n + k);
    if !num_traits::Zero::is_zero(&corr) {
        acc = &acc + &ParamPoly::from_rats(vec![rat_int(0), Rat::from_integer(corr)]);
    }
    acc.reduce_in(ctx)
}

trait ReduceIn {
    fn reduce_in(self, ctx: &FamilyContext) -> ParamPoly;
}

impl ReduceIn for ParamPoly {
    fn reduce_in(self, ctx: &FamilyContext) -> ParamPoly {
        match ctx.numeric_r() {
            None => self,
            Some(r) => {
                let v = self.eval(r);
                if num_traits::Zero::is_zero(&v) {
                    ParamPoly::zero()
                } else {
                    ParamPoly::constant(v)
                }
            }
        }
    }
}

/// P_n(x; r) by the closed summation:
/// sum_{k <= n/2} C(n-k, k) (n - (r+1)k)/(n-k) (-1)^k x^{n-2k}.
///
/// The n = 0 term is 1 (the ratio degenerates to 0/0 there).
pub fn polynomial(ctx: &FamilyContext, n: usize) -> XPoly {
    if n == 0 {
        return vec![ParamPoly::one()];
    }
    let n_i = n as i64;
    let mut coeffs = vec![ParamPoly::zero(); n + 1];
    for k in 0..=(n_i / 2) {
        let b = binomial(n_i - k, k);
        let sign = neg_one_pow(k);
        // (n - (r+1)k)/(n-k) = (n-k)/(n-k) - k r/(n-k) = 1 - k r/(n-k)
        let lin = ParamPoly::from_rats(vec![rat_int(1), -rat(k, n_i - k)]);
        let term = lin.scale(&Rat::from_integer(b * sign));
        coeffs[(n_i - 2 * k) as usize] = term;
    }
    coeffs.into_iter().map(|c| c.reduce_in(ctx)).collect()
}

/// P_n(x; r) as row n of the coefficient array.
pub fn polynomial_from_array(ctx: &FamilyContext, n: usize) -> XPoly {
    let array = coefficient_array(&ctx.with_order(ctx.order().max(n + 2)));
    (0..=n)
        .map(|k| array.entry(n, k).expect("entry within order"))
        .collect()
}

/// P_n(x; r) = U_n(x/2) + r U_{n-2}(x/2), with the shift term absent for
/// n < 2 (the array reading: row n-2 of the Chebyshev array, empty rows
/// for negative indices).
pub fn polynomial_chebyshev_shift(ctx: &FamilyContext, n: usize) -> XPoly {
    use crate::hankel::chebyshev_u_half;
    let mut coeffs: XPoly = chebyshev_u_half(n)
        .into_iter()
        .map(ParamPoly::constant)
        .collect();
    if n >= 2 {
        let r = ctx.r_poly();
        for (i, c) in chebyshev_u_half(n - 2).into_iter().enumerate() {
            coeffs[i] = &coeffs[i] + &r.scale(&c);
        }
    }
    coeffs.into_iter().map(|c| c.reduce_in(ctx)).collect()
}

/// The polynomial list P_0 .. P_{count-1}.
pub fn polynomials(ctx: &FamilyContext, count: usize) -> OrthoPolySeq {
    OrthoPolySeq {
        polys: (0..count).map(|n| polynomial(ctx, n)).collect(),
    }
}

/// A list of orthogonal polynomials as x-coefficient lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoPolySeq {
    pub polys: Vec<XPoly>,
}

impl OrthoPolySeq {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Degree n with leading coefficient 1, for every member.
    pub fn is_monic(&self) -> bool {
        self.polys
            .iter()
            .enumerate()
            .all(|(n, p)| xpoly::xp_degree(p) == Some(n) && xpoly::xp_coeff(p, n).is_one())
    }
}

/// Report from a three-term recurrence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermReport {
    pub ok: bool,
    pub checked_to: usize,
    pub first_mismatch: Option<usize>,
}

/// Check the family recurrence on explicit polynomials:
/// P_2 = x P_1 - (1-r) P_0 and P_n = x P_{n-1} - P_{n-2} for n >= 3.
pub fn check_three_term_on(polys: &[XPoly], r: &ParamPoly) -> ThreeTermReport {
    let one_minus_r = &ParamPoly::one() - r;
    for n in 2..polys.len() {
        let expect = if n == 2 {
            xpoly::xp_sub(
                &xpoly::xp_mul_x(&polys[1]),
                &xpoly::xp_scale(&polys[0], &one_minus_r),
            )
        } else {
            xpoly::xp_sub(&xpoly::xp_mul_x(&polys[n - 1]), &polys[n - 2])
        };
        if !xpoly::xp_eq(&polys[n], &expect) {
            return ThreeTermReport {
                ok: false,
                checked_to: n,
                first_mismatch: Some(n),
            };
        }
    }
    ThreeTermReport {
        ok: true,
        checked_to: polys.len().saturating_sub(1),
        first_mismatch: None,
    }
}

/// Check the three-term recurrence for the family up to `n_max`.
pub fn check_three_term(ctx: &FamilyContext, n_max: usize) -> ThreeTermReport {
    let polys: Vec<XPoly> = (0..=n_max).map(|n| polynomial(ctx, n)).collect();
    check_three_term_on(&polys, &ctx.r_poly())
}

/// Central term P_{2n,n}:
/// 0^n - (r-3)(-1)^{n/2} C(3n/2 - 1, n/2 - 1) (1+(-1)^n)/2.
pub fn central(ctx: &FamilyContext, n: usize) -> ParamPoly {
    let n = n as i64;
    let mut acc = ParamPoly::constant(Rat::from_integer(zero_pow(n)));
    if parity_mask_even(n) {
        let c = binomial(3 * n / 2 - 1, n / 2 - 1) * neg_one_pow(n / 2);
        // -(r-3) c = (3 - r) c
        let factor = ParamPoly::from_ints(&[3, -1]).scale(&Rat::from_integer(c));
        acc = &acc + &factor;
    }
    acc.reduce_in(ctx)
}

/// Central term, alternative shape:
/// (r-2) 0^n - (r-3)(-1)^{n/2} C(3n/2 - 1, n) (1+(-1)^n)/2,
/// with the generalized C(-1, 0) = 1.
pub fn central_alt(ctx: &FamilyContext, n: usize) -> ParamPoly {
    let n = n as i64;
    let mut acc = ParamPoly::zero();
    if n == 0 {
        acc = &acc + &ParamPoly::from_ints(&[-2, 1]);
    }
    if parity_mask_even(n) {
        let c = binomial(3 * n / 2 - 1, n) * neg_one_pow(n / 2);
        let factor = ParamPoly::from_ints(&[3, -1]).scale(&Rat::from_integer(c));
        acc = &acc + &factor;
    }
    acc.reduce_in(ctx)
}

/// The sequence P_{2n,n} for n = 0..count-1.
pub fn central_sequence(ctx: &FamilyContext, count: usize) -> SeqVec {
    (0..count).map(|n| central(ctx, n)).collect()
}

/// The un-aerated central sequence: term m is P_{4m,2m}.
pub fn central_unaerated_sequence(ctx: &FamilyContext, count: usize) -> SeqVec {
    (0..count).map(|m| central(ctx, 2 * m)).collect()
}

/// Near-central term P_{2n,n+1}:
/// [C((3n+1)/2, n+1) - r C((3n-1)/2, n+1)] (-1)^{(n-1)/2} (1-(-1)^n)/2.
///
/// Zero for even n; the out-of-triangle case n = 0 is likewise 0.
pub fn central_plus(ctx: &FamilyContext, n: usize) -> ParamPoly {
    let n = n as i64;
    if parity_mask_even(n) {
        return ParamPoly::zero();
    }
    let sign = neg_one_pow((n - 1) / 2);
    let grouped = ParamPoly::from_rats(vec![
        Rat::from_integer(binomial((3 * n + 1) / 2, n + 1)),
        Rat::from_integer(-binomial((3 * n - 1) / 2, n + 1)),
    ]);
    grouped.scale(&Rat::from_integer(sign)).reduce_in(ctx)
}

/// Near-central term, ratio shape:
/// C((3n+1)/2, n+1) (1 + r - n(r-3))/(3n+1) (-1)^{(n-1)/2} (1-(-1)^n)/2.
pub fn central_plus_alt(ctx: &FamilyContext, n: usize) -> ParamPoly {
    let n = n as i64;
    if parity_mask_even(n) {
        return ParamPoly::zero();
    }
    let sign = neg_one_pow((n - 1) / 2);
    let b = binomial((3 * n + 1) / 2, n + 1);
    // (1 + r - n(r-3))/(3n+1) = (1+3n)/(3n+1) + (1-n)/(3n+1) r
    let lin = ParamPoly::from_rats(vec![rat(1 + 3 * n, 3 * n + 1), rat(1 - n, 3 * n + 1)]);
    lin.scale(&Rat::from_integer(b * sign)).reduce_in(ctx)
}

/// The sequence P_{2n,n+1} for n = 0..count-1.
pub fn central_plus_sequence(ctx: &FamilyContext, count: usize) -> SeqVec {
    (0..count).map(|n| central_plus(ctx, n)).collect()
}

/// The generalized coefficient array
/// ((1 - λx - μx^2)/(1 + ax + bx^2), x/(1 + ax + bx^2)).
pub fn generalized_chebyshev_array(
    lambda: i64,
    mu: i64,
    a: i64,
    b: i64,
    order: usize,
) -> RiordanPair {
    let num = Series::from_ints_at(&[1, -lambda, -mu], order);
    let den = Series::from_ints_at(&[1, a, b], order);
    RiordanPair::new(
        num.divide(&den).expect("unit constant term"),
        Series::x(order).divide(&den).expect("unit constant term"),
    )
    .expect("generalized pair is proper")
}

/// The tridiagonal production matrix expected for the inverse of the
/// generalized array: top entries a+λ and b+μ, then constant diagonals.
pub fn generalized_production_expected(
    lambda: i64,
    mu: i64,
    a: i64,
    b: i64,
    size: usize,
) -> TriMatrix {
    let mut rows = vec![vec![ParamPoly::zero(); size]; size];
    for (i, row) in rows.iter_mut().enumerate() {
        if i + 1 < size {
            row[i + 1] = ParamPoly::one();
        }
        row[i] = ParamPoly::from_int(if i == 0 { a + lambda } else { a });
        if i > 0 {
            row[i - 1] = ParamPoly::from_int(if i == 1 { b + mu } else { b });
        }
    }
    TriMatrix::from_rows(rows)
}

/// Scaled generalized Chebyshev polynomial for integer sqrt(s) = sigma:
/// Q_n(x) = σ^n U_n(y) - λ σ^{n-1} U_{n-1}(y) - μ σ^{n-2} U_{n-2}(y)
/// with y = (x - a)/(2σ) and U_k = 0 for k < 0.
pub fn generalized_chebyshev_poly(lambda: i64, mu: i64, a: i64, sigma: i64, n: usize) -> Vec<Rat> {
    use crate::hankel::chebyshev_u;
    use num_traits::Zero;
    let s = rat(-a, 2 * sigma);
    let t = rat(1, 2 * sigma);
    let mut acc: Vec<Rat> = Vec::new();
    let mut add_term = |deg: i64, scale: Rat| {
        if deg < 0 || scale.is_zero() {
            return;
        }
        let u = xpoly::compose_linear_rat(&chebyshev_u(deg as usize), &s, &t);
        if acc.len() < u.len() {
            acc.resize(u.len(), Rat::zero());
        }
        for (i, c) in u.iter().enumerate() {
            acc[i] = &acc[i] + &(c * &scale);
        }
    };
    let sig = rat_int(sigma);
    let pow = |e: i64| -> Rat {
        if e < 0 {
            // unused when the U-term vanishes; any value would do
            Rat::from_integer(Int::from(0))
        } else {
            crate::exactalg::rat_pow(&sig, e as u32)
        }
    };
    let n = n as i64;
    add_term(n, pow(n));
    add_term(n - 1, pow(n - 1).scale_by(-lambda));
    add_term(n - 2, pow(n - 2).scale_by(-mu));
    acc
}

trait ScaleBy {
    fn scale_by(self, k: i64) -> Rat;
}

impl ScaleBy for Rat {
    fn scale_by(self, k: i64) -> Rat {
        self * rat_int(k)
    }
}
