//! Central coefficients P_{2n,n} through the generating-function route, and
//! the Hankel structure of the central sequences.

use crate::exactalg::{ParamPoly, Series};
use crate::hankel::{hankel_transform, unaerate, HankelError};
use crate::riordan::SeqVec;

use super::{central_sequence, family_g, FamilyContext};

/// Central coefficients d_{2n,n} via series reversion:
/// with v = revert(x (1 + x^2)), the generating function is
/// g(v) / ((f/x)(v)) * v'(x); extract `count` coefficients.
///
/// Must agree with [`super::central`] term by term.
pub fn central_via_gf(ctx: &FamilyContext, count: usize) -> SeqVec {
    let order = count + 2;
    let wide = ctx.with_order(order);
    let v = Series::from_ints_at(&[0, 1, 0, 1], order)
        .revert()
        .expect("x(1+x^2) reverts");
    let g_at_v = family_g(&wide)
        .compose(&v)
        .expect("v has zero constant term");
    // f/x = 1/(1+x^2)
    let f_over_x = Series::from_ints_at(&[1, 0, 1], order)
        .inverse()
        .expect("unit constant term");
    let f_over_x_at_v = f_over_x.compose(&v).expect("v has zero constant term");
    let ratio = g_at_v
        .divide(&f_over_x_at_v)
        .expect("(f/x)(v) has constant term 1");
    let w = &ratio * &v.derivative();
    (0..count).map(|n| w.coeff(n).clone()).collect()
}

/// Hankel analysis of the central sequences: the ratios h_n/(r-3)^n for the
/// aerated sequence P_{2n,n} and for its un-aerated companion, split into
/// r-free and r-linear components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralHankelReport {
    pub max_n: usize,
    /// h_n / (r-3)^n for the aerated central sequence.
    pub aerated_ratio: SeqVec,
    /// H_n / (r-3)^n for the un-aerated sequence.
    pub unaerated_ratio: SeqVec,
    /// r^0 component of `aerated_ratio` (symbolic mode only).
    pub aerated_free: SeqVec,
    /// r^1 component of `aerated_ratio` (symbolic mode only).
    pub aerated_r: SeqVec,
    /// r^0 component of `unaerated_ratio`.
    pub unaerated_free: SeqVec,
    /// r^1 component of `unaerated_ratio`.
    pub unaerated_r: SeqVec,
    /// True iff every ratio is linear in r (degree <= 1).
    pub ratios_linear: bool,
}

/// Compute the central Hankel ratios.
///
/// Every determinant h_n of the central sequence is divisible by (r-3)^n;
/// the division is performed exactly and fails loudly (with
/// `ExactAlgError::NonZeroRemainder` wrapped in `HankelError`) if the claim
/// were ever false. The un-aerated variant needs `2*max_n + 1` terms of
/// P_{2(2n), 2n}.
pub fn central_hankel_report(
    ctx: &FamilyContext,
    max_n: usize,
) -> Result<CentralHankelReport, HankelError> {
    let aerated = central_sequence(ctx, 2 * max_n + 1);
    let unaerated = unaerate(&central_sequence(ctx, 2 * (2 * max_n) + 2))?;
    let h_aer = hankel_transform(&aerated, max_n)?;
    let h_un = hankel_transform(&unaerated, max_n)?;
    let r_minus_3 = match ctx.numeric_r() {
        None => ParamPoly::from_ints(&[-3, 1]),
        Some(r) => {
            let v = ParamPoly::from_ints(&[-3, 1]).eval(r);
            ParamPoly::constant(v)
        }
    };
    let ratio = |h: &SeqVec| -> Result<SeqVec, HankelError> {
        h.iter()
            .enumerate()
            .map(|(n, det)| {
                det.div_exact(&r_minus_3.pow(n as u32))
                    .map_err(HankelError::Exact)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SeqVec::new)
    };
    let aerated_ratio = ratio(&h_aer)?;
    let unaerated_ratio = ratio(&h_un)?;
    let ratios_linear = aerated_ratio
        .iter()
        .chain(unaerated_ratio.iter())
        .all(|p| p.degree().unwrap_or(0) <= 1);
    let component = |s: &SeqVec, i: usize| -> SeqVec {
        s.iter()
            .map(|p| {
                let c = p.coeff(i);
                if num_traits::Zero::is_zero(&c) {
                    ParamPoly::zero()
                } else {
                    ParamPoly::constant(c)
                }
            })
            .collect()
    };
    let (aerated_free, aerated_r, unaerated_free, unaerated_r) = if ctx.is_symbolic() {
        (
            component(&aerated_ratio, 0),
            component(&aerated_ratio, 1),
            component(&unaerated_ratio, 0),
            component(&unaerated_ratio, 1),
        )
    } else {
        (
            SeqVec::new(vec![]),
            SeqVec::new(vec![]),
            SeqVec::new(vec![]),
            SeqVec::new(vec![]),
        )
    };
    Ok(CentralHankelReport {
        max_n,
        aerated_ratio,
        unaerated_ratio,
        aerated_free,
        aerated_r,
        unaerated_free,
        unaerated_r,
        ratios_linear,
    })
}
