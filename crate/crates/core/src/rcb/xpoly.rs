//! Small helpers for polynomials in `x` whose coefficients live in `Q[r]`.
//!
//! Represented as `Vec<ParamPoly>`, ascending powers of `x`. Lists may carry
//! trailing zeros; comparisons should go through [`xp_eq`].

use crate::exactalg::{ParamPoly, Rat};

pub type XPoly = Vec<ParamPoly>;

pub fn xp_zero() -> XPoly {
    Vec::new()
}

pub fn xp_coeff(p: &XPoly, i: usize) -> ParamPoly {
    p.get(i).cloned().unwrap_or_else(ParamPoly::zero)
}

/// Multiply by `x`.
pub fn xp_mul_x(p: &XPoly) -> XPoly {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(ParamPoly::zero());
    out.extend(p.iter().cloned());
    out
}

pub fn xp_add(a: &XPoly, b: &XPoly) -> XPoly {
    let n = a.len().max(b.len());
    (0..n).map(|i| &xp_coeff(a, i) + &xp_coeff(b, i)).collect()
}

pub fn xp_sub(a: &XPoly, b: &XPoly) -> XPoly {
    let n = a.len().max(b.len());
    (0..n).map(|i| &xp_coeff(a, i) - &xp_coeff(b, i)).collect()
}

/// Scale by a polynomial in `r`.
pub fn xp_scale(p: &XPoly, c: &ParamPoly) -> XPoly {
    p.iter().map(|a| a * c).collect()
}

/// x-degree ignoring trailing zeros, or `None` for zero.
pub fn xp_degree(p: &XPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Equality with implied trailing zeros.
pub fn xp_eq(a: &XPoly, b: &XPoly) -> bool {
    let n = a.len().max(b.len());
    (0..n).all(|i| xp_coeff(a, i) == xp_coeff(b, i))
}

/// Substitute `x -> -x`.
pub fn xp_negate_x(p: &XPoly) -> XPoly {
    p.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect()
}

/// Rational-coefficient polynomial composed with the linear map
/// `x -> s + t*x` (Horner), for the scaled Chebyshev checks.
pub fn compose_linear_rat(coeffs: &[Rat], s: &Rat, t: &Rat) -> Vec<Rat> {
    use num_traits::Zero;
    let mut acc: Vec<Rat> = Vec::new();
    for c in coeffs.iter().rev() {
        // acc = acc * (s + t x) + c
        let mut next = vec![Rat::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] = &next[i] + &(a * s);
            next[i + 1] = &next[i + 1] + &(a * t);
        }
        if next.is_empty() {
            next.push(Rat::zero());
        }
        next[0] = &next[0] + c;
        acc = next;
    }
    acc
}

pub fn xp_render(p: &XPoly) -> String {
    if p.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    p.iter()
        .map(|c| format!("({})", c.render()))
        .collect::<Vec<_>>()
        .join(", ")
}
