//! Jacobi (J-) and Stieltjes (S-) continued fractions of generating
//! functions, by iterative peeling, plus bottom-up reconstruction.
//!
//! J-fraction shape: 1/(1 - a0 x - b1 x^2/(1 - a1 x - b2 x^2/(...))).
//! S-fraction shape: 1/(1 - α1 x/(1 - α2 x/(...))).
//!
//! Extraction on an aerated generating function can also be routed through
//! the un-aerated series: when all odd coefficients vanish, the J-fraction
//! has a == 0 and its b-coefficients are exactly the S-fraction coefficients
//! of the series with x^2 -> x; see [`aerated_jfraction_via_unaerate`].

use crate::exactalg::{ParamPoly, Series};

use super::HankelError;

/// Jacobi continued-fraction data: `a[k]` is the level-k linear coefficient
/// and `b[k]` holds the 1-indexed block coefficient `b_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFraction {
    pub a: Vec<ParamPoly>,
    pub b: Vec<ParamPoly>,
}

/// Stieltjes continued-fraction data: `alpha[k]` holds the 1-indexed
/// `α_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFraction {
    pub alpha: Vec<ParamPoly>,
}

impl JFraction {
    pub fn depth(&self) -> usize {
        self.a.len()
    }

    /// JSON value: `{"a": [...], "b": [...]}` with polynomial coefficient
    /// arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": polys_json(&self.a),
            "b": polys_json(&self.b),
        })
    }
}

impl SFraction {
    pub fn depth(&self) -> usize {
        self.alpha.len()
    }

    /// JSON value: `{"alpha": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "alpha": polys_json(&self.alpha) })
    }
}

fn polys_json(polys: &[ParamPoly]) -> serde_json::Value {
    serde_json::Value::Array(
        polys
            .iter()
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
}

/// Divide every coefficient of a series exactly by a polynomial; fails with
/// `NonPolynomialCoefficient` when the quotient leaves `Q[r]`.
fn divide_coeffs_exact(s: &Series, d: &ParamPoly, depth: usize) -> Result<Series, HankelError> {
    if d.is_rational_unit() {
        let inv = crate::exactalg::Rat::from_integer(1.into()) / d.coeff(0);
        return Ok(s.scale(&ParamPoly::constant(inv)));
    }
    let coeffs = s
        .coeffs()
        .iter()
        .map(|c| {
            c.div_exact(d)
                .map_err(|_| HankelError::NonPolynomialCoefficient { depth })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Series::from_polys(coeffs))
}

fn check_gf(gf: &Series, depth: usize) -> Result<(), HankelError> {
    if gf.order() == 0 || !gf.coeff(0).is_one() {
        return Err(HankelError::ConstantTermNotOne);
    }
    if gf.order() < 2 * depth + 1 {
        return Err(HankelError::OrderTooSmall {
            order: gf.order(),
            depth,
        });
    }
    Ok(())
}

/// Extract J-fraction coefficients `a_0..a_{depth-1}`, `b_1..b_depth`.
///
/// When the underlying measure degenerates (a zero Hankel block), the error
/// carries the partial data extracted so far together with the achieved
/// depth.
pub fn jfraction_extract(gf: &Series, depth: usize) -> Result<JFraction, HankelError> {
    check_gf(gf, depth)?;
    let mut a = Vec::with_capacity(depth);
    let mut b = Vec::with_capacity(depth);
    let mut cur = gf.clone();
    for level in 0..depth {
        // u = 1 - 1/G, a power series vanishing at 0
        let u = &Series::one(cur.order()) - &cur.inverse().map_err(HankelError::Exact)?;
        let a_k = u.coeff(1).clone();
        // rem = u - a_k x = b_{k+1} x^2 G' with G'(0) = 1
        let mut rem = u;
        let minus_ax = Series::x(rem.order()).scale(&(-&a_k));
        rem = &rem + &minus_ax;
        let b_k = if rem.order() > 2 {
            rem.coeff(2).clone()
        } else {
            ParamPoly::zero()
        };
        a.push(a_k);
        b.push(b_k.clone());
        if level + 1 == depth {
            break;
        }
        if rem.is_zero() || b_k.is_zero() {
            // terminated or genuinely singular: the J-fraction does not
            // exist past this depth
            return Err(HankelError::ZeroHankelBlock {
                depth: level + 1,
                partial: JFraction { a, b },
            });
        }
        let tail = rem.shift_down(2).map_err(HankelError::Exact)?;
        cur = divide_coeffs_exact(&tail, &b_k, level + 1)?;
    }
    Ok(JFraction { a, b })
}

/// Extract S-fraction coefficients `α_1..α_depth`.
///
/// A series that terminates cleanly (zero remainder) pads with zero
/// coefficients; a zero pivot with a nonzero remainder is an error carrying
/// the partial data.
pub fn sfraction_extract(gf: &Series, depth: usize) -> Result<SFraction, HankelError> {
    if gf.order() == 0 || !gf.coeff(0).is_one() {
        return Err(HankelError::ConstantTermNotOne);
    }
    if gf.order() < depth + 1 {
        return Err(HankelError::OrderTooSmall {
            order: gf.order(),
            depth,
        });
    }
    let mut alpha = Vec::with_capacity(depth);
    let mut cur = gf.clone();
    for level in 0..depth {
        let u = &Series::one(cur.order()) - &cur.inverse().map_err(HankelError::Exact)?;
        if u.is_zero() {
            alpha.resize(depth, ParamPoly::zero());
            break;
        }
        let a_k = u.coeff(1).clone();
        if a_k.is_zero() {
            return Err(HankelError::ZeroPivot {
                depth: level,
                partial: SFraction { alpha },
            });
        }
        alpha.push(a_k.clone());
        if level + 1 == depth {
            break;
        }
        let tail = u.shift_down(1).map_err(HankelError::Exact)?;
        cur = divide_coeffs_exact(&tail, &a_k, level + 1)?;
    }
    if alpha.len() < depth {
        alpha.resize(depth, ParamPoly::zero());
    }
    Ok(SFraction { alpha })
}

/// Bottom-up evaluation of a truncated J-fraction. Missing `b` entries are
/// treated as zero; the empty fraction evaluates to 1.
pub fn jfraction_to_gf(cf: &JFraction, order: usize) -> Series {
    let mut tail = Series::one(order);
    let depth = cf.a.len().max(cf.b.len());
    for k in (0..depth).rev() {
        let a_k = cf.a.get(k).cloned().unwrap_or_else(ParamPoly::zero);
        let b_k = cf.b.get(k).cloned().unwrap_or_else(ParamPoly::zero);
        // den = 1 - a_k x - b_k x^2 tail
        let mut den = Series::one(order);
        den = &den - &Series::x(order).scale(&a_k);
        den = &den - &tail.shift_up(2).scale(&b_k);
        tail = den.inverse().expect("den has constant term 1");
    }
    tail
}

/// Bottom-up evaluation of a truncated S-fraction.
pub fn sfraction_to_gf(cf: &SFraction, order: usize) -> Series {
    let mut tail = Series::one(order);
    for k in (0..cf.alpha.len()).rev() {
        let mut den = Series::one(order);
        den = &den - &tail.shift_up(1).scale(&cf.alpha[k]);
        tail = den.inverse().expect("den has constant term 1");
    }
    tail
}

/// J-fraction of an aerated generating function via the un-aerated series:
/// substitutes x^2 -> x, S-extracts, and reshapes as `a == 0`,
/// `b_k = α_k`.
pub fn aerated_jfraction_via_unaerate(gf: &Series, depth: usize) -> Result<JFraction, HankelError> {
    let un = gf.unaerate().map_err(|_| aeration_error(gf))?;
    let s = sfraction_extract(&un, depth)?;
    Ok(JFraction {
        a: vec![ParamPoly::zero(); depth],
        b: s.alpha,
    })
}

fn aeration_error(gf: &Series) -> HankelError {
    let index = gf
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .step_by(2)
        .find(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .unwrap_or(1);
    HankelError::NotAerated { index }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::catalan_gf;

    fn p(c: &[i64]) -> ParamPoly {
        ParamPoly::from_ints(c)
    }

    #[test]
    fn jfraction_of_geometric_terminates() {
        // 1/(1-x): a = 1 then zeros, b_1 = 0; deeper extraction hits the
        // zero Hankel block and reports the partial data.
        let order = 12;
        let gf = Series::geometric(order);
        let cf = jfraction_extract(&gf, 1).unwrap();
        assert_eq!(cf.a, vec![p(&[1])]);
        assert_eq!(cf.b, vec![ParamPoly::zero()]);
        match jfraction_extract(&gf, 4) {
            Err(HankelError::ZeroHankelBlock { depth: 1, partial }) => {
                assert_eq!(partial.a, vec![p(&[1])]);
            }
            other => panic!("expected ZeroHankelBlock, got {other:?}"),
        }
    }

    #[test]
    fn jfraction_round_trip_catalan() {
        // Catalan: a = 1, 2, 2, 2, ... (the contraction of the all-ones
        // S-fraction); b = 1, 1, 1, ...
        let order = 21;
        let gf = catalan_gf(order);
        let cf = jfraction_extract(&gf, 8).unwrap();
        let mut expect_a = vec![p(&[2]); 8];
        expect_a[0] = p(&[1]);
        assert_eq!(cf.a, expect_a);
        assert_eq!(cf.b, vec![p(&[1]); 8]);
        let back = jfraction_to_gf(&cf, 17);
        assert_eq!(back, gf.truncate(17));
    }

    #[test]
    fn sfraction_of_catalan_is_all_ones() {
        let order = 16;
        let gf = catalan_gf(order);
        let cf = sfraction_extract(&gf, 10).unwrap();
        assert_eq!(cf.alpha, vec![p(&[1]); 10]);
        // round-trip oracle
        let back = sfraction_to_gf(&cf, 11);
        assert_eq!(back, gf.truncate(11));
    }

    #[test]
    fn sfraction_of_one_is_all_zero() {
        let cf = sfraction_extract(&Series::one(8), 5).unwrap();
        assert_eq!(cf.alpha, vec![ParamPoly::zero(); 5]);
        assert_eq!(sfraction_to_gf(&cf, 8), Series::one(8));
    }

    #[test]
    fn sfraction_zero_pivot_on_aerated_input() {
        // an aerated gf has α_1 = 0 with nonzero remainder
        let order = 9;
        let gf = Series::from_ints_at(&[1, 0, 1, 0, 2, 0, 5, 0, 14], order);
        assert!(matches!(
            sfraction_extract(&gf, 3),
            Err(HankelError::ZeroPivot { depth: 0, .. })
        ));
    }

    #[test]
    fn empty_jfraction_is_one() {
        let cf = JFraction {
            a: vec![],
            b: vec![],
        };
        assert_eq!(jfraction_to_gf(&cf, 6), Series::one(6));
    }

    #[test]
    fn jfraction_round_trip_random_small() {
        let cases = [
            (vec![0i64, 0, 0], vec![2i64, 1, 3]),
            (vec![1, -1, 2], vec![1, 1, 1]),
            (vec![-2, 3, 0], vec![-1, 2, -3]),
        ];
        for (av, bv) in cases {
            let cf = JFraction {
                a: av.iter().map(|&v| ParamPoly::from_int(v)).collect(),
                b: bv.iter().map(|&v| ParamPoly::from_int(v)).collect(),
            };
            let order = 2 * cf.a.len() + 1;
            let gf = jfraction_to_gf(&cf, order);
            let cf2 = jfraction_extract(&gf, cf.a.len()).unwrap();
            assert_eq!(cf2.a, cf.a, "a for {av:?}/{bv:?}");
            assert_eq!(cf2.b, cf.b, "b for {av:?}/{bv:?}");
        }
    }

    #[test]
    fn symbolic_extraction_with_polynomial_pivot() {
        // gf = 1/(1 - (1-r)x^2/(1 - x^2/(1 - x^2/...))) : the moment shape
        let depth = 6;
        let order = 2 * depth + 3;
        let cf_in = JFraction {
            a: vec![ParamPoly::zero(); depth + 1],
            b: {
                let mut b = vec![p(&[1, -1])];
                b.extend(vec![p(&[1]); depth]);
                b
            },
        };
        let gf = jfraction_to_gf(&cf_in, order);
        let cf = jfraction_extract(&gf, depth).unwrap();
        assert_eq!(cf.a, vec![ParamPoly::zero(); depth]);
        assert_eq!(cf.b[0], p(&[1, -1]));
        assert_eq!(&cf.b[1..], &vec![p(&[1]); depth - 1][..]);
        // the via-unaerate route agrees
        let cf_un = aerated_jfraction_via_unaerate(&gf, depth).unwrap();
        assert_eq!(cf_un, cf);
    }

    #[test]
    fn moment_shaped_jfraction_reconstructs_prefix() {
        // a = 0, b = 1-r, 1, 1, ... gives 1, 0, 1-r, 0, r^2-3r+2, ...
        let cf = JFraction {
            a: vec![ParamPoly::zero(); 4],
            b: vec![p(&[1, -1]), p(&[1]), p(&[1]), p(&[1])],
        };
        let gf = jfraction_to_gf(&cf, 7);
        assert_eq!(gf.coeff(0), &p(&[1]));
        assert_eq!(gf.coeff(1), &ParamPoly::zero());
        assert_eq!(gf.coeff(2), &p(&[1, -1]));
        assert_eq!(gf.coeff(3), &ParamPoly::zero());
        assert_eq!(gf.coeff(4), &p(&[2, -3, 1]));
        assert_eq!(gf.coeff(6), &p(&[5, -9, 5, -1]));
    }

    #[test]
    fn extraction_validates_input() {
        assert!(matches!(
            jfraction_extract(&Series::from_ints_at(&[2, 1], 8), 2),
            Err(HankelError::ConstantTermNotOne)
        ));
        assert!(matches!(
            jfraction_extract(&Series::one(4), 4),
            Err(HankelError::OrderTooSmall { .. })
        ));
    }
}
