//! Truncated formal power series in `x` with `ParamPoly` coefficients.
//!
//! A series stores exactly `order` coefficients (powers 0..order-1) and all
//! arithmetic is exact to the stored order. Binary operations truncate to the
//! minimum of the operand orders.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::ParamPoly;
use super::rat::{rat_int, Rat};
use super::ExactAlgError;

/// Truncated formal power series over `Q[r]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<ParamPoly>,
}

impl Series {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![ParamPoly::zero(); order],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Series::constant(ParamPoly::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 1 {
            s.coeffs[1] = ParamPoly::one();
        }
        s
    }

    /// Constant series from a polynomial in `r`.
    pub fn constant(c: ParamPoly, order: usize) -> Self {
        let mut s = Series::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Build from explicit coefficients; the order is the list length.
    pub fn from_polys(coeffs: Vec<ParamPoly>) -> Self {
        Series { coeffs }
    }

    /// Build from machine-integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series {
            coeffs: coeffs.iter().map(|&c| ParamPoly::from_int(c)).collect(),
        }
    }

    /// Polynomial in `x` with machine-integer coefficients, zero-padded to
    /// the requested order.
    pub fn from_ints_at(coeffs: &[i64], order: usize) -> Self {
        Series::from_fn(order, |n| {
            coeffs
                .get(n)
                .map(|&c| ParamPoly::from_int(c))
                .unwrap_or_else(ParamPoly::zero)
        })
    }

    /// Polynomial in `x` with `ParamPoly` coefficients, zero-padded to
    /// the requested order.
    pub fn from_polys_at(coeffs: &[ParamPoly], order: usize) -> Self {
        Series::from_fn(order, |n| {
            coeffs.get(n).cloned().unwrap_or_else(ParamPoly::zero)
        })
    }

    /// Coefficient-producing constructor.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> ParamPoly) -> Self {
        Series {
            coeffs: (0..order).map(&mut f).collect(),
        }
    }

    /// Geometric series 1/(1-x).
    pub fn geometric(order: usize) -> Self {
        Series::from_fn(order, |_| ParamPoly::one())
    }

    /// 1/(1 - c*x) for a polynomial `c`.
    pub fn geometric_in(c: &ParamPoly, order: usize) -> Self {
        let mut acc = ParamPoly::one();
        Series::from_fn(order, |n| {
            if n == 0 {
                return ParamPoly::one();
            }
            acc = &acc * c;
            acc.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^n`; panics if `n` is at or beyond the order.
    pub fn coeff(&self, n: usize) -> &ParamPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Truncate (or keep) to the first `order` coefficients.
    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..order.min(self.coeffs.len())].to_vec(),
        }
    }

    /// Multiply by `x^k`, keeping the order (top coefficients fall off).
    pub fn shift_up(&self, k: usize) -> Series {
        let order = self.order();
        Series::from_fn(order, |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                ParamPoly::zero()
            }
        })
    }

    /// Divide by `x^k`; requires the low `k` coefficients to vanish.
    /// The order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Series, ExactAlgError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(ExactAlgError::BadLowOrderTerms);
        }
        Ok(Series {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        })
    }

    /// Scale by a polynomial in `r`.
    pub fn scale(&self, c: &ParamPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact quotient `self / den` to the shared order.
    ///
    /// Requires `den(0)` to be a nonzero rational constant (a unit of `Q[r]`),
    /// so the quotient stays inside `Q[r]`-coefficient series.
    pub fn divide(&self, den: &Series) -> Result<Series, ExactAlgError> {
        let order = self.order().min(den.order());
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let d0 = &den.coeffs[0];
        if !d0.is_rational_unit() {
            return Err(ExactAlgError::NonUnitConstantTerm);
        }
        let inv_d0 = Rat::from_integer(1.into()) / d0.coeff(0);
        let mut q: Vec<ParamPoly> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if den.coeffs[k].is_zero() || q[n - k].is_zero() {
                    continue;
                }
                acc = &acc - &(&den.coeffs[k] * &q[n - k]);
            }
            q.push(acc.scale(&inv_d0));
        }
        Ok(Series { coeffs: q })
    }

    /// Multiplicative inverse 1/self; requires a unit constant term.
    pub fn inverse(&self) -> Result<Series, ExactAlgError> {
        Series::one(self.order()).divide(self)
    }

    /// Composition `self(inner)`; requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Series) -> Result<Series, ExactAlgError> {
        let order = self.order().min(inner.order());
        if order > 0 && !inner.coeffs[0].is_zero() {
            return Err(ExactAlgError::NonzeroInnerConstant);
        }
        let inner = inner.truncate(order);
        let mut acc = Series::zero(order);
        for k in (0..order).rev() {
            acc = &acc * &inner;
            if !self.coeffs[k].is_zero() {
                acc.coeffs[0] = &acc.coeffs[0] + &self.coeffs[k];
            }
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `g` with `self(g(x)) = x`.
    ///
    /// Requires `self(0) = 0` and `[x^1]self = 1`. Coefficients of `g` are
    /// solved degree by degree from the defining equation, so the result is
    /// exact to the full order.
    pub fn revert(&self) -> Result<Series, ExactAlgError> {
        let order = self.order();
        if order < 2 || !self.coeffs[0].is_zero() || !self.coeffs[1].is_one() {
            return Err(ExactAlgError::BadLowOrderTerms);
        }
        let mut g = Series::zero(order);
        g.coeffs[1] = ParamPoly::one();
        for n in 2..order {
            // [x^n] self(g_partial) differs from [x^n] self(g) exactly by
            // the unknown g_n (the linear term has coefficient 1).
            let comp = self.truncate(n + 1).compose(&g.truncate(n + 1))?;
            g.coeffs[n] = -&comp.coeffs[n];
        }
        Ok(g)
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Series, ExactAlgError> {
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(ExactAlgError::BadConstantTerm);
        }
        let half = super::rat::rat(1, 2);
        let mut s: Vec<ParamPoly> = Vec::with_capacity(order);
        s.push(ParamPoly::one());
        for n in 1..order {
            // a_n = 2 s_n + sum_{k=1}^{n-1} s_k s_{n-k}
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = &acc - &(&s[k] * &s[n - k]);
            }
            s.push(acc.scale(&half));
        }
        Ok(Series { coeffs: s })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Series {
        let order = self.order().saturating_sub(1);
        Series::from_fn(order, |n| {
            self.coeffs[n + 1].scale(&rat_int((n + 1) as i64))
        })
    }

    /// Evaluate every coefficient at a rational `r`-value.
    pub fn eval_r(&self, at: &Rat) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let v = c.eval(at);
                    if v.is_zero() {
                        ParamPoly::zero()
                    } else {
                        ParamPoly::constant(v)
                    }
                })
                .collect(),
        }
    }

    /// Substitute `x^2 -> x`: requires all odd coefficients to vanish.
    pub fn unaerate(&self) -> Result<Series, ExactAlgError> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(ExactAlgError::BadLowOrderTerms);
        }
        Ok(Series {
            coeffs: self.coeffs.iter().step_by(2).cloned().collect(),
        })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| &self.coeffs[n] - &rhs.coeffs[n])
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![ParamPoly::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Series { coeffs: out }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The Catalan generating function c(x) = (1 - sqrt(1-4x)) / (2x).
pub fn catalan_gf(order: usize) -> Series {
    // 1 - sqrt(1-4x) has zero constant term; shifting down by one and
    // halving gives c(x) to order-1... build at order+1 to return `order`.
    let one_minus_4x = Series::from_fn(order + 1, |n| match n {
        0 => ParamPoly::one(),
        1 => ParamPoly::from_int(-4),
        _ => ParamPoly::zero(),
    });
    let s = one_minus_4x.sqrt().expect("constant term is 1");
    let num = &Series::one(order + 1) - &s;
    num.shift_down(1)
        .expect("numerator vanishes at 0")
        .scale(&ParamPoly::constant(super::rat::rat(1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat_int;

    /// Catalan numbers by the defining recurrence (independent oracle).
    fn catalan_numbers(n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        c[0] = 1;
        for m in 1..n {
            c[m] = (0..m).map(|k| c[k] * c[m - 1 - k]).sum();
        }
        c
    }

    #[test]
    fn unit_times_inverse_is_one() {
        let order = 16;
        let den = Series::from_fn(order, |n| match n {
            0 => ParamPoly::one(),
            2 => ParamPoly::one(),
            _ => ParamPoly::zero(),
        });
        let inv = den.inverse().unwrap();
        assert_eq!(&den * &inv, Series::one(order));
    }

    #[test]
    fn square_of_odd_geometric() {
        // (x/(1+x^2))^2 = x^2 - 2x^4 + 3x^6 - ...
        // oracle: convolution of the explicit aerated alternating sequence
        let order = 12;
        let one_plus_x2 = Series::from_fn(order, |n| match n {
            0 | 2 => ParamPoly::one(),
            _ => ParamPoly::zero(),
        });
        let f = Series::x(order).divide(&one_plus_x2).unwrap();
        let sq = &f * &f;
        // oracle by direct convolution of f's coefficients
        let mut expect = vec![0i64; order];
        let fc: Vec<i64> = (0..order)
            .map(|n| {
                if n % 2 == 1 {
                    if (n / 2) % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                } else {
                    0
                }
            })
            .collect();
        for i in 0..order {
            for j in 0..order - i {
                expect[i + j] += fc[i] * fc[j];
            }
        }
        assert_eq!(sq, Series::from_ints(&expect));
        // spot values from the closed pattern
        assert_eq!(sq.coeff(2), &ParamPoly::from_int(1));
        assert_eq!(sq.coeff(4), &ParamPoly::from_int(-2));
        assert_eq!(sq.coeff(6), &ParamPoly::from_int(3));
    }

    #[test]
    fn add_with_r_coefficients() {
        let order = 6;
        let a = Series::from_fn(order, |n| match n {
            0 => ParamPoly::one(),
            2 => ParamPoly::var(),
            _ => ParamPoly::zero(),
        });
        let b = Series::from_fn(order, |n| match n {
            0 => ParamPoly::from_int(-1),
            2 => ParamPoly::from_int(-1),
            _ => ParamPoly::zero(),
        });
        let sum = &a + &b;
        assert_eq!(sum.coeff(2), &ParamPoly::from_ints(&[-1, 1]));
        assert!(sum.coeff(0).is_zero());
    }

    #[test]
    fn divide_family_g() {
        // (1 + r x^2)/(1 + x^2) = 1 + (r-1)x^2 + (1-r)x^4 + (r-1)x^6 - ...
        let order = 10;
        let num = Series::from_fn(order, |n| match n {
            0 => ParamPoly::one(),
            2 => ParamPoly::var(),
            _ => ParamPoly::zero(),
        });
        let den = Series::from_fn(order, |n| match n {
            0 | 2 => ParamPoly::one(),
            _ => ParamPoly::zero(),
        });
        let q = num.divide(&den).unwrap();
        assert_eq!(q.coeff(0), &ParamPoly::one());
        assert_eq!(q.coeff(2), &ParamPoly::from_ints(&[-1, 1]));
        assert_eq!(q.coeff(4), &ParamPoly::from_ints(&[1, -1]));
        assert_eq!(q.coeff(6), &ParamPoly::from_ints(&[-1, 1]));
        // multiply-back oracle
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn divide_rejects_non_unit_constant() {
        let order = 6;
        let den = Series::from_fn(order, |n| match n {
            0 => ParamPoly::var(),
            2 => ParamPoly::one(),
            _ => ParamPoly::zero(),
        });
        assert!(matches!(
            Series::one(order).divide(&den),
            Err(ExactAlgError::NonUnitConstantTerm)
        ));
    }

    #[test]
    fn compose_catalan_aeration() {
        // c(x^2) = 1 + x^2 + 2x^4 + 5x^6 + 14x^8 + ...
        let order = 12;
        let c = catalan_gf(order);
        // oracle: c satisfies c = 1 + y c^2 coefficientwise
        let rhs = &Series::one(order) + &(&Series::x(order) * &(&c * &c));
        assert_eq!(c, rhs);
        let x2 = Series::from_fn(order, |n| {
            if n == 2 {
                ParamPoly::one()
            } else {
                ParamPoly::zero()
            }
        });
        let cx2 = c.compose(&x2).unwrap();
        let cat = catalan_numbers(order / 2);
        for n in 0..order {
            let expect = if n % 2 == 0 { cat[n / 2] } else { 0 };
            assert_eq!(cx2.coeff(n), &ParamPoly::from_int(expect), "at {n}");
        }
    }

    #[test]
    fn compose_with_x_is_identity() {
        let order = 9;
        let f = Series::from_ints(&[0, 1, 5, -2, 7, 0, 3, 1, -4]);
        assert_eq!(f.compose(&Series::x(order)).unwrap(), f);
    }

    #[test]
    fn compose_geometric_row_sums() {
        // 1/(1-x) o x/(1-x) = 1 + x + 2x^2 + 4x^3 + ... = 1 + x/(1-2x)
        let order = 10;
        let geo = Series::geometric(order);
        let one_minus_x = Series::from_fn(order, |n| match n {
            0 => ParamPoly::one(),
            1 => ParamPoly::from_int(-1),
            _ => ParamPoly::zero(),
        });
        let inner = Series::x(order).divide(&one_minus_x).unwrap();
        let got = geo.compose(&inner).unwrap();
        // oracle: direct division (1-x)/(1-2x) = 1 + x/(1-2x)
        let one_minus_2x = Series::from_fn(order, |n| match n {
            0 => ParamPoly::one(),
            1 => ParamPoly::from_int(-2),
            _ => ParamPoly::zero(),
        });
        let oracle = one_minus_x.divide(&one_minus_2x).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got.coeff(0), &ParamPoly::one());
        for n in 1..order {
            assert_eq!(
                got.coeff(n),
                &ParamPoly::from_int(1i64 << (n - 1)),
                "at {n}"
            );
        }
    }

    #[test]
    fn compose_rejects_nonzero_inner_constant() {
        let order = 5;
        assert!(matches!(
            Series::geometric(order).compose(&Series::one(order)),
            Err(ExactAlgError::NonzeroInnerConstant)
        ));
    }

    #[test]
    fn revert_aerated_catalan() {
        // revert(x/(1+x^2)) = x + x^3 + 2x^5 + 5x^7 + 14x^9 = x c(x^2)
        let order = 12;
        let f = Series::x(order)
            .divide(&Series::from_ints_at(&[1, 0, 1], order))
            .unwrap();
        let g = f.revert().unwrap();
        let cat = catalan_numbers(6);
        for n in 0..order {
            let expect = if n % 2 == 1 { cat[(n - 1) / 2] } else { 0 };
            assert_eq!(g.coeff(n), &ParamPoly::from_int(expect), "at {n}");
        }
        // compose-back oracle
        assert_eq!(f.compose(&g).unwrap(), Series::x(order));
        assert_eq!(g.compose(&f).unwrap(), Series::x(order));
    }

    #[test]
    fn revert_identity() {
        let order = 8;
        assert_eq!(Series::x(order).revert().unwrap(), Series::x(order));
    }

    #[test]
    fn revert_odd_cubic() {
        // revert(x(1+x^2)) = x - x^3 + 3x^5 - 12x^7 + ...
        let order = 10;
        let f = Series::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0, 0, 0]);
        let g = f.revert().unwrap();
        assert_eq!(g.coeff(1), &ParamPoly::from_int(1));
        assert_eq!(g.coeff(3), &ParamPoly::from_int(-1));
        assert_eq!(g.coeff(5), &ParamPoly::from_int(3));
        assert_eq!(g.coeff(7), &ParamPoly::from_int(-12));
        assert_eq!(f.compose(&g).unwrap(), Series::x(order));
    }

    /// Lagrange inversion oracle: g_n = (1/n) [x^(n-1)] (x/f)^n.
    fn revert_by_lagrange(f: &Series) -> Series {
        let order = f.order();
        // x/f = 1/(f/x), a power series with constant term 1 when [x^1]f = 1.
        let base = f
            .shift_down(1)
            .unwrap()
            .inverse()
            .expect("f/x has unit constant term");
        let mut g = Series::zero(order);
        if order > 1 {
            g.coeffs[1] = ParamPoly::one();
        }
        let mut pow = base.clone();
        for n in 2..order {
            pow = &pow * &base;
            g.coeffs[n] = pow
                .coeff(n - 1)
                .scale(&crate::exactalg::rat::rat(1, n as i64));
        }
        g
    }

    #[test]
    fn revert_matches_lagrange_inversion() {
        let order = 14;
        for f in [
            Series::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
            Series::from_ints(&[0, 1, -2, 3, 0, 1, 0, 0, 0, 2, 0, 0, 0, -1]),
            Series::x(order)
                .divide(&Series::from_ints_at(&[1, 0, 1], order))
                .unwrap(),
        ] {
            assert_eq!(f.revert().unwrap(), revert_by_lagrange(&f));
        }
    }

    #[test]
    fn revert_rejects_bad_low_terms() {
        assert!(Series::one(8).revert().is_err());
        assert!(Series::from_ints(&[0, 2, 1]).revert().is_err());
    }

    #[test]
    fn sqrt_one_minus_4x() {
        // sqrt(1-4x) = 1 - 2x - 2x^2 - 4x^3 - 10x^4 - ...
        let a = Series::from_ints(&[1, -4, 0, 0, 0, 0, 0, 0, 0, 0]);
        let s = a.sqrt().unwrap();
        assert_eq!(s.coeff(0), &ParamPoly::from_int(1));
        assert_eq!(s.coeff(1), &ParamPoly::from_int(-2));
        assert_eq!(s.coeff(2), &ParamPoly::from_int(-2));
        assert_eq!(s.coeff(3), &ParamPoly::from_int(-4));
        assert_eq!(s.coeff(4), &ParamPoly::from_int(-10));
        // square-back oracle
        assert_eq!(&s * &s, a);
        assert_eq!(Series::one(6).sqrt().unwrap(), Series::one(6));
        assert!(Series::from_ints(&[2, 1]).sqrt().is_err());
    }

    #[test]
    fn catalan_gf_equals_reversion_route() {
        // (1 - sqrt(1-4x^2))/(2x) = x + x^3 + 2x^5 + ... = revert(x/(1+x^2))
        let order = 12;
        let w = Series::from_fn(order + 1, |n| match n {
            0 => ParamPoly::one(),
            2 => ParamPoly::from_int(-4),
            _ => ParamPoly::zero(),
        })
        .sqrt()
        .unwrap();
        let lhs = (&Series::one(order + 1) - &w)
            .shift_down(1)
            .unwrap()
            .scale(&ParamPoly::constant(crate::exactalg::rat::rat(1, 2)));
        let rhs = Series::x(order)
            .divide(&Series::from_ints_at(&[1, 0, 1], order))
            .unwrap()
            .revert()
            .unwrap();
        assert_eq!(lhs.truncate(order), rhs);
    }

    #[test]
    fn derivative_basics() {
        let d = Series::from_ints(&[0, 1, 0, 1]).derivative();
        assert_eq!(d, Series::from_ints(&[1, 0, 3]));
        assert!(Series::one(5).derivative().is_zero());
        // d/dt revert(t(1+t^2)) = 1 - 3t^2 + 15t^4 - ...
        let g = Series::from_ints(&[0, 1, 0, 1, 0, 0, 0, 0])
            .revert()
            .unwrap();
        let dg = g.derivative();
        assert_eq!(dg.coeff(0), &ParamPoly::from_int(1));
        assert_eq!(dg.coeff(2), &ParamPoly::from_int(-3));
        assert_eq!(dg.coeff(4), &ParamPoly::from_int(15));
    }

    #[test]
    fn divide_mul_round_trip_with_orders() {
        let num = Series::from_ints(&[2, -1, 4, 0, 3, 1]);
        let den = Series::from_ints(&[1, 2, -1, 1, 0, 2]);
        let q = num.divide(&den).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn eval_r_specializes() {
        let s = Series::from_fn(4, |n| match n {
            2 => ParamPoly::from_ints(&[-3, 1]),
            _ => ParamPoly::zero(),
        });
        let at3 = s.eval_r(&rat_int(3));
        assert!(at3.is_zero());
    }
}
