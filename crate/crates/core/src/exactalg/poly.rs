//! Dense univariate polynomials in the family parameter `r` over `Rat`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{format_rat, is_negative, Rat};
use super::ExactAlgError;

/// Polynomial in `r` with exact rational coefficients, ascending degree.
///
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ParamPoly {
    coeffs: Vec<Rat>,
}

impl ParamPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }

    /// The variable `r`.
    pub fn var() -> Self {
        ParamPoly::from_rats(vec![Rat::zero(), Rat::one()])
    }

    /// Constant polynomial.
    pub fn constant(c: Rat) -> Self {
        ParamPoly::from_rats(vec![c])
    }

    /// Constant polynomial from a machine integer.
    pub fn from_int(n: i64) -> Self {
        ParamPoly::constant(super::rat::rat_int(n))
    }

    /// Build from ascending coefficients, normalizing trailing zeros away.
    pub fn from_rats(coeffs: Vec<Rat>) -> Self {
        let mut p = ParamPoly { coeffs };
        p.normalize();
        p
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        ParamPoly::from_rats(coeffs.iter().map(|&c| super::rat::rat_int(c)).collect())
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True iff this is a nonzero constant, i.e. a unit of `Q[r]`.
    pub fn is_rational_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Coefficient of `r^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient slice (canonical, no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly::from_rats(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = ParamPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `q` with `q * div = self`, or
    /// `NonZeroRemainder` if `div` does not divide `self` in `Q[r]`.
    pub fn div_exact(&self, div: &ParamPoly) -> Result<ParamPoly, ExactAlgError> {
        if div.is_zero() {
            return Err(ExactAlgError::NonZeroRemainder);
        }
        if self.is_zero() {
            return Ok(ParamPoly::zero());
        }
        let dd = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len()];
        let lead = div.leading().unwrap();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / lead;
            q[k] = c.clone();
            for (i, d) in div.coeffs.iter().enumerate() {
                let idx = k + i;
                rem[idx] = &rem[idx] - &(d * &c);
            }
            while matches!(rem.last(), Some(t) if t.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        if rem.is_empty() {
            Ok(ParamPoly::from_rats(q))
        } else {
            Err(ExactAlgError::NonZeroRemainder)
        }
    }

    /// Canonical text rendering, ascending powers: `2 - 3*r + r^2`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag_one = mag.is_one();
            match (i, mag_one) {
                (0, _) => out.push_str(&format_rat(&mag)),
                (1, true) => out.push('r'),
                (1, false) => {
                    out.push_str(&format_rat(&mag));
                    out.push_str("*r");
                }
                (_, true) => out.push_str(&format!("r^{i}")),
                (_, false) => out.push_str(&format!("{}*r^{i}", format_rat(&mag))),
            }
        }
        out
    }

    /// Coefficients as canonical strings (ascending), for JSON payloads.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }

    /// Parse from a list of canonical coefficient strings.
    pub fn from_coeff_strings<S: AsRef<str>>(coeffs: &[S]) -> Result<Self, ExactAlgError> {
        let v = coeffs
            .iter()
            .map(|s| super::rat::parse_rat(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParamPoly::from_rats(v))
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        ParamPoly::from_rats(out)
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        ParamPoly::from_rats(out)
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![num_traits::Zero::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        ParamPoly::from_rats(out)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::from_rats(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for ParamPoly {
            type Output = ParamPoly;
            fn $method(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> ParamPoly {
        ParamPoly::from_ints(coeffs)
    }

    #[test]
    fn mul_schoolbook() {
        // (r - 3)(r - 3) = r^2 - 6r + 9
        let a = p(&[-3, 1]);
        assert_eq!(&a * &a, p(&[9, -6, 1]));
    }

    #[test]
    fn additive_inverse_cancels() {
        // (1 - r) + (r - 1) = 0
        assert_eq!(&p(&[1, -1]) + &p(&[-1, 1]), ParamPoly::zero());
    }

    #[test]
    fn sub_of_moment_entries() {
        // (r^2 - 3r + 2) - (r^2 - 4r + 5) = r - 3
        assert_eq!(&p(&[2, -3, 1]) - &p(&[5, -4, 1]), p(&[-3, 1]));
    }

    #[test]
    fn div_exact_square_by_factor() {
        // (r^2 - 6r + 9) / (r - 3) = r - 3
        let q = p(&[9, -6, 1]).div_exact(&p(&[-3, 1])).unwrap();
        assert_eq!(q, p(&[-3, 1]));
    }

    #[test]
    fn div_exact_central_ratio() {
        // 5(3 - r) / (r - 3) = -5
        let q = p(&[15, -5]).div_exact(&p(&[-3, 1])).unwrap();
        assert_eq!(q, p(&[-5]));
    }

    #[test]
    fn div_exact_rejects_non_divisible() {
        assert!(matches!(
            p(&[-3, 1]).div_exact(&p(&[-2, 1])),
            Err(ExactAlgError::NonZeroRemainder)
        ));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-3, 1]).eval(&rat_int(3)), rat_int(0));
        assert_eq!(p(&[2, -3, 1]).eval(&rat_int(0)), rat_int(2));
        assert_eq!(p(&[1, -1]).eval(&rat(1, 2)), rat(1, 2));
    }

    #[test]
    fn render_canonical() {
        assert_eq!(p(&[2, -3, 1]).render(), "2 - 3*r + r^2");
        assert_eq!(p(&[0]).render(), "0");
        assert_eq!(p(&[-3, 1]).render(), "-3 + r");
        assert_eq!(p(&[1, -1]).render(), "1 - r");
        assert_eq!(
            ParamPoly::from_rats(vec![rat(1, 2)]).render(),
            "1/2".to_string()
        );
        assert_eq!(p(&[0, 0, -1]).render(), "-r^2");
    }

    #[test]
    fn coeff_strings_round_trip() {
        let a = ParamPoly::from_rats(vec![rat(1, 2), rat_int(-3), rat_int(1)]);
        let s = a.coeff_strings();
        assert_eq!(s, vec!["1/2", "-3", "1"]);
        assert_eq!(ParamPoly::from_coeff_strings(&s).unwrap(), a);
    }
}
