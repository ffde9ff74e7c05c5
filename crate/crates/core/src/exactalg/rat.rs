//! Arbitrary-precision exact rational scalars.
//!
//! `Rat` is backed by `num_rational::BigRational`, which keeps every value
//! in canonical form: gcd(|numerator|, denominator) = 1, denominator >= 1,
//! and zero is 0/1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ExactAlgError;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational p/q from machine integers. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Parse an exact rational literal: an optionally signed integer, or `p/q`.
///
/// Floating-point forms (`0.5`, `1e3`) are rejected; the whole crate works
/// in exact arithmetic only.
pub fn parse_rat(s: &str) -> Result<Rat, ExactAlgError> {
    let s = s.trim();
    let bad = || ExactAlgError::BadRationalLiteral(s.to_string());
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    match s.split_once('/') {
        None => {
            let n: Int = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Generalized binomial coefficient `C(m, k)` for integer `m` (possibly
/// negative) and integer `k`; zero when `k < 0`.
///
/// Computed as the falling factorial m(m-1)...(m-k+1) divided by k!,
/// which is exact for every integer `m`.
pub fn binomial(m: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from(m - i);
        den *= Int::from(i + 1);
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    q
}

/// `0^n` with the convention `0^0 = 1`.
pub fn zero_pow(n: i64) -> Int {
    if n == 0 {
        Int::one()
    } else {
        Int::zero()
    }
}

/// `(-1)^n` for possibly negative `n`.
pub fn neg_one_pow(n: i64) -> Int {
    if n.rem_euclid(2) == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// Exact integer power of a rational.
pub fn rat_pow(x: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// True iff `x` is a negative rational (used for sign-aware rendering).
pub fn is_negative(x: &Rat) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-7", "3/4", "-22/7"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
        // non-canonical input normalizes
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("2/-4").unwrap()), "-1/2");
    }

    #[test]
    fn parse_rejects_floats_and_garbage() {
        for s in ["0.5", "1e3", "", "1/0", "a/b", "--3"] {
            assert!(parse_rat(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn binomial_handles_negative_tops() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(-1, 0), Int::from(1));
        assert_eq!(binomial(-1, 3), Int::from(-1));
        assert_eq!(binomial(-3, 2), Int::from(6));
        assert_eq!(binomial(4, -1), Int::from(0));
        assert_eq!(binomial(0, 0), Int::from(1));
    }

    #[test]
    fn zero_pow_convention() {
        assert_eq!(zero_pow(0), Int::from(1));
        assert_eq!(zero_pow(3), Int::from(0));
    }
}
