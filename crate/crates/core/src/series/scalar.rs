//! Exact rational scalars and their canonical text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number of arbitrary size, always kept reduced with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"a"` or `"a/b"` with decimal integers; surrounding whitespace is
/// ignored.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Input(format!("not a rational literal: {text:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Input(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(parse_int(num)?, den))
        }
    }
}

/// Canonical string form: `"a"` for integers, `"a/b"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn pow(x: &Scalar, exp: usize) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..exp {
        acc *= x;
    }
    acc
}

pub fn factorial(k: usize) -> Scalar {
    (1..=k).fold(Scalar::one(), |acc, i| acc * int(i as i64))
}

/// Binomial coefficient as an exact scalar; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut acc = Scalar::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rational cube root, if one exists.
pub fn rational_cube_root(x: &Scalar) -> Option<Scalar> {
    let root = |v: &BigInt| -> Option<BigInt> {
        let r = v.abs().cbrt();
        if (&r * &r * &r) == v.abs() {
            Some(if v.is_negative() { -r } else { r })
        } else {
            None
        }
    };
    Some(Scalar::new(root(x.numer())?, root(x.denom())?))
}

/// Converts to the nearest `f64`; used only by the optional floating-point
/// completion of canonical forms.
pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn sign_pow(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}
