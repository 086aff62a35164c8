//! Truncated power series `Σ c_k t^k + O(t^P)` over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{factorial, format_scalar, int, Scalar};
use crate::error::{Error, Result};

/// A power series known to precision `P`: the coefficients of `t^0..t^{P-1}`.
///
/// Precision travels with the value. Binary operations return the smaller
/// precision of their operands; differentiation loses one coefficient. A
/// series whose known coefficients all vanish is only "zero to precision P".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Scalar>,
}

impl TruncSeries {
    /// Builds a series from its coefficients; the precision is their count.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("precision must be positive".into()));
        }
        Ok(Self { coeffs })
    }

    /// Integer coefficients, zero padded or truncated to `precision`.
    pub fn from_ints(values: &[i64], precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        let mut coeffs: Vec<Scalar> = values.iter().take(precision).map(|&v| int(v)).collect();
        coeffs.resize(precision, Scalar::zero());
        Self { coeffs }
    }

    /// Scalar coefficients, zero padded or truncated to `precision`.
    pub fn from_scalars(values: &[Scalar], precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        let mut coeffs: Vec<Scalar> = values.iter().take(precision).cloned().collect();
        coeffs.resize(precision, Scalar::zero());
        Self { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_ints(&[], precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Scalar::one(), precision)
    }

    pub fn constant(c: Scalar, precision: usize) -> Self {
        Self::from_scalars(&[c], precision)
    }

    /// `c · t^k + O(t^precision)`.
    pub fn monomial(c: Scalar, k: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k < precision {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity reparametrization `t`.
    pub fn t(precision: usize) -> Self {
        Self::monomial(Scalar::one(), 1, precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `t^k`. Panics when `k` is beyond the precision.
    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&Scalar> {
        self.coeffs.get(k)
    }

    /// Index of the first nonzero coefficient, or `P` if none is known.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.valuation() == self.precision()
    }

    /// Drops coefficients beyond `precision` (never raises precision).
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        Self {
            coeffs: self.coeffs[..precision.min(self.precision())].to_vec(),
        }
    }

    /// Equality of the coefficients both operands know.
    pub fn eq_to_precision(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides by `t^k`, discarding the first `k` coefficients: precision `P - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k >= self.precision() {
            return Err(Error::PrecisionExhausted);
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplies by `t^k`: precision `P + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    fn cauchy(&self, other: &Self, precision: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); precision];
        for (i, a) in self.coeffs.iter().enumerate().take(precision) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(precision - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.precision());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::InvalidSeries("inverse of a non-unit series".into()));
        }
        let inv0 = a0.recip();
        let p = self.precision();
        let mut r: Vec<Scalar> = Vec::with_capacity(p);
        r.push(inv0.clone());
        for k in 1..p {
            let mut s = Scalar::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &r[k - i];
            }
            r.push(-s * &inv0);
        }
        Ok(Self { coeffs: r })
    }

    /// `self / other` for a unit `other`.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// `self ∘ g` for `g` of positive valuation; precision `min(P_f, P_g)`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::InvalidSeries(
                "composition needs an inner series of positive valuation".into(),
            ));
        }
        let p = self.precision().min(g.precision());
        let g = g.truncate(p);
        // Horner: f0 + g(f1 + g(f2 + ...)).
        let mut acc = Self::zero(p);
        for c in self.coeffs[..p].iter().rev() {
            acc = acc.cauchy(&g, p);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse of a valuation-one series, same precision.
    pub fn revert(&self) -> Result<Self> {
        let p = self.precision();
        if p < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::InvalidSeries(
                "reversion needs a series of valuation exactly 1".into(),
            ));
        }
        let g1_inv = self.coeffs[1].recip();
        let mut h = Self::monomial(g1_inv.clone(), 1, p);
        // Fix one coefficient at a time: the t^k coefficient of g∘h depends
        // on h_k only through g1·h_k.
        for k in 2..p {
            let c = self.compose(&h)?.coeffs[k].clone();
            h.coeffs[k] -= c * &g1_inv;
        }
        Ok(h)
    }

    /// Formal derivative; precision drops by one.
    pub fn derive(&self) -> Result<Self> {
        if self.precision() < 2 {
            return Err(Error::PrecisionExhausted);
        }
        Ok(Self {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        })
    }

    /// `f^{(i)} / i!`; precision `P - i`.
    pub fn divided_derive(&self, i: usize) -> Result<Self> {
        if i >= self.precision() {
            return Err(Error::PrecisionExhausted);
        }
        // [t^k] f^{(i)}/i! = C(k+i, i) f_{k+i}
        let mut coeffs = Vec::with_capacity(self.precision() - i);
        let mut binom = Scalar::one();
        for k in 0..self.precision() - i {
            if k > 0 {
                binom = binom * int((k + i) as i64) / int(k as i64);
            }
            coeffs.push(&self.coeffs[k + i] * &binom);
        }
        Ok(Self { coeffs })
    }

    /// `i`-th derivative; precision `P - i`.
    pub fn nth_derive(&self, i: usize) -> Result<Self> {
        Ok(self.divided_derive(i)?.scale(&factorial(i)))
    }

    /// Antiderivative with zero constant term; precision `P + 1`.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.precision() + 1);
        coeffs.push(Scalar::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / int(i as i64 + 1));
        }
        Self { coeffs }
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidSeries(
                "exp needs a series of positive valuation".into(),
            ));
        }
        // e' = f' e gives k e_k = Σ_{j=1..k} j f_j e_{k-j}.
        let p = self.precision();
        let mut e: Vec<Scalar> = vec![Scalar::one()];
        for k in 1..p {
            let mut s = Scalar::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * int(j as i64) * &e[k - j];
                }
            }
            e.push(s / int(k as i64));
        }
        Ok(Self { coeffs: e })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = format_scalar(c);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if body != "1" {
                        write!(f, "{body}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.precision())
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.cauchy(rhs, self.precision().min(rhs.precision()))
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TruncSeries> for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: &TruncSeries) -> TruncSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<TruncSeries> for &TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::scalar::frac;

    fn s(v: &[i64], p: usize) -> TruncSeries {
        TruncSeries::from_ints(v, p)
    }

    #[test]
    fn addition_takes_min_precision() {
        assert_eq!(&s(&[1, 1], 3) + &s(&[0, 1, 1], 3), s(&[1, 2, 1], 3));
        assert_eq!(&s(&[1], 2) + &s(&[0, 0, 1], 4), s(&[1], 2));
        let f = s(&[3, -1, 2], 3);
        assert_eq!(&f + &TruncSeries::zero(3), f);
    }

    #[test]
    fn products() {
        assert_eq!(&s(&[1, 1], 3) * &s(&[1, -1], 3), s(&[1, 0, -1], 3));
        assert_eq!(&s(&[1, 1, 1], 3) * &s(&[1, 1], 3), s(&[1, 2, 2], 3));
        let f = s(&[2, 0, 5], 3);
        assert_eq!(&f * &TruncSeries::one(3), f);
    }

    #[test]
    fn composition() {
        let f = s(&[0, 0, 1], 4);
        assert_eq!(
            f.compose(&s(&[0, 1, 1], 4)).unwrap(),
            s(&[0, 0, 1, 2, 1], 4)
        );
        assert_eq!(
            s(&[1, 1], 2).compose(&s(&[0, 2], 2)).unwrap(),
            s(&[1, 2], 2)
        );
        let g = s(&[4, 1, 7], 3);
        assert_eq!(g.compose(&TruncSeries::t(3)).unwrap(), g);
        assert!(g.compose(&s(&[1, 1], 3)).is_err());
    }

    #[test]
    fn reversion() {
        assert_eq!(TruncSeries::t(4).revert().unwrap(), TruncSeries::t(4));
        assert_eq!(s(&[0, 1, 1], 4).revert().unwrap(), s(&[0, 1, -1, 2], 4));
        assert_eq!(
            s(&[0, 2], 3).revert().unwrap(),
            TruncSeries::monomial(frac(1, 2), 1, 3)
        );
        assert!(s(&[0, 0, 1], 4).revert().is_err());
    }

    #[test]
    fn derivatives() {
        assert_eq!(s(&[0, 0, 1], 3).derive().unwrap(), s(&[0, 2], 2));
        assert_eq!(
            s(&[0, 0, 0, 1], 4).divided_derive(2).unwrap(),
            s(&[0, 3], 2)
        );
        let f = s(&[5, 4, 3], 3);
        assert_eq!(f.divided_derive(0).unwrap(), f);
        assert!(f.divided_derive(3).is_err());
        assert!(s(&[1], 1).derive().is_err());
    }

    #[test]
    fn exp_and_integral() {
        assert_eq!(TruncSeries::zero(3).exp().unwrap(), TruncSeries::one(3));
        let e = TruncSeries::t(4).exp().unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), frac(1, 2), frac(1, 6)][..]);
        assert_eq!(
            s(&[1, 1], 2).antiderivative().coeffs(),
            &[int(0), int(1), frac(1, 2)][..]
        );
        assert!(s(&[1, 1], 2).exp().is_err());
    }

    #[test]
    fn valuation_of_zero_is_precision() {
        assert_eq!(TruncSeries::zero(5).valuation(), 5);
        assert!(TruncSeries::zero(5).is_zero_to_precision());
        assert_eq!(s(&[0, 0, 3], 4).valuation(), 2);
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -2, 0, 1], 4).to_string(), "1 - 2*t + t^3 + O(t^4)");
        assert_eq!(TruncSeries::zero(2).to_string(), "0 + O(t^2)");
    }
}
