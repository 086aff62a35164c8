use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::series::scalar::binomial;
use crate::series::{Scalar, TruncSeries};

/// Monic linear operator `L u = u^{(m)} + c_1 u^{(m-1)} + … + c_m u`.
///
/// Coefficients share one precision; [`DiffOperator::new`] truncates them to
/// the smallest precision given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    coeffs: Vec<TruncSeries>,
}

impl DiffOperator {
    pub fn new(coeffs: Vec<TruncSeries>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "operator order must be at least 1".into(),
            ));
        }
        let p = coeffs.iter().map(TruncSeries::precision).min().unwrap_or(1);
        Ok(Self {
            coeffs: coeffs.iter().map(|c| c.truncate(p)).collect(),
        })
    }

    /// `u^{(m)} = 0` with coefficients known to `precision`.
    pub fn trivial(m: usize, precision: usize) -> Result<Self> {
        Self::new(vec![TruncSeries::zero(precision); m])
    }

    /// Builds the operator from Halphen coefficients `p_i`, `c_i = C(m,i) p_i`.
    pub fn from_halphen(p: Vec<TruncSeries>) -> Result<Self> {
        let m = p.len();
        Self::new(
            p.iter()
                .enumerate()
                .map(|(k, s)| s.scale(&binomial(m, k + 1)))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn precision(&self) -> usize {
        self.coeffs[0].precision()
    }

    /// `c_1, …, c_m`.
    pub fn coeffs(&self) -> &[TruncSeries] {
        &self.coeffs
    }

    /// `c_i` with the convention `c_0 = 1`.
    pub fn coeff(&self, i: usize) -> TruncSeries {
        if i == 0 {
            TruncSeries::one(self.precision())
        } else {
            self.coeffs[i - 1].clone()
        }
    }

    /// Halphen's normalization `p_i = c_i / C(m, i)`.
    pub fn halphen_coeffs(&self) -> Vec<TruncSeries> {
        let m = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&binomial(m, k + 1).recip()))
            .collect()
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.truncate(precision)).collect(),
        }
    }

    /// `L u`, to precision `min(P_u - m, P_L)`.
    pub fn apply(&self, u: &TruncSeries) -> Result<TruncSeries> {
        let m = self.order();
        let mut acc = u.nth_derive(m)?;
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(c * &u.nth_derive(m - k - 1)?);
        }
        Ok(acc)
    }

    /// Whether two operators agree on the coefficients both know.
    pub fn eq_to_precision(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| a.eq_to_precision(b))
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^({})", self.order())?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_to_precision() {
                continue;
            }
            let d = self.order() - k - 1;
            write!(f, " + ({c})*u^({d})")?;
        }
        Ok(())
    }
}

/// `(-1)^k` as a scalar.
pub(crate) fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::scalar::int;

    #[test]
    fn apply_and_halphen() {
        let l = DiffOperator::new(vec![
            TruncSeries::from_ints(&[0, 2], 5),
            TruncSeries::from_ints(&[1], 5),
        ])
        .unwrap();
        // u = t^2: u'' + 2t u' + u = 2 + 4t^2 + t^2
        let u = TruncSeries::from_ints(&[0, 0, 1], 8);
        assert_eq!(l.apply(&u).unwrap(), TruncSeries::from_ints(&[2, 0, 5], 5));
        let p = l.halphen_coeffs();
        assert_eq!(p[0], TruncSeries::from_ints(&[0, 1], 5));
        assert_eq!(DiffOperator::from_halphen(p).unwrap(), l);
        assert_eq!(l.coeff(0), TruncSeries::constant(int(1), 5));
    }

    #[test]
    fn truncates_to_common_precision() {
        let l = DiffOperator::new(vec![TruncSeries::zero(4), TruncSeries::zero(6)]).unwrap();
        assert_eq!(l.precision(), 4);
        assert!(DiffOperator::new(vec![]).is_err());
    }
}
