//! Liouville normalization: substitute `x = φ y` with `φ = exp(-∫ p_1)` to
//! remove the sub-leading coefficient.

use super::operator::DiffOperator;
use crate::error::{Error, Result};
use crate::series::scalar::{binomial, int};
use crate::series::TruncSeries;

/// Returns `(L̃, φ)` with `L̃ y = φ⁻¹ L(φ y)` and `φ = exp(-∫ c_1 / m)`, so
/// the coefficient of `y^{(m-1)}` in `L̃` vanishes. An operator that already
/// has `c_1 = 0` is returned unchanged with `φ = 1`.
pub fn liouville_normalize(l: &DiffOperator) -> Result<(DiffOperator, TruncSeries)> {
    let m = l.order();
    let c1 = l.coeff(1);
    if c1.is_zero_to_precision() {
        return Ok((l.clone(), TruncSeries::one(l.precision())));
    }
    if l.precision() < m + 1 {
        return Err(Error::precision(
            "liouville_normalize",
            m + 1,
            l.precision(),
        ));
    }
    let p1 = c1.scale(&int(m as i64).recip());
    let phi = p1.antiderivative().scale(&int(-1)).exp()?;
    // g_k = φ^{(k)} / φ: g_0 = 1, g_{k+1} = g_k' - p_1 g_k.
    let mut g = vec![TruncSeries::one(l.precision())];
    for k in 0..m {
        let next = &g[k].derive()? - &(&g[k] * &p1);
        g.push(next);
    }
    let coeffs = (1..=m)
        .map(|row| {
            let mut acc = l.coeff(row);
            for i in 0..row {
                let term = &l.coeff(i) * &g[row - i];
                acc = &acc + &term.scale(&binomial(m - i, row - i));
            }
            acc
        })
        .collect();
    Ok((DiffOperator::new(coeffs)?, phi.truncate(l.precision() + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::scalar::frac;

    #[test]
    fn already_normal_is_unchanged() {
        let l = DiffOperator::new(vec![
            TruncSeries::zero(5),
            TruncSeries::from_ints(&[1, 2], 5),
        ])
        .unwrap();
        let (n, phi) = liouville_normalize(&l).unwrap();
        assert_eq!(n, l);
        assert_eq!(phi, TruncSeries::one(5));
    }

    #[test]
    fn removes_first_order_term() {
        // u'' + 2t u': p1 = t, φ = exp(-t²/2)
        let l = DiffOperator::new(vec![
            TruncSeries::from_ints(&[0, 2], 8),
            TruncSeries::zero(8),
        ])
        .unwrap();
        let (n, phi) = liouville_normalize(&l).unwrap();
        assert!(n.coeff(1).is_zero_to_precision());
        assert_eq!(phi.coeff(2), &frac(-1, 2));
        assert_eq!(phi.coeff(4), &frac(1, 8));
        // Solutions of L divided by φ solve L̃.
        let phi_inv = phi.inverse().unwrap();
        for x in crate::odelink::solution_basis(&l) {
            let y = &x * &phi_inv;
            assert!(n.apply(&y).unwrap().is_zero_to_precision());
        }
    }
}
