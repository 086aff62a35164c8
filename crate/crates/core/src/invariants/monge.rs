//! The Monge invariant: closed formula and two geometric constructions.
//!
//! The closed formula is
//! `U²(U_3 + 2U_21 + U_111) - 3 U U_1 (U_11 + U_2) + 2 U_1³`.
//! With `-2` in front of `U² U_111` instead of `+1` the polynomial is not
//! covariant under unit-series scaling, so it is not an invariant; that
//! variant is kept as [`monge_formula_displayed`] for comparison only. Both
//! geometric constructions are proportional to the formula above.

use num_traits::Zero;

use super::plucker::{
    u_lambda_series, wronskian_of_coords, wronskian_series, wronskian_series_of_coords,
};
use super::poly::{monge_with_coefficient, InvariantPoly};
use crate::arcgeom::{tangent_scroll_coords, veronese2_coords, Arc};
use crate::error::{Error, Result};
use crate::series::scalar::int;
use crate::series::{Scalar, TruncSeries};

/// `wronskian(veronese2(a)) / U(t)` at `t = 0` equals this multiple of the
/// Monge invariant, for the Veronese basis of [`veronese2`].
pub const VERONESE_CONSTANT: i64 = -8;

/// `wronskian(tangent_scroll(a))` equals this multiple of the Monge
/// invariant, for the lexicographic wedge basis.
pub const SCROLL_CONSTANT: i64 = -24;

/// Evaluates the Monge invariant; needs `n ≥ 2` and precision `n + 4`.
pub fn monge_formula(a: &Arc) -> Result<Scalar> {
    InvariantPoly::monge(a.n())?.eval(a)
}

/// The variant with coefficient `-2` in front of `U² U_111`.
pub fn monge_formula_displayed(a: &Arc) -> Result<Scalar> {
    monge_with_coefficient(a.n(), int(-2))?.eval(a)
}

/// The Monge invariant as a series in `t`, evaluated on the divided
/// derivatives of the arc; needs precision `n + 3 + out_precision`.
pub fn monge_series(a: &Arc, out_precision: usize) -> Result<TruncSeries> {
    let poly = InvariantPoly::monge(a.n())?;
    let mut total = TruncSeries::zero(out_precision);
    for (m, c) in poly.terms() {
        let mut term = TruncSeries::constant(c.clone(), out_precision);
        for (p, e) in m {
            let s: TruncSeries = u_lambda_series(a, p, out_precision)?;
            term = &term * &s.pow(*e);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `W(t) / U(t)` where `W` is the wronskian series of the Veronese image, to
/// precision `out_precision`. The quotient is taken after removing the
/// common power of `t`, so inflexional arcs are allowed as long as `W`
/// vanishes to at least the order of `U`.
pub fn veronese_quotient_series(a: &Arc, out_precision: usize) -> Result<TruncSeries> {
    if a.n() != 2 {
        return Err(Error::UnsupportedDimension {
            op: "monge_veronese",
            n: a.n(),
        });
    }
    let need = 5 + out_precision;
    if a.precision() < need {
        return Err(Error::precision("veronese quotient", need, a.precision()));
    }
    let v = veronese2_coords(a);
    let w = wronskian_series_of_coords(&v, out_precision)?;
    let u = wronskian_series(a, out_precision)?;
    let k = u.valuation();
    if k == u.precision() {
        return Err(Error::InflexionalBeyondPrecision {
            precision: a.precision(),
        });
    }
    if w.valuation() < k {
        return Err(Error::Internal(
            "veronese wronskian is not divisible by U".into(),
        ));
    }
    w.shift_down(k)?.divide(&u.shift_down(k)?)
}

/// Value at 0 of the Veronese quotient; needs `n = 2`, precision 6, and a
/// non-inflexional arc.
pub fn monge_veronese(a: &Arc) -> Result<Scalar> {
    if a.n() != 2 {
        return Err(Error::UnsupportedDimension {
            op: "monge_veronese",
            n: a.n(),
        });
    }
    if a.precision() < 6 {
        return Err(Error::precision("monge_veronese", 6, a.precision()));
    }
    let u = super::plucker::wronskian(a)?;
    if u.is_zero() {
        return Err(Error::Inflexional);
    }
    Ok(wronskian_of_coords(&veronese2_coords(a))? / u)
}

/// Wronskian of the tangent scroll; needs `n = 3` and precision 7.
pub fn monge_scroll(a: &Arc) -> Result<Scalar> {
    if a.n() != 3 {
        return Err(Error::UnsupportedDimension {
            op: "monge_scroll",
            n: a.n(),
        });
    }
    if a.precision() < 7 {
        return Err(Error::precision("monge_scroll", 7, a.precision()));
    }
    wronskian_of_coords(&tangent_scroll_coords(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::scalar::frac;

    #[test]
    fn conic_is_a_member() {
        let a = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1]], 7).unwrap();
        assert_eq!(monge_formula(&a).unwrap(), int(0));
        assert_eq!(monge_veronese(&a).unwrap(), int(0));
    }

    #[test]
    fn slice_arc_has_unit_monge() {
        let a = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1, 0, 0, 1]], 7).unwrap();
        assert_eq!(monge_formula(&a).unwrap(), int(1));
        assert_eq!(monge_veronese(&a).unwrap(), int(VERONESE_CONSTANT));
    }

    #[test]
    fn chart_formula_for_conics() {
        let a2 = frac(3, 2);
        let (a3, a4, a5) = (int(-1), frac(2, 5), int(7));
        let arc = Arc::new(vec![
            TruncSeries::from_ints(&[1], 6),
            TruncSeries::from_ints(&[0, 1], 6),
            TruncSeries::from_scalars(
                &[
                    int(0),
                    int(0),
                    a2.clone(),
                    a3.clone(),
                    a4.clone(),
                    a5.clone(),
                ],
                6,
            ),
        ])
        .unwrap();
        let expected = &a2 * &a2 * &a5 - int(3) * &a2 * &a3 * &a4 + int(2) * &a3 * &a3 * &a3;
        assert_eq!(monge_formula(&arc).unwrap(), expected);
    }

    #[test]
    fn twisted_cubic_scroll_vanishes() {
        let a = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1]], 8).unwrap();
        assert_eq!(monge_scroll(&a).unwrap(), int(0));
        assert_eq!(monge_formula(&a).unwrap(), int(0));
    }
}
