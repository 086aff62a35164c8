//! Adjoint operators, the bilinear concomitant `B` and Plücker duality of
//! solution arcs.

use num_traits::Zero;

use super::dictionary::{ode_to_arc, solution_basis};
use super::operator::{sign, DiffOperator};
use crate::arcgeom::{dual_arc, projectively_equal, Arc};
use crate::error::{Error, Result};
use crate::series::scalar::binomial;
use crate::series::{Matrix, Scalar, TruncSeries};

/// The monic adjoint: `L*_raw v = Σ_i (-1)^{m-i} D^{m-i}(c_i v)` (with
/// `c_0 = 1`) multiplied by `(-1)^m`, so that
/// `q_l = Σ_{i ≤ l} (-1)^i C(m-i, l-i) c_i^{(l-i)}`.
///
/// Coefficient precision drops by `m - 1`.
pub fn adjoint(l: &DiffOperator) -> Result<DiffOperator> {
    let m = l.order();
    if l.precision() < m {
        return Err(Error::precision("adjoint", m, l.precision()));
    }
    let q = (1..=m)
        .map(|row| {
            let mut acc = l.coeff(row).scale(&sign(row));
            for i in 1..row {
                let term = l.coeff(i).nth_derive(row - i)?;
                acc = &acc + &term.scale(&(sign(i) * binomial(m - i, row - i)));
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    DiffOperator::new(q)
}

/// `L*_raw v = (-1)^m · adjoint(L) v`, the classical formal adjoint.
pub fn apply_raw_adjoint(l: &DiffOperator, v: &TruncSeries) -> Result<TruncSeries> {
    Ok(adjoint(l)?.apply(v)?.scale(&sign(l.order())))
}

/// The bilinear concomitant, built by integrating `Σ_i c_i u^{(m-i)} v` by
/// parts:
/// `B(u,v) = Σ_{i<m} Σ_{j<m-i} (-1)^j (c_i v)^{(j)} u^{(m-i-1-j)}`.
///
/// It satisfies `B' = (Lu) v - u L*_raw v` exactly.
pub fn bilinear_b(l: &DiffOperator, u: &TruncSeries, v: &TruncSeries) -> Result<TruncSeries> {
    let m = l.order();
    let mut acc: Option<TruncSeries> = None;
    for i in 0..m {
        let cv = &l.coeff(i) * v;
        for j in 0..m - i {
            let term = (&cv.nth_derive(j)? * &u.nth_derive(m - i - 1 - j)?).scale(&sign(j));
            acc = Some(match acc {
                None => term,
                Some(a) => &a + &term,
            });
        }
    }
    acc.ok_or_else(|| Error::Internal("empty concomitant".into()))
}

/// `(Lu) v - u L*_raw v - B(u,v)'`, which must vanish to precision.
pub fn lagrange_identity_residual(
    l: &DiffOperator,
    u: &TruncSeries,
    v: &TruncSeries,
) -> Result<TruncSeries> {
    let lhs = &(&l.apply(u)? * v) - &(u * &apply_raw_adjoint(l, v)?);
    Ok(&lhs - &bilinear_b(l, u, v)?.derive()?)
}

/// Evaluates the literature closed form
/// `B(u,v) = Σ_{k,l} u^{(k)} v^{(l)} Σ_j (-1)^j C(j,k) c_{m-l-j-1}^{(j-k)}`
/// with raw coefficients `c` and `c_0 = 1`. Used only as a comparator.
pub fn bilinear_b_closed_form(
    l: &DiffOperator,
    u: &TruncSeries,
    v: &TruncSeries,
) -> Result<TruncSeries> {
    let m = l.order();
    let mut acc: Option<TruncSeries> = None;
    for k in 0..m {
        for ll in 0..m {
            for j in k..m {
                if ll + j + 1 > m {
                    continue;
                }
                let idx = m - ll - j - 1;
                let coef = l
                    .coeff(idx)
                    .nth_derive(j - k)?
                    .scale(&(sign(j) * binomial(j, k)));
                let term = &(&coef * &u.nth_derive(k)?) * &v.nth_derive(ll)?;
                acc = Some(match acc {
                    None => term,
                    Some(a) => &a + &term,
                });
            }
        }
    }
    acc.ok_or_else(|| Error::Internal("empty closed form".into()))
}

/// The literature formula
/// `q_i = Σ_{0 ≤ k ≤ m-i} (-1)^{i+k} C(m-i-k, k) c_{i+k}^{(k)}`, used only as
/// a comparator against [`adjoint`].
pub fn adjoint_closed_form(l: &DiffOperator) -> Result<DiffOperator> {
    let m = l.order();
    let q = (1..=m)
        .map(|i| {
            let mut acc = TruncSeries::zero(l.precision());
            for k in 0..=m - i {
                let c = binomial(m - i - k, k);
                if c.is_zero() {
                    continue;
                }
                let term = l.coeff(i + k).nth_derive(k)?;
                acc = &acc + &term.scale(&(sign(i + k) * c));
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    DiffOperator::new(q)
}

/// First disagreement between two operators of the same order: the
/// coefficient index `i` (1-based) and the power of `t`.
pub fn first_mismatch(a: &DiffOperator, b: &DiffOperator) -> Option<(usize, usize)> {
    for i in 0..a.order().min(b.order()) {
        let (x, y) = (&a.coeffs()[i], &b.coeffs()[i]);
        for k in 0..x.precision().min(y.precision()) {
            if x.coeff(k) != y.coeff(k) {
                return Some((i + 1, k));
            }
        }
    }
    None
}

/// Gram matrix `G_{ij} = B(x_i, y_j)(0)` for the fundamental bases of `L`
/// and of its adjoint.
pub fn gram_matrix(l: &DiffOperator) -> Result<Matrix> {
    let m = l.order();
    if l.precision() < m {
        return Err(Error::precision("gram_matrix", m, l.precision()));
    }
    let xs = solution_basis(l);
    let ys = solution_basis(&adjoint(l)?);
    let mut g = Matrix::zeros(m, m);
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in ys.iter().enumerate() {
            g[(i, j)] = bilinear_b(l, x, y)?.coeff(0).clone();
        }
    }
    Ok(g)
}

/// Whether the dual of the solution arc of `L`, mapped through `Gᵀ`, is
/// projectively equal to the solution arc of the adjoint.
pub fn plucker_duality_check(l: &DiffOperator) -> Result<bool> {
    let g = gram_matrix(l)?;
    let xi = dual_arc(&ode_to_arc(l)?)?;
    let gt = g.transpose();
    let size = g.rows();
    let eta_coords: Vec<TruncSeries> = (0..size)
        .map(|j| {
            let mut acc = TruncSeries::zero(xi.precision());
            for i in 0..size {
                let c: &Scalar = &gt[(j, i)];
                if !c.is_zero() {
                    acc = &acc + &xi.coord(i).scale(c);
                }
            }
            acc
        })
        .collect();
    let eta = Arc::from_coords(eta_coords)?;
    let adj = ode_to_arc(&adjoint(l)?)?;
    Ok(projectively_equal(&eta, &adj))
}
