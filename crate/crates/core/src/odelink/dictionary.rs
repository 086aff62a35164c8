//! Arcs versus monic linear ODEs of order `n + 1`.

use num_traits::Zero;

use super::operator::{sign, DiffOperator};
use crate::arcgeom::Arc;
use crate::error::{Error, Result};
use crate::invariants::{u_lambda_series, wronskian_series, Partition};
use crate::series::scalar::{binomial, factorial, int};
use crate::series::{det_series, Matrix, Scalar, TruncSeries};

/// The operator whose solutions are the coordinates of `a`:
/// `p_i = (-1)^i i! U_{(1^i)}(t) / U(t)` and `c_i = C(n+1, i) p_i`.
///
/// Needs a non-inflexional arc; the coefficients have precision `P - n - 1`.
pub fn arc_to_ode(a: &Arc) -> Result<DiffOperator> {
    let n = a.n();
    let m = n + 1;
    if a.precision() < n + 2 {
        return Err(Error::precision("arc_to_ode", n + 2, a.precision()));
    }
    let q = a.precision() - n - 1;
    let u = wronskian_series(a, q)?;
    if u.coeff(0).is_zero() {
        return Err(Error::Inflexional);
    }
    let u_inv = u.inverse()?;
    let coeffs = (1..=m)
        .map(|i| {
            let ui = u_lambda_series(a, &Partition::column(i), q)?;
            let scale = sign(i) * factorial(i) * binomial(m, i);
            Ok((&ui * &u_inv).scale(&scale))
        })
        .collect::<Result<_>>()?;
    DiffOperator::new(coeffs)
}

/// Fundamental solutions `x_i = t^i / i! + O(t^m)`, `i < m`, by the power
/// series recursion; precision `Q + m` for coefficients of precision `Q`.
pub fn solution_basis(l: &DiffOperator) -> Vec<TruncSeries> {
    let m = l.order();
    let q = l.precision();
    let total = q + m;
    // Falling factorials (idx)! / (idx - k)! reused across the recursion.
    let falling = |top: usize, k: usize| -> Scalar {
        (0..k).fold(int(1), |acc, j| acc * int((top - j) as i64))
    };
    (0..m)
        .map(|i| {
            let mut u = vec![Scalar::zero(); total];
            u[i] = factorial(i).recip();
            for r in 0..q {
                // [t^r] of u^{(m)} + Σ c_k u^{(m-k)} = 0 determines u_{r+m}.
                let mut s = Scalar::zero();
                for (k, c) in l.coeffs().iter().enumerate() {
                    let d = m - k - 1;
                    for j in 0..=r {
                        let cj = c.coeff(r - j);
                        if cj.is_zero() || u[j + d].is_zero() {
                            continue;
                        }
                        s += cj * &u[j + d] * falling(j + d, d);
                    }
                }
                u[r + m] = -s / falling(r + m, m);
            }
            TruncSeries::new(u).expect("positive precision")
        })
        .collect()
}

/// The arc of the fundamental solution basis; needs order at least 2.
pub fn ode_to_arc(l: &DiffOperator) -> Result<Arc> {
    if l.order() < 2 {
        return Err(Error::UnsupportedDimension {
            op: "ode_to_arc",
            n: l.order() - 1,
        });
    }
    Arc::new(solution_basis(l))
}

/// The matrix `M` with `a = M · ode_to_arc(arc_to_ode(a))`:
/// `M_{ij} = j! a_{ij}`, the initial derivatives of the coordinates.
pub fn initial_data_matrix(a: &Arc) -> Matrix {
    let m = a.n() + 1;
    Matrix::from_fn(m, m, |i, j| a.entry(i, j) * factorial(j))
}

/// Residual of the identity
/// `Σ_{i ≤ n+1} (-1)^i a^{[i]} det(a, …, \hat{a^{[i]}}, …, a^{[n+1]}) = 0`,
/// one series per coordinate.
pub fn pv_residual(a: &Arc) -> Result<Vec<TruncSeries>> {
    let n = a.n();
    if a.precision() < n + 2 {
        return Err(Error::precision("pv_residual", n + 2, a.precision()));
    }
    let q = a.precision() - n - 1;
    let cols: Vec<Vec<TruncSeries>> = (0..=n + 1)
        .map(|k| {
            a.divided_derivative(k)
                .map(|c| c.iter().map(|s| s.truncate(q)).collect())
        })
        .collect::<Result<_>>()?;
    let minors: Vec<TruncSeries> = (0..=n + 1)
        .map(|skip| {
            let m: Vec<Vec<TruncSeries>> = (0..=n)
                .map(|row| {
                    (0..=n + 1)
                        .filter(|&k| k != skip)
                        .map(|k| cols[k][row].clone())
                        .collect()
                })
                .collect();
            det_series(&m)
        })
        .collect::<Result<_>>()?;
    Ok((0..=n)
        .map(|row| {
            let mut acc = TruncSeries::zero(q);
            for (i, minor) in minors.iter().enumerate() {
                acc = &acc + &(&cols[i][row] * minor).scale(&sign(i));
            }
            acc
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcgeom::projectively_equal;
    use crate::series::scalar::frac;

    #[test]
    fn lines_and_conics_give_trivial_operators() {
        let line = Arc::from_int_rows(&[&[1], &[0, 1]], 6).unwrap();
        let l = arc_to_ode(&line).unwrap();
        assert_eq!(l, DiffOperator::trivial(2, 4).unwrap());
        let cubic = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1], &[0, 0, 0, 1]], 8).unwrap();
        assert_eq!(
            arc_to_ode(&cubic).unwrap(),
            DiffOperator::trivial(4, 4).unwrap()
        );
    }

    #[test]
    fn trivial_operators_give_normal_curves() {
        let a = ode_to_arc(&DiffOperator::trivial(2, 3).unwrap()).unwrap();
        assert_eq!(a, Arc::from_int_rows(&[&[1], &[0, 1]], 5).unwrap());
        let b = ode_to_arc(&DiffOperator::trivial(3, 3).unwrap()).unwrap();
        assert_eq!(b.coord(2), &TruncSeries::monomial(frac(1, 2), 2, 6));
    }

    #[test]
    fn solutions_satisfy_operator() {
        let l = DiffOperator::new(vec![
            TruncSeries::from_ints(&[1, 2, -1, 3], 4),
            TruncSeries::from_ints(&[0, 1, 1, 1], 4),
            TruncSeries::from_ints(&[2, 0, 5, 1], 4),
        ])
        .unwrap();
        for x in solution_basis(&l) {
            assert!(l.apply(&x).unwrap().is_zero_to_precision());
        }
    }

    #[test]
    fn arc_satisfies_its_operator() {
        let a = Arc::from_int_rows(
            &[
                &[1, 2, 0, 1, 3, 1, 1, 2],
                &[0, 1, 1, -1, 2, 0, 1],
                &[2, 0, 1, 2, 2, 5, -3, 1],
            ],
            8,
        )
        .unwrap();
        let l = arc_to_ode(&a).unwrap();
        for c in a.coords() {
            assert!(l.apply(c).unwrap().is_zero_to_precision());
        }
        for r in pv_residual(&a).unwrap() {
            assert!(r.is_zero_to_precision());
        }
        let back = ode_to_arc(&l).unwrap();
        let m = crate::arcgeom::LinearMap::new(initial_data_matrix(&a)).unwrap();
        let moved = crate::arcgeom::act_linear(&m, &back).unwrap();
        assert!(moved
            .truncate(a.precision())
            .coords()
            .iter()
            .zip(a.coords())
            .all(|(x, y)| x.eq_to_precision(y)));
        assert!(projectively_equal(&moved, &a));
    }
}
