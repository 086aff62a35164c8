//! Plücker coordinates `U_λ` of the Taylor columns of an arc.

use num_traits::Zero;

use super::partition::Partition;
use crate::arcgeom::Arc;
use crate::error::{Error, Result};
use crate::series::{det_scalar, det_series, Scalar, TruncSeries};

/// Column indices `λ_{n-j} + j`, `j = 0..=n`.
fn column_indices(n: usize, lambda: &Partition) -> Result<Vec<usize>> {
    let parts = lambda.padded(n)?;
    Ok((0..=n).map(|j| parts[n - j] + j).collect())
}

/// `U_λ = det(a_{λ_n}, a_{λ_{n-1}+1}, …, a_{λ_0+n})`.
///
/// Needs precision `λ_0 + n + 1`.
pub fn u_lambda(a: &Arc, lambda: &Partition) -> Result<Scalar> {
    let n = a.n();
    let idx = column_indices(n, lambda)?;
    let need = lambda.largest() + n + 1;
    if a.precision() < need {
        return Err(Error::precision("u_lambda", need, a.precision()));
    }
    let m: Vec<Vec<Scalar>> = (0..=n)
        .map(|i| idx.iter().map(|&j| a.entry(i, j).clone()).collect())
        .collect();
    Ok(det_scalar(&m))
}

/// The series `t ↦ U_λ` evaluated on the divided-derivative columns
/// `a^{[k]}(t)`, to precision `out_precision`. Its constant term is
/// [`u_lambda`].
///
/// Needs precision `λ_0 + n + out_precision`.
pub fn u_lambda_series(a: &Arc, lambda: &Partition, out_precision: usize) -> Result<TruncSeries> {
    let n = a.n();
    let idx = column_indices(n, lambda)?;
    let need = lambda.largest() + n + out_precision.max(1);
    if a.precision() < need {
        return Err(Error::precision("u_lambda_series", need, a.precision()));
    }
    let cols: Vec<Vec<TruncSeries>> = idx
        .iter()
        .map(|&k| a.divided_derivative(k))
        .collect::<Result<_>>()?;
    let m: Vec<Vec<TruncSeries>> = (0..=n)
        .map(|i| cols.iter().map(|c| c[i].truncate(out_precision)).collect())
        .collect();
    det_series(&m)
}

/// The wronskian `U = det(a_0, …, a_n)`.
pub fn wronskian(a: &Arc) -> Result<Scalar> {
    u_lambda(a, &Partition::empty())
}

/// `U(t)` to precision `out_precision`.
pub fn wronskian_series(a: &Arc, out_precision: usize) -> Result<TruncSeries> {
    u_lambda_series(a, &Partition::empty(), out_precision)
}

/// An arc is inflexional at the origin when `U = 0`.
pub fn is_inflexional(a: &Arc) -> Result<bool> {
    Ok(wronskian(a)?.is_zero())
}

/// The affine coordinate `u_λ = U_λ / U` (Halphen's convention `U = 1`).
pub fn affine_coordinate(a: &Arc, lambda: &Partition) -> Result<Scalar> {
    let u = wronskian(a)?;
    if u.is_zero() {
        return Err(Error::Inflexional);
    }
    Ok(u_lambda(a, lambda)? / u)
}

/// Determinant of the first `k` Taylor columns of `k` coordinate series:
/// the wronskian at 0 of an arc given only by its coordinates.
pub fn wronskian_of_coords(coords: &[TruncSeries]) -> Result<Scalar> {
    let k = coords.len();
    let p = coords.iter().map(TruncSeries::precision).min().unwrap_or(0);
    if p < k {
        return Err(Error::precision("wronskian", k, p));
    }
    let m: Vec<Vec<Scalar>> = coords.iter().map(|c| c.coeffs()[..k].to_vec()).collect();
    Ok(det_scalar(&m))
}

/// The wronskian series of a coordinate family, to precision `out_precision`.
pub fn wronskian_series_of_coords(
    coords: &[TruncSeries],
    out_precision: usize,
) -> Result<TruncSeries> {
    let k = coords.len();
    let p = coords.iter().map(TruncSeries::precision).min().unwrap_or(0);
    if p < k - 1 + out_precision {
        return Err(Error::precision(
            "wronskian_series",
            k - 1 + out_precision,
            p,
        ));
    }
    let m: Vec<Vec<TruncSeries>> = coords
        .iter()
        .map(|c| {
            (0..k)
                .map(|j| Ok(c.divided_derive(j)?.truncate(out_precision)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    det_series(&m)
}
