use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Matrix, Scalar, TruncSeries};

/// A parametrized arc `t ↦ (a_0(t) : … : a_n(t))` in projective `n`-space.
///
/// Row `i` is the coordinate series `a_i(t)`; column `j` is the Taylor
/// vector `a_j ∈ Q^{n+1}`. All coordinates share one precision. Arcs built
/// with [`Arc::new`] are smooth: `a_0 ∧ a_1 ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    coords: Vec<TruncSeries>,
}

impl Arc {
    pub fn new(coords: Vec<TruncSeries>) -> Result<Self> {
        let arc = Self::from_coords(coords)?;
        if arc.precision() < 2 {
            return Err(Error::precision("smoothness check", 2, arc.precision()));
        }
        if !arc.is_smooth() {
            return Err(Error::NotSmooth);
        }
        Ok(arc)
    }

    /// Same as [`Arc::new`] without the smoothness check; shapes are still
    /// validated.
    pub fn from_coords(coords: Vec<TruncSeries>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument(
                "an arc needs at least two coordinates".into(),
            ));
        }
        let p = coords[0].precision();
        if let Some(bad) = coords.iter().find(|c| c.precision() != p) {
            return Err(Error::DimensionMismatch {
                expected: p,
                found: bad.precision(),
            });
        }
        Ok(Self { coords })
    }

    /// Builds an arc from integer rows `a_{ij}`, padding with zeros to
    /// `precision`.
    pub fn from_int_rows(rows: &[&[i64]], precision: usize) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| TruncSeries::from_ints(r, precision))
                .collect(),
        )
    }

    /// Builds an arc from its coefficient matrix (rows are coordinates).
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        Self::new(
            (0..m.rows())
                .map(|i| TruncSeries::new(m.row(i).to_vec()))
                .collect::<Result<_>>()?,
        )
    }

    /// The projective dimension `n`.
    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn precision(&self) -> usize {
        self.coords[0].precision()
    }

    pub fn coords(&self) -> &[TruncSeries] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &TruncSeries {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<TruncSeries> {
        self.coords
    }

    /// `a_{ij}`: coefficient of `t^j` in coordinate `i`.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.coords[i].coeff(j)
    }

    /// The Taylor column `a_j`.
    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.coords.iter().map(|c| c.coeff(j).clone()).collect()
    }

    /// Coefficient matrix restricted to the first `cols` columns.
    pub fn matrix(&self, cols: usize) -> Matrix {
        Matrix::from_fn(self.n() + 1, cols, |i, j| self.entry(i, j).clone())
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c.truncate(precision)).collect(),
        }
    }

    /// `a_0 ∧ a_1 ≠ 0`.
    pub fn is_smooth(&self) -> bool {
        self.precision() >= 2 && self.matrix(2).rank() == 2
    }

    /// Applies `f` to every coordinate.
    pub fn map_coords(&self, f: impl Fn(&TruncSeries) -> Result<TruncSeries>) -> Result<Self> {
        Self::from_coords(self.coords.iter().map(f).collect::<Result<_>>()?)
    }

    /// The divided derivative `a^{[k]}(t)` as a vector of series.
    pub fn divided_derivative(&self, k: usize) -> Result<Vec<TruncSeries>> {
        self.coords.iter().map(|c| c.divided_derive(k)).collect()
    }

    /// Whether all Taylor columns up to the precision are zero.
    pub fn is_zero(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.coeffs().iter().all(Zero::is_zero))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
