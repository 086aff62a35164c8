//! The group acting on arcs: linear maps on the left, unit series scaling
//! (`G₀`) and reparametrizations (`G₁`) on the right.

use num_traits::{One, Zero};

use super::arc::Arc;
use crate::error::{Error, Result};
use crate::series::scalar::{binomial_usize, pow};
use crate::series::{Matrix, Scalar, TruncSeries};

/// An invertible `(n+1)×(n+1)` matrix with its determinant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
    det: Scalar,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let det = matrix.det()?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { matrix, det })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            matrix: Matrix::identity(size),
            det: Scalar::one(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn det(&self) -> &Scalar {
        &self.det
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn after(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.mul(&other.matrix)?,
            det: &self.det * &other.det,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.inverse()?,
            det: self.det.recip(),
        })
    }
}

/// A unit series `u` (`u_0 ≠ 0`) acting by multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scaling(TruncSeries);

impl Scaling {
    pub fn new(u: TruncSeries) -> Result<Self> {
        if u.coeff(0).is_zero() {
            return Err(Error::InvalidArgument(
                "scaling series needs a nonzero constant term".into(),
            ));
        }
        Ok(Self(u))
    }

    pub fn identity(precision: usize) -> Self {
        Self(TruncSeries::one(precision))
    }

    pub fn series(&self) -> &TruncSeries {
        &self.0
    }

    pub fn leading(&self) -> &Scalar {
        self.0.coeff(0)
    }
}

/// A series `v` with `v_0 = 0`, `v_1 ≠ 0`, acting by composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Reparam(TruncSeries);

impl Reparam {
    pub fn new(v: TruncSeries) -> Result<Self> {
        if v.precision() < 2 || !v.coeff(0).is_zero() || v.coeff(1).is_zero() {
            return Err(Error::InvalidArgument(
                "reparametrization needs a series of valuation exactly 1".into(),
            ));
        }
        Ok(Self(v))
    }

    pub fn identity(precision: usize) -> Self {
        Self(TruncSeries::t(precision.max(2)))
    }

    pub fn series(&self) -> &TruncSeries {
        &self.0
    }

    pub fn leading(&self) -> &Scalar {
        self.0.coeff(1)
    }
}

/// One generator of the group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Linear(LinearMap),
    Scaling(Scaling),
    Reparam(Reparam),
}

impl GroupElement {
    pub fn act(&self, a: &Arc) -> Result<Arc> {
        match self {
            GroupElement::Linear(m) => act_linear(m, a),
            GroupElement::Scaling(u) => act_scale(u, a),
            GroupElement::Reparam(v) => act_reparam(v, a),
        }
    }

    /// The character `det(M)^d`, `u_0^δ` or `v_1^ϖ` by which an invariant of
    /// reduced bidegree `(d, p)` on arcs in `P^n` gets multiplied.
    pub fn character(&self, n: usize, d: usize, p: usize) -> Scalar {
        match self {
            GroupElement::Linear(m) => pow(m.det(), d),
            GroupElement::Scaling(u) => pow(u.leading(), degree(n, d)),
            GroupElement::Reparam(v) => pow(v.leading(), weight(n, d, p)),
        }
    }

    pub fn to_triple(&self, size: usize, precision: usize) -> GroupTriple {
        let mut g = GroupTriple::identity(size, precision);
        match self {
            GroupElement::Linear(m) => g.linear = m.clone(),
            GroupElement::Scaling(u) => g.scaling = u.clone(),
            GroupElement::Reparam(v) => g.reparam = v.clone(),
        }
        g
    }
}

/// Full degree `δ = d(n+1)` of reduced degree `d`.
pub fn degree(n: usize, d: usize) -> usize {
    d * (n + 1)
}

/// Full weight `ϖ = C(n+1,2)·d + p` of reduced bidegree `(d, p)`.
pub fn weight(n: usize, d: usize, p: usize) -> usize {
    binomial_usize(n + 1, 2) * d + p
}

/// A general group element `a ↦ (u · M a) ∘ v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTriple {
    pub linear: LinearMap,
    pub scaling: Scaling,
    pub reparam: Reparam,
}

impl GroupTriple {
    pub fn identity(size: usize, precision: usize) -> Self {
        Self {
            linear: LinearMap::identity(size),
            scaling: Scaling::identity(precision),
            reparam: Reparam::identity(precision),
        }
    }

    pub fn apply(&self, a: &Arc) -> Result<Arc> {
        let b = act_linear(&self.linear, a)?;
        let b = act_scale(&self.scaling, &b)?;
        act_reparam(&self.reparam, &b)
    }

    /// The composite "first `self`, then `next`".
    pub fn then(&self, next: &Self) -> Result<Self> {
        // (u2 · M2 ((u1 · M1 a) ∘ v1)) ∘ v2
        //   = (((u2 ∘ v1⁻¹) · u1) · M2 M1 a) ∘ (v1 ∘ v2)
        let v1_inv = self.reparam.series().revert()?;
        let u2 = next.scaling.series().compose(&v1_inv)?;
        Ok(Self {
            linear: next.linear.after(&self.linear)?,
            scaling: Scaling::new(&u2 * self.scaling.series())?,
            reparam: Reparam::new(self.reparam.series().compose(next.reparam.series())?)?,
        })
    }

    pub fn character(&self, n: usize, d: usize, p: usize) -> Scalar {
        pow(self.linear.det(), d)
            * pow(self.scaling.leading(), degree(n, d))
            * pow(self.reparam.leading(), weight(n, d, p))
    }
}

pub fn act_linear(m: &LinearMap, a: &Arc) -> Result<Arc> {
    if m.size() != a.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: a.n() + 1,
            found: m.size(),
        });
    }
    let p = a.precision();
    let coords = (0..=a.n())
        .map(|i| {
            let mut acc = TruncSeries::zero(p);
            for k in 0..=a.n() {
                let c = &m.matrix()[(i, k)];
                if !c.is_zero() {
                    acc = &acc + &a.coord(k).scale(c);
                }
            }
            acc
        })
        .collect();
    Arc::new(coords)
}

pub fn act_scale(u: &Scaling, a: &Arc) -> Result<Arc> {
    a.map_coords(|c| Ok(c * u.series()))
}

pub fn act_reparam(v: &Reparam, a: &Arc) -> Result<Arc> {
    a.map_coords(|c| c.compose(v.series()))
}
