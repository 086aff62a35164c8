//! Seeded random generators for arcs, group elements and operators.
//!
//! Everything is driven by a caller-supplied [`rand::Rng`]; the property
//! suites use `ChaCha8Rng` seeded explicitly so runs are reproducible.

use num_traits::{One, Zero};
use rand::Rng;

use crate::arcgeom::{Arc, GroupTriple, LinearMap, Reparam, Scaling};
use crate::error::Result;
use crate::invariants::wronskian;
use crate::odelink::DiffOperator;
use crate::series::scalar::{frac, int};
use crate::series::{Matrix, Scalar, TruncSeries};

/// A small rational `a/b` with `|a| ≤ 5`, `1 ≤ b ≤ 3`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// A small nonzero rational.
pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let x = scalar(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn series<R: Rng + ?Sized>(rng: &mut R, precision: usize) -> TruncSeries {
    TruncSeries::new((0..precision).map(|_| scalar(rng)).collect()).expect("positive precision")
}

/// A random arc whose first `n + 1` Taylor columns are independent.
pub fn arc<R: Rng + ?Sized>(rng: &mut R, n: usize, precision: usize) -> Arc {
    loop {
        let coords = (0..=n).map(|_| series(rng, precision)).collect();
        if let Ok(a) = Arc::new(coords) {
            if precision <= n || wronskian(&a).is_ok_and(|u| !u.is_zero()) {
                return a;
            }
        }
    }
}

/// A random invertible matrix.
pub fn linear_map<R: Rng + ?Sized>(rng: &mut R, size: usize) -> LinearMap {
    loop {
        let m = Matrix::from_fn(size, size, |_, _| scalar(rng));
        if let Ok(l) = LinearMap::new(m) {
            return l;
        }
    }
}

/// A random matrix of determinant one: a product of unitriangular factors
/// and a sign-corrected permutation.
pub fn sl_map<R: Rng + ?Sized>(rng: &mut R, size: usize) -> LinearMap {
    let lower = Matrix::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Greater => scalar(rng),
        std::cmp::Ordering::Less => Scalar::zero(),
    });
    let upper = Matrix::from_fn(size, size, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Scalar::one(),
        std::cmp::Ordering::Less => scalar(rng),
        std::cmp::Ordering::Greater => Scalar::zero(),
    });
    let swap = if size >= 2 {
        rng.gen_range(0..size - 1)
    } else {
        0
    };
    let perm = Matrix::from_fn(size, size, |i, j| {
        let target = if size >= 2 && i == swap {
            swap + 1
        } else if size >= 2 && i == swap + 1 {
            swap
        } else {
            i
        };
        if j != target {
            Scalar::zero()
        } else if size >= 2 && i == swap {
            -Scalar::one()
        } else {
            Scalar::one()
        }
    });
    let m = lower
        .mul(&upper)
        .and_then(|lu| lu.mul(&perm))
        .expect("square factors");
    LinearMap::new(m).expect("determinant one")
}

pub fn scaling<R: Rng + ?Sized>(rng: &mut R, precision: usize) -> Scaling {
    let mut c = series(rng, precision).into_coeffs();
    c[0] = nonzero_scalar(rng);
    Scaling::new(TruncSeries::new(c).expect("nonempty")).expect("unit")
}

pub fn reparam<R: Rng + ?Sized>(rng: &mut R, precision: usize) -> Reparam {
    let mut c = series(rng, precision.max(2)).into_coeffs();
    c[0] = Scalar::zero();
    c[1] = nonzero_scalar(rng);
    Reparam::new(TruncSeries::new(c).expect("nonempty")).expect("valuation one")
}

/// A random group element `(M, u, v)` acting on arcs in `P^n`.
pub fn group_triple<R: Rng + ?Sized>(rng: &mut R, n: usize, precision: usize) -> GroupTriple {
    GroupTriple {
        linear: linear_map(rng, n + 1),
        scaling: scaling(rng, precision),
        reparam: reparam(rng, precision),
    }
}

/// A random monic operator of order `m` with coefficients of the given
/// precision.
pub fn operator<R: Rng + ?Sized>(rng: &mut R, m: usize, precision: usize) -> DiffOperator {
    DiffOperator::new((0..m).map(|_| series(rng, precision)).collect()).expect("valid operator")
}

/// A nonzero integer in `[-bound, bound]`.
pub fn nonzero_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return int(v);
        }
    }
}

/// Builds an arc from a coefficient matrix, returning `None` if it is not
/// smooth.
pub fn arc_from_columns(columns: &[Vec<Scalar>]) -> Option<Arc> {
    let rows = columns.first()?.len();
    let coords: Result<Vec<TruncSeries>> = (0..rows)
        .map(|i| TruncSeries::new(columns.iter().map(|c| c[i].clone()).collect()))
        .collect();
    Arc::new(coords.ok()?).ok()
}
