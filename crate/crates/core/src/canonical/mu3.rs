//! The μ₃-slice: off the Monge hypersurface, use the remaining `B`-freedom
//! to clear one more coefficient and scale the `t^{n+3}` term of the last
//! coordinate to 1.

use num_traits::{One, Zero};

use super::bslice::{normalize_to_b, normalize_with};
use crate::arcgeom::{Arc, GroupTriple, LinearMap, Reparam, Scaling};
use crate::error::{Error, Result};
use crate::series::scalar::{binomial, pow, rational_cube_root, to_f64};
use crate::series::{Matrix, Scalar, TruncSeries};

/// An arc in μ₃-slice form.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalFormMu3 {
    /// When `exact`, the last coordinate is `t^n + t^{n+3} + O(t^{n+4})` and
    /// the penultimate one (`n ≥ 3`) is `t^{n-1} + O(t^{n+4})`; otherwise the
    /// last coordinate is `t^n + α t^{n+3} + O(t^{n+4})`.
    pub arc: Arc,
    /// `arc = group.apply(input)`, exactly.
    pub group: GroupTriple,
    /// The torus parameter, read off before the final scaling. Its class
    /// modulo nonzero rational cubes is an invariant of the input.
    pub alpha: Scalar,
    pub exact: bool,
    /// `k ∈ {0, 1, 2}`: the form stands for the arc with entry `(i, j)`
    /// multiplied by `ω^{k(j-i)}`, `ω` a primitive cube root of unity.
    pub twist: u8,
    /// Floating-point completion of an inexact form (scaling by the real
    /// cube root of `1/α`), entries indexed `[coordinate][power]`.
    pub approx: Option<Vec<Vec<f64>>>,
}

/// The `B`-element fixing `e_0^∨` and moving the other fixed point: it sends
/// `(1, t, …, t^n)` to `((1 - βt)^{n-i} t^i)_i`.
fn beta_matrix(n: usize, beta: &Scalar) -> Matrix {
    Matrix::from_fn(n + 1, n + 1, |i, k| {
        if k < i {
            Scalar::zero()
        } else {
            binomial(n - i, k - i) * pow(&-beta, k - i)
        }
    })
}

/// The entry cleared by the β-move: the `t^{n+3}` term of the penultimate
/// coordinate for `n ≥ 3`, the `t^6` term of the conic for `n = 2`.
fn beta_target(n: usize) -> (usize, usize) {
    if n == 2 {
        (2, 6)
    } else {
        (n - 1, n + 3)
    }
}

fn beta_move(b: &Arc, beta: &Scalar) -> Result<GroupTriple> {
    normalize_with(b, &LinearMap::new(beta_matrix(b.n(), beta))?)
}

/// `diag(c^{-i})` with `t ↦ c t`: multiplies entry `(i, j)` by `c^{j-i}`.
fn torus(n: usize, c: &Scalar, precision: usize) -> Result<GroupTriple> {
    let inv = c.recip();
    let diag: Vec<Scalar> = (0..=n).map(|i| pow(&inv, i)).collect();
    Ok(GroupTriple {
        linear: LinearMap::new(Matrix::diagonal(&diag))?,
        scaling: Scaling::identity(precision),
        reparam: Reparam::new(TruncSeries::monomial(c.clone(), 1, precision))?,
    })
}

/// Reduces an arc off the Monge hypersurface to the μ₃-slice.
///
/// Needs precision `n + 4` (7 for conics, whose second cleared coefficient
/// is `t^6`). When `α` is not a rational cube the α-dependent form is
/// returned with `exact = false`; `float_completion` then also fills
/// [`CanonicalFormMu3::approx`].
pub fn normalize_to_mu3(a: &Arc, float_completion: bool) -> Result<CanonicalFormMu3> {
    let n = a.n();
    let (ti, tj) = beta_target(n.max(2));
    if n >= 2 && a.precision() < tj + 1 {
        return Err(Error::precision("normalize_to_mu3", tj + 1, a.precision()));
    }
    let bform = normalize_to_b(a)?;
    if bform.residual.last().is_some_and(Zero::is_zero) {
        return Err(Error::MongeMember);
    }
    let b = &bform.arc;
    // The target entry is affine in β.
    let f = |beta: &Scalar| -> Result<Scalar> {
        Ok(beta_move(&b.truncate(tj + 1), beta)?
            .apply(&b.truncate(tj + 1))?
            .entry(ti, tj)
            .clone())
    };
    let f0 = f(&Scalar::zero())?;
    let slope = f(&Scalar::one())? - &f0;
    if slope.is_zero() {
        return Err(Error::Internal(
            "the β-move does not reach the slice".into(),
        ));
    }
    let beta = -f0 / slope;
    let group = bform.group.then(&beta_move(b, &beta)?)?;
    let moved = group.apply(a)?;
    if !moved.entry(ti, tj).is_zero() {
        return Err(Error::Internal("the β-move is not affine".into()));
    }
    let alpha = moved.entry(n, n + 3).clone();
    if alpha.is_zero() {
        return Err(Error::MongeMember);
    }
    let Some(root) = rational_cube_root(&alpha) else {
        let approx = float_completion.then(|| {
            let c = to_f64(&alpha).cbrt().recip();
            moved
                .coords()
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(j, x)| to_f64(x) * c.powi(j as i32 - i as i32))
                        .collect()
                })
                .collect()
        });
        return Ok(CanonicalFormMu3 {
            arc: moved,
            group,
            alpha,
            exact: false,
            twist: 0,
            approx,
        });
    };
    let group = group.then(&torus(n, &root.recip(), a.precision())?)?;
    let arc = group.apply(a)?;
    check_mu3_shape(&arc)?;
    Ok(CanonicalFormMu3 {
        arc,
        group,
        alpha,
        exact: true,
        twist: 0,
        approx: None,
    })
}

fn check_mu3_shape(arc: &Arc) -> Result<()> {
    let n = arc.n();
    let (ti, tj) = beta_target(n);
    if !arc.entry(ti, tj).is_zero() || !arc.entry(n, n + 3).is_one() {
        return Err(Error::Internal("μ₃-slice shape not reached".into()));
    }
    Ok(())
}

/// The translate of `x` by the `k`-th power of the generator of μ₃.
pub fn mu3_translate(x: &CanonicalFormMu3, k: u8) -> Result<CanonicalFormMu3> {
    if !x.exact {
        return Err(Error::InexactForm);
    }
    let mut y = x.clone();
    y.twist = (x.twist + k % 3) % 3;
    Ok(y)
}

/// Whether some μ₃-translate of `x` equals `y` to shared precision.
///
/// Entries are rational, so `e ω^s = e'` with `s ≢ 0 (mod 3)` forces
/// `e = e' = 0`.
pub fn mu3_orbit_equal(x: &CanonicalFormMu3, y: &CanonicalFormMu3) -> Result<bool> {
    if !x.exact || !y.exact {
        return Err(Error::InexactForm);
    }
    if x.arc.n() != y.arc.n() {
        return Ok(false);
    }
    let p = x.arc.precision().min(y.arc.precision());
    let n = x.arc.n();
    Ok((0..3i64).any(|delta| {
        (0..=n).all(|i| {
            (0..p).all(|j| {
                let (ex, ey) = (x.arc.entry(i, j), y.arc.entry(i, j));
                let s = (i64::from(x.twist) - i64::from(y.twist) + delta) * (j as i64 - i as i64);
                if s.rem_euclid(3) == 0 {
                    ex == ey
                } else {
                    ex.is_zero() && ey.is_zero()
                }
            })
        })
    }))
}
