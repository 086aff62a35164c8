//! Reduction to the slice `(1, t, t² + O(t^{n+3}), …, t^n + O(t^{n+3}))`.

use num_traits::{One, Zero};

use crate::arcgeom::{act_linear, Arc, GroupTriple, LinearMap, Reparam, Scaling};
use crate::error::{Error, Result};
use crate::invariants::wronskian;
use crate::series::{Matrix, Scalar, TruncSeries};

/// An arc in B-slice form with the group element that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFormB {
    /// Coordinates `0, 1` are exactly `1, t`; coordinate `i ≥ 2` is
    /// `t^i + O(t^{n+3})`.
    pub arc: Arc,
    /// `arc = group.apply(input)`, exactly.
    pub group: GroupTriple,
    /// `(c_{2,n+3}, …, c_{n,n+3})`.
    pub residual: Vec<Scalar>,
}

/// The normalization `x ↦ ((1/x_0) · x) ∘ revert(x_1/x_0)` as a group
/// element (identity linear part) for an arc with `x_0(0) ≠ 0`.
pub(crate) fn chart_normalizer(x: &Arc) -> Result<(Scaling, Reparam)> {
    let inv = x.coord(0).inverse()?;
    let y1 = x.coord(1) * &inv;
    let v = y1.revert()?;
    Ok((Scaling::new(inv)?, Reparam::new(v)?))
}

/// Applies a linear map followed by the chart normalization, returning the
/// composite group element.
pub(crate) fn normalize_with(a: &Arc, m: &LinearMap) -> Result<GroupTriple> {
    let moved = act_linear(m, a)?;
    let (scaling, reparam) = chart_normalizer(&moved)?;
    Ok(GroupTriple {
        linear: m.clone(),
        scaling,
        reparam,
    })
}

/// `C_{jk} = [t^k](w · v^j)` for `j, k ≤ n`: how the substitution
/// `t ↦ v(t)` together with scaling by `w` acts on `(1, t, …, t^n)` modulo
/// `t^{n+1}`. Unipotent upper triangular when `w_0 = v_1 = 1`.
fn substitution_matrix(w: &TruncSeries, v: &TruncSeries, n: usize) -> Matrix {
    let p = n + 1;
    let w = w.truncate(p);
    let v = v.truncate(p);
    let mut rows = Vec::with_capacity(p);
    let mut pw = TruncSeries::one(p);
    for _ in 0..=n {
        rows.push((&w * &pw).coeffs().to_vec());
        pw = &pw * &v;
    }
    Matrix::from_rows(rows).expect("square")
}

struct Solver<'a> {
    a: &'a Arc,
    n: usize,
    m1: Matrix,
}

impl Solver<'_> {
    /// The linear map `C(w, v)^{-1} M_1` for tail coefficients
    /// `w_1..w_n` and `v_3..v_n`.
    fn linear(&self, w: &[Scalar], v: &[Scalar]) -> Result<LinearMap> {
        let p = self.n + 1;
        let mut wc = vec![Scalar::one()];
        wc.extend_from_slice(w);
        let mut vc = vec![Scalar::zero(), Scalar::one(), Scalar::zero()];
        vc.extend_from_slice(v);
        let ws = TruncSeries::from_scalars(&wc, p);
        let vs = TruncSeries::from_scalars(&vc, p.max(2));
        let c = substitution_matrix(&ws, &vs, self.n);
        LinearMap::new(c.inverse()?.mul(&self.m1)?)
    }

    fn entries(&self, w: &[Scalar], v: &[Scalar], eqs: &[(usize, usize)]) -> Result<Vec<Scalar>> {
        let g = normalize_with(self.a, &self.linear(w, v)?)?;
        let b = g.apply(self.a)?;
        Ok(eqs.iter().map(|&(i, j)| b.entry(i, j).clone()).collect())
    }
}

/// Reduces a non-inflexional arc to B-slice form; needs precision `n + 4`.
///
/// Steps: send `a_0..a_n` to the unit basis; then, degree by degree, pick the
/// unipotent correction `C(w, v)^{-1}` (scaling tail `w`, reparametrization
/// tail `v` with `v_2 = 0`) that clears the `t^{n+1}` and `t^{n+2}` terms of
/// coordinates `2..n`; finally normalize coordinates 0 and 1 to `1, t`.
/// Each level is an affine square system solved exactly.
pub fn normalize_to_b(a: &Arc) -> Result<CanonicalFormB> {
    let n = a.n();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            op: "normalize_to_b",
            n,
        });
    }
    if a.precision() < n + 4 {
        return Err(Error::precision("normalize_to_b", n + 4, a.precision()));
    }
    if wronskian(a)?.is_zero() {
        return Err(Error::Inflexional);
    }
    let jet = a.truncate(n + 3);
    let solver = Solver {
        a: &jet,
        n,
        m1: a.matrix(n + 1).inverse()?,
    };
    let mut w = vec![Scalar::zero(); n];
    let mut v = vec![Scalar::zero(); n.saturating_sub(2)];
    for k in 1..=n {
        // Unknowns of this level: w_k, and v_{k+1} when 2 ≤ k ≤ n - 1.
        let has_v = (2..n).contains(&k);
        let mut eqs = Vec::new();
        for (row, col) in [(n + 1 - k, n + 1), (n + 2 - k, n + 2)] {
            if (2..=n).contains(&row) {
                eqs.push((row, col));
            }
        }
        let unknowns = 1 + usize::from(has_v);
        if eqs.len() != unknowns {
            return Err(Error::Internal(format!(
                "level {k}: {} equations for {unknowns} unknowns",
                eqs.len()
            )));
        }
        let eval = |dw: Scalar, dv: Scalar| -> Result<Vec<Scalar>> {
            let mut w2 = w.clone();
            let mut v2 = v.clone();
            w2[k - 1] = dw;
            if has_v {
                v2[k - 2] = dv;
            }
            solver.entries(&w2, &v2, &eqs)
        };
        let base = eval(Scalar::zero(), Scalar::zero())?;
        let mut jac = vec![eval(Scalar::one(), Scalar::zero())?];
        if has_v {
            jac.push(eval(Scalar::zero(), Scalar::one())?);
        }
        let jm = Matrix::from_fn(eqs.len(), unknowns, |r, c| &jac[c][r] - &base[r]);
        let rhs: Vec<Scalar> = base.iter().map(|x| -x).collect();
        let sol = jm.solve(&rhs).map_err(|_| {
            Error::Internal(format!("level {k} of the slice reduction is degenerate"))
        })?;
        w[k - 1] = sol[0].clone();
        if has_v {
            v[k - 2] = sol[1].clone();
        }
    }
    let group = normalize_with(a, &solver.linear(&w, &v)?)?;
    let arc = group.apply(a)?;
    check_b_shape(&arc)?;
    let residual = (2..=n).map(|i| arc.entry(i, n + 3).clone()).collect();
    Ok(CanonicalFormB {
        arc,
        group,
        residual,
    })
}

/// Verifies the B-slice shape exactly.
pub(crate) fn check_b_shape(b: &Arc) -> Result<()> {
    let n = b.n();
    for j in 0..b.precision() {
        for i in 0..=1 {
            let want = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if b.entry(i, j) != &want {
                return Err(Error::Internal(format!("coordinate {i} is not normalized")));
            }
        }
    }
    for i in 2..=n {
        for j in 0..=n + 2 {
            let want = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if b.entry(i, j) != &want {
                return Err(Error::Internal(format!(
                    "entry ({i}, {j}) was not eliminated"
                )));
            }
        }
    }
    Ok(())
}

/// Whether the principal plane lies in the osculating hyperplane: the last
/// residual entry vanishes after B-normalization.
pub fn monge_member_geometric(a: &Arc) -> Result<bool> {
    let b = normalize_to_b(a)?;
    Ok(b.residual.last().is_some_and(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::series::scalar::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rnc(n: usize, p: usize) -> Arc {
        let rows: Vec<Vec<i64>> = (0..=n)
            .map(|i| {
                let mut r = vec![0; i + 1];
                r[i] = 1;
                r
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        Arc::from_int_rows(&refs, p).unwrap()
    }

    #[test]
    fn normal_curve_is_fixed() {
        for n in 2..=4 {
            let a = rnc(n, n + 5);
            let b = normalize_to_b(&a).unwrap();
            assert_eq!(b.arc, a);
            assert_eq!(b.group, GroupTriple::identity(n + 1, n + 5));
            assert!(b.residual.iter().all(Zero::is_zero));
            assert!(monge_member_geometric(&a).unwrap());
        }
    }

    #[test]
    fn conic_slice_arc() {
        let a = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 1, 0, 0, 1]], 7).unwrap();
        let b = normalize_to_b(&a).unwrap();
        assert_eq!(b.arc, a);
        assert_eq!(b.residual, vec![int(1)]);
        assert!(!monge_member_geometric(&a).unwrap());
    }

    #[test]
    fn random_arcs_reach_the_slice() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=5 {
            let a = sample::arc(&mut rng, n, n + 5);
            let b = normalize_to_b(&a).unwrap();
            assert_eq!(b.group.apply(&a).unwrap(), b.arc);
            assert_eq!(b.residual.len(), n - 1);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let infl = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 0, 1]], 7).unwrap();
        assert_eq!(normalize_to_b(&infl), Err(Error::Inflexional));
        assert!(normalize_to_b(&rnc(2, 5)).is_err());
        assert!(normalize_to_b(&rnc(1, 8)).is_err());
    }
}
