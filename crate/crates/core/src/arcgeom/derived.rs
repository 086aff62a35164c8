//! Arcs derived from an arc: projection from its center, the Veronese and
//! tangent-scroll images, and the dual arc of osculating hyperplanes.

use num_traits::Zero;

use super::arc::Arc;
use crate::error::{Error, Result};
use crate::series::scalar::{int, sign_pow};
use crate::series::{det_series, Matrix, Scalar, TruncSeries};

/// Projects the arc from its center `[a_0]` onto the coordinate hyperplane
/// opposite the pivot `p` (first nonzero entry of `a_0`) and drops the
/// vanishing column: output column `j` is `Q a_{j+1}`.
///
/// Requires `n ≥ 2` and `a_0 ∧ a_1 ∧ a_2 ≠ 0`; the result lives in `P^{n-1}`
/// with precision `P - 1`.
pub fn project_from_center(a: &Arc) -> Result<Arc> {
    let n = a.n();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            op: "project_from_center",
            n,
        });
    }
    if a.precision() < 3 {
        return Err(Error::precision("project_from_center", 3, a.precision()));
    }
    if a.matrix(3).rank() < 3 {
        return Err(Error::RankDeficient(
            "a0, a1, a2 are linearly dependent; the projected arc is not smooth".into(),
        ));
    }
    let a0 = a.column(0);
    let p = a0
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::Internal("zero center".into()))?;
    let coords = (0..=n)
        .filter(|&i| i != p)
        .map(|i| {
            // x_i - (x_p / a0_p) a0_i, then divide by t.
            let ratio = &a0[i] / &a0[p];
            (a.coord(i) - &a.coord(p).scale(&ratio)).shift_down(1)
        })
        .collect::<Result<_>>()?;
    Arc::new(coords)
}

/// Index pairs `(p, q)` with `p ≤ q` in lexicographic order.
fn sym_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..=n).flat_map(|p| (p..=n).map(move |q| (p, q))).collect()
}

/// Index pairs `(p, q)` with `p < q` in lexicographic order.
pub fn wedge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..=n)
        .flat_map(|p| (p + 1..=n).map(move |q| (p, q)))
        .collect()
}

/// Image under the second Veronese map, in the quadric basis where the
/// `(p, q)` coordinate is `a_p a_q`, doubled when `p ≠ q`.
///
/// `(1, t)` maps to `(1, 2t, t²)`.
pub fn veronese2(a: &Arc) -> Result<Arc> {
    Arc::new(veronese2_coords(a))
}

/// Coordinates of [`veronese2`] without the smoothness check.
pub fn veronese2_coords(a: &Arc) -> Vec<TruncSeries> {
    let two = int(2);
    sym_pairs(a.n())
        .into_iter()
        .map(|(p, q)| {
            let prod = a.coord(p) * a.coord(q);
            if p == q {
                prod
            } else {
                prod.scale(&two)
            }
        })
        .collect()
}

/// Coordinates of the tangent scroll `a' ∧ a` in the lexicographic wedge
/// basis: `(p, q) ↦ a_p' a_q - a_q' a_p`. Precision `P - 1`.
///
/// Its Taylor columns are `c_k = Σ_{i+j=k} (i+1) a_{i+1} ∧ a_j`.
pub fn tangent_scroll_coords(a: &Arc) -> Result<Vec<TruncSeries>> {
    let d: Vec<TruncSeries> = a
        .coords()
        .iter()
        .map(TruncSeries::derive)
        .collect::<Result<_>>()?;
    Ok(wedge_pairs(a.n())
        .into_iter()
        .map(|(p, q)| &(&d[p] * a.coord(q)) - &(&d[q] * a.coord(p)))
        .collect())
}

/// The tangent scroll as an arc in `P^{C(n+1,2)-1}`; needs `n ≥ 2`.
pub fn tangent_scroll(a: &Arc) -> Result<Arc> {
    if a.n() < 2 {
        return Err(Error::UnsupportedDimension {
            op: "tangent_scroll",
            n: a.n(),
        });
    }
    Arc::new(tangent_scroll_coords(a)?)
}

/// The dual arc `ξ` with `ξ_k = (-1)^k det(rows ≠ k of [a, a^{[1]}, …, a^{[n-1]}])`:
/// the osculating hyperplane `a ∧ a^{[1]} ∧ … ∧ a^{[n-1]}` as a covector, so
/// that `Σ ξ_k a_k^{[j]} = 0` for `j < n`. Precision `P - (n - 1)`.
pub fn dual_arc(a: &Arc) -> Result<Arc> {
    let n = a.n();
    if a.precision() < n + 1 {
        return Err(Error::precision("dual_arc", n + 1, a.precision()));
    }
    let cols: Vec<Vec<TruncSeries>> = (0..n)
        .map(|k| a.divided_derivative(k))
        .collect::<Result<_>>()?;
    let q = a.precision() - (n - 1);
    let coords = (0..=n)
        .map(|k| {
            let minor: Vec<Vec<TruncSeries>> = (0..=n)
                .filter(|&i| i != k)
                .map(|i| cols.iter().map(|c| c[i].truncate(q)).collect())
                .collect();
            Ok(det_series(&minor)?.scale(&sign_pow(k)))
        })
        .collect::<Result<Vec<_>>>()?;
    let dual = Arc::from_coords(coords)?;
    if !dual.is_smooth() {
        return Err(Error::Inflexional);
    }
    Ok(dual)
}

/// Two arcs in the same space define the same point curve up to a scalar
/// series factor: every `2×2` minor `a_i b_j - a_j b_i` vanishes to the
/// shared precision.
pub fn projectively_equal(a: &Arc, b: &Arc) -> bool {
    if a.n() != b.n() {
        return false;
    }
    (0..=a.n()).all(|i| {
        (i + 1..=a.n()).all(|j| {
            (&(a.coord(i) * b.coord(j)) - &(a.coord(j) * b.coord(i))).is_zero_to_precision()
        })
    })
}

/// Greedy independent Taylor columns `i_0 < … < i_n` and gaps `i_j - j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSequence {
    pub indices: Vec<usize>,
    pub gaps: Vec<usize>,
}

impl GapSequence {
    pub fn total(&self) -> usize {
        self.gaps.iter().sum()
    }
}

pub fn gap_sequence(a: &Arc) -> Result<GapSequence> {
    let n = a.n();
    let mut indices = Vec::with_capacity(n + 1);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..a.precision() {
        rows.push(a.column(j));
        if Matrix::from_rows(rows.clone())?.rank() == rows.len() {
            indices.push(j);
            if indices.len() == n + 1 {
                let gaps = indices.iter().enumerate().map(|(k, &i)| i - k).collect();
                return Ok(GapSequence { indices, gaps });
            }
        } else {
            rows.pop();
        }
    }
    Err(Error::InflexionalBeyondPrecision {
        precision: a.precision(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn projection_of_rational_normal_curves() {
        assert_eq!(project_from_center(&rnc(2, 5)).unwrap(), rnc(1, 4));
        assert_eq!(project_from_center(&rnc(3, 6)).unwrap(), rnc(2, 5));
        let degenerate = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 1, 0, 1]], 5).unwrap();
        assert!(matches!(
            project_from_center(&degenerate),
            Err(Error::RankDeficient(_))
        ));
        assert!(project_from_center(&rnc(1, 4)).is_err());
    }

    #[test]
    fn veronese_of_line() {
        let v = veronese2(&rnc(1, 4)).unwrap();
        assert_eq!(
            v,
            Arc::from_int_rows(&[&[1], &[0, 2], &[0, 0, 1]], 4).unwrap()
        );
        let c = veronese2(&rnc(2, 4)).unwrap();
        assert_eq!(c.n(), 5);
        assert_eq!(
            c.column(0),
            vec![int(1), int(0), int(0), int(0), int(0), int(0)]
        );
    }

    #[test]
    fn tangent_scroll_columns() {
        let c = tangent_scroll_coords(&rnc(1, 4)).unwrap();
        assert_eq!(c, vec![TruncSeries::from_ints(&[-1], 3)]);
        let s = tangent_scroll(&rnc(3, 6)).unwrap();
        // c_0 = a_1 ∧ a_0 = e1 ∧ e0 = -(e0 ∧ e1)
        let c0 = s.column(0);
        assert_eq!(c0.iter().filter(|x| !x.is_zero()).count(), 1);
        assert_eq!(c0[0], int(-1));
        assert_eq!(s.precision(), 5);
    }

    #[test]
    fn dual_of_conic() {
        let d = dual_arc(&rnc(2, 5)).unwrap();
        assert_eq!(
            d,
            Arc::from_int_rows(&[&[0, 0, 1], &[0, -2], &[1]], 4).unwrap()
        );
        let dd = dual_arc(&d).unwrap();
        assert!(projectively_equal(&dd, &rnc(2, 3)));
    }

    #[test]
    fn gaps() {
        assert_eq!(gap_sequence(&rnc(3, 6)).unwrap().total(), 0);
        let a = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 0, 1]], 6).unwrap();
        let g = gap_sequence(&a).unwrap();
        assert_eq!(g.indices, vec![0, 1, 3]);
        assert_eq!(g.total(), 1);
        let b = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 0, 0, 1]], 6).unwrap();
        assert_eq!(gap_sequence(&b).unwrap().total(), 2);
        let c = Arc::from_int_rows(&[&[1], &[0, 1], &[0, 0, 0, 0, 1]], 4).unwrap();
        assert!(matches!(
            gap_sequence(&c),
            Err(Error::InflexionalBeyondPrecision { .. })
        ));
    }
}
