//! The duality involution on third-order invariants `(u_3, u_21, u_111)`,
//! fitted exactly from sampled operators.
//!
//! For a third-order operator `L` let `u_λ = U_λ / U` be evaluated on the arc
//! of `L` and `v_λ` on the arc of its adjoint. On operators whose Halphen
//! coefficient `p_1` vanishes at the origin, `v = M u` for a fixed rational
//! matrix `M`. Operators with `p_1 ≡ 0` all satisfy
//! `u_111 + 8 u_21 + 10 u_3 = 0`, so they do not determine `M` on their own;
//! the fit uses the larger family and checks the classical relations on the
//! smaller one.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::adjoint::adjoint;
use super::dictionary::ode_to_arc;
use super::operator::DiffOperator;
use crate::arcgeom::Arc;
use crate::error::{Error, Result};
use crate::invariants::{affine_coordinate, u_lambda_series, Partition};
use crate::sample;
use crate::series::scalar::{frac, int};
use crate::series::{Matrix, Scalar, TruncSeries};

/// Coefficient precision of sampled operators.
const SAMPLE_PRECISION: usize = 8;

/// The involution matrix as usually quoted in the basis `(u_3, u_21, u_111)`.
/// It does not square to the identity.
pub fn reference_involution_matrix() -> Matrix {
    Matrix::from_rows(vec![
        vec![int(-2), frac(3, 4), frac(-3, 10)],
        vec![int(-4), int(3), frac(-2, 5)],
        vec![int(0), int(0), int(1)],
    ])
    .expect("3x3")
}

/// Outcome of fitting and checking the involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    /// `M` with `v = M u` in the basis `(u_3, u_21, u_111)`.
    pub matrix: Matrix,
    pub fit_samples: usize,
    pub check_samples: usize,
    pub squares_to_identity: bool,
    /// `s` with `(1, 2, 1) M = s (1, 2, 1)`, if the Monge covector is an
    /// eigen-covector.
    pub monge_covector_eigenvalue: Option<Scalar>,
    pub liouville_samples: usize,
    /// `u_111 + 8 u_21 + 10 u_3 = 0` on every `p_1 ≡ 0` sample.
    pub liouville_linear_relation: bool,
    /// `v_11 = u_11` on every `p_1 ≡ 0` sample.
    pub v11_equals_u11: bool,
    /// `v_111 = -u_11' - u_111` on every `p_1 ≡ 0` sample.
    pub v111_relation: bool,
    /// The third row of `M` reproduces `v_111 = -u_11' - u_111` there.
    pub matrix_reproduces_v111: bool,
    pub reference_squares_to_identity: bool,
    pub reference_equals_fit: bool,
    /// Whether a signed permutation of the basis turns the reference matrix
    /// into the fitted one.
    pub reference_equivalent_up_to_signed_basis: bool,
}

struct Sample {
    u: [Scalar; 3],
    v: [Scalar; 3],
    u11: Scalar,
    v11: Scalar,
    u11_prime: Scalar,
}

fn third_order_triple(a: &Arc) -> Result<[Scalar; 3]> {
    Ok([
        affine_coordinate(a, &Partition::new(&[3])?)?,
        affine_coordinate(a, &Partition::new(&[2, 1])?)?,
        affine_coordinate(a, &Partition::new(&[1, 1, 1])?)?,
    ])
}

fn evaluate(l: &DiffOperator) -> Result<Sample> {
    let a = ode_to_arc(l)?;
    let b = ode_to_arc(&adjoint(l)?)?;
    let p11 = Partition::new(&[1, 1])?;
    let ratio =
        u_lambda_series(&a, &p11, 2)?.divide(&u_lambda_series(&a, &Partition::empty(), 2)?)?;
    Ok(Sample {
        u: third_order_triple(&a)?,
        v: third_order_triple(&b)?,
        u11: affine_coordinate(&a, &p11)?,
        v11: affine_coordinate(&b, &p11)?,
        u11_prime: ratio.coeff(1).clone(),
    })
}

fn random_operator(rng: &mut ChaCha8Rng, c1_identically_zero: bool) -> DiffOperator {
    loop {
        let mut c1 = sample::series(rng, SAMPLE_PRECISION).into_coeffs();
        c1[0] = Scalar::zero();
        if c1_identically_zero {
            c1.iter_mut().for_each(|c| *c = Scalar::zero());
        } else if c1.iter().all(Zero::is_zero) {
            continue;
        }
        let l = DiffOperator::new(vec![
            TruncSeries::new(c1).expect("nonempty"),
            sample::series(rng, SAMPLE_PRECISION),
            sample::series(rng, SAMPLE_PRECISION),
        ])
        .expect("valid operator");
        return l;
    }
}

fn mat_vec(m: &Matrix, u: &[Scalar; 3]) -> Vec<Scalar> {
    m.mul_vec(u).expect("3x3")
}

/// Fits `M` from `fit_samples` operators, checks it on `check_samples`
/// more, and checks the `p_1 ≡ 0` relations on `check_samples` further
/// operators. Fails with [`Error::InconsistentFit`] if any sample disagrees.
pub fn involution_report(
    seed: u64,
    fit_samples: usize,
    check_samples: usize,
) -> Result<InvolutionReport> {
    if fit_samples < 3 {
        return Err(Error::InvalidArgument(
            "at least 3 fit samples are needed".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fit: Vec<Sample> = (0..fit_samples)
        .map(|_| evaluate(&random_operator(&mut rng, false)))
        .collect::<Result<_>>()?;
    let check: Vec<Sample> = (0..check_samples)
        .map(|_| evaluate(&random_operator(&mut rng, false)))
        .collect::<Result<_>>()?;
    let liouville: Vec<Sample> = (0..check_samples)
        .map(|_| evaluate(&random_operator(&mut rng, true)))
        .collect::<Result<_>>()?;

    // Pick three samples with independent u and solve V = M U.
    let mut chosen: Vec<&Sample> = Vec::new();
    for s in &fit {
        let mut rows: Vec<Vec<Scalar>> = chosen.iter().map(|c| c.u.to_vec()).collect();
        rows.push(s.u.to_vec());
        if Matrix::from_rows(rows.clone())?.rank() == rows.len() {
            chosen.push(s);
            if chosen.len() == 3 {
                break;
            }
        }
    }
    if chosen.len() < 3 {
        return Err(Error::InconsistentFit(
            "sampled invariants do not span a 3-dimensional space".into(),
        ));
    }
    let u_mat = Matrix::from_fn(3, 3, |i, j| chosen[j].u[i].clone());
    let v_mat = Matrix::from_fn(3, 3, |i, j| chosen[j].v[i].clone());
    let matrix = v_mat.mul(&u_mat.inverse()?)?;

    for (k, s) in fit.iter().chain(&check).chain(&liouville).enumerate() {
        if mat_vec(&matrix, &s.u) != s.v.to_vec() {
            return Err(Error::InconsistentFit(format!(
                "sample {k} is not reproduced by the fitted matrix"
            )));
        }
    }

    let squares_to_identity = matrix.mul(&matrix)? == Matrix::identity(3);
    let monge = [int(1), int(2), int(1)];
    let row = matrix.transpose().mul_vec(&monge)?;
    let monge_covector_eigenvalue = {
        let s = &row[0] / &monge[0];
        (row.iter().zip(&monge).all(|(r, m)| r == &(m * &s))).then_some(s)
    };

    let liouville_linear_relation = liouville
        .iter()
        .all(|s| (&s.u[2] + int(8) * &s.u[1] + int(10) * &s.u[0]).is_zero());
    let v11_equals_u11 = liouville.iter().all(|s| s.v11 == s.u11);
    let v111_relation = liouville.iter().all(|s| s.v[2] == -&s.u11_prime - &s.u[2]);
    let matrix_reproduces_v111 = liouville
        .iter()
        .all(|s| mat_vec(&matrix, &s.u)[2] == -&s.u11_prime - &s.u[2]);

    let reference = reference_involution_matrix();
    Ok(InvolutionReport {
        reference_squares_to_identity: reference.mul(&reference)? == Matrix::identity(3),
        reference_equals_fit: reference == matrix,
        reference_equivalent_up_to_signed_basis: signed_permutation_equivalent(
            &reference, &matrix,
        )?,
        matrix,
        fit_samples,
        check_samples,
        squares_to_identity,
        monge_covector_eigenvalue,
        liouville_samples: liouville.len(),
        liouville_linear_relation,
        v11_equals_u11,
        v111_relation,
        matrix_reproduces_v111,
    })
}

/// The fitted involution matrix (6 fit samples, 10 check samples).
pub fn duality_involution_matrix(seed: u64) -> Result<Matrix> {
    Ok(involution_report(seed, 6, 10)?.matrix)
}

fn signed_permutation_equivalent(a: &Matrix, b: &Matrix) -> Result<bool> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for perm in PERMS {
        for signs in 0..8u8 {
            let s = Matrix::from_fn(3, 3, |i, j| {
                if perm[i] != j {
                    Scalar::zero()
                } else if signs & (1 << i) != 0 {
                    -Scalar::one()
                } else {
                    Scalar::one()
                }
            });
            if s.mul(a)?.mul(&s.inverse()?)? == *b {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
