//! Seeded property suites cross-checking every closed formula against an
//! independent construction, plus comparator reports for formulas quoted in
//! the literature that disagree with the constructive definitions.
//!
//! Suites run in parallel; each draws from its own generator derived from
//! the seed and its name, so reports are reproducible.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arcgeom::{
    act_linear, act_reparam, act_scale, gap_sequence, project_from_center, Arc, GroupTriple,
    Reparam,
};
use crate::canonical::{monge_member_geometric, mu3_orbit_equal, normalize_to_b, normalize_to_mu3};
use crate::error::{Error, Result};
use crate::invariants::{
    affine_coordinate, monge_formula, monge_scroll, u_lambda, veronese_quotient_series,
    wronskian_series, Partition, SCROLL_CONSTANT, VERONESE_CONSTANT,
};
use crate::odelink::{
    adjoint, adjoint_closed_form, arc_to_ode, bilinear_b, bilinear_b_closed_form, first_mismatch,
    gram_matrix, involution_report, lagrange_identity_residual, ode_to_arc, plucker_duality_check,
    DiffOperator,
};
use crate::sample;
use crate::series::scalar::{binomial_usize, format_scalar, int, pow};
use crate::series::{Matrix, Scalar, TruncSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Instances per suite.
    pub samples: usize,
    /// Replaces the Veronese constant by a wrong value so the run must fail.
    pub corrupt_constant: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 100,
            corrupt_constant: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub samples: usize,
    pub passed: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparatorReport {
    pub name: String,
    pub matches: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
    pub comparators: Vec<ComparatorReport>,
}

type SuiteFn = fn(&mut ChaCha8Rng, &CheckConfig) -> Result<(usize, Vec<String>)>;

const SUITES: [(&str, SuiteFn); 10] = [
    ("adjoint-duality", suite_adjoint),
    ("covariance", suite_covariance),
    ("gap-sequence", suite_gaps),
    ("involution", suite_involution),
    ("monge-chart", suite_chart),
    ("monge-membership", suite_membership),
    ("monge-scroll", suite_scroll),
    ("monge-veronese", suite_veronese),
    ("ode-dictionary", suite_ode),
    ("slices", suite_slices),
];

fn suite_rng(seed: u64, name: &str) -> ChaCha8Rng {
    // FNV-1a keeps the per-suite stream independent of scheduling order.
    let h = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
    });
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Runs every suite and the comparators.
pub fn run_checks(config: &CheckConfig) -> CheckReport {
    let mut suites: Vec<SuiteReport> = SUITES
        .par_iter()
        .map(|(name, f)| {
            let mut rng = suite_rng(config.seed, name);
            match f(&mut rng, config) {
                Ok((samples, notes)) => SuiteReport {
                    name: (*name).to_string(),
                    samples,
                    passed: true,
                    notes,
                },
                Err(e) => SuiteReport {
                    name: (*name).to_string(),
                    samples: 0,
                    passed: false,
                    notes: vec![format!("{}: {e}", e.code())],
                },
            }
        })
        .collect();
    suites.sort_by(|a, b| a.name.cmp(&b.name));
    let comparators = comparators(config.seed);
    CheckReport {
        seed: config.seed,
        samples: config.samples,
        passed: suites.iter().all(|s| s.passed),
        suites,
        comparators,
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::InconsistentFit(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// `(1, t, Σ_{i≥2} a_i t^i)` with random `a_i`, `a_2 ≠ 0`.
pub fn conic_chart_arc<R: Rng + ?Sized>(rng: &mut R, precision: usize) -> Arc {
    let mut c = vec![Scalar::zero(); precision];
    c[2] = sample::nonzero_scalar(rng);
    for x in c.iter_mut().skip(3) {
        *x = sample::scalar(rng);
    }
    Arc::new(vec![
        TruncSeries::one(precision),
        TruncSeries::t(precision),
        TruncSeries::new(c).expect("nonempty"),
    ])
    .expect("smooth")
}

/// `(1, t, t² + Σ_{i≥4} α_i t^i, t³ + Σ_{i≥4} β_i t^i)`.
pub fn twisted_cubic_family<R: Rng + ?Sized>(rng: &mut R, precision: usize) -> Arc {
    let tail = |rng: &mut R, lead: usize| {
        let mut c = vec![Scalar::zero(); precision];
        c[lead] = Scalar::one();
        for x in c.iter_mut().skip(4) {
            *x = sample::scalar(rng);
        }
        TruncSeries::new(c).expect("nonempty")
    };
    Arc::new(vec![
        TruncSeries::one(precision),
        TruncSeries::t(precision),
        tail(rng, 2),
        tail(rng, 3),
    ])
    .expect("smooth")
}

/// An arc in the shape `(1, t, t² + O(t^{n+3}), …, t^{n-1} + O(t^{n+3}),
/// t^n + c t^{n+3} + O(t^{n+4}))`, with random tails. On the Monge
/// hypersurface iff `c = 0`.
pub fn slice_arc<R: Rng + ?Sized>(rng: &mut R, n: usize, c: &Scalar, precision: usize) -> Arc {
    let coords = (0..=n)
        .map(|i| {
            let mut r = vec![Scalar::zero(); precision];
            r[i] = Scalar::one();
            if i >= 2 {
                for x in r.iter_mut().skip(n + 3) {
                    *x = sample::scalar(rng);
                }
            }
            if i == n {
                r[n + 3] = c.clone();
            }
            TruncSeries::new(r).expect("nonempty")
        })
        .collect();
    Arc::new(coords).expect("smooth")
}

/// An arc whose coordinate `j` starts with `t^{i_j}` for the given indices
/// (beginning `0, 1`), moved by a random invertible matrix.
pub fn arc_with_indices<R: Rng + ?Sized>(rng: &mut R, indices: &[usize], precision: usize) -> Arc {
    let n = indices.len() - 1;
    let coords: Vec<TruncSeries> = indices
        .iter()
        .map(|&k| {
            let mut r = vec![Scalar::zero(); precision];
            r[k] = Scalar::one();
            for x in r.iter_mut().skip(k + 1) {
                if rng.gen_bool(0.5) {
                    *x = sample::scalar(rng);
                }
            }
            TruncSeries::new(r).expect("nonempty")
        })
        .collect();
    let a = Arc::new(coords).expect("smooth");
    let m = sample::linear_map(rng, n + 1);
    act_linear(&m, &a).expect("smooth")
}

fn suite_chart(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let a = conic_chart_arc(rng, 6);
        let x: Vec<Scalar> = (0..6).map(|j| a.entry(2, j).clone()).collect();
        // The conic through the 5-jet exists iff this determinant vanishes.
        let det = Matrix::from_rows(vec![
            vec![int(0), x[2].clone(), int(2) * &x[3]],
            vec![x[2].clone(), x[3].clone(), x[4].clone()],
            vec![x[3].clone(), x[4].clone(), x[5].clone()],
        ])?
        .det()?;
        let display =
            int(-2) * pow(&x[3], 3) + int(3) * &x[2] * &x[3] * &x[4] - pow(&x[2], 2) * &x[5];
        ensure(det == display, || {
            format!("sample {k}: determinant expansion differs")
        })?;
        ensure(monge_formula(&a)? == -&det, || {
            format!("sample {k}: formula is not -det")
        })?;
    }
    Ok((
        cfg.samples,
        vec!["monge_formula = -det on the conic chart".into()],
    ))
}

fn scroll_bracket(a: &Arc) -> Scalar {
    let (al4, al5) = (a.entry(2, 4), a.entry(2, 5));
    let (b4, b5, b6) = (a.entry(3, 4), a.entry(3, 5), a.entry(3, 6));
    int(-2) * pow(b4, 3) + int(3) * b4 * b5 - int(3) * al4 * b4 + int(2) * al5 - b6
}

fn suite_scroll(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    let mut constant: Option<Scalar> = None;
    let mut sign: Option<Scalar> = None;
    let mut used = 0;
    for k in 0..cfg.samples {
        let a = twisted_cubic_family(rng, 8);
        let bracket = scroll_bracket(&a);
        if bracket.is_zero() {
            continue;
        }
        used += 1;
        let scroll = monge_scroll(&a)?;
        let formula = monge_formula(&a)?;
        let c = &scroll / (int(12) * &bracket);
        let s = &formula / &bracket;
        ensure(constant.get_or_insert_with(|| c.clone()) == &c, || {
            format!("sample {k}: scroll constant drifts")
        })?;
        ensure(sign.get_or_insert_with(|| s.clone()) == &s, || {
            format!("sample {k}: formula sign drifts")
        })?;
        ensure(s.abs().is_one(), || {
            format!("sample {k}: formula is not ± the bracket")
        })?;
        ensure(scroll == int(SCROLL_CONSTANT) * &formula, || {
            format!("sample {k}: scroll constant differs")
        })?;
    }
    Ok((
        used,
        vec![format!(
            "scroll = {} * 12 * bracket; formula = {} * bracket",
            constant.map_or("-".into(), |c| format_scalar(&c)),
            sign.map_or("-".into(), |s| format_scalar(&s))
        )],
    ))
}

fn suite_veronese(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    let expected = if cfg.corrupt_constant {
        int(VERONESE_CONSTANT + 1)
    } else {
        int(VERONESE_CONSTANT)
    };
    let samples = cfg.samples.max(20);
    for k in 0..samples {
        let a = sample::arc(rng, 2, 9);
        let w = crate::invariants::wronskian_series_of_coords(
            &crate::arcgeom::veronese2_coords(&a),
            4,
        )?;
        let u = wronskian_series(&a, 4)?;
        let q = veronese_quotient_series(&a, 4)?;
        ensure((&q * &u).eq_to_precision(&w), || {
            format!("sample {k}: W is not U times the quotient")
        })?;
        ensure(q.coeff(0) == &(&expected * monge_formula(&a)?), || {
            format!(
                "sample {k}: W/U(0) is not {} * Monge",
                format_scalar(&expected)
            )
        })?;
    }
    Ok((
        samples,
        vec![format!("W/U(0) = {VERONESE_CONSTANT} * monge_formula")],
    ))
}

fn suite_covariance(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let n = 2 + k % 3;
        let p = n + 5;
        let a = sample::arc(rng, n, p);
        let m0 = monge_formula(&a)?;
        let g = sample::sl_map(rng, n + 1);
        ensure(monge_formula(&act_linear(&g, &a)?)? == m0, || {
            format!("sample {k}: SL invariance")
        })?;
        let u = sample::scaling(rng, p);
        let f = pow(u.leading(), 3 * (n + 1));
        ensure(monge_formula(&act_scale(&u, &a)?)? == &f * &m0, || {
            format!("sample {k}: scaling factor")
        })?;
        let v = sample::reparam(rng, p);
        let f = pow(v.leading(), 3 * binomial_usize(n + 1, 2) + 3);
        ensure(monge_formula(&act_reparam(&v, &a)?)? == &f * &m0, || {
            format!("sample {k}: reparam factor")
        })?;
        let c = sample::nonzero_scalar(rng);
        let scaled = act_reparam(&Reparam::new(TruncSeries::monomial(c.clone(), 1, p))?, &a)?;
        for lambda in Partition::enumerate(n + 1, 3) {
            let f = pow(&c, binomial_usize(n + 1, 2) + lambda.weight());
            ensure(
                u_lambda(&scaled, &lambda)? == &f * u_lambda(&a, &lambda)?,
                || format!("sample {k}: torus factor of {lambda}"),
            )?;
        }
    }
    Ok((
        cfg.samples,
        vec!["SL, scaling, reparametrization and torus laws hold".into()],
    ))
}

/// Random strictly increasing indices starting `0, 1`.
pub fn random_indices<R: Rng + ?Sized>(rng: &mut R, n: usize, max_gap: usize) -> Vec<usize> {
    let mut idx = vec![0, 1];
    while idx.len() < n + 1 {
        let last = *idx.last().expect("nonempty");
        idx.push(last + 1 + rng.gen_range(0..=max_gap));
    }
    idx
}

fn suite_gaps(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let n = 2 + k % 3;
        let indices = random_indices(rng, n, 2);
        let total: usize = indices.iter().enumerate().map(|(j, &i)| i - j).sum();
        let p = indices[n] + total + 2;
        let a = arc_with_indices(rng, &indices, p);
        let u = wronskian_series(&a, total + 1)?;
        ensure(u.valuation() == total, || {
            format!("sample {k}: valuation {} ≠ {total}", u.valuation())
        })?;
        ensure(gap_sequence(&a)?.indices == indices, || {
            format!("sample {k}: gap sequence")
        })?;
    }
    Ok((cfg.samples, vec!["valuation(U) = Σ(i_j - j)".into()]))
}

fn suite_ode(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let n = 1 + k % 3;
        let a = sample::arc(rng, n, n + 7);
        let l = arc_to_ode(&a)?;
        for (i, c) in a.coords().iter().enumerate() {
            ensure(l.apply(c)?.is_zero_to_precision(), || {
                format!("sample {k}: coordinate {i} is not a solution")
            })?;
        }
        let back = ode_to_arc(&l)?;
        for lambda in Partition::enumerate(n + 1, 3) {
            if lambda.len() > n + 1 || lambda.largest() + n + 1 > back.precision() {
                continue;
            }
            ensure(
                affine_coordinate(&a, &lambda)? == affine_coordinate(&back, &lambda)?,
                || format!("sample {k}: u_{lambda} differs after the roundtrip"),
            )?;
        }
        let again = arc_to_ode(&back)?;
        ensure(again.eq_to_precision(&l), || {
            format!("sample {k}: operator roundtrip")
        })?;
    }
    Ok((
        cfg.samples,
        vec!["coordinates solve arc_to_ode; roundtrip preserves invariants".into()],
    ))
}

fn suite_adjoint(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let m = 1 + k % 4;
        let l = sample::operator(rng, m, 8);
        let u = sample::series(rng, 8);
        let v = sample::series(rng, 8);
        ensure(
            lagrange_identity_residual(&l, &u, &v)?.is_zero_to_precision(),
            || format!("sample {k}: Lagrange identity"),
        )?;
        ensure(adjoint(&adjoint(&l)?)?.eq_to_precision(&l), || {
            format!("sample {k}: adjoint is not an involution")
        })?;
        if m >= 2 {
            ensure(!gram_matrix(&l)?.det()?.is_zero(), || {
                format!("sample {k}: Gram determinant vanishes")
            })?;
        }
    }
    let duality = cfg.samples.clamp(1, 20);
    for k in 0..duality {
        let l = sample::operator(rng, 3, 7);
        ensure(plucker_duality_check(&l)?, || {
            format!("third-order sample {k}: duality")
        })?;
    }
    Ok((
        cfg.samples + duality,
        vec![format!(
            "{duality} third-order operators pass the duality check"
        )],
    ))
}

fn suite_involution(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    let checks = cfg.samples.clamp(10, 30);
    let r = involution_report(rng.gen(), 6, checks)?;
    ensure(r.squares_to_identity, || "M² ≠ I".into())?;
    ensure(
        r.monge_covector_eigenvalue
            .as_ref()
            .is_some_and(|s| s.abs().is_one()),
        || "Monge direction is not fixed up to sign".into(),
    )?;
    ensure(
        r.v11_equals_u11 && r.v111_relation && r.matrix_reproduces_v111,
        || "classical relations fail".into(),
    )?;
    Ok((
        r.fit_samples + r.check_samples + r.liouville_samples,
        vec![format!("M = {}", matrix_inline(&r.matrix))],
    ))
}

fn suite_slices(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..cfg.samples {
        let n = 2 + k % 3;
        let a = sample::arc(rng, n, n + 5);
        let b = normalize_to_b(&a)?;
        ensure(b.group.apply(&a)? == b.arc, || {
            format!("sample {k}: B roundtrip")
        })?;
    }
    let orbit = (cfg.samples * 3 / 5).max(1);
    for k in 0..orbit {
        let n = 2 + k % 3;
        let p = n + 5;
        let root = sample::nonzero_int(rng, 4);
        let s = slice_arc(rng, n, &pow(&root, 3), p);
        let g = sample::group_triple(rng, n, p);
        let x = normalize_to_mu3(&s, false)?;
        let y = normalize_to_mu3(&g.apply(&s)?, false)?;
        ensure(x.exact && y.exact, || {
            format!("sample {k}: cube α is not exact")
        })?;
        ensure(mu3_orbit_equal(&x, &y)?, || {
            format!("sample {k}: orbit not recovered")
        })?;
    }
    Ok((cfg.samples + orbit, vec![]))
}

/// A Monge member (`on = true`) or non-member, in general position.
pub fn membership_arc<R: Rng + ?Sized>(rng: &mut R, n: usize, on: bool, precision: usize) -> Arc {
    let c = if on {
        Scalar::zero()
    } else {
        sample::nonzero_scalar(rng)
    };
    let s = slice_arc(rng, n, &c, precision);
    let g: GroupTriple = sample::group_triple(rng, n, precision);
    g.apply(&s).expect("group action")
}

fn suite_membership(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> Result<(usize, Vec<String>)> {
    for k in 0..2 * cfg.samples {
        let n = 2 + k % 3;
        let on = k % 2 == 0;
        let a = membership_arc(rng, n, on, n + 5);
        let formula = monge_formula(&a)?.is_zero();
        ensure(formula == on, || format!("sample {k}: corpus construction"))?;
        ensure(monge_member_geometric(&a)? == formula, || {
            format!("sample {k}: geometric test disagrees")
        })?;
        if n >= 3 {
            let proj = project_from_center(&a)?;
            ensure(monge_formula(&proj)?.is_zero() == formula, || {
                format!("sample {k}: projection")
            })?;
        }
    }
    Ok((2 * cfg.samples, vec![]))
}

fn matrix_inline(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Comparator section: quoted adjoint and concomitant formulas, and the
/// quoted involution matrix, against the constructive results.
pub fn comparators(seed: u64) -> Vec<ComparatorReport> {
    let mut out = Vec::new();

    // Smallest order, then lowest-degree monomial coefficient, on which the
    // quoted q_i differ.
    let mut q_detail = "agrees on monomial operators of orders 1..4".to_string();
    let mut q_matches = true;
    'search: for m in 1..=4 {
        for deg in 0..=2 {
            for i in 0..m {
                let p = m + deg + 1;
                let mut coeffs = vec![TruncSeries::zero(p); m];
                coeffs[i] = TruncSeries::monomial(Scalar::one(), deg, p);
                let l = DiffOperator::new(coeffs).expect("valid");
                let (Ok(a), Ok(c)) = (adjoint(&l), adjoint_closed_form(&l)) else {
                    continue;
                };
                if let Some((idx, pow)) = first_mismatch(&a, &c) {
                    q_matches = false;
                    q_detail = format!(
                        "differs: order {m} with c_{} = t^{deg}, other coefficients 0; coefficient of t^{pow} in q_{idx}: constructive {}, quoted {}",
                        i + 1,
                        format_scalar(a.coeffs()[idx - 1].coeff(pow)),
                        format_scalar(c.coeffs()[idx - 1].coeff(pow)),
                    );
                    break 'search;
                }
            }
        }
    }
    out.push(ComparatorReport {
        name: "adjoint q_i".into(),
        matches: q_matches,
        detail: q_detail,
    });

    let mut rng = suite_rng(seed, "comparators");
    let l = sample::operator(&mut rng, 3, 6);
    let u = sample::series(&mut rng, 6);
    let v = sample::series(&mut rng, 6);
    let closed = bilinear_b_closed_form(&l, &u, &v);
    let direct = bilinear_b(&l, &u, &v);
    let swapped = bilinear_b(&l, &v, &u);
    let (matches, detail) = match (closed, direct, swapped) {
        (Ok(c), Ok(d), Ok(_)) if c.eq_to_precision(&d) => (true, "agrees".to_string()),
        (Ok(c), Ok(_), Ok(s)) if c.eq_to_precision(&s) => (
            false,
            "differs: the quoted B(u,v) equals the constructive B(v,u)".to_string(),
        ),
        _ => (false, "differs from B(u,v) and B(v,u)".to_string()),
    };
    out.push(ComparatorReport {
        name: "concomitant B".into(),
        matches,
        detail,
    });

    let detail = match involution_report(seed, 6, 10) {
        Ok(r) => {
            let quoted = crate::odelink::reference_involution_matrix();
            format!(
                "fitted {} (M² = I: {}); quoted {} (squares to I: {}; equal up to signed basis change: {})",
                matrix_inline(&r.matrix),
                r.squares_to_identity,
                matrix_inline(&quoted),
                r.reference_squares_to_identity,
                r.reference_equivalent_up_to_signed_basis
            )
        }
        Err(e) => format!("fit failed: {e}"),
    };
    let matches = involution_report(seed, 6, 10).is_ok_and(|r| r.reference_equals_fit);
    out.push(ComparatorReport {
        name: "involution matrix".into(),
        matches,
        detail,
    });
    out
}

impl CheckReport {
    /// Human-readable rendering, one line per suite and comparator.
    pub fn to_text(&self) -> String {
        let mut s = format!("seed {} samples {}\n", self.seed, self.samples);
        for r in &self.suites {
            s.push_str(&format!(
                "{} {} ({} samples)\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.samples
            ));
            for note in &r.notes {
                s.push_str(&format!("    {note}\n"));
            }
        }
        s.push_str("comparators:\n");
        for c in &self.comparators {
            s.push_str(&format!(
                "{} {}: {}\n",
                if c.matches { "MATCH" } else { "DIFFERS" },
                c.name,
                c.detail
            ));
        }
        s.push_str(if self.passed {
            "all suites passed\n"
        } else {
            "some suites FAILED\n"
        });
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_reproducible() {
        let cfg = CheckConfig {
            seed: 3,
            samples: 3,
            corrupt_constant: false,
        };
        let r = run_checks(&cfg);
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r, run_checks(&cfg));
        assert_eq!(r.suites.len(), 10);
    }

    #[test]
    fn corrupted_constant_fails() {
        let cfg = CheckConfig {
            seed: 3,
            samples: 2,
            corrupt_constant: true,
        };
        let r = run_checks(&cfg);
        assert!(!r.passed);
        assert!(
            !r.suites
                .iter()
                .find(|s| s.name == "monge-veronese")
                .unwrap()
                .passed
        );
    }
}
