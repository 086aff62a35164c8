use halphen::arcgeom::{act_linear, Arc, GroupTriple};
use halphen::canonical::normalize_to_b;
use halphen::invariants::{monge_formula, parse_expression, InvariantPoly};
use halphen::json::{arc_json, parse_arc_json};
use halphen::odelink::{adjoint, DiffOperator};
use halphen::sample;
use halphen::series::scalar::frac;
use halphen::series::{format_scalar, parse_scalar};
use halphen::{Scalar, TruncSeries};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| frac(a, b))
}

fn series(p: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(scalar(), p).prop_map(|c| TruncSeries::new(c).unwrap())
}

fn unit_series(p: usize) -> impl Strategy<Value = TruncSeries> {
    (series(p), scalar().prop_filter("nonzero", |x| !x.is_zero())).prop_map(|(s, c)| {
        let mut v = s.into_coeffs();
        v[0] = c;
        TruncSeries::new(v).unwrap()
    })
}

fn tangent_series(p: usize) -> impl Strategy<Value = TruncSeries> {
    unit_series(p - 1).prop_map(move |s| s.shift_up(1).truncate(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(f in series(6), g in series(6), h in series(6)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn inverse_is_two_sided(f in unit_series(7)) {
        let inv = f.inverse().unwrap();
        prop_assert_eq!(&f * &inv, TruncSeries::one(7));
    }

    #[test]
    fn reversion_inverts_composition(v in tangent_series(7)) {
        let r = v.revert().unwrap();
        prop_assert_eq!(v.compose(&r).unwrap(), TruncSeries::t(7));
        prop_assert_eq!(r.compose(&v).unwrap(), TruncSeries::t(7));
    }

    #[test]
    fn composition_is_associative(f in series(6), g in tangent_series(6), h in tangent_series(6)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn leibniz_rule(f in series(7), g in series(7)) {
        let lhs = (&f * &g).derive().unwrap();
        let rhs = &(&f.derive().unwrap() * &g) + &(&f * &g.derive().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_is_a_homomorphism(a in tangent_series(7), b in tangent_series(7)) {
        let lhs = (&a + &b).exp().unwrap();
        let rhs = &a.exp().unwrap() * &b.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_strings_roundtrip(x in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn adjoint_is_an_involution(c in prop::collection::vec(series(8), 1..=4)) {
        let l = DiffOperator::new(c).unwrap();
        let back = adjoint(&adjoint(&l).unwrap()).unwrap();
        prop_assert!(back.eq_to_precision(&l));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn arc_json_roundtrip(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::arc(&mut rng, n, n + 4);
        let text = serde_json::to_string(&arc_json(&a)).unwrap();
        let back = parse_arc_json(&text).unwrap().to_arc(None, |n| n + 8).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn monge_is_linearly_covariant(seed in any::<u64>(), n in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::arc(&mut rng, n, n + 4);
        let m = sample::linear_map(&mut rng, n + 1);
        let det = m.det().clone();
        let factor = (0..3).fold(Scalar::one(), |acc, _| acc * &det);
        prop_assert_eq!(monge_formula(&act_linear(&m, &a).unwrap()).unwrap(), factor * monge_formula(&a).unwrap());
    }

    #[test]
    fn b_slice_is_idempotent(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = sample::arc(&mut rng, n, n + 5);
        let f = normalize_to_b(&a).unwrap();
        let again = normalize_to_b(&f.arc).unwrap();
        prop_assert_eq!(&again.arc, &f.arc);
        prop_assert_eq!(again.group, GroupTriple::identity(n + 1, n + 5));
    }
}

#[test]
fn monge_polynomial_prints_and_reparses() {
    for n in 2..=5 {
        let p = InvariantPoly::monge(n).unwrap();
        assert_eq!(parse_expression(&p.to_string(), n).unwrap(), p);
    }
}

#[test]
fn normal_curve_has_vanishing_monge() {
    for n in 2..=5 {
        let rows: Vec<Vec<i64>> = (0..=n)
            .map(|i| {
                let mut r = vec![0; i + 1];
                r[i] = 1;
                r
            })
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let a = Arc::from_int_rows(&refs, n + 5).unwrap();
        assert!(monge_formula(&a).unwrap().is_zero());
    }
}
