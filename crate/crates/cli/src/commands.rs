//! Command implementations; each returns a JSON value and a text rendering.

use std::fmt::Write as _;

use halphen::arcgeom::gap_sequence;
use halphen::canonical::{monge_member_geometric, normalize_to_b, normalize_to_mu3};
use halphen::checks::{run_checks, CheckConfig};
use halphen::invariants::{
    monge_formula, monge_scroll, monge_veronese, parse_expression, u_lambda, Partition,
};
use halphen::json::{
    arc_json, canonical_b_json, canonical_mu3_json, matrix_json, ode_json, parse_arc_json,
    parse_ode_json, scalars, series_json,
};
use halphen::odelink::{
    self, gram_matrix, liouville_normalize, plucker_duality_check, DiffOperator,
};
use halphen::series::format_scalar;
use halphen::{Arc, Error, Matrix};
use serde_json::{json, Value};

use crate::{Report, Slice};

/// Default truncation when the input declares none.
fn default_precision(n: usize) -> usize {
    n + 8
}

fn load_arc(text: &str, precision: Option<usize>) -> Result<Arc, Error> {
    parse_arc_json(text)?.to_arc(precision, default_precision)
}

fn load_ode(text: &str, precision: Option<usize>) -> Result<DiffOperator, Error> {
    parse_ode_json(text)?.to_operator(precision, default_precision)
}

fn ok(json: Value, text: String) -> Result<Report, Error> {
    Ok(Report {
        json,
        text,
        success: true,
    })
}

fn matrix_text(m: &Matrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| {
            format!(
                "  [{}]",
                r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Monge value when defined for this arc, `None` for `n < 2`.
fn monge_if_defined(a: &Arc) -> Result<Option<String>, Error> {
    if a.n() < 2 {
        return Ok(None);
    }
    Ok(Some(format_scalar(&monge_formula(a)?)))
}

pub fn invariants(
    input: &str,
    precision: Option<usize>,
    exprs: &[String],
    max_weight: usize,
) -> Result<Report, Error> {
    let a = load_arc(input, precision)?;
    let n = a.n();
    let mut table = Vec::new();
    let mut text = format!("arc: {a}\n");
    for lambda in Partition::enumerate(n + 1, max_weight) {
        if lambda.largest() + n + 1 > a.precision() {
            continue;
        }
        let v = format_scalar(&u_lambda(&a, &lambda)?);
        writeln!(text, "{lambda} = {v}").expect("string");
        table.push(json!({"partition": lambda.to_string(), "value": v}));
    }
    let gaps = match gap_sequence(&a) {
        Ok(g) => {
            writeln!(text, "gaps: {:?}", g.gaps).expect("string");
            json!(g.gaps)
        }
        Err(Error::InflexionalBeyondPrecision { .. }) => {
            writeln!(text, "gaps: beyond precision").expect("string");
            Value::Null
        }
        Err(e) => return Err(e),
    };
    let monge = monge_if_defined(&a)?;
    if let Some(m) = &monge {
        writeln!(text, "monge: {m}").expect("string");
    }
    let mut values = Vec::new();
    for e in exprs {
        let poly = parse_expression(e, n)?;
        let v = format_scalar(&poly.eval(&a)?);
        let b = poly.bidegree();
        writeln!(text, "{e} = {v}  (bidegree ({}, {}))", b.d, b.p).expect("string");
        values.push(json!({"expression": e, "value": v, "bidegree": [b.d, b.p]}));
    }
    ok(
        json!({
            "n": n,
            "precision": a.precision(),
            "plucker": table,
            "gaps": gaps,
            "monge": monge,
            "expressions": values,
        }),
        text,
    )
}

fn gram_json(l: &DiffOperator) -> Result<(Value, String), Error> {
    let g = gram_matrix(l)?;
    let det = format_scalar(&g.det()?);
    let text = format!("gram:\n{}\ngram det: {det}\n", matrix_text(&g));
    Ok((json!({"matrix": matrix_json(&g), "det": det}), text))
}

fn operator_json(l: &DiffOperator) -> Value {
    json!({
        "ode": ode_json(l),
        "halphen": l.halphen_coeffs().iter().map(|s| scalars(s.coeffs())).collect::<Vec<_>>(),
    })
}

pub fn ode_to_arc(input: &str, precision: Option<usize>) -> Result<Report, Error> {
    let l = load_ode(input, precision)?;
    let a = odelink::ode_to_arc(&l)?;
    let (gram, gram_text) = gram_json(&l)?;
    ok(
        json!({"operator": operator_json(&l), "arc": arc_json(&a), "gram": gram}),
        format!("operator: {l}\narc: {a}\n{gram_text}"),
    )
}

pub fn arc_to_ode(input: &str, precision: Option<usize>) -> Result<Report, Error> {
    let a = load_arc(input, precision)?;
    let l = odelink::arc_to_ode(&a)?;
    let (normal, phi) = liouville_normalize(&l)?;
    ok(
        json!({
            "operator": operator_json(&l),
            "liouville": {"operator": ode_json(&normal), "phi": series_json(&phi)},
        }),
        format!("arc: {a}\noperator: {l}\nliouville: {normal}\nphi: {phi}\n"),
    )
}

pub fn adjoint(input: &str, precision: Option<usize>) -> Result<Report, Error> {
    let l = load_ode(input, precision)?;
    let adj = odelink::adjoint(&l)?;
    let (gram, gram_text) = gram_json(&l)?;
    let duality = if l.order() >= 2 {
        Some(plucker_duality_check(&l)?)
    } else {
        None
    };
    let mut text = format!("operator: {l}\nadjoint: {adj}\n{gram_text}");
    if let Some(d) = duality {
        writeln!(text, "plucker duality: {d}").expect("string");
    }
    ok(
        json!({
            "operator": operator_json(&l),
            "adjoint": operator_json(&adj),
            "gram": gram,
            "duality": duality,
        }),
        text,
    )
}

pub fn canonical(
    input: &str,
    precision: Option<usize>,
    slice: Slice,
    float: bool,
) -> Result<Report, Error> {
    let a = load_arc(input, precision)?;
    match slice {
        Slice::B => {
            let f = normalize_to_b(&a)?;
            let residual: Vec<String> = f.residual.iter().map(format_scalar).collect();
            let text = format!(
                "normal form: {}\nresidual: [{}]\n",
                f.arc,
                residual.join(", ")
            );
            ok(
                serde_json::to_value(canonical_b_json(&f)).expect("serializable"),
                text,
            )
        }
        Slice::Mu3 => {
            let f = normalize_to_mu3(&a, float)?;
            let text = format!(
                "normal form: {}\nalpha: {}\nexact: {}\n",
                f.arc,
                format_scalar(&f.alpha),
                f.exact
            );
            ok(
                serde_json::to_value(canonical_mu3_json(&f)).expect("serializable"),
                text,
            )
        }
    }
}

pub fn monge(input: &str, precision: Option<usize>) -> Result<Report, Error> {
    let a = load_arc(input, precision)?;
    let formula = monge_formula(&a)?;
    let member = monge_member_geometric(&a)?;
    let veronese = (a.n() == 2).then(|| monge_veronese(&a)).transpose()?;
    let scroll = (a.n() == 3).then(|| monge_scroll(&a)).transpose()?;
    let mut text = format!("monge: {}\nmember: {member}\n", format_scalar(&formula));
    if let Some(v) = &veronese {
        writeln!(text, "veronese: {}", format_scalar(v)).expect("string");
    }
    if let Some(s) = &scroll {
        writeln!(text, "scroll: {}", format_scalar(s)).expect("string");
    }
    ok(
        json!({
            "monge": format_scalar(&formula),
            "member": member,
            "veronese": veronese.as_ref().map(format_scalar),
            "scroll": scroll.as_ref().map(format_scalar),
        }),
        text,
    )
}

pub fn check(seed: u64, samples: usize, corrupt_constant: bool) -> Report {
    let report = run_checks(&CheckConfig {
        seed,
        samples,
        corrupt_constant,
    });
    Report {
        json: serde_json::to_value(&report).expect("serializable"),
        text: report.to_text(),
        success: report.passed,
    }
}
