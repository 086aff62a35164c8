//! JSON interchange formats. Rationals travel as canonical strings
//! (`"3"`, `"-1/2"`); key order is fixed by field order.

use serde::{Deserialize, Serialize};

use crate::arcgeom::{Arc, GroupTriple};
use crate::canonical::{CanonicalFormB, CanonicalFormMu3};
use crate::error::{Error, Result};
use crate::odelink::DiffOperator;
use crate::series::{format_scalar, parse_scalar, Matrix, Scalar, TruncSeries};

/// `{"n", "precision", "coords"}` with `coords[i][j] = a_{ij}`.
///
/// On input `precision` may be omitted; rows shorter than the precision are
/// zero-padded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
    pub coords: Vec<Vec<String>>,
}

/// `{"order", "precision", "coeffs"}` holding `c_1..c_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdeJson {
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
    pub coeffs: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub precision: usize,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub linear: Vec<Vec<String>>,
    pub scaling: Vec<String>,
    pub reparam: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalBJson {
    #[serde(flatten)]
    pub arc: ArcJson,
    pub group: GroupJson,
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CanonicalMu3Json {
    #[serde(flatten)]
    pub arc: ArcJson,
    pub group: GroupJson,
    pub alpha: String,
    pub exact: bool,
    pub twist: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Vec<Vec<f64>>>,
}

pub fn scalars(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(format_scalar).collect()
}

pub fn series_json(s: &TruncSeries) -> SeriesJson {
    SeriesJson {
        precision: s.precision(),
        coeffs: scalars(s.coeffs()),
    }
}

pub fn matrix_json(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| scalars(r)).collect()
}

pub fn arc_json(a: &Arc) -> ArcJson {
    ArcJson {
        n: a.n(),
        precision: Some(a.precision()),
        coords: a.coords().iter().map(|c| scalars(c.coeffs())).collect(),
    }
}

pub fn ode_json(l: &DiffOperator) -> OdeJson {
    OdeJson {
        order: l.order(),
        precision: Some(l.precision()),
        coeffs: l.coeffs().iter().map(|c| scalars(c.coeffs())).collect(),
    }
}

pub fn group_json(g: &GroupTriple) -> GroupJson {
    GroupJson {
        linear: matrix_json(g.linear.matrix()),
        scaling: scalars(g.scaling.series().coeffs()),
        reparam: scalars(g.reparam.series().coeffs()),
    }
}

pub fn canonical_b_json(f: &CanonicalFormB) -> CanonicalBJson {
    CanonicalBJson {
        arc: arc_json(&f.arc),
        group: group_json(&f.group),
        residual: scalars(&f.residual),
    }
}

pub fn canonical_mu3_json(f: &CanonicalFormMu3) -> CanonicalMu3Json {
    CanonicalMu3Json {
        arc: arc_json(&f.arc),
        group: group_json(&f.group),
        alpha: format_scalar(&f.alpha),
        exact: f.exact,
        twist: f.twist,
        approx: f.approx.clone(),
    }
}

/// Parses rows of rational strings into series of a common precision.
/// `precision` wins over `declared`, which wins over `default`; longer rows
/// are truncated, shorter rows zero-padded.
fn parse_rows(
    what: &str,
    rows: &[Vec<String>],
    declared: Option<usize>,
    precision: Option<usize>,
    default: usize,
) -> Result<Vec<TruncSeries>> {
    let p = precision.or(declared).unwrap_or(default);
    if p == 0 {
        return Err(Error::Input(format!("{what}: precision must be positive")));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut coeffs = row
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_scalar(s).map_err(|e| Error::Input(format!("{what}[{i}][{j}]: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if precision.is_none() && declared.is_some() && coeffs.len() > p {
                return Err(Error::Input(format!(
                    "{what}[{i}] has {} entries but precision is {p}",
                    coeffs.len()
                )));
            }
            coeffs.resize(p, Scalar::default());
            TruncSeries::new(coeffs)
        })
        .collect()
}

impl ArcJson {
    /// Builds the arc; `precision` overrides the declared precision, and
    /// `default(n)` applies when neither is given.
    pub fn to_arc(
        &self,
        precision: Option<usize>,
        default: impl Fn(usize) -> usize,
    ) -> Result<Arc> {
        if self.coords.len() != self.n + 1 {
            return Err(Error::Input(format!(
                "n = {} needs {} coordinates, found {}",
                self.n,
                self.n + 1,
                self.coords.len()
            )));
        }
        let coords = parse_rows(
            "coords",
            &self.coords,
            self.precision,
            precision,
            default(self.n),
        )?;
        Arc::new(coords)
    }
}

impl OdeJson {
    pub fn to_operator(
        &self,
        precision: Option<usize>,
        default: impl Fn(usize) -> usize,
    ) -> Result<DiffOperator> {
        if self.order == 0 || self.coeffs.len() != self.order {
            return Err(Error::Input(format!(
                "order {} needs {} coefficient series, found {}",
                self.order,
                self.order,
                self.coeffs.len()
            )));
        }
        let coeffs = parse_rows(
            "coeffs",
            &self.coeffs,
            self.precision,
            precision,
            default(self.order),
        )?;
        DiffOperator::new(coeffs)
    }
}

fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))
}

pub fn parse_arc_json(text: &str) -> Result<ArcJson> {
    from_text(text)
}

pub fn parse_ode_json(text: &str) -> Result<OdeJson> {
    from_text(text)
}
