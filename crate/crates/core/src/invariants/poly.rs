//! Polynomials in the Plücker coordinates `U_λ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::partition::{Bidegree, Partition};
use super::plucker::u_lambda;
use crate::arcgeom::{Arc, GroupElement};
use crate::error::{Error, Result};
use crate::series::scalar::{format_scalar, int, pow};
use crate::series::Scalar;

/// A product `Π U_λ^e`, sorted by partition with positive exponents.
pub type Monomial = Vec<(Partition, usize)>;

pub(crate) fn normalize_monomial(
    factors: impl IntoIterator<Item = (Partition, usize)>,
) -> Monomial {
    let mut acc: BTreeMap<Partition, usize> = BTreeMap::new();
    for (p, e) in factors {
        if e > 0 {
            *acc.entry(p).or_default() += e;
        }
    }
    acc.into_iter().collect()
}

/// `(d, p)` of a monomial: its degree and total partition weight.
pub fn monomial_bidegree(m: &Monomial) -> Bidegree {
    Bidegree::new(
        m.iter().map(|(_, e)| e).sum(),
        m.iter().map(|(p, e)| p.weight() * e).sum(),
    )
}

/// A bihomogeneous polynomial in the `U_λ` of arcs in `P^n`.
///
/// No reduction modulo Plücker relations is attempted; two polynomials may
/// define the same invariant while differing as polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPoly {
    n: usize,
    bidegree: Bidegree,
    terms: BTreeMap<Monomial, Scalar>,
}

impl InvariantPoly {
    /// Builds the polynomial and infers its reduced bidegree; rejects mixed
    /// bidegrees and partitions with more than `n + 1` parts. The zero
    /// polynomial gets bidegree `(0, 0)`.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Scalar, Monomial)>) -> Result<Self> {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (c, m) in terms {
            let m = normalize_monomial(m);
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        for m in map.keys() {
            for (p, _) in m {
                p.padded(n)?;
            }
        }
        let mut degrees = map.keys().map(monomial_bidegree);
        let bidegree = degrees.next().unwrap_or(Bidegree::new(0, 0));
        if let Some(other) = degrees.find(|b| *b != bidegree) {
            return Err(Error::NotBihomogeneous(format!(
                "monomials of bidegree {bidegree} and {other}"
            )));
        }
        Ok(Self {
            n,
            bidegree,
            terms: map,
        })
    }

    /// Like [`InvariantPoly::new`] but also checks a declared bidegree.
    pub fn with_bidegree(
        n: usize,
        declared: Bidegree,
        terms: impl IntoIterator<Item = (Scalar, Monomial)>,
    ) -> Result<Self> {
        let mut poly = Self::new(n, terms)?;
        if poly.terms.is_empty() {
            poly.bidegree = declared;
        } else if poly.bidegree != declared {
            return Err(Error::NotBihomogeneous(format!(
                "declared bidegree {declared}, found {}",
                poly.bidegree
            )));
        }
        Ok(poly)
    }

    /// The wronskian `U`, bidegree `(1, 0)`.
    pub fn wronskian(n: usize) -> Self {
        Self::new(n, [(Scalar::one(), vec![(Partition::empty(), 1)])]).expect("valid")
    }

    /// The Monge invariant
    /// `U²(U_3 + 2U_21 + U_111) - 3 U U_1 (U_11 + U_2) + 2 U_1³`,
    /// bidegree `(3, 3)`, for `n ≥ 2`.
    pub fn monge(n: usize) -> Result<Self> {
        monge_with_coefficient(n, int(1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every partition occurring in the polynomial.
    pub fn partitions(&self) -> BTreeSet<Partition> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(p, _)| p.clone()))
            .collect()
    }

    /// Precision needed to evaluate on arcs in `P^n`.
    pub fn required_precision(&self) -> usize {
        self.partitions()
            .iter()
            .map(Partition::largest)
            .max()
            .unwrap_or(0)
            + self.n
            + 1
    }

    /// Substitutes the given `U_λ` values.
    pub fn eval_with(&self, values: &HashMap<Partition, Scalar>) -> Result<Scalar> {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (p, e) in m {
                let v = values
                    .get(p)
                    .ok_or_else(|| Error::InvalidArgument(format!("missing value for {p}")))?;
                term *= pow(v, *e);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn eval(&self, a: &Arc) -> Result<Scalar> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.n(),
            });
        }
        let need = self.required_precision();
        if a.precision() < need {
            return Err(Error::precision(
                "invariant evaluation",
                need,
                a.precision(),
            ));
        }
        let values = self
            .partitions()
            .into_iter()
            .map(|p| Ok((p.clone(), u_lambda(a, &p)?)))
            .collect::<Result<HashMap<_, _>>>()?;
        self.eval_with(&values)
    }

    /// The same polynomial read one dimension higher.
    pub fn iota(&self) -> Self {
        Self {
            n: self.n + 1,
            ..self.clone()
        }
    }
}

impl fmt::Display for InvariantPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_empty() {
                factors.push(format_scalar(&abs));
            }
            for (p, e) in m {
                factors.push(if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts).expect("non-increasing")
}

/// The Monge polynomial with `coeff` in front of `U² U_111`. The invariant
/// uses `coeff = 1`; other values serve as comparators.
pub fn monge_with_coefficient(n: usize, coeff: Scalar) -> Result<InvariantPoly> {
    if n < 2 {
        return Err(Error::UnsupportedDimension { op: "monge", n });
    }
    let u = part(&[]);
    let terms = vec![
        (int(1), vec![(u.clone(), 2), (part(&[3]), 1)]),
        (int(2), vec![(u.clone(), 2), (part(&[2, 1]), 1)]),
        (coeff, vec![(u.clone(), 2), (part(&[1, 1, 1]), 1)]),
        (
            int(-3),
            vec![(u.clone(), 1), (part(&[1]), 1), (part(&[1, 1]), 1)],
        ),
        (int(-3), vec![(u, 1), (part(&[1]), 1), (part(&[2]), 1)]),
        (int(2), vec![(part(&[1]), 3)]),
    ];
    InvariantPoly::with_bidegree(n, Bidegree::new(3, 3), terms)
}

/// Returns `(I(g·a), χ(g) I(a))`; the two agree for an invariant of the
/// declared bidegree.
pub fn transformation_check(
    poly: &InvariantPoly,
    a: &Arc,
    g: &GroupElement,
) -> Result<(Scalar, Scalar)> {
    let moved = g.act(a)?;
    let b = poly.bidegree();
    Ok((
        poly.eval(&moved)?,
        g.character(a.n(), b.d, b.p) * poly.eval(a)?,
    ))
}
