use std::fmt;

use crate::arcgeom::{degree, weight};
use crate::error::{Error, Result};

/// A partition `λ_0 ≥ λ_1 ≥ … ≥ 0`, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be non-increasing: {parts:?}"
            )));
        }
        let len = parts.iter().position(|&x| x == 0).unwrap_or(parts.len());
        Ok(Self {
            parts: parts[..len].to_vec(),
        })
    }

    /// The empty partition, whose Plücker coordinate is the wronskian `U`.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `(1^k)`: the column partition.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    /// The hook `(k, 1^legs)`; `k = 0` gives the empty partition.
    pub fn hook(k: usize, legs: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, legs));
        Self { parts }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_0`, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n + 1`; fails if `λ` has more
    /// than `n + 1` parts.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.parts.len() > n + 1 {
            return Err(Error::InvalidArgument(format!(
                "partition {self} has more than {} parts",
                n + 1
            )));
        }
        let mut p = self.parts.clone();
        p.resize(n + 1, 0);
        Ok(p)
    }

    /// All partitions with at most `max_len` parts and `|λ| ≤ max_weight`,
    /// ordered by weight then lexicographically descending.
    pub fn enumerate(max_len: usize, max_weight: usize) -> Vec<Self> {
        fn rec(
            remaining: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            out.push(cur.clone());
            if slots == 0 {
                return;
            }
            for part in (1..=cap.min(remaining)).rev() {
                cur.push(part);
                rec(remaining - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(max_weight, max_weight, max_len, &mut Vec::new(), &mut raw);
        let mut out: Vec<Self> = raw.into_iter().map(|parts| Self { parts }).collect();
        out.sort_by(|a, b| a.weight().cmp(&b.weight()).then(b.parts.cmp(&a.parts)));
        out
    }
}

impl fmt::Display for Partition {
    /// Token form: `U`, `U_21`, or `U_{10,2}` when some part exceeds 9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "U");
        }
        if self.parts.iter().all(|&p| p < 10) {
            write!(f, "U_")?;
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
            write!(f, "U_{{{}}}", s.join(","))
        }
    }
}

/// Reduced bidegree `(d, p)` of an invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bidegree {
    pub d: usize,
    pub p: usize,
}

impl Bidegree {
    pub fn new(d: usize, p: usize) -> Self {
        Self { d, p }
    }

    /// Full degree `δ = d(n+1)`.
    pub fn degree(&self, n: usize) -> usize {
        degree(n, self.d)
    }

    /// Full weight `ϖ = C(n+1,2) d + p`.
    pub fn weight(&self, n: usize) -> usize {
        weight(n, self.d, self.p)
    }

    /// Recovers the reduced bidegree from full `(δ, ϖ)`; `δ` must be
    /// divisible by `n + 1`.
    pub fn from_full(n: usize, delta: usize, varpi: usize) -> Result<Self> {
        if !delta.is_multiple_of(n + 1) {
            return Err(Error::InvalidArgument(format!(
                "degree {delta} is not divisible by {}",
                n + 1
            )));
        }
        let d = delta / (n + 1);
        let base = weight(n, d, 0);
        if varpi < base {
            return Err(Error::InvalidArgument(format!(
                "weight {varpi} is below the minimum {base} for degree {delta}"
            )));
        }
        Ok(Self { d, p: varpi - base })
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.p)
    }
}
