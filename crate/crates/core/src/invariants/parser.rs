//! Text format for invariant polynomials.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := integer ("/" integer)? | coord | "(" expr ")"
//! coord  := "U" | "U_" digit+ | "U_{" integer ("," integer)* "}"
//! ```
//!
//! `U_21` is the Plücker coordinate of the partition `(2, 1)`; each digit is
//! one part. Columns in errors are 1-based character positions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use super::poly::{normalize_monomial, InvariantPoly, Monomial};
use crate::error::{Error, Result};
use crate::series::Scalar;

const MAX_EXPONENT: usize = 64;

type RawPoly = BTreeMap<Monomial, Scalar>;

fn constant(c: Scalar) -> RawPoly {
    let mut p = RawPoly::new();
    if !c.is_zero() {
        p.insert(Vec::new(), c);
    }
    p
}

fn add(mut a: RawPoly, b: RawPoly, sign: &Scalar) -> RawPoly {
    for (m, c) in b {
        *a.entry(m).or_insert_with(Scalar::zero) += c * sign;
    }
    a.retain(|_, c| !c.is_zero());
    a
}

fn mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = normalize_monomial(ma.iter().chain(mb).cloned());
            *out.entry(m).or_insert_with(Scalar::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: at + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Ok(text.parse().expect("digits"))
    }

    fn small_integer(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.integer()?;
        match usize::try_from(v) {
            Ok(v) => Ok(v),
            Err(_) => self.err(at, "integer too large"),
        }
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = add(acc, self.term()?, &Scalar::one());
                }
                Some('-') => {
                    self.pos += 1;
                    acc = add(acc, self.term()?, &-Scalar::one());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = mul(&acc, &self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RawPoly> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(add(RawPoly::new(), self.unary()?, &-Scalar::one()))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RawPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let e = self.small_integer()?;
        if e > MAX_EXPONENT {
            return self.err(at, format!("exponent larger than {MAX_EXPONENT}"));
        }
        let mut acc = constant(Scalar::one());
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RawPoly> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den_at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err(den_at, "zero denominator");
                    }
                    Ok(constant(Scalar::new(num, den)))
                } else {
                    Ok(constant(Scalar::from_integer(num)))
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    let here = self.pos;
                    return self.err(here, "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('U') => {
                self.pos += 1;
                let lambda = self.partition_suffix(at)?;
                if lambda.len() > self.n + 1 {
                    return self.err(at, format!("{lambda} has more than {} parts", self.n + 1));
                }
                let mut p = RawPoly::new();
                p.insert(vec![(lambda, 1)], Scalar::one());
                Ok(p)
            }
            Some(c) => self.err(at, format!("unexpected character {c:?}")),
            None => self.err(at, "unexpected end of expression"),
        }
    }

    /// Parses what follows `U` (no whitespace allowed inside the token).
    fn partition_suffix(&mut self, token_at: usize) -> Result<Partition> {
        let mut parts: Vec<usize> = Vec::new();
        if self.chars.get(self.pos) == Some(&'_') {
            self.pos += 1;
            if self.chars.get(self.pos) == Some(&'{') {
                self.pos += 1;
                loop {
                    if self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
                        let here = self.pos;
                        return self.err(here, "whitespace inside a partition token");
                    }
                    parts.push(self.small_integer()?);
                    match self.chars.get(self.pos) {
                        Some(',') => self.pos += 1,
                        Some('}') => {
                            self.pos += 1;
                            break;
                        }
                        _ => {
                            let here = self.pos;
                            return self.err(here, "expected ',' or '}' in partition");
                        }
                    }
                }
            } else {
                let start = self.pos;
                while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
                    parts.push(d as usize);
                    self.pos += 1;
                }
                if start == self.pos {
                    return self.err(start, "expected partition digits after 'U_'");
                }
            }
        }
        if let Some(c) = self.chars.get(self.pos) {
            if c.is_alphanumeric() || *c == '_' {
                let here = self.pos;
                return self.err(
                    here,
                    format!("unexpected character {c:?} in partition token"),
                );
            }
        }
        Partition::new(&parts).or_else(|_| {
            self.err(
                token_at,
                format!("partition parts must be non-increasing: {parts:?}"),
            )
        })
    }
}

/// Parses an invariant polynomial for arcs in `P^n` and checks that it is
/// bihomogeneous.
pub fn parse_expression(text: &str, n: usize) -> Result<InvariantPoly> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        n,
    };
    let raw = p.expr()?;
    if let Some(c) = p.peek() {
        let here = p.pos;
        return p.err(here, format!("unexpected character {c:?}"));
    }
    InvariantPoly::new(n, raw.into_iter().map(|(m, c)| (c, m)))
}
