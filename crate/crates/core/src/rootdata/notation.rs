//! Textual root notation: `e1-e3`, `2e1-e2-e3`, `1/2(d+e1-e2+e3)`, `-2e1`.
//!
//! `d` (or `delta`) names the odd direction of G(3) and F(4). Scalars may be
//! integers or fractions and may be followed by `*`.

use num_traits::{Signed, Zero};

use super::{build, RootSystem, WeightVector};
use crate::error::{Error, Result};
use crate::linalg::{format_q, Q};

pub(super) fn from_coefficients(sys: &RootSystem, coeffs: &[Q]) -> Result<WeightVector> {
    let bad = |reason: &str| Error::Notation {
        input: coeffs.iter().map(format_q).collect::<Vec<_>>().join(","),
        reason: reason.to_string(),
    };
    if coeffs.len() != sys.ambient_dim() {
        return Err(bad("wrong number of coordinates"));
    }
    build::store_rational(sys.algebra(), coeffs).ok_or_else(|| bad("not in the weight lattice"))
}

struct Parser<'a> {
    symbols: &'a [&'static str],
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn fail<T>(&self, reason: impl Into<String>) -> std::result::Result<T, String> {
        Err(format!("{} at offset {}", reason.into(), self.pos))
    }

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn scalar(&mut self) -> std::result::Result<Option<Q>, String> {
        let Some(n) = self.number() else {
            return Ok(None);
        };
        let mut q = Q::from_integer(n);
        if self.peek() == Some('/') {
            self.pos += 1;
            match self.number() {
                Some(0) => return self.fail("division by zero"),
                Some(d) => q /= Q::from_integer(d),
                None => return self.fail("expected denominator"),
            }
        }
        if self.peek() == Some('*') {
            self.pos += 1;
        }
        Ok(Some(q))
    }

    fn symbol(&mut self) -> std::result::Result<Option<usize>, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let word: String = self.chars[start..self.pos].iter().collect();
        let name = match word.as_str() {
            "delta" => "d",
            "eps1" | "epsilon1" => "e1",
            "eps2" | "epsilon2" => "e2",
            "eps3" | "epsilon3" => "e3",
            w => w,
        };
        match self.symbols.iter().position(|&s| s == name) {
            Some(i) => Ok(Some(i)),
            None => {
                self.pos = start;
                self.fail(format!("unknown symbol `{word}`"))
            }
        }
    }

    /// A scalar alone is only accepted as a literal zero.
    fn term(&mut self) -> std::result::Result<Vec<Q>, String> {
        let k = self.scalar()?;
        let mut v = if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(')') {
                return self.fail("expected `)`");
            }
            self.pos += 1;
            inner
        } else if let Some(i) = self.symbol()? {
            let mut v = vec![Q::zero(); self.symbols.len()];
            v[i] = Q::from_integer(1);
            v
        } else if k.is_some_and(|k| k.is_zero()) {
            vec![Q::zero(); self.symbols.len()]
        } else {
            return self.fail("expected symbol or `(`");
        };
        if let Some(k) = k {
            v.iter_mut().for_each(|x| *x *= k);
        }
        Ok(v)
    }

    fn expr(&mut self) -> std::result::Result<Vec<Q>, String> {
        let mut acc = vec![Q::zero(); self.symbols.len()];
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            for (a, x) in acc.iter_mut().zip(t) {
                *a += x * Q::from_integer(sign);
            }
        }
        Ok(acc)
    }
}

/// Parses into rational coefficients over `symbols`.
pub fn parse_coefficients(symbols: &[&'static str], input: &str) -> Result<Vec<Q>> {
    let mut p = Parser {
        symbols,
        chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let err = |reason: String| Error::Notation {
        input: input.to_string(),
        reason,
    };
    if p.chars.is_empty() {
        return Err(err("empty expression".into()));
    }
    let v = p.expr().map_err(err)?;
    if p.pos != p.chars.len() {
        return Err(err(format!("unexpected `{}` at offset {}", p.chars[p.pos], p.pos)));
    }
    Ok(v)
}

pub(super) fn parse(sys: &RootSystem, input: &str) -> Result<WeightVector> {
    let coeffs = parse_coefficients(sys.symbols(), input)?;
    build::store_rational(sys.algebra(), &coeffs).ok_or_else(|| Error::Notation {
        input: input.to_string(),
        reason: "not in the weight lattice".into(),
    })
}

/// Rational coefficients of a stored vector. For G(3) the epsilon block is
/// shifted along (1,1,1) to the representative with the fewest nonzero
/// entries, so `e1` prints as `e1` rather than `2/3e1-1/3e2-1/3e3`.
pub(crate) fn to_coefficients(sys: &RootSystem, v: &WeightVector) -> Vec<Q> {
    let scale = Q::from_integer(sys.scale() as i64);
    let mut c: Vec<Q> = v.coords().iter().map(|&x| Q::from_integer(x as i64) / scale).collect();
    if sys.algebra() == super::Algebra::G3 {
        let block = build::projected_block(sys.algebra());
        let support = |t: Q, c: &[Q]| c[..block].iter().filter(|&&x| !(x + t).is_zero()).count();
        let mut best = Q::zero();
        let mut best_support = support(best, &c);
        for i in 0..block {
            let t = -c[i];
            let s = support(t, &c);
            if s < best_support {
                best = t;
                best_support = s;
            }
        }
        c[..block].iter_mut().for_each(|x| *x += best);
    }
    c
}

fn write_terms(symbols: &[&str], coeffs: &[Q]) -> String {
    let mut out = String::new();
    for (s, c) in symbols.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if mag != Q::from_integer(1) {
            out.push_str(&format_q(&mag));
        }
        out.push_str(s);
    }
    out
}

pub(crate) fn format_coefficients(symbols: &[&str], coeffs: &[Q]) -> String {
    if coeffs.iter().all(Zero::is_zero) {
        return "0".into();
    }
    let half = Q::new(1, 2);
    if coeffs.iter().all(|c| c.is_zero() || c.abs() == half) {
        let doubled: Vec<Q> = coeffs.iter().map(|c| c * Q::from_integer(2)).collect();
        return format!("1/2({})", write_terms(symbols, &doubled));
    }
    write_terms(symbols, coeffs)
}

pub(super) fn format(sys: &RootSystem, v: &WeightVector) -> String {
    format_coefficients(sys.symbols(), &to_coefficients(sys, v))
}
