use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::mono::Mono;
use super::poly::Poly;
use super::ring::Ring;
use super::{PolyError, Q};

fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_q(s: &str) -> Result<Q, PolyError> {
    let bad = || PolyError::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl Poly {
    fn fmt_mono(&self, m: &Mono) -> String {
        m.factors()
            .map(|(i, e)| {
                let n = self.registry().name(i);
                if e == 1 {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical text form, terms in decreasing monomial order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&self.fmt_mono(m));
            } else {
                out.push_str(&fmt_q(&a));
                out.push('*');
                out.push_str(&self.fmt_mono(m));
            }
        }
        out
    }

    /// Parses the text form; factors are multiplied left to right (odd signs apply).
    pub fn parse(ring: &Ring, s: &str) -> Result<Poly, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut result = Poly::zero(ring);
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev_op = true;
        for ch in s.chars() {
            match ch {
                '+' | '-' if !cur.trim().is_empty() && !cur.trim_end().ends_with('^') => {
                    chunks.push((neg, cur.clone()));
                    cur.clear();
                    neg = ch == '-';
                    prev_op = true;
                }
                '+' | '-' if prev_op && cur.trim().is_empty() => {
                    if ch == '-' {
                        neg = !neg;
                    }
                }
                c if c.is_whitespace() => cur.push(' '),
                c => {
                    cur.push(c);
                    prev_op = false;
                }
            }
        }
        if cur.trim().is_empty() {
            return Err(PolyError::Parse("dangling operator".into()));
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut term = Poly::one(ring);
            for factor in chunk.split('*') {
                let f = factor.trim();
                if f.is_empty() {
                    return Err(PolyError::Parse(format!("empty factor in {chunk:?}")));
                }
                if f.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                    term = term.scale(&parse_q(f)?);
                    continue;
                }
                let (name, e) = match f.split_once('^') {
                    Some((n, e)) => (
                        n.trim(),
                        e.trim().parse::<u32>().map_err(|_| PolyError::Parse(format!("bad exponent in {f:?}")))?,
                    ),
                    None => (f, 1),
                };
                let i = ring.try_idx(name)?;
                term = &term * &Poly::var(ring, i).pow(e);
            }
            if neg {
                term = -term;
            }
            result.add_assign_ref(&term);
        }
        Ok(result)
    }

    /// JSON term list over the variables that occur (or all, if `all_vars`).
    pub fn to_json(&self) -> Value {
        let vars = self.variables();
        let names: Vec<&str> = vars.iter().map(|&i| self.registry().name(i)).collect();
        let terms: Vec<Value> = self
            .terms()
            .iter()
            .rev()
            .map(|(m, c)| {
                let exps: Vec<u32> = vars.iter().map(|&i| m.exp(i)).collect();
                json!({"coef": fmt_q(c), "exps": exps})
            })
            .collect();
        json!({"vars": names, "terms": terms})
    }

    pub fn from_json(ring: &Ring, v: &Value) -> Result<Poly, PolyError> {
        let bad = |m: &str| PolyError::Parse(m.to_string());
        let vars = v.get("vars").and_then(Value::as_array).ok_or_else(|| bad("missing vars"))?;
        let idx: Vec<usize> = vars
            .iter()
            .map(|n| n.as_str().ok_or_else(|| bad("var name not a string")).and_then(|n| ring.try_idx(n)))
            .collect::<Result<_, _>>()?;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut p = Poly::zero(ring);
        for t in terms {
            let c = parse_q(t.get("coef").and_then(Value::as_str).ok_or_else(|| bad("missing coef"))?)?;
            let exps = t.get("exps").and_then(Value::as_array).ok_or_else(|| bad("missing exps"))?;
            if exps.len() != idx.len() {
                return Err(bad("exponent length mismatch"));
            }
            let mut term = Poly::constant(ring, c);
            for (k, e) in exps.iter().enumerate() {
                let e = e.as_u64().ok_or_else(|| bad("bad exponent"))? as u32;
                if e > 0 {
                    term = &term * &Poly::var(ring, idx[k]).pow(e);
                }
            }
            p.add_assign_ref(&term);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn format_q(c: &Q) -> String {
    fmt_q(c)
}

pub fn parse_rational(s: &str) -> Result<Q, PolyError> {
    parse_q(s)
}
