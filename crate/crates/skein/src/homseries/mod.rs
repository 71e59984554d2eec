//! Poincaré and Hilbert series as factored products of geometric and binomial factors,
//! their exact expansion in a window, and comparison with ideal Hilbert series.

mod compare;
mod formulas;
mod suite;

#[cfg(test)]
mod tests;

use std::fmt;

use serde_json::{json, Value};

use crate::polycore::{format_q, LaurentSeries, Weight, Window, Q};

pub use compare::{compare_series, hilbert_as_series, ideal_cross_check, CrossCheck, SeriesComparison, SeriesError};
pub use formulas::{
    exterior_factors, hh_series_of_invariant_ring, hom_to_web_series, hopf_parity_series, series_window, sym_factors,
    unknot_series, HopfOptions,
};
pub use suite::suite;

/// `(1 + sign * m)^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub monomial: Weight,
    pub sign: i8,
    pub power: i32,
}

impl Factor {
    /// `(1 + m)`.
    pub fn plus(m: Weight) -> Self {
        Factor { monomial: m, sign: 1, power: 1 }
    }

    /// `1 / (1 - m)`.
    pub fn geometric(m: Weight) -> Self {
        Factor { monomial: m, sign: -1, power: -1 }
    }
}

/// `coef * prefactor * prod factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub coef: Q,
    pub prefactor: Weight,
    pub factors: Vec<Factor>,
}

impl Product {
    pub fn new(prefactor: Weight, factors: Vec<Factor>) -> Self {
        Product { coef: Q::from_integer(1.into()), prefactor, factors }
    }

    fn slope_needed(&self) -> i32 {
        self.factors
            .iter()
            .filter(|f| f.power < 0 && f.monomial.t > 0)
            .map(|f| {
                (-f.monomial.q).div_euclid(f.monomial.t) + i32::from((-f.monomial.q).rem_euclid(f.monomial.t) != 0)
            })
            .max()
            .unwrap_or(0)
            .max(0)
    }

    /// How far below zero `q + slope t` can reach through the prefactor and finite factors.
    fn overshoot(&self, slope: i32) -> i32 {
        let level = |w: Weight| (-(w.q + slope * w.t)).max(0);
        level(self.prefactor)
            + self.factors.iter().filter(|f| f.power > 0).map(|f| f.power * level(f.monomial)).sum::<i32>()
    }

    fn expand(&self, window: Window) -> LaurentSeries {
        let slope = window.slope.max(self.slope_needed());
        let inner = Window { q: (window.q.0, window.q.1 + self.overshoot(slope)), ..window }.with_slope(slope);
        let mut s = LaurentSeries::monomial(inner, self.prefactor, self.coef.clone());
        for f in &self.factors {
            let base = if f.power > 0 {
                let mut p = LaurentSeries::one(inner);
                p.add_term(f.monomial, Q::from_integer(f.sign.into()));
                p
            } else {
                LaurentSeries::geometric(inner, f.monomial, Q::from_integer((-f.sign).into()))
            };
            for _ in 0..f.power.abs() {
                s = s.mul(&base);
            }
        }
        LaurentSeries { window, coeffs: s.coeffs }.restricted()
    }
}

/// A finite sum of factored products.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesExpr {
    pub terms: Vec<Product>,
}

impl SeriesExpr {
    pub fn one() -> Self {
        SeriesExpr { terms: vec![Product::new(Weight::ZERO, vec![])] }
    }

    pub fn product(prefactor: Weight, factors: Vec<Factor>) -> Self {
        SeriesExpr { terms: vec![Product::new(prefactor, factors)] }
    }

    pub fn sum(mut self, other: SeriesExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }

    /// Distributes over the terms of both sides.
    pub fn times(&self, other: &SeriesExpr) -> Self {
        let mut terms = Vec::new();
        for l in &self.terms {
            for r in &other.terms {
                let mut factors = l.factors.clone();
                factors.extend(r.factors.iter().copied());
                terms.push(Product { coef: &l.coef * &r.coef, prefactor: l.prefactor + r.prefactor, factors });
            }
        }
        SeriesExpr { terms }
    }

    pub fn shifted(&self, by: Weight) -> Self {
        SeriesExpr { terms: self.terms.iter().map(|p| Product { prefactor: p.prefactor + by, ..p.clone() }).collect() }
    }

    /// Exact coefficients of every monomial in the window.
    pub fn expand(&self, window: Window) -> LaurentSeries {
        let mut out = LaurentSeries::zero(window);
        for p in &self.terms {
            out = out.add(&p.expand(window));
        }
        out.restricted()
    }
}

pub fn monomial_text(w: Weight) -> String {
    let parts: Vec<String> = [("a", w.a), ("q", w.q), ("t", w.t)]
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn factor_text(f: &Factor) -> String {
    let op = if f.sign > 0 { '+' } else { '-' };
    let base = format!("(1 {op} {})", monomial_text(f.monomial));
    match f.power.abs() {
        1 => base,
        k => format!("{base}^{k}"),
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: String = self.factors.iter().filter(|x| x.power > 0).map(factor_text).collect();
        let den: Vec<String> = self.factors.iter().filter(|x| x.power < 0).map(factor_text).collect();
        let mut lead = Vec::new();
        if self.coef != Q::from_integer(1.into()) {
            lead.push(format_q(&self.coef));
        }
        if self.prefactor != Weight::ZERO {
            lead.push(monomial_text(self.prefactor));
        }
        let mut body = if num.is_empty() { String::new() } else { num };
        if !den.is_empty() {
            if body.is_empty() {
                body.push('1');
            }
            if den.len() == 1 {
                body.push_str(&format!("/{}", den[0]));
            } else {
                body.push_str(&format!("/({})", den.concat()));
            }
        }
        if !body.is_empty() {
            lead.push(body);
        }
        if lead.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", lead.join("*"))
        }
    }
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[{a, q, t, coef}]`, sorted by weight.
pub fn coefficients_json(s: &LaurentSeries) -> Value {
    Value::Array(
        s.restricted().coeffs.iter().map(|(w, c)| json!({"a": w.a, "q": w.q, "t": w.t, "coef": format_q(c)})).collect(),
    )
}
