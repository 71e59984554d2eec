use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::ring::Weight;
use super::Q;

/// Truncation bounds for (q, t, a) exponents, inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub q: (i32, i32),
    pub t: (i32, i32),
    pub a: (i32, i32),
    /// Every factor fed to a product must satisfy `q + slope * t >= 0` unless it is a
    /// finite polynomial; this lets products discard terms that can never return.
    pub slope: i32,
}

impl Window {
    pub fn new(q: (i32, i32), t: (i32, i32), a: (i32, i32)) -> Self {
        Window { q, t, a, slope: 0 }
    }

    pub fn with_slope(mut self, slope: i32) -> Self {
        self.slope = slope.max(self.slope);
        self
    }

    pub fn contains(&self, w: Weight) -> bool {
        (self.q.0..=self.q.1).contains(&w.q)
            && (self.t.0..=self.t.1).contains(&w.t)
            && (self.a.0..=self.a.1).contains(&w.a)
    }

    /// Terms beyond this can never be multiplied back into the window.
    fn beyond(&self, w: Weight) -> bool {
        w.t > self.t.1 || w.q + self.slope * w.t > self.q.1 + self.slope * self.t.1
    }
}

/// Truncated formal Laurent series in q, t, a with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    pub window: Window,
    pub coeffs: BTreeMap<Weight, Q>,
}

impl LaurentSeries {
    pub fn zero(window: Window) -> Self {
        LaurentSeries { window, coeffs: BTreeMap::new() }
    }

    pub fn one(window: Window) -> Self {
        Self::monomial(window, Weight::ZERO, Q::one())
    }

    pub fn monomial(window: Window, w: Weight, c: Q) -> Self {
        let mut s = Self::zero(window);
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Weight, c: Q) {
        if c.is_zero() || self.window.beyond(w) {
            return;
        }
        let e = self.coeffs.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: Weight) -> Q {
        self.coeffs.get(&w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        let mut s = self.clone();
        for (w, c) in &other.coeffs {
            s.add_term(*w, c.clone());
        }
        s
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        let mut s = self.clone();
        for (w, c) in &other.coeffs {
            s.add_term(*w, -c.clone());
        }
        s
    }

    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        let mut s = LaurentSeries::zero(self.window);
        for (w1, c1) in &self.coeffs {
            for (w2, c2) in &other.coeffs {
                s.add_term(*w1 + *w2, c1 * c2);
            }
        }
        s
    }

    pub fn shift(&self, by: Weight) -> LaurentSeries {
        let mut s = LaurentSeries::zero(self.window);
        for (w, c) in &self.coeffs {
            s.add_term(*w + by, c.clone());
        }
        s
    }

    /// `1 / (1 - c m)` as a geometric series; `m` must have `q + slope t > 0` or `t > 0`.
    pub fn geometric(window: Window, m: Weight, c: Q) -> LaurentSeries {
        let mut s = LaurentSeries::one(window);
        let mut w = m;
        let mut cc = c.clone();
        let mut k = 1;
        assert!(m.t > 0 || m.q + window.slope * m.t > 0, "geometric factor does not converge in window");
        while !window.beyond(w) {
            s.add_term(w, cc.clone());
            w += m;
            cc *= c.clone();
            k += 1;
            if k > 100_000 {
                break;
            }
        }
        s
    }

    /// Inverse of a series whose lowest term is a unit constant.
    pub fn inverse(&self) -> Option<LaurentSeries> {
        let c0 = self.coeff(Weight::ZERO);
        if c0.is_zero() {
            return None;
        }
        let rest = {
            let mut r = self.clone();
            r.coeffs.remove(&Weight::ZERO);
            r
        };
        // 1/(c0 + r) = (1/c0) * sum (-r/c0)^k
        let scaled: BTreeMap<Weight, Q> = rest.coeffs.iter().map(|(w, c)| (*w, -c / &c0)).collect();
        let step = LaurentSeries { window: self.window, coeffs: scaled };
        let mut acc = LaurentSeries::one(self.window);
        let mut power = LaurentSeries::one(self.window);
        for _ in 0..10_000 {
            power = power.mul(&step);
            if power.coeffs.is_empty() {
                break;
            }
            acc = acc.add(&power);
        }
        let inv0 = Q::one() / c0;
        Some(LaurentSeries {
            window: self.window,
            coeffs: acc.coeffs.into_iter().map(|(w, c)| (w, c * &inv0)).collect(),
        })
    }

    /// Terms inside the window proper.
    pub fn restricted(&self) -> LaurentSeries {
        LaurentSeries {
            window: self.window,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(w, _)| self.window.contains(**w))
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest term in (t, q, a) order.
    pub fn lowest(&self) -> Option<(Weight, Q)> {
        self.coeffs.iter().min_by_key(|(w, _)| (w.t, w.q, w.a)).map(|(w, c)| (*w, c.clone()))
    }

    /// Coefficient of a^k as a series in q, t.
    pub fn a_coefficient(&self, k: i32) -> LaurentSeries {
        LaurentSeries {
            window: self.window,
            coeffs: self.coeffs.iter().filter(|(w, _)| w.a == k).map(|(w, c)| (*w, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.restricted();
        if r.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = r
            .coeffs
            .iter()
            .map(|(w, c)| {
                let coef = super::text::format_q(c);
                let mut s = String::new();
                let mut factors = Vec::new();
                if w.a != 0 {
                    factors.push(format!("a^{}", w.a));
                }
                if w.q != 0 {
                    factors.push(format!("q^{}", w.q));
                }
                if w.t != 0 {
                    factors.push(format!("t^{}", w.t));
                }
                if factors.is_empty() {
                    s.push_str(&coef);
                } else {
                    if coef != "1" {
                        s.push_str(&coef);
                        s.push('*');
                    }
                    s.push_str(&factors.join("*"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
