use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::mono::Mono;
use super::ring::{Registry, Ring, Weight};
use super::{PolyError, Q};

/// Exact rational polynomial over a variable registry.
#[derive(Clone)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Mono, Q>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

impl Poly {
    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Q::one())
    }

    pub fn constant(ring: &Ring, c: Q) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    pub fn int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, q_int(n))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Mono::var(i, 1), Q::one())
    }

    pub fn named(ring: &Ring, name: &str) -> Self {
        Self::var(ring, ring.idx(name))
    }

    pub fn monomial(ring: &Ring, m: Mono, c: Q) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from raw terms, combining repeats and normalising odd variables.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Mono, Q)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn registry(&self) -> &Registry {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Mono, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Mono, Q> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Q {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Poly) {
        assert!(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring, "{}", PolyError::RegistryMismatch);
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        if !(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) {
            return Err(PolyError::RegistryMismatch);
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        if !(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) {
            return Err(PolyError::RegistryMismatch);
        }
        Ok(self * other)
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        self.check_ring(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Poly) {
        self.check_ring(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Q) {
        if c.is_zero() {
            return;
        }
        self.check_ring(other);
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    /// `self += c * mono * other`.
    pub fn add_mono_scaled(&mut self, other: &Poly, m: &Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (n, d) in &other.terms {
            if let Some((p, neg)) = m.mul(n, &self.ring) {
                let v = d * c;
                self.add_term(p, if neg { -v } else { v });
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&q_int(n))
    }

    pub fn mul_mono(&self, m: &Mono, c: &Q) -> Poly {
        let mut p = Poly::zero(&self.ring);
        p.add_mono_scaled(self, m, c);
        p
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Common weight of all terms, or `None` if inhomogeneous. Zero has no weight.
    pub fn homogeneous_weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(|m| m.weight(&self.ring));
        let w = it.next()?;
        if it.all(|x| x == w) {
            Some(w)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn total_degree_in(&self, vars: &[usize]) -> u32 {
        self.terms.keys().map(|m| vars.iter().map(|&v| m.exp(v)).sum()).max().unwrap_or(0)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flat_map(|m| m.factors().map(|p| p.0)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Coefficients as a polynomial in variable `i`: index k holds the coefficient of `x_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![Poly::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            out[e].terms.insert(m.without(i), c.clone());
        }
        out
    }

    /// Relabels variables by an index permutation of the registry (a ring automorphism).
    pub fn relabel(&self, perm: &[usize]) -> Poly {
        let mut p = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let (n, neg) = m.relabel(perm, &self.ring);
            p.add_term(n, if neg { -c.clone() } else { c.clone() });
        }
        p
    }

    /// Swaps pairs of variables simultaneously.
    pub fn swap_vars(&self, pairs: &[(usize, usize)]) -> Poly {
        let mut perm: Vec<usize> = (0..self.ring.len()).collect();
        for &(i, j) in pairs {
            perm[i] = j;
            perm[j] = i;
        }
        self.relabel(&perm)
    }

    /// Replaces variable `i` by the polynomial `value`.
    pub fn substitute_var(&self, i: usize, value: &Poly) -> Poly {
        let coeffs = self.coefficients_in(i);
        // Horner
        let mut acc = Poly::zero(&self.ring);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Exact division; errors if `divisor` does not divide `self`. Even variables only.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ring);
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&lm).ok_or(PolyError::NotDivisible)?;
            let qc = c / &lc;
            rem.add_mono_scaled(divisor, &qm, &-qc.clone());
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Division by `x_i - value` where `value` does not involve `x_i`, via synthetic division.
    pub fn div_linear(&self, i: usize, value: &Poly) -> Result<Poly, PolyError> {
        let coeffs = self.coefficients_in(i);
        let n = coeffs.len();
        if n == 1 {
            return if coeffs[0].is_zero() { Ok(Poly::zero(&self.ring)) } else { Err(PolyError::NotDivisible) };
        }
        let mut q = vec![Poly::zero(&self.ring); n - 1];
        q[n - 2] = coeffs[n - 1].clone();
        for k in (1..n - 1).rev() {
            q[k - 1] = &coeffs[k] + &(value * &q[k]);
        }
        let rem = &coeffs[0] + &(value * &q[0]);
        if !rem.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        let xi = Poly::var(&self.ring, i);
        let mut acc = Poly::zero(&self.ring);
        for c in q.iter().rev() {
            acc = &(&acc * &xi) + c;
        }
        Ok(acc)
    }

    /// Moves to another registry by variable name; errors if a used variable is missing.
    pub fn transfer(&self, target: &Ring) -> Result<Poly, PolyError> {
        let mut map = HashMap::new();
        for i in self.variables() {
            map.insert(i, target.try_idx(self.ring.name(i))?);
        }
        let mut p = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Mono::one();
            let mut neg = false;
            for (i, e) in m.factors() {
                let (n, s) = acc.mul(&Mono::var(map[&i], e), target).ok_or(PolyError::RegistryMismatch)?;
                acc = n;
                neg ^= s;
            }
            p.add_term(acc, if neg { -c.clone() } else { c.clone() });
        }
        Ok(p)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn negate_if(self, neg: bool) -> Poly {
        if neg {
            -self
        } else {
            self
        }
    }

    pub fn abs_sign_normalized(&self) -> (Poly, bool) {
        match self.leading() {
            Some((_, c)) if c.is_negative() => (-self.clone(), true),
            _ => (self.clone(), false),
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_assign_ref(other);
        p
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.sub_assign_ref(other);
        p
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        self.check_ring(other);
        let mut p = Poly::zero(&self.ring);
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let swapped = !std::ptr::eq(small, self);
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                let prod = if swapped { n.mul(m, &self.ring) } else { m.mul(n, &self.ring) };
                if let Some((k, neg)) = prod {
                    let v = c * d;
                    p.add_term(k, if neg { -v } else { v });
                }
            }
        }
        p
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, other: Poly) -> Poly {
        &self + &other
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, other: Poly) -> Poly {
        &self - &other
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, other: Poly) -> Poly {
        &self * &other
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

pub fn sum<'a>(ring: &Ring, it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut acc = Poly::zero(ring);
    for p in it {
        acc.add_assign_ref(p);
    }
    acc
}

pub fn product<'a>(ring: &Ring, it: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut acc = Poly::one(ring);
    for p in it {
        acc = &acc * p;
    }
    acc
}
