use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use super::PolyError;

/// Multiplicative degree `q^q t^t a^a`, stored as its exponents.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub q: i32,
    pub t: i32,
    pub a: i32,
}

impl Weight {
    pub const ZERO: Weight = Weight { q: 0, t: 0, a: 0 };

    pub const fn new(q: i32, t: i32, a: i32) -> Self {
        Weight { q, t, a }
    }

    pub const fn qt(q: i32, t: i32) -> Self {
        Weight { q, t, a: 0 }
    }

    pub fn times(self, n: i32) -> Self {
        Weight { q: self.q * n, t: self.t * n, a: self.a * n }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight { q: self.q + o.q, t: self.t + o.t, a: self.a + o.a }
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        *self = *self + o;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight { q: self.q - o.q, t: self.t - o.t, a: self.a - o.a }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { q: -self.q, t: -self.t, a: -self.a }
    }
}

impl Mul<i32> for Weight {
    type Output = Weight;
    fn mul(self, n: i32) -> Weight {
        self.times(n)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} q^{} t^{}", self.a, self.q, self.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarInfo {
    pub name: String,
    pub weight: Weight,
    pub parity: Parity,
}

/// Ordered list of named, weighted variables. The order fixes the monomial order.
#[derive(Clone, Debug)]
pub struct Registry {
    vars: Vec<VarInfo>,
    index: HashMap<String, usize>,
}

impl PartialEq for Registry {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Registry {}

/// Shared handle to a registry; polynomials over the same ring share one.
pub type Ring = Arc<Registry>;

impl Registry {
    pub fn builder() -> RegistryBuilder {
        RegistryBuilder::default()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[VarInfo] {
        &self.vars
    }

    pub fn info(&self, i: usize) -> &VarInfo {
        &self.vars[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn weight(&self, i: usize) -> Weight {
        self.vars[i].weight
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.vars[i].parity == Parity::Odd
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn idx(&self, name: &str) -> usize {
        self.index_of(name).unwrap_or_else(|| panic!("unknown variable {name}"))
    }

    pub fn try_idx(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn has_odd(&self) -> bool {
        self.vars.iter().any(|v| v.parity == Parity::Odd)
    }
}

#[derive(Default)]
pub struct RegistryBuilder {
    vars: Vec<VarInfo>,
}

impl RegistryBuilder {
    pub fn even(mut self, name: impl Into<String>, weight: Weight) -> Self {
        self.vars.push(VarInfo { name: name.into(), weight, parity: Parity::Even });
        self
    }

    pub fn odd(mut self, name: impl Into<String>, weight: Weight) -> Self {
        self.vars.push(VarInfo { name: name.into(), weight, parity: Parity::Odd });
        self
    }

    pub fn push(&mut self, name: impl Into<String>, weight: Weight, parity: Parity) {
        self.vars.push(VarInfo { name: name.into(), weight, parity });
    }

    pub fn build(self) -> Result<Ring, PolyError> {
        let mut index = HashMap::new();
        for (i, v) in self.vars.iter().enumerate() {
            if index.insert(v.name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Arc::new(Registry { vars: self.vars, index }))
    }
}
