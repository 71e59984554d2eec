use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::polycore::{Poly, PolyError, Ring};

/// A finite ordered set of registry variables.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet {
    name: String,
    ring: Ring,
    vars: Vec<usize>,
}

impl Alphabet {
    pub fn new(ring: &Ring, name: impl Into<String>, var_names: &[&str]) -> Result<Self, PolyError> {
        let vars = var_names.iter().map(|v| ring.try_idx(v)).collect::<Result<Vec<_>, _>>()?;
        Self::from_indices(ring, name, vars)
    }

    pub fn from_indices(ring: &Ring, name: impl Into<String>, vars: Vec<usize>) -> Result<Self, PolyError> {
        for (k, v) in vars.iter().enumerate() {
            if vars[..k].contains(v) {
                return Err(PolyError::DuplicateVariable(ring.name(*v).to_string()));
            }
        }
        Ok(Alphabet { name: name.into(), ring: ring.clone(), vars })
    }

    /// Variables `{prefix}{from}..={prefix}{to}`.
    pub fn numbered(
        ring: &Ring,
        name: impl Into<String>,
        prefix: &str,
        from: usize,
        to: usize,
    ) -> Result<Self, PolyError> {
        let names: Vec<String> = (from..=to).map(|i| format!("{prefix}{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::new(ring, name, &refs)
    }

    pub fn empty(ring: &Ring, name: impl Into<String>) -> Self {
        Alphabet { name: name.into(), ring: ring.clone(), vars: Vec::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// The `i`-th variable (0-based) as a polynomial.
    pub fn var(&self, i: usize) -> Poly {
        Poly::var(&self.ring, self.vars[i])
    }

    /// Drops the `i`-th variable (0-based).
    pub fn without(&self, i: usize) -> Alphabet {
        let mut vars = self.vars.clone();
        vars.remove(i);
        Alphabet { name: format!("{}-{}", self.name, self.ring.name(self.vars[i])), ring: self.ring.clone(), vars }
    }

    /// Variables at positions `range` (0-based).
    pub fn slice(&self, name: impl Into<String>, range: std::ops::Range<usize>) -> Alphabet {
        Alphabet { name: name.into(), ring: self.ring.clone(), vars: self.vars[range].to_vec() }
    }

    pub fn concat(&self, name: impl Into<String>, other: &Alphabet) -> Result<Alphabet, PolyError> {
        let mut vars = self.vars.clone();
        vars.extend_from_slice(&other.vars);
        Self::from_indices(&self.ring, name, vars)
    }

    /// `prod_{i<j} (x_i - x_j)`.
    pub fn vandermonde(&self) -> Poly {
        let mut out = Poly::one(&self.ring);
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                out = &out * &(&self.var(i) - &self.var(j));
            }
        }
        out
    }

    pub fn virt(&self) -> VirtualAlphabet {
        VirtualAlphabet::from(self)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|&v| self.ring.name(v)).collect();
        write!(f, "{}={{{}}}", self.name, names.join(","))
    }
}

/// A formal integer combination of alphabets.
#[derive(Clone, Debug, PartialEq)]
pub struct VirtualAlphabet {
    ring: Ring,
    terms: Vec<(i64, Alphabet)>,
}

impl VirtualAlphabet {
    pub fn zero(ring: &Ring) -> Self {
        VirtualAlphabet { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(i64, Alphabet)] {
        &self.terms
    }

    pub fn scale(&self, c: i64) -> VirtualAlphabet {
        VirtualAlphabet {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|_| c != 0).map(|(k, a)| (k * c, a.clone())).collect(),
        }
    }

    /// Signed cardinality.
    pub fn cardinality(&self) -> i64 {
        self.terms.iter().map(|(c, a)| c * a.len() as i64).sum()
    }

    fn merged(mut terms: Vec<(i64, Alphabet)>, ring: &Ring) -> VirtualAlphabet {
        let mut out: Vec<(i64, Alphabet)> = Vec::new();
        for (c, a) in terms.drain(..) {
            match out.iter_mut().find(|(_, b)| b.vars == a.vars) {
                Some(slot) => slot.0 += c,
                None => out.push((c, a)),
            }
        }
        out.retain(|(c, a)| *c != 0 && !a.is_empty());
        VirtualAlphabet { ring: ring.clone(), terms: out }
    }
}

impl From<&Alphabet> for VirtualAlphabet {
    fn from(a: &Alphabet) -> Self {
        VirtualAlphabet::merged(vec![(1, a.clone())], &a.ring)
    }
}

impl From<&VirtualAlphabet> for VirtualAlphabet {
    fn from(a: &VirtualAlphabet) -> Self {
        a.clone()
    }
}

impl Add for &VirtualAlphabet {
    type Output = VirtualAlphabet;
    fn add(self, rhs: &VirtualAlphabet) -> VirtualAlphabet {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        VirtualAlphabet::merged(terms, &self.ring)
    }
}

impl Sub for &VirtualAlphabet {
    type Output = VirtualAlphabet;
    fn sub(self, rhs: &VirtualAlphabet) -> VirtualAlphabet {
        self + &-rhs
    }
}

impl Neg for &VirtualAlphabet {
    type Output = VirtualAlphabet;
    fn neg(self) -> VirtualAlphabet {
        self.scale(-1)
    }
}

impl Add for &Alphabet {
    type Output = VirtualAlphabet;
    fn add(self, rhs: &Alphabet) -> VirtualAlphabet {
        &self.virt() + &rhs.virt()
    }
}

impl Sub for &Alphabet {
    type Output = VirtualAlphabet;
    fn sub(self, rhs: &Alphabet) -> VirtualAlphabet {
        &self.virt() - &rhs.virt()
    }
}

impl fmt::Display for VirtualAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, a)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{}", a.name)?;
            } else {
                write!(f, "{sign}{mag}{}", a.name)?;
            }
        }
        Ok(())
    }
}
