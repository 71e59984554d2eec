use std::collections::{BTreeMap, HashMap};

use super::poly::Poly;
use super::ring::Ring;
use super::PolyError;

/// Algebra homomorphism given by images of variables; unmapped variables are fixed.
#[derive(Clone, Debug)]
pub struct SubstitutionMap {
    ring: Ring,
    images: BTreeMap<usize, Poly>,
}

impl SubstitutionMap {
    pub fn identity(ring: &Ring) -> Self {
        SubstitutionMap { ring: ring.clone(), images: BTreeMap::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn images(&self) -> &BTreeMap<usize, Poly> {
        &self.images
    }

    pub fn set(&mut self, var: usize, image: Poly) {
        self.images.insert(var, image);
    }

    pub fn with(mut self, name: &str, image: Poly) -> Self {
        let i = self.ring.idx(name);
        self.images.insert(i, image);
        self
    }

    pub fn image(&self, var: usize) -> Poly {
        self.images.get(&var).cloned().unwrap_or_else(|| Poly::var(&self.ring, var))
    }

    /// Every image must be homogeneous of its variable's weight (zero is allowed).
    pub fn check_weights(&self) -> Result<(), PolyError> {
        for (&i, p) in &self.images {
            if p.is_zero() {
                continue;
            }
            match p.homogeneous_weight() {
                Some(w) if w == self.ring.weight(i) => {}
                _ => return Err(PolyError::WeightViolation(self.ring.name(i).to_string())),
            }
        }
        Ok(())
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero(&self.ring);
        for (m, c) in p.terms() {
            let mut term = Poly::constant(&self.ring, c.clone());
            for (i, e) in m.factors() {
                let f = cache.entry((i, e)).or_insert_with(|| self.image(i).pow(e));
                term = &term * f;
                if term.is_zero() {
                    break;
                }
            }
            out.add_assign_ref(&term);
        }
        out
    }

    pub fn try_apply(&self, p: &Poly) -> Result<Poly, PolyError> {
        self.check_weights()?;
        Ok(self.apply(p))
    }

    /// The map "apply `self`, then `then`".
    pub fn then(&self, then: &SubstitutionMap) -> SubstitutionMap {
        let mut images = BTreeMap::new();
        for i in 0..self.ring.len() {
            let img = then.apply(&self.image(i));
            if img != Poly::var(&self.ring, i) {
                images.insert(i, img);
            }
        }
        SubstitutionMap { ring: self.ring.clone(), images }
    }

    pub fn is_identity_on(&self, vars: &[usize]) -> bool {
        vars.iter().all(|&i| self.image(i) == Poly::var(&self.ring, i))
    }
}
