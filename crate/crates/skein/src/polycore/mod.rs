//! Exact multivariate polynomial arithmetic over the rationals, with weighted and odd
//! variables, substitution homomorphisms, truncated Laurent series and linear algebra.

mod linalg;
mod mono;
mod poly;
mod ring;
mod series;
mod subst;
mod text;

use num_rational::BigRational;
use thiserror::Error;

pub use linalg::{bareiss_det, cofactor_det, det, det_q, rank, Reduction, RowReducer};
pub use mono::Mono;
pub use poly::{product, q_frac, q_int, sum, Poly};
pub use ring::{Parity, Registry, RegistryBuilder, Ring, VarInfo, Weight};
pub use series::{LaurentSeries, Window};
pub use subst::SubstitutionMap;
pub use text::{format_q, parse_rational};

pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different registries")]
    RegistryMismatch,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("image of {0} is not homogeneous of the variable's weight")]
    WeightViolation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inhomogeneous input")]
    Inhomogeneous,
    #[error("window exceeded: {0}")]
    WindowExceeded(String),
}

/// Bound on the number of generator factors considered by [`graded_piece`].
#[derive(Clone, Copy, Debug)]
pub struct Cutoff {
    pub max_factors: u32,
    pub max_candidates: usize,
}

impl Default for Cutoff {
    fn default() -> Self {
        Cutoff { max_factors: 12, max_candidates: 200_000 }
    }
}

/// Basis of the weight-`w` piece of the subring generated by `ring_gens`, obtained by
/// enumerating generator monomials of that weight and row reducing.
pub fn graded_piece(ring: &Ring, ring_gens: &[Poly], w: Weight, cutoff: Cutoff) -> Result<Vec<Poly>, PolyError> {
    let mut weights = Vec::with_capacity(ring_gens.len());
    for g in ring_gens {
        let gw = g.homogeneous_weight().ok_or(PolyError::Inhomogeneous)?;
        if gw == Weight::ZERO {
            return Err(PolyError::Inhomogeneous);
        }
        weights.push(gw);
    }
    let mut candidates = Vec::new();
    let mut exps = vec![0u32; ring_gens.len()];
    fn rec(
        k: usize,
        remaining: Weight,
        left: u32,
        weights: &[Weight],
        exps: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        limit: usize,
    ) -> Result<(), PolyError> {
        if k == weights.len() {
            if remaining == Weight::ZERO {
                if out.len() >= limit {
                    return Err(PolyError::WindowExceeded("too many generator monomials".into()));
                }
                out.push(exps.clone());
            }
            return Ok(());
        }
        for e in 0..=left {
            exps[k] = e;
            rec(k + 1, remaining - weights[k].times(e as i32), left - e, weights, exps, out, limit)?;
        }
        exps[k] = 0;
        Ok(())
    }
    rec(0, w, cutoff.max_factors, &weights, &mut exps, &mut candidates, cutoff.max_candidates)?;
    let mut red = RowReducer::new(ring, false);
    let mut basis = Vec::new();
    for e in candidates {
        let mut p = Poly::one(ring);
        for (g, &k) in ring_gens.iter().zip(&e) {
            if k > 0 {
                p = &p * &g.pow(k);
            }
        }
        if red.insert(&p) {
            basis.push(p);
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests;
