use crate::polycore::Poly;

use super::{contraction, identity_matrix, mat_add, mat_mul, mat_scale, CurvedComplex, KoszulError, Matrix};

/// A contracting homotopy `u^(-1) K` with `D K + K D = u * id`, where `D = d + Delta` and `u` is a
/// unit of the localized ring.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub generator: usize,
    pub unit: Poly,
    pub k: Matrix,
}

fn is_unit(p: &Poly, inverted: &[usize]) -> bool {
    p.len() == 1 && p.variables().iter().all(|v| inverted.contains(v))
}

/// Picks the first odd generator whose twist coefficient is a unit once `inverted` is inverted,
/// and contracts along it with `K = xi_m^*`.
pub fn contract_if_unit(c: &CurvedComplex, inverted: &[usize]) -> Result<Homotopy, KoszulError> {
    let ring = c.ring();
    let m = c
        .delta_coeffs()
        .iter()
        .position(|p| is_unit(p, inverted))
        .ok_or_else(|| KoszulError::NotUnit(inverted.iter().map(|&i| ring.name(i).to_string()).collect()))?;
    let k = contraction(ring, c.rank(), m + 1, &Poly::one(ring));
    Ok(Homotopy { generator: m + 1, unit: c.delta_coeffs()[m].clone(), k })
}

impl Homotopy {
    /// `D K + K D = u * id`.
    pub fn verify(&self, c: &CurvedComplex) -> bool {
        let d = c.total();
        let lhs = mat_add(&mat_mul(&d, &self.k), &mat_mul(&self.k, &d));
        lhs == mat_scale(&identity_matrix(c.ring(), c.dim()), &self.unit)
    }

    /// `K (-d K)^n`, the `n`-th term of the perturbation series correcting the `Delta`-only
    /// contraction by the Koszul differential, up to the power `u^(-n-1)`.
    pub fn perturbation_term(&self, c: &CurvedComplex, n: usize) -> Matrix {
        let step = mat_scale(&mat_mul(&c.d(), &self.k), &-Poly::one(c.ring()));
        (0..n).fold(self.k.clone(), |acc, _| mat_mul(&acc, &step))
    }

    /// The `Delta`-only contraction satisfies `Delta K + K Delta = u * id`.
    pub fn verify_unperturbed(&self, c: &CurvedComplex) -> bool {
        let t = c.delta();
        let lhs = mat_add(&mat_mul(&t, &self.k), &mat_mul(&self.k, &t));
        lhs == mat_scale(&identity_matrix(c.ring(), c.dim()), &self.unit)
    }

    /// The perturbation series stops after its first term.
    pub fn series_terminates(&self, c: &CurvedComplex, depth: usize) -> bool {
        (1..=depth).all(|n| self.perturbation_term(c, n).iter().flatten().all(Poly::is_zero))
    }
}
