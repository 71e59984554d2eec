//! Curved Koszul complexes on exterior algebras of odd generators, their curvature, the
//! triangular changes of odd basis, and contractions when a twist coefficient is a unit.

mod contract;
mod suite;
#[cfg(test)]
mod tests;
mod zeta;

use serde_json::{json, Value};
use thiserror::Error;

use crate::polycore::{Poly, PolyError, Registry, Ring, Weight};
use crate::symfun::{complete, Alphabet};

pub use contract::{contract_if_unit, Homotopy};
pub use suite::{coefficient_checks, suite};
pub use zeta::{zeta_basis, BasisChange};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("(d + Delta)^2 differs from the declared curvature at entry ({0}, {1})")]
    CurvatureMismatch(usize, usize),
    #[error("no twist coefficient is a unit in the inverted parameters {0:?}")]
    NotUnit(Vec<String>),
    #[error("perturbation series did not terminate")]
    NotNilpotent,
    #[error("parameter {0} out of range")]
    Range(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Matrix = Vec<Vec<Poly>>;

/// Exterior monomials `xi_S`, indexed by bitmask, with `xi_i` at bit `i-1`.
fn below(mask: usize, i: usize) -> u32 {
    (mask & ((1 << (i - 1)) - 1)).count_ones()
}

pub fn zero_matrix(ring: &Ring, n: usize) -> Matrix {
    vec![vec![Poly::zero(ring); n]; n]
}

pub fn identity_matrix(ring: &Ring, n: usize) -> Matrix {
    let mut m = zero_matrix(ring, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Poly::one(ring);
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let ring = a[0][0].ring().clone();
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![Poly::zero(&ring); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j].add_assign_ref(&(aik * &b[k][j]));
                }
            }
        }
    }
    out
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn mat_scale(a: &Matrix, c: &Poly) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// `coef * xi_i` acting by left multiplication on `2^b` exterior monomials.
pub fn wedge(ring: &Ring, b: usize, i: usize, coef: &Poly) -> Matrix {
    let n = 1 << b;
    let mut m = zero_matrix(ring, n);
    for s in 0..n {
        if s & (1 << (i - 1)) == 0 {
            m[s | (1 << (i - 1))][s] = coef.clone().negate_if(below(s, i) % 2 == 1);
        }
    }
    m
}

/// `coef * xi_i^*`, the contraction removing `xi_i`.
pub fn contraction(ring: &Ring, b: usize, i: usize, coef: &Poly) -> Matrix {
    let n = 1 << b;
    let mut m = zero_matrix(ring, n);
    for s in 0..n {
        if s & (1 << (i - 1)) != 0 {
            m[s & !(1 << (i - 1))][s] = coef.clone().negate_if(below(s, i) % 2 == 1);
        }
    }
    m
}

/// A free module `R (x) Lambda[xi_1..xi_b]` with differential `d + Delta` and declared curvature,
/// where `d = sum d_i xi_i^*` and `Delta = sum c_i xi_i`.
#[derive(Clone, Debug)]
pub struct CurvedComplex {
    ring: Ring,
    b: usize,
    odd_weights: Vec<Weight>,
    d_coeffs: Vec<Poly>,
    delta_coeffs: Vec<Poly>,
    curvature: Poly,
}

impl CurvedComplex {
    pub fn new(
        ring: &Ring,
        odd_weights: Vec<Weight>,
        d_coeffs: Vec<Poly>,
        delta_coeffs: Vec<Poly>,
        curvature: Poly,
    ) -> CurvedComplex {
        let b = odd_weights.len();
        assert!(d_coeffs.len() == b && delta_coeffs.len() == b, "one coefficient per odd generator");
        CurvedComplex { ring: ring.clone(), b, odd_weights, d_coeffs, delta_coeffs, curvature }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.b
    }

    pub fn dim(&self) -> usize {
        1 << self.b
    }

    pub fn d_coeffs(&self) -> &[Poly] {
        &self.d_coeffs
    }

    pub fn delta_coeffs(&self) -> &[Poly] {
        &self.delta_coeffs
    }

    pub fn curvature(&self) -> &Poly {
        &self.curvature
    }

    pub fn d(&self) -> Matrix {
        let mut m = zero_matrix(&self.ring, self.dim());
        for (i, c) in self.d_coeffs.iter().enumerate() {
            m = mat_add(&m, &contraction(&self.ring, self.b, i + 1, c));
        }
        m
    }

    pub fn delta(&self) -> Matrix {
        let mut m = zero_matrix(&self.ring, self.dim());
        for (i, c) in self.delta_coeffs.iter().enumerate() {
            m = mat_add(&m, &wedge(&self.ring, self.b, i + 1, c));
        }
        m
    }

    pub fn total(&self) -> Matrix {
        mat_add(&self.d(), &self.delta())
    }

    /// Checks `(d + Delta)^2 = curvature * id` entrywise.
    pub fn verify(&self) -> Result<(), KoszulError> {
        let t = self.total();
        let sq = mat_mul(&t, &t);
        for (i, row) in sq.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let want = if i == j { self.curvature.clone() } else { Poly::zero(&self.ring) };
                if *e != want {
                    return Err(KoszulError::CurvatureMismatch(i, j));
                }
            }
        }
        Ok(())
    }

    /// Sets every listed parameter to zero, returning the specialized complex.
    pub fn specialize_zero(&self, vars: &[usize]) -> CurvedComplex {
        let mut map = crate::polycore::SubstitutionMap::identity(&self.ring);
        for &v in vars {
            map.set(v, Poly::zero(&self.ring));
        }
        CurvedComplex {
            ring: self.ring.clone(),
            b: self.b,
            odd_weights: self.odd_weights.clone(),
            d_coeffs: self.d_coeffs.iter().map(|p| map.apply(p)).collect(),
            delta_coeffs: self.delta_coeffs.iter().map(|p| map.apply(p)).collect(),
            curvature: map.apply(&self.curvature),
        }
    }

    pub fn basis_weight(&self, mask: usize) -> Weight {
        (0..self.b).filter(|i| mask & (1 << i) != 0).fold(Weight::qt(0, 0), |w, i| w + self.odd_weights[i])
    }

    pub fn basis_label(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..self.b).filter(|i| mask & (1 << i) != 0).map(|i| format!("xi{}", i + 1)).collect::<Vec<_>>().join("^")
    }

    /// Every nonzero entry of `d + Delta` raises weight by exactly `t`.
    pub fn is_graded(&self) -> bool {
        let t = self.total();
        for (row, r) in t.iter().enumerate() {
            for (col, e) in r.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = self.basis_weight(col) - self.basis_weight(row) + Weight::qt(0, 1);
                if e.homogeneous_weight() != Some(want) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = (0..self.dim())
            .map(|m| {
                let w = self.basis_weight(m);
                json!({"label": self.basis_label(m), "weight": {"q": w.q, "t": w.t, "a": w.a}})
            })
            .collect();
        let diff: Vec<Value> =
            self.total().iter().map(|r| json!(r.iter().map(|e| e.to_text()).collect::<Vec<_>>())).collect();
        json!({"basis": basis, "diff": diff, "curvature": self.curvature.to_text()})
    }
}

/// Letters `x1..xb` (the alphabet `X2`), `xp1..xpb` (`X2'`), reduced parameters `vb1..vbb`, and
/// one extra parameter `v` used by the effective-thickness twist.
#[derive(Clone, Debug)]
pub struct KoszulRing {
    b: usize,
    ring: Ring,
    x: Alphabet,
    xp: Alphabet,
}

impl KoszulRing {
    pub fn new(b: usize) -> Result<KoszulRing, KoszulError> {
        let mut r = Registry::builder();
        for p in ["x", "xp"] {
            for i in 1..=b {
                r = r.even(format!("{p}{i}"), Weight::qt(2, 0));
            }
        }
        for k in 1..=b {
            r = r.even(format!("vb{k}"), Weight::qt(-2 * k as i32, 2));
        }
        let ring = r.build()?;
        let x = Alphabet::numbered(&ring, "X2", "x", 1, b)?;
        let xp = Alphabet::numbered(&ring, "X2'", "xp", 1, b)?;
        Ok(KoszulRing { b, ring, x, xp })
    }

    /// Same letters plus `v` of weight `q^(-2m) t^2`.
    pub fn with_parameter(b: usize, m: usize) -> Result<KoszulRing, KoszulError> {
        let mut r = Registry::builder();
        for p in ["x", "xp"] {
            for i in 1..=b {
                r = r.even(format!("{p}{i}"), Weight::qt(2, 0));
            }
        }
        r = r.even("v", Weight::qt(-2 * m as i32, 2));
        let ring = r.build()?;
        let x = Alphabet::numbered(&ring, "X2", "x", 1, b)?;
        let xp = Alphabet::numbered(&ring, "X2'", "xp", 1, b)?;
        Ok(KoszulRing { b, ring, x, xp })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.b
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn xp(&self) -> &Alphabet {
        &self.xp
    }

    pub fn v_bar(&self, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("vb{k}"))
    }

    pub fn v_bar_vars(&self) -> Vec<usize> {
        (1..=self.b).map(|k| self.ring.idx(&format!("vb{k}"))).collect()
    }

    pub fn odd_weights(&self) -> Vec<Weight> {
        (1..=self.b).map(|i| Weight::qt(2 * i as i32, -1)).collect()
    }

    /// `h_i(X2 - X2')` for `i = 1..b`.
    pub fn koszul_coeffs(&self) -> Vec<Poly> {
        let d = &self.x - &self.xp;
        (1..=self.b).map(|i| complete(i as i64, &d)).collect()
    }
}

/// `Lambda[xi_1..xi_b]` with `d = sum h_i(X2 - X2') xi_i^*`, `Delta = sum vb_i xi_i` and curvature
/// `sum h_i(X2 - X2') vb_i`, checked by squaring.
pub fn build_curved_koszul(b: usize) -> Result<(KoszulRing, CurvedComplex), KoszulError> {
    let kr = KoszulRing::new(b)?;
    let d = kr.koszul_coeffs();
    let delta: Vec<Poly> = (1..=b).map(|i| kr.v_bar(i)).collect();
    let curvature = crate::polycore::sum(kr.ring(), &d.iter().zip(&delta).map(|(h, v)| h * v).collect::<Vec<_>>());
    let c = CurvedComplex::new(kr.ring(), kr.odd_weights(), d, delta, curvature);
    c.verify()?;
    Ok((kr, c))
}

/// The effective-thickness twist of width `m <= b`: `Delta = -v sum_{j<=m} h_(m-j)(X2' - X2) xi_j`,
/// with curvature `-v sum_j h_(m-j)(X2' - X2) h_j(X2 - X2')`.
pub fn effective_thickness_koszul(b: usize, m: usize) -> Result<(KoszulRing, CurvedComplex), KoszulError> {
    if m == 0 || m > b {
        return Err(KoszulError::Range(format!("width {m} for rank {b}")));
    }
    let kr = KoszulRing::with_parameter(b, m)?;
    let v = Poly::named(kr.ring(), "v");
    let back = kr.xp() - kr.x();
    let d = kr.koszul_coeffs();
    let delta: Vec<Poly> = (1..=b)
        .map(|j| if j <= m { -(&v * &complete((m - j) as i64, &back)) } else { Poly::zero(kr.ring()) })
        .collect();
    let curvature = crate::polycore::sum(kr.ring(), &d.iter().zip(&delta).map(|(h, c)| h * c).collect::<Vec<_>>());
    let c = CurvedComplex::new(kr.ring(), kr.odd_weights(), d, delta, curvature);
    c.verify()?;
    Ok((kr, c))
}
