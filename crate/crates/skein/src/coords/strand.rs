use crate::haiman::hdet;
use crate::polycore::{q_frac, Poly, Registry, Ring, SubstitutionMap, Weight};
use crate::symfun::{complete, elem, power, Alphabet};

use super::CoordError;

/// One strand of thickness `a` with every deformation-parameter family registered:
/// `x`, `x'`, `u`, `v`, `vd` (power-sum coordinates) and the thin parameters `y`.
#[derive(Clone, Debug)]
pub struct Strand {
    a: usize,
    ring: Ring,
    x: Alphabet,
    xp: Alphabet,
}

pub(crate) fn param_weight(k: usize) -> Weight {
    Weight::qt(-2 * k as i32, 2)
}

fn signed(p: Poly, neg: bool) -> Poly {
    p.negate_if(neg)
}

impl Strand {
    pub fn new(a: usize) -> Result<Strand, CoordError> {
        if a == 0 {
            return Err(CoordError::Thickness(0));
        }
        let mut b = Registry::builder();
        for p in ["x", "xp"] {
            for i in 1..=a {
                b = b.even(format!("{p}{i}"), Weight::qt(2, 0));
            }
        }
        for p in ["u", "v", "vd"] {
            for k in 1..=a {
                b = b.even(format!("{p}{k}"), param_weight(k));
            }
        }
        for i in 1..=a {
            b = b.even(format!("y{i}"), param_weight(1));
        }
        let ring = b.build()?;
        let x = Alphabet::numbered(&ring, "X", "x", 1, a)?;
        let xp = Alphabet::numbered(&ring, "X'", "xp", 1, a)?;
        Ok(Strand { a, ring, x, xp })
    }

    pub fn thickness(&self) -> usize {
        self.a
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn xp(&self) -> &Alphabet {
        &self.xp
    }

    fn param(&self, p: &str, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("{p}{k}"))
    }

    pub fn u(&self, k: usize) -> Poly {
        self.param("u", k)
    }

    pub fn v(&self, k: usize) -> Poly {
        self.param("v", k)
    }

    pub fn vdot(&self, k: usize) -> Poly {
        self.param("vd", k)
    }

    pub fn y(&self, i: usize) -> Poly {
        self.param("y", i)
    }

    fn vars(&self, p: &str) -> Vec<usize> {
        (1..=self.a).map(|k| self.ring.idx(&format!("{p}{k}"))).collect()
    }

    pub fn u_vars(&self) -> Vec<usize> {
        self.vars("u")
    }

    pub fn v_vars(&self) -> Vec<usize> {
        self.vars("v")
    }

    pub fn vdot_vars(&self) -> Vec<usize> {
        self.vars("vd")
    }

    pub fn y_vars(&self) -> Vec<usize> {
        self.vars("y")
    }

    fn map(&self, p: &str, image: impl Fn(usize) -> Poly) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for k in 1..=self.a {
            m.set(self.ring.idx(&format!("{p}{k}")), image(k));
        }
        m
    }

    /// Rewrites `u`-coordinates in `v`: `u_k -> (-1)^(k-1) sum_{l>=k} h_{l-k}(X) v_l`.
    pub fn u_to_v(&self) -> SubstitutionMap {
        self.map("u", |k| {
            let s = (k..=self.a).map(|l| &complete((l - k) as i64, &self.x) * &self.v(l));
            signed(crate::polycore::sum(&self.ring, &s.collect::<Vec<_>>()), k % 2 == 0)
        })
    }

    /// Rewrites `v`-coordinates in `u`: `v_k -> (-1)^(k-1) sum_{l>=k} e_{l-k}(X) u_l`.
    pub fn v_to_u(&self) -> SubstitutionMap {
        self.v_to_u_over(&self.x)
    }

    /// The same rewriting with the coefficients taken in another alphabet.
    pub fn v_to_u_over(&self, x: &Alphabet) -> SubstitutionMap {
        self.map("v", |k| {
            let s: Vec<Poly> = (k..=self.a).map(|l| &elem((l - k) as i64, x) * &self.u(l)).collect();
            signed(crate::polycore::sum(&self.ring, &s), k % 2 == 0)
        })
    }

    /// `y_i -> sum_l h_{l-1}({x_i..x_a} - {x'_(i+1)..x'_a}) v_l`.
    pub fn y_to_v(&self) -> SubstitutionMap {
        self.map("y", |i| {
            let d = &self.x.slice("", i - 1..self.a) - &self.xp.slice("", i..self.a);
            let s: Vec<Poly> = (1..=self.a).map(|l| &complete(l as i64 - 1, &d) * &self.v(l)).collect();
            crate::polycore::sum(&self.ring, &s)
        })
    }

    /// `y_i -> sum_l e_{l-1}(x_1..x_(i-1), x'_(i+1)..x'_a) u_l`.
    pub fn y_to_u(&self) -> SubstitutionMap {
        self.map("y", |i| {
            let mixed = self.x.slice("", 0..i - 1).concat("", &self.xp.slice("", i..self.a)).expect("disjoint letters");
            let s: Vec<Poly> = (1..=self.a).map(|l| &elem(l as i64 - 1, &mixed) * &self.u(l)).collect();
            crate::polycore::sum(&self.ring, &s)
        })
    }

    /// Interpolation coordinates: `y_i -> sum_r x_i^(r-1) v_r`.
    pub fn y_from_v(&self) -> SubstitutionMap {
        self.map("y", |i| {
            let s: Vec<Poly> = (1..=self.a).map(|r| &self.x.var(i - 1).pow(r as u32 - 1) * &self.v(r)).collect();
            crate::polycore::sum(&self.ring, &s)
        })
    }

    /// `Delta(X) v_r` as a Haiman determinant in `(X, Y)`: the staircase with `x^(r-1)`
    /// replaced by `y`, signed so that interpolation turns it into `Delta(X) v_r`.
    pub fn recovery_numerator(&self, r: usize) -> Result<Poly, CoordError> {
        if r == 0 || r > self.a {
            return Err(CoordError::Index(r, self.a));
        }
        let a = self.a as u32;
        let mut cells: Vec<(u32, u32)> = (0..a).rev().filter(|&e| e != r as u32 - 1).map(|e| (e, 0)).collect();
        cells.push((0, 1));
        let y = Alphabet::from_indices(&self.ring, "Y", self.y_vars())?;
        let d = hdet(&cells, &self.x, &y)?;
        // y sits last instead of in row a-r+1 (1-based), which is r-1 transpositions away
        Ok(signed(d, (r - 1) % 2 == 1))
    }

    /// `vd_k -> sum_{l>=k} (k/l) h_{l-k}(X - X') v_l`.
    pub fn vdot_to_v(&self) -> SubstitutionMap {
        let d = &self.x - &self.xp;
        self.map("vd", |k| {
            let mut out = Poly::zero(&self.ring);
            for l in k..=self.a {
                out.add_scaled(&(&complete((l - k) as i64, &d) * &self.v(l)), &q_frac(k as i64, l as i64));
            }
            out
        })
    }

    /// `v_k -> sum_{l>=k} (k/l) (-1)^(l-k) e_{l-k}(X - X') vd_l`.
    pub fn v_to_vdot(&self) -> SubstitutionMap {
        let d = &self.x - &self.xp;
        self.map("v", |k| {
            let mut out = Poly::zero(&self.ring);
            for l in k..=self.a {
                let c = q_frac(if (l - k) % 2 == 0 { 1 } else { -1 } * k as i64, l as i64);
                out.add_scaled(&(&elem((l - k) as i64, &d) * &self.vdot(l)), &c);
            }
            out
        })
    }

    /// `sum_k (e_k(X) - e_k(X')) u_k`.
    pub fn curvature_u(&self) -> Poly {
        let s: Vec<Poly> =
            (1..=self.a).map(|k| &(&elem(k as i64, &self.x) - &elem(k as i64, &self.xp)) * &self.u(k)).collect();
        crate::polycore::sum(&self.ring, &s)
    }

    /// `sum_k h_k(X - X') v_k`.
    pub fn curvature_v(&self) -> Poly {
        let d = &self.x - &self.xp;
        let s: Vec<Poly> = (1..=self.a).map(|k| &complete(k as i64, &d) * &self.v(k)).collect();
        crate::polycore::sum(&self.ring, &s)
    }

    /// `sum_i (x_i - x'_i) y_i`.
    pub fn curvature_y(&self) -> Poly {
        let s: Vec<Poly> = (1..=self.a).map(|i| &(&self.x.var(i - 1) - &self.xp.var(i - 1)) * &self.y(i)).collect();
        crate::polycore::sum(&self.ring, &s)
    }

    /// `sum_k (1/k)(p_k(X) - p_k(X')) vd_k`.
    pub fn curvature_vdot(&self) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for k in 1..=self.a {
            let p = &power(k as u32, &self.x).expect("k >= 1") - &power(k as u32, &self.xp).expect("k >= 1");
            out.add_scaled(&(&p * &self.vdot(k)), &q_frac(1, k as i64));
        }
        out
    }

    /// `sum_{l>=k} h_{l-k}(X - X') v_l`, the right-hand side of the sliding identity.
    pub fn slid(&self, k: usize) -> Poly {
        let d = &self.x - &self.xp;
        let s: Vec<Poly> = (k..=self.a).map(|l| &complete((l - k) as i64, &d) * &self.v(l)).collect();
        crate::polycore::sum(&self.ring, &s)
    }

    /// Specializations `x'_i -> x_(sigma(i))` for every permutation `sigma`; a polynomial lies
    /// in the ideal generated by `f(X) - f(X')` exactly when all of them kill it.
    pub fn permutation_specializations(&self) -> Vec<SubstitutionMap> {
        super::permutation_specializations(&self.ring, &self.x, &self.xp)
    }
}
