use crate::polycore::{Poly, Registry, Ring, SubstitutionMap, Weight};
use crate::symfun::{complete, elem, hook_schur, Alphabet};

use super::strand::param_weight;
use super::{add_all, CoordError};

/// Two parallel strands of thickness `a` and `b`: letters `x_1..x_(a+b)` (the first `a` on the
/// left strand) and their primes, with parameters `vL_1..vL_a`, `vR_1..vR_b` and the reduced
/// family `vb_1..vb_b`.
#[derive(Clone, Debug)]
pub struct TwoStrand {
    a: usize,
    b: usize,
    ring: Ring,
    x: Alphabet,
    xp: Alphabet,
}

impl TwoStrand {
    pub fn new(a: usize, b: usize) -> Result<TwoStrand, CoordError> {
        if a == 0 || b == 0 {
            return Err(CoordError::Thickness(0));
        }
        let n = a + b;
        let mut r = Registry::builder();
        for p in ["x", "xp"] {
            for i in 1..=n {
                r = r.even(format!("{p}{i}"), Weight::qt(2, 0));
            }
        }
        for k in 1..=a {
            r = r.even(format!("vL{k}"), param_weight(k));
        }
        for k in 1..=b {
            r = r.even(format!("vR{k}"), param_weight(k));
        }
        for k in 1..=b {
            r = r.even(format!("vb{k}"), param_weight(k));
        }
        let ring = r.build()?;
        let x = Alphabet::numbered(&ring, "X", "x", 1, n)?;
        let xp = Alphabet::numbered(&ring, "X'", "xp", 1, n)?;
        Ok(TwoStrand { a, b, ring, x, xp })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn xp(&self) -> &Alphabet {
        &self.xp
    }

    pub fn x1(&self) -> Alphabet {
        self.x.slice("X1", 0..self.a)
    }

    pub fn x2(&self) -> Alphabet {
        self.x.slice("X2", self.a..self.a + self.b)
    }

    pub fn xp1(&self) -> Alphabet {
        self.xp.slice("X1'", 0..self.a)
    }

    pub fn xp2(&self) -> Alphabet {
        self.xp.slice("X2'", self.a..self.a + self.b)
    }

    pub fn v_left(&self, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("vL{k}"))
    }

    pub fn v_right(&self, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("vR{k}"))
    }

    pub fn v_bar(&self, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("vb{k}"))
    }

    fn vars(&self, p: &str, n: usize) -> Vec<usize> {
        (1..=n).map(|k| self.ring.idx(&format!("{p}{k}"))).collect()
    }

    pub fn left_vars(&self) -> Vec<usize> {
        self.vars("vL", self.a)
    }

    pub fn right_vars(&self) -> Vec<usize> {
        self.vars("vR", self.b)
    }

    pub fn bar_vars(&self) -> Vec<usize> {
        self.vars("vb", self.b)
    }

    /// `y_i`, interpolated with the parameters of the strand carrying letter `i`.
    pub fn y(&self, i: usize) -> Poly {
        let xi = self.x.var(i - 1);
        if i <= self.a {
            add_all(&self.ring, (1..=self.a).map(|k| &xi.pow(k as u32 - 1) * &self.v_left(k)))
        } else {
            add_all(&self.ring, (1..=self.b).map(|k| &xi.pow(k as u32 - 1) * &self.v_right(k)))
        }
    }

    /// `ybar_i = sum_{k<=b} x_i^(k-1) vb_k`.
    pub fn y_bar(&self, i: usize) -> Poly {
        let xi = self.x.var(i - 1);
        add_all(&self.ring, (1..=self.b).map(|k| &xi.pow(k as u32 - 1) * &self.v_bar(k)))
    }

    /// Left parameters re-expressed at thickness `b`: for `a >= b`,
    /// `vL_j + (-1)^(b-j) sum_{1<=i<=a-b} s_(i-1|b-j)(X2') vL_(b+i)`; for `a < b`, `vL_j` or zero.
    pub fn v_left_at_b(&self, j: usize) -> Poly {
        if self.a < self.b {
            return if j <= self.a { self.v_left(j) } else { Poly::zero(&self.ring) };
        }
        let xp2 = self.xp2();
        let tail = add_all(
            &self.ring,
            (1..=self.a - self.b)
                .map(|i| &hook_schur(i as i64 - 1, (self.b - j) as i64, &xp2) * &self.v_left(self.b + i)),
        );
        &self.v_left(j) + &tail.negate_if((self.b - j) % 2 == 1)
    }

    /// Image of `vb_j`: `vR_j - sum_{j<=k<=b} h_(k-j)(X2' - X2) vL^(b)_k`.
    pub fn reduced_image(&self, j: usize) -> Poly {
        let d = &self.xp2() - &self.x2();
        let s = add_all(&self.ring, (j..=self.b).map(|k| &complete((k - j) as i64, &d) * &self.v_left_at_b(k)));
        &self.v_right(j) - &s
    }

    /// The functor from the reduced family back to two-strand parameters.
    pub fn unreduce(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for j in 1..=self.b {
            m.set(self.ring.idx(&format!("vb{j}")), self.reduced_image(j));
        }
        m
    }

    /// The specialization `vL -> 0`, `vR_j -> vb_j`.
    pub fn specialize(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for i in self.left_vars() {
            m.set(i, Poly::zero(&self.ring));
        }
        for j in 1..=self.b {
            m.set(self.ring.idx(&format!("vR{j}")), self.v_bar(j));
        }
        m
    }

    /// The reduction `pi`: `vL -> 0` and `vR_j` to the image of `vb_j`.
    pub fn reduction_pi(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for i in self.left_vars() {
            m.set(i, Poly::zero(&self.ring));
        }
        for j in 1..=self.b {
            m.set(self.ring.idx(&format!("vR{j}")), self.reduced_image(j));
        }
        m
    }

    /// `X2' -> X2`, the relation holding on the two-strand identity.
    pub fn on_identity(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for i in self.a..self.a + self.b {
            m.set(self.xp.vars()[i], self.x.var(i));
        }
        m
    }

    /// `sum h_r(X1 - X1') vL_r + sum h_r(X2 - X2') vR_r`.
    pub fn curvature(&self) -> Poly {
        let d1 = &self.x1() - &self.xp1();
        let d2 = &self.x2() - &self.xp2();
        let left = add_all(&self.ring, (1..=self.a).map(|r| &complete(r as i64, &d1) * &self.v_left(r)));
        let right = add_all(&self.ring, (1..=self.b).map(|r| &complete(r as i64, &d2) * &self.v_right(r)));
        &left + &right
    }

    /// `sum h_r(X2 - X2') vb_r`.
    pub fn reduced_curvature(&self) -> Poly {
        let d2 = &self.x2() - &self.xp2();
        add_all(&self.ring, (1..=self.b).map(|r| &complete(r as i64, &d2) * &self.v_bar(r)))
    }

    /// Coefficients `c_j` with `curvature - unreduce(reduced_curvature) = sum_j c_j (e_j(X) - e_j(X'))`,
    /// from `h_k(X1 - X1') - h_k(X2' - X2) = sum_i h_i(X - X') h_(k-i)(X2' - X2)` and
    /// `h_i(X - X') = sum_j (-1)^(j-1) h_(i-j)(X) (e_j(X) - e_j(X'))`.
    pub fn curvature_certificate(&self) -> Vec<Poly> {
        let n = self.a + self.b;
        let back = &self.xp2() - &self.x2();
        let mut coeffs = vec![Poly::zero(&self.ring); n + 1];
        for k in 1..=self.a {
            for i in 1..=k {
                let outer = &complete((k - i) as i64, &back) * &self.v_left(k);
                for (j, c) in coeffs.iter_mut().enumerate().take(i.min(n) + 1).skip(1) {
                    let term = &complete((i - j) as i64, &self.x) * &outer;
                    if j % 2 == 1 {
                        c.add_assign_ref(&term);
                    } else {
                        c.sub_assign_ref(&term);
                    }
                }
            }
        }
        coeffs.remove(0);
        coeffs
    }

    /// `e_j(X) - e_j(X')` for `j = 1..a+b`.
    pub fn symmetric_relations(&self) -> Vec<Poly> {
        (1..=self.a + self.b).map(|j| &elem(j as i64, &self.x) - &elem(j as i64, &self.xp)).collect()
    }

    pub fn permutation_specializations(&self) -> Vec<SubstitutionMap> {
        super::permutation_specializations(&self.ring, &self.x, &self.xp)
    }
}
