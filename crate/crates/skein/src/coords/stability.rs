use crate::polycore::{Poly, Registry, Ring, SubstitutionMap, Weight};
use crate::symfun::{complete, hook_schur, Alphabet};

use super::strand::param_weight;
use super::{add_all, CoordError};

/// Letters `x_1..x_n`, `x'_1..x'_n` with one family of interpolation coordinates
/// `v^(c)_1..v^(c)_c` for every `1 <= c <= n`.
#[derive(Clone, Debug)]
pub struct Tower {
    n: usize,
    ring: Ring,
    x: Alphabet,
    xp: Alphabet,
}

impl Tower {
    pub fn new(n: usize) -> Result<Tower, CoordError> {
        let mut b = Registry::builder();
        for p in ["x", "xp"] {
            for i in 1..=n {
                b = b.even(format!("{p}{i}"), Weight::qt(2, 0));
            }
        }
        for c in 1..=n {
            for k in 1..=c {
                b = b.even(format!("v{c}_{k}"), param_weight(k));
            }
        }
        let ring = b.build()?;
        let x = Alphabet::numbered(&ring, "X", "x", 1, n)?;
        let xp = Alphabet::numbered(&ring, "X'", "xp", 1, n)?;
        Ok(Tower { n, ring, x, xp })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn height(&self) -> usize {
        self.n
    }

    /// `v^(c)_k`.
    pub fn v(&self, c: usize, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("v{c}_{k}"))
    }

    pub fn level_vars(&self, c: usize) -> Vec<usize> {
        (1..=c).map(|k| self.ring.idx(&format!("v{c}_{k}"))).collect()
    }

    /// `y_i = sum_{k<=c} x_i^(k-1) v^(c)_k`.
    pub fn y(&self, c: usize, i: usize) -> Poly {
        add_all(&self.ring, (1..=c).map(|k| &self.x.var(i - 1).pow(k as u32 - 1) * &self.v(c, k)))
    }

    /// `Z_S^(c) = sum_{k<=c} h_k(X_S - X'_S) v^(c)_k` for a set `S` of 1-based letters.
    pub fn z(&self, c: usize, s: &[usize]) -> Poly {
        let pick = |a: &Alphabet| {
            Alphabet::from_indices(&self.ring, "S", s.iter().map(|&i| a.vars()[i - 1]).collect())
                .expect("distinct letters")
        };
        let d = &pick(&self.x) - &pick(&self.xp);
        add_all(&self.ring, (1..=c).map(|k| &complete(k as i64, &d) * &self.v(c, k)))
    }

    /// The inclusion of level `c` into level `d`:
    /// `v^(c)_k -> v^(d)_k + (-1)^(c-k) sum_{c<l<=d} s_(l-c-1|c-k)(X^(c)) v^(d)_l`.
    pub fn stability_phi(&self, c: usize, d: usize) -> Result<SubstitutionMap, CoordError> {
        if c > d || c == 0 || d > self.n {
            return Err(CoordError::Nesting(c, d));
        }
        let xc = self.x.slice("X^(c)", 0..c);
        let mut m = SubstitutionMap::identity(&self.ring);
        for k in 1..=c {
            let tail = add_all(
                &self.ring,
                (c + 1..=d).map(|l| &hook_schur((l - c - 1) as i64, (c - k) as i64, &xc) * &self.v(d, l)),
            );
            let image = &self.v(d, k) + &tail.negate_if((c - k) % 2 == 1);
            m.set(self.ring.idx(&format!("v{c}_{k}")), image);
        }
        Ok(m)
    }
}
