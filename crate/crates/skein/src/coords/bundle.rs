use crate::polycore::{Poly, Registry, Ring, SubstitutionMap, Weight};
use crate::symfun::{complete, Alphabet, VirtualAlphabet};

use super::strand::param_weight;
use super::{add_all, CoordError};

/// Strands of colors `b_1..b_m` closed up by a permutation `omega` (0-based, `omega[i]` is the
/// image of strand `i`), with strand-wise parameters `v{i}_{k}` and one bundled family
/// `w{r}_{k}` per cycle, indexed by the cycle minimum `r`.
#[derive(Clone, Debug)]
pub struct Bundling {
    colors: Vec<usize>,
    omega: Vec<usize>,
    inverse: Vec<usize>,
    rep: Vec<usize>,
    ring: Ring,
    xs: Vec<Alphabet>,
    xps: Vec<Alphabet>,
}

impl Bundling {
    pub fn new(colors: &[usize], omega: &[usize]) -> Result<Bundling, CoordError> {
        let m = colors.len();
        let mut seen = vec![false; m];
        if omega.len() != m || omega.iter().any(|&w| w >= m || std::mem::replace(&mut seen[w], true)) {
            return Err(CoordError::Permutation(omega.to_vec()));
        }
        if (0..m).any(|i| colors[omega[i]] != colors[i]) {
            return Err(CoordError::Unbalanced(colors.to_vec(), omega.to_vec()));
        }
        let mut inverse = vec![0; m];
        for (i, &w) in omega.iter().enumerate() {
            inverse[w] = i;
        }
        let mut rep = vec![usize::MAX; m];
        for start in 0..m {
            if rep[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            loop {
                rep[i] = start;
                i = omega[i];
                if i == start {
                    break;
                }
            }
        }
        let mut b = Registry::builder();
        for p in ["x", "xp"] {
            for (i, &c) in colors.iter().enumerate() {
                for r in 1..=c {
                    b = b.even(format!("{p}{}_{r}", i + 1), Weight::qt(2, 0));
                }
            }
        }
        for (i, &c) in colors.iter().enumerate() {
            for k in 1..=c {
                b = b.even(format!("v{}_{k}", i + 1), param_weight(k));
            }
        }
        for (i, &c) in colors.iter().enumerate() {
            if rep[i] == i {
                for k in 1..=c {
                    b = b.even(format!("w{}_{k}", i + 1), param_weight(k));
                }
            }
        }
        let ring = b.build()?;
        let mut xs = Vec::new();
        let mut xps = Vec::new();
        for (i, &c) in colors.iter().enumerate() {
            xs.push(Alphabet::numbered(&ring, format!("X{}", i + 1), &format!("x{}_", i + 1), 1, c)?);
            xps.push(Alphabet::numbered(&ring, format!("X{}'", i + 1), &format!("xp{}_", i + 1), 1, c)?);
        }
        Ok(Bundling { colors: colors.to_vec(), omega: omega.to_vec(), inverse, rep, ring, xs, xps })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn permutation(&self) -> &[usize] {
        &self.omega
    }

    /// Cycle minima, one per cycle.
    pub fn cycles(&self) -> Vec<usize> {
        (0..self.colors.len()).filter(|&i| self.rep[i] == i).collect()
    }

    /// Strand-wise parameter `v_{i,k}` (0-based strand).
    pub fn v(&self, i: usize, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("v{}_{k}", i + 1))
    }

    /// Bundled parameter of the cycle through strand `i`.
    pub fn w(&self, i: usize, k: usize) -> Poly {
        Poly::named(&self.ring, &format!("w{}_{k}", self.rep[i] + 1))
    }

    fn difference(&self, strands: impl Iterator<Item = usize>) -> VirtualAlphabet {
        strands.fold(VirtualAlphabet::zero(&self.ring), |acc, j| &acc + &(&self.xs[j] - &self.xps[self.inverse[j]]))
    }

    /// `v_{i,k} -> sum_{k<=l<=b_i} h_(l-k)(sum_{j<i, j~i} (X_j - X'_(omega^-1 j))) w_{[i],l}`.
    pub fn bundle(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for (i, &c) in self.colors.iter().enumerate() {
            let before = self.difference((0..i).filter(|&j| self.rep[j] == self.rep[i]));
            for k in 1..=c {
                let image = add_all(&self.ring, (k..=c).map(|l| &complete((l - k) as i64, &before) * &self.w(i, l)));
                m.set(self.ring.idx(&format!("v{}_{k}", i + 1)), image);
            }
        }
        m
    }

    /// `sum_{i,k} h_k(X_i - X'_(omega^-1 i)) v_{i,k}`.
    pub fn strand_curvature(&self) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (i, &c) in self.colors.iter().enumerate() {
            let d = self.difference(std::iter::once(i));
            for k in 1..=c {
                out.add_assign_ref(&(&complete(k as i64, &d) * &self.v(i, k)));
            }
        }
        out
    }

    /// `sum_{cycles} sum_k h_k(X_[i] - X'_[i]) w_{[i],k}`.
    pub fn bundled_curvature(&self) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for r in self.cycles() {
            let members: Vec<usize> = (0..self.colors.len()).filter(|&j| self.rep[j] == r).collect();
            let d =
                members.iter().fold(VirtualAlphabet::zero(&self.ring), |acc, &j| &acc + &(&self.xs[j] - &self.xps[j]));
            for k in 1..=self.colors[r] {
                out.add_assign_ref(&(&complete(k as i64, &d) * &self.w(r, k)));
            }
        }
        out
    }

    /// Specializations identifying the primed letters of each cycle with a permutation of its
    /// unprimed letters.
    pub fn closure_specializations(&self) -> Vec<SubstitutionMap> {
        let mut maps = vec![SubstitutionMap::identity(&self.ring)];
        for r in self.cycles() {
            let members: Vec<usize> = (0..self.colors.len()).filter(|&j| self.rep[j] == r).collect();
            let x: Vec<usize> = members.iter().flat_map(|&j| self.xs[j].vars().to_vec()).collect();
            let xp: Vec<usize> = members.iter().flat_map(|&j| self.xps[j].vars().to_vec()).collect();
            let x = Alphabet::from_indices(&self.ring, "X", x).expect("distinct letters");
            let xp = Alphabet::from_indices(&self.ring, "X'", xp).expect("distinct letters");
            let local = super::permutation_specializations(&self.ring, &x, &xp);
            maps = maps.iter().flat_map(|m| local.iter().map(move |l| m.then(l))).collect();
        }
        maps
    }
}
