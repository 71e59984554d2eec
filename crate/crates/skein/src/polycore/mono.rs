use std::cmp::Ordering;

use super::ring::{Registry, Weight};

/// Sparse exponent vector: `(variable index, exponent)` pairs sorted by index,
/// exponents nonzero. Ordered as the dense exponent vector would be, lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Mono(pub(crate) Vec<(u16, u16)>);

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(i: usize, e: u32) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono(vec![(i as u16, e as u16)])
        }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Mono(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u16, e as u16)).collect())
    }

    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        for &(i, e) in &self.0 {
            v[i as usize] = e as u32;
        }
        v
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, i: usize) -> u32 {
        match self.0.binary_search_by_key(&(i as u16), |p| p.0) {
            Ok(k) => self.0[k].1 as u32,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(i, e)| (i as usize, e as u32))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1 as u32).sum()
    }

    pub fn weight(&self, reg: &Registry) -> Weight {
        let mut w = Weight::ZERO;
        for &(i, e) in &self.0 {
            w += reg.weight(i as usize).times(e as i32);
        }
        w
    }

    /// Product with Koszul sign for odd variables; `None` when an odd variable repeats.
    pub fn mul(&self, other: &Mono, reg: &Registry) -> Option<(Mono, bool)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut negative = false;
        let odd = reg.has_odd();
        // odd factors of `self` not yet passed: each odd factor of `other` that is
        // placed before them contributes one transposition per such factor
        let mut odd_left_remaining = if odd { a.iter().filter(|p| reg.is_odd(p.0 as usize)).count() } else { 0 };
        while i < a.len() || j < b.len() {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0 <= y.0,
                (Some(_), None) => true,
                _ => false,
            };
            if take_a {
                let (va, ea) = a[i];
                if j < b.len() && b[j].0 == va {
                    if odd && reg.is_odd(va as usize) {
                        return None;
                    }
                    out.push((va, ea + b[j].1));
                    j += 1;
                } else {
                    out.push((va, ea));
                }
                if odd && reg.is_odd(va as usize) {
                    odd_left_remaining -= 1;
                }
                i += 1;
            } else {
                let (vb, eb) = b[j];
                if odd && reg.is_odd(vb as usize) && odd_left_remaining % 2 == 1 {
                    negative = !negative;
                }
                out.push((vb, eb));
                j += 1;
            }
        }
        Some((Mono(out), negative))
    }

    /// Quotient `self / other` for even monomials, when it exists.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }

    pub fn without(&self, i: usize) -> Mono {
        Mono(self.0.iter().copied().filter(|p| p.0 as usize != i).collect())
    }

    /// Relabels variables by `perm` (old index to new index); sign from reordering odd factors.
    pub fn relabel(&self, perm: &[usize], reg: &Registry) -> (Mono, bool) {
        let mut pairs: Vec<(u16, u16)> = self.0.iter().map(|&(i, e)| (perm[i as usize] as u16, e)).collect();
        let mut negative = false;
        if reg.has_odd() {
            let odd: Vec<u16> = pairs.iter().filter(|p| reg.is_odd(p.0 as usize)).map(|p| p.0).collect();
            for x in 0..odd.len() {
                for y in x + 1..odd.len() {
                    if odd[x] > odd[y] {
                        negative = !negative;
                    }
                }
            }
        }
        pairs.sort_unstable_by_key(|p| p.0);
        (Mono(pairs), negative)
    }
}
