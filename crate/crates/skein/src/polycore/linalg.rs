use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::mono::Mono;
use super::poly::Poly;
use super::ring::Ring;
use super::Q;

type Combo = BTreeMap<usize, Q>;

fn combo_add_scaled(into: &mut Combo, from: &Combo, c: &Q) {
    for (k, v) in from {
        let e = into.entry(*k).or_insert_with(Q::zero);
        *e += v * c;
        if e.is_zero() {
            into.remove(k);
        }
    }
}

/// Incremental row echelon form over the rationals with polynomials as row vectors
/// (coordinates indexed by monomials). Rows are pivoted on their leading monomial and
/// carry their expression in the inserted inputs, which yields membership certificates.
#[derive(Clone)]
pub struct RowReducer {
    ring: Ring,
    pivots: BTreeMap<Mono, usize>,
    rows: Vec<(Poly, Combo)>,
    inputs: usize,
    track: bool,
}

/// Outcome of reducing a vector: the remainder and, when tracking, its expression.
pub struct Reduction {
    pub remainder: Poly,
    /// `target - remainder = sum_k combo[k] * input_k`
    pub combo: BTreeMap<usize, Q>,
}

impl RowReducer {
    pub fn new(ring: &Ring, track_certificates: bool) -> Self {
        RowReducer {
            ring: ring.clone(),
            pivots: BTreeMap::new(),
            rows: Vec::new(),
            inputs: 0,
            track: track_certificates,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn reduce(&self, target: &Poly) -> Reduction {
        let mut rem = target.clone();
        let mut combo = Combo::new();
        let mut cursor: Option<Mono> = None;
        loop {
            let next = {
                let mut it: Box<dyn Iterator<Item = (&Mono, &Q)>> = match &cursor {
                    None => Box::new(rem.terms().iter().rev()),
                    Some(c) => Box::new(rem.terms().range(..c.clone()).rev()),
                };
                it.find(|(m, _)| self.pivots.contains_key(*m)).map(|(m, c)| (m.clone(), c.clone()))
            };
            let Some((m, c)) = next else { break };
            let r = self.pivots[&m];
            let (row, rc) = &self.rows[r];
            let lc = row.coeff(&m);
            let f = &c / &lc;
            rem.add_scaled(row, &-f.clone());
            if self.track {
                combo_add_scaled(&mut combo, rc, &f);
            }
            cursor = Some(m);
        }
        Reduction { remainder: rem, combo }
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &Poly) -> bool {
        let id = self.inputs;
        self.inputs += 1;
        let red = self.reduce(v);
        if red.remainder.is_zero() {
            return false;
        }
        let mut combo = Combo::new();
        if self.track {
            combo.insert(id, Q::one());
            combo_add_scaled(&mut combo, &red.combo, &-Q::one());
        }
        let lead = red.remainder.leading().map(|(m, _)| m.clone()).expect("nonzero");
        self.pivots.insert(lead, self.rows.len());
        self.rows.push((red.remainder, combo));
        true
    }

    pub fn contains(&self, v: &Poly) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> Vec<Poly> {
        self.rows.iter().map(|r| r.0.clone()).collect()
    }
}

/// Rank of a list of polynomials viewed as vectors.
pub fn rank(ring: &Ring, vs: &[Poly]) -> usize {
    let mut r = RowReducer::new(ring, false);
    for v in vs {
        r.insert(v);
    }
    r.rank()
}

/// Determinant of a matrix of polynomials: cofactor expansion up to 4x4, fraction-free
/// Bareiss elimination beyond.
pub fn det(ring: &Ring, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(ring);
    }
    if n <= 4 {
        return cofactor_det(ring, m);
    }
    bareiss_det(ring, m)
}

pub fn cofactor_det(ring: &Ring, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = Poly::zero(ring);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &cofactor_det(ring, &minor);
                if j % 2 == 0 {
                    acc.add_assign_ref(&term);
                } else {
                    acc.sub_assign_ref(&term);
                }
            }
            acc
        }
    }
}

pub fn bareiss_det(ring: &Ring, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut sign = false;
    let mut prev = Poly::one(ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero(ring);
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][k] = Poly::zero(ring);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant over the rationals (Gaussian elimination).
pub fn det_q(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d *= a[k][k].clone();
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &a[k][j] * &f;
                a[i][j] -= v;
            }
        }
    }
    d
}
