//! Rings of block-symmetric functions with deformation parameters, the Hopf-link ideals inside
//! them, and the determinant identities relating their generators.

mod diagonal;
mod digon;
mod equality;
mod generators;
mod graded;
mod keylemma;
mod schur;
mod suite;
mod transparifer;

#[cfg(test)]
mod tests;

use std::collections::BTreeSet;

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::frobdem::{is_block_symmetric, FrobError};
use crate::haiman::HaimanError;
use crate::polycore::{Mono, Poly, PolyError, Registry, Ring, SubstitutionMap, Weight};
use crate::symfun::{hook_schur, Alphabet, Partition};

pub use diagonal::{diagonal_check, DiagonalReport};
pub use digon::{digon_complex, DigonComplexData, DigonReport};
pub use equality::{ideal_equality, key_ideal, reduced_generation, EqualityReport};
pub use generators::{antisym_generators, antisym_shapes, key_generators, normalize_colors, reduced_key_generators};
pub use graded::{GradedIdeal, Membership};
pub use keylemma::{key_lemma_check, ytov_check, KeyLemmaValue};
pub use schur::{
    block_determinant_check, interpolation_polynomial, monomial_difference_check, unreduced_vs_reduced,
    ReductionLedger, SchurCertificate,
};
pub use suite::{ideal_suite, keylemma_suite};
pub use transparifer::{transparifer, Transparifer};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("colors {0:?} are not usable here")]
    Colors(Vec<usize>),
    #[error("blocks {0:?} do not refine the colors {1:?}")]
    Blocks(Vec<usize>, Vec<usize>),
    #[error("element is not invariant under the block permutations")]
    NotInvariant,
    #[error("weight {0} lies outside the window")]
    WindowExceeded(Weight),
    #[error("inhomogeneous input")]
    Inhomogeneous,
    #[error("certificate does not reassemble: {0}")]
    Certificate(String),
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Haiman(#[from] HaimanError),
    #[error(transparent)]
    Frob(#[from] FrobError),
}

/// Bounds on the graded pieces examined: `q`-exponent at most `qmax` and at most `vmax`
/// deformation parameters (so `t`-exponent at most `2 vmax`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealWindow {
    pub qmax: i32,
    pub vmax: u32,
}

impl IdealWindow {
    pub fn new(qmax: i32, vmax: u32) -> Self {
        IdealWindow { qmax, vmax }
    }

    /// `q^(2(a+b)+4)` and three parameters.
    pub fn default_for(a: usize, b: usize) -> Self {
        IdealWindow { qmax: 2 * (a + b) as i32 + 4, vmax: 3 }
    }

    /// `q^(2(a+b))` and two parameters, the range used for the digon complex.
    pub fn digon_for(a: usize, b: usize) -> Self {
        IdealWindow { qmax: 2 * (a + b) as i32, vmax: 2 }
    }

    pub fn contains(&self, w: Weight) -> bool {
        w.a == 0 && w.t >= 0 && w.t % 2 == 0 && w.t <= 2 * self.vmax as i32 && w.q <= self.qmax
    }

    pub fn to_json(&self) -> Value {
        json!({"qmax": self.qmax, "tmax": 2 * self.vmax, "vmax": self.vmax})
    }
}

/// `k[X, V]` with the letters split into colored strands, each carrying its own interpolation
/// parameters, and the invariance group `S_(blocks)` acting on the letters only. The blocks
/// refine the colors. Letters `y_i` of weight `q^-2 t^2` are registered for building
/// determinants and are expanded as `y_i = sum_k x_i^(k-1) v_(c(i),k)` before anything is
/// compared.
#[derive(Clone, Debug)]
pub struct DeformedRing {
    colors: Vec<usize>,
    blocks: Vec<usize>,
    ring: Ring,
    x: Alphabet,
    y: Alphabet,
    params: Vec<Vec<usize>>,
    extra: Vec<usize>,
}

pub fn param_weight(k: usize) -> Weight {
    Weight::qt(-2 * k as i32, 2)
}

fn param_name(colors: usize, i: usize, k: usize) -> String {
    match (colors, i) {
        (2, 0) => format!("vL{k}"),
        (2, 1) => format!("vR{k}"),
        _ => format!("v{}_{k}", i + 1),
    }
}

impl DeformedRing {
    /// `E_colors`, with one block per color.
    pub fn new(colors: &[usize]) -> Result<Self, IdealError> {
        Self::with_blocks(colors, colors, &[])
    }

    /// `E_colors` with a finer invariance group and extra even variables.
    pub fn with_blocks(colors: &[usize], blocks: &[usize], extra: &[(&str, Weight)]) -> Result<Self, IdealError> {
        if colors.is_empty() || colors.contains(&0) {
            return Err(IdealError::Colors(colors.to_vec()));
        }
        let mut bounds: BTreeSet<usize> = BTreeSet::new();
        let mut acc = 0;
        for &b in blocks {
            if b == 0 {
                return Err(IdealError::Blocks(blocks.to_vec(), colors.to_vec()));
            }
            acc += b;
            bounds.insert(acc);
        }
        let mut acc = 0;
        for &c in colors {
            acc += c;
            if !bounds.contains(&acc) {
                return Err(IdealError::Blocks(blocks.to_vec(), colors.to_vec()));
            }
        }
        if bounds.iter().last() != Some(&acc) {
            return Err(IdealError::Blocks(blocks.to_vec(), colors.to_vec()));
        }
        let n = acc;
        let mut reg = Registry::builder();
        for i in 1..=n {
            reg = reg.even(format!("x{i}"), Weight::qt(2, 0));
        }
        for i in 1..=n {
            reg = reg.even(format!("y{i}"), Weight::qt(-2, 2));
        }
        for (i, &c) in colors.iter().enumerate() {
            for k in 1..=c {
                reg = reg.even(param_name(colors.len(), i, k), param_weight(k));
            }
        }
        for (name, w) in extra {
            reg = reg.even(*name, *w);
        }
        let ring = reg.build()?;
        let x = Alphabet::numbered(&ring, "X", "x", 1, n)?;
        let y = Alphabet::numbered(&ring, "Y", "y", 1, n)?;
        let params = colors
            .iter()
            .enumerate()
            .map(|(i, &c)| (1..=c).map(|k| ring.idx(&param_name(colors.len(), i, k))).collect())
            .collect();
        let extra = extra.iter().map(|(name, _)| ring.idx(name)).collect();
        Ok(DeformedRing { colors: colors.to_vec(), blocks: blocks.to_vec(), ring, x, y, params, extra })
    }

    /// The same variables with a different invariance group.
    pub fn regrouped(&self, blocks: &[usize]) -> Result<Self, IdealError> {
        let check = Self::with_blocks(&self.colors, blocks, &[]);
        check.map(|_| DeformedRing { blocks: blocks.to_vec(), ..self.clone() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn letters(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn y(&self) -> &Alphabet {
        &self.y
    }

    pub fn extra(&self) -> &[usize] {
        &self.extra
    }

    fn span(parts: &[usize], k: usize) -> std::ops::Range<usize> {
        let start: usize = parts[..k].iter().sum();
        start..start + parts[k]
    }

    /// Letters of color `i` (0-based).
    pub fn color_alphabet(&self, i: usize) -> Alphabet {
        self.x.slice(format!("X{}", i + 1), Self::span(&self.colors, i))
    }

    /// Letters of block `k` (0-based).
    pub fn block_alphabet(&self, k: usize) -> Alphabet {
        self.x.slice(format!("B{}", k + 1), Self::span(&self.blocks, k))
    }

    /// `v_(i,k)` for 0-based color `i` and 1-based `k`.
    pub fn param(&self, i: usize, k: usize) -> Poly {
        Poly::var(&self.ring, self.params[i][k - 1])
    }

    pub fn params(&self, i: usize) -> &[usize] {
        &self.params[i]
    }

    pub fn all_params(&self) -> Vec<usize> {
        self.params.iter().flatten().copied().collect()
    }

    /// Color of the 1-based letter `j`.
    pub fn color_of(&self, j: usize) -> usize {
        let mut acc = 0;
        for (i, &c) in self.colors.iter().enumerate() {
            acc += c;
            if j <= acc {
                return i;
            }
        }
        panic!("letter {j} out of range");
    }

    /// `sum_k x_j^(k-1) v_(c(j),k)`.
    pub fn y_image(&self, j: usize) -> Poly {
        let c = self.color_of(j);
        let xj = self.x.var(j - 1);
        let mut out = Poly::zero(&self.ring);
        for k in 1..=self.colors[c] {
            out.add_assign_ref(&(&xj.pow(k as u32 - 1) * &self.param(c, k)));
        }
        out
    }

    pub fn expand_y(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(&self.ring);
        for j in 1..=self.letters() {
            m.set(self.y.vars()[j - 1], self.y_image(j));
        }
        m
    }

    pub fn expand(&self, p: &Poly) -> Poly {
        self.expand_y().apply(p)
    }

    /// Product of the Vandermonde determinants of the blocks.
    pub fn vandermonde(&self) -> Poly {
        let mut out = Poly::one(&self.ring);
        for k in 0..self.blocks.len() {
            out = &out * &self.block_alphabet(k).vandermonde();
        }
        out
    }

    /// Free of `y` and symmetric within every block.
    pub fn is_invariant(&self, p: &Poly) -> bool {
        p.variables().iter().all(|v| !self.y.vars().contains(v)) && is_block_symmetric(&[&self.x], &self.blocks, p)
    }

    /// Expands `y`, divides by the block Vandermonde product and checks the quotient is invariant.
    pub fn quotient(&self, p: &Poly) -> Result<Poly, IdealError> {
        let q = self.expand(p).div_exact(&self.vandermonde())?;
        if !self.is_invariant(&q) {
            return Err(IdealError::NotInvariant);
        }
        Ok(q)
    }

    /// Basis of the weight-`w` piece: products of monomial symmetric functions, one per block,
    /// times monomials in the parameters.
    pub fn basis(&self, w: Weight) -> Vec<Poly> {
        if w.a != 0 || w.t < 0 || w.t % 2 != 0 {
            return Vec::new();
        }
        let deg = (w.t / 2) as usize;
        let params = self.all_params();
        let mut out = Vec::new();
        for vs in params.iter().combinations_with_replacement(deg) {
            let qv: i32 = vs.iter().map(|&&v| self.ring.weight(v).q).sum();
            let rest = w.q - qv;
            if rest < 0 || rest % 2 != 0 {
                continue;
            }
            let vmono = vs.iter().fold(Poly::one(&self.ring), |acc, &&v| &acc * &Poly::var(&self.ring, v));
            for sym in self.symmetric_basis((rest / 2) as u32) {
                out.push(&sym * &vmono);
            }
        }
        out
    }

    /// Block-symmetric polynomials in the letters of degree `d`.
    pub fn symmetric_basis(&self, d: u32) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.symmetric_rec(0, d, &mut current, &mut out);
        out
    }

    fn symmetric_rec(&self, k: usize, left: u32, current: &mut Vec<Partition>, out: &mut Vec<Poly>) {
        if k == self.blocks.len() {
            if left == 0 {
                let p = current.iter().enumerate().fold(Poly::one(&self.ring), |acc, (i, lam)| {
                    &acc * &monomial_symmetric(lam, &self.block_alphabet(i))
                });
                out.push(p);
            }
            return;
        }
        let n = self.blocks[k];
        for d in 0..=left {
            if k + 1 == self.blocks.len() && d != left {
                continue;
            }
            for lam in partitions_of(d, n) {
                current.push(lam);
                self.symmetric_rec(k + 1, left - d, current, out);
                current.pop();
            }
        }
    }

    /// Dimension of the weight-`w` piece.
    pub fn dim(&self, w: Weight) -> usize {
        self.basis(w).len()
    }

    /// Weights of the window on which this ring is nonzero, in increasing `(t, q)` order.
    pub fn window_weights(&self, window: IdealWindow) -> Vec<Weight> {
        let kmax = *self.colors.iter().max().expect("nonempty") as i32;
        let mut out = Vec::new();
        for deg in 0..=window.vmax as i32 {
            let qmin = -2 * kmax * deg;
            let mut q = qmin;
            while q <= window.qmax {
                let w = Weight::qt(q, 2 * deg);
                if !self.basis_is_empty(w) {
                    out.push(w);
                }
                q += 2;
            }
        }
        out
    }

    fn basis_is_empty(&self, w: Weight) -> bool {
        let deg = (w.t / 2) as usize;
        !self.all_params().iter().combinations_with_replacement(deg).any(|vs| {
            let qv: i32 = vs.iter().map(|&&v| self.ring.weight(v).q).sum();
            w.q - qv >= 0 && (w.q - qv) % 2 == 0
        })
    }

    /// For two colors `(a, b)`: the left parameters re-expressed at thickness `b`,
    /// `vL_j + (-1)^(b-j) sum_(1<=i<=a-b) s_(i-1|b-j)(X2) vL_(b+i)` when `a >= b`, else `vL_j`
    /// or zero.
    pub fn left_at_right(&self, j: usize) -> Poly {
        let (a, b) = (self.colors[0], self.colors[1]);
        if a < b {
            return if j <= a { self.param(0, j) } else { Poly::zero(&self.ring) };
        }
        let x2 = self.color_alphabet(1);
        let mut tail = Poly::zero(&self.ring);
        for i in 1..=a - b {
            tail.add_assign_ref(&(&hook_schur(i as i64 - 1, (b - j) as i64, &x2) * &self.param(0, b + i)));
        }
        &self.param(0, j) + &tail.negate_if((b - j) % 2 == 1)
    }

    /// `vb_j = vR_j - vL^(b)_j`.
    pub fn reduced_param(&self, j: usize) -> Poly {
        &self.param(1, j) - &self.left_at_right(j)
    }

    /// The reduction `pi`: `vL -> 0`, `vR_j -> vb_j`. Two colors only.
    pub fn reduction(&self) -> Result<SubstitutionMap, IdealError> {
        if self.colors.len() != 2 {
            return Err(IdealError::Colors(self.colors.clone()));
        }
        let mut m = SubstitutionMap::identity(&self.ring);
        for &v in self.params(0) {
            m.set(v, Poly::zero(&self.ring));
        }
        for j in 1..=self.colors[1] {
            m.set(self.params[1][j - 1], self.reduced_param(j));
        }
        Ok(m)
    }

    pub fn pi(&self, p: &Poly) -> Poly {
        self.reduction().expect("two colors").apply(p)
    }

    /// `ybar_j = pi(y_j) = sum_k x_j^(k-1) vb_k` for a letter of the second color.
    pub fn y_bar(&self, j: usize) -> Poly {
        let xj = self.x.var(j - 1);
        let mut out = Poly::zero(&self.ring);
        for k in 1..=self.colors[1] {
            out.add_assign_ref(&(&xj.pow(k as u32 - 1) * &self.reduced_param(k)));
        }
        out
    }
}

/// Partitions of `d` with at most `n` parts.
pub fn partitions_of(d: u32, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(left: u32, max: u32, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.iter().copied()));
            return;
        }
        if cur.len() == n {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, n, cur, out);
            cur.pop();
        }
    }
    rec(d, d, n, &mut Vec::new(), &mut out);
    out
}

/// `m_lambda` on an alphabet: the sum of the distinct rearrangements of `x^lambda`.
pub fn monomial_symmetric(lambda: &Partition, x: &Alphabet) -> Poly {
    let n = x.len();
    let ring = x.ring();
    if lambda.len() > n {
        return Poly::zero(ring);
    }
    let exps: Vec<u32> = (0..n).map(|i| lambda.part(i)).collect();
    let mut out = Poly::zero(ring);
    for perm in exps.iter().permutations(n).unique() {
        let mut m = Mono::one();
        for (k, &&e) in perm.iter().enumerate() {
            if e > 0 {
                m = m.mul(&Mono::var(x.vars()[k], e), ring).expect("even").0;
            }
        }
        out.add_term(m, crate::polycore::q_int(1));
    }
    out
}
