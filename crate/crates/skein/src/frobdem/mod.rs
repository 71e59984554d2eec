//! Divided differences, the Frobenius traces they compose into, and antisymmetrization.

mod suite;
#[cfg(test)]
mod tests;

use itertools::Itertools;
use thiserror::Error;

use crate::polycore::{q_int, Poly, PolyError, Q};
use crate::symfun::Alphabet;

pub(crate) use suite::random_poly;
pub use suite::suite;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobError {
    #[error("index {0} out of range for an alphabet of {1} letters")]
    Index(usize, usize),
    #[error("input is not invariant under the block permutations {0:?}")]
    NotInvariant(Vec<usize>),
    #[error("alphabet sizes differ: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("blocks {0:?} do not partition {1} letters")]
    BadBlocks(Vec<usize>, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Registry permutation applying `sigma` (a permutation of positions) to each alphabet at once.
fn position_perm(alphabets: &[&Alphabet], sigma: &[usize]) -> Vec<usize> {
    let ring = alphabets[0].ring();
    let mut perm: Vec<usize> = (0..ring.len()).collect();
    for a in alphabets {
        for (k, &s) in sigma.iter().enumerate() {
            perm[a.vars()[k]] = a.vars()[s];
        }
    }
    perm
}

fn swap_positions(alphabets: &[&Alphabet], i: usize, j: usize) -> Vec<usize> {
    let n = alphabets[0].len();
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.swap(i, j);
    position_perm(alphabets, &sigma)
}

fn sign_of(sigma: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// `(f - s_i f) / (x_i - x_{i+1})` for 1-based `i` within the alphabet.
pub fn demazure(x: &Alphabet, i: usize, f: &Poly) -> Result<Poly, FrobError> {
    if i == 0 || i >= x.len() {
        return Err(FrobError::Index(i, x.len()));
    }
    let swapped = f.relabel(&swap_positions(&[x], i - 1, i));
    let diff = f - &swapped;
    Ok(diff.div_linear(x.vars()[i - 1], &x.var(i))?)
}

/// Applies a word of Demazure operators written left to right, the rightmost acting first.
pub fn demazure_word(x: &Alphabet, word: &[usize], f: &Poly) -> Result<Poly, FrobError> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        if g.is_zero() {
            return Ok(g);
        }
        g = demazure(x, i, &g)?;
    }
    Ok(g)
}

/// `(d_1 ... d_{N-1}) ... (d_1 d_2) d_1`.
pub fn longest_word(n: usize) -> Vec<usize> {
    (1..n).rev().flat_map(|k| 1..=k).collect()
}

/// `(d_b ... d_1)(d_{b+1} ... d_2) ... (d_{a+b-1} ... d_a)`.
pub fn sylvester_word(a: usize, b: usize) -> Vec<usize> {
    (1..=a).flat_map(|k| (k..k + b).rev()).collect()
}

/// `sum_sigma sgn(sigma) sigma(f)`, permuting the letters of every given alphabet at once.
pub fn antisymmetrize(alphabets: &[&Alphabet], f: &Poly) -> Result<Poly, FrobError> {
    let n = alphabets[0].len();
    if let Some(bad) = alphabets.iter().find(|a| a.len() != n) {
        return Err(FrobError::SizeMismatch(n, bad.len()));
    }
    let mut out = Poly::zero(f.ring());
    for sigma in (0..n).permutations(n) {
        let term = f.relabel(&position_perm(alphabets, &sigma));
        if sign_of(&sigma) {
            out.sub_assign_ref(&term);
        } else {
            out.add_assign_ref(&term);
        }
    }
    Ok(out)
}

/// The full symmetrizing trace `Alt(f) / Delta(X)`.
pub fn longest_trace(x: &Alphabet, f: &Poly) -> Result<Poly, FrobError> {
    let alt = antisymmetrize(&[x], f)?;
    Ok(alt.div_exact(&x.vandermonde())?)
}

/// True if `f` is fixed by every transposition of adjacent letters inside one block.
pub fn is_block_symmetric(alphabets: &[&Alphabet], blocks: &[usize], f: &Poly) -> bool {
    let mut start = 0;
    for &b in blocks {
        for i in start..start + b.saturating_sub(1) {
            if f.relabel(&swap_positions(alphabets, i, i + 1)) != *f {
                return false;
            }
        }
        start += b;
    }
    true
}

/// The Sylvester operator `Sym(X1|X2) -> Sym(X1+X2)` as a word in Demazure operators, where
/// `X1` is the first `a` letters of `x` and `X2` the remaining `b`.
pub fn sylvester(x: &Alphabet, a: usize, b: usize, f: &Poly) -> Result<Poly, FrobError> {
    sylvester_with_word(x, a, b, &sylvester_word(a, b), f)
}

pub fn sylvester_with_word(x: &Alphabet, a: usize, b: usize, word: &[usize], f: &Poly) -> Result<Poly, FrobError> {
    let data = FrobeniusData::new(x, &[a, b])?;
    data.check_invariant(f)?;
    demazure_word(x, word, f)
}

/// An inclusion of partially symmetric polynomials `R^blocks` into `Sym(X)` data.
#[derive(Clone, Debug)]
pub struct FrobeniusData {
    alphabet: Alphabet,
    blocks: Vec<usize>,
}

impl FrobeniusData {
    pub fn new(alphabet: &Alphabet, blocks: &[usize]) -> Result<Self, FrobError> {
        if blocks.iter().sum::<usize>() != alphabet.len() || blocks.contains(&0) {
            return Err(FrobError::BadBlocks(blocks.to_vec(), alphabet.len()));
        }
        Ok(FrobeniusData { alphabet: alphabet.clone(), blocks: blocks.to_vec() })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Letters of block `k`.
    pub fn block(&self, k: usize) -> Alphabet {
        let start: usize = self.blocks[..k].iter().sum();
        self.alphabet.slice(format!("{}_{}", self.alphabet.name(), k + 1), start..start + self.blocks[k])
    }

    pub fn rank(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        fact(self.alphabet.len()) / self.blocks.iter().map(|&b| fact(b)).product::<u64>()
    }

    pub fn check_invariant(&self, f: &Poly) -> Result<(), FrobError> {
        if is_block_symmetric(&[&self.alphabet], &self.blocks, f) {
            Ok(())
        } else {
            Err(FrobError::NotInvariant(self.blocks.clone()))
        }
    }

    /// Trace `R^blocks -> Sym(X)`: `Alt(f * prod Delta(block)) / (prod b! * Delta(X))`.
    pub fn trace(&self, f: &Poly) -> Result<Poly, FrobError> {
        self.check_invariant(f)?;
        let mut g = f.clone();
        let mut denom: u64 = 1;
        for k in 0..self.blocks.len() {
            g = &g * &self.block(k).vandermonde();
            denom *= (1..=self.blocks[k] as u64).product::<u64>();
        }
        let t = longest_trace(&self.alphabet, &g)?;
        Ok(t.scale(&(Q::from_integer(1.into()) / q_int(denom as i64))))
    }
}

/// Divides a polynomial antisymmetric under the simultaneous action on `(x, y)` by
/// `Delta(X1) Delta(X2)`, checking that the quotient is symmetric in each block.
pub fn vandermonde_quotient(x: &Alphabet, y: &Alphabet, a: usize, f: &Poly) -> Result<Poly, FrobError> {
    let n = x.len();
    let d = &x.slice("X1", 0..a).vandermonde() * &x.slice("X2", a..n).vandermonde();
    let q = f.div_exact(&d)?;
    if !is_block_symmetric(&[x, y], &[a, n - a], &q) {
        return Err(FrobError::NotInvariant(vec![a, n - a]));
    }
    Ok(q)
}
