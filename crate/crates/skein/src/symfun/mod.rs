//! Symmetric functions of alphabets and of formal differences of alphabets.

mod alphabet;
mod identities;
mod partition;

use thiserror::Error;

use crate::polycore::{det, q_int, Poly, PolyError, Ring};

pub use alphabet::{Alphabet, VirtualAlphabet};
pub use identities::suite;
pub use partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("power sums start at degree 1")]
    PowerZero,
    #[error("cardinality violation: {0}")]
    Cardinality(String),
    #[error("identity failed: {0}")]
    Identity(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Truncated power series in a formal parameter, coefficient `k` at index `k`.
type Series = Vec<Poly>;

fn series_mul(a: &Series, b: &Series, n: usize) -> Series {
    let ring = a[0].ring().clone();
    let mut out = vec![Poly::zero(&ring); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j].add_assign_ref(&(ai * bj));
            }
        }
    }
    out
}

fn unit_series(ring: &Ring, n: usize) -> Series {
    let mut s = vec![Poly::zero(ring); n + 1];
    s[0] = Poly::one(ring);
    s
}

/// `E(A, sign*t)` to order `n`: the product of `(1 + sign*x*t)`.
fn alphabet_e(a: &Alphabet, n: usize, sign: i64) -> Series {
    let mut s = unit_series(a.ring(), n);
    for i in 0..a.len() {
        let x = a.var(i).scale_int(sign);
        for k in (1..=n).rev() {
            let shifted = &s[k - 1] * &x;
            s[k].add_assign_ref(&shifted);
        }
    }
    s
}

/// `H(A, sign*t)` to order `n`: the product of `1 / (1 - sign*x*t)`.
fn alphabet_h(a: &Alphabet, n: usize, sign: i64) -> Series {
    let mut s = unit_series(a.ring(), n);
    for i in 0..a.len() {
        let x = a.var(i).scale_int(sign);
        for k in 1..=n {
            let shifted = &s[k - 1] * &x;
            s[k].add_assign_ref(&shifted);
        }
    }
    s
}

fn virtual_series(va: &VirtualAlphabet, n: usize, elementary: bool) -> Series {
    let mut s = unit_series(va.ring(), n);
    for (c, a) in va.terms() {
        // E(A,t)^{-1} = H(A,-t) and H(A,t)^{-1} = E(A,-t)
        let factor = match (elementary, *c > 0) {
            (true, true) => alphabet_e(a, n, 1),
            (true, false) => alphabet_h(a, n, -1),
            (false, true) => alphabet_h(a, n, 1),
            (false, false) => alphabet_e(a, n, -1),
        };
        for _ in 0..c.unsigned_abs() {
            s = series_mul(&s, &factor, n);
        }
    }
    s
}

/// `e_0, ..., e_n` of a virtual alphabet.
pub fn elem_series(a: impl Into<VirtualAlphabet>, n: usize) -> Vec<Poly> {
    virtual_series(&a.into(), n, true)
}

/// `h_0, ..., h_n` of a virtual alphabet.
pub fn complete_series(a: impl Into<VirtualAlphabet>, n: usize) -> Vec<Poly> {
    virtual_series(&a.into(), n, false)
}

/// Elementary symmetric function; zero for negative degree.
pub fn elem(k: i64, a: impl Into<VirtualAlphabet>) -> Poly {
    let a = a.into();
    if k < 0 {
        return Poly::zero(a.ring());
    }
    virtual_series(&a, k as usize, true).pop().unwrap()
}

/// Complete symmetric function; zero for negative degree.
pub fn complete(k: i64, a: impl Into<VirtualAlphabet>) -> Poly {
    let a = a.into();
    if k < 0 {
        return Poly::zero(a.ring());
    }
    virtual_series(&a, k as usize, false).pop().unwrap()
}

pub fn power(k: u32, a: impl Into<VirtualAlphabet>) -> Result<Poly, SymError> {
    if k == 0 {
        return Err(SymError::PowerZero);
    }
    let a = a.into();
    let mut out = Poly::zero(a.ring());
    for (c, alph) in a.terms() {
        for i in 0..alph.len() {
            out.add_scaled(&alph.var(i).pow(k), &q_int(*c));
        }
    }
    Ok(out)
}

/// Schur polynomial by the bialternant: the alternant of `x^(lambda_i + N - i)` over the
/// Vandermonde. Zero when `lambda` has more parts than the alphabet has letters.
pub fn schur(lambda: &Partition, a: &Alphabet) -> Result<Poly, SymError> {
    let n = a.len();
    if lambda.len() > n {
        return Ok(Poly::zero(a.ring()));
    }
    let exps = lambda.staircase_exponents(n);
    let m: Vec<Vec<Poly>> = exps.iter().map(|&e| (0..n).map(|j| a.var(j).pow(e)).collect()).collect();
    let num = det(a.ring(), &m);
    Ok(num.div_exact(&a.vandermonde())?)
}

/// Schur function of a virtual alphabet by Jacobi-Trudi in complete functions.
pub fn schur_virtual(lambda: &Partition, a: impl Into<VirtualAlphabet>) -> Poly {
    let a = a.into();
    let n = lambda.len();
    if n == 0 {
        return Poly::one(a.ring());
    }
    let top = (lambda.part(0) as usize) + n;
    let h = virtual_series(&a, top, false);
    let hk = |k: i64| if k < 0 { Poly::zero(a.ring()) } else { h[k as usize].clone() };
    let m: Vec<Vec<Poly>> =
        (0..n).map(|i| (0..n).map(|j| hk(lambda.part(i) as i64 - i as i64 + j as i64)).collect()).collect();
    det(a.ring(), &m)
}

/// Hook Schur function `s_(i|j) = s_(i+1, 1^j)`, by
/// `(-1)^j s_(i|j) = sum_{k+l=j} (-1)^l h_{i+k+1} e_l`; zero for negative indices.
pub fn hook_schur(i: i64, j: i64, a: impl Into<VirtualAlphabet>) -> Poly {
    let a = a.into();
    if i < 0 || j < 0 {
        return Poly::zero(a.ring());
    }
    let n = (i + j + 1) as usize;
    let h = virtual_series(&a, n, false);
    let e = virtual_series(&a, n, true);
    hook_from_series(i as usize, j as usize, &h, &e)
}

fn hook_from_series(i: usize, j: usize, h: &[Poly], e: &[Poly]) -> Poly {
    let mut out = Poly::zero(h[0].ring());
    for l in 0..=j {
        let k = j - l;
        let term = &h[i + k + 1] * &e[l];
        if (l + j).is_multiple_of(2) {
            out.add_assign_ref(&term);
        } else {
            out.sub_assign_ref(&term);
        }
    }
    out
}

/// h-reduction: `sum_{0<=i<=c} (-1)^(c-i) s_(r-1|c-i)(X+Y) h_i(X)`, checked against
/// `h_{c+r}(X)`.
pub fn h_reduce(x: impl Into<VirtualAlphabet>, y: &Alphabet, c: usize, r: usize) -> Result<Poly, SymError> {
    let x = x.into();
    if y.len() > c {
        return Err(SymError::Cardinality(format!("|{}| = {} exceeds c = {c}", y.name(), y.len())));
    }
    if r == 0 {
        return Err(SymError::Cardinality("r must be at least 1".into()));
    }
    let xy = &x + &y.virt();
    let hx = virtual_series(&x, c + r, false);
    let mut out = Poly::zero(x.ring());
    for i in 0..=c {
        let term = &hook_schur(r as i64 - 1, (c - i) as i64, &xy) * &hx[i];
        if (c - i).is_multiple_of(2) {
            out.add_assign_ref(&term);
        } else {
            out.sub_assign_ref(&term);
        }
    }
    if out != hx[c + r] {
        return Err(SymError::Identity(format!("h-reduction failed for c={c}, r={r}")));
    }
    Ok(out)
}

/// `sum_{1<=j<=a} (-1)^(a-j) s_(m-a|a-j)(X) x_i^(j-1)`, which equals `x_i^m` for `m >= a`.
pub fn monomial_reduction(a: &Alphabet, i: usize, m: usize) -> Poly {
    let n = a.len();
    let mut out = Poly::zero(a.ring());
    for j in 1..=n {
        let term = &hook_schur(m as i64 - n as i64, (n - j) as i64, a) * &a.var(i).pow(j as u32 - 1);
        if (n - j).is_multiple_of(2) {
            out.add_assign_ref(&term);
        } else {
            out.sub_assign_ref(&term);
        }
    }
    out
}

#[cfg(test)]
mod tests;
