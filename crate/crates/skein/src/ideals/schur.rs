use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::haiman::{enumerate_shapes, hdet, Shape};
use crate::polycore::{det, det_q, q_int, Poly, Q};
use crate::symfun::hook_schur;

use super::{DeformedRing, IdealError};

fn first_extra(ring: &DeformedRing) -> Result<usize, IdealError> {
    ring.extra().first().copied().ok_or_else(|| IdealError::Range("ring has no interpolation variable".into()))
}

/// `m^(r,s)(z)`: the polynomial of degree below `a` in the interpolation variable with
/// `m(x_i) = x_i^r y_i^s` for every letter of the first color, by Cramer's rule on the
/// Vandermonde system. Coefficients are checked to lie in `E_(a,0)`.
pub fn interpolation_polynomial(ring: &DeformedRing, r: u32, s: u32) -> Result<Poly, IdealError> {
    let z = Poly::var(ring.ring(), first_extra(ring)?);
    let a = ring.colors()[0];
    let x = ring.x();
    let target: Vec<Poly> = (1..=a).map(|j| &x.var(j - 1).pow(r) * &ring.y_image(j).pow(s)).collect();
    let rows: Vec<Vec<Poly>> = (0..a).map(|t| (0..a).map(|j| x.var(j).pow(t as u32)).collect()).collect();
    let denominator = det(ring.ring(), &rows);
    let mut m = Poly::zero(ring.ring());
    for t in 0..a {
        let mut replaced = rows.clone();
        replaced[t] = target.clone();
        let c = det(ring.ring(), &replaced).div_exact(&denominator)?;
        let x1 = ring.color_alphabet(0);
        if !crate::frobdem::is_block_symmetric(&[&x1], &[a], &c) {
            return Err(IdealError::NotInvariant);
        }
        m.add_assign_ref(&(&c * &z.pow(t as u32)));
    }
    Ok(m)
}

/// `m(x_j)`.
fn evaluate(ring: &DeformedRing, m: &Poly, j: usize) -> Poly {
    m.substitute_var(ring.extra()[0], &ring.x().var(j - 1))
}

/// `m(x_i) = x_i^r y_i^s` for every letter of the first color.
pub fn interpolates(ring: &DeformedRing, m: &Poly, r: u32, s: u32) -> bool {
    (1..=ring.colors()[0]).all(|i| evaluate(ring, m, i) == &ring.x().var(i - 1).pow(r) * &ring.y_image(i).pow(s))
}

/// `sum_t (-1)^(a-t) s_(c-a|a-t)(X1) z^(t-1)` for `c >= a`.
pub fn interpolation_closed_form(ring: &DeformedRing, c: u32) -> Result<Poly, IdealError> {
    let z = Poly::var(ring.ring(), first_extra(ring)?);
    let a = ring.colors()[0];
    let x1 = ring.color_alphabet(0);
    let mut out = Poly::zero(ring.ring());
    for t in 1..=a {
        let term = &hook_schur(c as i64 - a as i64, (a - t) as i64, &x1) * &z.pow(t as u32 - 1);
        out.add_assign_ref(&term.negate_if((a - t) % 2 == 1));
    }
    Ok(out)
}

/// `x_j^r y_j - m^(r,1)(x_j) = x_j^r ybar_j + sum_k (x_j^(r+k-1) - m^(r+k-1,0)(x_j)) vL_k` for a
/// letter `j` of the second color.
pub fn monomial_difference_check(ring: &DeformedRing, r: u32, j: usize) -> Result<bool, IdealError> {
    let a = ring.colors()[0];
    let xj = ring.x().var(j - 1);
    let lhs = &(&xj.pow(r) * &ring.y_image(j)) - &evaluate(ring, &interpolation_polynomial(ring, r, 1)?, j);
    let mut rhs = &xj.pow(r) * &ring.y_bar(j);
    for k in 1..=a {
        let e = r + k as u32 - 1;
        let row = &xj.pow(e) - &evaluate(ring, &interpolation_polynomial(ring, e, 0)?, j);
        rhs.add_assign_ref(&(&row * &ring.param(0, k)));
    }
    Ok(lhs == rhs)
}

fn inverse_q(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Q::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `det M = det A det(D - C A^-1 B)` on seeded random integer matrices with blocks of sizes
/// `n1` and `n2`; returns the number of matrices checked and whether all agreed.
pub fn block_determinant_check(seed: u64, trials: usize, n1: usize, n2: usize) -> (usize, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n1 + n2;
    let mut checked = 0;
    let mut ok = true;
    for _ in 0..trials {
        let m: Vec<Vec<Q>> = (0..n).map(|_| (0..n).map(|_| q_int(rng.gen_range(-5..=5))).collect()).collect();
        let a: Vec<Vec<Q>> = m[..n1].iter().map(|r| r[..n1].to_vec()).collect();
        let Some(ainv) = inverse_q(&a) else { continue };
        let schur: Vec<Vec<Q>> = (n1..n)
            .map(|i| {
                (n1..n)
                    .map(|j| {
                        let mut v = m[i][j].clone();
                        for p in 0..n1 {
                            for q in 0..n1 {
                                v -= &m[i][p] * &ainv[p][q] * &m[q][j];
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        checked += 1;
        ok &= det_q(&m) == det_q(&a) * det_q(&schur);
    }
    (checked, ok)
}

/// Row data of a shape in block order: the staircase `1..x^(a-1)`, then the remaining powers of
/// `x` increasing, then the `x^r y` increasing.
fn block_rows(s: &Shape, a: usize) -> (Vec<u32>, Vec<u32>) {
    let mut extra: Vec<u32> = s.row(0).into_iter().filter(|&e| e >= a as u32).collect();
    extra.sort_unstable();
    let mut second = s.row(1);
    second.sort_unstable();
    (extra, second)
}

fn block_list(a: usize, extra: &[u32], second: &[u32]) -> Vec<(u32, u32)> {
    (0..a as u32).map(|i| (i, 0)).chain(extra.iter().map(|&e| (e, 0))).chain(second.iter().map(|&r| (r, 1))).collect()
}

/// The alternant of a shape of level `l` with its rows in block order, `y` expanded.
pub fn block_alternant(ring: &DeformedRing, s: &Shape) -> Result<Poly, IdealError> {
    let a = ring.colors()[0];
    let (extra, second) = block_rows(s, a);
    Ok(ring.expand(&hdet(&block_list(a, &extra, &second), ring.x(), ring.y())?))
}

/// A Schur-complement certificate: `Delta_S - pi(Delta_S) = sum_R c_(S,R) pi(Delta_R)` with
/// `c_(S,R)` in the left parameters and `R` of lower level, every alternant in block order.
#[derive(Clone, Debug)]
pub struct SchurCertificate {
    pub shape: Shape,
    pub level: usize,
    pub difference: Poly,
    pub terms: Vec<(Shape, Poly)>,
    /// `Delta_S = det(A) det(M_S)` with `A` the Vandermonde block on the first color.
    pub block_formula: bool,
}

impl SchurCertificate {
    pub fn reassembles(&self, ring: &DeformedRing) -> Result<bool, IdealError> {
        let mut sum = Poly::zero(ring.ring());
        for (r, c) in &self.terms {
            sum.add_assign_ref(&(c * &ring.pi(&block_alternant(ring, r)?)));
        }
        Ok(sum == self.difference)
    }

    pub fn coefficients_left_only(&self, ring: &DeformedRing) -> bool {
        let left = ring.params(0);
        self.terms.iter().all(|(_, c)| c.variables().iter().all(|v| left.contains(v)))
    }
}

fn inversions(v: &[u32]) -> usize {
    (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter(|&(i, j)| v[i] > v[j]).count()
}

/// Expands each `y`-row of `M_S` as its reduced row plus `sum_k vL_k` times the row of
/// `x^(r+k-1)`, and collects the resulting determinants by shape.
pub fn unreduced_vs_reduced(ring: &DeformedRing, s: &Shape) -> Result<SchurCertificate, IdealError> {
    let (a, b) = match ring.colors() {
        &[a, b] => (a, b),
        c => return Err(IdealError::Colors(c.to_vec())),
    };
    let (extra, second) = block_rows(s, a);
    if s.len() != a + b || s.row(0).len() + second.len() != s.len() || extra.len() + a != s.row(0).len() {
        return Err(IdealError::Range(format!("{s} is not a block shape for ({a},{b})")));
    }
    let level = second.len();
    let full = block_alternant(ring, s)?;
    let difference = &full - &ring.pi(&full);

    let x = ring.x();
    let staircase: Vec<Vec<Poly>> = (0..a).map(|t| (0..a).map(|j| x.var(j).pow(t as u32)).collect()).collect();
    let det_a = det(ring.ring(), &staircase);
    let x_row = |e: u32| -> Result<Vec<Poly>, IdealError> {
        let m = interpolation_polynomial(ring, e, 0)?;
        Ok((a + 1..=a + b).map(|j| &x.var(j - 1).pow(e) - &evaluate(ring, &m, j)).collect())
    };
    let mut rows = Vec::new();
    for &e in &extra {
        rows.push(x_row(e)?);
    }
    for &r in &second {
        let m = interpolation_polynomial(ring, r, 1)?;
        rows.push(
            (a + 1..=a + b).map(|j| &(&x.var(j - 1).pow(r) * &ring.y_image(j)) - &evaluate(ring, &m, j)).collect(),
        );
    }
    let block_formula = &det_a * &det(ring.ring(), &rows) == full;

    let mut coeffs: BTreeMap<Shape, Poly> = BTreeMap::new();
    let choices = a + 1;
    let total = choices.pow(level as u32);
    for code in 1..total {
        let mut c = code;
        let mut picks = Vec::with_capacity(level);
        for _ in 0..level {
            picks.push(c % choices);
            c /= choices;
        }
        let mut new_powers = Vec::new();
        let mut kept = Vec::new();
        let mut coef = Poly::one(ring.ring());
        for (&r, &k) in second.iter().zip(&picks) {
            if k == 0 {
                kept.push(r);
            } else {
                let e = r + k as u32 - 1;
                if e < a as u32 {
                    coef = Poly::zero(ring.ring());
                    break;
                }
                new_powers.push(e);
                coef = &coef * &ring.param(0, k);
            }
        }
        if coef.is_zero() {
            continue;
        }
        // row order before sorting: extras, then the y-block with replaced rows in place
        let mut row_keys: Vec<u32> = extra.clone();
        let mut np = new_powers.iter();
        for (&r, &k) in second.iter().zip(&picks) {
            row_keys.push(if k == 0 { 2 * (a + b) as u32 + r } else { *np.next().expect("one per pick") });
        }
        let mut xs: Vec<u32> = extra.iter().chain(&new_powers).copied().collect();
        xs.sort_unstable();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let r_shape = Shape::new(block_list(a, &xs, &kept))?;
        let coef = coef.negate_if(inversions(&row_keys) % 2 == 1);
        coeffs.entry(r_shape).or_insert_with(|| Poly::zero(ring.ring())).add_assign_ref(&coef);
    }
    let terms = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    Ok(SchurCertificate { shape: s.clone(), level, difference, terms, block_formula })
}

/// All block shapes of levels `0..=b`, with the unitriangular matrix `U` expressing the
/// unreduced alternants through the reduced ones, `Delta = U pi(Delta)`, and its inverse.
#[derive(Clone, Debug)]
pub struct ReductionLedger {
    pub shapes: Vec<Shape>,
    pub levels: Vec<usize>,
    pub certificates: Vec<SchurCertificate>,
    pub unitriangular: Vec<Vec<Poly>>,
    pub inverse: Vec<Vec<Poly>>,
}

impl ReductionLedger {
    pub fn build(ring: &DeformedRing) -> Result<Self, IdealError> {
        let (a, b) = (ring.colors()[0], ring.colors()[1]);
        let mut shapes = Vec::new();
        let mut levels = Vec::new();
        for l in 0..=b {
            for s in enumerate_shapes(l, a, b) {
                shapes.push(s);
                levels.push(l);
            }
        }
        let n = shapes.len();
        let zero = Poly::zero(ring.ring());
        let mut u = vec![vec![zero.clone(); n]; n];
        let mut certificates = Vec::new();
        for (i, s) in shapes.iter().enumerate() {
            let cert = unreduced_vs_reduced(ring, s)?;
            u[i][i] = Poly::one(ring.ring());
            for (r, c) in &cert.terms {
                let j = shapes
                    .iter()
                    .position(|t| t == r)
                    .ok_or_else(|| IdealError::Certificate(format!("{r} outside the shape list")))?;
                u[i][j] = c.clone();
            }
            certificates.push(cert);
        }
        // forward substitution, valid because U is unitriangular in level order
        let mut inv = vec![vec![zero.clone(); n]; n];
        for i in 0..n {
            inv[i][i] = Poly::one(ring.ring());
            for j in 0..i {
                let mut acc = zero.clone();
                for k in j..i {
                    if !u[i][k].is_zero() && !inv[k][j].is_zero() {
                        acc.add_assign_ref(&(&u[i][k] * &inv[k][j]));
                    }
                }
                inv[i][j] = -&acc;
            }
        }
        Ok(ReductionLedger { shapes, levels, certificates, unitriangular: u, inverse: inv })
    }

    /// Entries off the diagonal only point to strictly lower levels.
    pub fn is_unitriangular(&self) -> bool {
        let n = self.shapes.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = &self.unitriangular[i][j];
                if i == j {
                    *e == Poly::one(e.ring())
                } else {
                    e.is_zero() || self.levels[j] < self.levels[i]
                }
            })
        })
    }

    /// `pi(Delta_S) = sum_R U^-1[S][R] Delta_R` for every shape.
    pub fn inverse_holds(&self, ring: &DeformedRing) -> Result<bool, IdealError> {
        let alts: Vec<Poly> = self.shapes.iter().map(|s| block_alternant(ring, s)).collect::<Result<_, _>>()?;
        Ok((0..self.shapes.len()).all(|i| {
            let mut sum = Poly::zero(ring.ring());
            for (j, alt) in alts.iter().enumerate() {
                if !self.inverse[i][j].is_zero() {
                    sum.add_assign_ref(&(&self.inverse[i][j] * alt));
                }
            }
            sum == ring.pi(&alts[i])
        }))
    }
}
