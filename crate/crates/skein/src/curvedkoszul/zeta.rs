use crate::polycore::{det, Poly, SubstitutionMap};
use crate::symfun::{complete, elem, hook_schur, Alphabet};

use super::{contraction, identity_matrix, mat_add, mat_mul, wedge, zero_matrix, KoszulError, KoszulRing, Matrix};

/// The triangular change of odd basis attached to the first `k` letters `M` of `X2`:
/// `zeta_j = sum_{i<=j} (-1)^(i-1) e_(j-i)(M) xi_i` and `xi_i = sum_{j<=i} (-1)^(j-1) h_(i-j)(M) zeta_j`.
#[derive(Clone, Debug)]
pub struct BasisChange {
    k: usize,
    kr: KoszulRing,
    head: Alphabet,
    head_primed: Alphabet,
    to_zeta: Matrix,
    to_xi: Matrix,
}

pub fn zeta_basis(kr: &KoszulRing, k: usize) -> Result<BasisChange, KoszulError> {
    let b = kr.rank();
    if k > b {
        return Err(KoszulError::Range(format!("head length {k} for rank {b}")));
    }
    let ring = kr.ring();
    let head = kr.x().slice("M", 0..k);
    let head_primed = kr.xp().slice("M'", 0..k);
    let mut to_zeta = zero_matrix(ring, b);
    let mut to_xi = zero_matrix(ring, b);
    for j in 1..=b {
        for i in 1..=j {
            to_zeta[j - 1][i - 1] = elem((j - i) as i64, &head).negate_if(i % 2 == 0);
            to_xi[j - 1][i - 1] = complete((j - i) as i64, &head).negate_if(i % 2 == 0);
        }
    }
    Ok(BasisChange { k, kr: kr.clone(), head, head_primed, to_zeta, to_xi })
}

fn subsets(mask: usize, b: usize) -> Vec<usize> {
    (0..b).filter(|i| mask & (1 << i) != 0).collect()
}

/// `m[s][t]` for every pair of equal-size subsets: the minor on rows `s`, columns `t`.
fn exterior_power(m: &Matrix, b: usize, transpose: bool) -> Matrix {
    let ring = m[0][0].ring().clone();
    let n = 1 << b;
    let mut out = zero_matrix(&ring, n);
    for s in 0..n {
        for t in 0..n {
            if s.count_ones() != t.count_ones() {
                continue;
            }
            let (rows, cols) = (subsets(s, b), subsets(t, b));
            let minor: Matrix = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
            let d = if rows.is_empty() { Poly::one(&ring) } else { det(&ring, &minor) };
            if transpose {
                out[t][s] = d;
            } else {
                out[s][t] = d;
            }
        }
    }
    out
}

impl BasisChange {
    pub fn head_length(&self) -> usize {
        self.k
    }

    /// Row `j` holds the `xi`-coordinates of `zeta_(j+1)`.
    pub fn to_zeta(&self) -> &Matrix {
        &self.to_zeta
    }

    /// Row `i` holds the `zeta`-coordinates of `xi_(i+1)`.
    pub fn to_xi(&self) -> &Matrix {
        &self.to_xi
    }

    /// Lower triangular with diagonal `(-1)^(j-1)`.
    pub fn is_signed_unitriangular(&self) -> bool {
        let b = self.kr.rank();
        let ring = self.kr.ring();
        (0..b).all(|j| {
            (0..b).all(|i| match i.cmp(&j) {
                std::cmp::Ordering::Greater => self.to_zeta[j][i].is_zero() && self.to_xi[j][i].is_zero(),
                std::cmp::Ordering::Equal => {
                    let one = Poly::one(ring).negate_if(j % 2 == 1);
                    self.to_zeta[j][i] == one && self.to_xi[j][i] == one
                }
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// The two triangular matrices are mutually inverse.
    pub fn is_inverse_pair(&self) -> bool {
        let id = identity_matrix(self.kr.ring(), self.kr.rank());
        mat_mul(&self.to_zeta, &self.to_xi) == id && mat_mul(&self.to_xi, &self.to_zeta) == id
    }

    /// Column `S` holds the `xi`-coordinates of `zeta_S`.
    pub fn zeta_to_xi_coords(&self) -> Matrix {
        exterior_power(&self.to_zeta, self.kr.rank(), true)
    }

    /// Column `T` holds the `zeta`-coordinates of `xi_T`.
    pub fn xi_to_zeta_coords(&self) -> Matrix {
        exterior_power(&self.to_xi, self.kr.rank(), true)
    }

    /// An operator written in the `xi` basis, rewritten in the `zeta` basis.
    pub fn conjugate(&self, op: &Matrix) -> Matrix {
        mat_mul(&mat_mul(&self.xi_to_zeta_coords(), op), &self.zeta_to_xi_coords())
    }

    /// `x'_i -> x_i` for letters past the head, the relation `X2 - M = X2' - M'`.
    pub fn tail_relation(&self) -> SubstitutionMap {
        let mut m = SubstitutionMap::identity(self.kr.ring());
        for i in self.k..self.kr.rank() {
            m.set(self.kr.xp().vars()[i], self.kr.x().var(i));
        }
        m
    }

    pub fn relate(&self, op: &Matrix) -> Matrix {
        let rel = self.tail_relation();
        op.iter().map(|r| r.iter().map(|e| rel.apply(e)).collect()).collect()
    }

    /// `sum_j (e_j(M) - e_j(M')) zeta_j^*`.
    pub fn expected_d(&self) -> Matrix {
        let ring = self.kr.ring();
        let b = self.kr.rank();
        (1..=b).fold(zero_matrix(ring, 1 << b), |acc, j| {
            let c = &elem(j as i64, &self.head) - &elem(j as i64, &self.head_primed);
            mat_add(&acc, &contraction(ring, b, j, &c))
        })
    }

    /// Coefficient of `zeta_j` in `sum_l vb_l xi_l`: `(-1)^(j-1) sum_{l>=j} h_(l-j)(M) vb_l`.
    pub fn twist_coeff(&self, j: usize) -> Poly {
        let s = crate::polycore::sum(
            self.kr.ring(),
            &(j..=self.kr.rank())
                .map(|l| &complete((l - j) as i64, &self.head) * &self.kr.v_bar(l))
                .collect::<Vec<_>>(),
        );
        s.negate_if(j.is_multiple_of(2))
    }

    pub fn expected_delta(&self) -> Matrix {
        let ring = self.kr.ring();
        let b = self.kr.rank();
        (1..=b).fold(zero_matrix(ring, 1 << b), |acc, j| mat_add(&acc, &wedge(ring, b, j, &self.twist_coeff(j))))
    }

    /// `xi`-coordinates of `sum_{j<=k} twist_coeff(j) zeta_j`, the part of the twist along the head.
    pub fn head_column(&self) -> Vec<Poly> {
        let ring = self.kr.ring();
        let mut out = vec![Poly::zero(ring); self.kr.rank()];
        for j in 1..=self.k {
            let c = self.twist_coeff(j);
            for (i, o) in out.iter_mut().enumerate() {
                o.add_assign_ref(&(&c * &self.to_zeta[j - 1][i]));
            }
        }
        out
    }

    /// Closed form of `head_column`: `vb_i + (-1)^(k-i) sum_{r>k} s_(r-k-1|k-i)(M) vb_r` for
    /// `i <= k`, zero beyond.
    pub fn head_column_closed(&self) -> Vec<Poly> {
        let ring = self.kr.ring();
        let b = self.kr.rank();
        (1..=b)
            .map(|i| {
                if i > self.k {
                    return Poly::zero(ring);
                }
                let tail = crate::polycore::sum(
                    ring,
                    &(self.k + 1..=b)
                        .map(|r| {
                            &hook_schur((r - self.k - 1) as i64, (self.k - i) as i64, &self.head) * &self.kr.v_bar(r)
                        })
                        .collect::<Vec<_>>(),
                );
                &self.kr.v_bar(i) + &tail.negate_if((self.k - i) % 2 == 1)
            })
            .collect()
    }
}
