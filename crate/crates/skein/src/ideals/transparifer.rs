use crate::haiman::{shape_det, KeyShape};
use crate::polycore::{Poly, SubstitutionMap};
use crate::symfun::Partition;

use super::{DeformedRing, IdealError};

/// `D_(i,j) = Delta_(Key_b(0))(X_i + X_j, Y_i + Y_j) / (Delta(X_i) Delta(X_j))` for two strands of
/// colors `(b_i, b_j)`, with `b` the smaller color, computed with the letters in both orders.
#[derive(Clone, Debug)]
pub struct Transparifer {
    pub ring: DeformedRing,
    pub colors: (usize, usize),
    /// Letters of strand `i` first.
    pub value: Poly,
    /// Letters of strand `j` first.
    pub swapped: Poly,
}

pub fn transparifer(bi: usize, bj: usize) -> Result<Transparifer, IdealError> {
    let ring = DeformedRing::new(&[bi, bj])?;
    let (a, b) = (bi.max(bj), bi.min(bj));
    let key = KeyShape::new(a, b, b, Partition::empty())?.shape();
    let n = bi + bj;
    let order: Vec<usize> = (bi..n).chain(0..bi).collect();
    let x_swapped =
        crate::symfun::Alphabet::from_indices(ring.ring(), "Xji", order.iter().map(|&k| ring.x().vars()[k]).collect())?;
    let y_swapped =
        crate::symfun::Alphabet::from_indices(ring.ring(), "Yji", order.iter().map(|&k| ring.y().vars()[k]).collect())?;
    let value = ring.quotient(&shape_det(&key, ring.x(), ring.y())?)?;
    let swapped = ring.quotient(&shape_det(&key, &x_swapped, &y_swapped)?)?;
    Ok(Transparifer { ring, colors: (bi, bj), value, swapped })
}

impl Transparifer {
    pub fn b(&self) -> usize {
        self.colors.0.min(self.colors.1)
    }

    /// `+1` or `-1` with `swapped = sign * value`, zero if neither.
    pub fn swap_sign(&self) -> i32 {
        if self.swapped == self.value {
            1
        } else if self.swapped == -&self.value {
            -1
        } else {
            0
        }
    }

    /// `v_(c,r) -> 0` for `r > 1`.
    pub fn specialize_linear(&self) -> Poly {
        let mut m = SubstitutionMap::identity(self.ring.ring());
        for c in 0..2 {
            for &v in &self.ring.params(c)[1..] {
                m.set(v, Poly::zero(self.ring.ring()));
            }
        }
        m.apply(&self.value)
    }

    /// `(v_(j,1) - v_(i,1))^b`.
    pub fn expected_linear(&self) -> Poly {
        (&self.ring.param(1, 1) - &self.ring.param(0, 1)).pow(self.b() as u32)
    }

    /// `+1` or `-1` with `specialize_linear = sign * expected_linear`, zero if neither.
    pub fn linear_sign(&self) -> i32 {
        let got = self.specialize_linear();
        let want = self.expected_linear();
        if got == want {
            1
        } else if got == -&want {
            -1
        } else {
            0
        }
    }
}
