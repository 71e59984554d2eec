use crate::frobdem::demazure_word;
use crate::haiman::{hdet, key_det, KeyShape, Shape};
use crate::polycore::{Poly, Registry, Weight};
use crate::symfun::{elem, hook_schur, schur, Alphabet, Partition};

use super::{param_weight, DeformedRing, IdealError};

/// Both sides of the Laplace expansion of a reduced key alternant along the two colors.
#[derive(Clone, Debug)]
pub struct KeyLemmaValue {
    pub key: KeyShape,
    /// `pi(Delta_Key) / (Delta(X1) Delta(X2))`.
    pub key_side: Poly,
    /// `sum_beta (-1)^|beta^| s_beta(X1) pi(alt(M_(b-l)(beta^) u M_l(lambda) y)) / Delta(X2)`.
    pub laplace_side: Poly,
    /// `+1` or `-1` with `laplace_side = sign * key_side`; zero if neither holds.
    pub sign: i32,
}

impl KeyLemmaValue {
    pub fn holds(&self) -> bool {
        self.sign == 1
    }
}

/// Evaluates both sides for `Key_l(lambda)` in `E_(a,b)`.
pub fn key_lemma_check(ring: &DeformedRing, l: usize, lambda: &Partition) -> Result<KeyLemmaValue, IdealError> {
    let (a, b) = match ring.colors() {
        &[a, b] => (a, b),
        c => return Err(IdealError::Colors(c.to_vec())),
    };
    let key = KeyShape::new(a, b, l, lambda.clone())?;
    let pi = ring.reduction()?;
    let key_side = pi.apply(&ring.quotient(&key_det(&key, ring.x(), ring.y())?)?);

    let x1 = ring.color_alphabet(0);
    let x2 = ring.color_alphabet(1);
    let y2 = ring.y().slice("Y2", a..a + b);
    let d2 = x2.vandermonde();
    let mut laplace_side = Poly::zero(ring.ring());
    for beta in Partition::in_box(a, (b - l) as u32) {
        let hat = beta.dual_complement(a, (b - l) as u32);
        let left = schur(&beta, &x1).map_err(|e| IdealError::Range(e.to_string()))?;
        let mut cells: Vec<(u32, u32)> = Shape::schur_list(&hat, b - l).cells().to_vec();
        cells.extend(lambda.staircase_exponents(l).into_iter().map(|e| (e, 1)));
        let right = pi.apply(&ring.expand(&hdet(&cells, &x2, &y2)?)).div_exact(&d2)?;
        laplace_side.add_assign_ref(&(&left * &right).negate_if(hat.size() % 2 == 1));
    }
    let sign = if laplace_side == key_side {
        1
    } else if laplace_side == -&key_side {
        -1
    } else {
        0
    };
    Ok(KeyLemmaValue { key, key_side, laplace_side, sign })
}

/// `d_(a+1) ... d_(a+k-1) (e_(k-r)(X_[a+1,a+k-1]) ybar_(a+k)) = (-1)^(r-1) vb_r^(k)`, checked with
/// `ybar` written in `k` parameters and, independently, in `b` parameters where
/// `vb_r^(k) = vb_r + (-1)^(k-r) sum_(j>k) s_(j-k-1|k-r)(X_[a+1,a+k]) vb_j`.
/// Returns whether each route holds.
pub fn ytov_check(a: usize, b: usize, k: usize, r: usize) -> Result<(bool, bool), IdealError> {
    if !(1 <= r && r <= k && k <= b) {
        return Err(IdealError::Range(format!("need 1 <= r <= k <= b, got r={r} k={k} b={b}")));
    }
    let n = a + b;
    let mut reg = Registry::builder();
    for i in 1..=n {
        reg = reg.even(format!("x{i}"), Weight::qt(2, 0));
    }
    for i in 1..=k {
        reg = reg.even(format!("w{i}"), param_weight(i));
    }
    for i in 1..=b {
        reg = reg.even(format!("vb{i}"), param_weight(i));
    }
    let ring = reg.build()?;
    let x = Alphabet::numbered(&ring, "X", "x", 1, n)?;
    let inner = x.slice("I", a..a + k - 1);
    let head = x.slice("M", a..a + k);
    let word: Vec<usize> = (a + 1..a + k).collect();
    let letter = x.var(a + k - 1);
    let e = elem((k - r) as i64, &inner);
    let extract = |ybar: &Poly| demazure_word(&x, &word, &(&e * ybar));

    let short = (1..=k)
        .fold(Poly::zero(&ring), |acc, i| &acc + &(&letter.pow(i as u32 - 1) * &Poly::named(&ring, &format!("w{i}"))));
    let first = extract(&short)? == Poly::named(&ring, &format!("w{r}")).negate_if(r.is_multiple_of(2));

    let long = (1..=b)
        .fold(Poly::zero(&ring), |acc, i| &acc + &(&letter.pow(i as u32 - 1) * &Poly::named(&ring, &format!("vb{i}"))));
    let mut tail = Poly::zero(&ring);
    for j in k + 1..=b {
        tail.add_assign_ref(
            &(&hook_schur((j - k - 1) as i64, (k - r) as i64, &head) * &Poly::named(&ring, &format!("vb{j}"))),
        );
    }
    let at_k = &Poly::named(&ring, &format!("vb{r}")) + &tail.negate_if((k - r) % 2 == 1);
    let second = extract(&long)? == at_k.negate_if(r.is_multiple_of(2));
    Ok((first, second))
}
