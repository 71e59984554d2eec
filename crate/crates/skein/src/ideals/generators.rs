use crate::haiman::{key_det, shape_det, KeyShape, Shape};
use crate::polycore::Poly;

use super::{DeformedRing, IdealError, IdealWindow};

/// Orders a color pair so the thicker strand comes first; the Hopf link is symmetric in its
/// components. Returns whether the colors were swapped.
pub fn normalize_colors(a: usize, b: usize) -> (usize, usize, bool) {
    if a < b {
        (b, a, true)
    } else {
        (a, b, false)
    }
}

fn pair(ring: &DeformedRing) -> Result<(usize, usize), IdealError> {
    match ring.colors() {
        &[a, b] => Ok((a, b)),
        c => Err(IdealError::Colors(c.to_vec())),
    }
}

fn choose2(n: usize) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32
}

/// Sets of `a+b` distinct cells whose alternant quotient lies in the window: at most `vmax`
/// powers of `y` in total and `q`-exponent `2(sum i - sum j) - a(a-1) - b(b-1)` at most `qmax`.
pub fn antisym_shapes(a: usize, b: usize, window: IdealWindow) -> Vec<Shape> {
    let n = a + b;
    let shift = choose2(a) + choose2(b);
    let imax = window.qmax.div_euclid(2) + window.vmax as i32 + shift;
    if imax < 0 {
        return Vec::new();
    }
    let mut cells = Vec::new();
    for j in 0..=window.vmax {
        for i in 0..=imax as u32 {
            cells.push((i, j));
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        cells: &[(u32, u32)],
        start: usize,
        n: usize,
        isum: i32,
        jsum: u32,
        bound: (i32, u32, i32, i32),
        chosen: &mut Vec<(u32, u32)>,
        out: &mut Vec<Shape>,
    ) {
        let (imax, vmax, qmax, shift) = bound;
        if chosen.len() == n {
            if 2 * (isum - jsum as i32) - 2 * shift <= qmax {
                out.push(Shape::new(chosen.iter().copied()).expect("distinct cells"));
            }
            return;
        }
        for k in start..cells.len() {
            let (i, j) = cells[k];
            if isum + i as i32 > imax || jsum + j > vmax {
                continue;
            }
            chosen.push((i, j));
            rec(cells, k + 1, n, isum + i as i32, jsum + j, bound, chosen, out);
            chosen.pop();
        }
    }
    rec(&cells, 0, n, 0, 0, (imax, window.vmax, window.qmax, shift), &mut chosen, &mut out);
    out.sort();
    out
}

/// `Alt(x^alpha y^beta) / (Delta(X1) Delta(X2))` for every cell set of the window, as elements
/// of `E_(a,b)`.
pub fn antisym_generators(ring: &DeformedRing, window: IdealWindow) -> Result<Vec<(Shape, Poly)>, IdealError> {
    let (a, b) = pair(ring)?;
    antisym_shapes(a, b, window)
        .into_iter()
        .map(|s| {
            let q = ring.quotient(&shape_det(&s, ring.x(), ring.y())?)?;
            Ok((s, q))
        })
        .collect()
}

/// The `2^b` quotients `Delta_(Key_l(lambda)) / (Delta(X1) Delta(X2))`.
pub fn key_generators(ring: &DeformedRing) -> Result<Vec<(KeyShape, Poly)>, IdealError> {
    let (a, b) = pair(ring)?;
    if a < b {
        return Err(IdealError::Colors(vec![a, b]));
    }
    KeyShape::all(a, b)
        .into_iter()
        .map(|k| {
            let q = ring.quotient(&key_det(&k, ring.x(), ring.y())?)?;
            Ok((k, q))
        })
        .collect()
}

/// The key generators after the reduction `pi`.
pub fn reduced_key_generators(ring: &DeformedRing) -> Result<Vec<(KeyShape, Poly)>, IdealError> {
    let pi = ring.reduction()?;
    Ok(key_generators(ring)?.into_iter().map(|(k, g)| (k, pi.apply(&g))).collect())
}
