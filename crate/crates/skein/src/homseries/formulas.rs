use crate::polycore::{Weight, Window};

use super::{Factor, SeriesExpr};

/// `q` in `[-20, 20]`, `t` in `[0, 12]`, `a` in `[-letters, 0]`.
pub fn series_window(letters: usize) -> Window {
    Window::new((-20, 20), (0, 12), (-(letters as i32), 0))
}

/// `prod_(i<=n) 1/(1 - q^(2i))`, the series of `Sym` in `n` letters.
pub fn sym_factors(n: usize) -> Vec<Factor> {
    (1..=n as i32).map(|i| Factor::geometric(Weight::qt(2 * i, 0))).collect()
}

/// `prod_(i<=n) 1/(1 - q^(-2i) t^2)`, the interpolation parameters of a strand of color `n`.
pub fn deformation_factors(n: usize) -> Vec<Factor> {
    (1..=n as i32).map(|i| Factor::geometric(Weight::qt(-2 * i, 2))).collect()
}

/// `prod_(i<=n) (1 + a^-1 q^(2i))`, or `(1 + a q^(-2i))` in the dual convention.
pub fn exterior_factors(n: usize, dual: bool) -> Vec<Factor> {
    (1..=n as i32)
        .map(|i| Factor::plus(if dual { Weight::new(-2 * i, 0, 1) } else { Weight::new(2 * i, 0, -1) }))
        .collect()
}

pub fn unknot_series(b: usize, deformed: bool, dual: bool) -> SeriesExpr {
    let mut factors = exterior_factors(b, dual);
    factors.extend(sym_factors(b));
    if deformed {
        factors.extend(deformation_factors(b));
    }
    SeriesExpr::product(Weight::ZERO, factors)
}

/// Hochschild homology of `R = Sym(X_1|...|X_k)` as a bimodule over itself, computed from the
/// Koszul resolution over `Sym(X)`. Its differentials multiply by `e_j(X) - e_j(X')`, which is
/// central and acts by zero on these identity-type bimodules, so the homology is `R` tensor
/// an exterior algebra on `N = |X|` generators of weights `a^-1 q^(2j)`.
pub fn hh_series_of_invariant_ring(blocks: &[usize]) -> SeriesExpr {
    let n = blocks.iter().sum();
    let mut factors = exterior_factors(n, false);
    for &b in blocks {
        factors.extend(sym_factors(b));
    }
    SeriesExpr::product(Weight::ZERO, factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct HopfOptions {
    /// Keep only the `a^0` part of each Hochschild series.
    pub bottom: bool,
    /// Multiply by the parameters of both strands.
    pub deformed: bool,
}

/// The parity decomposition of the `(a,b)`-colored Hopf link:
/// `sum_l q^(2(a-l)(b-l) - 2l) t^(2l) q^(ab - l^2) HH(theta(a-l, l, b-l))`. The theta web is
/// normalized by `q^-(e_2 of its block sizes)`, which puts its lowest term at `q^0`.
pub fn hopf_parity_series(a: usize, b: usize, options: HopfOptions) -> Option<SeriesExpr> {
    if b > a {
        return None;
    }
    let mut out = SeriesExpr::default();
    for l in 0..=b {
        let blocks = [a - l, l, b - l];
        let e2 = (blocks[0] * blocks[1] + blocks[1] * blocks[2] + blocks[0] * blocks[2]) as i32;
        let (ai, bi, li) = (a as i32, b as i32, l as i32);
        let q = 2 * (ai - li) * (bi - li) - 2 * li + ai * bi - li * li - e2;
        let mut factors = if options.bottom { Vec::new() } else { exterior_factors(a + b - l, false) };
        for &n in &blocks {
            factors.extend(sym_factors(n));
        }
        if options.deformed {
            factors.extend(deformation_factors(a));
            factors.extend(deformation_factors(b));
        }
        out = out.sum(SeriesExpr::product(Weight::qt(q, 2 * li), factors));
    }
    Some(out)
}

/// `q^((a-l)(b-l))` times the series of `Sym(X_1|L|B)` with `|X_1| = a`, `|L| = b-l`, `|B| = l`.
pub fn hom_to_web_series(a: usize, b: usize, l: usize) -> Option<SeriesExpr> {
    if l > b || b > a {
        return None;
    }
    let mut factors = sym_factors(a);
    factors.extend(sym_factors(b - l));
    factors.extend(sym_factors(l));
    Some(SeriesExpr::product(Weight::qt(((a - l) * (b - l)) as i32, 0), factors))
}
