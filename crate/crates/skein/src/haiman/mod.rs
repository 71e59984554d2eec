//! Shapes of `(x, y)`-monomials and their alternating determinants.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::polycore::{det, Poly, PolyError};
use crate::symfun::{Alphabet, Partition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HaimanError {
    #[error("duplicate cell x^{0} y^{1}")]
    DuplicateCell(u32, u32),
    #[error("{cells} monomials need alphabets of that size, got {x} and {y}")]
    SizeMismatch { cells: usize, x: usize, y: usize },
    #[error("key shape needs a >= b >= l and lambda in a {rows}x{cols} box")]
    BadKey { rows: usize, cols: u32 },
    #[error("bad shape description: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A set of monic monomials `x^i y^j`, stored as `(i, j)` in canonical order: by increasing
/// `y`-power, then decreasing `x`-power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    cells: Vec<(u32, u32)>,
}

impl Shape {
    pub fn new(cells: impl IntoIterator<Item = (u32, u32)>) -> Result<Shape, HaimanError> {
        let mut cells: Vec<(u32, u32)> = cells.into_iter().collect();
        cells.sort_by(|p, q| p.1.cmp(&q.1).then(q.0.cmp(&p.0)));
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(HaimanError::DuplicateCell(w[0].0, w[0].1));
        }
        Ok(Shape { cells })
    }

    /// `{x^(n-1), ..., x, 1}`.
    pub fn staircase(n: usize) -> Shape {
        Shape { cells: (0..n as u32).rev().map(|i| (i, 0)).collect() }
    }

    /// `{x^(lambda_i + n - i)}`, the bialternant numerator shape.
    pub fn schur_list(lambda: &Partition, n: usize) -> Shape {
        Shape { cells: lambda.staircase_exponents(n).into_iter().map(|e| (e, 0)).collect() }
    }

    pub fn cells(&self) -> &[(u32, u32)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in row `j` (the coefficient of `y^j`), by decreasing `x`-power.
    pub fn row(&self, j: u32) -> Vec<u32> {
        self.cells.iter().filter(|c| c.1 == j).map(|c| c.0).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut sorted = self.cells.clone();
        sorted.sort();
        json!(sorted.iter().map(|(i, j)| json!([i, j])).collect::<Vec<_>>())
    }

    pub fn from_json(v: &Value) -> Result<Shape, HaimanError> {
        let arr = v.as_array().ok_or_else(|| HaimanError::Parse("expected an array of [i,j] pairs".into()))?;
        let mut cells = Vec::new();
        for c in arr {
            let pair = c
                .as_array()
                .filter(|p| p.len() == 2)
                .and_then(|p| Some((p[0].as_u64()? as u32, p[1].as_u64()? as u32)))
                .ok_or_else(|| HaimanError::Parse(format!("bad cell {c}")))?;
            cells.push(pair);
        }
        Shape::new(cells)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cells
            .iter()
            .map(|&(i, j)| match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => mono_text("x", i),
                (0, j) => mono_text("y", j),
                (i, j) => format!("{}{}", mono_text("x", i), mono_text("y", j)),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn mono_text(v: &str, e: u32) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

/// Determinant of `(m_i(x_j, y_j))` for an ordered monomial list; zero when entries repeat.
pub fn hdet(monomials: &[(u32, u32)], x: &Alphabet, y: &Alphabet) -> Result<Poly, HaimanError> {
    let n = monomials.len();
    if x.len() != n || y.len() != n {
        return Err(HaimanError::SizeMismatch { cells: n, x: x.len(), y: y.len() });
    }
    if monomials.iter().duplicates().next().is_some() {
        return Ok(Poly::zero(x.ring()));
    }
    let m: Vec<Vec<Poly>> =
        monomials.iter().map(|&(i, j)| (0..n).map(|c| &x.var(c).pow(i) * &y.var(c).pow(j)).collect()).collect();
    Ok(det(x.ring(), &m))
}

pub fn shape_det(s: &Shape, x: &Alphabet, y: &Alphabet) -> Result<Poly, HaimanError> {
    hdet(s.cells(), x, y)
}

/// `Key_l(lambda) = {x^(a+b-l-1), ..., x, 1} u {x^(lambda_1+l-1) y, ..., x^(lambda_l) y}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyShape {
    pub a: usize,
    pub b: usize,
    pub l: usize,
    pub lambda: Partition,
}

impl KeyShape {
    pub fn new(a: usize, b: usize, l: usize, lambda: Partition) -> Result<KeyShape, HaimanError> {
        if !(a >= b && b >= l && lambda.fits(l, (b - l) as u32)) {
            return Err(HaimanError::BadKey { rows: l, cols: b.saturating_sub(l) as u32 });
        }
        Ok(KeyShape { a, b, l, lambda })
    }

    /// Every key shape for `(a, b)`: `0 <= l <= b`, `lambda` in the `l x (b-l)` box.
    pub fn all(a: usize, b: usize) -> Vec<KeyShape> {
        (0..=b)
            .flat_map(|l| {
                Partition::in_box(l, (b - l) as u32).into_iter().map(move |lam| KeyShape { a, b, l, lambda: lam })
            })
            .collect()
    }

    pub fn shape(&self) -> Shape {
        let top = (self.a + self.b - self.l) as u32;
        let mut cells: Vec<(u32, u32)> = (0..top).rev().map(|i| (i, 0)).collect();
        cells.extend(self.lambda.staircase_exponents(self.l).into_iter().map(|e| (e, 1)));
        Shape { cells }
    }
}

impl fmt::Display for KeyShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key[a={},b={},l={},lambda={}]", self.a, self.b, self.l, self.lambda)
    }
}

pub fn key_det(key: &KeyShape, x: &Alphabet, y: &Alphabet) -> Result<Poly, HaimanError> {
    shape_det(&key.shape(), x, y)
}

/// Shapes of level `l`: first row `{1, ..., x^(a-1)}` plus `b-l` powers from `[a, a+b)`,
/// second row `l` monomials `x^r y` with `0 <= r < b`.
pub fn enumerate_shapes(l: usize, a: usize, b: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    for extra in (a as u32..(a + b) as u32).combinations(b - l) {
        for second in (0..b as u32).combinations(l) {
            let cells = (0..a as u32)
                .map(|i| (i, 0))
                .chain(extra.iter().map(|&i| (i, 0)))
                .chain(second.iter().map(|&r| (r, 1)));
            out.push(Shape::new(cells).expect("distinct by construction"));
        }
    }
    out
}

#[cfg(test)]
mod tests;
