use itertools::Itertools;
use serde_json::{json, Value};

use crate::haiman::{shape_det, Shape};
use crate::polycore::{Poly, PolyError, Registry, RowReducer, SubstitutionMap, Weight};
use crate::symfun::Alphabet;

/// Graded comparison of the ideal generated by all alternants in `k[X, Y]` (`N` letters each)
/// with the intersection of the ideals `<x_i - x_j, y_i - y_j>`.
#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub n: usize,
    pub max_degree: u32,
    /// `((x-degree, y-degree), dim of the alternant ideal, dim of the intersection)`.
    pub pieces: Vec<((u32, u32), usize, usize)>,
    pub contained: bool,
}

impl DiagonalReport {
    pub fn ok(&self) -> bool {
        self.contained && self.pieces.iter().all(|(_, i, k)| i == k)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n, "max_degree": self.max_degree, "contained": self.contained, "ok": self.ok(),
            "pieces": self.pieces.iter().map(|((dx, dy), i, k)| json!({"x": dx, "y": dy, "ideal": i, "intersection": k})).collect::<Vec<_>>(),
        })
    }
}

fn monomials(vars: &[usize], d: u32, ring: &crate::polycore::Ring) -> Vec<Poly> {
    vars.iter()
        .combinations_with_replacement(d as usize)
        .map(|vs| vs.iter().fold(Poly::one(ring), |acc, &&v| &acc * &Poly::var(ring, v)))
        .collect()
}

/// Checks bidegrees with total degree at most `max_degree`. Membership in `<x_i - x_j, y_i - y_j>`
/// is vanishing on `x_j = x_i, y_j = y_i`, so the intersection is the kernel of the tagged sum
/// of these specializations.
pub fn diagonal_check(n: usize, max_degree: u32) -> Result<DiagonalReport, PolyError> {
    let mut reg = Registry::builder();
    for i in 1..=n {
        reg = reg.even(format!("x{i}"), Weight::qt(2, 0));
    }
    for i in 1..=n {
        reg = reg.even(format!("y{i}"), Weight::qt(0, 2));
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    for (i, j) in &pairs {
        reg = reg.even(format!("T{}_{}", i + 1, j + 1), Weight::ZERO);
    }
    let ring = reg.build()?;
    let x = Alphabet::numbered(&ring, "X", "x", 1, n)?;
    let y = Alphabet::numbered(&ring, "Y", "y", 1, n)?;
    let tagged: Vec<(Poly, SubstitutionMap)> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut m = SubstitutionMap::identity(&ring);
            m.set(x.vars()[j], x.var(i));
            m.set(y.vars()[j], y.var(i));
            (Poly::named(&ring, &format!("T{}_{}", i + 1, j + 1)), m)
        })
        .collect();
    let restrict = |p: &Poly| {
        let mut out = Poly::zero(&ring);
        for (tag, m) in &tagged {
            out.add_assign_ref(&(tag * &m.apply(p)));
        }
        out
    };

    let mut alternants: Vec<((u32, u32), Poly)> = Vec::new();
    let cells: Vec<(u32, u32)> = (0..=max_degree).flat_map(|i| (0..=max_degree - i).map(move |j| (i, j))).collect();
    for set in cells.iter().combinations(n) {
        let (dx, dy) = set.iter().fold((0, 0), |acc, c| (acc.0 + c.0, acc.1 + c.1));
        if dx + dy > max_degree {
            continue;
        }
        let s = Shape::new(set.into_iter().copied()).expect("distinct cells");
        alternants.push(((dx, dy), shape_det(&s, &x, &y).map_err(|e| PolyError::Parse(e.to_string()))?));
    }

    let mut pieces = Vec::new();
    let mut contained = true;
    for total in 0..=max_degree {
        for dx in 0..=total {
            let dy = total - dx;
            let mut ideal = RowReducer::new(&ring, false);
            for ((ax, ay), alt) in &alternants {
                if *ax <= dx && *ay <= dy {
                    for mx in monomials(x.vars(), dx - ax, &ring) {
                        for my in monomials(y.vars(), dy - ay, &ring) {
                            ideal.insert(&(&(&mx * &my) * alt));
                        }
                    }
                }
            }
            contained &= ideal.basis().iter().all(|p| restrict(p).is_zero());
            let mut image = RowReducer::new(&ring, false);
            let mut dim = 0;
            for mx in monomials(x.vars(), dx, &ring) {
                for my in monomials(y.vars(), dy, &ring) {
                    image.insert(&restrict(&(&mx * &my)));
                    dim += 1;
                }
            }
            pieces.push(((dx, dy), ideal.rank(), dim - image.rank()));
        }
    }
    Ok(DiagonalReport { n, max_degree, pieces, contained })
}
