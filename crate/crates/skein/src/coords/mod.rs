//! Coordinate systems for deformation parameters and the substitutions between them.

mod bundle;
mod reduction;
mod stability;
mod strand;
mod suite;
#[cfg(test)]
mod tests;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde_json::{json, Value};
use thiserror::Error;

use crate::haiman::HaimanError;
use crate::polycore::{Poly, PolyError, Ring, SubstitutionMap, Weight};
use crate::symfun::Alphabet;

pub use bundle::Bundling;
pub use reduction::TwoStrand;
pub use stability::Tower;
pub use strand::Strand;
pub use suite::suite;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoordError {
    #[error("strand thickness must be positive, got {0}")]
    Thickness(usize),
    #[error("index {0} out of range 1..={1}")]
    Index(usize, usize),
    #[error("cannot include level {0} into level {1}")]
    Nesting(usize, usize),
    #[error("{0:?} is not a permutation")]
    Permutation(Vec<usize>),
    #[error("permutation {1:?} does not preserve colors {0:?}")]
    Unbalanced(Vec<usize>, Vec<usize>),
    #[error("no substitution from {0} to {1}")]
    NoMap(Family, Family),
    #[error("bad frame: {0}")]
    Frame(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Haiman(#[from] HaimanError),
}

/// A family of deformation parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    U,
    V,
    Y,
    Vbar,
    Vdot,
    Bundled,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::U, Family::V, Family::Y, Family::Vbar, Family::Vdot, Family::Bundled];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::U => "U",
            Family::V => "V",
            Family::Y => "Y",
            Family::Vbar => "Vbar",
            Family::Vdot => "Vdot",
            Family::Bundled => "Vomega",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = CoordError;
    fn from_str(s: &str) -> Result<Family, CoordError> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| CoordError::Frame(format!("unknown parameter family {s:?}")))
    }
}

/// One strand of a frame: its color and the active parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandSpec {
    pub color: usize,
    pub params: Family,
}

/// Strand data plus the permutation closing the strands up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateFrame {
    pub strands: Vec<StrandSpec>,
    pub permutation: Vec<usize>,
}

impl CoordinateFrame {
    pub fn single(a: usize, params: Family) -> CoordinateFrame {
        CoordinateFrame { strands: vec![StrandSpec { color: a, params }], permutation: vec![0] }
    }

    pub fn to_json(&self) -> Value {
        let strands: Vec<Value> =
            self.strands.iter().map(|s| json!({"color": s.color, "params": s.params.as_str()})).collect();
        json!({"strands": strands, "permutation": self.permutation})
    }

    pub fn from_json(v: &Value) -> Result<CoordinateFrame, CoordError> {
        let bad = |m: &str| CoordError::Frame(m.to_string());
        let strands = v
            .get("strands")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing strands"))?
            .iter()
            .map(|s| {
                let color = s.get("color").and_then(Value::as_u64).ok_or_else(|| bad("missing color"))? as usize;
                let params = s.get("params").and_then(Value::as_str).ok_or_else(|| bad("missing params"))?.parse()?;
                Ok(StrandSpec { color, params })
            })
            .collect::<Result<Vec<_>, CoordError>>()?;
        let permutation = v
            .get("permutation")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing permutation"))?
            .iter()
            .map(|p| p.as_u64().map(|p| p as usize).ok_or_else(|| bad("bad permutation entry")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut sorted = permutation.clone();
        sorted.sort_unstable();
        if sorted != (0..strands.len()).collect::<Vec<_>>() {
            return Err(CoordError::Permutation(permutation));
        }
        Ok(CoordinateFrame { strands, permutation })
    }
}

/// A curvature element: a polynomial of weight `t^2` in the letters and one parameter family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureElement {
    pub family: Family,
    pub poly: Poly,
}

impl CurvatureElement {
    pub fn new(family: Family, poly: Poly) -> CurvatureElement {
        CurvatureElement { family, poly }
    }

    pub fn has_curvature_weight(&self) -> bool {
        self.poly.is_zero() || self.poly.homogeneous_weight() == Some(Weight::qt(0, 2))
    }
}

pub(crate) fn add_all(ring: &Ring, terms: impl IntoIterator<Item = Poly>) -> Poly {
    let mut out = Poly::zero(ring);
    for t in terms {
        out.add_assign_ref(&t);
    }
    out
}

/// `x'_i -> x_(sigma(i))` for every permutation `sigma` of the letters.
pub(crate) fn permutation_specializations(ring: &Ring, x: &Alphabet, xp: &Alphabet) -> Vec<SubstitutionMap> {
    let n = x.len();
    (0..n)
        .permutations(n)
        .map(|sigma| {
            let mut m = SubstitutionMap::identity(ring);
            for (i, &s) in sigma.iter().enumerate() {
                m.set(xp.vars()[i], x.var(s));
            }
            m
        })
        .collect()
}

/// True when every specialization kills `p`.
pub fn vanishes_under(maps: &[SubstitutionMap], p: &Poly) -> bool {
    maps.iter().all(|m| m.apply(p).is_zero())
}

/// A substitution rewriting `from`-coordinates into `to`-coordinates, with its ring.
/// Single-strand families use thickness `a`; the reduced family uses the two-strand frame `(a, b)`.
pub fn map_between(
    from: Family,
    to: Family,
    a: usize,
    b: Option<usize>,
) -> Result<(Ring, SubstitutionMap), CoordError> {
    use Family::*;
    let strand = || Strand::new(a);
    match (from, to) {
        (U, V) => strand().map(|s| (s.ring().clone(), s.u_to_v())),
        (V, U) => strand().map(|s| (s.ring().clone(), s.v_to_u())),
        (Y, V) => strand().map(|s| (s.ring().clone(), s.y_to_v())),
        (Y, U) => strand().map(|s| (s.ring().clone(), s.y_to_u())),
        (V, Vdot) => strand().map(|s| (s.ring().clone(), s.v_to_vdot())),
        (Vdot, V) => strand().map(|s| (s.ring().clone(), s.vdot_to_v())),
        (Vbar, V) | (V, Vbar) => {
            let t = TwoStrand::new(a, b.unwrap_or(a))?;
            let m = if from == Vbar { t.unreduce() } else { t.specialize() };
            Ok((t.ring().clone(), m))
        }
        (V, Bundled) => {
            let c = b.unwrap_or(a);
            if c != a {
                return Err(CoordError::Unbalanced(vec![a, c], vec![1, 0]));
            }
            let bundling = Bundling::new(&[a, a], &[1, 0])?;
            Ok((bundling.ring().clone(), bundling.bundle()))
        }
        _ => Err(CoordError::NoMap(from, to)),
    }
}

/// The non-identity images of a substitution, as `(variable, image)` text pairs.
pub fn describe(map: &SubstitutionMap) -> Vec<(String, String)> {
    map.images()
        .iter()
        .filter(|(&i, p)| **p != Poly::var(map.ring(), i))
        .map(|(&i, p)| (map.ring().name(i).to_string(), p.to_text()))
        .collect()
}
