use std::cell::RefCell;
use std::collections::BTreeMap;
use std::rc::Rc;

use serde_json::{json, Value};

use crate::polycore::{Poly, RowReducer, Weight};

use super::{DeformedRing, IdealError, IdealWindow};

/// The ideal generated by homogeneous invariant elements, examined one graded piece at a time.
#[derive(Clone)]
pub struct GradedIdeal {
    ambient: DeformedRing,
    generators: Vec<Poly>,
    weights: Vec<Weight>,
    window: IdealWindow,
    pieces: RefCell<BTreeMap<Weight, Rc<Piece>>>,
}

struct Piece {
    reducer: RowReducer,
    /// Input `k` of the reducer is `multiplier * generator`.
    inputs: Vec<(usize, Poly)>,
}

/// Outcome of a membership test: on success `certificate[g]` multiplies generator `g`.
#[derive(Clone, Debug)]
pub struct Membership {
    pub weight: Weight,
    pub member: bool,
    pub certificate: Vec<Poly>,
}

impl GradedIdeal {
    pub fn new(ambient: &DeformedRing, generators: Vec<Poly>, window: IdealWindow) -> Result<Self, IdealError> {
        let mut weights = Vec::new();
        let mut kept = Vec::new();
        for g in generators {
            if g.is_zero() {
                continue;
            }
            if !ambient.is_invariant(&g) {
                return Err(IdealError::NotInvariant);
            }
            weights.push(g.homogeneous_weight().ok_or(IdealError::Inhomogeneous)?);
            kept.push(g);
        }
        Ok(GradedIdeal {
            ambient: ambient.clone(),
            generators: kept,
            weights,
            window,
            pieces: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn ambient(&self) -> &DeformedRing {
        &self.ambient
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn window(&self) -> IdealWindow {
        self.window
    }

    fn piece(&self, w: Weight) -> Rc<Piece> {
        if let Some(p) = self.pieces.borrow().get(&w) {
            return p.clone();
        }
        let mut reducer = RowReducer::new(self.ambient.ring(), true);
        let mut inputs = Vec::new();
        for (g, (gen, gw)) in self.generators.iter().zip(&self.weights).enumerate() {
            for m in self.ambient.basis(w - *gw) {
                reducer.insert(&(&m * gen));
                inputs.push((g, m));
            }
        }
        let p = Rc::new(Piece { reducer, inputs });
        self.pieces.borrow_mut().insert(w, p.clone());
        p
    }

    /// Dimension of the ideal in weight `w`.
    pub fn dim(&self, w: Weight) -> Result<usize, IdealError> {
        if !self.window.contains(w) {
            return Err(IdealError::WindowExceeded(w));
        }
        Ok(self.piece(w).reducer.rank())
    }

    /// A basis of the ideal in weight `w`.
    pub fn piece_basis(&self, w: Weight) -> Result<Vec<Poly>, IdealError> {
        if !self.window.contains(w) {
            return Err(IdealError::WindowExceeded(w));
        }
        Ok(self.piece(w).reducer.basis())
    }

    /// Solves `p = sum c_g g` in the graded piece of `p`.
    pub fn membership(&self, p: &Poly) -> Result<Membership, IdealError> {
        let ring = self.ambient.ring();
        if p.is_zero() {
            return Ok(Membership {
                weight: Weight::ZERO,
                member: true,
                certificate: vec![Poly::zero(ring); self.generators.len()],
            });
        }
        let w = p.homogeneous_weight().ok_or(IdealError::Inhomogeneous)?;
        if !self.window.contains(w) {
            return Err(IdealError::WindowExceeded(w));
        }
        let piece = self.piece(w);
        let red = piece.reducer.reduce(p);
        let mut certificate = vec![Poly::zero(ring); self.generators.len()];
        if !red.remainder.is_zero() {
            return Ok(Membership { weight: w, member: false, certificate });
        }
        for (k, c) in &red.combo {
            let (g, m) = &piece.inputs[*k];
            certificate[*g].add_scaled(m, c);
        }
        Ok(Membership { weight: w, member: true, certificate })
    }

    /// `sum c_g g`.
    pub fn reassemble(&self, certificate: &[Poly]) -> Poly {
        let mut out = Poly::zero(self.ambient.ring());
        for (c, g) in certificate.iter().zip(&self.generators) {
            out.add_assign_ref(&(c * g));
        }
        out
    }

    /// Every graded dimension inside the window, in increasing `(t, q)` order.
    pub fn hilbert(&self) -> Vec<(Weight, usize)> {
        self.ambient
            .window_weights(self.window)
            .into_iter()
            .map(|w| (w, self.piece(w).reducer.rank()))
            .filter(|(_, d)| *d > 0)
            .collect()
    }

    /// Both ideals agree on every graded piece of the window.
    pub fn same_pieces(&self, other: &GradedIdeal) -> bool {
        self.ambient.window_weights(self.window).into_iter().all(|w| {
            let (a, b) = (self.piece(w), other.piece(w));
            a.reducer.rank() == b.reducer.rank() && a.reducer.basis().iter().all(|v| b.reducer.contains(v))
        })
    }

    pub fn to_json(&self, a: usize, b: usize, memberships: &[(Poly, Membership)]) -> Value {
        json!({
            "ideal": {"a": a, "b": b, "generators": self.generators.iter().map(Poly::to_text).collect::<Vec<_>>()},
            "window": self.window.to_json(),
            "hilbert": self.hilbert().iter().map(|(w, d)| json!({"weight": {"q": w.q, "t": w.t, "a": w.a}, "dim": d})).collect::<Vec<_>>(),
            "memberships": memberships.iter().map(|(p, m)| json!({
                "poly": p.to_text(),
                "ok": m.member,
                "certificate": if m.member { json!(m.certificate.iter().map(Poly::to_text).collect::<Vec<_>>()) } else { Value::Null },
            })).collect::<Vec<_>>(),
        })
    }
}
