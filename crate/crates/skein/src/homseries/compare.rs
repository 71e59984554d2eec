use std::collections::BTreeSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::ideals::{key_ideal, DeformedRing, IdealError, IdealWindow};
use crate::polycore::{format_q, LaurentSeries, Weight, Window, Q};

use super::{hopf_parity_series, HopfOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("lowest term at {0} touches the window boundary")]
    Ambiguous(Weight),
    #[error("colors ({0},{1}) need a >= b")]
    Colors(usize, usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub equal: bool,
    /// `second = shift * first`.
    pub shift: Weight,
    /// Weights compared after aligning.
    pub checked: usize,
    /// `(weight, shifted first, second)`.
    pub first_difference: Option<(Weight, Q, Q)>,
}

impl SeriesComparison {
    pub fn to_json(&self) -> Value {
        json!({
            "equal": self.equal,
            "shift": {"q": self.shift.q, "t": self.shift.t, "a": self.shift.a},
            "checked": self.checked,
            "first_difference": self.first_difference.as_ref().map(|(w, l, r)| json!({
                "q": w.q, "t": w.t, "a": w.a, "first": format_q(l), "second": format_q(r),
            })),
        })
    }
}

fn lowest(s: &LaurentSeries) -> Result<Option<(Weight, Q)>, SeriesError> {
    match s.lowest() {
        Some((w, _)) if w.q == s.window.q.0 => Err(SeriesError::Ambiguous(w)),
        other => Ok(other),
    }
}

/// Compares two expansions over the first one's window. With `allow_shift` the lowest terms
/// (in `(t, q, a)` order) fix a monomial `m` and `second = m * first` is tested wherever both
/// sides of the equation lie in the window.
pub fn compare_series(
    first: &LaurentSeries,
    second: &LaurentSeries,
    allow_shift: bool,
) -> Result<SeriesComparison, SeriesError> {
    let window = first.window;
    let first = first.restricted();
    let second = LaurentSeries { window, coeffs: second.coeffs.clone() }.restricted();
    let shift = if allow_shift {
        match (lowest(&first)?, lowest(&second)?) {
            (Some((w1, _)), Some((w2, _))) => w2 - w1,
            _ => Weight::ZERO,
        }
    } else {
        Weight::ZERO
    };
    let weights: BTreeSet<Weight> =
        first.coeffs.keys().map(|w| *w + shift).chain(second.coeffs.keys().copied()).collect();
    let mut checked = 0;
    let mut first_difference = None;
    for w in weights {
        if !window.contains(w) || !window.contains(w - shift) {
            continue;
        }
        checked += 1;
        let (l, r) = (first.coeff(w - shift), second.coeff(w));
        if l != r && first_difference.is_none() {
            first_difference = Some((w, l, r));
        }
    }
    Ok(SeriesComparison { equal: first_difference.is_none(), shift, checked, first_difference })
}

pub fn hilbert_as_series(hilbert: &[(Weight, usize)], window: Window) -> LaurentSeries {
    let mut s = LaurentSeries::zero(window);
    for (w, d) in hilbert {
        if window.contains(*w) {
            s.add_term(*w, Q::from_integer((*d as i64).into()));
        }
    }
    s
}

/// The Hilbert series of the key-generated ideal against the deformed bottom Hochschild
/// Hopf series.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub a: usize,
    pub b: usize,
    pub ideal_window: IdealWindow,
    pub window: Window,
    pub nonzero_pieces: usize,
    pub comparison: SeriesComparison,
}

impl CrossCheck {
    pub fn ok(&self) -> bool {
        self.comparison.equal && self.comparison.checked > 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a, "b": self.b, "ideal_window": self.ideal_window.to_json(),
            "window": {"q": [self.window.q.0, self.window.q.1], "t": [self.window.t.0, self.window.t.1]},
            "nonzero_pieces": self.nonzero_pieces, "comparison": self.comparison.to_json(), "ok": self.ok(),
        })
    }
}

pub fn ideal_cross_check(a: usize, b: usize, ideal_window: IdealWindow) -> Result<CrossCheck, SeriesError> {
    let hopf =
        hopf_parity_series(a, b, HopfOptions { bottom: true, deformed: true }).ok_or(SeriesError::Colors(a, b))?;
    let ring = DeformedRing::new(&[a, b])?;
    let hilbert = key_ideal(&ring, ideal_window)?.hilbert();
    let floor = hilbert.iter().map(|(w, _)| w.q).min().unwrap_or(0).min(-20) - 2;
    let window = Window::new((floor, ideal_window.qmax), (0, 2 * ideal_window.vmax as i32), (0, 0));
    let ideal_series = hilbert_as_series(&hilbert, window);
    let comparison = compare_series(&ideal_series, &hopf.expand(window), true)?;
    Ok(CrossCheck { a, b, ideal_window, window, nonzero_pieces: hilbert.len(), comparison })
}
