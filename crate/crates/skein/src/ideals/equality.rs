use serde_json::{json, Value};

use crate::haiman::Shape;

use super::{
    antisym_generators, key_generators, reduced_key_generators, DeformedRing, GradedIdeal, IdealError, IdealWindow,
};

/// Every alternant quotient of the window against the ideal of the `2^b` key generators.
#[derive(Clone, Debug)]
pub struct EqualityReport {
    pub a: usize,
    pub b: usize,
    pub window: IdealWindow,
    pub key_generators: usize,
    pub checked: usize,
    pub members: usize,
    pub certificates_ok: bool,
    pub keys_among_alternants: bool,
    pub first_failure: Option<String>,
}

impl EqualityReport {
    pub fn ok(&self) -> bool {
        self.members == self.checked
            && self.certificates_ok
            && self.keys_among_alternants
            && self.key_generators == 1 << self.b
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a, "b": self.b, "window": self.window.to_json(), "key_generators": self.key_generators,
            "checked": self.checked, "members": self.members, "certificates_ok": self.certificates_ok,
            "keys_among_alternants": self.keys_among_alternants, "first_failure": self.first_failure, "ok": self.ok(),
        })
    }
}

/// The key-generated ideal of `E_(a,b)`.
pub fn key_ideal(ring: &DeformedRing, window: IdealWindow) -> Result<GradedIdeal, IdealError> {
    GradedIdeal::new(ring, key_generators(ring)?.into_iter().map(|(_, g)| g).collect(), window)
}

pub fn ideal_equality(a: usize, b: usize, window: IdealWindow) -> Result<EqualityReport, IdealError> {
    let ring = DeformedRing::new(&[a, b])?;
    let keys = key_generators(&ring)?;
    let ideal = GradedIdeal::new(&ring, keys.iter().map(|(_, g)| g.clone()).collect(), window)?;
    let alternants = antisym_generators(&ring, window)?;
    let shapes: Vec<&Shape> = alternants.iter().map(|(s, _)| s).collect();
    let keys_among_alternants = keys.iter().all(|(k, g)| {
        let in_window = g.homogeneous_weight().is_some_and(|w| window.contains(w));
        !in_window || shapes.contains(&&k.shape())
    });
    let mut report = EqualityReport {
        a,
        b,
        window,
        key_generators: keys.len(),
        checked: 0,
        members: 0,
        certificates_ok: true,
        keys_among_alternants,
        first_failure: None,
    };
    for (s, g) in &alternants {
        report.checked += 1;
        let m = ideal.membership(g)?;
        if m.member {
            report.members += 1;
            if ideal.reassemble(&m.certificate) != *g {
                report.certificates_ok = false;
                report.first_failure.get_or_insert_with(|| format!("certificate for {s} does not reassemble"));
            }
        } else {
            report.first_failure.get_or_insert_with(|| format!("{s} is not in the key ideal"));
        }
    }
    Ok(report)
}

/// `<pi(keys)> = <keys>` on every graded piece of the window.
pub fn reduced_generation(a: usize, b: usize, window: IdealWindow) -> Result<bool, IdealError> {
    let ring = DeformedRing::new(&[a, b])?;
    let full = key_ideal(&ring, window)?;
    let reduced =
        GradedIdeal::new(&ring, reduced_key_generators(&ring)?.into_iter().map(|(_, g)| g).collect(), window)?;
    Ok(full.same_pieces(&reduced))
}
