use proptest::prelude::*;

use super::*;
use crate::polycore::Q;

fn ring11() -> DeformedRing {
    DeformedRing::new(&[1, 1]).unwrap()
}

#[test]
fn window_membership() {
    let w = IdealWindow::new(4, 1);
    assert!(w.contains(Weight::qt(4, 2)));
    assert!(!w.contains(Weight::qt(6, 0)));
    assert!(!w.contains(Weight::qt(0, 4)));
    assert!(!w.contains(Weight::qt(0, 1)));
}

#[test]
fn blocks_must_refine_colors() {
    assert!(DeformedRing::with_blocks(&[2, 1], &[1, 1, 1], &[]).is_ok());
    assert!(DeformedRing::with_blocks(&[2, 1], &[1, 2], &[]).is_err());
    assert!(DeformedRing::new(&[0, 1]).is_err());
}

#[test]
fn y_expands_through_color_parameters() {
    let ring = DeformedRing::new(&[2, 1]).unwrap();
    let r = ring.ring();
    assert_eq!(ring.y_image(1), Poly::parse(r, "vL1 + x1*vL2").unwrap());
    assert_eq!(ring.y_image(3), Poly::parse(r, "vR1").unwrap());
}

#[test]
fn quotient_of_alternant() {
    let ring = ring11();
    let r = ring.ring();
    let alt = Poly::parse(r, "x1 - x2").unwrap();
    assert_eq!(ring.quotient(&alt).unwrap(), alt);
    assert!(ring.is_invariant(&Poly::parse(r, "x1 + vL1").unwrap()));
    let e = DeformedRing::new(&[2]).unwrap();
    assert_eq!(e.quotient(&Poly::parse(e.ring(), "x1 - x2").unwrap()).unwrap(), Poly::one(e.ring()));
    assert!(e.quotient(&Poly::parse(e.ring(), "x1").unwrap()).is_err());
}

#[test]
fn ring_dimensions() {
    let ring = ring11();
    assert_eq!(ring.dim(Weight::ZERO), 1);
    assert_eq!(ring.dim(Weight::qt(2, 0)), 2);
    assert_eq!(ring.dim(Weight::qt(-2, 2)), 2);
    assert_eq!(ring.dim(Weight::qt(0, 2)), 4);
    let e = DeformedRing::new(&[2]).unwrap();
    assert_eq!(e.dim(Weight::qt(4, 0)), 2);
    assert_eq!(e.dim(Weight::qt(-4, 2)), 1);
}

#[test]
fn normalized_colors() {
    assert_eq!(normalize_colors(1, 2), (2, 1, true));
    assert_eq!(normalize_colors(2, 2), (2, 2, false));
}

#[test]
fn one_one_key_ideal() {
    let ring = ring11();
    let ideal = key_ideal(&ring, IdealWindow::new(4, 1)).unwrap();
    assert_eq!(ideal.dim(Weight::qt(2, 0)).unwrap(), 1);
    assert_eq!(ideal.dim(Weight::qt(-2, 2)).unwrap(), 1);
    assert_eq!(ideal.dim(Weight::qt(4, 0)).unwrap(), 2);
    assert!(ideal.dim(Weight::qt(6, 0)).is_err());
}

#[test]
fn membership_certificate_reassembles() {
    let ring = ring11();
    let r = ring.ring();
    let ideal = key_ideal(&ring, IdealWindow::new(6, 2)).unwrap();
    let p = Poly::parse(r, "x1*vL1 - x2*vR1").unwrap();
    let m = ideal.membership(&p).unwrap();
    assert!(m.member);
    assert_eq!(ideal.reassemble(&m.certificate), p);
    let sym = Poly::parse(r, "x1 + x2").unwrap();
    assert!(!ideal.membership(&sym).unwrap().member);
}

#[test]
fn inhomogeneous_generators_rejected() {
    let ring = ring11();
    let r = ring.ring();
    let g = Poly::parse(r, "x1 - x2 + vL1").unwrap();
    assert!(matches!(GradedIdeal::new(&ring, vec![g], IdealWindow::new(4, 1)), Err(IdealError::Inhomogeneous)));
    let e = DeformedRing::new(&[2]).unwrap();
    let g = Poly::parse(e.ring(), "x1").unwrap();
    assert!(matches!(GradedIdeal::new(&e, vec![g], IdealWindow::new(4, 1)), Err(IdealError::NotInvariant)));
}

#[test]
fn hilbert_json_shape() {
    let ring = ring11();
    let ideal = key_ideal(&ring, IdealWindow::new(4, 1)).unwrap();
    let v = ideal.to_json(1, 1, &[]);
    assert_eq!(v["ideal"]["generators"].as_array().unwrap().len(), 2);
    assert!(v["hilbert"].as_array().unwrap().iter().all(|e| e["dim"].as_u64().unwrap() > 0));
}

#[test]
fn reduction_pi_values() {
    let ring = DeformedRing::new(&[1, 1]).unwrap();
    let r = ring.ring();
    assert_eq!(ring.reduced_param(1), Poly::parse(r, "vR1 - vL1").unwrap());
    assert_eq!(ring.y_bar(2), Poly::parse(r, "vR1 - vL1").unwrap());
}

#[test]
fn digon_one_one() {
    let d = digon_complex(1, 1, IdealWindow::new(4, 1)).unwrap();
    let rep = d.verify().unwrap();
    assert!(rep.ok(), "{:?}", rep.failures);
}

#[test]
fn diagonal_two_letters() {
    let rep = diagonal_check(2, 3).unwrap();
    assert!(rep.ok());
    assert!(rep.pieces.iter().any(|((dx, dy), i, _)| *dx == 1 && *dy == 0 && *i == 1));
}

#[test]
fn transparifer_one_one() {
    let d = transparifer(1, 1).unwrap();
    let r = d.ring.ring();
    assert_eq!(d.value, Poly::parse(r, "vR1 - vL1").unwrap());
    assert_eq!(d.swap_sign(), -1);
}

fn small_poly(ring: &Ring, coeffs: &[i64]) -> Poly {
    let names = ["x1*x2*vL1 + x1*x2*vR1", "x1^2*vL1 + x2^2*vR1", "x1^2 + x2^2", "x1*x2"];
    let mut out = Poly::zero(ring);
    for (c, n) in coeffs.iter().zip(names) {
        out.add_scaled(&Poly::parse(ring, n).unwrap(), &Q::from_integer((*c).into()));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_is_idempotent(cs in proptest::collection::vec(-3i64..=3, 4)) {
        let ring = DeformedRing::new(&[2, 1]).unwrap();
        let pi = ring.reduction().unwrap();
        let r = ring.ring();
        let names = ["vL1 + x1*vR1", "vL2*vR1", "x3*vL1", "vR1^2"];
        let mut p = Poly::zero(r);
        for (c, n) in cs.iter().zip(names) {
            p.add_scaled(&Poly::parse(r, n).unwrap(), &Q::from_integer((*c).into()));
        }
        let once = pi.apply(&p);
        prop_assert_eq!(pi.apply(&once), once);
    }

    #[test]
    fn multiples_are_members(cs in proptest::collection::vec(-3i64..=3, 2), upper in any::<bool>(), pick in 0usize..2) {
        let ring = ring11();
        let ideal = key_ideal(&ring, IdealWindow::new(6, 2)).unwrap();
        let coeffs = if upper { [cs[0], cs[1], 0, 0] } else { [0, 0, cs[0], cs[1]] };
        let multiplier = small_poly(ring.ring(), &coeffs);
        let p = &multiplier * &ideal.generators()[pick];
        prop_assume!(!p.is_zero());
        let m = ideal.membership(&p).unwrap();
        prop_assert!(m.member);
        prop_assert_eq!(ideal.reassemble(&m.certificate), p);
    }

    #[test]
    fn interpolation_is_exact(a in 1usize..=3, r in 0u32..=4, s in 0u32..=2) {
        let ring = DeformedRing::with_blocks(&[a, 1], &[a, 1], &[("z", Weight::qt(2, 0))]).unwrap();
        let m = interpolation_polynomial(&ring, r, s).unwrap();
        prop_assert!(schur::interpolates(&ring, &m, r, s));
    }
}
