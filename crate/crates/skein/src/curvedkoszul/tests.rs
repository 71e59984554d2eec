use proptest::prelude::*;

use super::*;
use crate::report::all_ok;

#[test]
fn suite_passes() {
    let checks = suite();
    for c in checks.iter().filter(|c| !c.ok) {
        eprintln!("{}: {}", c.name, c.detail);
    }
    assert!(all_ok(&checks));
}

#[test]
fn json_shape() {
    let (_, c) = build_curved_koszul(2).unwrap();
    let v = c.to_json();
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 4);
    assert_eq!(basis[0]["label"], "1");
    assert_eq!(basis[3]["label"], "xi1^xi2");
    assert_eq!(basis[3]["weight"]["q"], 6);
    assert_eq!(basis[3]["weight"]["t"], -2);
    assert_eq!(v["diff"].as_array().unwrap().len(), 4);
    assert!(v["curvature"].as_str().unwrap().contains("vb2"));
}

#[test]
fn wedge_and_contraction_anticommute() {
    let kr = KoszulRing::new(3).unwrap();
    let r = kr.ring();
    let one = crate::polycore::Poly::one(r);
    for i in 1..=3 {
        for j in 1..=3 {
            let w = wedge(r, 3, i, &one);
            let c = contraction(r, 3, j, &one);
            let anti = mat_add(&mat_mul(&w, &c), &mat_mul(&c, &w));
            let want = if i == j { identity_matrix(r, 8) } else { zero_matrix(r, 8) };
            assert_eq!(anti, want, "xi{i} and xi{j}^*");
            let ww = mat_mul(&wedge(r, 3, i, &one), &wedge(r, 3, j, &one));
            let ww2 = mat_mul(&wedge(r, 3, j, &one), &wedge(r, 3, i, &one));
            assert_eq!(mat_add(&ww, &ww2), zero_matrix(r, 8));
        }
    }
}

#[test]
fn bad_ranges_rejected() {
    let kr = KoszulRing::new(2).unwrap();
    assert!(zeta_basis(&kr, 3).is_err());
    assert!(effective_thickness_koszul(2, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_twists_square_to_pairing(coeffs in proptest::collection::vec(-3i64..=3, 3)) {
        let kr = KoszulRing::new(3).unwrap();
        let r = kr.ring();
        let delta: Vec<_> = coeffs.iter().enumerate().map(|(i, &c)| kr.v_bar(i + 1).scale_int(c)).collect();
        let d = kr.koszul_coeffs();
        let curv = crate::polycore::sum(r, &d.iter().zip(&delta).map(|(h, v)| h * v).collect::<Vec<_>>());
        let c = CurvedComplex::new(r, kr.odd_weights(), d, delta, curv);
        prop_assert!(c.verify().is_ok());
    }
}
