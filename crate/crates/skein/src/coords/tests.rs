use super::*;
use crate::polycore::q_int;
use crate::polycore::Mono;
use proptest::prelude::*;

#[test]
fn suite_passes() {
    for c in suite() {
        assert!(c.ok, "{c}");
    }
}

#[test]
fn frame_json_roundtrip() {
    let f = CoordinateFrame {
        strands: vec![StrandSpec { color: 2, params: Family::V }, StrandSpec { color: 1, params: Family::Vdot }],
        permutation: vec![1, 0],
    };
    let j = f.to_json();
    assert_eq!(
        j.to_string(),
        r#"{"permutation":[1,0],"strands":[{"color":2,"params":"V"},{"color":1,"params":"Vdot"}]}"#
    );
    assert_eq!(CoordinateFrame::from_json(&j).unwrap(), f);
    let bad = serde_json::json!({"strands": [{"color": 1, "params": "V"}], "permutation": [1]});
    assert!(CoordinateFrame::from_json(&bad).is_err());
    assert_eq!(CoordinateFrame::single(3, Family::U).strands[0].color, 3);
}

#[test]
fn family_names() {
    for f in Family::ALL {
        assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
    }
    assert!("W".parse::<Family>().is_err());
}

#[test]
fn map_between_directions() {
    let (ring, m) = map_between(Family::V, Family::U, 2, None).unwrap();
    assert_eq!(m.image(ring.idx("v2")).to_text(), "-u2");
    assert!(map_between(Family::U, Family::Y, 2, None).is_err());
    let (ring, m) = map_between(Family::Vbar, Family::V, 2, Some(1)).unwrap();
    assert!(m.image(ring.idx("vb1")).involves(ring.idx("vR1")));
    assert!(map_between(Family::V, Family::Bundled, 2, Some(1)).is_err());
    assert!(!describe(&m).is_empty());
}

#[test]
fn constructors_reject_bad_input() {
    assert!(Strand::new(0).is_err());
    assert!(TwoStrand::new(1, 0).is_err());
    assert!(Bundling::new(&[1, 1], &[0, 0]).is_err());
    assert!(Strand::new(2).unwrap().recovery_numerator(3).is_err());
}

fn random_in(ring: &crate::polycore::Ring, vars: &[usize], seed: &[(usize, u32, i64)]) -> Poly {
    let mut p = Poly::zero(ring);
    for &(v, e, c) in seed {
        p.add_term(Mono::var(vars[v % vars.len()], e), q_int(c));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn u_v_inverse_on_random_polys(a in 1usize..=3, seed in prop::collection::vec((0usize..20, 1u32..3, -3i64..=3), 1..5)) {
        let s = Strand::new(a).unwrap();
        let vars: Vec<usize> = s.x().vars().iter().copied().chain(s.u_vars()).collect();
        let f = random_in(s.ring(), &vars, &seed);
        prop_assert_eq!(s.v_to_u().apply(&s.u_to_v().apply(&f)), f);
    }

    #[test]
    fn phi_composites_on_random_polys(seed in prop::collection::vec((0usize..20, 1u32..3, -3i64..=3), 1..5)) {
        let t = Tower::new(3).unwrap();
        let f = random_in(t.ring(), &t.level_vars(1), &seed);
        let two_step = t.stability_phi(2, 3).unwrap().apply(&t.stability_phi(1, 2).unwrap().apply(&f));
        prop_assert_eq!(two_step, t.stability_phi(1, 3).unwrap().apply(&f));
    }
}
