use super::*;
use proptest::prelude::*;

fn ring() -> Ring {
    Registry::builder()
        .even("x1", Weight::qt(2, 0))
        .even("x2", Weight::qt(2, 0))
        .even("y", Weight::qt(-2, 2))
        .even("x", Weight::qt(2, 0))
        .even("v_L_1", Weight::qt(-2, 2))
        .even("v_L_2", Weight::qt(-4, 2))
        .odd("xi1", Weight::qt(2, -1))
        .odd("xi2", Weight::qt(4, -1))
        .build()
        .unwrap()
}

fn p(r: &Ring, s: &str) -> Poly {
    Poly::parse(r, s).unwrap()
}

#[test]
fn difference_of_squares() {
    let r = ring();
    assert_eq!(&p(&r, "x1 - x2") * &p(&r, "x1 + x2"), p(&r, "x1^2 - x2^2"));
}

#[test]
fn odd_square_vanishes() {
    let r = ring();
    let xi = p(&r, "xi1");
    assert!((&xi * &xi).is_zero());
}

#[test]
fn odd_anticommute() {
    let r = ring();
    let (a, b) = (p(&r, "xi1"), p(&r, "xi2"));
    assert!((&(&a * &b) + &(&b * &a)).is_zero());
    assert_eq!(&b * &a, -(&a * &b));
}

#[test]
fn text_roundtrip() {
    let r = ring();
    let s = "3/2*x1^2*v_L_1 - x2*xi1";
    let q = p(&r, s);
    assert_eq!(Poly::parse(&r, &q.to_text()).unwrap(), q);
    assert_eq!(Poly::from_json(&r, &q.to_json()).unwrap(), q);
    assert_eq!(p(&r, "0").to_text(), "0");
    assert_eq!(p(&r, "-x1").to_text(), "-x1");
}

#[test]
fn parse_rejects_garbage() {
    let r = ring();
    assert!(Poly::parse(&r, "x9").is_err());
    assert!(Poly::parse(&r, "x1 +").is_err());
    assert!(Poly::parse(&r, "1/0").is_err());
}

#[test]
fn substitution_examples() {
    let r = ring();
    let s = SubstitutionMap::identity(&r).with("y", p(&r, "v_L_1 + x*v_L_2"));
    assert_eq!(s.apply(&p(&r, "y^2")), p(&r, "v_L_1 + x*v_L_2").pow(2));
    let id = SubstitutionMap::identity(&r);
    let f = p(&r, "x1*y - 2*xi1*x2");
    assert_eq!(id.apply(&f), f);
    assert!(s.check_weights().is_ok());
    let bad = SubstitutionMap::identity(&r).with("y", p(&r, "x1"));
    assert!(bad.check_weights().is_err());
}

#[test]
fn exact_division() {
    let r = ring();
    let f = p(&r, "x1^3 - x2^3");
    let g = p(&r, "x1 - x2");
    assert_eq!(f.div_exact(&g).unwrap(), p(&r, "x1^2 + x1*x2 + x2^2"));
    assert_eq!(f.div_linear(r.idx("x1"), &p(&r, "x2")).unwrap(), p(&r, "x1^2 + x1*x2 + x2^2"));
    assert!(p(&r, "x1^2 + 1").div_exact(&g).is_err());
}

#[test]
fn graded_piece_symmetric_degree_two() {
    let r = ring();
    let gens = [p(&r, "x1 + x2"), p(&r, "x1*x2")];
    let b = graded_piece(&r, &gens, Weight::qt(4, 0), Cutoff::default()).unwrap();
    assert_eq!(b.len(), 2);
    // independent oracle: the symmetric polynomials of degree 2 in 2 variables are
    // spanned by x1^2 + x2^2 and x1 x2
    let mut red = RowReducer::new(&r, false);
    for q in &b {
        red.insert(q);
    }
    assert!(red.contains(&p(&r, "x1^2 + x2^2")));
    assert!(red.contains(&p(&r, "x1*x2")));
    assert!(!red.contains(&p(&r, "x1^2")));
}

#[test]
fn graded_piece_trivial_cases() {
    let r = ring();
    let gens = [p(&r, "x")];
    assert_eq!(graded_piece(&r, &gens, Weight::qt(2, 0), Cutoff::default()).unwrap(), vec![p(&r, "x")]);
    assert!(graded_piece(&r, &gens, Weight::qt(2, -2), Cutoff::default()).unwrap().is_empty());
}

#[test]
fn determinants_agree() {
    let r = ring();
    let xs = ["x1", "x2", "x", "y", "v_L_1"];
    let m: Vec<Vec<Poly>> = (0..5).map(|i| xs.iter().map(|v| Poly::named(&r, v).pow(i as u32)).collect()).collect();
    let d1 = bareiss_det(&r, &m);
    let d2 = cofactor_det(&r, &m);
    assert_eq!(d1, d2);
    // Vandermonde oracle
    let mut expected = Poly::one(&r);
    for i in 0..5 {
        for j in i + 1..5 {
            expected = &expected * &(&Poly::named(&r, xs[j]) - &Poly::named(&r, xs[i]));
        }
    }
    assert_eq!(d1, expected);
}

#[test]
fn row_reducer_certificates() {
    let r = ring();
    let gens = [p(&r, "x1 - x2"), p(&r, "x1*x2"), p(&r, "x2^2")];
    let mut red = RowReducer::new(&r, true);
    for g in &gens {
        red.insert(g);
    }
    let target = p(&r, "x1*x2 - x2^2 + 3*x1 - 3*x2");
    let out = red.reduce(&target);
    assert!(out.remainder.is_zero());
    let mut rebuilt = Poly::zero(&r);
    for (k, c) in &out.combo {
        rebuilt.add_scaled(&gens[*k], c);
    }
    assert_eq!(rebuilt, target);
}

#[test]
fn series_geometric_and_inverse() {
    let w = Window::new((-10, 10), (0, 4), (-2, 0)).with_slope(2);
    let g = LaurentSeries::geometric(w, Weight::qt(2, 0), Q::from_integer(1.into()));
    let one_minus = LaurentSeries::one(w).sub(&LaurentSeries::monomial(w, Weight::qt(2, 0), q_int(1)));
    assert_eq!(one_minus.inverse().unwrap().restricted(), g.restricted());
    let prod = g.mul(&one_minus).restricted();
    assert_eq!(prod, LaurentSeries::one(w).restricted());
}

fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u32; 4])>> {
    prop::collection::vec((-5i64..=5, [0u32..3, 0u32..3, 0u32..2, 0u32..2]), 0..5)
}

fn build(r: &Ring, spec: &[(i64, [u32; 4])]) -> Poly {
    let names = ["x1", "x2", "xi1", "xi2"];
    let mut out = Poly::zero(r);
    for (c, e) in spec {
        let mut t = Poly::int(r, *c);
        for (k, n) in names.iter().enumerate() {
            t = &t * &Poly::named(r, n).pow(e[k]);
        }
        out.add_assign_ref(&t);
    }
    out
}

fn homogeneous_spec() -> impl Strategy<Value = Vec<(i64, u32)>> {
    prop::collection::vec((-4i64..=4, 0u32..=3), 1..4)
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let r = ring();
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn homogeneous_products(a in homogeneous_spec(), b in homogeneous_spec()) {
        // a, b homogeneous of x-degree 3: sum of c * x1^k x2^(3-k)
        let r = ring();
        let mk = |s: &[(i64, u32)]| {
            let mut out = Poly::zero(&r);
            for (c, k) in s {
                let t = &Poly::named(&r, "x1").pow(*k) * &Poly::named(&r, "x2").pow(3 - k);
                out.add_scaled(&t, &q_int(*c));
            }
            out
        };
        let (pa, pb) = (mk(&a), mk(&b));
        let prod = &pa * &pb;
        if !prod.is_zero() {
            prop_assert_eq!(prod.homogeneous_weight(), Some(Weight::qt(12, 0)));
        }
    }

    #[test]
    fn substitution_is_homomorphism(a in arb_poly(), b in arb_poly(), c1 in -3i64..3, c2 in -3i64..3) {
        let r = ring();
        let (a, b) = (build(&r, &a), build(&r, &b));
        let s = SubstitutionMap::identity(&r)
            .with("x1", &Poly::named(&r, "x2").scale_int(c1) + &Poly::named(&r, "x").scale_int(c2))
            .with("x2", &Poly::named(&r, "x1") + &Poly::named(&r, "x2"));
        prop_assert_eq!(s.apply(&(&a * &b)), &s.apply(&a) * &s.apply(&b));
        prop_assert_eq!(s.apply(&(&a + &b)), &s.apply(&a) + &s.apply(&b));
    }

    #[test]
    fn composition_matches_sequential(a in arb_poly(), c in -3i64..3) {
        let r = ring();
        let a = build(&r, &a);
        let s = SubstitutionMap::identity(&r).with("x1", &Poly::named(&r, "x2") + &Poly::named(&r, "x").scale_int(c));
        let t = SubstitutionMap::identity(&r).with("x2", Poly::named(&r, "x1").scale_int(2)).with("x", Poly::named(&r, "x2"));
        prop_assert_eq!(s.then(&t).apply(&a), t.apply(&s.apply(&a)));
    }

    #[test]
    fn text_roundtrip_random(a in arb_poly()) {
        let r = ring();
        let a = build(&r, &a);
        prop_assert_eq!(Poly::parse(&r, &a.to_text()).unwrap(), a.clone());
        prop_assert_eq!(Poly::from_json(&r, &a.to_json()).unwrap(), a);
    }
}
