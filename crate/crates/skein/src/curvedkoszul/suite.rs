use crate::polycore::{Poly, Registry, Weight};
use crate::report::{Check, Tally};
use crate::symfun::{complete, elem, hook_schur, Alphabet};

use super::{
    build_curved_koszul, contract_if_unit, effective_thickness_koszul, identity_matrix, mat_mul, zeta_basis,
    KoszulError, KoszulRing,
};

const SUITE: &str = "koszul";

/// Complexes, changes of odd basis and contractions, followed by the coefficient identities.
pub fn suite() -> Vec<Check> {
    let mut out = Vec::new();

    let mut t = Tally::new(SUITE, "curved_square");
    for b in 1..=3 {
        match build_curved_koszul(b) {
            Ok((kr, c)) => {
                t.holds(format!("b={b} squares to curvature"), c.verify().is_ok());
                t.holds(format!("b={b} graded"), c.is_graded());
                let flat = c.specialize_zero(&kr.v_bar_vars());
                t.holds(format!("b={b} flat at vb=0"), flat.verify().is_ok() && flat.curvature().is_zero());
            }
            Err(e) => t.holds(format!("b={b} built: {e}"), false),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "curved_small_values");
    if let Ok((kr, c)) = build_curved_koszul(1) {
        let r = kr.ring();
        let m = c.total();
        t.case("d entry", &m[0][1], &Poly::parse(r, "x1 - xp1").unwrap());
        t.case("twist entry", &m[1][0], &kr.v_bar(1));
        t.case("curvature", c.curvature(), &Poly::parse(r, "x1*vb1 - xp1*vb1").unwrap());
    } else {
        t.holds("built", false);
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "zeta_triangular");
    for b in 1..=3 {
        let kr = KoszulRing::new(b).expect("valid ring");
        for k in 0..=b {
            let z = zeta_basis(&kr, k).expect("k <= b");
            t.holds(format!("b={b} k={k} signed unitriangular"), z.is_signed_unitriangular());
            t.holds(format!("b={b} k={k} inverse pair"), z.is_inverse_pair());
            let id = identity_matrix(kr.ring(), 1 << b);
            t.holds(
                format!("b={b} k={k} exterior inverse"),
                mat_mul(&z.xi_to_zeta_coords(), &z.zeta_to_xi_coords()) == id,
            );
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "zeta_small_values");
    let kr = KoszulRing::new(2).expect("valid ring");
    let z = zeta_basis(&kr, 1).expect("k <= b");
    let r = kr.ring();
    t.case("zeta1 along xi1", &z.to_zeta()[0][0], &Poly::one(r));
    t.case("zeta2 along xi1", &z.to_zeta()[1][0], &Poly::named(r, "x1"));
    t.case("zeta2 along xi2", &z.to_zeta()[1][1], &-Poly::one(r));
    let z0 = zeta_basis(&kr, 0).expect("k <= b");
    t.case("k=0 zeta2", &z0.to_zeta()[1][1], &-Poly::one(r));
    t.case("k=0 zeta2 along xi1", &z0.to_zeta()[1][0], &Poly::zero(r));
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "zeta_conjugation");
    for b in 1..=3 {
        let (kr, c) = build_curved_koszul(b).expect("b <= 3");
        for k in 0..=b {
            let z = zeta_basis(&kr, k).expect("k <= b");
            t.holds(format!("b={b} k={k} twist"), z.conjugate(&c.delta()) == z.expected_delta());
            t.holds(
                format!("b={b} k={k} differential on the tail relation"),
                z.relate(&z.conjugate(&c.d())) == z.relate(&z.expected_d()),
            );
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "zeta_head_column");
    for b in 1..=4 {
        let kr = KoszulRing::new(b).expect("valid ring");
        for k in 0..=b {
            let z = zeta_basis(&kr, k).expect("k <= b");
            for (i, (got, want)) in z.head_column().iter().zip(z.head_column_closed()).enumerate() {
                t.case(format!("b={b} k={k} xi{}", i + 1), got, &want);
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "contraction_unit");
    for b in 1..=3 {
        let (kr, c) = build_curved_koszul(b).expect("b <= 3");
        for m in 1..=b {
            let inverted = [kr.v_bar_vars()[m - 1]];
            match contract_if_unit(&c, &inverted) {
                Ok(h) => {
                    t.holds(format!("b={b} vb{m} generator"), h.generator == m);
                    t.holds(format!("b={b} vb{m} homotopy"), h.verify(&c));
                    t.holds(format!("b={b} vb{m} unperturbed"), h.verify_unperturbed(&c));
                    t.holds(format!("b={b} vb{m} series terminates"), h.series_terminates(&c, 3));
                }
                Err(e) => t.holds(format!("b={b} vb{m}: {e}"), false),
            }
        }
        t.holds(format!("b={b} nothing inverted"), matches!(contract_if_unit(&c, &[]), Err(KoszulError::NotUnit(_))));
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "effective_thickness");
    for b in 1..=3 {
        for m in 1..=b {
            match effective_thickness_koszul(b, m) {
                Ok((kr, c)) => {
                    let r = kr.ring();
                    let v = Poly::named(r, "v");
                    let want = &v * &complete(m as i64, &(kr.xp() - kr.x()));
                    t.case(format!("b={b} m={m} curvature"), c.curvature(), &want);
                    t.holds(format!("b={b} m={m} graded"), c.is_graded());
                    match contract_if_unit(&c, &[r.idx("v")]) {
                        Ok(h) => {
                            t.holds(format!("b={b} m={m} contracts along xi{m}"), h.generator == m);
                            t.holds(format!("b={b} m={m} homotopy"), h.verify(&c));
                            t.holds(format!("b={b} m={m} series terminates"), h.series_terminates(&c, 3));
                        }
                        Err(e) => t.holds(format!("b={b} m={m}: {e}"), false),
                    }
                }
                Err(e) => t.holds(format!("b={b} m={m}: {e}"), false),
            }
        }
    }
    t.holds("width beyond rank rejected", effective_thickness_koszul(2, 3).is_err());
    out.push(t.finish());

    out.extend(coefficient_checks());
    out
}

/// Symmetric-function identities governing the coefficients that appear when a crossing is
/// contracted.
pub fn coefficient_checks() -> Vec<Check> {
    let mut reg = Registry::builder();
    for p in ["x", "z"] {
        for i in 1..=4 {
            reg = reg.even(format!("{p}{i}"), Weight::qt(2, 0));
        }
    }
    let ring = reg.build().expect("distinct names");
    let mut out = Vec::new();

    let mut t = Tally::new(SUITE, "crossing_coefficients");
    for n in 1..=3 {
        for p in 1..=3 {
            let x2 = Alphabet::numbered(&ring, "X2", "x", 1, n).expect("letters exist");
            let x1p = Alphabet::numbered(&ring, "X1'", "z", 1, p).expect("letters exist");
            let d = &x2 - &x1p;
            for m in 1..=4 {
                let mut lhs = Poly::zero(&ring);
                for r in 1..=m {
                    let term = &elem((m - r) as i64, &x2) * &complete(r as i64, &d);
                    lhs.add_assign_ref(&term.negate_if(r % 2 == 0));
                }
                let rhs = &elem(m as i64, &x2) - &elem(m as i64, &x1p);
                t.case(format!("|X2|={n} |X1'|={p} m={m}"), &lhs, &rhs);
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "crossing_vanishing");
    for a in 1..=4 {
        let x2 = Alphabet::numbered(&ring, "X2", "x", 1, a).expect("letters exist");
        let letter = x2.slice("D", a - 1..a);
        let rest = x2.slice("X2-D", 0..a - 1);
        for m in 1..=a + 2 {
            let mut lhs = Poly::zero(&ring);
            for r in 1..=m {
                let term = &elem((m - r) as i64, &x2) * &complete(r as i64 - 1, &letter);
                lhs.add_assign_ref(&term.negate_if(r % 2 == 0));
            }
            t.case(format!("a={a} m={m}"), &lhs, &elem(m as i64 - 1, &rest));
            if m > a {
                t.holds(format!("a={a} m={m} vanishes"), lhs.is_zero());
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "top_degree_reduction");
    for a in 1..=4 {
        let x2 = Alphabet::numbered(&ring, "X2", "x", 1, a).expect("letters exist");
        let letter = x2.slice("D", a - 1..a);
        for r in 1..=3 {
            let mut rhs = Poly::zero(&ring);
            for i in 1..=a {
                let term = &hook_schur(r as i64 - 1, (a - i) as i64, &x2) * &complete(i as i64 - 1, &letter);
                rhs.add_assign_ref(&term.negate_if((a - i) % 2 == 1));
            }
            t.case(format!("a={a} r={r}"), &complete((a + r - 1) as i64, &letter), &rhs);
        }
    }
    out.push(t.finish());

    out
}
