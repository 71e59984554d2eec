use crate::coords::TwoStrand;
use crate::frobdem::antisymmetrize;
use crate::haiman::{enumerate_shapes, KeyShape, Shape};
use crate::polycore::{Poly, Weight};
use crate::report::{Check, Tally};
use crate::symfun::Partition;

use super::schur::{interpolates, interpolation_closed_form};
use super::{
    antisym_generators, block_determinant_check, diagonal_check, digon_complex, ideal_equality,
    interpolation_polynomial, key_generators, key_ideal, key_lemma_check, monomial_difference_check,
    reduced_generation, transparifer, unreduced_vs_reduced, ytov_check, DeformedRing, GradedIdeal, IdealWindow,
    ReductionLedger,
};

const KEY: &str = "keylemma";
const IDEALS: &str = "ideals";

fn z_ring(a: usize, b: usize) -> DeformedRing {
    DeformedRing::with_blocks(&[a, b], &[a, b], &[("z", Weight::qt(2, 0))]).expect("valid colors")
}

/// Laplace expansion of key alternants, the Sylvester extraction of parameters, and the
/// Schur-complement reduction of alternants.
pub fn keylemma_suite() -> Vec<Check> {
    let mut out = Vec::new();

    let mut t = Tally::new(KEY, "laplace_expansion");
    for a in 1..=3 {
        for b in 1..=a.min(2) {
            let ring = DeformedRing::new(&[a, b]).expect("valid colors");
            for key in KeyShape::all(a, b) {
                match key_lemma_check(&ring, key.l, &key.lambda) {
                    Ok(v) => t.holds(format!("{key}: sign {}", v.sign), v.holds()),
                    Err(e) => t.holds(format!("{key}: {e}"), false),
                }
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "laplace_small_values");
    let ring = DeformedRing::new(&[1, 1]).expect("valid colors");
    let v = key_lemma_check(&ring, 1, &Partition::empty()).expect("valid key");
    t.case("(1,1,1) key side", &v.key_side, &ring.y_bar(2));
    t.case("(1,1,1) laplace side", &v.laplace_side, &ring.y_bar(2));
    let ring = DeformedRing::new(&[2, 1]).expect("valid colors");
    let v = key_lemma_check(&ring, 0, &Partition::empty()).expect("valid key");
    let whole = &ring.x().vandermonde().div_exact(&ring.vandermonde()).expect("divisible");
    t.case("(2,1,0) key side", &v.key_side, whole);
    t.case("(2,1,0) laplace side", &v.laplace_side, whole);
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let ring = DeformedRing::new(&[a, b]).expect("valid colors");
        let v = key_lemma_check(&ring, b, &Partition::empty()).expect("valid key");
        let product = (a + 1..=a + b).fold(Poly::one(ring.ring()), |acc, j| &acc * &ring.y_bar(j));
        t.case(format!("({a},{b}) maximal key"), &v.key_side, &product);
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "ytov");
    for k in 1..=3 {
        for b in k..=3 {
            for a in 0..=2 {
                for r in 1..=k {
                    match ytov_check(a, b, k, r) {
                        Ok((short, long)) => {
                            t.holds(format!("a={a} b={b} k={k} r={r} in k parameters"), short);
                            t.holds(format!("a={a} b={b} k={k} r={r} in b parameters"), long);
                        }
                        Err(e) => t.holds(format!("a={a} b={b} k={k} r={r}: {e}"), false),
                    }
                }
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "block_determinant");
    for (seed, n1, n2) in [(11, 2, 2), (12, 1, 3), (13, 3, 2), (14, 2, 3)] {
        let (checked, ok) = block_determinant_check(seed, 40, n1, n2);
        t.holds(format!("{n1}+{n2} blocks, {checked} matrices"), ok && checked > 20);
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "interpolation");
    for a in 1..=3 {
        let ring = z_ring(a, 1);
        let z = Poly::named(ring.ring(), "z");
        for r in 0..=4 {
            for s in 0..=2 {
                match interpolation_polynomial(&ring, r, s) {
                    Ok(m) => {
                        t.holds(format!("a={a} r={r} s={s} interpolates"), interpolates(&ring, &m, r, s));
                        if a == 1 {
                            let c = &ring.x().var(0).pow(r) * &ring.y_image(1).pow(s);
                            t.case(format!("a=1 r={r} s={s} constant"), &m, &c);
                        }
                        if s == 0 && r >= a as u32 {
                            t.case(
                                format!("a={a} r={r} closed form"),
                                &m,
                                &interpolation_closed_form(&ring, r).expect("has z"),
                            );
                        }
                    }
                    Err(e) => t.holds(format!("a={a} r={r} s={s}: {e}"), false),
                }
            }
        }
        let y_interp =
            (1..=a).fold(Poly::zero(ring.ring()), |acc, k| &acc + &(&z.pow(k as u32 - 1) * &ring.param(0, k)));
        t.case(format!("a={a} y"), &interpolation_polynomial(&ring, 0, 1).expect("has z"), &y_interp);
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "monomial_difference");
    for a in 1..=3 {
        for b in 1..=a {
            let ring = z_ring(a, b);
            for r in 0..=2 {
                for j in a + 1..=a + b {
                    match monomial_difference_check(&ring, r, j) {
                        Ok(ok) => t.holds(format!("a={a} b={b} r={r} j={j}"), ok),
                        Err(e) => t.holds(format!("a={a} b={b} r={r} j={j}: {e}"), false),
                    }
                }
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(KEY, "unreduced_vs_reduced");
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        let ring = z_ring(a, b);
        for l in 0..=b {
            for s in enumerate_shapes(l, a, b) {
                match unreduced_vs_reduced(&ring, &s) {
                    Ok(c) => {
                        t.holds(format!("({a},{b}) {s} block formula"), c.block_formula);
                        t.holds(format!("({a},{b}) {s} reassembles"), c.reassembles(&ring).unwrap_or(false));
                        t.holds(format!("({a},{b}) {s} left coefficients"), c.coefficients_left_only(&ring));
                        t.holds(format!("({a},{b}) {s} lower levels"), c.terms.iter().all(|(r, _)| r.row(1).len() < l));
                        if l == 0 {
                            t.holds(
                                format!("({a},{b}) {s} no correction"),
                                c.difference.is_zero() && c.terms.is_empty(),
                            );
                        }
                    }
                    Err(e) => t.holds(format!("({a},{b}) {s}: {e}"), false),
                }
            }
        }
        match ReductionLedger::build(&ring) {
            Ok(ledger) => {
                t.holds(format!("({a},{b}) unitriangular"), ledger.is_unitriangular());
                t.holds(format!("({a},{b}) inverse"), ledger.inverse_holds(&ring).unwrap_or(false));
            }
            Err(e) => t.holds(format!("({a},{b}) ledger: {e}"), false),
        }
    }
    let ring = z_ring(1, 1);
    let plain = unreduced_vs_reduced(&ring, &Shape::new([(0, 0), (0, 1)]).expect("distinct")).expect("block shape");
    t.holds("(1,1) {1,y} needs no correction", plain.difference.is_zero() && plain.terms.is_empty());
    let c = unreduced_vs_reduced(&ring, &Shape::new([(0, 0), (1, 1)]).expect("distinct")).expect("block shape");
    let base = Shape::new([(0, 0), (1, 0)]).expect("distinct");
    t.holds("(1,1) {1,xy} corrected by vL1 times {1,x}", c.terms == vec![(base, ring.param(0, 1))]);
    t.case("(1,1) {1,xy} difference", &c.difference, &Poly::parse(ring.ring(), "x2*vL1 - x1*vL1").unwrap());
    out.push(t.finish());

    out
}

/// Generators, membership, Hilbert series, the reduction, the alternant ideal of the
/// diagonal, the digon complex and transparifers.
pub fn ideal_suite() -> Vec<Check> {
    let mut out = Vec::new();

    let mut t = Tally::new(IDEALS, "reduction");
    for (a, b) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (1, 2)] {
        let ring = DeformedRing::new(&[a, b]).expect("valid colors");
        let ts = TwoStrand::new(a, b).expect("valid frame");
        let pi = ring.reduction().expect("two colors");
        for j in 1..=b {
            let other = ts.on_identity().apply(&ts.reduced_image(j));
            t.case(
                format!("({a},{b}) vb{j} matches the two-strand frame"),
                &ring.reduced_param(j).transfer(ts.ring()).expect("shared names"),
                &other,
            );
        }
        for j in 1..=a + b {
            let y = ring.y_image(j);
            t.case(format!("({a},{b}) idempotent on y{j}"), &pi.apply(&pi.apply(&y)), &pi.apply(&y));
            if j <= a {
                t.holds(format!("({a},{b}) kills y{j}"), pi.apply(&y).is_zero());
            } else {
                t.case(format!("({a},{b}) y{j} to ybar"), &pi.apply(&y), &ring.y_bar(j));
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "generators");
    let ring = DeformedRing::new(&[1, 1]).expect("valid colors");
    let r = ring.ring();
    let gens = antisym_generators(&ring, IdealWindow::new(2, 1)).expect("divisible");
    let x_shape = Shape::new([(1, 0), (0, 0)]).expect("distinct");
    let y_shape = Shape::new([(0, 0), (0, 1)]).expect("distinct");
    let find = |s: &Shape| gens.iter().find(|(g, _)| g == s).map(|(_, p)| p.clone());
    t.case("(1,1) x1", &find(&x_shape).unwrap_or_else(|| Poly::zero(r)), &Poly::parse(r, "x1 - x2").unwrap());
    let alt_y = ring.expand(&antisymmetrize(&[ring.x(), ring.y()], &Poly::named(r, "y1")).expect("same sizes"));
    t.case("(1,1) y1 antisymmetrized", &alt_y, &Poly::parse(r, "vL1 - vR1").unwrap());
    t.case("(1,1) y1 generator", &find(&y_shape).unwrap_or_else(|| Poly::zero(r)), &-&alt_y);
    let sym = &Poly::named(r, "x1") * &Poly::named(r, "x2");
    t.holds(
        "symmetric monomial alternates to zero",
        antisymmetrize(&[ring.x(), ring.y()], &sym).expect("same sizes").is_zero(),
    );
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        let ring = DeformedRing::new(&[a, b]).expect("valid colors");
        let window = IdealWindow::new(2 * (a + b) as i32, 1);
        match antisym_generators(&ring, window) {
            Ok(gens) => {
                t.holds(
                    format!("({a},{b}) {} alternants invariant", gens.len()),
                    gens.iter().all(|(_, g)| ring.is_invariant(g)),
                );
                for (s, g) in gens.iter().take(6) {
                    let letters: Vec<Poly> = s
                        .cells()
                        .iter()
                        .enumerate()
                        .map(|(k, &(i, j))| &ring.x().var(k).pow(i) * &ring.y().var(k).pow(j))
                        .collect();
                    let mono = letters.iter().fold(Poly::one(ring.ring()), |acc, m| &acc * m);
                    let alt = ring
                        .quotient(&antisymmetrize(&[ring.x(), ring.y()], &mono).expect("same sizes"))
                        .expect("divisible");
                    t.case(format!("({a},{b}) {s} agrees with antisymmetrization"), &alt, g);
                }
            }
            Err(e) => t.holds(format!("({a},{b}): {e}"), false),
        }
    }
    for (a, b) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3)] {
        let ring = DeformedRing::new(&[a, b]).expect("valid colors");
        match key_generators(&ring) {
            Ok(keys) => t.case(format!("({a},{b}) key count"), &keys.len(), &(1usize << b)),
            Err(e) => t.holds(format!("({a},{b}): {e}"), false),
        }
    }
    let ring = DeformedRing::new(&[1, 1]).expect("valid colors");
    let keys = key_generators(&ring).expect("a >= b");
    t.case("(1,1) first key", &keys[0].1, &Poly::parse(ring.ring(), "x1 - x2").unwrap());
    t.case("(1,1) second key", &keys[1].1, &Poly::parse(ring.ring(), "vR1 - vL1").unwrap());
    t.holds("a < b rejected", key_generators(&DeformedRing::new(&[1, 2]).expect("valid colors")).is_err());
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "membership");
    let ring = DeformedRing::new(&[1, 1]).expect("valid colors");
    let r = ring.ring();
    let p = |s: &str| Poly::parse(r, s).unwrap();
    let ideal = GradedIdeal::new(&ring, vec![p("x1 - x2"), p("vL1 - vR1")], IdealWindow::new(6, 2)).expect("invariant");
    let target = p("x1*vL1 - x2*vR1");
    match ideal.membership(&target) {
        Ok(m) => {
            t.holds("x1 y1 - x2 y2 member", m.member);
            t.case("certificate reassembles", &ideal.reassemble(&m.certificate), &target);
            t.case("hand certificate", &ideal.reassemble(&[p("vL1"), p("x2")]), &target);
        }
        Err(e) => t.holds(format!("membership: {e}"), false),
    }
    t.holds("1 is not a member", !ideal.membership(&Poly::one(r)).map(|m| m.member).unwrap_or(true));
    t.holds("outside window rejected", ideal.membership(&p("x1^5")).is_err());
    let zero = GradedIdeal::new(&ring, vec![], IdealWindow::new(6, 2)).expect("empty");
    t.holds("zero ideal has zero series", zero.hilbert().is_empty());
    let unit = GradedIdeal::new(&ring, vec![Poly::one(r)], IdealWindow::new(6, 2)).expect("unit");
    let window = IdealWindow::new(6, 2);
    let full: Vec<(Weight, usize)> =
        ring.window_weights(window).into_iter().map(|w| (w, ring.dim(w))).filter(|(_, d)| *d > 0).collect();
    t.holds("unit ideal has the ring's series", unit.hilbert() == full);
    let keys = key_ideal(&ring, IdealWindow::default_for(1, 1)).expect("a >= b");
    let series = keys.hilbert();
    t.holds("(1,1) nothing in weight 1", keys.dim(Weight::ZERO) == Ok(0));
    t.case("(1,1) dimension at q^2", &keys.dim(Weight::qt(2, 0)).unwrap_or(0), &1);
    t.holds("(1,1) lowest t^0 term at q^2", series.iter().find(|(w, _)| w.t == 0).map(|(w, _)| w.q) == Some(2));
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "alternants_in_key_ideal");
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        match ideal_equality(a, b, IdealWindow::default_for(a, b)) {
            Ok(rep) => {
                t.holds(format!("({a},{b}) {}/{} members, {:?}", rep.members, rep.checked, rep.first_failure), rep.ok())
            }
            Err(e) => t.holds(format!("({a},{b}): {e}"), false),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "reduced_generation");
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        let window = IdealWindow::new(2 * (a + b) as i32, 2);
        t.holds(format!("({a},{b})"), reduced_generation(a, b, window).unwrap_or(false));
    }
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "diagonal_ideal");
    for (n, d) in [(2, 5), (3, 5)] {
        match diagonal_check(n, d) {
            Ok(rep) => t.holds(format!("N={n} up to degree {d}"), rep.ok()),
            Err(e) => t.holds(format!("N={n}: {e}"), false),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "digon_complex");
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        match digon_complex(a, b, IdealWindow::digon_for(a, b)).and_then(|d| d.verify()) {
            Ok(rep) => t.holds(format!("({a},{b}) {} pieces {:?}", rep.pieces, rep.failures.first()), rep.ok()),
            Err(e) => t.holds(format!("({a},{b}): {e}"), false),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(IDEALS, "transparifer");
    for (bi, bj) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (2, 3), (3, 3)] {
        match transparifer(bi, bj) {
            Ok(d) => {
                t.holds(format!("({bi},{bj}) linear specialization, sign {}", d.linear_sign()), d.linear_sign() != 0);
                t.case(format!("({bi},{bj}) swap sign"), &d.swap_sign(), &if bi * bj % 2 == 1 { -1 } else { 1 });
                let weight = Weight::qt(-2 * d.b() as i32, 2 * d.b() as i32);
                t.holds(format!("({bi},{bj}) weight {weight}"), d.value.homogeneous_weight() == Some(weight));
            }
            Err(e) => t.holds(format!("({bi},{bj}): {e}"), false),
        }
    }
    out.push(t.finish());

    out
}
