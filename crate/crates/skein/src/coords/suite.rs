use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::frobdem::random_poly;
use crate::polycore::{Poly, SubstitutionMap};
use crate::report::{Check, Tally};
use crate::symfun::Alphabet;

use super::{vanishes_under, Bundling, CurvatureElement, Family, Strand, Tower, TwoStrand};

const SUITE: &str = "coords";

fn agrees_on(t: &mut Tally, label: &str, f: &SubstitutionMap, g: &SubstitutionMap, vars: &[usize]) {
    for &v in vars {
        t.case(format!("{label}, {}", f.ring().name(v)), &f.image(v), &g.image(v));
    }
}

fn fixes(t: &mut Tally, label: &str, f: &SubstitutionMap, vars: &[usize]) {
    let id = SubstitutionMap::identity(f.ring());
    agrees_on(t, label, f, &id, vars);
}

/// Parameter substitutions, their inverses, and the curvature elements they carry into one another.
pub fn suite() -> Vec<Check> {
    let mut out = Vec::new();
    let strands: Vec<Strand> = (1..=3).map(|a| Strand::new(a).expect("positive thickness")).collect();

    let mut t = Tally::new(SUITE, "u_v_roundtrip");
    for s in &strands {
        let a = s.thickness();
        fixes(&mut t, &format!("a={a} u"), &s.u_to_v().then(&s.v_to_u()), &s.u_vars());
        fixes(&mut t, &format!("a={a} v"), &s.v_to_u().then(&s.u_to_v()), &s.v_vars());
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "u_v_small_values");
    let s1 = &strands[0];
    t.case("a=1 v1", &s1.v_to_u().image(s1.ring().idx("v1")), &s1.u(1));
    let s2 = &strands[1];
    let r2 = s2.ring();
    t.case("a=2 v1", &s2.v_to_u().image(r2.idx("v1")), &Poly::parse(r2, "u1 + x1*u2 + x2*u2").unwrap());
    t.case("a=2 v2", &s2.v_to_u().image(r2.idx("v2")), &-s2.u(2));
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "u_v_curvature");
    for s in &strands {
        let a = s.thickness();
        t.case(format!("a={a} u->v"), &s.u_to_v().apply(&s.curvature_u()), &s.curvature_v());
        t.case(format!("a={a} v->u"), &s.v_to_u().apply(&s.curvature_v()), &s.curvature_u());
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "thin_curvature");
    for s in &strands {
        let a = s.thickness();
        t.case(format!("a={a} y->v"), &s.y_to_v().apply(&s.curvature_y()), &s.curvature_v());
        t.case(format!("a={a} y->u"), &s.y_to_u().apply(&s.curvature_y()), &s.curvature_u());
        agrees_on(&mut t, &format!("a={a} y->u->v"), &s.y_to_u().then(&s.u_to_v()), &s.y_to_v(), &s.y_vars());
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "two_letter_interpolation");
    let interp = s2.y_from_v();
    let yv = |i: usize| interp.apply(&s2.y(i));
    let dx = Poly::parse(r2, "x1 - x2").unwrap();
    t.case("y1 - y2", &(&yv(1) - &yv(2)), &(&dx * &s2.v(2)));
    let x = |i: usize| s2.x().var(i - 1);
    t.case("x1 y2 - x2 y1", &(&(&x(1) * &yv(2)) - &(&x(2) * &yv(1))), &(&dx * &s2.v(1)));
    let m1 =
        crate::haiman::hdet(&[(0, 0), (0, 1)], s2.x(), &Alphabet::from_indices(r2, "Y", s2.y_vars()).unwrap()).unwrap();
    t.case("v2 = -hdet{1,y}/Delta", &interp.apply(&-m1), &(&dx * &s2.v(2)));
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "interpolation_recovery");
    for s in &strands {
        let a = s.thickness();
        let interp = s.y_from_v();
        let delta = s.x().vandermonde();
        for r in 1..=a {
            let num = s.recovery_numerator(r).expect("r in range");
            t.case(format!("a={a} v{r}"), &interp.apply(&num), &(&delta * &s.v(r)));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "weights_preserved");
    for s in &strands {
        let a = s.thickness();
        for (name, m) in [
            ("u->v", s.u_to_v()),
            ("v->u", s.v_to_u()),
            ("y->v", s.y_to_v()),
            ("y->u", s.y_to_u()),
            ("y<-v", s.y_from_v()),
            ("v->vd", s.v_to_vdot()),
            ("vd->v", s.vdot_to_v()),
        ] {
            t.holds(format!("a={a} {name}"), m.check_weights().is_ok());
        }
        for c in [s.curvature_u(), s.curvature_v(), s.curvature_y(), s.curvature_vdot()] {
            t.holds(format!("a={a} curvature weight"), CurvatureElement::new(Family::V, c).has_curvature_weight());
        }
    }
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let two = TwoStrand::new(a, b).expect("positive");
        for m in [two.unreduce(), two.specialize(), two.reduction_pi()] {
            t.holds(format!("({a},{b}) reduction maps"), m.check_weights().is_ok());
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "power_sum_coordinates");
    for s in &strands {
        let a = s.thickness();
        fixes(&mut t, &format!("a={a} v"), &s.v_to_vdot().then(&s.vdot_to_v()), &s.v_vars());
        fixes(&mut t, &format!("a={a} vd"), &s.vdot_to_v().then(&s.v_to_vdot()), &s.vdot_vars());
        t.case(format!("a={a} curvature"), &s.vdot_to_v().apply(&s.curvature_vdot()), &s.curvature_v());
        let specs = s.permutation_specializations();
        for k in 1..=a {
            let diff = &s.vdot_to_v().image(s.ring().idx(&format!("vd{k}"))) - &s.v(k);
            t.holds(format!("a={a} vd{k} = v{k} mod N"), vanishes_under(&specs, &diff));
        }
    }
    let want = Poly::parse(r2, "v1 + 1/2*x1*v2 + 1/2*x2*v2 - 1/2*xp1*v2 - 1/2*xp2*v2").unwrap();
    t.case("a=2 vd1", &s2.vdot_to_v().image(r2.idx("vd1")), &want);
    t.case("a=1 vd1", &s1.vdot_to_v().image(s1.ring().idx("vd1")), &s1.v(1));
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "sliding");
    for s in &strands {
        let a = s.thickness();
        let right = s.v_to_u_over(s.xp());
        let left = s.v_to_u();
        for k in 1..=a {
            t.case(format!("a={a} k={k}"), &right.apply(&s.v(k)), &left.apply(&s.slid(k)));
        }
    }
    out.push(t.finish());

    out.extend(stability_checks());
    out.extend(reduction_checks());
    out.extend(bundling_checks());
    out
}

fn stability_checks() -> Vec<Check> {
    let tower = Tower::new(3).expect("valid");
    let ring = tower.ring();
    let mut fix_y = Tally::new(SUITE, "stability_fixes_y");
    let mut zs = Tally::new(SUITE, "stability_curvature");
    let mut trans = Tally::new(SUITE, "stability_transitive");
    for c in 1..=3 {
        for d in c..=3 {
            let phi = tower.stability_phi(c, d).expect("c <= d");
            for i in 1..=c {
                fix_y.case(format!("c={c} d={d} y{i}"), &phi.apply(&tower.y(c, i)), &tower.y(d, i));
            }
            for s in (1..=c).powerset() {
                zs.case(format!("c={c} d={d} S={s:?}"), &phi.apply(&tower.z(c, &s)), &tower.z(d, &s));
            }
            if c == d {
                fixes(&mut trans, &format!("c=d={c}"), &phi, &tower.level_vars(c));
            }
            for e in d..=3 {
                let composite = phi.then(&tower.stability_phi(d, e).expect("d <= e"));
                let direct = tower.stability_phi(c, e).expect("c <= e");
                agrees_on(&mut trans, &format!("{c}<={d}<={e}"), &composite, &direct, &tower.level_vars(c));
            }
        }
    }
    let phi = tower.stability_phi(1, 2).expect("valid");
    fix_y.case("c=1 d=2 v1", &phi.image(ring.idx("v1_1")), &Poly::parse(ring, "v2_1 + x1*v2_2").unwrap());
    fix_y.holds("c > d rejected", tower.stability_phi(2, 1).is_err());
    vec![fix_y.finish(), zs.finish(), trans.finish()]
}

fn reduction_checks() -> Vec<Check> {
    let mut idem = Tally::new(SUITE, "reduction_idempotent");
    let mut ys = Tally::new(SUITE, "reduction_on_y");
    let mut curv = Tally::new(SUITE, "reduction_curvature_by_specialization");
    let mut cert = Tally::new(SUITE, "reduction_curvature_certificate");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for a in 1..=3 {
        for b in 1..=2 {
            let two = TwoStrand::new(a, b).expect("positive");
            let ring = two.ring();
            let pi = two.reduction_pi();
            let all: Vec<usize> = (0..ring.len()).collect();
            agrees_on(&mut idem, &format!("({a},{b}) generators"), &pi.then(&pi), &pi, &all);
            let params: Vec<usize> = two.left_vars().into_iter().chain(two.right_vars()).collect();
            agrees_on(
                &mut idem,
                &format!("({a},{b}) factorization"),
                &two.specialize().then(&two.unreduce()),
                &pi,
                &params,
            );
            let letters = Alphabet::from_indices(
                ring,
                "P",
                two.x().vars().iter().chain(two.xp().vars()).copied().chain(params).collect(),
            )
            .unwrap();
            for _ in 0..3 {
                let f = random_poly(&letters, &mut rng, 4, 2);
                idem.case(format!("({a},{b}) random"), &pi.apply(&pi.apply(&f)), &pi.apply(&f));
            }

            let on_e = two.on_identity();
            for j in 1..=b {
                let got = on_e.apply(&pi.image(ring.idx(&format!("vR{j}"))));
                ys.case(format!("({a},{b}) E: vR{j}"), &got, &(&two.v_right(j) - &on_e.apply(&two.v_left_at_b(j))));
            }
            for i in 1..=a + b {
                let want = if i <= a { Poly::zero(ring) } else { two.unreduce().apply(&two.y_bar(i)) };
                ys.case(format!("({a},{b}) y{i}"), &pi.apply(&two.y(i)), &want);
            }

            let diff = &two.curvature() - &two.unreduce().apply(&two.reduced_curvature());
            curv.holds(format!("({a},{b})"), vanishes_under(&two.permutation_specializations(), &diff));
            let witness = crate::polycore::sum(
                ring,
                &two.curvature_certificate()
                    .iter()
                    .zip(two.symmetric_relations())
                    .map(|(c, g)| c * &g)
                    .collect::<Vec<_>>(),
            );
            cert.case(format!("({a},{b})"), &witness, &diff);
        }
    }
    vec![idem.finish(), ys.finish(), curv.finish(), cert.finish()]
}

fn bundling_checks() -> Vec<Check> {
    let mut ident = Tally::new(SUITE, "bundling_identity_permutation");
    let mut curv = Tally::new(SUITE, "bundling_curvature");
    let mut knot = Tally::new(SUITE, "bundling_closed_cycle_vanishes");
    for colors in [vec![1, 2], vec![2, 2, 1]] {
        let omega: Vec<usize> = (0..colors.len()).collect();
        let bun = Bundling::new(&colors, &omega).expect("valid");
        for (i, &c) in colors.iter().enumerate() {
            for k in 1..=c {
                ident.case(format!("{colors:?} v{}_{k}", i + 1), &bun.bundle().apply(&bun.v(i, k)), &bun.w(i, k));
            }
        }
    }
    let cases: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![1, 1], vec![1, 0]),
        (vec![2, 2], vec![1, 0]),
        (vec![1, 1, 1], vec![1, 2, 0]),
        (vec![2, 1, 2], vec![2, 1, 0]),
    ];
    for (colors, omega) in cases {
        let bun = Bundling::new(&colors, &omega).expect("valid");
        let label = format!("{colors:?} {omega:?}");
        curv.case(&label, &bun.bundle().apply(&bun.strand_curvature()), &bun.bundled_curvature());
        if bun.cycles().len() == 1 {
            knot.holds(&label, vanishes_under(&bun.closure_specializations(), &bun.bundled_curvature()));
        }
    }
    curv.holds("unbalanced rejected", Bundling::new(&[1, 2], &[1, 0]).is_err());
    vec![ident.finish(), curv.finish(), knot.finish()]
}
