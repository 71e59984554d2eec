use crate::polycore::{q_int, Poly, Registry, Ring, Weight};
use crate::report::{Check, Tally};

use super::{
    complete, complete_series, elem, elem_series, h_reduce, hook_schur, monomial_reduction, power, schur,
    schur_virtual, Alphabet, Partition, VirtualAlphabet,
};

const SUITE: &str = "symfun";

/// Ring with `x1..x4` and `xp1..xp4`, all of weight `q^2`.
pub fn test_ring(n: usize) -> Ring {
    let mut b = Registry::builder();
    for p in ["x", "xp"] {
        for i in 1..=n {
            b = b.even(format!("{p}{i}"), Weight::qt(2, 0));
        }
    }
    b.build().expect("distinct names")
}

fn alphabets(ring: &Ring, n: usize, m: usize) -> (Alphabet, Alphabet) {
    let x = Alphabet::numbered(ring, "X", "x", 1, n).unwrap();
    let xp = Alphabet::numbered(ring, "X'", "xp", 1, m).unwrap();
    (x, xp)
}

fn signed(p: Poly, neg: bool) -> Poly {
    p.negate_if(neg)
}

/// Every classical identity among e, h, p and hook Schur functions, on alphabets of size at
/// most four.
pub fn suite() -> Vec<Check> {
    let ring = test_ring(4);
    let mut out = Vec::new();

    let mut t = Tally::new(SUITE, "h_e_orthogonality");
    for n in 0..=4 {
        let (x, _) = alphabets(&ring, n, 0);
        let h = complete_series(&x, 6);
        let e = elem_series(&x, 6);
        for k in 0..=6 {
            let mut s = Poly::zero(&ring);
            for i in 0..=k {
                s.add_assign_ref(&signed(&h[i] * &e[k - i], (k - i) % 2 == 1));
            }
            let want = if k == 0 { Poly::one(&ring) } else { Poly::zero(&ring) };
            t.case(format!("|X|={n}, k={k}"), &s, &want);
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "h_of_difference");
    for n in 0..=3 {
        for m in 0..=3 {
            let (x, xp) = alphabets(&ring, n, m);
            let d = &x - &xp;
            let hx = complete_series(&x, 4);
            let ep = elem_series(&xp, 4);
            for k in 0..=4 {
                let mut s = Poly::zero(&ring);
                for j in 0..=k {
                    s.add_assign_ref(&signed(&hx[k - j] * &ep[j], j % 2 == 1));
                }
                t.case(format!("|X|={n}, |X'|={m}, k={k}"), &complete(k as i64, &d), &s);
            }
        }
    }
    out.push(t.finish());

    let names =
        ["p_from_h_and_e", "h_from_e_differences", "e_differences_from_h", "h_from_p", "e_of_negated_difference"];
    let mut tallies: Vec<Tally> = names.iter().map(|n| Tally::new(SUITE, *n)).collect();
    for n in 1..=3 {
        for m in 1..=3 {
            let (x, xp) = alphabets(&ring, n, m);
            let d = &x - &xp;
            let nd = &xp - &x;
            let hd = complete_series(&d, 4);
            let ed = elem_series(&d, 4);
            let hx = complete_series(&x, 4);
            let ex = elem_series(&x, 4);
            let exp = elem_series(&xp, 4);
            let hnd = complete_series(&nd, 4);
            let pd: Vec<Poly> = (1..=4).map(|k| power(k, &d).unwrap()).collect();
            for k in 1..=4usize {
                let label = format!("|X|={n}, |X'|={m}, k={k}");
                let mut s = Poly::zero(&ring);
                for j in 1..=k {
                    s.add_assign_ref(&signed((&hd[j] * &ed[k - j]).scale_int(j as i64), (k - j) % 2 == 1));
                }
                tallies[0].case(&label, &pd[k - 1], &s);

                let mut s = Poly::zero(&ring);
                for j in 1..=k {
                    s.add_assign_ref(&signed(&hx[k - j] * &(&ex[j] - &exp[j]), (j - 1) % 2 == 1));
                }
                tallies[1].case(&label, &hd[k], &s);

                let mut s = Poly::zero(&ring);
                for j in 1..=k {
                    s.add_assign_ref(&signed(&ex[k - j] * &hd[j], (j - 1) % 2 == 1));
                }
                tallies[2].case(&label, &(&ex[k] - &exp[k]), &s);

                let mut s = Poly::zero(&ring);
                for j in 1..=k {
                    s.add_assign_ref(&(&hd[k - j] * &pd[j - 1]));
                }
                tallies[3].case(&label, &hd[k].scale_int(k as i64), &s);

                let mut s = Poly::zero(&ring);
                for j in 1..=k {
                    s.sub_assign_ref(&(&hnd[k - j] * &hd[j]));
                }
                tallies[4].case(&label, &signed(ed[k].clone(), k % 2 == 1), &hnd[k]);
                tallies[4].case(&label, &hnd[k], &s);
            }
        }
    }
    out.extend(tallies.into_iter().map(Tally::finish));

    let mut defs = Tally::new(SUITE, "hook_boundary_values");
    let mut genfun = Tally::new(SUITE, "hook_generating_function");
    let mut rewrite = Tally::new(SUITE, "hook_second_rewrite");
    let mut bialt = Tally::new(SUITE, "hook_matches_bialternant");
    let mut invol = Tally::new(SUITE, "hook_involution");
    for n in 1..=4 {
        let (x, _) = alphabets(&ring, n, 0);
        let h = complete_series(&x, 7);
        let e = elem_series(&x, 7);
        let hook = |i: i64, j: i64| hook_schur(i, j, &x);
        for i in 1..=5 {
            defs.case(format!("|X|={n}, h_{i}"), &hook(i - 1, 0), &h[i as usize]);
            defs.case(format!("|X|={n}, e_{i}"), &hook(0, i - 1), &e[i as usize]);
        }
        // coefficient of t^i u^j on both sides of (t+u) S(t,u) = H(t) E(u) - 1
        for i in 0..=5i64 {
            for j in 0..=(5 - i) {
                let lhs = &hook(i - 1, j) + &hook(i, j - 1);
                let mut rhs = &h[i as usize] * &e[j as usize];
                if i == 0 && j == 0 {
                    rhs = &rhs - &Poly::one(&ring);
                }
                genfun.case(format!("|X|={n}, t^{i} u^{j}"), &lhs, &rhs);
            }
        }
        for i in 0..=3usize {
            for j in 0..=(4 - i) {
                let mut s = Poly::zero(&ring);
                for l in 0..=i {
                    s.add_assign_ref(&signed(&h[i - l] * &e[j + l + 1], (l + j) % 2 == 1));
                }
                let lhs = signed(hook(i as i64, j as i64), j % 2 == 1);
                rewrite.case(format!("|X|={n}, ({i}|{j})"), &lhs, &s);
                if n <= 3 {
                    let sch = schur(&Partition::hook(i as u32, j as u32), &x).unwrap();
                    bialt.case(format!("|X|={n}, ({i}|{j})"), &hook(i as i64, j as i64), &sch);
                }
                // h_k <-> e_k applied to the rewrite expression of s_(i|j) gives s_(j|i)
                let mut swapped = Poly::zero(&ring);
                for l in 0..=j {
                    swapped.add_assign_ref(&signed(&e[i + (j - l) + 1] * &h[l], (l + j) % 2 == 1));
                }
                invol.case(format!("|X|={n}, ({i}|{j})"), &swapped, &hook(j as i64, i as i64));
            }
        }
    }
    out.extend([defs.finish(), genfun.finish(), rewrite.finish(), bialt.finish(), invol.finish()]);

    let mut t = Tally::new(SUITE, "jacobi_trudi_matches_bialternant");
    for n in 1..=3 {
        let (x, _) = alphabets(&ring, n, 0);
        for lambda in Partition::in_box(3, 3) {
            t.case(format!("|X|={n}, {lambda}"), &schur_virtual(&lambda, &x), &schur(&lambda, &x).unwrap());
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "h_reduction");
    for n in 1..=3 {
        for m in 0..=2 {
            let (x, y) = alphabets(&ring, n, m);
            for c in m..=3 {
                for r in 1..=2 {
                    let ok = h_reduce(&x, &y, c, r).is_ok();
                    t.holds(format!("|X|={n}, |Y|={m}, c={c}, r={r}"), ok);
                }
            }
        }
    }
    let (x, y) = alphabets(&ring, 2, 2);
    let xv = &x.slice("X1", 0..1).virt() - &x.slice("X2", 1..2).virt();
    t.holds("virtual X", h_reduce(&xv, &y, 2, 2).is_ok());
    t.holds("|Y| > c rejected", h_reduce(&x, &y, 1, 1).is_err());
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "monomial_reduction");
    for n in 1..=4 {
        let (x, _) = alphabets(&ring, n, 0);
        for i in 0..n {
            for m in n..=n + 2 {
                t.case(format!("a={n}, i={}, m={m}", i + 1), &monomial_reduction(&x, i, m), &x.var(i).pow(m as u32));
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "difference_reduction");
    for c in 1..=3 {
        let (x, xp) = alphabets(&ring, c, c);
        let d = &x - &xp;
        let hd = complete_series(&d, c + 2);
        for r in 1..=2usize {
            t.case(
                format!("c={c}, r={r}, missing summand"),
                &hook_schur(r as i64 - 1, c as i64, &x),
                &Poly::zero(&ring),
            );
            let mut s = Poly::zero(&ring);
            for i in 1..=c {
                s.add_assign_ref(&signed(&hook_schur(r as i64 - 1, (c - i) as i64, &x) * &hd[i], (c - i) % 2 == 1));
            }
            t.case(format!("c={c}, r={r}"), &hd[c + r], &s);
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "cardinality_vanishing");
    for n in 1..=4 {
        let (x, _) = alphabets(&ring, n, 0);
        for m in n + 1..=n + 2 {
            t.case(format!("e_{m} of {n} letters"), &elem(m as i64, &x), &Poly::zero(&ring));
        }
        for a in 0..n {
            let d = x.slice("D", a..a + 1);
            let diff = &x - &d;
            for m in 1..=n + 1 {
                t.case(
                    format!("e_{} of X minus {{x_{}}}", m - 1, a + 1),
                    &elem(m as i64 - 1, &diff),
                    &elem(m as i64 - 1, &x.without(a)),
                );
            }
            t.case(format!("e_{n} of X minus {{x_{}}}", a + 1), &elem(n as i64, &diff), &Poly::zero(&ring));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "power_sum_of_difference");
    let (x, xp) = alphabets(&ring, 3, 2);
    let p1 = power(1, &x - &xp).unwrap();
    t.case("p_1", &p1, &(&elem(1, &x) - &elem(1, &xp)));
    #[allow(clippy::eq_op)]
    let v: VirtualAlphabet = &x - &x;
    for k in 1..=4 {
        t.case(format!("h_{k}(X-X)"), &complete(k, &v), &Poly::zero(&ring));
    }
    t.case("p_1 coefficient", &power(1, x.virt().scale(3)).unwrap(), &elem(1, &x).scale(&q_int(3)));
    out.push(t.finish());

    out
}
