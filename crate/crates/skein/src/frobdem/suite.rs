use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polycore::{q_int, Mono, Poly, Registry, Ring, SubstitutionMap, Weight};
use crate::report::{Check, Tally};
use crate::symfun::{elem, schur, Alphabet, Partition};

use super::{
    antisymmetrize, demazure, demazure_word, longest_trace, longest_word, sylvester, sylvester_with_word,
    vandermonde_quotient, FrobeniusData,
};

const SUITE: &str = "frobdem";

/// `x1..xn` of weight `q^2`, `y1..yn` of weight `q^-2 t^2`, and `v_L_k`, `v_R_k` of weight
/// `q^-2k t^2`.
pub fn xy_ring(n: usize) -> Ring {
    let mut b = Registry::builder();
    for i in 1..=n {
        b = b.even(format!("x{i}"), Weight::qt(2, 0));
    }
    for i in 1..=n {
        b = b.even(format!("y{i}"), Weight::qt(-2, 2));
    }
    for side in ["L", "R"] {
        for k in 1..=n {
            b = b.even(format!("v_{side}_{k}"), Weight::qt(-2 * k as i32, 2));
        }
    }
    b.build().expect("distinct names")
}

pub fn random_poly(x: &Alphabet, rng: &mut ChaCha8Rng, terms: usize, max_exp: u32) -> Poly {
    let mut out = Poly::zero(x.ring());
    for _ in 0..terms {
        let mut m = Mono::one();
        for &v in x.vars() {
            let e = rng.gen_range(0..=max_exp);
            if e > 0 {
                m = m.mul(&Mono::var(v, e), x.ring()).unwrap().0;
            }
        }
        out.add_term(m, q_int(rng.gen_range(-3..=3)));
    }
    out
}

/// Random element of `Sym(X1|X2)`: a combination of products of elementary functions.
pub fn random_block_symmetric(x: &Alphabet, a: usize, rng: &mut ChaCha8Rng) -> Poly {
    let x1 = x.slice("X1", 0..a);
    let x2 = x.slice("X2", a..x.len());
    let mut out = Poly::zero(x.ring());
    for _ in 0..3 {
        let i = rng.gen_range(0..=a as i64);
        let j = rng.gen_range(0..=(x.len() - a) as i64);
        let k = rng.gen_range(0..=2);
        let term = &(&elem(i, &x1) * &elem(j, &x2)) * &elem(k, x);
        out.add_scaled(&term, &q_int(rng.gen_range(-3..=3)));
    }
    out
}

fn staircase(n: usize) -> Vec<u32> {
    (0..n).map(|i| (n - 1 - i) as u32).collect()
}

fn mono_poly(x: &Alphabet, exps: &[u32]) -> Poly {
    let mut p = Poly::one(x.ring());
    for (i, &e) in exps.iter().enumerate() {
        p = &p * &x.var(i).pow(e);
    }
    p
}

/// Exponent vectors `n_i <= N - i` of the monomial basis over the symmetric polynomials.
fn basis_exponents(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        let bound = (n - 1 - i) as u32;
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=bound).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

/// Product of `(-1)^{b_k} e_{b_k}(x_{N+1-k}, ..., x_N)` with `b_k = k - n_{N-k}`.
fn dual_monomial(x: &Alphabet, exps: &[u32]) -> Poly {
    let n = x.len();
    let mut p = Poly::one(x.ring());
    for k in 1..n {
        let bk = k as i64 - exps[n - k - 1] as i64;
        let tail = x.slice("T", n - k..n);
        p = &p * &elem(bk, &tail).negate_if(bk % 2 != 0);
    }
    p
}

/// `y_i = sum_k x_i^(k-1) v_L_k` on the first `a` letters and with `v_R_k` on the rest.
fn expand_y(x: &Alphabet, y: &Alphabet, a: usize) -> SubstitutionMap {
    let ring = x.ring();
    let n = x.len();
    let mut s = SubstitutionMap::identity(ring);
    for i in 0..n {
        let (side, len) = if i < a { ("L", a) } else { ("R", n - a) };
        let mut img = Poly::zero(ring);
        for k in 1..=len {
            img.add_assign_ref(&(&x.var(i).pow(k as u32 - 1) * &Poly::named(ring, &format!("v_{side}_{k}"))));
        }
        s.set(y.vars()[i], img);
    }
    s
}

pub fn suite() -> Vec<Check> {
    let ring = xy_ring(5);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();

    let x2 = Alphabet::numbered(&ring, "X", "x", 1, 2).unwrap();
    let mut t = Tally::new(SUITE, "demazure_examples");
    t.case("d1(x1)", &demazure(&x2, 1, &x2.var(0)).unwrap(), &Poly::one(&ring));
    t.case("d1(x1^2)", &demazure(&x2, 1, &x2.var(0).pow(2)).unwrap(), &(&x2.var(0) + &x2.var(1)));
    t.case("d1(x1 x2)", &demazure(&x2, 1, &(&x2.var(0) * &x2.var(1))).unwrap(), &Poly::zero(&ring));
    t.holds("index out of range rejected", demazure(&x2, 2, &x2.var(0)).is_err());
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "demazure_squares_to_zero");
    for n in 2..=5 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        for i in 1..n {
            for _ in 0..3 {
                let f = random_poly(&x, &mut rng, 4, 3);
                let g = demazure(&x, i, &demazure(&x, i, &f).unwrap()).unwrap();
                t.case(format!("N={n}, i={i}"), &g, &Poly::zero(&ring));
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "staircase_trace_values");
    for n in 1..=4 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        let st = staircase(n);
        for e in basis_exponents(n) {
            let want = if e == st { Poly::one(&ring) } else { Poly::zero(&ring) };
            let got = demazure_word(&x, &longest_word(n), &mono_poly(&x, &e)).unwrap();
            t.case(format!("N={n}, exps={e:?}"), &got, &want);
        }
        t.case(
            format!("N={n}, trace of 1"),
            &longest_trace(&x, &Poly::one(&ring)).unwrap(),
            &if n == 1 { Poly::one(&ring) } else { Poly::zero(&ring) },
        );
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "longest_word_matches_alternation");
    for n in 1..=4 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        for _ in 0..4 {
            let f = random_poly(&x, &mut rng, 4, 3);
            let by_word = demazure_word(&x, &longest_word(n), &f).unwrap();
            t.case(format!("N={n}"), &by_word, &longest_trace(&x, &f).unwrap());
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "monomial_dual_basis");
    for n in 1..=3 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        let basis = basis_exponents(n);
        for e in &basis {
            for m in &basis {
                let f = &mono_poly(&x, e) * &dual_monomial(&x, m);
                let want = if e == m { Poly::one(&ring) } else { Poly::zero(&ring) };
                t.case(format!("N={n}, {e:?} against {m:?}"), &longest_trace(&x, &f).unwrap(), &want);
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "trace_is_linear_over_symmetric");
    for n in 2..=4 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        for k in 1..=n as i64 {
            let f = random_poly(&x, &mut rng, 3, 3);
            let g = elem(k, &x);
            let lhs = longest_trace(&x, &(&f * &g)).unwrap();
            t.case(format!("N={n}, e_{k}"), &lhs, &(&longest_trace(&x, &f).unwrap() * &g));
        }
    }
    out.push(t.finish());

    let mut pairing = Tally::new(SUITE, "sylvester_dual_basis");
    let mut routes = Tally::new(SUITE, "sylvester_word_matches_alternation");
    let mut words = Tally::new(SUITE, "sylvester_alternative_word");
    for n in 2..=5 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        for a in 1..n {
            let b = n - a;
            let x1 = x.slice("X1", 0..a);
            let xb = x.slice("X2", a..n);
            let boxed = Partition::in_box(a, b as u32);
            let left: Vec<Poly> = boxed.iter().map(|l| schur(l, &x1).unwrap()).collect();
            let right: Vec<Poly> = boxed
                .iter()
                .map(|m| {
                    let hat = m.dual_complement(a, b as u32);
                    schur(&hat, &xb).unwrap().negate_if(hat.size() % 2 == 1)
                })
                .collect();
            for (i, l) in boxed.iter().enumerate() {
                for (j, m) in boxed.iter().enumerate() {
                    let got = sylvester(&x, a, b, &(&left[i] * &right[j])).unwrap();
                    let want = if i == j { Poly::one(&ring) } else { Poly::zero(&ring) };
                    pairing.case(format!("(a,b)=({a},{b}), lambda={l}, mu={m}"), &got, &want);
                }
            }
            let data = FrobeniusData::new(&x, &[a, b]).unwrap();
            let alt_word: Vec<usize> = (0..b).rev().flat_map(|m| (1..=a).map(move |k| k + m)).collect();
            for _ in 0..3 {
                let f = random_block_symmetric(&x, a, &mut rng);
                let by_word = sylvester(&x, a, b, &f).unwrap();
                routes.case(format!("(a,b)=({a},{b})"), &by_word, &data.trace(&f).unwrap());
                words.case(
                    format!("(a,b)=({a},{b})"),
                    &sylvester_with_word(&x, a, b, &alt_word, &f).unwrap(),
                    &by_word,
                );
            }
            routes.holds(format!("(a,b)=({a},{b}) rejects x1"), sylvester(&x, a, b, &x.var(0)).is_err() || a == 1);
            routes.case(
                format!("(a,b)=({a},{b}), trace of 1"),
                &sylvester(&x, a, b, &Poly::one(&ring)).unwrap(),
                &Poly::zero(&ring),
            );
        }
    }
    out.extend([pairing.finish(), routes.finish(), words.finish()]);

    let mut t = Tally::new(SUITE, "antisymmetrization_examples");
    let x = Alphabet::numbered(&ring, "X", "x", 1, 2).unwrap();
    let y = Alphabet::numbered(&ring, "Y", "y", 1, 2).unwrap();
    let p = |s: &str| Poly::parse(&ring, s).unwrap();
    t.case("Alt(x1)", &antisymmetrize(&[&x, &y], &p("x1")).unwrap(), &p("x1 - x2"));
    t.case("Alt(x1 y1)", &antisymmetrize(&[&x, &y], &p("x1*y1")).unwrap(), &p("x1*y1 - x2*y2"));
    t.case("Alt(x1 x2)", &antisymmetrize(&[&x, &y], &p("x1*x2")).unwrap(), &Poly::zero(&ring));
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "antisymmetric_divisible_by_block_vandermondes");
    for n in 2..=5 {
        let x = Alphabet::numbered(&ring, "X", "x", 1, n).unwrap();
        let y = Alphabet::numbered(&ring, "Y", "y", 1, n).unwrap();
        let xy = x.concat("XY", &y).unwrap();
        for a in 1..n {
            for _ in 0..2 {
                let f = random_poly(&xy, &mut rng, 1, 2);
                let alt = expand_y(&x, &y, a).apply(&antisymmetrize(&[&x, &y], &f).unwrap());
                t.holds(format!("(a,b)=({a},{})", n - a), vandermonde_quotient(&x, &y, a, &alt).is_ok());
            }
        }
    }
    out.push(t.finish());

    out
}
