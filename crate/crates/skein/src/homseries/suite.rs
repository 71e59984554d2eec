use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::Zero;

use crate::ideals::IdealWindow;
use crate::polycore::{LaurentSeries, Weight, Window, Q};
use crate::report::{Check, Tally};
use crate::symfun::Partition;

use super::formulas::{deformation_factors, sym_factors};
use super::{
    compare_series, hh_series_of_invariant_ring, hom_to_web_series, hopf_parity_series, ideal_cross_check,
    series_window, unknot_series, Factor, HopfOptions, Product, SeriesExpr,
};

const SUITE: &str = "series";

fn finite(factors: &[Factor], prefactor: Weight) -> BTreeMap<Weight, Q> {
    let mut out = BTreeMap::from([(prefactor, Q::from_integer(1.into()))]);
    for f in factors {
        for _ in 0..f.power.abs() {
            let mut next: BTreeMap<Weight, Q> = BTreeMap::new();
            for (w, c) in &out {
                *next.entry(*w).or_insert_with(Q::zero) += c;
                *next.entry(*w + f.monomial).or_insert_with(Q::zero) += c * Q::from_integer(f.sign.into());
            }
            next.retain(|_, c| !c.is_zero());
            out = next;
        }
    }
    out
}

/// Solves `S * denominator = numerator` weight by weight, increasing in `t` and then `q`.
pub(super) fn long_division(p: &Product, window: Window) -> LaurentSeries {
    let num: Vec<Factor> = p.factors.iter().filter(|f| f.power > 0).copied().collect();
    let den: Vec<Factor> = p.factors.iter().filter(|f| f.power < 0).copied().collect();
    let n = finite(&num, p.prefactor);
    let d = finite(&den, Weight::ZERO);
    let reach = den.iter().map(|f| f.monomial.q.abs()).max().unwrap_or(0) * (window.t.1 + 1);
    let (qlo, qhi) = (window.q.0 - reach, window.q.1 + reach);
    let mut s: BTreeMap<Weight, Q> = BTreeMap::new();
    for t in 0..=window.t.1 {
        for q in qlo..=qhi {
            for a in window.a.0..=window.a.1 {
                let w = Weight::new(q, t, a);
                let mut c = n.get(&w).cloned().unwrap_or_else(Q::zero) * &p.coef;
                for (dw, dc) in &d {
                    if *dw != Weight::ZERO {
                        if let Some(prev) = s.get(&(w - *dw)) {
                            c -= dc * prev;
                        }
                    }
                }
                if !c.is_zero() {
                    s.insert(w, c);
                }
            }
        }
    }
    LaurentSeries { window, coeffs: s }.restricted()
}

fn division_of(e: &SeriesExpr, window: Window) -> LaurentSeries {
    e.terms.iter().fold(LaurentSeries::zero(window), |acc, p| acc.add(&long_division(p, window))).restricted()
}

pub fn suite() -> Vec<Check> {
    let mut out = Vec::new();

    let mut t = Tally::new(SUITE, "unknot_factored");
    t.case("b=1 undeformed", &unknot_series(1, false, false).to_string(), &"(1 + a^-1*q^2)/(1 - q^2)".to_string());
    t.case(
        "b=1 deformed",
        &unknot_series(1, true, false).to_string(),
        &"(1 + a^-1*q^2)/((1 - q^2)(1 - q^-2*t^2))".to_string(),
    );
    t.case("b=1 dual", &unknot_series(1, false, true).to_string(), &"(1 + a*q^-2)/(1 - q^2)".to_string());
    t.case("b=0", &unknot_series(0, true, false).to_string(), &"1".to_string());
    let w = series_window(1);
    let one = unknot_series(1, false, false).expand(w);
    for k in 0..=10 {
        t.case(format!("b=1 a^0 q^{}", 2 * k), &one.coeff(Weight::qt(2 * k, 0)), &Q::from_integer(1.into()));
        let top = if k >= 1 { 1 } else { 0 };
        t.case(format!("b=1 a^-1 q^{}", 2 * k), &one.coeff(Weight::new(2 * k, 0, -1)), &Q::from_integer(top.into()));
    }
    t.case("b=0 expansion", &unknot_series(0, true, false).expand(w), &LaurentSeries::one(w).restricted());
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "expansion_by_long_division");
    for b in 0..=3 {
        for (deformed, dual) in [(false, false), (true, false), (true, true)] {
            let e = unknot_series(b, deformed, dual);
            let w = series_window(b);
            t.holds(format!("unknot b={b} deformed={deformed} dual={dual}"), e.expand(w) == division_of(&e, w));
        }
    }
    for (a, b) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
        let e = hopf_parity_series(a, b, HopfOptions { bottom: false, deformed: true }).expect("a >= b");
        let w = Window::new((-16, 16), (0, 6), (-((a + b) as i32), 0));
        t.holds(format!("hopf ({a},{b}) deformed"), e.expand(w) == division_of(&e, w));
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "deformation_factorization");
    for b in 0..=3 {
        let w = series_window(b);
        let params = SeriesExpr::product(Weight::ZERO, deformation_factors(b));
        let wide = Window { q: (w.q.0 - 2 * b as i32 * w.t.1, w.q.1 + 2 * b as i32 * w.t.1), ..w };
        let product = unknot_series(b, false, false).expand(wide).mul(&params.expand(wide));
        t.case(
            format!("b={b}"),
            &unknot_series(b, true, false).expand(w),
            &LaurentSeries { window: w, coeffs: product.coeffs }.restricted(),
        );
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "hochschild_of_invariant_ring");
    for b in 0..=3 {
        let w = series_window(b);
        t.case(
            format!("blocks ({b})"),
            &hh_series_of_invariant_ring(&[b]).expand(w),
            &unknot_series(b, false, false).expand(w),
        );
    }
    t.case("blocks (1)", &hh_series_of_invariant_ring(&[1]).to_string(), &"(1 + a^-1*q^2)/(1 - q^2)".to_string());
    for (a, b, l) in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 1)] {
        let blocks = [a - l, l, b - l];
        let mut factors = super::exterior_factors(a + b - l, false);
        for n in blocks {
            factors.extend(sym_factors(n));
        }
        let w = series_window(a + b);
        t.case(
            format!("theta ({},{},{})", blocks[0], blocks[1], blocks[2]),
            &hh_series_of_invariant_ring(&blocks).expand(w),
            &SeriesExpr::product(Weight::ZERO, factors).expand(w),
        );
    }
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "hopf_parity");
    for a in 0..=3 {
        for b in 0..=a {
            let e = hopf_parity_series(a, b, HopfOptions { bottom: false, deformed: true }).expect("a >= b");
            let s = e.expand(series_window(a + b));
            t.holds(format!("({a},{b}) even t"), !s.is_zero() && s.coeffs.keys().all(|w| w.t % 2 == 0));
            t.case(format!("({a},{b}) summands"), &e.terms.len(), &(b + 1));
        }
    }
    let e = hopf_parity_series(1, 1, HopfOptions::default()).expect("a >= b");
    t.case("(1,1) l=0 shift", &e.terms[0].prefactor, &Weight::qt(2, 0));
    t.case("(1,1) l=1 shift", &e.terms[1].prefactor, &Weight::qt(-2, 2));
    let zero = hopf_parity_series(2, 0, HopfOptions::default()).expect("a >= b");
    let w = series_window(2);
    t.case("b=0 is the unknot", &zero.expand(w), &unknot_series(2, false, false).expand(w));
    t.holds("a < b rejected", hopf_parity_series(1, 2, HopfOptions::default()).is_none());
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "hom_to_web");
    for a in 1..=3 {
        for b in 1..=a {
            for l in 0..=b {
                let e = hom_to_web_series(a, b, l).expect("in range");
                let shift = ((a - l) * (b - l)) as i32;
                t.case(format!("({a},{b},{l}) shift"), &e.terms[0].prefactor, &Weight::qt(shift, 0));
                let boxed = Partition::in_box(l, (b - l) as u32);
                t.case(format!("({a},{b},{l}) box count"), &boxed.len(), &binomial(b, l));
                let w = Window::new((-4, 30), (0, 0), (0, 0));
                let mut basis = LaurentSeries::zero(w);
                for p in &boxed {
                    basis.add_term(Weight::qt(shift + 2 * p.size() as i32, 0), Q::from_integer(1.into()));
                }
                let sym = SeriesExpr::product(Weight::ZERO, [sym_factors(a), sym_factors(b)].concat()).expand(w);
                t.case(format!("({a},{b},{l}) free over Sym(X1|X2)"), &e.expand(w), &basis.mul(&sym).restricted());
            }
        }
    }
    t.holds("l > b rejected", hom_to_web_series(2, 1, 2).is_none());
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "compare");
    let w = series_window(2);
    let s = unknot_series(2, true, false);
    match compare_series(&s.expand(w), &s.expand(w), true) {
        Ok(c) => t.holds("s against s", c.equal && c.shift == Weight::ZERO),
        Err(e) => t.holds(format!("s against s: {e}"), false),
    }
    match compare_series(&s.expand(w), &s.shifted(Weight::qt(2, 0)).expand(w), true) {
        Ok(c) => t.holds("s against q^2 s", c.equal && c.shift == Weight::qt(2, 0)),
        Err(e) => t.holds(format!("s against q^2 s: {e}"), false),
    }
    let other = unknot_series(1, true, false);
    t.holds(
        "different series differ",
        compare_series(&s.expand(w), &other.expand(w), true).map(|c| !c.equal).unwrap_or(false),
    );
    out.push(t.finish());

    let mut t = Tally::new(SUITE, "ideal_cross_check");
    for (a, b) in [(1, 1), (2, 1), (2, 2)] {
        match ideal_cross_check(a, b, IdealWindow::default_for(a, b)) {
            Ok(c) => t.holds(
                format!(
                    "({a},{b}) shift {} over {} weights, {:?}",
                    super::monomial_text(c.comparison.shift),
                    c.comparison.checked,
                    c.comparison.first_difference
                ),
                c.ok(),
            ),
            Err(e) => t.holds(format!("({a},{b}): {e}"), false),
        }
    }
    out.push(t.finish());

    out
}
