use proptest::prelude::*;

use super::suite::long_division;
use super::*;
use crate::polycore::{Weight, Window, Q};

#[test]
fn factored_text() {
    assert_eq!(unknot_series(2, false, false).to_string(), "(1 + a^-1*q^2)(1 + a^-1*q^4)/((1 - q^2)(1 - q^4))");
    let e = SeriesExpr::product(Weight::qt(-2, 2), sym_factors(1));
    assert_eq!(e.to_string(), "q^-2*t^2*1/(1 - q^2)");
    assert_eq!(SeriesExpr::default().to_string(), "0");
}

#[test]
fn geometric_expansion() {
    let w = Window::new((-10, 10), (0, 4), (0, 0));
    let s = SeriesExpr::product(Weight::ZERO, deformation_factors_for_test(1)).expand(w);
    for k in 0..=2 {
        assert_eq!(s.coeff(Weight::qt(-2 * k, 2 * k)), Q::from_integer(1.into()));
    }
    assert_eq!(s.coeffs.len(), 3);
}

fn deformation_factors_for_test(n: usize) -> Vec<Factor> {
    (1..=n as i32).map(|i| Factor::geometric(Weight::qt(-2 * i, 2))).collect()
}

#[test]
fn negative_prefactor_recovers_pruned_terms() {
    let w = Window::new((0, 6), (0, 0), (0, 0));
    let s = SeriesExpr::product(Weight::qt(-6, 0), sym_factors(1)).expand(w);
    assert_eq!(s.coeff(Weight::qt(6, 0)), Q::from_integer(1.into()));
    assert_eq!(s.coeffs.len(), 4);
}

#[test]
fn coefficient_table() {
    let w = Window::new((0, 2), (0, 0), (-1, 0));
    let v = coefficients_json(&unknot_series(1, false, false).expand(w));
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["coef"], "1");
}

#[test]
fn compare_reports_difference() {
    let w = series_window(1);
    let s = unknot_series(1, false, false).expand(w);
    let mut other = s.clone();
    other.add_term(Weight::qt(4, 0), Q::from_integer(1.into()));
    let c = compare_series(&s, &other, false).unwrap();
    assert!(!c.equal);
    assert_eq!(c.first_difference.unwrap().0, Weight::qt(4, 0));
}

#[test]
fn boundary_lowest_is_ambiguous() {
    let w = Window::new((-2, 4), (0, 0), (0, 0));
    let s = SeriesExpr::product(Weight::qt(-2, 0), sym_factors(1)).expand(w);
    assert!(matches!(compare_series(&s, &s, true), Err(SeriesError::Ambiguous(_))));
}

#[test]
fn one_one_cross_check() {
    let c = ideal_cross_check(1, 1, crate::ideals::IdealWindow::new(6, 2)).unwrap();
    assert!(c.ok(), "{:?}", c.comparison);
    assert_eq!(c.comparison.shift, Weight::ZERO);
}

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        (1i32..=3).prop_map(|i| Factor::geometric(Weight::qt(2 * i, 0))),
        (1i32..=3).prop_map(|i| Factor::geometric(Weight::qt(-2 * i, 2))),
        (1i32..=3).prop_map(|i| Factor::plus(Weight::new(2 * i, 0, -1))),
        (1i32..=3).prop_map(|i| Factor::plus(Weight::new(-2 * i, 0, 1))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn expansion_matches_long_division(factors in proptest::collection::vec(factor(), 0..6), q in -6i32..=6, t in 0i32..=2) {
        let p = Product::new(Weight::qt(2 * q, 2 * t), factors);
        let w = Window::new((-12, 12), (0, 6), (-3, 3));
        let e = SeriesExpr { terms: vec![p.clone()] };
        prop_assert_eq!(e.expand(w), long_division(&p, w));
    }

    #[test]
    fn shift_is_recovered(b in 1usize..=3, q in -3i32..=3, t in 0i32..=1) {
        let w = series_window(b);
        let s = unknot_series(b, true, false);
        let by = Weight::qt(2 * q, 2 * t);
        let c = compare_series(&s.expand(w), &s.shifted(by).expand(w), true).unwrap();
        prop_assert!(c.equal);
        prop_assert_eq!(c.shift, by);
    }
}
