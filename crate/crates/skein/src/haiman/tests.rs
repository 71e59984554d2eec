use super::*;
use crate::frobdem::antisymmetrize;
use crate::polycore::{Registry, Ring, Weight};
use crate::symfun::schur;
use proptest::prelude::*;

fn ring(n: usize) -> Ring {
    let mut b = Registry::builder();
    for i in 1..=n {
        b = b.even(format!("x{i}"), Weight::qt(2, 0));
    }
    for i in 1..=n {
        b = b.even(format!("y{i}"), Weight::qt(-2, 2));
    }
    b.build().unwrap()
}

fn xy(r: &Ring, n: usize) -> (Alphabet, Alphabet) {
    (Alphabet::numbered(r, "X", "x", 1, n).unwrap(), Alphabet::numbered(r, "Y", "y", 1, n).unwrap())
}

/// `Alt(prod_i m_i(x_i, y_i))`.
fn alternant(cells: &[(u32, u32)], x: &Alphabet, y: &Alphabet) -> Poly {
    let mut f = Poly::one(x.ring());
    for (k, &(i, j)) in cells.iter().enumerate() {
        f = &f * &(&x.var(k).pow(i) * &y.var(k).pow(j));
    }
    antisymmetrize(&[x, y], &f).unwrap()
}

#[test]
fn staircase_is_vandermonde() {
    let r = ring(4);
    for n in 1..=4 {
        let (x, y) = xy(&r, n);
        assert_eq!(shape_det(&Shape::staircase(n), &x, &y).unwrap(), x.vandermonde());
    }
}

#[test]
fn displayed_four_by_four() {
    let r = ring(4);
    let (x, y) = xy(&r, 4);
    let s = Shape::new([(2, 0), (1, 0), (0, 0), (0, 1)]).unwrap();
    assert_eq!(s.cells(), &[(2, 0), (1, 0), (0, 0), (0, 1)]);
    assert_eq!(s.to_string(), "{x^2,x,1,y}");
    // cofactor expansion along the y row
    let mut want = Poly::zero(&r);
    for j in 0..4 {
        let rest = x.without(j);
        let minor = rest.vandermonde();
        let term = &y.var(j) * &minor;
        want = if (3 + j) % 2 == 0 { &want + &term } else { &want - &term };
    }
    assert_eq!(shape_det(&s, &x, &y).unwrap(), want);
    assert_eq!(shape_det(&s, &x, &y).unwrap(), alternant(s.cells(), &x, &y));
}

#[test]
fn bialternant_gives_schur() {
    let r = ring(4);
    for n in 1..=4 {
        let (x, y) = xy(&r, n);
        for lam in Partition::in_box(n.min(3), 3) {
            let d = shape_det(&Shape::schur_list(&lam, n), &x, &y).unwrap();
            assert_eq!(d.div_exact(&x.vandermonde()).unwrap(), schur(&lam, &x).unwrap(), "{lam} in {n}");
        }
    }
}

#[test]
fn small_keys() {
    let r = ring(2);
    let (x, y) = xy(&r, 2);
    let p = |s: &str| Poly::parse(&r, s).unwrap();
    let k0 = KeyShape::new(1, 1, 0, Partition::empty()).unwrap();
    assert_eq!(key_det(&k0, &x, &y).unwrap(), p("x1 - x2"));
    let k1 = KeyShape::new(1, 1, 1, Partition::empty()).unwrap();
    assert_eq!(k1.shape().to_string(), "{1,y}");
    assert_eq!(key_det(&k1, &x, &y).unwrap(), p("y2 - y1"));
    assert!(KeyShape::new(1, 2, 0, Partition::empty()).is_err());
    assert!(KeyShape::new(2, 2, 1, Partition::new([2])).is_err());
}

#[test]
fn key_count_is_power_of_two() {
    for b in 0..=4 {
        assert_eq!(KeyShape::all(b + 1, b).len(), 1 << b);
    }
}

#[test]
fn shape_levels() {
    let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for a in 1..=3 {
        for b in 0..=a {
            for l in 0..=b {
                let shapes = enumerate_shapes(l, a, b);
                assert_eq!(shapes.len(), binom(b, b - l) * binom(b, l));
                for key in KeyShape::all(a, b).into_iter().filter(|k| k.l == l) {
                    assert!(shapes.contains(&key.shape()), "{key}");
                }
            }
            let top = enumerate_shapes(b, a, b);
            assert!(top.contains(&KeyShape::new(a, b, b, Partition::empty()).unwrap().shape()));
        }
    }
}

#[test]
fn duplicates_vanish() {
    let r = ring(3);
    let (x, y) = xy(&r, 3);
    assert!(hdet(&[(1, 0), (1, 0), (0, 1)], &x, &y).unwrap().is_zero());
    assert!(Shape::new([(1, 0), (1, 0)]).is_err());
    assert!(hdet(&[(1, 0)], &x, &y).is_err());
}

#[test]
fn json_roundtrip() {
    let s = KeyShape::new(2, 2, 1, Partition::new([1])).unwrap().shape();
    assert_eq!(Shape::from_json(&s.to_json()).unwrap(), s);
    assert_eq!(s.to_json().to_string(), "[[0,0],[1,0],[1,1],[2,0]]");
}

fn arb_cells() -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::btree_set((0u32..4, 0u32..2), 1..=4).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn determinant_is_the_alternant(cells in arb_cells()) {
        let r = ring(4);
        let (x, y) = xy(&r, cells.len());
        prop_assert_eq!(hdet(&cells, &x, &y).unwrap(), alternant(&cells, &x, &y));
    }

    #[test]
    fn swapping_letters_negates(cells in arb_cells(), i in 0usize..4, j in 0usize..4) {
        let n = cells.len();
        prop_assume!(i < n && j < n && i != j);
        let r = ring(4);
        let (x, y) = xy(&r, n);
        let d = hdet(&cells, &x, &y).unwrap();
        let swapped = d.swap_vars(&[(x.vars()[i], x.vars()[j]), (y.vars()[i], y.vars()[j])]);
        prop_assert_eq!(swapped, -d);
    }
}
