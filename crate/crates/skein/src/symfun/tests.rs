use super::identities::test_ring;
use super::*;
use crate::polycore::Poly;
use proptest::prelude::*;

fn p(r: &Ring, s: &str) -> Poly {
    Poly::parse(r, s).unwrap()
}

#[test]
fn complete_of_difference_example() {
    let r = test_ring(2);
    let x = Alphabet::new(&r, "X", &["x1"]).unwrap();
    let xp = Alphabet::new(&r, "X'", &["xp1"]).unwrap();
    // (1 + x t + x^2 t^2)(1 - x' t), coefficient of t^2
    assert_eq!(complete(2, &x - &xp), p(&r, "x1^2 - x1*xp1"));
}

#[test]
fn trivial_extractions() {
    let r = test_ring(2);
    let x = Alphabet::numbered(&r, "X", "x", 1, 2).unwrap();
    let xp = Alphabet::numbered(&r, "X'", "xp", 1, 2).unwrap();
    for k in 1..4 {
        assert!(complete(k, &x - &x).is_zero());
    }
    assert_eq!(elem(2, &x), p(&r, "x1*x2"));
    assert_eq!(power(1, &x - &xp).unwrap(), &elem(1, &x) - &elem(1, &xp));
    assert_eq!(power(0, &x), Err(SymError::PowerZero));
    assert!(elem(3, &x).is_zero());
    assert_eq!(elem(0, &x), Poly::one(&r));
}

#[test]
fn schur_examples() {
    let r = test_ring(2);
    let x = Alphabet::numbered(&r, "X", "x", 1, 2).unwrap();
    assert_eq!(schur(&Partition::new([1]), &x).unwrap(), p(&r, "x1 + x2"));
    // 2x2 bialternant: det [[x1^3, x2^3], [x1, x2]] / (x1 - x2)
    assert_eq!(schur(&Partition::new([2, 1]), &x).unwrap(), p(&r, "x1^2*x2 + x1*x2^2"));
    assert_eq!(schur(&Partition::empty(), &x).unwrap(), Poly::one(&r));
    assert!(schur(&Partition::new([1, 1, 1]), &x).unwrap().is_zero());
}

#[test]
fn hook_boundary() {
    let r = test_ring(3);
    let x = Alphabet::numbered(&r, "X", "x", 1, 3).unwrap();
    for i in 1..5 {
        assert_eq!(hook_schur(i - 1, 0, &x), complete(i, &x));
        assert_eq!(hook_schur(0, i - 1, &x), elem(i, &x));
    }
    assert!(hook_schur(-1, 2, &x).is_zero());
}

#[test]
fn h_reduction_example() {
    let r = test_ring(2);
    let x = Alphabet::new(&r, "X", &["x1"]).unwrap();
    let y = Alphabet::new(&r, "Y", &["x2"]).unwrap();
    // -x1 x2 + (x1 + x2) x1 = x1^2
    assert_eq!(h_reduce(&x, &y, 1, 1).unwrap(), p(&r, "x1^2"));
    assert!(matches!(h_reduce(&x, &y, 0, 1), Err(SymError::Cardinality(_))));
}

#[test]
fn partitions() {
    assert_eq!(Partition::in_box(2, 2).len(), 6);
    assert_eq!(Partition::in_box(0, 3).len(), 1);
    let l = Partition::new([2, 0, 1]);
    assert_eq!(l.parts(), &[2, 1]);
    assert_eq!(l.conjugate(), Partition::new([2, 1]));
    assert_eq!(Partition::parse("[3,1]").unwrap(), Partition::new([3, 1]));
    assert!(Partition::parse("1,3").is_err());
    let lam = Partition::new([1]);
    // rows=2, cols=2: exps of (1,0) are {2,0}; complement {3,1} -> (3-1, 1-0) = (2,1)
    assert_eq!(lam.dual_complement(2, 2), Partition::new([2, 1]));
    assert_eq!(Partition::empty().dual_complement(2, 2), Partition::new([2, 2]));
}

#[test]
fn dual_complement_is_an_involution() {
    for rows in 0..4 {
        for cols in 0..4u32 {
            for lam in Partition::in_box(rows, cols) {
                let hat = lam.dual_complement(rows, cols);
                assert!(hat.fits(cols as usize, rows as u32));
                assert_eq!(hat.dual_complement(cols as usize, rows as u32), lam);
                assert_eq!(lam.size() + hat.size(), rows as u32 * cols);
            }
        }
    }
}

#[test]
fn identity_suite_passes() {
    for c in suite() {
        assert!(c.ok, "{c}");
    }
}

proptest! {
    #[test]
    fn h_e_orthogonality(n in 0usize..=4, k in 1usize..=6) {
        let r = test_ring(4);
        let x = Alphabet::numbered(&r, "X", "x", 1, n).unwrap();
        let mut s = Poly::zero(&r);
        for j in 0..=k {
            let term = &complete((k - j) as i64, &x) * &elem(j as i64, &x);
            s = if j % 2 == 0 { &s + &term } else { &s - &term };
        }
        prop_assert!(s.is_zero());
    }

    #[test]
    fn hook_recurrence(n in 1usize..=3, i in 1i64..4, j in 1i64..4) {
        let r = test_ring(3);
        let x = Alphabet::numbered(&r, "X", "x", 1, n).unwrap();
        let lhs = &complete(i, &x) * &elem(j, &x);
        let rhs = &hook_schur(i, j - 1, &x) + &hook_schur(i - 1, j, &x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn virtual_generating_functions_multiply(n in 0usize..=3, m in 0usize..=3, k in 0i64..5) {
        // H(X - X') H(X') = H(X)
        let r = test_ring(3);
        let x = Alphabet::numbered(&r, "X", "x", 1, n).unwrap();
        let xp = Alphabet::numbered(&r, "X'", "xp", 1, m).unwrap();
        let d = &x - &xp;
        let mut s = Poly::zero(&r);
        for i in 0..=k {
            s = &s + &(&complete(i, &d) * &complete(k - i, &xp));
        }
        prop_assert_eq!(s, complete(k, &x));
    }
}
