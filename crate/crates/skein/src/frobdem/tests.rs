use super::suite::{random_block_symmetric, random_poly, xy_ring};
use super::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn words() {
    assert_eq!(longest_word(3), vec![1, 2, 1]);
    assert_eq!(sylvester_word(1, 1), vec![1]);
    assert_eq!(sylvester_word(2, 1), vec![1, 2]);
    assert_eq!(sylvester_word(1, 2), vec![2, 1]);
    assert_eq!(sylvester_word(2, 2).len(), 4);
}

#[test]
fn sylvester_trivial_values() {
    let r = xy_ring(2);
    let x = Alphabet::numbered(&r, "X", "x", 1, 2).unwrap();
    assert_eq!(sylvester(&x, 1, 1, &x.var(0)).unwrap(), Poly::one(&r));
    assert!(sylvester(&x, 1, 1, &Poly::one(&r)).unwrap().is_zero());
}

#[test]
fn frobenius_data_rank() {
    let r = xy_ring(5);
    let x = Alphabet::numbered(&r, "X", "x", 1, 5).unwrap();
    assert_eq!(FrobeniusData::new(&x, &[2, 3]).unwrap().rank(), 10);
    assert!(FrobeniusData::new(&x, &[2, 2]).is_err());
}

#[test]
fn frobenius_suite_passes() {
    for c in suite() {
        assert!(c.ok, "{c}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn demazure_square_zero(seed in any::<u64>(), n in 2usize..=4) {
        let r = xy_ring(4);
        let x = Alphabet::numbered(&r, "X", "x", 1, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&x, &mut rng, 4, 3);
        for i in 1..n {
            prop_assert!(demazure(&x, i, &demazure(&x, i, &f).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn sylvester_routes_agree(seed in any::<u64>(), n in 2usize..=4, a in 1usize..4) {
        prop_assume!(a < n);
        let r = xy_ring(4);
        let x = Alphabet::numbered(&r, "X", "x", 1, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_block_symmetric(&x, a, &mut rng);
        let data = FrobeniusData::new(&x, &[a, n - a]).unwrap();
        prop_assert_eq!(sylvester(&x, a, n - a, &f).unwrap(), data.trace(&f).unwrap());
    }

    #[test]
    fn alternation_negates_under_swaps(seed in any::<u64>(), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let r = xy_ring(3);
        let x = Alphabet::numbered(&r, "X", "x", 1, 3).unwrap();
        let y = Alphabet::numbered(&r, "Y", "y", 1, 3).unwrap();
        let xy = x.concat("XY", &y).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = antisymmetrize(&[&x, &y], &random_poly(&xy, &mut rng, 2, 2)).unwrap();
        let swapped = f.swap_vars(&[(x.vars()[i], x.vars()[j]), (y.vars()[i], y.vars()[j])]);
        prop_assert_eq!(swapped, -f);
    }
}
