//! Ring axioms and the determinant oracle for the exact Laurent
//! arithmetic.

mod common;

use common::{permutation_determinant, TestRng};
use proptest::prelude::*;
use smale_flows::{LaurentMatrix, LaurentPoly};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..6)
        .prop_map(LaurentPoly::from_terms)
}

proptest! {
    #[test]
    fn addition_commutes(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn multiplication_commutes(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn subtraction_inverts_addition(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn product_divides_exactly(p in arb_poly(), q in arb_poly()) {
        prop_assume!(!q.is_zero());
        let product = &p * &q;
        prop_assert_eq!(product.exact_div(&q).unwrap(), p);
    }

    #[test]
    fn unit_equality_ignores_monomial_units(p in arb_poly(), e in -5i64..=5) {
        prop_assert!(p.equal_up_to_units(&p.shifted(e)));
        prop_assert!(p.equal_up_to_units(&(-&p).shifted(e)));
    }

    #[test]
    fn unit_equality_is_symmetric(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(p.equal_up_to_units(&q), q.equal_up_to_units(&p));
    }

    #[test]
    fn symmetry_is_multiplicative(
        p in arb_poly(), q in arb_poly(), j in -4i64..=4, k in -4i64..=4,
    ) {
        // p(t) + t^j*p(1/t) is symmetric for any p and j.
        let s = &p + &p.reversed().shifted(j);
        let u = &q + &q.reversed().shifted(k);
        prop_assume!(s.is_symmetric() && u.is_symmetric());
        prop_assert!((&s * &u).is_symmetric());
    }

    #[test]
    fn palindromic_products_are_symmetric(p in arb_poly()) {
        // p(t)·p(1/t) is always symmetric.
        prop_assert!((&p * &p.reversed()).is_symmetric());
    }

    #[test]
    fn normalized_is_canonical(p in arb_poly(), e in -5i64..=5) {
        prop_assert_eq!(p.normalized(), p.shifted(e).normalized());
        prop_assert_eq!(p.normalized(), (-&p).normalized());
    }
}

#[test]
fn unit_equality_is_transitive_on_unit_orbits() {
    let p: LaurentPoly = "1 - t + t^2".parse().unwrap();
    let variants = [
        p.clone(),
        p.shifted(3),
        (-&p).shifted(-2),
        p.shifted(-5),
        -&p,
    ];
    for a in &variants {
        assert!(a.equal_up_to_units(a));
        for b in &variants {
            for c in &variants {
                if a.equal_up_to_units(b) && b.equal_up_to_units(c) {
                    assert!(a.equal_up_to_units(c));
                }
            }
        }
    }
}

fn monomial_entry(rng: &mut TestRng) -> LaurentPoly {
    let c = rng.range_i64(-1, 1);
    if c == 0 {
        return LaurentPoly::zero();
    }
    let e = rng.range_i64(-2, 2);
    LaurentPoly::term(c, e)
}

#[test]
fn determinant_matches_permutation_sum_on_monomial_matrices() {
    // Monomial entries c*t^e with c in {-1,0,1} and e in [-2,2], sizes
    // 1 through 4; the full space is astronomically large, so sample it
    // with a fixed seed.
    let mut rng = TestRng::new(0x51eed1);
    for n in 1..=4usize {
        for _ in 0..300 {
            let entries: Vec<LaurentPoly> =
                (0..n * n).map(|_| monomial_entry(&mut rng)).collect();
            let m = LaurentMatrix::new(n, n, entries).unwrap();
            assert_eq!(m.det().unwrap(), permutation_determinant(&m));
        }
    }
}

#[test]
fn determinant_matches_permutation_sum_on_dense_matrices() {
    let mut rng = TestRng::new(0x51eed2);
    let entry = |rng: &mut TestRng| {
        let terms: Vec<(i64, i64)> = (0..rng.below(4))
            .map(|_| (rng.range_i64(-3, 3), rng.range_i64(-4, 4)))
            .collect();
        LaurentPoly::from_terms(terms)
    };
    for n in 1..=4usize {
        for _ in 0..60 {
            let entries: Vec<LaurentPoly> = (0..n * n).map(|_| entry(&mut rng)).collect();
            let m = LaurentMatrix::new(n, n, entries).unwrap();
            assert_eq!(m.det().unwrap(), permutation_determinant(&m));
        }
    }
}

#[test]
fn determinant_alternates_under_row_swap() {
    let mut rng = TestRng::new(0x51eed3);
    for _ in 0..100 {
        let entries: Vec<LaurentPoly> = (0..9).map(|_| monomial_entry(&mut rng)).collect();
        let m = LaurentMatrix::new(3, 3, entries.clone()).unwrap();
        let mut swapped = entries;
        swapped.swap(0, 3);
        swapped.swap(1, 4);
        swapped.swap(2, 5);
        let s = LaurentMatrix::new(3, 3, swapped).unwrap();
        assert_eq!(m.det().unwrap(), -&s.det().unwrap());
    }
}
