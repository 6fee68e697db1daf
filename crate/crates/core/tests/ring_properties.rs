use brauer_core::{Polynomial, Rational, RationalFunction};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| Polynomial::from_i64s(&c))
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(4), nonzero_poly(4)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

/// Elements of K: monic denominator of degree at least the numerator's.
fn k_element() -> impl Strategy<Value = RationalFunction> {
    (0usize..=3).prop_flat_map(|deg| {
        (prop::collection::vec(-5i64..=5, deg + 1), prop::collection::vec(-5i64..=5, deg)).prop_map(
            move |(num, mut den)| {
                den.push(1);
                RationalFunction::new(Polynomial::from_i64s(&num), Polynomial::from_i64s(&den)).unwrap()
            },
        )
    })
}

fn q(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

proptest! {
    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn representation_is_canonical(n in poly(4), d in nonzero_poly(4), k in nonzero_poly(2)) {
        let plain = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let scaled = RationalFunction::new(&n * &k, &d * &k).unwrap();
        prop_assert_eq!(&plain, &scaled);
        prop_assert!(plain.denominator().leading_coeff().unwrap() > &BigInt::from(0));
        if plain.is_zero() {
            prop_assert!(plain.denominator().is_one());
        }
    }

    #[test]
    fn k_is_a_ring_and_the_residue_a_homomorphism(a in k_element(), b in k_element()) {
        prop_assert!(a.in_k() && b.in_k());
        let (sum, prod) = (&a + &b, &a * &b);
        prop_assert!(sum.in_k() && prod.in_k());
        let (ra, rb) = (a.k_residue().unwrap(), b.k_residue().unwrap());
        prop_assert_eq!(sum.k_residue().unwrap(), &ra + &rb);
        prop_assert_eq!(prod.k_residue().unwrap(), &ra * &rb);
    }

    #[test]
    fn specialisation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), at in -6i64..=6) {
        let at = q(at);
        if let (Ok(x), Ok(y)) = (a.specialize(&at), b.specialize(&at)) {
            prop_assert_eq!((&a + &b).specialize(&at).unwrap(), &x + &y);
            prop_assert_eq!((&a * &b).specialize(&at).unwrap(), &x * &y);
        }
    }

    #[test]
    fn poles_are_exactly_where_specialisation_fails(a in ratfunc(), at in -8i64..=8) {
        let fails = a.specialize(&q(at)).is_err();
        prop_assert_eq!(fails, a.poles().contains(&q(at)));
    }

    #[test]
    fn integer_roots_of_a_product_of_linear_factors(
        roots in prop::collection::vec(-9i64..=9, 1..6),
        lead in 1i64..=4,
        extra in prop::sample::select(vec![vec![1i64], vec![1, 0, 1], vec![1, 2], vec![2, 0, 0, 1]]),
    ) {
        let mut p = Polynomial::from_i64s(&[lead]);
        for &r in &roots {
            p = &p * &Polynomial::linear(&BigInt::from(r));
        }
        let extra = Polynomial::from_i64s(&extra);
        let extra_roots: Vec<BigInt> = extra.integer_roots().unwrap();
        let mut expected: Vec<BigInt> = roots.iter().map(|&r| BigInt::from(r)).chain(extra_roots).collect();
        expected.sort();
        expected.dedup();
        prop_assert_eq!((&p * &extra).integer_roots().unwrap(), expected);
    }
}
