use std::sync::OnceLock;

use brauer_core::analysis::specialize_element;
use brauer_core::solver::{splitting_idempotent, splitting_idempotent_with, Mode};
use brauer_core::spore::spore;
use brauer_core::{CentralElement, Diagram, OrbitIndex, Polynomial, Rational, RationalFunction};
use num_bigint::BigInt;
use proptest::prelude::*;

fn index(n: usize) -> &'static OrbitIndex {
    static CACHE: [OnceLock<OrbitIndex>; 6] = [const { OnceLock::new() }; 6];
    CACHE[n].get_or_init(|| OrbitIndex::new(n).unwrap())
}

fn diagram(n: usize) -> impl Strategy<Value = Diagram> {
    Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |v| {
        let pairs: Vec<(usize, usize)> = v.chunks(2).map(|c| (c[0], c[1])).collect();
        Diagram::from_pairs(n, &pairs).unwrap()
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

fn coefficient() -> impl Strategy<Value = RationalFunction> {
    (-3i64..=3, 0usize..=2, prop::bool::ANY).prop_map(|(k, deg, invert)| {
        let c = RationalFunction::from_poly(Polynomial::from_i64s(&[k, 1]));
        let c = if deg == 0 { RationalFunction::from_int(k) } else { c };
        if invert && !c.is_zero() {
            c.inv().unwrap()
        } else {
            c
        }
    })
}

fn central(n: usize) -> impl Strategy<Value = CentralElement> {
    let classes = index(n).classes().to_vec();
    prop::collection::vec(prop::option::weighted(0.4, coefficient()), classes.len()).prop_map(move |cs| {
        CentralElement::from_terms(n, classes.iter().cloned().zip(cs).filter_map(|(t, c)| Some((t, c?))))
    })
}

fn small_n() -> impl Strategy<Value = usize> {
    2usize..=4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_with_loops(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (diagram(n), diagram(n), diagram(n)))
    ) {
        let (ab, l1) = a.compose(&b).unwrap();
        let (ab_c, l2) = ab.compose(&c).unwrap();
        let (bc, l3) = b.compose(&c).unwrap();
        let (a_bc, l4) = a.compose(&bc).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(l1 + l2, l3 + l4);
    }

    #[test]
    fn conjugation_is_an_automorphism(
        (a, b, p) in (1usize..=6).prop_flat_map(|n| (diagram(n), diagram(n), permutation(n)))
    ) {
        let (ab, loops) = a.compose(&b).unwrap();
        let (conj, conj_loops) = a.conjugate(&p).unwrap().compose(&b.conjugate(&p).unwrap()).unwrap();
        prop_assert_eq!(ab.conjugate(&p).unwrap(), conj);
        prop_assert_eq!(loops, conj_loops);
        let sigma = Diagram::from_permutation(&p).unwrap();
        let inverse: Vec<usize> = {
            let mut inv = vec![0; p.len()];
            for (i, &x) in p.iter().enumerate() {
                inv[x - 1] = i + 1;
            }
            inv
        };
        let sigma_inv = Diagram::from_permutation(&inverse).unwrap();
        let (left, _) = sigma_inv.compose(&a).unwrap();
        let (product, _) = left.compose(&sigma).unwrap();
        prop_assert_eq!(a.conjugate(&p).unwrap(), product);
        prop_assert_eq!(spore(&a.conjugate(&p).unwrap()), spore(&a));
    }

    #[test]
    fn structure_constants_match_diagram_products(
        (x, y) in small_n().prop_flat_map(|n| (central(n), central(n)))
    ) {
        let idx = index(x.n());
        prop_assert_eq!(x.mul(&y, idx).unwrap(), x.mul_expanded(&y, idx).unwrap());
    }

    #[test]
    fn the_centraliser_is_commutative_and_associative(
        (x, y, z) in small_n().prop_flat_map(|n| (central(n), central(n), central(n)))
    ) {
        let idx = index(x.n());
        prop_assert_eq!(x.mul(&y, idx).unwrap(), y.mul(&x, idx).unwrap());
        let left = x.mul(&y, idx).unwrap().mul(&z, idx).unwrap();
        let right = x.mul(&y.mul(&z, idx).unwrap(), idx).unwrap();
        prop_assert_eq!(left, right);
    }
}

fn valid_pairs(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).flat_map(|n| (n % 2..n).step_by(2).map(move |ell| (n, ell)))
}

#[test]
fn full_and_reduced_systems_give_the_same_idempotent() {
    for (n, ell) in valid_pairs(5) {
        let idx = index(n);
        let full = splitting_idempotent_with(n, ell, Mode::Full, idx).unwrap();
        let reduced = splitting_idempotent_with(n, ell, Mode::Reduced, idx).unwrap();
        assert_eq!(full, reduced, "n = {n}, ell = {ell}");
    }
}

#[test]
fn specialised_idempotents_stay_idempotent() {
    for (n, ell) in valid_pairs(4) {
        let idx = index(n);
        let phi = splitting_idempotent(n, ell, idx).unwrap();
        for at in [3, 5, -7] {
            let s = specialize_element(&phi, &Rational::from_integer(BigInt::from(at))).unwrap();
            assert_eq!(s.mul(&s, idx).unwrap(), s, "φ_{n}({ell}) at δ = {at}");
        }
    }
}
