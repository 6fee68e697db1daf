use brauer_core::analysis::*;
use brauer_core::{CentralElement, Error, OrbitIndex, Rational, RationalFunction};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn phi2() -> CentralElement {
    CentralElement::from_terms(
        2,
        [("P|P".parse().unwrap(), RationalFunction::one()), ("NS".parse().unwrap(), -RationalFunction::delta_pow(-1))],
    )
}

#[test]
fn pole_of_phi2() {
    let r = poles(&phi2());
    assert_eq!(r.poles.into_iter().collect::<Vec<_>>(), [q(0)]);
    assert_eq!(r.max_prop_at_pole[&q(0)], 0);
}

#[test]
fn specialise_and_multiply() {
    let idx = OrbitIndex::new(2).unwrap();
    let s = specialize_element(&phi2(), &q(3)).unwrap();
    assert_eq!(s.mul(&s, &idx).unwrap(), s);
    let err = specialize_element(&phi2(), &q(0)).unwrap_err();
    assert_eq!(err, Error::PoleAtClasses { at: q(0), classes: vec!["NS".into()] });
}

#[test]
fn difference_cancels() {
    let x = phi2();
    assert!(combine(&[(Sign::Plus, &x), (Sign::Minus, &x)]).unwrap().is_zero());
}
