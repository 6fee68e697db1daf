use brauer_core::solver::*;
use brauer_core::{CentralElement, Error, OrbitIndex, Polynomial, RationalFunction};

fn rf(s: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::new(Polynomial::from_i64s(s), Polynomial::from_i64s(d)).unwrap()
}

#[test]
fn phi_two_zero() {
    let idx = OrbitIndex::new(2).unwrap();
    let sys = build_system(2, 0, Mode::Reduced, &idx).unwrap();
    assert_eq!(sys.rows.len(), 1);
    assert_eq!(sys.rows[0].coeffs, [RationalFunction::one()]);
    let phi = splitting_idempotent(2, 0, &idx).unwrap();
    assert_eq!(phi.coeff(&"NS".parse().unwrap()), -RationalFunction::delta_pow(-1));
    assert!(verify_fast(&phi, 0, &idx).unwrap().passed());
}

#[test]
fn phi_four_zero_system() {
    let idx = OrbitIndex::new(4).unwrap();
    let sys = build_system(4, 0, Mode::Reduced, &idx).unwrap();
    let inv = RationalFunction::delta_pow(-1);
    let one = RationalFunction::one();
    assert_eq!(sys.rows[0].coeffs, [&one + &inv, inv.clone()]);
    assert_eq!(sys.rows[1].coeffs, [&inv + &inv, one]);
    assert_eq!(sys.rows[0].rhs, RationalFunction::zero());
    assert_eq!(sys.rows[1].rhs, -RationalFunction::delta_pow(-2));
    let sol = solve(&sys).unwrap();
    assert_eq!(sol[&"NSNS".parse().unwrap()], rf(&[1], &[0, -2, 1, 1]));
    let report = structural_checks(&sys).unwrap();
    assert!(report.passed());
}

#[test]
fn rejects_bad_parameters() {
    let idx = OrbitIndex::new(4).unwrap();
    assert!(matches!(build_system(4, 1, Mode::Full, &idx), Err(Error::InvalidSplitParameters { .. })));
    assert!(matches!(build_system(4, 4, Mode::Full, &idx), Err(Error::InvalidSplitParameters { .. })));
}

#[test]
fn identity_fails_annihilation() {
    let idx = OrbitIndex::new(2).unwrap();
    let report = verify_fast(&CentralElement::identity(2), 0, &idx).unwrap();
    assert!(!report.passed());
    assert_eq!(report.annihilates, [(0, false, false)]);
}
