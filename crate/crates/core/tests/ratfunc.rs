use brauer_core::exactring::ArithOp;
use brauer_core::{Error, Polynomial, Rational, RationalFunction};
use num_bigint::BigInt;

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::new(p(n), p(d)).unwrap()
}

fn from_roots(roots: &[i64]) -> Polynomial {
    roots.iter().fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear(&BigInt::from(r)))
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn arithmetic_examples() {
    let inv_delta = RationalFunction::delta_pow(-1);
    assert_eq!(&inv_delta + &inv_delta, rf(&[2], &[0, 1]));
    // (δ+1)/(δ²−1) → 1/(δ−1)
    assert_eq!(rf(&[1, 1], &[-1, 0, 1]), rf(&[1], &[-1, 1]));
    assert_eq!(rf(&[1], &[1, 1]).arith(ArithOp::Div, &RationalFunction::zero()), Err(Error::DivisionByZero));
    assert_eq!(RationalFunction::new(p(&[1]), Polynomial::zero()), Err(Error::DivisionByZero));
}

#[test]
fn sum_of_phi4_zero_coefficients() {
    let den = from_roots(&[0, -2, 1]);
    let b1 = RationalFunction::new(p(&[1]), den.clone()).unwrap();
    let b2 = RationalFunction::new(p(&[-1, -1]), den).unwrap();
    let expected = RationalFunction::new(p(&[-1]), from_roots(&[-2, 1])).unwrap();
    assert_eq!(&b1 + &b2, expected);
}

#[test]
fn canonical_sign_and_content() {
    let x = rf(&[2, 2], &[-4, -4, 0]);
    assert_eq!(x.numerator(), &p(&[-1]));
    assert_eq!(x.denominator(), &p(&[2]));
    let y = rf(&[3], &[6, 0, 9]);
    assert_eq!(y.numerator(), &p(&[1]));
    assert_eq!(y.denominator(), &p(&[2, 0, 3]));
}

#[test]
fn k_membership() {
    let b2 = RationalFunction::new(p(&[-1, -1]), from_roots(&[0, -2, 1])).unwrap();
    assert!(b2.in_k());
    assert!(!RationalFunction::from_poly(p(&[0, 1])).in_k());
    assert!(!rf(&[1], &[2]).in_k());
    assert!(RationalFunction::zero().in_k());
    assert!(RationalFunction::from_int(-7).in_k());
    // 1/(2δ+1) is not in K, but 2/(2δ+2) = 1/(δ+1) is
    assert!(!rf(&[1], &[1, 2]).in_k());
    assert!(rf(&[2], &[2, 2]).in_k());
}

#[test]
fn residues() {
    let one_plus = &RationalFunction::one() + &RationalFunction::delta_pow(-1);
    assert_eq!(one_plus.k_residue().unwrap(), q(1, 1));
    assert_eq!(rf(&[2], &[0, 1]).k_residue().unwrap(), q(0, 1));
    let c5 = RationalFunction::new(-p(&[-4, 0, 4, 1]), from_roots(&[0, 2, -2, -4])).unwrap();
    // numerator degree 3, denominator degree 4 after expansion
    assert_eq!(c5.numerator().degree(), Some(3));
    assert_eq!(c5.denominator().degree(), Some(4));
    assert_eq!(c5.k_residue().unwrap(), q(0, 1));
    assert!(matches!(RationalFunction::from_poly(p(&[0, 1])).k_residue(), Err(Error::NotInK(_))));
    let minus_one = RationalFunction::new(p(&[3, -1]), p(&[5, 1])).unwrap();
    assert_eq!(minus_one.k_residue().unwrap(), q(-1, 1));
}

#[test]
fn specialisation() {
    let x = RationalFunction::new(p(&[4]), from_roots(&[0, 2, -4])).unwrap();
    assert_eq!(x.specialize(&q(-2, 1)).unwrap(), q(1, 4));
    assert_eq!(RationalFunction::delta_pow(-1).specialize(&q(0, 1)), Err(Error::PoleAt(q(0, 1))));
    assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).specialize(&q(1, 1)).unwrap(), q(2, 1));
}

#[test]
fn laurent_and_powers() {
    assert_eq!(RationalFunction::laurent(&[1, 1], 1), &RationalFunction::one() + &RationalFunction::delta_pow(-1));
    assert_eq!(RationalFunction::laurent(&[0, 0, 3], 2), RationalFunction::from_int(3));
    assert_eq!(RationalFunction::delta_pow(2), RationalFunction::from_poly(p(&[0, 0, 1])));
}

#[test]
fn display_factored() {
    let c5 = RationalFunction::new(-p(&[-4, 0, 4, 1]), from_roots(&[0, 2, -2, -4])).unwrap();
    assert_eq!(c5.to_string(), "-(δ^3+4δ^2-4)/(δ(δ-2)(δ+2)(δ+4))");
    assert_eq!(RationalFunction::delta_pow(-1).to_string(), "1/δ");
    assert_eq!(rf(&[1], &[-1, 1]).to_string(), "1/(δ-1)");
    assert_eq!(rf(&[1], &[0, 0, 1]).to_string(), "1/δ^2");
    assert_eq!(rf(&[1], &[2]).to_string(), "1/2");
    assert_eq!(rf(&[1], &[0, 16, 8]).to_string(), "1/(8δ(δ+2))");
    assert_eq!(rf(&[1], &[1, 0, 1]).to_string(), "1/(δ^2+1)");
    assert_eq!(RationalFunction::from_int(-3).to_string(), "-3");
    assert_eq!(rf(&[-12, -12, -4], &[-1, 1]).to_string(), "-4(δ^2+3δ+3)/(δ-1)");
}
