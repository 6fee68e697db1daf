use brauer_core::exactring::poly_gcd;
use brauer_core::{Error, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

/// Product of `(δ - r)` over the given roots.
fn from_roots(roots: &[i64]) -> Polynomial {
    roots.iter().fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear(&BigInt::from(r)))
}

#[test]
fn trailing_zeros_are_trimmed() {
    assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    assert!(p(&[0, 0]).is_zero());
    assert_eq!(p(&[0]).degree(), None);
}

#[test]
fn gcd_examples() {
    // δ²−1 and δ−1
    assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
    assert_eq!(poly_gcd(&Polynomial::zero(), &p(&[2, 1])), p(&[2, 1]));
    assert_eq!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()), Polynomial::zero());
    // content times primitive gcd
    assert_eq!(poly_gcd(&p(&[4, 4]), &p(&[-6, 0, 6])), p(&[2, 2]));
    assert_eq!(poly_gcd(&p(&[-3, -3]), &p(&[-1, -1])), p(&[1, 1]));
}

#[test]
fn gcd_of_printed_coefficient_is_one() {
    // δ³+4δ²−4 against δ(δ−2)(δ+2)(δ+4)
    let num = p(&[-4, 0, 4, 1]);
    let den = from_roots(&[0, 2, -2, -4]);
    assert_eq!(den, p(&[0, -16, -4, 4, 1]));
    assert!(poly_gcd(&num, &den).is_one());
    // oracle: num has no root among the roots of den
    for r in [0, 2, -2, -4] {
        assert!(!num.eval_int(&BigInt::from(r)).is_zero());
    }
}

#[test]
fn integer_roots_examples() {
    let roots =
        |q: &Polynomial| -> Vec<i64> { q.integer_roots().unwrap().iter().map(|r| r.to_i64().unwrap()).collect() };
    assert_eq!(roots(&from_roots(&[0, -2, 1])), [-2, 0, 1]);
    let big = from_roots(&[0, 4, 3, 2, 1, -1, -2, -4, -6, -8]);
    assert_eq!(roots(&big), [-8, -6, -4, -2, -1, 0, 1, 2, 3, 4]);
    assert!(roots(&p(&[1, 0, 1])).is_empty());
    assert_eq!(Polynomial::zero().integer_roots(), Err(Error::ZeroPolynomial));
    // repeated and non-monic
    let m = &from_roots(&[3, 3, -1]).scale(&BigInt::from(5)) * &p(&[1, 0, 1]);
    let mult = m.integer_root_multiplicities().unwrap();
    assert_eq!(mult[&BigInt::from(3)], 2);
    assert_eq!(mult[&BigInt::from(-1)], 1);
}

#[test]
fn rational_roots_find_fractions() {
    // (2δ−1)(3δ+2)δ
    let q = &(&p(&[-1, 2]) * &p(&[2, 3])) * &p(&[0, 1]);
    let r = q.rational_roots().unwrap();
    assert_eq!(r, [Rational::new((-2).into(), 3.into()), Rational::zero(), Rational::new(1.into(), 2.into())]);
}

#[test]
fn exact_division_and_pseudo_remainder() {
    let a = from_roots(&[1, 2, 3]);
    let b = from_roots(&[2]);
    assert_eq!(a.div_exact(&b), from_roots(&[1, 3]));
    assert!(a.pseudo_rem(&b).is_zero());
    // multipliers are reduced by the gcd of the leading coefficients
    assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[0, 2])), p(&[2]));
}

#[test]
fn display() {
    assert_eq!(p(&[-4, 0, 4, 1]).to_string(), "δ^3+4δ^2-4");
    assert_eq!(p(&[0, -1]).to_string(), "-δ");
    assert_eq!(Polynomial::zero().to_string(), "0");
}
