use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense polynomial in `δ` with integer coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `δ^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    /// `δ - r`.
    pub fn linear(root: &BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with the sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Divides every coefficient by `k`; `k` must divide all of them.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        }
    }

    /// Multiplies by `δ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Largest `k` with `δ^k` dividing `self` (zero for the zero polynomial).
    pub fn delta_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, at: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Pseudo-remainder: the remainder of `lc(b)^k · self` by `b` for the
    /// smallest `k` keeping everything integral.
    pub fn pseudo_rem(&self, b: &Polynomial) -> Polynomial {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let lb = b.leading_coeff().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let g = lr.gcd(lb);
            let (mr, mb) = (lb / &g, &lr / &g);
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &mr).collect();
            let off = dr - db;
            for (i, c) in b.coeffs.iter().enumerate() {
                coeffs[off + i] -= c * &mb;
            }
            r = Polynomial::new(coeffs);
        }
        r
    }

    /// Quotient of an exact division in `ℤ[δ]`. Panics (debug) when `divisor`
    /// does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Polynomial {
        let dd = divisor.degree().expect("division by zero polynomial");
        if dd == 0 {
            return self.div_scalar_exact(&divisor.coeffs[0]);
        }
        let Some(dn) = self.degree() else {
            return Polynomial::zero();
        };
        debug_assert!(dn >= dd);
        let ld = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            debug_assert!((top % ld).is_zero());
            let q = top / ld;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= c * &q;
            }
            quot[k] = q;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        Polynomial::new(quot)
    }

    /// Integer roots, ascending, without multiplicity.
    pub fn integer_roots(&self) -> Result<Vec<BigInt>> {
        Ok(self.integer_root_multiplicities()?.into_keys().collect())
    }

    /// Integer roots with their multiplicities.
    ///
    /// Candidates `±d` run over divisors of the constant term after stripping
    /// the root 0; the search deflates each root it finds, and stops once `d`
    /// exceeds either the constant term or the Cauchy bound of what is left.
    pub fn integer_root_multiplicities(&self) -> Result<BTreeMap<BigInt, usize>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = BTreeMap::new();
        let zeros = self.delta_valuation();
        if zeros > 0 {
            roots.insert(BigInt::zero(), zeros);
        }
        let mut rest = Polynomial::new(self.coeffs[zeros..].to_vec());
        let mut d = BigInt::one();
        while rest.degree().is_some_and(|k| k > 0) {
            let a0 = rest.coeffs[0].abs();
            if d > a0 || d > rest.cauchy_bound() {
                break;
            }
            if (&a0 % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    while rest.degree().is_some_and(|k| k > 0) && rest.eval_int(&cand).is_zero() {
                        rest = rest.div_exact(&Polynomial::linear(&cand));
                        *roots.entry(cand.clone()).or_insert(0) += 1;
                    }
                }
            }
            d += 1;
        }
        Ok(roots)
    }

    /// Rational roots `p/q`: `q` runs over divisors of the leading coefficient,
    /// `p` over divisors of the constant term.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut found: Vec<Rational> = Vec::new();
        if self.delta_valuation() > 0 {
            found.push(Rational::zero());
        }
        let rest = Polynomial::new(self.coeffs[self.delta_valuation()..].to_vec()).primitive_part();
        if rest.degree().is_some_and(|k| k > 0) {
            let lc = rest.leading_coeff().unwrap().abs();
            let a0 = rest.coeffs[0].abs();
            for q in positive_divisors(&lc) {
                for p in positive_divisors(&a0) {
                    for sp in [p.clone(), -p.clone()] {
                        let r = Rational::new(sp, q.clone());
                        if !found.contains(&r) && rest.eval(&r).is_zero() {
                            found.push(r);
                        }
                    }
                }
            }
        }
        found.sort();
        Ok(found)
    }

    /// `1 + max |a_i / a_d|`, rounded up.
    fn cauchy_bound(&self) -> BigInt {
        let lc = self.leading_coeff().unwrap().abs();
        let top = self.coeffs[..self.coeffs.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_default();
        top.div_ceil(&lc) + 1
    }

    /// Value modulo a prime `p` < 2^63 at `x`.
    pub(crate) fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc: u64 = 0;
        for c in self.coeffs.iter().rev() {
            let cm = c.mod_floor(&BigInt::from(p)).to_u64().unwrap();
            acc = ((acc as u128 * x as u128 + cm as u128) % p as u128) as u64;
        }
        acc
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let e = n / &d;
            if e != d {
                out.push(e);
            }
            out.push(d.clone());
        }
        d += 1;
    }
    out.sort();
    out
}

/// Gcd in `ℤ[δ]`: gcd of the contents times the gcd of the primitive parts,
/// computed by the primitive polynomial remainder sequence. The result has a
/// positive leading coefficient; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    let c = a.content().gcd(&b.content());
    let (mut p, mut q) = (a.primitive_part(), b.primitive_part());
    if p.degree() < q.degree() {
        core::mem::swap(&mut p, &mut q);
    }
    while q.degree().is_some_and(|d| d > 0) {
        let r = p.pseudo_rem(&q);
        if r.is_zero() {
            return q.normalize_sign().scale(&c);
        }
        p = q;
        q = r.primitive_part();
    }
    // q is a nonzero constant: the primitive parts are coprime.
    Polynomial::constant(c)
}

impl Polynomial {
    fn normalize_sign(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::new(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Descending powers, e.g. `δ^3+4δ^2-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            f.write_str(sign)?;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("δ")?,
                _ => write!(f, "δ^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
