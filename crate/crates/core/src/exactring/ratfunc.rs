use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{poly_gcd, Polynomial};
use super::Rational;
use crate::error::{Error, Result};

/// Element of `ℚ(δ)` in canonical form.
///
/// `num / den` with `den` nonzero and of positive leading coefficient, the two
/// coprime in `ℚ[δ]` and their contents coprime in `ℤ`. Zero is `0/1`. Equal
/// field elements therefore have identical fields, so `Eq`/`Hash` are exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        if den.leading_coeff().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(Polynomial::constant(BigInt::from(k)))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Self::reduce(Polynomial::constant(q.numer().clone()), Polynomial::constant(q.denom().clone()))
    }

    /// `δ^k` for any integer `k`.
    pub fn delta_pow(k: i32) -> Self {
        let m = Polynomial::monomial(k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RationalFunction { num: Polynomial::one(), den: m }
        }
    }

    /// `Σ_v counts[v]·δ^(v - shift)`: the shape of every structure constant in
    /// the diagram basis.
    pub fn laurent(counts: &[i64], shift: usize) -> Self {
        Self::reduce(Polynomial::from_i64s(counts), Polynomial::monomial(shift))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn arith(&self, op: ArithOp, rhs: &Self) -> Result<Self> {
        Ok(match op {
            ArithOp::Add => self + rhs,
            ArithOp::Sub => self - rhs,
            ArithOp::Mul => self * rhs,
            ArithOp::Div => self.checked_div(rhs)?,
        })
    }

    /// Membership in `K`. With the canonical form this is: the denominator is
    /// monic and `deg num ≤ deg den`. (If `f/g = x` with `g` monic, the
    /// primitive reduced denominator divides `g` by Gauss's lemma, so it has
    /// unit leading coefficient; and the content of the reduced denominator must
    /// divide that of `g/denominator`, which is 1 because that quotient is monic.)
    pub fn in_k(&self) -> bool {
        self.num.is_zero() || (self.den.is_monic() && self.num.degree() <= self.den.degree())
    }

    /// Image of `self` under `K → K/Kδ⁻¹ ≅ ℤ`: the ratio of leading
    /// coefficients when the degrees agree, zero otherwise.
    pub fn k_residue(&self) -> Result<Rational> {
        if !self.in_k() {
            return Err(Error::NotInK(self.to_string()));
        }
        if self.num.degree() == self.den.degree() {
            Ok(Rational::from_integer(self.num.leading_coeff().unwrap().clone()))
        } else {
            Ok(Rational::zero())
        }
    }

    /// Value at `δ = at`. Removable singularities never error because the form
    /// is already reduced.
    pub fn specialize(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::PoleAt(at.clone()));
        }
        Ok(self.num.eval(at) / d)
    }

    /// Rational values of `δ` where the denominator vanishes.
    pub fn poles(&self) -> Vec<Rational> {
        self.den.rational_roots().unwrap_or_default()
    }

    pub(crate) fn eval_mod(&self, x: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(x, p);
        if d == 0 {
            return None;
        }
        Some(mul_mod(self.num.eval_mod(x, p), inv_mod(d, p), p))
    }
}

/// Writes `xs` over one denominator: returns `(p_i, L)` with `xs[i] = p_i / L`
/// and `L` the least common multiple of the denominators.
pub fn common_denominator<'a, I>(xs: I) -> (Vec<Polynomial>, Polynomial)
where
    I: IntoIterator<Item = &'a RationalFunction>,
{
    let xs: Vec<&RationalFunction> = xs.into_iter().collect();
    let mut lcm = Polynomial::one();
    for x in &xs {
        if !x.den.is_one() && x.den != lcm {
            let g = poly_gcd(&lcm, &x.den);
            lcm = &lcm * &x.den.div_exact(&g);
        }
    }
    let nums = xs.iter().map(|x| &x.num * &lcm.div_exact(&x.den)).collect();
    (nums, lcm)
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let (ls, rs) = (rhs.den.div_exact(&g), self.den.div_exact(&g));
        let num = &(&self.num * &ls) + &(&rhs.num * &rs);
        RationalFunction::reduce(num, &self.den * &ls)
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if rhs.den.is_one() && rhs.num.degree() == Some(0) {
            return RationalFunction::reduce(self.num.scale(&rhs.num.coeffs()[0]), self.den.clone());
        }
        // cross-cancel first so the final gcd is on smaller inputs
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        RationalFunction::reduce(num, den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl core::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

/// Writes a denominator as content times linear factors times the rest, e.g.
/// `8δ(δ+2)`.
fn factored(p: &Polynomial) -> (String, bool) {
    let content = p.content();
    let mut rest = p.div_scalar_exact(&content);
    let mut parts: Vec<String> = Vec::new();
    let roots = rest.integer_root_multiplicities().unwrap_or_default();
    for (r, &m) in roots.iter().rev() {
        for _ in 0..m {
            rest = rest.div_exact(&Polynomial::linear(r));
        }
        let base = if r.is_zero() {
            String::from("δ")
        } else if r.is_negative() {
            alloc::format!("(δ+{})", -r)
        } else {
            alloc::format!("(δ-{r})")
        };
        parts.push(if m > 1 { alloc::format!("{base}^{m}") } else { base });
    }
    // δ first, then (δ-a) before (δ+a), as usually printed
    parts.sort_by_key(|s| !s.starts_with('δ'));
    if rest.degree().is_some_and(|d| d > 0) {
        parts.push(alloc::format!("({rest})"));
    }
    let mut out = String::new();
    if !content.is_one() || parts.is_empty() {
        out.push_str(&content.to_string());
    }
    let simple = parts.is_empty() || (out.is_empty() && parts.len() == 1 && parts[0].starts_with('δ'));
    for s in parts {
        out.push_str(&s);
    }
    (out, simple)
}

impl fmt::Display for RationalFunction {
    /// Factored form, e.g. `-(δ^3+4δ^2-4)/(δ(δ-2)(δ+2)(δ+4))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let negative = self.num.leading_coeff().unwrap().is_negative();
        let num = if negative { -&self.num } else { self.num.clone() };
        let terms = num.coeffs().iter().filter(|c| !c.is_zero()).count();
        if negative {
            f.write_str("-")?;
        }
        let content = num.content();
        if terms > 1 && !content.is_one() {
            write!(f, "{content}({})", num.div_scalar_exact(&content))?;
        } else if terms > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        let (den, simple) = factored(&self.den);
        let wrapped = simple || (den.starts_with('(') && den.ends_with(')') && den.matches('(').count() == 1);
        if wrapped {
            write!(f, "/{den}")
        } else {
            write!(f, "/({den})")
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_evaluation_matches_rational() {
        // (3δ+4)/(δ(δ-2)(δ+4))
        let x = RationalFunction::new(Polynomial::from_i64s(&[4, 3]), Polynomial::from_i64s(&[0, -8, 2, 1])).unwrap();
        let prime = (1u64 << 61) - 1;
        let at = 1_000_003u64;
        let exact = x.specialize(&Rational::from_integer(at.into())).unwrap();
        let n = exact.numer().clone() % BigInt::from(prime);
        let d = exact.denom().clone() % BigInt::from(prime);
        let n: u64 = num_traits::ToPrimitive::to_u64(&n).unwrap();
        let d: u64 = num_traits::ToPrimitive::to_u64(&d).unwrap();
        assert_eq!(x.eval_mod(at, prime).unwrap(), mul_mod(n, inv_mod(d, prime), prime));
    }
}
