//! Partitions, symmetric-group characters and the idempotents built from them.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::central::{CentralElement, OrbitIndex};
use crate::error::{Error, Result};
use crate::exactring::{Rational, RationalFunction};
use crate::solver;
use crate::spore::SporeTableau;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Checks that `parts` are positive, weakly decreasing and sum to `n`.
    pub fn new(parts: Vec<usize>, n: usize) -> Result<Self> {
        let valid =
            parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().sum::<usize>() == n;
        if valid {
            Ok(IntegerPartition { parts })
        } else {
            Err(Error::NotAPartition { parts: join(&parts), n })
        }
    }

    pub(crate) fn new_unchecked(parts: Vec<usize>) -> Self {
        IntegerPartition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(-1)^(n - number of parts)`: the sign of a permutation of this cycle
    /// type.
    pub fn sign(&self) -> i64 {
        if (self.n() - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn join(parts: &[usize]) -> String {
    let mut s = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{p}"));
    }
    s
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    /// Comma-separated parts, e.g. `3,1`; parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::NotAPartition { parts: String::from(s), n: 0 };
        let parts =
            body.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        let n = parts.iter().sum();
        Self::new(parts, n).map_err(|_| bad())
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(n, n, &mut cur, &mut out);
    out
}

fn descend(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
    if rest == 0 {
        out.push(IntegerPartition { parts: cur.clone() });
        return;
    }
    for k in (1..=max.min(rest)).rev() {
        cur.push(k);
        descend(rest - k, k, cur, out);
        cur.pop();
    }
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule, removing rim hooks of length `μ_i`
/// from the beta-set `{λ_i + m - i}` of `λ`.
pub fn character(lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<BigInt> {
    if lambda.n() != mu.n() {
        return Err(Error::DimensionMismatch { left: lambda.n(), right: mu.n() });
    }
    let m = lambda.parts.len();
    let beta: Vec<usize> = lambda.parts.iter().enumerate().map(|(i, &p)| p + m - 1 - i).collect();
    Ok(BigInt::from(mn(beta, &mu.parts)))
}

fn mn(beta: Vec<usize>, hooks: &[usize]) -> i64 {
    let Some((&k, rest)) = hooks.split_first() else { return 1 };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| b - k < c && c < b).count();
        let mut next = beta.clone();
        next[i] = b - k;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest);
    }
    total
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn dimension(lambda: &IntegerPartition) -> BigInt {
    let parts = &lambda.parts;
    let mut hooks = BigInt::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.n()) / hooks
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `e_λ = (f^λ / n!) Σ_μ χ^λ(μ) C_μ` with the class sums `C_μ` written as the
/// all-`P` orbit sums of shape `μ`.
pub fn young_central_idempotent(lambda: &IntegerPartition) -> Result<CentralElement> {
    let n = lambda.n();
    let scale = Rational::new(dimension(lambda), factorial(n));
    let mut out = CentralElement::zero(n);
    for mu in partitions(n) {
        let chi = character(lambda, &mu)?;
        if chi.is_zero() {
            continue;
        }
        let c = &scale * Rational::from_integer(chi);
        out.set(SporeTableau::permutation_class(&mu), RationalFunction::from_rational(&c));
    }
    Ok(out)
}

/// `φ_n(λ) = φ_n(n-2) · e_λ` for `λ ⊢ n`.
pub fn primitive_central_idempotent(lambda: &IntegerPartition, index: &OrbitIndex) -> Result<CentralElement> {
    let n = lambda.n();
    if n < 2 {
        return Err(Error::InvalidSplitParameters { n, ell: n.saturating_sub(2) });
    }
    let phi = solver::splitting_idempotent(n, n - 2, index)?;
    primitive_from_split(&phi, lambda, index)
}

/// As [`primitive_central_idempotent`], reusing an already computed
/// `φ_n(n-2)`.
pub fn primitive_from_split(
    phi: &CentralElement,
    lambda: &IntegerPartition,
    index: &OrbitIndex,
) -> Result<CentralElement> {
    let e = young_central_idempotent(lambda)?;
    phi.mul(&e, index)
}

/// Character table as rows `χ^λ` over the classes `μ`, both in
/// [`partitions`] order.
pub fn character_table(n: usize) -> Result<Vec<Vec<BigInt>>> {
    let ps = partitions(n);
    ps.iter().map(|l| ps.iter().map(|m| character(l, m)).collect()).collect()
}

/// Cycle type of a permutation given as `perm[x-1] = σ(x)`.
pub fn cycle_type(perm: &[usize]) -> IntegerPartition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] - 1;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    IntegerPartition { parts }
}
