//! Characters checked against the Frobenius formula: `χ^λ(μ)` is the
//! coefficient of `x^(λ+ρ)` in `a_ρ · p_μ`, computed by brute-force expansion.

use std::collections::BTreeMap;

use brauer_core::symgrp::{character, character_table, dimension, factorial, partitions, young_central_idempotent};
use brauer_core::{CentralElement, IntegerPartition, OrbitIndex};
use num_bigint::BigInt;
use num_traits::Zero;

type Poly = BTreeMap<Vec<usize>, i64>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// All permutations of `0..k` with their signs.
fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

fn frobenius(lambda: &[usize], mu: &[usize], n: usize) -> i64 {
    let k = n;
    let rho: Vec<usize> = (0..k).rev().collect();
    let vandermonde: Poly =
        permutations(k).into_iter().map(|(p, s)| (p.iter().map(|&i| rho[i]).collect(), s)).collect();
    let power_sum = |r: usize| -> Poly {
        (0..k)
            .map(|i| {
                let mut e = vec![0; k];
                e[i] = r;
                (e, 1)
            })
            .collect()
    };
    let product = mu.iter().fold(vandermonde, |acc, &r| mul(&acc, &power_sum(r)));
    let target: Vec<usize> = (0..k).map(|i| lambda.get(i).copied().unwrap_or(0) + rho[i]).collect();
    product.get(&target).copied().unwrap_or(0)
}

#[test]
fn characters_agree_with_the_frobenius_formula() {
    for n in 1..=6 {
        for lambda in partitions(n) {
            for mu in partitions(n) {
                let expected = BigInt::from(frobenius(lambda.parts(), mu.parts(), n));
                assert_eq!(character(&lambda, &mu).unwrap(), expected, "χ^{lambda}({mu})");
            }
        }
    }
}

fn class_size(mu: &IntegerPartition) -> BigInt {
    let mut z = BigInt::from(1);
    let mut counts = BTreeMap::new();
    for &part in mu.parts() {
        z *= part;
        *counts.entry(part).or_insert(0usize) += 1;
    }
    for m in counts.values() {
        z *= factorial(*m);
    }
    factorial(mu.n()) / z
}

#[test]
fn row_orthogonality() {
    for n in 1..=7 {
        let table = character_table(n).unwrap();
        let sizes: Vec<BigInt> = partitions(n).iter().map(class_size).collect();
        for (i, a) in table.iter().enumerate() {
            for (j, b) in table.iter().enumerate() {
                let inner: BigInt = a.iter().zip(b).zip(&sizes).map(|((x, y), s)| x * y * s).sum();
                let expected = if i == j { factorial(n) } else { BigInt::zero() };
                assert_eq!(inner, expected, "n = {n}, rows {i}, {j}");
            }
        }
        let first_column: Vec<BigInt> = partitions(n).iter().map(dimension).collect();
        let identity_class = partitions(n).len() - 1;
        assert_eq!(table.iter().map(|row| row[identity_class].clone()).collect::<Vec<_>>(), first_column);
    }
}

#[test]
fn young_idempotents_are_orthogonal_and_sum_to_one() {
    for n in 1..=5 {
        let idx = OrbitIndex::new(n).unwrap();
        let es: Vec<CentralElement> = partitions(n).iter().map(|l| young_central_idempotent(l).unwrap()).collect();
        let mut total = CentralElement::zero(n);
        for (i, x) in es.iter().enumerate() {
            total = &total + x;
            for (j, y) in es.iter().enumerate() {
                let expected = if i == j { x.clone() } else { CentralElement::zero(n) };
                assert_eq!(x.mul(y, &idx).unwrap(), expected);
            }
        }
        assert_eq!(total, CentralElement::identity(n));
    }
}
