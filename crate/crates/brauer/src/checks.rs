//! Self-test suites: golden replay, algebraic properties and the heavy
//! `n = 6` squares.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use brauer_core::diagram::{basis_size, enumerate, Diagram};
use brauer_core::solver::{self, Mode};
use brauer_core::spore::{enumerate_spores, spore};
use brauer_core::symgrp::{partitions, primitive_from_split};
use brauer_core::CentralElement;
use rayon::prelude::*;

use crate::goldens::{self, Engine, GOLDENS};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub result: Result<(), String>,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

fn timed(name: String, f: impl FnOnce() -> Result<(), String>) -> CheckOutcome {
    let start = Instant::now();
    let result = f();
    CheckOutcome { name, result, elapsed: start.elapsed() }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(n, ℓ)` with `ℓ < n` and `n - ℓ` even.
pub fn valid_pairs(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n).flat_map(|n| (n % 2..n).step_by(2).map(move |ell| (n, ell))).collect()
}

/// Replays every golden table and its transcription, and confirms each
/// erratum.
pub fn golden_suite(engine: &Engine, dir: Option<&Path>) -> Vec<CheckOutcome> {
    GOLDENS
        .par_iter()
        .flat_map_iter(|table| {
            let text = goldens::text_of(table, dir);
            let replay = timed(table.id.to_string(), || {
                let text = text.as_ref().map_err(|e| e.to_string())?;
                goldens::check(table, text, engine).map_err(|f| f.to_string())
            });
            let transcribed = timed(format!("{} transcription", table.id), || {
                let text = text.as_ref().map_err(|e| e.to_string())?;
                goldens::check_transcription(table, text).map_err(|f| f.to_string())
            });
            [replay, transcribed]
        })
        .chain(goldens::ERRATA.par_iter().map(|e| {
            timed(format!("{} erratum at {}", e.id, e.tableau), || {
                goldens::check_erratum(e, engine).map_err(|f| f.to_string())
            })
        }))
        .collect()
}

/// Everything the splitting idempotent must satisfy, optionally including
/// `φ² = φ`.
pub fn split_properties(engine: &Engine, n: usize, ell: usize, square: bool) -> Result<(), String> {
    let e = |e: brauer_core::Error| e.to_string();
    let index = engine.index(n).map_err(e)?;
    let phi = engine.split(n, ell).map_err(e)?;
    let reduced = solver::splitting_idempotent_with(n, ell, Mode::Reduced, index).map_err(e)?;
    ensure(reduced == phi, || "full and reduced systems disagree".into())?;
    let report = solver::verify_fast(&phi, ell, index).map_err(e)?;
    ensure(report.passed(), || report.failures().join("; "))?;
    ensure(phi.terms().all(|(_, c)| c.in_k()), || "a coefficient lies outside K".into())?;
    let sys = solver::build_system(n, ell, Mode::Reduced, index).map_err(e)?;
    let structure = solver::structural_checks(&sys).map_err(e)?;
    ensure(structure.passed(), || format!("reduced matrix residues fail, det = {}", structure.determinant))?;
    if square {
        ensure(phi.mul(&phi, index).map_err(e)? == phi, || "φ² ≠ φ".into())?;
    }
    Ok(())
}

/// `φ_n(λ)` are orthogonal idempotents summing to `φ_n(n-2)`.
pub fn primitive_properties(engine: &Engine, n: usize) -> Result<(), String> {
    let e = |e: brauer_core::Error| e.to_string();
    let index = engine.index(n).map_err(e)?;
    let phi = engine.split(n, n - 2).map_err(e)?;
    let prims = partitions(n)
        .iter()
        .map(|l| primitive_from_split(&phi, l, index).map(|x| (l.clone(), x)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?;
    let mut total = CentralElement::zero(n);
    for (l, x) in &prims {
        total = &total + x;
        for (m, y) in &prims {
            let prod = x.mul(y, index).map_err(e)?;
            let expected = if l == m { x.clone() } else { CentralElement::zero(n) };
            ensure(prod == expected, || format!("φ({l})·φ({m}) is wrong"))?;
        }
    }
    ensure(total == phi, || "the φ(λ) do not sum to φ(n-2)".into())
}

/// Conjugacy orbits from adjacent transpositions, as class labels by rank.
pub fn conjugation_orbits(n: usize) -> Result<Vec<usize>, String> {
    let basis = enumerate(n, None).map_err(|e| e.to_string())?;
    let mut parent: Vec<usize> = (0..basis.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 1..n {
        let mut s: Vec<usize> = (1..=n).collect();
        s.swap(i - 1, i);
        for d in &basis {
            let c = d.conjugate(&s).map_err(|e| e.to_string())?;
            let (a, b) = (root(&mut parent, d.rank()), root(&mut parent, c.rank()));
            parent[a] = b;
        }
    }
    Ok((0..basis.len()).map(|x| root(&mut parent, x)).collect())
}

/// `Sp(A) = Sp(B)` exactly when `A` and `B` are conjugate.
pub fn spore_separates(n: usize) -> Result<(), String> {
    let basis = enumerate(n, None).map_err(|e| e.to_string())?;
    let orbit = conjugation_orbits(n)?;
    let spores: Vec<_> = basis.iter().map(spore).collect();
    let orbits: BTreeSet<usize> = orbit.iter().copied().collect();
    let labels: BTreeSet<(usize, &_)> = orbit.iter().copied().zip(&spores).collect();
    let distinct: BTreeSet<_> = spores.iter().collect();
    ensure(labels.len() == orbits.len() && distinct.len() == orbits.len(), || {
        format!("{} orbits, {} spores, {} orbit/spore pairs", orbits.len(), distinct.len(), labels.len())
    })
}

/// The row characterisation of realisable tableaux gives exactly the spores
/// that occur.
pub fn spore_image_matches(engine: &Engine, n: usize) -> Result<(), String> {
    let index = engine.index(n).map_err(|e| e.to_string())?;
    let listed = enumerate_spores(n, n);
    ensure(listed == index.classes(), || {
        format!("characterisation lists {}, image has {}", listed.len(), index.classes().len())
    })
}

pub fn counting() -> Result<(), String> {
    let basis6 = enumerate(6, None).map_err(|e| e.to_string())?.len();
    ensure(basis6 == 10395 && basis_size(6) == 10395, || format!("|J_6| = {basis6}"))?;
    for (n, max_prop, expected) in [(2, 2, 3), (4, 4, 12), (6, 4, 33)] {
        let got = enumerate_spores(n, max_prop).len();
        ensure(got == expected, || format!("{got} spores for n = {n}, prop ≤ {max_prop}"))?;
    }
    Ok(())
}

type Job<'a> = Box<dyn Fn() -> Result<(), String> + Send + Sync + 'a>;

pub fn property_suite(engine: &Engine) -> Vec<CheckOutcome> {
    let mut jobs: Vec<(String, Job<'_>)> = Vec::new();
    for (n, ell) in valid_pairs(5) {
        jobs.push((format!("φ_{n}({ell}) properties"), Box::new(move || split_properties(engine, n, ell, true))));
    }
    for ell in [0, 2, 4] {
        jobs.push((format!("φ_6({ell}) fast checks"), Box::new(move || split_properties(engine, 6, ell, false))));
    }
    for n in 2..=4 {
        jobs.push((format!("φ_{n}(λ) orthogonality"), Box::new(move || primitive_properties(engine, n))));
    }
    for n in 1..=5 {
        jobs.push((format!("spore separates orbits, n = {n}"), Box::new(move || spore_separates(n))));
    }
    for n in 1..=6 {
        jobs.push((format!("spore image, n = {n}"), Box::new(move || spore_image_matches(engine, n))));
    }
    for n in 2..=6 {
        jobs.push((format!("generator relations, n = {n}"), Box::new(move || generator_relations(n))));
    }
    jobs.push(("counting".into(), Box::new(counting)));
    jobs.into_par_iter().map(|(name, f)| timed(name, f)).collect()
}

pub fn heavy_suite(engine: &Engine) -> Vec<CheckOutcome> {
    [0, 2, 4]
        .into_par_iter()
        .map(|ell| timed(format!("φ_6({ell}) idempotent"), || split_properties(engine, 6, ell, true)))
        .collect()
}

/// `u_i² = δu_i`, `σ_i² = 1` and `σ_i u_i = u_i`.
pub fn generator_relations(n: usize) -> Result<(), String> {
    let e = |e: brauer_core::Error| e.to_string();
    let id = Diagram::identity(n);
    for i in 1..n {
        let u = Diagram::u(i, n).map_err(e)?;
        let s = Diagram::sigma(i, n).map_err(e)?;
        ensure(u.compose(&u).map_err(e)? == (u.clone(), 1), || format!("u_{i}² ≠ δu_{i}"))?;
        ensure(s.compose(&s).map_err(e)? == (id.clone(), 0), || format!("σ_{i}² ≠ 1"))?;
        ensure(s.compose(&u).map_err(e)? == (u.clone(), 0), || format!("σ_{i}u_{i} ≠ u_{i}"))?;
    }
    Ok(())
}
