//! Spore tableaux: complete invariants of `S_n`-conjugation on diagrams.
//!
//! Identifying each top node `i` with its bottom node `i'` turns a diagram into
//! a disjoint union of cycles whose edges are labelled `N`, `S` or `P`. The
//! multiset of those cycles, each read up to rotation and reflection, is the
//! spore of the diagram.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::diagram::{self, Diagram, EdgeType};
use crate::error::{Error, Result};
use crate::symgrp::IntegerPartition;

/// Canonical `{N,S,P}` tableau. Rows are bracelet-minimal words, sorted by
/// length (longest first) and then lexicographically with `N < S < P`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SporeTableau {
    rows: Vec<Vec<EdgeType>>,
}

/// Per-class metadata: the tableau, its number of `P` entries and the size of
/// the conjugation orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporeClassInfo {
    pub tableau: SporeTableau,
    pub prop_count: usize,
    pub orbit_size: usize,
}

impl SporeTableau {
    /// Canonicalises arbitrary rows.
    pub fn from_rows(rows: Vec<Vec<EdgeType>>) -> Result<Self> {
        if rows.is_empty() || rows.iter().any(Vec::is_empty) {
            return Err(Error::ParseTableau(String::from("empty row")));
        }
        let mut rows: Vec<_> = rows.iter().map(|r| canonical_bracelet(r)).collect();
        rows.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(SporeTableau { rows })
    }

    /// `n` rows of a single `P`: the class of the identity.
    pub fn identity(n: usize) -> Self {
        SporeTableau { rows: vec![vec![EdgeType::P]; n] }
    }

    /// All-`P` tableau of the given shape: the conjugacy class of permutations
    /// with that cycle type.
    pub fn permutation_class(shape: &IntegerPartition) -> Self {
        let rows = shape.parts().iter().map(|&k| vec![EdgeType::P; k]).collect();
        SporeTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<EdgeType>] {
        &self.rows
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.iter().map(|e| e.as_char()).collect()).collect()
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn prop_count(&self) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == EdgeType::P).count()
    }

    /// True iff every row has as many `N` as `S` and, ignoring `P`, the two
    /// alternate around the cycle.
    pub fn is_realizable(&self) -> bool {
        self.rows.iter().all(|r| row_is_realizable(r))
    }

    /// Shape of the cycle type if this is a class of permutations.
    pub fn permutation_shape(&self) -> Option<IntegerPartition> {
        (self.prop_count() == self.n()).then(|| IntegerPartition::new_unchecked(self.shape()))
    }
}

impl Ord for SporeTableau {
    /// Fewer `P` first, then larger shapes, then rows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.prop_count()
            .cmp(&other.prop_count())
            .then_with(|| other.shape().cmp(&self.shape()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for SporeTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SporeTableau {
    /// Rows joined by `|`, e.g. `NSP|NSP`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for e in row {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SporeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SporeTableau({self})")
    }
}

impl FromStr for SporeTableau {
    type Err = Error;

    /// Accepts rows separated by `|` or `,`, in any order and any rotation.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(['|', ','])
            .map(|r| {
                r.trim()
                    .chars()
                    .map(|c| EdgeType::from_char(c).ok_or_else(|| Error::ParseTableau(String::from(s))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows).map_err(|_| Error::ParseTableau(String::from(s)))
    }
}

/// Lexicographically least word among all rotations of `w` and of its reverse.
pub fn canonical_bracelet(w: &[EdgeType]) -> Vec<EdgeType> {
    let k = w.len();
    let mut best = w.to_vec();
    let rev: Vec<_> = w.iter().rev().copied().collect();
    for word in [w, &rev[..]] {
        for r in 0..k {
            let cand = word[r..].iter().chain(&word[..r]);
            if cand.clone().cmp(best.iter()) == Ordering::Less {
                best = cand.copied().collect();
            }
        }
    }
    best
}

pub fn row_is_realizable(row: &[EdgeType]) -> bool {
    let arcs: Vec<_> = row.iter().filter(|&&e| e != EdgeType::P).collect();
    arcs.len() % 2 == 0 && (0..arcs.len()).all(|i| arcs[i] != arcs[(i + 1) % arcs.len()])
}

/// `Sp(A)`.
pub fn spore(a: &Diagram) -> SporeTableau {
    let n = a.n();
    let op = |v: usize| if v < n { v + n } else { v - n };
    let mut used = vec![false; 2 * n];
    let mut rows = Vec::new();
    for start in 0..2 * n {
        if used[start] {
            continue;
        }
        let mut row = Vec::new();
        let mut entry = start;
        loop {
            let exit = a.partner(entry);
            used[entry] = true;
            used[exit] = true;
            row.push(a.edge_type(entry));
            entry = op(exit);
            if entry == start {
                break;
            }
        }
        rows.push(row);
    }
    SporeTableau::from_rows(rows).expect("every diagram has non-empty rows")
}

/// Spore of the diagram obtained by gluing `i` to `i'` and reading each cycle
/// of the resulting 2-regular multigraph on `n` vertices. Agrees with
/// [`spore`]; kept as an independent construction for cross-checks.
pub fn spore_by_identification(a: &Diagram) -> SporeTableau {
    let n = a.n();
    // every vertex has two edge-ends: its top and its bottom node
    let mut used = vec![false; n];
    let mut rows = Vec::new();
    for v in 0..n {
        if used[v] {
            continue;
        }
        let mut row = Vec::new();
        let mut node = v;
        loop {
            used[node % n] = true;
            let other = a.partner(node);
            row.push(a.edge_type(node));
            // leave the vertex through the edge-end not just used
            let vertex = other % n;
            node = if other < n { vertex + n } else { vertex };
            if node == v {
                break;
            }
        }
        rows.push(row);
    }
    SporeTableau::from_rows(rows).expect("non-empty rows")
}

/// Every realizable tableau for `n` with at most `max_prop` entries `P`, in
/// tableau order, generated from the row characterisation.
pub fn enumerate_spores(n: usize, max_prop: usize) -> Vec<SporeTableau> {
    let mut out = Vec::new();
    for shape in crate::symgrp::partitions(n) {
        let parts = shape.parts();
        let mut choice: Vec<Vec<EdgeType>> = Vec::with_capacity(parts.len());
        extend_rows(parts, &mut choice, 0, max_prop, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn extend_rows(
    parts: &[usize],
    chosen: &mut Vec<Vec<EdgeType>>,
    props: usize,
    max_prop: usize,
    out: &mut Vec<SporeTableau>,
) {
    let i = chosen.len();
    if i == parts.len() {
        out.push(SporeTableau::from_rows(chosen.clone()).expect("non-empty rows"));
        return;
    }
    for row in row_bracelets(parts[i]) {
        // rows of equal length are chosen in non-decreasing order so each
        // multiset is produced once
        if i > 0 && parts[i - 1] == parts[i] && row < chosen[i - 1] {
            continue;
        }
        let p = row.iter().filter(|&&e| e == EdgeType::P).count();
        if props + p > max_prop {
            continue;
        }
        chosen.push(row);
        extend_rows(parts, chosen, props + p, max_prop, out);
        chosen.pop();
    }
}

/// Canonical realizable bracelets of length `k`, sorted.
fn row_bracelets(k: usize) -> Vec<Vec<EdgeType>> {
    const ALPHABET: [EdgeType; 3] = [EdgeType::N, EdgeType::S, EdgeType::P];
    let mut out = Vec::new();
    let total = 3usize.pow(k as u32);
    for mut code in 0..total {
        let mut word = Vec::with_capacity(k);
        for _ in 0..k {
            word.push(ALPHABET[code % 3]);
            code /= 3;
        }
        if row_is_realizable(&word) && canonical_bracelet(&word) == word {
            out.push(word);
        }
    }
    out.sort();
    out
}

/// A diagram with spore `t`.
///
/// With `anchor = Some(ℓ)` the result also has northern arcs `{1,2}`, `{3,4}`,
/// …, `{n-ℓ-1, n-ℓ}`, so it is fixed by `ū = δ^{-(n-ℓ)/2} u₁u₃⋯u_{n-ℓ-1}`.
pub fn representative(t: &SporeTableau, anchor: Option<usize>) -> Result<Diagram> {
    let n = t.n();
    if !t.is_realizable() {
        return Err(Error::NotRealizable(t.to_string()));
    }
    if let Some(ell) = anchor {
        if ell > n || !(n - ell).is_multiple_of(2) {
            return Err(Error::InvalidSplitParameters { n, ell });
        }
        if t.prop_count() > ell {
            return Err(Error::TooManyPropagating { tableau: t.to_string(), max: ell });
        }
    }
    let mut pairs = Vec::with_capacity(n);
    let mut north = Vec::new();
    let mut base = 0;
    for row in t.rows() {
        let k = row.len();
        // true = top
        let mut side = row.iter().find(|&&e| e != EdgeType::P) != Some(&EdgeType::S);
        for (j, &e) in row.iter().enumerate() {
            let entry = base + j + if side { 0 } else { n };
            let exit_top = match e {
                EdgeType::N => true,
                EdgeType::S => false,
                EdgeType::P => !side,
            };
            assert!(e == EdgeType::P || side == (e == EdgeType::N), "row {row:?} does not alternate");
            let next = base + (j + 1) % k;
            let exit = next + if exit_top { 0 } else { n };
            if e == EdgeType::N {
                north.push((entry, exit));
            }
            pairs.push((entry.min(exit), entry.max(exit)));
            side = !exit_top;
        }
        base += k;
    }
    let a = Diagram::from_pairs(n, &pairs)?;
    let Some(ell) = anchor else { return Ok(a) };

    let mut perm = vec![0usize; n];
    let mut taken = vec![false; n];
    for (i, &(x, y)) in north.iter().take((n - ell) / 2).enumerate() {
        perm[x] = 2 * i + 1;
        perm[y] = 2 * i + 2;
        taken[x] = true;
        taken[y] = true;
    }
    let mut next_label = n - ell + 1;
    for (v, slot) in perm.iter_mut().enumerate() {
        if !taken[v] {
            *slot = next_label;
            next_label += 1;
        }
    }
    a.conjugate(&perm)
}

/// All diagrams with spore `t`, in enumeration order.
pub fn orbit_support(t: &SporeTableau) -> Result<Vec<Diagram>> {
    let n = t.n();
    Ok(diagram::enumerate(n, Some(t.prop_count()))?
        .into_iter()
        .filter(|d| d.propagating_number() == t.prop_count() && spore(d) == *t)
        .collect())
}
