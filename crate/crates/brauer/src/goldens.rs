//! Coefficient tables from the worked examples, embedded as JSON, and the
//! machinery to recompute and compare them.
//!
//! `goldens/LABELS.md` maps the printed labels onto canonical tableaux.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use brauer_core::analysis::{combine, Sign};
use brauer_core::diagram::MAX_ENUMERATE_N;
use brauer_core::solver::{self, Mode};
use brauer_core::symgrp::{primitive_from_split, young_central_idempotent};
use brauer_core::{CentralElement, IntegerPartition, OrbitIndex, RationalFunction, SporeTableau};

use crate::json::{self, FormatError, FormatResult, SystemJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Split {
        n: usize,
        ell: usize,
    },
    Young(&'static str),
    Primitive(&'static str),
    /// `φ₄(0) - φ₄(2) + φ₄((3,1))`.
    BlockSum,
    /// The reduced linear system for `φ_n(ℓ)`.
    System {
        n: usize,
        ell: usize,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct GoldenTable {
    pub id: &'static str,
    pub source: Source,
    /// Only classes with at most this many propagating lines are compared.
    pub max_prop: Option<usize>,
    pub text: &'static str,
}

macro_rules! golden {
    ($id:literal, $source:expr) => {
        golden!($id, $source, None)
    };
    ($id:literal, $source:expr, $max_prop:expr) => {
        GoldenTable {
            id: $id,
            source: $source,
            max_prop: $max_prop,
            text: include_str!(concat!("../goldens/", $id, ".json")),
        }
    };
}

pub const GOLDENS: &[GoldenTable] = &[
    golden!("phi_2_0", Source::Split { n: 2, ell: 0 }),
    golden!("phi_4_0", Source::Split { n: 4, ell: 0 }),
    golden!("phi_4_2", Source::Split { n: 4, ell: 2 }),
    golden!("sys_4_0", Source::System { n: 4, ell: 0 }),
    golden!("sys_4_2", Source::System { n: 4, ell: 2 }),
    golden!("e_2", Source::Young("2")),
    golden!("e_11", Source::Young("1,1")),
    golden!("e_31", Source::Young("3,1")),
    golden!("phi_2_l2", Source::Primitive("2")),
    golden!("phi_2_l11", Source::Primitive("1,1")),
    golden!("phi_4_l31", Source::Primitive("3,1")),
    golden!("block_sum_4", Source::BlockSum, Some(2)),
    golden!("phi_6_0", Source::Split { n: 6, ell: 0 }),
    golden!("phi_6_2", Source::Split { n: 6, ell: 2 }),
    golden!("phi_6_4", Source::Split { n: 6, ell: 4 }),
];

/// A printed coefficient that is demonstrably wrong, with its correction.
#[derive(Clone, Copy, Debug)]
pub struct Erratum {
    pub id: &'static str,
    pub tableau: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub note: &'static str,
}

pub const ERRATA: &[Erratum] = &[Erratum {
    id: "phi_6_0",
    tableau: "NS|NS|NS",
    printed: "(d^2+3d-2)/(d(d-2)(d-1)(d+2)(d+4))",
    corrected: "-(d^2+3d-2)/(d(d-2)(d-1)(d+2)(d+4))",
    note: "sign of the NS,NS,NS coefficient; with the printed sign the element is neither idempotent nor central",
}];

pub fn errata_for(id: &str) -> impl Iterator<Item = &'static Erratum> + '_ {
    ERRATA.iter().filter(move |e| e.id == id)
}

/// Replaces each printed coefficient listed in [`ERRATA`] by its correction.
/// Fails if the golden text does not contain the printed value.
pub fn apply_errata(id: &str, element: &mut CentralElement) -> Result<(), Failure> {
    for e in errata_for(id) {
        let t: SporeTableau = e.tableau.parse().map_err(err)?;
        let printed = crate::expr::parse(e.printed).map_err(err)?;
        if element.coeff(&t) != printed {
            return Err(err(format!("erratum for {} {} no longer matches the golden", e.id, e.tableau)));
        }
        element.set(t, crate::expr::parse(e.corrected).map_err(err)?);
    }
    Ok(())
}

/// Confirms an erratum: the element as printed must fail to be idempotent.
pub fn check_erratum(e: &Erratum, engine: &Engine) -> Result<(), Failure> {
    let table = find(e.id).ok_or_else(|| err("unknown golden"))?;
    let Source::Split { n, .. } = table.source else {
        return Err(err("errata are only checked for splitting idempotents"));
    };
    let printed = json::parse_element(table.text).map_err(err)?;
    let index = engine.index(n).map_err(err)?;
    if printed.mul(&printed, index).map_err(err)? == printed {
        return Err(err("the printed element is idempotent, so the erratum is unfounded"));
    }
    Ok(())
}

pub const TRANSCRIPTION: &str = include_str!("../goldens/transcription.txt");

pub fn find(id: &str) -> Option<&'static GoldenTable> {
    GOLDENS.iter().find(|g| g.id == id)
}

/// Golden text, read from `dir/<id>.json` when a directory is given.
pub fn text_of(table: &GoldenTable, dir: Option<&Path>) -> std::io::Result<String> {
    match dir {
        Some(d) => std::fs::read_to_string(d.join(format!("{}.json", table.id))),
        None => Ok(table.text.to_string()),
    }
}

/// Shared, lazily built orbit indices and splitting idempotents.
#[derive(Default)]
pub struct Engine {
    indices: [OnceLock<Result<OrbitIndex, brauer_core::Error>>; MAX_ENUMERATE_N + 1],
    split: Mutex<BTreeMap<(usize, usize), CentralElement>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn index(&self, n: usize) -> brauer_core::Result<&OrbitIndex> {
        let slot = self.indices.get(n).ok_or(brauer_core::Error::EnumerationBound { n, max: MAX_ENUMERATE_N })?;
        slot.get_or_init(|| OrbitIndex::new(n)).as_ref().map_err(Clone::clone)
    }

    pub fn split(&self, n: usize, ell: usize) -> brauer_core::Result<CentralElement> {
        if let Some(x) = self.split.lock().unwrap().get(&(n, ell)) {
            return Ok(x.clone());
        }
        let phi = solver::splitting_idempotent(n, ell, self.index(n)?)?;
        self.split.lock().unwrap().insert((n, ell), phi.clone());
        Ok(phi)
    }

    pub fn primitive(&self, lambda: &IntegerPartition) -> brauer_core::Result<CentralElement> {
        let n = lambda.n();
        if n < 2 {
            return Err(brauer_core::Error::InvalidSplitParameters { n, ell: 0 });
        }
        primitive_from_split(&self.split(n, n - 2)?, lambda, self.index(n)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// First coefficient that differs, in canonical class order.
    Mismatch {
        class: String,
        expected: String,
        actual: String,
    },
    Error(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Mismatch { class, expected, actual } => {
                write!(f, "{class}: expected {expected}, got {actual}")
            }
            Failure::Error(msg) => f.write_str(msg),
        }
    }
}

fn err(e: impl std::fmt::Display) -> Failure {
    Failure::Error(e.to_string())
}

/// Compares two elements class by class, optionally ignoring classes with
/// more than `max_prop` propagating lines.
pub fn compare(expected: &CentralElement, actual: &CentralElement, max_prop: Option<usize>) -> Result<(), Failure> {
    if expected.n() != actual.n() {
        return Err(err(format!("expected n = {}, got n = {}", expected.n(), actual.n())));
    }
    let mut classes: Vec<&SporeTableau> = expected.coeffs().keys().chain(actual.coeffs().keys()).collect();
    classes.sort();
    classes.dedup();
    for t in classes {
        if max_prop.is_some_and(|m| t.prop_count() > m) {
            continue;
        }
        let (e, a) = (expected.coeff(t), actual.coeff(t));
        if e != a {
            return Err(Failure::Mismatch { class: t.to_string(), expected: e.to_string(), actual: a.to_string() });
        }
    }
    Ok(())
}

pub struct ParsedSystem {
    pub unknowns: Vec<SporeTableau>,
    pub rows: Vec<(Vec<RationalFunction>, RationalFunction)>,
}

pub fn parse_system(text: &str) -> FormatResult<ParsedSystem> {
    let raw: SystemJson = serde_json::from_str(text)?;
    let unknowns = raw.unknowns.iter().map(|t| json::tableau_from_rows(t)).collect::<FormatResult<Vec<_>>>()?;
    let rows = raw
        .rows
        .iter()
        .map(|r| {
            if r.coeffs.len() != unknowns.len() {
                return Err(FormatError::Value(format!(
                    "row has {} entries for {} unknowns",
                    r.coeffs.len(),
                    unknowns.len()
                )));
            }
            let coeffs = r.coeffs.iter().map(json::rf_from_json).collect::<FormatResult<Vec<_>>>()?;
            Ok((coeffs, json::rf_from_json(&r.rhs)?))
        })
        .collect::<FormatResult<Vec<_>>>()?;
    Ok(ParsedSystem { unknowns, rows })
}

/// The reduced system must have the printed entries with unknowns and
/// equations matched up by tableau.
fn check_system(n: usize, ell: usize, text: &str, engine: &Engine) -> Result<(), Failure> {
    let expected = parse_system(text).map_err(err)?;
    let sys = solver::build_system(n, ell, Mode::Reduced, engine.index(n).map_err(err)?).map_err(err)?;
    if expected.unknowns.len() != sys.unknowns.len() || expected.rows.len() != sys.rows.len() {
        return Err(err(format!(
            "expected a {}x{} system, got {}x{}",
            expected.rows.len(),
            expected.unknowns.len(),
            sys.rows.len(),
            sys.unknowns.len()
        )));
    }
    let position = |t: &SporeTableau| {
        sys.unknowns.iter().position(|u| u == t).ok_or_else(|| err(format!("{t} is not an unknown")))
    };
    let columns = expected.unknowns.iter().map(position).collect::<Result<Vec<_>, _>>()?;
    for (i, (coeffs, rhs)) in expected.rows.iter().enumerate() {
        let row = &sys.rows[columns[i]];
        for (j, c) in coeffs.iter().enumerate() {
            if *c != row.coeffs[columns[j]] {
                return Err(Failure::Mismatch {
                    class: format!("row {}, column {}", expected.unknowns[i], expected.unknowns[j]),
                    expected: c.to_string(),
                    actual: row.coeffs[columns[j]].to_string(),
                });
            }
        }
        if *rhs != row.rhs {
            return Err(Failure::Mismatch {
                class: format!("row {}, right-hand side", expected.unknowns[i]),
                expected: rhs.to_string(),
                actual: row.rhs.to_string(),
            });
        }
    }
    Ok(())
}

fn partition(s: &str) -> Result<IntegerPartition, Failure> {
    s.parse().map_err(err)
}

/// Recomputes the element a golden table describes. For a system this is
/// the idempotent it determines.
pub fn compute(source: Source, engine: &Engine) -> brauer_core::Result<CentralElement> {
    match source {
        Source::Split { n, ell } | Source::System { n, ell } => engine.split(n, ell),
        Source::Young(l) => young_central_idempotent(&l.parse()?),
        Source::Primitive(l) => engine.primitive(&l.parse()?),
        Source::BlockSum => {
            let (a, b) = (engine.split(4, 0)?, engine.split(4, 2)?);
            let c = engine.primitive(&"3,1".parse()?)?;
            combine(&[(Sign::Plus, &a), (Sign::Minus, &b), (Sign::Plus, &c)])
        }
    }
}

/// Checks one golden table given its (possibly edited) JSON text.
pub fn check(table: &GoldenTable, text: &str, engine: &Engine) -> Result<(), Failure> {
    if let Source::System { n, ell } = table.source {
        return check_system(n, ell, text, engine);
    }
    if let Source::Young(l) | Source::Primitive(l) = table.source {
        partition(l)?;
    }
    let mut expected = json::parse_element(text).map_err(err)?;
    apply_errata(table.id, &mut expected)?;
    let actual = compute(table.source, engine).map_err(err)?;
    compare(&expected, &actual, table.max_prop)
}

/// One block of the hand transcription.
#[derive(Clone, Debug)]
pub struct TranscribedBlock {
    pub id: String,
    /// `(label, tableau as printed, coefficient text)`.
    pub lines: Vec<(String, String, String)>,
}

pub fn transcription() -> Vec<TranscribedBlock> {
    let mut out: Vec<TranscribedBlock> = Vec::new();
    for line in TRANSCRIPTION.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let id = rest.split(']').next().unwrap_or_default();
            out.push(TranscribedBlock { id: id.to_string(), lines: Vec::new() });
        } else if let Some(block) = out.last_mut() {
            let mut fields = line.splitn(3, '|').map(|f| f.trim().to_string());
            let (a, b, c) = (fields.next(), fields.next(), fields.next());
            block.lines.push((a.unwrap_or_default(), b.unwrap_or_default(), c.unwrap_or_default()));
        }
    }
    out
}

/// Checks that each embedded JSON element equals the hand transcription read
/// through [`crate::expr`].
pub fn check_transcription(table: &GoldenTable, text: &str) -> Result<(), Failure> {
    let block = transcription().into_iter().find(|b| b.id == table.id).ok_or_else(|| err("not transcribed"))?;
    if let Source::System { .. } = table.source {
        let expected = parse_system(text).map_err(err)?;
        let mut rows = block.lines.iter();
        let (_, unknowns, rest) = rows.next().ok_or_else(|| err("empty system"))?;
        let names: Vec<SporeTableau> = std::iter::once(unknowns.as_str())
            .chain(rest.split('|'))
            .map(|t| t.trim().parse().map_err(err))
            .collect::<Result<_, _>>()?;
        if names != expected.unknowns {
            return Err(err("unknowns differ from the transcription"));
        }
        for ((_, coeffs, rhs), (exp_coeffs, exp_rhs)) in rows.zip(&expected.rows) {
            let parsed = coeffs.split(',').map(crate::expr::parse).collect::<Result<Vec<_>, _>>().map_err(err)?;
            if parsed != *exp_coeffs || crate::expr::parse(rhs).map_err(err)? != *exp_rhs {
                return Err(err(format!("row {coeffs} differs from the transcription")));
            }
        }
        return Ok(());
    }
    let expected = json::parse_element(text).map_err(err)?;
    let mut from_text = CentralElement::zero(expected.n());
    for (_, tableau, coeff) in &block.lines {
        let t: SporeTableau = tableau.parse().map_err(err)?;
        from_text.add_term(t, &crate::expr::parse(coeff).map_err(err)?);
    }
    compare(&from_text, &expected, None)
}
