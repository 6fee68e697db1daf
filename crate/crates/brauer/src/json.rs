//! JSON encodings of rational functions, central elements, pole reports and
//! linear systems.
//!
//! Integers are written as plain JSON numbers of any length, so coefficients
//! never pass through floating point.

use std::collections::BTreeMap;
use std::str::FromStr;

use brauer_core::analysis::{PoleReport, SpecializedElement};
use brauer_core::solver::SplitSystem;
use brauer_core::{CentralElement, Polynomial, Rational, RationalFunction, SporeTableau};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Value(String),
}

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "invalid JSON: {e}"),
            FormatError::Value(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

pub type FormatResult<T> = Result<T, FormatError>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RfJson {
    pub num: Vec<Number>,
    pub den: Vec<Number>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub tableau: Vec<String>,
    pub coeff: RfJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecializedJson {
    pub n: usize,
    pub at: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PoleReportJson {
    pub poles: Vec<String>,
    pub by_class: BTreeMap<String, Vec<String>>,
    pub max_prop_at_pole: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub coeffs: Vec<RfJson>,
    pub rhs: RfJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemJson {
    pub unknowns: Vec<Vec<String>>,
    pub rows: Vec<RowJson>,
}

fn number(k: &BigInt) -> Number {
    Number::from_str(&k.to_string()).expect("integers are valid JSON numbers")
}

fn integer(x: &Number) -> FormatResult<BigInt> {
    BigInt::from_str(x.as_str()).map_err(|_| FormatError::Value(format!("{x} is not an integer")))
}

fn poly_json(p: &Polynomial) -> Vec<Number> {
    p.coeffs().iter().map(number).collect()
}

fn poly_from(xs: &[Number]) -> FormatResult<Polynomial> {
    Ok(Polynomial::new(xs.iter().map(integer).collect::<FormatResult<_>>()?))
}

pub fn rf_to_json(x: &RationalFunction) -> RfJson {
    RfJson { num: poly_json(x.numerator()), den: poly_json(x.denominator()) }
}

pub fn rf_from_json(x: &RfJson) -> FormatResult<RationalFunction> {
    RationalFunction::new(poly_from(&x.num)?, poly_from(&x.den)?)
        .map_err(|e| FormatError::Value(format!("bad coefficient: {e}")))
}

pub fn rational_to_json(q: &Rational) -> RfJson {
    rf_to_json(&RationalFunction::from_rational(q))
}

pub fn tableau_from_rows(rows: &[String]) -> FormatResult<SporeTableau> {
    rows.join("|").parse().map_err(|e| FormatError::Value(format!("{e}")))
}

pub fn element_to_json(x: &CentralElement) -> ElementJson {
    ElementJson {
        n: x.n(),
        terms: x.terms().map(|(t, c)| TermJson { tableau: t.row_strings(), coeff: rf_to_json(c) }).collect(),
    }
}

pub fn element_from_json(x: &ElementJson) -> FormatResult<CentralElement> {
    let mut out = CentralElement::zero(x.n);
    for term in &x.terms {
        let t = tableau_from_rows(&term.tableau)?;
        if t.n() != x.n {
            return Err(FormatError::Value(format!("tableau {t} does not have {} boxes", x.n)));
        }
        out.add_term(t, &rf_from_json(&term.coeff)?);
    }
    Ok(out)
}

pub fn specialized_to_json(x: &SpecializedElement) -> SpecializedJson {
    SpecializedJson {
        n: x.n,
        at: x.at.to_string(),
        terms: x
            .coeffs
            .iter()
            .map(|(t, c)| TermJson { tableau: t.row_strings(), coeff: rational_to_json(c) })
            .collect(),
    }
}

pub fn poles_to_json(r: &PoleReport) -> PoleReportJson {
    PoleReportJson {
        poles: r.poles.iter().map(|p| p.to_string()).collect(),
        by_class: r
            .by_class
            .iter()
            .map(|(t, ps)| (t.to_string(), ps.iter().map(|p| p.to_string()).collect()))
            .collect(),
        max_prop_at_pole: r.max_prop_at_pole.iter().map(|(p, k)| (p.to_string(), *k)).collect(),
    }
}

pub fn system_to_json(sys: &SplitSystem) -> SystemJson {
    SystemJson {
        unknowns: sys.unknowns.iter().map(|t| t.row_strings()).collect(),
        rows: sys
            .rows
            .iter()
            .map(|r| RowJson {
                witness: Some(r.witness.to_string()),
                coeffs: r.coeffs.iter().map(rf_to_json).collect(),
                rhs: rf_to_json(&r.rhs),
            })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialise");
    s.push('\n');
    s
}

pub fn parse_element(text: &str) -> FormatResult<CentralElement> {
    element_from_json(&serde_json::from_str(text)?)
}

pub fn emit_element(x: &CentralElement) -> String {
    to_string(&element_to_json(x))
}
