//! Poles, signed sums and specialisation of central elements.
//!
//! When `δ` is specialised to an integer some idempotents stop being defined.
//! Adding idempotents together can cancel those poles, which is how blocks of
//! the specialised algebra show up.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::central::{CentralElement, OrbitIndex};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::exactring::Rational;
use crate::spore::SporeTableau;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleReport {
    pub poles: BTreeSet<Rational>,
    pub by_class: BTreeMap<SporeTableau, BTreeSet<Rational>>,
    /// For each pole, the largest number of propagating lines among the
    /// classes whose coefficient diverges there.
    pub max_prop_at_pole: BTreeMap<Rational, usize>,
}

pub fn poles(x: &CentralElement) -> PoleReport {
    let mut report = PoleReport::default();
    for (t, c) in x.terms() {
        let ps: BTreeSet<Rational> = c.poles().into_iter().collect();
        if ps.is_empty() {
            continue;
        }
        for p in &ps {
            report.poles.insert(p.clone());
            let best = report.max_prop_at_pole.entry(p.clone()).or_insert(0);
            *best = (*best).max(t.prop_count());
        }
        report.by_class.insert(t.clone(), ps);
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Σ ±x_i`, fully reduced.
pub fn combine(terms: &[(Sign, &CentralElement)]) -> Result<CentralElement> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::DimensionMismatch { left: 0, right: 0 });
    };
    let n = first.n();
    let mut out = CentralElement::zero(n);
    for (sign, x) in terms {
        if x.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: x.n() });
        }
        let signed = match sign {
            Sign::Plus => (*x).clone(),
            Sign::Minus => -*x,
        };
        out = &out + &signed;
    }
    Ok(out)
}

/// A central element with `δ` fixed to a rational value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedElement {
    pub n: usize,
    pub at: Rational,
    pub coeffs: BTreeMap<SporeTableau, Rational>,
}

/// Evaluates every coefficient at `δ = at`, or reports all classes with a
/// pole there.
pub fn specialize_element(x: &CentralElement, at: &Rational) -> Result<SpecializedElement> {
    let mut coeffs = BTreeMap::new();
    let mut bad = Vec::new();
    for (t, c) in x.terms() {
        match c.specialize(at) {
            Ok(v) if v.is_zero() => {}
            Ok(v) => {
                coeffs.insert(t.clone(), v);
            }
            Err(_) => bad.push(t.to_string()),
        }
    }
    if !bad.is_empty() {
        return Err(Error::PoleAtClasses { at: at.clone(), classes: bad });
    }
    Ok(SpecializedElement { n: x.n(), at: at.clone(), coeffs })
}

impl SpecializedElement {
    /// Product in `B_n(δ₀)` computed diagram by diagram.
    pub fn mul(&self, rhs: &Self, index: &OrbitIndex) -> Result<Self> {
        if self.n != rhs.n || self.n != index.n() {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let expand = |x: &Self| -> Vec<(Diagram, Rational)> {
            x.coeffs.iter().flat_map(|(t, c)| index.support(t).iter().map(move |d| (d.clone(), c.clone()))).collect()
        };
        let (a, b) = (expand(self), expand(rhs));
        let powers: Vec<Rational> = (0..=self.n)
            .scan(Rational::one(), |acc, _| {
                let cur = acc.clone();
                *acc *= &self.at;
                Some(cur)
            })
            .collect();
        let mut prod: BTreeMap<Diagram, Rational> = BTreeMap::new();
        for (da, ca) in &a {
            for (db, cb) in &b {
                let (d, v) = da.compose(db)?;
                *prod.entry(d).or_insert_with(Rational::zero) += ca * cb * &powers[v as usize];
            }
        }
        prod.retain(|_, c| !c.is_zero());

        let mut coeffs = BTreeMap::new();
        let mut done = BTreeSet::new();
        for (d, c) in &prod {
            let class = index.class_of(d);
            if !done.insert(class) {
                continue;
            }
            let t = &index.classes()[class];
            if index.members(class).iter().any(|m| prod.get(m) != Some(c)) {
                return Err(Error::NonInvariant { class: t.to_string() });
            }
            coeffs.insert(t.clone(), c.clone());
        }
        Ok(SpecializedElement { n: self.n, at: self.at.clone(), coeffs })
    }
}
