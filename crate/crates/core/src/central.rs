//! The centraliser of `S_n` in `B_n(δ)`, spanned by the orbit sums `D_t`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;

use crate::diagram::{self, Diagram};
use crate::error::{Error, Result};
use crate::exactring::{common_denominator, Polynomial, RationalFunction};
use crate::spore::{self, SporeClassInfo, SporeTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// All conjugation orbits of `J_n`, bucketed once.
///
/// Every central-element operation needs to move between classes and their
/// member diagrams; building this table is the only place the whole basis is
/// enumerated.
#[derive(Clone, Debug)]
pub struct OrbitIndex {
    n: usize,
    classes: Vec<SporeTableau>,
    members: Vec<Vec<Diagram>>,
    // indexed by `Diagram::rank`
    class_of: Vec<u16>,
}

impl OrbitIndex {
    pub fn new(n: usize) -> Result<Self> {
        let basis = diagram::enumerate(n, None)?;
        let spores: Vec<SporeTableau> = basis.iter().map(spore::spore).collect();
        let mut classes = spores.clone();
        classes.sort();
        classes.dedup();
        let mut members = vec![Vec::new(); classes.len()];
        let mut class_of = Vec::with_capacity(basis.len());
        for (d, s) in basis.into_iter().zip(&spores) {
            let c = classes.binary_search(s).expect("class was collected");
            class_of.push(c as u16);
            members[c].push(d);
        }
        Ok(OrbitIndex { n, classes, members, class_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Classes in tableau order.
    pub fn classes(&self) -> &[SporeTableau] {
        &self.classes
    }

    pub fn class_index(&self, t: &SporeTableau) -> Option<usize> {
        self.classes.binary_search(t).ok()
    }

    pub fn class_of(&self, d: &Diagram) -> usize {
        self.class_of[d.rank()] as usize
    }

    pub fn members(&self, class: usize) -> &[Diagram] {
        &self.members[class]
    }

    pub fn support(&self, t: &SporeTableau) -> &[Diagram] {
        self.class_index(t).map_or(&[], |c| &self.members[c])
    }

    pub fn info(&self, class: usize) -> SporeClassInfo {
        let tableau = self.classes[class].clone();
        SporeClassInfo { prop_count: tableau.prop_count(), orbit_size: self.members[class].len(), tableau }
    }

    pub fn infos(&self, max_prop: usize) -> Vec<SporeClassInfo> {
        (0..self.classes.len()).filter(|&c| self.classes[c].prop_count() <= max_prop).map(|c| self.info(c)).collect()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == self.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: self.n, right: n })
        }
    }
}

/// An element `Σ_t c_t D_t` of the centraliser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    n: usize,
    coeffs: BTreeMap<SporeTableau, RationalFunction>,
}

impl CentralElement {
    pub fn zero(n: usize) -> Self {
        CentralElement { n, coeffs: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut x = Self::zero(n);
        x.set(SporeTableau::identity(n), RationalFunction::one());
        x
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (SporeTableau, RationalFunction)>,
    {
        let mut x = Self::zero(n);
        for (t, c) in terms {
            x.add_term(t, &c);
        }
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, t: &SporeTableau) -> RationalFunction {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<SporeTableau, RationalFunction> {
        &self.coeffs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SporeTableau, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn set(&mut self, t: SporeTableau, c: RationalFunction) {
        if c.is_zero() {
            self.coeffs.remove(&t);
        } else {
            self.coeffs.insert(t, c);
        }
    }

    pub fn add_term(&mut self, t: SporeTableau, c: &RationalFunction) {
        let sum = &self.coeff(&t) + c;
        self.set(t, sum);
    }

    pub fn scale(&self, k: &RationalFunction) -> Self {
        Self::from_terms(self.n, self.coeffs.iter().map(|(t, c)| (t.clone(), c * k)))
    }

    /// Largest number of `P` entries among the support.
    pub fn max_prop(&self) -> Option<usize> {
        self.coeffs.keys().map(SporeTableau::prop_count).max()
    }

    /// Every diagram of every supported class, with its class coefficient.
    pub fn expand(&self, index: &OrbitIndex) -> Result<DiagramVector> {
        index.check(self.n)?;
        let mut out = DiagramVector::zero(self.n);
        for (t, c) in &self.coeffs {
            let members = index.support(t);
            if members.is_empty() {
                return Err(Error::NotRealizable(t.to_string()));
            }
            for d in members {
                out.coeffs.insert(d.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Inverse of [`CentralElement::expand`]; fails unless `v` is constant on
    /// every class.
    pub fn contract(v: &DiagramVector, index: &OrbitIndex) -> Result<Self> {
        index.check(v.n)?;
        let mut out = Self::zero(v.n);
        let mut seen = vec![false; index.classes.len()];
        for (d, c) in &v.coeffs {
            let class = index.class_of(d);
            if seen[class] {
                continue;
            }
            seen[class] = true;
            let t = &index.classes[class];
            if index.members(class).iter().any(|m| v.coeffs.get(m) != Some(c)) {
                return Err(Error::NonInvariant { class: t.to_string() });
            }
            out.set(t.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product in the centraliser.
    ///
    /// Because `D_t D_s` is itself central, its coefficient on `D_r` can be
    /// read off at one diagram, or averaged over the class: fixing one member
    /// `A` of the class `t`,
    ///
    /// ```text
    /// [D_r] D_t D_s = |O_t| / |O_r| · Σ_{B ∈ O_s, AB ∈ O_r} δ^{v(A,B)}
    /// ```
    ///
    /// so each class of `self` costs one composition per diagram supporting
    /// `rhs`, rather than the full double expansion done by
    /// [`CentralElement::mul_expanded`].
    pub fn mul(&self, rhs: &Self, index: &OrbitIndex) -> Result<Self> {
        index.check(self.n)?;
        index.check(rhs.n)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.n));
        }
        let n_classes = index.classes.len();
        let (b_nums, b_den) = common_denominator(rhs.coeffs.values());
        let (a_nums, a_den) = common_denominator(self.coeffs.values());
        let rhs_classes = rhs
            .coeffs
            .keys()
            .map(|s| index.class_index(s).ok_or_else(|| Error::NotRealizable(s.to_string())))
            .collect::<Result<Vec<_>>>()?;

        let mut total = vec![Polynomial::zero(); n_classes];
        let mut counts = vec![[0i64; diagram::MAX_ENUMERATE_N + 1]; n_classes];
        for (t, a_num) in self.coeffs.keys().zip(&a_nums) {
            let tc = index.class_index(t).ok_or_else(|| Error::NotRealizable(t.to_string()))?;
            let rep = &index.members(tc)[0];
            let t_size = index.members(tc).len() as i64;
            let mut row = vec![Polynomial::zero(); n_classes];
            for (&sc, b_num) in rhs_classes.iter().zip(&b_nums) {
                let mut touched = Vec::new();
                for b in index.members(sc) {
                    let (d, v) = rep.compose_unchecked(b);
                    let r = index.class_of(&d);
                    if counts[r].iter().all(|&c| c == 0) {
                        touched.push(r);
                    }
                    counts[r][v as usize] += 1;
                }
                for r in touched {
                    let r_size = index.members(r).len() as i64;
                    let structure: Vec<BigInt> = counts[r]
                        .iter()
                        .map(|&c| {
                            let scaled = c * t_size;
                            assert_eq!(scaled % r_size, 0, "structure constant is not integral");
                            BigInt::from(scaled / r_size)
                        })
                        .collect();
                    counts[r] = [0; diagram::MAX_ENUMERATE_N + 1];
                    row[r] = &row[r] + &(b_num * &Polynomial::new(structure));
                }
            }
            for (r, p) in row.into_iter().enumerate() {
                if !p.is_zero() {
                    total[r] = &total[r] + &(a_num * &p);
                }
            }
        }
        let den = &a_den * &b_den;
        let mut out = Self::zero(self.n);
        for (r, p) in total.into_iter().enumerate() {
            if !p.is_zero() {
                out.set(index.classes[r].clone(), RationalFunction::new(p, den.clone())?);
            }
        }
        Ok(out)
    }

    /// Product by expanding both factors into diagrams and multiplying every
    /// pair.
    pub fn mul_expanded(&self, rhs: &Self, index: &OrbitIndex) -> Result<Self> {
        let prod = self.expand(index)?.mul(&rhs.expand(index)?)?;
        Self::contract(&prod, index)
    }

    /// `scale · expand(self) · d` (or `scale · d · expand(self)`).
    pub fn mul_by_diagram(
        &self,
        d: &Diagram,
        scale: &RationalFunction,
        side: Side,
        index: &OrbitIndex,
    ) -> Result<DiagramVector> {
        let v = self.expand(index)?;
        let single = DiagramVector::from_diagram(d.clone(), scale.clone());
        match side {
            Side::Right => v.mul(&single),
            Side::Left => single.mul(&v),
        }
    }

    /// Whether `expand(self)` commutes with every `u_i` and `σ_i`.
    pub fn is_central(&self, index: &OrbitIndex) -> Result<bool> {
        let v = self.expand(index)?;
        for i in 1..self.n {
            for g in [Diagram::u(i, self.n)?, Diagram::sigma(i, self.n)?] {
                let g = DiagramVector::from_diagram(g, RationalFunction::one());
                if v.mul_numerators(&g)? != g.mul_numerators(&v)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl Add for &CentralElement {
    type Output = CentralElement;
    fn add(self, rhs: &CentralElement) -> CentralElement {
        assert_eq!(self.n, rhs.n, "adding central elements of different n");
        let mut out = self.clone();
        for (t, c) in &rhs.coeffs {
            out.add_term(t.clone(), c);
        }
        out
    }
}

impl Sub for &CentralElement {
    type Output = CentralElement;
    fn sub(self, rhs: &CentralElement) -> CentralElement {
        self + &(-rhs)
    }
}

impl Neg for &CentralElement {
    type Output = CentralElement;
    fn neg(self) -> CentralElement {
        CentralElement { n: self.n, coeffs: self.coeffs.iter().map(|(t, c)| (t.clone(), -c)).collect() }
    }
}

/// A general element `Σ_A c_A A` of `B_n(δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramVector {
    n: usize,
    coeffs: BTreeMap<Diagram, RationalFunction>,
}

impl DiagramVector {
    pub fn zero(n: usize) -> Self {
        DiagramVector { n, coeffs: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram, c: RationalFunction) -> Self {
        let mut v = Self::zero(d.n());
        v.add_term(d, &c);
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> RationalFunction {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &RationalFunction)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, d: Diagram, c: &RationalFunction) {
        let sum = &self.coeff(&d) + c;
        if sum.is_zero() {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, sum);
        }
    }

    /// Diagram-by-diagram product.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let (nums, den) = self.mul_numerators(rhs)?;
        let mut out = Self::zero(self.n);
        for (d, p) in nums {
            out.coeffs.insert(d, RationalFunction::new(p, den.clone())?);
        }
        Ok(out)
    }

    /// The product as numerators over one shared denominator, zero terms
    /// dropped. Terms are grouped by the pair of coefficients involved and
    /// counted as integers per loop count, so each output diagram costs a few
    /// polynomial multiply-adds and no gcd.
    pub(crate) fn mul_numerators(&self, rhs: &Self) -> Result<(BTreeMap<Diagram, Polynomial>, Polynomial)> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let (left_vals, left_ids) = intern(&self.coeffs);
        let (right_vals, right_ids) = intern(&rhs.coeffs);
        let mut acc: BTreeMap<Diagram, BTreeMap<(usize, usize), Vec<i64>>> = BTreeMap::new();
        for (a, &i) in self.coeffs.keys().zip(&left_ids) {
            for (b, &j) in rhs.coeffs.keys().zip(&right_ids) {
                let (d, v) = a.compose_unchecked(b);
                let counts = acc.entry(d).or_default().entry((i, j)).or_default();
                if counts.len() <= v as usize {
                    counts.resize(v as usize + 1, 0);
                }
                counts[v as usize] += 1;
            }
        }
        let (left_nums, left_den) = common_denominator(&left_vals);
        let (right_nums, right_den) = common_denominator(&right_vals);
        let mut pairs: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
        let mut out = BTreeMap::new();
        for (d, groups) in acc {
            let mut p = Polynomial::zero();
            for ((i, j), counts) in groups {
                let pair = pairs.entry((i, j)).or_insert_with(|| &left_nums[i] * &right_nums[j]);
                let weight = Polynomial::new(counts.into_iter().map(BigInt::from).collect());
                p = &p + &(&*pair * &weight);
            }
            if !p.is_zero() {
                out.insert(d, p);
            }
        }
        Ok((out, &left_den * &right_den))
    }

    pub fn scale(&self, k: &RationalFunction) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.coeffs {
            out.add_term(d.clone(), &(c * k));
        }
        out
    }
}

fn intern(coeffs: &BTreeMap<Diagram, RationalFunction>) -> (Vec<RationalFunction>, Vec<usize>) {
    let mut vals: Vec<RationalFunction> = Vec::new();
    let mut lookup: BTreeMap<&RationalFunction, usize> = BTreeMap::new();
    let ids = coeffs
        .values()
        .map(|c| {
            *lookup.entry(c).or_insert_with(|| {
                vals.push(c.clone());
                vals.len() - 1
            })
        })
        .collect();
    (vals, ids)
}

impl Add for &DiagramVector {
    type Output = DiagramVector;
    fn add(self, rhs: &DiagramVector) -> DiagramVector {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(d.clone(), c);
        }
        out
    }
}

impl Sub for &DiagramVector {
    type Output = DiagramVector;
    fn sub(self, rhs: &DiagramVector) -> DiagramVector {
        self + &rhs.scale(&RationalFunction::from_int(-1))
    }
}
