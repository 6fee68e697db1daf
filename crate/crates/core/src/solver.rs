//! The splitting idempotents `φ_n(ℓ) = 1 + X_n(ℓ)`.
//!
//! `X_n(ℓ) = Σ c_t D_t` over classes with at most `ℓ` propagating lines, and the
//! `c_t` are fixed by `ū X = -ū` with `ū = δ^{-(n-ℓ)/2} u₁u₃⋯u_{n-ℓ-1}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::central::{CentralElement, OrbitIndex, Side};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::exactring::{common_denominator, inv_mod, mul_mod, Polynomial, Rational, RationalFunction};
use crate::spore::{self, SporeTableau};

const PRIME: u64 = (1 << 61) - 1;
const SAMPLE_POINTS: [u64; 3] = [1_000_003, 7_777_777_777, 123_456_789_012_345];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// One equation per diagram in the support of `ū X` or `ū`.
    Full,
    /// One equation per class, read at its anchored representative.
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemRow {
    pub witness: Diagram,
    pub coeffs: Vec<RationalFunction>,
    pub rhs: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSystem {
    pub n: usize,
    pub ell: usize,
    pub mode: Mode,
    pub unknowns: Vec<SporeTableau>,
    pub rows: Vec<SystemRow>,
}

fn check_params(n: usize, ell: usize) -> Result<()> {
    if n == 0 || ell >= n || !(n - ell).is_multiple_of(2) {
        return Err(Error::InvalidSplitParameters { n, ell });
    }
    Ok(())
}

/// The diagram `u₁u₃⋯u_{n-ℓ-1}`.
pub fn u_product(n: usize, ell: usize) -> Result<Diagram> {
    let mut d = Diagram::identity(n);
    for j in 0..(n - ell) / 2 {
        d = d.compose(&Diagram::u(2 * j + 1, n)?)?.0;
    }
    Ok(d)
}

/// `ū D_t` for every unknown `t`, as loop-count histograms per output diagram.
fn accumulate(
    n: usize,
    ell: usize,
    unknowns: &[SporeTableau],
    index: &OrbitIndex,
) -> Result<BTreeMap<Diagram, BTreeMap<usize, Vec<i64>>>> {
    let u = u_product(n, ell)?;
    let mut acc: BTreeMap<Diagram, BTreeMap<usize, Vec<i64>>> = BTreeMap::new();
    for (j, t) in unknowns.iter().enumerate() {
        for b in index.support(t) {
            let (w, v) = u.compose(b)?;
            let counts = acc.entry(w).or_default().entry(j).or_default();
            if counts.len() <= v as usize {
                counts.resize(v as usize + 1, 0);
            }
            counts[v as usize] += 1;
        }
    }
    Ok(acc)
}

pub fn build_system(n: usize, ell: usize, mode: Mode, index: &OrbitIndex) -> Result<SplitSystem> {
    check_params(n, ell)?;
    if index.n() != n {
        return Err(Error::DimensionMismatch { left: index.n(), right: n });
    }
    let k = (n - ell) / 2;
    let unknowns: Vec<SporeTableau> = index.classes().iter().filter(|t| t.prop_count() <= ell).cloned().collect();
    let acc = accumulate(n, ell, &unknowns, index)?;
    let u = u_product(n, ell)?;
    let target = -RationalFunction::delta_pow(-(k as i32));

    let make_row = |w: &Diagram| {
        let mut coeffs = vec![RationalFunction::zero(); unknowns.len()];
        if let Some(groups) = acc.get(w) {
            for (&j, counts) in groups {
                coeffs[j] = RationalFunction::laurent(counts, k);
            }
        }
        let rhs = if *w == u { target.clone() } else { RationalFunction::zero() };
        SystemRow { witness: w.clone(), coeffs, rhs }
    };

    let rows = match mode {
        Mode::Full => {
            let mut seen = BTreeSet::new();
            let mut rows = Vec::new();
            for (w, groups) in &acc {
                if seen.insert((groups, *w == u)) {
                    rows.push(make_row(w));
                }
            }
            rows
        }
        Mode::Reduced => {
            unknowns.iter().map(|t| Ok(make_row(&spore::representative(t, Some(ell))?))).collect::<Result<Vec<_>>>()?
        }
    };
    Ok(SplitSystem { n, ell, mode, unknowns, rows })
}

/// Indices of `m` rows that are independent after evaluating at `δ₀ mod p`.
fn independent_rows(sys: &SplitSystem, at: u64) -> Vec<usize> {
    let m = sys.unknowns.len();
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (r, row) in sys.rows.iter().enumerate() {
        let Some(mut vals) = row.coeffs.iter().map(|c| c.eval_mod(at, PRIME)).collect::<Option<Vec<_>>>() else {
            continue;
        };
        for (pivot, b) in &basis {
            let f = vals[*pivot];
            if f != 0 {
                for (x, &y) in vals.iter_mut().zip(b) {
                    *x = (*x + PRIME - mul_mod(f, y, PRIME)) % PRIME;
                }
            }
        }
        if let Some(pivot) = vals.iter().position(|&x| x != 0) {
            let inv = inv_mod(vals[pivot], PRIME);
            for x in vals.iter_mut() {
                *x = mul_mod(*x, inv, PRIME);
            }
            basis.push((pivot, vals));
            chosen.push(r);
            if chosen.len() == m {
                break;
            }
        }
    }
    chosen
}

/// Gauss–Jordan elimination on an augmented square system over `ℚ(δ)`.
/// Returns `None` if the matrix is singular.
fn gauss_jordan(mut rows: Vec<Vec<RationalFunction>>) -> Option<Vec<RationalFunction>> {
    let m = rows.len();
    for col in 0..m {
        let weight = |c: &RationalFunction| c.numerator().degree().unwrap_or(0) + c.denominator().degree().unwrap_or(0);
        let pivot = (col..m)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| (weight(&rows[r][col]), rows[r].iter().filter(|c| !c.is_zero()).count()))?;
        rows.swap(col, pivot);
        let inv = rows[col][col].inv().ok()?;
        rows[col] = rows[col].iter().map(|c| if c.is_zero() { c.clone() } else { c * &inv }).collect();
        for r in 0..m {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            let (head, tail) = rows.split_at_mut(r.max(col));
            let (target, source) = if r < col { (&mut head[r], &tail[0]) } else { (&mut tail[0], &head[col]) };
            for (x, y) in target.iter_mut().zip(source) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// True iff `Σ_j coeffs[j] c_j = rhs` where `c_j = nums[j] / den`.
fn row_holds(row: &SystemRow, nums: &[Polynomial], den: &Polynomial) -> bool {
    let (row_nums, _) = common_denominator(row.coeffs.iter().chain([&row.rhs]));
    let mut lhs = Polynomial::zero();
    for (a, b) in row_nums.iter().zip(nums) {
        if !a.is_zero() && !b.is_zero() {
            lhs = &lhs + &(a * b);
        }
    }
    lhs == &row_nums[row_nums.len() - 1] * den
}

/// Solves a split system exactly, checking every row and that each solution
/// lies in `K`.
pub fn solve(sys: &SplitSystem) -> Result<BTreeMap<SporeTableau, RationalFunction>> {
    let m = sys.unknowns.len();
    let mut chosen = Vec::new();
    for at in SAMPLE_POINTS {
        chosen = independent_rows(sys, at);
        if chosen.len() == m {
            break;
        }
    }
    if chosen.len() < m {
        return Err(Error::RankDeficient {
            rank: chosen.len(),
            unknowns: m,
            witnesses: chosen.iter().map(|&r| sys.rows[r].witness.to_string()).collect(),
        });
    }
    let augmented = chosen
        .iter()
        .map(|&r| {
            let row = &sys.rows[r];
            row.coeffs.iter().chain([&row.rhs]).cloned().collect()
        })
        .collect();
    let solution = gauss_jordan(augmented).ok_or_else(|| Error::RankDeficient {
        rank: m - 1,
        unknowns: m,
        witnesses: chosen.iter().map(|&r| sys.rows[r].witness.to_string()).collect(),
    })?;

    let (nums, den) = common_denominator(&solution);
    for row in &sys.rows {
        if !row_holds(row, &nums, &den) {
            return Err(Error::Inconsistent { witness: row.witness.to_string() });
        }
    }
    for c in &solution {
        if !c.in_k() {
            return Err(Error::NotInK(c.to_string()));
        }
    }
    Ok(sys.unknowns.iter().cloned().zip(solution).collect())
}

/// `φ_n(ℓ)`, solved from the full system.
pub fn splitting_idempotent(n: usize, ell: usize, index: &OrbitIndex) -> Result<CentralElement> {
    splitting_idempotent_with(n, ell, Mode::Full, index)
}

pub fn splitting_idempotent_with(n: usize, ell: usize, mode: Mode, index: &OrbitIndex) -> Result<CentralElement> {
    let sys = build_system(n, ell, mode, index)?;
    let coeffs = solve(&sys)?;
    let mut phi = CentralElement::identity(n);
    for (t, c) in coeffs {
        phi.add_term(t, &c);
    }
    Ok(phi)
}

/// Outcome of the checks that characterise a splitting idempotent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Identity coefficient is 1.
    pub identity_ok: bool,
    /// Every other class has at most `ℓ` propagating lines.
    pub support_ok: bool,
    /// `(ℓ', φ·U_ℓ' = 0, U_ℓ'·φ = 0)` for each `ℓ' ≤ ℓ` of the right parity.
    pub annihilates: Vec<(usize, bool, bool)>,
    pub central: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.identity_ok && self.support_ok && self.central && self.annihilates.iter().all(|&(_, l, r)| l && r)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.identity_ok {
            out.push(String::from("identity coefficient is not 1"));
        }
        if !self.support_ok {
            out.push(String::from("support leaves the ideal"));
        }
        for &(l, left, right) in &self.annihilates {
            if !left {
                out.push(alloc::format!("φ·U_{l} ≠ 0"));
            }
            if !right {
                out.push(alloc::format!("U_{l}·φ ≠ 0"));
            }
        }
        if !self.central {
            out.push(String::from("not central"));
        }
        out
    }
}

/// Checks `φ ≡ 1` modulo the ideal `J_n(ℓ)`, `φ J = J φ = 0` and centrality.
///
/// Annihilating `U_ℓ'` on both sides is enough for the whole ideal because every
/// diagram with `ℓ'` propagating lines is `σ U_ℓ' τ` for permutations `σ, τ`,
/// and `φ` commutes with those.
pub fn verify_fast(phi: &CentralElement, ell: usize, index: &OrbitIndex) -> Result<VerifyReport> {
    let n = phi.n();
    let id = SporeTableau::identity(n);
    let mut report = VerifyReport {
        identity_ok: phi.coeff(&id).is_one(),
        support_ok: phi.terms().all(|(t, _)| *t == id || t.prop_count() <= ell),
        ..Default::default()
    };
    let one = RationalFunction::one();
    for l in (n % 2..=ell.min(n.saturating_sub(1))).step_by(2) {
        let u = u_product(n, l)?;
        let right = phi.mul_by_diagram(&u, &one, Side::Right, index)?.is_empty();
        let left = phi.mul_by_diagram(&u, &one, Side::Left, index)?.is_empty();
        report.annihilates.push((l, right, left));
    }
    report.central = phi.is_central(index)?;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub diagonal_residues: Vec<Rational>,
    pub off_diagonal_residues: Vec<Rational>,
    pub determinant: RationalFunction,
    pub determinant_residue: Option<Rational>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        let one = Rational::from_integer(1.into());
        self.diagonal_residues.iter().all(|r| *r == one)
            && self.off_diagonal_residues.iter().all(|r| *r == Rational::from_integer(0.into()))
            && self.determinant_residue.as_ref().is_some_and(|r| *r == one || *r == -one.clone())
    }
}

/// Residues modulo `Kδ⁻¹` of the square reduced matrix: the diagonal should be
/// 1, everything else 0, and the determinant a unit.
pub fn structural_checks(sys: &SplitSystem) -> Result<StructuralReport> {
    let m = sys.unknowns.len();
    if sys.rows.len() != m {
        return Err(Error::DimensionMismatch { left: sys.rows.len(), right: m });
    }
    let mut diagonal_residues = Vec::new();
    let mut off_diagonal_residues = Vec::new();
    for (i, row) in sys.rows.iter().enumerate() {
        for (j, c) in row.coeffs.iter().enumerate() {
            let r = c.k_residue()?;
            if i == j {
                diagonal_residues.push(r);
            } else if !c.is_zero() {
                off_diagonal_residues.push(r);
            }
        }
    }
    let determinant = determinant(sys.rows.iter().map(|r| r.coeffs.clone()).collect());
    let determinant_residue = determinant.k_residue().ok();
    Ok(StructuralReport { diagonal_residues, off_diagonal_residues, determinant, determinant_residue })
}

/// Determinant over `ℚ(δ)` by elimination.
pub fn determinant(mut rows: Vec<Vec<RationalFunction>>) -> RationalFunction {
    let m = rows.len();
    let mut det = RationalFunction::one();
    for col in 0..m {
        let Some(pivot) = (col..m).find(|&r| !rows[r][col].is_zero()) else {
            return RationalFunction::zero();
        };
        if pivot != col {
            rows.swap(col, pivot);
            det = -det;
        }
        let p = rows[col][col].clone();
        det = &det * &p;
        let inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..m {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] * &inv;
            let (upper, lower) = rows.split_at_mut(r);
            for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    det
}
