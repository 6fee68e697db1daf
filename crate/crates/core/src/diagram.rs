//! Brauer diagrams: perfect matchings on the `2n` nodes `1..n, 1'..n'`.
//!
//! A diagram is stored as its partner array. Index `i < n` is the top node
//! `i+1`, index `n+i` is the bottom node `(i+1)'`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate`] will list the whole basis.
pub const MAX_ENUMERATE_N: usize = 7;

/// Largest `n` a diagram may have; composition tracks middle nodes in a `u64`.
pub const MAX_N: usize = 64;

/// Type of a pair: northern arc, southern arc or propagating line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    N,
    S,
    P,
}

impl EdgeType {
    pub fn as_char(self) -> char {
        match self {
            EdgeType::N => 'N',
            EdgeType::S => 'S',
            EdgeType::P => 'P',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'N' => Some(EdgeType::N),
            'S' => Some(EdgeType::S),
            'P' => Some(EdgeType::P),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    U,
    Sigma,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    partner: Vec<u8>,
}

impl Diagram {
    /// Builds a diagram from a partner array, checking that it is a fixed-point
    /// free involution.
    pub fn from_partners(partner: Vec<u8>) -> Result<Self> {
        let len = partner.len();
        if len == 0 || !len.is_multiple_of(2) || len / 2 > MAX_N {
            return Err(Error::NotADiagram(alloc::format!("partner array of length {len}")));
        }
        for (v, &w) in partner.iter().enumerate() {
            let w = w as usize;
            if w >= len || w == v || partner[w] as usize != v {
                return Err(Error::NotADiagram(alloc::format!("{partner:?}")));
            }
        }
        Ok(Diagram { partner })
    }

    /// Builds a diagram from 0-based index pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![u8::MAX; 2 * n];
        for &(a, b) in pairs {
            if a >= 2 * n || b >= 2 * n || partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::NotADiagram(alloc::format!("{pairs:?}")));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        Self::from_partners(partner)
    }

    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Diagram { partner }
    }

    pub fn generator(kind: Generator, i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        let p = &mut d.partner;
        match kind {
            Generator::U => {
                p[a] = b as u8;
                p[b] = a as u8;
                p[n + a] = (n + b) as u8;
                p[n + b] = (n + a) as u8;
            }
            Generator::Sigma => {
                p[a] = (n + b) as u8;
                p[n + b] = a as u8;
                p[b] = (n + a) as u8;
                p[n + a] = b as u8;
            }
        }
        Ok(d)
    }

    pub fn u(i: usize, n: usize) -> Result<Self> {
        Self::generator(Generator::U, i, n)
    }

    pub fn sigma(i: usize, n: usize) -> Result<Self> {
        Self::generator(Generator::Sigma, i, n)
    }

    /// The permutation diagram with pairs `{x, (σx)'}`; `perm[x-1] = σ(x)`.
    ///
    /// Products read left to right, so `P(σ)·P(τ) = P(x ↦ τ(σ(x)))`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        check_permutation(perm)?;
        let mut partner = vec![0u8; 2 * n];
        for (x, &image) in perm.iter().enumerate() {
            partner[x] = (n + image - 1) as u8;
            partner[n + image - 1] = x as u8;
        }
        Ok(Diagram { partner })
    }

    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    pub fn edge_type(&self, v: usize) -> EdgeType {
        let n = self.n();
        match (v < n, self.partner(v) < n) {
            (true, true) => EdgeType::N,
            (false, false) => EdgeType::S,
            _ => EdgeType::P,
        }
    }

    /// The pairs as 0-based index pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner.iter().enumerate().filter(|&(v, &w)| v < w as usize).map(|(v, &w)| (v, w as usize))
    }

    pub fn propagating_number(&self) -> usize {
        let n = self.n();
        self.partner[..n].iter().filter(|&&w| w as usize >= n).count()
    }

    /// `(n - p)/2`: the power of `δ⁻¹` attached to the normalised diagram.
    pub fn normalization_exponent(&self) -> usize {
        (self.n() - self.propagating_number()) / 2
    }

    pub fn is_permutation(&self) -> bool {
        self.propagating_number() == self.n()
    }

    /// `(π(A∘B), v(A,B))`: `self` stacked above `rhs`, with the number of
    /// closed loops left in the middle row.
    pub fn compose(&self, rhs: &Diagram) -> Result<(Diagram, u32)> {
        if self.n() != rhs.n() {
            return Err(Error::DimensionMismatch { left: self.n(), right: rhs.n() });
        }
        Ok(self.compose_unchecked(rhs))
    }

    pub(crate) fn compose_unchecked(&self, rhs: &Diagram) -> (Diagram, u32) {
        let n = self.n();
        let (a, b) = (&self.partner, &rhs.partner);
        let mut out = vec![u8::MAX; 2 * n];
        let mut seen: u64 = 0;

        // Follows the path leaving the middle row at middle node `m` downward
        // (into the bottom diagram) or upward, until it hits a boundary node of
        // the result. Returns that node's result index.
        let run = |mut m: usize, mut down: bool, seen: &mut u64| -> usize {
            loop {
                *seen |= 1 << m;
                if down {
                    let w = b[m] as usize;
                    if w >= n {
                        return w;
                    }
                    m = w;
                } else {
                    let w = a[n + m] as usize;
                    if w < n {
                        return w;
                    }
                    m = w - n;
                }
                down = !down;
            }
        };

        for start in 0..2 * n {
            if out[start] != u8::MAX {
                continue;
            }
            let end = if start < n {
                let w = a[start] as usize;
                if w < n {
                    w
                } else {
                    run(w - n, true, &mut seen)
                }
            } else {
                let w = b[start] as usize;
                if w >= n {
                    w
                } else {
                    run(w, false, &mut seen)
                }
            };
            out[start] = end as u8;
            out[end] = start as u8;
        }

        let mut loops = 0;
        for m in 0..n {
            if seen & (1 << m) != 0 {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                seen |= 1 << cur;
                let below = b[cur] as usize;
                seen |= 1 << below;
                cur = a[n + below] as usize - n;
                if cur == m {
                    break;
                }
            }
        }
        (Diagram { partner: out }, loops)
    }

    /// Relabels `x ↦ πx`, `x' ↦ (πx)'`; this is `P(π⁻¹)·A·P(π)`.
    pub fn conjugate(&self, perm: &[usize]) -> Result<Diagram> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: perm.len() });
        }
        check_permutation(perm)?;
        let rel = |v: usize| if v < n { perm[v] - 1 } else { n + perm[v - n] - 1 };
        let mut partner = vec![0u8; 2 * n];
        for v in 0..2 * n {
            partner[rel(v)] = rel(self.partner(v)) as u8;
        }
        Ok(Diagram { partner })
    }

    /// Position of this diagram in [`enumerate`]`(n, None)`.
    pub fn rank(&self) -> usize {
        let len = self.partner.len();
        let mut free: Vec<usize> = (0..len).collect();
        let mut rank = 0;
        while let Some(&lo) = free.first() {
            let hi = self.partner(lo);
            let k = free.iter().position(|&v| v == hi).expect("partner is free") - 1;
            rank = rank * (free.len() - 1) + k;
            free.retain(|&v| v != lo && v != hi);
        }
        rank
    }

    /// The priming map: swaps the two rows.
    pub fn flip(&self) -> Diagram {
        let n = self.n();
        let op = |v: usize| if v < n { v + n } else { v - n };
        let mut partner = vec![0u8; 2 * n];
        for v in 0..2 * n {
            partner[op(v)] = op(self.partner(v)) as u8;
        }
        Diagram { partner }
    }
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut hit = vec![false; n];
    for &x in perm {
        if x == 0 || x > n || hit[x - 1] {
            return Err(Error::NotAPermutation(n));
        }
        hit[x - 1] = true;
    }
    Ok(())
}

/// Every diagram on `2n` nodes with at most `max_prop` propagating lines, in
/// the order obtained by pairing the lowest free node with each larger free
/// node in turn.
pub fn enumerate(n: usize, max_prop: Option<usize>) -> Result<Vec<Diagram>> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::EnumerationBound { n, max: MAX_ENUMERATE_N });
    }
    let max_prop = max_prop.unwrap_or(n);
    let mut out = Vec::new();
    let mut partner = vec![u8::MAX; 2 * n];
    fill(n, &mut partner, 0, max_prop, &mut out);
    Ok(out)
}

fn fill(n: usize, partner: &mut [u8], prop: usize, max_prop: usize, out: &mut Vec<Diagram>) {
    let Some(lo) = partner.iter().position(|&w| w == u8::MAX) else {
        if n > 0 {
            out.push(Diagram { partner: partner.to_vec() });
        }
        return;
    };
    for hi in lo + 1..2 * n {
        if partner[hi] != u8::MAX {
            continue;
        }
        let crossing = usize::from(lo < n && hi >= n);
        if prop + crossing > max_prop {
            continue;
        }
        partner[lo] = hi as u8;
        partner[hi] = lo as u8;
        fill(n, partner, prop + crossing, max_prop, out);
        partner[lo] = u8::MAX;
        partner[hi] = u8::MAX;
    }
}

/// `(2n-1)!!`, the dimension of `B_n(δ)`.
pub fn basis_size(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

fn node_label(v: usize, n: usize) -> String {
    if v < n {
        alloc::format!("{}", v + 1)
    } else {
        alloc::format!("{}'", v - n + 1)
    }
}

impl fmt::Display for Diagram {
    /// Pair list sorted by smallest member, e.g. `{1,4}{2,4'}{1',2'}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        for (a, b) in self.pairs() {
            write!(f, "{{{},{}}}", node_label(a, n), node_label(b, n))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotADiagram(String::from(s));
        let mut raw = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(bad)?;
            let close = body.find('}').ok_or_else(bad)?;
            let (a, b) = body[..close].split_once(',').ok_or_else(bad)?;
            raw.push((parse_node(a).ok_or_else(bad)?, parse_node(b).ok_or_else(bad)?));
            rest = body[close + 1..].trim_start();
        }
        let n = raw.len();
        let index = |(label, bottom): (usize, bool)| {
            (1..=n).contains(&label).then(|| if bottom { n + label - 1 } else { label - 1 })
        };
        let pairs =
            raw.into_iter().map(|(a, b)| Some((index(a)?, index(b)?))).collect::<Option<Vec<_>>>().ok_or_else(bad)?;
        Diagram::from_pairs(n, &pairs).map_err(|_| bad())
    }
}

fn parse_node(tok: &str) -> Option<(usize, bool)> {
    let tok = tok.trim();
    let (digits, bottom) = match tok.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (tok, false),
    };
    Some((digits.parse().ok()?, bottom))
}
