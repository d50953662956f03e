//! Graded Betti numbers from graded strands of the Koszul complex.
//!
//! `Tor_p(R/I, K)_j` is the homology of
//! `Λ^{p+1} ⊗ (R/I)_{j-p-1} -> Λ^p ⊗ (R/I)_{j-p} -> Λ^{p-1} ⊗ (R/I)_{j-p+1}`,
//! so each Betti number is a dimension minus two ranks.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::field::FieldSpec;
use crate::graded::{is_m_primary, GradedQuotient};
use crate::ideal::Ideal;
use crate::linalg::{sparse_rank, SparseRow};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleTag {
    /// Betti numbers of the ideal `I`.
    Ideal,
    /// Betti numbers of `R/I`; `β_{i,j}(I) = β_{i+1,j}(R/I)`.
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub tag: ModuleTag,
    pub nvars: usize,
    /// Nonzero entries keyed by `(i, j)`; serialized as sorted `[i, j, β]` triples.
    #[serde(serialize_with = "entries_to_triples", deserialize_with = "entries_from_triples")]
    pub entries: BTreeMap<(u32, u32), u64>,
}

fn entries_to_triples<S: Serializer>(entries: &BTreeMap<(u32, u32), u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let triples: Vec<[u64; 3]> = entries.iter().map(|(&(i, j), &b)| [i as u64, j as u64, b]).collect();
    triples.serialize(s)
}

fn entries_from_triples<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<(u32, u32), u64>, D::Error> {
    let triples: Vec<[u64; 3]> = Vec::deserialize(d)?;
    let mut out = BTreeMap::new();
    for [i, j, b] in triples {
        let i = u32::try_from(i).map_err(serde::de::Error::custom)?;
        let j = u32::try_from(j).map_err(serde::de::Error::custom)?;
        if b == 0 {
            return Err(serde::de::Error::custom("Betti triples list nonzero entries only"));
        }
        if out.insert((i, j), b).is_some() {
            return Err(serde::de::Error::custom(format!("duplicate Betti entry ({i}, {j})")));
        }
    }
    Ok(out)
}

impl BettiTable {
    pub fn at(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Same data under the other tag.
    pub fn with_tag(&self, tag: ModuleTag) -> BettiTable {
        if tag == self.tag {
            return self.clone();
        }
        let entries = match tag {
            ModuleTag::Ideal => {
                self.entries.iter().filter(|(&(i, _), _)| i > 0).map(|(&(i, j), &b)| ((i - 1, j), b)).collect()
            }
            ModuleTag::Quotient => {
                let mut e: BTreeMap<(u32, u32), u64> =
                    self.entries.iter().map(|(&(i, j), &b)| ((i + 1, j), b)).collect();
                e.insert((0, 0), 1);
                e
            }
        };
        BettiTable { tag, nvars: self.nvars, entries }
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: u32) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &b)| b).sum()
    }

    pub fn triples(&self) -> Vec<[u64; 3]> {
        self.entries.iter().map(|(&(i, j), &b)| [i as u64, j as u64, b]).collect()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }` read off the ideal-tagged table.
    pub fn regularity(&self) -> Option<i64> {
        self.with_tag(ModuleTag::Ideal).entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }
}

/// Subsets of `{0, ..., n-1}` of size `p` as bit masks, in increasing order.
fn subsets(n: usize, p: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == p).collect()
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of `Λ^p ⊗ A_{j-p} -> Λ^{p-1} ⊗ A_{j-p+1}` with `A` the quotient
/// truncated at `q.top()`. Needs `j <= q.top()`.
fn strand_rank(q: &GradedQuotient<'_>, p: u32, j: u32) -> usize {
    let n = q.ideal().ring().nvars();
    if p == 0 || p as usize > n || j < p {
        return 0;
    }
    let t = j - p;
    let (h_src, h_dst) = (q.dim(t), q.dim(t + 1));
    if h_src == 0 || h_dst == 0 {
        return 0;
    }
    let field = q.ideal().ring().field();
    let targets: HashMap<u32, usize> = subsets(n, p as usize - 1).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut rows: Vec<SparseRow> = Vec::new();
    for s in subsets(n, p as usize) {
        for a in 0..h_src {
            let mut row = Vec::new();
            let mut position = 0;
            for k in 0..n {
                if s & (1 << k) == 0 {
                    continue;
                }
                let block = targets[&(s & !(1 << k))] * h_dst;
                for (c, v) in q.mul_var(k, t, a) {
                    let v = if position % 2 == 0 { v.clone() } else { field.neg(v) };
                    row.push((block + c, v));
                }
                position += 1;
            }
            row.sort_by_key(|e| e.0);
            rows.push(row);
        }
    }
    sparse_rank(field, rows)
}

/// Rank of the Koszul differential `Λ^p ⊗ (R/I)_{j-p} -> Λ^{p-1} ⊗ (R/I)_{j-p+1}`.
pub fn koszul_strand_rank(ideal: &Ideal, p: u32, j: u32) -> usize {
    let q = GradedQuotient::new(ideal, j + 1);
    strand_rank(&q, p, j)
}

fn betti_from_quotient(q: &GradedQuotient<'_>, top: u32, tag: ModuleTag) -> BettiTable {
    let n = q.ideal().ring().nvars() as u32;
    let mut ranks: HashMap<(u32, u32), usize> = HashMap::new();
    let mut rank = |p: u32, j: u32| *ranks.entry((p, j)).or_insert_with(|| strand_rank(q, p, j));
    let mut entries = BTreeMap::new();
    for j in 0..=top {
        for p in 0..=n.min(j) {
            let dim = binomial(n as u64, p as u64) * q.dim(j - p) as u64;
            if dim == 0 {
                continue;
            }
            let b = dim - rank(p, j) as u64 - rank(p + 1, j) as u64;
            if b > 0 {
                entries.insert((p, j), b);
            }
        }
    }
    BettiTable { tag: ModuleTag::Quotient, nvars: n as usize, entries }.with_tag(tag)
}

/// Graded Betti numbers of `I` or `R/I`, scanning every degree in which an
/// entry can be nonzero: up to `c + n` for Artinian quotients with socle
/// degree `c`, otherwise up to `n + reg(in(I))`.
pub fn betti_table(ideal: &Ideal, tag: ModuleTag) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(AlgebraError::InvalidArgument("Betti numbers of the unit ideal".into()));
    }
    let n = ideal.ring().nvars() as u32;
    let top = if is_m_primary(ideal) {
        let q = GradedQuotient::artinian(ideal);
        q.top() + n
    } else {
        let reg = monomial_regularity(ideal.ring().field(), &ideal.leading_monomials()).unwrap_or(0);
        n + reg.max(0) as u32
    };
    Ok(betti_table_bounded(ideal, tag, top))
}

/// Betti numbers `β_{i,j}` for `j <= max_degree` only.
pub fn betti_table_bounded(ideal: &Ideal, tag: ModuleTag, max_degree: u32) -> BettiTable {
    let q = GradedQuotient::new(ideal, max_degree + 1);
    betti_from_quotient(&q, max_degree, tag)
}

/// `I` is generated in degree `d` and its resolution is `d`-linear.
pub fn has_linear_resolution(ideal: &Ideal, d: u32) -> Result<bool> {
    if ideal.generators().iter().any(|g| g.total_degree() != Some(d) || !g.is_homogeneous()) {
        return Err(AlgebraError::Precondition(format!("generators are not all of degree {d}")));
    }
    if ideal.is_zero() {
        return Ok(true);
    }
    let table = betti_table(ideal, ModuleTag::Ideal)?;
    Ok(table.entries.keys().all(|&(i, j)| j == i + d))
}

/// `max { j - i : β_{i,j}(I) ≠ 0 }`.
pub fn regularity(ideal: &Ideal) -> Result<i64> {
    betti_table(ideal, ModuleTag::Ideal)?
        .regularity()
        .ok_or_else(|| AlgebraError::InvalidArgument("the zero ideal has no regularity".into()))
}

/// Multigraded Betti numbers of a monomial ideal: `β_{i,b} = dim H̃_{i-1}(K^b)`
/// where `K^b` is the simplicial complex of squarefree `F` with `x^{b-F} ∈ M`.
/// Only lcms of generators can carry nonzero entries.
pub(crate) fn monomial_betti_multigraded(field: &FieldSpec, gens: &[Monomial]) -> Vec<(u32, Monomial, u64)> {
    let minimal: Vec<Monomial> = gens
        .iter()
        .enumerate()
        .filter(|(i, g)| !gens.iter().enumerate().any(|(k, h)| h.divides(g) && (h != *g || k < *i)))
        .map(|(_, g)| g.clone())
        .collect();
    let in_ideal = |m: &Monomial| minimal.iter().any(|g| g.divides(m));

    let mut lattice: HashSet<Monomial> = minimal.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = minimal.clone();
    while let Some(e) = frontier.pop() {
        for g in &minimal {
            let l = e.lcm(g);
            if lattice.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    let mut lattice: Vec<Monomial> = lattice.into_iter().collect();
    lattice.sort_by(|a, b| a.exponents().cmp(b.exponents()));

    let mut out = Vec::new();
    for b in lattice {
        let n = b.nvars();
        let support: Vec<usize> = (0..n).filter(|&k| b.exponent(k) > 0).collect();
        // faces of the upper Koszul complex, grouped by size
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); support.len() + 1];
        for mask in 0u32..1 << support.len() {
            let mut exps: Vec<u32> = b.exponents().collect();
            for (bit, &k) in support.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    exps[k] -= 1;
                }
            }
            if in_ideal(&Monomial::new(&exps).unwrap()) {
                faces[mask.count_ones() as usize].push(mask);
            }
        }
        // boundary ∂_s: faces of size s -> faces of size s - 1
        let boundary_rank = |s: usize| -> usize {
            if s == 0 || s >= faces.len() || faces[s].is_empty() || faces[s - 1].is_empty() {
                return 0;
            }
            let index: HashMap<u32, usize> = faces[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let rows = faces[s]
                .iter()
                .map(|&f| {
                    let mut row: SparseRow = Vec::new();
                    let mut pos = 0;
                    for bit in 0..32 {
                        if f & (1 << bit) == 0 {
                            continue;
                        }
                        if let Some(&c) = index.get(&(f & !(1 << bit))) {
                            row.push((c, if pos % 2 == 0 { field.one() } else { field.neg(&field.one()) }));
                        }
                        pos += 1;
                    }
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect();
            sparse_rank(field, rows)
        };
        // reduced homology in dimension s - 1 lives on faces of size s
        for s in 0..faces.len() {
            let dim = faces[s].len();
            if dim == 0 {
                continue;
            }
            let h = dim - boundary_rank(s) - boundary_rank(s + 1);
            if h > 0 {
                out.push((s as u32, b.clone(), h as u64));
            }
        }
    }
    out
}

/// Regularity of a monomial ideal from its multigraded Betti numbers.
pub(crate) fn monomial_regularity(field: &FieldSpec, gens: &[Monomial]) -> Option<i64> {
    monomial_betti_multigraded(field, gens).into_iter().map(|(i, b, _)| b.degree() as i64 - i as i64).max()
}
