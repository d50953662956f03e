//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

/// Largest exponent allowed for a single variable.
pub const MAX_EXPONENT: u8 = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u8; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), degree: 0 }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        let mut out = SmallVec::with_capacity(exps.len());
        for &e in exps {
            if e > MAX_EXPONENT as u32 {
                return Err(AlgebraError::ExponentOverflow(e));
            }
            out.push(e as u8);
        }
        Ok(Self::from_small(out))
    }

    fn from_small(exps: SmallVec<[u8; 8]>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// The variable `x_k` in a ring with `n` variables.
    pub fn var(n: usize, k: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, n);
        exps[k] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, k: usize) -> u32 {
        self.exps[k] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Largest (0-based) index of a variable dividing the monomial.
    pub fn max_var_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// `Some(k)` when the monomial is a pure power of `x_k`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        let (k, _) = support.next()?;
        support.next().is_none().then_some(k)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                let e = a + b;
                assert!(e <= MAX_EXPONENT, "exponent exceeds {MAX_EXPONENT}");
                e
            })
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn mul_var(&self, k: usize) -> Monomial {
        let mut out = self.clone();
        assert!(out.exps[k] < MAX_EXPONENT, "exponent exceeds {MAX_EXPONENT}");
        out.exps[k] += 1;
        out.degree += 1;
        out
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Self::from_small(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Drops variable `k`, returning the monomial in the remaining variables
    /// (or `None` when `x_k` divides the monomial).
    pub fn drop_var(&self, k: usize) -> Option<Monomial> {
        if self.exps[k] != 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps.remove(k);
        Some(Monomial { exps, degree: self.degree })
    }

    /// Inserts a new variable with exponent `e` at position `k`.
    pub fn insert_var(&self, k: usize, e: u8) -> Monomial {
        let mut exps = self.exps.clone();
        exps.insert(k, e);
        Monomial { exps, degree: self.degree + e as u32 }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// All monomials of total degree `degree` in `n` variables, in lexicographic
/// order (x_1^degree first).
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    fn rec(n: usize, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == n {
            cur[k] = left;
            out.push(Monomial::new(cur).expect("exponent within bound"));
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e;
            rec(n, k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0; n];
    rec(n, 0, degree, &mut cur, &mut out);
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
    Deglex,
    /// Block order eliminating variable 0: compare the exponent of `x_0`
    /// first, then degrevlex on the remaining variables.
    EliminateFirst,
}

fn revlex_tail(a: &[u8], b: &[u8]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => {
                a.degree.cmp(&b.degree).then_with(|| revlex_tail(&a.exps, &b.exps))
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Deglex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::EliminateFirst => a.exps[0].cmp(&b.exps[0]).then_with(|| {
                let (da, db) = (a.degree - a.exps[0] as u32, b.degree - b.exps[0] as u32);
                da.cmp(&db).then_with(|| revlex_tail(&a.exps[1..], &b.exps[1..]))
            }),
        }
    }

    /// Degree used to schedule critical pairs. For the elimination order the
    /// tag variable carries weight zero, which keeps tagged homogeneous inputs
    /// homogeneous.
    pub fn sugar(&self, m: &Monomial) -> u32 {
        match self {
            MonomialOrder::EliminateFirst => m.degree - m.exps[0] as u32,
            _ => m.degree,
        }
    }
}

/// Checked comparison of two monomials under `order`.
pub fn monomial_cmp(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::Structural(format!(
            "monomials have {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    if order == MonomialOrder::EliminateFirst && a.nvars() == 0 {
        return Err(AlgebraError::Structural("elimination order needs a variable".into()));
    }
    Ok(order.cmp(a, b))
}
