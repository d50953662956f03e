//! Degreewise views of `R/I`: standard-monomial bases, Hilbert functions,
//! the socle and the integers `d` and `δ`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::ideal::{Ideal, LinearForm};
use crate::linalg::{sparse_rank, SparseRow};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    /// `h_0, h_1, ...`; for Artinian quotients the last value is nonzero and
    /// everything beyond is zero.
    pub values: Vec<u64>,
    pub artinian: bool,
    /// Last degree computed when the quotient is not Artinian.
    pub truncation_bound: Option<u32>,
}

impl HilbertFunction {
    pub fn at(&self, j: u32) -> u64 {
        self.values.get(j as usize).copied().unwrap_or(0)
    }

    /// Top degree with `h_j > 0` (Artinian case).
    pub fn socle_degree(&self) -> Option<u32> {
        self.values.iter().rposition(|&h| h > 0).map(|j| j as u32)
    }

    /// `dim_K R/I` for Artinian quotients.
    pub fn length(&self) -> u64 {
        self.values.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleProfile {
    /// degree -> dim Soc(R/I)_j, nonzero entries only; serialized as
    /// `[j, dim]` pairs
    #[serde(with = "degree_pairs")]
    pub dims: BTreeMap<u32, u64>,
    pub socle_degree: u32,
    pub initial_degree: u32,
}

impl SocleProfile {
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn at(&self, j: u32) -> u64 {
        self.dims.get(&j).copied().unwrap_or(0)
    }
}

/// Serde adapter writing a degree map as sorted `[degree, value]` pairs.
pub(crate) mod degree_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<u32, u64>, s: S) -> Result<S::Ok, S::Error> {
        map.iter().map(|(&j, &v)| [j as u64, v]).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u32, u64>, D::Error> {
        let pairs: Vec<[u64; 2]> = Vec::deserialize(d)?;
        let mut out = BTreeMap::new();
        for [j, v] in pairs {
            let j = u32::try_from(j).map_err(serde::de::Error::custom)?;
            if out.insert(j, v).is_some() {
                return Err(serde::de::Error::custom(format!("duplicate degree {j}")));
            }
        }
        Ok(out)
    }
}

/// Degree-`j` monomials outside the initial ideal, in descending order.
/// They form a basis of `(R/I)_j`.
pub fn std_monomials(ideal: &Ideal, j: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = crate::monomial::monomials_of_degree(ideal.ring().nvars(), j)
        .into_iter()
        .filter(|m| ideal.is_standard(m))
        .collect();
    let order = ideal.ring().order();
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// The leading-term ideal contains a pure power of every variable.
pub fn is_m_primary(ideal: &Ideal) -> bool {
    let n = ideal.ring().nvars();
    let mut seen = vec![false; n];
    for m in ideal.leading_monomials() {
        if m.is_one() {
            return true;
        }
        if let Some(k) = m.pure_power_var() {
            seen[k] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Hilbert function of an Artinian quotient `R/I`.
pub fn hilbert_function(ideal: &Ideal) -> Result<HilbertFunction> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let mut values = GradedQuotient::artinian(ideal).dims();
    values.pop();
    Ok(HilbertFunction { values, artinian: true, truncation_bound: None })
}

/// `h_0, ..., h_bound` of `R/I` for any homogeneous ideal.
pub fn hilbert_function_bounded(ideal: &Ideal, bound: u32) -> HilbertFunction {
    let q = GradedQuotient::new(ideal, bound);
    let artinian = is_m_primary(ideal);
    let mut values = q.dims();
    if artinian {
        while values.last() == Some(&0) {
            values.pop();
        }
    }
    HilbertFunction { values, artinian, truncation_bound: (!artinian).then_some(bound) }
}

/// Socle of `R/I` from `dim (I:m)/I = h(R/I) - h(R/(I:m))`.
pub fn socle_profile(ideal: &Ideal) -> Result<SocleProfile> {
    let hf = hilbert_function(ideal)?;
    if hf.values.is_empty() {
        return Err(AlgebraError::InvalidArgument("the unit ideal has no socle".into()));
    }
    let colon = ideal.colon_ideal(&Ideal::maximal(ideal.ring()))?;
    let hc = hilbert_function(&colon)?;
    let dims: BTreeMap<u32, u64> = (0..hf.values.len() as u32)
        .map(|j| (j, hf.at(j) - hc.at(j)))
        .filter(|&(_, v)| v > 0)
        .collect();
    let initial_degree = *dims.keys().next().expect("a nonzero Artinian algebra has a socle");
    let socle_degree = *dims.keys().next_back().unwrap();
    Ok(SocleProfile { dims, socle_degree, initial_degree })
}

/// `d = 1 + ` initial degree of the socle.
pub fn d_invariant(ideal: &Ideal) -> Result<u32> {
    Ok(socle_profile(ideal)?.initial_degree + 1)
}

/// Least `j` with `(R/(I + xR))_j = 0`, where `h_j(R/(I + xR))` is
/// `h_j(R/I)` minus the rank of `x : (R/I)_{j-1} -> (R/I)_j`.
pub fn delta_invariant(ideal: &Ideal, x: &LinearForm) -> Result<u32> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let q = GradedQuotient::artinian(ideal);
    let h = q.hilbert_modulo(std::slice::from_ref(x));
    Ok(h.iter().position(|&v| v == 0).expect("the last degree of an Artinian quotient is zero") as u32)
}

/// `R/I` in degrees `0..=top`, with bases of standard monomials and the
/// multiplication maps `x_k : (R/I)_t -> (R/I)_{t+1}`.
pub struct GradedQuotient<'a> {
    ideal: &'a Ideal,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// mult[t][i][k] = x_k * bases[t][i] in coordinates of degree t + 1
    mult: Vec<Vec<Vec<SparseRow>>>,
}

impl<'a> GradedQuotient<'a> {
    pub fn new(ideal: &'a Ideal, top: u32) -> Self {
        let mut q = GradedQuotient { ideal, bases: Vec::new(), index: Vec::new(), mult: Vec::new() };
        let n = ideal.ring().nvars();
        let first = if ideal.is_standard(&Monomial::one(n)) { vec![Monomial::one(n)] } else { Vec::new() };
        q.push_degree(first);
        for _ in 0..top {
            q.extend();
        }
        q
    }

    /// All nonzero degrees of an Artinian quotient, plus the first zero one.
    pub fn artinian(ideal: &'a Ideal) -> Self {
        let mut q = Self::new(ideal, 0);
        while !q.bases.last().unwrap().is_empty() {
            q.extend();
        }
        q
    }

    fn push_degree(&mut self, basis: Vec<Monomial>) {
        self.index.push(basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect());
        self.bases.push(basis);
    }

    /// Adds the next degree. Standard monomials are closed under division, so
    /// each one of degree `t + 1` is `x_k m` for a standard `m` of degree `t`
    /// and `k` at least the last variable of `m`.
    fn extend(&mut self) {
        let n = self.ideal.ring().nvars();
        let order = self.ideal.ring().order();
        let prev = self.bases.last().unwrap();
        let mut next = Vec::new();
        for m in prev {
            let start = m.max_var_index().unwrap_or(0);
            for k in start..n {
                let c = m.mul_var(k);
                if self.ideal.is_standard(&c) {
                    next.push(c);
                }
            }
        }
        next.sort_by(|a, b| order.cmp(b, a));
        self.push_degree(next);

        let t = self.bases.len() - 2;
        let ring = self.ideal.ring().clone();
        let table = self.bases[t]
            .iter()
            .map(|m| {
                (0..n)
                    .map(|k| {
                        let prod = m.mul_var(k);
                        if let Some(&i) = self.index[t + 1].get(&prod) {
                            return vec![(i, ring.field().one())];
                        }
                        let nf = self.ideal.normal_form(&Polynomial::from_monomial(&ring, prod)).unwrap();
                        self.coordinates(t + 1, &nf)
                    })
                    .collect()
            })
            .collect();
        self.mult.push(table);
    }

    fn coordinates(&self, t: usize, f: &Polynomial) -> SparseRow {
        let mut row: Vec<(usize, Scalar)> =
            f.terms().iter().map(|term| (self.index[t][&term.monomial], term.coeff.clone())).collect();
        row.sort_by_key(|e| e.0);
        row
    }

    pub fn ideal(&self) -> &Ideal {
        self.ideal
    }

    pub fn top(&self) -> u32 {
        (self.bases.len() - 1) as u32
    }

    pub fn basis(&self, t: u32) -> &[Monomial] {
        self.bases.get(t as usize).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, t: u32) -> usize {
        self.basis(t).len()
    }

    /// Dimensions `h_0, ..., h_top`.
    pub fn dims(&self) -> Vec<u64> {
        self.bases.iter().map(|b| b.len() as u64).collect()
    }

    /// `x_k` times the `i`-th basis element of degree `t`, in coordinates of
    /// degree `t + 1`. Requires `t < top`.
    pub fn mul_var(&self, k: usize, t: u32, i: usize) -> &SparseRow {
        &self.mult[t as usize][i][k]
    }

    /// Dimension of `x_1 A_t + ... + x_r A_t` inside `A_{t+1}`, where the
    /// `x_i` are the given linear forms.
    pub fn image_rank(&self, forms: &[LinearForm], t: u32) -> usize {
        if t + 1 > self.top() {
            return 0;
        }
        let field = self.ideal.ring().field();
        let mut rows = Vec::with_capacity(forms.len() * self.dim(t));
        for x in forms {
            for i in 0..self.dim(t) {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in x.coeffs().iter().enumerate() {
                    if field.is_zero(a) {
                        continue;
                    }
                    for (c, v) in self.mul_var(k, t, i) {
                        let e = acc.entry(*c).or_insert_with(|| field.zero());
                        *e = field.add(e, &field.mul(a, v));
                    }
                }
                rows.push(acc.into_iter().filter(|(_, v)| !field.is_zero(v)).collect());
            }
        }
        sparse_rank(field, rows)
    }

    /// `h_j(R/(I + (x_1, ..., x_r)))` for `j <= top`, read off the ranks of
    /// multiplication maps without forming the larger ideal.
    pub fn hilbert_modulo(&self, forms: &[LinearForm]) -> Vec<u64> {
        (0..=self.top())
            .map(|j| {
                let h = self.dim(j) as u64;
                if j == 0 || forms.is_empty() {
                    h
                } else {
                    h - self.image_rank(forms, j - 1) as u64
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::PolyRing;
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(FieldSpec::default(), names).unwrap()
    }

    fn mono_ideal(r: &Arc<PolyRing>, gens: &[&[u32]]) -> Ideal {
        Ideal::from_monomials(r, gens.iter().map(|e| Monomial::new(e).unwrap()).collect())
    }

    fn xyz_cubics(r: &Arc<PolyRing>) -> Ideal {
        let base = mono_ideal(r, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[0, 3, 0]]);
        base.sum(&Ideal::maximal_power(r, 4).unwrap()).unwrap()
    }

    /// Socle as the kernel of `(R/I)_j -> (R/I)_{j+1}^n`, an independent
    /// route to the colon-based computation.
    fn socle_by_kernel(ideal: &Ideal) -> BTreeMap<u32, u64> {
        let q = GradedQuotient::artinian(ideal);
        let n = ideal.ring().nvars();
        let mut out = BTreeMap::new();
        for t in 0..q.top() {
            let h_next = q.dim(t + 1);
            let rows: Vec<SparseRow> = (0..q.dim(t))
                .map(|i| {
                    (0..n)
                        .flat_map(|k| q.mul_var(k, t, i).iter().map(move |(c, v)| (k * h_next + c, v.clone())))
                        .collect()
                })
                .collect();
            let kernel = q.dim(t) - sparse_rank(ideal.ring().field(), rows);
            if kernel > 0 {
                out.insert(t, kernel as u64);
            }
        }
        out
    }

    #[test]
    fn standard_monomials_of_small_ideals() {
        let r = ring(&["x", "y", "z"]);
        let m2 = Ideal::maximal_power(&r, 2).unwrap();
        assert_eq!(std_monomials(&m2, 1).len(), 3);
        assert!(std_monomials(&m2, 2).is_empty());
        assert_eq!(std_monomials(&xyz_cubics(&r), 3).len(), 6);
    }

    #[test]
    fn hilbert_functions() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(hilbert_function(&xyz_cubics(&r)).unwrap().values, vec![1, 3, 6, 6]);
        let r2 = ring(&["x", "y"]);
        assert_eq!(hilbert_function(&Ideal::maximal(&r2)).unwrap().values, vec![1]);
        assert_eq!(hilbert_function(&Ideal::maximal_power(&r2, 2).unwrap()).unwrap().values, vec![1, 2]);
        let x = mono_ideal(&r2, &[&[1, 0]]);
        assert_eq!(hilbert_function(&x).unwrap_err(), AlgebraError::NotMPrimary);
        let hf = hilbert_function_bounded(&x, 3);
        assert_eq!(hf.values, vec![1, 1, 1, 1]);
        assert!(!hf.artinian);
        assert_eq!(hf.truncation_bound, Some(3));
    }

    #[test]
    fn m_primary_detection() {
        let r = ring(&["x", "y"]);
        assert!(is_m_primary(&Ideal::maximal_power(&r, 3).unwrap()));
        assert!(!is_m_primary(&mono_ideal(&r, &[&[1, 0]])));
        let w = ring(&["w", "x", "y", "z"]);
        let base = mono_ideal(&w, &[&[3, 0, 0, 0], &[0, 3, 0, 0], &[0, 2, 1, 0]]);
        assert!(is_m_primary(&base.sum(&Ideal::maximal_power(&w, 4).unwrap()).unwrap()));
        assert!(!is_m_primary(&base));
    }

    #[test]
    fn socles_and_d() {
        let r = ring(&["x", "y"]);
        for t in 1..5 {
            let mt = Ideal::maximal_power(&r, t).unwrap();
            let s = socle_profile(&mt).unwrap();
            assert_eq!(s.dims, BTreeMap::from([(t - 1, t as u64)]));
            assert_eq!(d_invariant(&mt).unwrap(), t);
        }
        let ci = mono_ideal(&r, &[&[2, 0], &[0, 2]]);
        assert_eq!(socle_profile(&ci).unwrap().dims, BTreeMap::from([(2, 1)]));
        assert_eq!(d_invariant(&ci).unwrap(), 3);

        let r3 = ring(&["x", "y", "z"]);
        let i = xyz_cubics(&r3);
        let s = socle_profile(&i).unwrap();
        assert_eq!(s.dims, BTreeMap::from([(2, 1), (3, 6)]));
        assert_eq!((s.initial_degree, s.socle_degree), (2, 3));
        assert_eq!(d_invariant(&i).unwrap(), 3);
        assert_eq!(socle_by_kernel(&i), s.dims);
    }

    #[test]
    fn delta_values() {
        let r = ring(&["x", "y", "z"]);
        let f = r.field();
        let x = LinearForm::new(&r, vec![f.from_i64(17), f.from_i64(-5), f.from_i64(123)]).unwrap();
        let i = xyz_cubics(&r);
        let image = i.quotient_by_linear_form(&x).unwrap();
        assert_eq!(hilbert_function(&image).unwrap().values, vec![1, 2, 3, 1]);
        assert_eq!(delta_invariant(&i, &x).unwrap(), 4);
        let q = GradedQuotient::artinian(&i);
        assert_eq!(q.hilbert_modulo(std::slice::from_ref(&x)), vec![1, 2, 3, 1, 0]);
        assert_eq!(delta_invariant(&Ideal::maximal(&r), &x).unwrap(), 1);

        let r2 = ring(&["x", "y"]);
        let x2 = LinearForm::new(&r2, vec![r2.field().from_i64(3), r2.field().from_i64(7)]).unwrap();
        assert_eq!(delta_invariant(&Ideal::maximal_power(&r2, 2).unwrap(), &x2).unwrap(), 2);
    }

    #[test]
    fn multiplication_maps_reduce_non_monomial_products() {
        // (x^2 - y^2, xy) + m^3: x * x = y^2 in degree 2
        let r = ring(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let i = Ideal::new(&r, vec![&(&x * &x) - &(&y * &y), &x * &y]).unwrap();
        let q = GradedQuotient::artinian(&i);
        assert_eq!(q.dims(), vec![1, 2, 1, 0]);
        let xi = q.basis(1).iter().position(|m| m.exponent(0) == 1).unwrap();
        let image = q.mul_var(0, 1, xi);
        assert_eq!(image.len(), 1);
        assert_eq!(q.basis(2)[image[0].0], Monomial::new(&[0, 2]).unwrap());
        assert_eq!(socle_by_kernel(&i), socle_profile(&i).unwrap().dims);
    }
}
