//! Generic initial ideals for the degree reverse lexicographic order.

use std::collections::{HashMap, HashSet};

use crate::error::{AlgebraError, Result};
use crate::graded::{hilbert_function, is_m_primary};
use crate::ideal::Ideal;
use crate::linalg::{sparse_echelon, Matrix, SparseRow};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::props::genericity::{vote, GenericityPolicy};

/// Minimal generators of `in(g·I)` for the coordinate change `g`.
///
/// For m-primary ideals the initial ideal is read off degree by degree: the
/// leading monomials of `(g·I)_d` are the pivot columns of an echelon form
/// whose columns are the degree-`d` monomials in descending order. Degrees
/// past the socle degree hold every monomial, so the scan is finite. Other
/// ideals go through a Gröbner basis.
pub fn initial_ideal_after_change(ideal: &Ideal, g: &Matrix) -> Result<Vec<Monomial>> {
    if ideal.ring().order() != MonomialOrder::Degrevlex {
        return Err(AlgebraError::InvalidRing("generic initial ideals use degrevlex".into()));
    }
    let moved = ideal.apply_linear_change(g)?;
    if !is_m_primary(ideal) || ideal.is_unit() || !ideal.is_homogeneous() {
        return Ok(moved.leading_monomials());
    }
    let top = hilbert_function(ideal)?.values.len() as u32;
    Ok(degreewise_initial_generators(moved.generators(), ideal, top))
}

fn degreewise_initial_generators(gens: &[Polynomial], ideal: &Ideal, top: u32) -> Vec<Monomial> {
    let ring = ideal.ring();
    let (n, field, order) = (ring.nvars(), ring.field(), ring.order());
    let mut minimal = Vec::new();
    let mut prev_rows: Vec<SparseRow> = Vec::new();
    let mut prev_mons: Vec<Monomial> = Vec::new();
    let mut prev_leading: HashSet<Monomial> = HashSet::new();
    for d in 0..=top {
        let mut mons = monomials_of_degree(n, d);
        mons.sort_by(|a, b| order.cmp(b, a));
        let index: HashMap<&Monomial, usize> = mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<SparseRow> = Vec::new();
        for r in &prev_rows {
            for k in 0..n {
                let mut row: SparseRow = r.iter().map(|(c, v)| (index[&prev_mons[*c].mul_var(k)], v.clone())).collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
        for g in gens.iter().filter(|g| g.total_degree() == Some(d)) {
            let mut row: SparseRow = g.terms().iter().map(|t| (index[&t.monomial], t.coeff.clone())).collect();
            row.sort_by_key(|e| e.0);
            rows.push(row);
        }
        let echelon = sparse_echelon(field, rows);
        let leading: HashSet<Monomial> = echelon.iter().map(|r| mons[r[0].0].clone()).collect();
        let mut fresh: Vec<Monomial> = leading
            .iter()
            .filter(|m| {
                (0..n).all(|k| m.exponent(k) == 0 || !prev_leading.contains(&divide_var(m, k)))
            })
            .cloned()
            .collect();
        fresh.sort_by(|a, b| order.cmp(b, a));
        minimal.extend(fresh);
        prev_rows = echelon;
        prev_mons = mons;
        prev_leading = leading;
    }
    minimal.sort_by(|a, b| order.cmp(b, a));
    minimal
}

fn divide_var(m: &Monomial, k: usize) -> Monomial {
    let mut exps: Vec<u32> = m.exponents().collect();
    exps[k] -= 1;
    Monomial::new(&exps).unwrap()
}

/// `in(g·I)` for `policy.trials` random invertible `g`; all draws of a round
/// must agree.
pub fn gin(ideal: &Ideal, policy: &GenericityPolicy) -> Result<Ideal> {
    let ring = ideal.ring();
    let gens = vote(policy, "gin", |rng| {
        let g = Matrix::random_invertible(ring.field(), ring.nvars(), rng);
        initial_ideal_after_change(ideal, &g)
    })?;
    Ok(Ideal::from_monomials(ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::props::stable::is_stable;
    use crate::ring::PolyRing;
    use std::sync::Arc;

    fn mono_ideal(r: &Arc<PolyRing>, gens: &[&[u32]]) -> Ideal {
        Ideal::from_monomials(r, gens.iter().map(|e| Monomial::new(e).unwrap()).collect())
    }

    #[test]
    fn degreewise_matches_groebner_route() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y", "z"]).unwrap();
        let base = mono_ideal(&r, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[0, 3, 0]]);
        let i = base.sum(&Ideal::maximal_power(&r, 4).unwrap()).unwrap();
        let policy = GenericityPolicy::with_seed(1);
        let mut rng = policy.rng("t", 0);
        let g = Matrix::random_invertible(r.field(), 3, &mut rng);
        let degreewise = initial_ideal_after_change(&i, &g).unwrap();
        let via_gb = i.apply_linear_change(&g).unwrap().leading_monomials();
        assert_eq!(degreewise, via_gb);
    }

    #[test]
    fn principal_ideal_goes_to_a_power_of_the_first_variable() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y", "z"]).unwrap();
        let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
        let f = &(&(&y * &y) * &z) - &(&x * &(&z * &z));
        let j = gin(&Ideal::new(&r, vec![f]).unwrap(), &GenericityPolicy::default()).unwrap();
        assert!(j.equals(&mono_ideal(&r, &[&[3, 0, 0]])).unwrap());
    }

    #[test]
    fn borel_fixed_ideals_are_fixed_over_the_rationals() {
        let r = PolyRing::new(FieldSpec::rationals(), &["x", "y"]).unwrap();
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let j = gin(&i, &GenericityPolicy::default()).unwrap();
        assert!(j.equals(&i).unwrap());
        let r3 = PolyRing::new(FieldSpec::rationals(), &["x", "y", "z"]).unwrap();
        let i = mono_ideal(&r3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]])
            .sum(&Ideal::maximal_power(&r3, 3).unwrap())
            .unwrap();
        assert!(is_stable(&i).unwrap());
        assert!(gin(&i, &GenericityPolicy::default()).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn gin_is_idempotent_and_preserves_hilbert_functions() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y", "z"]).unwrap();
        let i = mono_ideal(&r, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let policy = GenericityPolicy::with_seed(4);
        let j = gin(&i, &policy).unwrap();
        assert_eq!(hilbert_function(&i).unwrap(), hilbert_function(&j).unwrap());
        assert!(gin(&j, &policy).unwrap().equals(&j).unwrap());
        // gin of a complete intersection of three quadrics
        let expected = mono_ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2], &[0, 1, 2], &[0, 0, 4]]);
        assert!(j.equals(&expected).unwrap(), "{:?}", j.leading_monomials());
    }
}
