//! Stable monomial ideals.

use crate::error::{AlgebraError, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Minimal monomial generators, sorted descending in the ring order.
pub fn minimal_monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if !ideal.is_monomial() {
        return Err(AlgebraError::NotMonomial);
    }
    Ok(ideal.leading_monomials())
}

/// `x_i u / x_{m(u)} ∈ I` for every minimal generator `u` and `i < m(u)`,
/// where `m(u)` is the largest index of a variable dividing `u`.
pub fn is_stable(ideal: &Ideal) -> Result<bool> {
    let gens = minimal_monomial_generators(ideal)?;
    Ok(first_unstable_exchange(&gens).is_none())
}

/// A missing exchange `x_i u / x_{m(u)}`, if any.
pub(crate) fn first_unstable_exchange(gens: &[Monomial]) -> Option<Monomial> {
    let contains = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    for u in gens {
        let Some(top) = u.max_var_index() else { continue };
        for i in 0..top {
            let v = exchange(u, i, top);
            if !contains(&v) {
                return Some(v);
            }
        }
    }
    None
}

/// `x_i u / x_k`, assuming `x_k | u`.
pub(crate) fn exchange(u: &Monomial, i: usize, k: usize) -> Monomial {
    let mut exps: Vec<u32> = u.exponents().collect();
    exps[k] -= 1;
    exps[i] += 1;
    Monomial::new(&exps).expect("exchange keeps the degree")
}
