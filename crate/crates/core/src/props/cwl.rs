//! Componentwise linear ideals.

use crate::betti::{betti_table, has_linear_resolution, ModuleTag};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;

/// `I_<d>`, the ideal generated by the degree-`d` part of `I`. Its generators
/// `m - NF(m)` for the degree-`d` monomials `m` in the initial ideal form a
/// basis of `I_d`.
pub fn truncation_ideal(ideal: &Ideal, d: u32) -> Ideal {
    let ring = ideal.ring();
    let gens: Vec<Polynomial> = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .filter(|m| !ideal.is_standard(m))
        .map(|m| {
            let p = Polynomial::from_monomial(ring, m);
            let nf = ideal.normal_form(&p).expect("same ring");
            &p - &nf
        })
        .collect();
    Ideal::from_generators(ring, gens).expect("same ring")
}

/// Every truncation `I_<d>` has a `d`-linear resolution, for `d` from the
/// initial degree of `I` up to `reg(I)`. Beyond the regularity the
/// truncations are linear automatically.
pub fn is_componentwise_linear(ideal: &Ideal) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    let reg = betti_table(ideal, ModuleTag::Ideal)?.regularity().unwrap_or(0);
    let start = ideal.initial_degree().unwrap_or(0);
    for d in start..=reg.max(start as i64) as u32 {
        let truncation = truncation_ideal(ideal, d);
        if truncation.is_zero() {
            continue;
        }
        if !has_linear_resolution(&truncation, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}
