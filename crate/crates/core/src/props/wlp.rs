//! The weak Lefschetz property of Artinian quotients.

use crate::error::{AlgebraError, Result};
use crate::graded::{hilbert_function, is_m_primary, GradedQuotient};
use crate::ideal::{Ideal, LinearForm};
use crate::props::genericity::{random_linear_form, Decision, GenericityPolicy};

#[derive(Clone, Debug)]
pub struct WlpOutcome {
    pub decision: Decision,
    /// A Lefschetz element when one was found.
    pub witness: Option<LinearForm>,
}

/// `×L : A_i -> A_{i+1}` has full rank for `0 <= i < c`.
pub fn is_lefschetz_element(ideal: &Ideal, l: &LinearForm) -> Result<bool> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let q = GradedQuotient::artinian(ideal);
    Ok(full_rank_everywhere(&q, l))
}

fn full_rank_everywhere(q: &GradedQuotient<'_>, l: &LinearForm) -> bool {
    (0..q.top()).all(|i| q.image_rank(std::slice::from_ref(l), i) == q.dim(i).min(q.dim(i + 1)))
}

/// The same test phrased through Hilbert functions: `L` is a Lefschetz
/// element iff `h_{i+1}(R/(I + LR)) = max(0, h_{i+1} - h_i)` for `0 <= i < c`.
pub fn lefschetz_by_hilbert_rule(ideal: &Ideal, l: &LinearForm) -> Result<bool> {
    let h = hilbert_function(ideal)?;
    let image = hilbert_function(&ideal.quotient_by_linear_form(l)?)?;
    let c = h.socle_degree().unwrap_or(0);
    Ok((0..c).all(|i| image.at(i + 1) == h.at(i + 1).saturating_sub(h.at(i))))
}

/// A general form is a Lefschetz element whenever one exists, so a yes is
/// certified by the form found and a no means every draw failed.
pub fn has_wlp(ideal: &Ideal, policy: &GenericityPolicy) -> Result<WlpOutcome> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let q = GradedQuotient::artinian(ideal);
    let mut rng = policy.rng("wlp", 0);
    for _ in 0..policy.trials {
        let l = random_linear_form(ideal.ring(), &mut rng);
        if full_rank_everywhere(&q, &l) {
            return Ok(WlpOutcome { decision: Decision::exact(true), witness: Some(l) });
        }
    }
    Ok(WlpOutcome { decision: Decision::probabilistic(false), witness: None })
}
