//! m-full and completely m-full ideals.
//!
//! `I ⊆ mI : x` always holds, so `mI : x = I` is decided by comparing
//! dimensions: in every degree `j`, the kernel of `x` on `(R/mI)_j` must have
//! dimension `h_j(R/mI) - h_j(R/I)`.

use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::graded::{hilbert_function, is_m_primary, GradedQuotient};
use crate::ideal::{Ideal, LinearForm};
use crate::props::genericity::{random_linear_form, vote, Decision, GenericityPolicy};

#[derive(Clone, Debug)]
pub struct MFullOutcome {
    pub decision: Decision,
    /// A form with `mI : x = I` when one was found.
    pub witness: Option<LinearForm>,
}

/// Degree data of the minimal generating set `x y_1, ..., x y_l, z_1, ..., z_m`
/// of an m-full ideal, where the `y_s` lift a basis of `(I : m)/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MFullCertificate {
    pub witness: LinearForm,
    /// `deg(x y_s)`, ascending.
    pub socle_lift_degrees: Vec<u32>,
    /// `deg(z_t)`, ascending.
    pub residual_degrees: Vec<u32>,
    /// `c_j = #{ s : deg(x y_s) = j }`
    pub c: BTreeMap<u32, u64>,
}

impl MFullCertificate {
    pub fn c_at(&self, j: u32) -> u64 {
        self.c.get(&j).copied().unwrap_or(0)
    }
}

/// `mI : x = I` for the given form.
pub fn is_m_full_with(ideal: &Ideal, x: &LinearForm) -> Result<bool> {
    let m_i = Ideal::maximal(ideal.ring()).product(ideal)?;
    if !is_m_primary(ideal) {
        return is_m_full_by_colon_with(ideal, &m_i, x);
    }
    let q = GradedQuotient::artinian(&m_i);
    let h = hilbert_function(ideal)?;
    Ok(kernel_matches(&q, &h.values, x))
}

fn kernel_matches(q: &GradedQuotient<'_>, h_ideal: &[u64], x: &LinearForm) -> bool {
    (0..q.top()).all(|t| {
        let kernel = q.dim(t) - q.image_rank(std::slice::from_ref(x), t);
        let expected = q.dim(t) as u64 - h_ideal.get(t as usize).copied().unwrap_or(0);
        kernel as u64 == expected
    })
}

/// `mI : x = I` checked as an equality of ideals.
pub fn is_m_full_by_colon(ideal: &Ideal, x: &LinearForm) -> Result<bool> {
    let m_i = Ideal::maximal(ideal.ring()).product(ideal)?;
    is_m_full_by_colon_with(ideal, &m_i, x)
}

fn is_m_full_by_colon_with(ideal: &Ideal, m_i: &Ideal, x: &LinearForm) -> Result<bool> {
    let colon = m_i.colon_poly(&x.to_polynomial(ideal.ring()))?;
    colon.equals(ideal)
}

/// Tries `policy.trials` random forms; any success is a certified yes.
pub fn is_m_full(ideal: &Ideal, policy: &GenericityPolicy) -> Result<MFullOutcome> {
    let mut rng = policy.rng("m-full", 0);
    let m_i = Ideal::maximal(ideal.ring()).product(ideal)?;
    let artinian = is_m_primary(ideal);
    let (q, h) = if artinian {
        (Some(GradedQuotient::artinian(&m_i)), hilbert_function(ideal)?.values)
    } else {
        (None, Vec::new())
    };
    for _ in 0..policy.trials {
        let x = random_linear_form(ideal.ring(), &mut rng);
        let ok = match &q {
            Some(q) => kernel_matches(q, &h, &x),
            None => is_m_full_by_colon_with(ideal, &m_i, &x)?,
        };
        if ok {
            return Ok(MFullOutcome { decision: Decision::exact(true), witness: Some(x) });
        }
    }
    Ok(MFullOutcome { decision: Decision::probabilistic(false), witness: None })
}

/// Generator degrees split as in the definition of the certificate, from
/// `L = x (I : m) + mI`: `c_j = h_j(R/mI) - h_j(R/L)` and the residual count
/// is `h_j(R/L) - h_j(R/I)`.
pub fn m_full_certificate(ideal: &Ideal, x: &LinearForm) -> Result<MFullCertificate> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    if !is_m_full_with(ideal, x)? {
        return Err(AlgebraError::Precondition("mI : x differs from I".into()));
    }
    let ring = ideal.ring();
    let m = Ideal::maximal(ring);
    let m_i = m.product(ideal)?;
    let colon = ideal.colon_ideal(&m)?;
    let xp = x.to_polynomial(ring);
    let lifted = Ideal::from_generators(ring, colon.generators().iter().map(|g| &xp * g).collect())?;
    let l = lifted.sum(&m_i)?;
    let (h_mi, h_l, h_i) = (hilbert_function(&m_i)?, hilbert_function(&l)?, hilbert_function(ideal)?);
    let mut c = BTreeMap::new();
    let mut socle_lift_degrees = Vec::new();
    let mut residual_degrees = Vec::new();
    for j in 0..h_mi.values.len() as u32 {
        let lifts = h_mi.at(j) - h_l.at(j);
        let residual = h_l.at(j) - h_i.at(j);
        if lifts > 0 {
            c.insert(j, lifts);
        }
        socle_lift_degrees.extend(std::iter::repeat_n(j, lifts as usize));
        residual_degrees.extend(std::iter::repeat_n(j, residual as usize));
    }
    Ok(MFullCertificate { witness: x.clone(), socle_lift_degrees, residual_degrees, c })
}

/// Follows one random chain `x_n, x_{n-1}, ...`: each form must satisfy
/// `mI : x = I` for the current ideal, which is then replaced by its image
/// modulo `x`; the chain ends at the zero ideal of the field.
fn chain_is_completely_m_full<R: rand::Rng + ?Sized>(ideal: &Ideal, rng: &mut R) -> Result<bool> {
    let mut current = ideal.clone();
    loop {
        if current.ring().nvars() == 0 {
            return Ok(current.is_zero());
        }
        let x = random_linear_form(current.ring(), rng);
        if !is_m_full_with(&current, &x)? {
            return Ok(false);
        }
        current = current.quotient_by_linear_form(&x)?;
    }
}

/// Agreement vote over independent random chains.
pub fn is_completely_m_full(ideal: &Ideal, policy: &GenericityPolicy) -> Result<Decision> {
    let value = vote(policy, "completely-m-full", |rng| chain_is_completely_m_full(ideal, rng))?;
    Ok(Decision::probabilistic(value))
}
