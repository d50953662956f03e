//! Aggregated property report for a single ideal.

use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, BettiTable, ModuleTag};
use crate::error::{AlgebraError, Result};
use crate::graded::{delta_invariant, hilbert_function, is_m_primary, socle_profile, HilbertFunction, SocleProfile};
use crate::ideal::Ideal;
use crate::props::cwl::is_componentwise_linear;
use crate::props::genericity::{Decision, GenericityPolicy};
use crate::props::gin::gin;
use crate::props::mfull::{is_completely_m_full, is_m_full, m_full_certificate};
use crate::props::stable::{is_stable, minimal_monomial_generators};
use crate::props::verify::CertificateSummary;
use crate::props::wlp::has_wlp;

/// Which of the expensive parts of [`analyze`] to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub gin: bool,
    pub betti: bool,
    pub cwl: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { gin: true, betti: true, cwl: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub hilbert: HilbertFunction,
    pub socle: SocleProfile,
    pub d: u32,
    pub delta: u32,
    pub m_full: Decision,
    pub certificate: Option<CertificateSummary>,
    pub completely_m_full: Decision,
    /// Only for monomial ideals.
    pub stable: Option<bool>,
    pub componentwise_linear: Option<bool>,
    pub wlp: Decision,
    pub betti_ideal: Option<BettiTable>,
    pub betti_quotient: Option<BettiTable>,
    /// Exponent vectors of the minimal generators of the generic initial ideal.
    pub gin_generators: Option<Vec<Vec<u32>>>,
}

/// All predicates and invariants of an m-primary ideal.
pub fn analyze(ideal: &Ideal, policy: &GenericityPolicy, options: AnalyzeOptions) -> Result<PropertyReport> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    if ideal.is_unit() {
        return Err(AlgebraError::InvalidArgument("the unit ideal has a zero quotient".into()));
    }
    let hilbert = hilbert_function(ideal)?;
    let socle = socle_profile(ideal)?;
    let mfull = is_m_full(ideal, &policy.child("m-full", 0))?;
    let wlp = has_wlp(ideal, &policy.child("wlp", 0))?;
    let delta_form = mfull.witness.clone().or_else(|| wlp.witness.clone());
    let delta = match delta_form {
        Some(x) => delta_invariant(ideal, &x)?,
        None => {
            let mut rng = policy.rng("delta", 0);
            delta_invariant(ideal, &crate::props::genericity::random_linear_form(ideal.ring(), &mut rng))?
        }
    };
    let certificate = match &mfull.witness {
        Some(x) => Some(CertificateSummary::new(ideal, &m_full_certificate(ideal, x)?)),
        None => None,
    };
    let (betti_ideal, betti_quotient) = if options.betti {
        let t = betti_table(ideal, ModuleTag::Ideal)?;
        let q = t.with_tag(ModuleTag::Quotient);
        (Some(t), Some(q))
    } else {
        (None, None)
    };
    let gin_generators = if options.gin {
        let j = gin(ideal, &policy.child("gin", 0))?;
        Some(minimal_monomial_generators(&j)?.iter().map(|m| m.exponents().collect()).collect())
    } else {
        None
    };
    Ok(PropertyReport {
        d: socle.initial_degree + 1,
        delta,
        hilbert,
        socle,
        m_full: mfull.decision,
        certificate,
        completely_m_full: is_completely_m_full(ideal, &policy.child("completely-m-full", 0))?,
        stable: if ideal.is_monomial() { Some(is_stable(ideal)?) } else { None },
        componentwise_linear: if options.cwl { Some(is_componentwise_linear(ideal)?) } else { None },
        wlp: wlp.decision,
        betti_ideal,
        betti_quotient,
        gin_generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::Monomial;
    use crate::ring::PolyRing;

    #[test]
    fn xyz_cubics_report() {
        let r = PolyRing::new(FieldSpec::default(), &["x", "y", "z"]).unwrap();
        let gens = [[3, 0, 0], [2, 1, 0], [2, 0, 1], [0, 3, 0]].iter().map(|e| Monomial::new(e).unwrap()).collect();
        let i = Ideal::from_monomials(&r, gens).sum(&Ideal::maximal_power(&r, 4).unwrap()).unwrap();
        let report = analyze(&i, &GenericityPolicy::default(), AnalyzeOptions::default()).unwrap();
        assert_eq!(report.hilbert.values, vec![1, 3, 6, 6]);
        assert_eq!((report.d, report.delta), (3, 4));
        assert!(report.m_full.value && !report.completely_m_full.value && !report.wlp.value);
        assert_eq!(report.stable, Some(false));
        assert_eq!(report.componentwise_linear, Some(false));
        assert_eq!(report.betti_quotient.unwrap().at(0, 0), 1);
        let json = serde_json::to_string(&report_without_tables(&i)).unwrap();
        let back: PropertyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report_without_tables(&i));
    }

    fn report_without_tables(i: &Ideal) -> PropertyReport {
        let options = AnalyzeOptions { gin: false, betti: false, cwl: false };
        analyze(i, &GenericityPolicy::default(), options).unwrap()
    }

    #[test]
    fn one_variable_report() {
        let r = PolyRing::new(FieldSpec::default(), &["x"]).unwrap();
        let i = Ideal::from_monomials(&r, vec![Monomial::new(&[3]).unwrap()]);
        let report = analyze(&i, &GenericityPolicy::default(), AnalyzeOptions::default()).unwrap();
        assert_eq!(report.hilbert.values, vec![1, 1, 1]);
        assert!(report.wlp.value);
    }
}
