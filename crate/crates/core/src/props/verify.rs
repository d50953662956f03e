//! Verification suites relating fullness, Lefschetz properties and Betti
//! numbers. Each suite returns a serializable report; `passed` is false only
//! when an asserted relation fails on the instance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, binomial, BettiTable, ModuleTag};
use crate::error::{AlgebraError, Result};
use crate::graded::{delta_invariant, hilbert_function, is_m_primary, socle_profile, GradedQuotient};
use crate::ideal::{Ideal, LinearForm};
use crate::props::cwl::is_componentwise_linear;
use crate::props::genericity::{random_linear_form, Decision, GenericityPolicy};
use crate::props::gin::gin;
use crate::props::mfull::{is_completely_m_full, is_m_full, m_full_certificate, MFullCertificate};
use crate::props::stable::{is_stable, minimal_monomial_generators};
use crate::props::wlp::has_wlp;

/// One named relation evaluated on an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        Check { name: name.into(), holds }
    }
}

fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.holds)
}

/// Serializable form of an m-full certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub witness: String,
    pub socle_lift_degrees: Vec<u32>,
    pub residual_degrees: Vec<u32>,
    /// `[j, c_j]` pairs
    #[serde(with = "crate::graded::degree_pairs")]
    pub c: BTreeMap<u32, u64>,
}

impl CertificateSummary {
    pub fn new(ideal: &Ideal, cert: &MFullCertificate) -> Self {
        CertificateSummary {
            witness: cert.witness.to_polynomial(ideal.ring()).to_string(),
            socle_lift_degrees: cert.socle_lift_degrees.clone(),
            residual_degrees: cert.residual_degrees.clone(),
            c: cert.c.clone(),
        }
    }
}

/// Image of `I` modulo the witness, with its Betti table.
fn reduction(ideal: &Ideal, x: &LinearForm) -> Result<(Ideal, BettiTable)> {
    let bar = ideal.quotient_by_linear_form(x)?;
    let table = if bar.is_zero() {
        BettiTable { tag: ModuleTag::Ideal, nvars: bar.ring().nvars(), entries: BTreeMap::new() }
    } else {
        betti_table(&bar, ModuleTag::Ideal)?
    };
    Ok((bar, table))
}

fn require_m_full(ideal: &Ideal, policy: &GenericityPolicy) -> Result<LinearForm> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    is_m_full(ideal, policy)?
        .witness
        .ok_or_else(|| AlgebraError::Precondition("the ideal is not m-full".into()))
}

fn max_degree(tables: &[&BettiTable]) -> u32 {
    tables.iter().flat_map(|t| t.entries.keys().map(|&(_, j)| j)).max().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSplittingReport {
    pub certificate: CertificateSummary,
    pub ideal_betti: BettiTable,
    /// Betti table of the image of `I` modulo the witness.
    pub reduced_betti: BettiTable,
    /// `(i, j)` with `β_{i,i+j}(I) ≠ β_{i,i+j}(Ī) + C(n-1, i) c_j`.
    pub mismatches: Vec<[u32; 2]>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// `β_{i,i+j}(I) = β_{i,i+j}(Ī) + C(n-1, i) c_j` for an m-full ideal, together
/// with the degree constraints on the certificate.
pub fn verify_betti_splitting(ideal: &Ideal, policy: &GenericityPolicy) -> Result<BettiSplittingReport> {
    let x = require_m_full(ideal, policy)?;
    let n = ideal.ring().nvars() as u32;
    let cert = m_full_certificate(ideal, &x)?;
    let ideal_betti = betti_table(ideal, ModuleTag::Ideal)?;
    let (bar, reduced_betti) = reduction(ideal, &x)?;

    let top = max_degree(&[&ideal_betti, &reduced_betti]).max(cert.c.keys().copied().max().unwrap_or(0));
    let mut mismatches = Vec::new();
    for i in 0..n {
        for j in 0..=top {
            let expected = reduced_betti.at(i, i + j) + binomial((n - 1) as u64, i as u64) * cert.c_at(j);
            if ideal_betti.at(i, i + j) != expected {
                mismatches.push([i, j]);
            }
        }
    }

    let socle = socle_profile(ideal)?;
    let delta = delta_invariant(ideal, &x)?;
    let lifts = cert.socle_lift_degrees.len() as u64;
    let mut checks = vec![
        Check::new("betti splitting", mismatches.is_empty()),
        Check::new("socle lifts count the socle", lifts == socle.total()),
        Check::new("c_j is the socle dimension in degree j-1", socle.dims.iter().all(|(&j, &v)| cert.c_at(j + 1) == v)),
        Check::new("top socle lift degree is c+1", cert.socle_lift_degrees.last() == Some(&(socle.socle_degree + 1))),
        Check::new("residual degrees at most delta", cert.residual_degrees.iter().all(|&g| g <= delta)),
        Check::new("reduction has beta_0(I) - l generators", reduced_betti.total(0) == ideal_betti.total(0) - lifts),
    ];
    if n >= 2 && is_m_full(&bar, &policy.child("reduction", 0))?.decision.value {
        checks.push(Check::new("some residual degree equals delta", cert.residual_degrees.contains(&delta)));
    }
    let passed = all_hold(&checks);
    Ok(BettiSplittingReport {
        certificate: CertificateSummary::new(ideal, &cert),
        ideal_betti,
        reduced_betti,
        mismatches,
        checks,
        passed,
    })
}

/// The three Betti conditions above the degree `d`.
struct BettiConditions {
    /// `β_{n-1,n-1+j} = β_{0,j}` for `j > d`
    last: bool,
    /// `β_{n-2,n-2+j} = (n-1) β_{0,j}` for `j > d`
    second_last: bool,
    /// `β_{i,i+j} = C(n-1, i) β_{0,j}` for `j > d` and all `i`
    all: bool,
    first_failure: Option<[u32; 2]>,
}

fn betti_conditions(table: &BettiTable, n: u32, d: u32) -> BettiConditions {
    let top = max_degree(&[table]);
    let holds = |i: u32, j: u32| table.at(i, i + j) == binomial((n - 1) as u64, i as u64) * table.at(0, j);
    let range = || d + 1..=top;
    let last = range().all(|j| holds(n - 1, j));
    let second_last = n < 2 || range().all(|j| holds(n - 2, j));
    let first_failure = range().flat_map(|j| (0..n).map(move |i| [i, j])).find(|&[i, j]| !holds(i, j));
    BettiConditions { last, second_last, all: first_failure.is_none(), first_failure }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpBettiReport {
    pub d: u32,
    pub delta: u32,
    pub wlp: Decision,
    /// `β_{n-1,n-1+j}(I) = β_{0,j}(I)` and `β_{n-2,n-2+j}(I) = (n-1) β_{0,j}(I)` for `j > d`.
    pub betti_ends: bool,
    /// `β_{i,i+j}(I) = C(n-1, i) β_{0,j}(I)` for `j > d` and all `i`.
    pub betti_all: bool,
    /// First `(i, j)` violating the full condition.
    pub counterexample: Option<[u32; 2]>,
    pub betti: BettiTable,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// For m-full m-primary `I`: WLP, the two end conditions and the full Betti
/// condition above `d` coincide. Also checks that WLP is `δ ≤ d` and that it
/// is the vanishing of `β_{n-2,n-2+j}(Ī)` for `j > d`.
pub fn verify_wlp_betti_criterion(ideal: &Ideal, policy: &GenericityPolicy) -> Result<WlpBettiReport> {
    let x = require_m_full(ideal, policy)?;
    let n = ideal.ring().nvars() as u32;
    let betti = betti_table(ideal, ModuleTag::Ideal)?;
    let d = socle_profile(ideal)?.initial_degree + 1;
    let delta = delta_invariant(ideal, &x)?;
    let wlp = has_wlp(ideal, &policy.child("wlp", 0))?.decision;
    let cond = betti_conditions(&betti, n, d);
    let (_, reduced) = reduction(ideal, &x)?;
    let reduced_top = max_degree(&[&reduced]);
    let reduced_vanishes = n < 2 || (d + 1..=reduced_top).all(|j| reduced.at(n - 2, n - 2 + j) == 0);

    let ends = cond.last && cond.second_last;
    let checks = vec![
        Check::new("wlp iff end conditions", wlp.value == ends),
        Check::new("wlp iff all conditions", wlp.value == cond.all),
        Check::new("wlp iff delta <= d", wlp.value == (delta <= d)),
        Check::new("wlp iff reduction betti vanishes", wlp.value == reduced_vanishes),
    ];
    let passed = all_hold(&checks);
    Ok(WlpBettiReport {
        d,
        delta,
        wlp,
        betti_ends: ends,
        betti_all: cond.all,
        counterexample: cond.first_failure,
        betti,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MFullReductionReport {
    /// The image of `I` modulo the witness is m-full.
    pub hypothesis: bool,
    pub wlp: Decision,
    /// `β_{n-1,n-1+j}(I) = β_{0,j}(I)` for `j > d`.
    pub betti_last: bool,
    pub betti_all: bool,
    pub d: u32,
    /// Whether the three conditions were required to agree.
    pub equivalence_asserted: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// When the reduction `Ī` is m-full as well, WLP already follows from the
/// single condition on `β_{n-1}`. Without the hypothesis the booleans are
/// recorded but not compared.
pub fn verify_wlp_criterion_with_mfull_quotient(
    ideal: &Ideal,
    policy: &GenericityPolicy,
) -> Result<MFullReductionReport> {
    let x = require_m_full(ideal, policy)?;
    let n = ideal.ring().nvars() as u32;
    let betti = betti_table(ideal, ModuleTag::Ideal)?;
    let d = socle_profile(ideal)?.initial_degree + 1;
    let wlp = has_wlp(ideal, &policy.child("wlp", 0))?.decision;
    let cond = betti_conditions(&betti, n, d);
    let hypothesis = if n < 2 {
        true
    } else {
        let bar = ideal.quotient_by_linear_form(&x)?;
        is_m_full(&bar, &policy.child("reduction", 0))?.decision.value
    };
    let checks = if hypothesis {
        vec![
            Check::new("wlp iff last condition", wlp.value == cond.last),
            Check::new("wlp iff all conditions", wlp.value == cond.all),
        ]
    } else {
        Vec::new()
    };
    let passed = all_hold(&checks);
    Ok(MFullReductionReport {
        hypothesis,
        wlp,
        betti_last: cond.last,
        betti_all: cond.all,
        d,
        equivalence_asserted: hypothesis,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinReport {
    pub gin_generators: Vec<Vec<u32>>,
    pub gin_stable: bool,
    pub completely_m_full: Decision,
    pub componentwise_linear: bool,
    /// `Some` when `I` is a monomial ideal.
    pub stable: Option<bool>,
    /// Whether the equivalence of complete m-fullness and componentwise
    /// linearity was asserted (only when the gin is stable).
    pub equivalence_asserted: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// With `gin(I)` stable, `I` is completely m-full iff componentwise linear.
/// The implications stable ⇒ completely m-full and componentwise linear ⇒
/// completely m-full are checked unconditionally.
pub fn verify_cmfull_cwl_equivalence(ideal: &Ideal, policy: &GenericityPolicy) -> Result<GinReport> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let j = gin(ideal, &policy.child("gin", 0))?;
    let gin_gens = minimal_monomial_generators(&j)?;
    let gin_stable = is_stable(&j)?;
    let cmfull = is_completely_m_full(ideal, &policy.child("completely-m-full", 0))?;
    let cwl = is_componentwise_linear(ideal)?;
    let stable = if ideal.is_monomial() { Some(is_stable(ideal)?) } else { None };

    let mut checks = vec![
        Check::new("componentwise linear implies completely m-full", !cwl || cmfull.value),
        Check::new("hilbert function preserved by gin", hilbert_function(ideal)? == hilbert_function(&j)?),
    ];
    if let Some(s) = stable {
        checks.push(Check::new("stable implies completely m-full", !s || cmfull.value));
    }
    if gin_stable {
        checks.push(Check::new("completely m-full iff componentwise linear", cmfull.value == cwl));
        if cwl {
            let beta0 = betti_table(ideal, ModuleTag::Ideal)?.total(0);
            checks.push(Check::new("beta_0 agrees with gin", beta0 == gin_gens.len() as u64));
        }
    }
    let passed = all_hold(&checks);
    Ok(GinReport {
        gin_generators: gin_gens.iter().map(|m| m.exponents().collect()).collect(),
        gin_stable,
        completely_m_full: cmfull,
        componentwise_linear: cwl,
        stable,
        equivalence_asserted: gin_stable,
        checks,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub d_from_socle: u32,
    pub d_from_betti: u32,
    /// `δ` for each independent random form.
    pub deltas: Vec<u32>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

/// Consistency of invariants computed along independent routes.
pub fn check_invariants(ideal: &Ideal, policy: &GenericityPolicy) -> Result<InvariantReport> {
    if !is_m_primary(ideal) {
        return Err(AlgebraError::NotMPrimary);
    }
    let n = ideal.ring().nvars() as u32;
    let hf = hilbert_function(ideal)?;
    let socle = socle_profile(ideal)?;
    let betti = betti_table(ideal, ModuleTag::Ideal)?;
    let last = |j: u32| if n == 0 { 0 } else { betti.at(n - 1, n + j) };
    let top = socle.socle_degree + 1;
    let socle_matches = (0..=top).all(|j| last(j) == socle.at(j));
    let d_from_socle = socle.initial_degree + 1;
    let d_from_betti = (0..=top).find(|&j| last(j) != 0).map_or(0, |j| j + 1);

    let mut rng = policy.rng("delta", 0);
    let forms: Vec<LinearForm> = (0..3.max(policy.trials))
        .filter(|_| n > 0)
        .map(|_| random_linear_form(ideal.ring(), &mut rng))
        .collect();
    let deltas = forms.iter().map(|x| delta_invariant(ideal, x)).collect::<Result<Vec<_>>>()?;
    let mut checks = vec![
        Check::new("last betti column is the socle", socle_matches),
        Check::new("d from socle equals d from betti", d_from_socle == d_from_betti),
        Check::new("delta agrees across forms", deltas.windows(2).all(|w| w[0] == w[1])),
        Check::new("hilbert function preserved by initial ideal", hilbert_function(&ideal.initial_ideal())? == hf),
    ];
    if let Some(x) = forms.first() {
        let quotient = hilbert_function(&ideal.quotient_by_linear_form(x)?)?;
        checks.push(Check::new("delta by rank equals delta by quotient", quotient.values.len() as u32 == deltas[0]));
        let q = GradedQuotient::artinian(ideal);
        let by_rank: Vec<u64> = q.hilbert_modulo(std::slice::from_ref(x)).into_iter().take_while(|&h| h > 0).collect();
        checks.push(Check::new("quotient hilbert function by rank", by_rank == quotient.values));
    }
    let j = gin(ideal, &policy.child("gin", 0))?;
    checks.push(Check::new("hilbert function preserved by gin", hilbert_function(&j)? == hf));
    let passed = all_hold(&checks);
    Ok(InvariantReport { d_from_socle, d_from_betti, deltas, checks, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::Monomial;
    use crate::ring::PolyRing;
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(FieldSpec::default(), names).unwrap()
    }

    fn mono_ideal(r: &Arc<PolyRing>, gens: &[&[u32]]) -> Ideal {
        Ideal::from_monomials(r, gens.iter().map(|e| Monomial::new(e).unwrap()).collect())
    }

    fn xyz_cubics() -> Ideal {
        let r = ring(&["x", "y", "z"]);
        let base = mono_ideal(&r, &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[0, 3, 0]]);
        base.sum(&Ideal::maximal_power(&r, 4).unwrap()).unwrap()
    }

    #[test]
    fn splitting_on_xyz_cubics() {
        let report = verify_betti_splitting(&xyz_cubics(), &GenericityPolicy::default()).unwrap();
        assert!(report.passed, "{:?}", report.checks);
        assert_eq!(report.certificate.c, BTreeMap::from([(3, 1), (4, 6)]));
    }

    #[test]
    fn criteria_on_xyz_cubics() {
        let policy = GenericityPolicy::default();
        let r = verify_wlp_betti_criterion(&xyz_cubics(), &policy).unwrap();
        assert!(r.passed);
        assert!(!r.wlp.value && !r.betti_ends && !r.betti_all);
        assert_eq!((r.d, r.delta), (3, 4));
        assert_eq!(r.betti.at(1, 5), 13);

        let r = verify_wlp_criterion_with_mfull_quotient(&xyz_cubics(), &policy).unwrap();
        assert!(!r.hypothesis && !r.equivalence_asserted && r.passed);
        assert!(r.betti_last && !r.wlp.value);
    }

    #[test]
    fn powers_of_the_maximal_ideal() {
        let policy = GenericityPolicy::default();
        let r = ring(&["x", "y", "z"]);
        for t in 1..4 {
            let i = Ideal::maximal_power(&r, t).unwrap();
            assert!(verify_betti_splitting(&i, &policy).unwrap().passed);
            let w = verify_wlp_betti_criterion(&i, &policy).unwrap();
            assert!(w.passed && w.wlp.value && w.betti_all);
            assert!(verify_cmfull_cwl_equivalence(&i, &policy).unwrap().passed);
            assert!(check_invariants(&i, &policy).unwrap().passed);
        }
    }

    #[test]
    fn preconditions() {
        let policy = GenericityPolicy::default();
        let r = ring(&["x", "y"]);
        let ci = mono_ideal(&r, &[&[2, 0], &[0, 2]]);
        assert!(matches!(verify_betti_splitting(&ci, &policy), Err(AlgebraError::Precondition(_))));
        assert!(matches!(verify_wlp_betti_criterion(&mono_ideal(&r, &[&[1, 0]]), &policy), Err(AlgebraError::NotMPrimary)));
        // not m-full, but the remaining suites still apply
        assert!(verify_cmfull_cwl_equivalence(&ci, &policy).unwrap().passed);
        assert!(check_invariants(&ci, &policy).unwrap().passed);
    }

    #[test]
    fn one_variable() {
        let policy = GenericityPolicy::default();
        let i = mono_ideal(&ring(&["x"]), &[&[3]]);
        assert!(verify_betti_splitting(&i, &policy).unwrap().passed);
        assert!(verify_wlp_betti_criterion(&i, &policy).unwrap().passed);
        assert!(verify_wlp_criterion_with_mfull_quotient(&i, &policy).unwrap().passed);
        assert!(verify_cmfull_cwl_equivalence(&i, &policy).unwrap().passed);
        assert!(check_invariants(&i, &policy).unwrap().passed);
    }
}
