//! Verification runs over a file or a random family.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use lefschetz_core::props::families::{random_m_full_ideal, random_m_primary_ideal, random_stable_ideal};
use lefschetz_core::props::{
    check_invariants, derive_seed, verify_betti_splitting, verify_cmfull_cwl_equivalence, verify_wlp_betti_criterion,
    verify_wlp_criterion_with_mfull_quotient, GenericityPolicy,
};
use lefschetz_core::{AlgebraError, FieldSpec, Ideal, PolyRing};

use crate::document::{Family, InstanceResult, Source, Status, Suite, SuiteOutcome, SuiteReport, Summary, VerifyResult};

/// Instance `index` of a family; the same arguments give the same ideal.
pub fn family_instance(
    family: Family,
    field: &FieldSpec,
    n: usize,
    maxdeg: u32,
    seed: u64,
    index: usize,
) -> lefschetz_core::Result<Ideal> {
    let ring = PolyRing::standard(field.clone(), n);
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, "instance", index as u64));
    match family {
        Family::Stable => random_stable_ideal(&ring, maxdeg, &mut rng),
        Family::Mprimary => {
            let forms = rng.gen_range(1..=n + 1);
            random_m_primary_ideal(&ring, maxdeg, forms, &mut rng)
        }
        Family::Mfull => random_m_full_ideal(&ring, maxdeg, index % 2 == 1, &mut rng),
    }
}

fn run_suite(suite: Suite, ideal: &Ideal, policy: &GenericityPolicy) -> SuiteOutcome {
    let report = match suite {
        Suite::BettiSplitting => verify_betti_splitting(ideal, policy).map(SuiteReport::BettiSplitting),
        Suite::WlpBetti => verify_wlp_betti_criterion(ideal, policy).map(SuiteReport::WlpBetti),
        Suite::WlpMfullReduction => {
            verify_wlp_criterion_with_mfull_quotient(ideal, policy).map(SuiteReport::WlpMfullReduction)
        }
        Suite::CmfullCwl => verify_cmfull_cwl_equivalence(ideal, policy).map(SuiteReport::CmfullCwl),
        Suite::Invariants => check_invariants(ideal, policy).map(SuiteReport::Invariants),
        Suite::All => unreachable!("expanded before running"),
    };
    match report {
        Ok(r) => {
            let status = if r.passed() { Status::Passed } else { Status::Failed };
            SuiteOutcome { suite, status, reason: None, report: Some(r) }
        }
        Err(e @ AlgebraError::Genericity { .. }) => {
            SuiteOutcome { suite, status: Status::GenericityFailure, reason: Some(e.to_string()), report: None }
        }
        Err(e) => SuiteOutcome { suite, status: Status::Skipped, reason: Some(e.to_string()), report: None },
    }
}

fn run_instance(index: usize, ideal: &Ideal, suites: &[Suite], policy: &GenericityPolicy) -> InstanceResult {
    let outcomes = suites.iter().map(|&s| run_suite(s, ideal, &policy.child(s.name(), 0))).collect();
    InstanceResult { index, seed: policy.seed, ideal: ideal.summary(), outcomes }
}

fn summarize(instances: &[InstanceResult]) -> Summary {
    let mut s = Summary::default();
    for o in instances.iter().flat_map(|i| &i.outcomes) {
        match o.status {
            Status::Passed => s.passed += 1,
            Status::Failed => s.failed += 1,
            Status::Skipped => s.skipped += 1,
            Status::GenericityFailure => s.genericity_failures += 1,
        }
    }
    s
}

fn expand(suites: &[Suite]) -> Vec<Suite> {
    let mut out: Vec<Suite> = suites.iter().flat_map(|s| s.expand()).collect();
    out.sort();
    out.dedup();
    out
}

pub fn verify_file(ideal: &Ideal, path: &str, suites: &[Suite], policy: &GenericityPolicy) -> VerifyResult {
    let suites = expand(suites);
    let instances = vec![run_instance(0, ideal, &suites, policy)];
    VerifyResult { summary: summarize(&instances), suites, source: Source::File { path: path.into() }, instances }
}

pub struct FamilyArgs {
    pub family: Family,
    pub field: FieldSpec,
    pub n: usize,
    pub maxdeg: u32,
    pub count: usize,
}

/// Instances run in parallel; each uses seeds derived from its index, so the
/// result does not depend on scheduling.
pub fn verify_family(args: &FamilyArgs, suites: &[Suite], policy: &GenericityPolicy) -> lefschetz_core::Result<VerifyResult> {
    let suites = expand(suites);
    let instances = (0..args.count)
        .into_par_iter()
        .map(|k| {
            let ideal = family_instance(args.family, &args.field, args.n, args.maxdeg, policy.seed, k)?;
            Ok(run_instance(k, &ideal, &suites, &policy.child("instance", k as u64)))
        })
        .collect::<lefschetz_core::Result<Vec<_>>>()?;
    Ok(VerifyResult {
        summary: summarize(&instances),
        suites,
        source: Source::Family { family: args.family, n: args.n, maxdeg: args.maxdeg, count: args.count },
        instances,
    })
}
