//! Lefschetz-type and fullness properties of graded Artinian algebras.

pub mod cwl;
pub mod families;
pub mod genericity;
pub mod gin;
pub mod mfull;
pub mod report;
pub mod stable;
pub mod verify;
pub mod wlp;

pub use cwl::{is_componentwise_linear, truncation_ideal};
pub use genericity::{derive_seed, random_linear_form, vote, Certainty, Decision, GenericityPolicy};
pub use gin::{gin, initial_ideal_after_change};
pub use mfull::{
    is_completely_m_full, is_m_full, is_m_full_by_colon, is_m_full_with, m_full_certificate, MFullCertificate,
    MFullOutcome,
};
pub use stable::{is_stable, minimal_monomial_generators};
pub use wlp::{has_wlp, is_lefschetz_element, lefschetz_by_hilbert_rule, WlpOutcome};
pub use report::{analyze, AnalyzeOptions, PropertyReport};
pub use verify::{
    check_invariants, verify_betti_splitting, verify_cmfull_cwl_equivalence, verify_wlp_betti_criterion,
    verify_wlp_criterion_with_mfull_quotient, BettiSplittingReport, CertificateSummary, Check, GinReport,
    InvariantReport, MFullReductionReport, WlpBettiReport,
};
