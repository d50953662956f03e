//! Machine-readable report document.

use serde::{Deserialize, Serialize};

use lefschetz_core::betti::BettiTable;
use lefschetz_core::ideal::IdealSummary;
use lefschetz_core::props::{
    BettiSplittingReport, CertificateSummary, Decision, GenericityPolicy, GinReport, InvariantReport,
    MFullReductionReport, PropertyReport, WlpBettiReport,
};
use lefschetz_core::{FieldSpec, HilbertFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub provenance: Provenance,
    /// The ideal read from the input file, if any.
    pub input: Option<IdealSummary>,
    pub result: CommandResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub seed: u64,
    pub policy: GenericityPolicy,
    pub field: Option<FieldSpec>,
    /// Wall-clock milliseconds; present only with `--timings`.
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResult {
    Analyze(PropertyReport),
    Betti(BettiTable),
    Hilbert(HilbertFunction),
    Gin { generators: Vec<Vec<u32>>, stable: bool },
    Stable { generators: Vec<Vec<u32>>, stable: bool },
    MFull { decision: Decision, certificate: Option<CertificateSummary> },
    CompletelyMFull { decision: Decision },
    Wlp { decision: Decision, witness: Option<String> },
    ComponentwiseLinear { value: bool },
    Verify(VerifyResult),
    Gen { ideal: IdealSummary, text: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BettiSplitting,
    WlpBetti,
    WlpMfullReduction,
    CmfullCwl,
    Invariants,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 5] =
        [Suite::BettiSplitting, Suite::WlpBetti, Suite::WlpMfullReduction, Suite::CmfullCwl, Suite::Invariants];

    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Suite::CONCRETE.to_vec()
        } else {
            vec![self]
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::BettiSplitting => "betti-splitting",
            Suite::WlpBetti => "wlp-betti",
            Suite::WlpMfullReduction => "wlp-mfull-reduction",
            Suite::CmfullCwl => "cmfull-cwl",
            Suite::Invariants => "invariants",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Stable monomial ideals containing `m^maxdeg`.
    Stable,
    /// Random forms of degree at most `maxdeg` plus `m^(maxdeg+1)`.
    Mprimary,
    /// m-full ideals: monomial ideals containing `m^maxdeg`, every other one
    /// in random coordinates.
    Mfull,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Source {
    File { path: String },
    Family { family: Family, n: usize, maxdeg: u32, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub suites: Vec<Suite>,
    pub source: Source,
    pub instances: Vec<InstanceResult>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub genericity_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub seed: u64,
    pub ideal: IdealSummary,
    pub outcomes: Vec<SuiteOutcome>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    /// A precondition of the suite does not hold for the instance.
    Skipped,
    GenericityFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub status: Status,
    pub reason: Option<String>,
    pub report: Option<SuiteReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteReport {
    BettiSplitting(BettiSplittingReport),
    WlpBetti(WlpBettiReport),
    WlpMfullReduction(MFullReductionReport),
    CmfullCwl(GinReport),
    Invariants(InvariantReport),
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        match self {
            SuiteReport::BettiSplitting(r) => r.passed,
            SuiteReport::WlpBetti(r) => r.passed,
            SuiteReport::WlpMfullReduction(r) => r.passed,
            SuiteReport::CmfullCwl(r) => r.passed,
            SuiteReport::Invariants(r) => r.passed,
        }
    }
}
