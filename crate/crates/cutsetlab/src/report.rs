//! Machine-readable verdicts with replayable witnesses.

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

/// Outcome of a check: a boolean verdict plus, on failure, a witness that can
/// be replayed through the operation that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(default)]
    pub stats: Stats,
}

impl VerdictReport {
    pub fn pass() -> VerdictReport {
        VerdictReport { verdict: true, witness: None, stats: Stats::default() }
    }

    pub fn pass_with(stats: Stats) -> VerdictReport {
        VerdictReport { verdict: true, witness: None, stats }
    }

    pub fn fail(witness: Witness) -> VerdictReport {
        VerdictReport { verdict: false, witness: Some(witness), stats: Stats::default() }
    }

    pub fn fail_with(witness: Witness, stats: Stats) -> VerdictReport {
        VerdictReport { verdict: false, witness: Some(witness), stats }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub faces_examined: u64,
    pub links_checked: u64,
    pub work_units: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A single offending vertex set (e.g. a member with no removable element).
    Set { set: VertexSet },
    /// An offending nested pair in a set-system check.
    SetPair { small: VertexSet, large: VertexSet },
    /// A cut set whose component count breaks `c_G(S) = |S| + c`.
    UnmixedFailure { set: VertexSet, components: usize, expected: usize },
    /// A face whose link is disconnected, with the link's facets.
    Face { face: String, link_facets: Vec<String> },
    /// Two sides of an equivalence that disagree.
    Mismatch { relation: String, left: bool, right: bool },
    /// A bridging cut set, with the `(f, c)` companion pairs when applicable.
    Bridging { cut_set: VertexSet, pairs: Vec<(usize, usize)> },
    /// A realizing graph in the text format.
    Realized { graph: String },
    /// Lemma hypotheses did not hold for the supplied data.
    HypothesesUnmet { reason: String },
    /// Exhaustive search failed where the theory promises existence.
    Refutation { detail: String },
    /// Free-form detail for harness-level failures.
    Message { detail: String },
}
