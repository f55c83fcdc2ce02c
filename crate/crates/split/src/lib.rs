//! Splitting six points of the Riemann sphere into three pairs by three
//! pairwise disjoint open discs.
//!
//! Points are first moved to the frame `{-1, 1, ∞} ∪ E`, where a short list
//! of explicit constructions is tried in order. Every candidate is pushed
//! back to the caller's frame, opened up, and checked by the independent
//! verifier before it is returned.

pub mod bounds;
pub mod construct;
pub mod error;
pub mod numeric;
mod pipeline;
pub mod regions;
pub mod strategy;
pub mod strip;
pub mod triple;

use std::fmt;

pub use error::{Result, SplitError};
pub use pipeline::{
    fuzz_campaign, open_up, split_by_strip, split_distinguished, split_six, CertifiedSplit, SplitConfig, Splitter,
    DEFAULT_STRATEGIES,
};
pub use sixsplit_core::{Complex64, GeneralizedDisc, MobiusMap, Pairing, PlaneView, SpherePoint};
pub use strategy::{SplitStrategy, StrategyRegistry};
pub use strip::{classify_distinguished, find_strip_witness, CaseClassification, StripWitness};
pub use triple::{normalize_six, DistinguishedTriple, NormalizedSix};

/// One step of the search: which strategy, what it tried, what happened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub strategy: String,
    pub detail: String,
    pub outcome: String,
}

impl TranscriptEntry {
    pub fn new(strategy: impl Into<String>, detail: impl Into<String>, outcome: impl Into<String>) -> Self {
        TranscriptEntry { strategy: strategy.into(), detail: detail.into(), outcome: outcome.into() }
    }
}

impl fmt::Display for TranscriptEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.strategy, self.detail, self.outcome)
    }
}
