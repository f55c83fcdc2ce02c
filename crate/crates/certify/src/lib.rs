//! Verification of six-point disc splits on the unit sphere.
//!
//! Everything here works from the value types in `sixsplit-core` alone: discs
//! are read as spherical caps, points as unit vectors, and all slacks are
//! angles. The constructive pipeline plugs in through [`SixPointSplitter`].

mod fuzz;
mod oracle;
mod record;
mod sampler;
mod verify;

pub use fuzz::{fuzz_campaign, FuzzFailure, FuzzReport, SixPointSplitter, SplitOutcome};
pub use oracle::{all_pairings, oracle_search, oracle_search_with, OracleSplit};
pub use record::PointRecord;
pub use sampler::{ClusteredSampler, NearDegenerateSampler, Sampler, SamplerRegistry, UniformSampler};
pub use verify::{verify_caps, verify_split, Certificate, DiscReport, Violation};

/// Default angular threshold a certificate's margin must exceed.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// The disc pairs compared for separation, in certificate order.
pub const DISC_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
