use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sixsplit_core::{GeneralizedDisc, Pairing, SpherePoint};

use crate::record::PointRecord;
use crate::sampler::Sampler;
use crate::verify::verify_split;

/// What a splitter hands back for one configuration.
#[derive(Debug, Clone)]
pub struct SplitOutcome {
    pub discs: [GeneralizedDisc; 3],
    pub pairing: Pairing,
    pub transcript: Vec<String>,
    /// True when the result came from a last-resort search rather than a
    /// constructive branch.
    pub used_fallback: bool,
}

pub trait SixPointSplitter: Sync {
    fn split(&self, points: &[SpherePoint; 6]) -> Result<SplitOutcome, String>;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzFailure {
    pub index: u64,
    pub trial_seed: u64,
    pub points: Vec<PointRecord>,
    pub transcript: Vec<String>,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub sampler: String,
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    pub fallback_uses: u64,
    pub min_margin: Option<f64>,
    pub mean_margin: Option<f64>,
    pub failures: Vec<FuzzFailure>,
}

enum Trial {
    Pass { margin: f64, fallback: bool },
    Fail(FuzzFailure),
}

fn run_trial(index: u64, seed: u64, sampler: &dyn Sampler, splitter: &dyn SixPointSplitter, epsilon: f64) -> Trial {
    let trial_seed = seed ^ index;
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    let points = sampler.sample(&mut rng);
    let fail = |transcript: Vec<String>, error: String| {
        Trial::Fail(FuzzFailure {
            index,
            trial_seed,
            points: points.iter().map(PointRecord::from).collect(),
            transcript,
            error,
        })
    };
    match splitter.split(&points) {
        Err(e) => fail(Vec::new(), e),
        Ok(out) => {
            let cert = verify_split(&points, &out.discs, &out.pairing, epsilon);
            if cert.pass {
                Trial::Pass { margin: cert.margin, fallback: out.used_fallback }
            } else {
                fail(out.transcript, format!("certificate rejected: {:?}", cert.violations))
            }
        }
    }
}

/// Runs `n` independent trials; trial `i` draws from a generator seeded
/// with `seed ^ i`, so the report does not depend on scheduling.
pub fn fuzz_campaign(
    n: u64,
    seed: u64,
    sampler: &dyn Sampler,
    splitter: &dyn SixPointSplitter,
    epsilon: f64,
) -> FuzzReport {
    let results: Vec<Trial> = (0..n).into_par_iter().map(|i| run_trial(i, seed, sampler, splitter, epsilon)).collect();
    let mut report = FuzzReport {
        sampler: sampler.name().to_string(),
        seed,
        trials: n,
        successes: 0,
        fallback_uses: 0,
        min_margin: None,
        mean_margin: None,
        failures: Vec::new(),
    };
    let mut sum = 0.0;
    for r in results {
        match r {
            Trial::Pass { margin, fallback } => {
                report.successes += 1;
                report.fallback_uses += u64::from(fallback);
                sum += margin;
                report.min_margin = Some(report.min_margin.map_or(margin, |m: f64| m.min(margin)));
            }
            Trial::Fail(f) => report.failures.push(f),
        }
    }
    if report.successes > 0 {
        report.mean_margin = Some(sum / report.successes as f64);
    }
    report
}
