use sixsplit_certify::{verify_split, Certificate, SamplerRegistry};
use sixsplit_core::{GeneralizedDisc, MobiusMap, Pairing, SpherePoint};

use crate::error::{Result, SplitError};
use crate::strategy::{Candidate, CandidateFrame, Frame, SplitContext, StrategyRegistry};
use crate::strip::StripWitness;
use crate::triple::{check_six, normalize_six, DistinguishedTriple};
use crate::TranscriptEntry;

pub const DEFAULT_STRATEGIES: [&str; 5] = ["strip", "diameter", "fpm", "rotation", "oracle"];

#[derive(Debug, Clone, PartialEq)]
pub struct SplitConfig {
    /// Minimum certified margin, in radians on the unit sphere.
    pub epsilon: f64,
    /// Strategy names, tried in order.
    pub strategies: Vec<String>,
    pub oracle_budget: usize,
    pub oracle_seed: u64,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig {
            epsilon: sixsplit_certify::DEFAULT_EPSILON,
            strategies: DEFAULT_STRATEGIES.iter().map(|s| s.to_string()).collect(),
            oracle_budget: 200_000,
            oracle_seed: 0,
        }
    }
}

/// Three disjoint discs, each holding one pair, with the verifier's report.
#[derive(Debug, Clone)]
pub struct CertifiedSplit {
    /// Open discs: the constructed ones grown by a uniform angular amount.
    pub discs: [GeneralizedDisc; 3],
    /// The constructed discs before opening up; members may sit on the
    /// boundary.
    pub closed_discs: [GeneralizedDisc; 3],
    /// Each pair sorted, pairs sorted by first index; `discs[k]` holds
    /// `pairing[k]`.
    pub pairing: Pairing,
    pub margin: f64,
    pub certificate: Certificate,
    /// Name of the strategy that produced the split.
    pub strategy: String,
    pub transcript: Vec<TranscriptEntry>,
    pub used_fallback: bool,
}

/// Grows every cap by the amount that balances member slack against
/// outsider slack and separation.
pub fn open_up(points: &[SpherePoint; 6], closed: &[GeneralizedDisc; 3], pairing: &Pairing) -> Option<[GeneralizedDisc; 3]> {
    let caps = closed.map(|d| d.to_cap());
    let mut m_in = f64::INFINITY;
    let mut m_out = f64::INFINITY;
    for (cap, pair) in caps.iter().zip(pairing) {
        for (i, p) in points.iter().enumerate() {
            let slack = cap.slack_of(p);
            if pair.contains(&i) {
                m_in = m_in.min(slack);
            } else {
                m_out = m_out.min(-slack);
            }
        }
    }
    let s = sixsplit_certify::DISC_PAIRS
        .iter()
        .map(|&(i, j)| caps[i].separation(&caps[j]))
        .fold(f64::INFINITY, f64::min);
    let delta = ((m_out - m_in) / 2.0).min((s - m_in) / 3.0);
    if !delta.is_finite() {
        return None;
    }
    Some(caps.map(|c| GeneralizedDisc::from_cap(&c.with_radius_delta(delta))))
}

fn canonical(pairing: &Pairing) -> ([usize; 3], Pairing) {
    let sorted = pairing.map(|[a, b]| [a.min(b), a.max(b)]);
    let mut order = [0, 1, 2];
    order.sort_by_key(|&k| sorted[k][0]);
    (order, order.map(|k| sorted[k]))
}

#[derive(Default)]
pub struct Splitter {
    registry: StrategyRegistry,
    config: SplitConfig,
}

impl Splitter {
    pub fn new(config: SplitConfig) -> Result<Self> {
        Self::with_registry(StrategyRegistry::default(), config)
    }

    pub fn with_registry(registry: StrategyRegistry, config: SplitConfig) -> Result<Self> {
        if let Some(bad) = config.strategies.iter().find(|n| registry.get(n).is_none()) {
            return Err(SplitError::UnknownStrategy(bad.clone()));
        }
        Ok(Splitter { registry, config })
    }

    pub fn config(&self) -> &SplitConfig {
        &self.config
    }

    /// Splits six distinct points given in any order.
    pub fn split_six(&self, points: &[SpherePoint]) -> Result<CertifiedSplit> {
        let pts = check_six(points)?;
        let n = normalize_six(&pts)?;
        let frame = Frame { e: *n.triple.points(), slack: 0.0 };
        self.run(&pts, frame, &n.map.inverse(), &n.slots)
    }

    /// Splits `{-1, 1, ∞} ∪ E`; indices refer to `[-1, 1, ∞, e1, e2, e3]`.
    pub fn split_distinguished(&self, e: &DistinguishedTriple) -> Result<CertifiedSplit> {
        let pts = e.frame_points();
        let frame = Frame { e: *e.points(), slack: 0.0 };
        self.run(&pts, frame, &MobiusMap::identity(), &[0, 1, 2, 3, 4, 5])
    }

    fn run(&self, target: &[SpherePoint; 6], frame: Frame, to_target: &MobiusMap, slots: &[usize; 6]) -> Result<CertifiedSplit> {
        let ctx = SplitContext { frame, target_points: target, config: &self.config };
        let mut transcript = Vec::new();
        for name in &self.config.strategies {
            let strategy = self.registry.get(name).ok_or_else(|| SplitError::UnknownStrategy(name.clone()))?;
            for attempt in strategy.attempts(&frame, &ctx) {
                let outcome = match attempt.outcome {
                    Err(reason) => Err(reason),
                    Ok(c) => self.certify(target, &c, to_target, slots),
                };
                match outcome {
                    Ok((closed, opened, pairing, certificate)) => {
                        transcript.push(TranscriptEntry::new(name, attempt.detail, "certified"));
                        let (order, pairing) = canonical(&pairing);
                        return Ok(CertifiedSplit {
                            discs: order.map(|k| opened[k]),
                            closed_discs: order.map(|k| closed[k]),
                            pairing,
                            margin: certificate.margin,
                            certificate: verify_split(target, &order.map(|k| opened[k]), &pairing, self.config.epsilon),
                            strategy: name.clone(),
                            transcript,
                            used_fallback: name == "oracle",
                        });
                    }
                    Err(reason) => transcript.push(TranscriptEntry::new(name, attempt.detail, reason)),
                }
            }
        }
        Err(SplitError::Exhausted { transcript })
    }

    #[allow(clippy::type_complexity)]
    fn certify(
        &self,
        target: &[SpherePoint; 6],
        c: &Candidate,
        to_target: &MobiusMap,
        slots: &[usize; 6],
    ) -> std::result::Result<([GeneralizedDisc; 3], [GeneralizedDisc; 3], Pairing, Certificate), String> {
        let (closed, pairing) = match c.frame {
            CandidateFrame::Normalized => (c.discs.map(|d| d.pushforward(to_target)), c.pairing.map(|p| p.map(|k| slots[k]))),
            CandidateFrame::Target => (c.discs, c.pairing),
        };
        let opened = open_up(target, &closed, &pairing).ok_or("could not open up")?;
        let cert = verify_split(target, &opened, &pairing, self.config.epsilon);
        if cert.pass {
            Ok((closed, opened, pairing, cert))
        } else {
            Err(format!("rejected, margin {:.3e}", cert.margin))
        }
    }
}

/// Splits six distinct points with the default strategies.
pub fn split_six(points: &[SpherePoint]) -> Result<CertifiedSplit> {
    Splitter::default().split_six(points)
}

pub fn split_distinguished(e: &DistinguishedTriple) -> Result<CertifiedSplit> {
    Splitter::default().split_distinguished(e)
}

/// Certified split of `{-1, 1, ∞} ∪ E` from a strip witness alone.
pub fn split_by_strip(e: &DistinguishedTriple, witness: &StripWitness) -> Result<CertifiedSplit> {
    let (discs, pairing) = crate::strategy::strip_construction(e.points(), witness)?;
    let splitter = Splitter::default();
    let pts = e.frame_points();
    let cand = Candidate { discs, pairing, frame: CandidateFrame::Normalized };
    let slots = [0, 1, 2, 3, 4, 5];
    match splitter.certify(&pts, &cand, &MobiusMap::identity(), &slots) {
        Ok((closed, opened, pairing, certificate)) => {
            let (order, pairing) = canonical(&pairing);
            Ok(CertifiedSplit {
                discs: order.map(|k| opened[k]),
                closed_discs: order.map(|k| closed[k]),
                pairing,
                margin: certificate.margin,
                certificate,
                strategy: "strip".into(),
                transcript: vec![TranscriptEntry::new("strip", "given witness", "certified")],
                used_fallback: false,
            })
        }
        Err(reason) => Err(SplitError::NoConstruction(reason)),
    }
}

impl sixsplit_certify::SixPointSplitter for Splitter {
    fn split(&self, points: &[SpherePoint; 6]) -> std::result::Result<sixsplit_certify::SplitOutcome, String> {
        match self.split_six(points) {
            Ok(s) => Ok(sixsplit_certify::SplitOutcome {
                discs: s.discs,
                pairing: s.pairing,
                transcript: s.transcript.iter().map(|t| t.to_string()).collect(),
                used_fallback: s.used_fallback,
            }),
            Err(SplitError::Exhausted { transcript }) => {
                let lines: Vec<String> = transcript.iter().map(|t| t.to_string()).collect();
                Err(format!("all strategies exhausted\n{}", lines.join("\n")))
            }
            Err(e) => Err(e.to_string()),
        }
    }
}

/// Runs `n` trials of the named sampler through the default splitter.
pub fn fuzz_campaign(n: u64, seed: u64, sampler: &str) -> Result<sixsplit_certify::FuzzReport> {
    let registry = SamplerRegistry::default();
    let s = registry.get(sampler).ok_or_else(|| SplitError::UnknownSampler(sampler.to_string()))?;
    let splitter = Splitter::default();
    Ok(sixsplit_certify::fuzz_campaign(n, seed, s, &splitter, splitter.config.epsilon))
}
