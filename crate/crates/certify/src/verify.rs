use serde::Serialize;
use sixsplit_core::vec3::Vec3;
use sixsplit_core::{GeneralizedDisc, Pairing, SpherePoint, SphericalCap};

use crate::DISC_PAIRS;

/// Containment data for one disc.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscReport {
    pub members: [usize; 2],
    /// `radius - angle(center, x)` for each member; positive inside.
    pub member_slacks: [f64; 2],
    /// `(index, angle(center, x) - radius)` for the other four points.
    pub outsider_slacks: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    InvalidPairing,
    MemberNotInside { disc: usize, point: usize, slack: f64 },
    PointCaptured { disc: usize, point: usize, slack: f64 },
    Overlap { first: usize, second: usize, separation: f64 },
    MarginTooSmall { margin: f64, epsilon: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub discs: Vec<DiscReport>,
    /// Cap separations for the disc pairs `(0,1), (0,2), (1,2)`.
    pub separations: [f64; 3],
    pub margin: f64,
    pub epsilon: f64,
    pub violations: Vec<Violation>,
    pub pass: bool,
}

impl Certificate {
    /// Indices of points lying in a disc they do not belong to.
    pub fn captured_points(&self) -> Vec<usize> {
        self.violations
            .iter()
            .filter_map(|v| match v {
                Violation::PointCaptured { point, .. } => Some(*point),
                _ => None,
            })
            .collect()
    }
}

fn pairing_is_partition(pairing: &Pairing) -> bool {
    let mut seen = [false; 6];
    for &i in pairing.iter().flatten() {
        if i >= 6 || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// Checks a split in the sphere model. Pass requires every member strictly
/// inside, every other point strictly outside, pairwise disjoint caps, and an
/// overall margin above `epsilon`.
pub fn verify_split(
    points: &[SpherePoint; 6],
    discs: &[GeneralizedDisc; 3],
    pairing: &Pairing,
    epsilon: f64,
) -> Certificate {
    let caps = [discs[0].to_cap(), discs[1].to_cap(), discs[2].to_cap()];
    verify_caps(points, &caps, pairing, epsilon)
}

pub fn verify_caps(points: &[SpherePoint; 6], caps: &[SphericalCap; 3], pairing: &Pairing, epsilon: f64) -> Certificate {
    let xs: Vec<Vec3> = points.iter().map(|p| p.to_unit_vector()).collect();
    let mut violations = Vec::new();
    let valid_pairing = pairing_is_partition(pairing);
    if !valid_pairing {
        violations.push(Violation::InvalidPairing);
    }
    let mut margin = f64::INFINITY;
    let mut reports = Vec::with_capacity(3);
    for (k, cap) in caps.iter().enumerate() {
        let members = pairing[k];
        let mut member_slacks = [0.0; 2];
        for (slot, &i) in members.iter().enumerate() {
            let s = xs.get(i).map_or(f64::NEG_INFINITY, |x| cap.slack(x));
            member_slacks[slot] = s;
            margin = margin.min(s);
            if s <= 0.0 {
                violations.push(Violation::MemberNotInside { disc: k, point: i, slack: s });
            }
        }
        let mut outsider_slacks = Vec::with_capacity(4);
        for (i, x) in xs.iter().enumerate() {
            if members.contains(&i) {
                continue;
            }
            let s = -cap.slack(x);
            outsider_slacks.push((i, s));
            margin = margin.min(s);
            if s <= 0.0 {
                violations.push(Violation::PointCaptured { disc: k, point: i, slack: s });
            }
        }
        reports.push(DiscReport { members, member_slacks, outsider_slacks });
    }
    let mut separations = [0.0; 3];
    for (slot, &(i, j)) in DISC_PAIRS.iter().enumerate() {
        let s = caps[i].separation(&caps[j]);
        separations[slot] = s;
        margin = margin.min(s);
        if s <= 0.0 {
            violations.push(Violation::Overlap { first: i, second: j, separation: s });
        }
    }
    if violations.is_empty() && !(margin > epsilon) {
        violations.push(Violation::MarginTooSmall { margin, epsilon });
    }
    let pass = violations.is_empty();
    Certificate { discs: reports, separations, margin, epsilon, violations, pass }
}
