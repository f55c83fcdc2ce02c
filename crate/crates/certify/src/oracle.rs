use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sixsplit_core::vec3::{self, Vec3};
use sixsplit_core::{CoreError, GeneralizedDisc, Pairing, SpherePoint, SphericalCap};

use crate::verify::{verify_split, Certificate};
use crate::{DEFAULT_EPSILON, DISC_PAIRS};

#[derive(Debug, Clone)]
pub struct OracleSplit {
    pub discs: [GeneralizedDisc; 3],
    pub pairing: Pairing,
    pub certificate: Certificate,
    /// Objective evaluations spent, including seeding.
    pub trials_used: usize,
}

/// The 15 ways to split six indices into three unordered pairs.
pub fn all_pairings() -> Vec<Pairing> {
    let mut out = Vec::with_capacity(15);
    for j in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&k| k != j).collect();
        for m in 1..4 {
            let others: Vec<usize> = rest[1..].iter().copied().filter(|&k| k != rest[m]).collect();
            out.push([[0, j], [rest[0], rest[m]], [others[0], others[1]]]);
        }
    }
    out
}

#[derive(Clone, Copy)]
struct CapState {
    centers: [Vec3; 3],
    radii: [f64; 3],
}

/// Smallest-margin slack of a cap triple without any growth applied.
fn slacks(xs: &[Vec3; 6], pairing: &Pairing, s: &CapState) -> (f64, f64, f64) {
    let mut inside = f64::INFINITY;
    let mut outside = f64::INFINITY;
    for (k, pair) in pairing.iter().enumerate() {
        for (i, x) in xs.iter().enumerate() {
            let d = s.radii[k] - vec3::angle(&s.centers[k], x);
            if pair.contains(&i) {
                inside = inside.min(d);
            } else {
                outside = outside.min(-d);
            }
        }
    }
    let mut sep = f64::INFINITY;
    for &(i, j) in DISC_PAIRS.iter() {
        sep = sep.min(vec3::angle(&s.centers[i], &s.centers[j]) - s.radii[i] - s.radii[j]);
    }
    (inside, outside, sep)
}

/// Margin after the best uniform radius change `δ`, and that `δ`.
fn objective(xs: &[Vec3; 6], pairing: &Pairing, s: &CapState) -> (f64, f64) {
    let (inside, outside, sep) = slacks(xs, pairing, s);
    // maximize min(inside + δ, outside - δ, sep - 2δ)
    let d1 = (outside - inside) / 2.0;
    let d2 = (sep - inside) / 3.0;
    let delta = d1.min(d2);
    ((inside + delta).min(outside - delta).min(sep - 2.0 * delta), delta)
}

fn enclosing_cap(a: &Vec3, b: &Vec3) -> (Vec3, f64) {
    let mid = vec3::add(a, b);
    let center = vec3::normalize(&mid).unwrap_or_else(|| vec3::any_orthogonal(a));
    (center, vec3::angle(a, b) / 2.0)
}

fn seed_state(xs: &[Vec3; 6], pairing: &Pairing) -> CapState {
    let mut centers = [[0.0; 3]; 3];
    let mut radii = [0.0; 3];
    for k in 0..3 {
        let (c, r) = enclosing_cap(&xs[pairing[k][0]], &xs[pairing[k][1]]);
        centers[k] = c;
        radii[k] = r;
    }
    CapState { centers, radii }
}

fn perturb(s: &CapState, step: f64, rng: &mut ChaCha8Rng) -> CapState {
    let mut out = *s;
    let k = rng.random_range(0..3);
    let axis = vec3::normalize(&vec3::cross(&s.centers[k], &vec3::any_orthogonal(&s.centers[k])))
        .expect("orthogonal helper");
    let spin = rng.random_range(0.0..std::f64::consts::TAU);
    let axis = vec3::rotate(&axis, &s.centers[k], spin);
    let angle = step * rng.random_range(-1.0..1.0);
    out.centers[k] = vec3::normalize(&vec3::rotate(&s.centers[k], &axis, angle)).expect("unit center");
    out.radii[k] = (s.radii[k] + step * rng.random_range(-1.0..1.0)).clamp(1e-12, std::f64::consts::PI - 1e-12);
    out
}

fn opened_caps(s: &CapState, delta: f64) -> Option<[SphericalCap; 3]> {
    let cap = |k: usize| SphericalCap::new(s.centers[k], s.radii[k] + delta).ok();
    Some([cap(0)?, cap(1)?, cap(2)?])
}

pub fn oracle_search(points: &[SpherePoint; 6], budget: usize, seed: u64) -> Result<Option<OracleSplit>, CoreError> {
    oracle_search_with(points, budget, seed, DEFAULT_EPSILON)
}

/// Randomized local search over cap triples for every pairing.
///
/// Each pairing is seeded with the minimal enclosing caps of its pairs;
/// pairings are then hill-climbed in order of their seeded objective until a
/// certificate passes or `budget` objective evaluations are spent.
pub fn oracle_search_with(
    points: &[SpherePoint; 6],
    budget: usize,
    seed: u64,
    epsilon: f64,
) -> Result<Option<OracleSplit>, CoreError> {
    for i in 0..6 {
        for j in i + 1..6 {
            if points[i].chordal_distance(&points[j]) == 0.0 {
                return Err(CoreError::CoincidentPoints(i, j));
            }
        }
    }
    let xs: [Vec3; 6] = std::array::from_fn(|i| points[i].to_unit_vector());
    let mut used = 0usize;
    let mut seeded = Vec::with_capacity(15);
    for pairing in all_pairings() {
        if used == budget {
            return Ok(None);
        }
        used += 1;
        let state = seed_state(&xs, &pairing);
        let (value, delta) = objective(&xs, &pairing, &state);
        if value > epsilon {
            if let Some(found) = assemble(points, &pairing, &state, delta, epsilon, used) {
                return Ok(Some(found));
            }
        }
        seeded.push((value, pairing, state));
    }
    seeded.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = seeded.len();
    for (rank, (mut best, pairing, mut state)) in seeded.into_iter().enumerate() {
        let share = ((budget - used) / (count - rank)).max(1);
        let stop = (used + share).min(budget);
        let mut step = 0.25;
        let mut misses = 0;
        while used < stop {
            used += 1;
            let cand = perturb(&state, step, &mut rng);
            let (value, delta) = objective(&xs, &pairing, &cand);
            if value > best {
                best = value;
                state = cand;
                misses = 0;
                if best > epsilon {
                    if let Some(found) = assemble(points, &pairing, &state, delta, epsilon, used) {
                        return Ok(Some(found));
                    }
                }
            } else {
                misses += 1;
                if misses >= 24 {
                    step = (step * 0.5).max(1e-9);
                    misses = 0;
                }
            }
        }
        if used >= budget {
            break;
        }
    }
    Ok(None)
}

fn assemble(points: &[SpherePoint; 6], pairing: &Pairing, s: &CapState, delta: f64, epsilon: f64, used: usize) -> Option<OracleSplit> {
    let caps = opened_caps(s, delta)?;
    let discs = caps.map(|c| GeneralizedDisc::from_cap(&c));
    let certificate = verify_split(points, &discs, pairing, epsilon);
    certificate.pass.then_some(OracleSplit { discs, pairing: *pairing, certificate, trials_used: used })
}
