use std::f64::consts::{FRAC_PI_6, PI, TAU};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use sixsplit_core::vec3::{self, Vec3};
use sixsplit_core::{Complex64, MobiusMap, SpherePoint};

/// A source of six-point configurations for fuzzing.
pub trait Sampler: Send + Sync {
    fn name(&self) -> &'static str;
    fn sample(&self, rng: &mut ChaCha8Rng) -> [SpherePoint; 6];
}

/// Samplers addressable by name.
pub struct SamplerRegistry {
    entries: Vec<Box<dyn Sampler>>,
}

impl SamplerRegistry {
    pub fn empty() -> Self {
        SamplerRegistry { entries: Vec::new() }
    }

    /// Adds a sampler, replacing any existing one with the same name.
    pub fn register(&mut self, sampler: Box<dyn Sampler>) {
        self.entries.retain(|s| s.name() != sampler.name());
        self.entries.push(sampler);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Sampler> {
        self.entries.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|s| s.name()).collect()
    }
}

impl Default for SamplerRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(UniformSampler));
        r.register(Box::new(ClusteredSampler));
        r.register(Box::new(NearDegenerateSampler));
        r
    }
}

fn gaussian_unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = [rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal)];
        if let Some(u) = vec3::normalize(&v) {
            return u;
        }
    }
}

fn gaussian_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn random_mobius(rng: &mut ChaCha8Rng) -> MobiusMap {
    loop {
        let [a, b, c, d] = std::array::from_fn(|_| gaussian_complex(rng));
        if (a * d - b * c).norm() > 1e-3 {
            if let Ok(m) = MobiusMap::new(a, b, c, d) {
                return m;
            }
        }
    }
}

fn all_distinct(points: &[SpherePoint; 6]) -> bool {
    (0..6).all(|i| (i + 1..6).all(|j| points[i].chordal_distance(&points[j]) > 0.0))
}

/// Uniform on the sphere.
pub struct UniformSampler;

impl Sampler for UniformSampler {
    fn name(&self) -> &'static str {
        "uniform"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> [SpherePoint; 6] {
        loop {
            let pts = std::array::from_fn(|_| SpherePoint::from_unit_vector(&gaussian_unit(rng)));
            if all_distinct(&pts) {
                return pts;
            }
        }
    }
}

/// Points bunched around one to three random centers with spreads spanning
/// several orders of magnitude.
pub struct ClusteredSampler;

impl Sampler for ClusteredSampler {
    fn name(&self) -> &'static str {
        "clustered"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> [SpherePoint; 6] {
        loop {
            let clusters: Vec<(Vec3, f64)> = (0..rng.random_range(1..=3))
                .map(|_| (gaussian_unit(rng), 10f64.powf(rng.random_range(-6.0..-0.5))))
                .collect();
            let pts: [SpherePoint; 6] = std::array::from_fn(|_| {
                let (center, spread) = clusters[rng.random_range(0..clusters.len())];
                let tangent = vec3::rotate(&vec3::any_orthogonal(&center), &center, rng.random_range(0.0..TAU));
                let axis = vec3::cross(&center, &tangent);
                let angle = spread * rng.random_range(0.0f64..1.0).sqrt();
                SpherePoint::from_unit_vector(&vec3::rotate(&center, &axis, angle))
            });
            if all_distinct(&pts) {
                return pts;
            }
        }
    }
}

/// Configurations that normalize to tight cases: one point within `1e-6` of
/// `±√3i`, pair distances of `2 ± 1e-9`, then hidden behind a random Möbius
/// map and a shuffle.
pub struct NearDegenerateSampler;

const CORNER_JITTER: f64 = 1e-6;
const PAIR_JITTER: f64 = 1e-9;

fn outside_omega(z: Complex64) -> bool {
    (z - 1.0).norm() >= 2.0 && (z + 1.0).norm() >= 2.0
}

fn at_distance_two(rng: &mut ChaCha8Rng, from: Complex64) -> Complex64 {
    let r = 2.0 + PAIR_JITTER * rng.random_range(-1.0..1.0);
    from + Complex64::from_polar(r, rng.random_range(0.0..TAU))
}

impl NearDegenerateSampler {
    /// Six points `[-1, 1, ∞, e1, e2, e3]` in the normalized frame.
    pub fn normalized(&self, rng: &mut ChaCha8Rng) -> [SpherePoint; 6] {
        let s3 = 3f64.sqrt();
        let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        // pushes away from both ±1 so the corner stays outside the excluded lenses
        let e1 = if rng.random_range(0..8) == 0 {
            Complex64::new(0.0, sign * s3)
        } else {
            let theta = rng.random_range(FRAC_PI_6..PI - FRAC_PI_6);
            let r = CORNER_JITTER * rng.random_range(0.0..1.0);
            Complex64::new(0.0, sign * s3) + Complex64::from_polar(r, theta) * sign
        };
        let e2 = loop {
            let z = at_distance_two(rng, e1);
            if outside_omega(z) {
                break z;
            }
        };
        let e3 = loop {
            let z = match rng.random_range(0..3) {
                0 => at_distance_two(rng, e1),
                1 => at_distance_two(rng, e2),
                _ => Complex64::from_polar(10f64.powf(rng.random_range(0.24..1.7)), rng.random_range(0.0..TAU)),
            };
            if outside_omega(z) && (z - e1).norm() >= 2.0 - PAIR_JITTER && (z - e2).norm() >= 2.0 - PAIR_JITTER {
                break z;
            }
        };
        [
            SpherePoint::finite(-1.0, 0.0),
            SpherePoint::finite(1.0, 0.0),
            SpherePoint::Infinity,
            SpherePoint::Finite(e1),
            SpherePoint::Finite(e2),
            SpherePoint::Finite(e3),
        ]
    }
}

impl Sampler for NearDegenerateSampler {
    fn name(&self) -> &'static str {
        "near-degenerate"
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> [SpherePoint; 6] {
        loop {
            let base = self.normalized(rng);
            let m = random_mobius(rng);
            let mut pts = base.map(|p| m.apply(&p));
            pts.shuffle(rng);
            if all_distinct(&pts) {
                return pts;
            }
        }
    }
}
