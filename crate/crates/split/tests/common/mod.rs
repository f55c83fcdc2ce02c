#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use sixsplit::{Complex64, DistinguishedTriple, MobiusMap, SpherePoint};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn polar(r: f64, t: f64) -> Complex64 {
    Complex64::from_polar(r, t)
}

pub fn outside_omega(z: Complex64) -> bool {
    (z - 1.0).norm() >= 2.0 && (z + 1.0).norm() >= 2.0
}

pub fn is_distinguished(e: &[Complex64; 3]) -> bool {
    e.iter().all(|&z| outside_omega(z)) && (e[0] - e[1]).norm() >= 2.0 && (e[0] - e[2]).norm() >= 2.0 && (e[1] - e[2]).norm() >= 2.0
}

/// Rejection-samples a distinguished triple with moduli in `[√3, max_r]`.
pub fn random_distinguished(rng: &mut ChaCha8Rng, max_r: f64) -> DistinguishedTriple {
    loop {
        let e: [Complex64; 3] =
            std::array::from_fn(|_| polar(rng.random_range(3f64.sqrt()..max_r), rng.random_range(0.0..TAU)));
        if is_distinguished(&e) {
            return DistinguishedTriple::new(e).expect("oracle says distinguished");
        }
    }
}

pub fn uniform_sphere_point(rng: &mut ChaCha8Rng) -> SpherePoint {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| StandardNormal.sample(rng));
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-9 {
            return SpherePoint::from_unit_vector(&[v[0] / n, v[1] / n, v[2] / n]);
        }
    }
}

pub fn uniform_six(rng: &mut ChaCha8Rng) -> [SpherePoint; 6] {
    std::array::from_fn(|_| uniform_sphere_point(rng))
}

/// Möbius map with Gaussian entries, conditioned away from singularity.
pub fn random_mobius(rng: &mut ChaCha8Rng) -> MobiusMap {
    loop {
        let mut g = || c(StandardNormal.sample(rng), StandardNormal.sample(rng));
        let (a, b, cc, d) = (g(), g(), g(), g());
        if (a * d - b * cc).norm() > 0.1 {
            return MobiusMap::new(a, b, cc, d).unwrap();
        }
    }
}

/// `min |Im(z e^{-it})| - 1` over `E` and whether both signs occur.
pub fn strip_margin_at(e: &[Complex64; 3], t: f64) -> (f64, bool) {
    let rot = polar(1.0, -t);
    let ims: Vec<f64> = e.iter().map(|z| (z * rot).im).collect();
    let margin = ims.iter().map(|v| v.abs() - 1.0).fold(f64::INFINITY, f64::min);
    let both = ims.iter().any(|&v| v > 0.0) && ims.iter().any(|&v| v < 0.0);
    (margin, both)
}

/// Best strip margin over an angle grid, among angles with both signs.
pub fn grid_strip_margin(e: &[Complex64; 3], step: f64) -> f64 {
    let n = (TAU / step).ceil() as usize;
    (0..n)
        .map(|k| strip_margin_at(e, k as f64 * step))
        .filter(|&(_, both)| both)
        .map(|(m, _)| m)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// How deep `z e^{-it}` sits inside `Σ = {Re ≥ 0, |Im| ≤ 1}` (negative outside).
pub fn sigma_depth(z: Complex64, t: f64) -> f64 {
    let w = z * polar(1.0, -t);
    w.re.min(1.0 - w.im.abs())
}

/// Best joint `Σ` depth of `z` and `w` over an angle grid.
pub fn grid_collinear_margin(z: Complex64, w: Complex64, step: f64) -> f64 {
    let n = (TAU / step).ceil() as usize;
    (0..n)
        .map(|k| {
            let t = k as f64 * step;
            sigma_depth(z, t).min(sigma_depth(w, t))
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `min_t |p - c(t)| - r(t)` on a 1e-3 grid, refined by a 1e-6 grid around
/// the best node.
pub fn grid_hull_distance(c1: Complex64, r1: f64, c2: Complex64, r2: f64, p: Complex64) -> f64 {
    let f = |t: f64| (p - (c1 * (1.0 - t) + c2 * t)).norm() - (r1 * (1.0 - t) + r2 * t);
    let mut best = (f64::INFINITY, 0.0);
    for k in 0..=1000 {
        let t = k as f64 * 1e-3;
        let v = f(t);
        if v < best.0 {
            best = (v, t);
        }
    }
    let lo = (best.1 - 1e-3).max(0.0);
    for k in 0..=2000 {
        let t = (lo + k as f64 * 1e-6).min(1.0);
        best.0 = best.0.min(f(t));
    }
    best.0
}

/// Angle between the sphere images of two points.
pub fn sphere_angle(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let (a, b) = (p.to_unit_vector(), q.to_unit_vector());
    let cross = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let s = (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
    s.atan2(a[0] * b[0] + a[1] * b[1] + a[2] * b[2])
}

pub fn wrap(t: f64) -> f64 {
    t.rem_euclid(TAU)
}

pub const HALF_PI: f64 = PI / 2.0;
