//! Fixed regions of the normalized frame `{-1, 1, ∞} ∪ E`.

use std::f64::consts::PI;

use sixsplit_core::{Complex64, GeneralizedDisc, MobiusMap, SpherePoint};

pub fn sqrt3() -> f64 {
    3f64.sqrt()
}

/// `Ω = (1 + 2D) ∪ (-1 + 2D)` with open discs.
pub fn in_omega(z: Complex64) -> bool {
    (z - 1.0).norm() < 2.0 || (z + 1.0).norm() < 2.0
}

/// `Σ = {Re ≥ 0, |Im| ≤ 1}`.
pub fn in_sigma(z: Complex64) -> bool {
    z.re >= 0.0 && z.im.abs() <= 1.0
}

/// `F+ = i/√3 + (2/√3)·D̄`, through `-1`, `1` and `√3i`.
pub fn f_plus() -> GeneralizedDisc {
    GeneralizedDisc::disk(Complex64::new(0.0, 1.0 / sqrt3()), 2.0 / sqrt3()).expect("F+")
}

/// `F- = -i/√3 + (2/√3)·D̄`, through `-1`, `1` and `-√3i`.
pub fn f_minus() -> GeneralizedDisc {
    GeneralizedDisc::disk(Complex64::new(0.0, -1.0 / sqrt3()), 2.0 / sqrt3()).expect("F-")
}

/// `S(x) = e^{2πi/3} x + e^{iπ/3}`, the turn by `2π/3` about `i/√3`.
pub fn s_map() -> MobiusMap {
    MobiusMap::affine(Complex64::from_polar(1.0, 2.0 * PI / 3.0), Complex64::from_polar(1.0, PI / 3.0))
        .expect("S is affine and invertible")
}

/// Applies `S^power` for `power ∈ {0, 1, 2}` (taken mod 3).
pub fn rotate_by_s(p: &SpherePoint, power: u32) -> SpherePoint {
    match p.as_finite() {
        None => SpherePoint::Infinity,
        Some(z) => {
            let k = power % 3;
            let w = Complex64::from_polar(1.0, 2.0 * PI * f64::from(k) / 3.0);
            let center = Complex64::new(0.0, 1.0 / sqrt3());
            SpherePoint::Finite(center + w * (z - center))
        }
    }
}

/// The fixed sets as values, for callers that want them in one place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionConstants {
    pub f_plus: GeneralizedDisc,
    pub f_minus: GeneralizedDisc,
    pub s: MobiusMap,
    pub triangle: [Complex64; 3],
}

impl Default for RegionConstants {
    fn default() -> Self {
        RegionConstants { f_plus: f_plus(), f_minus: f_minus(), s: s_map(), triangle: triangle_t() }
    }
}

/// Vertices of the triangle `T`.
pub fn triangle_t() -> [Complex64; 3] {
    let s3 = sqrt3();
    [Complex64::new(-1.0 - s3, -1.0), Complex64::new(1.0 + s3, -1.0), Complex64::new(0.0, 2.0 + s3)]
}

/// Membership in the open triangle `T`.
pub fn in_triangle_t(z: Complex64) -> bool {
    let v = triangle_t();
    let cross = |a: Complex64, b: Complex64, p: Complex64| ((b - a).conj() * (p - a)).im;
    (0..3).all(|k| cross(v[k], v[(k + 1) % 3], z) > 0.0)
}
