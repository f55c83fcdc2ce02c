use std::fmt;

use num_complex::Complex64;

use crate::error::CoreError;
use crate::vec3::Vec3;

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    /// Finite point; panics in debug builds on non-finite coordinates.
    pub fn finite(re: f64, im: f64) -> Self {
        debug_assert!(re.is_finite() && im.is_finite(), "non-finite point");
        SpherePoint::Finite(Complex64::new(re, im))
    }

    pub fn try_finite(re: f64, im: f64) -> Result<Self, CoreError> {
        if re.is_finite() && im.is_finite() {
            Ok(SpherePoint::Finite(Complex64::new(re, im)))
        } else {
            Err(CoreError::NonFinite { re, im })
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex64> {
        match self {
            SpherePoint::Finite(z) => Some(*z),
            SpherePoint::Infinity => None,
        }
    }

    /// Homogeneous coordinates `(z0, z1)` with `|z0|² + |z1|² = 1`.
    ///
    /// For finite `z` this is `(z, 1)` rescaled; large `|z|` is handled through
    /// `1/z` so nothing overflows.
    pub fn unit_homogeneous(&self) -> (Complex64, Complex64) {
        match *self {
            SpherePoint::Infinity => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
            SpherePoint::Finite(z) => {
                let m = z.norm();
                if m <= 1.0 {
                    let s = 1.0 / (1.0 + m * m).sqrt();
                    (z * s, Complex64::new(s, 0.0))
                } else {
                    let w = z.inv();
                    let s = 1.0 / (1.0 + w.norm_sqr()).sqrt();
                    (Complex64::new(s, 0.0), w * s)
                }
            }
        }
    }

    /// Inverse of the homogeneous embedding. A zero (or underflowing) second
    /// coordinate, or an overflowing quotient, yields ∞.
    pub fn from_homogeneous(z0: Complex64, z1: Complex64) -> Self {
        if z1.re == 0.0 && z1.im == 0.0 {
            return SpherePoint::Infinity;
        }
        let q = z0 / z1;
        if q.re.is_finite() && q.im.is_finite() {
            SpherePoint::Finite(q)
        } else {
            SpherePoint::Infinity
        }
    }

    /// Stereographic image on the unit sphere, projecting from the north
    /// pole: `0 ↦ (0,0,-1)`, `∞ ↦ (0,0,1)`, the unit circle ↦ the equator.
    pub fn to_unit_vector(&self) -> Vec3 {
        match *self {
            SpherePoint::Infinity => [0.0, 0.0, 1.0],
            SpherePoint::Finite(z) => {
                let m2 = z.norm_sqr();
                if m2 <= 1.0 {
                    let d = 1.0 + m2;
                    [2.0 * z.re / d, 2.0 * z.im / d, (m2 - 1.0) / d]
                } else {
                    let w = z.inv();
                    let w2 = w.norm_sqr();
                    let d = 1.0 + w2;
                    [2.0 * w.re / d, -2.0 * w.im / d, (1.0 - w2) / d]
                }
            }
        }
    }

    /// Inverse stereographic projection; the input need not be exactly unit.
    pub fn from_unit_vector(v: &Vec3) -> Self {
        let n = crate::vec3::norm(v);
        let [x, y, z] = [v[0] / n, v[1] / n, v[2] / n];
        if z > 0.0 {
            // (x + iy)/(1 - z) == (1 + z)/(x - iy) on the sphere
            let den = Complex64::new(x, -y);
            if den.re == 0.0 && den.im == 0.0 {
                return SpherePoint::Infinity;
            }
            let q = Complex64::new(1.0 + z, 0.0) / den;
            if q.re.is_finite() && q.im.is_finite() {
                SpherePoint::Finite(q)
            } else {
                SpherePoint::Infinity
            }
        } else {
            SpherePoint::Finite(Complex64::new(x, y) / (1.0 - z))
        }
    }

    /// Euclidean distance between the stereographic images (in `[0, 2]`).
    pub fn chordal_distance(&self, other: &SpherePoint) -> f64 {
        let a = self.to_unit_vector();
        let b = other.to_unit_vector();
        crate::vec3::norm(&crate::vec3::sub(&a, &b))
    }

    pub fn conj(&self) -> Self {
        match *self {
            SpherePoint::Finite(z) => SpherePoint::Finite(z.conj()),
            SpherePoint::Infinity => SpherePoint::Infinity,
        }
    }
}

impl From<Complex64> for SpherePoint {
    fn from(z: Complex64) -> Self {
        SpherePoint::Finite(z)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) => write!(f, "{}{:+}i", z.re, z.im),
            SpherePoint::Infinity => write!(f, "∞"),
        }
    }
}
