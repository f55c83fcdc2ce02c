use num_complex::Complex64;

use crate::error::CoreError;
use crate::point::SpherePoint;

/// Fractional-linear map `z ↦ (az + b)/(cz + d)`, stored with `ad - bc = 1`.
///
/// Acts on column vectors `(z, 1)` of homogeneous coordinates, so composition
/// is matrix multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

fn det2(u: (Complex64, Complex64), v: (Complex64, Complex64)) -> Complex64 {
    u.0 * v.1 - u.1 * v.0
}

impl MobiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, CoreError> {
        let det = a * d - b * c;
        let finite = [a, b, c, d, det].iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite || det.norm() == 0.0 {
            return Err(CoreError::SingularMap);
        }
        let s = det.sqrt().inv();
        Ok(MobiusMap { a: a * s, b: b * s, c: c * s, d: d * s })
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        MobiusMap { a: one, b: zero, c: zero, d: one }
    }

    /// `z ↦ scale·z + shift`.
    pub fn affine(scale: Complex64, shift: Complex64) -> Result<Self, CoreError> {
        Self::new(scale, shift, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    /// `z ↦ 1/z`.
    pub fn inversion() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new(zero, one, one, zero).expect("inversion is invertible")
    }

    /// The sphere rotation (unitary map) sending `p` to ∞. Identity for `p = ∞`.
    pub fn rotation_to_infinity(p: &SpherePoint) -> Self {
        match *p {
            SpherePoint::Infinity => Self::identity(),
            SpherePoint::Finite(z) => {
                let one = Complex64::new(1.0, 0.0);
                // [[z̄, 1], [-1, z]] / sqrt(1 + |z|²) is unitary and kills (z, 1)
                // in the second row.
                Self::new(z.conj(), one, -one, z).expect("unitary map is invertible")
            }
        }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn apply(&self, p: &SpherePoint) -> SpherePoint {
        let (z0, z1) = p.unit_homogeneous();
        let w0 = self.a * z0 + self.b * z1;
        let w1 = self.c * z0 + self.d * z1;
        SpherePoint::from_homogeneous(w0, w1)
    }

    pub fn inverse(&self) -> Self {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> Self {
        let a = self.a * other.a + self.b * other.c;
        let b = self.a * other.b + self.b * other.d;
        let c = self.c * other.a + self.d * other.c;
        let d = self.c * other.b + self.d * other.d;
        // product of unit-determinant matrices; renormalize against drift
        Self::new(a, b, c, d).expect("composition of invertible maps")
    }

    /// The map sending `p[i] ↦ q[i]` for `i = 0, 1, 2`.
    pub fn from_three_points(p: [SpherePoint; 3], q: [SpherePoint; 3]) -> Result<Self, CoreError> {
        let f = Self::to_zero_one_infinity(p)?;
        let g = Self::to_zero_one_infinity(q)?;
        Ok(g.inverse().compose(&f))
    }

    /// The map sending `p[0], p[1], p[2]` to `0, 1, ∞`.
    fn to_zero_one_infinity(p: [SpherePoint; 3]) -> Result<Self, CoreError> {
        let h: Vec<_> = p.iter().map(|x| x.unit_homogeneous()).collect();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            // |det| of unit homogeneous vectors is half the chordal distance
            if det2(h[i], h[j]).norm() < 1e-15 {
                return Err(CoreError::CoincidentPoints(i, j));
            }
        }
        let k1 = det2(h[1], h[2]);
        let k3 = det2(h[1], h[0]);
        Self::new(k1 * h[0].1, -k1 * h[0].0, k3 * h[2].1, -k3 * h[2].0)
    }

    /// Coefficients of the inverse, as used to pull Hermitian forms back.
    pub(crate) fn inverse_matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.d, -self.b], [-self.c, self.a]]
    }
}
