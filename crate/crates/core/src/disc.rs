use num_complex::Complex64;

use crate::cap::SphericalCap;
use crate::error::CoreError;
use crate::mobius::MobiusMap;
use crate::point::SpherePoint;
use crate::BOUNDARY_BAND;

/// A closed disc of the Riemann sphere.
///
/// Stored as the Hermitian form `h(z) = A|z|² + B z̄ + B̄ z + C`; the disc is
/// `{h ≤ 0}` and contains ∞ iff `A ≤ 0`. The form is scaled so that
/// `A² + 2|B|² + C² = 1`, which makes the representation unique for a given
/// set. In sphere coordinates `X` the normalized form reads `n·X + k` with
/// `n = (Re B, Im B, (A - C)/2)`, `k = (A + C)/2` and `|n|² + k² = 1/2`.
///
/// The discriminant `|B|² - AC` is carried alongside the coefficients, since
/// recomputing it cancels badly for very small or very large caps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedDisc {
    a: f64,
    b: Complex64,
    c: f64,
    gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainmentClass {
    Inside,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Containment {
    /// `h(p)/(1 + |p|²)` for the normalized form; the value at ∞ is `A`.
    pub signed_value: f64,
    pub class: ContainmentClass,
}

impl Containment {
    fn from_value(signed_value: f64) -> Self {
        let class = if signed_value < -BOUNDARY_BAND {
            ContainmentClass::Inside
        } else if signed_value > BOUNDARY_BAND {
            ContainmentClass::Outside
        } else {
            ContainmentClass::Boundary
        };
        Containment { signed_value, class }
    }

    /// Closed membership: inside or on the boundary band.
    pub fn is_member(&self) -> bool {
        self.class != ContainmentClass::Outside
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disjointness {
    pub disjoint: bool,
    /// `angle(c1, c2) - ρ1 - ρ2` between the caps.
    pub separation: f64,
}

/// The plane picture of a disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlaneView {
    /// `{|z - center| ≤ radius}`.
    Disk { center: Complex64, radius: f64 },
    /// `{|z - center| ≥ radius} ∪ {∞}`.
    Codisk { center: Complex64, radius: f64 },
    /// `{Re(z · conj(normal)) ≥ offset} ∪ {∞}` with a unit inward normal.
    HalfPlane { normal: Complex64, offset: f64 },
}

/// `|A|` below this (relative to the unit-norm form) reads as a half-plane.
const HALFPLANE_EPS: f64 = 4.0 * f64::EPSILON;

impl GeneralizedDisc {
    /// Builds from raw coefficients, scaling to unit norm with a positive
    /// factor (so the encoded set is preserved).
    pub fn from_hermitian(a: f64, b: Complex64, c: f64) -> Result<Self, CoreError> {
        if !(a.is_finite() && b.re.is_finite() && b.im.is_finite() && c.is_finite()) {
            return Err(CoreError::InvalidDisc("non-finite coefficient"));
        }
        Self::with_gap(a, b, c, b.norm_sqr() - a * c)
    }

    /// Like [`from_hermitian`](Self::from_hermitian) with `|B|² - AC` supplied
    /// by the caller (for the unscaled coefficients).
    fn with_gap(a: f64, b: Complex64, c: f64, gap: f64) -> Result<Self, CoreError> {
        let s2 = a * a + 2.0 * b.norm_sqr() + c * c;
        let s = s2.sqrt();
        if s == 0.0 || !s.is_finite() || !(gap > 0.0) {
            return Err(CoreError::DegenerateForm);
        }
        Ok(GeneralizedDisc { a: a / s, b: b / s, c: c / s, gap: gap / s2 })
    }

    pub fn disk(center: Complex64, radius: f64) -> Result<Self, CoreError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(CoreError::InvalidDisc("radius must be positive"));
        }
        // |z - c|² - r²; the shift avoids cancellation in |c|² - r²
        Self::with_gap(1.0, -center, (center.norm() - radius) * (center.norm() + radius), radius * radius)
    }

    pub fn codisk(center: Complex64, radius: f64) -> Result<Self, CoreError> {
        let d = Self::disk(center, radius)?;
        Ok(d.complement_closure())
    }

    /// `{Re(z · conj(normal)) ≥ offset} ∪ {∞}`; `normal` need not be unit.
    pub fn half_plane(normal: Complex64, offset: f64) -> Result<Self, CoreError> {
        let n = normal.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(CoreError::InvalidDisc("zero normal"));
        }
        let u = normal / n;
        Self::with_gap(0.0, -u, 2.0 * offset / n, 1.0)
    }

    /// Half-plane bounded by the line through `point` with inward `normal`.
    pub fn half_plane_through(point: Complex64, normal: Complex64) -> Result<Self, CoreError> {
        let n = normal.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(CoreError::InvalidDisc("zero normal"));
        }
        let u = normal / n;
        Self::half_plane(u, (point * u.conj()).re)
    }

    pub fn unit_disc() -> Self {
        Self::disk(Complex64::new(0.0, 0.0), 1.0).expect("unit disc")
    }

    pub fn coefficients(&self) -> (f64, Complex64, f64) {
        (self.a, self.b, self.c)
    }

    /// The closure of the complement, `{h ≥ 0}`.
    pub fn complement_closure(&self) -> Self {
        GeneralizedDisc { a: -self.a, b: -self.b, c: -self.c, gap: self.gap }
    }

    /// Image under `z ↦ z̄`.
    pub fn conj(&self) -> Self {
        GeneralizedDisc { a: self.a, b: self.b.conj(), c: self.c, gap: self.gap }
    }

    /// Raw form value at a finite point.
    pub fn evaluate(&self, z: Complex64) -> f64 {
        self.a * z.norm_sqr() + 2.0 * (self.b.conj() * z).re + self.c
    }

    pub fn contains(&self, p: &SpherePoint) -> Containment {
        let (z0, z1) = p.unit_homogeneous();
        let v = self.a * z0.norm_sqr() + 2.0 * (self.b.conj() * z0 * z1.conj()).re + self.c * z1.norm_sqr();
        Containment::from_value(v)
    }

    pub fn contains_finite(&self, z: Complex64) -> Containment {
        self.contains(&SpherePoint::Finite(z))
    }

    /// The disc `m(self)`: membership commutes with [`MobiusMap::apply`].
    pub fn pushforward(&self, m: &MobiusMap) -> Self {
        let n = m.inverse_matrix();
        let h = [[Complex64::new(self.a, 0.0), self.b], [self.b.conj(), Complex64::new(self.c, 0.0)]];
        // H' = N* H N with N = M⁻¹
        let mut hn = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                hn[i][j] = h[i][0] * n[0][j] + h[i][1] * n[1][j];
            }
        }
        let entry = |i: usize, j: usize| n[0][i].conj() * hn[0][j] + n[1][i].conj() * hn[1][j];
        let a = entry(0, 0).re;
        let b = entry(0, 1);
        let c = entry(1, 1).re;
        // det(N* H N) = det H · |det N|²
        let det_n = n[0][0] * n[1][1] - n[0][1] * n[1][0];
        Self::with_gap(a, b, c, self.gap * det_n.norm_sqr()).expect("congruence preserves nondegeneracy")
    }

    fn sphere_form(&self) -> ([f64; 3], f64) {
        ([self.b.re, self.b.im, 0.5 * (self.a - self.c)], 0.5 * (self.a + self.c))
    }

    pub fn to_cap(&self) -> SphericalCap {
        let (n, k) = self.sphere_form();
        let n_norm = crate::vec3::norm(&n);
        let center = crate::vec3::scale(&n, -1.0 / n_norm);
        let sin_part = self.gap.sqrt();
        let rho = sin_part.atan2(k);
        SphericalCap::new(center, rho).expect("nondegenerate disc has a proper cap")
    }

    pub fn from_cap(cap: &SphericalCap) -> Self {
        let rho = cap.angular_radius();
        let c = rho.cos();
        // |n|² + k² = 1/2 with k = |n| cos ρ
        let n_norm = 1.0 / (2.0 * (1.0 + c * c)).sqrt();
        let k = n_norm * c;
        let cc = cap.center();
        let n = [-cc[0] * n_norm, -cc[1] * n_norm, -cc[2] * n_norm];
        let a = k + n[2];
        let c_coef = k - n[2];
        let gap = (n_norm * rho.sin()).powi(2);
        Self::with_gap(a, Complex64::new(n[0], n[1]), c_coef, gap).expect("cap yields nondegenerate form")
    }

    /// Disjointness measured on the sphere.
    pub fn disjointness(&self, other: &GeneralizedDisc) -> Disjointness {
        let separation = self.to_cap().separation(&other.to_cap());
        Disjointness { disjoint: separation > 0.0, separation }
    }

    pub fn is_half_plane(&self) -> bool {
        self.a.abs() <= HALFPLANE_EPS
    }

    pub fn is_bounded(&self) -> bool {
        self.a > HALFPLANE_EPS
    }

    pub fn plane_view(&self) -> PlaneView {
        if self.is_half_plane() {
            let bn = self.b.norm();
            PlaneView::HalfPlane { normal: -self.b / bn, offset: self.c / (2.0 * bn) }
        } else {
            let center = -self.b / self.a;
            let radius = self.gap.sqrt() / self.a.abs();
            if self.a > 0.0 {
                PlaneView::Disk { center, radius }
            } else {
                PlaneView::Codisk { center, radius }
            }
        }
    }

    pub fn from_plane_view(view: &PlaneView) -> Result<Self, CoreError> {
        match *view {
            PlaneView::Disk { center, radius } => Self::disk(center, radius),
            PlaneView::Codisk { center, radius } => Self::codisk(center, radius),
            PlaneView::HalfPlane { normal, offset } => Self::half_plane(normal, offset),
        }
    }

    /// Center and radius when the disc is bounded.
    pub fn center_radius(&self) -> Option<(Complex64, f64)> {
        match self.plane_view() {
            PlaneView::Disk { center, radius } => Some((center, radius)),
            _ => None,
        }
    }
}
