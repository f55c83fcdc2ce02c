//! Plane disc constructions used by the splitting strategies.

use sixsplit_core::{Complex64, GeneralizedDisc};

use crate::error::{precondition, Result, SplitError};
use crate::numeric::golden_min;
use crate::regions::{f_minus, f_plus};

/// `F(z, w)`: the closed disc with `z` and `w` as antipodal boundary points.
pub fn diameter_disc(z: Complex64, w: Complex64) -> Result<GeneralizedDisc> {
    if z == w {
        return precondition("diameter endpoints coincide");
    }
    Ok(GeneralizedDisc::disk((z + w) / 2.0, (z - w).norm() / 2.0)?)
}

/// `Re((z3 - z1)·conj(z3 - z2))`; positive exactly when `z3 ∉ F(z1, z2)`.
pub fn diameter_criterion(z1: Complex64, z2: Complex64, z3: Complex64) -> f64 {
    ((z3 - z1) * (z3 - z2).conj()).re
}

pub fn outside_diameter_disc(z1: Complex64, z2: Complex64, z3: Complex64) -> bool {
    diameter_criterion(z1, z2, z3) > 0.0
}

/// Distance from a point to `conv(f1 ∪ f2)` for two bounded discs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullDistance {
    /// `min_t |p - c(t)| - r(t)`; nonpositive iff the point is in the hull.
    pub signed_distance: f64,
    /// Weight of `f1` at the minimizer.
    pub t: f64,
    /// Closest point of the hull boundary to `p` (meaningful when outside).
    pub nearest: Complex64,
}

impl HullDistance {
    pub fn is_member(&self) -> bool {
        self.signed_distance <= 0.0
    }
}

fn bounded(d: &GeneralizedDisc) -> Result<(Complex64, f64)> {
    d.center_radius().ok_or_else(|| SplitError::Precondition("hull inputs must be bounded discs".into()))
}

/// The hull is the union of `c(t) + r(t)·D̄` with `c(t) = t·c1 + (1-t)·c2`,
/// `r(t) = t·r1 + (1-t)·r2`; the distance is convex in `t`.
pub fn hull_membership(f1: &GeneralizedDisc, f2: &GeneralizedDisc, p: Complex64) -> Result<HullDistance> {
    let (c1, r1) = bounded(f1)?;
    let (c2, r2) = bounded(f2)?;
    let g = |t: f64| (p - (c1 * t + c2 * (1.0 - t))).norm() - (r1 * t + r2 * (1.0 - t));
    let (t, signed_distance) = golden_min(g, 0.0, 1.0, 1e-12);
    let c = c1 * t + c2 * (1.0 - t);
    let r = r1 * t + r2 * (1.0 - t);
    let off = p - c;
    let nearest = if off.norm() > 0.0 { c + off * (r / off.norm()) } else { c };
    Ok(HullDistance { signed_distance, t, nearest })
}

/// Half-plane through the midpoint of `p` and its nearest hull point, facing
/// `p`; it contains `p` and misses `conv(f1 ∪ f2)`.
pub fn separating_halfplane(f1: &GeneralizedDisc, f2: &GeneralizedDisc, p: Complex64) -> Result<GeneralizedDisc> {
    let h = hull_membership(f1, f2, p)?;
    if !(h.signed_distance > 0.0) {
        return precondition("point lies in the convex hull");
    }
    let normal = p - h.nearest;
    if normal.norm() == 0.0 {
        return precondition("point lies on the hull boundary");
    }
    Ok(GeneralizedDisc::half_plane_through((p + h.nearest) / 2.0, normal)?)
}

/// A bounded disc containing `p` and `q` that stays above the line
/// `Im = (floor + min(Im p, Im q))/2`.
pub fn enclosed_disc_in_halfplane(p: Complex64, q: Complex64, floor: f64) -> Result<GeneralizedDisc> {
    if p == q {
        return precondition("points coincide");
    }
    if !(p.im > floor && q.im > floor) {
        return precondition("points must lie strictly above the floor");
    }
    let target = (floor + p.im.min(q.im)) / 2.0;
    let m = (p + q) / 2.0;
    let h = (q - p).norm() / 2.0;
    if m.im - h >= target {
        return diameter_disc(p, q);
    }
    // centers m + s·u on the bisector, u the upward unit normal of [p, q]
    let d = (q - p) / (2.0 * h);
    let mut u = Complex64::new(-d.im, d.re);
    if u.im < 0.0 {
        u = -u;
    }
    let k = m.im - target;
    let uy = u.im;
    let roots: Vec<f64> = if (1.0 - uy).abs() <= 1e-15 {
        vec![(h * h - k * k) / (2.0 * k)]
    } else {
        // s²(uy² - 1) + 2k·uy·s + (k² - h²) = 0
        let a = uy * uy - 1.0;
        let b = 2.0 * k * uy;
        let c = k * k - h * h;
        let disc = (b * b - 4.0 * a * c).max(0.0).sqrt();
        vec![(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)]
    };
    let s = roots
        .into_iter()
        .filter(|s| s.is_finite() && k + s * uy >= -1e-12 * (1.0 + k.abs()))
        .min_by(|x, y| x.abs().total_cmp(&y.abs()))
        .ok_or_else(|| SplitError::NoConstruction("no tangent circle".into()))?;
    let center = m + u * s;
    Ok(GeneralizedDisc::disk(center, (h * h + s * s).sqrt())?)
}

/// The member `F(t) = c + t·v + |v|·√(1+t²)·D̄` of the pencil through `z1`
/// and `z2`, with `c = (z1+z2)/2` and `v = i(z2-z1)/2`.
pub fn lifted_disc_at(z1: Complex64, z2: Complex64, t: f64) -> Result<GeneralizedDisc> {
    if z1 == z2 {
        return precondition("points coincide");
    }
    let c = (z1 + z2) / 2.0;
    let v = Complex64::new(0.0, 1.0) * (z2 - z1) / 2.0;
    Ok(GeneralizedDisc::disk(c + v * t, v.norm() * (1.0 + t * t).sqrt())?)
}

/// Parameter of the lifted disc: the disc whose lowest point is `z2` when
/// the chord slopes down, else the least `t` with bottom at `Im = -1`.
pub fn lifted_parameter(z1: Complex64, z2: Complex64) -> f64 {
    let v = Complex64::new(0.0, 1.0) * (z2 - z1) / 2.0;
    if v.re > 1e-12 * v.norm() {
        v.im / v.re
    } else {
        let g = 2.0 / v.norm();
        if g >= 1.0 {
            0.0
        } else {
            (1.0 - g * g) / (2.0 * g)
        }
    }
}

const LIFT_TOL: f64 = 1e-9;

/// A disc through `z1`, `z2` inside `{Im ≥ -1}` and missing the unit disc.
pub fn lifted_disc(z1: Complex64, z2: Complex64) -> Result<GeneralizedDisc> {
    if !(1.0 - LIFT_TOL <= z1.re && z1.re < z2.re) {
        return precondition("need 1 ≤ Re z1 < Re z2");
    }
    if (z1.im - 1.0).abs() > LIFT_TOL || z2.im.abs() > 1.0 + LIFT_TOL {
        return precondition("need Im z1 = 1 and |Im z2| ≤ 1");
    }
    let f = diameter_disc(z1, z2)?;
    if !f.disjointness(&GeneralizedDisc::unit_disc()).disjoint {
        return precondition("F(z1, z2) meets the unit disc");
    }
    lifted_disc_at(z1, z2, lifted_parameter(z1, z2))
}

/// Whichever of `F±` misses `F(z1, z2)`, preferring the wider gap.
pub fn fallback_fpm(z1: Complex64, z2: Complex64) -> Result<GeneralizedDisc> {
    let f = diameter_disc(z1, z2)?;
    if f.disjointness(&GeneralizedDisc::unit_disc()).disjoint {
        return precondition("F(z1, z2) misses the unit disc");
    }
    let plus = f_plus();
    let minus = f_minus();
    let sp = f.disjointness(&plus);
    let sm = f.disjointness(&minus);
    match (sp.disjoint, sm.disjoint) {
        (false, false) => Err(SplitError::NoConstruction("F(z1, z2) meets both F+ and F-".into())),
        (true, false) => Ok(plus),
        (false, true) => Ok(minus),
        (true, true) => Ok(if sp.separation >= sm.separation { plus } else { minus }),
    }
}

/// Sufficient test for `z3 ∉ conv(F(z1, z2) ∪ √3·D̄)`.
pub fn covering_check(z1: Complex64, z2: Complex64, z3: Complex64) -> bool {
    z3.norm() >= 5f64.sqrt() && (z3 - z1).norm() >= 2.0 && (z3 - z2).norm() >= 2.0
}
