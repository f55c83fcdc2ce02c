//! Arc arithmetic on the unit circle and the strip/half-strip case analysis.
//!
//! A rotation is written `a = e^{it}`; dividing by `a` turns the plane by
//! `-t`. All arcs are sets of such angles `t`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use sixsplit_core::Complex64;

use crate::error::{Result, SplitError};
use crate::numeric::{golden_max, wrap_2pi, wrap_pi};
use crate::regions::in_sigma;
use crate::triple::{check_distinguished, DistinguishedTriple};

/// Tolerance for the classification's stated case conditions.
pub const CASE_TOLERANCE: f64 = 1e-9;

/// A closed arc `{center + s : |s| ≤ half_width}` of angles. A half-width of
/// `π` is the whole circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    center: f64,
    half_width: f64,
}

impl Arc {
    pub fn new(center: f64, half_width: f64) -> Self {
        Arc { center: wrap_2pi(center), half_width: half_width.clamp(0.0, PI) }
    }

    pub fn whole() -> Self {
        Arc { center: 0.0, half_width: PI }
    }

    pub fn center_angle(&self) -> f64 {
        self.center
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn is_whole(&self) -> bool {
        self.half_width >= PI
    }

    pub fn measure(&self) -> f64 {
        2.0 * self.half_width
    }

    pub fn contains(&self, t: f64) -> bool {
        self.is_whole() || wrap_pi(t - self.center).abs() <= self.half_width
    }

    /// Signed distance from `t` to the arc boundary; negative inside.
    pub fn excess(&self, t: f64) -> f64 {
        wrap_pi(t - self.center).abs() - self.half_width
    }
}

/// `C_z`: angles `t` with `|Im(z e^{-it})| ≤ 1`.
pub fn forbidden_arcs(z: Complex64) -> Vec<Arc> {
    let m = z.norm();
    if m <= 1.0 {
        return vec![Arc::whole()];
    }
    let t0 = z.arg();
    let alpha = (1.0 / m).asin();
    vec![Arc::new(t0, alpha), Arc::new(t0 + PI, alpha)]
}

/// Angles `t` with `z e^{-it}` in the half-strip `Σ`.
pub fn sigma_arc(z: Complex64) -> Arc {
    let m = z.norm();
    if m == 0.0 {
        return Arc::whole();
    }
    let hw = if m <= 1.0 { FRAC_PI_2 } else { (1.0 / m).asin() };
    Arc::new(z.arg(), hw)
}

/// Maximal arcs of the complement of a union, sorted by center angle.
pub fn complement_of_arc_union(arcs: &[Arc]) -> Vec<Arc> {
    if arcs.iter().any(Arc::is_whole) {
        return Vec::new();
    }
    if arcs.is_empty() {
        return vec![Arc::whole()];
    }
    let mut spans: Vec<(f64, f64)> = arcs
        .iter()
        .filter(|a| a.half_width > 0.0)
        .map(|a| {
            let s = wrap_2pi(a.center - a.half_width);
            (s, s + 2.0 * a.half_width)
        })
        .collect();
    if spans.is_empty() {
        return vec![Arc::whole()];
    }
    spans.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(spans.len());
    for (s, e) in spans {
        match merged.last_mut() {
            Some(last) if s <= last.1 => last.1 = last.1.max(e),
            _ => merged.push((s, e)),
        }
    }
    // the last span may wrap past 2π onto the first ones
    while merged.len() > 1 && merged[0].0 + TAU <= merged[merged.len() - 1].1 {
        let first = merged.remove(0);
        let last = merged.last_mut().expect("nonempty");
        last.1 = last.1.max(first.1 + TAU);
    }
    if merged.len() == 1 && merged[0].1 - merged[0].0 >= TAU {
        return Vec::new();
    }
    let mut gaps = Vec::with_capacity(merged.len());
    for k in 0..merged.len() {
        let end = merged[k].1;
        let next = if k + 1 < merged.len() { merged[k + 1].0 } else { merged[0].0 + TAU };
        if next > end {
            gaps.push(Arc::new((end + next) / 2.0, (next - end) / 2.0));
        }
    }
    gaps.sort_by(|x, y| x.center.total_cmp(&y.center));
    gaps
}

/// Total measure of a union of arcs.
pub fn union_measure(arcs: &[Arc]) -> f64 {
    TAU - complement_of_arc_union(arcs).iter().map(Arc::measure).sum::<f64>()
}

/// A rotation placing the three points strictly off the strip `|Im| ≤ 1`,
/// with points on both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct StripWitness {
    pub a: Complex64,
    pub above: Vec<usize>,
    pub below: Vec<usize>,
    pub margin: f64,
}

impl StripWitness {
    /// Checks the witness against the points it was built for.
    pub fn is_valid_for(&self, e: &[Complex64; 3]) -> bool {
        let mut seen = [false; 3];
        for &i in self.above.iter().chain(&self.below) {
            if i >= 3 || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        if !(seen.iter().all(|&s| s) && !self.above.is_empty() && !self.below.is_empty() && self.margin > 0.0) {
            return false;
        }
        let ok_above = self.above.iter().all(|&i| (e[i] / self.a).im >= 1.0 + self.margin * (1.0 - 1e-9));
        let ok_below = self.below.iter().all(|&i| (e[i] / self.a).im <= -1.0 - self.margin * (1.0 - 1e-9));
        ok_above && ok_below
    }
}

fn strip_margin(e: &[Complex64; 3], t: f64) -> f64 {
    let r = Complex64::from_polar(1.0, -t);
    e.iter().map(|z| (z * r).im.abs()).fold(f64::INFINITY, f64::min) - 1.0
}

/// Strip witness of maximal margin, or `None` if every rotation leaves a
/// point in the strip or all points on one side.
pub fn find_strip_witness(e: &DistinguishedTriple) -> Option<StripWitness> {
    strip_witness_for(e.points())
}

pub(crate) fn strip_witness_for(e: &[Complex64; 3]) -> Option<StripWitness> {
    let arcs: Vec<Arc> = e.iter().flat_map(|z| forbidden_arcs(*z)).collect();
    let mut best: Option<(f64, f64)> = None;
    for gap in complement_of_arc_union(&arcs) {
        let r = Complex64::from_polar(1.0, -gap.center);
        let above = e.iter().filter(|z| (*z * r).im > 0.0).count();
        if above == 0 || above == 3 {
            continue;
        }
        // on a gap every |Im(z e^{-it})| is a positive arch, so the min is concave
        let lo = gap.center - gap.half_width;
        let hi = gap.center + gap.half_width;
        let (t, m) = golden_max(|t| strip_margin(e, t), lo, hi, 1e-13);
        if !(m > 0.0) {
            continue;
        }
        let t = wrap_2pi(t);
        let better = match best {
            None => true,
            Some((bm, bt)) => {
                let tie = (m - bm).abs() <= 1e-12 * (1.0 + bm.abs());
                (!tie && m > bm) || (tie && t < bt)
            }
        };
        if better {
            best = Some((m, t));
        }
    }
    let (_, t) = best?;
    let a = Complex64::from_polar(1.0, t);
    let mut above = Vec::new();
    let mut below = Vec::new();
    for (i, z) in e.iter().enumerate() {
        if (z / a).im > 0.0 {
            above.push(i);
        } else {
            below.push(i);
        }
    }
    let margin = strip_margin(e, t);
    Some(StripWitness { a, above, below, margin })
}

fn arcs_meet(x: &Arc, y: &Arc, tol: f64) -> Option<f64> {
    if x.is_whole() {
        return Some(y.center);
    }
    if y.is_whole() {
        return Some(x.center);
    }
    let d = wrap_pi(y.center - x.center);
    let lo = (-x.half_width).max(d - y.half_width);
    let hi = x.half_width.min(d + y.half_width);
    (lo <= hi + tol).then(|| x.center + (lo + hi) / 2.0)
}

/// Whether some rotation puts both points in `Σ`; the witness rotation is the
/// midpoint of the overlap.
pub fn approximately_collinear(z: Complex64, w: Complex64) -> (bool, Option<Complex64>) {
    match arcs_meet(&sigma_arc(z), &sigma_arc(w), 0.0) {
        Some(t) => (true, Some(Complex64::from_polar(1.0, t))),
        None => (false, None),
    }
}

pub(crate) fn approximately_collinear_tol(z: Complex64, w: Complex64, tol: f64) -> bool {
    arcs_meet(&sigma_arc(z), &sigma_arc(w), tol).is_some()
}

/// The unit `b` with `Im(z1/b) = -Im(z2/b)` and `Re(z1/b) ≥ 0`.
pub fn equal_imaginary_rotation(z1: Complex64, z2: Complex64) -> Result<Complex64> {
    let s = z1 + z2;
    let n = s.norm();
    if !(n > 1e-300) || n <= 1e-14 * (z1.norm() + z2.norm()) {
        return Err(SplitError::Precondition("z1 + z2 = 0".into()));
    }
    let b = s / n;
    Ok(if (z1 / b).re >= 0.0 { b } else { -b })
}

#[derive(Debug, Clone, PartialEq)]
pub enum CaseClassification {
    StripSplittable(StripWitness),
    /// Every `z/a` lies in `Σ`.
    CaseI { a: Complex64 },
    /// `ordering[k]` is the triple index playing `z_{k+1}`.
    CaseII { a: Complex64, ordering: [usize; 3] },
}

fn in_sigma_tol(w: Complex64, tol: f64) -> bool {
    w.re >= -tol && w.im.abs() <= 1.0 + tol
}

impl CaseClassification {
    /// Machine check of the case's defining conditions.
    pub fn satisfies_conditions(&self, e: &[Complex64; 3]) -> bool {
        let tol = CASE_TOLERANCE;
        match self {
            CaseClassification::StripSplittable(w) => w.is_valid_for(e),
            CaseClassification::CaseI { a } => e.iter().all(|z| in_sigma_tol(z / a, tol)),
            CaseClassification::CaseII { a, ordering } => {
                let [z1, z2, z3] = ordering.map(|i| e[i]);
                let w1 = z1 / a;
                (w1.re >= -tol && (w1.im - 1.0).abs() <= tol)
                    && in_sigma_tol(z2 / a, tol)
                    && (z3 / a).im < -1.0 + tol
                    && approximately_collinear_tol(z2, z3, tol)
            }
        }
    }
}

/// Case analysis of a distinguished triple: strip witness, case (i), or
/// case (ii) with its enumeration.
pub fn classify_distinguished(e: &DistinguishedTriple) -> Result<CaseClassification> {
    classify_points(e.points(), 0.0)
}

/// The part of `[t0 - α, t0 + α]` (relative to `t0`) where `q e^{-it} ∈ Σ`.
fn sigma_window(q: Complex64, t0: f64, alpha: f64) -> Option<(f64, f64)> {
    let beta = (1.0 / q.norm()).min(1.0).asin();
    let rel = wrap_pi(q.arg() - t0);
    let lo = (rel - beta).max(-alpha);
    let hi = (rel + beta).min(alpha);
    (lo <= hi + 1e-12).then_some((lo.min(hi), hi.max(lo)))
}

/// `slack` widens the distinguished-set check (relative to the scale of the
/// points) for frames that are only approximately distinguished.
pub(crate) fn classify_points(e: &[Complex64; 3], slack: f64) -> Result<CaseClassification> {
    check_distinguished(e, slack)?;
    if let Some(w) = strip_witness_for(e) {
        return Ok(CaseClassification::StripSplittable(w));
    }
    let mut best_ii: Option<(f64, CaseClassification)> = None;
    for m in 0..3 {
        let (i, k) = match m {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let t0 = e[m].arg();
        let alpha = (1.0 / e[m].norm()).min(1.0).asin();
        let (Some(ii), Some(ik)) = (sigma_window(e[i], t0, alpha), sigma_window(e[k], t0, alpha)) else {
            continue;
        };
        let lo = ii.0.max(ik.0);
        let hi = ii.1.min(ik.1);
        if lo <= hi {
            let c = CaseClassification::CaseI { a: Complex64::from_polar(1.0, t0 + (lo + hi) / 2.0) };
            if c.satisfies_conditions(e) {
                return Ok(c);
            }
            continue;
        }
        // the element whose window lies higher plays z1
        let (z1, w1, z3) = if ik.1 < ii.0 { (i, ii, k) } else { (k, ik, i) };
        let a = Complex64::from_polar(1.0, t0 + w1.0);
        let c = CaseClassification::CaseII { a, ordering: [z1, m, z3] };
        if !c.satisfies_conditions(e) {
            continue;
        }
        let score = (e[z3] / a).im.abs() - 1.0;
        if best_ii.as_ref().is_none_or(|(s, _)| score > *s) {
            best_ii = Some((score, c));
        }
    }
    best_ii
        .map(|(_, c)| c)
        .ok_or_else(|| SplitError::NoConstruction("no element is approximately collinear with both others".into()))
}

/// Whether `e` is contained in `Σ` after dividing by `a`.
pub fn all_in_sigma(e: &[Complex64; 3], a: Complex64) -> bool {
    e.iter().all(|z| in_sigma(z / a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn forbidden_arc_examples() {
        let a = forbidden_arcs(c(0.0, 2.0));
        assert_eq!(a.len(), 2);
        assert!((a[0].center_angle() - FRAC_PI_2).abs() < 1e-15);
        assert!((a[1].center_angle() - 3.0 * FRAC_PI_2).abs() < 1e-15);
        assert!((a[0].half_width() - PI / 6.0).abs() < 1e-15);
        let b = forbidden_arcs(c(3.0, 0.0));
        assert!(b[0].center_angle().abs() < 1e-15 && (b[1].center_angle() - PI).abs() < 1e-15);
        assert!((b[0].half_width() - (1.0f64 / 3.0).asin()).abs() < 1e-15);
        let w = forbidden_arcs(c(0.5, 0.0));
        assert!(w.len() == 1 && w[0].is_whole());
    }

    #[test]
    fn complement_examples() {
        let all = complement_of_arc_union(&[]);
        assert!(all.len() == 1 && all[0].is_whole());
        let one = complement_of_arc_union(&[Arc::new(0.0, FRAC_PI_2)]);
        assert_eq!(one.len(), 1);
        assert!((one[0].center_angle() - PI).abs() < 1e-15 && (one[0].half_width() - FRAC_PI_2).abs() < 1e-15);
        let covered = complement_of_arc_union(&[Arc::new(0.0, FRAC_PI_2), Arc::new(PI, FRAC_PI_2)]);
        assert!(covered.is_empty());
        // wrap-around merge across 0
        let wrap = complement_of_arc_union(&[Arc::new(6.0, 0.5), Arc::new(0.4, 0.2)]);
        assert_eq!(wrap.len(), 1);
        let g = wrap[0];
        assert!((g.measure() - (TAU - (0.6 - (6.0 - 0.5 - TAU)))).abs() < 1e-12);
    }

    #[test]
    fn witness_examples() {
        let e = [c(3.0, 0.0), c(-3.0, 0.0), c(0.0, 3.0)];
        let w = strip_witness_for(&e).expect("witness");
        assert!((w.a - Complex64::from_polar(1.0, FRAC_PI_4)).norm() < 1e-9);
        assert_eq!(w.below, vec![0]);
        assert_eq!(w.above, vec![1, 2]);
        assert!(w.is_valid_for(&e));

        assert!(strip_witness_for(&[c(3.0, 0.0), c(5.5, 0.0), c(8.0, 0.0)]).is_none());

        let e = [c(0.0, 5.0), c(0.0, -5.0), c(10.0, 0.0)];
        let w = strip_witness_for(&e).expect("witness");
        let side = |i: usize| w.above.contains(&i);
        assert_ne!(side(0), side(1));
        assert!(w.is_valid_for(&e));
    }

    #[test]
    fn collinearity_examples() {
        let (ok, a) = approximately_collinear(c(3.0, 0.0), c(4.0, 0.0));
        assert!(ok && (a.unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!(!approximately_collinear(c(0.0, 3.0), c(0.0, -3.0)).0);
        assert!(!approximately_collinear(c(0.0, 3.0), c(5.0, -2.0)).0);
    }

    #[test]
    fn equal_imaginary_examples() {
        let b = equal_imaginary_rotation(c(2.0, 1.0), c(2.0, -1.0)).unwrap();
        assert!((b - c(1.0, 0.0)).norm() < 1e-15);
        let b = equal_imaginary_rotation(c(-1.0, 2.0), c(1.0, 2.0)).unwrap();
        assert!((b - c(0.0, 1.0)).norm() < 1e-15);
        assert!(((c(-1.0, 2.0) / b) - c(2.0, 1.0)).norm() < 1e-15);
        let b = equal_imaginary_rotation(c(3.0, 0.0), c(4.0, 0.0)).unwrap();
        assert!((b - c(1.0, 0.0)).norm() < 1e-15);
        assert!(equal_imaginary_rotation(c(2.0, 1.0), c(-2.0, -1.0)).is_err());
    }

    #[test]
    fn classification_examples() {
        let strip = DistinguishedTriple::new([c(3.0, 0.0), c(-3.0, 0.0), c(0.0, 3.0)]).unwrap();
        assert!(matches!(classify_distinguished(&strip).unwrap(), CaseClassification::StripSplittable(_)));

        let e = [c(3.0, 0.0), c(5.5, 0.0), c(8.0, 0.0)];
        let line = DistinguishedTriple::new(e).unwrap();
        match classify_distinguished(&line).unwrap() {
            CaseClassification::CaseI { a } => {
                assert!((a - c(1.0, 0.0)).norm() < 1e-12);
                assert!(CaseClassification::CaseI { a }.satisfies_conditions(&e));
            }
            other => panic!("{other:?}"),
        }

        assert!(matches!(
            DistinguishedTriple::new([c(0.5, 0.0), c(3.0, 0.0), c(6.0, 0.0)]),
            Err(SplitError::NotDistinguished(_))
        ));
    }
}
