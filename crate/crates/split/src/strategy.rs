//! Interchangeable splitting strategies, looked up by name.
//!
//! A strategy inspects the normalized frame `[-1, 1, ∞, e1, e2, e3]` and
//! proposes closed disc triples. It never certifies anything itself; the
//! pipeline opens each proposal up and runs the verifier on it.

use sixsplit_certify::oracle_search_with;
use sixsplit_core::{Complex64, GeneralizedDisc, MobiusMap, Pairing, SpherePoint};

use crate::construct::{
    covering_check, diameter_disc, fallback_fpm, hull_membership, lifted_disc, separating_halfplane,
    enclosed_disc_in_halfplane,
};
use crate::error::{precondition, Result};
use crate::regions::{f_minus, f_plus, rotate_by_s, s_map, sqrt3};
use crate::strip::{classify_points, strip_witness_for, CaseClassification, StripWitness};
use crate::triple::frame_points;
use crate::SplitConfig;

/// Slot of `∞` in the normalized frame; `e_k` sits at slot `3 + k`.
const INF: usize = 2;

/// Three finite points completing `{-1, 1, ∞}`; `slack` relaxes the
/// distinguished checks for frames reached by rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub e: [Complex64; 3],
    pub slack: f64,
}

impl Frame {
    pub fn points(&self) -> [SpherePoint; 6] {
        frame_points(&self.e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateFrame {
    /// Discs and pairing refer to the normalized frame's slots.
    Normalized,
    /// Discs and pairing refer to the caller's points directly.
    Target,
}

#[derive(Debug, Clone)]
pub struct Candidate {
    pub discs: [GeneralizedDisc; 3],
    pub pairing: Pairing,
    pub frame: CandidateFrame,
}

/// One proposal, or the reason a construction did not apply.
#[derive(Debug, Clone)]
pub struct Attempt {
    pub detail: String,
    pub outcome: std::result::Result<Candidate, String>,
}

impl Attempt {
    fn from_result(detail: impl Into<String>, r: Result<([GeneralizedDisc; 3], Pairing)>) -> Self {
        Attempt {
            detail: detail.into(),
            outcome: r
                .map(|(discs, pairing)| Candidate { discs, pairing, frame: CandidateFrame::Normalized })
                .map_err(|e| e.to_string()),
        }
    }
}

/// Everything a strategy may look at.
pub struct SplitContext<'a> {
    pub frame: Frame,
    pub target_points: &'a [SpherePoint; 6],
    pub config: &'a SplitConfig,
}

pub trait SplitStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn attempts(&self, frame: &Frame, ctx: &SplitContext<'_>) -> Vec<Attempt>;
}

/// Strategies addressable by name.
pub struct StrategyRegistry {
    entries: Vec<Box<dyn SplitStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { entries: Vec::new() }
    }

    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, s: Box<dyn SplitStrategy>) {
        self.entries.retain(|e| e.name() != s.name());
        self.entries.push(s);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SplitStrategy> {
        self.entries.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(StripStrategy));
        r.register(Box::new(DiameterStrategy));
        r.register(Box::new(FpmStrategy));
        r.register(Box::new(RotationStrategy));
        r.register(Box::new(OracleStrategy));
        r
    }
}

fn slot(k: usize) -> usize {
    3 + k
}

fn rotate_back(d: &GeneralizedDisc, a: Complex64) -> Result<GeneralizedDisc> {
    Ok(d.pushforward(&MobiusMap::affine(a, Complex64::new(0.0, 0.0))?))
}

/// `{Im z ≤ level}` together with `∞`.
fn lower_half_plane(level: f64) -> Result<GeneralizedDisc> {
    Ok(GeneralizedDisc::half_plane(Complex64::new(0.0, -1.0), -level)?)
}

/// Unit disc for `{-1, 1}`, an enclosing disc above the strip for the
/// majority side, and a lower half-plane for the lone point with `∞`.
pub(crate) fn strip_construction(e: &[Complex64; 3], w: &StripWitness) -> Result<([GeneralizedDisc; 3], Pairing)> {
    if !w.is_valid_for(e) {
        return precondition("invalid strip witness");
    }
    let (rot, pair, lone) = if w.above.len() == 2 {
        (w.a, [w.above[0], w.above[1]], w.below[0])
    } else {
        // turning by π swaps the sides and fixes {-1, 1}
        (-w.a, [w.below[0], w.below[1]], w.above[0])
    };
    let p = e[pair[0]] / rot;
    let q = e[pair[1]] / rot;
    let v = e[lone] / rot;
    let upper = enclosed_disc_in_halfplane(p, q, 1.0)?;
    let lower = lower_half_plane((v.im - 1.0) / 2.0)?;
    Ok((
        [GeneralizedDisc::unit_disc(), rotate_back(&upper, rot)?, rotate_back(&lower, rot)?],
        [[0, 1], [slot(pair[0]), slot(pair[1])], [slot(lone), INF]],
    ))
}

/// Unit disc, `F(e_i, e_j)`, and a half-plane cutting `e_k` off their hull.
fn diameter_pair(e: &[Complex64; 3], i: usize, j: usize, k: usize) -> Result<([GeneralizedDisc; 3], Pairing)> {
    let unit = GeneralizedDisc::unit_disc();
    let f = diameter_disc(e[i], e[j])?;
    if !f.disjointness(&unit).disjoint {
        return precondition("F meets the unit disc");
    }
    let h = separating_halfplane(&unit, &f, e[k])?;
    Ok(([unit, f, h], [[0, 1], [slot(i), slot(j)], [slot(k), INF]]))
}

const TRIPLES: [(usize, usize, usize); 3] = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];

/// Rotation off the strip `|Im| ≤ 1` with points on both sides.
pub struct StripStrategy;

impl SplitStrategy for StripStrategy {
    fn name(&self) -> &'static str {
        "strip"
    }

    fn attempts(&self, frame: &Frame, _ctx: &SplitContext<'_>) -> Vec<Attempt> {
        match strip_witness_for(&frame.e) {
            None => vec![Attempt { detail: "witness search".into(), outcome: Err("no strip witness".into()) }],
            Some(w) => {
                let detail = format!("witness a={:.6}{:+.6}i margin={:.3e}", w.a.re, w.a.im, w.margin);
                vec![Attempt::from_result(detail, strip_construction(&frame.e, &w))]
            }
        }
    }
}

/// Diameter discs away from the unit disc, following the case analysis and
/// then every pair.
pub struct DiameterStrategy;

fn case_one(e: &[Complex64; 3], a: Complex64) -> Result<([GeneralizedDisc; 3], Pairing)> {
    let w: Vec<Complex64> = e.iter().map(|z| z / a).collect();
    let mut o = [0, 1, 2];
    o.sort_by(|&x, &y| w[x].re.total_cmp(&w[y].re));
    if w[o[1]].re == w[o[2]].re && w[o[2]].im == w[o[0]].im {
        o.swap(1, 2);
    }
    diameter_pair(e, o[0], o[1], o[2])
}

fn case_two(e: &[Complex64; 3], a: Complex64, ordering: [usize; 3]) -> Result<([GeneralizedDisc; 3], Pairing)> {
    let [i1, i2, i3] = ordering;
    if e[i1].norm() >= e[i2].norm() {
        let big = (0..3).fold(0, |b, k| if e[k].norm() > e[b].norm() { k } else { b });
        let (i, j) = match big {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        return diameter_pair(e, i, j, big);
    }
    let w1 = e[i1] / a;
    let w2 = e[i2] / a;
    let w3 = e[i3] / a;
    let lifted = lifted_disc(w1, w2)?;
    let lower = lower_half_plane((w3.im - 1.0) / 2.0)?;
    Ok((
        [GeneralizedDisc::unit_disc(), rotate_back(&lifted, a)?, rotate_back(&lower, a)?],
        [[0, 1], [slot(i1), slot(i2)], [slot(i3), INF]],
    ))
}

impl SplitStrategy for DiameterStrategy {
    fn name(&self) -> &'static str {
        "diameter"
    }

    fn attempts(&self, frame: &Frame, _ctx: &SplitContext<'_>) -> Vec<Attempt> {
        let e = &frame.e;
        let mut out = Vec::new();
        match classify_points(e, frame.slack) {
            Err(err) => out.push(Attempt { detail: "classification".into(), outcome: Err(err.to_string()) }),
            Ok(CaseClassification::StripSplittable(_)) => {}
            Ok(CaseClassification::CaseI { a }) => out.push(Attempt::from_result("case (i)", case_one(e, a))),
            Ok(CaseClassification::CaseII { a, ordering }) => {
                let kind = if e[ordering[0]].norm() >= e[ordering[1]].norm() { "largest modulus" } else { "lifted disc" };
                out.push(Attempt::from_result(format!("case (ii), {kind}"), case_two(e, a, ordering)));
            }
        }
        for (i, j, k) in TRIPLES {
            out.push(Attempt::from_result(format!("pair (e{}, e{})", i + 1, j + 1), diameter_pair(e, i, j, k)));
        }
        out
    }
}

/// `F±` in place of the unit disc when `F(z1, z2)` meets it.
pub struct FpmStrategy;

fn fpm_pair(e: &[Complex64; 3], i: usize, j: usize, k: usize, g: &GeneralizedDisc) -> Result<([GeneralizedDisc; 3], Pairing)> {
    let f = diameter_disc(e[i], e[j])?;
    if !g.disjointness(&f).disjoint {
        return precondition("F± meets F(z1, z2)");
    }
    let hull = hull_membership(g, &f, e[k])?;
    if !(hull.signed_distance > 0.0) {
        return precondition("third point inside conv(F± ∪ F)");
    }
    let h = separating_halfplane(g, &f, e[k])?;
    Ok(([*g, f, h], [[0, 1], [slot(i), slot(j)], [slot(k), INF]]))
}

impl SplitStrategy for FpmStrategy {
    fn name(&self) -> &'static str {
        "fpm"
    }

    fn attempts(&self, frame: &Frame, _ctx: &SplitContext<'_>) -> Vec<Attempt> {
        let e = &frame.e;
        let mut out = Vec::new();
        let unit = GeneralizedDisc::unit_disc();
        for (i, j, k) in TRIPLES {
            let Ok(f) = diameter_disc(e[i], e[j]) else { continue };
            if f.disjointness(&unit).disjoint {
                continue;
            }
            let first = fallback_fpm(e[i], e[j]).unwrap_or_else(|_| f_minus());
            let second = if first == f_minus() { f_plus() } else { f_minus() };
            let covered = if covering_check(e[i], e[j], e[k]) { "covered" } else { "uncovered" };
            for g in [first, second] {
                let tag = if g == f_plus() { "F+" } else { "F-" };
                let detail = format!("{tag} with F(e{}, e{}), e{} {covered}", i + 1, j + 1, k + 1);
                out.push(Attempt::from_result(detail, fpm_pair(e, i, j, k, &g)));
            }
        }
        out
    }
}

/// Re-runs strip, diameter and fpm after turning the frame by `S` or `S²`
/// (optionally after conjugation), so a point near `√3i` becomes `-1` or `1`.
pub struct RotationStrategy;

const ROTATED_SLACK: f64 = 1e-5;

struct Rotated {
    frame: Frame,
    /// New frame → old frame, to push discs back.
    back: MobiusMap,
    /// `old_slot[k]` is the old slot that lands on new slot `k`.
    old_slot: [usize; 6],
}

fn rotated_frame(e: &[Complex64; 3], power: u32) -> Result<Rotated> {
    let target = Complex64::new(0.0, sqrt3());
    let star = (0..3).fold(0, |b, k| if (e[k] - target).norm() < (e[b] - target).norm() { k } else { b });
    let s = |z: Complex64| rotate_by_s(&SpherePoint::Finite(z), power).as_finite().expect("finite");
    let minus = Complex64::new(-1.0, 0.0);
    let plus = Complex64::new(1.0, 0.0);
    // the new (-1, 1) pair, and the old slot that becomes the new e1
    let (lo, hi, lo_slot, hi_slot, spare_slot, spare) = if power == 1 {
        (s(e[star]), s(minus), slot(star), 0, 1, s(plus))
    } else {
        (s(plus), s(e[star]), 1, slot(star), 0, s(minus))
    };
    let scale = 2.0 / (hi - lo);
    let shift = -(lo + hi) / (hi - lo);
    let affine = MobiusMap::affine(scale, shift)?;
    let forward = affine.compose(&s_map_power(power)?);
    let others: Vec<usize> = (0..3).filter(|&k| k != star).collect();
    let place = |z: Complex64| scale * z + shift;
    let new_e = [place(spare), place(s(e[others[0]])), place(s(e[others[1]]))];
    Ok(Rotated {
        frame: Frame { e: new_e, slack: ROTATED_SLACK },
        back: forward.inverse(),
        old_slot: [lo_slot, hi_slot, INF, spare_slot, slot(others[0]), slot(others[1])],
    })
}

fn s_map_power(power: u32) -> Result<MobiusMap> {
    let s = s_map();
    Ok(match power % 3 {
        0 => MobiusMap::identity(),
        1 => s,
        _ => s.compose(&s),
    })
}

impl SplitStrategy for RotationStrategy {
    fn name(&self) -> &'static str {
        "rotation"
    }

    fn attempts(&self, frame: &Frame, ctx: &SplitContext<'_>) -> Vec<Attempt> {
        let inner: [&dyn SplitStrategy; 3] = [&StripStrategy, &DiameterStrategy, &FpmStrategy];
        let mut out = Vec::new();
        for conj in [false, true] {
            let e = if conj { frame.e.map(|z| z.conj()) } else { frame.e };
            for power in [1, 2] {
                let label = format!("{}S^{power}", if conj { "conj, " } else { "" });
                let rot = match rotated_frame(&e, power) {
                    Ok(r) => r,
                    Err(err) => {
                        out.push(Attempt { detail: label, outcome: Err(err.to_string()) });
                        continue;
                    }
                };
                for s in inner {
                    for a in s.attempts(&rot.frame, ctx) {
                        let detail = format!("{label}: {} {}", s.name(), a.detail);
                        let outcome = a.outcome.map(|c| Candidate {
                            discs: c.discs.map(|d| {
                                let back = d.pushforward(&rot.back);
                                if conj {
                                    back.conj()
                                } else {
                                    back
                                }
                            }),
                            pairing: c.pairing.map(|p| p.map(|k| rot.old_slot[k])),
                            frame: CandidateFrame::Normalized,
                        });
                        out.push(Attempt { detail, outcome });
                    }
                }
            }
        }
        out
    }
}

/// Randomized cap search on the caller's points.
pub struct OracleStrategy;

impl SplitStrategy for OracleStrategy {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn attempts(&self, _frame: &Frame, ctx: &SplitContext<'_>) -> Vec<Attempt> {
        let c = ctx.config;
        let detail = format!("budget {}", c.oracle_budget);
        let outcome = match oracle_search_with(ctx.target_points, c.oracle_budget, c.oracle_seed, c.epsilon) {
            Ok(Some(found)) => Ok(Candidate { discs: found.discs, pairing: found.pairing, frame: CandidateFrame::Target }),
            Ok(None) => Err("budget exhausted".to_string()),
            Err(err) => Err(err.to_string()),
        };
        vec![Attempt { detail, outcome }]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_registry_order() {
        let r = StrategyRegistry::default();
        assert_eq!(r.names(), vec!["strip", "diameter", "fpm", "rotation", "oracle"]);
        assert!(r.get("oracle").is_some() && r.get("nope").is_none());
    }

    #[test]
    fn rotated_frame_maps_slots_consistently() {
        let e = [Complex64::new(0.0, sqrt3()), Complex64::new(3.0, 2.0), Complex64::new(-4.0, 0.5)];
        let old = frame_points(&e);
        for power in [1, 2] {
            let r = rotated_frame(&e, power).unwrap();
            let new = r.frame.points();
            for k in 0..6 {
                let back = r.back.apply(&new[k]);
                assert!(back.chordal_distance(&old[r.old_slot[k]]) < 1e-12, "power {power} slot {k}");
            }
            // S permutes {-1, 1, √3i}, so the frame stays exactly normalized
            assert!((r.frame.e[0] - Complex64::new(0.0, sqrt3())).norm() < 1e-12);
        }
    }
}
