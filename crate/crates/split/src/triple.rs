use sixsplit_core::{Complex64, MobiusMap, SpherePoint};

use crate::error::{Result, SplitError};

/// Absolute slack on the distance bounds, scaled by `1 + max|e|`.
pub const DISTINGUISHED_SLACK: f64 = 1e-12;

/// Three finite points, pairwise at distance at least 2 and outside
/// `Ω = (1 + 2D) ∪ (-1 + 2D)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistinguishedTriple {
    points: [Complex64; 3],
}

/// Checks the distinguished invariants with `DISTINGUISHED_SLACK + extra`
/// (both relative to the scale of the points).
pub(crate) fn check_distinguished(e: &[Complex64; 3], extra: f64) -> Result<()> {
    if e.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(SplitError::NotDistinguished("non-finite point".into()));
    }
    let scale = 1.0 + e.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let bound = 2.0 - (DISTINGUISHED_SLACK + extra) * scale;
    for (i, z) in e.iter().enumerate() {
        for (name, anchor) in [("1", 1.0), ("-1", -1.0)] {
            let d = (z - anchor).norm();
            if d < bound {
                return Err(SplitError::NotDistinguished(format!("e{} is {d} from {name}", i + 1)));
            }
        }
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let d = (e[i] - e[j]).norm();
        if d < bound {
            return Err(SplitError::NotDistinguished(format!("e{} and e{} are {d} apart", i + 1, j + 1)));
        }
    }
    Ok(())
}

impl DistinguishedTriple {
    pub fn new(points: [Complex64; 3]) -> Result<Self> {
        check_distinguished(&points, 0.0)?;
        Ok(DistinguishedTriple { points })
    }

    pub fn points(&self) -> &[Complex64; 3] {
        &self.points
    }

    /// The six points `[-1, 1, ∞, e1, e2, e3]` of the normalized frame.
    pub fn frame_points(&self) -> [SpherePoint; 6] {
        frame_points(&self.points)
    }
}

pub(crate) fn frame_points(e: &[Complex64; 3]) -> [SpherePoint; 6] {
    [
        SpherePoint::finite(-1.0, 0.0),
        SpherePoint::finite(1.0, 0.0),
        SpherePoint::Infinity,
        SpherePoint::Finite(e[0]),
        SpherePoint::Finite(e[1]),
        SpherePoint::Finite(e[2]),
    ]
}

/// Result of moving six points to the normalized frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedSix {
    /// Sends the caller's points onto `[-1, 1, ∞, e1, e2, e3]`.
    pub map: MobiusMap,
    pub triple: DistinguishedTriple,
    /// `slots[k]` is the caller's index landing on frame slot `k`.
    pub slots: [usize; 6],
}

pub(crate) fn check_six(points: &[SpherePoint]) -> Result<[SpherePoint; 6]> {
    let pts: [SpherePoint; 6] = points.try_into().map_err(|_| SplitError::WrongCount(points.len()))?;
    for p in &pts {
        if let Some(z) = p.as_finite() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(SplitError::Core(sixsplit_core::CoreError::NonFinite { re: z.re, im: z.im }));
            }
        }
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if pts[i] == pts[j] || pts[i].chordal_distance(&pts[j]) == 0.0 {
                return Err(SplitError::Duplicate(i, j));
            }
        }
    }
    Ok(pts)
}

/// Moves six distinct points to `{-1, 1, ∞} ∪ E` with `E` distinguished.
///
/// An input `∞` stays put; otherwise the point farthest (chordally) from its
/// nearest neighbour is rotated to `∞`. The closest remaining pair, ties
/// broken by index order, is then sent to `(-1, 1)` by an affine map.
pub fn normalize_six(points: &[SpherePoint]) -> Result<NormalizedSix> {
    let pts = check_six(points)?;
    let given = pts.iter().position(SpherePoint::is_infinity);
    let inf = match given {
        Some(i) => i,
        None => {
            let isolation = |i: usize| {
                (0..6).filter(|&j| j != i).map(|j| pts[i].chordal_distance(&pts[j])).fold(f64::INFINITY, f64::min)
            };
            (0..6).fold(0, |best, i| if isolation(i) > isolation(best) { i } else { best })
        }
    };
    let rot = MobiusMap::rotation_to_infinity(&pts[inf]);
    let rest: Vec<usize> = (0..6).filter(|&i| i != inf).collect();
    let mut w = Vec::with_capacity(5);
    for &i in &rest {
        let image = if given.is_some() { pts[i] } else { rot.apply(&pts[i]) };
        match image.as_finite() {
            Some(z) => w.push(z),
            None => return Err(SplitError::Duplicate(inf.min(i), inf.max(i))),
        }
    }
    let mut pair = (0, 1);
    let mut best = f64::INFINITY;
    for i in 0..5 {
        for j in i + 1..5 {
            let d = (w[i] - w[j]).norm();
            if d < best {
                best = d;
                pair = (i, j);
            }
        }
    }
    let (z, v) = (w[pair.0], w[pair.1]);
    let scale = 2.0 / (v - z);
    // x ↦ (2x - (z + v)) / (v - z)
    let affine = MobiusMap::affine(scale, -(z + v) / (v - z))?;
    let map = affine.compose(&rot);
    let others: Vec<usize> = (0..5).filter(|&k| k != pair.0 && k != pair.1).collect();
    let e: [Complex64; 3] = std::array::from_fn(|k| (2.0 * w[others[k]] - (z + v)) / (v - z));
    let triple = DistinguishedTriple::new(e)?;
    let slots = [rest[pair.0], rest[pair.1], inf, rest[others[0]], rest[others[1]], rest[others[2]]];
    Ok(NormalizedSix { map, triple, slots })
}
