use serde::{Deserialize, Serialize};
use sixsplit_certify::{Certificate, PointRecord};
use sixsplit_core::{Complex64, GeneralizedDisc, Pairing, PlaneView, SpherePoint, SphericalCap};

use crate::error::CliError;

pub const TOOL_VERSION: &str = concat!("sixsplit ", env!("CARGO_PKG_VERSION"));

/// Largest allowed cap distance between the two emitted forms of a disc.
pub const FORM_AGREEMENT: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexRecord {
    fn from(z: Complex64) -> Self {
        ComplexRecord { re: z.re, im: z.im }
    }
}

impl From<ComplexRecord> for Complex64 {
    fn from(z: ComplexRecord) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapRecord {
    pub center: [f64; 3],
    pub angular_radius: f64,
}

/// `disk` is `{|z - center| ≤ radius}`, `codisk` its closed complement with
/// `∞`, `halfplane` is `{Re(z · conj(normal)) ≥ offset} ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PlaneRecord {
    Disk { center: ComplexRecord, radius: f64 },
    Codisk { center: ComplexRecord, radius: f64 },
    Halfplane { normal: ComplexRecord, offset: f64 },
}

impl From<PlaneView> for PlaneRecord {
    fn from(v: PlaneView) -> Self {
        match v {
            PlaneView::Disk { center, radius } => PlaneRecord::Disk { center: center.into(), radius },
            PlaneView::Codisk { center, radius } => PlaneRecord::Codisk { center: center.into(), radius },
            PlaneView::HalfPlane { normal, offset } => PlaneRecord::Halfplane { normal: normal.into(), offset },
        }
    }
}

impl From<PlaneRecord> for PlaneView {
    fn from(r: PlaneRecord) -> Self {
        match r {
            PlaneRecord::Disk { center, radius } => PlaneView::Disk { center: center.into(), radius },
            PlaneRecord::Codisk { center, radius } => PlaneView::Codisk { center: center.into(), radius },
            PlaneRecord::Halfplane { normal, offset } => PlaneView::HalfPlane { normal: normal.into(), offset },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<CapRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane: Option<PlaneRecord>,
}

impl DiscRecord {
    /// Both forms of `disc`, rejected if they drift apart.
    pub fn from_disc(disc: &GeneralizedDisc) -> Result<Self, CliError> {
        let cap = disc.to_cap();
        let record = DiscRecord {
            cap: Some(CapRecord { center: cap.center(), angular_radius: cap.angular_radius() }),
            plane: Some(disc.plane_view().into()),
        };
        let gap = record.form_gap()?.unwrap_or(0.0);
        if !(gap <= FORM_AGREEMENT) {
            return Err(CliError::Internal(format!("cap and plane forms of a disc differ by {gap:.3e}")));
        }
        Ok(record)
    }

    pub fn cap_disc(&self) -> Result<Option<GeneralizedDisc>, CliError> {
        self.cap
            .map(|c| {
                SphericalCap::new(c.center, c.angular_radius)
                    .map(|cap| GeneralizedDisc::from_cap(&cap))
                    .map_err(|e| CliError::Invalid(format!("bad cap: {e}")))
            })
            .transpose()
    }

    pub fn plane_disc(&self) -> Result<Option<GeneralizedDisc>, CliError> {
        self.plane
            .map(|p| GeneralizedDisc::from_plane_view(&p.into()).map_err(|e| CliError::Invalid(format!("bad plane disc: {e}"))))
            .transpose()
    }

    /// Cap distance between the two forms, when both are present.
    pub fn form_gap(&self) -> Result<Option<f64>, CliError> {
        Ok(match (self.cap_disc()?, self.plane_disc()?) {
            (Some(a), Some(b)) => Some(a.to_cap().distance(&b.to_cap())),
            _ => None,
        })
    }

    /// The disc with `prefer_plane` choosing which form wins when both exist.
    pub fn disc(&self, prefer_plane: bool) -> Result<GeneralizedDisc, CliError> {
        let (cap, plane) = (self.cap_disc()?, self.plane_disc()?);
        let first = if prefer_plane { plane.or(cap) } else { cap.or(plane) };
        first.ok_or_else(|| CliError::Invalid("disc has neither a cap nor a plane form".into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub epsilon: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    pub points: Vec<PointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<Tolerance>,
}

/// Points, discs and pairing: what `verify` reads and `render` draws.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct SplitDocument {
    pub points: Vec<PointRecord>,
    #[serde(default)]
    pub discs: Option<Vec<DiscRecord>>,
    #[serde(default)]
    pub pairing: Option<Pairing>,
    #[serde(default)]
    pub tolerance: Option<Tolerance>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub tool_version: String,
    pub points: Vec<PointRecord>,
    pub pairing: Pairing,
    pub discs: Vec<DiscRecord>,
    pub margin: f64,
    pub epsilon: f64,
    pub strategy: String,
    pub used_fallback: bool,
    pub transcript: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub tool_version: String,
    pub pass: bool,
    pub certificate: Certificate,
    /// Present when some disc carries both forms; checks the plane forms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plane_certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BugReport {
    pub tool_version: String,
    pub message: String,
    pub points: Vec<PointRecord>,
    pub transcript: Vec<String>,
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("malformed input: {e}")))
}

/// Six finite or infinite points, pairwise distinct.
pub fn six_points(records: &[PointRecord]) -> Result<[SpherePoint; 6], CliError> {
    if records.len() != 6 {
        return Err(CliError::Invalid(format!("expected six points, got {}", records.len())));
    }
    let mut pts = [SpherePoint::Infinity; 6];
    for (k, r) in records.iter().enumerate() {
        pts[k] = r.to_point().map_err(|e| CliError::Invalid(format!("point {k}: {e}")))?;
    }
    for i in 0..6 {
        for j in i + 1..6 {
            if pts[i].chordal_distance(&pts[j]) == 0.0 {
                return Err(CliError::Invalid(format!("points {i} and {j} coincide")));
            }
        }
    }
    Ok(pts)
}

pub fn epsilon(doc: Option<Tolerance>, flag: Option<f64>) -> Result<f64, CliError> {
    let eps = flag.or(doc.and_then(|t| t.epsilon)).unwrap_or(sixsplit_certify::DEFAULT_EPSILON);
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(CliError::Invalid(format!("tolerance must be a finite non-negative number, got {eps}")));
    }
    Ok(eps)
}
