use serde::{Deserialize, Serialize};
use sixsplit_core::{Complex64, CoreError, SpherePoint};

/// JSON shape of a sphere point: `{"re": x, "im": y}` or `{"inf": true}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRecord {
    Finite { re: f64, im: f64 },
    Infinity { inf: bool },
}

impl PointRecord {
    pub fn to_point(&self) -> Result<SpherePoint, CoreError> {
        match *self {
            PointRecord::Finite { re, im } => SpherePoint::try_finite(re, im),
            PointRecord::Infinity { inf: true } => Ok(SpherePoint::Infinity),
            PointRecord::Infinity { inf: false } => Err(CoreError::NonFinite { re: f64::NAN, im: f64::NAN }),
        }
    }
}

impl From<&SpherePoint> for PointRecord {
    fn from(p: &SpherePoint) -> Self {
        match p.as_finite() {
            Some(Complex64 { re, im }) => PointRecord::Finite { re, im },
            None => PointRecord::Infinity { inf: true },
        }
    }
}
