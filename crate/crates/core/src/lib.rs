//! Value types for the Riemann sphere.
//!
//! Points live on `C ∪ {∞}`, maps are fractional-linear, and closed discs
//! are stored as normalized Hermitian forms so that a Möbius pushforward is a
//! single congruence transform. Every disc also has a spherical-cap avatar
//! under the stereographic projection from the north pole of the unit sphere,
//! which is what margins and certificates are measured in.

mod cap;
mod disc;
mod error;
mod mobius;
mod point;
pub mod vec3;

pub use cap::SphericalCap;
pub use disc::{Containment, ContainmentClass, Disjointness, GeneralizedDisc, PlaneView};
pub use error::CoreError;
pub use mobius::MobiusMap;
pub use num_complex::Complex64;
pub use point::SpherePoint;

/// Signed values with magnitude below this are classified as boundary.
pub const BOUNDARY_BAND: f64 = 1e-12;

/// An index pairing of six points into three unordered pairs.
pub type Pairing = [[usize; 2]; 3];
