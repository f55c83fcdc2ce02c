use std::f64::consts::PI;

use crate::error::CoreError;
use crate::point::SpherePoint;
use crate::vec3::{self, Vec3};

/// A closed metric ball on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalCap {
    center: Vec3,
    angular_radius: f64,
}

impl SphericalCap {
    /// The center is normalized; the radius must lie in `(0, π)`.
    pub fn new(center: Vec3, angular_radius: f64) -> Result<Self, CoreError> {
        let center = vec3::normalize(&center).ok_or(CoreError::InvalidCap("zero center"))?;
        if !(angular_radius > 0.0 && angular_radius < PI) {
            return Err(CoreError::InvalidCap("angular radius outside (0, π)"));
        }
        Ok(SphericalCap { center, angular_radius })
    }

    pub fn center(&self) -> Vec3 {
        self.center
    }

    pub fn angular_radius(&self) -> f64 {
        self.angular_radius
    }

    /// Same center, radius changed by `delta` and clamped into `(0, π)`.
    pub fn with_radius_delta(&self, delta: f64) -> Self {
        let r = (self.angular_radius + delta).clamp(f64::MIN_POSITIVE, PI - 1e-15);
        SphericalCap { center: self.center, angular_radius: r }
    }

    /// Positive when the point is strictly inside: `radius - angle(center, x)`.
    pub fn slack(&self, x: &Vec3) -> f64 {
        self.angular_radius - vec3::angle(&self.center, x)
    }

    pub fn slack_of(&self, p: &SpherePoint) -> f64 {
        self.slack(&p.to_unit_vector())
    }

    /// Angular gap between the caps; positive iff they are disjoint.
    pub fn separation(&self, other: &SphericalCap) -> f64 {
        vec3::angle(&self.center, &other.center) - self.angular_radius - other.angular_radius
    }

    /// Max of center offset and radius difference.
    pub fn distance(&self, other: &SphericalCap) -> f64 {
        vec3::angle(&self.center, &other.center).max((self.angular_radius - other.angular_radius).abs())
    }
}
