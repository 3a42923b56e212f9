use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SpinError;
use crate::linalg::Vec3;

const TWO_PI: f64 = 2.0 * PI;

/// A quantization axis given by its polar angle `theta` and azimuth `phi`,
/// both in radians.
///
/// Values built with [`Direction::new`] are canonical: `theta` in `[0, pi]`
/// and `phi` in `[0, 2pi)`. The fields stay public because the angle-shift
/// constructions ([`crate::shift_x`], [`crate::shift_y`]) substitute formal
/// arguments that are deliberately left outside the canonical range; every
/// closed form in this crate is valid for any real angle pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    pub theta: f64,
    pub phi: f64,
}

impl Direction {
    /// Canonicalizes `(theta, phi)`. See [`normalize_direction`].
    pub fn new(theta: f64, phi: f64) -> Result<Self, SpinError> {
        normalize_direction(theta, phi)
    }

    /// Stores the angle pair verbatim.
    pub const fn raw(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    pub const fn z_axis() -> Self {
        Self::raw(0.0, 0.0)
    }

    pub fn from_degrees(theta: f64, phi: f64) -> Result<Self, SpinError> {
        normalize_direction(theta.to_radians(), phi.to_radians())
    }

    pub fn unit_vector(&self) -> Vec3 {
        unit_vector(*self)
    }

    /// True when both angles lie in the canonical ranges.
    pub fn is_canonical(&self) -> bool {
        (0.0..=PI).contains(&self.theta) && (0.0..TWO_PI).contains(&self.phi)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6}, {:.6})", self.theta, self.phi)
    }
}

/// Spin projection along a quantization axis, `+1/2` or `-1/2` in units of hbar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// Eigenvalue in units of hbar/2.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// Row/column index in 2x2 tables (`Plus` is 0).
    pub fn index(self) -> usize {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

fn wrap_two_pi(angle: f64) -> f64 {
    let wrapped = angle.rem_euclid(TWO_PI);
    // rem_euclid rounds tiny negative inputs up to exactly 2pi
    if wrapped >= TWO_PI {
        0.0
    } else {
        wrapped
    }
}

/// Maps any finite angle pair onto the canonical representative of the same
/// unit vector, `theta` in `[0, pi]`, `phi` in `[0, 2pi)`.
///
/// A polar angle outside `[0, pi]` is reflected through the pole, which
/// rotates the azimuth by `pi`.
pub fn normalize_direction(theta: f64, phi: f64) -> Result<Direction, SpinError> {
    if !theta.is_finite() || !phi.is_finite() {
        return Err(SpinError::NonFiniteAngle { theta, phi });
    }
    let mut theta = wrap_two_pi(theta);
    let mut phi = phi;
    if theta > PI {
        theta = TWO_PI - theta;
        phi += PI;
    }
    Ok(Direction::raw(theta, wrap_two_pi(phi)))
}

/// Cartesian unit vector `(sin t cos p, sin t sin p, cos t)`.
pub fn unit_vector(d: Direction) -> Vec3 {
    let (st, ct) = d.theta.sin_cos();
    let (sp, cp) = d.phi.sin_cos();
    Vec3::new(st * cp, st * sp, ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn azimuth_reduced_at_pole() {
        let d = normalize_direction(0.0, 5.0 * PI).unwrap();
        assert_eq!(d.theta, 0.0);
        assert_abs_diff_eq!(d.phi, PI, epsilon = 1e-12);
    }

    #[test]
    fn azimuth_periodicity() {
        let d = normalize_direction(PI / 3.0, TWO_PI + 0.5).unwrap();
        assert_abs_diff_eq!(d.theta, PI / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(d.phi, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn negative_polar_angle_reflects() {
        // oracle: (sin t cos p, sin t sin p, cos t) at (-pi/4, 0) is
        // (-sqrt2/2, 0, sqrt2/2), which is (pi/4, pi)
        let d = normalize_direction(-PI / 4.0, 0.0).unwrap();
        assert_abs_diff_eq!(d.theta, PI / 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(d.phi, PI, epsilon = 1e-12);
        let raw = unit_vector(Direction::raw(-PI / 4.0, 0.0));
        assert!(raw.max_abs_diff(&d.unit_vector()) < 1e-12);
    }

    #[test]
    fn non_finite_rejected() {
        assert!(matches!(
            normalize_direction(f64::NAN, 0.0),
            Err(SpinError::NonFiniteAngle { .. })
        ));
        assert!(normalize_direction(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn tiny_negative_azimuth_stays_in_range() {
        let d = normalize_direction(1.0, -1e-18).unwrap();
        assert!(d.is_canonical());
    }

    #[test]
    fn unit_vector_examples() {
        assert_eq!(unit_vector(Direction::raw(0.0, 0.0)), Vec3::new(0.0, 0.0, 1.0));
        let x = unit_vector(Direction::raw(PI / 2.0, 0.0));
        assert!(x.max_abs_diff(&Vec3::new(1.0, 0.0, 0.0)) < 1e-15);
        let v = unit_vector(Direction::raw(PI / 3.0, PI / 4.0));
        assert_abs_diff_eq!(v.x, 0.612_372_435_695_794_5, epsilon = 1e-12);
        assert_abs_diff_eq!(v.y, 0.612_372_435_695_794_5, epsilon = 1e-12);
        assert_abs_diff_eq!(v.z, 0.5, epsilon = 1e-12);
    }
}
