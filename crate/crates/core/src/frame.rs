use serde::{Deserialize, Serialize};

use crate::direction::Direction;
use crate::linalg::{nan_max, Vec3};

/// Right-handed triple whose z axis is `c`. The x and y axes are the
/// directions measured by [`crate::sigma_x`] and [`crate::sigma_y`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    pub c: Vec3,
    pub c_x: Vec3,
    pub c_y: Vec3,
}

impl Frame {
    pub fn axes(&self) -> [Vec3; 3] {
        [self.c, self.c_x, self.c_y]
    }

    /// Largest deviation from orthonormality over the three norms and three
    /// pairwise dot products.
    pub fn orthonormality_deviation(&self) -> f64 {
        let [c, x, y] = self.axes();
        [
            (c.norm() - 1.0).abs(),
            (x.norm() - 1.0).abs(),
            (y.norm() - 1.0).abs(),
            c.dot(&x).abs(),
            c.dot(&y).abs(),
            x.dot(&y).abs(),
        ]
        .into_iter()
        .fold(0.0, nan_max)
    }

    /// Largest deviation in `x * y = c`, `y * c = x`, `c * x = y`.
    pub fn handedness_deviation(&self) -> f64 {
        let [c, x, y] = self.axes();
        [
            x.cross(&y).max_abs_diff(&c),
            y.cross(&c).max_abs_diff(&x),
            c.cross(&x).max_abs_diff(&y),
        ]
        .into_iter()
        .fold(0.0, nan_max)
    }
}

pub fn frame_axes(c: Direction) -> Frame {
    let (st, ct) = c.theta.sin_cos();
    let (sp, cp) = c.phi.sin_cos();
    Frame {
        c: Vec3::new(st * cp, st * sp, ct),
        c_x: Vec3::new(-ct * cp, -ct * sp, st),
        c_y: Vec3::new(sp, -cp, 0.0),
    }
}
