//! Transition amplitudes between spin projections along two directions and
//! their composition through an intermediate direction.

use serde::{Deserialize, Serialize};

use crate::direction::{Direction, Sign};
use crate::error::SpinError;
use crate::linalg::{CMatrix2, Complex};

/// Half-angle factors and relative phase shared by every amplitude between
/// `from` and `to`.
struct HalfAngles {
    cos_from: f64,
    sin_from: f64,
    cos_to: f64,
    sin_to: f64,
    phase: Complex,
}

impl HalfAngles {
    fn new(from: Direction, to: Direction) -> Self {
        let (sin_from, cos_from) = (from.theta / 2.0).sin_cos();
        let (sin_to, cos_to) = (to.theta / 2.0).sin_cos();
        Self {
            cos_from,
            sin_from,
            cos_to,
            sin_to,
            phase: Complex::cis(from.phi - to.phi),
        }
    }

    fn get(&self, m_from: Sign, m_to: Sign) -> Complex {
        let r = |x: f64| Complex::new(x, 0.0);
        let e = self.phase;
        match (m_from, m_to) {
            (Sign::Plus, Sign::Plus) => {
                r(self.cos_from * self.cos_to) + e * (self.sin_from * self.sin_to)
            }
            (Sign::Plus, Sign::Minus) => {
                r(self.cos_from * self.sin_to) - e * (self.sin_from * self.cos_to)
            }
            (Sign::Minus, Sign::Plus) => {
                r(self.sin_from * self.cos_to) - e * (self.cos_from * self.sin_to)
            }
            (Sign::Minus, Sign::Minus) => {
                r(self.sin_from * self.sin_to) + e * (self.cos_from * self.cos_to)
            }
        }
    }
}

/// Probability amplitude for finding projection `m_to` along `d_to` when the
/// spin was prepared with projection `m_from` along `d_from`.
///
/// With `(t1, p1)` the angles of `d_from` and `(t2, p2)` those of `d_to`:
///
/// ```text
/// (+,+)  cos(t1/2) cos(t2/2) + e^{i(p1-p2)} sin(t1/2) sin(t2/2)
/// (+,-)  cos(t1/2) sin(t2/2) - e^{i(p1-p2)} sin(t1/2) cos(t2/2)
/// (-,+)  sin(t1/2) cos(t2/2) - e^{i(p1-p2)} cos(t1/2) sin(t2/2)
/// (-,-)  sin(t1/2) sin(t2/2) + e^{i(p1-p2)} cos(t1/2) cos(t2/2)
/// ```
///
/// Swapping the roles of the two directions conjugates the amplitude.
pub fn amplitude(m_from: Sign, d_from: Direction, m_to: Sign, d_to: Direction) -> Complex {
    HalfAngles::new(d_from, d_to).get(m_from, m_to)
}

/// All four amplitudes from `from` to `to`. Entry `(j, k)` of `matrix` is the
/// amplitude from projection `j` along `from` to projection `k` along `to`
/// (`Plus` is index 0).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AmplitudeTable {
    pub matrix: CMatrix2,
    pub from: Direction,
    pub to: Direction,
}

impl AmplitudeTable {
    pub fn get(&self, m_from: Sign, m_to: Sign) -> Complex {
        self.matrix.get(m_from.index(), m_to.index())
    }

    /// The table for the reverse transition, obtained from the two-way
    /// symmetry `amp(d2 -> d1)[k][j] = conj(amp(d1 -> d2)[j][k])`.
    pub fn reversed(&self) -> AmplitudeTable {
        AmplitudeTable {
            matrix: self.matrix.adjoint(),
            from: self.to,
            to: self.from,
        }
    }

    /// Largest entry of `|M M^dagger - I|`.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.matrix * self.matrix.adjoint()).max_abs_diff(&CMatrix2::identity())
    }
}

pub fn amplitude_table(d_from: Direction, d_to: Direction) -> AmplitudeTable {
    let h = HalfAngles::new(d_from, d_to);
    let matrix = CMatrix2::new(
        h.get(Sign::Plus, Sign::Plus),
        h.get(Sign::Plus, Sign::Minus),
        h.get(Sign::Minus, Sign::Plus),
        h.get(Sign::Minus, Sign::Minus),
    );
    AmplitudeTable {
        matrix,
        from: d_from,
        to: d_to,
    }
}

/// Chains `a -> b` with `b -> c` by summing over the two projections along
/// the shared intermediate direction `b`.
///
/// The intermediate directions must match exactly: at the poles the azimuth
/// still enters the amplitude phases, so two angle pairs naming the same axis
/// are not interchangeable here.
pub fn compose_amplitudes(
    t_ab: &AmplitudeTable,
    t_bc: &AmplitudeTable,
) -> Result<AmplitudeTable, SpinError> {
    if t_ab.to != t_bc.from {
        return Err(SpinError::MismatchedIntermediate);
    }
    Ok(AmplitudeTable {
        matrix: t_ab.matrix * t_bc.matrix,
        from: t_ab.from,
        to: t_bc.to,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn repeatability_on_z() {
        let z = Direction::z_axis();
        assert_eq!(amplitude(Sign::Plus, z, Sign::Plus, z), c(1.0, 0.0));
        assert_eq!(amplitude(Sign::Plus, z, Sign::Minus, z), c(0.0, 0.0));
    }

    #[test]
    fn z_to_x_overlap() {
        let a = amplitude(Sign::Plus, Direction::z_axis(), Sign::Plus, Direction::raw(PI / 2.0, 0.0));
        assert!((a - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn reversal_conjugates() {
        let d1 = Direction::raw(0.4, 2.1);
        let d2 = Direction::raw(2.7, 5.3);
        for m in Sign::BOTH {
            for n in Sign::BOTH {
                let fwd = amplitude(m, d1, n, d2);
                let back = amplitude(n, d2, m, d1);
                assert!((fwd - back.conj()).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn table_same_direction_is_identity() {
        let d = Direction::raw(1.3, 4.4);
        let t = amplitude_table(d, d);
        assert!(t.matrix.max_abs_diff(&CMatrix2::identity()) < 1e-15);
    }

    #[test]
    fn table_z_to_x() {
        // rows are the preparation projection: row + = (cos pi/4, sin pi/4),
        // row - = (-sin pi/4, cos pi/4)
        let t = amplitude_table(Direction::z_axis(), Direction::raw(PI / 2.0, 0.0));
        let h = FRAC_1_SQRT_2;
        let expected = CMatrix2::new(c(h, 0.0), c(h, 0.0), c(-h, 0.0), c(h, 0.0));
        assert!(t.matrix.max_abs_diff(&expected) < 1e-15);
        assert!(t.unitarity_deviation() < 1e-15);
    }

    #[test]
    fn compose_through_identity() {
        let a = Direction::raw(0.9, 0.2);
        let c_dir = Direction::raw(2.0, 3.0);
        let t_bc = amplitude_table(a, c_dir);
        let out = compose_amplitudes(&amplitude_table(a, a), &t_bc).unwrap();
        assert!(out.matrix.max_abs_diff(&t_bc.matrix) < 1e-15);
    }

    #[test]
    fn compose_round_trip_is_identity() {
        let a = Direction::raw(0.3, 1.0);
        let b = Direction::raw(2.2, 5.9);
        let out = compose_amplitudes(&amplitude_table(a, b), &amplitude_table(b, a)).unwrap();
        assert!(out.matrix.max_abs_diff(&CMatrix2::identity()) < 1e-12);
    }

    #[test]
    fn compose_matches_direct_table() {
        let a = Direction::raw(0.0, 0.0);
        let b = Direction::raw(PI / 2.0, 0.0);
        let c_dir = Direction::raw(PI / 3.0, 1.2);
        let out = compose_amplitudes(&amplitude_table(a, b), &amplitude_table(b, c_dir)).unwrap();
        assert_eq!(out.from, a);
        assert_eq!(out.to, c_dir);
        assert!(out.matrix.max_abs_diff(&amplitude_table(a, c_dir).matrix) < 1e-12);
    }

    #[test]
    fn compose_rejects_mismatched_intermediate() {
        let a = Direction::raw(0.1, 0.1);
        let b = Direction::raw(0.2, 0.2);
        let b2 = Direction::raw(0.2, 0.3);
        let err = compose_amplitudes(&amplitude_table(a, b), &amplitude_table(b2, a));
        assert_eq!(err, Err(SpinError::MismatchedIntermediate));
    }

    #[test]
    fn reversed_table_matches_direct() {
        let a = Direction::raw(1.1, 0.7);
        let b = Direction::raw(2.5, 3.9);
        let rev = amplitude_table(a, b).reversed();
        assert!(rev.matrix.max_abs_diff(&amplitude_table(b, a).matrix) < 1e-15);
    }
}
