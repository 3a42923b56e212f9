//! Eigenvectors of the three spin components, prepared states and
//! expectation values. All spinors are expressed in the `b` basis.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::amplitude::amplitude;
use crate::direction::{Direction, Sign};
use crate::error::SpinError;
use crate::linalg::{CMatrix2, Complex, Spinor2, I};

/// Hermiticity tolerance accepted by [`expectation`].
pub const HERMITIAN_TOL: f64 = 1e-12;

fn along_b(s: Sign, d: Direction, b: Direction) -> Spinor2 {
    Spinor2::new(amplitude(s, d, Sign::Plus, b), amplitude(s, d, Sign::Minus, b))
}

/// Eigenvector of [`crate::sigma_c`] with eigenvalue `s.value()`: the
/// amplitudes from projection `s` along `c` to each projection along `b`.
pub fn eigvec_sigma_c(s: Sign, b: Direction, c: Direction) -> Spinor2 {
    along_b(s, c, b)
}

/// Eigenvector of [`crate::sigma_x`], written out in closed form. It equals
/// `eigvec_sigma_c(s, b, shift_x(c))`.
pub fn eigvec_sigma_x(s: Sign, b: Direction, c: Direction) -> Spinor2 {
    let (sb, cb) = (b.theta / 2.0).sin_cos();
    let (sc, cc) = (c.theta / 2.0).sin_cos();
    let sum = sc + cc;
    let diff = sc - cc;
    let e = Complex::cis(c.phi - b.phi);
    let k = FRAC_1_SQRT_2;
    let r = |x: f64| Complex::new(x, 0.0);
    match s {
        Sign::Plus => Spinor2::new(
            (r(sum * cb) + e * (diff * sb)) * k,
            (r(sum * sb) - e * (diff * cb)) * k,
        ),
        Sign::Minus => Spinor2::new(
            (r(diff * cb) - e * (sum * sb)) * k,
            (r(diff * sb) + e * (sum * cb)) * k,
        ),
    }
}

/// Eigenvector of [`crate::sigma_y`] in closed form; independent of the polar
/// angle of `c`.
pub fn eigvec_sigma_y(s: Sign, b: Direction, c: Direction) -> Spinor2 {
    let (sb, cb) = (b.theta / 2.0).sin_cos();
    let ie = I * Complex::cis(c.phi - b.phi);
    let k = FRAC_1_SQRT_2;
    let r = |x: f64| Complex::new(x, 0.0);
    match s {
        Sign::Plus => Spinor2::new((r(cb) - ie * sb) * k, (r(sb) + ie * cb) * k),
        Sign::Minus => Spinor2::new((r(cb) + ie * sb) * k, (r(sb) - ie * cb) * k),
    }
}

/// State prepared with projection `s` along `a`, in the `b` basis.
pub fn state(s: Sign, a: Direction, b: Direction) -> Spinor2 {
    along_b(s, a, b)
}

/// `psi^dagger op psi`. Fails if `op` is not Hermitian within
/// [`HERMITIAN_TOL`].
pub fn expectation(op: &CMatrix2, psi: &Spinor2) -> Result<f64, SpinError> {
    let deviation = op.hermiticity_deviation();
    if deviation.is_nan() || deviation > HERMITIAN_TOL {
        return Err(SpinError::NotHermitian {
            deviation,
            tolerance: HERMITIAN_TOL,
        });
    }
    let value = psi.inner(&op.apply(psi));
    debug_assert!(value.im.abs() < 1e-12 * psi.norm_sqr().max(1.0));
    Ok(value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{shift_x, shift_y, sigma_c, sigma_x, sigma_y, ShiftMethod};
    use std::f64::consts::{FRAC_PI_3, PI};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn aligned_eigenvectors_are_basis_vectors() {
        let d = Direction::raw(1.4, 2.2);
        assert!(eigvec_sigma_c(Sign::Plus, d, d).max_abs_diff(&Spinor2::from_real(1.0, 0.0)) < 1e-15);
        assert!(eigvec_sigma_c(Sign::Minus, d, d).max_abs_diff(&Spinor2::from_real(0.0, 1.0)) < 1e-15);
    }

    #[test]
    fn z_basis_eigenvector() {
        // half-angle form at b = z: (cos t/2, -e^{ip} sin t/2)
        let (t, p) = (1.1, 0.7);
        let v = eigvec_sigma_c(Sign::Plus, Direction::z_axis(), Direction::raw(t, p));
        let expected = Spinor2::new(c((t / 2.0).cos(), 0.0), -Complex::from_polar((t / 2.0).sin(), p));
        assert!(v.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn eigenvalue_equations() {
        let b = Direction::raw(0.6, 5.0);
        let cd = Direction::raw(2.3, 1.2);
        let ops = [
            (sigma_c(b, cd), eigvec_sigma_c as fn(Sign, Direction, Direction) -> Spinor2),
            (sigma_x(b, cd, ShiftMethod::Direct), eigvec_sigma_x),
            (sigma_y(b, cd, ShiftMethod::Direct), eigvec_sigma_y),
        ];
        for (m, f) in ops {
            for s in Sign::BOTH {
                let v = f(s, b, cd);
                assert!((v.norm() - 1.0).abs() < 1e-12);
                let residual = m.apply(&v).distance(&v.scale(c(s.value(), 0.0)));
                assert!(residual < 1e-12, "{residual}");
            }
            assert!(f(Sign::Plus, b, cd).inner(&f(Sign::Minus, b, cd)).norm() < 1e-12);
        }
    }

    #[test]
    fn closed_forms_match_shifted_eigenvectors() {
        let b = Direction::raw(2.1, 0.4);
        let cd = Direction::raw(0.3, 3.7);
        for s in Sign::BOTH {
            let dx = eigvec_sigma_x(s, b, cd).max_abs_diff(&eigvec_sigma_c(s, b, shift_x(cd)));
            let dy = eigvec_sigma_y(s, b, cd).max_abs_diff(&eigvec_sigma_c(s, b, shift_y(cd)));
            assert!(dx < 1e-15 && dy < 1e-15, "{dx} {dy}");
        }
    }

    #[test]
    fn x_eigenvector_reference_case() {
        let d = Direction::raw(0.0, 0.9);
        let v = eigvec_sigma_x(Sign::Plus, d, d);
        let h = FRAC_1_SQRT_2;
        assert!(v.max_abs_diff(&Spinor2::from_real(h, h)) < 1e-15);
    }

    #[test]
    fn y_eigenvector_reference_case() {
        let d = Direction::raw(0.0, 0.9);
        let v = eigvec_sigma_y(Sign::Plus, d, d);
        let h = FRAC_1_SQRT_2;
        assert!(v.max_abs_diff(&Spinor2::new(c(h, 0.0), c(0.0, h))) < 1e-15);
    }

    #[test]
    fn state_examples() {
        let a = Direction::z_axis();
        let b = Direction::raw(PI / 2.0, 0.0);
        let h = (PI / 4.0).cos();
        assert!(state(Sign::Plus, a, b).max_abs_diff(&Spinor2::from_real(h, (PI / 4.0).sin())) < 1e-15);
        assert!(state(Sign::Plus, b, b).max_abs_diff(&Spinor2::from_real(1.0, 0.0)) < 1e-15);
        assert!(state(Sign::Minus, b, b).max_abs_diff(&Spinor2::from_real(0.0, 1.0)) < 1e-15);
        let a2 = Direction::raw(1.0, 2.0);
        assert!(state(Sign::Plus, a2, b).inner(&state(Sign::Minus, a2, b)).norm() < 1e-15);
    }

    #[test]
    fn expectation_examples() {
        let a = Direction::z_axis();
        let cd = Direction::raw(FRAC_PI_3, 0.0);
        for b in [Direction::raw(0.63, 1.1), Direction::raw(2.5, 4.0)] {
            let op = sigma_c(b, cd);
            let up = expectation(&op, &state(Sign::Plus, a, b)).unwrap();
            let down = expectation(&op, &state(Sign::Minus, a, b)).unwrap();
            assert!((up - 0.5).abs() < 1e-12);
            assert!((down + 0.5).abs() < 1e-12);
            let aligned = expectation(&sigma_c(b, a), &state(Sign::Plus, a, b)).unwrap();
            assert!((aligned - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn expectation_rejects_non_hermitian() {
        let op = CMatrix2::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        let err = expectation(&op, &Spinor2::from_real(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, SpinError::NotHermitian { .. }));
        let nan = CMatrix2::new(c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0));
        assert!(expectation(&nan, &Spinor2::from_real(1.0, 0.0)).is_err());
    }
}
