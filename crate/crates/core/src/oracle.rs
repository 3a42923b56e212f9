//! Reference constructions that share no formula code with the rest of the
//! crate: textbook z-basis spinor overlaps, a characteristic-polynomial
//! eigensolver for Hermitian 2x2 matrices, and the geometric expectation
//! value `(+/-1) a.c`.

use serde::{Deserialize, Serialize};

use crate::direction::{Direction, Sign};
use crate::error::SpinError;
use crate::linalg::{CMatrix2, Complex, Spinor2};

/// Hermiticity tolerance accepted by [`oracle_eig`].
pub const EIG_HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalue gap below which [`EigenSplit::near_degenerate`] is set.
pub const DEGENERACY_GAP: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Spinor2,
}

/// Eigenpairs sorted by descending eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenSplit {
    pub upper: EigenPair,
    pub lower: EigenPair,
    pub near_degenerate: bool,
}

impl EigenSplit {
    pub fn pairs(&self) -> [EigenPair; 2] {
        [self.upper, self.lower]
    }
}

fn z_basis_spinor(s: Sign, d: Direction) -> [Complex; 2] {
    let half = d.theta / 2.0;
    match s {
        Sign::Plus => [
            Complex::new(half.cos(), 0.0),
            Complex::from_polar(half.sin(), d.phi),
        ],
        Sign::Minus => [
            Complex::from_polar(-half.sin(), -d.phi),
            Complex::new(half.cos(), 0.0),
        ],
    }
}

/// Overlap `<chi_{m_to}(d_to) | chi_{m_from}(d_from)>` of the standard spinors
/// `chi+ = (cos t/2, e^{ip} sin t/2)`, `chi- = (-e^{-ip} sin t/2, cos t/2)`.
///
/// Moduli agree with [`crate::amplitude`]; phases differ by one unit factor
/// per basis vector.
pub fn oracle_amplitude(m_from: Sign, d_from: Direction, m_to: Sign, d_to: Direction) -> Complex {
    let ket = z_basis_spinor(m_from, d_from);
    let bra = z_basis_spinor(m_to, d_to);
    bra[0].conj() * ket[0] + bra[1].conj() * ket[1]
}

/// Rotates `v` so its first component with modulus above `1e-12` is real and
/// positive.
pub fn fix_phase(v: Spinor2) -> Spinor2 {
    let pivot = if v.up.norm() > 1e-12 { v.up } else { v.down };
    if pivot.norm() == 0.0 {
        return v;
    }
    let phase = pivot.conj() / pivot.norm();
    Spinor2::new(v.up * phase, v.down * phase)
}

fn eigenvector(m: &CMatrix2, lambda: f64, fallback: Spinor2) -> Spinor2 {
    // Rows of (M - lambda I) are orthogonal to the eigenvector, so either
    // (m12, lambda - m11) or (lambda - m22, m21) spans it; keep the larger.
    let first = [m.e12, Complex::new(lambda - m.e11.re, 0.0)];
    let second = [Complex::new(lambda - m.e22.re, 0.0), m.e21];
    let n1 = first[0].norm_sqr() + first[1].norm_sqr();
    let n2 = second[0].norm_sqr() + second[1].norm_sqr();
    let (v, n) = if n1 >= n2 { (first, n1) } else { (second, n2) };
    if n < 1e-300 {
        return fallback;
    }
    let n = n.sqrt();
    fix_phase(Spinor2::new(v[0] / n, v[1] / n))
}

/// Closed-form eigen-decomposition of a Hermitian 2x2 matrix from its
/// characteristic polynomial.
pub fn oracle_eig(m: &CMatrix2) -> Result<EigenSplit, SpinError> {
    let deviation = m.hermiticity_deviation();
    if deviation.is_nan() || deviation > EIG_HERMITIAN_TOL {
        return Err(SpinError::NotHermitian {
            deviation,
            tolerance: EIG_HERMITIAN_TOL,
        });
    }
    let a = m.e11.re;
    let d = m.e22.re;
    let mean = 0.5 * (a + d);
    let radius = (0.5 * (a - d)).hypot(m.e12.norm());
    let (hi, lo) = (mean + radius, mean - radius);
    let e1 = Spinor2::from_real(1.0, 0.0);
    let e2 = Spinor2::from_real(0.0, 1.0);
    let upper = eigenvector(m, hi, e1);
    let lower = eigenvector(m, lo, e2);
    Ok(EigenSplit {
        upper: EigenPair {
            value: hi,
            vector: upper,
        },
        lower: EigenPair {
            value: lo,
            vector: lower,
        },
        near_degenerate: hi - lo < DEGENERACY_GAP,
    })
}

/// `(+/-1)` times the cosine of the angle between `a` and `c`.
pub fn oracle_expectation(s: Sign, a: Direction, c: Direction) -> f64 {
    let cos_angle =
        a.theta.cos() * c.theta.cos() + a.theta.sin() * c.theta.sin() * (a.phi - c.phi).cos();
    match s {
        Sign::Plus => cos_angle,
        Sign::Minus => -cos_angle,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3, PI};

    fn residual(m: &CMatrix2, p: &EigenPair) -> f64 {
        m.apply(&p.vector)
            .distance(&p.vector.scale(Complex::new(p.value, 0.0)))
    }

    #[test]
    fn oracle_amplitude_examples() {
        let d = Direction::raw(1.0, 2.0);
        assert!((oracle_amplitude(Sign::Plus, d, Sign::Plus, d) - 1.0).norm() < 1e-15);
        let a = oracle_amplitude(Sign::Plus, Direction::z_axis(), Sign::Plus, Direction::raw(PI / 2.0, 0.0));
        assert!((a.norm() - FRAC_1_SQRT_2).abs() < 1e-15);
        let other = Direction::raw(2.2, 5.5);
        let total = oracle_amplitude(Sign::Plus, d, Sign::Plus, other).norm_sqr()
            + oracle_amplitude(Sign::Plus, d, Sign::Minus, other).norm_sqr();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eig_diagonal() {
        let split = oracle_eig(&CMatrix2::pauli_z()).unwrap();
        assert_eq!(split.upper.value, 1.0);
        assert_eq!(split.lower.value, -1.0);
        assert!(split.upper.vector.max_abs_diff(&Spinor2::from_real(1.0, 0.0)) < 1e-15);
        assert!(split.lower.vector.max_abs_diff(&Spinor2::from_real(0.0, 1.0)) < 1e-15);
        assert!(!split.near_degenerate);
    }

    #[test]
    fn eig_pauli_x() {
        let split = oracle_eig(&CMatrix2::pauli_x()).unwrap();
        let h = FRAC_1_SQRT_2;
        assert!(split.upper.vector.max_abs_diff(&Spinor2::from_real(h, h)) < 1e-15);
        assert!(split.lower.vector.max_abs_diff(&Spinor2::from_real(h, -h)) < 1e-15);
    }

    #[test]
    fn eig_residuals_general() {
        let m = CMatrix2::new(
            Complex::new(0.3, 0.0),
            Complex::new(-1.2, 0.7),
            Complex::new(-1.2, -0.7),
            Complex::new(-2.0, 0.0),
        );
        let split = oracle_eig(&m).unwrap();
        assert!(split.upper.value > split.lower.value);
        for p in split.pairs() {
            assert!(residual(&m, &p) < 1e-12);
            assert!((p.vector.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn eig_scalar_matrix_flags_degeneracy() {
        let split = oracle_eig(&CMatrix2::identity().scale_real(3.0)).unwrap();
        assert!(split.near_degenerate);
        assert_eq!(split.upper.value, 3.0);
        assert!(split.upper.vector.inner(&split.lower.vector).norm() < 1e-15);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix2::new(
            Complex::new(1.0, 0.0),
            Complex::new(1.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(1.0, 0.0),
        );
        assert!(matches!(oracle_eig(&m), Err(SpinError::NotHermitian { .. })));
    }

    #[test]
    fn expectation_examples() {
        let z = Direction::z_axis();
        assert!((oracle_expectation(Sign::Plus, z, z) - 1.0).abs() < 1e-15);
        assert!((oracle_expectation(Sign::Plus, z, Direction::raw(FRAC_PI_3, 0.0)) - 0.5).abs() < 1e-15);
        assert!(oracle_expectation(Sign::Minus, z, Direction::raw(PI / 2.0, 1.3)).abs() < 1e-15);
    }

    #[test]
    fn fix_phase_makes_first_component_positive() {
        let v = fix_phase(Spinor2::new(Complex::new(0.0, -0.6), Complex::new(0.8, 0.0)));
        assert!(v.up.im.abs() < 1e-16 && v.up.re > 0.0);
        assert!((v.norm() - 1.0).abs() < 1e-15);
    }
}
