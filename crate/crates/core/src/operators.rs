//! Spin operators in the basis of an intermediate direction `b`.
//!
//! `sigma_c` measures the projection along `c`. The x and y components are
//! the same construction aimed at the rotated axes returned by
//! [`crate::frame_axes`], and can be built either from their own closed forms
//! or by shifting the angles of `c` ([`shift_x`], [`shift_y`]).

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::amplitude::{amplitude_table, compose_amplitudes};
use crate::direction::Direction;
use crate::linalg::{CMatrix2, Complex};

/// Values taken by an observable when the projection along the final
/// direction is found up (`r1`) or down (`r2`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rvalues {
    pub r1: f64,
    pub r2: f64,
}

impl Rvalues {
    pub const SPIN: Rvalues = Rvalues { r1: 1.0, r2: -1.0 };
    /// Eigenvalue of the squared spin, `s(s+1)` in units of `(hbar/2)^2`.
    pub const SPIN_SQUARED: Rvalues = Rvalues { r1: 3.0, r2: 3.0 };

    pub const fn new(r1: f64, r2: f64) -> Self {
        Self { r1, r2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftMethod {
    /// Closed-form elements of the component itself.
    Direct,
    /// `sigma_c` evaluated at the shifted final direction.
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SquareMethod {
    /// `sigma_x^2 + sigma_y^2 + sigma_c^2`.
    ComponentSum,
    /// Amplitude-product elements with `r1 = r2 = 3`, collapsed through the
    /// composition law.
    Lande,
}

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// Matrix of the observable taking `r.r1` / `r.r2` on up / down along `c`,
/// assembled element by element from the `b -> c` amplitudes:
///
/// ```text
/// R11 = |A(+,+)|^2 r1 + |A(+,-)|^2 r2
/// R12 = A*(+,+) A(-,+) r1 + A*(+,-) A(-,-) r2
/// R21 = A*(-,+) A(+,+) r1 + A*(-,-) A(+,-) r2
/// R22 = |A(-,+)|^2 r1 + |A(-,-)|^2 r2
/// ```
pub fn build_observable_matrix(b: Direction, c: Direction, r: Rvalues) -> CMatrix2 {
    let m = amplitude_table(b, c).matrix;
    let (pp, pm, mp, mm) = (m.e11, m.e12, m.e21, m.e22);
    CMatrix2::new(
        re(pp.norm_sqr() * r.r1 + pm.norm_sqr() * r.r2),
        pp.conj() * mp * r.r1 + pm.conj() * mm * r.r2,
        mp.conj() * pp * r.r1 + mm.conj() * pm * r.r2,
        re(mp.norm_sqr() * r.r1 + mm.norm_sqr() * r.r2),
    )
}

/// Spin projection along `c`, in units of hbar/2, in the `b` basis.
pub fn sigma_c(b: Direction, c: Direction) -> CMatrix2 {
    let (st, ct) = b.theta.sin_cos();
    let (stc, ctc) = c.theta.sin_cos();
    let (sd, cd) = (b.phi - c.phi).sin_cos();
    let diag = ct * ctc + st * stc * cd;
    let off_re = st * ctc - stc * ct * cd;
    let off_im = stc * sd;
    CMatrix2::new(
        re(diag),
        Complex::new(off_re, -off_im),
        Complex::new(off_re, off_im),
        re(-diag),
    )
}

/// Formal substitution `theta -> theta - pi/2` turning `sigma_c` into the x
/// component. The result is intentionally not renormalized.
pub fn shift_x(c: Direction) -> Direction {
    Direction::raw(c.theta - FRAC_PI_2, c.phi)
}

/// Formal substitution `theta = pi/2, phi -> phi - pi/2` turning `sigma_c`
/// into the y component.
pub fn shift_y(c: Direction) -> Direction {
    Direction::raw(FRAC_PI_2, c.phi - FRAC_PI_2)
}

pub fn sigma_x(b: Direction, c: Direction, method: ShiftMethod) -> CMatrix2 {
    match method {
        ShiftMethod::Shifted => sigma_c(b, shift_x(c)),
        ShiftMethod::Direct => {
            let (st, ct) = b.theta.sin_cos();
            let (stc, ctc) = c.theta.sin_cos();
            let (sd, cd) = (c.phi - b.phi).sin_cos();
            let diag = stc * ct - st * ctc * cd;
            let off_re = ct * ctc * cd + st * stc;
            let off_im = ctc * sd;
            CMatrix2::new(
                re(diag),
                Complex::new(off_re, -off_im),
                Complex::new(off_re, off_im),
                re(-diag),
            )
        }
    }
}

/// The y component. Independent of the polar angle of `c`.
///
/// The `(1,2)` element is `-cos(theta) sin(phi' - phi) - i cos(phi' - phi)`,
/// the Hermitian partner of `(2,1)`.
pub fn sigma_y(b: Direction, c: Direction, method: ShiftMethod) -> CMatrix2 {
    match method {
        ShiftMethod::Shifted => sigma_c(b, shift_y(c)),
        ShiftMethod::Direct => {
            let (st, ct) = b.theta.sin_cos();
            let (sd, cd) = (c.phi - b.phi).sin_cos();
            CMatrix2::new(
                re(st * sd),
                Complex::new(-ct * sd, -cd),
                Complex::new(-ct * sd, cd),
                re(-st * sd),
            )
        }
    }
}

/// The textbook `sigma . c` in the fixed z basis:
/// `[[cos t, sin t e^{-ip}], [sin t e^{ip}, -cos t]]`.
pub fn literature_form(c: Direction) -> CMatrix2 {
    let (st, ct) = c.theta.sin_cos();
    CMatrix2::new(
        re(ct),
        Complex::from_polar(st, -c.phi),
        Complex::from_polar(st, c.phi),
        re(-ct),
    )
}

/// Squared spin operator; both methods yield `3 * identity`.
pub fn sigma_squared(b: Direction, c: Direction, method: SquareMethod) -> CMatrix2 {
    match method {
        SquareMethod::ComponentSum => {
            let x = sigma_x(b, c, ShiftMethod::Direct);
            let y = sigma_y(b, c, ShiftMethod::Direct);
            let z = sigma_c(b, c);
            x * x + y * y + z * z
        }
        SquareMethod::Lande => {
            // The conjugated b->c amplitudes are the c->b amplitudes, so each
            // element is r times a b->c->b round trip, i.e. r times the
            // repeat-measurement amplitude along b.
            let r = Rvalues::SPIN_SQUARED.r1;
            let out = amplitude_table(b, c);
            let back = amplitude_table(c, b);
            let round_trip = compose_amplitudes(&out, &back)
                .expect("c -> b table starts where the b -> c table ends");
            round_trip.matrix.transpose().scale_real(r)
        }
    }
}
