//! Fixed-size carriers: complex scalars, two-component spinors, 2x2 complex
//! matrices and real 3-vectors.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

pub type Complex = num_complex::Complex64;

/// `f64::max` that propagates NaN instead of discarding it.
pub(crate) fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

/// Two complex components along the `+` and `-` basis vectors of some
/// quantization direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spinor2 {
    pub up: Complex,
    pub down: Complex,
}

impl Spinor2 {
    pub const fn new(up: Complex, down: Complex) -> Self {
        Self { up, down }
    }

    pub fn from_real(up: f64, down: f64) -> Self {
        Self::new(Complex::new(up, 0.0), Complex::new(down, 0.0))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.up.norm_sqr() + self.down.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Hermitian inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Spinor2) -> Complex {
        self.up.conj() * other.up + self.down.conj() * other.down
    }

    pub fn scale(&self, k: Complex) -> Spinor2 {
        Spinor2::new(self.up * k, self.down * k)
    }

    pub fn max_abs_diff(&self, other: &Spinor2) -> f64 {
        nan_max((self.up - other.up).norm(), (self.down - other.down).norm())
    }

    /// Euclidean norm of the difference.
    pub fn distance(&self, other: &Spinor2) -> f64 {
        ((self.up - other.up).norm_sqr() + (self.down - other.down).norm_sqr()).sqrt()
    }

    pub fn components(&self) -> [Complex; 2] {
        [self.up, self.down]
    }
}

/// A 2x2 complex matrix stored by element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CMatrix2 {
    pub e11: Complex,
    pub e12: Complex,
    pub e21: Complex,
    pub e22: Complex,
}

impl CMatrix2 {
    pub const fn new(e11: Complex, e12: Complex, e21: Complex, e22: Complex) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn from_rows(rows: [[Complex; 2]; 2]) -> Self {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub const fn pauli_x() -> Self {
        Self::new(ZERO, ONE, ONE, ZERO)
    }

    pub const fn pauli_y() -> Self {
        Self::new(ZERO, Complex::new(0.0, -1.0), I, ZERO)
    }

    pub const fn pauli_z() -> Self {
        Self::new(ONE, ZERO, ZERO, Complex::new(-1.0, 0.0))
    }

    pub fn rows(&self) -> [[Complex; 2]; 2] {
        [[self.e11, self.e12], [self.e21, self.e22]]
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.rows()[row][col]
    }

    pub fn adjoint(&self) -> CMatrix2 {
        CMatrix2::new(self.e11.conj(), self.e21.conj(), self.e12.conj(), self.e22.conj())
    }

    pub fn transpose(&self) -> CMatrix2 {
        CMatrix2::new(self.e11, self.e21, self.e12, self.e22)
    }

    pub fn trace(&self) -> Complex {
        self.e11 + self.e22
    }

    pub fn det(&self) -> Complex {
        self.e11 * self.e22 - self.e12 * self.e21
    }

    pub fn scale(&self, k: Complex) -> CMatrix2 {
        CMatrix2::new(self.e11 * k, self.e12 * k, self.e21 * k, self.e22 * k)
    }

    pub fn scale_real(&self, k: f64) -> CMatrix2 {
        self.scale(Complex::new(k, 0.0))
    }

    pub fn apply(&self, v: &Spinor2) -> Spinor2 {
        Spinor2::new(
            self.e11 * v.up + self.e12 * v.down,
            self.e21 * v.up + self.e22 * v.down,
        )
    }

    /// `AB - BA`
    pub fn commutator(&self, other: &CMatrix2) -> CMatrix2 {
        *self * *other - *other * *self
    }

    /// `AB + BA`
    pub fn anticommutator(&self, other: &CMatrix2) -> CMatrix2 {
        *self * *other + *other * *self
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &CMatrix2) -> f64 {
        let d = *self - *other;
        [d.e12, d.e21, d.e22]
            .iter()
            .fold(d.e11.norm(), |acc, z| nan_max(acc, z.norm()))
    }

    /// Largest entrywise modulus of `self - self^dagger`.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_finite(&self) -> bool {
        [self.e11, self.e12, self.e21, self.e22]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for CMatrix2 {
    type Output = CMatrix2;
    fn add(self, o: CMatrix2) -> CMatrix2 {
        CMatrix2::new(self.e11 + o.e11, self.e12 + o.e12, self.e21 + o.e21, self.e22 + o.e22)
    }
}

impl Sub for CMatrix2 {
    type Output = CMatrix2;
    fn sub(self, o: CMatrix2) -> CMatrix2 {
        CMatrix2::new(self.e11 - o.e11, self.e12 - o.e12, self.e21 - o.e21, self.e22 - o.e22)
    }
}

impl Mul for CMatrix2 {
    type Output = CMatrix2;
    fn mul(self, o: CMatrix2) -> CMatrix2 {
        CMatrix2::new(
            self.e11 * o.e11 + self.e12 * o.e21,
            self.e11 * o.e12 + self.e12 * o.e22,
            self.e21 * o.e11 + self.e22 * o.e21,
            self.e21 * o.e12 + self.e22 * o.e22,
        )
    }
}

impl Neg for CMatrix2 {
    type Output = CMatrix2;
    fn neg(self) -> CMatrix2 {
        self.scale_real(-1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs_diff(&self, o: &Vec3) -> f64 {
        nan_max(nan_max((self.x - o.x).abs(), (self.y - o.y).abs()), (self.z - o.z).abs())
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}
