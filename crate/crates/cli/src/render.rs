//! Output documents and their text/JSON renderings.
//!
//! Complex numbers are `[re, im]` arrays and matrices are row-major nested
//! arrays; text output shows six decimals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spin_core::verify::ERRATA;
use spin_core::{CMatrix2, Complex, Direction, Frame, Spinor2, VerificationReport};

pub type ComplexJson = [f64; 2];
pub type MatrixJson = [[ComplexJson; 2]; 2];
pub type SpinorJson = [ComplexJson; 2];

pub fn complex_json(z: Complex) -> ComplexJson {
    [z.re, z.im]
}

pub fn matrix_json(m: &CMatrix2) -> MatrixJson {
    m.rows().map(|row| row.map(complex_json))
}

pub fn matrix_from_json(m: &MatrixJson) -> CMatrix2 {
    CMatrix2::from_rows(m.map(|row| row.map(|[re, im]| Complex::new(re, im))))
}

pub fn spinor_json(v: &Spinor2) -> SpinorJson {
    v.components().map(complex_json)
}

pub fn angles(d: Direction) -> [f64; 2] {
    [d.theta, d.phi]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignedPair<T> {
    pub plus: T,
    pub minus: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerComponent<T> {
    pub sigma_c: T,
    pub sigma_x: T,
    pub sigma_y: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameJson {
    pub c: [f64; 3],
    pub c_x: [f64; 3],
    pub c_y: [f64; 3],
}

impl From<&Frame> for FrameJson {
    fn from(f: &Frame) -> Self {
        FrameJson {
            c: f.c.to_array(),
            c_x: f.c_x.to_array(),
            c_y: f.c_y.to_array(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OpsDoc {
    pub b: [f64; 2],
    pub c: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<[f64; 2]>,
    pub sigma_c: MatrixJson,
    pub sigma_x: MatrixJson,
    pub sigma_y: MatrixJson,
    pub sigma_squared: MatrixJson,
    pub eigenvectors: PerComponent<SignedPair<SpinorJson>>,
    pub frame: FrameJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<SignedPair<SpinorJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expectations: Option<PerComponent<SignedPair<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectDoc {
    pub a: [f64; 2],
    pub sign: String,
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub expectation: f64,
    pub oracle: f64,
    pub difference: f64,
}

fn fmt_complex(z: Complex) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

fn write_matrix(out: &mut String, title: &str, m: &CMatrix2) {
    let _ = writeln!(out, "{title}");
    for row in m.rows() {
        let _ = writeln!(out, "  [ {}  {} ]", fmt_complex(row[0]), fmt_complex(row[1]));
    }
}

fn spinor_text(v: &SpinorJson) -> String {
    let z = |c: &ComplexJson| fmt_complex(Complex::new(c[0], c[1]));
    format!("( {}, {} )", z(&v[0]), z(&v[1]))
}

fn vec_text(v: &[f64; 3]) -> String {
    format!("({:+.6}, {:+.6}, {:+.6})", v[0], v[1], v[2])
}

pub fn ops_text(doc: &OpsDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "b = ({:.6}, {:.6})  c = ({:.6}, {:.6})", doc.b[0], doc.b[1], doc.c[0], doc.c[1]);
    let _ = writeln!(out);
    write_matrix(&mut out, "sigma_c", &matrix_from_json(&doc.sigma_c));
    write_matrix(&mut out, "sigma_x", &matrix_from_json(&doc.sigma_x));
    write_matrix(&mut out, "sigma_y", &matrix_from_json(&doc.sigma_y));
    write_matrix(&mut out, "sigma^2", &matrix_from_json(&doc.sigma_squared));
    let _ = writeln!(out, "eigenvectors");
    let ev = &doc.eigenvectors;
    for (name, pair) in [("c", &ev.sigma_c), ("x", &ev.sigma_x), ("y", &ev.sigma_y)] {
        let _ = writeln!(out, "  xi_{name}(+) = {}", spinor_text(&pair.plus));
        let _ = writeln!(out, "  xi_{name}(-) = {}", spinor_text(&pair.minus));
    }
    let _ = writeln!(out, "frame");
    let _ = writeln!(out, "  c   = {}", vec_text(&doc.frame.c));
    let _ = writeln!(out, "  c_x = {}", vec_text(&doc.frame.c_x));
    let _ = writeln!(out, "  c_y = {}", vec_text(&doc.frame.c_y));
    if let (Some(a), Some(states), Some(exp)) = (&doc.a, &doc.states, &doc.expectations) {
        let _ = writeln!(out, "states prepared along a = ({:.6}, {:.6})", a[0], a[1]);
        let _ = writeln!(out, "  psi(+) = {}", spinor_text(&states.plus));
        let _ = writeln!(out, "  psi(-) = {}", spinor_text(&states.minus));
        let _ = writeln!(out, "expectations          +           -");
        for (name, e) in [("sigma_c", &exp.sigma_c), ("sigma_x", &exp.sigma_x), ("sigma_y", &exp.sigma_y)] {
            let _ = writeln!(out, "  {name:<12} {:>+10.6}  {:>+10.6}", e.plus, e.minus);
        }
    }
    out
}

pub fn expect_text(doc: &ExpectDoc) -> String {
    format!(
        "expectation  {:+.6}\noracle       {:+.6}\ndifference   {:.3e}\n",
        doc.expectation, doc.oracle, doc.difference
    )
}

pub fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let width = report.results.iter().map(|r| r.name.len()).max().unwrap_or(4);
    let _ = writeln!(
        out,
        "{:<width$}  {:>8}  {:>12}  {:>9}  result",
        "property", "samples", "max_dev", "tol"
    );
    for r in &report.results {
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>12.3e}  {:>9.1e}  {}",
            r.name,
            r.samples,
            r.max_deviation,
            r.tolerance,
            if r.passed { "PASS" } else { "FAIL" }
        );
    }
    let failed = report.failures().count();
    let _ = writeln!(
        out,
        "\nseed {}  total samples {}  {}/{} passed",
        report.seed,
        report.total_samples,
        report.results.len() - failed,
        report.results.len()
    );
    let _ = writeln!(out, "\nnotes:");
    for note in ERRATA {
        let _ = writeln!(out, "  - {note}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_json_round_trip() {
        let m = CMatrix2::new(
            Complex::new(0.1, 0.0),
            Complex::new(1.0 / 3.0, -2.0f64.sqrt()),
            Complex::new(1e-300, 7.0),
            Complex::new(-0.0, 5.5),
        );
        assert_eq!(matrix_from_json(&matrix_json(&m)), m);
    }

    #[test]
    fn complex_text_has_six_decimals() {
        assert_eq!(fmt_complex(Complex::new(0.5, -1.0 / 3.0)), "+0.500000-0.333333i");
    }
}
