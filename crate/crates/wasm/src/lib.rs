//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export takes angles in degrees and returns a JSON string, so the
//! page needs no generated TypeScript types.

use std::collections::BTreeMap;

use serde::Serialize;
use spin_core::sampling::{random_direction, stream_rng};
use spin_core::{
    eigvec_sigma_c, eigvec_sigma_x, eigvec_sigma_y, expectation, frame_axes, run_suite, sigma_c,
    sigma_squared, sigma_x, sigma_y, state, CMatrix2, Complex, Direction, ShiftMethod, Sign,
    Spinor2, SquareMethod,
};
use spin_core::oracle::oracle_expectation;
use wasm_bindgen::prelude::*;

type Rows = [[[f64; 2]; 2]; 2];

fn pair(z: Complex) -> [f64; 2] {
    [z.re, z.im]
}

fn rows(m: &CMatrix2) -> Rows {
    m.rows().map(|r| r.map(pair))
}

fn direction(theta_deg: f64, phi_deg: f64) -> Result<Direction, JsError> {
    Direction::from_degrees(theta_deg, phi_deg).map_err(|e| JsError::new(&e.to_string()))
}

fn sign(plus: bool) -> Sign {
    if plus {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[derive(Serialize)]
struct Eigen {
    plus: [[f64; 2]; 2],
    minus: [[f64; 2]; 2],
    residual: f64,
}

#[derive(Serialize)]
struct OperatorsView {
    sigma_c: Rows,
    sigma_x: Rows,
    sigma_y: Rows,
    sigma_squared: Rows,
    eigen_c: Eigen,
    eigen_x: Eigen,
    eigen_y: Eigen,
    frame: [[f64; 3]; 3],
}

fn eigen(m: &CMatrix2, f: fn(Sign, Direction, Direction) -> Spinor2, b: Direction, c: Direction) -> Eigen {
    let v = Sign::BOTH.map(|s| f(s, b, c));
    let residual = Sign::BOTH
        .iter()
        .zip(&v)
        .map(|(s, v)| m.apply(v).distance(&v.scale(Complex::new(s.value(), 0.0))))
        .fold(0.0, f64::max);
    Eigen {
        plus: v[0].components().map(pair),
        minus: v[1].components().map(pair),
        residual,
    }
}

/// Operators, eigenvectors and the rotated frame for quantization direction
/// `b` and measurement direction `c`.
#[wasm_bindgen]
pub fn operators(b_theta: f64, b_phi: f64, c_theta: f64, c_phi: f64) -> Result<String, JsError> {
    let b = direction(b_theta, b_phi)?;
    let c = direction(c_theta, c_phi)?;
    let sc = sigma_c(b, c);
    let sx = sigma_x(b, c, ShiftMethod::Direct);
    let sy = sigma_y(b, c, ShiftMethod::Direct);
    let view = OperatorsView {
        sigma_c: rows(&sc),
        sigma_x: rows(&sx),
        sigma_y: rows(&sy),
        sigma_squared: rows(&sigma_squared(b, c, SquareMethod::Lande)),
        eigen_c: eigen(&sc, eigvec_sigma_c, b, c),
        eigen_x: eigen(&sx, eigvec_sigma_x, b, c),
        eigen_y: eigen(&sy, eigvec_sigma_y, b, c),
        frame: frame_axes(c).axes().map(|v| v.to_array()),
    };
    Ok(serde_json::to_string(&view)?)
}

#[derive(Serialize)]
struct Scan {
    oracle: f64,
    values: Vec<f64>,
    spread: f64,
}

/// Expectation of sigma_c in state `sign` along `a`, evaluated with `draws`
/// random quantization directions.
#[wasm_bindgen]
pub fn expectation_scan(
    a_theta: f64,
    a_phi: f64,
    c_theta: f64,
    c_phi: f64,
    plus: bool,
    draws: u32,
    seed: u64,
) -> Result<String, JsError> {
    let a = direction(a_theta, a_phi)?;
    let c = direction(c_theta, c_phi)?;
    let s = sign(plus);
    let mut rng = stream_rng(seed, 0);
    let values = (0..draws)
        .map(|_| {
            let b = random_direction(&mut rng);
            expectation(&sigma_c(b, c), &state(s, a, b))
        })
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| JsError::new(&e.to_string()))?;
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let scan = Scan {
        oracle: oracle_expectation(s, a, c),
        spread: if values.is_empty() { 0.0 } else { hi - lo },
        values,
    };
    Ok(serde_json::to_string(&scan)?)
}

/// Runs the property catalogue and returns the report.
#[wasm_bindgen]
pub fn verify(samples: u32, seed: u64) -> Result<String, JsError> {
    let report = run_suite(samples as usize, seed, &BTreeMap::new())
        .map_err(|e| JsError::new(&e.to_string()))?;
    Ok(serde_json::to_string(&report)?)
}
