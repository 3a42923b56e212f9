use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::fs::File;
use std::io::{BufWriter, Write};

use serde::{Deserialize, Serialize};
use spin_core::oracle::oracle_expectation;
use spin_core::verify::property_names;
use spin_core::{
    eigvec_sigma_c, eigvec_sigma_x, eigvec_sigma_y, expectation, frame_axes, run_suite, sigma_c,
    sigma_squared, sigma_x, sigma_y, state, CMatrix2, Complex, Direction, ShiftMethod, Sign,
    Spinor2, SquareMethod,
};

use crate::args::{ExpectArgs, OpsArgs, OutputFormat, SweepArgs, VerifyArgs};
use crate::render::{
    angles, expect_text, matrix_json, ops_text, report_text, spinor_json, ExpectDoc, FrameJson,
    MatrixJson, OpsDoc, PerComponent, SignedPair,
};
use crate::{exit, CliError};

type EigFn = fn(Sign, Direction, Direction) -> Spinor2;

const EIGEN: [EigFn; 3] = [eigvec_sigma_c, eigvec_sigma_x, eigvec_sigma_y];

fn operators(b: Direction, c: Direction) -> [CMatrix2; 3] {
    [
        sigma_c(b, c),
        sigma_x(b, c, ShiftMethod::Direct),
        sigma_y(b, c, ShiftMethod::Direct),
    ]
}

fn per_component<T>(f: impl Fn(usize) -> T) -> PerComponent<T> {
    PerComponent {
        sigma_c: f(0),
        sigma_x: f(1),
        sigma_y: f(2),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents contain only finite numbers");
    s.push('\n');
    s
}

fn text_or_json(format: OutputFormat) -> Result<(), CliError> {
    match format {
        OutputFormat::Csv => Err(CliError::Usage("csv output is only available for sweep".into())),
        _ => Ok(()),
    }
}

pub fn ops_doc(b: Direction, c: Direction, a: Option<Direction>) -> OpsDoc {
    let ops = operators(b, c);
    let eigenvectors = per_component(|i| SignedPair {
        plus: spinor_json(&EIGEN[i](Sign::Plus, b, c)),
        minus: spinor_json(&EIGEN[i](Sign::Minus, b, c)),
    });
    let (states, expectations) = match a {
        Some(a) => {
            let plus = state(Sign::Plus, a, b);
            let minus = state(Sign::Minus, a, b);
            let exp = per_component(|i| SignedPair {
                plus: expectation(&ops[i], &plus).expect("generated operators are Hermitian"),
                minus: expectation(&ops[i], &minus).expect("generated operators are Hermitian"),
            });
            (
                Some(SignedPair {
                    plus: spinor_json(&plus),
                    minus: spinor_json(&minus),
                }),
                Some(exp),
            )
        }
        None => (None, None),
    };
    OpsDoc {
        b: angles(b),
        c: angles(c),
        a: a.map(angles),
        sigma_c: matrix_json(&ops[0]),
        sigma_x: matrix_json(&ops[1]),
        sigma_y: matrix_json(&ops[2]),
        sigma_squared: matrix_json(&sigma_squared(b, c, SquareMethod::Lande)),
        eigenvectors,
        frame: FrameJson::from(&frame_axes(c)),
        states,
        expectations,
    }
}

pub fn ops(args: &OpsArgs) -> Result<u8, CliError> {
    text_or_json(args.format)?;
    let b = args.b.to_direction(args.degrees)?;
    let c = args.c.to_direction(args.degrees)?;
    let a = args.a.map(|a| a.to_direction(args.degrees)).transpose()?;
    let doc = ops_doc(b, c, a);
    match args.format {
        OutputFormat::Json => print!("{}", json(&doc)),
        _ => print!("{}", ops_text(&doc)),
    }
    Ok(exit::OK)
}

pub fn verify(args: &VerifyArgs) -> Result<u8, CliError> {
    text_or_json(args.format)?;
    let overrides: BTreeMap<String, f64> = match args.tol {
        Some(t) if t.is_nan() => return Err(CliError::Usage("--tol must be a number".into())),
        Some(t) => property_names().into_iter().map(|n| (n.to_string(), t)).collect(),
        None => BTreeMap::new(),
    };
    let report =
        run_suite(args.samples, args.seed, &overrides).map_err(|e| CliError::Usage(e.to_string()))?;
    match args.format {
        OutputFormat::Json => print!("{}", json(&report)),
        _ => print!("{}", report_text(&report)),
    }
    Ok(if report.all_passed {
        exit::OK
    } else {
        exit::PROPERTY_FAILURE
    })
}

pub fn expect(args: &ExpectArgs) -> Result<u8, CliError> {
    text_or_json(args.format)?;
    let a = args.a.to_direction(args.degrees)?;
    let b = args.b.to_direction(args.degrees)?;
    let c = args.c.to_direction(args.degrees)?;
    let s = Sign::from(args.sign);
    let value = expectation(&sigma_c(b, c), &state(s, a, b)).expect("sigma_c is Hermitian");
    let oracle = oracle_expectation(s, a, c);
    let doc = ExpectDoc {
        a: angles(a),
        sign: s.to_string(),
        b: angles(b),
        c: angles(c),
        expectation: value,
        oracle,
        difference: (value - oracle).abs(),
    };
    match args.format {
        OutputFormat::Json => print!("{}", json(&doc)),
        _ => print!("{}", expect_text(&doc)),
    }
    Ok(exit::OK)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta_c: f64,
    pub phi_c: f64,
    pub sigma_c: MatrixJson,
    pub sigma_x: MatrixJson,
    pub sigma_y: MatrixJson,
    pub residual_c: f64,
    pub residual_x: f64,
    pub residual_y: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub b: [f64; 2],
    pub grid: usize,
    pub rows: Vec<SweepRow>,
}

fn eigen_residual(m: &CMatrix2, f: EigFn, b: Direction, c: Direction) -> f64 {
    Sign::BOTH
        .into_iter()
        .map(|s| {
            let v = f(s, b, c);
            m.apply(&v).distance(&v.scale(Complex::new(s.value(), 0.0)))
        })
        .fold(0.0, f64::max)
}

/// Polar angle runs over `[0, pi]` inclusive, azimuth over `[0, 2pi)`.
pub fn sweep_rows(b: Direction, grid: usize) -> Vec<SweepRow> {
    let mut rows = Vec::with_capacity(grid * grid);
    for i in 0..grid {
        let theta = PI * i as f64 / (grid - 1) as f64;
        for j in 0..grid {
            let phi = TAU * j as f64 / grid as f64;
            let c = Direction::raw(theta, phi);
            let ops = operators(b, c);
            rows.push(SweepRow {
                theta_c: theta,
                phi_c: phi,
                sigma_c: matrix_json(&ops[0]),
                sigma_x: matrix_json(&ops[1]),
                sigma_y: matrix_json(&ops[2]),
                residual_c: eigen_residual(&ops[0], EIGEN[0], b, c),
                residual_x: eigen_residual(&ops[1], EIGEN[1], b, c),
                residual_y: eigen_residual(&ops[2], EIGEN[2], b, c),
            });
        }
    }
    rows
}

fn csv_header() -> Vec<String> {
    let mut h = vec!["theta_c".to_string(), "phi_c".to_string()];
    for op in ["sigma_c", "sigma_x", "sigma_y"] {
        for (r, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            h.push(format!("{op}_{r}{c}_re"));
            h.push(format!("{op}_{r}{c}_im"));
        }
    }
    h.extend(["residual_c", "residual_x", "residual_y"].map(String::from));
    h
}

fn csv_record(row: &SweepRow) -> Vec<String> {
    let num = |x: f64| format!("{x:?}");
    let mut rec = vec![num(row.theta_c), num(row.phi_c)];
    for m in [&row.sigma_c, &row.sigma_x, &row.sigma_y] {
        for z in m.iter().flatten() {
            rec.push(num(z[0]));
            rec.push(num(z[1]));
        }
    }
    rec.extend([row.residual_c, row.residual_x, row.residual_y].map(num));
    rec
}

pub fn sweep(args: &SweepArgs) -> Result<u8, CliError> {
    let b = args.b.to_direction(args.degrees)?;
    let rows = sweep_rows(b, args.grid);
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", args.out.display()));
    let file = File::create(&args.out).map_err(io)?;
    match args.format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(file);
            let csv_io = |e: csv::Error| CliError::Io(format!("{}: {e}", args.out.display()));
            w.write_record(csv_header()).map_err(csv_io)?;
            for row in &rows {
                w.write_record(csv_record(row)).map_err(csv_io)?;
            }
            w.flush().map_err(io)?;
        }
        OutputFormat::Json => {
            let doc = SweepDoc {
                b: angles(b),
                grid: args.grid,
                rows,
            };
            let mut w = BufWriter::new(file);
            w.write_all(json(&doc).as_bytes()).map_err(io)?;
            w.flush().map_err(io)?;
        }
        OutputFormat::Text => {
            return Err(CliError::Usage("sweep writes csv or json".into()));
        }
    }
    Ok(exit::OK)
}
