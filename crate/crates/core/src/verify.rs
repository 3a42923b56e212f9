//! The property catalogue: every identity the operators, eigenvectors,
//! amplitudes and frames must satisfy, evaluated over seeded random
//! directions.
//!
//! Each property draws from its own sub-stream of the seed (indexed by its
//! position in the catalogue), so a report depends only on
//! `(samples, seed, overrides)` and not on evaluation order.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::amplitude::{amplitude, amplitude_table, compose_amplitudes};
use crate::direction::{Direction, Sign};
use crate::error::SpinError;
use crate::frame::frame_axes;
use crate::linalg::{CMatrix2, Complex, Spinor2};
use crate::operators::{
    build_observable_matrix, literature_form, shift_x, shift_y, sigma_c, sigma_squared, sigma_x,
    sigma_y, Rvalues, ShiftMethod, SquareMethod,
};
use crate::oracle::{oracle_amplitude, oracle_eig, oracle_expectation};
use crate::sampling::{random_direction, random_sign, random_unit_spinor, stream_rng};
use crate::spinors::{eigvec_sigma_c, eigvec_sigma_x, eigvec_sigma_y, expectation, state};

use rand::Rng;

/// Intermediate directions drawn per `(a, c)` pair by the b-independence check.
pub const B_DRAWS_PER_PAIR: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub paper_anchor: String,
    pub samples: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub total_samples: usize,
    pub all_passed: bool,
    pub results: Vec<PropertyResult>,
}

impl VerificationReport {
    pub fn get(&self, name: &str) -> Option<&PropertyResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

/// Property names every report must contain.
pub const MANIFEST: &[&str] = &[
    "amplitude_composition",
    "amplitude_hermiticity",
    "amplitude_unitarity",
    "amplitude_repeatability",
    "constructor_equivalence",
    "constant_observable",
    "operator_hermiticity",
    "operator_spectrum",
    "operator_involution",
    "pauli_limit",
    "literature_form",
    "literature_form_z_basis_gauge",
    "eigen_equation_c",
    "eigen_equation_x",
    "eigen_equation_y",
    "eigenvector_orthonormality",
    "shift_equivalence_x",
    "shift_equivalence_y",
    "shift_equivalence_eigenvectors",
    "state_orthonormality",
    "expectation_b_independence",
    "expectation_geometric_oracle",
    "frame_orthonormality",
    "frame_cross_products",
    "sigma_squared_lande",
    "sigma_squared_component_sum",
    "sigma_squared_eigenvalue",
    "su2_commutators",
    "su2_anticommutators",
    "oracle_amplitude_modulus",
    "oracle_eigensolver_residual",
    "oracle_eigenvalues",
    "oracle_eigenvector_overlap",
];

/// Sign and labelling conventions, rendered with text reports.
pub const ERRATA: &[&str] = &[
    "sigma_y (1,2) is -cos(theta) sin(phi'-phi) - i cos(phi'-phi), the Hermitian partner of (2,1); \
     the shifted construction reproduces this sign",
    "the (2,2) element produced by the y shift belongs to sigma_y",
    "unit vector c = (sin t' cos p', sin t' sin p', cos t'), with p' in both transverse components",
    "b = z does not reproduce the textbook sigma.c: the off-diagonals come out negated because the \
     down basis vector along z is (0, -1) in this amplitude convention (see literature_form vs \
     literature_form_z_basis_gauge)",
];

type Check = fn(&mut ChaCha8Rng, usize) -> f64;

struct Property {
    name: &'static str,
    anchor: &'static str,
    tolerance: f64,
    check: Check,
}

/// Running maximum in which NaN counts as an unbounded deviation.
#[derive(Default)]
struct MaxDev(f64);

impl MaxDev {
    fn push(&mut self, x: f64) {
        self.0 = if x.is_nan() { f64::MAX } else { self.0.max(x) };
    }
}

fn each(n: usize, mut f: impl FnMut(&mut MaxDev)) -> f64 {
    let mut dev = MaxDev::default();
    for _ in 0..n {
        f(&mut dev);
    }
    dev.0
}

fn three_ops(b: Direction, c: Direction) -> [CMatrix2; 3] {
    [
        sigma_c(b, c),
        sigma_x(b, c, ShiftMethod::Direct),
        sigma_y(b, c, ShiftMethod::Direct),
    ]
}

type EigFn = fn(Sign, Direction, Direction) -> Spinor2;

fn eigen_check(rng: &mut ChaCha8Rng, n: usize, which: usize) -> f64 {
    each(n, |dev| {
        let b = random_direction(rng);
        let c = random_direction(rng);
        let (m, f): (CMatrix2, EigFn) = match which {
            0 => (sigma_c(b, c), eigvec_sigma_c),
            1 => (sigma_x(b, c, ShiftMethod::Direct), eigvec_sigma_x),
            _ => (sigma_y(b, c, ShiftMethod::Direct), eigvec_sigma_y),
        };
        for s in Sign::BOTH {
            let v = f(s, b, c);
            dev.push(m.apply(&v).distance(&v.scale(Complex::new(s.value(), 0.0))));
        }
    })
}

fn catalogue() -> Vec<Property> {
    vec![
        Property {
            name: "amplitude_composition",
            anchor: "amplitude composition law through a complete intermediate observable",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (a, b, c) = (random_direction(rng), random_direction(rng), random_direction(rng));
                    let composed = compose_amplitudes(&amplitude_table(a, b), &amplitude_table(b, c))
                        .expect("shared intermediate");
                    dev.push(composed.matrix.max_abs_diff(&amplitude_table(a, c).matrix));
                })
            },
        },
        Property {
            name: "amplitude_hermiticity",
            anchor: "two-way symmetry of transition amplitudes",
            tolerance: 1e-15,
            check: |rng, n| {
                each(n, |dev| {
                    let (d1, d2) = (random_direction(rng), random_direction(rng));
                    for m in Sign::BOTH {
                        for k in Sign::BOTH {
                            let fwd = amplitude(m, d1, k, d2);
                            let back = amplitude(k, d2, m, d1);
                            dev.push((fwd - back.conj()).norm());
                        }
                    }
                })
            },
        },
        Property {
            name: "amplitude_unitarity",
            anchor: "completeness of amplitude tables (M M^dagger = I)",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let t = amplitude_table(random_direction(rng), random_direction(rng));
                    dev.push(t.unitarity_deviation());
                })
            },
        },
        Property {
            name: "amplitude_repeatability",
            anchor: "repeated measurement along one axis reproduces the outcome",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let d = random_direction(rng);
                    dev.push(amplitude_table(d, d).matrix.max_abs_diff(&CMatrix2::identity()));
                })
            },
        },
        Property {
            name: "constructor_equivalence",
            anchor: "observable elements from amplitude products with r = (1, -1) equal the closed-form sigma_c",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    dev.push(build_observable_matrix(b, c, Rvalues::SPIN).max_abs_diff(&sigma_c(b, c)));
                })
            },
        },
        Property {
            name: "constant_observable",
            anchor: "observable with r1 = r2 = k is k times identity",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let k = rng.random_range(-5.0..5.0);
                    let m = build_observable_matrix(b, c, Rvalues::new(k, k));
                    dev.push(m.max_abs_diff(&CMatrix2::identity().scale_real(k)));
                })
            },
        },
        Property {
            name: "operator_hermiticity",
            anchor: "sigma_c, sigma_x, sigma_y are Hermitian",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for m in three_ops(b, c) {
                        dev.push(m.hermiticity_deviation());
                    }
                })
            },
        },
        Property {
            name: "operator_spectrum",
            anchor: "trace 0 and determinant -1 (eigenvalues +1 and -1)",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for m in three_ops(b, c) {
                        dev.push(m.trace().norm());
                        dev.push((m.det() + 1.0).norm());
                    }
                })
            },
        },
        Property {
            name: "operator_involution",
            anchor: "each spin component squares to identity",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for m in three_ops(b, c) {
                        dev.push((m * m).max_abs_diff(&CMatrix2::identity()));
                    }
                })
            },
        },
        Property {
            name: "pauli_limit",
            anchor: "b = c recovers the Pauli matrices",
            tolerance: 1e-15,
            check: |rng, n| {
                each(n, |dev| {
                    let d = random_direction(rng);
                    let [z, x, y] = three_ops(d, d);
                    dev.push(z.max_abs_diff(&CMatrix2::pauli_z()));
                    dev.push(x.max_abs_diff(&CMatrix2::pauli_x()));
                    dev.push(y.max_abs_diff(&CMatrix2::pauli_y()));
                })
            },
        },
        Property {
            name: "literature_form",
            anchor: "b along +z claimed to give the textbook sigma.c entrywise",
            tolerance: 1e-15,
            check: |rng, n| {
                each(n, |dev| {
                    let c = random_direction(rng);
                    dev.push(sigma_c(Direction::z_axis(), c).max_abs_diff(&literature_form(c)));
                })
            },
        },
        Property {
            name: "literature_form_z_basis_gauge",
            anchor: "b along +z gives diag(1,-1) sigma.c diag(1,-1)",
            tolerance: 1e-15,
            check: |rng, n| {
                each(n, |dev| {
                    let c = random_direction(rng);
                    let z = CMatrix2::pauli_z();
                    let gauged = z * literature_form(c) * z;
                    dev.push(sigma_c(Direction::z_axis(), c).max_abs_diff(&gauged));
                })
            },
        },
        Property {
            name: "eigen_equation_c",
            anchor: "sigma_c xi_c(+/-) = +/- xi_c(+/-)",
            tolerance: 1e-12,
            check: |rng, n| eigen_check(rng, n, 0),
        },
        Property {
            name: "eigen_equation_x",
            anchor: "sigma_x xi_x(+/-) = +/- xi_x(+/-), checked by direct calculation",
            tolerance: 1e-12,
            check: |rng, n| eigen_check(rng, n, 1),
        },
        Property {
            name: "eigen_equation_y",
            anchor: "sigma_y xi_y(+/-) = +/- xi_y(+/-), checked by direct calculation",
            tolerance: 1e-12,
            check: |rng, n| eigen_check(rng, n, 2),
        },
        Property {
            name: "eigenvector_orthonormality",
            anchor: "eigenvectors of each component are unit and mutually orthogonal",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for f in [eigvec_sigma_c as EigFn, eigvec_sigma_x, eigvec_sigma_y] {
                        let (p, m) = (f(Sign::Plus, b, c), f(Sign::Minus, b, c));
                        dev.push((p.norm() - 1.0).abs());
                        dev.push((m.norm() - 1.0).abs());
                        dev.push(p.inner(&m).norm());
                    }
                })
            },
        },
        Property {
            name: "shift_equivalence_x",
            anchor: "theta' -> theta' - pi/2 in sigma_c gives sigma_x",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let d = sigma_x(b, c, ShiftMethod::Direct)
                        .max_abs_diff(&sigma_x(b, c, ShiftMethod::Shifted));
                    dev.push(d);
                })
            },
        },
        Property {
            name: "shift_equivalence_y",
            anchor: "theta' = pi/2, phi' -> phi' - pi/2 in sigma_c gives sigma_y",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let d = sigma_y(b, c, ShiftMethod::Direct)
                        .max_abs_diff(&sigma_y(b, c, ShiftMethod::Shifted));
                    dev.push(d);
                })
            },
        },
        Property {
            name: "shift_equivalence_eigenvectors",
            anchor: "the same angle shifts carry xi_c(+/-) into xi_x(+/-) and xi_y(+/-)",
            tolerance: 1e-15,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for s in Sign::BOTH {
                        dev.push(eigvec_sigma_x(s, b, c).max_abs_diff(&eigvec_sigma_c(s, b, shift_x(c))));
                        dev.push(eigvec_sigma_y(s, b, c).max_abs_diff(&eigvec_sigma_c(s, b, shift_y(c))));
                    }
                })
            },
        },
        Property {
            name: "state_orthonormality",
            anchor: "prepared states are unit and opposite projections are orthogonal",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (a, b) = (random_direction(rng), random_direction(rng));
                    let (p, m) = (state(Sign::Plus, a, b), state(Sign::Minus, a, b));
                    dev.push((p.norm() - 1.0).abs());
                    dev.push((m.norm() - 1.0).abs());
                    dev.push(p.inner(&m).norm());
                })
            },
        },
        Property {
            name: "expectation_b_independence",
            anchor: "expectation value of the spin projection does not depend on the intermediate direction",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (a, c, s) = (random_direction(rng), random_direction(rng), random_sign(rng));
                    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                    for _ in 0..B_DRAWS_PER_PAIR {
                        let b = random_direction(rng);
                        let e = expectation(&sigma_c(b, c), &state(s, a, b)).unwrap_or(f64::NAN);
                        lo = lo.min(e);
                        hi = hi.max(e);
                    }
                    dev.push(hi - lo);
                })
            },
        },
        Property {
            name: "expectation_geometric_oracle",
            anchor: "expectation value of the spin projection equals +/- a.c",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (a, b, c, s) = (
                        random_direction(rng),
                        random_direction(rng),
                        random_direction(rng),
                        random_sign(rng),
                    );
                    let e = expectation(&sigma_c(b, c), &state(s, a, b)).unwrap_or(f64::NAN);
                    dev.push((e - oracle_expectation(s, a, c)).abs());
                })
            },
        },
        Property {
            name: "frame_orthonormality",
            anchor: "c, c_x, c_y are mutually orthogonal unit vectors",
            tolerance: 1e-12,
            check: |rng, n| each(n, |dev| dev.push(frame_axes(random_direction(rng)).orthonormality_deviation())),
        },
        Property {
            name: "frame_cross_products",
            anchor: "c_x x c_y = c, c_y x c = c_x, c x c_x = c_y",
            tolerance: 1e-12,
            check: |rng, n| each(n, |dev| dev.push(frame_axes(random_direction(rng)).handedness_deviation())),
        },
        Property {
            name: "sigma_squared_lande",
            anchor: "squared spin from amplitude products collapses to 3 times identity",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let m = sigma_squared(b, c, SquareMethod::Lande);
                    dev.push(m.max_abs_diff(&CMatrix2::identity().scale_real(3.0)));
                })
            },
        },
        Property {
            name: "sigma_squared_component_sum",
            anchor: "sum of squared components is 3 times identity",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let m = sigma_squared(b, c, SquareMethod::ComponentSum);
                    dev.push(m.max_abs_diff(&CMatrix2::identity().scale_real(3.0)));
                })
            },
        },
        Property {
            name: "sigma_squared_eigenvalue",
            anchor: "every spinor is an eigenvector of the squared spin with eigenvalue 3",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let v = random_unit_spinor(rng);
                    let m = sigma_squared(b, c, SquareMethod::Lande);
                    dev.push(m.apply(&v).distance(&v.scale(Complex::new(3.0, 0.0))));
                })
            },
        },
        Property {
            name: "su2_commutators",
            anchor: "derived check, not claimed by the source: [x,y] = 2i c, [y,c] = 2i x, [c,x] = 2i y",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let [z, x, y] = three_ops(b, c);
                    let two_i = Complex::new(0.0, 2.0);
                    dev.push(x.commutator(&y).max_abs_diff(&z.scale(two_i)));
                    dev.push(y.commutator(&z).max_abs_diff(&x.scale(two_i)));
                    dev.push(z.commutator(&x).max_abs_diff(&y.scale(two_i)));
                })
            },
        },
        Property {
            name: "su2_anticommutators",
            anchor: "derived check, not claimed by the source: distinct components anticommute",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let [z, x, y] = three_ops(b, c);
                    let zero = CMatrix2::zero();
                    dev.push(x.anticommutator(&y).max_abs_diff(&zero));
                    dev.push(y.anticommutator(&z).max_abs_diff(&zero));
                    dev.push(z.anticommutator(&x).max_abs_diff(&zero));
                })
            },
        },
        Property {
            name: "oracle_amplitude_modulus",
            anchor: "transition probabilities match textbook z-basis spinor overlaps",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (d1, d2) = (random_direction(rng), random_direction(rng));
                    for m in Sign::BOTH {
                        for k in Sign::BOTH {
                            let ours = amplitude(m, d1, k, d2).norm_sqr();
                            let theirs = oracle_amplitude(m, d1, k, d2).norm_sqr();
                            dev.push((ours - theirs).abs());
                        }
                    }
                })
            },
        },
        Property {
            name: "oracle_eigensolver_residual",
            anchor: "reference eigensolver residual |M v - lambda v| on all three components",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for m in three_ops(b, c) {
                        match oracle_eig(&m) {
                            Ok(split) => {
                                for p in split.pairs() {
                                    let lv = p.vector.scale(Complex::new(p.value, 0.0));
                                    dev.push(m.apply(&p.vector).distance(&lv));
                                }
                            }
                            Err(_) => dev.push(f64::NAN),
                        }
                    }
                })
            },
        },
        Property {
            name: "oracle_eigenvalues",
            anchor: "reference eigensolver finds eigenvalues +1 and -1 for every component",
            tolerance: 1e-10,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    for m in three_ops(b, c) {
                        match oracle_eig(&m) {
                            Ok(split) => {
                                dev.push((split.upper.value - 1.0).abs());
                                dev.push((split.lower.value + 1.0).abs());
                            }
                            Err(_) => dev.push(f64::NAN),
                        }
                    }
                })
            },
        },
        Property {
            name: "oracle_eigenvector_overlap",
            anchor: "closed-form eigenvectors match the reference eigensolver up to a global phase",
            tolerance: 1e-12,
            check: |rng, n| {
                each(n, |dev| {
                    let (b, c) = (random_direction(rng), random_direction(rng));
                    let ops: [(CMatrix2, EigFn); 3] = [
                        (sigma_c(b, c), eigvec_sigma_c),
                        (sigma_x(b, c, ShiftMethod::Direct), eigvec_sigma_x),
                        (sigma_y(b, c, ShiftMethod::Direct), eigvec_sigma_y),
                    ];
                    for (m, f) in ops {
                        match oracle_eig(&m) {
                            Ok(split) => {
                                let up = split.upper.vector.inner(&f(Sign::Plus, b, c)).norm();
                                let down = split.lower.vector.inner(&f(Sign::Minus, b, c)).norm();
                                dev.push((1.0 - up).abs());
                                dev.push((1.0 - down).abs());
                            }
                            Err(_) => dev.push(f64::NAN),
                        }
                    }
                })
            },
        },
    ]
}

/// Names of the properties in catalogue order.
pub fn property_names() -> Vec<&'static str> {
    catalogue().iter().map(|p| p.name).collect()
}

fn evaluate(
    index: usize,
    prop: &Property,
    samples: usize,
    seed: u64,
    overrides: &BTreeMap<String, f64>,
) -> PropertyResult {
    let mut rng = stream_rng(seed, index as u64);
    let max_deviation = (prop.check)(&mut rng, samples);
    let tolerance = overrides.get(prop.name).copied().unwrap_or(prop.tolerance);
    PropertyResult {
        name: prop.name.to_string(),
        paper_anchor: prop.anchor.to_string(),
        samples,
        max_deviation,
        tolerance,
        passed: max_deviation <= tolerance,
    }
}

/// Runs every property with `samples` random draws each.
///
/// `overrides` replaces the built-in tolerance of the named properties.
/// Properties are evaluated independently; a failure does not stop the run.
pub fn run_suite(
    samples: usize,
    seed: u64,
    overrides: &BTreeMap<String, f64>,
) -> Result<VerificationReport, SpinError> {
    if samples == 0 {
        return Err(SpinError::ZeroSamples);
    }
    let props = catalogue();

    #[cfg(feature = "parallel")]
    let mut results: Vec<PropertyResult> = {
        use rayon::prelude::*;
        props
            .par_iter()
            .enumerate()
            .map(|(i, p)| evaluate(i, p, samples, seed, overrides))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut results: Vec<PropertyResult> = props
        .iter()
        .enumerate()
        .map(|(i, p)| evaluate(i, p, samples, seed, overrides))
        .collect();

    let missing = MANIFEST
        .iter()
        .filter(|name| !results.iter().any(|r| r.name == **name))
        .count();
    if missing > 0 {
        results.push(PropertyResult {
            name: "manifest_coverage".to_string(),
            paper_anchor: "every catalogued property is present".to_string(),
            samples: 0,
            max_deviation: missing as f64,
            tolerance: 0.0,
            passed: false,
        });
    }

    let total_samples = results.iter().map(|r| r.samples).sum();
    let all_passed = results.iter().all(|r| r.passed);
    Ok(VerificationReport {
        seed,
        total_samples,
        all_passed,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_matches_manifest() {
        let names = property_names();
        for m in MANIFEST {
            assert!(names.contains(m), "missing {m}");
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate property names");
    }

    #[test]
    fn zero_samples_rejected() {
        assert_eq!(run_suite(0, 1, &BTreeMap::new()), Err(SpinError::ZeroSamples));
    }

    #[test]
    fn single_sample_report_is_structural() {
        let r = run_suite(1, 0, &BTreeMap::new()).unwrap();
        assert!(r.results.len() >= 14);
        assert_eq!(r.total_samples, r.results.len());
        for p in &r.results {
            assert_eq!(p.passed, p.max_deviation <= p.tolerance);
        }
        assert_eq!(r.all_passed, r.results.iter().all(|p| p.passed));
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = run_suite(50, 9, &BTreeMap::new()).unwrap();
        let b = run_suite(50, 9, &BTreeMap::new()).unwrap();
        assert_eq!(a, b);
        let c = run_suite(50, 10, &BTreeMap::new()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn override_changes_verdict() {
        let mut o = BTreeMap::new();
        o.insert("pauli_limit".to_string(), -1.0);
        let r = run_suite(5, 3, &o).unwrap();
        let p = r.get("pauli_limit").unwrap();
        assert_eq!(p.tolerance, -1.0);
        assert!(!p.passed);
    }

    #[test]
    fn nan_counts_as_failure() {
        let mut d = MaxDev::default();
        d.push(1e-3);
        d.push(f64::NAN);
        d.push(0.5);
        assert_eq!(d.0, f64::MAX);
    }
}
