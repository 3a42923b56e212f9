use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use spin_core::oracle::{oracle_amplitude, oracle_eig, oracle_expectation};
use spin_core::{
    amplitude, amplitude_table, compose_amplitudes, eigvec_sigma_c, eigvec_sigma_x,
    eigvec_sigma_y, expectation, frame_axes, normalize_direction, sigma_c, sigma_squared, sigma_x,
    sigma_y, state, unit_vector, CMatrix2, Complex, Direction, ShiftMethod, Sign, SquareMethod,
};

fn direction() -> impl Strategy<Value = Direction> {
    (0.0..=PI, 0.0..TAU).prop_map(|(t, p)| Direction::raw(t, p))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn ops(b: Direction, c: Direction) -> [CMatrix2; 3] {
    [
        sigma_c(b, c),
        sigma_x(b, c, ShiftMethod::Direct),
        sigma_y(b, c, ShiftMethod::Direct),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn normalization_preserves_axis(t in -20.0..20.0f64, p in -20.0..20.0f64) {
        let d = normalize_direction(t, p).unwrap();
        prop_assert!(d.is_canonical());
        prop_assert!(unit_vector(d).max_abs_diff(&unit_vector(Direction::raw(t, p))) < 1e-12);
        prop_assert!((unit_vector(d).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn operators_hermitian_with_unit_spectrum(b in direction(), c in direction()) {
        for m in ops(b, c) {
            prop_assert!(m.hermiticity_deviation() < 1e-12);
            prop_assert!(m.trace().norm() < 1e-10);
            prop_assert!((m.det() + 1.0).norm() < 1e-10);
            prop_assert!((m * m).max_abs_diff(&CMatrix2::identity()) < 1e-10);
        }
    }

    #[test]
    fn su2_relations(b in direction(), c in direction()) {
        let [z, x, y] = ops(b, c);
        let two_i = Complex::new(0.0, 2.0);
        prop_assert!(x.commutator(&y).max_abs_diff(&z.scale(two_i)) < 1e-10);
        prop_assert!(y.commutator(&z).max_abs_diff(&x.scale(two_i)) < 1e-10);
        prop_assert!(z.commutator(&x).max_abs_diff(&y.scale(two_i)) < 1e-10);
        prop_assert!(x.anticommutator(&y).max_abs_diff(&CMatrix2::zero()) < 1e-10);
    }

    #[test]
    fn eigenvectors_satisfy_their_equations(b in direction(), c in direction(), s in sign()) {
        let [z, x, y] = ops(b, c);
        let lambda = Complex::new(s.value(), 0.0);
        for (m, v) in [
            (z, eigvec_sigma_c(s, b, c)),
            (x, eigvec_sigma_x(s, b, c)),
            (y, eigvec_sigma_y(s, b, c)),
        ] {
            prop_assert!((v.norm() - 1.0).abs() < 1e-12);
            prop_assert!(m.apply(&v).distance(&v.scale(lambda)) < 1e-12);
        }
    }

    #[test]
    fn composition_and_unitarity(a in direction(), b in direction(), c in direction()) {
        let composed = compose_amplitudes(&amplitude_table(a, b), &amplitude_table(b, c)).unwrap();
        prop_assert!(composed.matrix.max_abs_diff(&amplitude_table(a, c).matrix) < 1e-12);
        prop_assert!(amplitude_table(a, b).unitarity_deviation() < 1e-12);
    }

    #[test]
    fn amplitude_moduli_match_oracle(d1 in direction(), d2 in direction(), m in sign(), n in sign()) {
        let ours = amplitude(m, d1, n, d2);
        let theirs = oracle_amplitude(m, d1, n, d2);
        prop_assert!((ours.norm_sqr() - theirs.norm_sqr()).abs() < 1e-12);
        prop_assert!((ours - amplitude(n, d2, m, d1).conj()).norm() < 1e-15);
    }

    #[test]
    fn expectation_is_geometric(a in direction(), b in direction(), c in direction(), s in sign()) {
        let e = expectation(&sigma_c(b, c), &state(s, a, b)).unwrap();
        prop_assert!((e - oracle_expectation(s, a, c)).abs() < 1e-10);
    }

    #[test]
    fn eigensolver_agrees_up_to_phase(b in direction(), c in direction()) {
        let split = oracle_eig(&sigma_c(b, c)).unwrap();
        prop_assert!((split.upper.value - 1.0).abs() < 1e-10);
        let up = split.upper.vector.inner(&eigvec_sigma_c(Sign::Plus, b, c)).norm();
        let down = split.lower.vector.inner(&eigvec_sigma_c(Sign::Minus, b, c)).norm();
        prop_assert!((1.0 - up).abs() < 1e-12 && (1.0 - down).abs() < 1e-12);
    }

    #[test]
    fn squared_spin_is_scalar(b in direction(), c in direction()) {
        let three = CMatrix2::identity().scale_real(3.0);
        prop_assert!(sigma_squared(b, c, SquareMethod::Lande).max_abs_diff(&three) < 1e-12);
        prop_assert!(sigma_squared(b, c, SquareMethod::ComponentSum).max_abs_diff(&three) < 1e-12);
    }

    #[test]
    fn frame_is_right_handed(c in direction()) {
        let f = frame_axes(c);
        prop_assert!(f.orthonormality_deviation() < 1e-12);
        prop_assert!(f.handedness_deviation() < 1e-12);
    }
}
