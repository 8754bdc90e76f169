mod common;

use std::f64::consts::FRAC_PI_2;

use common::{adaptive_quad, poly_eval, poly_trig_moment, Kernel};
use osctrig_core::quadrature::{
    error_factor, filon_cosine, filon_error_bound, filon_sine, filon_sine_shifted, lobatto5,
    piecewise_quadratic_bound, trapezoid, FilonCoefficients,
};
use proptest::prelude::*;

#[test]
fn quadratic_exactness_across_frequencies() {
    let quadratics: [[f64; 3]; 4] = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.7, -2.0, 3.5]];
    for k in [1.0, 10.0, 40.0, 100.0, 1000.0] {
        for q in &quadratics {
            let psi = |x: f64| poly_eval(q, x);
            let es = poly_trig_moment(q, k, 0.0, 1.0, Kernel::Sin);
            let ec = poly_trig_moment(q, k, 0.0, 1.0, Kernel::Cos);
            let s = filon_sine(psi, 0.0, 1.0, k, 5).unwrap();
            let c = filon_cosine(psi, 0.0, 1.0, k, 5).unwrap();
            assert!((s - es).abs() <= 1e-10 * es.abs().max(1e-3), "sin k={k} {q:?}: {s} vs {es}");
            assert!((c - ec).abs() <= 1e-10 * ec.abs().max(1e-3), "cos k={k} {q:?}: {c} vs {ec}");
        }
    }
}

#[test]
fn linear_amplitude_closed_forms() {
    let k = 20.0f64;
    let s = filon_sine(|x| x, 0.0, 1.0, k, 5).unwrap();
    let c = filon_cosine(|x| x, 0.0, 1.0, k, 5).unwrap();
    // ψ''' = 0, so the error bound is zero and only rounding remains
    assert!((s - (k.sin() - k * k.cos()) / 400.0).abs() < 1e-14);
    assert!((c - ((k.cos() - 1.0) / 400.0 + k.sin() / k)).abs() < 1e-14);
}

#[test]
fn cubic_error_within_bound() {
    // ψ = x³/6 so M = 1; θ = 0.5 with h = 0.25
    let psi = |x: f64| x.powi(3) / 6.0;
    let cubic = [0.0, 0.0, 0.0, 1.0 / 6.0];
    let bound = filon_error_bound(0.5, 1.0, 0.0, 1.0, 0.25).unwrap();
    assert_eq!(bound.bound, error_factor(0.5) * 0.015625);
    let es = (filon_sine(psi, 0.0, 1.0, 2.0, 5).unwrap() - poly_trig_moment(&cubic, 2.0, 0.0, 1.0, Kernel::Sin)).abs();
    let ec = (filon_cosine(psi, 0.0, 1.0, 2.0, 5).unwrap() - poly_trig_moment(&cubic, 2.0, 0.0, 1.0, Kernel::Cos)).abs();
    assert!(es <= bound.bound, "{es} > {}", bound.bound);
    assert!(ec <= bound.bound, "{ec} > {}", bound.bound);
}

#[test]
fn cubic_bound_is_attained_on_an_aligned_panel_pair() {
    // one panel pair centred where cos(kc) = 1: the error equals the bound
    let psi = |x: f64| x.powi(3) / 6.0;
    let cubic = [0.0, 0.0, 0.0, 1.0 / 6.0];
    let (k, h) = (2.0, 0.25);
    let c = std::f64::consts::PI;
    let (a, b) = (c - h, c + h);
    let got = filon_sine(psi, a, b, k, 3).unwrap();
    let err = (got - poly_trig_moment(&cubic, k, a, b, Kernel::Sin)).abs();
    let bound = filon_error_bound(k * h, 1.0, a, b, h).unwrap().bound;
    assert!(err <= bound * (1.0 + 1e-6), "{err} vs {bound}");
    assert!(err >= bound * (1.0 - 1e-6), "{err} vs {bound}");
}

#[test]
fn error_factor_limit() {
    for t in [1e-8, 1e-5, 1e-3] {
        assert!((45.0 * error_factor(t) / t - 1.0).abs() <= t);
    }
    assert_eq!(error_factor(0.0), 0.0);
}

#[test]
fn piecewise_quadratic_bound_holds_for_large_theta() {
    let psi = |x: f64| x.powi(3) / 6.0;
    let cubic = [0.0, 0.0, 0.0, 1.0 / 6.0];
    let bound = piecewise_quadratic_bound(1.0, 0.0, 1.0, 0.25);
    for k in [4.0, 40.0, 400.0] {
        let es = (filon_sine(psi, 0.0, 1.0, k, 5).unwrap() - poly_trig_moment(&cubic, k, 0.0, 1.0, Kernel::Sin)).abs();
        let ec = (filon_cosine(psi, 0.0, 1.0, k, 5).unwrap() - poly_trig_moment(&cubic, k, 0.0, 1.0, Kernel::Cos)).abs();
        assert!(es <= bound && ec <= bound, "k = {k}: {es}, {ec} vs {bound}");
    }
}

#[test]
fn coefficients_continuous_across_series_switch() {
    for i in 0..=200 {
        let t = 0.9 + 0.2 * i as f64 / 200.0;
        let s = FilonCoefficients::series(t);
        let d = FilonCoefficients::direct(t);
        for (x, y) in [(s.alpha, d.alpha), (s.beta, d.beta), (s.gamma, d.gamma)] {
            assert!((x - y).abs() <= 1e-12 * y.abs(), "theta = {t}");
        }
    }
}

#[test]
fn lobatto_on_oscillatory_integrand() {
    let reference = adaptive_quad(|x| (50.0 * x).sin(), 0.0, 1.0, 1e-14);
    assert!((reference - (1.0 - 50f64.cos()) / 50.0).abs() < 1e-13);
    let err = (lobatto5(|x| (50.0 * x).sin(), 0.0, 1.0).unwrap() - reference).abs();
    println!("lobatto5 error on sin(50x) over [0, 1]: {err:.3e}");
    assert!(err > 1e-3);
}

#[test]
fn filon_beats_generic_rules_when_kernel_is_unresolved() {
    let family: [(&str, fn(f64) -> f64); 4] = [
        ("1", |_| 1.0),
        ("x", |x| x),
        ("x^2", |x| x * x),
        ("cos3x", |x| (3.0 * x).cos()),
    ];
    let h_quad = 0.25;
    for k in [10.0, 20.0, 50.0, 100.0, 1000.0] {
        assert!(k * h_quad > 2.0);
        for (name, psi) in family {
            let exact = adaptive_quad(|x| psi(x) * (k * x).sin(), 0.0, 1.0, 1e-14);
            let filon = (filon_sine(psi, 0.0, 1.0, k, 5).unwrap() - exact).abs();
            let trap = (trapezoid(|x| psi(x) * (k * x).sin(), 0.0, 1.0, 5).unwrap() - exact).abs();
            assert!(filon <= trap, "k={k} psi={name}: filon {filon:.2e} trap {trap:.2e}");
            // the interpolation error of cos(3x) does not depend on k
            assert!(filon <= piecewise_quadratic_bound(27.0, 0.0, 1.0, h_quad) + 1e-14);
        }
    }
}

fn smooth_amplitude() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, 0.0..6.0f64)
}

proptest! {
    #[test]
    fn random_quadratics_are_exact(c0 in -5.0..5.0f64, c1 in -5.0..5.0f64, c2 in -5.0..5.0f64,
                                   k in prop::sample::select(vec![1.0, 10.0, 100.0, 1000.0]),
                                   a in -1.0..1.0f64, len in 0.1..2.0f64) {
        let q = [c0, c1, c2];
        let b = a + len;
        let es = poly_trig_moment(&q, k, a, b, Kernel::Sin);
        let ec = poly_trig_moment(&q, k, a, b, Kernel::Cos);
        let s = filon_sine(|x| poly_eval(&q, x), a, b, k, 5).unwrap();
        let c = filon_cosine(|x| poly_eval(&q, x), a, b, k, 5).unwrap();
        prop_assert!((s - es).abs() <= 1e-9 * (1.0 + es.abs()));
        prop_assert!((c - ec).abs() <= 1e-9 * (1.0 + ec.abs()));
    }

    #[test]
    fn cosine_rule_is_the_shifted_sine_rule((c0, c1, c2, d) in smooth_amplitude(),
                                            k in 0.5..50.0f64, a in -1.0..1.0f64, len in 0.05..1.0f64,
                                            nodes in prop::sample::select(vec![3usize, 5, 9])) {
        let psi = |x: f64| c0 + c1 * x + c2 * (d * x).sin();
        let b = a + len;
        let direct = filon_cosine(psi, a, b, k, nodes).unwrap();
        let shifted = filon_sine_shifted(psi, a, b, k, FRAC_PI_2, nodes).unwrap();
        prop_assert!((direct - shifted).abs() <= 1e-13, "{} vs {}", direct, shifted);
    }

    #[test]
    fn rules_are_linear((c0, c1, c2, d) in smooth_amplitude(), k in 0.0..200.0f64) {
        let f = |x: f64| c0 + c1 * x * x;
        let g = |x: f64| c2 * (d * x).cos();
        let fg = |x: f64| f(x) + g(x);
        let tol = |x: f64| 1e-14 * (1.0 + x.abs()) * 10.0;
        let pairs = [
            (filon_sine(fg, 0.0, 1.0, k, 5).unwrap(), filon_sine(f, 0.0, 1.0, k, 5).unwrap() + filon_sine(g, 0.0, 1.0, k, 5).unwrap()),
            (filon_cosine(fg, 0.0, 1.0, k, 5).unwrap(), filon_cosine(f, 0.0, 1.0, k, 5).unwrap() + filon_cosine(g, 0.0, 1.0, k, 5).unwrap()),
            (lobatto5(fg, 0.0, 1.0).unwrap(), lobatto5(f, 0.0, 1.0).unwrap() + lobatto5(g, 0.0, 1.0).unwrap()),
            (trapezoid(fg, 0.0, 1.0, 5).unwrap(), trapezoid(f, 0.0, 1.0, 5).unwrap() + trapezoid(g, 0.0, 1.0, 5).unwrap()),
        ];
        for (whole, parts) in pairs {
            prop_assert!((whole - parts).abs() <= tol(parts));
        }
    }
}
