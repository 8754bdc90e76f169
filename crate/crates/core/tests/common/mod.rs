//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's quadrature or integrator code.
#![allow(dead_code)]

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Sin,
    Cos,
}

/// Antiderivative of `x^p sin(kx)` or `x^p cos(kx)` for `p <= 3`, `k != 0`.
fn antiderivative(p: usize, k: f64, x: f64, kernel: Kernel) -> f64 {
    let (s, c) = (k * x).sin_cos();
    let (k2, k3, k4) = (k * k, k * k * k, k * k * k * k);
    match (kernel, p) {
        (Kernel::Sin, 0) => -c / k,
        (Kernel::Sin, 1) => s / k2 - x * c / k,
        (Kernel::Sin, 2) => 2.0 * x * s / k2 + (2.0 / k3 - x * x / k) * c,
        (Kernel::Sin, 3) => (3.0 * x * x / k2 - 6.0 / k4) * s + (6.0 * x / k3 - x * x * x / k) * c,
        (Kernel::Cos, 0) => s / k,
        (Kernel::Cos, 1) => c / k2 + x * s / k,
        (Kernel::Cos, 2) => 2.0 * x * c / k2 + (x * x / k - 2.0 / k3) * s,
        (Kernel::Cos, 3) => (3.0 * x * x / k2 - 6.0 / k4) * c + (x * x * x / k - 6.0 * x / k3) * s,
        _ => panic!("degree {p} not supported"),
    }
}

/// `∫_a^b (Σ c_p x^p) kernel(kx) dx` from closed-form antiderivatives.
pub fn poly_trig_moment(coeffs: &[f64], k: f64, a: f64, b: f64, kernel: Kernel) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(p, &c)| c * (antiderivative(p, k, b, kernel) - antiderivative(p, k, a, kernel)))
        .sum()
}

pub fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (h * kronrod, (h * (kronrod - gauss)).abs())
}

/// Adaptive Gauss–Kronrod 7/15 quadrature to absolute tolerance `tol`.
pub fn adaptive_quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, err) = gk15(f, a, b);
        if err <= tol || depth == 0 {
            return v;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }
    recurse(&f, a, b, tol, 40)
}

/// Dormand–Prince 5(4) with adaptive steps for `y' = f(t, y)` in two
/// dimensions. Returns `y(t1)`.
pub fn dopri45<F: Fn(f64, [f64; 2]) -> [f64; 2]>(f: F, y0: [f64; 2], t0: f64, t1: f64, tol: f64) -> [f64; 2] {
    const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 7] = [
        [0.0; 6],
        [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
        [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
        [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
    ];
    const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];
    let mut t = t0;
    let mut y = y0;
    let mut h = (t1 - t0) * 1e-3;
    while t < t1 {
        if t + h > t1 {
            h = t1 - t;
        }
        let mut k = [[0.0f64; 2]; 7];
        for i in 0..7 {
            let mut yi = y;
            for j in 0..i {
                yi[0] += h * A[i][j] * k[j][0];
                yi[1] += h * A[i][j] * k[j][1];
            }
            k[i] = f(t + C[i] * h, yi);
        }
        let mut y5 = y;
        let mut err = 0.0f64;
        for d in 0..2 {
            let mut e = 0.0;
            for i in 0..7 {
                y5[d] += h * B5[i] * k[i][d];
                e += h * (B5[i] - B4[i]) * k[i][d];
            }
            let scale = tol * (1.0 + y[d].abs().max(y5[d].abs()));
            err = err.max(e.abs() / scale);
        }
        if err <= 1.0 {
            t += h;
            y = y5;
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= factor;
    }
    y
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}
