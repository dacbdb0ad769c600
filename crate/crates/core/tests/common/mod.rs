//! Independent numeric oracles shared by the integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const CATALAN: f64 = 0.915_965_594_177_219;

/// `ln(sin t / t)`, smooth on `[0, π/2]`.
fn log_sinc(t: f64) -> f64 {
    if t < 1e-4 {
        let t2 = t * t;
        -t2 / 6.0 - t2 * t2 / 180.0
    } else {
        (t.sin() / t).ln()
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// `ends` holds `f` at `a`, the midpoint and `b`.
fn adaptive(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    ends: [f64; 3],
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let [fa, fm, fb] = ends;
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive(f, a, m, [fa, flm, fm], left, tol / 2.0, depth - 1)
        + adaptive(f, m, b, [fm, frm, fb], right, tol / 2.0, depth - 1)
}

pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(f, a, b, [fa, fm, fb], whole, tol, 48)
}

/// `-∫₀^θ ln|2 sin t| dt` by quadrature. The logarithmic singularity at 0 is
/// integrated in closed form and only the smooth remainder is sampled.
pub fn lobachevsky_quadrature(theta: f64) -> f64 {
    let mut t = theta % PI;
    if t > PI / 2.0 {
        t -= PI;
    } else if t < -PI / 2.0 {
        t += PI;
    }
    let (sign, a) = if t < 0.0 { (-1.0, -t) } else { (1.0, t) };
    if a == 0.0 {
        return 0.0;
    }
    let singular = a * (2.0 * a).ln() - a;
    let smooth = integrate(&log_sinc, 0.0, a, 1e-16);
    -sign * (singular + smooth)
}
