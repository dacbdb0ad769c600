use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::GeomError;

const SERIES_TERMS: usize = 40;

/// `ζ(2k) / (k (2k + 1) (2π)^{2k})` for `k = 1..=SERIES_TERMS`.
fn clausen_coefficients() -> &'static [f64; SERIES_TERMS] {
    static TABLE: OnceLock<[f64; SERIES_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let pi2 = PI * PI;
        let exact = [
            pi2 / 6.0,
            pi2 * pi2 / 90.0,
            pi2 * pi2 * pi2 / 945.0,
            pi2 * pi2 * pi2 * pi2 / 9450.0,
            pi2 * pi2 * pi2 * pi2 * pi2 / 93555.0,
        ];
        let mut out = [0.0; SERIES_TERMS];
        for (i, c) in out.iter_mut().enumerate() {
            let k = i + 1;
            let zeta = if k <= exact.len() {
                exact[k - 1]
            } else {
                // Tail past n = 64 is below 64^-12.
                (1..=64).rev().map(|n| (n as f64).powi(-2 * k as i32)).sum()
            };
            let kf = k as f64;
            *c = zeta / (kf * (2.0 * kf + 1.0) * (2.0 * PI).powi(2 * k as i32));
        }
        out
    })
}

/// Clausen function `Cl2(x)` for `|x| <= π`.
fn clausen_reduced(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let x2 = x * x;
    let mut power = x * x2;
    let mut sum = x - x * x.abs().ln();
    for &c in clausen_coefficients() {
        let term = c * power;
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
        power *= x2;
    }
    sum
}

/// `Λ(θ) = -∫₀^θ ln|2 sin t| dt`. Odd and π-periodic.
pub fn lobachevsky(theta: f64) -> f64 {
    if !theta.is_finite() {
        return f64::NAN;
    }
    let mut t = theta.rem_euclid(PI);
    if t > PI / 2.0 {
        t -= PI;
    }
    0.5 * clausen_reduced(2.0 * t)
}

/// Shape parameter of an ideal tetrahedron; never real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TetShape {
    z: Complex64,
}

impl TetShape {
    pub fn new(z: Complex64) -> Result<Self, GeomError> {
        if !z.re.is_finite() || !z.im.is_finite() || z.im.abs() <= 1e-14 * (1.0 + z.norm()) {
            return Err(GeomError::DegenerateTetrahedron(z));
        }
        Ok(TetShape { z })
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// The three edge parameters `z, 1/(1 - z), (z - 1)/z`.
    pub fn edge_parameters(&self) -> [Complex64; 3] {
        let one = Complex64::new(1.0, 0.0);
        let z = self.z;
        [z, one / (one - z), (z - one) / z]
    }

    /// Next shape in the 3-cycle `z -> 1/(1 - z)`.
    pub fn rotated(&self) -> TetShape {
        TetShape {
            z: self.edge_parameters()[1],
        }
    }

    pub fn dihedral_angles(&self) -> [f64; 3] {
        self.edge_parameters().map(|w| w.arg())
    }
}

/// Signed volume; positive exactly when `Im z > 0`.
pub fn ideal_tet_volume(shape: &TetShape) -> f64 {
    shape.dihedral_angles().into_iter().map(lobachevsky).sum()
}

/// Signed volume of the tetrahedron with parameter `z`, counting a
/// degenerate (real) shape as zero.
pub fn signed_tet_volume(z: Complex64) -> f64 {
    TetShape::new(z).map_or(0.0, |s| ideal_tet_volume(&s))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: f64 = 0.915_965_594_177_219;

    #[test]
    fn special_values() {
        assert_eq!(lobachevsky(0.0), 0.0);
        assert!(lobachevsky(PI / 2.0).abs() < 1e-15);
        assert!(lobachevsky(PI).abs() < 1e-15);
        // Λ(π/4) = G/2.
        assert!((lobachevsky(PI / 4.0) - CATALAN / 2.0).abs() < 1e-15);
        assert!((lobachevsky(PI / 6.0) - 0.507_470_8).abs() < 1e-7);
    }

    #[test]
    fn odd_and_periodic() {
        for k in 0..50 {
            let t = -3.0 + 0.123 * k as f64;
            assert!((lobachevsky(-t) + lobachevsky(t)).abs() < 1e-14);
            assert!((lobachevsky(t + PI) - lobachevsky(t)).abs() < 1e-13);
        }
    }

    #[test]
    fn duplication_formula() {
        // Λ(2θ) = 2Λ(θ) + 2Λ(θ + π/2).
        for k in 1..30 {
            let t = 0.05 * k as f64;
            let lhs = lobachevsky(2.0 * t);
            let rhs = 2.0 * lobachevsky(t) + 2.0 * lobachevsky(t + PI / 2.0);
            assert!((lhs - rhs).abs() < 1e-14, "θ = {t}");
        }
    }

    #[test]
    fn regular_tetrahedron() {
        let s = TetShape::new(Complex64::from_polar(1.0, PI / 3.0)).unwrap();
        let v = ideal_tet_volume(&s);
        assert!((v - 3.0 * lobachevsky(PI / 3.0)).abs() < 1e-14);
        assert!((v - 1.014_941_606_409_65).abs() < 1e-12);
    }

    #[test]
    fn shape_symmetries() {
        let s = TetShape::new(Complex64::new(0.3, 0.8)).unwrap();
        let v = ideal_tet_volume(&s);
        assert!((ideal_tet_volume(&s.rotated()) - v).abs() < 1e-12);
        assert!((ideal_tet_volume(&s.rotated().rotated()) - v).abs() < 1e-12);
        let conj = TetShape::new(s.z().conj()).unwrap();
        assert!((ideal_tet_volume(&conj) + v).abs() < 1e-14);
        let sum: f64 = s.dihedral_angles().iter().sum();
        assert!((sum - PI).abs() < 1e-14);
    }

    #[test]
    fn square_shape_is_catalan() {
        let v = signed_tet_volume(Complex64::new(0.0, 1.0));
        assert!((v - CATALAN).abs() < 1e-15);
    }

    #[test]
    fn real_shape_is_degenerate() {
        assert!(matches!(
            TetShape::new(Complex64::new(2.0, 0.0)),
            Err(GeomError::DegenerateTetrahedron(_))
        ));
        assert_eq!(signed_tet_volume(Complex64::new(-1.0, 0.0)), 0.0);
    }
}
