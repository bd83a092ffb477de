//! Analytic ellipse phantoms and their closed-form line integrals.
//!
//! A phantom is a list of ellipses with additive densities. Its Radon
//! transform has a closed form per ellipse, so projections can be sampled
//! exactly — no discretized forward projector is involved anywhere in the
//! simulation path.

use crate::array2::Array2D;

/// One ellipse: additive density and pose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ellipse {
    /// Additive density inside the ellipse.
    pub density: f64,
    /// Semi-axis along the ellipse's own x direction.
    pub a: f64,
    /// Semi-axis along the ellipse's own y direction.
    pub b: f64,
    /// Center x.
    pub x0: f64,
    /// Center y.
    pub y0: f64,
    /// Rotation angle in radians (counter-clockwise).
    pub alpha: f64,
}

/// A 2-D density built from additive ellipses, supported in the unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Phantom {
    pub ellipses: Vec<Ellipse>,
}

impl Phantom {
    /// The classic head phantom: ten ellipses, densities on the original
    /// (unnormalized) scale where the skull rim is 2.0 and interior detail
    /// sits near 1.0.
    pub fn shepp_logan() -> Self {
        const DEG: f64 = std::f64::consts::PI / 180.0;
        let rows: [(f64, f64, f64, f64, f64, f64); 10] = [
            (2.0, 0.69, 0.92, 0.0, 0.0, 0.0),
            (-0.98, 0.6624, 0.874, 0.0, -0.0184, 0.0),
            (-0.02, 0.11, 0.31, 0.22, 0.0, -18.0),
            (-0.02, 0.16, 0.41, -0.22, 0.0, 18.0),
            (0.01, 0.21, 0.25, 0.0, 0.35, 0.0),
            (0.01, 0.046, 0.046, 0.0, 0.1, 0.0),
            (0.01, 0.046, 0.046, 0.0, -0.1, 0.0),
            (0.01, 0.046, 0.023, -0.08, -0.605, 0.0),
            (0.01, 0.023, 0.023, 0.0, -0.605, 0.0),
            (0.01, 0.023, 0.046, 0.06, -0.605, 0.0),
        ];
        Phantom {
            ellipses: rows
                .iter()
                .map(|&(density, a, b, x0, y0, deg)| Ellipse {
                    density,
                    a,
                    b,
                    x0,
                    y0,
                    alpha: deg * DEG,
                })
                .collect(),
        }
    }

    /// Rotation-invariant ring target: four concentric disks of radii
    /// 0.8/0.6/0.4/0.2 with alternating densities +1/−1/+1/−1, giving
    /// alternating unit-density rings.
    pub fn bulls_eye() -> Self {
        let disks = [(1.0, 0.8), (-1.0, 0.6), (1.0, 0.4), (-1.0, 0.2)];
        Phantom {
            ellipses: disks
                .iter()
                .map(|&(density, r)| Ellipse {
                    density,
                    a: r,
                    b: r,
                    x0: 0.0,
                    y0: 0.0,
                    alpha: 0.0,
                })
                .collect(),
        }
    }

    /// Exact line integral along the line `x·(cos φ, sin φ) = t`.
    ///
    /// Per ellipse, with `s = t − center·θ` and effective radius
    /// `r²(φ) = a²cos²(φ−α) + b²sin²(φ−α)`, the chord contributes
    /// `2·d·a·b·√(r² − s²)/r²` when `s² ≤ r²` and zero otherwise.
    pub fn radon(&self, t: f64, phi: f64) -> f64 {
        let (sin_phi, cos_phi) = phi.sin_cos();
        let mut total = 0.0;
        for e in &self.ellipses {
            let s = t - (e.x0 * cos_phi + e.y0 * sin_phi);
            let (sin_d, cos_d) = (phi - e.alpha).sin_cos();
            let r2 = (e.a * cos_d).powi(2) + (e.b * sin_d).powi(2);
            let rem = r2 - s * s;
            if rem > 0.0 {
                total += 2.0 * e.density * e.a * e.b * rem.sqrt() / r2;
            }
        }
        total
    }

    /// Point-sample the density on an `R×R` grid over `[−1,1]²`.
    ///
    /// Pixel centers are at `−1 + (j + 0.5)·2/R`; row 0 is the top of the
    /// image (`y` near `+1`). No anti-aliasing: a pixel takes the sum of
    /// densities of the ellipses containing its center.
    pub fn render(&self, r: usize) -> Array2D<f64> {
        assert!(r >= 2, "render needs at least a 2x2 grid");
        let mut img = Array2D::zeros(r, r);
        let coord = |j: usize| -1.0 + (j as f64 + 0.5) * 2.0 / r as f64;
        for row in 0..r {
            let y = coord(r - 1 - row);
            let out = img.row_mut(row);
            for col in 0..r {
                let x = coord(col);
                let mut v = 0.0;
                for e in &self.ellipses {
                    let (sin_a, cos_a) = e.alpha.sin_cos();
                    let xr = (x - e.x0) * cos_a + (y - e.y0) * sin_a;
                    let yr = -(x - e.x0) * sin_a + (y - e.y0) * cos_a;
                    if (xr / e.a).powi(2) + (yr / e.b).powi(2) <= 1.0 {
                        v += e.density;
                    }
                }
                out[col] = v;
            }
        }
        img
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force line integral by midpoint quadrature over the rendered
    /// density function (continuous membership test, not the pixel grid).
    fn radon_quadrature(p: &Phantom, t: f64, phi: f64, n: usize) -> f64 {
        let (sin_phi, cos_phi) = phi.sin_cos();
        let half = 1.5;
        let h = 2.0 * half / n as f64;
        let mut acc = 0.0;
        for i in 0..n {
            let u = -half + (i as f64 + 0.5) * h;
            // Point at distance t along theta, u along the perpendicular.
            let x = t * cos_phi - u * sin_phi;
            let y = t * sin_phi + u * cos_phi;
            let mut v = 0.0;
            for e in &p.ellipses {
                let (sin_a, cos_a) = e.alpha.sin_cos();
                let xr = (x - e.x0) * cos_a + (y - e.y0) * sin_a;
                let yr = -(x - e.x0) * sin_a + (y - e.y0) * cos_a;
                if (xr / e.a).powi(2) + (yr / e.b).powi(2) <= 1.0 {
                    v += e.density;
                }
            }
            acc += v * h;
        }
        acc
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let p = Phantom::shepp_logan();
        for &(t, phi) in &[(0.0, 0.3), (0.25, 1.2), (-0.4, 2.0), (0.7, 0.0), (-0.15, 2.9)] {
            let exact = p.radon(t, phi);
            let quad = radon_quadrature(&p, t, phi, 400_000);
            assert!(
                (exact - quad).abs() < 2e-4,
                "t={t} phi={phi}: exact {exact} vs quadrature {quad}"
            );
        }
    }

    #[test]
    fn vanishes_outside_unit_disk() {
        let p = Phantom::shepp_logan();
        for i in 0..40 {
            let phi = i as f64 * 0.1;
            assert_eq!(p.radon(1.01, phi), 0.0);
            assert_eq!(p.radon(-1.3, phi), 0.0);
        }
    }

    #[test]
    fn linearity_over_components() {
        let p = Phantom::shepp_logan();
        let (t, phi) = (0.13, 0.77);
        let total = p.radon(t, phi);
        let sum: f64 = p
            .ellipses
            .iter()
            .map(|&e| Phantom { ellipses: vec![e] }.radon(t, phi))
            .sum();
        assert!((total - sum).abs() < 1e-12);
    }

    #[test]
    fn half_turn_symmetry() {
        let p = Phantom::shepp_logan();
        for i in 0..25 {
            let phi = i as f64 * 0.13;
            let t = -0.6 + i as f64 * 0.05;
            let lhs = p.radon(t, phi + std::f64::consts::PI);
            let rhs = p.radon(-t, phi);
            assert!((lhs - rhs).abs() < 1e-12, "phi={phi} t={t}");
        }
    }

    #[test]
    fn bulls_eye_is_angle_independent() {
        let p = Phantom::bulls_eye();
        for i in 0..20 {
            let t = -0.9 + i as f64 * 0.09;
            let base = p.radon(t, 0.0);
            for j in 1..10 {
                let phi = j as f64 * 0.31;
                assert!((p.radon(t, phi) - base).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rendered_max_density_is_one() {
        let img = Phantom::shepp_logan().render(512);
        let mx = img.as_slice().iter().cloned().fold(f64::MIN, f64::max);
        assert!((mx - 1.0).abs() < 1e-12, "max rendered density = {mx}");
    }

    #[test]
    fn render_orientation_top_is_positive_y() {
        // A small disk at (0, 0.35) (the "forehead" feature region) must land
        // in the upper half of the image: rows < R/2.
        let p = Phantom {
            ellipses: vec![Ellipse {
                density: 1.0,
                a: 0.05,
                b: 0.05,
                x0: 0.0,
                y0: 0.35,
                alpha: 0.0,
            }],
        };
        let img = p.render(64);
        let top: f64 = (0..32).map(|r| img.row(r).iter().sum::<f64>()).sum();
        let bottom: f64 = (32..64).map(|r| img.row(r).iter().sum::<f64>()).sum();
        assert!(top > 0.0 && bottom == 0.0);
    }

    #[test]
    fn disk_chord_length() {
        // Unit-density disk of radius r: chord at offset s has length 2*sqrt(r^2-s^2).
        let p = Phantom {
            ellipses: vec![Ellipse {
                density: 1.0,
                a: 0.5,
                b: 0.5,
                x0: 0.0,
                y0: 0.0,
                alpha: 0.0,
            }],
        };
        let expect = 2.0 * (0.25f64 - 0.09).sqrt();
        assert!((p.radon(0.3, 1.0) - expect).abs() < 1e-14);
    }
}
