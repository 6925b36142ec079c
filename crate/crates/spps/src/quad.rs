//! High-order cumulative quadrature on uniform grids.
//!
//! The recursive integrals that define formal power families are all of the
//! form F(x_i) = ∫_{x0}^{x_i} f(s) ds on one shared grid. The default rule
//! interpolates the integrand by a C² cubic spline with not-a-knot end
//! conditions and integrates the spline exactly segment by segment, which is
//! exact for polynomials up to degree 3 and O(m⁻⁴) for C⁴ integrands. A
//! Simpson-type rule of the same order is available for cross-checking.
//!
//! Complex data is integrated as two real integrations.
//!
//! ```
//! use spps::grid::{Grid, SampledFunction};
//! use spps::quad::cumulative_integral;
//!
//! let g = Grid::new(0.0, std::f64::consts::PI, 200, 0.0).unwrap();
//! let f = SampledFunction::sample_real(g, |x| x.cos()).unwrap();
//! let integral = cumulative_integral(&f);
//! // ∫_0^x cos = sin x at every node
//! let err = (integral.last().re - std::f64::consts::PI.sin()).abs();
//! assert!(err < 1e-12);
//! ```

use num_complex::Complex64;

use crate::grid::{Grid, SampledFunction};

/// Cumulative quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Quadrature {
    /// Not-a-knot cubic spline, integrated exactly per segment (default).
    #[default]
    Spline,
    /// Simpson-type rule: each segment integral comes from the quadratic
    /// interpolants through neighbouring node triples (averaged on interior
    /// segments), which keeps the cumulative order at O(m⁻⁴).
    Simpson,
}

/// Natural description of the spline data: second derivatives (moments) at
/// the nodes of a uniform grid.
#[derive(Debug, Clone)]
pub struct UniformSpline {
    h: f64,
    y: Vec<f64>,
    moments: Vec<f64>,
}

impl UniformSpline {
    /// Interpolating cubic spline with not-a-knot end conditions on a
    /// uniform grid with spacing `h`. Needs at least 5 nodes.
    pub fn new(h: f64, y: &[f64]) -> Self {
        let m = y.len() - 1;
        assert!(m >= 4, "spline needs at least 5 nodes");
        let h2 = h * h;
        let rhs = |i: usize| 6.0 * (y[i - 1] - 2.0 * y[i] + y[i + 1]) / h2;

        let mut moments = vec![0.0; m + 1];
        // Not-a-knot: s''' continuous at x1 and x_{m-1}. On a uniform grid
        // eliminating M0 = 2 M1 - M2 into row 1 leaves 6 M1 = rhs(1), and
        // symmetrically at the right end.
        moments[1] = rhs(1) / 6.0;
        moments[m - 1] = rhs(m - 1) / 6.0;

        {
            // Tridiagonal Thomas solve for M2 .. M_{m-2}.
            let n = m - 3;
            if n > 0 {
                let mut c_prime = vec![0.0; n];
                let mut d_prime = vec![0.0; n];
                for j in 0..n {
                    let i = j + 2;
                    let mut d = rhs(i);
                    if i == 2 {
                        d -= moments[1];
                    }
                    if i == m - 2 {
                        d -= moments[m - 1];
                    }
                    if j == 0 {
                        c_prime[0] = 1.0 / 4.0;
                        d_prime[0] = d / 4.0;
                    } else {
                        let denom = 4.0 - c_prime[j - 1];
                        c_prime[j] = 1.0 / denom;
                        d_prime[j] = (d - d_prime[j - 1]) / denom;
                    }
                }
                moments[m - 2] = d_prime[n - 1];
                for j in (0..n - 1).rev() {
                    moments[j + 2] = d_prime[j] - c_prime[j] * moments[j + 3];
                }
            }
        }
        moments[0] = 2.0 * moments[1] - moments[2];
        moments[m] = 2.0 * moments[m - 1] - moments[m - 2];

        UniformSpline { h, y: y.to_vec(), moments }
    }

    /// Exact integral of the spline over segment `[x_i, x_{i+1}]`.
    pub fn segment_integral(&self, i: usize) -> f64 {
        let h = self.h;
        0.5 * h * (self.y[i] + self.y[i + 1])
            - h * h * h * (self.moments[i] + self.moments[i + 1]) / 24.0
    }

    /// First derivative of the spline at node `i`.
    pub fn derivative_at_node(&self, i: usize) -> f64 {
        let h = self.h;
        let m = self.y.len() - 1;
        if i < m {
            (self.y[i + 1] - self.y[i]) / h - h * (2.0 * self.moments[i] + self.moments[i + 1]) / 6.0
        } else {
            (self.y[m] - self.y[m - 1]) / h + h * (2.0 * self.moments[m] + self.moments[m - 1]) / 6.0
        }
    }

    /// Second derivative (moment) at node `i`.
    pub fn second_derivative_at_node(&self, i: usize) -> f64 {
        self.moments[i]
    }
}

fn segment_integrals_spline(h: f64, y: &[f64]) -> Vec<f64> {
    let spline = UniformSpline::new(h, y);
    (0..y.len() - 1).map(|i| spline.segment_integral(i)).collect()
}

fn segment_integrals_simpson(h: f64, y: &[f64]) -> Vec<f64> {
    let m = y.len() - 1;
    let mut seg = vec![0.0; m];
    seg[0] = h * (5.0 * y[0] + 8.0 * y[1] - y[2]) / 12.0;
    seg[m - 1] = h * (-y[m - 2] + 8.0 * y[m - 1] + 5.0 * y[m]) / 12.0;
    for i in 1..m.saturating_sub(1) {
        seg[i] = h * (-y[i - 1] + 13.0 * y[i] + 13.0 * y[i + 1] - y[i + 2]) / 24.0;
    }
    seg
}

/// Cumulative integral anchored at the grid's `x0`: returns F with
/// F(x_i) = ∫_{x0}^{x_i} f, so F(x0) = 0 exactly and values left of the
/// anchor are negative-oriented integrals.
pub fn cumulative_integral(f: &SampledFunction) -> SampledFunction {
    cumulative_integral_with(f, Quadrature::Spline)
}

/// Cumulative integral with an explicit quadrature rule.
pub fn cumulative_integral_with(f: &SampledFunction, rule: Quadrature) -> SampledFunction {
    let grid = f.grid();
    let h = grid.spacing();
    let re: Vec<f64> = f.values().iter().map(|v| v.re).collect();
    let im: Vec<f64> = f.values().iter().map(|v| v.im).collect();
    let (seg_re, seg_im) = match rule {
        Quadrature::Spline => (segment_integrals_spline(h, &re), segment_integrals_spline(h, &im)),
        Quadrature::Simpson => {
            (segment_integrals_simpson(h, &re), segment_integrals_simpson(h, &im))
        }
    };

    let n = grid.len();
    let mut prefix = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n - 1 {
        prefix[i + 1] = prefix[i] + Complex64::new(seg_re[i], seg_im[i]);
    }
    let offset = prefix[grid.x0_index()];
    let values: Vec<Complex64> = prefix.into_iter().map(|p| p - offset).collect();
    SampledFunction::from_values(grid, values).expect("finite integrand gives finite integral")
}

/// Spline first and second derivatives of real node data; used where a
/// coefficient (not a solution) must be differentiated numerically.
pub fn spline_derivatives(grid: Grid, y: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let spline = UniformSpline::new(grid.spacing(), y);
    let d1 = (0..grid.len()).map(|i| spline.derivative_at_node(i)).collect();
    let d2 = (0..grid.len()).map(|i| spline.second_derivative_at_node(i)).collect();
    (d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::c64;

    fn max_err(f: &SampledFunction, exact: impl Fn(f64) -> f64) -> f64 {
        f.grid()
            .nodes()
            .enumerate()
            .map(|(i, x)| (f.value(i).re - exact(x)).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn constant_integrates_to_identity() {
        let g = Grid::new(0.0, 1.0, 10, 0.0).unwrap();
        let f = SampledFunction::ones(g);
        let integral = cumulative_integral(&f);
        assert!(max_err(&integral, |x| x) < 1e-15);
    }

    #[test]
    fn cubic_is_exact() {
        let g = Grid::new(0.0, 1.0, 10, 0.0).unwrap();
        let f = SampledFunction::sample_real(g, |x| x * x * x).unwrap();
        let integral = cumulative_integral(&f);
        assert!((integral.last().re - 0.25).abs() < 1e-15);
        assert!(max_err(&integral, |x| x.powi(4) / 4.0) < 1e-15);
    }

    #[test]
    fn cosine_on_large_grid() {
        let g = Grid::new(0.0, std::f64::consts::PI, 7000, 0.0).unwrap();
        let f = SampledFunction::sample_real(g, |x| x.cos()).unwrap();
        let integral = cumulative_integral(&f);
        assert!(integral.last().re.abs() < 1e-12);
        assert!(max_err(&integral, |x| x.sin()) < 1e-12);
    }

    #[test]
    fn anchored_at_interior_node() {
        let g = Grid::new(0.0, 1.0, 16, 0.5).unwrap();
        let f = SampledFunction::ones(g);
        let integral = cumulative_integral(&f);
        assert_eq!(integral.value_at_x0(), c64(0.0, 0.0));
        assert!((integral.first().re + 0.5).abs() < 1e-15);
        assert!((integral.last().re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn linearity() {
        let g = Grid::new(0.0, 2.0, 64, 0.0).unwrap();
        let f = SampledFunction::sample_real(g, |x| (3.0 * x).sin()).unwrap();
        let gfun = SampledFunction::sample_real(g, |x| x.exp()).unwrap();
        let alpha = c64(2.0, -1.0);
        let beta = c64(0.0, 3.0);
        let combo = f.scale(alpha).add(&gfun.scale(beta)).unwrap();
        let lhs = cumulative_integral(&combo);
        let rhs = cumulative_integral(&f)
            .scale(alpha)
            .add(&cumulative_integral(&gfun).scale(beta))
            .unwrap();
        let err = lhs.sub(&rhs).unwrap().max_abs();
        assert!(err < 1e-13 * rhs.max_abs().max(1.0));
    }

    #[test]
    fn fourth_order_convergence_for_exp() {
        let mut errs = Vec::new();
        for m in [32usize, 64] {
            let g = Grid::new(0.0, 1.0, m, 0.0).unwrap();
            let f = SampledFunction::sample_real(g, |x| x.exp()).unwrap();
            let integral = cumulative_integral(&f);
            errs.push(max_err(&integral, |x| x.exp() - 1.0));
        }
        let ratio = errs[0] / errs[1];
        assert!((12.0..=20.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn simpson_rule_agrees_with_spline() {
        let g = Grid::new(0.0, 1.0, 400, 0.0).unwrap();
        let f = SampledFunction::sample_real(g, |x| (5.0 * x).cos() * x.exp()).unwrap();
        let a = cumulative_integral_with(&f, Quadrature::Spline);
        let b = cumulative_integral_with(&f, Quadrature::Simpson);
        assert!(a.sub(&b).unwrap().max_abs() < 1e-9);
    }

    #[test]
    fn spline_derivatives_of_smooth_data() {
        let g = Grid::new(0.0, 1.0, 200, 0.0).unwrap();
        let y: Vec<f64> = g.nodes().map(|x| (2.0 * x).sin()).collect();
        let (d1, d2) = spline_derivatives(g, &y);
        let e1 = g
            .nodes()
            .enumerate()
            .map(|(i, x)| (d1[i] - 2.0 * (2.0 * x).cos()).abs())
            .fold(0.0, f64::max);
        let e2 = g
            .nodes()
            .enumerate()
            .map(|(i, x)| (d2[i] + 4.0 * (2.0 * x).sin()).abs())
            .fold(0.0, f64::max);
        assert!(e1 < 1e-6, "first derivative err {e1}");
        assert!(e2 < 1e-3, "second derivative err {e2}");
    }
}
