//! Uniform grids and complex-valued sampled functions.
//!
//! Everything downstream (formal powers, dispersion series, spectra) is built
//! from iterated integrals of functions sampled on one shared uniform grid
//! over `[a, b]`. The anchor node `x0` is the lower limit of every cumulative
//! integral, so antiderivatives vanish there exactly.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Uniform grid over `[a, b]` with `m` subintervals (`m + 1` nodes) and an
/// anchor node `x0`.
///
/// ```
/// use spps::grid::Grid;
/// let g = Grid::new(-1.0, 1.0, 16, 0.5).unwrap();
/// assert_eq!(g.x0_index(), 12);
/// assert!((g.node(12) - 0.5).abs() < 1e-15);
/// ```
#[derive(Debug, Clone, Copy)]
pub struct Grid {
    a: f64,
    b: f64,
    m: usize,
    x0_index: usize,
    snap_distance: f64,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.m == other.m
            && self.x0_index == other.x0_index
    }
}

impl Grid {
    /// Minimum number of subintervals accepted.
    pub const MIN_SUBINTERVALS: usize = 8;

    /// Builds a grid, snapping `x0` to the nearest node and recording the
    /// snap distance.
    pub fn new(a: f64, b: f64, m: usize, x0: f64) -> Result<Self> {
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInterval { a, b });
        }
        if m < Self::MIN_SUBINTERVALS {
            return Err(Error::GridTooCoarse { m });
        }
        if !(a..=b).contains(&x0) {
            return Err(Error::AnchorOutsideInterval { x0, a, b });
        }
        let h = (b - a) / m as f64;
        let x0_index = (((x0 - a) / h).round() as usize).min(m);
        let snap_distance = (x0 - (a + x0_index as f64 * h)).abs();
        Ok(Grid { a, b, m, x0_index, snap_distance })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of subintervals.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of nodes, `m + 1`.
    pub fn len(&self) -> usize {
        self.m + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing `(b - a) / m`.
    pub fn spacing(&self) -> f64 {
        (self.b - self.a) / self.m as f64
    }

    /// i-th node, `a + i h`.
    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i <= self.m);
        if i == self.m {
            self.b
        } else {
            self.a + i as f64 * self.spacing()
        }
    }

    /// Index of the anchor node.
    pub fn x0_index(&self) -> usize {
        self.x0_index
    }

    /// Anchor node value after snapping.
    pub fn x0(&self) -> f64 {
        self.node(self.x0_index)
    }

    /// Distance the requested anchor was moved to land on a node.
    pub fn snap_distance(&self) -> f64 {
        self.snap_distance
    }

    /// Iterator over all nodes.
    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.m).map(move |i| self.node(i))
    }
}

/// Complex-valued function sampled at the nodes of a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledFunction {
    /// Samples `f` at all nodes. Errors on the first nonfinite value.
    pub fn sample<F: FnMut(f64) -> Complex64>(grid: Grid, mut f: F) -> Result<Self> {
        let values: Vec<Complex64> = grid.nodes().map(|x| f(x)).collect();
        let out = SampledFunction { grid, values };
        out.check_finite()?;
        Ok(out)
    }

    /// Samples a real-valued function.
    pub fn sample_real<F: FnMut(f64) -> f64>(grid: Grid, mut f: F) -> Result<Self> {
        Self::sample(grid, |x| c64(f(x), 0.0))
    }

    /// Constant profile.
    pub fn constant(grid: Grid, c: Complex64) -> Self {
        SampledFunction { grid, values: vec![c; grid.len()] }
    }

    /// All-ones profile.
    pub fn ones(grid: Grid) -> Self {
        Self::constant(grid, c64(1.0, 0.0))
    }

    /// Wraps an existing value buffer.
    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), got: values.len() });
        }
        let out = SampledFunction { grid, values };
        out.check_finite()?;
        Ok(out)
    }

    fn check_finite(&self) -> Result<()> {
        match self.values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            Some(index) => Err(Error::NonfiniteSample { index }),
            None => Ok(()),
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Value at the anchor node.
    pub fn value_at_x0(&self) -> Complex64 {
        self.values[self.grid.x0_index()]
    }

    /// Value at the left endpoint.
    pub fn first(&self) -> Complex64 {
        self.values[0]
    }

    /// Value at the right endpoint.
    pub fn last(&self) -> Complex64 {
        self.values[self.grid.m()]
    }

    fn same_grid(&self, other: &Self) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        let values = self.values.iter().zip(&other.values).map(|(u, v)| u * v).collect();
        Ok(SampledFunction { grid: self.grid, values })
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        let values = self.values.iter().zip(&other.values).map(|(u, v)| u + v).collect();
        Ok(SampledFunction { grid: self.grid, values })
    }

    /// Pointwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        let values = self.values.iter().zip(&other.values).map(|(u, v)| u - v).collect();
        Ok(SampledFunction { grid: self.grid, values })
    }

    /// Pointwise quotient; errors at the first vanishing denominator node.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_grid(other)?;
        let mut values = Vec::with_capacity(self.values.len());
        for (i, (u, v)) in self.values.iter().zip(&other.values).enumerate() {
            if v.norm_sqr() == 0.0 {
                return Err(Error::DivisionByZero { index: i });
            }
            let w = u / v;
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::DivisionByZero { index: i });
            }
            values.push(w);
        }
        Ok(SampledFunction { grid: self.grid, values })
    }

    /// Pointwise reciprocal.
    pub fn recip(&self) -> Result<Self> {
        Self::ones(self.grid).div(self)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: Complex64) -> Self {
        let values = self.values.iter().map(|v| v * c).collect();
        SampledFunction { grid: self.grid, values }
    }

    /// Applies `f` to every value.
    pub fn map<F: FnMut(Complex64) -> Complex64>(&self, mut f: F) -> Self {
        let values = self.values.iter().map(|&v| f(v)).collect();
        SampledFunction { grid: self.grid, values }
    }

    /// Largest node magnitude.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Smallest node magnitude.
    pub fn min_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min)
    }

    /// Largest imaginary-part magnitude; small for effectively real data.
    pub fn max_imag_abs(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }

    /// Real parts of all values.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }
}
