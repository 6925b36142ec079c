//! Error type shared by all modules of the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building grids, families, series or
/// spectra. Variants carry enough context to point at the offending input.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Interval endpoints out of order (`a >= b`).
    InvalidInterval { a: f64, b: f64 },
    /// Fewer than the minimum number of subintervals.
    GridTooCoarse { m: usize },
    /// Anchor point outside `[a, b]`.
    AnchorOutsideInterval { x0: f64, a: f64, b: f64 },
    /// A sampled value was NaN or infinite.
    NonfiniteSample { index: usize },
    /// Two sampled functions live on different grids.
    GridMismatch,
    /// Pointwise division hit a zero denominator. For weights of the form
    /// `1/(u0^2 p)` this signals a vanishing particular solution.
    DivisionByZero { index: usize },
    /// Mismatched value buffer length for a grid.
    LengthMismatch { expected: usize, got: usize },
    /// A series sum was requested past the computed order.
    InsufficientOrder { requested: usize, order: usize },
    /// The family tail did not fall below tolerance at the maximum order.
    NonconvergentTail { tail: f64, scale: f64 },
    /// The v1 + i v2 construction needs real-valued p and q.
    ComplexCoefficientsUnsupported,
    /// A particular solution vanished at a node (should not happen for real
    /// coefficients, by Sturm separation; raised defensively).
    VanishingU0 { index: usize },
    /// All series coefficients are numerically zero.
    DegenerateSeries,
    /// Newton iteration failed to converge.
    NoConvergence { last: (f64, f64) },
    /// Characteristic-series construction needs the anchor at the left
    /// endpoint of the interval.
    AnchorNotAtLeftEndpoint,
    /// The lambda-dependent right condition is only derived for a Dirichlet
    /// left condition (alpha = 0 mod pi).
    UnsupportedLeftBc { alpha: f64 },
    /// No sign change of D(lambda) - 2 inside the search bracket; raise m or
    /// the series order.
    NoRootInBracket { lo: f64, hi: f64 },
    /// Periodic matching is degenerate: f_{0,2}(T) = 0.
    F02PeriodZero,
    /// The matched candidate for the periodic solution has a node.
    NotNodeless { min_abs: f64, max_abs: f64 },
    /// The self-matching quadratic is degenerate: f_2(T, lambda) = 0.
    QuadraticDegenerate,
    /// Dispersion evaluation outside the bound-state interval.
    LambdaOutOfRange { lambda: f64, bound: f64 },
    /// The polynomial-in-mu dispersion form needs alpha1 = alpha2.
    AlphasNotEqual { alpha1: f64, alpha2: f64 },
    /// Transmitted wave is evanescent: k^2 n2^2 < beta^2.
    EvanescentOutput { k2_squared: f64 },
    /// Eigenvector boundary residual exceeds tolerance.
    ResidualTooLarge { residual: f64, tol: f64 },
    /// Core invariant violated by caller-provided data.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInterval { a, b } => write!(f, "invalid interval: a = {a} >= b = {b}"),
            Error::GridTooCoarse { m } => write!(f, "grid too coarse: m = {m} < 8"),
            Error::AnchorOutsideInterval { x0, a, b } => {
                write!(f, "anchor x0 = {x0} outside [{a}, {b}]")
            }
            Error::NonfiniteSample { index } => write!(f, "nonfinite sample at node {index}"),
            Error::GridMismatch => write!(f, "operands sampled on different grids"),
            Error::DivisionByZero { index } => write!(f, "division by zero at node {index}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "value buffer has {got} entries, grid needs {expected}")
            }
            Error::InsufficientOrder { requested, order } => {
                write!(f, "series member {requested} requested, computed order {order}")
            }
            Error::NonconvergentTail { tail, scale } => {
                write!(f, "family tail {tail:.3e} above tolerance at scale {scale:.3e}")
            }
            Error::ComplexCoefficientsUnsupported => {
                write!(f, "nonvanishing u0 construction requires real p and q")
            }
            Error::VanishingU0 { index } => write!(f, "particular solution vanishes at node {index}"),
            Error::DegenerateSeries => write!(f, "all series coefficients are numerically zero"),
            Error::NoConvergence { last } => {
                write!(f, "Newton iteration stalled near {} + {}i", last.0, last.1)
            }
            Error::AnchorNotAtLeftEndpoint => {
                write!(f, "characteristic series needs x0 snapped to a")
            }
            Error::UnsupportedLeftBc { alpha } => {
                write!(f, "lambda-dependent right condition derived only for alpha = 0, got {alpha}")
            }
            Error::NoRootInBracket { lo, hi } => {
                write!(f, "no discriminant root in [{lo}, {hi}]; increase m or the order")
            }
            Error::F02PeriodZero => write!(f, "degenerate periodic matching: f02(T) = 0"),
            Error::NotNodeless { min_abs, max_abs } => {
                write!(f, "candidate solution has a node: min |f| = {min_abs:.3e}, max = {max_abs:.3e}")
            }
            Error::QuadraticDegenerate => write!(f, "self-matching quadratic degenerate: f2(T) = 0"),
            Error::LambdaOutOfRange { lambda, bound } => {
                write!(f, "lambda = {lambda} outside bound-state range (< {bound})")
            }
            Error::AlphasNotEqual { alpha1, alpha2 } => {
                write!(f, "mu-polynomial form needs alpha1 = alpha2, got {alpha1}, {alpha2}")
            }
            Error::EvanescentOutput { k2_squared } => {
                write!(f, "transmitted wave evanescent: k2^2 = {k2_squared:.3e} < 0")
            }
            Error::ResidualTooLarge { residual, tol } => {
                write!(f, "boundary residual {residual:.3e} above tolerance {tol:.3e}")
            }
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
