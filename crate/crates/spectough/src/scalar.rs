//! Floating-point scalar abstraction for the spectral code.
//!
//! Matrices, eigensolvers and closed-form quotients are generic over [`Real`] so the same
//! code runs in f32 or f64. Concrete f64 aliases live at the crate root; f64 is what the
//! CLI and the verification suites use.

use num_traits::{Float, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Floating-point scalar usable by the spectral routines.
pub trait Real:
    Float + NumAssign + FromPrimitive + Sum + Debug + Display + LowerExp + Default + 'static
{
    /// Off-diagonal convergence tolerance for the Jacobi eigensolver.
    fn default_eigen_tol() -> Self;

    /// Conversion from f64 constants; exact in f64 mode, rounded in f32 mode.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant convertible to Real scalar")
    }

    /// Exact conversion from a small integer.
    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("small integer convertible to Real scalar")
    }
}

impl Real for f64 {
    fn default_eigen_tol() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn default_eigen_tol() -> Self {
        1e-5
    }
}
