//! Rényi, Shannon and Tsallis entropies of hydrogenic bound states.
//!
//! Two independent routes are provided for every quantity:
//!
//! * **exact**: adaptive Gauss quadrature of the entropic moments, with the
//!   radial part expressed through the weighted `L^p`-norm of orthonormal
//!   Laguerre polynomials and the angular part through powered spherical
//!   harmonics;
//! * **asymptotic**: the closed-form Rydberg (`n → ∞`) dominant terms, with
//!   the cosine, cosine-Bessel and Bessel regimes dispatched on `p`.
//!
//! The [`sweep`] module runs both routes over parameter grids (in parallel
//! when the `parallel` feature is enabled) and produces the convergence and
//! figure tables consumed by the `rydberg` command-line tool.
//!
//! All entropies are in nats and all lengths in atomic units.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asympt;
pub mod error;
pub mod hydrogenic;
pub mod output;
pub mod quad;
pub mod specfile;
pub mod specfun;
pub mod sweep;

pub use asympt::Regime;
pub use error::{Error, Result};
pub use hydrogenic::{EntropyKind, EntropyResult, LaguerreNormSpec, Method, QuantumState};
pub use quad::{IntegralResult, QuadratureConfig};
pub use sweep::{Execution, FigureId, MethodSelector, SweepRow, SweepSpec, SweepTable};
