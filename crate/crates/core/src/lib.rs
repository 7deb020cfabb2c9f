//! Exact and numerical verification kernel for the U(1)-Kepler problems.
//!
//! The crate is split along the lines of what is being checked:
//!
//! * [`repcore`]: exact representation theory of `U(n)` (highest weights,
//!   Weyl dimensions, Casimir values, angular eigenvalues) and the shell
//!   dimension identity with its generating-function proof.
//! * [`spectra`]: bound-state energies, level degeneracies, K-type labels and
//!   the `U(n,n)` highest-weight label.
//! * [`radial`]: closed-form Laguerre radial eigenfunctions, their
//!   normalization and finite-difference residuals.
//! * [`oscillator`]: the twist into `2n`-dimensional oscillator states.
//! * [`micz`]: the `n = 2` equivalence with the MICZ-Kepler problem.
//! * [`geometry`]: pointwise checks of the Euclidean / Fubini-Study metric
//!   decomposition on `C^n \ {0}`.
//!
//! Everything in `repcore` and `spectra` is exact (big integers and
//! rationals). Floating point only enters in the analytic modules.
//!
//! ```
//! use u1kepler::spectra::{energy, level_degeneracy};
//! use u1kepler::radial::{radial_eigenfunction, radial_operator_residual, default_grid};
//! use u1kepler::ProblemParams;
//!
//! let p = ProblemParams::new(3, 1)?;
//! assert_eq!(u1kepler::exact::format_rational(&energy(2, p)), "-1/32");
//! assert_eq!(level_degeneracy(2, p).to_string(), "60");
//!
//! let f = radial_eigenfunction(2, 1, p)?;
//! assert!(radial_operator_residual(&f, &default_grid(&f), 1e-3)? < 1e-7);
//! # Ok::<(), u1kepler::Error>(())
//! ```

pub mod error;
pub mod exact;
pub mod fd;
pub mod geometry;
pub mod micz;
pub mod oscillator;
pub mod quadrature;
pub mod radial;
pub mod repcore;
pub mod spectra;
pub mod suites;

pub use error::{Error, Result};
pub use exact::HalfInteger;
pub use repcore::{AngularSector, HighestWeight, ProblemParams};
