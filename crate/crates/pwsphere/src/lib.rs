//! Spherical Fourier analysis on rank-one compact symmetric spaces, with
//! holomorphic extension of the coefficients in the spectral parameter.
//!
//! The toolkit makes the correspondence between the support radius of a
//! radial function and the exponential type of its extended Fourier
//! coefficients computable in both directions:
//!
//! * [`geometry`] — the space catalog (spheres, CP^2, the circle, SU(2) as a
//!   group), Weyl reflection, spherical lattice, radius bounds;
//! * [`special`] — spherical functions at complex spectral parameter,
//!   SU(2) characters, invariant densities, the radial Laplacian;
//! * [`transform`] — the spherical Fourier transform by quadrature, series
//!   synthesis, Schur dimensions, eigenrelation and Parseval checks;
//! * [`holo`] — ray sampling of the extension, exponential-type fitting,
//!   Paley-Wiener style membership reports, support-radius recovery, and the
//!   Carlson sharpness demonstration;
//! * [`groupcase`] — class functions on SU(2): the Weyl integration formula,
//!   character transforms, the sign-twisted symmetry check, K-averaging onto
//!   the sphere, and support transfer;
//! * [`cli`] — the job layer behind the `pwsphere` binary: a tiny function
//!   DSL plus deterministic CSV/JSON emitters.
//!
//! Each major capability has a runnable demo under `examples/`.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod groupcase;
pub mod holo;
pub mod quad;
pub mod special;
pub mod transform;

pub use error::{Error, Result};
pub use geometry::{catalog_space, RadiusBounds, SpaceDescriptor, SpaceKind};
pub use holo::{PwReport, RaySamples, SupportEstimate, TypeFitReport};
pub use special::{spherical_eval, spherical_fn, EvalRequest};
pub use transform::{CoefficientTable, RadialFunction};
