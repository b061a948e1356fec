//! Space catalog: restricted-root data in a one-dimensional spectral
//! coordinate, the Weyl action, the spherical lattice, and radius bounds.
//!
//! Every space is parametrized by a geodesic angle t in [0, pi] (the
//! injectivity radius is pi in these units for each catalog entry), and its
//! spherical functions are indexed by a single spectral coordinate l in which
//! the lattice of spherical representations is exactly the integers.  The
//! root multiplicities of a rank-one space enter only through the Jacobi
//! exponents
//!
//! ```text
//!     a = (m_alpha + m_{2alpha} - 1)/2,    b = (m_{2alpha} - 1)/2,
//! ```
//!
//! and the half-sum shift is rho_c = (a + b + 1)/2.  The nontrivial Weyl
//! element acts by l -> -l - 2 rho_c, i.e. reflection about the symmetry
//! center -rho_c.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Names accepted by [`catalog_space`].
pub const SPACE_NAMES: &str = "torus, s2, s3, s4, s5, cp2, su2-group";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceKind {
    #[serde(rename = "rank-one-symmetric")]
    RankOneSymmetric,
    #[serde(rename = "torus")]
    Torus,
    #[serde(rename = "group-su2")]
    GroupSu2,
}

/// Catalog entry fixing the Jacobi exponents, rho-shift, and radius data of
/// one space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub name: String,
    pub kind: SpaceKind,
    pub jacobi_a: f64,
    pub jacobi_b: f64,
    pub rho_c: f64,
    pub inj_radius_t: f64,
    pub omega_radius_t: f64,
}

/// The four radii relevant to support recovery, all in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusBounds {
    /// Radius on which the growth estimate for the extension is available
    /// without further argument (the Omega region |alpha(X)| < pi/2).
    pub r_forward_conservative: f64,
    /// Radius up to which the closed-form continuation actually converges
    /// (sin^2(t/2) < 1, i.e. all of t < pi for the rank-one closed forms).
    pub r_forward_sharp: f64,
    /// Carlson threshold in the spectral coordinate: entire functions of
    /// exponential type below this are pinned down by their lattice values.
    pub r_unique: f64,
    pub inj_radius_t: f64,
}

fn rank_one(name: &str, a: f64, b: f64) -> SpaceDescriptor {
    SpaceDescriptor {
        name: name.to_owned(),
        kind: SpaceKind::RankOneSymmetric,
        jacobi_a: a,
        jacobi_b: b,
        rho_c: (a + b + 1.0) / 2.0,
        inj_radius_t: PI,
        omega_radius_t: PI / 2.0,
    }
}

/// Look up a space by name.
///
/// Sphere exponents follow the standard rank-one classification
/// (S^n: a = b = (n-2)/2; CP^n: a = n-1, b = 0); each entry is cross-checked
/// in the transform tests against closed-form representation dimensions.
pub fn catalog_space(name: &str) -> Result<SpaceDescriptor> {
    match name {
        "torus" => Ok(SpaceDescriptor {
            name: "torus".to_owned(),
            kind: SpaceKind::Torus,
            jacobi_a: -0.5,
            jacobi_b: -0.5,
            rho_c: 0.0,
            inj_radius_t: PI,
            omega_radius_t: PI,
        }),
        "s2" => Ok(rank_one("s2", 0.0, 0.0)),
        "s3" => Ok(rank_one("s3", 0.5, 0.5)),
        "s4" => Ok(rank_one("s4", 1.0, 1.0)),
        "s5" => Ok(rank_one("s5", 1.5, 1.5)),
        "cp2" => Ok(rank_one("cp2", 1.0, 0.0)),
        // SU(2) as a symmetric space for left-times-right translation, in the
        // conjugacy-angle chart theta in [0, 2pi) and the n = 2l coordinate.
        "su2-group" => Ok(SpaceDescriptor {
            name: "su2-group".to_owned(),
            kind: SpaceKind::GroupSu2,
            jacobi_a: 0.5,
            jacobi_b: 0.5,
            rho_c: 1.0,
            inj_radius_t: PI,
            omega_radius_t: PI / 2.0,
        }),
        _ => Err(Error::UnknownSpace {
            name: name.to_owned(),
            valid: SPACE_NAMES,
        }),
    }
}

impl SpaceDescriptor {
    /// The nontrivial Weyl reflection lambda -> -lambda - 2 rho_c.
    ///
    /// An involution; its fixed point -rho_c is the symmetry center of every
    /// coefficient extension on this space.
    pub fn weyl_reflect(&self, lambda: Complex64) -> Complex64 {
        -lambda - 2.0 * self.rho_c
    }

    /// Lattice of spherical representations up to `l_max`, in the spectral
    /// coordinate: 0, 1, 2, ... for the rank-one spaces and for the group in
    /// its n-coordinate, and all of -l_max..=l_max for the torus.
    pub fn spherical_lattice(&self, l_max: f64) -> Vec<f64> {
        if l_max < 0.0 {
            return Vec::new();
        }
        let top = l_max.floor() as i64;
        match self.kind {
            SpaceKind::Torus => (-top..=top).map(|n| n as f64).collect(),
            _ => (0..=top).map(|n| n as f64).collect(),
        }
    }

    /// Radii governing support recovery on this space.
    ///
    /// The conservative forward radius is the Omega bound; the sharp one is
    /// the injectivity radius, valid here because the rank-one closed-form
    /// continuation converges on all of t < pi; uniqueness is the Carlson
    /// threshold pi on the integer lattice.
    pub fn radius_bounds(&self) -> RadiusBounds {
        RadiusBounds {
            r_forward_conservative: self.omega_radius_t,
            r_forward_sharp: self.inj_radius_t,
            r_unique: PI,
            inj_radius_t: self.inj_radius_t,
        }
    }

    /// Derivative dlambda/dsigma for ray sampling in angle units.
    ///
    /// Spherical functions oscillate like exp(i (l + rho_c) t) in the
    /// geodesic angle except on the group, whose characters oscillate like
    /// exp(i (n+1) theta / 2); stepping the n-coordinate twice as fast makes
    /// fitted exponential types directly comparable to angle-space support
    /// radii for every space.
    pub fn sigma_scale(&self) -> f64 {
        match self.kind {
            SpaceKind::GroupSu2 => 2.0,
            _ => 1.0,
        }
    }

    /// Eigenvalue of the radial Laplacian on the degree-l spherical function,
    /// in the angle units of this space: -l(l + 2 rho_c), scaled by the
    /// square of the spectral pairing for the group chart.
    pub fn laplace_eigenvalue(&self, l: f64) -> f64 {
        let s = self.sigma_scale();
        -l * (l + 2.0 * self.rho_c) / (s * s)
    }
}
