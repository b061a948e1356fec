//! Holomorphic-extension sampling and the measurement side of the support /
//! exponential-type correspondence: ray extension, type fitting, membership
//! reports, support-radius recovery, and the Carlson sharpness demonstration.
//!
//! Rays are sampled through the Weyl-fixed point -rho_c in the imaginary
//! direction, where the extension of a real radial function is real and
//! sign-stable, so the fitted slope of log |g| directly estimates the
//! exponential type.  The fit solves least squares against {sigma,
//! sqrt(sigma), 1} over the top half of the sampled range: smooth bumps
//! carry an exp(-c sqrt(sigma)) subexponential factor whose raw slope bias
//! decays only like sqrt(1/sigma), far too slowly for a 10% radius estimate
//! at desk-scale sigma, while the corrected fit recovers the type to a
//! couple of percent and is exact on pure exponentials.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::SpaceDescriptor;
use crate::transform::{forward_value, RadialFunction};

/// Values of a coefficient extension g along a ray in the spectral plane,
/// lambda(sigma) = center + direction * sigma * scale.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RaySamples {
    pub space: String,
    pub center: Complex64,
    pub direction: Complex64,
    pub sigmas: Vec<f64>,
    pub values: Vec<Complex64>,
    /// True when the overflow guard cut the requested sigma range short.
    pub truncated: bool,
}

/// Fitted exponential type with fit diagnostics.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TypeFitReport {
    pub r_hat: f64,
    pub window: (f64, f64),
    pub slope_stderr: f64,
    pub envelope_used: bool,
    /// Set when the sampled ray was identically zero; the type of the zero
    /// function is reported as 0.
    pub zero_input: bool,
}

/// Which functional equation the symmetry residual measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeylSymmetry {
    /// g(w(lambda)) = g(lambda) (radial case).
    #[serde(rename = "invariant")]
    Invariant,
    /// g(w(lambda)) = -g(lambda) (group character case).
    #[serde(rename = "sign-twisted")]
    SignTwisted,
}

/// Verdict of the membership test against the growth/decay/symmetry axioms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PwReport {
    pub type_fit: TypeFitReport,
    /// k -> C_k with C_k = max_l |g(l)| (1+l)^k over the sampled lattice.
    pub decay_constants: BTreeMap<u32, f64>,
    pub symmetry_residual: f64,
    pub symmetry: WeylSymmetry,
    pub verdict_for_r: bool,
    pub claimed_r: f64,
    /// Verdict tolerance: r_hat <= claimed_r * (1 + rel) + abs.
    pub tolerance_rel: f64,
    pub tolerance_abs: f64,
    pub symmetry_threshold: f64,
    /// Fraction of grid evaluations that succeeded.
    pub coverage: f64,
}

pub const VERDICT_TOLERANCE_REL: f64 = 0.10;
pub const VERDICT_TOLERANCE_ABS: f64 = 0.02;
pub const SYMMETRY_THRESHOLD: f64 = 1e-8;

/// Support-radius estimate from [`support_radius`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SupportEstimate {
    pub r_hat: f64,
    pub zero_function: bool,
    pub fit: TypeFitReport,
}

/// Evaluate the coefficient extension of `f` along the ray
/// center + direction * sigma * scale with center = -rho_c.
///
/// When the overflow guard trips at some sigma the ray is truncated there
/// and flagged rather than failed, provided at least two samples survive.
pub fn extend_on_ray(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    direction: Complex64,
    sigmas: &[f64],
) -> Result<RaySamples> {
    if sigmas.is_empty() {
        return Err(Error::DegenerateInput {
            reason: "empty sigma list".into(),
        });
    }
    if sigmas.windows(2).any(|w| w[1] <= w[0]) || sigmas[0] < 0.0 {
        return Err(Error::DegenerateInput {
            reason: "sigmas must be nonnegative and strictly increasing".into(),
        });
    }
    let dir = direction / direction.norm();
    let center = Complex64::new(-space.rho_c, 0.0);
    let scale = space.sigma_scale();
    let evals: Vec<Result<Complex64>> = sigmas
        .par_iter()
        .map(|&s| forward_value(space, f, center + dir * s * scale))
        .collect();
    let mut kept_sigmas = Vec::with_capacity(sigmas.len());
    let mut values = Vec::with_capacity(sigmas.len());
    let mut truncated = false;
    for (s, ev) in sigmas.iter().zip(evals) {
        match ev {
            Ok(v) => {
                kept_sigmas.push(*s);
                values.push(v);
            }
            Err(Error::Overflow { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if truncated && kept_sigmas.is_empty() {
        // a well-formed job whose numbers blow past the guard: numeric failure
        return Err(Error::Overflow {
            exponent: sigmas[0]
                * space.sigma_scale()
                * f.support_radius_hint().unwrap_or(space.inj_radius_t),
        });
    }
    Ok(RaySamples {
        space: space.name.clone(),
        center,
        direction: dir,
        sigmas: kept_sigmas,
        values,
        truncated,
    })
}

/// Least-squares exponential type of the sampled ray.
///
/// Requires at least 20 samples reaching sigma_max >= 60.  If sign changes
/// or deep dips are detected the running max over a sigma-window of width 5
/// replaces the raw magnitudes before fitting.
pub fn fit_exponential_type(ray: &RaySamples) -> Result<TypeFitReport> {
    let n = ray.sigmas.len();
    let sigma_max = ray.sigmas.last().copied().unwrap_or(0.0);
    if n < 20 || sigma_max < 60.0 {
        return Err(Error::InsufficientRay {
            got: n,
            sigma_max,
            min_samples: 20,
            min_sigma_max: 60.0,
        });
    }
    let mags: Vec<f64> = ray.values.iter().map(|v| v.norm()).collect();
    if mags.iter().all(|&m| m < 1e-300) {
        return Ok(TypeFitReport {
            r_hat: 0.0,
            window: (ray.sigmas[0], sigma_max),
            slope_stderr: 0.0,
            envelope_used: false,
            zero_input: true,
        });
    }

    let envelope_used = needs_envelope(&ray.values, &mags);
    let work: Vec<f64> = if envelope_used {
        running_max(&ray.sigmas, &mags, 5.0)
    } else {
        mags.clone()
    };

    let lo = (ray.sigmas[0] + sigma_max) / 2.0;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (i, &s) in ray.sigmas.iter().enumerate() {
        if s >= lo && work[i] > 0.0 {
            xs.push(s);
            ys.push(work[i].ln());
        }
    }
    if xs.len() < 6 {
        // fall back to the whole ray if the window starved (heavy truncation)
        xs.clear();
        ys.clear();
        for (i, &s) in ray.sigmas.iter().enumerate() {
            if work[i] > 0.0 {
                xs.push(s);
                ys.push(work[i].ln());
            }
        }
    }
    if xs.len() < 4 {
        return Err(Error::DegenerateInput {
            reason: "too few nonzero magnitudes to fit a type".into(),
        });
    }
    // enveloped (oscillatory) magnitudes form a staircase whose noise
    // swamps the sqrt(sigma) curvature signal, so the subexponential
    // correction term is dropped there
    let (slope, stderr) = ls_slope(&xs, &ys, !envelope_used);
    Ok(TypeFitReport {
        r_hat: slope.max(0.0),
        window: (xs[0], *xs.last().unwrap()),
        slope_stderr: stderr,
        envelope_used,
        zero_input: false,
    })
}

fn needs_envelope(values: &[Complex64], mags: &[f64]) -> bool {
    let peak = mags.iter().cloned().fold(0.0f64, f64::max);
    for w in values.windows(2) {
        let (a, b) = (w[0], w[1]);
        let real_dominant = a.re.abs() >= a.im.abs() && b.re.abs() >= b.im.abs();
        if real_dominant && a.re * b.re < 0.0 && a.norm() > 1e-250 * peak {
            return true;
        }
    }
    // a genuine oscillation dip sits far below both neighbors; steep
    // monotone growth must not trip this
    mags.windows(3)
        .any(|w| w[1] < 0.05 * w[0].min(w[2]) && w[0].min(w[2]) > 0.0)
}

fn running_max(sigmas: &[f64], mags: &[f64], width: f64) -> Vec<f64> {
    sigmas
        .iter()
        .map(|&s| {
            sigmas
                .iter()
                .zip(mags)
                .filter(|(&sj, _)| (sj - s).abs() <= width / 2.0)
                .map(|(_, &m)| m)
                .fold(0.0f64, f64::max)
        })
        .collect()
}

/// LS fit of y ~ r*x [+ c*sqrt(x)] + d via thin QR (modified Gram-Schmidt);
/// returns (r, stderr of r).  The sqrt column is nearly collinear with the
/// linear one over a narrow window, so the normal equations are avoided.
fn ls_slope(xs: &[f64], ys: &[f64], with_sqrt_term: bool) -> (f64, f64) {
    let n = xs.len();
    let m = if with_sqrt_term { 3 } else { 2 };
    let dot = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut q: Vec<Vec<f64>> = vec![xs.to_vec()];
    if with_sqrt_term {
        q.push(xs.iter().map(|&x| x.sqrt()).collect());
    }
    q.push(vec![1.0; n]);
    let mut r = vec![vec![0.0f64; m]; m];
    for j in 0..m {
        for i in 0..j {
            let d = dot(&q[i], &q[j]);
            r[i][j] = d;
            let qi = q[i].clone();
            for (t, s) in q[j].iter_mut().zip(&qi) {
                *t -= d * s;
            }
        }
        let norm = dot(&q[j], &q[j]).sqrt();
        r[j][j] = norm.max(1e-300);
        for v in q[j].iter_mut() {
            *v /= r[j][j];
        }
    }
    let qty: Vec<f64> = (0..m).map(|i| dot(&q[i], ys)).collect();
    let mut beta = vec![0.0f64; m];
    for i in (0..m).rev() {
        let mut s = qty[i];
        for j in i + 1..m {
            s -= r[i][j] * beta[j];
        }
        beta[i] = s / r[i][i];
    }
    let mut rss = 0.0;
    for (k, &y) in ys.iter().enumerate() {
        let mut fit = beta[0] * xs[k] + beta[m - 1];
        if with_sqrt_term {
            fit += beta[1] * xs[k].sqrt();
        }
        rss += (y - fit) * (y - fit);
    }
    // (A^T A)^{-1}_00 = sum_k Rinv[0][k]^2 for the upper-triangular R
    let rinv = invert_upper(&r);
    let var00: f64 = (0..m).map(|k| rinv[0][k] * rinv[0][k]).sum();
    let dof = (n as f64 - m as f64).max(1.0);
    let stderr = (rss / dof * var00).max(0.0).sqrt();
    (beta[0], stderr)
}

fn invert_upper(r: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let m = r.len();
    let mut inv = vec![vec![0.0f64; m]; m];
    #[allow(clippy::needless_range_loop)]
    for i in (0..m).rev() {
        inv[i][i] = 1.0 / r[i][i];
        for j in i + 1..m {
            let mut s = 0.0;
            for k in i + 1..=j {
                s += r[i][k] * inv[k][j];
            }
            inv[i][j] = -s / r[i][i];
        }
    }
    inv
}

/// Deterministic complex offsets used for the symmetry grid.
pub(crate) fn symmetry_offsets() -> Vec<Complex64> {
    let mut grid = Vec::new();
    for &u in &[0.5, 1.25, 2.0, 3.0, 4.0, 5.0] {
        for &v in &[1.0, 2.0, 3.5, 5.0, 8.0] {
            grid.push(Complex64::new(u, v));
        }
    }
    grid
}

/// Max symmetry residual |g(reflect(lambda)) - twist * g(lambda)| / (1+|g|)
/// over the offset grid around the center; also returns the success
/// fraction.
pub(crate) fn symmetry_residual<G>(
    g: &G,
    center: Complex64,
    reflect: impl Fn(Complex64) -> Complex64,
    twist: f64,
) -> (f64, usize, usize)
where
    G: Fn(Complex64) -> Result<Complex64> + ?Sized,
{
    let mut worst = 0.0f64;
    let mut ok = 0usize;
    let mut total = 0usize;
    for s in symmetry_offsets() {
        total += 1;
        let lambda = center + s;
        if let (Ok(v), Ok(w)) = (g(lambda), g(reflect(lambda))) {
            ok += 1;
            let res = (w - twist * v).norm() / (1.0 + v.norm());
            worst = worst.max(res);
        }
    }
    (worst, ok, total)
}

/// C_k = max over the lattice window of |g(l)| (1+l)^k for k = 0..=8.
pub(crate) fn decay_constants<G>(g: &G, lattice: &[f64]) -> (BTreeMap<u32, f64>, usize, usize)
where
    G: Fn(Complex64) -> Result<Complex64> + ?Sized,
{
    let mut constants = BTreeMap::new();
    let mut ok = 0usize;
    let mut total = 0usize;
    let mut points = Vec::new();
    for &l in lattice {
        total += 1;
        if let Ok(v) = g(Complex64::new(l, 0.0)) {
            ok += 1;
            points.push((l.abs(), v.norm()));
        }
    }
    for k in 0..=8u32 {
        let ck = points
            .iter()
            .map(|&(l, m)| m * (1.0 + l).powi(k as i32))
            .fold(0.0f64, f64::max);
        constants.insert(k, ck);
    }
    (constants, ok, total)
}

pub(crate) fn ray_from_accessor<G>(
    g: &G,
    space_name: &str,
    center: Complex64,
    scale: f64,
    sigma_max: f64,
) -> Result<RaySamples>
where
    G: Fn(Complex64) -> Result<Complex64> + ?Sized,
{
    let n = 40;
    let sigma_min = 2.0;
    let mut sigmas = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    let mut truncated = false;
    for i in 0..n {
        let s = sigma_min + (sigma_max - sigma_min) * i as f64 / (n - 1) as f64;
        match g(center + Complex64::new(0.0, s * scale)) {
            Ok(v) => {
                sigmas.push(s);
                values.push(v);
            }
            Err(Error::Overflow { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(RaySamples {
        space: space_name.to_owned(),
        center,
        direction: Complex64::new(0.0, 1.0),
        sigmas,
        values,
        truncated,
    })
}

/// Membership test of a coefficient extension against exponential type
/// `claimed_r`, Weyl invariance, and rapid decay on the lattice.
///
/// `g` is any accessor for the extension (typically a closure over
/// [`forward_value`] or over a stored table).  Evaluation failures are
/// tolerated pointwise and reported through `coverage`.
pub fn pw_membership<G>(
    space: &SpaceDescriptor,
    g: &G,
    claimed_r: f64,
    sigma_max: f64,
) -> Result<PwReport>
where
    G: Fn(Complex64) -> Result<Complex64> + ?Sized,
{
    let center = Complex64::new(-space.rho_c, 0.0);
    let (sym, sym_ok, sym_total) = symmetry_residual(g, center, |l| space.weyl_reflect(l), 1.0);
    let lattice: Vec<f64> = space
        .spherical_lattice(60.0)
        .into_iter()
        .filter(|&l| l >= 0.0)
        .collect();
    let (constants, dec_ok, dec_total) = decay_constants(g, &lattice);
    let ray = ray_from_accessor(g, &space.name, center, space.sigma_scale(), sigma_max)?;
    let type_fit = fit_exponential_type(&ray)?;
    let finite = constants.values().all(|c| c.is_finite());
    let coverage = (sym_ok + dec_ok) as f64 / (sym_total + dec_total) as f64;
    let verdict = type_fit.r_hat
        <= claimed_r * (1.0 + VERDICT_TOLERANCE_REL) + VERDICT_TOLERANCE_ABS
        && sym <= SYMMETRY_THRESHOLD
        && finite;
    Ok(PwReport {
        type_fit,
        decay_constants: constants,
        symmetry_residual: sym,
        symmetry: WeylSymmetry::Invariant,
        verdict_for_r: verdict,
        claimed_r,
        tolerance_rel: VERDICT_TOLERANCE_REL,
        tolerance_abs: VERDICT_TOLERANCE_ABS,
        symmetry_threshold: SYMMETRY_THRESHOLD,
        coverage,
    })
}

/// Default sigma grid used by [`support_radius`].
pub fn default_support_sigmas() -> Vec<f64> {
    (0..31).map(|i| 60.0 + 2.0 * i as f64).collect()
}

/// Measure the support radius of `f` from the growth of its extension:
/// sample the imaginary ray and fit the exponential type.
pub fn support_radius(space: &SpaceDescriptor, f: &RadialFunction) -> Result<SupportEstimate> {
    support_radius_with(space, f, &default_support_sigmas())
}

/// [`support_radius`] with a caller-chosen sigma grid.
pub fn support_radius_with(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    sigmas: &[f64],
) -> Result<SupportEstimate> {
    if f.is_identically_zero() {
        return Ok(SupportEstimate {
            r_hat: 0.0,
            zero_function: true,
            fit: TypeFitReport {
                r_hat: 0.0,
                window: (0.0, 0.0),
                slope_stderr: 0.0,
                envelope_used: false,
                zero_input: true,
            },
        });
    }
    let ray = extend_on_ray(space, f, Complex64::new(0.0, 1.0), sigmas)?;
    let fit = fit_exponential_type(&ray)?;
    Ok(SupportEstimate {
        r_hat: fit.r_hat,
        zero_function: fit.zero_input,
        fit,
    })
}

/// Outcome of the Carlson sharpness demonstration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CarlsonReport {
    /// max over l = 0..=60 of |phi(l)| for phi(lambda) = cos(pi (lambda + 1/2)).
    pub max_abs_on_lattice: f64,
    pub symmetry_residual: f64,
    pub type_fit: TypeFitReport,
    /// The uniqueness threshold the demonstration exhibits: pi.
    pub threshold: f64,
    pub lattice_vanishing_ok: bool,
    pub type_within_two_percent: bool,
}

/// The function cos(pi (lambda + 1/2)) vanishes on the whole lattice, is
/// Weyl-symmetric about -1/2, and has exponential type exactly pi: lattice
/// values pin down membership only below type pi.
pub fn carlson_sharpness() -> Result<CarlsonReport> {
    let phi = |lambda: Complex64| -> Complex64 { (PI * (lambda + 0.5)).cos() };

    let max_abs = (0..=60)
        .map(|l| phi(Complex64::new(l as f64, 0.0)).norm())
        .fold(0.0f64, f64::max);

    let center = Complex64::new(-0.5, 0.0);
    let mut sym = 0.0f64;
    for s in symmetry_offsets() {
        let v = phi(center + s);
        let w = phi(center - s);
        sym = sym.max((v - w).norm() / (1.0 + v.norm()));
    }

    let sigmas: Vec<f64> = (0..31).map(|i| 60.0 + 2.0 * i as f64).collect();
    let values: Vec<Complex64> = sigmas
        .iter()
        .map(|&s| phi(center + Complex64::new(0.0, s)))
        .collect();
    let ray = RaySamples {
        space: "s2".to_owned(),
        center,
        direction: Complex64::new(0.0, 1.0),
        sigmas,
        values,
        truncated: false,
    };
    let type_fit = fit_exponential_type(&ray)?;
    Ok(CarlsonReport {
        max_abs_on_lattice: max_abs,
        symmetry_residual: sym,
        type_fit,
        threshold: PI,
        lattice_vanishing_ok: max_abs <= 1e-9,
        type_within_two_percent: (type_fit.r_hat - PI).abs() <= 0.02 * PI,
    })
}
