//! The spherical Fourier transform by quadrature, series synthesis,
//! representation dimensions via Schur orthogonality, and the Laplacian
//! eigenrelation and Parseval checks.
//!
//! For a radial function f on a space with normalized density w the
//! transform is
//!
//! ```text
//!     f~(lambda) = int_0^pi f(t) psi_lambda(t) w(t) dt,
//! ```
//!
//! evaluated by Gauss-Legendre quadrature restricted to the support of f,
//! with the node count tied to the oscillation count |lambda| and doubled
//! until two successive values agree to 1e-12 relative.  The same formula at
//! complex lambda *is* the holomorphic extension consumed by the type
//! fitting in [`crate::holo`].

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{SpaceDescriptor, SpaceKind};
use crate::quad::{
    adaptive_oscillatory, composite_boole_complex, composite_simpson_complex, Quadrature,
};
use crate::special::{spherical_fn, spherical_poly, weight_density};

/// A radial (K-invariant) function on the chart t in [0, pi].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RadialFunction {
    /// exp(-p t^2 / (r^2 - t^2)) inside [0, r), identically zero outside;
    /// smooth with compact support exactly [0, r].
    Bump { radius: f64, sharpness: f64 },
    /// cos^q(pi t / (2r)) inside [0, r]; exactly C^(q-1) at t = r, for
    /// calibrated algebraic coefficient decay.
    CosPow { radius: f64, power: u32 },
    /// The degree-l spherical function of the space itself; its transform is
    /// supported on the single lattice point l.
    PolySpherical { degree: u32 },
    /// Uniform samples on [0, pi], endpoints included.
    Samples {
        values: Vec<f64>,
        support_hint: Option<f64>,
    },
}

/// Default bump sharpness; calibrated so that type fits, roundtrip, and
/// decay diagnostics all sit well inside their tolerances.
pub const DEFAULT_BUMP_SHARPNESS: f64 = 3.0;

impl RadialFunction {
    pub fn bump(radius: f64) -> Self {
        RadialFunction::Bump {
            radius,
            sharpness: DEFAULT_BUMP_SHARPNESS,
        }
    }

    pub fn cospow(radius: f64, power: u32) -> Self {
        RadialFunction::CosPow { radius, power }
    }

    pub fn poly_spherical(degree: u32) -> Self {
        RadialFunction::PolySpherical { degree }
    }

    /// Wrap uniform samples over [0, pi] (endpoints included).  The count
    /// must be 4k+1 so sampled transforms can use the composite Boole rule.
    pub fn from_samples(values: Vec<f64>) -> Result<Self> {
        if values.len() < 5 || !(values.len() - 1).is_multiple_of(4) {
            return Err(Error::BadSampleGrid {
                reason: format!("need 4k+1 uniform samples on [0, pi], got {}", values.len()),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::BadSampleGrid {
                reason: "samples contain non-finite values".into(),
            });
        }
        Ok(RadialFunction::Samples {
            values,
            support_hint: None,
        })
    }

    /// Pointwise value.  Sampled functions interpolate linearly.
    pub fn eval(&self, space: &SpaceDescriptor, t: f64) -> f64 {
        match self {
            RadialFunction::Bump { radius, sharpness } => bump_profile(t, *radius, *sharpness),
            RadialFunction::CosPow { radius, power } => {
                if t.abs() >= *radius {
                    0.0
                } else {
                    (PI * t / (2.0 * radius)).cos().powi(*power as i32)
                }
            }
            RadialFunction::PolySpherical { degree } => spherical_poly(space, *degree, t),
            RadialFunction::Samples { values, .. } => {
                let n = values.len();
                let x = (t / PI) * (n - 1) as f64;
                if x <= 0.0 {
                    return values[0];
                }
                if x >= (n - 1) as f64 {
                    return values[n - 1];
                }
                let i = x.floor() as usize;
                let frac = x - i as f64;
                values[i] * (1.0 - frac) + values[i + 1] * frac
            }
        }
    }

    /// Support radius when the closed form pins one down.
    pub fn support_radius_hint(&self) -> Option<f64> {
        match self {
            RadialFunction::Bump { radius, .. } | RadialFunction::CosPow { radius, .. } => {
                Some(*radius)
            }
            RadialFunction::Samples { support_hint, .. } => *support_hint,
            RadialFunction::PolySpherical { .. } => None,
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        match self {
            RadialFunction::Samples { values, .. } => values.iter().all(|v| *v == 0.0),
            _ => false,
        }
    }

    /// Short human-readable descriptor, used as table provenance.
    pub fn describe(&self) -> String {
        match self {
            RadialFunction::Bump { radius, sharpness } => format!("bump(r={radius},p={sharpness})"),
            RadialFunction::CosPow { radius, power } => format!("cospow(r={radius},q={power})"),
            RadialFunction::PolySpherical { degree } => format!("sph(l={degree})"),
            RadialFunction::Samples { values, .. } => format!("samples(n={})", values.len()),
        }
    }
}

pub(crate) fn bump_profile(t: f64, radius: f64, sharpness: f64) -> f64 {
    let u = t.abs();
    if u >= radius {
        return 0.0;
    }
    (-sharpness * u * u / (radius * radius - u * u)).exp()
}

/// One transform entry: lattice point, value, and quadrature error estimate.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub l: f64,
    pub value: Complex64,
    pub quad_err: f64,
}

/// Spectral data l -> f~(l) over the spherical lattice, with provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub space: String,
    pub function: String,
    pub entries: Vec<CoefficientEntry>,
    pub max_nodes: usize,
    pub max_quad_err: f64,
}

impl CoefficientTable {
    pub fn lookup(&self, l: f64) -> Option<Complex64> {
        self.entries
            .iter()
            .find(|e| (e.l - l).abs() < 0.5)
            .map(|e| e.value)
    }
}

fn reject_group(space: &SpaceDescriptor, what: &str) -> Result<()> {
    if matches!(space.kind, SpaceKind::GroupSu2) {
        return Err(Error::InvalidRequest {
            reason: format!(
                "{what} works on the radial chart [0, pi]; use the group module for su2-group"
            ),
        });
    }
    Ok(())
}

/// The spherical Fourier transform of `f` at spectral parameter `lambda`
/// (any complex number: integer lattice values give the classical
/// coefficients, everything else the holomorphic extension).
pub fn forward(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    lambda: Complex64,
) -> Result<Quadrature> {
    reject_group(space, "the spherical transform")?;
    match f {
        RadialFunction::Samples { values, .. } => forward_sampled(space, values, lambda),
        _ => {
            let sup = f.support_radius_hint().unwrap_or(PI).min(PI);
            if sup <= 0.0 {
                return Ok(Quadrature {
                    value: Complex64::new(0.0, 0.0),
                    est_error: 0.0,
                    nodes: 0,
                });
            }
            adaptive_oscillatory(0.0, sup, lambda.norm(), |t| {
                let fv = f.eval(space, t);
                if fv == 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                Ok(fv * weight_density(space, t) * spherical_fn(space, lambda, t)?)
            })
        }
    }
}

fn forward_sampled(
    space: &SpaceDescriptor,
    values: &[f64],
    lambda: Complex64,
) -> Result<Quadrature> {
    let n = values.len();
    if n < 5 || !(n - 1).is_multiple_of(4) {
        return Err(Error::BadSampleGrid {
            reason: format!("need 4k+1 uniform samples on [0, pi], got {n}"),
        });
    }
    let h = PI / (n - 1) as f64;
    let mut integrand = Vec::with_capacity(n);
    for (i, &fv) in values.iter().enumerate() {
        if fv == 0.0 {
            integrand.push(Complex64::new(0.0, 0.0));
            continue;
        }
        let t = i as f64 * h;
        integrand.push(fv * weight_density(space, t) * spherical_fn(space, lambda, t)?);
    }
    let value = composite_boole_complex(&integrand, h)?;
    let cross = composite_simpson_complex(&integrand, h)?;
    Ok(Quadrature {
        value,
        est_error: (value - cross).norm(),
        nodes: n,
    })
}

/// Convenience: just the transform value.
pub fn forward_value(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    lambda: Complex64,
) -> Result<Complex64> {
    forward(space, f, lambda).map(|q| q.value)
}

/// Transform over the whole spherical lattice up to `l_max`.
///
/// All lattice degrees share one Gauss-Legendre node set sized for the top
/// degree, and the recurrence for psi_l streams across degrees at each node,
/// so the whole table costs O(l_max^2) instead of one quadrature per degree.
/// The node count doubles until every entry is stable to 1e-12 relative
/// (with the same rounding floor as the pointwise transform).
pub fn coefficient_table(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    l_max: f64,
) -> Result<CoefficientTable> {
    reject_group(space, "the spherical transform")?;
    let lattice = space.spherical_lattice(l_max);
    let entries = match f {
        // sampled input: fixed grid, one Boole pass per degree
        RadialFunction::Samples { .. } => lattice
            .par_iter()
            .map(|&l| {
                let q = forward(space, f, Complex64::new(l, 0.0))?;
                Ok(CoefficientEntry {
                    l,
                    value: q.value,
                    quad_err: q.est_error,
                })
            })
            .collect::<Result<Vec<CoefficientEntry>>>()?,
        _ => lattice_table_closed_form(space, f, &lattice)?,
    };
    let worst = entries.iter().map(|e| e.quad_err).fold(0.0f64, f64::max);
    Ok(CoefficientTable {
        space: space.name.clone(),
        function: f.describe(),
        entries,
        max_nodes: (8.0 * l_max.max(1.0) + 64.0).ceil() as usize,
        max_quad_err: worst,
    })
}

/// Shared-node batched quadrature over an integer lattice (closed forms).
fn lattice_table_closed_form(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    lattice: &[f64],
) -> Result<Vec<CoefficientEntry>> {
    const MAX_DOUBLINGS: usize = 4;
    if lattice.is_empty() {
        return Ok(Vec::new());
    }
    let sup = f.support_radius_hint().unwrap_or(PI).min(PI);
    if sup <= 0.0 {
        return Ok(lattice
            .iter()
            .map(|&l| CoefficientEntry {
                l,
                value: Complex64::new(0.0, 0.0),
                quad_err: 0.0,
            })
            .collect());
    }
    let top = lattice.iter().fold(0.0f64, |m, l| m.max(l.abs())) as u32;

    // one pass at a fixed rule: values and absolute-mass per degree 0..=top;
    // nodes are processed as a parallel map over fixed chunks, reduced in
    // chunk order so results stay byte-deterministic
    let run = |n: usize| -> (Vec<f64>, Vec<f64>) {
        let rule = crate::quad::GaussLegendre::cached(n);
        let nodes: Vec<(f64, f64)> = rule.mapped(0.0, sup).collect();
        let size = top as usize + 1;
        let partials: Vec<(Vec<f64>, Vec<f64>)> = nodes
            .par_chunks(2048)
            .map(|chunk| {
                let mut acc = vec![0.0f64; size];
                let mut abs = vec![0.0f64; size];
                for &(t, w) in chunk {
                    let fv = f.eval(space, t);
                    if fv == 0.0 {
                        continue;
                    }
                    let base = w * fv * weight_density(space, t);
                    match space.kind {
                        SpaceKind::Torus => {
                            // stream cos(k t) by the Chebyshev recurrence
                            let c = t.cos();
                            let mut prev = 1.0;
                            let mut cur = c;
                            for k in 0..size {
                                let psi = if k == 0 { 1.0 } else { cur };
                                acc[k] += base * psi;
                                abs[k] += base.abs() * psi.abs();
                                if k >= 1 {
                                    let next = 2.0 * c * cur - prev;
                                    prev = cur;
                                    cur = next;
                                }
                            }
                        }
                        _ => {
                            let mut stream = NormalizedJacobi::new(space, t);
                            for k in 0..size {
                                let psi = stream.next_value();
                                acc[k] += base * psi;
                                abs[k] += base.abs() * psi.abs();
                            }
                        }
                    }
                }
                (acc, abs)
            })
            .collect();
        let mut acc = vec![0.0f64; size];
        let mut abs = vec![0.0f64; size];
        for (pa, pb) in partials {
            for k in 0..size {
                acc[k] += pa[k];
                abs[k] += pb[k];
            }
        }
        (acc, abs)
    };

    let mut n = (8.0 * (top as f64).max(1.0) + 64.0).ceil() as usize;
    let (mut prev, mut prev_abs) = run(n);
    for doubling in 1..=MAX_DOUBLINGS {
        n *= 2;
        let (cur, cur_abs) = run(n);
        let mut worst_rel = 0.0f64;
        let mut errs = vec![0.0f64; cur.len()];
        let mut all_ok = true;
        for k in 0..cur.len() {
            let diff = (cur[k] - prev[k]).abs();
            errs[k] = diff;
            let floor = 1000.0 * f64::EPSILON * cur_abs[k].max(prev_abs[k]) + f64::MIN_POSITIVE;
            if diff > 1e-12 * cur[k].abs() + floor {
                all_ok = false;
                worst_rel = worst_rel.max(diff / cur[k].abs().max(f64::MIN_POSITIVE));
            }
        }
        if all_ok {
            return Ok(lattice
                .iter()
                .map(|&l| {
                    let k = l.abs() as usize;
                    CoefficientEntry {
                        l,
                        value: Complex64::new(cur[k], 0.0),
                        quad_err: errs[k],
                    }
                })
                .collect());
        }
        if doubling == MAX_DOUBLINGS {
            return Err(Error::QuadratureStalled {
                doublings: MAX_DOUBLINGS,
                nodes: n,
                previous: Complex64::new(worst_rel, 0.0),
                current: Complex64::new(0.0, 0.0),
            });
        }
        prev = cur;
        prev_abs = cur_abs;
    }
    unreachable!()
}

/// Representation dimension by Schur orthogonality: d_l = 1 / ||psi_l||^2
/// in L^2 of the normalized measure.  Equals 2l+1 on s2; on the torus this
/// reciprocal norm is 2 for n != 0 and 1 for n = 0 (the two-sided lattice
/// carries unit Plancherel weight instead, see [`synthesize`]).
pub fn dimension(space: &SpaceDescriptor, l: f64) -> Result<f64> {
    reject_group(space, "Schur dimensions")?;
    if (l - l.round()).abs() > 1e-9
        || (matches!(space.kind, SpaceKind::RankOneSymmetric) && l < 0.0)
    {
        return Err(Error::InvalidRequest {
            reason: format!("l={l} is not on the spherical lattice of {}", space.name),
        });
    }
    let deg = l.round().abs() as u32;
    let q = adaptive_oscillatory(0.0, PI, l.abs(), |t| {
        let p = spherical_poly(space, deg, t);
        Ok(Complex64::new(p * p * weight_density(space, t), 0.0))
    })?;
    Ok(1.0 / q.value.re)
}

/// Batched Schur dimensions 1/||psi_k||^2 for k = 0..=top, sharing one node
/// set across degrees like the coefficient tables do.
pub fn schur_dimensions(space: &SpaceDescriptor, top: u32) -> Result<Vec<f64>> {
    reject_group(space, "Schur dimensions")?;
    const MAX_DOUBLINGS: usize = 4;
    let run = |n: usize| -> Vec<f64> {
        let rule = crate::quad::GaussLegendre::cached(n);
        let mut norms = vec![0.0f64; top as usize + 1];
        for (t, w) in rule.mapped(0.0, PI) {
            let base = w * weight_density(space, t);
            match space.kind {
                SpaceKind::Torus => {
                    let c = t.cos();
                    let mut prev = 1.0;
                    let mut cur = c;
                    for (k, slot) in norms.iter_mut().enumerate() {
                        let psi = if k == 0 { 1.0 } else { cur };
                        *slot += base * psi * psi;
                        if k >= 1 {
                            let next = 2.0 * c * cur - prev;
                            prev = cur;
                            cur = next;
                        }
                    }
                }
                _ => {
                    let mut stream = NormalizedJacobi::new(space, t);
                    for slot in norms.iter_mut() {
                        let psi = stream.next_value();
                        *slot += base * psi * psi;
                    }
                }
            }
        }
        norms
    };
    let mut n = (8.0 * (top as f64).max(1.0) + 64.0).ceil() as usize;
    let mut prev = run(n);
    for doubling in 1..=MAX_DOUBLINGS {
        n *= 2;
        let cur = run(n);
        let ok = cur
            .iter()
            .zip(&prev)
            .all(|(&a, &b)| (a - b).abs() <= 1e-12 * a.abs() + 1e-300);
        if ok {
            return Ok(cur.iter().map(|&v| 1.0 / v).collect());
        }
        if doubling == MAX_DOUBLINGS {
            return Err(Error::QuadratureStalled {
                doublings: MAX_DOUBLINGS,
                nodes: n,
                previous: Complex64::new(prev[top as usize], 0.0),
                current: Complex64::new(cur[top as usize], 0.0),
            });
        }
        prev = cur;
    }
    unreachable!()
}

fn synthesis_weights(space: &SpaceDescriptor, lattice: &[f64]) -> Result<Vec<f64>> {
    match space.kind {
        // two-sided exponential series: unit weight per lattice point
        SpaceKind::Torus => Ok(vec![1.0; lattice.len()]),
        _ => {
            let top = lattice.iter().fold(0.0f64, |m, l| m.max(l.abs())) as u32;
            let dims = schur_dimensions(space, top)?;
            Ok(lattice.iter().map(|&l| dims[l.abs() as usize]).collect())
        }
    }
}

/// Partial Fourier series sum_l d_l f~(l) psi_l(t) on the given grid
/// (two-sided with unit weights on the torus).  Imaginary parts of the
/// entries are carried through the sum and dropped at the end; for real
/// input functions they sit at quadrature-error level.
pub fn synthesize(
    space: &SpaceDescriptor,
    table: &CoefficientTable,
    t_grid: &[f64],
) -> Result<Vec<f64>> {
    reject_group(space, "series synthesis")?;
    let lattice: Vec<f64> = table.entries.iter().map(|e| e.l).collect();
    let weights = synthesis_weights(space, &lattice)?;
    let out: Vec<f64> = t_grid
        .par_iter()
        .map(|&t| {
            let mut acc = Complex64::new(0.0, 0.0);
            match space.kind {
                SpaceKind::Torus => {
                    for (e, &w) in table.entries.iter().zip(&weights) {
                        acc += w * e.value * (e.l * t).cos();
                    }
                }
                _ => {
                    // stream the normalized Jacobi recurrence once per t
                    let mut by_degree = vec![Complex64::new(0.0, 0.0); lattice.len()];
                    for (i, e) in table.entries.iter().enumerate() {
                        by_degree[i] = weights[i] * e.value;
                    }
                    let l_top = lattice.last().copied().unwrap_or(0.0) as u32;
                    let mut stream = NormalizedJacobi::new(space, t);
                    for l in 0..=l_top {
                        let psi = stream.next_value();
                        if let Some(idx) = lattice.iter().position(|&x| x as u32 == l) {
                            acc += by_degree[idx] * psi;
                        }
                    }
                }
            }
            acc.re
        })
        .collect();
    Ok(out)
}

/// Streaming normalized-Jacobi evaluator: successive calls return
/// psi_0(t), psi_1(t), psi_2(t), ...
struct NormalizedJacobi {
    alpha: f64,
    beta: f64,
    x: f64,
    k: u32,
    p_prev: f64,
    p_cur: f64,
    norm: f64,
}

impl NormalizedJacobi {
    fn new(space: &SpaceDescriptor, t: f64) -> Self {
        NormalizedJacobi {
            alpha: space.jacobi_a,
            beta: space.jacobi_b,
            x: t.cos(),
            k: 0,
            p_prev: 0.0,
            p_cur: 1.0,
            norm: 1.0,
        }
    }

    fn next_value(&mut self) -> f64 {
        let out = self.p_cur / self.norm;
        let (alpha, beta, x) = (self.alpha, self.beta, self.x);
        let next = if self.k == 0 {
            (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
        } else {
            let kf = (self.k + 1) as f64;
            let c0 = 2.0 * kf * (kf + alpha + beta) * (2.0 * kf + alpha + beta - 2.0);
            let c1 = 2.0 * kf + alpha + beta - 1.0;
            let c2 = (2.0 * kf + alpha + beta) * (2.0 * kf + alpha + beta - 2.0);
            let c3 = alpha * alpha - beta * beta;
            let c4 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * (2.0 * kf + alpha + beta);
            (c1 * (c2 * x + c3) * self.p_cur - c4 * self.p_prev) / c0
        };
        self.p_prev = self.p_cur;
        self.p_cur = next;
        self.k += 1;
        self.norm *= (self.k as f64 + alpha) / self.k as f64;
        out
    }
}

/// Max relative residual of the Laplacian eigenrelation
/// (Delta f)~(l) = -l(l + 2 rho_c) f~(l) over the lattice up to `l_max`,
/// with the residual at l normalized by 1 + |f~(l)| (l+1)^2.
///
/// `grid_points` controls the finite-difference grid (4k+1, >= 257).
pub fn eigen_check(
    space: &SpaceDescriptor,
    f: &RadialFunction,
    l_max: f64,
    grid_points: usize,
) -> Result<f64> {
    reject_group(space, "the eigenrelation check")?;
    let h = PI / (grid_points - 1) as f64;
    let sampled: Vec<f64> = (0..grid_points)
        .map(|i| f.eval(space, i as f64 * h))
        .collect();
    let lap = crate::special::radial_laplacian_samples(space, &sampled)?;
    let lap_fn = RadialFunction::Samples {
        values: lap,
        support_hint: f.support_radius_hint(),
    };
    let mut worst = 0.0f64;
    for l in space.spherical_lattice(l_max) {
        let lhs = forward_value(space, &lap_fn, Complex64::new(l, 0.0))?;
        let coeff = forward_value(space, f, Complex64::new(l, 0.0))?;
        let eig = space.laplace_eigenvalue(l.abs());
        let res = (lhs - eig * coeff).norm() / (1.0 + coeff.norm() * (l.abs() + 1.0).powi(2));
        worst = worst.max(res);
    }
    Ok(worst)
}

/// Parseval diagnostics from [`parseval_check`].
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ParsevalReport {
    pub defect: f64,
    pub l_max_used: f64,
    pub norm_squared: f64,
}

/// Relative defect | sum_l d_l |f~(l)|^2 - ||f||^2 | / ||f||^2, raising
/// l_max in stages until the spectral sum is stable to 1e-12 relative.
pub fn parseval_check(space: &SpaceDescriptor, f: &RadialFunction) -> Result<ParsevalReport> {
    reject_group(space, "the Parseval check")?;
    let sup = f.support_radius_hint().unwrap_or(PI).min(PI);
    let norm2 = adaptive_oscillatory(0.0, sup, 1.0, |t| {
        let fv = f.eval(space, t);
        Ok(Complex64::new(fv * fv * weight_density(space, t), 0.0))
    })?
    .value
    .re;
    if norm2 <= 0.0 {
        return Err(Error::DegenerateInput {
            reason: "Parseval check needs a nonzero function".into(),
        });
    }
    let mut sum = 0.0;
    let mut l_max = 25.0;
    loop {
        let table = coefficient_table(space, f, l_max)?;
        let lattice: Vec<f64> = table.entries.iter().map(|e| e.l).collect();
        let weights = synthesis_weights(space, &lattice)?;
        let total: f64 = table
            .entries
            .iter()
            .zip(&weights)
            .map(|(e, &w)| w * e.value.norm_sqr())
            .sum();
        let increment = total - sum;
        sum = total;
        if increment.abs() <= 1e-12 * sum || l_max >= 400.0 {
            break;
        }
        l_max *= 2.0;
    }
    Ok(ParsevalReport {
        defect: (sum - norm2).abs() / norm2,
        l_max_used: l_max,
        norm_squared: norm2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::catalog_space;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constant_transforms_to_one_at_zero_and_zero_at_three() {
        let s2 = catalog_space("s2").unwrap();
        let one = RadialFunction::poly_spherical(0);
        let v = forward_value(&s2, &one, c(0.0)).unwrap();
        assert!((v.re - 1.0).abs() < 1e-13);
        let v = forward_value(&s2, &one, c(3.0)).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn cosine_against_degree_one_gives_one_third() {
        // 1/2 int_0^pi cos^2 t sin t dt = 1/3 = 1/d(1)
        let s2 = catalog_space("s2").unwrap();
        let f = RadialFunction::poly_spherical(1);
        let v = forward_value(&s2, &f, c(1.0)).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-13);
    }

    #[test]
    fn poly_spherical_table_has_a_single_line() {
        let s2 = catalog_space("s2").unwrap();
        let f = RadialFunction::poly_spherical(2);
        let table = coefficient_table(&s2, &f, 5.0).unwrap();
        for e in &table.entries {
            if (e.l - 2.0).abs() < 0.5 {
                assert!((e.value.re - 0.2).abs() < 1e-12, "f~(2) = {}", e.value.re);
            } else {
                assert!(e.value.norm() < 1e-12, "leak at l={}", e.l);
            }
        }
    }

    #[test]
    fn torus_coefficients_match_a_simpson_oracle() {
        let torus = catalog_space("torus").unwrap();
        let f = RadialFunction::bump(1.0);
        let table = coefficient_table(&torus, &f, 5.0).unwrap();
        // independent dense-grid Simpson of (1/pi) int f cos(nt)
        let m = 200_001;
        let h = 1.0 / (m - 1) as f64;
        for e in &table.entries {
            let mut s = 0.0;
            for i in 0..m {
                let t = i as f64 * h;
                let w = if i == 0 || i == m - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                s += w * bump_profile(t, 1.0, DEFAULT_BUMP_SHARPNESS) * (e.l * t).cos();
            }
            s *= h / (3.0 * PI);
            assert!(
                (e.value.re - s).abs() < 1e-11,
                "n={}: {} vs oracle {}",
                e.l,
                e.value.re,
                s
            );
            assert!(e.value.im.abs() < 1e-13);
        }
    }

    #[test]
    fn torus_negative_and_positive_coefficients_agree() {
        let torus = catalog_space("torus").unwrap();
        let f = RadialFunction::bump(0.8);
        let plus = forward_value(&torus, &f, c(4.0)).unwrap();
        let minus = forward_value(&torus, &f, c(-4.0)).unwrap();
        assert!((plus - minus).norm() < 1e-14);
    }

    #[test]
    fn schur_dimensions_match_closed_forms() {
        let s2 = catalog_space("s2").unwrap();
        assert!((dimension(&s2, 0.0).unwrap() - 1.0).abs() < 1e-10);
        assert!((dimension(&s2, 2.0).unwrap() - 5.0).abs() < 1e-9);

        // harmonic-polynomial counts: dim H_l(S^n) = (2l+n-1)/(n-1) C(l+n-2, l)
        let s4 = catalog_space("s4").unwrap();
        assert!((dimension(&s4, 1.0).unwrap() - 5.0).abs() < 1e-8);
        assert!((dimension(&s4, 2.0).unwrap() - 14.0).abs() < 1e-7);

        let s3 = catalog_space("s3").unwrap();
        assert!((dimension(&s3, 3.0).unwrap() - 16.0).abs() < 1e-8);

        let s5 = catalog_space("s5").unwrap();
        assert!((dimension(&s5, 1.0).unwrap() - 6.0).abs() < 1e-8);
        assert!((dimension(&s5, 2.0).unwrap() - 20.0).abs() < 1e-7);

        // CP^2 spherical representations have dimension (l+1)^3
        let cp2 = catalog_space("cp2").unwrap();
        assert!((dimension(&cp2, 1.0).unwrap() - 8.0).abs() < 1e-8);
        assert!((dimension(&cp2, 2.0).unwrap() - 27.0).abs() < 1e-7);

        let torus = catalog_space("torus").unwrap();
        assert!((dimension(&torus, 0.0).unwrap() - 1.0).abs() < 1e-10);
        assert!((dimension(&torus, 3.0).unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn synthesis_recovers_single_modes() {
        let s2 = catalog_space("s2").unwrap();
        let grid: Vec<f64> = (0..513).map(|i| PI * i as f64 / 512.0).collect();

        let table = coefficient_table(&s2, &RadialFunction::poly_spherical(0), 4.0).unwrap();
        let synth = synthesize(&s2, &table, &grid).unwrap();
        assert!(synth.iter().all(|v| (v - 1.0).abs() < 1e-11));

        let table = coefficient_table(&s2, &RadialFunction::poly_spherical(2), 5.0).unwrap();
        let synth = synthesize(&s2, &table, &grid).unwrap();
        for (i, &t) in grid.iter().enumerate() {
            let expect = spherical_poly(&s2, 2, t);
            assert!((synth[i] - expect).abs() < 1e-10, "t={t}");
        }
    }

    #[test]
    fn bump_roundtrip_at_moderate_truncation() {
        // the default bump family keeps the l_max = 80 partial sum within
        // 1e-6 of the function everywhere
        let s2 = catalog_space("s2").unwrap();
        let f = RadialFunction::bump(1.0);
        let table = coefficient_table(&s2, &f, 80.0).unwrap();
        let grid: Vec<f64> = (0..513).map(|i| PI * i as f64 / 513.0).collect();
        let synth = synthesize(&s2, &table, &grid).unwrap();
        let sup = grid
            .iter()
            .zip(&synth)
            .map(|(&t, &v)| (v - f.eval(&s2, t)).abs())
            .fold(0.0f64, f64::max);
        assert!(sup <= 1e-6, "sup error {sup} at l_max=80");
    }

    #[test]
    fn torus_synthesis_uses_unit_weights() {
        let torus = catalog_space("torus").unwrap();
        let f = RadialFunction::bump(1.2);
        let table = coefficient_table(&torus, &f, 120.0).unwrap();
        let grid: Vec<f64> = (0..257).map(|i| PI * i as f64 / 256.0).collect();
        let synth = synthesize(&torus, &table, &grid).unwrap();
        for (i, &t) in grid.iter().enumerate() {
            assert!(
                (synth[i] - f.eval(&torus, t)).abs() < 1e-7,
                "t={t}: {} vs {}",
                synth[i],
                f.eval(&torus, t)
            );
        }
    }

    #[test]
    fn forward_is_weyl_symmetric_and_conjugation_equivariant() {
        let s2 = catalog_space("s2").unwrap();
        let f = RadialFunction::bump(1.0);
        for &(re, im) in &[(0.4, 2.0), (-1.7, 5.5), (2.3, -1.0)] {
            let lam = Complex64::new(re, im);
            let a = forward_value(&s2, &f, lam).unwrap();
            let b = forward_value(&s2, &f, s2.weyl_reflect(lam)).unwrap();
            assert!((a - b).norm() <= 1e-11 * (1.0 + a.norm()), "lam={lam}");
            let cbar = forward_value(&s2, &f, lam.conj()).unwrap();
            assert!((a.conj() - cbar).norm() <= 1e-11 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn eigenrelation_is_exact_for_a_single_mode() {
        let s2 = catalog_space("s2").unwrap();
        let res = eigen_check(&s2, &RadialFunction::poly_spherical(1), 1.0, 4097).unwrap();
        assert!(res < 1e-10, "residual {res}");
    }

    #[test]
    fn parseval_single_mode_has_no_defect() {
        let s2 = catalog_space("s2").unwrap();
        let rep = parseval_check(&s2, &RadialFunction::poly_spherical(3)).unwrap();
        assert!(rep.defect < 1e-10, "defect {}", rep.defect);
    }

    #[test]
    fn sampled_and_closed_form_transforms_agree() {
        let s2 = catalog_space("s2").unwrap();
        let f = RadialFunction::bump(1.0);
        let n = 4097;
        let h = PI / (n - 1) as f64;
        let samples: Vec<f64> = (0..n).map(|i| f.eval(&s2, i as f64 * h)).collect();
        let fs = RadialFunction::Samples {
            values: samples,
            support_hint: Some(1.0),
        };
        for l in [0.0, 3.0, 10.0] {
            let a = forward_value(&s2, &f, c(l)).unwrap();
            let b = forward_value(&s2, &fs, c(l)).unwrap();
            assert!((a - b).norm() < 1e-11, "l={l}: {a} vs {b}");
        }
    }

    #[test]
    fn forward_is_linear_in_the_function() {
        let s2 = catalog_space("s2").unwrap();
        let n = 2049;
        let h = PI / (n - 1) as f64;
        let f = RadialFunction::bump(1.0);
        let g = RadialFunction::cospow(1.3, 4);
        let combo: Vec<f64> = (0..n)
            .map(|i| {
                let t = i as f64 * h;
                2.5 * f.eval(&s2, t) - 0.75 * g.eval(&s2, t)
            })
            .collect();
        let combo = RadialFunction::Samples {
            values: combo,
            support_hint: Some(1.3),
        };
        let fs: Vec<f64> = (0..n).map(|i| f.eval(&s2, i as f64 * h)).collect();
        let gs: Vec<f64> = (0..n).map(|i| g.eval(&s2, i as f64 * h)).collect();
        let fs = RadialFunction::Samples {
            values: fs,
            support_hint: Some(1.0),
        };
        let gs = RadialFunction::Samples {
            values: gs,
            support_hint: Some(1.3),
        };
        for l in [0.0, 2.0, 7.0] {
            let lhs = forward_value(&s2, &combo, c(l)).unwrap();
            let rhs = 2.5 * forward_value(&s2, &fs, c(l)).unwrap()
                - 0.75 * forward_value(&s2, &gs, c(l)).unwrap();
            assert!((lhs - rhs).norm() < 1e-13, "l={l}");
        }
    }

    #[test]
    fn group_chart_is_rejected_with_guidance() {
        let su2 = catalog_space("su2-group").unwrap();
        let err = forward_value(&su2, &RadialFunction::bump(1.0), c(1.0)).unwrap_err();
        assert!(err.to_string().contains("group module"));
    }
}
