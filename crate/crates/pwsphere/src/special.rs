//! Spherical-function evaluation at complex spectral parameter, characters,
//! the invariant integration density, and the radial Laplacian.
//!
//! On a rank-one space with Jacobi exponents (a, b) the spherical function of
//! spectral parameter lambda is realized in closed form as
//!
//! ```text
//!     psi_lambda(t) = 2F1(-lambda, lambda + a + b + 1; a + 1; sin^2(t/2)),
//! ```
//!
//! which is entire in lambda, equals 1 at t = 0, is invariant under the Weyl
//! reflection lambda -> -lambda - 2 rho_c, and reduces to the normalized
//! Jacobi polynomial at integer lambda (the Legendre polynomial P_l(cos t)
//! on s2).  On the torus psi_lambda(t) = cos(lambda t), and on the group the
//! normalized character chi_n/(n+1) plays the same role.
//!
//! The open 2F1 series is summed directly with the term-ratio recurrence; on
//! the symmetry ray lambda = -rho_c + i sigma every term is positive, so the
//! sum is cancellation-free there.  At (near-)integer lattice points the
//! alternating terminating series is badly conditioned in f64 for moderate
//! degree, so those evaluations route to the three-term Jacobi recurrence
//! instead; a running max-term monitor turns silent digit loss elsewhere
//! into an explicit error.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{SpaceDescriptor, SpaceKind};
use crate::transform::RadialFunction;

/// Hard ceiling on the magnitude exponent of any returned value.
pub const OVERFLOW_GUARD_EXP: f64 = 700.0;

/// Engine margin below pi: the open series needs sin^2(t/2) bounded away
/// from 1.
pub const T_MARGIN: f64 = 1e-6;

/// Evaluation request for [`spherical_eval`].
#[derive(Debug, Clone, Copy)]
pub struct EvalRequest<'a> {
    pub space: &'a SpaceDescriptor,
    pub lambda: Complex64,
    pub t: f64,
    /// Relative tolerance above magnitude one, absolute below it.
    pub tol: f64,
    pub max_terms: usize,
}

impl<'a> EvalRequest<'a> {
    pub fn new(space: &'a SpaceDescriptor, lambda: Complex64, t: f64) -> Self {
        EvalRequest {
            space,
            lambda,
            t,
            tol: 1e-14,
            max_terms: 100_000,
        }
    }
}

/// Gauss hypergeometric series 2F1(a, b; c; z) for real 0 <= z < 1, summed
/// term by term with the ratio recurrence.  Stops once |term| <= tol * |sum|
/// with at least 8 terms taken.  Fails loudly when the terms peak so far
/// above the sum that f64 cannot deliver the requested tolerance.
pub fn hyp2f1_series(
    a: Complex64,
    b: Complex64,
    c: f64,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<Complex64> {
    if !(0.0..1.0).contains(&z) {
        return Err(Error::InvalidRequest {
            reason: format!("series argument z={z} outside [0, 1)"),
        });
    }
    if z == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut max_term = 1.0f64;
    for k in 0..max_terms {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) * z / ((c + kf) * (kf + 1.0));
        sum += term;
        let mag = term.norm();
        max_term = max_term.max(mag);
        if !mag.is_finite() {
            return Err(Error::Overflow { exponent: 700.0 });
        }
        if mag <= tol * sum.norm() && k >= 8 {
            let floor = sum.norm().max(1.0);
            if f64::EPSILON * max_term > 100.0 * tol * floor {
                return Err(Error::PrecisionLoss {
                    max_term,
                    sum: sum.norm(),
                });
            }
            return Ok(sum);
        }
    }
    Err(Error::SeriesTruncated {
        max_terms,
        last_term: term.norm(),
    })
}

/// `lambda` recognized as a nonnegative lattice integer (exactly, up to a
/// 1e-12 slack that absorbs float formatting of lattice points).
fn lattice_integer(lambda: Complex64) -> Option<u32> {
    if lambda.im.abs() > 1e-12 {
        return None;
    }
    let r = lambda.re.round();
    if (lambda.re - r).abs() > 1e-12 * lambda.re.abs().max(1.0) {
        return None;
    }
    if !(0.0..=1e6).contains(&r) {
        return None;
    }
    Some(r as u32)
}

/// Degree-l spherical function by the stable three-term recurrence:
/// the normalized Jacobi polynomial P_l^(a,b)(cos t)/P_l^(a,b)(1) on a
/// rank-one space, cos(l t) on the torus, U_l(cos(t/2))/(l+1) on the group.
/// Valid on all of [0, pi] ([0, 2pi] for the group chart).
pub fn spherical_poly(space: &SpaceDescriptor, l: u32, t: f64) -> f64 {
    match space.kind {
        SpaceKind::Torus => (l as f64 * t).cos(),
        SpaceKind::GroupSu2 => {
            let u = chebyshev_u(l, (t / 2.0).cos());
            u / (l as f64 + 1.0)
        }
        SpaceKind::RankOneSymmetric => {
            let (alpha, beta) = (space.jacobi_a, space.jacobi_b);
            let x = t.cos();
            if l == 0 {
                return 1.0;
            }
            let mut p0 = 1.0;
            let mut p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
            let mut norm = (1.0 + alpha) / 1.0;
            for k in 2..=l {
                let kf = k as f64;
                let c0 = 2.0 * kf * (kf + alpha + beta) * (2.0 * kf + alpha + beta - 2.0);
                let c1 = 2.0 * kf + alpha + beta - 1.0;
                let c2 = (2.0 * kf + alpha + beta) * (2.0 * kf + alpha + beta - 2.0);
                let c3 = alpha * alpha - beta * beta;
                let c4 = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * (2.0 * kf + alpha + beta);
                let p2 = (c1 * (c2 * x + c3) * p1 - c4 * p0) / c0;
                p0 = p1;
                p1 = p2;
                norm *= (kf + alpha) / kf;
            }
            p1 / norm
        }
    }
}

fn chebyshev_u(n: u32, x: f64) -> f64 {
    let mut u0 = 1.0;
    if n == 0 {
        return u0;
    }
    let mut u1 = 2.0 * x;
    for _ in 1..n {
        let u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    u1
}

/// Analytic continuation of the spherical function in the spectral
/// parameter, evaluated at geodesic angle `t`.
///
/// Exactly 1 at t = 0 and invariant under [`SpaceDescriptor::weyl_reflect`]
/// in lambda.  Magnitudes up to exp([`OVERFLOW_GUARD_EXP`]) are allowed;
/// beyond that an [`Error::Overflow`] is returned rather than infinity.
pub fn spherical_eval(req: &EvalRequest) -> Result<Complex64> {
    let EvalRequest {
        space,
        lambda,
        t,
        tol,
        max_terms,
    } = *req;
    if tol <= 0.0 || tol.is_nan() {
        return Err(Error::InvalidRequest {
            reason: format!("tolerance {tol} must be positive"),
        });
    }
    let t_max = match space.kind {
        SpaceKind::GroupSu2 => 2.0 * PI,
        _ => PI,
    };
    if !(0.0..=t_max).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            reason: format!("outside [0, {t_max:.6}]"),
        });
    }
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    match space.kind {
        SpaceKind::Torus => {
            let growth = lambda.im.abs() * t;
            if growth > OVERFLOW_GUARD_EXP {
                return Err(Error::Overflow { exponent: growth });
            }
            Ok((lambda * t).cos())
        }
        SpaceKind::GroupSu2 => {
            let growth = lambda.im.abs() * t / 2.0;
            if growth > OVERFLOW_GUARD_EXP {
                return Err(Error::Overflow { exponent: growth });
            }
            Ok(normalized_character(lambda, t))
        }
        SpaceKind::RankOneSymmetric => {
            if let Some(l) = lattice_integer(lambda) {
                return Ok(Complex64::new(spherical_poly(space, l, t), 0.0));
            }
            if t >= PI - T_MARGIN {
                return Err(Error::TooCloseToPi {
                    t,
                    margin: T_MARGIN,
                });
            }
            let growth = lambda.im.abs() * t;
            if growth > OVERFLOW_GUARD_EXP {
                return Err(Error::Overflow { exponent: growth });
            }
            let z = (t / 2.0).sin().powi(2);
            let a = -lambda;
            let b = lambda + 2.0 * space.rho_c;
            hyp2f1_series(a, b, space.jacobi_a + 1.0, z, tol, max_terms)
        }
    }
}

/// Convenience wrapper around [`spherical_eval`] with default tolerances.
pub fn spherical_fn(space: &SpaceDescriptor, lambda: Complex64, t: f64) -> Result<Complex64> {
    spherical_eval(&EvalRequest::new(space, lambda, t))
}

/// Character of the degree-n representation of SU(2) at the conjugacy angle
/// theta:
///
/// ```text
///     chi_n(theta) = sin((n+1) theta/2) / sin(theta/2),
/// ```
///
/// entire in n with chi_n(0) = n + 1.  For lattice n the removable
/// singularities at theta in 2 pi Z are evaluated through the Chebyshev
/// recurrence; for non-lattice complex n the function genuinely has poles at
/// theta in 2 pi Z \ {0} (the quadratures in the group module never divide
/// by the torus density, so they stay clear of them).
pub fn character_eval(n: Complex64, theta: f64) -> Complex64 {
    if n.im == 0.0 && (n.re - n.re.round()).abs() < 1e-13 && n.re.abs() < 1e6 {
        let ni = n.re.round() as i64;
        let x = (theta / 2.0).cos();
        return Complex64::new(
            match ni {
                _ if ni >= 0 => chebyshev_u(ni as u32, x),
                -1 => 0.0,
                _ => -chebyshev_u((-ni - 2) as u32, x),
            },
            0.0,
        );
    }
    let x = theta / 2.0;
    let s = x.sin();
    if s.abs() > 1e-6 {
        return ((n + 1.0) * x).sin() / s;
    }
    // near x = k pi: split sin((n+1)(k pi + u)) over the small offset u
    let k = (x / PI).round();
    let u = x - k * PI;
    let w = (n + 1.0) * u;
    let ratio = if w.norm() < 0.1 {
        // sin(w)/sin(u) by matched Taylor expansions
        let w2 = w * w;
        let u2 = u * u;
        (n + 1.0) * (1.0 - w2 / 6.0 + w2 * w2 / 120.0) / (1.0 - u2 / 6.0 + u2 * u2 / 120.0)
    } else {
        w.sin() / u.sin()
    };
    let kp = (n + 1.0) * k * PI;
    let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
    if k == 0.0 {
        return ratio;
    }
    sign * (kp.sin() * (w).cos() / u.sin() + kp.cos() * ratio)
}

fn normalized_character(n: Complex64, theta: f64) -> Complex64 {
    let d = n + 1.0;
    if d.norm() > 1e-8 {
        return character_eval(n, theta) / d;
    }
    // n near -1: chi_n/(n+1) -> (theta/2)/sin(theta/2) smoothly
    let x = theta / 2.0;
    let w = d * x;
    let lead = if w.norm() < 0.1 {
        let w2 = w * w;
        x * (1.0 - w2 / 6.0 + w2 * w2 / 120.0)
    } else {
        w.sin() / d
    };
    lead / x.sin()
}

/// Normalized invariant density w(t) on the radial chart, with
/// int_0^pi w(t) dt = 1 (int_0^{2 pi} for the group chart):
///
/// ```text
///     w(t) = sin(t/2)^(2a+1) cos(t/2)^(2b+1) / B(a+1, b+1)
/// ```
///
/// on a rank-one space (sin(t)/2 on s2), the flat 1/pi on the torus, and the
/// Weyl density sin^2(theta/2)/pi on the group.
pub fn weight_density(space: &SpaceDescriptor, t: f64) -> f64 {
    match space.kind {
        SpaceKind::Torus => 1.0 / PI,
        SpaceKind::GroupSu2 => (t / 2.0).sin().powi(2) / PI,
        SpaceKind::RankOneSymmetric => {
            let (a, b) = (space.jacobi_a, space.jacobi_b);
            let c = (ln_gamma(a + b + 2.0) - ln_gamma(a + 1.0) - ln_gamma(b + 1.0)).exp();
            c * (t / 2.0).sin().powf(2.0 * a + 1.0) * (t / 2.0).cos().powf(2.0 * b + 1.0)
        }
    }
}

/// Radial Laplacian Delta f = f'' + (w'/w) f' on uniformly sampled data over
/// [0, pi], by order-4 centered finite differences.  Both endpoints are
/// handled by evenness of radial functions (f extends evenly about t = 0 and
/// t = pi); the endpoint limits are (2a+2) f''(0) and (2b+2) f''(pi).
pub fn radial_laplacian_samples(space: &SpaceDescriptor, values: &[f64]) -> Result<Vec<f64>> {
    if matches!(space.kind, SpaceKind::GroupSu2) {
        return Err(Error::InvalidRequest {
            reason: "radial Laplacian is defined on the [0, pi] chart; the group case works in \
                     the conjugacy angle"
                .into(),
        });
    }
    let n = values.len();
    if n < 257 {
        return Err(Error::GridTooCoarse {
            points: n,
            required: 257,
        });
    }
    let h = PI / (n - 1) as f64;
    let at = |i: isize| -> f64 {
        // even reflection about both ends
        let m = (n - 1) as isize;
        let j = if i < 0 {
            -i
        } else if i > m {
            2 * m - i
        } else {
            i
        };
        values[j as usize]
    };
    let mut out = vec![0.0; n];
    let (a, b) = (space.jacobi_a, space.jacobi_b);
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        let ii = i as isize;
        let d2 = (-at(ii - 2) + 16.0 * at(ii - 1) - 30.0 * at(ii) + 16.0 * at(ii + 1) - at(ii + 2))
            / (12.0 * h * h);
        if i == 0 {
            out[i] = match space.kind {
                SpaceKind::Torus => d2,
                _ => (2.0 * a + 2.0) * d2,
            };
            continue;
        }
        if i == n - 1 {
            out[i] = match space.kind {
                SpaceKind::Torus => d2,
                _ => (2.0 * b + 2.0) * d2,
            };
            continue;
        }
        let d1 = (at(ii - 2) - 8.0 * at(ii - 1) + 8.0 * at(ii + 1) - at(ii + 2)) / (12.0 * h);
        let t = i as f64 * h;
        let drift = match space.kind {
            SpaceKind::Torus => 0.0,
            _ => (2.0 * a + 1.0) / 2.0 / (t / 2.0).tan() - (2.0 * b + 1.0) / 2.0 * (t / 2.0).tan(),
        };
        out[i] = d2 + drift * d1;
    }
    Ok(out)
}

/// [`radial_laplacian_samples`] lifted to a sampled [`RadialFunction`].
pub fn radial_laplacian(space: &SpaceDescriptor, f: &RadialFunction) -> Result<RadialFunction> {
    match f {
        RadialFunction::Samples { values, .. } => Ok(RadialFunction::Samples {
            values: radial_laplacian_samples(space, values)?,
            support_hint: f.support_radius_hint(),
        }),
        _ => Err(Error::InvalidRequest {
            reason: "radial Laplacian expects a sampled function; sample closed forms first".into(),
        }),
    }
}

/// log Gamma by the Lanczos approximation (g = 7, 9 coefficients), for
/// positive arguments; only used to normalize the weight density.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507343278686905,
        -0.13857109526572012,
        9.984_369_578_019_572e-6,
        1.5056327351493116e-7,
    ];
    debug_assert!(x > 0.0);
    let mut acc = 0.999_999_999_999_809_9;
    for (i, c) in COEFFS.iter().enumerate() {
        acc += c / (x + i as f64);
    }
    let t = x + 6.5;
    0.5 * (2.0 * PI).ln() + (x - 0.5) * t.ln() - t + acc.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::catalog_space;

    /// Test-side oracle: P_l^(a,b)(cos t)/P_l^(a,b)(1), written directly from
    /// the textbook coefficients and kept independent of the library paths.
    fn jacobi_oracle(a: f64, b: f64, l: u32, t: f64) -> f64 {
        let x = t.cos();
        let mut values = vec![1.0];
        if l >= 1 {
            values.push((a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0);
        }
        for k in 2..=l as usize {
            let n = k as f64 - 1.0; // recurrence advancing P_{n} -> P_{n+1}
            let c1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * (2.0 * n + a + b);
            let c2 = (2.0 * n + a + b + 1.0) * (a * a - b * b);
            let c3 = (2.0 * n + a + b) * (2.0 * n + a + b + 1.0) * (2.0 * n + a + b + 2.0);
            let c4 = 2.0 * (n + a) * (n + b) * (2.0 * n + a + b + 2.0);
            let p = ((c2 + c3 * x) * values[k - 1] - c4 * values[k - 2]) / c1;
            values.push(p);
        }
        let mut at_one = 1.0;
        for j in 1..=l as u64 {
            at_one *= (j as f64 + a) / j as f64;
        }
        values[l as usize] / at_one
    }

    #[test]
    fn legendre_degree_one_is_cosine() {
        let s2 = catalog_space("s2").unwrap();
        for t in [0.3, 1.0, 2.0] {
            let v = spherical_fn(&s2, Complex64::new(1.0, 0.0), t).unwrap();
            assert!((v.re - t.cos()).abs() < 1e-14, "t={t}");
            assert_eq!(v.im, 0.0);
        }
    }

    #[test]
    fn value_at_origin_is_one_for_every_space_and_lambda() {
        for name in ["torus", "s2", "s3", "s4", "s5", "cp2", "su2-group"] {
            let sp = catalog_space(name).unwrap();
            for lam in [
                Complex64::new(0.0, 0.0),
                Complex64::new(2.5, -3.0),
                Complex64::new(-0.5, 17.0),
            ] {
                let v = spherical_fn(&sp, lam, 0.0).unwrap();
                assert!((v - Complex64::new(1.0, 0.0)).norm() <= 1e-13);
            }
        }
    }

    #[test]
    fn value_near_origin_is_close_to_one() {
        let s4 = catalog_space("s4").unwrap();
        for lam in [Complex64::new(3.2, 1.0), Complex64::new(-1.5, -4.0)] {
            let v = spherical_fn(&s4, lam, 1e-8).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() <= 1e-13);
        }
    }

    #[test]
    fn first_two_parameters_commute() {
        // lambda and -lambda-2rho swap the two upper series parameters, so
        // conjugate points about -rho_c give identical values
        let s2 = catalog_space("s2").unwrap();
        let v1 = spherical_fn(&s2, Complex64::new(-0.5, 2.0), 1.0).unwrap();
        let v2 = spherical_fn(&s2, Complex64::new(-0.5, -2.0), 1.0).unwrap();
        assert!((v1 - v2).norm() <= 1e-14 * v1.norm());
    }

    #[test]
    fn weyl_reflection_invariance_on_a_complex_grid() {
        for name in ["s2", "s3", "s4", "s5", "cp2"] {
            let sp = catalog_space(name).unwrap();
            for &(re, im) in &[(0.7, 1.3), (-2.2, 4.0), (3.1, -0.4), (-0.5, 9.0)] {
                let lam = Complex64::new(re, im);
                for t in [0.4, 1.1, 1.9] {
                    let v = spherical_fn(&sp, lam, t).unwrap();
                    let w = spherical_fn(&sp, sp.weyl_reflect(lam), t).unwrap();
                    assert!(
                        (v - w).norm() <= 1e-12 * (1.0 + v.norm()),
                        "{name} lam={lam} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let s3 = catalog_space("s3").unwrap();
        for &(re, im) in &[(1.7, 2.3), (-0.9, 5.0)] {
            let lam = Complex64::new(re, im);
            let v = spherical_fn(&s3, lam, 1.3).unwrap();
            let vc = spherical_fn(&s3, lam.conj(), 1.3).unwrap();
            assert!((v.conj() - vc).norm() <= 1e-13 * (1.0 + v.norm()));
        }
    }

    #[test]
    fn growth_bound_on_the_imaginary_axis() {
        // |psi_{i sigma}(t)| <= C e^{sigma t} on t <= pi/2 with C uniform
        let s2 = catalog_space("s2").unwrap();
        for sigma in [1.0, 10.0, 50.0, 100.0, 200.0] {
            for t in [0.2, 0.8, 1.5] {
                let v = spherical_fn(&s2, Complex64::new(0.0, sigma), t).unwrap();
                let bound = 2.0 * (sigma * t).exp();
                assert!(v.norm() <= bound, "sigma={sigma} t={t} |psi|={}", v.norm());
            }
        }
    }

    #[test]
    fn series_engine_matches_recurrence_oracle() {
        // the open series against the three-term oracle, kept inside the

        // f64 conditioning region: small degree at moderate angle, larger
        // degree very close to the origin
        for name in ["s2", "s3", "s4", "cp2"] {
            let sp = catalog_space(name).unwrap();
            let (a, b) = (sp.jacobi_a, sp.jacobi_b);
            for l in 0..=12u32 {
                // keep the alternating terminating series inside the f64
                // conditioning region: term peak ~ exp(2 l artanh(sqrt z) sqrt z)
                let angles: &[f64] = if l <= 8 {
                    &[0.2, 0.5, 1.0, 1.2]
                } else {
                    &[0.2, 0.5, 1.0]
                };
                for &t in angles {
                    let z = (t / 2.0).sin().powi(2);
                    let v = hyp2f1_series(
                        Complex64::new(-(l as f64), 0.0),
                        Complex64::new(l as f64 + 2.0 * sp.rho_c, 0.0),
                        a + 1.0,
                        z,
                        1e-14,
                        10_000,
                    )
                    .unwrap();
                    let oracle = jacobi_oracle(a, b, l, t);
                    assert!(
                        (v.re - oracle).abs() <= 1e-12 * (1.0 + oracle.abs()),
                        "{name} l={l} t={t}: series {} vs oracle {oracle}",
                        v.re
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_path_matches_recurrence_oracle_to_degree_fifty() {
        for name in ["s2", "s4", "cp2"] {
            let sp = catalog_space(name).unwrap();
            for l in [0u32, 1, 5, 17, 33, 50] {
                for t in [0.05, 0.7, 1.6, 2.6, 3.1] {
                    let v = spherical_fn(&sp, Complex64::new(l as f64, 0.0), t).unwrap();
                    let oracle = jacobi_oracle(sp.jacobi_a, sp.jacobi_b, l, t);
                    assert!(
                        (v.re - oracle).abs() <= 1e-12 * (1.0 + oracle.abs()),
                        "{name} l={l} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn series_rejects_unresolvable_cancellation() {
        // terminating series at large integer degree and moderate angle: the
        // engine must refuse rather than return garbage
        let err = hyp2f1_series(
            Complex64::new(-120.0, 0.0),
            Complex64::new(121.0, 0.0),
            1.0,
            0.7,
            1e-14,
            100_000,
        );
        assert!(matches!(err, Err(Error::PrecisionLoss { .. })));
    }

    #[test]
    fn engine_guards_t_near_pi_and_overflow() {
        let s2 = catalog_space("s2").unwrap();
        let e = spherical_fn(&s2, Complex64::new(0.25, 1.0), PI - 1e-9);
        assert!(matches!(e, Err(Error::TooCloseToPi { .. })));
        let e = spherical_fn(&s2, Complex64::new(-0.5, 500.0), 2.0);
        assert!(matches!(e, Err(Error::Overflow { .. })));
    }

    #[test]
    fn character_basics() {
        for theta in [0.0, 0.5, 2.0, 5.0] {
            let v = character_eval(Complex64::new(0.0, 0.0), theta);
            assert!((v.re - 1.0).abs() < 1e-14 && v.im == 0.0);
        }
        // chi_3 near the identity tends to the dimension 4
        let v = character_eval(Complex64::new(3.0, 0.0), 1e-9);
        assert!((v.re - 4.0).abs() < 1e-12);
        // at theta = 2 pi the value is (n+1)(-1)^n
        let v = character_eval(Complex64::new(2.0, 0.0), 2.0 * PI);
        assert!((v.re - 3.0).abs() < 1e-12);
    }

    #[test]
    fn character_degree_reflection_flips_sign() {
        for &(re, im) in &[(2.0, 0.0), (0.5, 1.5), (-0.25, 3.0)] {
            let n = Complex64::new(re, im);
            for theta in [0.3, 1.2, 2.9, 4.4] {
                let lhs = character_eval(-n - 2.0, theta);
                let rhs = -character_eval(n, theta);
                assert!(
                    (lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()),
                    "n={n} theta={theta}"
                );
            }
        }
    }

    #[test]
    fn character_stable_near_removable_points() {
        // complex degree just off the singular angle: matched expansion path
        let n = Complex64::new(0.5, 1.5);
        let base = character_eval(n, 1e-5);
        let shifted = character_eval(n, 1e-7);
        assert!((base - (n + 1.0)).norm() < 1e-8);
        assert!((shifted - (n + 1.0)).norm() < 1e-11);
    }

    #[test]
    fn normalized_group_spherical_function_is_weyl_invariant() {
        let su2 = catalog_space("su2-group").unwrap();
        for &(re, im) in &[(1.0, 0.0), (0.7, 2.0), (-3.2, 1.1)] {
            let n = Complex64::new(re, im);
            for theta in [0.4, 1.5, 3.0] {
                let v = spherical_fn(&su2, n, theta).unwrap();
                let w = spherical_fn(&su2, su2.weyl_reflect(n), theta).unwrap();
                assert!((v - w).norm() <= 1e-12 * (1.0 + v.norm()));
            }
        }
    }

    #[test]
    fn weight_density_examples() {
        let s2 = catalog_space("s2").unwrap();
        for t in [0.3, 1.0, 2.5] {
            assert!((weight_density(&s2, t) - t.sin() / 2.0).abs() < 1e-14);
        }
        for name in ["s2", "s4", "cp2"] {
            let sp = catalog_space(name).unwrap();
            assert_eq!(weight_density(&sp, 0.0), 0.0);
        }
        // s4: (3/4) sin^3 t, from 1/B(2,2) = 6
        let s4 = catalog_space("s4").unwrap();
        for t in [0.4, 1.3, 2.0] {
            assert!((weight_density(&s4, t) - 0.75 * t.sin().powi(3)).abs() < 1e-13);
        }
    }

    #[test]
    fn weight_density_normalizes_to_one() {
        // Simpson oracle on a dense grid
        for name in ["s2", "s3", "s4", "s5", "cp2", "torus"] {
            let sp = catalog_space(name).unwrap();
            let n = 40_001;
            let h = PI / (n - 1) as f64;
            let mut s = 0.0;
            for i in 0..n {
                let w = if i == 0 || i == n - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                s += w * weight_density(&sp, i as f64 * h);
            }
            s *= h / 3.0;
            assert!((s - 1.0).abs() < 1e-9, "{name}: {s}");
        }
        let su2 = catalog_space("su2-group").unwrap();
        let n = 40_001;
        let h = 2.0 * PI / (n - 1) as f64;
        let mut s = 0.0;
        for i in 0..n {
            let w = if i == 0 || i == n - 1 {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            s += w * weight_density(&su2, i as f64 * h);
        }
        s *= h / 3.0;
        assert!((s - 1.0).abs() < 1e-10);
    }

    #[test]
    fn laplacian_eigenfunction_checks() {
        let s2 = catalog_space("s2").unwrap();
        let n = 4097;
        let h = PI / (n - 1) as f64;

        // constants are harmonic
        let ones = vec![1.0; n];
        let lap = radial_laplacian_samples(&s2, &ones).unwrap();
        assert!(lap.iter().all(|&v| v.abs() < 1e-9));

        // P_1(cos t) = cos t has eigenvalue -2 on s2
        let cosv: Vec<f64> = (0..n).map(|i| (i as f64 * h).cos()).collect();
        let lap = radial_laplacian_samples(&s2, &cosv).unwrap();
        for (i, &v) in lap.iter().enumerate() {
            let expect = -2.0 * (i as f64 * h).cos();
            assert!((v - expect).abs() < 1e-7, "i={i}: {v} vs {expect}");
        }

        // degree-2 spherical function on s4 has eigenvalue -l(l+2 rho) = -10
        let s4 = catalog_space("s4").unwrap();
        let psi2: Vec<f64> = (0..n)
            .map(|i| spherical_poly(&s4, 2, i as f64 * h))
            .collect();
        let lap = radial_laplacian_samples(&s4, &psi2).unwrap();
        for (i, &v) in lap.iter().enumerate() {
            let expect = -10.0 * psi2[i];
            assert!((v - expect).abs() < 1e-6, "i={i}: {v} vs {expect}");
        }
        assert_eq!(s4.laplace_eigenvalue(2.0), -10.0);
    }

    #[test]
    fn laplacian_rejects_coarse_grids() {
        let s2 = catalog_space("s2").unwrap();
        let e = radial_laplacian_samples(&s2, &vec![0.0; 100]);
        assert!(matches!(e, Err(Error::GridTooCoarse { .. })));
    }

    #[test]
    fn ln_gamma_spot_values() {
        assert!((ln_gamma(1.0)).abs() < 1e-13);
        assert!((ln_gamma(0.5) - 0.5 * PI.ln()).abs() < 1e-13);
        assert!((ln_gamma(6.0) - 120.0f64.ln()).abs() < 1e-12);
    }
}
