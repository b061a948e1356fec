//! Quadrature machinery: Gauss-Legendre rules with node caching, an adaptive
//! doubling driver for oscillatory spectral integrands, and a composite Boole
//! rule for uniformly sampled data.

use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Compute the n-point rule by Newton iteration on P_n, seeded with the
    /// Chebyshev-angle estimates of the roots.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "need at least a 2-point rule");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for k in 0..m {
            let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // P_n(x) and P_n'(x) by the three-term recurrence
                let mut p0 = 1.0;
                let mut p1 = x;
                for j in 1..n {
                    let jf = j as f64;
                    let p2 = ((2.0 * jf + 1.0) * x * p1 - jf * p0) / (jf + 1.0);
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[k] = -x;
            weights[k] = w;
            nodes[n - 1 - k] = x;
            weights[n - 1 - k] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    /// Shared, cached rule of the given size.
    pub fn cached(n: usize) -> Arc<GaussLegendre> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussLegendre>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rule) = cache.lock().unwrap().get(&n) {
            return Arc::clone(rule);
        }
        let rule = Arc::new(GaussLegendre::new(n));
        cache
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&rule));
        rule
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped onto [a, b].
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

/// Result of an adaptive quadrature: value, the final doubling discrepancy,
/// and the node count of the accepted rule.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: Complex64,
    pub est_error: f64,
    pub nodes: usize,
}

/// Integrate an oscillatory integrand over [a, b] with a Gauss-Legendre rule
/// sized to the oscillation count, doubling the rule until two successive
/// values agree to 1e-12 relative (with an absolute floor taken from the
/// integral of |f|, so that results near machine zero converge too).
///
/// `oscillation` should be of the order of the spectral parameter magnitude;
/// the first rule has ceil(8 * max(oscillation, 1) + 64) points.
pub fn adaptive_oscillatory<F>(a: f64, b: f64, oscillation: f64, mut f: F) -> Result<Quadrature>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    const MAX_DOUBLINGS: usize = 4;
    const REL_TOL: f64 = 1e-12;

    if !(b - a).is_finite() || b <= a {
        return Err(Error::InvalidRequest {
            reason: format!("bad integration interval [{a}, {b}]"),
        });
    }

    let mut n = (8.0 * oscillation.max(1.0) + 64.0).ceil() as usize;
    let run = |n: usize, f: &mut F| -> Result<(Complex64, f64)> {
        let rule = GaussLegendre::cached(n);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        for (t, w) in rule.mapped(a, b) {
            let v = f(t)?;
            sum += w * v;
            abs_sum += w * v.norm();
        }
        Ok((sum, abs_sum))
    };

    let (mut prev, mut prev_abs) = run(n, &mut f)?;
    for doubling in 1..=MAX_DOUBLINGS {
        n *= 2;
        let (cur, cur_abs) = run(n, &mut f)?;
        let diff = (cur - prev).norm();
        // the absolute floor reflects what summation rounding can deliver:
        // two rules of different size agree no better than ~1000 eps of the
        // absolute-value integral (oscillatory cancellation leaves exactly
        // this noise in near-zero results)
        let floor = 1000.0 * f64::EPSILON * cur_abs.max(prev_abs) + f64::MIN_POSITIVE;
        if diff <= REL_TOL * cur.norm() + floor {
            return Ok(Quadrature {
                value: cur,
                est_error: diff,
                nodes: n,
            });
        }
        if doubling == MAX_DOUBLINGS {
            return Err(Error::QuadratureStalled {
                doublings: MAX_DOUBLINGS,
                nodes: n,
                previous: prev,
                current: cur,
            });
        }
        prev = cur;
        prev_abs = cur_abs;
    }
    unreachable!()
}

/// Composite Boole rule over uniformly spaced samples with spacing `h`.
/// The sample count must be congruent to 1 mod 4.
pub fn composite_boole(values: &[f64], h: f64) -> Result<f64> {
    let n = values.len();
    if n < 5 || !(n - 1).is_multiple_of(4) {
        return Err(Error::BadSampleGrid {
            reason: format!("composite Boole needs 4k+1 samples, got {n}"),
        });
    }
    let mut sum = 0.0;
    for (i, &v) in values.iter().enumerate() {
        let w = if i == 0 || i == n - 1 {
            7.0
        } else {
            match i % 4 {
                0 => 14.0,
                2 => 12.0,
                _ => 32.0,
            }
        };
        sum += w * v;
    }
    Ok(sum * 2.0 * h / 45.0)
}

/// [`composite_boole`] for complex samples.
pub fn composite_boole_complex(values: &[Complex64], h: f64) -> Result<Complex64> {
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();
    Ok(Complex64::new(
        composite_boole(&re, h)?,
        composite_boole(&im, h)?,
    ))
}

/// [`composite_simpson`] for complex samples.
pub fn composite_simpson_complex(values: &[Complex64], h: f64) -> Result<Complex64> {
    let re: Vec<f64> = values.iter().map(|v| v.re).collect();
    let im: Vec<f64> = values.iter().map(|v| v.im).collect();
    Ok(Complex64::new(
        composite_simpson(&re, h)?,
        composite_simpson(&im, h)?,
    ))
}

/// Composite Simpson over uniformly spaced samples (odd count); used as the
/// cross-check rule when estimating the error of [`composite_boole`].
pub fn composite_simpson(values: &[f64], h: f64) -> Result<f64> {
    let n = values.len();
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadSampleGrid {
            reason: format!("composite Simpson needs an odd sample count, got {n}"),
        });
    }
    let mut sum = values[0] + values[n - 1];
    for (i, &v) in values.iter().enumerate().take(n - 1).skip(1) {
        sum += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    Ok(sum * h / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_sine_exactly_enough() {
        let rule = GaussLegendre::new(32);
        let integral: f64 = rule
            .mapped(0.0, std::f64::consts::PI)
            .map(|(t, w)| w * t.sin())
            .sum();
        assert!((integral - 2.0).abs() < 1e-14);
    }

    #[test]
    fn gauss_legendre_nodes_are_symmetric_and_weights_sum_to_two() {
        for n in [2, 7, 64, 257] {
            let rule = GaussLegendre::new(n);
            let wsum: f64 = rule.weights.iter().sum();
            assert!((wsum - 2.0).abs() < 1e-13, "n={n}: weight sum {wsum}");
            for k in 0..n {
                assert!((rule.nodes[k] + rule.nodes[n - 1 - k]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn adaptive_handles_oscillatory_cosine() {
        // int_0^1 cos(40 t) dt = sin(40)/40
        let q = adaptive_oscillatory(0.0, 1.0, 40.0, |t| {
            Ok(Complex64::new((40.0 * t).cos(), 0.0))
        })
        .unwrap();
        assert!((q.value.re - (40.0f64).sin() / 40.0).abs() < 1e-13);
        assert!(q.value.im.abs() < 1e-15);
    }

    #[test]
    fn adaptive_converges_for_near_zero_integrals() {
        // int_0^pi cos(3t) sin(t)-ish orthogonality: exactly zero integrand mix
        let q = adaptive_oscillatory(0.0, std::f64::consts::PI, 3.0, |t| {
            Ok(Complex64::new((3.0 * t).cos() * (2.0 * t).cos(), 0.0))
        })
        .unwrap();
        assert!(q.value.norm() < 1e-13);
    }

    #[test]
    fn boole_is_exact_on_low_degree_and_sharp_on_sine() {
        let n = 4097;
        let h = std::f64::consts::PI / (n - 1) as f64;
        let vals: Vec<f64> = (0..n).map(|i| (i as f64 * h).sin()).collect();
        let q = composite_boole(&vals, h).unwrap();
        assert!((q - 2.0).abs() < 1e-13);

        let bad = composite_boole(&vals[..n - 1], h);
        assert!(bad.is_err());
    }

    #[test]
    fn simpson_cross_check() {
        let n = 4097;
        let h = 1.0 / (n - 1) as f64;
        let vals: Vec<f64> = (0..n).map(|i| (i as f64 * h).exp()).collect();
        let q = composite_simpson(&vals, h).unwrap();
        assert!((q - (std::f64::consts::E - 1.0)).abs() < 1e-12);
    }
}
