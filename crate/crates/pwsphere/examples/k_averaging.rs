//! Averaging class functions on SU(2) over the circle subgroup gives radial
//! functions on the sphere: characters project onto spherical functions (or
//! to zero), the two transforms intertwine through d(l) f~(l) = F^(2l), and
//! support never grows.
//!
//! ```bash
//! cargo run --release --example k_averaging
//! ```

use num_complex::Complex64;
use pwsphere::geometry::catalog_space;
use pwsphere::groupcase::{
    group_transform, k_average, k_average_on_grid, su2_conjugacy_angle, support_transfer_check,
    ClassFunction,
};
use pwsphere::transform::{dimension, forward_value};
use std::f64::consts::PI;

fn main() -> pwsphere::Result<()> {
    let s2 = catalog_space("s2")?;

    println!("conjugacy angle of k_theta a_t from the 2x2 trace (never below t):");
    for (theta, t) in [(0.0, 1.0), (1.0, 1.0), (3.0, 0.5)] {
        println!(
            "  theta={theta:.1} t={t:.1}: psi = {:.6}",
            su2_conjugacy_angle(theta, t)
        );
    }

    let grid: Vec<f64> = (0..9).map(|i| PI * i as f64 / 8.0).collect();
    println!("\naverage of chi_2 vs P_1(cos t) = cos t:");
    let avg = k_average_on_grid(&ClassFunction::character(2), &grid, 1024)?;
    for (i, &t) in grid.iter().enumerate().step_by(2) {
        println!("  t = {t:.4}: {:.12}  (cos t = {:.12})", avg[i], t.cos());
    }

    let avg1 = k_average_on_grid(&ClassFunction::character(1), &grid, 1024)?;
    let max1 = avg1.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    println!("\nthe non-spherical chi_1 averages to zero: max |avg| = {max1:.2e}");

    let f = ClassFunction::bump_angle(1.5);
    let avg = k_average(&f, 4097, 2048)?;
    println!("\ntransform intertwining d(l) f~(l) = F^(2l) for a bump of angle-radius 1.5:");
    for l in [0u32, 1, 4, 8] {
        let lhs =
            dimension(&s2, l as f64)? * forward_value(&s2, &avg, Complex64::new(l as f64, 0.0))?;
        let rhs = group_transform(&f, Complex64::new(2.0 * l as f64, 0.0))?;
        println!(
            "  l={l}: d(l) f~(l) = {:>13.6e}   F^(2l) = {:>13.6e}   diff {:.1e}",
            lhs.re,
            rhs.re,
            (lhs - rhs).norm()
        );
    }

    println!("\nsupport transfer (averaging never enlarges support):");
    for r in [0.3, 1.0, 2.0] {
        let check = support_transfer_check(&ClassFunction::bump_angle(r), 1e-12)?;
        println!(
            "  r = {r}: measured {:.4} <= {:.4}  ({})",
            check.measured_radius,
            r + 2.0 * PI / 2048.0,
            check
                .within_bound
                .map_or("skipped".into(), |b| b.to_string())
        );
    }
    Ok(())
}
