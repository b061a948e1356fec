//! Coefficient tables, rapid decay, series synthesis, and the diagnostic
//! checks (Laplacian eigenrelation, Parseval).
//!
//! ```bash
//! cargo run --release --example transform_roundtrip
//! ```

use pwsphere::geometry::catalog_space;
use pwsphere::transform::{
    coefficient_table, dimension, eigen_check, parseval_check, synthesize, RadialFunction,
};
use std::f64::consts::PI;

fn main() -> pwsphere::Result<()> {
    let s2 = catalog_space("s2")?;
    let f = RadialFunction::bump(1.0);

    let table = coefficient_table(&s2, &f, 120.0)?;
    println!("coefficients of a smooth bump supported in [0, 1] on s2:");
    for l in [0, 1, 2, 5, 10, 20, 40, 80, 120] {
        let e = table.entries[l];
        println!(
            "  l={:<4} f~(l) = {:>13.6e}   quad_err {:.1e}",
            l, e.value.re, e.quad_err
        );
    }

    let grid: Vec<f64> = (0..513).map(|i| PI * i as f64 / 513.0).collect();
    let synth = synthesize(&s2, &table, &grid)?;
    let sup = grid
        .iter()
        .zip(&synth)
        .map(|(&t, &v)| (v - f.eval(&s2, t)).abs())
        .fold(0.0f64, f64::max);
    println!("\nsynthesis through l_max = 120 recovers the bump: sup error {sup:.3e}");

    println!("\nSchur dimensions (1/||psi_l||^2): 2l+1 on s2, harmonic counts elsewhere:");
    for l in [0.0, 1.0, 2.0, 10.0] {
        println!("  s2 d({l}) = {:.9}", dimension(&s2, l)?);
    }
    let s4 = catalog_space("s4")?;
    println!(
        "  s4 d(1) = {:.9} (degree-1 harmonics on S^4)",
        dimension(&s4, 1.0)?
    );

    let res = eigen_check(&s2, &f, 20.0, 4097)?;
    println!("\nLaplacian eigenrelation (Delta f)~(l) = -l(l+1) f~(l): residual {res:.3e}");

    let p = parseval_check(&s2, &f)?;
    println!(
        "Parseval: sum d_l |f~(l)|^2 vs ||f||^2 = {:.9e}: defect {:.3e} (l_max {})",
        p.norm_squared, p.defect, p.l_max_used
    );

    let torus = catalog_space("torus")?;
    let tt = coefficient_table(&torus, &f, 40.0)?;
    println!("\ntorus control (classical Fourier coefficients of the same bump):");
    for e in tt
        .entries
        .iter()
        .filter(|e| [0.0, 1.0, 5.0, 20.0].contains(&e.l))
    {
        println!("  n={:<4} f^(n) = {:>13.6e}", e.l, e.value.re);
    }
    Ok(())
}
