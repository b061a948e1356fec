//! Membership reports: growth, lattice decay, and Weyl symmetry of a
//! coefficient extension, tested against a claimed support radius.
//!
//! ```bash
//! cargo run --release --example pw_membership
//! ```

use num_complex::Complex64;
use pwsphere::geometry::catalog_space;
use pwsphere::holo::pw_membership;
use pwsphere::transform::{forward_value, RadialFunction};

fn show(label: &str, report: &pwsphere::PwReport) {
    println!(
        "  {label:<34} r_hat {:<8.4} symmetry {:<9.2e} verdict {}",
        report.type_fit.r_hat, report.symmetry_residual, report.verdict_for_r
    );
}

fn main() -> pwsphere::Result<()> {
    let s2 = catalog_space("s2")?;

    println!("claims against the extension of bump(r=0.5) on s2:");
    let f = RadialFunction::bump(0.5);
    let space = s2.clone();
    let g = move |lambda: Complex64| forward_value(&space, &f, lambda);
    let honest = pw_membership(&s2, &g, 0.5, 80.0)?;
    show("claimed r = 0.5 (true)", &honest);
    let understated = pw_membership(&s2, &g, 0.25, 80.0)?;
    show("claimed r = 0.25 (too small)", &understated);
    let overstated = pw_membership(&s2, &g, 1.0, 80.0)?;
    show("claimed r = 1.0 (roomy, accepted)", &overstated);

    println!("\na function violating the Weyl symmetry axiom:");
    let linear = |lambda: Complex64| Ok(lambda);
    let report = pw_membership(&s2, &linear, 10.0, 80.0)?;
    show("g(lambda) = lambda", &report);

    println!("\ndecay constants C_k = max |g(l)| (1+l)^k on the lattice (true bump):");
    for (k, c) in &honest.decay_constants {
        if k % 2 == 0 {
            println!("  k = {k}: C_k = {c:.4e}");
        }
    }
    println!(
        "\nverdict rule: r_hat <= r (1 + {:.0}%) + {:.2} and symmetry residual <= {:.0e}",
        honest.tolerance_rel * 100.0,
        honest.tolerance_abs,
        honest.symmetry_threshold
    );
    Ok(())
}
