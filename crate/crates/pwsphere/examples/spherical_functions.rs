//! Spherical functions at integer and complex spectral parameter: Legendre
//! values on s2, Weyl-reflection invariance, growth on the imaginary ray,
//! and SU(2) characters.
//!
//! ```bash
//! cargo run --release --example spherical_functions
//! ```

use num_complex::Complex64;
use pwsphere::geometry::catalog_space;
use pwsphere::special::{character_eval, spherical_fn, spherical_poly, weight_density};

fn main() -> pwsphere::Result<()> {
    let s2 = catalog_space("s2")?;

    println!("psi_l(t) on s2 is the Legendre polynomial P_l(cos t):");
    for l in [0u32, 1, 2, 5] {
        let t = 1.0;
        let v = spherical_poly(&s2, l, t);
        println!("  l={l}: psi_l(1.0) = {v:.12}");
    }
    println!("  (P_1(cos 1.0) = cos 1.0 = {:.12})", 1.0f64.cos());

    println!("\nanalytic continuation at complex degree, s2, t = 1.0:");
    for lambda in [
        Complex64::new(2.5, 1.0),
        Complex64::new(-0.5, 6.0),
        Complex64::new(-0.5, 40.0),
    ] {
        let v = spherical_fn(&s2, lambda, 1.0)?;
        let w = spherical_fn(&s2, s2.weyl_reflect(lambda), 1.0)?;
        println!(
            "  lambda = {lambda:>12}: psi = {:>13.6e}  |psi(w(lambda)) - psi| = {:.2e}",
            v,
            (v - w).norm()
        );
    }

    println!("\ngrowth along the imaginary axis (t = 1.2, bound e^(sigma t)):");
    for sigma in [5.0, 20.0, 80.0] {
        let v = spherical_fn(&s2, Complex64::new(0.0, sigma), 1.2)?;
        println!(
            "  sigma={sigma:>5}: |psi| = {:>12.4e}   e^(sigma t) = {:>12.4e}",
            v.norm(),
            (sigma * 1.2f64).exp()
        );
    }

    println!("\nnormalized weights integrate to one; on s2 w(t) = sin(t)/2:");
    for t in [0.5, std::f64::consts::FRAC_PI_2, 2.5] {
        println!(
            "  w_s2({t:.4}) = {:.9}   w_s4({t:.4}) = {:.9}",
            weight_density(&s2, t),
            weight_density(&catalog_space("s4")?, t)
        );
    }

    println!("\nSU(2) characters chi_n(theta) = sin((n+1)theta/2)/sin(theta/2):");
    for n in [0.0, 1.0, 3.0] {
        let at0 = character_eval(Complex64::new(n, 0.0), 1e-12);
        let at1 = character_eval(Complex64::new(n, 0.0), 1.0);
        println!(
            "  n={n}: chi_n(0) = {:.1} (dimension), chi_n(1.0) = {:.9}",
            at0.re, at1.re
        );
    }
    let n = Complex64::new(0.5, 2.0);
    let twisted = character_eval(-n - 2.0, 1.3) + character_eval(n, 1.3);
    println!(
        "  sign twist chi_(-n-2) + chi_n at complex n: |residual| = {:.2e}",
        twisted.norm()
    );
    Ok(())
}
