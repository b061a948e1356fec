//! Tour of the space catalog: Jacobi exponents, rho-shift, radius bounds,
//! the spherical lattice, and the Weyl reflection.
//!
//! ```bash
//! cargo run --release --example catalog_tour
//! ```

use num_complex::Complex64;
use pwsphere::geometry::catalog_space;

fn main() -> pwsphere::Result<()> {
    println!("space      a      b      rho_c   omega     inj       lattice(0..4)");
    for name in ["torus", "s2", "s3", "s4", "s5", "cp2", "su2-group"] {
        let sp = catalog_space(name)?;
        let lattice = sp.spherical_lattice(4.0);
        println!(
            "{:<10} {:<6} {:<6} {:<7} {:<9.4} {:<9.4} {:?}",
            sp.name,
            sp.jacobi_a,
            sp.jacobi_b,
            sp.rho_c,
            sp.omega_radius_t,
            sp.inj_radius_t,
            &lattice[..lattice.len().min(5)]
        );
    }

    println!("\nradius bounds (conservative / sharp / uniqueness / injectivity):");
    for name in ["s2", "s4", "torus"] {
        let b = catalog_space(name)?.radius_bounds();
        println!(
            "  {name:<6} {:.4} / {:.4} / {:.4} / {:.4}",
            b.r_forward_conservative, b.r_forward_sharp, b.r_unique, b.inj_radius_t
        );
    }

    let s2 = catalog_space("s2")?;
    let lambda = Complex64::new(0.7, 2.0);
    let reflected = s2.weyl_reflect(lambda);
    println!("\nWeyl reflection on s2 (center -rho_c = -1/2):");
    println!(
        "  {lambda} -> {reflected} -> {}",
        s2.weyl_reflect(reflected)
    );

    println!("\ndescriptor as JSON:");
    println!("{}", serde_json::to_string_pretty(&s2).unwrap());
    Ok(())
}
