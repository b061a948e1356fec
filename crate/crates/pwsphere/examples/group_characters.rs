//! The group case: Weyl integration on SU(2), character orthonormality,
//! the transform of class functions, its sign-twisted symmetry, and type
//! recovery in conjugacy-angle units.
//!
//! ```bash
//! cargo run --release --example group_characters
//! ```

use num_complex::Complex64;
use pwsphere::groupcase::{
    class_inner_product, group_extend_on_ray, group_pw_check, group_transform, weyl_integrate,
    ClassFunction,
};
use pwsphere::holo::fit_exponential_type;

fn main() -> pwsphere::Result<()> {
    println!("Haar integrals by the Weyl formula:");
    println!(
        "  int 1           = {:.12}",
        weyl_integrate(&ClassFunction::character(0))?
    );
    println!(
        "  <chi_1, chi_1>  = {:.12}",
        class_inner_product(&ClassFunction::character(1), &ClassFunction::character(1))?
    );
    println!(
        "  <chi_1, chi_2>  = {:+.2e}",
        class_inner_product(&ClassFunction::character(1), &ClassFunction::character(2))?
    );

    println!("\ncharacter Gram matrix (n, m <= 3):");
    for n in 0..=3u32 {
        let row: Vec<String> = (0..=3u32)
            .map(|m| {
                let v =
                    class_inner_product(&ClassFunction::character(n), &ClassFunction::character(m))
                        .unwrap();
                format!("{v:+.2e}")
            })
            .collect();
        println!("  [{}]", row.join("  "));
    }

    let f = ClassFunction::bump_angle(1.0);
    println!("\ntransform of a conjugacy-angle bump (support 1.0):");
    for n in [0.0, 2.0, 8.0, 20.0] {
        let v = group_transform(&f, Complex64::new(n, 0.0))?;
        println!("  F^({n:>2}) = {:>13.6e}", v.re);
    }

    let n = Complex64::new(1.5, 3.0);
    let twist = group_transform(&f, -n - 2.0)? + group_transform(&f, n)?;
    println!(
        "\nsign-twisted symmetry F^(-n-2) = -F^(n): residual {:.2e} at n = {n}",
        twist.norm()
    );

    let sigmas: Vec<f64> = (0..31).map(|i| 60.0 + 2.0 * i as f64).collect();
    let ray = group_extend_on_ray(&f, &sigmas)?;
    let fit = fit_exponential_type(&ray)?;
    println!(
        "\ntype of the extension along n = -1 + 2i sigma: {:.4} (support radius 1.0 in angle units)",
        fit.r_hat
    );

    let g = move |m: Complex64| group_transform(&f, m);
    let report = group_pw_check(&g, 1.0, 80.0)?;
    println!(
        "membership for claimed r = 1.0: verdict {} (r_hat {:.4}, twisted-symmetry residual {:.1e})",
        report.verdict_for_r, report.type_fit.r_hat, report.symmetry_residual
    );
    Ok(())
}
