use num_complex::Complex64;
use pwsphere::geometry::catalog_space;
use pwsphere::transform::{forward, RadialFunction};
fn main() {
    let s2 = catalog_space("s2").unwrap();
    for (name, f) in [
        ("bump", RadialFunction::bump(1.0)),
        ("cospow", RadialFunction::cospow(1.0, 4)),
    ] {
        for l in [0.0, 5.0, 50.0, 120.0, 200.0] {
            let q = forward(&s2, &f, Complex64::new(l, 0.0)).unwrap();
            println!(
                "{name} l={l}: nodes={} err={:.2e} val={:.3e}",
                q.nodes,
                q.est_error,
                q.value.norm()
            );
        }
    }
    let f = RadialFunction::bump(1.0);
    let q = forward(&s2, &f, Complex64::new(-0.5, 90.0)).unwrap();
    println!("bump ray s=90: nodes={} err={:.2e}", q.nodes, q.est_error);
}
