//! The mixing curve tau_3(Psi(p)) of rho_123 and the three convex-roof
//! three-way tangles built from it.

use tanglekit::gfamily::{self, GParams};
use tanglekit::tangles::{self, RoofBases, RoofKind};

fn main() -> tanglekit::Result<()> {
    let params = GParams::case2(0.9, 0.6);
    let mc = tangles::mixing_curve_params(&params)?;
    let dec = gfamily::rank2_decomposition(&params)?;
    println!("z = {:.6}, p0 = {:.6}, p(rho_123) = {:.6}", mc.z, mc.p0, dec.p);
    println!("tau_3(psi2) = {:.6}", tangles::three_tangle_pure(&dec.psi2)?);

    println!("\n    p    tau3(Psi(p))  check via hyperdeterminant");
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let psi = tangles::superposition(&params, p, true)?;
        println!(
            "  {p:.1}   {:.8}    {:.8}",
            tangles::tau3_mixing(&params, p)?,
            tangles::three_tangle_pure(&psi)?
        );
    }

    let bases = RoofBases::new(&params);
    println!("\nroof values at this p (u = 1 - p/p0 = {:.6}):", bases.u);
    for kind in RoofKind::ALL {
        for power in [1.0, 2.0, 3.0] {
            let t = tangles::roof_t(&params, kind, power)?;
            println!("  {kind}  {} = {power}: {:.8}", kind.power_name(), t.value);
        }
    }
    Ok(())
}
