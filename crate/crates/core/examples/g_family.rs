//! The |G> family: marginals, one-tangle and the closed-form two-tangles
//! next to the Wootters routine.
//!
//! Run with `cargo run --example g_family -- 1.2 0.5+0.3i -0.4i`.

use num_complex::Complex64;
use tanglekit::gfamily::{self, GParams, Pair};
use tanglekit::qcore::{density_of, partial_trace};
use tanglekit::tangles;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<Complex64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let params = match args.as_slice() {
        [a, b, c] => GParams::new(*a, *b, *c)?,
        [] => GParams::case1(1.0),
        _ => return Err("expected three complex numbers a b c".into()),
    };
    let state = gfamily::build_state(&params)?;
    let rho = density_of(&state)?;
    println!("params {params}");
    println!("norms  {:?}", gfamily::norms(&params)?);
    println!(
        "one-tangle {:.12} (closed form {:.12})",
        tangles::one_tangle(&state, 0)?,
        tangles::one_tangle_closed_form(&params)
    );
    for pair in Pair::ALL {
        let generic = tangles::concurrence(&partial_trace(&rho, &pair.qubits())?)?;
        let branches = tangles::concurrence_branches(&params, pair);
        println!(
            "C_{pair}: closed {:.12}  Wootters {:.12}  branches {:?}",
            tangles::concurrence_closed_form(&params, pair),
            generic,
            branches.applicable()
        );
    }
    println!("rho_14 =\n{:.4}", gfamily::reduced_two(&params, Pair::P14).matrix());
    Ok(())
}
