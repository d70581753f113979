//! Generic tangles of a few textbook states.

use tanglekit::monogamy::{ckw_residual, theta_average};
use tanglekit::qcore::{density_of, partial_trace, PureState};
use tanglekit::tangles::{concurrence, one_tangle, three_tangle_pure};

fn main() -> tanglekit::Result<()> {
    for (name, state) in [("GHZ3", PureState::ghz(3)), ("W3", PureState::w3())] {
        let rho_ab = partial_trace(&density_of(&state)?, &[0, 1])?;
        println!(
            "{name}: t_A|BC = {:.6}  C_AB = {:.6}  tau_ABC = {:.6}  CKW residual = {:.2e}",
            one_tangle(&state, 0)?,
            concurrence(&rho_ab)?,
            three_tangle_pure(&state)?,
            ckw_residual(&state)?,
        );
    }
    let ghz_plus = PureState::ghz(3).tensor(&PureState::basis(1, 0));
    println!("theta(GHZ3 x |0>) = {:.6}", theta_average(&ghz_plus)?);
    println!("theta(GHZ4)       = {:.6}", theta_average(&PureState::ghz(4))?);
    Ok(())
}
