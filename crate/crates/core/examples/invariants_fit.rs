//! F1, F2, F3 along b = c = ia and the least-squares fit of Delta_1(mu1 = 3)
//! against them on two grids.

use tanglekit::gfamily::{build_state, GParams};
use tanglekit::invariants::{self, f_closed_forms_case1, f_invariants};

fn main() -> tanglekit::Result<()> {
    println!("    a        F1          F2          F3     (closed-form F1)");
    for a in [0.25, 0.5, 1.0, 2.0, 5.0] {
        let f = f_invariants(&build_state(&GParams::case1(a))?)?;
        println!(
            "  {a:4.2}  {:.8}  {:.8}  {:.8}  {:.8}",
            f.f1,
            f.f2,
            f.f3,
            f_closed_forms_case1(a).f1
        );
    }

    let grids: [(&str, Vec<f64>); 2] = [
        ("a in [0.01, 3], 300 points", (0..300).map(|k| 0.01 + k as f64 * 2.99 / 299.0).collect()),
        ("a in (0, 10], 1000 points", (1..=1000).map(|k| k as f64 * 0.01).collect()),
    ];
    for (label, grid) in grids {
        let fit = invariants::fit_delta_vs_invariants(&grid, 3.0)?;
        let c = fit.coefficients;
        println!(
            "{label}: c = ({:.4}, {:.4}, {:.4}), normalized rms {:.4}",
            c[0], c[1], c[2], fit.rms_residual
        );
    }
    Ok(())
}
