//! Counts of random b = c states with negative Delta_j.
//!
//! `cargo run --release --example monte_carlo -- 1000000 7`

use tanglekit::explorer::{self, DEFAULT_RADIUS};
use tanglekit::tangles::RoofKind;

fn main() -> tanglekit::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let sets: [(RoofKind, &[f64]); 3] = [
        (RoofKind::T1, &[2.0, 2.1, 2.2, 2.3]),
        (RoofKind::T2, &[1.0, 1.05, 1.1, 1.15]),
        (RoofKind::T3, &[2.0, 2.1, 2.2, 2.3, 2.4, 2.5, 2.6, 2.7]),
    ];
    println!("{samples} samples, seed {seed}, Re/Im uniform on [-{DEFAULT_RADIUS}, {DEFAULT_RADIUS}]");
    for (kind, powers) in sets {
        let r = explorer::monte_carlo(samples, powers, kind, seed, DEFAULT_RADIUS)?;
        let cells: Vec<String> = r
            .counts
            .iter()
            .map(|c| format!("{}={}: {}", kind.power_name(), c.power, c.negatives))
            .collect();
        println!("Delta_{}  {}", kind.index(), cells.join(", "));
    }
    Ok(())
}
