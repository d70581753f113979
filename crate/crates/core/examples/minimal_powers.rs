//! Minimal powers on the b = c = ia line and the real b = c plane, with the
//! bracketing certificate of each result.

use std::time::Instant;
use tanglekit::explorer::{self, FamilySlice};
use tanglekit::tangles::RoofKind;

fn main() -> tanglekit::Result<()> {
    for (name, slice) in [("b = c = ia", FamilySlice::case1()), ("real b = c", FamilySlice::case2())] {
        println!("{name}: {} grid points", slice.len());
        for kind in RoofKind::ALL {
            let start = Instant::now();
            let (lo, hi) = explorer::default_window(kind);
            let r = explorer::min_power(&slice, kind, lo, hi, 1e-3)?;
            let cert = r.certify(&slice)?;
            println!(
                "  ({})_min = {:.4}  worst point {:?}  certificate {}  [{:.2?}]",
                kind.power_name(),
                r.minimal_power,
                r.worst_point,
                if cert.is_valid() { "ok" } else { "FAILED" },
                start.elapsed()
            );
        }
    }
    Ok(())
}
