//! Writes tangles, leftovers and invariants along b = c = ia as CSV.
//!
//! `cargo run --example curves_csv -- curves.csv`

use std::fs::File;
use std::io::BufWriter;
use tanglekit::explorer::{self, Axis, FamilySlice, Metadata, Quantity};

fn main() -> tanglekit::Result<()> {
    let slice = FamilySlice::case1().with_axes(vec![Axis::new(0.01, 5.0, 0.01)?])?;
    let quantities = [Quantity::Tangles, Quantity::Deltas, Quantity::Invariants];
    let powers = [2.152, 3.0];
    let table = explorer::emit_curves(&slice, &quantities, &powers)?;
    let meta = Metadata::new(serde_json::json!({
        "slice": slice,
        "quantities": quantities,
        "powers": powers,
    }));
    match std::env::args().nth(1) {
        Some(path) => {
            table.write_csv(BufWriter::new(File::create(&path)?), &meta)?;
            eprintln!("wrote {} rows x {} columns to {path}", table.rows.len(), table.columns.len());
        }
        None => table.write_csv(std::io::stdout().lock(), &meta)?,
    }
    Ok(())
}
