//! Minimal powers for the ratio (b = c = ira), mixed (b = ira, c = nra) and
//! fixed-b (b = ni) families.

use tanglekit::explorer::{self, TableFamily};

fn print(family: TableFamily, label: &str, values: &[f64]) -> tanglekit::Result<()> {
    let kinds = family.default_kinds();
    let rows = explorer::table_sweep(family, values, kinds, explorer::DEFAULT_TOL)?;
    print!("{label:>6}");
    for kind in kinds {
        print!("  ({})_min", kind.power_name());
    }
    println!();
    for row in rows {
        print!("{:>6}", row.value);
        for r in &row.results {
            print!("  {:>10.3}", r.minimal_power);
        }
        println!();
    }
    println!();
    Ok(())
}

fn main() -> tanglekit::Result<()> {
    let r: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).chain([10.0]).collect();
    print(TableFamily::Ratio, "r", &r)?;
    print(TableFamily::Mixed, "n", &[1.0, 2.0, 3.0, 4.0, 5.0])?;
    print(TableFamily::FixedB, "n", &[1.0, 2.0, 3.0, 4.0, 5.0])?;
    Ok(())
}
