//! Delta_1, Delta_2, Delta_3 along b = c = ia for powers around their
//! minimal values.

use tanglekit::gfamily::GParams;
use tanglekit::monogamy;
use tanglekit::tangles::RoofKind;

fn main() -> tanglekit::Result<()> {
    let rows = [(RoofKind::T1, [2.0, 2.152, 2.3]), (RoofKind::T2, [1.0, 1.076, 1.15]), (RoofKind::T3, [2.0, 2.305, 2.5])];
    for (kind, powers) in rows {
        println!("Delta_{} ({}):", kind.index(), kind.power_name());
        println!("      a  {:>12} {:>12} {:>12}", powers[0], powers[1], powers[2]);
        for a in [0.1, 0.3, 0.5, 0.6, 0.7, 0.9, 1.5, 3.0] {
            let deltas: Vec<String> = powers
                .iter()
                .map(|&p| format!("{:>12.4e}", monogamy::case1_delta(a, kind, p)))
                .collect();
            println!("  {a:5.2}  {}", deltas.join(" "));
        }
    }
    let report = monogamy::delta(&GParams::case1(0.6), RoofKind::T1, 2.152)?;
    println!("\nfull report at a = 0.6: {report:#?}");
    Ok(())
}
