use super::slice::FamilySlice;
use super::table::Table;
use crate::gfamily::build_state;
use crate::invariants::{f_invariants, FitResult};
use crate::invariants::fit_samples;
use crate::monogamy::MonogamyProfile;
use crate::tangles::{check_power, RoofKind};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Column groups for `emit_curves`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    /// One-tangle, the three pair tangles and the roof ingredients.
    Tangles,
    /// `Delta_1..3` at each requested power.
    Deltas,
    /// `F_1..3`.
    Invariants,
}

impl std::str::FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tangles" => Ok(Quantity::Tangles),
            "deltas" => Ok(Quantity::Deltas),
            "invariants" => Ok(Quantity::Invariants),
            _ => Err(Error::InvalidArgument(format!("unknown quantity {s:?}"))),
        }
    }
}

/// One row per slice point; with no quantities the table has only a header.
pub fn emit_curves(slice: &FamilySlice, quantities: &[Quantity], powers: &[f64]) -> Result<Table> {
    for &p in powers {
        check_power(p)?;
    }
    let mut columns: Vec<String> = slice.axis_names().iter().map(|s| s.to_string()).collect();
    if quantities.is_empty() {
        return Ok(Table { columns, rows: Vec::new() });
    }
    for q in quantities {
        match q {
            Quantity::Tangles => columns.extend(
                ["one_tangle", "t12", "t13", "t14", "p", "u", "tau_psi2"].map(String::from),
            ),
            Quantity::Deltas => {
                for &p in powers {
                    for kind in RoofKind::ALL {
                        columns.push(format!("delta{}@{p}", kind.index()));
                    }
                }
            }
            Quantity::Invariants => columns.extend(["f1", "f2", "f3"].map(String::from)),
        }
    }
    let rows = (0..slice.len())
        .into_par_iter()
        .map(|i| {
            let point = slice.point(i);
            let prof = MonogamyProfile::new(&point.params)?;
            let mut row = point.coords.clone();
            for q in quantities {
                match q {
                    Quantity::Tangles => {
                        row.push(prof.one_tangle);
                        row.extend(prof.pair_tangles);
                        row.extend([prof.roof.p, prof.roof.u, prof.roof.tau_psi2]);
                    }
                    Quantity::Deltas => {
                        for &p in powers {
                            row.extend(RoofKind::ALL.map(|k| prof.delta(k, p)));
                        }
                    }
                    Quantity::Invariants => {
                        row.extend(f_invariants(&build_state(&point.params)?)?.as_array());
                    }
                }
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { columns, rows })
}

/// `a`, `Delta_1`, the fitted value and `F_1..3` over the grid of a fit.
pub fn fit_table(fit: &FitResult) -> Result<Table> {
    let samples = fit_samples(&fit.grid, fit.mu1)?;
    let rows = samples
        .iter()
        .map(|s| {
            let f = s.invariants.as_array();
            vec![s.a, s.delta1, fit.predict(&s.invariants), f[0], f[1], f[2]]
        })
        .collect();
    Ok(Table {
        columns: ["a", "delta1", "fitted", "f1", "f2", "f3"].map(String::from).to_vec(),
        rows,
    })
}
