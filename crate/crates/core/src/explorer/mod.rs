//! Parameter sweeps over slices of the `|G>` family: minimal power
//! searches, Monte Carlo negativity counts and tabular data for plots.

mod curves;
mod montecarlo;
mod slice;
mod sweep;
mod table;

pub use curves::{emit_curves, fit_table, Quantity};
pub use montecarlo::{monte_carlo, sample_params, MonteCarloResult, PowerCount, DEFAULT_RADIUS};
pub use slice::{Axis, FamilySlice, SliceKind, SlicePoint};
pub use sweep::{
    default_window, min_power, table_sweep, BracketCertificate, SweepResult, TableFamily, TableRow,
    DEFAULT_TOL, SWEEP_FLOOR,
};
pub use table::{Metadata, Table};
