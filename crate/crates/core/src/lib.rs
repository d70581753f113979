//! Entanglement bookkeeping for four-qubit pure states.
//!
//! The crate computes one-, two-, three- and four-way entanglement
//! quantities, with closed forms for the second-class family
//!
//! ```text
//! |G> = N [ (a+b)/2 (|0000>+|1111>) + (a-b)/2 (|0011>+|1100>)
//!           + c (|0101>+|1010>) + |0110> ]
//! ```
//!
//! and uses them to evaluate the weighted four-qubit monogamy leftovers
//! `Delta_j` (j = 1, 2, 3), search for the minimal power factors that keep
//! them nonnegative, and compare them against the SLOCC-invariant
//! four-way measures `F1`, `F2`, `F3`.
//!
//! Module map:
//!
//! - [`qcore`]: pure states, density matrices, partial traces, Pauli
//!   operators and a Jacobi eigensolver for small Hermitian matrices.
//! - [`gfamily`]: the `|G>` family, its normalizations and closed-form
//!   reduced states.
//! - [`tangles`]: one-tangle, Wootters concurrence, pure three-tangle and
//!   the analytic convex-roof three-way tangles of `|G>`.
//! - [`monogamy`]: CKW residual, n-qubit monogamy gap, average leftover and
//!   the weighted leftovers `Delta_j`.
//! - [`invariants`]: Pauli bilinear forms, `F1..F3` and least-squares fits.
//! - [`explorer`]: grid/bisection minimal-power searches, Monte Carlo
//!   negativity counts and tabular output.
//! - [`cli`]: the command-line driver behind the `tanglekit` binary.
//!
//! Qubit `0` is the leftmost tensor factor: `|i0 i1 i2 i3>` is basis index
//! `8*i0 + 4*i1 + 2*i2 + i3`.

pub mod cli;
pub mod error;
pub mod explorer;
pub mod gfamily;
pub mod invariants;
pub mod monogamy;
pub mod qcore;
pub mod tangles;

pub use error::{Error, Result};
pub use num_complex::Complex64;
