//! Command-line front end. Every command writes one JSON document (or a
//! CSV table) that embeds the tool version and the resolved arguments.

use crate::explorer::{
    self, Axis, FamilySlice, Metadata, Quantity, SweepResult, Table, TableFamily,
};
use crate::gfamily::{self, GParams, Pair};
use crate::invariants;
use crate::monogamy;
use crate::tangles::{self, RoofKind};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser, Serialize)]
#[command(name = "tanglekit", version, about = "Four-qubit tangles and monogamy leftovers")]
pub struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; `curves` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// One-, two- and three-way tangles of a single |G>.
    Tangles(ParamArgs),
    /// Monogamy leftover Delta_j at one power.
    Delta {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        j: u8,
        #[arg(long)]
        power: f64,
    },
    /// Minimal power making Delta_j non-negative on a slice.
    Sweep {
        #[command(flatten)]
        slice: SliceArgs,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), default_value_t = 1)]
        j: u8,
        /// Lower end of the search window (default depends on j).
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long)]
        hi: Option<f64>,
        #[arg(long, default_value_t = explorer::DEFAULT_TOL)]
        tol: f64,
    },
    /// Minimal powers for several values of a slice family parameter.
    Table {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        /// Roof kinds to sweep (default: 1,3 for ratio, 1,2,3 otherwise).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=3))]
        j: Vec<u8>,
        #[arg(long, default_value_t = explorer::DEFAULT_TOL)]
        tol: f64,
    },
    /// Count random states with Delta_j < 0 at each power.
    Montecarlo {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3), default_value_t = 1)]
        j: u8,
        #[arg(long, value_delimiter = ',', required = true)]
        powers: Vec<f64>,
        #[arg(long, default_value_t = explorer::DEFAULT_RADIUS)]
        radius: f64,
    },
    /// Least-squares fit of Delta_1 against F1, F2, F3 on b = c = ia.
    Fit {
        #[arg(long, default_value_t = 3.0)]
        mu1: f64,
        #[arg(long, default_value_t = 0.01)]
        a_lo: f64,
        #[arg(long, default_value_t = 3.0)]
        a_hi: f64,
        #[arg(long, default_value_t = 300)]
        points: usize,
    },
    /// Tabulate tangles, leftovers or invariants over a slice.
    Curves {
        #[command(flatten)]
        slice: SliceArgs,
        #[arg(long, value_delimiter = ',', default_value = "tangles,deltas,invariants")]
        quantities: Vec<Quantity>,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        powers: Vec<f64>,
    },
}

#[derive(Debug, Args, Serialize)]
pub struct ParamArgs {
    /// Complex amplitude such as `1.5`, `2i` or `0.3-1.2i`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Complex64,
}

impl ParamArgs {
    fn params(&self) -> Result<GParams> {
        GParams::new(self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceArg {
    Case1,
    Case2,
    Ratio,
    Mixed,
    Fixedb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Ratio,
    Mixed,
    Fixedb,
}

impl From<FamilyArg> for TableFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Ratio => TableFamily::Ratio,
            FamilyArg::Mixed => TableFamily::Mixed,
            FamilyArg::Fixedb => TableFamily::FixedB,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SliceArgs {
    #[arg(long, value_enum)]
    pub slice: SliceArg,
    /// `r` for ratio, `n` for mixed and fixedb.
    #[arg(long)]
    pub param: Option<f64>,
    /// Grid override `lo:hi:step`, once per axis.
    #[arg(long, value_parser = parse_axis)]
    pub grid: Vec<Axis>,
}

impl SliceArgs {
    fn build(&self) -> Result<FamilySlice> {
        let param = || {
            self.param
                .ok_or_else(|| Error::InvalidArgument("this slice needs --param".into()))
        };
        let slice = match self.slice {
            SliceArg::Case1 => FamilySlice::case1(),
            SliceArg::Case2 => FamilySlice::case2(),
            SliceArg::Ratio => FamilySlice::ratio(param()?),
            SliceArg::Mixed => FamilySlice::mixed(param()?),
            SliceArg::Fixedb => FamilySlice::fixedb(param()?),
        };
        if self.grid.is_empty() {
            Ok(slice)
        } else {
            slice.with_axes(self.grid.clone())
        }
    }
}

fn parse_axis(s: &str) -> std::result::Result<Axis, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(format!("expected lo:hi:step, got {s:?}"));
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Axis::new(num(lo)?, num(hi)?, num(step)?).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(flatten)]
    meta: &'a Metadata,
    result: T,
}

#[derive(Serialize)]
struct TanglesReport {
    params: GParams,
    norms: gfamily::GNorms,
    one_tangle: f64,
    concurrences: [f64; 3],
    pair_tangles: [f64; 3],
    mixing: tangles::MixingCurveParams,
    roof: tangles::RoofBases,
    invariants: invariants::InvariantTriple,
}

impl TanglesReport {
    fn new(params: GParams) -> Result<Self> {
        let state = gfamily::build_state(&params)?;
        let concurrences = Pair::ALL.map(|p| tangles::concurrence_closed_form(&params, p));
        Ok(Self {
            params,
            norms: gfamily::norms(&params)?,
            one_tangle: tangles::one_tangle(&state, 0)?,
            concurrences,
            pair_tangles: concurrences.map(|c| c * c),
            mixing: tangles::mixing_curve_params(&params)?,
            roof: tangles::RoofBases::new(&params),
            invariants: invariants::f_invariants(&state)?,
        })
    }

    fn table(&self) -> Table {
        let mut columns: Vec<String> = [
            "a_re", "a_im", "b_re", "b_im", "c_re", "c_im", "one_tangle", "t12", "t13", "t14",
            "p", "u", "tau_psi2", "f1", "f2", "f3",
        ]
        .map(String::from)
        .to_vec();
        columns.shrink_to_fit();
        let p = &self.params;
        let mut row = vec![p.a.re, p.a.im, p.b.re, p.b.im, p.c.re, p.c.im, self.one_tangle];
        row.extend(self.pair_tangles);
        row.extend([self.roof.p, self.roof.u, self.roof.tau_psi2]);
        row.extend(self.invariants.as_array());
        Table { columns, rows: vec![row] }
    }
}

fn delta_table(r: &monogamy::DeltaReport) -> Table {
    let columns = ["j", "power", "one_tangle", "t12", "t13", "t14", "t123", "t124", "t134", "delta"];
    let mut row = vec![r.j as f64, r.power, r.one_tangle];
    row.extend(r.pair_tangles);
    row.extend(r.triple_tangles);
    row.push(r.delta);
    Table { columns: columns.map(String::from).to_vec(), rows: vec![row] }
}

fn sweep_row(r: &SweepResult) -> Vec<f64> {
    let mut row = vec![r.j as f64, r.minimal_power, r.tolerance, r.worst_delta];
    row.extend(&r.worst_point);
    row
}

fn sweep_table(slice: &FamilySlice, r: &SweepResult) -> Table {
    let mut columns: Vec<String> =
        ["j", "minimal_power", "tolerance", "worst_delta"].map(String::from).to_vec();
    columns.extend(slice.axis_names().iter().map(|n| format!("worst_{n}")));
    Table { columns, rows: vec![sweep_row(r)] }
}

fn table_rows(rows: &[explorer::TableRow]) -> Table {
    let columns = ["value", "j", "minimal_power", "tolerance", "mu1_over_mu2"];
    let rows = rows
        .iter()
        .flat_map(|row| {
            row.results.iter().map(move |r| {
                let ratio = if r.j == 2 { row.mu1_over_mu2.unwrap_or(f64::NAN) } else { f64::NAN };
                vec![row.value, r.j as f64, r.minimal_power, r.tolerance, ratio]
            })
        })
        .collect();
    Table { columns: columns.map(String::from).to_vec(), rows }
}

fn kind(j: u8) -> Result<RoofKind> {
    RoofKind::from_index(j)
}

enum Output {
    Json(serde_json::Value, Option<Table>),
    Csv(Table),
}

fn compute(cli: &Cli) -> Result<Output> {
    let both = |value: serde_json::Value, table: Table| Ok(Output::Json(value, Some(table)));
    match &cli.command {
        Command::Tangles(args) => {
            let report = TanglesReport::new(args.params()?)?;
            let table = report.table();
            both(serde_json::to_value(report)?, table)
        }
        Command::Delta { params, j, power } => {
            let r = monogamy::delta(&params.params()?, kind(*j)?, *power)?;
            both(serde_json::to_value(r)?, delta_table(&r))
        }
        Command::Sweep { slice, j, lo, hi, tol } => {
            let slice = slice.build()?;
            let kind = kind(*j)?;
            let (dlo, dhi) = explorer::default_window(kind);
            let r = explorer::min_power(&slice, kind, lo.unwrap_or(dlo), hi.unwrap_or(dhi), *tol)?;
            let table = sweep_table(&slice, &r);
            both(serde_json::to_value(r)?, table)
        }
        Command::Table { family, values, j, tol } => {
            let family = TableFamily::from(*family);
            let kinds = if j.is_empty() {
                family.default_kinds().to_vec()
            } else {
                j.iter().map(|&j| kind(j)).collect::<Result<Vec<_>>>()?
            };
            let rows = explorer::table_sweep(family, values, &kinds, *tol)?;
            let table = table_rows(&rows);
            both(serde_json::to_value(rows)?, table)
        }
        Command::Montecarlo { samples, j, powers, radius } => {
            let r = explorer::monte_carlo(*samples, powers, kind(*j)?, cli.seed, *radius)?;
            let table = Table {
                columns: vec!["power".into(), "negatives".into()],
                rows: r.counts.iter().map(|c| vec![c.power, c.negatives as f64]).collect(),
            };
            both(serde_json::to_value(r)?, table)
        }
        Command::Fit { mu1, a_lo, a_hi, points } => {
            if *points < 2 || !(a_hi > a_lo) {
                return Err(Error::InvalidArgument("fit needs points >= 2 and a_hi > a_lo".into()));
            }
            let h = (a_hi - a_lo) / (*points - 1) as f64;
            let grid: Vec<f64> = (0..*points).map(|k| a_lo + k as f64 * h).collect();
            let fit = invariants::fit_delta_vs_invariants(&grid, *mu1)?;
            let table = explorer::fit_table(&fit)?;
            both(serde_json::to_value(fit)?, table)
        }
        Command::Curves { slice, quantities, powers } => {
            let table = explorer::emit_curves(&slice.build()?, quantities, powers)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => Ok(Output::Csv(table)),
                Format::Json => Ok(Output::Json(serde_json::to_value(&table)?, None)),
            }
        }
    }
}

/// Runs one parsed invocation, writing to `--out` or stdout.
pub fn run(cli: &Cli) -> Result<()> {
    let meta = Metadata::new(serde_json::to_value(cli)?);
    let output = compute(cli)?;
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    match (output, cli.format) {
        (Output::Json(_, Some(table)), Some(Format::Csv)) | (Output::Csv(table), _) => {
            table.write_csv(&mut sink, &meta)?
        }
        (Output::Json(result, _), _) => {
            serde_json::to_writer_pretty(&mut sink, &Envelope { meta: &meta, result })?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        Error::InvalidArgument(_) | Error::InvalidParams | Error::BadPower(_) => EXIT_USAGE,
        _ => EXIT_COMPUTE,
    }
}

fn report_error(kind: &str, message: &str, code: i32) -> i32 {
    let doc = serde_json::json!({ "error": kind, "message": message, "exit_code": code });
    eprintln!("{doc}");
    code
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var("TANGLEKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|_| format!("TANGLEKIT_THREADS={raw:?} is not a thread count"))?;
    // A second call in the same process (e.g. from tests) keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return 0;
        }
        Err(e) => return report_error("usage", e.to_string().trim(), EXIT_USAGE),
    };
    if let Err(msg) = configure_threads() {
        return report_error("usage", &msg, EXIT_USAGE);
    }
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            let code = exit_code(&e);
            let kind = match code {
                EXIT_IO => "io",
                EXIT_USAGE => "usage",
                _ => "compute",
            };
            report_error(kind, &e.to_string(), code)
        }
    }
}
