use super::slice::{FamilySlice, SlicePoint};
use crate::gfamily::GParams;
use crate::monogamy::MonogamyProfile;
use crate::tangles::{check_power, RoofKind};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

/// `Delta >= -SWEEP_FLOOR` counts as non-negative.
pub const SWEEP_FLOOR: f64 = 1e-14;
pub const DEFAULT_TOL: f64 = 5e-3;
const MIN_TOL: f64 = 1e-4;

/// Search window for the minimal power of each roof kind.
pub fn default_window(kind: RoofKind) -> (f64, f64) {
    match kind {
        RoofKind::T1 => (1.0, 4.0),
        RoofKind::T2 => (0.5, 2.0),
        RoofKind::T3 => (1.0, 20.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub j: u8,
    pub minimal_power: f64,
    pub tolerance: f64,
    /// Coordinates of the most negative `Delta_j` just below `minimal_power`.
    pub worst_point: Vec<f64>,
    pub worst_params: GParams,
    pub worst_delta: f64,
    pub evaluations: u64,
    pub window: (f64, f64),
}

/// Direct re-evaluation around a sweep result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BracketCertificate {
    pub holds_at_min: bool,
    pub holds_above: bool,
    pub fails_below: bool,
}

impl BracketCertificate {
    pub fn is_valid(&self) -> bool {
        self.holds_at_min && self.holds_above && self.fails_below
    }
}

struct Profiles {
    points: Vec<SlicePoint>,
    profiles: Vec<MonogamyProfile>,
    evaluations: AtomicU64,
}

impl Profiles {
    fn build(slice: &FamilySlice) -> Result<Self> {
        let points: Vec<SlicePoint> = slice.points().collect();
        let profiles = points
            .par_iter()
            .map(|p| MonogamyProfile::new(&p.params))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            points,
            profiles,
            evaluations: AtomicU64::new(0),
        })
    }

    fn holds(&self, kind: RoofKind, power: f64) -> bool {
        self.evaluations
            .fetch_add(self.profiles.len() as u64, Ordering::Relaxed);
        self.profiles
            .par_iter()
            .all(|p| p.delta(kind, power) >= -SWEEP_FLOOR)
    }

    /// Index and value of the smallest `Delta`, lowest index on ties.
    fn worst(&self, kind: RoofKind, power: f64) -> (usize, f64) {
        self.profiles
            .par_iter()
            .enumerate()
            .map(|(i, p)| (i, p.delta(kind, power)))
            .reduce(
                || (usize::MAX, f64::INFINITY),
                |x, y| match x.1.total_cmp(&y.1) {
                    std::cmp::Ordering::Less => x,
                    std::cmp::Ordering::Greater => y,
                    std::cmp::Ordering::Equal => if x.0 <= y.0 { x } else { y },
                },
            )
    }
}

/// Smallest power in `[lo, hi]` (up to `tol`) with `Delta_j >= 0` on every
/// grid point of `slice`, found by bisection.
pub fn min_power(
    slice: &FamilySlice,
    kind: RoofKind,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<SweepResult> {
    check_power(lo)?;
    check_power(hi)?;
    if !(hi > lo) {
        return Err(Error::InvalidArgument(format!("empty window [{lo}, {hi}]")));
    }
    if !(tol >= MIN_TOL) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} below {MIN_TOL}")));
    }
    let prof = Profiles::build(slice)?;
    let (holds_at_lo, holds_at_hi) = (prof.holds(kind, lo), prof.holds(kind, hi));
    if holds_at_lo || !holds_at_hi {
        return Err(Error::NotBracketed { lo, hi, holds_at_lo, holds_at_hi });
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if prof.holds(kind, mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    let (idx, worst_delta) = prof.worst(kind, a);
    let point = &prof.points[idx];
    Ok(SweepResult {
        j: kind.index(),
        minimal_power: b,
        tolerance: tol,
        worst_point: point.coords.clone(),
        worst_params: point.params,
        worst_delta,
        evaluations: prof.evaluations.load(Ordering::Relaxed),
        window: (lo, hi),
    })
}

impl SweepResult {
    pub fn kind(&self) -> RoofKind {
        RoofKind::from_index(self.j).expect("stored index is valid")
    }

    /// Re-evaluates the slice at `minimal_power` and `minimal_power +- 2 tol`.
    pub fn certify(&self, slice: &FamilySlice) -> Result<BracketCertificate> {
        let prof = Profiles::build(slice)?;
        let kind = self.kind();
        let below = self.minimal_power - 2.0 * self.tolerance;
        Ok(BracketCertificate {
            holds_at_min: prof.holds(kind, self.minimal_power),
            holds_above: prof.holds(kind, self.minimal_power + 2.0 * self.tolerance),
            fails_below: below <= 0.0 || !prof.holds(kind, below),
        })
    }
}

/// The one-parameter slice families tabulated by `table_sweep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFamily {
    /// `b = c = i r a`, tabulated against `r`.
    Ratio,
    /// `b = i r a`, `c = n r a`, tabulated against `n`.
    Mixed,
    /// `b = n i`, tabulated against `n`.
    FixedB,
}

impl TableFamily {
    pub fn slice(self, value: f64) -> FamilySlice {
        match self {
            TableFamily::Ratio => FamilySlice::ratio(value),
            TableFamily::Mixed => FamilySlice::mixed(value),
            TableFamily::FixedB => FamilySlice::fixedb(value),
        }
    }

    pub fn default_kinds(self) -> &'static [RoofKind] {
        match self {
            TableFamily::Ratio => &[RoofKind::T1, RoofKind::T3],
            _ => &RoofKind::ALL,
        }
    }
}

impl std::str::FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ratio" => Ok(TableFamily::Ratio),
            "mixed" => Ok(TableFamily::Mixed),
            "fixedb" => Ok(TableFamily::FixedB),
            _ => Err(Error::InvalidArgument(format!("unknown table family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub value: f64,
    pub results: Vec<SweepResult>,
    /// `mu1 / mu2` when both were swept.
    pub mu1_over_mu2: Option<f64>,
}

impl TableRow {
    pub fn get(&self, kind: RoofKind) -> Option<&SweepResult> {
        self.results.iter().find(|r| r.j == kind.index())
    }
}

/// Minimal powers of each `kinds` entry for every family parameter in
/// `values`, using the family's default grid and window.
pub fn table_sweep(
    family: TableFamily,
    values: &[f64],
    kinds: &[RoofKind],
    tol: f64,
) -> Result<Vec<TableRow>> {
    values
        .iter()
        .map(|&value| {
            let slice = family.slice(value);
            let results = kinds
                .iter()
                .map(|&kind| {
                    let (lo, hi) = default_window(kind);
                    min_power(&slice, kind, lo, hi, tol)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut row = TableRow { value, results, mu1_over_mu2: None };
            if let (Some(m1), Some(m2)) = (row.get(RoofKind::T1), row.get(RoofKind::T2)) {
                row.mu1_over_mu2 = Some(m1.minimal_power / m2.minimal_power);
            }
            Ok(row)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explorer::Axis;

    fn small_case1() -> FamilySlice {
        FamilySlice::case1()
            .with_axes(vec![Axis::new(0.05, 5.0, 0.05).unwrap()])
            .unwrap()
    }

    #[test]
    fn bisection_brackets_and_certifies() {
        let slice = small_case1();
        let r = min_power(&slice, RoofKind::T1, 1.0, 4.0, 1e-3).unwrap();
        assert!(r.minimal_power > 2.0 && r.minimal_power < 2.3, "{r:?}");
        assert!(r.worst_delta < 0.0);
        assert!(r.certify(&slice).unwrap().is_valid());
    }

    #[test]
    fn unbracketed_window() {
        let slice = small_case1();
        match min_power(&slice, RoofKind::T1, 3.0, 4.0, 1e-3) {
            Err(Error::NotBracketed { holds_at_lo: true, .. }) => {}
            other => panic!("{other:?}"),
        }
        match min_power(&slice, RoofKind::T1, 1.0, 1.5, 1e-3) {
            Err(Error::NotBracketed { holds_at_hi: false, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tolerance_floor() {
        assert!(min_power(&small_case1(), RoofKind::T1, 1.0, 4.0, 1e-5).is_err());
    }
}
