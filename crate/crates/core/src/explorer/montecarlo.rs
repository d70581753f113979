use crate::gfamily::GParams;
use crate::monogamy::MonogamyProfile;
use crate::tangles::{check_power, RoofKind};
use crate::{Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Half-width of the uniform box for real and imaginary parts.
pub const DEFAULT_RADIUS: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerCount {
    pub power: f64,
    pub negatives: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonteCarloResult {
    pub j: u8,
    pub samples: u64,
    pub seed: u64,
    pub radius: f64,
    /// Samples skipped because all of `a`, `b`, `c` vanished.
    pub skipped: u64,
    /// Sorted by increasing power.
    pub counts: Vec<PowerCount>,
}

impl MonteCarloResult {
    pub fn count_at(&self, power: f64) -> Option<u64> {
        self.counts
            .iter()
            .find(|c| (c.power - power).abs() < 1e-12)
            .map(|c| c.negatives)
    }
}

/// Sample `index` of the stream `seed`: complex `a`, `b` with real and
/// imaginary parts uniform in `[-radius, radius)`, and `c = b`.
pub fn sample_params(seed: u64, index: u64, radius: f64) -> GParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut draw = || rng.gen_range(-radius..radius);
    let a = Complex64::new(draw(), draw());
    let b = Complex64::new(draw(), draw());
    GParams { a, b, c: b }
}

/// Counts samples with `Delta_j < 0` at each power. Each sample owns an
/// independent stream, so the counts do not depend on the thread count.
pub fn monte_carlo(
    samples: u64,
    powers: &[f64],
    kind: RoofKind,
    seed: u64,
    radius: f64,
) -> Result<MonteCarloResult> {
    if samples == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad radius {radius}")));
    }
    if powers.is_empty() {
        return Err(Error::InvalidArgument("no powers given".into()));
    }
    for &p in powers {
        check_power(p)?;
    }
    let mut sorted = powers.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();

    let zero = || (vec![0u64; sorted.len()], 0u64);
    let (negatives, skipped) = (0..samples)
        .into_par_iter()
        .fold(zero, |(mut acc, mut skip), i| {
            match MonogamyProfile::new(&sample_params(seed, i, radius)) {
                Ok(prof) => {
                    for (n, &p) in acc.iter_mut().zip(&sorted) {
                        if prof.delta(kind, p) < 0.0 {
                            *n += 1;
                        }
                    }
                }
                Err(_) => skip += 1,
            }
            (acc, skip)
        })
        .reduce(zero, |(mut x, sx), (y, sy)| {
            x.iter_mut().zip(&y).for_each(|(a, b)| *a += b);
            (x, sx + sy)
        });

    Ok(MonteCarloResult {
        j: kind.index(),
        samples,
        seed,
        radius,
        skipped,
        counts: sorted
            .into_iter()
            .zip(negatives)
            .map(|(power, negatives)| PowerCount { power, negatives })
            .collect(),
    })
}
