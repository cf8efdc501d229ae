//! Seeded experiments on bumpiness and bound tightness.
//!
//! Sample `i` of a run with seed `s` draws from its own ChaCha stream
//! (key from `s`, stream id `i`), so results do not depend on how samples
//! are scheduled across threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{displacement_lower_bound, word_lower_bound};
use crate::bumpiness::{is_bumpy_with, BumpinessParams};
use crate::error::{Error, Result};
use crate::oracle::{self, ComplexityTable};
use crate::perm::{check_size, Permutation};
use crate::synthesis::synthesize;

/// Largest `n` accepted by the exhaustive counters.
pub const EXHAUSTIVE_LIMIT: usize = 9;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// The random stream for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform permutation of `{1, ..., n}` by Fisher–Yates.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Permutation> {
    check_size(n)?;
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Ok(Permutation::from_zero_based_unchecked(map))
}

/// Sample `index` of the run seeded with `seed`.
pub fn sample_permutation(n: usize, seed: u64, index: u64) -> Result<Permutation> {
    random_permutation(n, &mut sample_rng(seed, index))
}

fn all_permutations(n: usize) -> Result<impl ParallelIterator<Item = Permutation>> {
    check_size(n)?;
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Capability(format!(
            "exhaustive enumeration supports n <= {EXHAUSTIVE_LIMIT}, got {n}"
        )));
    }
    Ok((0..oracle::factorial(n))
        .into_par_iter()
        .map(move |r| oracle::unrank(r, n).expect("rank in range")))
}

/// `(bumpy, n!)` for the given thresholds, by full enumeration.
pub fn exhaustive_bumpy_count_with(n: usize, params: &BumpinessParams) -> Result<(u64, u64)> {
    let bumpy = all_permutations(n)?.filter(|p| is_bumpy_with(p, params)).count() as u64;
    Ok((bumpy, oracle::factorial(n)))
}

/// `(very bumpy, n!)`.
pub fn exhaustive_bumpy_count(n: usize) -> Result<(u64, u64)> {
    exhaustive_bumpy_count_with(n, &BumpinessParams::very_bumpy())
}

/// Every permutation of `S_n` failing the thresholds, in rank order.
pub fn exhaustive_not_bumpy(n: usize, params: &BumpinessParams) -> Result<Vec<Permutation>> {
    let mut out: Vec<(u64, Permutation)> = all_permutations(n)?
        .filter(|p| !is_bumpy_with(p, params))
        .map(|p| (oracle::rank(&p), p))
        .collect();
    out.sort_by_key(|(r, _)| *r);
    Ok(out.into_iter().map(|(_, p)| p).collect())
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let nt = trials as f64;
    let phat = successes as f64 / nt;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / nt;
    let center = (phat + z2 / (2.0 * nt)) / denom;
    let half = Z95 / denom * (phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)).sqrt();
    let low = (center - half).clamp(0.0, 1.0).min(phat);
    let high = (center + half).clamp(0.0, 1.0).max(phat);
    (low, high)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateResult {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub b: String,
    pub c: String,
    pub bumpy_count: u64,
    pub fraction: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl EstimateResult {
    pub fn ci_contains(&self, x: f64) -> bool {
        self.ci_low <= x && x <= self.ci_high
    }
}

/// Monte Carlo estimate of the (b, c)-bumpy fraction of `S_n`.
pub fn bumpy_fraction_estimate(n: usize, samples: u64, seed: u64, params: &BumpinessParams) -> Result<EstimateResult> {
    check_size(n)?;
    if samples == 0 {
        return Err(Error::Domain("samples must be >= 1".into()));
    }
    let bumpy_count = (0..samples)
        .into_par_iter()
        .map(|i| {
            let p = sample_permutation(n, seed, i).expect("n checked");
            is_bumpy_with(&p, params) as u64
        })
        .sum::<u64>();
    let (ci_low, ci_high) = wilson_interval(bumpy_count, samples);
    Ok(EstimateResult {
        n,
        samples,
        seed,
        b: params.b().to_string(),
        c: params.c().to_string(),
        bumpy_count,
        fraction: bumpy_count as f64 / samples as f64,
        ci_low,
        ci_high,
    })
}

/// One row of a bound-tightness report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRow {
    pub permutation: String,
    pub displacement_lb: u64,
    pub word_lb: u64,
    pub exact: Option<u64>,
    pub synth_len: u64,
}

impl GapRow {
    pub fn is_sandwiched(&self) -> bool {
        let lb = self.word_lb.max(self.displacement_lb);
        match self.exact {
            Some(e) => lb <= e && e <= self.synth_len,
            None => lb <= self.synth_len,
        }
    }
}

pub fn gap_rows(perms: &[Permutation], table: Option<&ComplexityTable>) -> Result<Vec<GapRow>> {
    perms
        .par_iter()
        .map(|p| {
            Ok(GapRow {
                permutation: p.to_string(),
                displacement_lb: displacement_lower_bound(p),
                word_lb: word_lower_bound(p),
                exact: table.map(|t| t.exact_complexity(p)).transpose()?.map(|e| e as u64),
                synth_len: synthesize(p)?.len() as u64,
            })
        })
        .collect()
}

/// `samples` seeded random permutations with their bounds; the exact column
/// is filled when `n` is within the oracle's default limit.
pub fn bound_gap_report(n: usize, samples: u64, seed: u64) -> Result<Vec<GapRow>> {
    check_size(n)?;
    if samples == 0 {
        return Err(Error::Domain("samples must be >= 1".into()));
    }
    let perms: Vec<Permutation> = (0..samples)
        .map(|i| sample_permutation(n, seed, i))
        .collect::<Result<_>>()?;
    let table = if n <= oracle::DEFAULT_LIMIT {
        Some(oracle::build_table_with(
            n,
            oracle::BuildOptions {
                track_parents: false,
                ..Default::default()
            },
        )?)
    } else {
        None
    };
    gap_rows(&perms, table.as_ref())
}

/// CSV with header `permutation,displacement_lb,word_lb,exact,synth_len`; a missing exact value is empty.
pub fn gap_rows_csv(rows: &[GapRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
