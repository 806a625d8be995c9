use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::time::{Duration, Instant};

use crate::error::Error;
use crate::set::IntSet;

/// Hard cap on the census domain: counting walks all 2^N subsets of
/// {1..N}, so N is limited to keep worst-case runtime in minutes.
pub const MAX_N: u32 = 30;

/// Exact count of complete subsets of `{1..N}`, with a per-size histogram.
#[derive(Debug, Clone)]
pub struct CensusReport {
    /// Upper end of the base interval `{1..N}`.
    pub n: u32,
    /// Smallest subset size counted.
    pub min_size: u32,
    /// Number of complete subsets of size ≥ `min_size`. Always equals the
    /// sum of the histogram values, and never depends on `worker_count`.
    pub total: u64,
    /// Count per subset size; zero-count sizes are omitted.
    pub by_size: BTreeMap<u32, u64>,
    /// The constructive undercount from odd-length homogeneous
    /// progressions, for side-by-side display.
    pub ap_lower_bound: u64,
    /// Number of workers that carried the enumeration.
    pub worker_count: usize,
    /// Wall-clock time spent counting.
    pub elapsed: Duration,
}

fn validate(n: u32, min_size: u32) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if n > MAX_N {
        return Err(Error::NTooLarge(n));
    }
    if min_size == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(())
}

/// Completeness of the subset of `{1..N}` encoded by `mask` (element `k`
/// ↔ bit `k − 1`). Everything is positive here, so the sum is a valid
/// modulus directly and no sign handling is needed.
fn subset_is_complete(mask: u64) -> bool {
    let mut sum = 0u64;
    let mut rest = mask;
    while rest != 0 {
        sum += u64::from(rest.trailing_zeros()) + 1;
        rest &= rest - 1;
    }
    let mut acc = 1 % sum;
    let mut rest = mask;
    while rest != 0 {
        acc = acc * (u64::from(rest.trailing_zeros()) + 1) % sum;
        if acc == 0 {
            return true;
        }
        rest &= rest - 1;
    }
    acc == 0
}

fn count_block(lo: u64, hi: u64, histogram: &mut [u64; 31]) {
    for mask in lo..hi {
        if subset_is_complete(mask) {
            histogram[mask.count_ones() as usize] += 1;
        }
    }
}

/// Counts complete subsets of `{1..n}` into a size histogram, fanning the
/// mask range `[1, 2^n)` out across contiguous blocks. Partial histograms
/// merge by addition, so the result is identical for every worker count.
fn count_histogram(n: u32, workers: NonZeroUsize) -> [u64; 31] {
    let end = 1u64 << n;
    let span = end - 1; // masks 1 ..= 2^n − 1
    let worker_count = (workers.get() as u64).min(span);
    let mut merged = [0u64; 31];
    if worker_count <= 1 {
        count_block(1, end, &mut merged);
        return merged;
    }
    let mut partials = vec![[0u64; 31]; worker_count as usize];
    std::thread::scope(|scope| {
        for (k, partial) in partials.iter_mut().enumerate() {
            let lo = 1 + k as u64 * span / worker_count;
            let hi = 1 + (k as u64 + 1) * span / worker_count;
            scope.spawn(move || count_block(lo, hi, partial));
        }
    });
    for partial in &partials {
        for (acc, value) in merged.iter_mut().zip(partial) {
            *acc += value;
        }
    }
    merged
}

/// Exact, exhaustive census of the complete subsets of `{1..n}` with size
/// ≥ `min_size`.
///
/// Errors: [`Error::EmptyInput`] for `n = 0`, [`Error::NTooLarge`] above
/// [`MAX_N`], [`Error::ZeroInput`] for `min_size = 0`.
pub fn census(n: u32, min_size: u32, workers: NonZeroUsize) -> Result<CensusReport, Error> {
    validate(n, min_size)?;
    let start = Instant::now();
    let histogram = count_histogram(n, workers);
    let by_size: BTreeMap<u32, u64> = histogram
        .iter()
        .enumerate()
        .filter(|&(size, &count)| size as u32 >= min_size && count > 0)
        .map(|(size, &count)| (size as u32, count))
        .collect();
    let total = by_size.values().sum();
    Ok(CensusReport {
        n,
        min_size,
        total,
        by_size,
        ap_lower_bound: ap_lower_bound(u64::from(n)),
        worker_count: workers.get(),
        elapsed: start.elapsed(),
    })
}

/// The constructive lower bound on the census: Σ ⌊N/j⌋ over odd j with
/// 3 ≤ j ≤ N — each term counts the homogeneous progressions
/// `{d, 2d, …, jd}` that fit inside `[1, N]`, and every one of them is a
/// complete set.
pub fn ap_lower_bound(n: u64) -> u64 {
    (3..=n).step_by(2).map(|j| n / j).sum()
}

/// Streams every complete subset of `{1..n}` with size in
/// `[min_size, max_size]` to `sink`, in ascending bitmask order (element
/// `k` ↔ bit `k − 1`), and returns how many were emitted.
///
/// The walk is serial and allocates one set per emission, so memory stays
/// constant regardless of how many subsets qualify.
///
/// Errors: as [`census`].
pub fn enumerate_complete(
    n: u32,
    min_size: u32,
    max_size: u32,
    mut sink: impl FnMut(&IntSet),
) -> Result<u64, Error> {
    validate(n, min_size)?;
    let mut emitted = 0u64;
    for mask in 1..(1u64 << n) {
        let size = mask.count_ones();
        if size < min_size || size > max_size || !subset_is_complete(mask) {
            continue;
        }
        let elements: Vec<i64> = (0..n)
            .filter(|bit| mask >> bit & 1 == 1)
            .map(|bit| i64::from(bit) + 1)
            .collect();
        sink(&IntSet::from_ascending(elements));
        emitted += 1;
    }
    Ok(emitted)
}

/// Whether a growth row carries an exact census count or the constructive
/// progression bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthFlavor {
    /// Exhaustive count (N small enough to enumerate).
    Exact,
    /// [`ap_lower_bound`] stand-in for N beyond exhaustive reach.
    ApBound,
}

impl GrowthFlavor {
    /// Stable machine-readable name, used by the command-line output.
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthFlavor::Exact => "exact",
            GrowthFlavor::ApBound => "ap_bound",
        }
    }
}

/// One diagnostic row comparing the census (or its lower bound) against
/// the reference growth shapes `N·ln N` and `N·ln N·ln ln N`.
#[derive(Debug, Clone)]
pub struct GrowthRow {
    /// The interval end this row describes.
    pub n: u64,
    /// Exact count or lower bound, per `flavor`.
    pub count_or_bound: u64,
    /// Which of the two the row carries.
    pub flavor: GrowthFlavor,
    /// `N·ln N` (not finite-positive below N = 2).
    pub nlogn: f64,
    /// `N·ln N·ln ln N` (not finite-positive below N = 3).
    pub nloglog: f64,
    /// `count_or_bound / nlogn`.
    pub ratio_lower: f64,
    /// `count_or_bound / nloglog`.
    pub ratio_upper: f64,
}

/// Builds one [`GrowthRow`] per requested N (callers pass them ascending).
///
/// Rows with `N ≤ exact_up_to` get exhaustive counts (size ≥ 2, matching
/// the census default); the rest fall back to the progression bound.
/// `exact_up_to` is clamped to [`MAX_N`], so no input errors — a request
/// beyond exhaustive reach degrades to the bound rather than failing.
pub fn growth_table(
    ns: &[u64],
    exact_up_to: u32,
    workers: NonZeroUsize,
) -> Result<Vec<GrowthRow>, Error> {
    let exact_cap = u64::from(exact_up_to.min(MAX_N));
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let (count_or_bound, flavor) = if n >= 1 && n <= exact_cap {
            let report = census(n as u32, 2, workers)?;
            (report.total, GrowthFlavor::Exact)
        } else {
            (ap_lower_bound(n), GrowthFlavor::ApBound)
        };
        let nf = n as f64;
        let nlogn = nf * nf.ln();
        let nloglog = nlogn * nf.ln().ln();
        rows.push(GrowthRow {
            n,
            count_or_bound,
            flavor,
            nlogn,
            nloglog,
            ratio_lower: count_or_bound as f64 / nlogn,
            ratio_upper: count_or_bound as f64 / nloglog,
        });
    }
    Ok(rows)
}

/// Picks the worker count for parallel scans: an explicit request wins,
/// then a positive integer in the `CSET_THREADS` environment variable,
/// then the machine's available parallelism, then 1.
pub fn resolve_worker_count(requested: Option<NonZeroUsize>) -> NonZeroUsize {
    requested
        .or_else(|| {
            std::env::var("CSET_THREADS")
                .ok()
                .and_then(|raw| raw.trim().parse().ok())
        })
        .or_else(|| std::thread::available_parallelism().ok())
        .unwrap_or(NonZeroUsize::MIN)
}
