use num_bigint::BigInt;

use crate::algebra::translate;
use crate::complete::is_complete;
use crate::error::Error;
use crate::set::IntSet;

/// Deterministic primality by trial division (sufficient for the sums this
/// module produces; no probabilistic shortcuts).
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m.is_multiple_of(2) {
        return m == 2;
    }
    let mut d = 3u64;
    while d <= m / d {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `n` odd primes `{3, 5, 7, …}` (2 is deliberately excluded).
///
/// Errors: [`Error::EmptyInput`] for `n = 0`.
pub fn first_odd_primes(n: u32) -> Result<IntSet, Error> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut primes = Vec::with_capacity(n as usize);
    let mut candidate = 3i64;
    while primes.len() < n as usize {
        if is_prime(candidate as u64) {
            primes.push(candidate);
        }
        candidate += 2;
    }
    Ok(IntSet::from_ascending(primes))
}

/// Number of distinct prime divisors of `|m|` by full trial division.
///
/// Errors: [`Error::ZeroInput`] (every prime divides 0).
pub fn omega(m: i64) -> Result<u32, Error> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let mut rest = m.unsigned_abs();
    let mut count = 0u32;
    if rest.is_multiple_of(2) {
        count += 1;
        while rest.is_multiple_of(2) {
            rest /= 2;
        }
    }
    let mut d = 3u64;
    while d <= rest / d {
        if rest.is_multiple_of(d) {
            count += 1;
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 2;
    }
    if rest > 1 {
        count += 1;
    }
    Ok(count)
}

/// One row of the prime-sum scan: the first `n` odd primes, their sum `L`,
/// and the three escape hatches the conjecture allows.
///
/// `holds` is true when at least one of them fires: the set is complete,
/// or `L` is prime, or `L` has exactly two distinct prime divisors. Scans
/// report; they never assert the conjecture's truth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFinding {
    /// How many odd primes the row covers.
    pub n: u32,
    /// The first `n` odd primes.
    pub primes: IntSet,
    /// Their sum `L`.
    pub sum: i64,
    /// Whether the prime set is complete.
    pub is_complete: bool,
    /// Whether `L` is prime.
    pub sum_is_prime: bool,
    /// Distinct prime divisors of `L`.
    pub omega_of_sum: u32,
    /// `is_complete || sum_is_prime || omega_of_sum == 2`.
    pub holds: bool,
}

/// Scans the prime-sum conjecture over odd `n` up to `max_n` (odd lengths
/// are the conjecture's subject; `include_even` adds the even rows as
/// exploration, and those may well report `holds = false`).
///
/// Errors: [`Error::EmptyInput`] when the requested range contains no rows
/// (odd scans start at n = 3, even-inclusive scans at n = 2).
pub fn scan_prime_conjecture(max_n: u32, include_even: bool) -> Result<Vec<PrimeFinding>, Error> {
    let start = if include_even { 2 } else { 3 };
    if max_n < start {
        return Err(Error::EmptyInput);
    }
    let largest = first_odd_primes(max_n)?;
    let elements = largest.elements();
    let step = if include_even { 1 } else { 2 };
    (start..=max_n)
        .step_by(step)
        .map(|n| {
            let primes = IntSet::from_ascending(elements[..n as usize].to_vec());
            let sum = primes.sum()?;
            let complete = is_complete(&primes)?;
            let sum_is_prime = is_prime(sum as u64);
            let omega_of_sum = omega(sum)?;
            Ok(PrimeFinding {
                n,
                primes,
                sum,
                is_complete: complete,
                sum_is_prime,
                omega_of_sum,
                holds: complete || sum_is_prime || omega_of_sum == 2,
            })
        })
        .collect()
}

/// A completion found for a base set: the added elements are new positive
/// integers, disjoint from the base, whose union with it is complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    /// The set being completed.
    pub base: IntSet,
    /// Added elements, ascending; empty when the base is already complete.
    pub added: Vec<i64>,
    /// Completeness of base ∪ added, re-verified by the core predicate.
    pub combined_complete: bool,
    /// The candidate ceiling the search ran with.
    pub search_bound: u32,
}

/// Searches for the smallest completion of `base` by new positive integers
/// ≤ `bound`: smallest cardinality first (up to `max_added` elements), ties
/// broken lexicographically. Returns `None` when no completion exists
/// within those limits — absence is an answer, not an error.
///
/// An already-complete base yields the empty addition.
///
/// Errors: [`Error::NonPositiveElement`] if the base strays outside the
/// positive integers.
pub fn complete_extension(
    base: &IntSet,
    bound: u32,
    max_added: u32,
) -> Result<Option<ExtensionResult>, Error> {
    if let Some(&offender) = base.elements().iter().find(|&&x| x < 1) {
        return Err(Error::NonPositiveElement(offender));
    }
    if is_complete(base)? {
        return Ok(Some(ExtensionResult {
            base: base.clone(),
            added: Vec::new(),
            combined_complete: true,
            search_bound: bound,
        }));
    }
    let candidates: Vec<i64> = (1..=i64::from(bound))
        .filter(|&x| !base.contains(x))
        .collect();
    for k in 1..=(max_added as usize).min(candidates.len()) {
        if let Some(added) = first_completing_combination(base, &candidates, k)? {
            return Ok(Some(ExtensionResult {
                base: base.clone(),
                added,
                combined_complete: true,
                search_bound: bound,
            }));
        }
    }
    Ok(None)
}

/// Walks the k-element combinations of `candidates` in lexicographic order
/// and returns the first one whose union with `base` is complete.
fn first_completing_combination(
    base: &IntSet,
    candidates: &[i64],
    k: usize,
) -> Result<Option<Vec<i64>>, Error> {
    debug_assert!(k >= 1 && k <= candidates.len());
    let mut indices: Vec<usize> = (0..k).collect();
    loop {
        let mut union = base.elements().to_vec();
        union.extend(indices.iter().map(|&i| candidates[i]));
        let combined = IntSet::new(union).expect("candidates are distinct and new");
        if is_complete(&combined)? {
            return Ok(Some(indices.iter().map(|&i| candidates[i]).collect()));
        }
        // Advance to the next combination in lexicographic order.
        let mut at = k;
        loop {
            if at == 0 {
                return Ok(None);
            }
            at -= 1;
            if indices[at] != candidates.len() - k + at {
                break;
            }
        }
        indices[at] += 1;
        for j in at + 1..k {
            indices[j] = indices[j - 1] + 1;
        }
    }
}

/// Exhaustively tests the geometric sets `{r, r², …, rⁿ}` for
/// `r ∈ [r_min, r_max]` (skipping the degenerate −1, 0, 1, whose powers
/// collide or vanish) and `n ∈ [2, n_max]` (`n = 1` is trivially
/// complete). Returns the complete hits as `(r, n)` pairs in ascending
/// order.
///
/// Sums and products are arbitrary-precision throughout — the powers leave
/// the 64-bit range almost immediately.
pub fn geometric_search(r_min: i64, r_max: i64, n_max: u32) -> Vec<(i64, u32)> {
    let zero = BigInt::from(0);
    let mut hits = Vec::new();
    for r in r_min..=r_max {
        if (-1..=1).contains(&r) {
            continue;
        }
        let ratio = BigInt::from(r);
        let mut power = ratio.clone(); // r^1
        let mut sum = power.clone();
        let mut product = power.clone();
        for n in 2..=n_max {
            power *= &ratio;
            sum += &power;
            product *= &power;
            let complete = if sum == zero {
                product == zero
            } else {
                &product % &sum == zero
            };
            if complete {
                hits.push((r, n));
            }
        }
    }
    hits
}

/// Finds the smallest shift `s` with `1 ≤ s < m` whose translate
/// `{x + s : x ∈ f}` is complete, or `None` when no shift below `m` works
/// (`s = 0` is excluded as trivial).
///
/// Errors: [`Error::NotComplete`] when `f` itself is not complete (the
/// question starts from a complete set), plus [`Error::Overflow`] if a
/// translate leaves the 64-bit range.
pub fn translate_search(f: &IntSet, m: u32) -> Result<Option<i64>, Error> {
    if !is_complete(f)? {
        return Err(Error::NotComplete(f.clone()));
    }
    for s in 1..i64::from(m) {
        if is_complete(&translate(f, s)?)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(values: &[i64]) -> IntSet {
        IntSet::new(values).unwrap()
    }

    #[test]
    fn primality_by_trial_division() {
        for p in [2u64, 3, 5, 7, 97, 7919] {
            assert!(is_prime(p), "{p} is prime");
        }
        for c in [0u64, 1, 4, 9, 91, 7917] {
            assert!(!is_prime(c), "{c} is not prime");
        }
    }

    #[test]
    fn first_odd_primes_never_include_two() {
        assert_eq!(first_odd_primes(3).unwrap().elements(), &[3, 5, 7]);
        assert_eq!(first_odd_primes(1).unwrap().elements(), &[3]);
        assert_eq!(
            first_odd_primes(7).unwrap().elements(),
            &[3, 5, 7, 11, 13, 17, 19]
        );
        assert_eq!(first_odd_primes(0).unwrap_err(), Error::EmptyInput);

        let hundred = first_odd_primes(100).unwrap();
        assert_eq!(hundred.len(), 100);
        assert!(!hundred.contains(2));
        assert!(hundred.iter().all(|p| is_prime(p as u64)));
        assert!(hundred
            .elements()
            .windows(2)
            .all(|pair| pair[0] < pair[1]));
    }

    #[test]
    fn omega_counts_distinct_primes_only() {
        assert_eq!(omega(1), Ok(0));
        assert_eq!(omega(75), Ok(2)); // 3·5²
        assert_eq!(omega(30), Ok(3)); // 2·3·5
        assert_eq!(omega(-12), Ok(2)); // sign ignored
        assert_eq!(omega(0), Err(Error::ZeroInput));
        assert_eq!(omega(i64::MIN), Ok(1)); // 2^63
    }

    #[test]
    fn omega_is_one_exactly_on_prime_powers() {
        assert_eq!(omega(2), Ok(1));
        for p in first_odd_primes(100).unwrap().iter() {
            assert_eq!(omega(p), Ok(1), "omega({p})");
        }
    }

    #[test]
    fn prime_scan_reproduces_the_first_three_rows() {
        let findings = scan_prime_conjecture(7, false).unwrap();
        assert_eq!(findings.len(), 3);

        assert_eq!(findings[0].n, 3);
        assert_eq!(findings[0].primes.elements(), &[3, 5, 7]);
        assert_eq!(findings[0].sum, 15);
        assert!(findings[0].is_complete);
        assert!(findings[0].holds);

        assert_eq!(findings[1].n, 5);
        assert_eq!(findings[1].sum, 39);
        assert!(findings[1].is_complete); // 15015 = 385·39
        assert!(findings[1].holds);

        assert_eq!(findings[2].n, 7);
        assert_eq!(findings[2].sum, 75);
        assert!(!findings[2].is_complete); // 4849845 mod 75 = 45
        assert!(!findings[2].sum_is_prime);
        assert_eq!(findings[2].omega_of_sum, 2); // 75 = 3·5²
        assert!(findings[2].holds);
    }

    #[test]
    fn prime_scan_rows_are_internally_consistent() {
        for finding in scan_prime_conjecture(51, false).unwrap() {
            assert_eq!(finding.primes.len() as u32, finding.n);
            assert_eq!(finding.primes.sum(), Ok(finding.sum));
            assert_eq!(
                is_complete(&finding.primes),
                Ok(finding.is_complete),
                "n = {}",
                finding.n
            );
            assert_eq!(finding.sum_is_prime, is_prime(finding.sum as u64));
            assert_eq!(omega(finding.sum), Ok(finding.omega_of_sum));
            assert_eq!(
                finding.holds,
                finding.is_complete || finding.sum_is_prime || finding.omega_of_sum == 2
            );
        }
    }

    #[test]
    fn prime_scan_even_rows_are_exploratory() {
        let findings = scan_prime_conjecture(7, true).unwrap();
        assert_eq!(
            findings.iter().map(|f| f.n).collect::<Vec<_>>(),
            vec![2, 3, 4, 5, 6, 7]
        );
        // n = 2: {3,5}, L = 8, 15 mod 8 ≠ 0, 8 = 2³ → nothing holds; the
        // scan records the violation rather than failing.
        let n2 = &findings[0];
        assert!(!n2.is_complete && !n2.sum_is_prime && n2.omega_of_sum == 1);
        assert!(!n2.holds);
    }

    #[test]
    fn prime_scan_rejects_empty_ranges() {
        assert_eq!(scan_prime_conjecture(2, false).unwrap_err(), Error::EmptyInput);
        assert_eq!(scan_prime_conjecture(1, true).unwrap_err(), Error::EmptyInput);
        assert_eq!(scan_prime_conjecture(3, false).unwrap().len(), 1);
        assert_eq!(scan_prime_conjecture(2, true).unwrap().len(), 1);
    }

    #[test]
    fn extension_finds_the_smallest_single_addition() {
        let result = complete_extension(&set(&[3, 7, 9, 4, 2]), 100, 1)
            .unwrap()
            .expect("a completion exists");
        assert_eq!(result.added, vec![5]); // union sum 30, product 7560 = 252·30
        assert!(result.combined_complete);
        assert_eq!(result.search_bound, 100);

        let result = complete_extension(&set(&[1, 18, 17, 3]), 100, 1)
            .unwrap()
            .expect("a completion exists");
        assert_eq!(result.added, vec![12]); // union sum 51, product 11016 = 216·51
    }

    #[test]
    fn extension_of_a_complete_base_is_empty() {
        let result = complete_extension(&set(&[3, 5, 7]), 100, 1)
            .unwrap()
            .expect("already complete");
        assert!(result.added.is_empty());
        assert!(result.combined_complete);
    }

    #[test]
    fn extension_absence_is_a_value() {
        // The smallest single addition for {1,3,17,18} is 12, so bound 11
        // finds nothing with one element allowed.
        assert_eq!(complete_extension(&set(&[1, 18, 17, 3]), 11, 1).unwrap(), None);
    }

    #[test]
    fn extension_prefers_fewer_elements_then_lexicographic_order() {
        // With two additions allowed under bound 11, the first completing
        // pair in lexicographic order is {2, 10}: sum 51, product
        // 918·20 = 18360 = 360·51.
        let result = complete_extension(&set(&[1, 18, 17, 3]), 11, 2)
            .unwrap()
            .expect("a two-element completion exists");
        assert_eq!(result.added, vec![2, 10]);
        assert!(result.combined_complete);
    }

    #[test]
    fn extension_rejects_non_positive_bases() {
        assert_eq!(
            complete_extension(&set(&[0, 3]), 10, 1).unwrap_err(),
            Error::NonPositiveElement(0)
        );
        assert_eq!(
            complete_extension(&set(&[-2, 5]), 10, 1).unwrap_err(),
            Error::NonPositiveElement(-2)
        );
    }

    #[test]
    fn geometric_search_finds_exactly_one_hit_in_the_default_window() {
        // {−2, 4}: product −8 = (−4)·2 is complete; nothing else in range.
        assert_eq!(geometric_search(-10, 10, 12), vec![(-2, 2)]);
    }

    #[test]
    fn geometric_search_finds_no_power_of_two() {
        // Sum 2^{n+1} − 2 carries the odd factor 2^n − 1 > 1, which the
        // product (a power of 2) can never supply.
        assert_eq!(geometric_search(2, 2, 20), Vec::<(i64, u32)>::new());
    }

    #[test]
    fn geometric_search_handles_degenerate_windows() {
        assert_eq!(geometric_search(-1, 1, 12), Vec::<(i64, u32)>::new());
        assert_eq!(geometric_search(-2, -2, 1), Vec::<(i64, u32)>::new());
        assert_eq!(geometric_search(3, 3, 2), Vec::<(i64, u32)>::new()); // 27 mod 12 ≠ 0
    }

    #[test]
    fn translate_search_returns_the_minimal_shift() {
        // Scanning s = 1, 2, …: {4,6,8} sums to 18 with product 192
        // (192 mod 18 = 12), then {5,7,9} gives 315 = 15·21 — complete.
        assert_eq!(translate_search(&set(&[3, 5, 7]), 10), Ok(Some(2)));
        // Re-scan of [1, s): s = 1 must fail for minimality.
        assert_eq!(is_complete(&translate(&set(&[3, 5, 7]), 1).unwrap()), Ok(false));

        assert_eq!(translate_search(&set(&[1, 2, 3]), 2), Ok(None)); // 24 mod 9 ≠ 0
        assert_eq!(translate_search(&set(&[2, 4, 6]), 3), Ok(Some(1))); // {3,5,7}
    }

    #[test]
    fn translate_search_requires_a_complete_start() {
        let incomplete = set(&[1, 3, 17, 18]);
        assert_eq!(
            translate_search(&incomplete, 10).unwrap_err(),
            Error::NotComplete(incomplete)
        );
    }
}
