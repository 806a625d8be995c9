//! Test-side oracle: brute-force completeness decisions over full
//! arbitrary-precision products, with no modular shortcut and no reuse of
//! library code. The oracle was written before the library and must stay
//! independent of the implementation paths it checks, so the two routes can
//! disagree loudly.

#![allow(dead_code)] // each integration-test target uses its own slice of this

use std::collections::BTreeMap;

use num_bigint::BigInt;

/// A set is complete when the product of its elements is an integer
/// multiple of their sum. Decided here the expensive way: exact big-int
/// sum and product, then one divisibility test (a zero sum forces the
/// product itself to be zero).
pub fn oracle_is_complete(elements: &[i64]) -> bool {
    let zero = BigInt::from(0);
    let sum: BigInt = elements.iter().map(|&x| BigInt::from(x)).sum();
    let product: BigInt = elements.iter().map(|&x| BigInt::from(x)).product();
    if sum == zero {
        product == zero
    } else {
        &product % &sum == zero
    }
}

/// Naive single-threaded census of the complete subsets of {1..n} with at
/// least `min_size` elements, counted via [`oracle_is_complete`] only.
/// Returns the total and the size histogram. Exponential: keep n desk-sized.
pub fn oracle_census(n: u32, min_size: u32) -> (u64, BTreeMap<u32, u64>) {
    assert!(n <= 20, "oracle census is meant for small n");
    let mut total = 0u64;
    let mut by_size = BTreeMap::new();
    for mask in 1u64..(1u64 << n) {
        let elements: Vec<i64> = (0..n)
            .filter(|bit| mask >> bit & 1 == 1)
            .map(|bit| i64::from(bit) + 1)
            .collect();
        if elements.len() as u32 >= min_size && oracle_is_complete(&elements) {
            total += 1;
            *by_size.entry(elements.len() as u32).or_insert(0) += 1;
        }
    }
    (total, by_size)
}
