use num_bigint::BigInt;

use crate::error::Error;
use crate::set::IntSet;

/// A set is *complete* when its element product is an integer multiple of
/// its element sum: ∏xᵢ = b·Σxᵢ for some integer b.
///
/// The test never materializes the product: for a nonzero sum it reduces
/// each factor modulo |sum| (a Euclidean remainder), and a zero sum forces
/// the product itself to be zero, i.e. the set must contain 0.
///
/// Returns [`Error::Overflow`] when the sum leaves the 64-bit range.
pub fn is_complete(a: &IntSet) -> Result<bool, Error> {
    let sum = a.sum()?;
    if sum == 0 {
        Ok(a.contains(0))
    } else {
        Ok(a.product_mod(sum.unsigned_abs()) == 0)
    }
}

/// Exact divisibility evidence for one set.
///
/// Exactly one of the two optional fields describes the outcome:
/// - `witness` is present iff the set is complete, and satisfies
///   `witness · sum = product` exactly (when `sum == 0` the product is 0 and
///   the witness is recorded as 0);
/// - `residue` is the Euclidean remainder of the product modulo `|sum|`,
///   present whenever `sum != 0` (it is 0 precisely for complete sets), and
///   absent when `sum == 0` since there is no modulus to reduce by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Exact element sum.
    pub sum: i64,
    /// The integer b with product = b·sum, present iff the set is complete.
    pub witness: Option<BigInt>,
    /// Product mod |sum| in `[0, |sum|)`; `None` when the sum is zero.
    pub residue: Option<u64>,
}

/// Computes the full [`Certificate`] for a set using arbitrary-precision
/// arithmetic throughout — an independent route from [`is_complete`], which
/// stays modular. The two agree on every input.
///
/// Returns [`Error::Overflow`] when the sum leaves the 64-bit range.
pub fn certificate(a: &IntSet) -> Result<Certificate, Error> {
    let sum = a.sum()?;
    let product: BigInt = a.iter().map(BigInt::from).product();
    let zero = BigInt::from(0);
    if sum == 0 {
        let witness = (product == zero).then(|| zero.clone());
        return Ok(Certificate {
            sum,
            witness,
            residue: None,
        });
    }
    let modulus = BigInt::from(sum.unsigned_abs());
    let residue_big = ((&product % &modulus) + &modulus) % &modulus;
    let residue = u64::try_from(&residue_big).expect("remainder fits the modulus range");
    let witness = (residue == 0).then(|| &product / BigInt::from(sum));
    Ok(Certificate {
        sum,
        witness,
        residue: Some(residue),
    })
}

/// A set rewritten as `original[i] = original[0] + d · normalized[i]`, where
/// `d` is the gcd of the differences from the smallest element.
///
/// The normalized set always starts at 0, its differences have gcd 1, and —
/// because it contains 0 — it is always complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormResult {
    /// The input set, unchanged.
    pub original: IntSet,
    /// Positive gcd of the differences. Unsigned: a set spanning the full
    /// 64-bit range has differences beyond `i64::MAX`.
    pub d: u64,
    /// `(original[i] − original[0]) / d`, ascending and starting at 0.
    pub normalized: IntSet,
}

/// Rewrites a set in the normalized shape described by [`NormalFormResult`].
///
/// Returns [`Error::DegenerateSet`] for singletons (the difference gcd is 0,
/// so the division is undefined) and [`Error::Overflow`] when a normalized
/// element does not fit the 64-bit element range (possible when `d = 1` and
/// the set spans more than `i64::MAX`).
pub fn normal_form(a: &IntSet) -> Result<NormalFormResult, Error> {
    if a.len() < 2 {
        return Err(Error::DegenerateSet);
    }
    let d = a.gcd_of_differences();
    debug_assert!(d > 0, "two distinct elements have a nonzero difference");
    let first = a.elements()[0];
    let normalized = a
        .iter()
        .map(|x| {
            let quotient = (i128::from(x) - i128::from(first)) / (d as i128);
            i64::try_from(quotient)
                .map_err(|_| Error::Overflow("normalized element exceeds the 64-bit range"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NormalFormResult {
        original: a.clone(),
        d,
        normalized: IntSet::from_ascending(normalized),
    })
}
