use std::collections::BTreeSet;
use std::fmt;

use crate::complete::is_complete;
use crate::error::Error;
use crate::set::IntSet;

/// Identifies which closure construction a [`TheoremReport`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// All pairwise products of two complete sets.
    Prodset,
    /// Union of two complete sets whose pairwise products are a fixed
    /// multiple of the pairwise sums.
    UnionT,
    /// Union of a complete set with a disjoint zero-sum set.
    ZeroSumAugment,
    /// Elementwise multiple of a complete set, framed as a set of scaled
    /// differences.
    ScaledDifference,
    /// Two-fold sumset of a complete set.
    Sumset2,
    /// Elementwise multiple of a complete set.
    Scalar,
}

impl TheoremId {
    /// Stable machine-readable name, used by the command-line output.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Prodset => "prodset",
            TheoremId::UnionT => "union_t",
            TheoremId::ZeroSumAugment => "zero_sum_augment",
            TheoremId::ScaledDifference => "scaled_difference",
            TheoremId::Sumset2 => "sumset2",
            TheoremId::Scalar => "scalar",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Divisibility summary of a product multiset (pairwise products taken with
/// multiplicity), which can differ from the deduplicated set's summary.
///
/// The full multiset product is never materialized; only its remainder
/// modulo the multiset total survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetAggregate {
    /// Number of multiset members, multiplicity included.
    pub count: u64,
    /// Sum over all members with multiplicity.
    pub total: i64,
    /// Multiset product reduced modulo `|total|` (Euclidean remainder);
    /// `None` when `total` is zero.
    pub product_residue: Option<u64>,
    /// Whether the multiset product is exactly zero (some member is zero).
    pub product_is_zero: bool,
}

impl MultisetAggregate {
    /// Whether the multiset product is an integer multiple of the multiset
    /// total — the multiset reading of completeness.
    pub fn divisible(&self) -> bool {
        if self.total == 0 {
            self.product_is_zero
        } else {
            self.product_residue == Some(0)
        }
    }
}

/// What a checker built: a plain set, or a multiset summary paired with the
/// deduplicated set (the two readings can disagree, so both are reported).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructed {
    /// The construction is an ordinary set.
    Set(IntSet),
    /// The construction is a multiset; the deduplicated set rides along with
    /// its own completeness verdict.
    Multiset {
        /// Divisibility summary with multiplicity.
        aggregate: MultisetAggregate,
        /// The deduplicated set of the same members.
        dedup: IntSet,
        /// Whether the deduplicated set is complete.
        dedup_complete: bool,
    },
}

/// Outcome of one closure check: whether the side condition held, what was
/// constructed, and whether the construction is actually complete.
///
/// `constructed_complete` is always re-verified from scratch (by the core
/// predicate, or by multiset divisibility for multiset constructions) —
/// never inferred from the condition alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// Which construction this report describes.
    pub theorem_id: TheoremId,
    /// Whether the construction's side condition held.
    pub condition_met: bool,
    /// Human-readable account of the condition, including the witnessing
    /// parameter when one exists.
    pub condition_detail: String,
    /// The constructed object.
    pub constructed: Constructed,
    /// Re-verified completeness of the construction.
    pub constructed_complete: bool,
}

/// Elementwise multiple of a set: `{q·x : x ∈ a}`.
///
/// Errors with [`Error::ZeroScalar`] for `q = 0` (which would collapse the
/// set) and [`Error::Overflow`] when a product leaves the 64-bit range.
pub fn scale(q: i64, a: &IntSet) -> Result<IntSet, Error> {
    if q == 0 {
        return Err(Error::ZeroScalar);
    }
    let mut scaled = a
        .iter()
        .map(|x| {
            x.checked_mul(q)
                .ok_or(Error::Overflow("scaled element exceeds the 64-bit range"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if q < 0 {
        scaled.reverse();
    }
    Ok(IntSet::from_ascending(scaled))
}

/// Translate of a set: `{x + s : x ∈ a}`.
pub fn translate(a: &IntSet, s: i64) -> Result<IntSet, Error> {
    let shifted = a
        .iter()
        .map(|x| {
            x.checked_add(s)
                .ok_or(Error::Overflow("translated element exceeds the 64-bit range"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntSet::from_ascending(shifted))
}

/// Deduplicated set of all pairwise products `{x·y : x ∈ a, y ∈ b}`.
pub fn prodset(a: &IntSet, b: &IntSet) -> Result<IntSet, Error> {
    let mut products = BTreeSet::new();
    for x in a.iter() {
        for y in b.iter() {
            products.insert(
                x.checked_mul(y)
                    .ok_or(Error::Overflow("pairwise product exceeds the 64-bit range"))?,
            );
        }
    }
    Ok(IntSet::from_ascending(products.into_iter().collect()))
}

/// Deduplicated two-fold sumset `{x + y : x, y ∈ a, x ≤ y}` (doubles
/// included).
pub fn sumset2(a: &IntSet) -> Result<IntSet, Error> {
    let elements = a.elements();
    let mut sums = BTreeSet::new();
    for (i, &x) in elements.iter().enumerate() {
        for &y in &elements[i..] {
            sums.insert(
                x.checked_add(y)
                    .ok_or(Error::Overflow("pairwise sum exceeds the 64-bit range"))?,
            );
        }
    }
    Ok(IntSet::from_ascending(sums.into_iter().collect()))
}

fn require_complete(a: &IntSet) -> Result<(), Error> {
    if is_complete(a)? {
        Ok(())
    } else {
        Err(Error::NotComplete(a.clone()))
    }
}

fn require_disjoint(a: &IntSet, b: &IntSet) -> Result<(), Error> {
    match a.common_element(b) {
        Some(shared) => Err(Error::NotDisjoint(shared)),
        None => Ok(()),
    }
}

/// `base^exp mod m` by square-and-multiply; `m` may take any nonzero value.
fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = u128::from(m);
    let mut acc = 1u128 % m;
    let mut b = u128::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Checks the product construction for two complete sets under multiset
/// semantics: all `|a|·|b|` pairwise products with multiplicity.
///
/// The multiset product is an integer multiple of the multiset total
/// whenever both inputs are complete with nonzero sums, while the
/// deduplicated prodset may fail the predicate — the report carries both
/// verdicts so the gap is visible.
///
/// Errors: [`Error::NotComplete`] if an input fails the predicate,
/// [`Error::ZeroSum`] if either input sums to zero (the construction's
/// witness divides by the sums).
pub fn check_prodset_theorem(a: &IntSet, b: &IntSet) -> Result<TheoremReport, Error> {
    require_complete(a)?;
    require_complete(b)?;
    let sum_a = a.sum()?;
    let sum_b = b.sum()?;
    if sum_a == 0 || sum_b == 0 {
        return Err(Error::ZeroSum);
    }
    let count = a.len() as u64 * b.len() as u64;
    let total = sum_a
        .checked_mul(sum_b)
        .ok_or(Error::Overflow("multiset total exceeds the 64-bit range"))?;
    let modulus = total.unsigned_abs();
    // Π over all pairs x·y = (Πa)^|b| · (Πb)^|a|.
    let residue = u128::from(pow_mod(a.product_mod(modulus), b.len() as u64, modulus))
        * u128::from(pow_mod(b.product_mod(modulus), a.len() as u64, modulus))
        % u128::from(modulus);
    let aggregate = MultisetAggregate {
        count,
        total,
        product_residue: Some(residue as u64),
        product_is_zero: a.contains(0) || b.contains(0),
    };
    let dedup = prodset(a, b)?;
    let dedup_complete = is_complete(&dedup)?;
    let divisible = aggregate.divisible();
    Ok(TheoremReport {
        theorem_id: TheoremId::Prodset,
        condition_met: true,
        condition_detail: format!(
            "{count} pairwise products with multiplicity; multiset total {total}, product residue {} (mod {modulus})",
            residue
        ),
        constructed: Constructed::Multiset {
            aggregate,
            dedup,
            dedup_complete,
        },
        constructed_complete: divisible,
    })
}

/// Checks the union construction for two disjoint complete sets: a single
/// integer `t` must satisfy `x·y = t·(x + y)` for every pair
/// `(x, y) ∈ a × b`.
///
/// `t` is solved from the first pair and verified against all others; a
/// fractional or inconsistent value means the condition fails, in which
/// case no conclusion follows — the union is still constructed and its
/// actual status reported.
///
/// Errors: [`Error::NotComplete`], [`Error::NotDisjoint`].
pub fn check_union_t_condition(a: &IntSet, b: &IntSet) -> Result<TheoremReport, Error> {
    require_complete(a)?;
    require_complete(b)?;
    require_disjoint(a, b)?;
    let mut t: Option<i128> = None;
    let mut failure: Option<String> = None;
    'scan: for x in a.iter() {
        for y in b.iter() {
            let pair_sum = i128::from(x) + i128::from(y);
            let pair_product = i128::from(x) * i128::from(y);
            if pair_sum == 0 {
                // x·y = t·0 has no solution unless the product is zero,
                // which two distinct nonzero-summing elements cannot give.
                failure = Some(format!(
                    "pair ({x}, {y}) sums to 0 with product {pair_product}; no t exists"
                ));
                break 'scan;
            }
            if pair_product % pair_sum != 0 {
                failure = Some(format!(
                    "pair ({x}, {y}) forces t = {pair_product}/{pair_sum}, not an integer"
                ));
                break 'scan;
            }
            let candidate = pair_product / pair_sum;
            match t {
                None => t = Some(candidate),
                Some(previous) if previous != candidate => {
                    failure = Some(format!(
                        "pair ({x}, {y}) forces t = {candidate}, conflicting with t = {previous}"
                    ));
                    break 'scan;
                }
                Some(_) => {}
            }
        }
    }
    let union = a.union_disjoint(b);
    let union_complete = is_complete(&union)?;
    let (condition_met, condition_detail) = match failure {
        None => {
            let t = t.expect("at least one pair was scanned");
            (true, format!("t = {t} satisfies x·y = t·(x + y) for all pairs"))
        }
        Some(reason) => (false, reason),
    };
    Ok(TheoremReport {
        theorem_id: TheoremId::UnionT,
        condition_met,
        condition_detail,
        constructed: Constructed::Set(union),
        constructed_complete: union_complete,
    })
}

/// Augments a complete set with a disjoint set summing to zero and
/// re-verifies that the union is complete.
///
/// Errors: [`Error::NotComplete`], [`Error::NotDisjoint`],
/// [`Error::NonZeroSum`].
pub fn augment_zero_sum(a: &IntSet, h: &IntSet) -> Result<TheoremReport, Error> {
    require_complete(a)?;
    require_disjoint(a, h)?;
    let h_sum = h.sum()?;
    if h_sum != 0 {
        return Err(Error::NonZeroSum(h_sum));
    }
    let union = a.union_disjoint(h);
    let union_complete = is_complete(&union)?;
    Ok(TheoremReport {
        theorem_id: TheoremId::ZeroSumAugment,
        condition_met: true,
        condition_detail: format!("augmenting set {h} sums to 0 and is disjoint from {a}"),
        constructed: Constructed::Set(union),
        constructed_complete: union_complete,
    })
}

fn scaled_copy_report(theorem_id: TheoremId, q: i64, a: &IntSet) -> Result<TheoremReport, Error> {
    require_complete(a)?;
    let constructed = scale(q, a)?;
    let constructed_complete = is_complete(&constructed)?;
    Ok(TheoremReport {
        theorem_id,
        condition_met: true,
        condition_detail: format!("constructed {{{q}·x : x ∈ {a}}}"),
        constructed: Constructed::Set(constructed),
        constructed_complete,
    })
}

/// Checks the scaled-difference construction: every element of the new set
/// is a fixed multiple `t·x` of an element of the complete input.
///
/// Errors: [`Error::NotComplete`], [`Error::ZeroScalar`].
pub fn check_scaled_difference(a: &IntSet, t: i64) -> Result<TheoremReport, Error> {
    scaled_copy_report(TheoremId::ScaledDifference, t, a)
}

/// Checks the scalar-multiple construction `q·A` for a complete set.
///
/// Errors: [`Error::NotComplete`], [`Error::ZeroScalar`].
pub fn check_scalar_theorem(q: i64, a: &IntSet) -> Result<TheoremReport, Error> {
    scaled_copy_report(TheoremId::Scalar, q, a)
}

/// Checks the two-fold sumset construction for a complete set of size `n`:
/// the condition holds when all `n(n+1)/2` pairwise sums are distinct AND
/// some pair `i ≠ j` has `(n+1) | (aᵢ + aⱼ)`.
///
/// The sumset is constructed and re-verified whether or not the condition
/// holds (the construction can be complete even when the condition fails).
///
/// Errors: [`Error::NotComplete`].
pub fn check_sumset2_theorem(a: &IntSet) -> Result<TheoremReport, Error> {
    require_complete(a)?;
    let n = a.len();
    let two_fold = sumset2(a)?;
    let expected = n * (n + 1) / 2;
    let all_distinct = two_fold.len() == expected;
    let divisor = n as i128 + 1;
    let elements = a.elements();
    let mut divisible_pair: Option<(i64, i64)> = None;
    'outer: for (i, &x) in elements.iter().enumerate() {
        for &y in &elements[i + 1..] {
            if (i128::from(x) + i128::from(y)).rem_euclid(divisor) == 0 {
                divisible_pair = Some((x, y));
                break 'outer;
            }
        }
    }
    let condition_met = all_distinct && divisible_pair.is_some();
    let condition_detail = match (all_distinct, divisible_pair) {
        (true, Some((x, y))) => format!(
            "|2A| = {expected} = n(n+1)/2 and (n+1) = {divisor} divides {x} + {y}"
        ),
        (false, _) => format!(
            "pairwise sums collide: |2A| = {} < n(n+1)/2 = {expected}",
            two_fold.len()
        ),
        (true, None) => format!("no pair x ≠ y has (n+1) = {divisor} dividing x + y"),
    };
    let constructed_complete = is_complete(&two_fold)?;
    Ok(TheoremReport {
        theorem_id: TheoremId::Sumset2,
        condition_met,
        condition_detail,
        constructed: Constructed::Set(two_fold),
        constructed_complete,
    })
}

/// An arithmetic progression `{d, 2d, …, nd}` through multiples of a single
/// nonzero value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HomogeneousAP {
    /// The common value; may be negative.
    pub d: i64,
    /// The length.
    pub n: u32,
}

impl HomogeneousAP {
    /// Builds the concrete set `{d, 2d, …, nd}`.
    pub fn materialize(self) -> Result<IntSet, Error> {
        make_homogeneous_ap(self.d, self.n)
    }
}

/// Builds `{d, 2d, …, nd}`.
///
/// Errors: [`Error::ZeroScalar`] for `d = 0`, [`Error::EmptyInput`] for
/// `n = 0`, [`Error::Overflow`] when a multiple leaves the 64-bit range.
pub fn make_homogeneous_ap(d: i64, n: u32) -> Result<IntSet, Error> {
    if d == 0 {
        return Err(Error::ZeroScalar);
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut multiples = (1..=i64::from(n))
        .map(|k| {
            d.checked_mul(k)
                .ok_or(Error::Overflow("progression element exceeds the 64-bit range"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if d < 0 {
        multiples.reverse();
    }
    Ok(IntSet::from_ascending(multiples))
}

/// Recognizes whether a set is exactly `{d, 2d, …, nd}` for some nonzero
/// `d`, returning the parameters if so.
///
/// For negative `d` the elements appear in descending multiple order; the
/// single-element set `{x}` (x ≠ 0) is the progression with `d = x, n = 1`.
pub fn recognize_homogeneous_ap(a: &IntSet) -> Option<HomogeneousAP> {
    let elements = a.elements();
    let n = elements.len();
    // d·1 has the smallest magnitude: first element when d > 0 (all
    // elements positive), last when d < 0 (all negative). A set containing
    // 0 or mixing signs is never of this shape.
    let d = if elements[0] > 0 {
        elements[0]
    } else if elements[n - 1] < 0 {
        elements[n - 1]
    } else {
        return None;
    };
    for k in 1..=n {
        let expected = d.checked_mul(k as i64)?;
        let actual = if d > 0 {
            elements[k - 1]
        } else {
            elements[n - k]
        };
        if actual != expected {
            return None;
        }
    }
    Some(HomogeneousAP { d, n: n as u32 })
}
