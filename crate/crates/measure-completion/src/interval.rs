//! Half-open rational intervals in `[0,1)` and canonical finite unions.
//!
//! An [`IntervalSet`] is the concrete carrier for the ground algebra on the
//! unit interval: parts are pairwise disjoint, sorted, and non-adjacent, so
//! the canonical form of a set is unique and structural equality coincides
//! with set equality. All operations are exact; nothing is ever rounded.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A half-open interval `[lo, hi)` with `0 <= lo < hi <= 1`.
///
/// Empty and degenerate intervals are unrepresentable: construction fails
/// rather than clamping.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo.is_negative() || lo >= hi || hi > Rational::one() {
            return Err(Error::MalformedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    /// Skips bound validation; for builders that produce ordered endpoints
    /// by construction.
    pub(crate) fn new_unchecked(lo: Rational, hi: Rational) -> Self {
        Interval { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A canonical finite union of half-open rational intervals in `[0,1)`.
///
/// Parts are shared behind an `Arc`, so clones are cheap and sets can be
/// captured by the completion layer's sequence closures without copying.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    parts: Arc<Vec<Interval>>,
}

impl IntervalSet {
    fn from_parts(parts: Vec<Interval>) -> Self {
        IntervalSet {
            parts: Arc::new(parts),
        }
    }

    pub fn empty() -> Self {
        IntervalSet::from_parts(Vec::new())
    }

    /// The whole space `[0,1)`.
    pub fn full() -> Self {
        IntervalSet::from_parts(vec![Interval {
            lo: Rational::zero(),
            hi: Rational::one(),
        }])
    }

    /// Canonicalizes an arbitrary list of valid intervals: sorts by lower
    /// endpoint and merges overlapping or touching parts. Idempotent and
    /// insensitive to input order.
    pub fn normalize(mut raw: Vec<Interval>) -> Self {
        raw.sort_by(|a, b| a.lo.cmp(&b.lo));
        IntervalSet::from_parts(sweep_sorted(raw))
    }

    /// Validates raw endpoint pairs and canonicalizes.
    pub fn from_endpoints(pairs: Vec<(Rational, Rational)>) -> Result<Self> {
        let raw = pairs
            .into_iter()
            .map(|(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalize(raw))
    }

    /// Single-interval set.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        Ok(IntervalSet::from_parts(vec![Interval::new(lo, hi)?]))
    }

    /// Wraps parts already known to be sorted, disjoint, and non-adjacent;
    /// used by the stage builders, which produce canonical lists directly.
    pub(crate) fn from_canonical_parts(parts: Vec<Interval>) -> Self {
        IntervalSet::from_parts(parts)
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total length of the parts, exactly. Lengths are bucketed by
    /// denominator and each bucket is summed as plain integers, so
    /// million-part sums reduce only once per distinct denominator.
    pub fn measure(&self) -> Rational {
        let mut buckets: BTreeMap<BigInt, BigInt> = BTreeMap::new();
        for p in self.parts.iter() {
            let (n, d) = if p.lo.denom() == p.hi.denom() {
                (p.hi.numer() - p.lo.numer(), p.lo.denom().clone())
            } else {
                (
                    p.hi.numer() * p.lo.denom() - p.lo.numer() * p.hi.denom(),
                    p.lo.denom() * p.hi.denom(),
                )
            };
            match buckets.get_mut(&d) {
                Some(acc) => *acc += n,
                None => {
                    buckets.insert(d, n);
                }
            }
        }
        let mut total = Rational::zero();
        for (d, n) in buckets {
            total = total + Rational::new(n, d);
        }
        total
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut merged = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i].lo <= other.parts[j].lo {
                merged.push(self.parts[i].clone());
                i += 1;
            } else {
                merged.push(other.parts[j].clone());
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        IntervalSet::from_parts(sweep_sorted(merged))
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            let a = &self.parts[i];
            let b = &other.parts[j];
            let lo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
            let hi = if a.hi <= b.hi { a.hi.clone() } else { b.hi.clone() };
            if lo < hi {
                out.push(Interval { lo, hi });
            }
            if a.hi <= b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet::from_parts(out)
    }

    /// Complement within `[0,1)`; exact and involutive.
    pub fn complement(&self) -> IntervalSet {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut cursor = Rational::zero();
        for p in self.parts.iter() {
            if cursor < p.lo {
                out.push(Interval {
                    lo: cursor,
                    hi: p.lo.clone(),
                });
            }
            cursor = p.hi.clone();
        }
        if cursor < Rational::one() {
            out.push(Interval {
                lo: cursor,
                hi: Rational::one(),
            });
        }
        IntervalSet::from_parts(out)
    }

    /// Symmetric difference by one merged sweep over the boundary points:
    /// the indicator of `A △ B` flips exactly at the boundaries of `A` and
    /// `B` that do not coincide, so merging the two sorted boundary lists
    /// and cancelling equal points yields the canonical parts directly.
    /// Equals `(A ∩ Bᶜ) ∪ (B ∩ Aᶜ)`.
    pub fn symm_diff(&self, other: &IntervalSet) -> IntervalSet {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let a: Vec<&Rational> = self.parts.iter().flat_map(|p| [&p.lo, &p.hi]).collect();
        let b: Vec<&Rational> = other.parts.iter().flat_map(|p| [&p.lo, &p.hi]).collect();
        let mut survivors: Vec<Rational> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(b[j]) {
                std::cmp::Ordering::Less => {
                    survivors.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    survivors.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        survivors.extend(a[i..].iter().map(|r| (*r).clone()));
        survivors.extend(b[j..].iter().map(|r| (*r).clone()));
        debug_assert!(survivors.len().is_multiple_of(2));
        let mut parts = Vec::with_capacity(survivors.len() / 2);
        let mut bounds = survivors.into_iter();
        while let (Some(lo), Some(hi)) = (bounds.next(), bounds.next()) {
            parts.push(Interval { lo, hi });
        }
        IntervalSet::from_parts(parts)
    }

    /// The pseudometric `d(A,B) = measure(A symm_diff B)`.
    pub fn dist(&self, other: &IntervalSet) -> Rational {
        if self.is_empty() {
            return other.measure();
        }
        if other.is_empty() {
            return self.measure();
        }
        self.symm_diff(other).measure()
    }

    /// Leftmost subset of exactly the given measure. Requires
    /// `0 <= target <= measure(self)`.
    pub(crate) fn prefix(&self, target: &Rational) -> IntervalSet {
        debug_assert!(!target.is_negative());
        let mut out = Vec::new();
        let mut acc = Rational::zero();
        for p in self.parts.iter() {
            if &acc >= target {
                break;
            }
            let len = p.length();
            let room = target - &acc;
            if len <= room {
                acc = acc + len;
                out.push(p.clone());
            } else {
                out.push(Interval {
                    lo: p.lo.clone(),
                    hi: &p.lo + &room,
                });
                acc = target.clone();
                break;
            }
        }
        debug_assert!(&acc == target, "prefix target exceeds set measure");
        IntervalSet::from_parts(out)
    }
}

/// Merges a lo-sorted interval list into canonical form.
fn sweep_sorted(sorted: Vec<Interval>) -> Vec<Interval> {
    let mut out: Vec<Interval> = Vec::with_capacity(sorted.len());
    for next in sorted {
        match out.last_mut() {
            Some(cur) if next.lo <= cur.hi => {
                if next.hi > cur.hi {
                    cur.hi = next.hi;
                }
            }
            _ => out.push(next),
        }
    }
    out
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
