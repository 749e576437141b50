//! Closed-form Cauchy sequences on the unit interval.
//!
//! These are the stock demonstration elements: the fat Cantor set (positive
//! limit measure, so the completion point is genuinely new), the
//! middle-thirds Cantor stages (a null class), and the dyadic block
//! sequence used to exercise countable joins.
//!
//! Stage `n` of either Cantor construction has `2^n` parts, so material
//! stages are only built up to a caller-chosen `depth_cap`. Beyond the cap
//! a stage is the leftmost subset of the deepest materialized stage with
//! exactly the closed-form measure. The substituted stages keep the same
//! measures, the same pairwise distances along the tail, and the same
//! limit class, so every observable value matches the untruncated
//! construction while staying computable.

use std::sync::Mutex;

use crate::algebra::UnitIntervalModel;
use crate::completion::{CauchyCheck, CompletionElement};
use crate::error::Result;
use crate::interval::{Interval, IntervalSet};
use crate::rational::Rational;
use crate::sigma::{ElementSequence, JoinCertificate};

/// Largest stage either Cantor builder will materialize (`2^26` parts).
pub const MAX_STAGE_DEPTH: u32 = 26;

fn exponent(n: u64) -> i32 {
    i32::try_from(n).expect("stage index does not fit an exponent")
}

/// Stage `n` of the fat (Smith–Volterra) Cantor construction: stage `k`
/// removes the open middle of length `4^-k` from each of the `2^(k-1)`
/// intervals of the previous stage.
pub fn svc_stage(n: u32) -> IntervalSet {
    assert!(n <= MAX_STAGE_DEPTH, "stage {n} would need 2^{n} intervals");
    // Endpoints over denominator 2^(2k+1) stay integral at every stage.
    let mut parts: Vec<(u128, u128)> = vec![(0, 2)];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(parts.len() * 2);
        for &(a, b) in &parts {
            let mid = 2 * (a + b);
            next.push((4 * a, mid - 1));
            next.push((mid + 1, 4 * b));
        }
        parts = next;
    }
    let log2_den = 2 * n + 1;
    IntervalSet::from_canonical_parts(
        parts
            .into_iter()
            .map(|(p, q)| {
                Interval::new_unchecked(
                    Rational::from_dyadic(p, log2_den),
                    Rational::from_dyadic(q, log2_den),
                )
            })
            .collect(),
    )
}

/// Exact measure of fat Cantor stage `n`: `1/2 + 2^-(n+1)`.
pub fn svc_stage_measure(n: u64) -> Rational {
    Rational::ratio(1, 2) + Rational::pow2(-(exponent(n) + 1))
}

/// Smallest `n >= 1` with `2^-(n+1) <= eps`.
pub fn svc_modulus(eps: &Rational) -> u64 {
    assert!(eps.is_positive());
    let mut n = 1u64;
    let mut tail = Rational::ratio(1, 4);
    while &tail > eps {
        n += 1;
        tail = tail.half();
    }
    n
}

/// Remembers the most recent stage so repeated evaluations at one index
/// (common inside distance probes) do not rebuild it. Transparent: the
/// cached value is the same canonical set a fresh build would produce.
fn memoized_stages(
    build: impl Fn(u64) -> IntervalSet + Send + Sync + 'static,
) -> impl Fn(u64) -> IntervalSet + Send + Sync + 'static {
    let cache: Mutex<Option<(u64, IntervalSet)>> = Mutex::new(None);
    move |n: u64| {
        if let Some((k, stage)) = cache.lock().expect("stage cache").as_ref() {
            if *k == n {
                return stage.clone();
            }
        }
        let fresh = build(n);
        *cache.lock().expect("stage cache") = Some((n, fresh.clone()));
        fresh
    }
}

/// Builds the fat Cantor element, running the full Cauchy spot-check.
pub fn svc_element_checked(depth_cap: u32) -> Result<CompletionElement<UnitIntervalModel>> {
    assert!((1..=MAX_STAGE_DEPTH).contains(&depth_cap));
    let term = memoized_stages(move |n: u64| {
        if n <= u64::from(depth_cap) {
            svc_stage(n as u32)
        } else {
            svc_stage(depth_cap).prefix(&svc_stage_measure(n))
        }
    });
    CompletionElement::from_stages(UnitIntervalModel, term, svc_modulus, &CauchyCheck::default())
}

/// The fat Cantor point of the completion, with limit measure `1/2`.
///
/// `depth_cap` bounds the materialized stages; see the module notes for how
/// deeper indices are represented.
pub fn svc_element(depth_cap: u32) -> CompletionElement<UnitIntervalModel> {
    svc_element_checked(depth_cap).expect("fat Cantor stages satisfy their modulus")
}

/// Stage `n` of the middle-thirds Cantor construction.
pub fn cantor_stage(n: u32) -> IntervalSet {
    assert!(n <= MAX_STAGE_DEPTH, "stage {n} would need 2^{n} intervals");
    let mut parts: Vec<(u128, u128)> = vec![(0, 1)];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(parts.len() * 2);
        for &(a, _) in &parts {
            next.push((3 * a, 3 * a + 1));
            next.push((3 * a + 2, 3 * a + 3));
        }
        parts = next;
    }
    IntervalSet::from_canonical_parts(
        parts
            .into_iter()
            .map(|(p, q)| {
                Interval::new_unchecked(Rational::from_ternary(p, n), Rational::from_ternary(q, n))
            })
            .collect(),
    )
}

/// Exact measure of middle-thirds stage `n`: `(2/3)^n`.
pub fn cantor_stage_measure(n: u64) -> Rational {
    Rational::ratio(2, 3).pow(exponent(n))
}

/// Smallest `n >= 1` with `(2/3)^n <= eps`.
pub fn cantor_modulus(eps: &Rational) -> u64 {
    assert!(eps.is_positive());
    let ratio = Rational::ratio(2, 3);
    let mut n = 1u64;
    let mut tail = ratio.clone();
    while &tail > eps {
        n += 1;
        tail = tail * &ratio;
    }
    n
}

/// Builds the middle-thirds element, running the full Cauchy spot-check.
pub fn cantor_element_checked(depth_cap: u32) -> Result<CompletionElement<UnitIntervalModel>> {
    assert!((1..=MAX_STAGE_DEPTH).contains(&depth_cap));
    let term = memoized_stages(move |n: u64| {
        if n <= u64::from(depth_cap) {
            cantor_stage(n as u32)
        } else {
            cantor_stage(depth_cap).prefix(&cantor_stage_measure(n))
        }
    });
    CompletionElement::from_stages(
        UnitIntervalModel,
        term,
        cantor_modulus,
        &CauchyCheck::default(),
    )
}

/// The middle-thirds Cantor point of the completion: a null class, equal to
/// the class of the empty set.
pub fn cantor_element(depth_cap: u32) -> CompletionElement<UnitIntervalModel> {
    cantor_element_checked(depth_cap).expect("middle-thirds stages satisfy their modulus")
}

/// The i-th dyadic block `[1 - 2^(1-i), 1 - 2^-i)`, `i >= 1`. The blocks
/// are pairwise disjoint with measures `2^-i` and exhaust `[0,1)`.
pub fn dyadic_block(i: u64) -> IntervalSet {
    assert!(i >= 1);
    let e = exponent(i);
    let lo = Rational::one() - Rational::pow2(1 - e);
    let hi = Rational::one() - Rational::pow2(-e);
    IntervalSet::interval(lo, hi).expect("dyadic blocks sit inside [0,1)")
}

/// The dyadic blocks as a sequence of embedded elements with the exact
/// geometric tail certificate `tail(N) = 2^-N`.
pub fn dyadic_sequence() -> Result<ElementSequence<UnitIntervalModel>> {
    ElementSequence::new(
        UnitIntervalModel,
        |i| CompletionElement::embed(UnitIntervalModel, dyadic_block(i)),
        JoinCertificate::from_tail_bound(|n| Rational::pow2(-exponent(n))),
    )
}

/// Same sequence under a deliberately looser (doubled) tail certificate;
/// used to confirm the countable join does not depend on the certificate.
pub fn dyadic_sequence_loose() -> Result<ElementSequence<UnitIntervalModel>> {
    ElementSequence::new(
        UnitIntervalModel,
        |i| CompletionElement::embed(UnitIntervalModel, dyadic_block(i)),
        JoinCertificate::from_tail_bound(|n| Rational::pow2(1 - exponent(n))),
    )
}
