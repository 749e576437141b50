//! Countable joins on the completion, made computable by certificates.
//!
//! The supremum of an increasing sequence of measures exists classically
//! but cannot be computed from Cauchy moduli alone, so a countable join
//! takes an explicit [`JoinCertificate`]: a modulus for the convergence of
//! the partial-join measures. Given the certificate, the join is realized
//! by finite stages `Y_L` (a union of finitely many item stages chosen so
//! the error is below `1/L`), which again form a Cauchy sequence with the
//! explicit modulus `L = ceil(2/eps)`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::algebra::MeasureAlgebra;
use crate::completion::{ApproxValue, CompletionElement};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Slack multiplier for the countable distributivity check: the reported
/// distance between the two sides must stay below `CHA_SLACK * eps`, which
/// covers the approximation radii of both countable joins and the meet.
pub const CHA_SLACK: i64 = 4;

/// How many leading item pairs the disjointness precondition samples.
pub const DISJOINT_SAMPLE_PAIRS: usize = 50;

type TailFn = Arc<dyn Fn(&Rational) -> u64 + Send + Sync>;

/// A modulus of convergence for the measures of partial joins: for all
/// `m >= N = tail_modulus(eps)`, `mu(V_m) - mu(V_N) <= eps`, where `V_k`
/// is the join of the first `k` items.
#[derive(Clone)]
pub struct JoinCertificate {
    tail_modulus: TailFn,
}

impl JoinCertificate {
    pub fn new(tail_modulus: impl Fn(&Rational) -> u64 + Send + Sync + 'static) -> Self {
        JoinCertificate {
            tail_modulus: Arc::new(tail_modulus),
        }
    }

    /// Certificate for an eventually-constant sequence of partial joins:
    /// nothing is added after `index`.
    pub fn stabilized(index: u64) -> Self {
        let index = index.max(1);
        Self::new(move |_| index)
    }

    /// Certificate from a closed-form bound `tail(N)` on the mass the
    /// partial joins can still gain after the first `N` items. The bound
    /// must eventually fall below every positive tolerance.
    pub fn from_tail_bound(tail: impl Fn(u64) -> Rational + Send + Sync + 'static) -> Self {
        Self::new(move |eps: &Rational| {
            let mut n = 1u64;
            while &tail(n) > eps {
                n += 1;
                assert!(n < 1 << 40, "certificate tail bound never reaches {eps}");
            }
            n
        })
    }

    pub fn tail_modulus(&self, eps: &Rational) -> u64 {
        assert!(eps.is_positive());
        (self.tail_modulus)(eps).max(1)
    }
}

impl std::fmt::Debug for JoinCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "JoinCertificate(..)")
    }
}

/// A sequence of completion elements over one model, paired with the
/// certificate that makes its countable join computable.
pub struct ElementSequence<A: MeasureAlgebra> {
    alg: A,
    item: Arc<dyn Fn(u64) -> CompletionElement<A> + Send + Sync>,
    certificate: JoinCertificate,
}

impl<A: MeasureAlgebra> Clone for ElementSequence<A> {
    fn clone(&self) -> Self {
        ElementSequence {
            alg: self.alg.clone(),
            item: Arc::clone(&self.item),
            certificate: self.certificate.clone(),
        }
    }
}

impl<A: MeasureAlgebra> ElementSequence<A> {
    /// Wraps an item function (1-indexed) and a certificate. The first few
    /// items are checked against the sequence's model.
    pub fn new(
        alg: A,
        item: impl Fn(u64) -> CompletionElement<A> + Send + Sync + 'static,
        certificate: JoinCertificate,
    ) -> Result<Self> {
        let seq = ElementSequence {
            alg,
            item: Arc::new(item),
            certificate,
        };
        for i in 1..=3 {
            if !seq.item(i).algebra().same_model(&seq.alg) {
                return Err(Error::ModelMismatch);
            }
        }
        Ok(seq)
    }

    pub fn item(&self, i: u64) -> CompletionElement<A> {
        assert!(i >= 1, "sequence items are 1-indexed");
        (self.item)(i)
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn certificate(&self) -> &JoinCertificate {
        &self.certificate
    }

    /// The same items under a different certificate.
    pub fn with_certificate(&self, certificate: JoinCertificate) -> Self {
        ElementSequence {
            alg: self.alg.clone(),
            item: Arc::clone(&self.item),
            certificate,
        }
    }
}

/// Left fold of the binary join over items `1..=k`.
pub fn partial_join<A: MeasureAlgebra>(seq: &ElementSequence<A>, k: u64) -> CompletionElement<A> {
    assert!(k >= 1, "partial joins start at one item");
    let mut acc = seq.item(1);
    for i in 2..=k {
        acc = acc.join(&seq.item(i)).expect("sequence items share one model");
    }
    acc
}

fn stage_tolerance(l: u64) -> Rational {
    Rational::new(1, BigInt::from(2u8) * BigInt::from(l))
}

/// Stage index at which the first `N_L` items are evaluated for `Y_L`.
fn raw_stage_index<A: MeasureAlgebra>(seq: &ElementSequence<A>, l: u64) -> u64 {
    let eps_l = stage_tolerance(l);
    let n_l = seq.certificate().tail_modulus(&eps_l);
    partial_join(seq, n_l).modulus(&eps_l)
}

/// As `raw_stage_index`, additionally forced non-decreasing in `L` by
/// maximizing over the power-of-two grid below `L`. With antitone item
/// moduli the raw index is already monotone and the forcing changes
/// nothing; it hardens the Cauchy bound `d(Y_L, Y_M) <= 2/min(L,M)`
/// against a supplied modulus that dips.
fn forced_stage_index<A: MeasureAlgebra>(seq: &ElementSequence<A>, l: u64) -> u64 {
    let mut k = raw_stage_index(seq, l);
    let mut p = 1u64;
    while p < l {
        k = k.max(raw_stage_index(seq, p));
        p *= 2;
    }
    k
}

fn y_stage<A: MeasureAlgebra>(seq: &ElementSequence<A>, l: u64) -> A::Set {
    let eps_l = stage_tolerance(l);
    let n_l = seq.certificate().tail_modulus(&eps_l);
    let k_l = forced_stage_index(seq, l);
    let alg = seq.algebra();
    let mut acc = alg.bottom();
    for i in 1..=n_l {
        acc = alg.union(&acc, &seq.item(i).term(k_l));
    }
    acc
}

/// Validates the certificate by sampling: for a few tolerances, partial
/// joins past the certified index must not gain more mass than certified
/// (up to the probes' own radii).
fn validate_certificate<A: MeasureAlgebra>(seq: &ElementSequence<A>) -> Result<()> {
    for eps in [
        Rational::ratio(1, 4),
        Rational::ratio(1, 16),
        Rational::ratio(1, 64),
    ] {
        let n = seq.certificate().tail_modulus(&eps);
        let probe = eps.half().half().half();
        let base = partial_join(seq, n).mubar(&probe).value;
        let allowed = &eps + &probe + &probe;
        for gap in [1u64, 2, 4, 8] {
            let m = n + gap;
            let grown = partial_join(seq, m).mubar(&probe).value;
            if &grown - &base > allowed {
                return Err(Error::BadCertificate {
                    n,
                    m,
                    observed: (grown - &base).to_string(),
                    bound: eps.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// The countable join of the sequence.
///
/// The result has `term(L) = Y_L` and modulus `eps -> ceil(2/eps)`, where
/// `Y_L` unions the first `N_L = tail_modulus(1/(2L))` items at the stage
/// index `K_L` certified by the partial join's own modulus at `1/(2L)`.
/// It is the least upper bound of the partial joins up to null classes:
/// every partial join sits below it, and the residual mass above the n-th
/// partial join tends to zero.
pub fn countable_join<A: MeasureAlgebra>(
    seq: &ElementSequence<A>,
) -> Result<CompletionElement<A>> {
    validate_certificate(seq)?;
    let stage_seq = seq.clone();
    let term = move |l: u64| y_stage(&stage_seq, l);
    let modulus = |eps: &Rational| (Rational::from_int(2) / eps).ceil_u64().max(1);
    Ok(CompletionElement::from_stages(
        seq.algebra().clone(),
        term,
        modulus,
        &crate::completion::CauchyCheck::none(),
    )
    .expect("spot-check disabled"))
}

/// Sums the limit measures of pairwise disjoint items up to the certified
/// tail: `sum_{i<=N} mubar(item(i))` with `N = tail_modulus(eps/2)`.
///
/// Disjointness is sampled on the first [`DISJOINT_SAMPLE_PAIRS`] pairs.
/// The returned radius combines the certified tail `eps/2` with the
/// per-term probe radii, and bounds the distance to the measure of the
/// countable join.
pub fn sum_disjoint_measures<A: MeasureAlgebra>(
    seq: &ElementSequence<A>,
    eps: &Rational,
) -> Result<ApproxValue> {
    assert!(eps.is_positive());
    let mut sampled = 0usize;
    'outer: for m in 2u64.. {
        for i in 1..m {
            if sampled >= DISJOINT_SAMPLE_PAIRS {
                break 'outer;
            }
            if !seq.item(i).is_disjoint(&seq.item(m), eps)? {
                return Err(Error::NotDisjoint { i, j: m });
            }
            sampled += 1;
        }
    }

    let half = eps.half();
    let n = seq.certificate().tail_modulus(&half);
    let per_term = &half / &Rational::new(n as i64, 1);
    let mut value = Rational::zero();
    let mut radius = half.clone();
    for i in 1..=n {
        let mu = seq.item(i).mubar(&per_term);
        value = value + mu.value;
        radius = radius + mu.radius;
    }
    Ok(ApproxValue { value, radius })
}

/// Outcome of the countable distributivity comparison
/// `join_i (x_i meet y)` versus `(join_i x_i) meet y`.
#[derive(Clone, Debug)]
pub struct DistributivityReport {
    /// Limit measure of the join of the meets.
    pub joined_meets: ApproxValue,
    /// Limit measure of the meet with the countable join.
    pub meet_of_join: ApproxValue,
    /// Approximate distance between the two sides.
    pub distance: ApproxValue,
    /// The tolerance budget `CHA_SLACK * eps` the distance must meet.
    pub slack: Rational,
    pub pass: bool,
}

/// Compares the two sides of countable distributivity at tolerance `eps`.
///
/// The meet sequence inherits the original certificate: meeting with `y`
/// only shrinks what a partial join can still gain.
pub fn check_cha_distributivity<A: MeasureAlgebra>(
    seq: &ElementSequence<A>,
    y: &CompletionElement<A>,
    eps: &Rational,
) -> Result<DistributivityReport> {
    assert!(eps.is_positive());
    if !seq.algebra().same_model(y.algebra()) {
        return Err(Error::ModelMismatch);
    }
    let items = seq.clone();
    let meet_with_y = y.clone();
    let meet_seq = ElementSequence::new(
        seq.algebra().clone(),
        move |i| {
            items
                .item(i)
                .meet(&meet_with_y)
                .expect("sequence items share the model of y")
        },
        seq.certificate().clone(),
    )?;

    let lhs = countable_join(&meet_seq)?;
    let rhs = countable_join(seq)?.meet(y)?;
    let distance = lhs.dbar(&rhs, eps)?;
    let slack = Rational::from_int(CHA_SLACK) * eps;
    let pass = distance.value <= slack;
    Ok(DistributivityReport {
        joined_meets: lhs.mubar(eps),
        meet_of_join: rhs.mubar(eps),
        distance,
        slack,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UnitIntervalModel;
    use crate::constructions::{dyadic_sequence, dyadic_sequence_loose};
    use crate::finite::FiniteModel;
    use crate::interval::IntervalSet;

    fn eps(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn embed_interval(lo: (i64, i64), hi: (i64, i64)) -> CompletionElement<UnitIntervalModel> {
        CompletionElement::embed(
            UnitIntervalModel,
            IntervalSet::interval(Rational::ratio(lo.0, lo.1), Rational::ratio(hi.0, hi.1))
                .unwrap(),
        )
    }

    #[test]
    fn partial_joins_of_dyadic_blocks() {
        let seq = dyadic_sequence().unwrap();
        let e = eps(1, 1000);
        let first = partial_join(&seq, 1);
        let d = first
            .dbar(&embed_interval((0, 1), (1, 2)), &e)
            .unwrap();
        assert_eq!(d.value, Rational::zero());
        for k in [1u64, 3, 7, 20] {
            let mu = partial_join(&seq, k).mubar(&e);
            let expect = Rational::one() - Rational::pow2(-(k as i32));
            assert_eq!(mu.value, expect);
        }
    }

    #[test]
    fn partial_joins_grow() {
        let seq = dyadic_sequence().unwrap();
        let e = eps(1, 100);
        for k in 1..10u64 {
            assert!(partial_join(&seq, k)
                .is_subset(&partial_join(&seq, k + 1), &e)
                .unwrap());
        }
    }

    #[test]
    fn countable_join_of_dyadic_blocks_fills_the_interval() {
        let seq = dyadic_sequence().unwrap();
        let join = countable_join(&seq).unwrap();
        let e = eps(1, 10000);
        let mu = join.mubar(&e);
        assert!((mu.value - Rational::one()).abs() <= e);
    }

    #[test]
    fn countable_join_of_a_constant_sequence_is_the_element() {
        let a = embed_interval((1, 4), (2, 3));
        let item = a.clone();
        let seq = ElementSequence::new(
            UnitIntervalModel,
            move |_| item.clone(),
            JoinCertificate::stabilized(1),
        )
        .unwrap();
        let join = countable_join(&seq).unwrap();
        for e in [eps(1, 10), eps(1, 1000)] {
            assert!(join.eq_at(&a, &e).unwrap());
            assert_eq!(join.dbar(&a, &e).unwrap().value, Rational::zero());
        }
    }

    #[test]
    fn countable_join_of_bottoms_is_bottom() {
        let seq = ElementSequence::new(
            UnitIntervalModel,
            |_| CompletionElement::bottom(UnitIntervalModel),
            JoinCertificate::stabilized(1),
        )
        .unwrap();
        let join = countable_join(&seq).unwrap();
        let mu = join.mubar(&eps(1, 1000));
        assert_eq!(mu.value, Rational::zero());
    }

    #[test]
    fn bad_certificates_are_rejected() {
        let seq = dyadic_sequence()
            .unwrap()
            .with_certificate(JoinCertificate::stabilized(1));
        assert!(matches!(countable_join(&seq), Err(Error::BadCertificate { .. })));
    }

    #[test]
    fn join_does_not_depend_on_the_certificate() {
        let strict = countable_join(&dyadic_sequence().unwrap()).unwrap();
        let loose = countable_join(&dyadic_sequence_loose().unwrap()).unwrap();
        for e in [eps(1, 100), eps(1, 5000)] {
            let d = strict.dbar(&loose, &e).unwrap();
            assert!(d.value <= Rational::from_int(2) * &e, "{} > 2*{e}", d.value);
        }
    }

    #[test]
    fn upper_bound_and_tightness() {
        let seq = dyadic_sequence().unwrap();
        let join = countable_join(&seq).unwrap();
        let e = eps(1, 100);
        for n in [1u64, 2, 5, 13, 40] {
            assert!(partial_join(&seq, n).is_subset(&join, &e).unwrap());
        }
        let n0 = seq.certificate().tail_modulus(&e);
        let mut last = Rational::one();
        for n in [n0, n0 + 1, n0 + 3, n0 + 8] {
            let residue = join
                .meet(&partial_join(&seq, n).compl())
                .unwrap()
                .mubar(&e);
            assert!(residue.value <= Rational::from_int(3) * &e);
            assert!(residue.value <= &last + Rational::from_int(2) * &e);
            last = residue.value;
        }
    }

    #[test]
    fn disjoint_sum_matches_the_join_measure() {
        let seq = dyadic_sequence().unwrap();
        let e = eps(1, 1000);
        let sum = sum_disjoint_measures(&seq, &e).unwrap();
        let mu = countable_join(&seq).unwrap().mubar(&e);
        let gap = (&sum.value - &mu.value).abs();
        assert!(gap <= &sum.radius + &mu.radius);
        assert!((sum.value - Rational::one()).abs() <= sum.radius);
    }

    #[test]
    fn finite_support_sum_is_exact() {
        let a = embed_interval((0, 1), (1, 4));
        let b = embed_interval((1, 2), (5, 8));
        let (ca, cb) = (a.clone(), b.clone());
        let seq = ElementSequence::new(
            UnitIntervalModel,
            move |i| match i {
                1 => ca.clone(),
                2 => cb.clone(),
                _ => CompletionElement::bottom(UnitIntervalModel),
            },
            JoinCertificate::stabilized(2),
        )
        .unwrap();
        let sum = sum_disjoint_measures(&seq, &eps(1, 100)).unwrap();
        assert_eq!(sum.value, Rational::ratio(3, 8));

        let empties = ElementSequence::new(
            UnitIntervalModel,
            |_| CompletionElement::bottom(UnitIntervalModel),
            JoinCertificate::stabilized(1),
        )
        .unwrap();
        let zero = sum_disjoint_measures(&empties, &eps(1, 100)).unwrap();
        assert_eq!(zero.value, Rational::zero());
    }

    #[test]
    fn overlapping_items_are_rejected() {
        let a = embed_interval((0, 1), (1, 2));
        let seq = ElementSequence::new(
            UnitIntervalModel,
            move |_| a.clone(),
            JoinCertificate::stabilized(1),
        )
        .unwrap();
        let out = sum_disjoint_measures(&seq, &eps(1, 100));
        assert!(matches!(out, Err(Error::NotDisjoint { .. })));
    }

    #[test]
    fn distributivity_on_dyadic_blocks() {
        let seq = dyadic_sequence().unwrap();
        let e = eps(1, 10000);

        let y = embed_interval((0, 1), (1, 2));
        let report = check_cha_distributivity(&seq, &y, &e).unwrap();
        assert!(report.pass);
        assert!((report.joined_meets.value.clone() - Rational::ratio(1, 2)).abs() <= e);
        assert!((report.meet_of_join.value.clone() - Rational::ratio(1, 2)).abs() <= e);

        let top = CompletionElement::top(UnitIntervalModel);
        let with_top = check_cha_distributivity(&seq, &top, &e).unwrap();
        assert!(with_top.pass);
        assert!(with_top.distance.value <= Rational::from_int(2) * &e);

        let bottom = CompletionElement::bottom(UnitIntervalModel);
        let with_bottom = check_cha_distributivity(&seq, &bottom, &e).unwrap();
        assert!(with_bottom.pass);
        assert_eq!(with_bottom.joined_meets.value, Rational::zero());
        assert_eq!(with_bottom.meet_of_join.value, Rational::zero());
    }

    #[test]
    fn finite_model_joins_stabilize_exactly() {
        let m = FiniteModel::uniform(6).unwrap();
        let model = m.clone();
        let seq = ElementSequence::new(
            m.clone(),
            move |i| {
                let mask = if i <= 6 { 1u64 << (i - 1) } else { 0 };
                CompletionElement::embed(model.clone(), model.set(mask))
            },
            JoinCertificate::stabilized(6),
        )
        .unwrap();
        let join = countable_join(&seq).unwrap();
        let full = CompletionElement::top(m.clone());
        let d = join.dbar(&full, &eps(1, 1000)).unwrap();
        assert_eq!(d.value, Rational::zero());
        let sum = sum_disjoint_measures(&seq, &eps(1, 1000)).unwrap();
        assert_eq!(sum.value, Rational::one());
    }
}
