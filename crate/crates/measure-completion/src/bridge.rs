//! The map from the completion onto the extension side, and executable
//! checks that it is an isometry and a sigma-algebra lattice isomorphism.
//!
//! Each completion point determines a measurable set modulo null sets. In
//! the finite model that class has a canonical exact representative (the
//! stabilized stage with zero-weight atoms dropped), so every check there
//! runs with radius zero. In the interval model the class is carried by
//! its defining sequence and all comparisons are tolerance-indexed.

use std::fmt;

use crate::algebra::{MeasureAlgebra, UnitIntervalModel};
use crate::completion::{ApproxValue, CompletionElement};
use crate::error::{Error, Result};
use crate::finite::{FiniteModel, FiniteModelSet};
use crate::rational::Rational;
use crate::report::CheckRecord;
use crate::sigma::{countable_join, ElementSequence};

/// Slack multiplier for the lattice-law comparisons in tolerance mode: the
/// two sides of each law are compared by `ae_equal` at `HOM_SLACK * eps`.
pub const HOM_SLACK: i64 = 4;

/// A ground algebra whose completion points can be mapped to descriptors
/// of measurable sets modulo null sets.
pub trait ExtensionBridge: MeasureAlgebra + Sized {
    type Descriptor: Clone + fmt::Debug;

    /// Whether descriptor comparisons are exact (radius zero).
    fn exact(&self) -> bool;

    /// Maps a completion point to the descriptor of its limit set.
    fn image(&self, x: &CompletionElement<Self>) -> Self::Descriptor;

    /// Almost-everywhere equality of two descriptors. Exact in the finite
    /// model; one-sided at tolerance otherwise.
    fn ae_equal(
        &self,
        a: &Self::Descriptor,
        b: &Self::Descriptor,
        eps: &Rational,
    ) -> Result<bool>;

    /// Distance between the descriptors' classes.
    fn descriptor_dist(
        &self,
        a: &Self::Descriptor,
        b: &Self::Descriptor,
        eps: &Rational,
    ) -> Result<ApproxValue>;

    fn descriptor_union(
        &self,
        a: &Self::Descriptor,
        b: &Self::Descriptor,
    ) -> Result<Self::Descriptor>;

    fn descriptor_intersect(
        &self,
        a: &Self::Descriptor,
        b: &Self::Descriptor,
    ) -> Result<Self::Descriptor>;

    fn descriptor_complement(&self, a: &Self::Descriptor) -> Self::Descriptor;

    /// The countable union of the images of a sequence's items, built on
    /// the extension side.
    fn descriptor_countable_union(
        &self,
        seq: &ElementSequence<Self>,
    ) -> Result<Self::Descriptor>;

    /// The exact limit distance between two elements, when the model can
    /// decide it (finite model only).
    fn exact_limit_dist(
        &self,
        x: &CompletionElement<Self>,
        y: &CompletionElement<Self>,
    ) -> Option<Rational>;
}

impl FiniteModel {
    /// Tolerance below which every Cauchy sequence in this model has
    /// stabilized modulo null atoms: half the smallest positive weight.
    pub fn stabilization_tolerance(&self) -> Rational {
        match self.min_positive_weight() {
            Some(w) => w.half(),
            None => Rational::one(),
        }
    }

    fn stabilized_term(&self, x: &CompletionElement<Self>) -> FiniteModelSet {
        let eps0 = self.stabilization_tolerance();
        x.term(x.modulus(&eps0))
    }
}

impl ExtensionBridge for FiniteModel {
    type Descriptor = FiniteModelSet;

    fn exact(&self) -> bool {
        true
    }

    fn image(&self, x: &CompletionElement<Self>) -> FiniteModelSet {
        self.stabilized_term(x).canonicalize()
    }

    fn ae_equal(&self, a: &FiniteModelSet, b: &FiniteModelSet, _eps: &Rational) -> Result<bool> {
        Ok(a.dist(b)?.is_zero())
    }

    fn descriptor_dist(
        &self,
        a: &FiniteModelSet,
        b: &FiniteModelSet,
        _eps: &Rational,
    ) -> Result<ApproxValue> {
        Ok(ApproxValue::exact(a.dist(b)?))
    }

    fn descriptor_union(
        &self,
        a: &FiniteModelSet,
        b: &FiniteModelSet,
    ) -> Result<FiniteModelSet> {
        Ok(a.union(b)?.canonicalize())
    }

    fn descriptor_intersect(
        &self,
        a: &FiniteModelSet,
        b: &FiniteModelSet,
    ) -> Result<FiniteModelSet> {
        Ok(a.intersect(b)?.canonicalize())
    }

    fn descriptor_complement(&self, a: &FiniteModelSet) -> FiniteModelSet {
        a.complement().canonicalize()
    }

    fn descriptor_countable_union(
        &self,
        seq: &ElementSequence<Self>,
    ) -> Result<FiniteModelSet> {
        // Past the certified tail at the stabilization tolerance no atom of
        // positive weight can still join the union.
        let eps0 = self.stabilization_tolerance();
        let n = seq.certificate().tail_modulus(&eps0);
        let mut acc = self.empty_set();
        for i in 1..=n {
            acc = acc.union(&self.image(&seq.item(i)))?;
        }
        Ok(acc.canonicalize())
    }

    fn exact_limit_dist(
        &self,
        x: &CompletionElement<Self>,
        y: &CompletionElement<Self>,
    ) -> Option<Rational> {
        let a = self.stabilized_term(x);
        let b = self.stabilized_term(y);
        Some(a.dist(&b).expect("elements share this model"))
    }
}

/// Descriptor of a measurable set on the interval side: the defining
/// sequence itself, optionally carrying a display name.
#[derive(Clone)]
pub struct SequenceDescriptor {
    element: CompletionElement<UnitIntervalModel>,
    name: Option<String>,
}

impl SequenceDescriptor {
    pub fn new(element: CompletionElement<UnitIntervalModel>) -> Self {
        SequenceDescriptor {
            element,
            name: None,
        }
    }

    pub fn named(element: CompletionElement<UnitIntervalModel>, name: impl Into<String>) -> Self {
        SequenceDescriptor {
            element,
            name: Some(name.into()),
        }
    }

    pub fn element(&self) -> &CompletionElement<UnitIntervalModel> {
        &self.element
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

impl fmt::Debug for SequenceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "SequenceDescriptor({n})"),
            None => write!(f, "SequenceDescriptor(term(1) = {:?}, ..)", self.element.term(1)),
        }
    }
}

impl ExtensionBridge for UnitIntervalModel {
    type Descriptor = SequenceDescriptor;

    fn exact(&self) -> bool {
        false
    }

    fn image(&self, x: &CompletionElement<Self>) -> SequenceDescriptor {
        SequenceDescriptor::new(x.clone())
    }

    fn ae_equal(
        &self,
        a: &SequenceDescriptor,
        b: &SequenceDescriptor,
        eps: &Rational,
    ) -> Result<bool> {
        a.element.eq_at(&b.element, eps)
    }

    fn descriptor_dist(
        &self,
        a: &SequenceDescriptor,
        b: &SequenceDescriptor,
        eps: &Rational,
    ) -> Result<ApproxValue> {
        a.element.dbar(&b.element, eps)
    }

    fn descriptor_union(
        &self,
        a: &SequenceDescriptor,
        b: &SequenceDescriptor,
    ) -> Result<SequenceDescriptor> {
        Ok(SequenceDescriptor::new(a.element.join(&b.element)?))
    }

    fn descriptor_intersect(
        &self,
        a: &SequenceDescriptor,
        b: &SequenceDescriptor,
    ) -> Result<SequenceDescriptor> {
        Ok(SequenceDescriptor::new(a.element.meet(&b.element)?))
    }

    fn descriptor_complement(&self, a: &SequenceDescriptor) -> SequenceDescriptor {
        SequenceDescriptor::new(a.element.compl())
    }

    fn descriptor_countable_union(
        &self,
        seq: &ElementSequence<Self>,
    ) -> Result<SequenceDescriptor> {
        Ok(SequenceDescriptor::new(countable_join(seq)?))
    }

    fn exact_limit_dist(
        &self,
        _x: &CompletionElement<Self>,
        _y: &CompletionElement<Self>,
    ) -> Option<Rational> {
        None
    }
}

fn require_shared_model<A: MeasureAlgebra>(
    pairs: &[(CompletionElement<A>, CompletionElement<A>)],
) -> Result<()> {
    let Some((first, _)) = pairs.first() else {
        return Ok(());
    };
    for (x, y) in pairs {
        if !x.algebra().same_model(first.algebra()) || !y.algebra().same_model(first.algebra()) {
            return Err(Error::ModelMismatch);
        }
    }
    Ok(())
}

/// Checks that the map onto the extension side preserves distances, pair
/// by pair. In the finite model the comparison is exact; in the interval
/// model the descriptor distance must reproduce the element distance and
/// almost-everywhere-equal images must come from elements equal at `2eps`.
pub fn verify_isometry<A: ExtensionBridge>(
    samples: &[(CompletionElement<A>, CompletionElement<A>)],
    eps: &Rational,
) -> Result<Vec<CheckRecord>> {
    require_shared_model(samples)?;
    let mut records = Vec::with_capacity(samples.len());
    for (k, (x, y)) in samples.iter().enumerate() {
        let alg = x.algebra();
        let img_x = alg.image(x);
        let img_y = alg.image(y);
        let record = match alg.exact_limit_dist(x, y) {
            Some(limit) => {
                let desc = alg.descriptor_dist(&img_x, &img_y, eps)?;
                let pass = desc.value == limit && desc.radius.is_zero();
                CheckRecord::new(
                    format!("isometry[{k}]"),
                    "isometry",
                    &[desc.value, limit],
                    &Rational::zero(),
                    pass,
                )
            }
            None => {
                let elem_d = x.dbar(y, eps)?;
                let desc_d = alg.descriptor_dist(&img_x, &img_y, eps)?;
                let metric_preserved = elem_d.value == desc_d.value;
                let doubled = Rational::from_int(2) * eps;
                let injective = if alg.ae_equal(&img_x, &img_y, eps)? {
                    x.eq_at(y, &doubled)?
                } else {
                    true
                };
                CheckRecord::new(
                    format!("isometry[{k}]"),
                    "isometry",
                    &[elem_d.value, desc_d.value],
                    eps,
                    metric_preserved && injective,
                )
            }
        };
        records.push(record);
    }
    Ok(records)
}

/// Exact limit distance in the finite model, as a plain rational.
pub fn finite_limit_dist(
    x: &CompletionElement<FiniteModel>,
    y: &CompletionElement<FiniteModel>,
) -> Result<Rational> {
    if !x.algebra().same_model(y.algebra()) {
        return Err(Error::ModelMismatch);
    }
    Ok(x.algebra()
        .exact_limit_dist(x, y)
        .expect("finite model distances are decidable"))
}

fn law_record<A: ExtensionBridge>(
    alg: &A,
    name: String,
    anchor: &str,
    lhs: &A::Descriptor,
    rhs: &A::Descriptor,
    eps: &Rational,
) -> Result<CheckRecord> {
    let slack = Rational::from_int(HOM_SLACK) * eps;
    let d = alg.descriptor_dist(lhs, rhs, eps)?;
    let pass = if alg.exact() {
        d.value.is_zero()
    } else {
        alg.ae_equal(lhs, rhs, &slack)?
    };
    let radius = d.radius.clone();
    Ok(CheckRecord::new(name, anchor, &[d.value], &radius, pass))
}

/// Checks the four lattice-isomorphism laws of the map onto the extension
/// side: it must send join, meet, and complement to union, intersection,
/// and complement, and countable joins to countable unions.
pub fn verify_homomorphism<A: ExtensionBridge>(
    pairs: &[(CompletionElement<A>, CompletionElement<A>)],
    seqs: &[ElementSequence<A>],
    eps: &Rational,
) -> Result<Vec<CheckRecord>> {
    require_shared_model(pairs)?;
    let mut records = Vec::new();
    for (k, (x, y)) in pairs.iter().enumerate() {
        let alg = x.algebra().clone();
        let img_x = alg.image(x);
        let img_y = alg.image(y);

        let join_lhs = alg.image(&x.join(y)?);
        let join_rhs = alg.descriptor_union(&img_x, &img_y)?;
        records.push(law_record(
            &alg,
            format!("hom-join[{k}]"),
            "join-to-union",
            &join_lhs,
            &join_rhs,
            eps,
        )?);

        let meet_lhs = alg.image(&x.meet(y)?);
        let meet_rhs = alg.descriptor_intersect(&img_x, &img_y)?;
        records.push(law_record(
            &alg,
            format!("hom-meet[{k}]"),
            "meet-to-intersection",
            &meet_lhs,
            &meet_rhs,
            eps,
        )?);

        let compl_lhs = alg.image(&x.compl());
        let compl_rhs = alg.descriptor_complement(&img_x);
        records.push(law_record(
            &alg,
            format!("hom-compl[{k}]"),
            "complement-to-complement",
            &compl_lhs,
            &compl_rhs,
            eps,
        )?);
    }
    for (s, seq) in seqs.iter().enumerate() {
        let alg = seq.algebra().clone();
        let lhs = alg.image(&countable_join(seq)?);
        let rhs = alg.descriptor_countable_union(seq)?;
        records.push(law_record(
            &alg,
            format!("hom-countable[{s}]"),
            "countable-join-to-union",
            &lhs,
            &rhs,
            eps,
        )?);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalSet;
    use crate::report::all_pass;
    use crate::sigma::JoinCertificate;

    fn weights(ws: &[(i64, i64)]) -> FiniteModel {
        FiniteModel::new(ws.iter().map(|&(p, q)| Rational::ratio(p, q)).collect()).unwrap()
    }

    #[test]
    fn image_drops_null_atoms() {
        let m = weights(&[(1, 2), (0, 1), (1, 2)]);
        let x = CompletionElement::embed(m.clone(), m.set(0b011));
        let img = m.image(&x);
        assert_eq!(img.mask(), 0b001);
    }

    #[test]
    fn ae_equality_in_the_finite_model() {
        let m = weights(&[(1, 3), (0, 1), (2, 3)]);
        let eps = Rational::ratio(1, 10);
        let a = m.set(0b011);
        let b = m.set(0b001);
        assert!(m.ae_equal(&a, &b, &eps).unwrap());
        let c = m.set(0b100);
        assert!(!m.ae_equal(&b, &c, &eps).unwrap());
        assert!(m.ae_equal(&a, &a, &eps).unwrap());
    }

    #[test]
    fn exhaustive_isometry_on_three_atoms() {
        let m = weights(&[(1, 2), (1, 4), (1, 4)]);
        let mut samples = Vec::new();
        for a in 0..8u64 {
            for b in 0..8u64 {
                samples.push((
                    CompletionElement::embed(m.clone(), m.set(a)),
                    CompletionElement::embed(m.clone(), m.set(b)),
                ));
            }
        }
        let records = verify_isometry(&samples, &Rational::ratio(1, 100)).unwrap();
        assert_eq!(records.len(), 64);
        assert!(all_pass(&records));
        for (x, y) in &samples {
            assert_eq!(
                finite_limit_dist(x, y).unwrap(),
                x.term(1).dist(&y.term(1)).unwrap()
            );
        }
    }

    #[test]
    fn isometry_on_interval_samples() {
        let eps = Rational::ratio(1, 1000);
        let a = CompletionElement::embed(
            UnitIntervalModel,
            IntervalSet::interval(Rational::zero(), Rational::ratio(1, 2)).unwrap(),
        );
        let b = CompletionElement::bottom(UnitIntervalModel);
        let records =
            verify_isometry(&[(a.clone(), b.clone()), (a.clone(), a.clone())], &eps).unwrap();
        assert!(all_pass(&records));
        assert_eq!(records[0].values[0], "1/2");
        assert_eq!(records[1].values[0], "0");
    }

    #[test]
    fn homomorphism_laws_hold_exactly_for_masks() {
        let m = weights(&[(1, 8), (0, 1), (3, 8), (1, 2)]);
        let mut pairs = Vec::new();
        for a in 0..16u64 {
            for b in 0..16u64 {
                pairs.push((
                    CompletionElement::embed(m.clone(), m.set(a)),
                    CompletionElement::embed(m.clone(), m.set(b)),
                ));
            }
        }
        let model = m.clone();
        let seq = ElementSequence::new(
            m.clone(),
            move |i| {
                let mask = if i <= 4 { 1u64 << (i - 1) } else { 0 };
                CompletionElement::embed(model.clone(), model.set(mask))
            },
            JoinCertificate::stabilized(4),
        )
        .unwrap();
        let records = verify_homomorphism(&pairs, &[seq], &Rational::ratio(1, 100)).unwrap();
        assert!(all_pass(&records));
    }

    #[test]
    fn complement_law_is_exact_for_embedded_intervals() {
        let eps = Rational::ratio(1, 1000);
        let a = CompletionElement::embed(
            UnitIntervalModel,
            IntervalSet::interval(Rational::ratio(1, 4), Rational::ratio(2, 3)).unwrap(),
        );
        let b = CompletionElement::embed(
            UnitIntervalModel,
            IntervalSet::interval(Rational::ratio(1, 2), Rational::ratio(7, 8)).unwrap(),
        );
        let records = verify_homomorphism(&[(a, b)], &[], &eps).unwrap();
        assert!(all_pass(&records));
        for r in &records {
            assert_eq!(r.values[0], "0");
        }
    }

    #[test]
    fn homomorphism_laws_hold_at_tolerance_for_interval_elements() {
        let eps = Rational::ratio(1, 10_000);
        let quarter = CompletionElement::embed(
            UnitIntervalModel,
            IntervalSet::interval(Rational::zero(), Rational::ratio(1, 4)).unwrap(),
        );
        let svc = crate::constructions::svc_element(12);
        let pairs = vec![
            (svc.clone(), quarter.clone()),
            (svc, CompletionElement::bottom(UnitIntervalModel)),
        ];
        let seqs = vec![crate::constructions::dyadic_sequence().unwrap()];
        let records = verify_homomorphism(&pairs, &seqs, &eps).unwrap();
        assert!(all_pass(&records));
    }

    #[test]
    fn countable_join_image_matches_the_exhaustive_union_of_images() {
        use crate::sample::{random_mask, random_model, seeded_rng, weight_grid};
        let mut rng = seeded_rng(9);
        let grid = weight_grid();
        for _ in 0..50 {
            let model = random_model(&mut rng, 10, &grid);
            let items: Vec<u64> = (0..7).map(|_| random_mask(&mut rng, 10)).collect();
            let masks = items.clone();
            let inner = model.clone();
            let seq = ElementSequence::new(
                model.clone(),
                move |i| {
                    let mask = masks.get(i as usize - 1).copied().unwrap_or(0);
                    CompletionElement::embed(inner.clone(), inner.set(mask))
                },
                JoinCertificate::stabilized(7),
            )
            .unwrap();
            let join_image =
                model.image(&crate::sigma::countable_join(&seq).unwrap());
            let exhaustive = items.iter().fold(0u64, |acc, m| acc | m);
            assert_eq!(join_image, model.set(exhaustive).canonicalize());
        }
    }

    #[test]
    fn well_definedness_across_equivalent_inputs() {
        let m = weights(&[(1, 2), (0, 1), (1, 2)]);
        let eps = Rational::ratio(1, 100);
        // Same class, different sequences: differ on the null atom.
        let x = CompletionElement::embed(m.clone(), m.set(0b001));
        let with_null = m.set(0b011);
        let x_prime = CompletionElement::from_stages(
            m.clone(),
            move |_| with_null.clone(),
            |_| 1,
            &crate::completion::CauchyCheck::default(),
        )
        .unwrap();
        assert!(x.eq_at(&x_prime, &eps).unwrap());
        let img = m.image(&x);
        let img_prime = m.image(&x_prime);
        assert!(m
            .ae_equal(&img, &img_prime, &(Rational::from_int(3) * &eps))
            .unwrap());
        assert_eq!(img.mask(), img_prime.mask());
    }
}
