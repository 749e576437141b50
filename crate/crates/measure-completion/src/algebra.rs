//! The common interface of the two ground algebras.
//!
//! The completion layer is generic over a [`MeasureAlgebra`]: a lattice of
//! sets with complement, an exact finite measure, and the induced
//! pseudometric `d(A,B) = measure(A symm_diff B)`. Two instances exist:
//! [`UnitIntervalModel`] (interval unions on `[0,1)`, not countably
//! complete, so the completion genuinely adds points) and [`FiniteModel`]
//! (a weighted powerset where everything stabilizes and can be checked
//! exactly).

use std::fmt;

use crate::finite::{FiniteModel, FiniteModelSet};
use crate::interval::IntervalSet;
use crate::rational::Rational;

/// A finite measure algebra with exact rational measure.
///
/// Binary operations require both sets to belong to `self`'s model; code
/// that mixes models is expected to check [`MeasureAlgebra::same_model`]
/// first (the completion layer does), so implementations may panic on a
/// cross-model pair.
pub trait MeasureAlgebra: Clone + Send + Sync + 'static {
    type Set: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    /// The empty set.
    fn bottom(&self) -> Self::Set;

    /// The whole space.
    fn top(&self) -> Self::Set;

    fn union(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;

    fn intersect(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;

    fn complement(&self, a: &Self::Set) -> Self::Set;

    fn symm_diff(&self, a: &Self::Set, b: &Self::Set) -> Self::Set {
        self.union(
            &self.intersect(a, &self.complement(b)),
            &self.intersect(b, &self.complement(a)),
        )
    }

    fn measure(&self, a: &Self::Set) -> Rational;

    /// The pseudometric `d(A,B) = measure(A symm_diff B)`.
    fn dist(&self, a: &Self::Set, b: &Self::Set) -> Rational {
        self.measure(&self.symm_diff(a, b))
    }

    /// Whether two algebra handles denote the same model.
    fn same_model(&self, other: &Self) -> bool;

    /// Short display form of a set, used in reports.
    fn describe(&self, a: &Self::Set) -> String;
}

/// The algebra of finite unions of half-open rational intervals in `[0,1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitIntervalModel;

impl MeasureAlgebra for UnitIntervalModel {
    type Set = IntervalSet;

    fn bottom(&self) -> IntervalSet {
        IntervalSet::empty()
    }

    fn top(&self) -> IntervalSet {
        IntervalSet::full()
    }

    fn union(&self, a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
        a.union(b)
    }

    fn intersect(&self, a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
        a.intersect(b)
    }

    fn complement(&self, a: &IntervalSet) -> IntervalSet {
        a.complement()
    }

    fn symm_diff(&self, a: &IntervalSet, b: &IntervalSet) -> IntervalSet {
        a.symm_diff(b)
    }

    fn measure(&self, a: &IntervalSet) -> Rational {
        a.measure()
    }

    fn same_model(&self, _other: &Self) -> bool {
        true
    }

    fn describe(&self, a: &IntervalSet) -> String {
        a.to_string()
    }
}

impl MeasureAlgebra for FiniteModel {
    type Set = FiniteModelSet;

    fn bottom(&self) -> FiniteModelSet {
        self.empty_set()
    }

    fn top(&self) -> FiniteModelSet {
        self.full_set()
    }

    fn union(&self, a: &FiniteModelSet, b: &FiniteModelSet) -> FiniteModelSet {
        a.union(b).expect("sets from a different finite model")
    }

    fn intersect(&self, a: &FiniteModelSet, b: &FiniteModelSet) -> FiniteModelSet {
        a.intersect(b).expect("sets from a different finite model")
    }

    fn complement(&self, a: &FiniteModelSet) -> FiniteModelSet {
        a.complement()
    }

    fn symm_diff(&self, a: &FiniteModelSet, b: &FiniteModelSet) -> FiniteModelSet {
        a.symm_diff(b).expect("sets from a different finite model")
    }

    fn measure(&self, a: &FiniteModelSet) -> Rational {
        a.measure()
    }

    fn same_model(&self, other: &Self) -> bool {
        FiniteModel::same_model(self, other)
    }

    fn describe(&self, a: &FiniteModelSet) -> String {
        a.to_string()
    }
}
