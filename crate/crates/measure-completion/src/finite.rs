//! A finite weighted atom universe and its powerset algebra.
//!
//! Unlike the interval carrier, this algebra is already closed under every
//! countable operation (sequences stabilize), which makes it the exact
//! oracle for everything the completion layer can only approximate.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, PartialEq, Eq)]
struct ModelData {
    weights: Vec<Rational>,
    total: Rational,
    null_mask: u64,
    min_positive: Option<Rational>,
}

/// A finite measure on the powerset of `n` atoms (`1 <= n <= 64`), given by
/// one non-negative weight per atom. Cheap to clone; clones share the data.
#[derive(Clone, Debug)]
pub struct FiniteModel {
    data: Arc<ModelData>,
}

impl FiniteModel {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() || weights.len() > 64 {
            return Err(Error::InvalidModel(format!(
                "atom count must be in 1..=64, got {}",
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidModel(format!("negative atom weight {w}")));
        }
        let mut total = Rational::zero();
        let mut null_mask = 0u64;
        let mut min_positive: Option<Rational> = None;
        for (i, w) in weights.iter().enumerate() {
            total = total + w;
            if w.is_zero() {
                null_mask |= 1 << i;
            } else if min_positive.as_ref().is_none_or(|m| w < m) {
                min_positive = Some(w.clone());
            }
        }
        Ok(FiniteModel {
            data: Arc::new(ModelData {
                weights,
                total,
                null_mask,
                min_positive,
            }),
        })
    }

    /// Equal atom weights `1/n` (a uniform probability model).
    pub fn uniform(n: usize) -> Result<Self> {
        let w = Rational::new(1, n as i64);
        Self::new(vec![w; n])
    }

    pub fn atom_count(&self) -> usize {
        self.data.weights.len()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.data.weights
    }

    pub fn total(&self) -> &Rational {
        &self.data.total
    }

    /// Mask of atoms with zero weight.
    pub fn null_mask(&self) -> u64 {
        self.data.null_mask
    }

    pub fn min_positive_weight(&self) -> Option<&Rational> {
        self.data.min_positive.as_ref()
    }

    pub fn universe_mask(&self) -> u64 {
        if self.atom_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.atom_count()) - 1
        }
    }

    /// Two models agree when they share storage or have equal weights.
    pub fn same_model(&self, other: &FiniteModel) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }

    /// The subset with the given membership mask (high bits are ignored).
    pub fn set(&self, mask: u64) -> FiniteModelSet {
        FiniteModelSet {
            model: self.clone(),
            mask: mask & self.universe_mask(),
        }
    }

    pub fn set_of(&self, atoms: impl IntoIterator<Item = usize>) -> FiniteModelSet {
        let mut mask = 0u64;
        for a in atoms {
            assert!(a < self.atom_count(), "atom index {a} out of range");
            mask |= 1 << a;
        }
        self.set(mask)
    }

    pub fn empty_set(&self) -> FiniteModelSet {
        self.set(0)
    }

    pub fn full_set(&self) -> FiniteModelSet {
        self.set(self.universe_mask())
    }
}

/// A subset of a [`FiniteModel`]'s atoms, stored as a membership bitmask.
#[derive(Clone, Debug)]
pub struct FiniteModelSet {
    model: FiniteModel,
    mask: u64,
}

impl FiniteModelSet {
    pub fn model(&self) -> &FiniteModel {
        &self.model
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.model.atom_count()).filter(move |i| self.mask & (1 << i) != 0)
    }

    /// Exact weight sum of the member atoms.
    pub fn measure(&self) -> Rational {
        let mut total = Rational::zero();
        for i in self.atoms() {
            total = total + &self.model.weights()[i];
        }
        total
    }

    fn check_model(&self, other: &FiniteModelSet) -> Result<()> {
        if self.model.same_model(&other.model) {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }

    pub fn union(&self, other: &FiniteModelSet) -> Result<FiniteModelSet> {
        self.check_model(other)?;
        Ok(self.model.set(self.mask | other.mask))
    }

    pub fn intersect(&self, other: &FiniteModelSet) -> Result<FiniteModelSet> {
        self.check_model(other)?;
        Ok(self.model.set(self.mask & other.mask))
    }

    pub fn complement(&self) -> FiniteModelSet {
        self.model.set(!self.mask)
    }

    pub fn symm_diff(&self, other: &FiniteModelSet) -> Result<FiniteModelSet> {
        self.check_model(other)?;
        Ok(self.model.set(self.mask ^ other.mask))
    }

    /// `d(A,B) = measure(A symm_diff B)`.
    pub fn dist(&self, other: &FiniteModelSet) -> Result<Rational> {
        Ok(self.symm_diff(other)?.measure())
    }

    /// Drops zero-weight atoms, picking the canonical representative of the
    /// almost-everywhere equality class.
    pub fn canonicalize(&self) -> FiniteModelSet {
        self.model.set(self.mask & !self.model.null_mask())
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }
}

impl PartialEq for FiniteModelSet {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && self.model.same_model(&other.model)
    }
}

impl Eq for FiniteModelSet {}

impl fmt::Display for FiniteModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.atoms().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
