//! Points of the completion of a measure algebra under `d(A,B) = mu(A △ B)`.
//!
//! A [`CompletionElement`] is a Cauchy sequence of algebra sets together
//! with an explicit modulus: a function `eps -> N` certifying that all
//! terms from index `N` on are within `eps` of each other. The limit
//! distance and limit measure are not exactly computable in the interval
//! model, so queries return an [`ApproxValue`] carrying an exact rational
//! value plus a radius that is guaranteed to bound the true error.
//!
//! Tolerance-indexed predicates are one-sided by construction:
//! `eq_at(x, y, eps) == true` certifies the true distance is at most `eps`,
//! while `false` certifies it exceeds `eps/2`. Exact zero-testing exists
//! only where sequences stabilize (the finite model, see the bridge
//! module).

use std::fmt;
use std::sync::Arc;

use crate::algebra::MeasureAlgebra;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default tolerance used by the command-line harness: `1/10^6`.
pub fn default_epsilon() -> Rational {
    Rational::new(1, 1_000_000)
}

/// Slack multipliers for the tolerance-indexed invariant checks. Each is a
/// triangle-inequality budget: probes carry radius `eps`, so a statement
/// that is an exact identity in the limit shows up within a small multiple
/// of `eps` at finite stages.
///
/// `dbar` between joins (or meets) of inputs that agree at `eps` stays
/// within `JOIN_WELLDEF_SLACK * eps`.
pub const JOIN_WELLDEF_SLACK: i64 = 3;
/// As above for complements, which are isometric: `2 * eps`.
pub const COMPL_WELLDEF_SLACK: i64 = 2;
/// `mubar(join) <= mubar(x) + mubar(y) + SUBADDITIVITY_SLACK * eps`.
pub const SUBADDITIVITY_SLACK: i64 = 3;
/// For disjoint-at-`eps` elements the join measure matches the sum within
/// `DISJOINT_ADDITIVITY_SLACK * eps`.
pub const DISJOINT_ADDITIVITY_SLACK: i64 = 4;
/// `dbar(x,y)` matches the measure of the symmetric difference within
/// `SYMMDIFF_IDENTITY_SLACK * eps`.
pub const SYMMDIFF_IDENTITY_SLACK: i64 = 4;

/// An exact rational approximation with a guaranteed error radius: the true
/// real number lies in `[value - radius, value + radius]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxValue {
    pub value: Rational,
    pub radius: Rational,
}

impl ApproxValue {
    pub fn exact(value: Rational) -> Self {
        ApproxValue {
            value,
            radius: Rational::zero(),
        }
    }

    pub fn lower(&self) -> Rational {
        &self.value - &self.radius
    }

    pub fn upper(&self) -> Rational {
        &self.value + &self.radius
    }
}

impl fmt::Display for ApproxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.value, self.radius)
    }
}

type TermFn<A> = Arc<dyn Fn(u64) -> <A as MeasureAlgebra>::Set + Send + Sync>;
type ModulusFn = Arc<dyn Fn(&Rational) -> u64 + Send + Sync>;

/// Sampling schedule used to spot-check a claimed Cauchy modulus.
///
/// For each tolerance `eps` the constructor evaluates `N = modulus(eps)`
/// and checks `dist(term(N + a), term(N + b)) <= eps` for every offset pair
/// `(a, b)`. A wrong modulus is caught probabilistically, not proven wrong.
#[derive(Clone, Debug)]
pub struct CauchyCheck {
    pub epsilons: Vec<Rational>,
    pub offset_pairs: Vec<(u64, u64)>,
}

impl Default for CauchyCheck {
    fn default() -> Self {
        CauchyCheck {
            epsilons: vec![
                Rational::ratio(1, 4),
                Rational::ratio(1, 16),
                Rational::ratio(1, 64),
            ],
            offset_pairs: vec![
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (2, 4),
                (3, 4),
            ],
        }
    }
}

impl CauchyCheck {
    /// Skips validation entirely.
    pub fn none() -> Self {
        CauchyCheck {
            epsilons: Vec::new(),
            offset_pairs: Vec::new(),
        }
    }
}

/// A point of the completion: a Cauchy sequence with an explicit modulus.
///
/// `term` is 1-indexed and must be a pure function of the index; `modulus`
/// must be antitone (smaller tolerances give later indices). Elements are
/// cheap to clone and safe to share across threads.
pub struct CompletionElement<A: MeasureAlgebra> {
    alg: A,
    term: TermFn<A>,
    modulus: ModulusFn,
}

impl<A: MeasureAlgebra> Clone for CompletionElement<A> {
    fn clone(&self) -> Self {
        CompletionElement {
            alg: self.alg.clone(),
            term: Arc::clone(&self.term),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl<A: MeasureAlgebra> fmt::Debug for CompletionElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompletionElement(term(1) = {:?}, ..)", self.term(1))
    }
}

impl<A: MeasureAlgebra> CompletionElement<A> {
    /// Embeds an algebra set as the constant sequence with modulus 1.
    pub fn embed(alg: A, set: A::Set) -> Self {
        CompletionElement {
            alg,
            term: Arc::new(move |_| set.clone()),
            modulus: Arc::new(|_| 1),
        }
    }

    /// The bottom element (empty set).
    pub fn bottom(alg: A) -> Self {
        let empty = alg.bottom();
        Self::embed(alg, empty)
    }

    /// The top element (whole space).
    pub fn top(alg: A) -> Self {
        let full = alg.top();
        Self::embed(alg, full)
    }

    /// Builds an element from explicit stages and a claimed modulus.
    ///
    /// The caller asserts the Cauchy guarantee; construction spot-checks
    /// the claim on the given schedule and rejects with [`Error::NotCauchy`]
    /// on any violated inequality.
    pub fn from_stages(
        alg: A,
        term: impl Fn(u64) -> A::Set + Send + Sync + 'static,
        modulus: impl Fn(&Rational) -> u64 + Send + Sync + 'static,
        check: &CauchyCheck,
    ) -> Result<Self> {
        let elem = CompletionElement {
            alg,
            term: Arc::new(term) as TermFn<A>,
            modulus: Arc::new(modulus) as ModulusFn,
        };
        for eps in &check.epsilons {
            assert!(eps.is_positive(), "spot-check tolerance must be positive");
            let start = elem.modulus(eps);
            for &(a, b) in &check.offset_pairs {
                let (n, m) = (start + a, start + b);
                let observed = elem.alg.dist(&elem.term(n), &elem.term(m));
                if &observed > eps {
                    return Err(Error::NotCauchy {
                        n,
                        m,
                        observed: observed.to_string(),
                        bound: eps.to_string(),
                    });
                }
            }
        }
        Ok(elem)
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    /// The n-th stage of the sequence (1-indexed).
    pub fn term(&self, n: u64) -> A::Set {
        assert!(n >= 1, "sequence indices start at 1");
        (self.term)(n)
    }

    /// Index from which all terms are pairwise within `eps`.
    pub fn modulus(&self, eps: &Rational) -> u64 {
        assert!(eps.is_positive(), "modulus needs a positive tolerance");
        (self.modulus)(eps).max(1)
    }

    fn require_same_model(&self, other: &Self) -> Result<()> {
        if self.alg.same_model(&other.alg) {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }

    /// Approximates the limit distance between two elements to within
    /// `eps`: evaluates both sequences at `max(modulus(eps/2))` and returns
    /// the exact stage distance with radius `eps`.
    pub fn dbar(&self, other: &Self, eps: &Rational) -> Result<ApproxValue> {
        self.require_same_model(other)?;
        assert!(eps.is_positive(), "dbar needs a positive tolerance");
        let half = eps.half();
        let n = self.modulus(&half).max(other.modulus(&half));
        let value = self.alg.dist(&self.term(n), &other.term(n));
        Ok(ApproxValue {
            value,
            radius: eps.clone(),
        })
    }

    /// Approximates the limit measure: the distance to the bottom element.
    pub fn mubar(&self, eps: &Rational) -> ApproxValue {
        self.dbar(&Self::bottom(self.alg.clone()), eps)
            .expect("bottom element shares the model")
    }

    /// Pointwise union with modulus `eps -> max(modulus(eps/2))`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.require_same_model(other)?;
        let alg = self.alg.clone();
        let (ta, tb) = (Arc::clone(&self.term), Arc::clone(&other.term));
        let (ma, mb) = (Arc::clone(&self.modulus), Arc::clone(&other.modulus));
        Ok(CompletionElement {
            alg: self.alg.clone(),
            term: Arc::new(move |n| alg.union(&ta(n), &tb(n))),
            modulus: Arc::new(move |eps: &Rational| {
                let half = eps.half();
                ma(&half).max(mb(&half))
            }),
        })
    }

    /// Pointwise intersection, same modulus derivation as `join`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.require_same_model(other)?;
        let alg = self.alg.clone();
        let (ta, tb) = (Arc::clone(&self.term), Arc::clone(&other.term));
        let (ma, mb) = (Arc::clone(&self.modulus), Arc::clone(&other.modulus));
        Ok(CompletionElement {
            alg: self.alg.clone(),
            term: Arc::new(move |n| alg.intersect(&ta(n), &tb(n))),
            modulus: Arc::new(move |eps: &Rational| {
                let half = eps.half();
                ma(&half).max(mb(&half))
            }),
        })
    }

    /// Pointwise complement. Complementation is an isometry, so the modulus
    /// carries over unchanged.
    pub fn compl(&self) -> Self {
        let alg = self.alg.clone();
        let t = Arc::clone(&self.term);
        CompletionElement {
            alg: self.alg.clone(),
            term: Arc::new(move |n| alg.complement(&t(n))),
            modulus: Arc::clone(&self.modulus),
        }
    }

    /// One-sided equality at tolerance: `true` certifies the limit distance
    /// is at most `eps`, `false` certifies it exceeds `eps/2`. Computed as
    /// `dbar(x, y, eps/4).value <= 3*eps/4`.
    pub fn eq_at(&self, other: &Self, eps: &Rational) -> Result<bool> {
        assert!(eps.is_positive(), "eq_at needs a positive tolerance");
        let quarter = eps.half().half();
        let probe = self.dbar(other, &quarter)?;
        Ok(probe.value <= eps - quarter)
    }

    /// One-sided disjointness: tests whether the limit measure of the meet
    /// vanishes at tolerance.
    pub fn is_disjoint(&self, other: &Self, eps: &Rational) -> Result<bool> {
        let overlap = self.meet(other)?;
        overlap.eq_at(&Self::bottom(self.alg.clone()), eps)
    }

    /// One-sided containment via `mu(self meet other^C) = 0` at tolerance.
    pub fn is_subset(&self, other: &Self, eps: &Rational) -> Result<bool> {
        let excess = self.meet(&other.compl())?;
        excess.eq_at(&Self::bottom(self.alg.clone()), eps)
    }

    /// The same class represented by the index-shifted sequence
    /// `term(n) = self.term(n + shift)`. Useful as an
    /// equivalent-but-distinct representative in well-definedness checks.
    pub fn reindexed(&self, shift: u64) -> Self {
        let t = Arc::clone(&self.term);
        let m = Arc::clone(&self.modulus);
        CompletionElement {
            alg: self.alg.clone(),
            term: Arc::new(move |n| t(n + shift)),
            modulus: Arc::new(move |eps: &Rational| m(eps).saturating_sub(shift).max(1)),
        }
    }

    /// The same class with every term before index `k` replaced by the
    /// empty set (a perturbation below the modulus; the modulus is pushed
    /// to `k` accordingly).
    pub fn delayed(&self, k: u64) -> Self {
        let alg = self.alg.clone();
        let t = Arc::clone(&self.term);
        let m = Arc::clone(&self.modulus);
        CompletionElement {
            alg: self.alg.clone(),
            term: Arc::new(move |n| if n < k { alg.bottom() } else { t(n) }),
            modulus: Arc::new(move |eps: &Rational| m(eps).max(k)),
        }
    }
}
