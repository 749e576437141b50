//! Exact-arithmetic completion of finite measure algebras.
//!
//! This crate builds the metric completion of a measure algebra under the
//! symmetric-difference pseudometric `d(A,B) = mu(A △ B)`, equips the
//! completion with finite and countable lattice operations, and checks,
//! executably, that mapping each completion point to its limit set is an
//! isometry and a sigma-algebra lattice isomorphism onto the extension
//! side (measurable sets modulo null sets).
//!
//! Everything is exact: measures, distances, and tolerances are
//! arbitrary-precision rationals, so each finite-stage comparison is a
//! decidable equality or inequality. Limits are handled through explicit
//! Cauchy moduli and [`ApproxValue`]s with guaranteed error radii.
//!
//! Two ground models are provided:
//!
//! - [`UnitIntervalModel`]: finite unions of half-open rational intervals
//!   in `[0,1)`. Not countably complete, so the completion genuinely adds
//!   points (the fat Cantor class has measure `1/2` but no representative
//!   in the ground algebra).
//! - [`FiniteModel`]: a weighted powerset on up to 64 atoms. Everything
//!   stabilizes, so the same statements can be checked exactly; this is
//!   the brute-force oracle the interval model is tested against.
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `measure-completion` binary for the scenario
//! harness with machine-readable reports.

mod algebra;
mod bridge;
mod completion;
mod constructions;
mod error;
mod finite;
mod interval;
mod parse;
mod rational;
mod report;
mod sample;
mod scenario;
mod sigma;

pub use algebra::{MeasureAlgebra, UnitIntervalModel};
pub use bridge::{
    finite_limit_dist, verify_homomorphism, verify_isometry, ExtensionBridge,
    SequenceDescriptor, HOM_SLACK,
};
pub use completion::{
    default_epsilon, ApproxValue, CauchyCheck, CompletionElement, COMPL_WELLDEF_SLACK,
    DISJOINT_ADDITIVITY_SLACK, JOIN_WELLDEF_SLACK, SUBADDITIVITY_SLACK, SYMMDIFF_IDENTITY_SLACK,
};
pub use constructions::{
    cantor_element, cantor_element_checked, cantor_modulus, cantor_stage, cantor_stage_measure,
    dyadic_block, dyadic_sequence, dyadic_sequence_loose, svc_element, svc_element_checked,
    svc_modulus, svc_stage, svc_stage_measure, MAX_STAGE_DEPTH,
};
pub use error::{Error, Result};
pub use finite::{FiniteModel, FiniteModelSet};
pub use interval::{Interval, IntervalSet};
pub use parse::parse_setexpr;
pub use rational::Rational;
pub use report::{all_pass, CheckRecord};
pub use sample::{random_interval_set, random_mask, random_model, seeded_rng, weight_grid};
pub use scenario::{run, run_with, Report, Scenario, ScenarioName, MAX_SCENARIO_DEPTH};
pub use sigma::{
    check_cha_distributivity, countable_join, partial_join, sum_disjoint_measures,
    DistributivityReport, ElementSequence, JoinCertificate, CHA_SLACK, DISJOINT_SAMPLE_PAIRS,
};
