//! Named demonstration scenarios and machine-readable reports.
//!
//! Each scenario runs a fixed list of checks and produces a [`Report`]
//! whose JSON form is stable: running the same scenario with the same
//! parameters yields byte-identical output apart from the wall-time field.
//! Randomized scenarios draw everything from an explicit seed; the
//! interval-model scenarios are deterministic closed forms.

use std::fmt;
use std::str::FromStr;
use std::thread;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::UnitIntervalModel;
use crate::bridge::{verify_homomorphism, verify_isometry, ExtensionBridge};
use crate::completion::{default_epsilon, CompletionElement};
use crate::constructions::{
    cantor_element, cantor_element_checked, cantor_stage_measure, dyadic_sequence,
    dyadic_sequence_loose, svc_element, svc_element_checked, svc_stage_measure,
};
use crate::error::{Error, Result};
use crate::finite::FiniteModel;
use crate::interval::IntervalSet;
use crate::rational::Rational;
use crate::report::{all_pass, CheckRecord};
use crate::sample::{random_mask, random_model, seeded_rng, weight_grid};
use crate::sigma::{
    check_cha_distributivity, countable_join, partial_join, sum_disjoint_measures,
    ElementSequence, JoinCertificate,
};

/// Deepest stage a scenario may materialize (`2^22` intervals).
pub const MAX_SCENARIO_DEPTH: u32 = 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioName {
    Svc,
    Cantor,
    DyadicJoin,
    FiniteOracle,
    ChaCheck,
    Isometry,
}

impl ScenarioName {
    pub const ALL: [ScenarioName; 6] = [
        ScenarioName::Svc,
        ScenarioName::Cantor,
        ScenarioName::DyadicJoin,
        ScenarioName::FiniteOracle,
        ScenarioName::ChaCheck,
        ScenarioName::Isometry,
    ];
}

impl fmt::Display for ScenarioName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ScenarioName::Svc => "svc",
            ScenarioName::Cantor => "cantor",
            ScenarioName::DyadicJoin => "dyadic-join",
            ScenarioName::FiniteOracle => "finite-oracle",
            ScenarioName::ChaCheck => "cha-check",
            ScenarioName::Isometry => "isometry",
        };
        f.write_str(s)
    }
}

impl FromStr for ScenarioName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svc" => Ok(ScenarioName::Svc),
            "cantor" => Ok(ScenarioName::Cantor),
            "dyadic-join" => Ok(ScenarioName::DyadicJoin),
            "finite-oracle" => Ok(ScenarioName::FiniteOracle),
            "cha-check" => Ok(ScenarioName::ChaCheck),
            "isometry" => Ok(ScenarioName::Isometry),
            other => Err(Error::InvalidScenario(format!("unknown scenario {other:?}"))),
        }
    }
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// A scenario invocation: a name plus validated parameters.
#[derive(Clone, Debug, Serialize)]
pub struct Scenario {
    pub name: ScenarioName,
    pub depth: u32,
    pub atoms: u32,
    pub seed: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub epsilon: Rational,
}

impl Scenario {
    /// Default parameters: depth 20, atoms 6, seed 0, epsilon `1/10^6`.
    pub fn new(name: ScenarioName) -> Self {
        Scenario {
            name,
            depth: 20,
            atoms: 6,
            seed: 0,
            epsilon: default_epsilon(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.epsilon.is_positive() {
            return Err(Error::InvalidScenario(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.depth == 0 || self.depth > MAX_SCENARIO_DEPTH {
            return Err(Error::InvalidScenario(format!(
                "depth must be in 1..={MAX_SCENARIO_DEPTH}, got {}",
                self.depth
            )));
        }
        if self.atoms == 0 || self.atoms > 16 {
            return Err(Error::InvalidScenario(format!(
                "atoms must be in 1..=16, got {}",
                self.atoms
            )));
        }
        Ok(())
    }
}

/// The machine-readable outcome of one scenario run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: Scenario,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    pub ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

type CheckBody = Box<dyn FnOnce() -> Result<Vec<CheckRecord>> + Send>;

struct PlannedCheck {
    name: &'static str,
    anchor: &'static str,
    body: CheckBody,
}

impl PlannedCheck {
    fn new(
        name: &'static str,
        anchor: &'static str,
        body: impl FnOnce() -> Result<Vec<CheckRecord>> + Send + 'static,
    ) -> Self {
        PlannedCheck {
            name,
            anchor,
            body: Box::new(body),
        }
    }
}

/// Runs a scenario sequentially.
pub fn run(scenario: &Scenario) -> Result<Report> {
    run_with(scenario, false)
}

/// Runs a scenario, optionally fanning independent checks out across
/// threads. The report order is fixed by check index either way, and a
/// check that fails with a module error becomes a failed record rather
/// than aborting the run.
pub fn run_with(scenario: &Scenario, parallel: bool) -> Result<Report> {
    scenario.validate()?;
    let started = Instant::now();
    let planned = plan(scenario);
    let metas: Vec<(&'static str, &'static str)> =
        planned.iter().map(|c| (c.name, c.anchor)).collect();
    let bodies: Vec<CheckBody> = planned.into_iter().map(|c| c.body).collect();

    let outcomes: Vec<Result<Vec<CheckRecord>>> = if parallel && bodies.len() > 1 {
        thread::scope(|scope| {
            let handles: Vec<_> = bodies
                .into_iter()
                .map(|body| scope.spawn(body))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check thread panicked"))
                .collect()
        })
    } else {
        bodies.into_iter().map(|body| body()).collect()
    };

    let mut checks = Vec::new();
    for ((name, anchor), outcome) in metas.into_iter().zip(outcomes) {
        match outcome {
            Ok(records) => checks.extend(records),
            Err(err) => {
                eprintln!("check {name} failed to run: {err}");
                checks.push(CheckRecord::errored(name, anchor));
            }
        }
    }
    let pass = all_pass(&checks);
    Ok(Report {
        scenario: scenario.clone(),
        checks,
        pass,
        ms: u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX),
    })
}

fn plan(scenario: &Scenario) -> Vec<PlannedCheck> {
    match scenario.name {
        ScenarioName::Svc => plan_svc(scenario),
        ScenarioName::Cantor => plan_cantor(scenario),
        ScenarioName::DyadicJoin => plan_dyadic(scenario),
        ScenarioName::FiniteOracle => plan_finite_oracle(scenario),
        ScenarioName::ChaCheck => plan_cha(scenario),
        ScenarioName::Isometry => plan_isometry(scenario),
    }
}

fn left_half() -> IntervalSet {
    IntervalSet::interval(Rational::zero(), Rational::ratio(1, 2)).unwrap()
}

fn plan_svc(scenario: &Scenario) -> Vec<PlannedCheck> {
    let depth = scenario.depth;
    let eps = scenario.epsilon.clone();
    let element = svc_element(depth);
    let mut checks = Vec::new();

    checks.push(PlannedCheck::new("stage-measures", "geometric-tail", {
        let svc = element.clone();
        move || {
            let mut pass = true;
            let mut witness = Rational::zero();
            for n in (1..=depth.min(12)).map(u64::from).chain([u64::from(depth)]) {
                let got = svc.term(n).measure();
                pass &= got == svc_stage_measure(n);
                witness = got;
            }
            Ok(vec![CheckRecord::new(
                "stage-measures",
                "geometric-tail",
                &[witness],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("limit-measure", "cauchy-limit", {
        let eps = eps.clone();
        let svc = element.clone();
        move || {
            let mu = svc.mubar(&eps);
            let pass = (&mu.value - &Rational::ratio(1, 2)).abs() <= eps;
            Ok(vec![CheckRecord::new(
                "limit-measure",
                "cauchy-limit",
                &[mu.value],
                &mu.radius,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("left-half-meet", "meet-measure", {
        let eps = eps.clone();
        let svc = element.clone();
        move || {
            let half = CompletionElement::embed(UnitIntervalModel, left_half());
            let mu = svc.meet(&half)?.mubar(&eps);
            let pass = (&mu.value - &Rational::ratio(1, 4)).abs() <= eps;
            Ok(vec![CheckRecord::new(
                "left-half-meet",
                "meet-measure",
                &[mu.value],
                &mu.radius,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new(
        "complement-distance",
        "complement-isometry",
        {
            let eps = eps.clone();
            let svc = element.clone();
            move || {
                let d = svc.dbar(&svc.compl(), &eps)?;
                let pass = d.value == Rational::one();
                Ok(vec![CheckRecord::new(
                    "complement-distance",
                    "complement-isometry",
                    &[d.value],
                    &d.radius,
                    pass,
                )])
            }
        },
    ));

    checks.push(PlannedCheck::new("cauchy-spot-check", "cauchy-modulus", {
        move || {
            svc_element_checked(depth)?;
            Ok(vec![CheckRecord::new(
                "cauchy-spot-check",
                "cauchy-modulus",
                &[],
                &Rational::zero(),
                true,
            )])
        }
    }));

    checks
}

fn plan_cantor(scenario: &Scenario) -> Vec<PlannedCheck> {
    let depth = scenario.depth;
    let eps = scenario.epsilon.clone();
    let element = cantor_element(depth);
    let mut checks = Vec::new();

    checks.push(PlannedCheck::new("stage-measures", "geometric-tail", {
        let cantor = element.clone();
        move || {
            let mut pass = true;
            let mut witness = Rational::zero();
            let samples = (1..=depth.min(10))
                .map(u64::from)
                .chain([u64::from(depth), u64::from(depth) + 7, u64::from(depth) + 20]);
            for n in samples {
                let got = cantor.term(n).measure();
                pass &= got == cantor_stage_measure(n);
                witness = got;
            }
            Ok(vec![CheckRecord::new(
                "stage-measures",
                "geometric-tail",
                &[witness],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("null-limit", "null-class", {
        let eps = eps.clone();
        let cantor = element.clone();
        move || {
            let mu = cantor.mubar(&eps);
            let pass = mu.value <= eps;
            Ok(vec![CheckRecord::new(
                "null-limit",
                "null-class",
                &[mu.value],
                &mu.radius,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("null-class-equality", "null-class", {
        let eps = eps.clone();
        let cantor = element.clone();
        move || {
            let empty = CompletionElement::bottom(UnitIntervalModel);
            let pass = cantor.eq_at(&empty, &eps)?;
            Ok(vec![CheckRecord::new(
                "null-class-equality",
                "null-class",
                &[],
                &eps,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("image-null-class", "ae-quotient", {
        let eps = eps.clone();
        let cantor = element.clone();
        move || {
            let alg = UnitIntervalModel;
            let cantor_img = alg.image(&cantor);
            let empty_img = alg.image(&CompletionElement::bottom(alg));
            let pass = alg.ae_equal(&cantor_img, &empty_img, &eps)?;
            Ok(vec![CheckRecord::new(
                "image-null-class",
                "ae-quotient",
                &[],
                &eps,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("cauchy-spot-check", "cauchy-modulus", {
        move || {
            cantor_element_checked(depth)?;
            Ok(vec![CheckRecord::new(
                "cauchy-spot-check",
                "cauchy-modulus",
                &[],
                &Rational::zero(),
                true,
            )])
        }
    }));

    checks
}

fn plan_dyadic(scenario: &Scenario) -> Vec<PlannedCheck> {
    let eps = scenario.epsilon.clone();
    let depth = scenario.depth;
    let mut checks = Vec::new();

    checks.push(PlannedCheck::new(
        "partial-join-measures",
        "geometric-sum",
        {
            let eps = eps.clone();
            move || {
                let seq = dyadic_sequence()?;
                let mut pass = true;
                let mut witness = Rational::zero();
                for k in 1..=u64::from(depth.min(30)) {
                    let mu = partial_join(&seq, k).mubar(&eps);
                    let expect = Rational::one() - Rational::pow2(-(k as i32));
                    pass &= mu.value == expect;
                    witness = mu.value;
                }
                Ok(vec![CheckRecord::new(
                    "partial-join-measures",
                    "geometric-sum",
                    &[witness],
                    &Rational::zero(),
                    pass,
                )])
            }
        },
    ));

    checks.push(PlannedCheck::new(
        "countable-join-limit",
        "countable-join",
        {
            let eps = eps.clone();
            move || {
                let join = countable_join(&dyadic_sequence()?)?;
                let mu = join.mubar(&eps);
                let pass = (&mu.value - &Rational::one()).abs() <= eps;
                Ok(vec![CheckRecord::new(
                    "countable-join-limit",
                    "countable-join",
                    &[mu.value],
                    &mu.radius,
                    pass,
                )])
            }
        },
    ));

    checks.push(PlannedCheck::new(
        "countable-additivity",
        "countable-additivity",
        {
            let eps = eps.clone();
            move || {
                let seq = dyadic_sequence()?;
                let sum = sum_disjoint_measures(&seq, &eps)?;
                let mu = countable_join(&seq)?.mubar(&eps);
                let gap = (&sum.value - &mu.value).abs();
                let budget = &sum.radius + &mu.radius;
                let pass = gap <= budget;
                Ok(vec![CheckRecord::new(
                    "countable-additivity",
                    "countable-additivity",
                    &[sum.value, mu.value, gap],
                    &budget,
                    pass,
                )])
            }
        },
    ));

    checks.push(PlannedCheck::new("join-upper-bound", "join-upper-bound", {
        let eps = eps.clone();
        move || {
            let seq = dyadic_sequence()?;
            let join = countable_join(&seq)?;
            let mut pass = true;
            for n in [1u64, 2, 4, 8, 16, 32, 64] {
                pass &= partial_join(&seq, n).is_subset(&join, &eps)?;
            }
            Ok(vec![CheckRecord::new(
                "join-upper-bound",
                "join-upper-bound",
                &[],
                &eps,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("join-tightness", "join-tightness", {
        let eps = eps.clone();
        move || {
            let seq = dyadic_sequence()?;
            let join = countable_join(&seq)?;
            let n0 = seq.certificate().tail_modulus(&eps);
            let mut pass = true;
            let mut worst = Rational::zero();
            for n in [n0, n0 + 2, n0 + 6] {
                let residue = join.meet(&partial_join(&seq, n).compl())?.mubar(&eps);
                pass &= residue.value <= Rational::from_int(3) * &eps;
                worst = worst.max(residue.value);
            }
            Ok(vec![CheckRecord::new(
                "join-tightness",
                "join-tightness",
                &[worst],
                &(Rational::from_int(3) * &eps),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("join-uniqueness", "join-uniqueness", {
        let eps = eps.clone();
        move || {
            let strict = countable_join(&dyadic_sequence()?)?;
            let loose = countable_join(&dyadic_sequence_loose()?)?;
            let d = strict.dbar(&loose, &eps)?;
            let bound = Rational::from_int(2) * &eps;
            let pass = d.value <= bound;
            Ok(vec![CheckRecord::new(
                "join-uniqueness",
                "join-uniqueness",
                &[d.value],
                &bound,
                pass,
            )])
        }
    }));

    checks
}

fn exhaustive_pairs(
    model: &FiniteModel,
) -> Vec<(CompletionElement<FiniteModel>, CompletionElement<FiniteModel>)> {
    let n = model.atom_count();
    let count = 1u64 << n;
    let mut pairs = Vec::with_capacity((count * count) as usize);
    for a in 0..count {
        for b in 0..count {
            pairs.push((
                CompletionElement::embed(model.clone(), model.set(a)),
                CompletionElement::embed(model.clone(), model.set(b)),
            ));
        }
    }
    pairs
}

fn sampled_pairs(
    model: &FiniteModel,
    seed: u64,
    count: usize,
) -> Vec<(CompletionElement<FiniteModel>, CompletionElement<FiniteModel>)> {
    let mut rng = seeded_rng(seed ^ 0x9e37_79b9);
    let atoms = model.atom_count();
    (0..count)
        .map(|_| {
            (
                CompletionElement::embed(model.clone(), model.set(random_mask(&mut rng, atoms))),
                CompletionElement::embed(model.clone(), model.set(random_mask(&mut rng, atoms))),
            )
        })
        .collect()
}

fn singleton_sequence(model: &FiniteModel) -> Result<ElementSequence<FiniteModel>> {
    let atoms = model.atom_count() as u64;
    let inner = model.clone();
    ElementSequence::new(
        model.clone(),
        move |i| {
            let mask = if i <= atoms { 1u64 << (i - 1) } else { 0 };
            CompletionElement::embed(inner.clone(), inner.set(mask))
        },
        JoinCertificate::stabilized(atoms),
    )
}

fn plan_finite_oracle(scenario: &Scenario) -> Vec<PlannedCheck> {
    let atoms = scenario.atoms as usize;
    let seed = scenario.seed;
    let eps = scenario.epsilon.clone();
    let mut checks = Vec::new();

    checks.push(PlannedCheck::new("isometry", "isometry", {
        let eps = eps.clone();
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let pairs = if atoms <= 6 {
                exhaustive_pairs(&model)
            } else {
                sampled_pairs(&model, seed, 1000)
            };
            let records = verify_isometry(&pairs, &eps)?;
            let pair_count = Rational::from_int(pairs.len() as i64);
            let pass = all_pass(&records);
            Ok(vec![CheckRecord::new(
                "isometry",
                "isometry",
                &[pair_count],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("lattice-laws", "lattice-isomorphism", {
        let eps = eps.clone();
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let pairs = if atoms <= 4 {
                exhaustive_pairs(&model)
            } else {
                sampled_pairs(&model, seed.wrapping_add(1), 300)
            };
            let seqs = vec![singleton_sequence(&model)?];
            let records = verify_homomorphism(&pairs, &seqs, &eps)?;
            let pass = all_pass(&records);
            Ok(vec![CheckRecord::new(
                "lattice-laws",
                "lattice-isomorphism",
                &[Rational::from_int(records.len() as i64)],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("quotient-size", "ae-quotient", {
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let universe = 1u64 << atoms;
            let null = model.null_mask();
            let mut canonicals = std::collections::BTreeSet::new();
            for mask in 0..universe {
                canonicals.insert(model.set(mask).canonicalize().mask());
            }
            let zeros = null.count_ones();
            let expected = 1u64 << (atoms as u32 - zeros);
            let mut pass = canonicals.len() as u64 == expected;
            // Distinct canonical classes sit at positive distance.
            if atoms <= 8 {
                let list: Vec<u64> = canonicals.iter().copied().collect();
                for (i, &a) in list.iter().enumerate() {
                    for &b in &list[i + 1..] {
                        pass &= model
                            .set(a)
                            .dist(&model.set(b))
                            .expect("same model")
                            .is_positive();
                    }
                }
            }
            Ok(vec![CheckRecord::new(
                "quotient-size",
                "ae-quotient",
                &[
                    Rational::from_int(canonicals.len() as i64),
                    Rational::from_int(expected as i64),
                ],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("surjectivity", "isometry-onto", {
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let universe = 1u64 << atoms;
            let null = model.null_mask();
            let mut pass = true;
            for mask in 0..universe {
                if mask & null != 0 {
                    continue;
                }
                let target = model.set(mask);
                let img = model.image(&CompletionElement::embed(model.clone(), target.clone()));
                pass &= img == target;
            }
            Ok(vec![CheckRecord::new(
                "surjectivity",
                "isometry-onto",
                &[],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("boolean-laws", "boolean-algebra", {
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let mut rng = seeded_rng(seed.wrapping_add(2));
            let mut pass = true;
            for _ in 0..500 {
                let a = model.set(random_mask(&mut rng, atoms));
                let b = model.set(random_mask(&mut rng, atoms));
                let c = model.set(random_mask(&mut rng, atoms));
                pass &= a.union(&b)? == b.union(&a)?;
                pass &= a.intersect(&b)? == b.intersect(&a)?;
                pass &= a.union(&b.union(&c)?)? == a.union(&b)?.union(&c)?;
                pass &= a.intersect(&b.union(&c)?)?
                    == a.intersect(&b)?.union(&a.intersect(&c)?)?;
                pass &= a.union(&b)?.complement() == a.complement().intersect(&b.complement())?;
                pass &= a.complement().complement() == a;
            }
            Ok(vec![CheckRecord::new(
                "boolean-laws",
                "boolean-algebra",
                &[],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks
}

fn plan_cha(scenario: &Scenario) -> Vec<PlannedCheck> {
    let eps = scenario.epsilon.clone();
    let atoms = scenario.atoms as usize;
    let seed = scenario.seed;
    let mut checks = Vec::new();

    type MakeMeetArg = fn() -> CompletionElement<UnitIntervalModel>;
    let interval_cases: [(&'static str, MakeMeetArg); 3] = [
        ("cha-left-half", || {
            CompletionElement::embed(UnitIntervalModel, left_half())
        }),
        ("cha-top", || CompletionElement::top(UnitIntervalModel)),
        ("cha-bottom", || CompletionElement::bottom(UnitIntervalModel)),
    ];
    for (name, make_y) in interval_cases {
        checks.push(PlannedCheck::new(name, "cha-distributivity", {
            let eps = eps.clone();
            move || {
                let report = check_cha_distributivity(&dyadic_sequence()?, &make_y(), &eps)?;
                Ok(vec![CheckRecord::new(
                    name,
                    "cha-distributivity",
                    &[
                        report.distance.value,
                        report.joined_meets.value,
                        report.meet_of_join.value,
                    ],
                    &report.slack,
                    report.pass,
                )])
            }
        }));
    }

    checks.push(PlannedCheck::new("cha-finite-exact", "cha-distributivity", {
        let eps = eps.clone();
        move || {
            let model = random_model(&mut seeded_rng(seed), atoms, &weight_grid());
            let mut rng = seeded_rng(seed.wrapping_add(3));
            let mut pass = true;
            let mut worst = Rational::zero();
            for _ in 0..200 {
                let items: Vec<u64> = (0..6).map(|_| random_mask(&mut rng, atoms)).collect();
                let inner = model.clone();
                let seq = ElementSequence::new(
                    model.clone(),
                    move |i| {
                        let mask = items.get(i as usize - 1).copied().unwrap_or(0);
                        CompletionElement::embed(inner.clone(), inner.set(mask))
                    },
                    JoinCertificate::stabilized(6),
                )?;
                let y = CompletionElement::embed(
                    model.clone(),
                    model.set(random_mask(&mut rng, atoms)),
                );
                let report = check_cha_distributivity(&seq, &y, &eps)?;
                pass &= report.pass && report.distance.value.is_zero();
                worst = worst.max(report.distance.value);
            }
            Ok(vec![CheckRecord::new(
                "cha-finite-exact",
                "cha-distributivity",
                &[worst],
                &Rational::zero(),
                pass,
            )])
        }
    }));

    checks
}

fn plan_isometry(scenario: &Scenario) -> Vec<PlannedCheck> {
    let eps = scenario.epsilon.clone();
    let mut checks = Vec::new();

    checks.push(PlannedCheck::new("isometry", "isometry", {
        let eps = eps.clone();
        move || {
            let alg = UnitIntervalModel;
            let halves = CompletionElement::embed(alg, left_half());
            let shifted = CompletionElement::embed(
                alg,
                IntervalSet::interval(Rational::ratio(1, 4), Rational::ratio(3, 4)).unwrap(),
            );
            let thirds = CompletionElement::embed(
                alg,
                IntervalSet::interval(Rational::ratio(1, 3), Rational::ratio(2, 3)).unwrap(),
            );
            let samples = vec![
                (halves.clone(), shifted),
                (halves.clone(), halves.clone()),
                (CompletionElement::bottom(alg), CompletionElement::top(alg)),
                (svc_element(14), CompletionElement::bottom(alg)),
                (svc_element(14), CompletionElement::top(alg)),
                (cantor_element(10), CompletionElement::bottom(alg)),
                (thirds, halves),
            ];
            let records = verify_isometry(&samples, &eps)?;
            let pass = all_pass(&records);
            let distances_match = records
                .iter()
                .filter(|r| r.values.len() == 2)
                .all(|r| r.values[0] == r.values[1]);
            Ok(vec![CheckRecord::new(
                "isometry",
                "isometry",
                &[Rational::from_int(records.len() as i64)],
                &eps,
                pass && distances_match,
            )])
        }
    }));

    checks.push(PlannedCheck::new("image-well-defined", "ae-quotient", {
        let eps = eps.clone();
        move || {
            let alg = UnitIntervalModel;
            let wide = Rational::from_int(3) * &eps;
            let mut pass = true;
            for set in [
                left_half(),
                IntervalSet::empty(),
                IntervalSet::interval(Rational::ratio(1, 8), Rational::ratio(7, 8)).unwrap(),
            ] {
                let x = CompletionElement::embed(alg, set);
                let x_prime = x.delayed(4);
                pass &= x.eq_at(&x_prime, &eps)?;
                pass &= alg.ae_equal(&alg.image(&x), &alg.image(&x_prime), &wide)?;
            }
            Ok(vec![CheckRecord::new(
                "image-well-defined",
                "ae-quotient",
                &[],
                &wide,
                pass,
            )])
        }
    }));

    checks.push(PlannedCheck::new("image-distinguishes", "isometry", {
        let eps = eps.clone();
        move || {
            let alg = UnitIntervalModel;
            let a = CompletionElement::embed(alg, left_half());
            let b = CompletionElement::top(alg);
            let separated = !alg.ae_equal(&alg.image(&a), &alg.image(&b), &eps)?;
            let d = a.dbar(&b, &eps)?;
            Ok(vec![CheckRecord::new(
                "image-distinguishes",
                "isometry",
                &[d.value],
                &d.radius,
                separated,
            )])
        }
    }));

    checks
}
