//! Property suites for the algebra laws, the pseudometric, and the
//! tolerance-indexed completion invariants. Every assertion is an exact
//! rational comparison; the tolerance checks use the named slack budgets.

use proptest::prelude::*;

use measure_completion::{
    CompletionElement, FiniteModel, IntervalSet, Rational, UnitIntervalModel,
    COMPL_WELLDEF_SLACK, DISJOINT_ADDITIVITY_SLACK, JOIN_WELLDEF_SLACK, SUBADDITIVITY_SLACK,
    SYMMDIFF_IDENTITY_SLACK,
};

fn rational_endpoint() -> impl Strategy<Value = Rational> {
    (0i64..=48, 1i64..=48).prop_map(|(num, den)| {
        let den = den.max(1);
        Rational::ratio(num.min(den), den)
    })
}

fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((rational_endpoint(), rational_endpoint()), 0..6).prop_map(|pairs| {
        let valid: Vec<(Rational, Rational)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        IntervalSet::from_endpoints(valid).expect("ordered endpoints in [0,1]")
    })
}

fn weights(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(0i64..=8, n).prop_map(|ws| {
        ws.into_iter().map(|w| Rational::ratio(w, 8)).collect()
    })
}

fn finite_case() -> impl Strategy<Value = (FiniteModel, u64, u64, u64)> {
    (1usize..=8)
        .prop_flat_map(|n| (weights(n), any::<u64>(), any::<u64>(), any::<u64>()))
        .prop_map(|(ws, a, b, c)| {
            let model = FiniteModel::new(ws).unwrap();
            let universe = model.universe_mask();
            (model, a & universe, b & universe, c & universe)
        })
}

proptest! {
    #[test]
    fn pseudometric_laws_on_interval_sets(
        a in interval_set(),
        b in interval_set(),
        c in interval_set(),
    ) {
        prop_assert_eq!(a.dist(&a), Rational::zero());
        prop_assert_eq!(a.dist(&b), b.dist(&a));
        prop_assert!(a.dist(&c) <= a.dist(&b) + b.dist(&c));
    }

    #[test]
    fn measure_is_lipschitz_for_the_pseudometric(a in interval_set(), b in interval_set()) {
        prop_assert!((a.measure() - b.measure()).abs() <= a.dist(&b));
    }

    #[test]
    fn union_distance_bound(
        a1 in interval_set(),
        a2 in interval_set(),
        a3 in interval_set(),
        a4 in interval_set(),
    ) {
        let lhs = a1.union(&a2).dist(&a3.union(&a4));
        prop_assert!(lhs <= a1.dist(&a3) + a2.dist(&a4));
    }

    #[test]
    fn complement_is_an_isometry(a in interval_set(), b in interval_set()) {
        prop_assert_eq!(a.complement().dist(&b.complement()), a.dist(&b));
    }

    #[test]
    fn normalization_is_idempotent_and_order_insensitive(a in interval_set()) {
        let renorm = IntervalSet::normalize(a.parts().to_vec());
        prop_assert_eq!(&renorm, &a);
        let mut reversed = a.parts().to_vec();
        reversed.reverse();
        prop_assert_eq!(IntervalSet::normalize(reversed), a);
    }

    #[test]
    fn interval_sets_form_a_boolean_lattice(
        a in interval_set(),
        b in interval_set(),
        c in interval_set(),
    ) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.union(&b.union(&c)), a.union(&b).union(&c));
        prop_assert_eq!(a.intersect(&b.intersect(&c)), a.intersect(&b).intersect(&c));
        prop_assert_eq!(
            a.intersect(&b.union(&c)),
            a.intersect(&b).union(&a.intersect(&c))
        );
        prop_assert_eq!(
            a.union(&b).complement(),
            a.complement().intersect(&b.complement())
        );
        prop_assert_eq!(a.complement().complement(), a.clone());
        // Absorption and modularity of the measure.
        prop_assert_eq!(a.union(&a.intersect(&b)), a.clone());
        prop_assert_eq!(
            a.union(&b).measure() + a.intersect(&b).measure(),
            a.measure() + b.measure()
        );
    }

    #[test]
    fn symm_diff_properties(a in interval_set(), b in interval_set()) {
        prop_assert!(a.symm_diff(&a).is_empty());
        prop_assert_eq!(a.symm_diff(&b), b.symm_diff(&a));
        prop_assert_eq!(
            a.symm_diff(&IntervalSet::empty()),
            a.clone()
        );
        // Independent route through the lattice identities.
        let via_lattice = a
            .intersect(&b.complement())
            .union(&b.intersect(&a.complement()));
        prop_assert_eq!(a.symm_diff(&b), via_lattice);
    }

    #[test]
    fn finite_model_pseudometric_and_laws((model, a, b, c) in finite_case()) {
        let (sa, sb, sc) = (model.set(a), model.set(b), model.set(c));
        prop_assert_eq!(sa.dist(&sa).unwrap(), Rational::zero());
        prop_assert_eq!(sa.dist(&sb).unwrap(), sb.dist(&sa).unwrap());
        prop_assert!(
            sa.dist(&sc).unwrap() <= sa.dist(&sb).unwrap() + sb.dist(&sc).unwrap()
        );
        prop_assert!((sa.measure() - sb.measure()).abs() <= sa.dist(&sb).unwrap());
        prop_assert_eq!(
            sa.complement().dist(&sb.complement()).unwrap(),
            sa.dist(&sb).unwrap()
        );
        prop_assert_eq!(
            sa.union(&sb).unwrap().complement(),
            sa.complement().intersect(&sb.complement()).unwrap()
        );
    }
}

fn embed(s: IntervalSet) -> CompletionElement<UnitIntervalModel> {
    CompletionElement::embed(UnitIntervalModel, s)
}

fn eps4() -> Rational {
    Rational::ratio(1, 10_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Joins, meets, and complements of equivalent representatives land in
    // the same class, within the published slack budgets.
    #[test]
    fn lattice_operations_are_well_defined(
        a in interval_set(),
        b in interval_set(),
        shift in 1u64..6,
    ) {
        let eps = eps4();
        let x = embed(a);
        let y = embed(b);
        let x_alt = x.delayed(shift + 1);
        let y_alt = y.reindexed(shift);
        prop_assert!(x.dbar(&x_alt, &eps).unwrap().value <= eps);
        prop_assert!(y.dbar(&y_alt, &eps).unwrap().value <= eps);

        let join_gap = x.join(&y).unwrap()
            .dbar(&x_alt.join(&y_alt).unwrap(), &eps).unwrap();
        prop_assert!(join_gap.value <= Rational::from_int(JOIN_WELLDEF_SLACK) * &eps);

        let meet_gap = x.meet(&y).unwrap()
            .dbar(&x_alt.meet(&y_alt).unwrap(), &eps).unwrap();
        prop_assert!(meet_gap.value <= Rational::from_int(JOIN_WELLDEF_SLACK) * &eps);

        let compl_gap = x.compl().dbar(&x_alt.compl(), &eps).unwrap();
        prop_assert!(compl_gap.value <= Rational::from_int(COMPL_WELLDEF_SLACK) * &eps);
    }

    #[test]
    fn limit_measure_is_subadditive(a in interval_set(), b in interval_set()) {
        let eps = eps4();
        let x = embed(a);
        let y = embed(b);
        let joined = x.join(&y).unwrap().mubar(&eps);
        let budget = x.mubar(&eps).value + y.mubar(&eps).value
            + Rational::from_int(SUBADDITIVITY_SLACK) * &eps;
        prop_assert!(joined.value <= budget);
    }

    #[test]
    fn limit_measure_adds_on_disjoint_elements(a in interval_set(), b in interval_set()) {
        let eps = eps4();
        let x = embed(a.clone());
        let y = embed(b.intersect(&a.complement()));
        prop_assert!(x.is_disjoint(&y, &eps).unwrap());
        let joined = x.join(&y).unwrap().mubar(&eps);
        let gap = (joined.value - (x.mubar(&eps).value + y.mubar(&eps).value)).abs();
        prop_assert!(gap <= Rational::from_int(DISJOINT_ADDITIVITY_SLACK) * &eps);
    }

    #[test]
    fn distance_is_the_measure_of_the_symmetric_difference(
        a in interval_set(),
        b in interval_set(),
    ) {
        let eps = eps4();
        let x = embed(a);
        let y = embed(b);
        let direct = x.dbar(&y, &eps).unwrap();
        let via_lattice = x.meet(&y.compl()).unwrap()
            .join(&y.meet(&x.compl()).unwrap()).unwrap()
            .mubar(&eps);
        let gap = (direct.value - via_lattice.value).abs();
        prop_assert!(gap <= Rational::from_int(SYMMDIFF_IDENTITY_SLACK) * &eps);
    }

    #[test]
    fn lattice_complement_axioms_at_tolerance(a in interval_set(), b in interval_set()) {
        let eps = eps4();
        let x = embed(a);
        let y = embed(b);

        let overlap = x.meet(&x.compl()).unwrap().mubar(&eps);
        prop_assert_eq!(overlap.value, Rational::zero());

        let cover = x.join(&x.compl()).unwrap().mubar(&eps);
        prop_assert!((cover.value - Rational::one()).abs() <= eps);

        let double = Rational::from_int(2) * &eps;
        if x.is_subset(&y, &eps).unwrap() {
            prop_assert!(y.compl().is_subset(&x.compl(), &double).unwrap());
        }

        let involution = x.compl().compl().dbar(&x, &eps).unwrap();
        prop_assert_eq!(involution.value, Rational::zero());
    }

    #[test]
    fn meet_is_a_lower_bound(a in interval_set(), b in interval_set()) {
        let eps = eps4();
        let x = embed(a);
        let y = embed(b);
        let m = x.meet(&y).unwrap();
        prop_assert!(m.is_subset(&x, &eps).unwrap());
        prop_assert!(m.is_subset(&y, &eps).unwrap());
        prop_assert!(x.is_subset(&x.join(&y).unwrap(), &eps).unwrap());
    }

    // Stage measures along any element form a Cauchy sequence of rationals
    // at the declared rate.
    #[test]
    fn stage_measures_respect_the_modulus(a in interval_set(), shift in 0u64..4) {
        let eps = Rational::ratio(1, 64);
        let x = embed(a).delayed(2);
        let start = x.modulus(&eps) + shift;
        for gap in [1u64, 2, 7] {
            let near = x.term(start).measure();
            let far = x.term(start + gap).measure();
            prop_assert!((near - far).abs() <= eps);
        }
    }
}
