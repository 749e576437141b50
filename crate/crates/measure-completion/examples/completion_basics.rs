//! Points of the completion: Cauchy sequences with explicit moduli,
//! approximate distance and measure queries, and the one-sided semantics
//! of the tolerance-indexed predicates.
//!
//! ```bash
//! cargo run -p measure-completion --example completion_basics
//! ```

use measure_completion::{
    parse_setexpr, CauchyCheck, CompletionElement, IntervalSet, Rational, UnitIntervalModel,
};

fn main() -> measure_completion::Result<()> {
    let alg = UnitIntervalModel;
    let eps = Rational::ratio(1, 1000);

    // Embedded sets are constant sequences; their queries are exact.
    let x = CompletionElement::embed(alg, parse_setexpr("[0,1/2)")?);
    let y = CompletionElement::embed(alg, parse_setexpr("[1/4,3/4)")?);
    let d = x.dbar(&y, &eps)?;
    println!("dbar(x, y)         = {d}");
    println!("mubar(x)           = {}", x.mubar(&eps));

    // A genuine sequence: nested dyadic shrinking towards a null class,
    // with the modulus 2^-n.
    let shrinking = CompletionElement::from_stages(
        alg,
        |n| {
            let hi = Rational::pow2(-i32::try_from(n).unwrap());
            IntervalSet::interval(Rational::zero(), hi).unwrap()
        },
        |eps| {
            let mut n = 1;
            let mut tail = Rational::ratio(1, 2);
            while &tail > eps {
                n += 1;
                tail = tail.half();
            }
            n
        },
        &CauchyCheck::default(),
    )?;
    println!("mubar(shrinking)   = {}", shrinking.mubar(&eps));
    let empty = CompletionElement::bottom(alg);
    println!(
        "eq_at(shrinking,∅) = {}",
        shrinking.eq_at(&empty, &eps)?
    );

    // A sequence that is not Cauchy is rejected by the spot-check.
    let left = parse_setexpr("[0,1/2)")?;
    let right = parse_setexpr("[1/2,1)")?;
    let rejected = CompletionElement::from_stages(
        alg,
        move |n| if n % 2 == 0 { left.clone() } else { right.clone() },
        |_| 1,
        &CauchyCheck::default(),
    );
    println!("alternating seq    → {}", rejected.unwrap_err());

    // Lattice operations with derived moduli.
    let joined = x.join(&shrinking)?;
    println!("mubar(x ∨ shrink)  = {}", joined.mubar(&eps));
    let met = x.meet(&y)?;
    println!("mubar(x ∧ y)       = {}", met.mubar(&eps));
    println!("is_subset(x∧y, x)  = {}", met.is_subset(&x, &eps)?);
    println!("is_disjoint(x, xᶜ) = {}", x.is_disjoint(&x.compl(), &eps)?);

    // The same class under a different representative: distances vanish.
    let x_again = x.delayed(5);
    println!("dbar(x, delayed x) = {}", x.dbar(&x_again, &eps)?);
    Ok(())
}
