//! Countable joins distribute over binary meets: the completion lattice is
//! a complete Heyting algebra of countable type. The comparison runs at
//! tolerance on the interval model and exactly on the finite model.
//!
//! ```bash
//! cargo run -p measure-completion --example cha_distributivity
//! ```

use measure_completion::{
    check_cha_distributivity, dyadic_sequence, parse_setexpr, CompletionElement, ElementSequence,
    FiniteModel, JoinCertificate, Rational, UnitIntervalModel,
};

fn main() -> measure_completion::Result<()> {
    let eps = Rational::new(1, 10_000);

    // Interval model: join of the dyadic blocks, met with the left half.
    let y = CompletionElement::embed(UnitIntervalModel, parse_setexpr("[0,1/2)")?);
    let report = check_cha_distributivity(&dyadic_sequence()?, &y, &eps)?;
    println!("interval model, y = [0,1/2):");
    println!("  mubar(join of meets)  = {}", report.joined_meets);
    println!("  mubar(meet with join) = {}", report.meet_of_join);
    println!("  distance              = {}", report.distance);
    println!("  allowed slack         = {}", report.slack);
    println!("  pass                  = {}", report.pass);

    // Finite model: sequences stabilize, so both sides agree exactly.
    let model = FiniteModel::new(vec![
        Rational::ratio(1, 8),
        Rational::ratio(1, 4),
        Rational::ratio(1, 8),
        Rational::ratio(1, 2),
    ])?;
    let inner = model.clone();
    let seq = ElementSequence::new(
        model.clone(),
        move |i| {
            let mask = match i {
                1 => 0b0011,
                2 => 0b0110,
                3 => 0b1000,
                _ => 0,
            };
            CompletionElement::embed(inner.clone(), inner.set(mask))
        },
        JoinCertificate::stabilized(3),
    )?;
    let y = CompletionElement::embed(model.clone(), model.set(0b1010));
    let exact = check_cha_distributivity(&seq, &y, &eps)?;
    println!("\nfinite model, items {{0,1}},{{1,2}},{{3}}, y = {{1,3}}:");
    println!("  mubar(join of meets)  = {}", exact.joined_meets.value);
    println!("  mubar(meet with join) = {}", exact.meet_of_join.value);
    println!("  distance              = {}", exact.distance.value);
    println!("  pass                  = {}", exact.pass);
    Ok(())
}
