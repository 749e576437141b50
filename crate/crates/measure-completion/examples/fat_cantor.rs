//! The fat Cantor element: a completion point with limit measure 1/2 that
//! has no representative in the ground algebra.
//!
//! Stage `n` keeps `2^n` intervals; the removed middles shrink fast enough
//! that half the mass survives. The stage measures follow the closed form
//! `1/2 + 2^-(n+1)` exactly.
//!
//! ```bash
//! cargo run -p measure-completion --example fat_cantor
//! ```

use measure_completion::{
    parse_setexpr, svc_element, svc_stage, svc_stage_measure, CompletionElement, Rational,
    UnitIntervalModel,
};

fn main() -> measure_completion::Result<()> {
    for n in 0..=4u32 {
        let stage = svc_stage(n);
        println!(
            "stage {n}: {:>2} parts, measure {}",
            stage.parts().len(),
            stage.measure()
        );
        if n <= 2 {
            println!("         {stage}");
        }
    }

    let svc = svc_element(16);
    for eps in [Rational::ratio(1, 100), Rational::new(1, 1_000_000)] {
        let mu = svc.mubar(&eps);
        println!("mubar at eps {}: {}", eps, mu);
    }

    // Deep stage measures keep the closed form even past the cap.
    for n in [10u64, 16, 25, 40] {
        assert_eq!(svc.term(n).measure(), svc_stage_measure(n));
    }
    println!("stage measures match 1/2 + 2^-(n+1) through depth 40");

    // The construction is symmetric about 1/2, so meeting with the left
    // half yields a quarter of the mass.
    let eps = Rational::ratio(1, 10_000);
    let left = CompletionElement::embed(UnitIntervalModel, parse_setexpr("[0,1/2)")?);
    let quarter = svc.meet(&left)?.mubar(&eps);
    println!("mubar(svc ∧ [0,1/2)) = {quarter}");

    // Every stage is a distance 1 from its complement.
    let d = svc.dbar(&svc.compl(), &eps)?;
    println!("dbar(svc, svcᶜ)      = {d}");
    Ok(())
}
