//! The middle-thirds Cantor stages converge to the class of the empty set:
//! the measures `(2/3)^n` vanish, so in the completion the limit is the
//! bottom element even though every stage is nonempty, and its image on
//! the extension side is almost-everywhere equal to the image of ∅.
//!
//! ```bash
//! cargo run -p measure-completion --example null_class
//! ```

use measure_completion::{
    cantor_element, cantor_stage, cantor_stage_measure, CompletionElement, ExtensionBridge,
    Rational, UnitIntervalModel,
};

fn main() -> measure_completion::Result<()> {
    for n in 0..=4u32 {
        let stage = cantor_stage(n);
        println!(
            "stage {n}: {:>2} parts, measure {}",
            stage.parts().len(),
            stage.measure()
        );
    }

    let cantor = cantor_element(12);
    for n in [12u64, 20, 36] {
        assert_eq!(cantor.term(n).measure(), cantor_stage_measure(n));
    }
    println!("stage measures match (2/3)^n through depth 36");

    let eps = Rational::new(1, 1_000_000);
    let mu = cantor.mubar(&eps);
    println!("mubar(cantor) = {mu}");

    let empty = CompletionElement::bottom(UnitIntervalModel);
    println!("eq_at(cantor, ∅) at 1/10^6: {}", cantor.eq_at(&empty, &eps)?);

    // Through the map onto the extension side the class collapses to the
    // null image.
    let alg = UnitIntervalModel;
    let same = alg.ae_equal(&alg.image(&cantor), &alg.image(&empty), &eps)?;
    println!("ae_equal(F(cantor), F(∅)): {same}");

    // By contrast the fat Cantor element stays far from every embedded set
    // of measure 1/2 - it is a genuinely new point.
    let svc = measure_completion::svc_element(12);
    let d = svc.dbar(&empty, &eps)?;
    println!("dbar(fat cantor, ∅) = {d}");
    Ok(())
}
