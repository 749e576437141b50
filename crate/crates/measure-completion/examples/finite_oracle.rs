//! The finite model as a brute-force oracle: the map onto the extension
//! side (stabilized representative with null atoms dropped) is checked to
//! be an isometry and to preserve join, meet, complement, and countable
//! join, exhaustively and with exact equality.
//!
//! ```bash
//! cargo run -p measure-completion --example finite_oracle
//! ```

use measure_completion::{
    all_pass, verify_homomorphism, verify_isometry, CompletionElement, ElementSequence,
    ExtensionBridge, FiniteModel, JoinCertificate, Rational,
};

fn main() -> measure_completion::Result<()> {
    // One atom carries weight zero, so distinct masks can share a class.
    let model = FiniteModel::new(vec![
        Rational::ratio(1, 2),
        Rational::zero(),
        Rational::ratio(1, 4),
        Rational::ratio(1, 4),
    ])?;
    println!("weights = (1/2, 0, 1/4, 1/4), null atoms mask = {:#06b}", model.null_mask());

    // The image of a set drops its null atoms: {0,1} and {0} are the same
    // class.
    let with_null = CompletionElement::embed(model.clone(), model.set(0b0011));
    let img = model.image(&with_null);
    println!("image of {{0,1}} = {img}");

    // Quotient size: with one null atom among four, 2^3 classes remain.
    let mut classes = std::collections::BTreeSet::new();
    for mask in 0..16u64 {
        classes.insert(model.set(mask).canonicalize().mask());
    }
    println!("distinct classes = {} (expected 8)", classes.len());

    // Exhaustive isometry and lattice-law verification over all 256 pairs.
    let eps = Rational::ratio(1, 100);
    let pairs: Vec<_> = (0..16u64)
        .flat_map(|a| {
            let model = model.clone();
            (0..16u64).map(move |b| {
                (
                    CompletionElement::embed(model.clone(), model.set(a)),
                    CompletionElement::embed(model.clone(), model.set(b)),
                )
            })
        })
        .collect();
    let iso = verify_isometry(&pairs, &eps)?;
    println!("isometry: {} pairs, all pass = {}", iso.len(), all_pass(&iso));

    let inner = model.clone();
    let singletons = ElementSequence::new(
        model.clone(),
        move |i| {
            let mask = if i <= 4 { 1u64 << (i - 1) } else { 0 };
            CompletionElement::embed(inner.clone(), inner.set(mask))
        },
        JoinCertificate::stabilized(4),
    )?;
    let hom = verify_homomorphism(&pairs, &[singletons], &eps)?;
    println!(
        "lattice laws: {} records, all pass = {}",
        hom.len(),
        all_pass(&hom)
    );

    // A couple of records, showing the measured distances are exactly zero.
    for record in hom.iter().take(3) {
        println!("  {} → values {:?}", record.name, record.values);
    }
    Ok(())
}
