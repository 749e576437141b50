//! Countable joins through convergence certificates: the dyadic blocks
//! `[1-2^(1-i), 1-2^-i)` are pairwise disjoint, their partial joins reach
//! measure `1 - 2^-k`, and the certified countable join fills the whole
//! interval with countably additive measure.
//!
//! ```bash
//! cargo run -p measure-completion --example countable_join
//! ```

use measure_completion::{
    countable_join, dyadic_block, dyadic_sequence, dyadic_sequence_loose, partial_join,
    sum_disjoint_measures, JoinCertificate, Rational,
};

fn main() -> measure_completion::Result<()> {
    for i in 1..=4u64 {
        println!("block {i}: {}", dyadic_block(i));
    }

    let eps = Rational::new(1, 10_000);
    let seq = dyadic_sequence()?;
    for k in [1u64, 4, 10] {
        let mu = partial_join(&seq, k).mubar(&eps);
        println!("mubar(V_{k:<2}) = {}", mu.value);
    }

    let join = countable_join(&seq)?;
    println!("mubar(join)  = {}", join.mubar(&eps));

    // Countable additivity: the certified tail sum matches the join.
    let sum = sum_disjoint_measures(&seq, &eps)?;
    println!("sum of item measures = {sum}");

    // Every partial join sits below the countable join, and the residual
    // mass above V_n dies off.
    println!(
        "V_4 ≤ join: {}",
        partial_join(&seq, 4).is_subset(&join, &eps)?
    );
    let residue = join.meet(&partial_join(&seq, 20).compl())?.mubar(&eps);
    println!("mubar(join ∧ V_20ᶜ) = {residue}");

    // The join does not depend on which valid certificate was supplied.
    let loose = countable_join(&dyadic_sequence_loose()?)?;
    let gap = join.dbar(&loose, &eps)?;
    println!("distance between certificates' joins = {gap}");

    // A certificate that understates the tail is rejected by sampling.
    let broken = dyadic_sequence()?.with_certificate(JoinCertificate::stabilized(1));
    println!("stabilized(1) certificate → {}", countable_join(&broken).unwrap_err());
    Ok(())
}
