//! The two ground algebras: interval-set literals with exact set algebra,
//! and a finite weighted powerset.
//!
//! ```bash
//! cargo run -p measure-completion --example ground_algebras
//! ```

use measure_completion::{parse_setexpr, FiniteModel, Rational};

fn main() -> measure_completion::Result<()> {
    // Interval sets parse from the literal grammar and normalize on the way
    // in: overlapping and touching parts merge.
    let a = parse_setexpr("[0,1/2) U [1/4,3/4)")?;
    let b = parse_setexpr("[1/3,2/3)")?;
    println!("a                = {a}");
    println!("b                = {b}");
    println!("measure(a)       = {}", a.measure());
    println!("a ∪ b            = {}", a.union(&b));
    println!("a ∩ b            = {}", a.intersect(&b));
    println!("bᶜ               = {}", b.complement());
    println!("a △ b            = {}", a.symm_diff(&b));
    println!("d(a,b)           = {}", a.dist(&b));
    println!("d(a,aᶜ)          = {}", a.dist(&a.complement()));

    // Malformed literals are rejected, not clamped.
    let bad = parse_setexpr("[1/2,1/3)");
    println!("parse [1/2,1/3)  → {}", bad.unwrap_err());

    // The finite model: a measure given by one weight per atom, with sets
    // as membership masks.
    let model = FiniteModel::new(vec![
        Rational::ratio(1, 2),
        Rational::ratio(1, 4),
        Rational::ratio(1, 4),
    ])?;
    let s = model.set_of([0, 2]);
    let t = model.set_of([1, 2]);
    println!("\nfinite model weights = (1/2, 1/4, 1/4)");
    println!("mu({s})        = {}", s.measure());
    println!("mu({t})        = {}", t.measure());
    println!("d({s}, {t}) = {}", s.dist(&t)?);
    println!("{s} ∩ {t}   = {}", s.intersect(&t)?);
    Ok(())
}
