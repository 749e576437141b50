//! Driving the scenario harness from code: run a named scenario, inspect
//! the structured report, and serialize it to the stable JSON schema.
//! The `measure-completion` binary exposes the same scenarios on the
//! command line.
//!
//! ```bash
//! cargo run -p measure-completion --example scenario_reports
//! ```

use measure_completion::{run, Rational, Scenario, ScenarioName};

fn main() -> measure_completion::Result<()> {
    let mut scenario = Scenario::new(ScenarioName::DyadicJoin);
    scenario.epsilon = Rational::ratio(1, 1000);
    let report = run(&scenario)?;

    println!("checks:");
    for check in &report.checks {
        println!(
            "  {:<24} pass={} values={:?} radius={}",
            check.name, check.pass, check.values, check.radius
        );
    }
    println!("overall pass = {}, wall time = {} ms", report.pass, report.ms);

    println!("\nJSON form:\n{}", report.to_json());
    Ok(())
}
