use std::process::ExitCode;

use clap::Parser;

use measure_completion::{run_with, Report, Scenario, ScenarioName};

/// Runs named constructions and verification suites over exact measure
/// algebras and emits machine-readable reports.
#[derive(Parser)]
#[command(name = "measure-completion", version)]
struct Args {
    /// Scenario: svc | cantor | dyadic-join | finite-oracle | cha-check | isometry
    #[arg(long)]
    scenario: String,

    /// Stage depth cap for the interval constructions
    #[arg(long)]
    depth: Option<u32>,

    /// Atom count for the finite oracle model (1..=16)
    #[arg(long)]
    atoms: Option<u32>,

    /// Seed for the randomized scenarios
    #[arg(long)]
    seed: Option<u64>,

    /// Tolerance as an exact rational, e.g. 1/1000000
    #[arg(long)]
    eps: Option<String>,

    /// Write the JSON report to this path; '-' writes it to standard output
    #[arg(long)]
    json: Option<String>,

    /// Fan independent checks out across threads
    #[arg(long)]
    parallel: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn execute(args: Args) -> Result<bool, Box<dyn std::error::Error>> {
    let name: ScenarioName = args.scenario.parse()?;
    let mut scenario = Scenario::new(name);
    if let Some(depth) = args.depth {
        scenario.depth = depth;
    }
    if let Some(atoms) = args.atoms {
        scenario.atoms = atoms;
    }
    if let Some(seed) = args.seed {
        scenario.seed = seed;
    }
    if let Some(eps) = &args.eps {
        scenario.epsilon = eps.parse()?;
    }

    let report = run_with(&scenario, args.parallel)?;
    match args.json.as_deref() {
        Some("-") => println!("{}", report.to_json()),
        Some(path) => {
            std::fs::write(path, report.to_json() + "\n")?;
            print_summary(&report);
        }
        None => print_summary(&report),
    }
    Ok(report.pass)
}

fn print_summary(report: &Report) {
    let s = &report.scenario;
    println!(
        "scenario {} (depth {}, atoms {}, seed {}, eps {})",
        s.name, s.depth, s.atoms, s.seed, s.epsilon
    );
    for check in &report.checks {
        let verdict = if check.pass { "ok  " } else { "FAIL" };
        if check.values.is_empty() {
            println!("  {verdict} {}", check.name);
        } else {
            println!("  {verdict} {}  [{}]", check.name, check.values.join(", "));
        }
    }
    println!(
        "overall: {} ({} checks, {} ms)",
        if report.pass { "pass" } else { "fail" },
        report.checks.len(),
        report.ms
    );
}
