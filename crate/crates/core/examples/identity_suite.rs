//! Runs a randomized identity suite and prints its report.

use hyclif::suite::run_suite;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "hodge".into());
    let report = run_suite(&name, 2, 50, 7)?;
    println!("{report}");
    Ok(())
}
