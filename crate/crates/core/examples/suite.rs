//! The whole corpus against its expected verdicts, as `ftc suite` runs it.

use ftc_core::cli::suite;
use ftc_core::Error;

fn main() -> Result<(), Error> {
    let report = suite(0, 1, 200, 12)?;
    for e in report.entries.iter().filter(|e| e.status == "violated") {
        let at = e.witness.as_ref().map(|w| w.inputs.iter().map(|v| format!("{} = {}", v.name, v.value)).collect::<Vec<_>>().join(", "));
        println!("{:<22} {:<20} violated at {} (expected: {})", e.instance, e.law, at.unwrap_or_default(), e.expected);
    }
    println!(
        "{} entries, {} matched, {} mismatched",
        report.summary.total, report.summary.matched, report.summary.mismatched
    );
    Ok(())
}
