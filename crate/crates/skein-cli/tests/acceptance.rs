//! Prints one PASS/FAIL line per acceptance criterion. Only failures
//! outside the documented deviations make this target fail.

use skein_cli::acceptance::{run_criterion, KNOWN_DEVIATIONS};

fn main() {
    let mut unexpected = Vec::new();
    for id in 1..=10u8 {
        let report = run_criterion(id);
        println!("{}", report.line());
        if !report.passed && !report.known_deviation {
            unexpected.push(id);
        }
    }
    for (id, why) in KNOWN_DEVIATIONS {
        println!("known deviation {id}: {why}");
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
