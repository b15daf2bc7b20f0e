//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use hwv_core::selftest::criteria;

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, check) in criteria().iter().enumerate() {
        let start = Instant::now();
        let outcome = (check.run)();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {}: {detail} ({secs:.1}s)", i + 1, check.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {}: {detail} ({secs:.1}s)", i + 1, check.name);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
