//! Runs every seeded property suite and prints its report.

use mpc_hull::suites;

fn main() {
    let mut failed = 0;
    for name in suites::SUITE_NAMES {
        let start = std::time::Instant::now();
        let report = suites::run_suite(name).expect("known suite");
        print!("{report}");
        eprintln!("  ({name} took {:.1}s)", start.elapsed().as_secs_f64());
        failed += report.failures.len();
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
