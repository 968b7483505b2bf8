//! A small verification sweep, printed one line per failing or
//! discrepant check.

use edgeideal::verify::{run_suite, Ranges, Status, Suite};

fn main() {
    let ranges = Ranges {
        antipath_n_max: 7,
        lexseg_n_max: 5,
        chordal_n_max: 5,
        trials: 500,
        ..Ranges::default()
    };
    let report = run_suite(Suite::All, &ranges);
    for check in report.checks.iter().filter(|c| c.status != Status::Pass) {
        println!("{check}");
    }
    println!(
        "{} passed, {} failed, {} documented discrepancies",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::DocumentedDiscrepancy)
    );
}
