//! Runs every verification suite and prints the combined report.

use nestcount::verify::{self, Report, Suite};

fn main() -> nestcount::Result<()> {
    let mut report = Report::default();
    for (suite, m, terms) in [
        (Suite::Table1, 3, 15),
        (Suite::CrossEngine, 3, 10),
        (Suite::Oracle, 2, 9),
        (Suite::Catalan, 1, 20),
        (Suite::Labels, 2, 8),
        (Suite::Equidistribution, 3, 9),
        (Suite::BellPrefix, 4, 10),
        (Suite::M2Formula, 2, 10),
    ] {
        report.extend(verify::run(suite, m, terms)?);
    }
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 })
}
