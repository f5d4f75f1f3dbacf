//! Run the seeded cross-check suites, then show that a planted bug is caught.

use bredim::verify::{self, Fault, Implementations, Scale, Suite};

fn main() {
    let scale = Scale {
        lattices: 100,
        automorphism_pairs: 50,
        graphs: 50,
        complexes: 50,
    };
    for report in verify::run(
        Suite::All,
        verify::DEFAULT_SEED,
        &Implementations::library(),
        scale,
    ) {
        println!("[{}]", report.suite.name());
        for check in &report.checks {
            println!("  {check}");
        }
    }

    let broken = Implementations::with_fault(Fault::CliqueUndercount);
    let reports = verify::run(Suite::Raag, verify::DEFAULT_SEED, &broken, scale);
    let caught = reports
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| !c.passed())
        .count();
    println!(
        "planted {}: {caught} checks fail",
        Fault::CliqueUndercount.name()
    );
}
