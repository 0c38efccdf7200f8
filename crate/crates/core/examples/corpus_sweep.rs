// Sweeps over small graphs: every connected graph on a few vertices, and
// the command-line sweep driver.

use std::collections::BTreeMap;
use std::error::Error;

use clap::Parser;
use preinforce::bounds::bound_report;
use preinforce::cli::{run, RunConfig};
use preinforce::corpus::connected_graphs;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for p in 1..=2 {
        let mut histogram = BTreeMap::new();
        for g in connected_graphs(6) {
            let report = bound_report(&g, p);
            assert!(report.all_hold);
            *histogram.entry(report.r_p_exact).or_insert(0) += 1;
        }
        println!("connected graphs on 6 vertices, p = {p}: r_p histogram {histogram:?}");
    }

    let config = RunConfig::try_parse_from(["preinforce", "sweep", "--family", "cycle:5..=9", "--p-range", "2..=3"])?;
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    assert_eq!(outcome.exit_code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
