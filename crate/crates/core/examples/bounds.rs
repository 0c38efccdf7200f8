// Upper bounds on r_p from p-private neighborhoods and degrees.

use std::error::Error;

use preinforce::bounds::{bound_report, mu_p_with_witness, p_private_neighborhood};
use preinforce::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c6 = Graph::cycle(6)?;
    let w = mu_p_with_witness(&c6, 2).ok_or("empty graph")?;
    let private = p_private_neighborhood(&c6, 2, w.vertex, &w.set)?;
    println!("mu_2(C_6) = {} at x = {} in {}, private neighbors {}", w.mu_p, w.vertex, w.set, private);

    let star = Graph::from_edges(6, (1..6).map(|v| (0, v)))?;
    for (name, g, p) in [("C_6", &c6, 2), ("P_4", &Graph::path(4)?, 3), ("K_1,5", &star, 2)] {
        let report = bound_report(g, p);
        println!("{name}, p = {p}:\n{report}");
        assert!(report.all_hold);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
