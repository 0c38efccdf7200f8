// The 3SAT gadget graph: build it, then compare satisfiability with
// r_p(gadget) = 1 and read an assignment off the certificate.

use std::error::Error;

use preinforce::reduction::{
    build_gadget, check_gamma_sets, check_reduction, extract_assignment, full_cube_cnf, parse_dimacs_cnf,
};

const TINY: &str = "c two clauses over three variables
p cnf 3 2
1 -2 3 0
-1 2 -3 0
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (cnf, warnings) = parse_dimacs_cnf(TINY)?;
    println!("formula {cnf}, {} coverage warnings", warnings.len());

    let gadget = build_gadget(&cnf, 2)?;
    println!(
        "gadget: {} vertices, {} edges, gamma_2 should be {}",
        gadget.graph().n(),
        gadget.graph().edge_count(),
        gadget.expected_gamma()
    );
    print!("{}", gadget.labels_text().lines().take(6).map(|l| format!("  {l}\n")).collect::<String>());
    println!("  {} minimum sets pass the block checks", check_gamma_sets(&gadget)?);

    let check = check_reduction(&cnf, 2)?;
    println!("{}", check.summary());
    let assignment = extract_assignment(&gadget, &check.certificate.witness_x)?;
    println!("assignment from the certificate: {assignment:?}");
    assert!(cnf.evaluate(&assignment));

    let cube = full_cube_cnf();
    let check = check_reduction(&cube, 2)?;
    println!("all eight sign patterns: {}", check.summary());
    assert!(check.holds && !check.satisfiable && check.r_p >= 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
