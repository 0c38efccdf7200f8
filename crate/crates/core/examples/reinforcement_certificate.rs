// p-reinforcement numbers with certificates that can be checked
// independently, plus the brute-force definition oracle.

use std::error::Error;

use preinforce::reinforcement::{
    check_certificate, eta_p, r_p, r_p_definition_oracle, ReinforcementCertificate,
};
use preinforce::Graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c6 = Graph::cycle(6)?;
    let cert = r_p(&c6, 2);
    println!("r_2(C_6) = {}", cert.r_p);
    println!("  add {:?}", cert.edges);
    println!("  then {} 2-dominates, gamma {} -> {}", cert.witness_x, cert.gamma_before, cert.gamma_after);
    assert_eq!(cert.r_p, 4);
    check_certificate(&c6, 2, &cert)?;

    let json = serde_json::to_string(&cert)?;
    println!("  as JSON: {json}");
    let back: ReinforcementCertificate = serde_json::from_str(&json)?;
    assert_eq!(back, cert);

    // dropping an edge breaks it
    let mut broken = cert.clone();
    broken.edges.pop();
    broken.r_p -= 1;
    println!("  with one edge removed: {}", check_certificate(&c6, 2, &broken).unwrap_err());

    let p5 = Graph::path(5)?;
    let eta = eta_p(&p5, 2)?;
    println!("eta_2(P_5) = {} attained by {}", eta.eta_p, eta.witness_x);
    assert_eq!(r_p_definition_oracle(&p5, 2, 4)?, eta.eta_p);

    // gamma_p <= p: the number is 0 by convention
    let k4 = r_p(&Graph::complete(4), 2);
    println!("r_2(K_4) = {} (convention: {})", k4.r_p, k4.is_convention());
    assert!(k4.is_convention());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
