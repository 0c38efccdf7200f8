// Exact p-domination numbers, witnesses and enumeration of minimum sets.

use std::error::Error;

use preinforce::domination::{all_min_p_dominating_sets, forced_vertices, gamma_p, is_p_dominating};
use preinforce::{Graph, PartiteSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p7 = Graph::path(7)?;
    let result = gamma_p(&p7, 2);
    println!("gamma_2(P_7) = {} with witness {}", result.gamma_p, result.witness);
    assert_eq!(result.gamma_p, 4);
    assert!(is_p_dominating(&p7, 2, &result.witness)?);

    // vertices of degree < p belong to every p-dominating set
    let forced = forced_vertices(&p7, 2);
    println!("forced for p = 2: {forced}");
    assert!(forced.is_subset(&result.witness));

    for p in 1..=3 {
        let c = Graph::cycle(8)?;
        println!("gamma_{p}(C_8) = {}", gamma_p(&c, p).gamma_p);
    }

    let c6 = Graph::cycle(6)?;
    let mut sets: Vec<_> = all_min_p_dominating_sets(&c6, 2).collect();
    sets.sort();
    println!("minimum 2-dominating sets of C_6: {sets:?}");
    assert_eq!(sets.len(), 2);

    let k = Graph::complete_multipartite(&PartiteSpec::new(vec![2, 2, 10, 17])?);
    let r = gamma_p(&k, 11);
    println!("gamma_11(K_{{2,2,10,17}}) = {} with witness {}", r.gamma_p, r.witness);
    assert_eq!(r.gamma_p, 12);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
