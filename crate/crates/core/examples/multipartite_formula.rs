// Closed forms for complete multipartite graphs, paths and cycles.

use std::error::Error;

use preinforce::closed_forms::{
    gamma_p_multipartite, r_p_cycle, r_p_multipartite, r_p_multipartite_by_counts, r_p_path,
};
use preinforce::{r_p, Graph, PartiteSpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = PartiteSpec::new(vec![2, 2, 10, 17])?;
    let f = r_p_multipartite(&spec, 11)?;
    println!("{spec}, p = 11: gamma = {}, r = {}, minimizer {:?}", f.gamma_p, f.r_p, f.minimizer);
    for t in &f.terms {
        let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let parts = format!("{:?}", t.parts);
        println!("  X = {parts:<16} f = {:>2}  f* = {:>2}  term = {:>3}", t.f, show(t.f_star), show(t.term));
    }
    assert_eq!((f.gamma_p, f.r_p), (12, 1));

    // subset minimum against the per-part count minimum and the exact search
    for parts in [vec![3, 4], vec![3, 3, 5], vec![5, 5]] {
        let spec = PartiteSpec::new(parts)?;
        let exact = r_p(&Graph::complete_multipartite(&spec), 2).r_p;
        let subsets = r_p_multipartite(&spec, 2)?.r_p;
        let counts = r_p_multipartite_by_counts(&spec, 2)?;
        println!(
            "{spec}, p = 2: gamma = {}, subsets {subsets}, counts {counts}, exact {exact}",
            gamma_p_multipartite(&spec, 2)?
        );
        assert_eq!(counts, exact);
    }

    for n in 5..=8 {
        println!("n = {n}: r_2(P_n) = {}, r_2(C_n) = {}, r_3(C_n) = {}", r_p_path(n, 2)?, r_p_cycle(n, 2)?, r_p_cycle(n, 3)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
