// Edge-list files: write, read back, and work with complements.

use std::error::Error;

use preinforce::{gamma_p, parse_edge_list, serialize_edge_list, Graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    let text = serialize_edge_list(&g);
    print!("{text}");

    let path = std::env::temp_dir().join(format!("preinforce-example-{}.edges", std::process::id()));
    std::fs::write(&path, format!("# a house graph\n{text}"))?;
    let back = parse_edge_list(&std::fs::read_to_string(&path)?)?;
    std::fs::remove_file(&path)?;
    assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());

    let co = g.complement();
    println!("complement has {} edges, non-edges of G: {:?}", co.edge_count(), g.complement_nonedges());
    println!("gamma_1(G) = {}, gamma_1(complement) = {}", gamma_p(&g, 1).gamma_p, gamma_p(&co, 1).gamma_p);

    match parse_edge_list("3 1\n0 0\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("loop accepted".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
