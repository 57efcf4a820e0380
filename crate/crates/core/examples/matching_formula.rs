//! Partial matchings, allowed vertices and the explicit basis of the dual.

use koszul_graphs::freealg::Alphabet;
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::matchings::{
    allowed_vertices, hilbert_formula, partial_matchings, qdual_basis, triangle_free_formula,
};

fn main() -> koszul_graphs::Result<()> {
    let g = Graph::named_family(Family::Complete, 3)?;
    println!("K3 = {g}");
    for (p, group) in partial_matchings(&g).iter().enumerate() {
        for w in group {
            let r = allowed_vertices(&g, w);
            println!("  p = {p} W = {:?} R_W = {:?}", w.edges, r.vertices);
        }
    }
    println!("p(z) = {}", hilbert_formula(&g)?);

    let a = Alphabet::for_graph(&g, 'e');
    for d in 0..=g.n() {
        let words: Vec<String> = qdual_basis(&g, d)?.iter().map(|w| a.render_word(w)).collect();
        println!("  degree {d}: {}", words.join(" "));
    }

    let p4 = Graph::named_family(Family::Line, 4)?;
    println!("\nP4: {} = {}", hilbert_formula(&p4)?, triangle_free_formula(&p4)?);
    Ok(())
}
