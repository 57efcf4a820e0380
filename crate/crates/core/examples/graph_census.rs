//! Enumerate small graphs up to isomorphism and print a census.
//!
//! ```text
//! cargo run --example graph_census -- 5
//! ```

use koszul_graphs::graphs::format::write_graph6;
use koszul_graphs::graphs::{canonical_form, enumerate_graphs, Family, Graph};

fn main() -> koszul_graphs::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let all = enumerate_graphs(max_n, false)?;
    let no_isolated = enumerate_graphs(max_n, true)?;
    println!(
        "{:>2} {:>8} {:>12} {:>14} {:>13}",
        "n", "graphs", "no isolated", "triangle-free", "overlap-free"
    );
    for n in 1..=max_n {
        let of_size: Vec<&Graph> = all.iter().filter(|g| g.n() == n).collect();
        println!(
            "{:>2} {:>8} {:>12} {:>14} {:>13}",
            n,
            of_size.len(),
            no_isolated.iter().filter(|g| g.n() == n).count(),
            of_size.iter().filter(|g| g.is_triangle_free()).count(),
            of_size.iter().filter(|g| !g.has_overlapping_triangles()).count(),
        );
    }

    let butterfly = Graph::named_family(Family::Butterfly, 5)?;
    let canon = canonical_form(&butterfly)?;
    println!("\nbutterfly {butterfly}");
    println!("canonical {canon} graph6 {}", write_graph6(&canon));
    Ok(())
}
