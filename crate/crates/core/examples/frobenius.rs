//! Right multiplication by an edge variable kills the whole degree n-1 part.

use koszul_graphs::freealg::{MonomialOrder, Precedence};
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::groebner::complete;
use koszul_graphs::matchings::frobenius_degeneracy_witness;
use koszul_graphs::presentations::{bdual_handwritten, q_presentation, quadratic_dual};

fn main() -> koszul_graphs::Result<()> {
    let g = Graph::named_family(Family::Cycle, 4)?;
    for (name, pres) in [
        ("B!", bdual_handwritten(&g)),
        ("Q!", quadratic_dual(&q_presentation(&g))),
    ] {
        let gb = complete(&pres, &MonomialOrder::new(pres.alphabet(), Precedence::Default), g.n());
        println!("{name} of C4: top degree dims {}", gb.dim_vector(g.n())?.render());
        for row in frobenius_degeneracy_witness(&g, &gb)? {
            println!("  edge {}{} degenerate {}", row.edge.0, row.edge.1, row.degenerate);
        }
    }
    Ok(())
}
