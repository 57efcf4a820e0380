//! Hilbert series of Q(Γ) and its dual, and the numerical Koszul test.

use koszul_graphs::freealg::{MonomialOrder, Precedence};
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::groebner::complete;
use koszul_graphs::matchings::hilbert_formula;
use koszul_graphs::presentations::q_presentation;
use koszul_graphs::series::{global_dimension, invert_trunc, koszul_numeric_check, palindrome_report, IntSeries};

fn main() -> koszul_graphs::Result<()> {
    for (name, g) in [
        ("P3", Graph::named_family(Family::Line, 3)?),
        ("K3", Graph::named_family(Family::Complete, 3)?),
        ("C4", Graph::named_family(Family::Cycle, 4)?),
    ] {
        let p = hilbert_formula(&g)?;
        let d = 5;
        let predicted = invert_trunc(&p.truncate(d).alternate())?;
        let q = q_presentation(&g);
        let gb = complete(&q, &MonomialOrder::new(q.alphabet(), Precedence::Default), d);
        let h_q = IntSeries::from_usizes(&gb.dim_vector(d)?.dims);
        let pal = palindrome_report(&p, g.n());
        println!("{name}: p(z) = {p}");
        println!("    Q(z) from p(-z)^-1 = {predicted}");
        println!("    Q(z) from the basis  = {h_q}");
        println!(
            "    Koszul test {}, global dimension {}, palindrome {}",
            koszul_numeric_check(&h_q, &p.truncate(d)),
            global_dimension(&p)?,
            pal.is_palindrome
        );
    }
    Ok(())
}
