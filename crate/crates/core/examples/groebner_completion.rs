//! Truncated Gröbner bases in the tensor algebra and in the exterior algebra.
//!
//! The dual B!(P₃) completes to a quadratic basis inside ΛV, while the same
//! relations completed in the tensor algebra pick up cubic elements.

use koszul_graphs::freealg::{MonomialOrder, NcPolynomial, Precedence, Word};
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::groebner::{complete, complete_exterior};
use koszul_graphs::presentations::{bdual_handwritten, q_presentation};

fn main() -> koszul_graphs::Result<()> {
    let g = Graph::named_family(Family::Line, 3)?;

    let q = q_presentation(&g);
    let gb = complete(&q, &MonomialOrder::new(q.alphabet(), Precedence::Default), 4);
    println!(
        "Q(P3): {} elements up to degree 4, dims {}",
        gb.len(),
        gb.dim_vector(4)?.render()
    );

    let h = bdual_handwritten(&g);
    let ord = MonomialOrder::new(h.alphabet(), Precedence::Default);
    let tensor = complete(&h, &ord, 4);
    println!(
        "\nB!(P3) in the tensor algebra, dims {}",
        tensor.dim_vector(4)?.render()
    );
    for w in tensor.leading_words(3) {
        println!("  cubic leading word {}", h.alphabet().render_word(&w));
    }

    let ext = complete_exterior(&h, &ord, 4);
    println!("\nB!(P3) in the exterior algebra, max degree {}", ext.max_degree());
    print!("{}", ext.dump());

    let a = h.alphabet();
    let w = Word::from_letters(&[a.vertex(1).unwrap(), a.edge(2, 1).unwrap()]);
    let nf = tensor.normal_form(&NcPolynomial::word(w.clone()))?;
    println!("\nnormal form of {} is {}", a.render_word(&w), nf.render(a));
    Ok(())
}
