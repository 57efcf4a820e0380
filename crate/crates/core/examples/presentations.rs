//! Quadratic presentations of Q(Γ), B(Γ) and their duals for the path on 3 vertices.

use koszul_graphs::freealg::same_span;
use koszul_graphs::graphs::{Family, Graph};
use koszul_graphs::presentations::{
    b_presentation, bdual_handwritten, exterior_relations, q_presentation, quadratic_dual,
};

fn main() -> koszul_graphs::Result<()> {
    let g = Graph::named_family(Family::Line, 3)?;

    let q = q_presentation(&g);
    println!("Q: {} relations\n{}", q.relation_count(), q.dump());
    let b = b_presentation(&g);
    println!("B: {} relations\n{}", b.relation_count(), b.dump());

    let dual = quadratic_dual(&b);
    let hand = bdual_handwritten(&g);
    let mut spanned = hand.relations().to_vec();
    spanned.extend(exterior_relations(hand.alphabet()));
    println!(
        "orthogonal complement has {} relations; hand-written T, U, W plus exterior span it: {}",
        dual.relation_count(),
        same_span(&spanned, dual.relations())
    );
    Ok(())
}
