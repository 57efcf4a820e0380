//! Words, noncommutative polynomials and the two degree-lexicographic orders.

use koszul_graphs::freealg::{Alphabet, MonomialOrder, NcPolynomial, Precedence, Word};
use koszul_graphs::graphs::{Family, Graph};

fn main() -> koszul_graphs::Result<()> {
    let g = Graph::named_family(Family::Complete, 3)?;
    let a = Alphabet::for_graph(&g, 'u');
    println!("{}", a.render());

    let (u1, u2, u21) = (a.vertex(1).unwrap(), a.vertex(2).unwrap(), a.edge(2, 1).unwrap());
    let x = NcPolynomial::letter(u1);
    let y = NcPolynomial::letter(u2);
    let e = NcPolynomial::letter(u21);
    let comm = NcPolynomial::commutator(&x, &y);
    let rel = &comm - &(&e * &(&x - &y));
    println!("[u1,u2] - u21(u1 - u2) = {}", rel.render(&a));

    for p in Precedence::ALL {
        let ord = MonomialOrder::new(&a, p);
        let (lead, _) = rel.leading_term(&ord)?;
        println!("leading word under {:<13} {}", p.name(), a.render_word(&lead));
    }

    let w = Word::from_letters(&[u21, u1]);
    println!("degree of {} is {}", a.render_word(&w), w.degree());
    Ok(())
}
