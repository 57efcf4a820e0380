//! Quadratic presentations of `Q(Γ)`, of its associated graded algebra
//! `B(Γ)`, and of their quadratic duals.
//!
//! Relations are generated over every ordered tuple of pairwise distinct
//! vertices, with an edge generator `u_pq` read as zero when `(p, q)` is not
//! an edge, and then row-reduced. Which representatives the tuples pick does
//! not matter once the span is taken.

use crate::error::Result;
use crate::freealg::{all_words, graded_row_reduce, Alphabet, Coeff, Echelon, Letter, NcPolynomial, SparseVec, Word};
use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPresentation {
    alphabet: Alphabet,
    relations: Vec<NcPolynomial>,
}

impl QuadraticPresentation {
    /// Row-reduce `relations` (all of degree 2) into a presentation.
    pub fn new(alphabet: Alphabet, relations: &[NcPolynomial]) -> Result<Self> {
        let nonzero: Vec<NcPolynomial> = relations.iter().filter(|p| !p.is_zero()).cloned().collect();
        Ok(QuadraticPresentation {
            alphabet,
            relations: graded_row_reduce(&nonzero, 2)?,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Row-reduced basis of the relation space.
    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    /// Alphabet line followed by one relation per line.
    pub fn dump(&self) -> String {
        let mut out = self.alphabet.render();
        out.push('\n');
        for r in &self.relations {
            out.push_str(&r.render(&self.alphabet));
            out.push('\n');
        }
        out
    }
}

/// Generator lookup with absent edges read as zero.
struct Gens<'a> {
    alphabet: &'a Alphabet,
}

impl Gens<'_> {
    fn v(&self, i: usize) -> NcPolynomial {
        NcPolynomial::letter(self.alphabet.vertex(i).expect("vertex generator"))
    }

    fn e(&self, i: usize, j: usize) -> NcPolynomial {
        match self.alphabet.edge(i, j) {
            Some(l) => NcPolynomial::letter(l),
            None => NcPolynomial::zero(),
        }
    }
}

fn comm(a: &NcPolynomial, b: &NcPolynomial) -> NcPolynomial {
    NcPolynomial::commutator(a, b)
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn distinct_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    distinct_pairs(n).flat_map(move |(i, j)| (1..=n).filter(move |&k| k != i && k != j).map(move |k| (i, j, k)))
}

fn distinct_quads(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    distinct_triples(n).flat_map(move |(i, j, k)| {
        (1..=n)
            .filter(move |&l| l != i && l != j && l != k)
            .map(move |l| (i, j, k, l))
    })
}

fn edge_commutators<'a>(gens: &'a Gens<'a>, n: usize) -> impl Iterator<Item = NcPolynomial> + 'a {
    distinct_quads(n).map(move |(i, j, k, l)| comm(&gens.e(i, j), &gens.e(k, l)))
}

/// Relations `R(ij)`, `R(ijk)`, `R(ijkl)` of `Q(Γ)`.
pub fn q_presentation(g: &Graph) -> QuadraticPresentation {
    let alphabet = Alphabet::for_graph(g, 'u');
    let gens = Gens { alphabet: &alphabet };
    let n = g.n();
    let mut rels = Vec::new();
    for (i, j) in distinct_pairs(n) {
        let (ui, uj) = (gens.v(i), gens.v(j));
        rels.push(&comm(&ui, &uj) - &(&gens.e(i, j) * &(&ui - &uj)));
    }
    for (i, j, k) in distinct_triples(n) {
        let (ui, uj) = (gens.v(i), gens.v(j));
        let (ujk, uik, uij) = (gens.e(j, k), gens.e(i, k), gens.e(i, j));
        let r = &(&(&comm(&ui, &ujk) + &comm(&uik, &uj)) + &comm(&uik, &ujk)) - &(&uij * &(&uik - &ujk));
        rels.push(r);
    }
    rels.extend(edge_commutators(&gens, n));
    QuadraticPresentation::new(alphabet, &rels).expect("relations are quadratic")
}

/// Relations `S(ij)`, `S(ijk)`, `S(ijkl)` of `B(Γ)`: the commutator parts of
/// the `Q(Γ)` relations.
pub fn b_presentation(g: &Graph) -> QuadraticPresentation {
    let alphabet = Alphabet::for_graph(g, 'u');
    let gens = Gens { alphabet: &alphabet };
    let n = g.n();
    let mut rels = Vec::new();
    for (i, j) in distinct_pairs(n) {
        rels.push(comm(&gens.v(i), &gens.v(j)));
    }
    for (i, j, k) in distinct_triples(n) {
        rels.push(&comm(&gens.v(i), &gens.e(j, k)) + &comm(&gens.e(i, k), &gens.v(j)));
    }
    rels.extend(edge_commutators(&gens, n));
    QuadraticPresentation::new(alphabet, &rels).expect("relations are quadratic")
}

/// The quadratic dual: dual generators and the orthogonal complement of the
/// relation space under `<x⊗y, ξ⊗η> = ξ(x)·η(y)`, so a word pairs to 1 with
/// the same word and 0 with every other word.
pub fn quadratic_dual(p: &QuadraticPresentation) -> QuadraticPresentation {
    let m = p.alphabet.len();
    let words = all_words(m, 2);
    let column = |w: &Word| {
        let l = w.letters();
        l[0] as usize * m + l[1] as usize
    };
    let mut ech = Echelon::new();
    for r in &p.relations {
        let mut v: SparseVec = r.terms().map(|(w, c)| (column(w), c.clone())).collect();
        v.sort_by_key(|e| e.0);
        ech.insert(v);
    }
    let rows = ech.reduced_rows();
    let complement: Vec<NcPolynomial> = (0..words.len())
        .filter(|&col| !ech.is_pivot(col))
        .map(|free| {
            let mut q = NcPolynomial::word(words[free].clone());
            for row in &rows {
                if let Some((_, x)) = row.iter().find(|(k, _)| *k == free) {
                    q.add_term(words[row[0].0].clone(), -x.clone());
                }
            }
            q
        })
        .collect();
    let prefix = if p.alphabet.prefix() == 'e' { 'u' } else { 'e' };
    QuadraticPresentation::new(p.alphabet.with_prefix(prefix), &complement).expect("complement is quadratic")
}

fn word2(a: Letter, b: Letter) -> NcPolynomial {
    NcPolynomial::word(Word::from_letters(&[a, b]))
}

/// Exterior-algebra relations on every letter: squares and symmetrizers.
pub fn exterior_relations(alphabet: &Alphabet) -> Vec<NcPolynomial> {
    let mut rels = Vec::new();
    for x in alphabet.letters() {
        rels.push(word2(x, x));
        for y in alphabet.letters().filter(|&y| y > x) {
            rels.push(&word2(x, y) + &word2(y, x));
        }
    }
    rels
}

/// `T(ijk)`, `U(ik)`, `W(ijk)` on top of the exterior relations: the
/// hand-derived presentation of `B(Γ)!`.
pub fn bdual_handwritten(g: &Graph) -> QuadraticPresentation {
    let alphabet = Alphabet::for_graph(g, 'e');
    let v = |i| alphabet.vertex(i).expect("vertex generator");
    let e = |i, j| alphabet.edge(i, j).expect("edge generator");
    let mut rels = exterior_relations(&alphabet);
    for t in g.triangles() {
        let (i, j, k) = (t.0, t.1, t.2);
        let tri = &(&word2(v(i), e(j, k)) + &word2(v(j), e(k, i))) + &word2(v(k), e(i, j));
        rels.push(tri);
    }
    let edges: Vec<_> = g.edges().collect();
    for &(a, b) in &edges {
        rels.push(word2(v(a), e(a, b)));
        rels.push(word2(v(b), e(a, b)));
    }
    for (k, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[k + 1..] {
            if a == c || a == d || b == c || b == d {
                rels.push(word2(e(a, b), e(c, d)));
            }
        }
    }
    QuadraticPresentation::new(alphabet, &rels).expect("relations are quadratic")
}

/// The coefficient of word `w` in the dual pairing of `r` with `w`.
pub fn pairing(r: &NcPolynomial, dual: &NcPolynomial) -> Coeff {
    let mut total = Coeff::from_integer(0.into());
    for (w, c) in r.terms() {
        total += c * dual.coeff(w);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::same_span;
    use crate::graphs::Family;
    use num_traits::Zero;

    fn fam(f: Family, n: usize) -> Graph {
        Graph::named_family(f, n).unwrap()
    }

    #[test]
    fn single_edge_q() {
        let g = fam(Family::Line, 2);
        let q = q_presentation(&g);
        assert_eq!(q.alphabet().render(), "alphabet: u21 u1 u2");
        assert_eq!(q.relation_count(), 1);
    }

    #[test]
    fn empty_graph_gives_commutators() {
        for n in 1..=4 {
            let g = fam(Family::Empty, n);
            assert_eq!(q_presentation(&g).relation_count(), n * (n - 1) / 2);
            assert_eq!(b_presentation(&g).relation_count(), n * (n - 1) / 2);
            let dual = quadratic_dual(&b_presentation(&g));
            assert_eq!(dual.relation_count(), n * (n + 1) / 2);
            assert!(same_span(dual.relations(), &exterior_relations(dual.alphabet())));
        }
    }

    #[test]
    fn path3_relations() {
        let g = fam(Family::Line, 3);
        let q = q_presentation(&g);
        let b = b_presentation(&g);
        assert_eq!(q.relation_count(), 5);
        assert_eq!(b.relation_count(), 5);
        let a = b.alphabet();
        let u = |i| NcPolynomial::letter(a.vertex(i).unwrap());
        let ue = |i, j| NcPolynomial::letter(a.edge(i, j).unwrap());
        let expected = vec![
            comm(&u(1), &u(2)),
            comm(&u(1), &u(3)),
            comm(&u(2), &u(3)),
            comm(&u(1), &ue(2, 3)),
            comm(&u(3), &ue(2, 1)),
        ];
        assert!(same_span(b.relations(), &expected));
        assert_eq!(quadratic_dual(&b).relation_count(), 20);
    }

    #[test]
    fn complete3_b_relations_oracle() {
        let g = fam(Family::Complete, 3);
        let a = Alphabet::for_graph(&g, 'u');
        let gens = Gens { alphabet: &a };
        let mut raw: Vec<NcPolynomial> = distinct_pairs(3).map(|(i, j)| comm(&gens.v(i), &gens.v(j))).collect();
        for (i, j, k) in distinct_triples(3) {
            raw.push(&comm(&gens.v(i), &gens.e(j, k)) + &comm(&gens.e(i, k), &gens.v(j)));
        }
        let expected = graded_row_reduce(&raw, 2).unwrap().len();
        assert_eq!(b_presentation(&g).relation_count(), expected);
    }

    #[test]
    fn dual_dimension_and_biduality() {
        for g in [
            fam(Family::Line, 3),
            fam(Family::Complete, 3),
            fam(Family::Star, 4),
            fam(Family::Cycle, 4),
        ] {
            for p in [q_presentation(&g), b_presentation(&g)] {
                let m = p.alphabet().len();
                let d = quadratic_dual(&p);
                assert_eq!(d.relation_count() + p.relation_count(), m * m);
                assert_eq!(d.alphabet().prefix(), 'e');
                for r in p.relations() {
                    for s in d.relations() {
                        assert!(pairing(r, s).is_zero());
                    }
                }
                let dd = quadratic_dual(&d);
                assert_eq!(dd.alphabet().prefix(), 'u');
                assert!(same_span(dd.relations(), p.relations()));
            }
        }
    }

    #[test]
    fn handwritten_bdual_path3() {
        let g = fam(Family::Line, 3);
        let h = bdual_handwritten(&g);
        assert_eq!(h.relation_count(), 20);
        assert!(same_span(
            h.relations(),
            quadratic_dual(&b_presentation(&g)).relations()
        ));
    }

    #[test]
    fn handwritten_bdual_triangle_contains_t() {
        let g = fam(Family::Complete, 3);
        let h = bdual_handwritten(&g);
        let a = h.alphabet();
        let v = |i| a.vertex(i).unwrap();
        let e = |i, j| a.edge(i, j).unwrap();
        let t = &(&word2(v(3), e(2, 1)) + &word2(v(2), e(1, 3))) + &word2(v(1), e(3, 2));
        assert!(crate::freealg::span_contains(h.relations(), &t));
        assert!(same_span(
            h.relations(),
            quadratic_dual(&b_presentation(&g)).relations()
        ));
    }

    #[test]
    fn handwritten_bdual_empty_is_exterior() {
        let g = fam(Family::Empty, 3);
        let h = bdual_handwritten(&g);
        assert!(same_span(h.relations(), &exterior_relations(h.alphabet())));
        assert_eq!(h.relation_count(), 6);
    }
}
