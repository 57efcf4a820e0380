use std::cmp::Ordering;

use super::{Alphabet, Letter, NcPolynomial, Variable, Word};

/// Which total order on generators a degree-lexicographic order uses.
///
/// Both put `x_n > ... > x_1` above every edge generator. They differ only
/// on edges: `Default` ranks `(i, j) > (k, l)` iff `i > k`, or `i = k` and
/// `j > l`; `ReverseEdges` flips that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Precedence {
    Default,
    ReverseEdges,
}

impl Precedence {
    pub const ALL: [Precedence; 2] = [Precedence::Default, Precedence::ReverseEdges];

    pub fn name(self) -> &'static str {
        match self {
            Precedence::Default => "default",
            Precedence::ReverseEdges => "reverse-edges",
        }
    }
}

/// Degree-lexicographic order: longer words are larger; equal-length words
/// compare letter by letter from the left by precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Precedence,
    rank: Vec<Letter>,
    unrank: Vec<Letter>,
}

impl MonomialOrder {
    pub fn new(alphabet: &Alphabet, precedence: Precedence) -> MonomialOrder {
        let edges = alphabet
            .variables()
            .iter()
            .filter(|v| matches!(v, Variable::Edge(..)))
            .count();
        let rank: Vec<Letter> = alphabet
            .letters()
            .map(|l| match precedence {
                Precedence::Default => l,
                Precedence::ReverseEdges if (l as usize) < edges => (edges - 1 - l as usize) as Letter,
                Precedence::ReverseEdges => l,
            })
            .collect();
        let mut unrank = vec![0; rank.len()];
        for (l, &r) in rank.iter().enumerate() {
            unrank[r as usize] = l as Letter;
        }
        MonomialOrder {
            precedence,
            rank,
            unrank,
        }
    }

    pub fn precedence(&self) -> Precedence {
        self.precedence
    }

    /// Position of a letter in the precedence (0 is smallest).
    pub fn rank_of(&self, l: Letter) -> Letter {
        self.rank[l as usize]
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            a.letters()
                .iter()
                .map(|&l| self.rank[l as usize])
                .cmp(b.letters().iter().map(|&l| self.rank[l as usize]))
        })
    }

    /// Rewrite a word in rank letters, where the natural word order is this order.
    pub fn to_ranked(&self, w: &Word) -> Word {
        w.map(|l| self.rank[l as usize])
    }

    pub fn from_ranked(&self, w: &Word) -> Word {
        w.map(|r| self.unrank[r as usize])
    }

    pub fn rank_poly(&self, p: &NcPolynomial) -> NcPolynomial {
        p.map_letters(|l| self.rank[l as usize])
    }

    pub fn unrank_poly(&self, p: &NcPolynomial) -> NcPolynomial {
        p.map_letters(|r| self.unrank[r as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{Family, Graph};
    use proptest::prelude::*;

    fn k4_alphabet() -> Alphabet {
        Alphabet::for_graph(&Graph::named_family(Family::Complete, 4).unwrap(), 'e')
    }

    #[test]
    fn vertices_dominate_edges() {
        let a = k4_alphabet();
        for p in Precedence::ALL {
            let ord = MonomialOrder::new(&a, p);
            let e1 = Word::from_letters(&[a.vertex(1).unwrap()]);
            for (i, j) in [(2, 1), (4, 3)] {
                let e = Word::from_letters(&[a.edge(i, j).unwrap()]);
                assert_eq!(ord.compare(&e1, &e), Ordering::Greater);
            }
        }
    }

    #[test]
    fn reverse_edges_flips_only_edges() {
        let a = k4_alphabet();
        let def = MonomialOrder::new(&a, Precedence::Default);
        let rev = MonomialOrder::new(&a, Precedence::ReverseEdges);
        let (e21, e43) = (a.edge(2, 1).unwrap(), a.edge(4, 3).unwrap());
        assert!(def.rank_of(e43) > def.rank_of(e21));
        assert!(rev.rank_of(e43) < rev.rank_of(e21));
        let (v2, v3) = (a.vertex(2).unwrap(), a.vertex(3).unwrap());
        assert!(rev.rank_of(v3) > rev.rank_of(v2));
        for l in a.letters() {
            let w = Word::from_letters(&[l, e21]);
            assert_eq!(rev.from_ranked(&rev.to_ranked(&w)), w);
        }
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..10, 0..4).prop_map(Word::from)
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(u in arb_word(), v in arb_word(), w in arb_word(), rev in any::<bool>()) {
            let a = k4_alphabet();
            let ord = MonomialOrder::new(&a, if rev { Precedence::ReverseEdges } else { Precedence::Default });
            let (lo, hi) = match ord.compare(&u, &v) {
                Ordering::Less => (u, v),
                Ordering::Greater => (v, u),
                Ordering::Equal => { prop_assert_eq!(&u, &v); return Ok(()); }
            };
            prop_assert_eq!(ord.compare(&w.concat(&lo), &w.concat(&hi)), Ordering::Less);
            prop_assert_eq!(ord.compare(&lo.concat(&w), &hi.concat(&w)), Ordering::Less);
            // ranked words compare naturally
            prop_assert!(ord.to_ranked(&lo) < ord.to_ranked(&hi));
        }
    }
}
