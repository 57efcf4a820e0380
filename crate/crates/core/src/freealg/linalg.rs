//! Exact sparse Gaussian elimination.
//!
//! Rows are sparse vectors sorted by column. Each stored row is monic with
//! its pivot at its smallest column, so reducing a vector is a single sweep
//! in increasing column order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;

use super::{Coeff, NcPolynomial, Word};
use crate::error::Result;

pub(crate) type SparseVec = Vec<(usize, Coeff)>;

#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<SparseVec>,
    pivots: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Coeff> = BTreeMap::new();
        for (col, c) in v {
            add_into(&mut acc, col, c);
        }
        let mut out = Vec::new();
        while let Some((col, c)) = acc.pop_first() {
            match self.pivots.get(&col) {
                Some(&r) => {
                    for (k, x) in &self.rows[r][1..] {
                        add_into(&mut acc, *k, -(&c * x));
                    }
                }
                None => out.push((col, c)),
            }
        }
        out
    }

    /// Reduce and keep the remainder as a new row; true if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let rem = self.reduce(v);
        let Some((pivot, lead)) = rem.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseVec = rem.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Reduced row echelon form, rows ordered by pivot column.
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self
            .rows
            .iter()
            .map(|row| {
                let mut full = vec![row[0].clone()];
                full.extend(self.reduce(row[1..].to_vec()));
                full
            })
            .collect();
        rows.sort_by_key(|r| r[0].0);
        rows
    }
}

fn add_into(acc: &mut BTreeMap<usize, Coeff>, col: usize, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match acc.entry(col) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Column indexing of a word set, largest word first.
struct Columns {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Columns {
    fn new<'a>(polys: impl IntoIterator<Item = &'a NcPolynomial>) -> Columns {
        let set: BTreeSet<Word> = polys
            .into_iter()
            .flat_map(|p| p.terms().map(|(w, _)| w.clone()))
            .collect();
        let words: Vec<Word> = set.into_iter().rev().collect();
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        Columns { words, index }
    }

    fn vector(&self, p: &NcPolynomial) -> SparseVec {
        let mut v: SparseVec = p.terms().map(|(w, c)| (self.index[w], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    fn poly(&self, v: &SparseVec) -> NcPolynomial {
        NcPolynomial::from_terms(v.iter().map(|(k, c)| (self.words[*k].clone(), c.clone())))
    }
}

/// Reduced row echelon basis of the span of homogeneous degree-`d`
/// polynomials, with words ordered by the default order. Each output is monic
/// in its leading word; outputs are sorted by leading word, largest first.
pub fn graded_row_reduce(polys: &[NcPolynomial], d: usize) -> Result<Vec<NcPolynomial>> {
    for p in polys {
        p.expect_homogeneous(d)?;
    }
    let cols = Columns::new(polys);
    let mut ech = Echelon::new();
    for p in polys {
        ech.insert(cols.vector(p));
    }
    Ok(ech.reduced_rows().iter().map(|r| cols.poly(r)).collect())
}

/// True iff `p` lies in the span of `basis`.
pub fn span_contains(basis: &[NcPolynomial], p: &NcPolynomial) -> bool {
    let cols = Columns::new(basis.iter().chain(std::iter::once(p)));
    let mut ech = Echelon::new();
    for b in basis {
        ech.insert(cols.vector(b));
    }
    ech.reduce(cols.vector(p)).is_empty()
}

/// Span equality by mutual reduction.
pub fn same_span(a: &[NcPolynomial], b: &[NcPolynomial]) -> bool {
    let cols = Columns::new(a.iter().chain(b));
    let build = |ps: &[NcPolynomial]| {
        let mut ech = Echelon::new();
        for p in ps {
            ech.insert(cols.vector(p));
        }
        ech
    };
    let (ea, eb) = (build(a), build(b));
    b.iter().all(|p| ea.reduce(cols.vector(p)).is_empty()) && a.iter().all(|p| eb.reduce(cols.vector(p)).is_empty())
}

#[cfg(test)]
pub(crate) fn unit(col: usize) -> SparseVec {
    vec![(col, <Coeff as num_traits::One>::one())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::freealg::poly::int;
    use proptest::prelude::*;

    fn wp(ls: &[u8]) -> NcPolynomial {
        NcPolynomial::word(Word::from_letters(ls))
    }

    #[test]
    fn row_reduce_examples() {
        let a = wp(&[1, 2]);
        let b = wp(&[2, 1]);
        let basis = graded_row_reduce(&[a.clone(), b.clone(), &a + &b], 2).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(graded_row_reduce(&[], 2).unwrap().is_empty());
        assert_eq!(
            graded_row_reduce(&[wp(&[1]), wp(&[1, 2])], 2),
            Err(Error::Inhomogeneous { expected: 2, found: 1 })
        );
    }

    #[test]
    fn echelon_rank_and_reduction() {
        let mut e = Echelon::new();
        assert!(e.insert(vec![(0, int(1)), (2, int(1))]));
        assert!(e.insert(vec![(0, int(1)), (1, int(1))]));
        assert!(!e.insert(vec![(1, int(2)), (2, int(-2))]));
        assert_eq!(e.rank(), 2);
        // e_0 reduces to a combination of the free column 2
        assert_eq!(e.reduce(unit(0)), vec![(2, int(-1))]);
        let rows = e.reduced_rows();
        assert_eq!(rows[0], vec![(0, int(1)), (2, int(1))]);
        assert_eq!(rows[1], vec![(1, int(1)), (2, int(-1))]);
    }

    fn arb_homogeneous() -> impl Strategy<Value = Vec<NcPolynomial>> {
        prop::collection::vec(prop::collection::vec(((0u8..3, 0u8..3), -2i64..=2), 1..4), 0..5).prop_map(|ps| {
            ps.into_iter()
                .map(|ts| {
                    NcPolynomial::from_terms(ts.into_iter().map(|((a, b), c)| (Word::from_letters(&[a, b]), int(c))))
                })
                .filter(|p| !p.is_zero())
                .collect()
        })
    }

    proptest! {
        #[test]
        fn row_reduce_is_idempotent_and_spanning(ps in arb_homogeneous()) {
            let basis = graded_row_reduce(&ps, 2).unwrap();
            prop_assert_eq!(graded_row_reduce(&basis, 2).unwrap(), basis.clone());
            for p in &ps {
                prop_assert!(span_contains(&basis, p));
            }
            prop_assert!(same_span(&basis, &ps));
        }
    }
}
