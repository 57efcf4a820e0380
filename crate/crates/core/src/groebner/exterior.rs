//! Gröbner bases of graded ideals in the exterior algebra `ΛV`.
//!
//! Monomials are square-free and written with letters in descending
//! precedence, so `x_S · x_T` is zero when `S ∩ T` is nonempty and otherwise
//! `±x_{S∪T}`, the sign counting the transpositions needed to restore
//! descending order. The monomial order is degree first, then the larger
//! top letter. Completion checks every S-polynomial together with `x · f`
//! for each letter `x` of the leading monomial of `f`, which is the
//! Buchberger criterion for this algebra.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::DimVector;
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Coeff, Letter, MonomialOrder, NcPolynomial};
use crate::presentations::QuadraticPresentation;

/// Square-free monomial; bit `r` is the letter of rank `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtMonomial(u64);

impl ExtMonomial {
    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, other: ExtMonomial) -> bool {
        other.0 & !self.0 == 0
    }

    /// Ranks present, largest first.
    pub fn ranks(self) -> Vec<Letter> {
        (0..64)
            .rev()
            .filter(|r| self.0 >> r & 1 == 1)
            .map(|r| r as Letter)
            .collect()
    }

    /// `self · other` as a monomial and a sign, or `None` if it vanishes.
    fn times(self, other: ExtMonomial) -> Option<(ExtMonomial, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        let mut rest = other.0;
        while rest != 0 {
            let t = rest.trailing_zeros();
            swaps += (self.0 & ((1u64 << t) - 1)).count_ones();
            rest &= rest - 1;
        }
        Some((ExtMonomial(self.0 | other.0), swaps % 2 == 1))
    }
}

impl Ord for ExtMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type ExtPoly = BTreeMap<ExtMonomial, Coeff>;

fn add_term(p: &mut ExtPoly, m: ExtMonomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(m).or_insert_with(Coeff::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&m);
    }
}

/// `c · x_m · f`.
fn left_multiply(m: ExtMonomial, c: &Coeff, f: &ExtPoly) -> ExtPoly {
    let mut out = ExtPoly::new();
    for (t, x) in f {
        if let Some((prod, negative)) = m.times(*t) {
            let v = c * x;
            add_term(&mut out, prod, if negative { -v } else { v });
        }
    }
    out
}

fn leading(p: &ExtPoly) -> Option<(ExtMonomial, &Coeff)> {
    p.iter().next_back().map(|(m, c)| (*m, c))
}

fn monic(p: ExtPoly) -> ExtPoly {
    let inv = leading(&p).expect("nonzero").1.recip();
    p.into_iter().map(|(m, c)| (m, c * &inv)).collect()
}

/// Image in `ΛV` of a tensor-algebra polynomial in ranked letters.
fn to_exterior(p: &NcPolynomial) -> ExtPoly {
    let mut out = ExtPoly::new();
    for (w, c) in p.terms() {
        let mut acc = Some((ExtMonomial(0), false));
        for &l in w.letters() {
            acc = acc.and_then(|(m, neg)| m.times(ExtMonomial(1u64 << l)).map(|(prod, s)| (prod, neg ^ s)));
        }
        if let Some((m, negative)) = acc {
            add_term(&mut out, m, if negative { -c.clone() } else { c.clone() });
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct ExteriorGB {
    alphabet: Alphabet,
    order: MonomialOrder,
    bound: usize,
    elems: Vec<ExtPoly>,
    leads: Vec<ExtMonomial>,
}

/// Complete the image in `ΛV` of a quadratic presentation's relations up to
/// degree `bound`. Squares and symmetrizers map to zero, so presentations
/// that already contain the exterior relations are accepted as they are.
pub fn complete_exterior(pres: &QuadraticPresentation, order: &MonomialOrder, bound: usize) -> ExteriorGB {
    assert!(bound >= 2, "truncation bound must be at least 2");
    assert!(
        pres.alphabet().len() <= 64,
        "alphabet too large for the exterior engine"
    );
    let mut gb = ExteriorGB {
        alphabet: pres.alphabet().clone(),
        order: order.clone(),
        bound,
        elems: Vec::new(),
        leads: Vec::new(),
    };
    let mut pending: Vec<Vec<ExtPoly>> = vec![Vec::new(); bound + 1];
    pending[2] = pres
        .relations()
        .iter()
        .map(|r| to_exterior(&order.rank_poly(r)))
        .collect();
    for d in 2..=bound {
        let first_new = gb.elems.len();
        for s in std::mem::take(&mut pending[d]) {
            let r = gb.reduce(s);
            if !r.is_empty() {
                gb.adjoin(monic(r), &mut pending);
            }
        }
        for k in first_new..gb.elems.len() {
            let mut tail = gb.elems[k].clone();
            let (lead, one) = tail.pop_last().expect("nonzero element");
            let mut fresh = gb.reduce(tail);
            fresh.insert(lead, one);
            gb.elems[k] = fresh;
        }
    }
    gb
}

impl ExteriorGB {
    fn adjoin(&mut self, f: ExtPoly, pending: &mut [Vec<ExtPoly>]) {
        let lead = leading(&f).expect("nonzero").0;
        let one = Coeff::one();
        for r in lead.ranks() {
            if lead.degree() < self.bound {
                pending[lead.degree() + 1].push(left_multiply(ExtMonomial(1u64 << r), &one, &f));
            }
        }
        for (g, &other) in self.elems.iter().zip(&self.leads) {
            let union = ExtMonomial(lead.0 | other.0);
            if union.degree() > self.bound {
                continue;
            }
            let a = ExtMonomial(union.0 & !lead.0);
            let b = ExtMonomial(union.0 & !other.0);
            let sign = |m: ExtMonomial, l: ExtMonomial| {
                if m.times(l).expect("disjoint").1 {
                    -Coeff::one()
                } else {
                    Coeff::one()
                }
            };
            let mut s = left_multiply(a, &sign(a, lead), &f);
            for (m, c) in left_multiply(b, &sign(b, other), g) {
                add_term(&mut s, m, -c);
            }
            pending[union.degree()].push(s);
        }
        self.elems.push(f);
        self.leads.push(lead);
    }

    fn reduce(&self, mut rem: ExtPoly) -> ExtPoly {
        let mut out = ExtPoly::new();
        while let Some((m, c)) = rem.pop_last() {
            match self.leads.iter().position(|&l| m.contains(l)) {
                Some(k) => {
                    let cofactor = ExtMonomial(m.0 & !self.leads[k].0);
                    let negative = cofactor.times(self.leads[k]).expect("disjoint").1;
                    let scale = if negative { c } else { -c };
                    for (t, x) in left_multiply(cofactor, &scale, &self.elems[k]) {
                        if t != m {
                            add_term(&mut rem, t, x);
                        }
                    }
                }
                None => {
                    out.insert(m, c);
                }
            }
        }
        out
    }

    fn letters_of(&self, m: ExtMonomial) -> Vec<Letter> {
        let unranked = self.order.from_ranked(&m.ranks().into());
        unranked.letters().to_vec()
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.leads.iter().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Leading monomials of the given degree, each as its letters in
    /// descending precedence; the list ascends in the monomial order.
    pub fn leading_monomials(&self, degree: usize) -> Vec<Vec<Letter>> {
        let mut ms: Vec<ExtMonomial> = self.leads.iter().copied().filter(|m| m.degree() == degree).collect();
        ms.sort();
        ms.into_iter().map(|m| self.letters_of(m)).collect()
    }

    fn normal_monomials_ranked(&self, max_degree: usize) -> Result<Vec<Vec<ExtMonomial>>> {
        if max_degree > self.bound {
            return Err(Error::DegreeExceedsBound {
                degree: max_degree,
                bound: self.bound,
            });
        }
        let m = self.alphabet.len() as u32;
        let mut levels = vec![vec![ExtMonomial(0)]];
        for _ in 1..=max_degree {
            let mut next = Vec::new();
            for w in levels.last().expect("level 0") {
                let top = 64 - w.0.leading_zeros();
                for r in top..m {
                    let x = ExtMonomial(w.0 | 1u64 << r);
                    if !self.leads.iter().any(|&l| x.contains(l)) {
                        next.push(x);
                    }
                }
            }
            levels.push(next);
        }
        Ok(levels)
    }

    /// Normal monomials of degree `d`, as letters in descending precedence.
    pub fn normal_monomials(&self, d: usize) -> Result<Vec<Vec<Letter>>> {
        let mut level = self.normal_monomials_ranked(d)?.swap_remove(d);
        level.sort();
        Ok(level.into_iter().map(|m| self.letters_of(m)).collect())
    }

    pub fn dim_vector(&self, max_degree: usize) -> Result<DimVector> {
        Ok(DimVector {
            dims: self.normal_monomials_ranked(max_degree)?.iter().map(Vec::len).collect(),
        })
    }

    /// One element per line in leading-monomial order, terms descending.
    pub fn dump(&self) -> String {
        let mut idx: Vec<usize> = (0..self.elems.len()).collect();
        idx.sort_by_key(|&k| self.leads[k]);
        let mut out = String::new();
        for k in idx {
            let mut line = String::new();
            for (m, c) in self.elems[k].iter().rev() {
                let word = self.letters_of(*m).into();
                let term = NcPolynomial::term(word, c.clone()).render(&self.alphabet);
                match (line.is_empty(), term.strip_prefix('-')) {
                    (true, _) => line.push_str(&term),
                    (false, Some(neg)) => {
                        line.push_str(" - ");
                        line.push_str(neg);
                    }
                    (false, None) => {
                        line.push_str(" + ");
                        line.push_str(&term);
                    }
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Precedence;
    use crate::graphs::{Family, Graph};
    use crate::oracle;
    use crate::presentations::{b_presentation, bdual_handwritten, exterior_relations, quadratic_dual};

    fn fam(f: Family, n: usize) -> Graph {
        Graph::named_family(f, n).unwrap()
    }

    #[test]
    fn signs_of_products() {
        let (a, b, c) = (ExtMonomial(1), ExtMonomial(2), ExtMonomial(4));
        // x1 · x0 is already descending; x0 · x1 = -x1 x0
        assert_eq!(b.times(a), Some((ExtMonomial(3), false)));
        assert_eq!(a.times(b), Some((ExtMonomial(3), true)));
        assert_eq!(a.times(a), None);
        // x0 · (x2 x1) = x2 x1 x0 after two swaps
        assert_eq!(a.times(ExtMonomial(6)), Some((ExtMonomial(7), false)));
        assert_eq!(b.times(ExtMonomial(5)), Some((ExtMonomial(7), true)));
        assert!(ExtMonomial(4) < ExtMonomial(3));
        assert!(ExtMonomial(6) > ExtMonomial(5) && ExtMonomial(5) > ExtMonomial(3));
        assert!(c.contains(c) && !c.contains(a));
    }

    #[test]
    fn exterior_relations_vanish() {
        let a = Alphabet::for_graph(&fam(Family::Empty, 3), 'e');
        for r in exterior_relations(&a) {
            assert!(to_exterior(&r).is_empty());
        }
    }

    #[test]
    fn path3_is_quadratic() {
        let h = bdual_handwritten(&fam(Family::Line, 3));
        let a = h.alphabet();
        for p in Precedence::ALL {
            let gb = complete_exterior(&h, &MonomialOrder::new(a, p), 4);
            assert_eq!(gb.max_degree(), 2);
            assert_eq!(gb.dim_vector(4).unwrap().dims, vec![1, 5, 5, 1, 0]);
            // four vertex-edge incidences and one pair of adjacent edges
            assert_eq!(gb.leading_monomials(2).len(), 5);
            let top = gb.normal_monomials(3).unwrap();
            assert_eq!(
                top,
                vec![vec![a.vertex(3).unwrap(), a.vertex(2).unwrap(), a.vertex(1).unwrap()]]
            );
        }
    }

    #[test]
    fn triangle_family_leads_with_the_top_vertex() {
        let h = bdual_handwritten(&fam(Family::Complete, 3));
        let a = h.alphabet();
        let want = vec![a.vertex(3).unwrap(), a.edge(2, 1).unwrap()];
        for p in Precedence::ALL {
            let gb = complete_exterior(&h, &MonomialOrder::new(a, p), 4);
            assert_eq!(gb.max_degree(), 2);
            assert!(gb.leading_monomials(2).contains(&want));
            assert_eq!(gb.dim_vector(4).unwrap().dims, vec![1, 6, 5, 1, 0]);
        }
    }

    #[test]
    fn agrees_with_rank_oracle() {
        for g in [
            fam(Family::Star, 4),
            fam(Family::Cycle, 4),
            fam(Family::Line, 4),
            fam(Family::Butterfly, 5),
        ] {
            let dual = quadratic_dual(&b_presentation(&g));
            let gb = complete_exterior(&dual, &MonomialOrder::new(dual.alphabet(), Precedence::Default), 5);
            let want = oracle::quotient_dims(dual.alphabet().len(), dual.relations(), 5);
            assert_eq!(gb.dim_vector(5).unwrap().dims, want, "{g}");
        }
    }

    #[test]
    fn bound_errors() {
        let h = bdual_handwritten(&fam(Family::Line, 2));
        let gb = complete_exterior(&h, &MonomialOrder::new(h.alphabet(), Precedence::Default), 3);
        assert!(matches!(
            gb.dim_vector(4),
            Err(Error::DegreeExceedsBound { degree: 4, bound: 3 })
        ));
        assert_eq!(gb.dump().lines().count(), gb.len());
    }
}
