//! Degree-truncated two-sided Buchberger completion in the free algebra.
//!
//! All input relations are homogeneous, so the completion runs degree by
//! degree: compositions of degree `d` are reduced against everything found
//! so far and nonzero remainders are adjoined, monic. After a degree is
//! finished its new elements are tail-reduced against each other, which
//! keeps the basis self-reduced. Below the bound every dimension read off
//! the normal words is exact.
//!
//! Internally words are stored with letters replaced by their rank in the
//! monomial order, so the natural `Word` ordering is the working order.

use std::collections::{BTreeSet, HashMap};

pub mod exterior;

pub use exterior::{complete_exterior, ExtMonomial, ExteriorGB};

use crate::error::{Error, Result};
use crate::freealg::{graded_row_reduce, Alphabet, Letter, MonomialOrder, NcPolynomial, Word};
use crate::presentations::QuadraticPresentation;

/// Paddings aligning two words: `left1 · w1 · right1 = left2 · w2 · right2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub left1: Word,
    pub right1: Word,
    pub left2: Word,
    pub right2: Word,
}

impl Overlap {
    pub fn degree(&self, w1: &Word) -> usize {
        self.left1.degree() + w1.degree() + self.right1.degree()
    }

    pub fn is_containment(&self) -> bool {
        (self.left1.is_empty() && self.right1.is_empty()) || (self.left2.is_empty() && self.right2.is_empty())
    }
}

/// Every proper overlap between `w1` and `w2` (a nonempty proper suffix of
/// one equal to a prefix of the other) and every proper containment of one
/// in the other.
pub fn overlaps(w1: &Word, w2: &Word) -> Vec<Overlap> {
    let (a, b) = (w1.letters(), w2.letters());
    let mut out = Vec::new();
    let suffix_prefix = |x: &[Letter], y: &[Letter]| {
        (1..x.len().min(y.len()))
            .filter(|&k| x[x.len() - k..] == y[..k])
            .map(|k| (Word::from_letters(&x[..x.len() - k]), Word::from_letters(&y[k..])))
            .collect::<Vec<_>>()
    };
    for (left, right) in suffix_prefix(a, b) {
        out.push(Overlap {
            left1: Word::empty(),
            right1: right,
            left2: left,
            right2: Word::empty(),
        });
    }
    if a != b {
        for (left, right) in suffix_prefix(b, a) {
            out.push(Overlap {
                left1: left,
                right1: Word::empty(),
                left2: Word::empty(),
                right2: right,
            });
        }
    }
    let contain = |big: &[Letter], small: &[Letter]| {
        if small.is_empty() || small.len() >= big.len() {
            return Vec::new();
        }
        (0..=big.len() - small.len())
            .filter(|&p| big[p..p + small.len()] == *small)
            .map(|p| {
                (
                    Word::from_letters(&big[..p]),
                    Word::from_letters(&big[p + small.len()..]),
                )
            })
            .collect()
    };
    for (left, right) in contain(a, b) {
        out.push(Overlap {
            left1: Word::empty(),
            right1: Word::empty(),
            left2: left,
            right2: right,
        });
    }
    for (left, right) in contain(b, a) {
        out.push(Overlap {
            left1: left,
            right1: right,
            left2: Word::empty(),
            right2: Word::empty(),
        });
    }
    out
}

/// Graded dimensions `dim A_0, dim A_1, ..., dim A_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimVector {
    pub dims: Vec<usize>,
}

impl DimVector {
    pub fn render(&self) -> String {
        self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedGB {
    alphabet: Alphabet,
    order: MonomialOrder,
    bound: usize,
    /// Monic elements in ranked letters; the natural leading word is the lead.
    elems: Vec<NcPolynomial>,
    leads: Vec<Word>,
    lookup: HashMap<Word, usize>,
    lead_lengths: BTreeSet<usize>,
}

/// Complete the relations of a quadratic presentation up to degree `bound`.
pub fn complete(pres: &QuadraticPresentation, order: &MonomialOrder, bound: usize) -> TruncatedGB {
    complete_relations(pres.alphabet(), pres.relations(), order, bound)
}

/// Complete arbitrary degree-2 relations up to degree `bound` (at least 2).
pub fn complete_relations(
    alphabet: &Alphabet,
    relations: &[NcPolynomial],
    order: &MonomialOrder,
    bound: usize,
) -> TruncatedGB {
    assert!(bound >= 2, "truncation bound must be at least 2");
    let ranked: Vec<NcPolynomial> = relations
        .iter()
        .map(|r| order.rank_poly(r))
        .filter(|r| !r.is_zero())
        .collect();
    let mut gb = TruncatedGB {
        alphabet: alphabet.clone(),
        order: order.clone(),
        bound,
        elems: Vec::new(),
        leads: Vec::new(),
        lookup: HashMap::new(),
        lead_lengths: BTreeSet::new(),
    };
    let mut pending: Vec<Vec<(usize, usize, Overlap)>> = vec![Vec::new(); bound + 1];
    let initial = graded_row_reduce(&ranked, 2).expect("relations must be quadratic");
    for r in initial {
        gb.adjoin(r, &mut pending);
    }
    for d in 3..=bound {
        let queue = std::mem::take(&mut pending[d]);
        let first_new = gb.elems.len();
        for (i, j, ov) in queue {
            let s = &gb.elems[i].pad(ov.left1.letters(), ov.right1.letters())
                - &gb.elems[j].pad(ov.left2.letters(), ov.right2.letters());
            let r = gb.reduce_ranked(s);
            if !r.is_zero() {
                gb.adjoin(r.monic(), &mut pending);
            }
        }
        for k in first_new..gb.elems.len() {
            let mut tail = gb.elems[k].clone();
            let (lead, one) = tail.pop_leading().expect("nonzero element");
            let mut fresh = gb.reduce_ranked(tail);
            fresh.add_term(lead, one);
            gb.elems[k] = fresh;
        }
    }
    gb
}

impl TruncatedGB {
    fn adjoin(&mut self, monic: NcPolynomial, pending: &mut [Vec<(usize, usize, Overlap)>]) {
        let lead = monic.natural_leading().expect("nonzero").0.clone();
        let k = self.elems.len();
        self.lookup.insert(lead.clone(), k);
        self.lead_lengths.insert(lead.degree());
        self.elems.push(monic);
        self.leads.push(lead);
        for j in 0..=k {
            for ov in overlaps(&self.leads[j], &self.leads[k]) {
                if ov.is_containment() {
                    continue;
                }
                let d = ov.degree(&self.leads[j]);
                if d <= self.bound {
                    pending[d].push((j, k, ov));
                }
            }
        }
    }

    /// Leftmost occurrence of a leading word; among those, the shortest.
    fn find_divisor(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &len in &self.lead_lengths {
                if start + len > w.len() {
                    break;
                }
                if let Some(&idx) = self.lookup.get(&w[start..start + len]) {
                    return Some((start, idx));
                }
            }
        }
        None
    }

    fn reduce_ranked(&self, mut rem: NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        while let Some((w, c)) = rem.pop_leading() {
            match self.find_divisor(w.letters()) {
                Some((pos, idx)) => {
                    let len = self.leads[idx].degree();
                    let (left, right) = (&w.letters()[..pos], &w.letters()[pos + len..]);
                    for (t, tc) in self.elems[idx].terms().rev().skip(1) {
                        rem.add_term(t.pad(left, right), -(&c * tc));
                    }
                }
                None => out.add_term(w, c),
            }
        }
        out
    }

    fn is_normal_ranked(&self, w: &[Letter]) -> bool {
        self.find_divisor(w).is_none()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
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

    /// Elements in the caller's letters, in the order they were found.
    pub fn elements(&self) -> Vec<NcPolynomial> {
        self.elems.iter().map(|p| self.order.unrank_poly(p)).collect()
    }

    /// Largest leading-word degree among the elements.
    pub fn max_degree(&self) -> usize {
        self.lead_lengths.iter().next_back().copied().unwrap_or(0)
    }

    /// Leading words of the given degree, ascending in the monomial order.
    pub fn leading_words(&self, degree: usize) -> Vec<Word> {
        let mut ranked: Vec<&Word> = self.leads.iter().filter(|w| w.degree() == degree).collect();
        ranked.sort();
        ranked.into_iter().map(|w| self.order.from_ranked(w)).collect()
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.is_normal_ranked(self.order.to_ranked(w).letters())
    }

    /// Remainder of `p` modulo the ideal: no word of the result contains a
    /// leading word.
    pub fn normal_form(&self, p: &NcPolynomial) -> Result<NcPolynomial> {
        if let Some(degree) = p.degree() {
            if degree > self.bound {
                return Err(Error::DegreeExceedsBound {
                    degree,
                    bound: self.bound,
                });
            }
        }
        let r = self.reduce_ranked(self.order.rank_poly(p));
        Ok(self.order.unrank_poly(&r))
    }

    /// Normal words of each degree `0..=max_degree`, ascending in the order.
    fn normal_words_ranked(&self, max_degree: usize) -> Result<Vec<Vec<Word>>> {
        if max_degree > self.bound {
            return Err(Error::DegreeExceedsBound {
                degree: max_degree,
                bound: self.bound,
            });
        }
        let m = self.alphabet.len() as Letter;
        let mut levels = vec![vec![Word::empty()]];
        for _ in 1..=max_degree {
            let prev = levels.last().expect("level 0");
            let mut next = Vec::new();
            for w in prev {
                for l in 0..m {
                    let mut x = w.clone();
                    x.push(l);
                    // w is normal, so only suffixes of x can hold a leading word
                    let letters = x.letters();
                    let hit = self
                        .lead_lengths
                        .iter()
                        .any(|&len| len <= letters.len() && self.lookup.contains_key(&letters[letters.len() - len..]));
                    if !hit {
                        next.push(x);
                    }
                }
            }
            levels.push(next);
        }
        Ok(levels)
    }

    pub fn normal_words(&self, degree: usize) -> Result<Vec<Word>> {
        let levels = self.normal_words_ranked(degree)?;
        Ok(levels[degree].iter().map(|w| self.order.from_ranked(w)).collect())
    }

    pub fn dim_vector(&self, max_degree: usize) -> Result<DimVector> {
        Ok(DimVector {
            dims: self.normal_words_ranked(max_degree)?.iter().map(Vec::len).collect(),
        })
    }

    /// One element per line in leading-word order, each rendered with its
    /// terms descending in the monomial order.
    pub fn dump(&self) -> String {
        let mut idx: Vec<usize> = (0..self.elems.len()).collect();
        idx.sort_by(|&a, &b| self.leads[a].cmp(&self.leads[b]));
        let mut out = String::new();
        for k in idx {
            let parts: Vec<String> = self.elems[k]
                .terms()
                .rev()
                .map(|(w, c)| {
                    let single = NcPolynomial::term(self.order.from_ranked(w), c.clone());
                    single.render(&self.alphabet)
                })
                .collect();
            let mut line = String::new();
            for (i, p) in parts.iter().enumerate() {
                if i == 0 {
                    line.push_str(p);
                } else if let Some(neg) = p.strip_prefix('-') {
                    line.push_str(" - ");
                    line.push_str(neg);
                } else {
                    line.push_str(" + ");
                    line.push_str(p);
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}
