use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Alphabet, Letter, MonomialOrder, Word};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

#[cfg(test)]
pub(crate) fn int(k: i64) -> Coeff {
    BigRational::from_integer(num_bigint::BigInt::from(k))
}

/// A finite exact-rational combination of words. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Coeff>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Coeff::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::from_letters(&[l]))
    }

    pub fn term(w: Word, c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Coeff)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Add `c·w` in place.
    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending default word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.terms.keys().next()?.degree();
        self.terms.keys().all(|w| w.degree() == d).then_some(d)
    }

    /// Check every term has degree `d`.
    pub fn expect_homogeneous(&self, d: usize) -> Result<()> {
        match self.terms.keys().find(|w| w.degree() != d) {
            Some(w) => Err(Error::Inhomogeneous {
                expected: d,
                found: w.degree(),
            }),
            None => Ok(()),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `left · self · right` for words.
    pub fn pad(&self, left: &[Letter], right: &[Letter]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.pad(left, right), c.clone()))
                .collect(),
        }
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Order-maximal word and its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Word, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Leading term under the default order (the largest stored word).
    pub fn natural_leading(&self) -> Option<(&Word, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Remove and return the largest term under the default order.
    pub(crate) fn pop_leading(&mut self) -> Option<(Word, Coeff)> {
        self.terms.pop_last()
    }

    /// Divide by the default-order leading coefficient.
    pub fn monic(&self) -> Self {
        match self.natural_leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Self::zero(),
        }
    }

    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.map(&f), c.clone())))
    }

    /// Render with terms in descending default order, e.g. `u2*u1 - u1*u2`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let body = alphabet.render_word(w);
            if mag.is_one() {
                out.push_str(&body);
            } else if w.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{}*{}", mag, body));
            }
        }
        out
    }
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Precedence;
    use crate::graphs::{Family, Graph};
    use proptest::prelude::*;

    fn u(l: Letter) -> NcPolynomial {
        NcPolynomial::letter(l)
    }

    fn w(ls: &[Letter]) -> Word {
        Word::from_letters(ls)
    }

    #[test]
    fn multiply_examples() {
        let p = &u(1) * &u(2);
        assert_eq!(p, NcPolynomial::word(w(&[1, 2])));
        let q = &(&u(1) + &u(2)) * &(&u(1) - &u(2));
        let expected = NcPolynomial::from_terms([
            (w(&[1, 1]), int(1)),
            (w(&[1, 2]), int(-1)),
            (w(&[2, 1]), int(1)),
            (w(&[2, 2]), int(-1)),
        ]);
        assert_eq!(q, expected);
        assert_eq!(&NcPolynomial::one() * &q, q);
    }

    #[test]
    fn commutator_examples() {
        assert!(NcPolynomial::commutator(&u(1), &u(1)).is_zero());
        assert_eq!(
            NcPolynomial::commutator(&u(1), &u(2)),
            &NcPolynomial::word(w(&[1, 2])) - &NcPolynomial::word(w(&[2, 1]))
        );
        assert_eq!(
            NcPolynomial::commutator(&(&u(1) + &u(2)), &u(1)),
            &NcPolynomial::word(w(&[2, 1])) - &NcPolynomial::word(w(&[1, 2]))
        );
    }

    #[test]
    fn leading_terms() {
        let g = Graph::named_family(Family::Line, 2).unwrap();
        let a = Alphabet::for_graph(&g, 'u');
        let ord = MonomialOrder::new(&a, Precedence::Default);
        let (u1, u2) = (a.vertex(1).unwrap(), a.vertex(2).unwrap());
        let c = NcPolynomial::commutator(&u(u1), &u(u2));
        assert_eq!(c.leading_term(&ord).unwrap(), (w(&[u2, u1]), int(-1)));
        let single = NcPolynomial::word(w(&[u1, u2]));
        assert_eq!(single.leading_term(&ord).unwrap().0, w(&[u1, u2]));
        assert_eq!(NcPolynomial::zero().leading_term(&ord), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rendering() {
        let g = Graph::named_family(Family::Line, 2).unwrap();
        let a = Alphabet::for_graph(&g, 'u');
        let (e, u1, u2) = (0, 1, 2);
        let r = &(&NcPolynomial::commutator(&u(u1), &u(u2)) - &(&u(e) * &(&u(u1) - &u(u2))))
            + &NcPolynomial::term(w(&[e, e]), BigRational::new(1.into(), 2.into()));
        assert_eq!(r.render(&a), "-u2*u1 + u1*u2 + u21*u2 - u21*u1 + 1/2*u21*u21");
        assert_eq!(NcPolynomial::zero().render(&a), "0");
        assert_eq!(NcPolynomial::one().scale(&int(3)).render(&a), "3");
    }

    fn arb_poly() -> impl Strategy<Value = NcPolynomial> {
        prop::collection::vec((prop::collection::vec(0u8..3, 0..3), -3i64..=3), 0..4)
            .prop_map(|ts| NcPolynomial::from_terms(ts.into_iter().map(|(l, c)| (Word::from(l), int(c)))))
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }
    }
}
