//! The free associative algebra on the generators of a graph.
//!
//! Generators are indexed by the vertices and edges of a graph. Inside a
//! given [`Alphabet`] each generator is a [`Letter`], and letters are
//! numbered so that their numeric order is the default precedence: edge
//! generators first (ascending by normalized pair), then the vertex
//! generators `1..=n`. A [`Word`]'s own `Ord` is therefore the default
//! degree-lexicographic order; other orders are handled by renumbering
//! letters through a [`MonomialOrder`].

mod linalg;
mod order;
mod poly;

use std::borrow::Borrow;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

use crate::graphs::{Edge, Graph};

pub use linalg::{graded_row_reduce, same_span, span_contains};
pub(crate) use linalg::{Echelon, SparseVec};
pub use order::{MonomialOrder, Precedence};
pub use poly::{Coeff, NcPolynomial};

pub type Letter = u8;

/// A generator: `u_i` / `e_i` for a vertex, `u_ij` / `e_ij` for an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    Vertex(usize),
    Edge(usize, usize),
}

impl Variable {
    pub fn render(&self, prefix: char) -> String {
        match *self {
            Variable::Vertex(i) => format!("{prefix}{i}"),
            Variable::Edge(i, j) if i < 10 && j < 10 => format!("{prefix}{i}{j}"),
            Variable::Edge(i, j) => format!("{prefix}{i}_{j}"),
        }
    }
}

/// The generators of a graph algebra, with a rendering prefix (`u` for the
/// algebras themselves, `e` for their duals).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    prefix: char,
    vars: Vec<Variable>,
    index: HashMap<Variable, Letter>,
}

impl Alphabet {
    pub fn for_graph(g: &Graph, prefix: char) -> Alphabet {
        let vars: Vec<Variable> = g
            .edges()
            .map(|(i, j)| Variable::Edge(i, j))
            .chain((1..=g.n()).map(Variable::Vertex))
            .collect();
        Alphabet::from_variables(prefix, vars)
    }

    pub fn from_variables(prefix: char, vars: Vec<Variable>) -> Alphabet {
        assert!(vars.len() <= Letter::MAX as usize, "alphabet too large");
        let index = vars.iter().enumerate().map(|(k, v)| (*v, k as Letter)).collect();
        Alphabet { prefix, vars, index }
    }

    /// Same generators under the other rendering prefix.
    pub fn with_prefix(&self, prefix: char) -> Alphabet {
        Alphabet { prefix, ..self.clone() }
    }

    pub fn prefix(&self) -> char {
        self.prefix
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn variable(&self, l: Letter) -> Variable {
        self.vars[l as usize]
    }

    pub fn letter(&self, v: Variable) -> Option<Letter> {
        self.index.get(&v).copied()
    }

    pub fn vertex(&self, i: usize) -> Option<Letter> {
        self.letter(Variable::Vertex(i))
    }

    /// Letter of the edge generator for `(i, j)` in either orientation.
    pub fn edge(&self, i: usize, j: usize) -> Option<Letter> {
        let (a, b): Edge = crate::graphs::normalize(i, j);
        self.letter(Variable::Edge(a, b))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.vars.len() as Letter
    }

    pub fn render_letter(&self, l: Letter) -> String {
        self.variable(l).render(self.prefix)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&l| self.render_letter(l))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// `alphabet: u1 u2 ...` in letter order.
    pub fn render(&self) -> String {
        let names: Vec<String> = self.letters().map(|l| self.render_letter(l)).collect();
        format!("alphabet: {}", names.join(" "))
    }
}

/// A finite sequence of letters. Ordered by length first, then
/// lexicographically by letter number.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Word(SmallVec<[Letter; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        Word(SmallVec::from_slice(letters))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// `left · self · right`.
    pub fn pad(&self, left: &[Letter], right: &[Letter]) -> Word {
        let mut out = SmallVec::with_capacity(left.len() + self.0.len() + right.len());
        out.extend_from_slice(left);
        out.extend_from_slice(&self.0);
        out.extend_from_slice(right);
        Word(out)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn map(&self, f: impl Fn(Letter) -> Letter) -> Word {
        Word(self.0.iter().map(|&l| f(l)).collect())
    }

    /// Position of the first occurrence of `sub` as a contiguous subword.
    pub fn find(&self, sub: &[Letter]) -> Option<usize> {
        if sub.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - sub.len()).find(|&p| &self.0[p..p + sub.len()] == sub)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Word {
        Word(SmallVec::from_vec(v))
    }
}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_slice().hash(state)
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// All words of degree `d` over `size` letters, ascending.
pub fn all_words(size: usize, d: usize) -> Vec<Word> {
    let mut words = vec![Word::empty()];
    for _ in 0..d {
        words = words
            .iter()
            .flat_map(|w| {
                (0..size).map(move |l| {
                    let mut x = w.clone();
                    x.push(l as Letter);
                    x
                })
            })
            .collect();
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Family;

    #[test]
    fn alphabet_layout_is_default_precedence() {
        let g = Graph::named_family(Family::Line, 3).unwrap();
        let a = Alphabet::for_graph(&g, 'u');
        assert_eq!(a.render(), "alphabet: u21 u32 u1 u2 u3");
        assert_eq!(a.edge(1, 2), Some(0));
        assert_eq!(a.vertex(3), Some(4));
        assert_eq!(a.edge(1, 3), None);
        assert_eq!(a.with_prefix('e').render_letter(1), "e32");
    }

    #[test]
    fn word_order_is_degree_first() {
        let a = Word::from_letters(&[5]);
        let b = Word::from_letters(&[0, 0]);
        let c = Word::from_letters(&[0, 1]);
        assert!(a < b && b < c);
        assert!(Word::empty() < a);
    }

    #[test]
    fn find_subword() {
        let w = Word::from_letters(&[1, 2, 3, 2, 3]);
        assert_eq!(w.find(&[2, 3]), Some(1));
        assert_eq!(w.find(&[3, 1]), None);
        assert_eq!(w.find(&[]), Some(0));
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(all_words(3, 2).len(), 9);
        assert_eq!(all_words(2, 0), vec![Word::empty()]);
        let w = all_words(2, 3);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }
}
