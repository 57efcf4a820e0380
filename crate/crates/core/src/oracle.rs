//! Graded dimensions of `T(V)/(R)` by exact linear algebra, independent of
//! the Gröbner engine.
//!
//! [`quotient_dims`] works one degree at a time. With `A_{d-1}` known as a
//! set of basis words plus a reduction map, `A_d` is the cokernel of
//! `A_{d-2} ⊗ R → A_{d-1} ⊗ V`, since
//! `I_d = I_{d-1} ⊗ V + V^{⊗(d-2)} ⊗ R`. Matrices stay the size of the
//! quotient rather than of the tensor power.
//!
//! [`ideal_rank_dims`] is the direct route: the rank of the span of every
//! `u·r·v` inside all words of degree `d`. Exponential, for small checks.

use std::collections::HashMap;

use crate::freealg::{all_words, Coeff, Echelon, NcPolynomial, SparseVec, Word};

/// One degree of the quotient: basis words and the elimination that
/// rewrites any column in terms of them.
struct Stage {
    basis: Vec<Word>,
    /// column -> basis index, for free columns
    free: HashMap<usize, usize>,
    echelon: Echelon,
}

impl Stage {
    /// Coordinates of a column's class in the basis of this degree.
    fn express(&self, col: usize) -> Vec<(usize, Coeff)> {
        self.echelon
            .reduce(vec![(col, Coeff::from_integer(1.into()))])
            .into_iter()
            .map(|(c, x)| (self.free[&c], x))
            .collect()
    }
}

/// `dim A_d` for `d = 0..=max_degree`, where `A = T(V)/(relations)` and all
/// relations are homogeneous of degree 2 over `alphabet_size` letters.
pub fn quotient_dims(alphabet_size: usize, relations: &[NcPolynomial], max_degree: usize) -> Vec<usize> {
    let m = alphabet_size;
    let mut dims = vec![1];
    if max_degree == 0 {
        return dims;
    }
    dims.push(m);
    // degree 0 and degree 1 stages: columns are the letters themselves
    let letters: Vec<Word> = all_words(m, 1);
    let mut prev2 = Stage {
        basis: vec![Word::empty()],
        free: HashMap::from([(0, 0)]),
        echelon: Echelon::new(),
    };
    let mut prev1 = Stage {
        basis: letters,
        free: (0..m).map(|k| (k, k)).collect(),
        echelon: Echelon::new(),
    };
    // stage d columns: (basis index in A_{d-1}) * m + letter
    for _d in 2..=max_degree {
        let mut echelon = Echelon::new();
        for (wi, _) in prev2.basis.iter().enumerate() {
            for r in relations {
                let mut row: HashMap<usize, Coeff> = HashMap::new();
                for (word, c) in r.terms() {
                    let (x, y) = (word.letters()[0] as usize, word.letters()[1] as usize);
                    // the class of (w·x) in A_{d-1}, tensored with y
                    for (b, coef) in prev1.express(wi * m + x) {
                        *row.entry(b * m + y).or_insert_with(|| Coeff::from_integer(0.into())) += c * &coef;
                    }
                }
                let mut v: SparseVec = row
                    .into_iter()
                    .filter(|(_, x)| *x != Coeff::from_integer(0.into()))
                    .collect();
                v.sort_by_key(|e| e.0);
                echelon.insert(v);
            }
        }
        let cols = prev1.basis.len() * m;
        let mut basis = Vec::new();
        let mut free = HashMap::new();
        for col in 0..cols {
            if !echelon.is_pivot(col) {
                free.insert(col, basis.len());
                let mut w = prev1.basis[col / m].clone();
                w.push((col % m) as u8);
                basis.push(w);
            }
        }
        dims.push(basis.len());
        prev2 = prev1;
        prev1 = Stage { basis, free, echelon };
    }
    dims
}

/// `dim T(V)_d − dim(Σ V^a ⊗ R ⊗ V^b)` computed directly on all words.
pub fn ideal_rank_dims(alphabet_size: usize, relations: &[NcPolynomial], max_degree: usize) -> Vec<usize> {
    let m = alphabet_size;
    (0..=max_degree)
        .map(|d| {
            let total = m.pow(d as u32);
            if d < 2 {
                return total;
            }
            let index: HashMap<Word, usize> = all_words(m, d).into_iter().enumerate().map(|(k, w)| (w, k)).collect();
            let mut ech = Echelon::new();
            for a in 0..=d - 2 {
                let lefts = all_words(m, a);
                let rights = all_words(m, d - 2 - a);
                for u in &lefts {
                    for v in &rights {
                        for r in relations {
                            let mut row: SparseVec = r
                                .terms()
                                .map(|(w, c)| (index[&w.pad(u.letters(), v.letters())], c.clone()))
                                .collect();
                            row.sort_by_key(|e| e.0);
                            ech.insert(row);
                        }
                    }
                }
            }
            total - ech.rank()
        })
        .collect()
}
