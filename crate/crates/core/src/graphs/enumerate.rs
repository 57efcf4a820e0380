//! Isomorphism classes of small graphs by exhaustive permutation search.
//!
//! The canonical representative of a class is the relabeling whose sorted
//! edge list is lexicographically smallest. Graphs on `n` vertices are
//! produced by attaching a new vertex to every class on `n - 1` vertices in
//! every possible way and keeping one representative per canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{normalize, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`enumerate_graphs`] and [`canonical_form`].
pub const ENUMERATION_LIMIT: usize = 7;

/// Position of the normalized pair `(i, j)`, `i > j`, in the ascending
/// lexicographic order of all pairs: `(2,1), (3,1), (3,2), (4,1), ...`.
fn pair_rank(i: usize, j: usize) -> usize {
    (i - 1) * (i - 2) / 2 + (j - 1)
}

fn pair_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| p[k] < p[k + 1]) else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| p[k] < p[l]).unwrap();
        p.swap(k, l);
        p[k + 1..].reverse();
    }
}

/// Per-permutation lookup tables mapping a pair rank to its key bit.
///
/// The key of a graph puts the pair of rank `r` at bit `P - 1 - r`, so among
/// graphs with equally many edges the larger key is the lexicographically
/// smaller sorted edge list.
struct KeyTables {
    pairs: Vec<(usize, usize)>,
    tables: Vec<Vec<u8>>,
}

impl KeyTables {
    fn new(n: usize) -> KeyTables {
        let total = pair_count(n);
        let mut pairs = vec![(0, 0); total];
        for i in 2..=n {
            for j in 1..i {
                pairs[pair_rank(i, j)] = (i, j);
            }
        }
        let tables = permutations(n)
            .into_iter()
            .map(|perm| {
                pairs
                    .iter()
                    .map(|&(i, j)| {
                        let (a, b) = normalize(perm[i - 1] + 1, perm[j - 1] + 1);
                        (total - 1 - pair_rank(a, b)) as u8
                    })
                    .collect()
            })
            .collect();
        KeyTables { pairs, tables }
    }

    fn canonical_key(&self, rank_mask: u64) -> u64 {
        let ranks: Vec<usize> = (0..self.pairs.len()).filter(|&r| rank_mask >> r & 1 == 1).collect();
        self.tables
            .iter()
            .map(|t| ranks.iter().fold(0u64, |acc, &r| acc | 1 << t[r]))
            .max()
            .unwrap_or(0)
    }

    fn key_to_rank_mask(&self, key: u64) -> u64 {
        let total = self.pairs.len();
        (0..total)
            .filter(|&p| key >> p & 1 == 1)
            .fold(0u64, |acc, p| acc | 1 << (total - 1 - p))
    }

    fn graph_from_rank_mask(&self, n: usize, mask: u64) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..self.pairs.len())
            .filter(|&r| mask >> r & 1 == 1)
            .map(|r| self.pairs[r])
            .collect();
        Graph::from_edge_list(n, &pairs).expect("pairs are in range")
    }
}

fn rank_mask(g: &Graph) -> u64 {
    g.edges().fold(0u64, |acc, (i, j)| acc | 1 << pair_rank(i, j))
}

/// The relabeling of `g` with the lexicographically smallest sorted edge list.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::EnumerationBudget {
            requested: g.n(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let tables = KeyTables::new(g.n());
    let key = tables.canonical_key(rank_mask(g));
    Ok(tables.graph_from_rank_mask(g.n(), tables.key_to_rank_mask(key)))
}

/// True iff some vertex permutation carries the edge set of `a` onto that of `b`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut degrees_a: Vec<usize> = (1..=a.n()).map(|v| a.degree(v)).collect();
    let mut degrees_b: Vec<usize> = (1..=b.n()).map(|v| b.degree(v)).collect();
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return false;
    }
    permutations(a.n())
        .iter()
        .any(|perm| a.edges().all(|(i, j)| b.has_edge(perm[i - 1] + 1, perm[j - 1] + 1)))
}

/// One canonical representative per isomorphism class of graphs with
/// `1..=max_n` vertices, ordered by vertex count, then edge count, then
/// edge list. With `no_isolated`, classes with an isolated vertex are dropped.
pub fn enumerate_graphs(max_n: usize, no_isolated: bool) -> Result<Vec<Graph>> {
    if max_n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationBudget {
            requested: max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    // canonical rank masks of the previous vertex count
    let mut level: Vec<u64> = vec![0];
    for n in 1..=max_n {
        let tables = KeyTables::new(n);
        if n > 1 {
            let candidates: Vec<u64> = level
                .iter()
                .flat_map(|&base| {
                    (0u64..1 << (n - 1)).map(move |nbrs| {
                        (1..n)
                            .filter(|&s| nbrs >> (s - 1) & 1 == 1)
                            .fold(base, |acc, s| acc | 1 << pair_rank(n, s))
                    })
                })
                .collect();
            let keys: BTreeSet<u64> = candidates.par_iter().map(|&m| tables.canonical_key(m)).collect();
            level = keys.iter().map(|&k| tables.key_to_rank_mask(k)).collect();
        }
        let mut graphs: Vec<Graph> = level
            .iter()
            .map(|&m| tables.graph_from_rank_mask(n, m))
            .filter(|g| !(no_isolated && g.has_isolated_vertex()))
            .collect();
        graphs.sort_by(|a, b| {
            a.edge_count()
                .cmp(&b.edge_count())
                .then_with(|| a.edges().cmp(b.edges()))
        });
        out.extend(graphs);
    }
    Ok(out)
}
