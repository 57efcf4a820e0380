//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Edges are stored normalized as `(larger, smaller)`, so `(2, 1)` and
//! `(1, 2)` name the same edge. The module also holds the triangle analysis
//! that decides whether a graph belongs to the overlapping-triangle-free
//! class, and a brute-force subgraph search used to cross-check it.

mod enumerate;
pub mod format;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{are_isomorphic, canonical_form, enumerate_graphs, ENUMERATION_LIMIT};

/// A normalized undirected edge `(i, j)` with `i > j`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// A triangle `(a, b, c)` with `a > b > c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub usize, pub usize, pub usize);

impl Triangle {
    pub fn vertices(&self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v || self.2 == v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

/// Normalize an unordered pair to `(larger, smaller)`.
pub fn normalize(i: usize, j: usize) -> Edge {
    if i > j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Empty,
    Line,
    Star,
    Cycle,
    Complete,
    Butterfly,
    Diamond,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Empty,
        Family::Line,
        Family::Star,
        Family::Cycle,
        Family::Complete,
        Family::Butterfly,
        Family::Diamond,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Empty => "empty",
            Family::Line => "line",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Butterfly => "butterfly",
            Family::Diamond => "diamond",
        }
    }

    /// The vertex count a family is pinned to, if any.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            Family::Butterfly => Some(5),
            Family::Diamond => Some(4),
            _ => None,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "empty" => Ok(Family::Empty),
            "line" | "path" => Ok(Family::Line),
            "star" => Ok(Family::Star),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "butterfly" => Ok(Family::Butterfly),
            "diamond" => Ok(Family::Diamond),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl Graph {
    /// Graph on `1..=n` with no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Graph {
            n,
            edges: BTreeSet::new(),
        })
    }

    /// Build a graph from 1-based pairs in either orientation, dropping duplicates.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in pairs {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::VertexOutOfRange { i, j, n });
            }
            if i == j {
                return Err(Error::Loop { i, j });
            }
            g.edges.insert(normalize(i, j));
        }
        Ok(g)
    }

    pub fn named_family(family: Family, n: usize) -> Result<Graph> {
        let bad = |reason| Error::IncompatibleSize {
            family: family.name().to_string(),
            n,
            reason,
        };
        if let Some(size) = family.fixed_size() {
            if n != size {
                return Err(bad(if size == 5 {
                    "the butterfly has exactly 5 vertices"
                } else {
                    "the diamond has exactly 4 vertices"
                }));
            }
        }
        let pairs: Vec<(usize, usize)> = match family {
            Family::Empty => Vec::new(),
            Family::Line => (1..n).map(|i| (i, i + 1)).collect(),
            Family::Star => (2..=n).map(|i| (1, i)).collect(),
            Family::Cycle => {
                if n < 3 {
                    return Err(bad("a cycle needs at least 3 vertices"));
                }
                let mut p: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                p.push((n, 1));
                p
            }
            Family::Complete => (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect(),
            Family::Butterfly => vec![(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)],
            Family::Diamond => vec![(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)],
        };
        Graph::from_edge_list(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(i, j)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&normalize(i, j))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (1..=self.n).any(|v| self.degree(v) == 0)
    }

    /// All triangles, each sorted descending, in lexicographic order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for a in 3..=self.n {
            for b in 2..a {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in 1..b {
                    if self.has_edge(a, c) && self.has_edge(b, c) {
                        out.push(Triangle(a, b, c));
                    }
                }
            }
        }
        out
    }

    /// True iff two distinct triangles share a vertex.
    pub fn has_overlapping_triangles(&self) -> bool {
        let tris = self.triangles();
        tris.iter().enumerate().any(|(k, s)| {
            tris[k + 1..]
                .iter()
                .any(|t| s.vertices().iter().any(|&v| t.contains(v)))
        })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangles().is_empty()
    }

    /// True iff some injective vertex map sends every edge of `pattern` to an
    /// edge of `self` (subgraph, not necessarily induced).
    pub fn contains_subgraph(&self, pattern: &Graph) -> bool {
        if pattern.n > self.n || pattern.edge_count() > self.edge_count() {
            return false;
        }
        let mut image = vec![0usize; pattern.n + 1];
        let mut used = vec![false; self.n + 1];
        self.embed(pattern, 1, &mut image, &mut used)
    }

    fn embed(&self, pattern: &Graph, v: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if v > pattern.n {
            return true;
        }
        for w in 1..=self.n {
            if used[w] {
                continue;
            }
            let consistent = (1..v)
                .filter(|&u| pattern.has_edge(u, v))
                .all(|u| self.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            if self.embed(pattern, v + 1, image, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }

    /// Relabel vertices: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| normalize(perm[i - 1], perm[j - 1]))
                .collect(),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (k, (i, j)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", i, j)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Graph) -> Vec<Edge> {
        g.edges().collect()
    }

    #[test]
    fn from_edge_list_normalizes_and_dedups() {
        let p3 = Graph::from_edge_list(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(edges(&p3), vec![(2, 1), (3, 2)]);
        let single = Graph::from_edge_list(3, &[(2, 1), (1, 2)]).unwrap();
        assert_eq!(edges(&single), vec![(2, 1)]);
        assert!(single.has_edge(1, 2) && single.has_edge(2, 1));
    }

    #[test]
    fn from_edge_list_rejects_bad_pairs() {
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::Loop { i: 1, j: 1 }));
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { i: 1, j: 4, n: 3 })
        );
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 1)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert_eq!(Graph::empty(0), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn families() {
        let star = Graph::named_family(Family::Star, 4).unwrap();
        assert_eq!(edges(&star), vec![(2, 1), (3, 1), (4, 1)]);
        let b = Graph::named_family(Family::Butterfly, 5).unwrap();
        assert_eq!(edges(&b), vec![(2, 1), (3, 1), (3, 2), (4, 1), (5, 1), (5, 4)]);
        let e = Graph::named_family(Family::Empty, 3).unwrap();
        assert_eq!((e.n(), e.edge_count()), (3, 0));
        let c4 = Graph::named_family(Family::Cycle, 4).unwrap();
        assert_eq!(edges(&c4), vec![(2, 1), (3, 2), (4, 1), (4, 3)]);
        assert_eq!(Graph::named_family(Family::Complete, 5).unwrap().edge_count(), 10);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(
            Graph::named_family(Family::Butterfly, 4),
            Err(Error::IncompatibleSize { .. })
        ));
        assert!(matches!(
            Graph::named_family(Family::Diamond, 5),
            Err(Error::IncompatibleSize { .. })
        ));
        assert!(matches!(
            Graph::named_family(Family::Cycle, 2),
            Err(Error::IncompatibleSize { .. })
        ));
        assert_eq!("hexagon".parse::<Family>(), Err(Error::UnknownFamily("hexagon".into())));
    }

    #[test]
    fn triangle_lists() {
        let k3 = Graph::named_family(Family::Complete, 3).unwrap();
        assert_eq!(k3.triangles(), vec![Triangle(3, 2, 1)]);
        let p3 = Graph::named_family(Family::Line, 3).unwrap();
        assert!(p3.triangles().is_empty());
        let d = Graph::named_family(Family::Diamond, 4).unwrap();
        assert_eq!(d.triangles(), vec![Triangle(3, 2, 1), Triangle(4, 3, 1)]);
    }

    #[test]
    fn diamond_triangles_by_exhaustion() {
        let d = Graph::named_family(Family::Diamond, 4).unwrap();
        let mut found = Vec::new();
        for a in 1..=4 {
            for b in 1..a {
                for c in 1..b {
                    if d.has_edge(a, b) && d.has_edge(a, c) && d.has_edge(b, c) {
                        found.push(Triangle(a, b, c));
                    }
                }
            }
        }
        found.sort();
        assert_eq!(found, d.triangles());
    }

    #[test]
    fn overlap_and_triangle_freeness() {
        let k3 = Graph::named_family(Family::Complete, 3).unwrap();
        assert!(!k3.has_overlapping_triangles());
        assert!(!k3.is_triangle_free());
        assert!(Graph::named_family(Family::Butterfly, 5)
            .unwrap()
            .has_overlapping_triangles());
        assert!(Graph::named_family(Family::Diamond, 4)
            .unwrap()
            .has_overlapping_triangles());
        assert!(Graph::named_family(Family::Cycle, 4).unwrap().is_triangle_free());
        for n in 1..=7 {
            assert!(Graph::named_family(Family::Star, n).unwrap().is_triangle_free());
        }
        // two disjoint triangles do not overlap
        let two = Graph::from_edge_list(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(!two.has_overlapping_triangles());
    }

    #[test]
    fn subgraph_search() {
        let d = Graph::named_family(Family::Diamond, 4).unwrap();
        let k4 = Graph::named_family(Family::Complete, 4).unwrap();
        let c4 = Graph::named_family(Family::Cycle, 4).unwrap();
        assert!(k4.contains_subgraph(&d));
        assert!(d.contains_subgraph(&c4));
        assert!(!c4.contains_subgraph(&d));
    }
}
