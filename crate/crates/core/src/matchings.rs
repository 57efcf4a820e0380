//! Partial matchings and the closed formula for the dual Hilbert series.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NcPolynomial, Word};
use crate::graphs::{Edge, Graph};
use crate::groebner::TruncatedGB;
use crate::series::{mul_trunc, IntSeries};

/// Pairwise vertex-disjoint edges, each `(i, j)` with `i > j`, sorted by
/// decreasing larger endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }
}

/// Vertices outside a matching that close no triangle `m > a > b` with any
/// of its edges `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllowedVertexSet {
    pub vertices: Vec<usize>,
}

impl AllowedVertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All matchings of `g`; entry `p` lists those with `p` edges.
pub fn partial_matchings(g: &Graph) -> Vec<Vec<Matching>> {
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by(|a, b| b.cmp(a));
    let mut groups = vec![Vec::new(); g.n() / 2 + 1];
    let mut chosen = Vec::new();
    extend(&edges, 0, &mut chosen, &mut groups);
    for group in &mut groups {
        group.sort();
    }
    groups
}

fn extend(edges: &[Edge], from: usize, chosen: &mut Vec<Edge>, groups: &mut [Vec<Matching>]) {
    let mut sorted = chosen.clone();
    sorted.sort_by(|a, b| b.cmp(a));
    groups[chosen.len()].push(Matching { edges: sorted });
    for k in from..edges.len() {
        let (a, b) = edges[k];
        if chosen.iter().any(|&(x, y)| x == a || x == b || y == a || y == b) {
            continue;
        }
        chosen.push((a, b));
        extend(edges, k + 1, chosen, groups);
        chosen.pop();
    }
}

pub fn allowed_vertices(g: &Graph, w: &Matching) -> AllowedVertexSet {
    AllowedVertexSet {
        vertices: (1..=g.n())
            .filter(|&m| !w.covers(m))
            .filter(|&m| {
                w.edges
                    .iter()
                    .all(|&(a, b)| m < a || !g.has_edge(m, a) || !g.has_edge(m, b))
            })
            .collect(),
    }
}

fn require_class(g: &Graph) -> Result<()> {
    if g.has_overlapping_triangles() {
        return Err(Error::ClassViolation(format!("{g} has two triangles sharing a vertex")));
    }
    Ok(())
}

/// `Σ_p z^p Σ_{W ∈ L_p} (1 + z)^{r_W}`, truncated at degree `n`.
pub fn hilbert_formula(g: &Graph) -> Result<IntSeries> {
    require_class(g)?;
    Ok(formula_unchecked(g))
}

/// The matching formula evaluated without the class check.
pub fn formula_unchecked(g: &Graph) -> IntSeries {
    let n = g.n();
    let mut total = IntSeries::from_usizes(&vec![0; n + 1]);
    for (p, group) in partial_matchings(g).iter().enumerate() {
        for w in group {
            let r = allowed_vertices(g, w).len();
            let term = IntSeries::binomial_power(r, n).shift(p);
            total = total.add(&term).expect("same truncation");
        }
    }
    total
}

/// `Σ l_p z^p (1 + z)^{n - 2p}` for triangle-free graphs.
pub fn triangle_free_formula(g: &Graph) -> Result<IntSeries> {
    if let Some(t) = g.triangles().first() {
        return Err(Error::HasTriangle(format!("{g} contains {:?}", t.vertices())));
    }
    let n = g.n();
    let mut total = IntSeries::from_usizes(&vec![0; n + 1]);
    for (p, group) in partial_matchings(g).iter().enumerate() {
        let lp = IntSeries::from_usizes(&[group.len()]).truncate(n);
        let term = mul_trunc(&lp, &IntSeries::binomial_power(n - 2 * p, n))?.shift(p);
        total = total.add(&term)?;
    }
    Ok(total)
}

/// Monomials `e_{i1 i2} ⋯ e_{i(2p-1) i(2p)} e_{j1} ⋯ e_{jq}` of degree `d`
/// spanning the dual algebra: a matching written by decreasing larger
/// endpoint followed by allowed vertices in decreasing order. Letters are
/// those of `Alphabet::for_graph(g, 'e')`.
pub fn qdual_basis(g: &Graph, d: usize) -> Result<Vec<Word>> {
    require_class(g)?;
    let a = Alphabet::for_graph(g, 'e');
    let mut out = Vec::new();
    for (p, group) in partial_matchings(g).iter().enumerate() {
        if p > d {
            break;
        }
        for w in group {
            let allowed = allowed_vertices(g, w).vertices;
            let head: Vec<u8> = w.edges.iter().map(|&(i, j)| a.edge(i, j).expect("edge of g")).collect();
            for tail in subsets_descending(&allowed, d - p) {
                let mut letters = head.clone();
                letters.extend(tail.iter().map(|&v| a.vertex(v).expect("vertex of g")));
                out.push(Word::from(letters));
            }
        }
    }
    Ok(out)
}

/// `k`-subsets of `items`, each listed in decreasing order.
fn subsets_descending(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut desc = items.to_vec();
    desc.sort_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(desc: &[usize], from: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..desc.len() {
            cur.push(desc[i]);
            go(desc, i + 1, k, cur, out);
            cur.pop();
        }
    }
    go(&desc, 0, k, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusRow {
    pub edge: Edge,
    pub degenerate: bool,
}

/// For each edge `(ij)`, whether every normal word `x` of degree `n - 1`
/// has `x · e_ij = 0` in the algebra presented by `gb`.
pub fn frobenius_degeneracy_witness(g: &Graph, gb: &TruncatedGB) -> Result<Vec<FrobeniusRow>> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.n();
    if gb.bound() < n {
        return Err(Error::DegreeExceedsBound {
            degree: n,
            bound: gb.bound(),
        });
    }
    let words = gb.normal_words(n - 1)?;
    g.edges()
        .map(|(i, j)| {
            let e = gb.alphabet().edge(i, j).expect("edge letter");
            let mut degenerate = true;
            for x in &words {
                let mut xe = x.clone();
                xe.push(e);
                if !gb.normal_form(&NcPolynomial::word(xe))?.is_zero() {
                    degenerate = false;
                    break;
                }
            }
            Ok(FrobeniusRow {
                edge: (i, j),
                degenerate,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RwRow {
    pub matching: Vec<Edge>,
    #[serde(rename = "r_W")]
    pub r_w: usize,
}

/// Everything the matching side computes for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct MatchingReport {
    pub l_p: Vec<usize>,
    #[serde(rename = "r_W")]
    pub r_w: Vec<RwRow>,
    pub p_coeffs: IntSeries,
    pub basis_counts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<Vec<FrobeniusRow>>,
}

pub fn matching_report(g: &Graph, gb: Option<&TruncatedGB>) -> Result<MatchingReport> {
    let p = hilbert_formula(g)?;
    let groups = partial_matchings(g);
    let r_w = groups
        .iter()
        .flatten()
        .map(|w| RwRow {
            matching: w.edges.clone(),
            r_w: allowed_vertices(g, w).len(),
        })
        .collect();
    let basis_counts = (0..=g.n())
        .map(|d| qdual_basis(g, d).map(|b| b.len()))
        .collect::<Result<_>>()?;
    let frobenius = match gb {
        Some(gb) if g.edge_count() > 0 => Some(frobenius_degeneracy_witness(g, gb)?),
        _ => None,
    };
    Ok(MatchingReport {
        l_p: groups.iter().map(Vec::len).collect(),
        r_w,
        p_coeffs: p,
        basis_counts,
        frobenius,
    })
}
