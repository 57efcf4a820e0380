//! Batch verification suites over enumerated graphs.
//!
//! Every suite maps a graph to a [`Row`] of named check outcomes. Rows are
//! computed in parallel and reported in enumeration order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freealg::{same_span, Alphabet, Letter, MonomialOrder, Precedence};
use crate::graphs::format::write_graph6;
use crate::graphs::{enumerate_graphs, Graph};
use crate::groebner::{complete, complete_exterior, TruncatedGB};
use crate::matchings::{frobenius_degeneracy_witness, hilbert_formula, qdual_basis};
use crate::oracle;
use crate::presentations::{b_presentation, bdual_handwritten, exterior_relations, q_presentation, quadratic_dual};
use crate::series::{global_dimension, koszul_numeric_check, palindrome_report, IntSeries};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest truncation degree any command accepts.
pub const MAX_DEGREE: usize = 8;

/// Default truncation degree for Q-side dimension checks on `n` vertices.
pub fn default_budget(n: usize) -> usize {
    match n {
        0..=4 => 6,
        5 => 4,
        _ => 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Dim3,
    GbQuadratic,
    Koszul,
    Palindrome,
    DualMatch,
    Frobenius,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Dim3,
        Suite::GbQuadratic,
        Suite::Koszul,
        Suite::Palindrome,
        Suite::DualMatch,
        Suite::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dim3 => "dim3",
            Suite::GbQuadratic => "gb-quadratic",
            Suite::Koszul => "koszul",
            Suite::Palindrome => "palindrome",
            Suite::DualMatch => "dual-match",
            Suite::Frobenius => "frobenius",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescriptor {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub graph6: String,
    pub triangle_free: bool,
    pub overlap_free: bool,
}

impl GraphDescriptor {
    pub fn new(g: &Graph) -> GraphDescriptor {
        GraphDescriptor {
            n: g.n(),
            edges: g.edges().map(|(i, j)| [i, j]).collect(),
            graph6: write_graph6(g),
            triangle_free: g.is_triangle_free(),
            overlap_free: !g.has_overlapping_triangles(),
        }
    }
}

/// One comparison: which methods were compared, over which degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub methods: String,
    pub degrees: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, methods: &str, degrees: String, pass: bool, detail: String) -> Check {
        Check {
            name: name.to_string(),
            methods: methods.to_string(),
            degrees,
            pass,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub graph: GraphDescriptor,
    pub pass: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub max_n: usize,
    pub graphs: usize,
    pub failures: usize,
    pub pass: bool,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    /// Human-readable lines: one per graph, then a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let edges: Vec<String> = row.graph.edges.iter().map(|[i, j]| format!("{i}{j}")).collect();
            out.push_str(&format!(
                "{} n={} edges=[{}]",
                if row.pass { "ok  " } else { "FAIL" },
                row.graph.n,
                edges.join(" ")
            ));
            for c in row.checks.iter().filter(|c| !c.pass) {
                out.push_str(&format!(
                    "\n     {} ({}; degrees {}): {}",
                    c.name, c.methods, c.degrees, c.detail
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} graphs, {} failing, {}\n",
            self.suite,
            self.graphs,
            self.failures,
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub max_n: usize,
    /// Overrides [`default_budget`] for every graph.
    pub degree: Option<usize>,
}

impl Options {
    pub fn budget(&self, n: usize) -> usize {
        self.degree.unwrap_or_else(|| default_budget(n))
    }
}

/// The graphs a suite runs over, in enumeration order.
pub fn suite_graphs(suite: Suite, max_n: usize) -> Result<Vec<Graph>> {
    let all = match suite {
        Suite::Dim3 => enumerate_graphs(max_n, true)?,
        _ => enumerate_graphs(max_n, false)?,
    };
    Ok(all
        .into_iter()
        .filter(|g| match suite {
            Suite::Dim3 => g.n() >= 2,
            Suite::GbQuadratic => g.n() >= 2 && !g.has_overlapping_triangles(),
            Suite::Frobenius => g.edge_count() > 0 && !g.has_overlapping_triangles(),
            Suite::DualMatch => true,
            Suite::Koszul | Suite::Palindrome => !g.has_overlapping_triangles(),
        })
        .collect())
}

pub fn run_suite(suite: Suite, opts: &Options) -> Result<SuiteReport> {
    if let Some(d) = opts.degree {
        if d > MAX_DEGREE {
            return Err(Error::DegreeExceedsBound {
                degree: d,
                bound: MAX_DEGREE,
            });
        }
    }
    let graphs = suite_graphs(suite, opts.max_n)?;
    let rows: Vec<Row> = graphs
        .par_iter()
        .map(|g| {
            let checks = check_graph(suite, g, opts);
            Row {
                graph: GraphDescriptor::new(g),
                pass: checks.iter().all(|c| c.pass),
                checks,
            }
        })
        .collect();
    let failures = rows.iter().filter(|r| !r.pass).count();
    Ok(SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite,
        max_n: opts.max_n,
        graphs: rows.len(),
        failures,
        pass: failures == 0,
        rows,
    })
}

pub fn check_graph(suite: Suite, g: &Graph, opts: &Options) -> Vec<Check> {
    match suite {
        Suite::Dim3 => dim3_checks(g),
        Suite::GbQuadratic => gb_quadratic_checks(g),
        Suite::Koszul => koszul_checks(g, opts.budget(g.n())),
        Suite::Palindrome => palindrome_checks(g),
        Suite::DualMatch => dual_match_checks(g),
        Suite::Frobenius => frobenius_checks(g),
    }
}

fn degrees(lo: usize, hi: usize) -> String {
    format!("{lo}..={hi}")
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn default_order(a: &Alphabet) -> MonomialOrder {
    MonomialOrder::new(a, Precedence::Default)
}

fn dim3_checks(g: &Graph) -> Vec<Check> {
    let (q, b) = (q_presentation(g), b_presentation(g));
    let m = q.alphabet().len();
    let q_gb = complete(&q, &default_order(q.alphabet()), 3)
        .dim_vector(3)
        .expect("bound 3")
        .dims;
    let b_gb = complete(&b, &default_order(b.alphabet()), 3)
        .dim_vector(3)
        .expect("bound 3")
        .dims;
    let q_rank = oracle::quotient_dims(m, q.relations(), 3);
    let b_rank = oracle::quotient_dims(m, b.relations(), 3);
    vec![
        Check::new(
            "dim-q3-equals-dim-b3",
            "gb(Q) vs gb(B)",
            degrees(3, 3),
            q_gb[3] == b_gb[3],
            format!("Q: {} B: {}", q_gb[3], b_gb[3]),
        ),
        Check::new(
            "q-gb-matches-rank",
            "gb(Q) vs rank oracle",
            degrees(0, 3),
            q_gb == q_rank,
            format!("gb {} rank {}", join(&q_gb), join(&q_rank)),
        ),
        Check::new(
            "b-gb-matches-rank",
            "gb(B) vs rank oracle",
            degrees(0, 3),
            b_gb == b_rank,
            format!("gb {} rank {}", join(&b_gb), join(&b_rank)),
        ),
    ]
}

/// Unordered letter pairs of the leading-term families: a vertex with an
/// incident edge, two edges sharing a vertex, and the top vertex of a
/// triangle with its opposite edge.
pub fn expected_family_pairs(g: &Graph, a: &Alphabet) -> BTreeSet<(Letter, Letter)> {
    let pair = |x: Letter, y: Letter| (x.min(y), x.max(y));
    let mut out = BTreeSet::new();
    let edges: Vec<_> = g.edges().collect();
    for &(i, j) in &edges {
        let e = a.edge(i, j).expect("edge letter");
        out.insert(pair(a.vertex(i).expect("vertex"), e));
        out.insert(pair(a.vertex(j).expect("vertex"), e));
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        for &(p, q) in &edges[k + 1..] {
            if i == p || i == q || j == p || j == q {
                out.insert(pair(a.edge(i, j).expect("edge"), a.edge(p, q).expect("edge")));
            }
        }
    }
    for t in g.triangles() {
        let [x, y, z] = t.vertices();
        let top = x.max(y).max(z);
        let rest: Vec<usize> = [x, y, z].into_iter().filter(|&v| v != top).collect();
        out.insert(pair(
            a.vertex(top).expect("vertex"),
            a.edge(rest[0], rest[1]).expect("edge"),
        ));
    }
    out
}

/// Families read off a tensor-algebra GB: words `x·y` with `x` below `y`
/// in precedence, as unordered pairs; `None` if some `x·y` with `x` at or
/// above `y` is missing (the exterior part).
fn tensor_family_pairs(gb: &TruncatedGB) -> Option<BTreeSet<(Letter, Letter)>> {
    let ord = gb.order();
    let leads: BTreeSet<_> = gb.leading_words(2).into_iter().collect();
    let m = gb.alphabet().len() as Letter;
    for x in 0..m {
        for y in 0..m {
            if ord.rank_of(x) >= ord.rank_of(y) && !leads.contains(&crate::freealg::Word::from_letters(&[x, y])) {
                return None;
            }
        }
    }
    Some(
        leads
            .iter()
            .map(|w| (w.letters()[0], w.letters()[1]))
            .filter(|&(x, y)| ord.rank_of(x) < ord.rank_of(y))
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect(),
    )
}

fn gb_quadratic_checks(g: &Graph) -> Vec<Check> {
    let h = bdual_handwritten(g);
    let a = h.alphabet();
    let bound = g.n() + 1;
    let want = expected_family_pairs(g, a);
    let mut checks = Vec::new();
    for p in Precedence::ALL {
        let ord = MonomialOrder::new(a, p);
        let gb = complete(&h, &ord, bound);
        let cubic = gb.leading_words(3).len();
        checks.push(Check::new(
            &format!("tensor-quadratic[{}]", p.name()),
            "completion of exterior + T + U + W in the tensor algebra",
            degrees(2, bound),
            gb.max_degree() <= 2,
            format!(
                "{} elements, max degree {}, {} of degree 3",
                gb.len(),
                gb.max_degree(),
                cubic
            ),
        ));
        let got = tensor_family_pairs(&gb);
        checks.push(Check::new(
            &format!("tensor-families[{}]", p.name()),
            "tensor quadratic leading words vs leading-term families",
            degrees(2, 2),
            got.as_ref() == Some(&want),
            match &got {
                None => "exterior leading words incomplete".to_string(),
                Some(s) => format!(
                    "{} pairs found, {} expected, {} shared",
                    s.len(),
                    want.len(),
                    s.intersection(&want).count()
                ),
            },
        ));
        let ext = complete_exterior(&h, &ord, bound);
        let ext_pairs: BTreeSet<(Letter, Letter)> = ext
            .leading_monomials(2)
            .into_iter()
            .map(|m| (m[0].min(m[1]), m[0].max(m[1])))
            .collect();
        checks.push(Check::new(
            &format!("exterior-quadratic[{}]", p.name()),
            "completion of T + U + W in the exterior algebra",
            degrees(2, bound),
            ext.max_degree() <= 2 && ext_pairs == want,
            format!(
                "{} elements, max degree {}, families {}",
                ext.len(),
                ext.max_degree(),
                if ext_pairs == want { "match" } else { "differ" }
            ),
        ));
    }
    checks
}

fn koszul_checks(g: &Graph, budget: usize) -> Vec<Check> {
    let q = q_presentation(g);
    let h_q = complete(&q, &default_order(q.alphabet()), budget.max(2))
        .dim_vector(budget)
        .expect("within bound")
        .dims;
    let h_q = IntSeries::from_usizes(&h_q);
    let p = hilbert_formula(g).expect("class graph").truncate(budget);
    vec![Check::new(
        "hq-times-p-minus-z",
        "gb(Q) vs matching formula",
        degrees(0, budget),
        koszul_numeric_check(&h_q, &p),
        format!("H_Q {} p {}", h_q, p),
    )]
}

fn palindrome_checks(g: &Graph) -> Vec<Check> {
    let p = hilbert_formula(g).expect("class graph");
    let r = palindrome_report(&p, g.n());
    vec![
        Check::new(
            "palindrome-iff-triangle-free",
            "matching formula vs triangle census",
            degrees(0, g.n()),
            r.is_palindrome == g.is_triangle_free(),
            format!(
                "p = {p}, palindrome {}, triangle-free {}",
                r.is_palindrome,
                g.is_triangle_free()
            ),
        ),
        Check::new(
            "coefficient-inequalities",
            "matching formula",
            degrees(0, g.n() / 2),
            r.inequalities_hold,
            format!("p = {p}"),
        ),
    ]
}

fn dual_match_checks(g: &Graph) -> Vec<Check> {
    let n = g.n();
    let b = b_presentation(g);
    let dual = quadratic_dual(&b);
    let h = bdual_handwritten(g);
    let mut handwritten = h.relations().to_vec();
    handwritten.extend(exterior_relations(h.alphabet()));
    let mut checks = vec![Check::new(
        "relb-span-identity",
        "hand-written relations vs orthogonal complement",
        degrees(2, 2),
        same_span(&handwritten, dual.relations()),
        format!("{} relations vs {}", h.relation_count(), dual.relation_count()),
    )];
    if g.has_overlapping_triangles() {
        return checks;
    }
    let formula = hilbert_formula(g).expect("class graph");
    let b_gb = complete(&h, &default_order(h.alphabet()), n.max(2))
        .dim_vector(n)
        .expect("bound n")
        .dims;
    let qd = quadratic_dual(&q_presentation(g));
    let q_gb = complete(&qd, &default_order(qd.alphabet()), n.max(2))
        .dim_vector(n)
        .expect("bound n")
        .dims;
    let basis: Vec<usize> = (0..=n).map(|d| qdual_basis(g, d).expect("class graph").len()).collect();
    let f = formula
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let agree = [&b_gb, &q_gb, &basis]
        .iter()
        .all(|v| IntSeries::from_usizes(v) == formula);
    checks.push(Check::new(
        "four-way-hilbert",
        "formula vs gb(B!) vs gb(Q!) vs basis enumeration",
        degrees(0, n),
        agree,
        format!(
            "formula {f}; B! {}; Q! {}; basis {}",
            join(&b_gb),
            join(&q_gb),
            join(&basis)
        ),
    ));
    let gd = global_dimension(&formula);
    checks.push(Check::new(
        "global-dimension",
        "matching formula",
        degrees(0, n),
        gd == Ok(n) && formula.coeff(n) == 1.into(),
        format!("degree {:?}, top coefficient {}", gd.ok(), formula.coeff(n)),
    ));
    checks
}

fn frobenius_checks(g: &Graph) -> Vec<Check> {
    let n = g.n();
    let algebras = [("B!", bdual_handwritten(g)), ("Q!", quadratic_dual(&q_presentation(g)))];
    algebras
        .into_iter()
        .map(|(name, pres)| {
            let gb = complete(&pres, &default_order(pres.alphabet()), n.max(2));
            let (pass, detail) = match frobenius_degeneracy_witness(g, &gb) {
                Ok(rows) => {
                    let bad: Vec<String> = rows
                        .iter()
                        .filter(|r| !r.degenerate)
                        .map(|r| format!("{}{}", r.edge.0, r.edge.1))
                        .collect();
                    (
                        bad.is_empty(),
                        format!("{} edges, non-annihilating: [{}]", rows.len(), bad.join(" ")),
                    )
                }
                Err(e) => (false, e.to_string()),
            };
            Check::new(
                &format!("frobenius-degenerate[{name}]"),
                "gb normal form of x·e_ij",
                degrees(n - 1, n),
                pass,
                detail,
            )
        })
        .collect()
}
