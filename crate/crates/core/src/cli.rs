//! The `koszul` command line.
//!
//! Exit codes: 0 when everything passes, 1 when a mathematical check fails
//! or a graph is outside the class a method needs, 2 for usage, input and
//! budget errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::freealg::{MonomialOrder, Precedence};
use crate::graphs::format::{parse_edge_list, parse_graph6};
use crate::graphs::{Family, Graph};
use crate::groebner::complete;
use crate::matchings::{formula_unchecked, hilbert_formula, matching_report};
use crate::presentations::{b_presentation, bdual_handwritten, q_presentation, quadratic_dual, QuadraticPresentation};
use crate::series::{invert_trunc, IntSeries};
use crate::verify::{default_budget, run_suite, GraphDescriptor, Options, Suite, MAX_DEGREE, SCHEMA_VERSION};

pub const BUDGET_ENV: &str = "KOSZUL_DEGREE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "koszul",
    version,
    about = "Quadratic algebras of graphs: Hilbert series, Groebner bases and batch checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex and edge counts, triangles and class flags of a graph.
    Info {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Hilbert series of one algebra attached to a graph.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Algebra::Bdual)]
        algebra: Algebra,
        #[arg(long, value_enum, default_value_t = Method::Gb)]
        method: Method,
        /// Truncation degree (default: n for dual algebras, the degree budget otherwise).
        #[arg(long)]
        degree: Option<usize>,
        /// Evaluate the matching formula outside its class and compare with the Groebner basis.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over all graphs up to a vertex count.
    Verify {
        #[arg(value_parser = parse_suite_arg)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Truncation degree for every graph, overriding the per-size budget.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("graph-source").required(true).args(["family", "edges", "graph6"])))]
pub struct Source {
    /// Named family: empty, line (path), star, cycle, complete, butterfly, diamond, triangle.
    #[arg(long)]
    family: Option<String>,
    /// Vertex count for --family.
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Edge-list file: first line the vertex count, then one pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// A graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Q,
    B,
    Qdual,
    Bdual,
}

impl Algebra {
    fn is_dual(self) -> bool {
        matches!(self, Algebra::Qdual | Algebra::Bdual)
    }

    fn presentation(self, g: &Graph) -> QuadraticPresentation {
        match self {
            Algebra::Q => q_presentation(g),
            Algebra::B => b_presentation(g),
            Algebra::Qdual => quadratic_dual(&q_presentation(g)),
            Algebra::Bdual => bdual_handwritten(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gb,
    Formula,
    Inversion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite_arg(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        return Ok(SuiteArg::All);
    }
    s.parse().map(SuiteArg::One).map_err(|e: Error| e.to_string())
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ClassViolation(_) | Error::HasTriangle(_) | Error::NoEdges => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl Source {
    fn load(&self) -> Result<(Graph, Option<String>), Failure> {
        if let Some(name) = &self.family {
            let (family, pinned) = match name.as_str() {
                "triangle" => (Family::Complete, Some(3)),
                other => {
                    let f: Family = other.parse()?;
                    (f, f.fixed_size())
                }
            };
            let n = match (self.n, pinned) {
                (Some(n), _) => n,
                (None, Some(n)) => n,
                (None, None) => return Err(usage(format!("--family {name} needs --n"))),
            };
            return Ok((Graph::named_family(family, n)?, Some(name.clone())));
        }
        if let Some(path) = &self.edges {
            let text =
                std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            return Ok((parse_edge_list(&text)?, None));
        }
        if let Some(s) = &self.graph6 {
            return Ok((parse_graph6(s)?, None));
        }
        Err(usage("a graph source is required"))
    }
}

fn env_budget() -> Result<Option<usize>, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| usage(format!("{BUDGET_ENV} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

fn check_degree(d: usize) -> Result<usize, Failure> {
    if d > MAX_DEGREE {
        return Err(Error::DegreeExceedsBound {
            degree: d,
            bound: MAX_DEGREE,
        }
        .into());
    }
    Ok(d)
}

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| usage(e.to_string()))
}

fn say(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    write!(out, "{text}").map_err(|e| usage(e.to_string()))
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Info { source, json } => info(source, *json, out),
        Command::Hilbert {
            source,
            algebra,
            method,
            degree,
            force,
            json,
        } => hilbert(source, *algebra, *method, *degree, *force, *json, out),
        Command::Verify {
            suite,
            max_n,
            degree,
            json,
        } => verify(*suite, *max_n, *degree, *json, out),
    }
}

fn info(source: &Source, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (g, family) = source.load()?;
    let triangles: Vec<[usize; 3]> = g.triangles().iter().map(|t| t.vertices()).collect();
    if json {
        emit(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "family": family,
                "graph": GraphDescriptor::new(&g),
                "edge_count": g.edge_count(),
                "triangles": triangles,
            }),
        )?;
    } else {
        let d = GraphDescriptor::new(&g);
        let tri: Vec<String> = triangles.iter().map(|[a, b, c]| format!("{a}{b}{c}")).collect();
        say(
            out,
            &format!(
                "{}n = {}\nedges = {} ({})\ntriangles = [{}]\ntriangle_free = {}\noverlap_free = {}\ngraph6 = {}\n",
                family.map(|f| format!("family = {f}\n")).unwrap_or_default(),
                g.n(),
                g.edge_count(),
                g,
                tri.join(" "),
                d.triangle_free,
                d.overlap_free,
                d.graph6
            ),
        )?;
    }
    Ok(0)
}

fn gb_dims(g: &Graph, algebra: Algebra, degree: usize) -> IntSeries {
    let pres = algebra.presentation(g);
    let gb = complete(
        &pres,
        &MonomialOrder::new(pres.alphabet(), Precedence::Default),
        degree.max(2),
    );
    IntSeries::from_usizes(&gb.dim_vector(degree).expect("within bound").dims)
}

#[allow(clippy::too_many_arguments)]
fn hilbert(
    source: &Source,
    algebra: Algebra,
    method: Method,
    degree: Option<usize>,
    force: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (g, family) = source.load()?;
    let n = g.n();
    let degree = match degree {
        Some(d) => d,
        None if algebra.is_dual() => n,
        None => env_budget()?.unwrap_or_else(|| default_budget(n)),
    };
    let degree = check_degree(degree)?;
    let mut extra = serde_json::Map::new();
    let series = match (method, algebra.is_dual()) {
        (Method::Gb, _) => gb_dims(&g, algebra, degree),
        (Method::Formula, false) => {
            return Err(usage(
                "the matching formula gives the dual series; use --method inversion for q or b",
            ))
        }
        (Method::Formula, true) => {
            if force && g.has_overlapping_triangles() {
                let formula = formula_unchecked(&g).truncate(degree);
                let gb = gb_dims(&g, algebra, degree);
                extra.insert("gb".into(), json!(gb));
                extra.insert("agree".into(), json!(formula == gb));
                formula
            } else {
                let p = hilbert_formula(&g)?;
                let pres = bdual_handwritten(&g);
                let gb = complete(
                    &pres,
                    &MonomialOrder::new(pres.alphabet(), Precedence::Default),
                    n.max(2),
                );
                extra.insert("matchings".into(), json!(matching_report(&g, Some(&gb))?));
                p.truncate(degree)
            }
        }
        (Method::Inversion, false) => {
            let p = if force {
                formula_unchecked(&g)
            } else {
                hilbert_formula(&g)?
            };
            invert_trunc(&p.truncate(degree).alternate())?
        }
        (Method::Inversion, true) => {
            let h = gb_dims(&g, Algebra::Q, degree);
            invert_trunc(&h.alternate())?
        }
    };
    if json {
        let mut v = serde_json::Map::new();
        v.insert("schema_version".into(), json!(SCHEMA_VERSION));
        v.insert("family".into(), json!(family));
        v.insert("graph".into(), json!(GraphDescriptor::new(&g)));
        v.insert("algebra".into(), json!(algebra));
        v.insert("method".into(), json!(method));
        v.insert("degree".into(), json!(degree));
        v.insert("series".into(), json!(series));
        v.insert("rendered".into(), json!(series.to_string()));
        v.extend(extra);
        emit(out, &v)?;
    } else {
        say(out, &format!("{series}\n"))?;
        if let Some(agree) = extra.get("agree") {
            say(out, &format!("gb: {}\nagree: {agree}\n", extra["gb"]))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct AllReport {
    schema_version: u32,
    suite: &'static str,
    max_n: usize,
    pass: bool,
    suites: Vec<crate::verify::SuiteReport>,
}

fn verify(
    suite: SuiteArg,
    max_n: usize,
    degree: Option<usize>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let degree = match degree {
        Some(d) => Some(check_degree(d)?),
        None => env_budget()?.map(check_degree).transpose()?,
    };
    let opts = Options { max_n, degree };
    let suites: Vec<Suite> = match suite {
        SuiteArg::One(s) => vec![s],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let reports = suites
        .into_iter()
        .map(|s| run_suite(s, &opts))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    if json {
        match suite {
            SuiteArg::One(_) => emit(out, &reports[0])?,
            SuiteArg::All => emit(
                out,
                &AllReport {
                    schema_version: SCHEMA_VERSION,
                    suite: "all",
                    max_n,
                    pass,
                    suites: reports,
                },
            )?,
        }
    } else {
        for r in &reports {
            say(out, &r.render())?;
        }
    }
    Ok(if pass { 0 } else { 1 })
}
