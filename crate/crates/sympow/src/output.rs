//! Output documents for the CLI: typed results, a stable machine-readable
//! JSON schema, and the human-readable text renderings.
//!
//! The machine format is deterministic byte-for-byte: fixed field order,
//! arbitrary-precision integers as decimal strings, rationals as
//! `{"num","den"}` pairs, ideals as arrays of exponent arrays in canonical
//! generator order, and no floating point anywhere. Timing is deliberately
//! not part of the document; it goes to the diagnostic stream.

use num_traits::One;
use serde::Serialize;

use crate::asymptotics::{WaldschmidtMode, WaldschmidtReport};
use crate::decompose::{Decomposition, VariablePrime};
use crate::ideal::MonomialIdeal;
use crate::polyhedron::{HPolyhedron, PolyhedronStats, VPolyhedron};
use crate::rational::{format_rational, Rational};
use crate::ring::Ring;

/// Typed result of one CLI command, before rendering.
#[derive(Clone, Debug)]
pub enum CommandResult {
    Ideal(MonomialIdeal),
    Integer(u64),
    Boolean(bool),
    Rational(Rational),
    Sequence(Vec<Rational>),
    Primes(Vec<VariablePrime>),
    Decomposition(Decomposition),
    Polyhedron {
        h: HPolyhedron,
        v: VPolyhedron,
        stats: PolyhedronStats,
    },
    Waldschmidt(WaldschmidtReport),
}

/// Option echo in the machine document; field order is the schema.
#[derive(Clone, Debug, Serialize)]
pub struct OptionsEcho {
    pub vars: Vec<String>,
    pub min_primes: bool,
    pub strategy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub given_a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub given_b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_size: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_max: Option<u32>,
}

impl OptionsEcho {
    pub fn new(ring: &Ring, min_primes: bool, strategy: &str) -> Self {
        OptionsEcho {
            vars: ring.variables().to_vec(),
            min_primes,
            strategy: strategy.to_string(),
            n: None,
            given_a: None,
            given_b: None,
            mode: None,
            sample_size: None,
            k: None,
            r_max: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub command: String,
    pub options: OptionsEcho,
    pub result: Payload,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Ideal(Vec<Vec<u64>>),
    Integer(u64),
    Boolean(bool),
    Rational(RationalJson),
    Sequence(Vec<RationalJson>),
    Primes(Vec<Vec<Vec<u64>>>),
    Decomposition(Vec<ComponentJson>),
    Polyhedron(PolyhedronJson),
    Report(ReportJson),
}

#[derive(Debug, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub component: Vec<Vec<u64>>,
    pub radical: Vec<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct PolyhedronJson {
    /// Each inequality `a·x ≥ b` as `[b, a_1, …, a_n]`, entries in the
    /// canonical primitive-integer scaling, as decimal strings.
    pub inequalities: Vec<Vec<String>>,
    pub vertices: Vec<Vec<RationalJson>>,
    pub rays: Vec<Vec<String>>,
    pub stats: PolyhedronStats,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub value: RationalJson,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_size: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<RationalJson>>,
}

fn ideal_exponents(ideal: &MonomialIdeal) -> Vec<Vec<u64>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

impl CommandResult {
    pub fn to_payload(&self, ring: &Ring) -> Payload {
        match self {
            CommandResult::Ideal(i) => Payload::Ideal(ideal_exponents(i)),
            CommandResult::Integer(n) => Payload::Integer(*n),
            CommandResult::Boolean(b) => Payload::Boolean(*b),
            CommandResult::Rational(r) => Payload::Rational(r.into()),
            CommandResult::Sequence(seq) => {
                Payload::Sequence(seq.iter().map(RationalJson::from).collect())
            }
            CommandResult::Primes(primes) => Payload::Primes(
                primes
                    .iter()
                    .map(|p| ideal_exponents(&p.as_ideal(ring)))
                    .collect(),
            ),
            CommandResult::Decomposition(d) => Payload::Decomposition(
                d.components
                    .iter()
                    .map(|c| ComponentJson {
                        component: ideal_exponents(&c.ideal),
                        radical: ideal_exponents(&c.radical.as_ideal(ring)),
                    })
                    .collect(),
            ),
            CommandResult::Polyhedron { h, v, stats } => {
                let inequalities = h
                    .inequalities()
                    .iter()
                    .map(|row| {
                        let mut entries = Vec::with_capacity(row.coeffs.len() + 1);
                        entries.push(integer_string(&row.rhs));
                        entries.extend(row.coeffs.iter().map(integer_string));
                        entries
                    })
                    .collect();
                let vertices = v
                    .vertices
                    .iter()
                    .map(|point| point.iter().map(RationalJson::from).collect())
                    .collect();
                let rays = v
                    .rays
                    .iter()
                    .map(|ray| ray.iter().map(ToString::to_string).collect())
                    .collect();
                Payload::Polyhedron(PolyhedronJson {
                    inequalities,
                    vertices,
                    rays,
                    stats: *stats,
                })
            }
            CommandResult::Waldschmidt(report) => Payload::Report(ReportJson {
                value: (&report.value).into(),
                mode: match report.mode {
                    WaldschmidtMode::Exact => "exact".to_string(),
                    WaldschmidtMode::Approximated => "approx".to_string(),
                },
                sample_size: report.sample_size,
                witness: report
                    .witness
                    .as_ref()
                    .map(|w| w.iter().map(RationalJson::from).collect()),
            }),
        }
    }

    /// Human-readable rendering: the result only, no banners.
    pub fn render_text(&self, ring: &Ring) -> String {
        match self {
            CommandResult::Ideal(i) => i.to_string(),
            CommandResult::Integer(n) => n.to_string(),
            CommandResult::Boolean(b) => b.to_string(),
            CommandResult::Rational(r) => format_rational(r),
            CommandResult::Sequence(seq) => {
                let entries: Vec<String> = seq.iter().map(format_rational).collect();
                format!("[{}]", entries.join(", "))
            }
            CommandResult::Primes(primes) => primes
                .iter()
                .map(|p| p.display(ring).to_string())
                .collect::<Vec<_>>()
                .join("\n"),
            CommandResult::Decomposition(d) => d
                .components
                .iter()
                .map(|c| {
                    format!(
                        "component: {}, radical: {}",
                        c.ideal,
                        c.radical.display(ring)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n"),
            CommandResult::Polyhedron { stats, .. } => format!(
                "ambient dimension: {}\npolyhedron dimension: {}\nlineality dimension: {}\nfacets: {}\nrays: {}\nvertices: {}",
                stats.ambient, stats.dim, stats.lineality, stats.facets, stats.rays, stats.vertices
            ),
            CommandResult::Waldschmidt(report) => format_rational(&report.value),
        }
    }
}

fn integer_string(r: &Rational) -> String {
    debug_assert!(r.denom().is_one(), "canonical rows are integer-scaled");
    r.numer().to_string()
}

/// Serialize the machine document: compact JSON plus a trailing newline.
pub fn to_json(document: &OutputDocument) -> String {
    let mut s = serde_json::to_string(document).expect("schema types never fail to serialize");
    s.push('\n');
    s
}
