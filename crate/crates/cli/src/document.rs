//! The JSON space document.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "cone(sphere(1))",
//!   "space": { "generator": { "kind": "cone", "of": { "kind": "sphere", "n": 1 } } },
//!   "stratification": [ { "simplices": [[3]], "codimension": 2 } ],
//!   "perversity": "lower-middle",
//!   "homology_basis": [ [ ["0", "0", "0", "1"] ] ]
//! }
//! ```
//!
//! `space` is one of `generator`, `simplices` (vertex labels and maximal
//! simplices) or `chain_complex` (dimensions and boundary matrices given by
//! rows). Rationals are strings `"p"` or `"p/q"`. Homology vectors are in
//! simplex coordinates, simplices of each degree in lexicographic order.

use std::fmt;

use serde::{Deserialize, Serialize};

use reidemeister_core::chain::{BasedChainComplex, HomologyBasis};
use reidemeister_core::linalg::{Rational, RationalMatrix};
use reidemeister_core::spaces::{
    barycentric_subdivision, circle, cone, point, product, simplex, sphere, SimplicialComplex,
};
use reidemeister_core::stratified::{Perversity, Stratum, StratifiedComplex};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub space: SpaceSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stratification: Vec<StratumSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perversity: Option<PerversitySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology_basis: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    Generator(Generator),
    Simplices {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        maximal: Vec<Vec<usize>>,
    },
    ChainComplex { dims: Vec<usize>, boundaries: Vec<Vec<Vec<String>>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Generator {
    Point,
    Simplex { n: usize },
    Sphere { n: usize },
    Circle { k: usize },
    Cone { of: Box<Generator> },
    Product { first: Box<Generator>, second: Box<Generator> },
    Subdivision { of: Box<Generator> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumSpec {
    pub simplices: Vec<Vec<usize>>,
    /// Defaults to the dimension of the space minus that of the stratum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PerversitySpec {
    Named(String),
    Table { table: Vec<usize> },
}

impl PerversitySpec {
    pub fn resolve(&self) -> Result<Perversity, CliError> {
        match self {
            PerversitySpec::Named(name) => Perversity::from_name(name).map_err(|e| CliError::Input(e.to_string())),
            PerversitySpec::Table { table } => {
                Perversity::table(table.clone()).map_err(|e| CliError::Input(e.to_string()))
            }
        }
    }
}

impl Generator {
    pub fn build(&self) -> Result<SimplicialComplex, CliError> {
        Ok(match self {
            Generator::Point => point(),
            Generator::Simplex { n } => simplex(*n),
            Generator::Sphere { n } => sphere(*n),
            Generator::Circle { k } => circle(*k).map_err(|e| CliError::Input(e.to_string()))?,
            Generator::Cone { of } => cone(&of.build()?),
            Generator::Product { first, second } => product(&first.build()?, &second.build()?),
            Generator::Subdivision { of } => barycentric_subdivision(&of.build()?).complex,
        })
    }

    /// Parses `sphere:2`, `cone:sphere:1`, `product:circle:3:cone:sphere:1`.
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        let tokens: Vec<&str> = spec.split(':').collect();
        let mut pos = 0;
        let g = Self::parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(CliError::Input(format!("trailing tokens in generator spec {spec:?}")));
        }
        Ok(g)
    }

    fn parse_tokens(tokens: &[&str], pos: &mut usize) -> Result<Self, CliError> {
        let name = *tokens.get(*pos).ok_or_else(|| CliError::Input("incomplete generator spec".into()))?;
        *pos += 1;
        let mut number = |what: &str| -> Result<usize, CliError> {
            let t = tokens.get(*pos).ok_or_else(|| CliError::Input(format!("{name} needs {what}")))?;
            *pos += 1;
            t.parse().map_err(|_| CliError::Input(format!("{name}: {t:?} is not a number")))
        };
        Ok(match name {
            "point" => Generator::Point,
            "simplex" => Generator::Simplex { n: number("a dimension")? },
            "sphere" => Generator::Sphere { n: number("a dimension")? },
            "circle" => Generator::Circle { k: number("a vertex count")? },
            "cone" => Generator::Cone { of: Box::new(Self::parse_tokens(tokens, pos)?) },
            "subdivision" => Generator::Subdivision { of: Box::new(Self::parse_tokens(tokens, pos)?) },
            "product" => {
                let first = Self::parse_tokens(tokens, pos)?;
                let second = Self::parse_tokens(tokens, pos)?;
                Generator::Product { first: Box::new(first), second: Box::new(second) }
            }
            other => return Err(CliError::Input(format!("unknown generator {other:?}"))),
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Point => write!(f, "point"),
            Generator::Simplex { n } => write!(f, "simplex({n})"),
            Generator::Sphere { n } => write!(f, "sphere({n})"),
            Generator::Circle { k } => write!(f, "circle({k})"),
            Generator::Cone { of } => write!(f, "cone({of})"),
            Generator::Product { first, second } => write!(f, "product({first}, {second})"),
            Generator::Subdivision { of } => write!(f, "subdivision({of})"),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|_| CliError::Input(format!("{s:?} is not a rational \"p\" or \"p/q\"")))
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

fn parse_vector(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|s| parse_rational(s)).collect()
}

/// What a document describes, after validation.
#[derive(Clone, Debug)]
pub enum Subject {
    Space { complex: SimplicialComplex, strat: Option<StratifiedComplex> },
    Chain(BasedChainComplex),
}

#[derive(Clone, Debug)]
pub struct Resolved {
    pub name: String,
    pub subject: Subject,
    pub perversity: Option<Perversity>,
    pub basis: Option<HomologyBasis>,
}

impl SpaceDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: SpaceDocument = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Explicit document for a simplicial complex.
    pub fn explicit(name: String, complex: &SimplicialComplex) -> Self {
        SpaceDocument {
            schema_version: SCHEMA_VERSION,
            name: Some(name),
            space: SpaceSpec::Simplices { labels: Some(complex.labels().to_vec()), maximal: complex.maximal_simplices() },
            stratification: Vec::new(),
            perversity: None,
            homology_basis: None,
        }
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let name = self.name.clone().unwrap_or_else(|| match &self.space {
            SpaceSpec::Generator(g) => g.to_string(),
            SpaceSpec::Simplices { .. } => "simplices".into(),
            SpaceSpec::ChainComplex { .. } => "chain complex".into(),
        });
        let perversity = self.perversity.as_ref().map(PerversitySpec::resolve).transpose()?;
        let basis = self
            .homology_basis
            .as_ref()
            .map(|degrees| {
                degrees
                    .iter()
                    .map(|vs| vs.iter().map(|v| parse_vector(v)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map(HomologyBasis::new)
            })
            .transpose()?;
        let subject = match &self.space {
            SpaceSpec::ChainComplex { dims, boundaries } => {
                if !self.stratification.is_empty() {
                    return Err(CliError::Input("a chain complex cannot carry a stratification".into()));
                }
                Subject::Chain(chain_complex(dims, boundaries)?)
            }
            SpaceSpec::Generator(g) => self.space_subject(g.build()?)?,
            SpaceSpec::Simplices { labels, maximal } => {
                let n = maximal.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
                let labels = match labels {
                    Some(l) if l.len() >= n => l.clone(),
                    Some(l) => {
                        return Err(CliError::Input(format!("{} labels but vertex {} is referenced", l.len(), n - 1)))
                    }
                    None => (0..n).map(|i| i.to_string()).collect(),
                };
                let complex = SimplicialComplex::from_maximal(labels, maximal).map_err(|e| CliError::Input(e.to_string()))?;
                self.space_subject(complex)?
            }
        };
        Ok(Resolved { name, subject, perversity, basis })
    }

    fn space_subject(&self, complex: SimplicialComplex) -> Result<Subject, CliError> {
        if self.stratification.is_empty() {
            return Ok(Subject::Space { complex, strat: None });
        }
        let dim = complex.dimension().unwrap_or(0);
        let mut strata = Vec::new();
        for s in &self.stratification {
            if let Some(v) = s.simplices.iter().flatten().find(|&&v| v >= complex.num_labels()) {
                return Err(CliError::Input(format!("stratum references missing vertex {v}")));
            }
            let sub = complex.subcomplex(&s.simplices).map_err(|e| CliError::Input(e.to_string()))?;
            let codimension = match s.codimension {
                Some(c) => c,
                None => dim
                    .checked_sub(sub.dimension().unwrap_or(0))
                    .ok_or_else(|| CliError::Input("stratum is larger than the space".into()))?,
            };
            strata.push(Stratum { complex: sub, codimension });
        }
        let strat = StratifiedComplex::new(complex.clone(), strata).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(Subject::Space { complex, strat: Some(strat) })
    }
}

fn chain_complex(dims: &[usize], boundaries: &[Vec<Vec<String>>]) -> Result<BasedChainComplex, CliError> {
    let mut mats = Vec::with_capacity(boundaries.len());
    for (q, rows) in boundaries.iter().enumerate() {
        let (r, c) = (dims.get(q).copied().unwrap_or(0), dims.get(q + 1).copied().unwrap_or(0));
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(CliError::Input(format!("boundary {} must be {r}x{c}", q + 1)));
        }
        let rows = rows.iter().map(|row| parse_vector(row)).collect::<Result<Vec<_>, _>>()?;
        mats.push(RationalMatrix::from_rows(c, rows).map_err(|e| CliError::Input(e.to_string()))?);
    }
    BasedChainComplex::new(dims.to_vec(), mats).map_err(|e| CliError::Input(e.to_string()))
}

/// Rows of a matrix as rational strings.
pub fn matrix_rows(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect()
}

pub fn basis_strings(h: &HomologyBasis) -> Vec<Vec<Vec<String>>> {
    h.degrees().iter().map(|d| d.iter().map(|v| v.iter().map(format_rational).collect()).collect()).collect()
}

/// A single vertex as singular stratum of full codimension.
pub fn vertex_stratum(complex: &SimplicialComplex, apex: usize) -> StratumSpec {
    StratumSpec { simplices: vec![vec![apex]], codimension: complex.dimension() }
}
