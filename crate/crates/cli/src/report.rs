//! JSON report schema. Polynomials are written in the script expression
//! syntax so every certificate can be parsed back and replayed.

use liftcheck_core::algebra::{Polynomial, RingContext};
use liftcheck_core::groebner::MembershipCertificate;
use liftcheck_core::liftcrit::{Certificate, LiftDecision};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    format!("liftcheck {}", env!("CARGO_PKG_VERSION"))
}

pub fn digest(input: &str) -> String {
    format!("{:x}", Sha256::digest(input.as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub input_sha256: String,
    pub tasks: Vec<TaskReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingInfo {
    pub name: String,
    pub domain: String,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub relations: Vec<String>,
}

impl RingInfo {
    pub fn new(name: &str, ctx: &RingContext) -> RingInfo {
        let r = ctx.ring();
        RingInfo {
            name: name.to_string(),
            domain: r.domain().to_string(),
            vars: r.vars().to_vec(),
            weights: r.weights().to_vec(),
            relations: strings(ctx.relations()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskReport {
    pub index: usize,
    pub kind: String,
    pub line: usize,
    pub ring: Option<RingInfo>,
    pub verdict: Option<String>,
    pub certificate: Option<CertificateJson>,
    pub trail: Vec<CheckJson>,
    pub warnings: Vec<String>,
    pub result: Option<serde_json::Value>,
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipJson {
    pub coefficients: Vec<String>,
    pub relation_coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertificateJson {
    Cofactors { generators: Vec<String>, r: Vec<String>, rows: Vec<Vec<String>>, x: Vec<String> },
    NonMember { generators: Vec<String>, r: Vec<String>, rows: Vec<Vec<String>> },
    Socle { u: String, product: String, target: Vec<String>, membership: Option<MembershipJson> },
    Witness { element: String, inclusion: String },
    Lift { ideal: Vec<String> },
    Presentation { generator_degree: u64, entry_degrees: Vec<u64> },
    GroupRing { coefficients: Vec<u64>, target: Vec<String> },
}

pub fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

fn rows(rs: &[Vec<Polynomial>]) -> Vec<Vec<String>> {
    rs.iter().map(|r| strings(r)).collect()
}

fn membership(m: &MembershipCertificate) -> MembershipJson {
    MembershipJson { coefficients: strings(&m.coefficients), relation_coefficients: strings(&m.relation_coefficients) }
}

impl CertificateJson {
    pub fn from_certificate(c: &Certificate) -> Option<CertificateJson> {
        Some(match c {
            Certificate::None => return None,
            Certificate::Cofactors { generators, r, rows: rs, x } => {
                CertificateJson::Cofactors { generators: strings(generators), r: strings(r), rows: rows(rs), x: strings(x) }
            }
            Certificate::NonMember { generators, r, rows: rs } => {
                CertificateJson::NonMember { generators: strings(generators), r: strings(r), rows: rows(rs) }
            }
            Certificate::Socle { u, product, target, membership: m } => CertificateJson::Socle {
                u: u.to_string(),
                product: product.to_string(),
                target: strings(target),
                membership: m.as_ref().map(membership),
            },
            Certificate::Witness { element, inclusion } => {
                CertificateJson::Witness { element: element.to_string(), inclusion: inclusion.clone() }
            }
            Certificate::Lift { ideal } => CertificateJson::Lift { ideal: strings(ideal) },
            Certificate::Presentation { generator_degree, entry_degrees } => {
                CertificateJson::Presentation { generator_degree: *generator_degree, entry_degrees: entry_degrees.clone() }
            }
            Certificate::GroupRing { coefficients, target } => {
                CertificateJson::GroupRing { coefficients: coefficients.clone(), target: strings(target) }
            }
        })
    }
}

impl TaskReport {
    pub fn new(index: usize, kind: &str, line: usize) -> TaskReport {
        TaskReport {
            index,
            kind: kind.to_string(),
            line,
            ring: None,
            verdict: None,
            certificate: None,
            trail: Vec::new(),
            warnings: Vec::new(),
            result: None,
            error: None,
            time_ms: None,
        }
    }

    pub fn record(&mut self, d: &LiftDecision) {
        self.verdict = Some(d.verdict.to_string());
        self.certificate = CertificateJson::from_certificate(&d.certificate);
        self.trail = d.trail.iter().map(|c| CheckJson { check: c.name.clone(), passed: c.passed, detail: c.detail.clone() }).collect();
        self.warnings = d.warnings.iter().map(ToString::to_string).collect();
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub schema: u32,
    pub tool: String,
    pub fixtures: Vec<FixtureReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub name: String,
    /// What the fixture establishes, stated mathematically.
    pub claim: String,
    pub checks: Vec<Observation>,
    pub passed: bool,
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub label: String,
    pub expected: String,
    pub observed: String,
}

impl Observation {
    pub fn new(label: impl Into<String>, expected: impl ToString, observed: impl ToString) -> Observation {
        Observation { label: label.into(), expected: expected.to_string(), observed: observed.to_string() }
    }

    pub fn holds(&self) -> bool {
        self.expected == self.observed
    }
}
