//! Weak-liftability decisions for cyclic modules `T/I` over `R = T/(f)`.
//!
//! Complete criteria (presentation rows, socle forms, graded degrees, the
//! cyclic group ring) issue `WeaklyLiftable` / `NotWeaklyLiftable`.
//! Necessary conditions only ever issue `ObstructionFound` or
//! `Inconclusive`.

mod betti;
mod criteria;
mod group;

pub use betti::{betti_relations, BettiReport};
pub use criteria::{
    certify_lift_cyclic, graded_obstruction, obstruction_suite, replay_cofactors, weaklift_cm1, weaklift_cyclic,
    weaklift_gor0,
};
pub use group::{group_ring_coefficients, group_ring_weaklift};

use std::fmt;

use crate::algebra::poly::Polynomial;
use crate::groebner::MembershipCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    WeaklyLiftable,
    NotWeaklyLiftable,
    ObstructionFound,
    LiftCertified,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::WeaklyLiftable => "WeaklyLiftable",
            Verdict::NotWeaklyLiftable => "NotWeaklyLiftable",
            Verdict::ObstructionFound => "ObstructionFound",
            Verdict::LiftCertified => "LiftCertified",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    /// Input not homogeneous: colon and membership computations are global,
    /// not local at the origin.
    NonGraded,
    /// `I^(2)` was computed as `I^2 : w^∞` for a caller-supplied witness `w`.
    WitnessConditional(Polynomial),
    /// A hypothesis the library cannot check, recorded verbatim.
    CallerAssertion(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::NonGraded => f.write_str("non-graded input: computations are global, not local"),
            Warning::WitnessConditional(w) => write!(f, "symbolic square computed as I^2 : ({w})^inf"),
            Warning::CallerAssertion(s) => write!(f, "caller assertion: {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    None,
    /// `x` with `r − Σ x_i·rows_i ∈ I·T^m`, where `r` and `rows` are the
    /// columns of the syzygy matrix of `generators = (f, f_1, …, f_n)`.
    Cofactors { generators: Vec<Polynomial>, r: Vec<Polynomial>, rows: Vec<Vec<Polynomial>>, x: Vec<Polynomial> },
    /// `r` lies outside `span(rows) + I·T^m`.
    NonMember { generators: Vec<Polynomial>, r: Vec<Polynomial>, rows: Vec<Vec<Polynomial>> },
    /// The socle test `u·f ∈ target`; cofactors when the product is a member.
    Socle { u: Polynomial, product: Polynomial, target: Vec<Polynomial>, membership: Option<MembershipCertificate> },
    /// An element of `left` outside `right`, violating `left ⊆ right`.
    Witness { element: Polynomial, inclusion: String },
    /// A lift `T/L` with `L + (f) = I` and `f` regular on `T/L`.
    Lift { ideal: Vec<Polynomial> },
    /// Degrees of the minimal presentation entries against the generator degree.
    Presentation { generator_degree: u64, entry_degrees: Vec<u64> },
    /// Coefficients of `ḡ` in `F_p[Y]/(Y^p)` and the ideal it was tested against.
    GroupRing { coefficients: Vec<u64>, target: Vec<Polynomial> },
}

/// One step of a decision, in the order it was run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftDecision {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub trail: Vec<Check>,
    pub warnings: Vec<Warning>,
}

impl LiftDecision {
    fn new() -> LiftDecision {
        LiftDecision { verdict: Verdict::Inconclusive, certificate: Certificate::None, trail: Vec::new(), warnings: Vec::new() }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.trail.push(Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    fn finish(mut self, verdict: Verdict, certificate: Certificate) -> LiftDecision {
        self.verdict = verdict;
        self.certificate = certificate;
        self
    }
}
