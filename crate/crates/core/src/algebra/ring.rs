//! Polynomial rings and ring contexts (a polynomial ring together with
//! quotient relations).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::Polynomial;
use crate::algebra::scalar::Domain;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct PolyRingData {
    vars: Vec<String>,
    domain: Domain,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// A polynomial ring `k[x_1, …, x_n]` with grading weights and a designated
/// monomial order. Cheap to clone.
#[derive(Clone, Debug)]
pub struct PolyRing(Arc<PolyRingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// A ring with unit weights and grevlex order.
    pub fn new<S: AsRef<str>>(domain: Domain, vars: &[S]) -> Result<PolyRing> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::precondition(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::precondition(format!("duplicate variable `{v}`")));
            }
        }
        let weights = vec![1; vars.len()];
        Ok(PolyRing(Arc::new(PolyRingData { vars, domain, weights, order: MonomialOrder::Grevlex })))
    }

    pub fn with_weights(&self, weights: &[u32]) -> Result<PolyRing> {
        if weights.len() != self.nvars() || weights.contains(&0) {
            return Err(Error::precondition("weights must be positive, one per variable"));
        }
        Ok(self.rebuild(|d| d.weights = weights.to_vec()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        if self.order() == order {
            return self.clone();
        }
        self.rebuild(|d| d.order = order)
    }

    pub fn with_domain(&self, domain: Domain) -> PolyRing {
        if self.domain() == domain {
            return self.clone();
        }
        self.rebuild(|d| d.domain = domain)
    }

    fn rebuild(&self, edit: impl FnOnce(&mut PolyRingData)) -> PolyRing {
        let mut d = PolyRingData {
            vars: self.0.vars.clone(),
            domain: self.0.domain,
            weights: self.0.weights.clone(),
            order: self.0.order,
        };
        edit(&mut d);
        PolyRing(Arc::new(d))
    }

    /// Prepends fresh variables (grading weight `tag_weight`, possibly zero)
    /// and switches to the block order eliminating them.
    pub fn prepend_vars(&self, names: &[&str], tag_weight: u32) -> PolyRing {
        let mut vars: Vec<String> = Vec::with_capacity(self.nvars() + names.len());
        for n in names {
            let mut name = n.to_string();
            while self.0.vars.contains(&name) || vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        vars.extend(self.0.vars.iter().cloned());
        let mut weights = vec![tag_weight; names.len()];
        weights.extend(self.0.weights.iter().copied());
        PolyRing(Arc::new(PolyRingData {
            vars,
            domain: self.0.domain,
            weights,
            order: MonomialOrder::Block(names.len()),
        }))
    }

    /// The ring on a subset of the variables, keeping weights.
    pub fn subring(&self, keep: &[usize]) -> PolyRing {
        PolyRing(Arc::new(PolyRingData {
            vars: keep.iter().map(|&i| self.0.vars[i].clone()).collect(),
            domain: self.0.domain,
            weights: keep.iter().map(|&i| self.0.weights[i]).collect(),
            order: match self.0.order {
                MonomialOrder::Block(_) => MonomialOrder::Grevlex,
                o => o,
            },
        }))
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn domain(&self) -> Domain {
        self.0.domain
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Same variables, weights and domain; the order may differ.
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.0.vars == other.0.vars && self.0.domain == other.0.domain && self.0.weights == other.0.weights
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b, &self.0.weights)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, self.domain().one())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self, i)
    }

    /// All variables as polynomials: the generators of the homogeneous maximal ideal.
    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::algebra::expr::parse_poly(text, self)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.domain(), self.0.vars.join(", "))
    }
}

/// The ambient ring `T = k[x]/Q` of a computation: a polynomial ring plus
/// quotient relations (possibly none). Ideals of `T` are represented by
/// generators in the polynomial ring, with `Q` adjoined for every Gröbner
/// computation.
#[derive(Clone, Debug)]
pub struct RingContext {
    ring: PolyRing,
    relations: Arc<Vec<Polynomial>>,
    graded: bool,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && (Arc::ptr_eq(&self.relations, &other.relations) || self.relations == other.relations)
    }
}

impl RingContext {
    pub fn polynomial(ring: &PolyRing) -> RingContext {
        RingContext { ring: ring.clone(), relations: Arc::new(Vec::new()), graded: true }
    }

    /// `ring / (relations)`. Zero relations are dropped; the context is graded
    /// iff every relation is homogeneous.
    pub fn quotient(ring: &PolyRing, relations: Vec<Polynomial>) -> Result<RingContext> {
        let mut rels = Vec::new();
        for r in relations {
            if r.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !r.is_zero() {
                rels.push(r);
            }
        }
        let graded = rels.iter().all(|r| r.is_homogeneous());
        Ok(RingContext { ring: ring.clone(), relations: Arc::new(rels), graded })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_empty()
    }

    /// `T/(f)`: the relations of `T` with `f` adjoined.
    pub fn hypersurface(&self, f: &Polynomial) -> Result<RingContext> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let mut rels = self.relations.as_ref().clone();
        rels.push(f.clone());
        RingContext::quotient(&self.ring, rels)
    }

    /// The same quotient presented in a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> RingContext {
        let ring = self.ring.with_order(order);
        let relations = self.relations.iter().map(|r| r.reorder(&ring).expect("same variables")).collect();
        RingContext { ring, relations: Arc::new(relations), graded: self.graded }
    }

    pub fn check_graded(&self) -> Result<()> {
        if !self.graded {
            return Err(Error::NonHomogeneous("ring relations".into()));
        }
        Ok(())
    }

    /// Krull dimension of the ambient polynomial ring.
    pub fn ambient_dim(&self) -> usize {
        self.ring.nvars()
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring)?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_and_bad_names() {
        assert!(PolyRing::new(Domain::Rationals, &["x", "x"]).is_err());
        assert!(PolyRing::new(Domain::Rationals, &["1x"]).is_err());
        assert!(PolyRing::new(Domain::Rationals, &["x_1", "y"]).is_ok());
    }

    #[test]
    fn prepend_avoids_name_clash() {
        let r = PolyRing::new(Domain::Rationals, &["t", "x"]).unwrap();
        let e = r.prepend_vars(&["t"], 0);
        assert_eq!(e.vars(), &["t_".to_string(), "t".into(), "x".into()]);
        assert_eq!(e.order(), MonomialOrder::Block(1));
        assert_eq!(e.weights(), &[0, 1, 1]);
    }

    #[test]
    fn quotient_tracks_grading() {
        let r = PolyRing::new(Domain::Rationals, &["x", "y"]).unwrap();
        let q = RingContext::quotient(&r, vec![r.parse("x^2+y^2").unwrap()]).unwrap();
        assert!(q.is_graded());
        let a = RingContext::quotient(&r, vec![r.parse("x^2+y").unwrap()]).unwrap();
        assert!(!a.is_graded());
        assert!(a.check_graded().is_err());
    }
}
