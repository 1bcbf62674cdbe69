//! Reduced Gröbner bases, normal forms, certified membership and elimination.
//!
//! Quotient rings are handled by adjoining their relations to every
//! generator set.

pub mod engine;
pub mod limits;

use std::fmt;

use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{PolyRing, RingContext};
use crate::error::{Error, Result};
use engine::{MVec, Reducer, Space};

pub use limits::{set_limits, Limits};

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
    relations_adjoined: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn relations_adjoined(&self) -> bool {
        self.relations_adjoined
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    fn vectors(&self, space: &Space) -> Vec<MVec> {
        self.elements.iter().map(|g| space.from_poly(g, 0)).collect()
    }

    /// Remainder of `p` on division by the basis; zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let p = p.reorder(&self.ring)?;
        let space = Space::ideal(&self.ring);
        let basis = self.vectors(&space);
        let r = Reducer::new(&space, &basis).reduce(space.from_poly(&p, 0))?;
        Ok(space.to_poly(&r))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> Result<bool> {
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[i + 1..] {
                if !self.normal_form(&s_polynomial(a, b)?)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (ta, tb) = (a.leading_term().ok_or(Error::ZeroPolynomial)?, b.leading_term().ok_or(Error::ZeroPolynomial)?);
    let l = ta.mono.lcm(&tb.mono);
    let ma = ta.mono.quotient_of(&l).expect("lcm");
    let mb = tb.mono.quotient_of(&l).expect("lcm");
    a.mul_term(&ta.coeff.inv()?, &ma).try_sub(&b.mul_term(&tb.coeff.inv()?, &mb))
}

fn ordered_inputs(gens: &[Polynomial], ctx: &RingContext, ring: &PolyRing) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(gens.len() + ctx.relations().len());
    for g in gens.iter().chain(ctx.relations()) {
        if !g.ring().same_variables(ctx.ring()) {
            return Err(if g.domain() != ctx.ring().domain() {
                Error::DomainMismatch(g.domain().to_string(), ctx.ring().domain().to_string())
            } else {
                Error::RingMismatch
            });
        }
        if !g.is_zero() {
            out.push(g.reorder(ring)?);
        }
    }
    Ok(out)
}

/// The reduced Gröbner basis of `(gens) + Q` in `order`, `Q` the relations of `ctx`.
pub fn groebner_basis(gens: &[Polynomial], ctx: &RingContext, order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = ctx.ring().with_order(order);
    let inputs = ordered_inputs(gens, ctx, &ring)?;
    let space = Space::ideal(&ring);
    let basis = engine::buchberger(&space, inputs.iter().map(|g| space.from_poly(g, 0)).collect())?;
    Ok(GroebnerBasis {
        elements: basis.iter().map(|v| space.to_poly(v)).collect(),
        ring,
        relations_adjoined: !ctx.relations().is_empty(),
    })
}

/// Cofactors expressing an element of `(gens) + Q` in terms of the
/// generators and the ring relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub coefficients: Vec<Polynomial>,
    pub relation_coefficients: Vec<Polynomial>,
}

impl MembershipCertificate {
    /// `Σ c_i·g_i + Σ d_j·q_j`.
    pub fn replay(&self, gens: &[Polynomial], relations: &[Polynomial]) -> Result<Polynomial> {
        if gens.len() != self.coefficients.len() || relations.len() != self.relation_coefficients.len() {
            return Err(Error::precondition("certificate length differs from generator count"));
        }
        let ring = gens.first().or(relations.first()).map(|g| g.ring().clone());
        let Some(ring) = ring else {
            return Err(Error::precondition("empty generator list"));
        };
        let mut acc = ring.zero();
        for (c, g) in self.coefficients.iter().zip(gens).chain(self.relation_coefficients.iter().zip(relations)) {
            acc = acc.try_add(&c.reorder(&ring)?.try_mul(g)?)?;
        }
        Ok(acc)
    }
}

/// Decides `p ∈ (gens) + Q`, returning cofactors on success.
pub fn certify_membership(p: &Polynomial, gens: &[Polynomial], ctx: &RingContext) -> Result<Option<MembershipCertificate>> {
    let ring = ctx.ring().clone();
    let rels = ctx.relations();
    let all: Vec<&Polynomial> = gens.iter().chain(rels).collect();
    let mut shifts = vec![0u64];
    shifts.extend(all.iter().map(|g| g.degree()));
    let space = Space::new(&ring, shifts);
    let mut input = Vec::with_capacity(all.len());
    for (k, g) in all.iter().enumerate() {
        if !g.ring().same_variables(&ring) {
            return Err(Error::RingMismatch);
        }
        let mut v = space.from_poly(&g.reorder(&ring)?, 0);
        v.push(engine::MTerm { coeff: ring.domain().one(), mono: Monomial::one(ring.nvars()), comp: k + 1 });
        input.push(space.canonicalize(v));
    }
    let basis = engine::buchberger_truncated(&space, input, 1)?;
    let r = Reducer::new(&space, &basis).reduce(space.from_poly(&p.reorder(&ring)?, 0))?;
    if r.iter().any(|t| t.comp == 0) {
        return Ok(None);
    }
    let coords = space.to_polys(&r);
    let neg: Vec<Polynomial> = coords[1..].iter().map(|c| -c).collect();
    let (a, b) = neg.split_at(gens.len());
    Ok(Some(MembershipCertificate { coefficients: a.to_vec(), relation_coefficients: b.to_vec() }))
}

/// Generators of `((gens) + Q) ∩ k[retained variables]`, as polynomials in
/// the subring on the variables not listed in `drop`.
pub fn eliminate(gens: &[Polynomial], ctx: &RingContext, drop: &[usize]) -> Result<(PolyRing, Vec<Polynomial>)> {
    let ring = ctx.ring();
    let n = ring.nvars();
    if drop.iter().any(|&i| i >= n) {
        return Err(Error::precondition("variable index out of range"));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let sub = ring.subring(&keep);
    if drop.is_empty() {
        let gb = groebner_basis(gens, ctx, sub.order())?;
        return Ok((sub, gb.elements().to_vec()));
    }
    for r in ctx.relations() {
        if r.support().iter().any(|i| drop.contains(i)) {
            return Err(Error::precondition("an eliminated variable occurs in the ring relations"));
        }
    }
    // Permute so that the dropped variables come first.
    let mut perm: Vec<usize> = drop.to_vec();
    perm.extend(&keep);
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars()[i].as_str()).collect();
    let weights: Vec<u32> = perm.iter().map(|&i| ring.weights()[i]).collect();
    let elim = PolyRing::new(ring.domain(), &names)?.with_weights(&weights)?.with_order(MonomialOrder::Block(drop.len()));
    let images: Vec<Polynomial> = {
        let mut v = vec![elim.zero(); n];
        for (pos, &i) in perm.iter().enumerate() {
            v[i] = elim.var(pos);
        }
        v
    };
    let mut mapped = Vec::new();
    for g in gens.iter().chain(ctx.relations()) {
        mapped.push(g.substitute(&images)?);
    }
    let space = Space::ideal(&elim);
    let basis = engine::buchberger(&space, mapped.iter().map(|g| space.from_poly(g, 0)).collect())?;
    let positions: Vec<usize> = (drop.len()..n).collect();
    let mut out = Vec::new();
    for v in &basis {
        let g = space.to_poly(v);
        if let Some(h) = g.restrict(&sub, &positions) {
            out.push(h);
        }
    }
    Ok((sub, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::Domain;

    fn ring(d: Domain, vars: &[&str]) -> PolyRing {
        PolyRing::new(d, vars).unwrap()
    }

    fn polys(r: &PolyRing, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| r.parse(x).unwrap()).collect()
    }

    #[test]
    fn principal_quadric_is_its_own_basis() {
        let r = ring(Domain::PrimeField(5), &["x", "y", "z"]);
        let q = r.parse("x^2+y^2+z^2").unwrap();
        let ctx = RingContext::quotient(&r, vec![q.clone()]).unwrap();
        let gb = groebner_basis(&[q.clone()], &ctx, MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.elements(), &[q]);
    }

    #[test]
    fn hochster_mod_two_nonmember() {
        let r = ring(Domain::PrimeField(2), &["x", "y", "z", "a", "b", "c"]);
        let ctx = RingContext::polynomial(&r);
        let gens = polys(&r, &["x^2", "y^2", "z^2", "a^2", "b^2", "c^2", "x*a+y*b+z*c"]);
        let gb = groebner_basis(&gens, &ctx, MonomialOrder::Grevlex).unwrap();
        assert!(gb.satisfies_buchberger_criterion().unwrap());
        let g = r.parse("x*a*y*b + y*b*z*c + z*c*x*a").unwrap();
        assert!(!gb.normal_form(&g).unwrap().is_zero());
    }

    #[test]
    fn normal_form_of_multiple() {
        let r = ring(Domain::Rationals, &["x"]);
        let gb = groebner_basis(&[r.parse("x^2").unwrap()], &RingContext::polynomial(&r), MonomialOrder::Grevlex).unwrap();
        assert!(gb.normal_form(&r.parse("x^3").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn certificates_replay() {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let ctx = RingContext::polynomial(&r);
        let gens = polys(&r, &["x", "y"]);
        let c = certify_membership(&r.parse("x").unwrap(), &gens, &ctx).unwrap().unwrap();
        assert_eq!(c.coefficients, polys(&r, &["1", "0"]));
        let p = r.parse("(x+1)*(x^2 - y) + y*(x*y - 1)").unwrap();
        let c = certify_membership(&p, &polys(&r, &["x^2 - y", "x*y - 1"]), &ctx).unwrap().unwrap();
        assert_eq!(c.replay(&polys(&r, &["x^2 - y", "x*y - 1"]), &[]).unwrap(), p);
        assert!(certify_membership(&r.parse("y").unwrap(), &polys(&r, &["x"]), &ctx).unwrap().is_none());
    }

    #[test]
    fn certificates_in_quotient() {
        let r = ring(Domain::Rationals, &["x", "y"]);
        let q = r.parse("x^2 + y^2").unwrap();
        let ctx = RingContext::quotient(&r, vec![q.clone()]).unwrap();
        let gens = polys(&r, &["x"]);
        let p = r.parse("y^2").unwrap();
        let c = certify_membership(&p, &gens, &ctx).unwrap().unwrap();
        assert_eq!(c.replay(&gens, &[q]).unwrap(), p);
    }

    #[test]
    fn eliminate_parametrization() {
        let r = ring(Domain::Rationals, &["t", "x", "y"]);
        let ctx = RingContext::polynomial(&r);
        let (sub, gens) = eliminate(&polys(&r, &["x - t", "y - t^2"]), &ctx, &[0]).unwrap();
        assert_eq!(gens.len(), 1);
        let expected = sub.parse("x^2 - y").unwrap();
        assert!(gens[0] == expected || gens[0] == -&expected);
        let (_, same) = eliminate(&polys(&r, &["x", "y"]), &ctx, &[]).unwrap();
        assert_eq!(same.len(), 2);
    }
}
