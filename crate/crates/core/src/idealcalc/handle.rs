use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{PolyRing, RingContext};
use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis, MembershipCertificate};

/// An ideal of `T = k[x]/Q`, given by generators in `k[x]`. Every Gröbner
/// computation adjoins `Q`. Reduced bases are cached per monomial order;
/// clones share the cache.
#[derive(Clone)]
pub struct IdealHandle {
    ctx: RingContext,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealHandle").field("ring", &self.ctx.to_string()).field("gens", &self.gens).finish()
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl IdealHandle {
    /// Zero generators are dropped; generators are moved into the ring's order.
    pub fn new(ctx: &RingContext, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_variables(ctx.ring()) {
                return Err(if g.domain() != ctx.ring().domain() {
                    Error::DomainMismatch(g.domain().to_string(), ctx.ring().domain().to_string())
                } else {
                    Error::RingMismatch
                });
            }
            if !g.is_zero() {
                out.push(g.reorder(ctx.ring())?);
            }
        }
        Ok(IdealHandle { ctx: ctx.clone(), gens: out, cache: Arc::default() })
    }

    pub fn parse(ctx: &RingContext, gens: &[&str]) -> Result<IdealHandle> {
        let polys = gens.iter().map(|g| ctx.ring().parse(g)).collect::<Result<Vec<_>>>()?;
        IdealHandle::new(ctx, polys)
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(ctx: &RingContext) -> IdealHandle {
        IdealHandle::new(ctx, ctx.ring().variables()).expect("variables of the ring")
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn ring(&self) -> &PolyRing {
        self.ctx.ring()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub(crate) fn check_same_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn check_element(&self, p: &Polynomial) -> Result<()> {
        if !p.ring().same_variables(self.ring()) {
            return Err(if p.domain() != self.ring().domain() {
                Error::DomainMismatch(p.domain().to_string(), self.ring().domain().to_string())
            } else {
                Error::RingMismatch
            });
        }
        Ok(())
    }

    /// Reduced Gröbner basis of the ideal plus the ring relations in the ring's order.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.gb_in(self.ring().order())
    }

    pub fn gb_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::groebner_basis(&self.gens, &self.ctx, order)?);
        self.cache.lock().expect("cache lock").entry(order).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_element(p)?;
        let nf = self.gb()?.normal_form(p)?;
        nf.reorder(self.ring())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Membership with optional cofactors on the generators and relations.
    pub fn member(&self, p: &Polynomial, want_certificate: bool) -> Result<(bool, Option<MembershipCertificate>)> {
        if !self.contains(p)? {
            return Ok((false, None));
        }
        if !want_certificate {
            return Ok((true, None));
        }
        let cert = groebner::certify_membership(p, &self.gens, &self.ctx)?
            .ok_or_else(|| Error::invariant("membership certificate missing for a member"))?;
        let replay = cert.replay_in(self.ring(), &self.gens, self.ctx.relations())?;
        if replay != p.reorder(self.ring())? {
            return Err(Error::invariant("membership certificate does not replay"));
        }
        Ok((true, Some(cert)))
    }

    pub fn contains_all(&self, ps: &[Polynomial]) -> Result<bool> {
        for p in ps {
            if !self.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first generator of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &IdealHandle) -> Result<Option<Polynomial>> {
        self.check_same_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_subset_of(&self, other: &IdealHandle) -> Result<bool> {
        Ok(self.first_outside(other)?.is_none())
    }

    /// Equality as ideals of `T`, by mutual membership.
    pub fn same_ideal(&self, other: &IdealHandle) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// Whether the ideal is zero in `T`, i.e. contained in the relations.
    pub fn is_zero_ideal(&self) -> Result<bool> {
        let q = IdealHandle::new(&self.ctx, Vec::new())?;
        q.contains_all(&self.gens)
    }

    /// Generators that remain after dropping those already in the ring
    /// relations.
    pub fn nonzero_gens(&self) -> Result<Vec<Polynomial>> {
        let q = IdealHandle::new(&self.ctx, Vec::new())?;
        let mut out = Vec::new();
        for g in &self.gens {
            if !q.contains(g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    pub fn with_gens(&self, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        IdealHandle::new(&self.ctx, gens)
    }

    /// Same ideal presented by its reduced Gröbner basis minus elements of `Q`.
    pub fn reduced_presentation(&self) -> Result<IdealHandle> {
        let gb = self.gb()?;
        let gens = gb.elements().iter().map(|g| g.reorder(self.ring())).collect::<Result<Vec<_>>>()?;
        let h = self.with_gens(gens)?;
        let kept = h.nonzero_gens()?;
        self.with_gens(kept)
    }
}

impl MembershipCertificate {
    pub(crate) fn replay_in(&self, ring: &PolyRing, gens: &[Polynomial], rels: &[Polynomial]) -> Result<Polynomial> {
        if gens.is_empty() && rels.is_empty() {
            return Ok(ring.zero());
        }
        self.replay(gens, rels)?.reorder(ring)
    }
}
