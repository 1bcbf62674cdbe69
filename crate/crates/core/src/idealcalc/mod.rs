//! Ideal-level calculus on top of the Gröbner engine: sums, products,
//! intersections, colons, saturation, radical membership, socles.

mod handle;
pub mod socle;

pub use handle::IdealHandle;
pub use socle::{krull_dim, socle_data, SocleData};

use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::PolyRing;
use crate::error::{Error, Result};
use crate::groebner::engine::{self, Space};

/// Saturation gives up after this many colon steps.
pub const SATURATION_CAP: usize = 32;

pub fn sum(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(j)?;
    let mut gens = i.gens().to_vec();
    gens.extend(j.gens().iter().cloned());
    i.with_gens(gens)
}

pub fn product(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(j)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for a in i.gens() {
        for b in j.gens() {
            let p = a.try_mul(b)?;
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
    }
    i.with_gens(gens)
}

pub fn power(i: &IdealHandle, n: u32) -> Result<IdealHandle> {
    if n < 1 {
        return Err(Error::precondition("ideal power must be at least 1"));
    }
    let mut acc = i.clone();
    for _ in 1..n {
        acc = product(&acc, i)?;
    }
    Ok(acc)
}

/// `(a) ∩ (b)` in the polynomial ring (no relations), via a tag variable `s`
/// of weight zero: eliminate `s` from `s·(a) + (1−s)·(b)`.
fn intersect_raw(ring: &PolyRing, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let tagged = ring.with_order(MonomialOrder::Grevlex).prepend_vars(&["s"], 0);
    let s = tagged.var(0);
    let one_minus_s = tagged.one().try_sub(&s)?;
    let mut input = Vec::with_capacity(a.len() + b.len());
    for g in a {
        input.push(s.try_mul(&g.embed(&tagged, 1))?);
    }
    for g in b {
        input.push(one_minus_s.try_mul(&g.embed(&tagged, 1))?);
    }
    let space = Space::ideal(&tagged);
    let basis = engine::buchberger(&space, input.iter().map(|g| space.from_poly(g, 0)).collect())?;
    let keep: Vec<usize> = (1..tagged.nvars()).collect();
    let mut out = Vec::new();
    for v in &basis {
        if let Some(h) = space.to_poly(v).restrict(ring, &keep) {
            out.push(h);
        }
    }
    Ok(out)
}

fn with_relations(i: &IdealHandle) -> Vec<Polynomial> {
    let mut v = i.gens().to_vec();
    v.extend(i.ctx().relations().iter().cloned());
    v
}

pub fn intersect(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(j)?;
    let gens = intersect_raw(i.ring(), &with_relations(i), &with_relations(j))?;
    i.with_gens(gens)?.without_relations()
}

impl IdealHandle {
    /// Drops generators lying in the ring relations.
    fn without_relations(&self) -> Result<IdealHandle> {
        let g = self.nonzero_gens()?;
        self.with_gens(g)
    }
}

/// `I : d = {x : x·d ∈ I}`, computed as `(I ∩ (d)) / d` in `k[x]` with the
/// relations adjoined to `I`.
pub fn colon_element(i: &IdealHandle, d: &Polynomial) -> Result<IdealHandle> {
    i.check_element(d)?;
    let d = d.reorder(i.ring())?;
    let zero = i.with_gens(Vec::new())?;
    if zero.contains(&d)? {
        return Err(Error::precondition("colon by an element that is zero in the ring"));
    }
    if d.is_unit_constant() {
        return Ok(i.clone());
    }
    let inter = intersect_raw(i.ring(), &with_relations(i), std::slice::from_ref(&d))?;
    let mut gens = Vec::with_capacity(inter.len());
    for g in inter {
        let q = g
            .div_exact(&d)?
            .ok_or_else(|| Error::invariant("intersection element not divisible by the colon element"))?;
        gens.push(q);
    }
    let out = i.with_gens(gens)?.without_relations()?;
    // (I : d)·d ⊆ I
    for g in out.gens() {
        if !i.contains(&g.try_mul(&d)?)? {
            return Err(Error::invariant("colon postcondition (I:d)·d ⊆ I failed"));
        }
    }
    Ok(out)
}

/// `I : D` for an ideal `D`, as the intersection of `I : d` over generators.
pub fn colon(i: &IdealHandle, d: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(d)?;
    let ds = d.nonzero_gens()?;
    if ds.is_empty() {
        return Err(Error::precondition("colon by the zero ideal"));
    }
    let mut acc: Option<IdealHandle> = None;
    for g in &ds {
        let c = colon_element(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.expect("at least one generator"))
}

/// `I : g^∞` with the number of colon steps taken before stabilizing.
pub fn saturate(i: &IdealHandle, g: &Polynomial) -> Result<(IdealHandle, usize)> {
    let mut cur = i.clone();
    for step in 1..=SATURATION_CAP {
        let next = colon_element(&cur, g)?;
        if next.is_subset_of(&cur)? {
            return Ok((cur, step - 1));
        }
        cur = next;
    }
    Err(Error::SaturationCap(SATURATION_CAP))
}

/// Rabinowitsch: `g ∈ rad(I)` iff `1 ∈ I + (1 − y·g)` with a fresh variable `y`.
pub fn radical_member(g: &Polynomial, i: &IdealHandle) -> Result<bool> {
    i.check_element(g)?;
    let ring = i.ring().with_order(MonomialOrder::Grevlex);
    let ext = ring.prepend_vars(&["y"], 1).with_order(MonomialOrder::Grevlex);
    let y = ext.var(0);
    let mut input: Vec<Polynomial> = with_relations(i).iter().map(|p| p.embed(&ext, 1)).collect();
    input.push(ext.one().try_sub(&y.try_mul(&g.reorder(&ring)?.embed(&ext, 1))?)?);
    let space = Space::ideal(&ext);
    let basis = engine::buchberger(&space, input.iter().map(|p| space.from_poly(p, 0)).collect())?;
    Ok(basis.len() == 1 && basis[0][0].mono.is_one())
}

/// Whether `f` is a nonzerodivisor on `T/I`: `I : f = I`.
pub fn is_nonzerodivisor(f: &Polynomial, modulo: &IdealHandle) -> Result<bool> {
    let c = colon_element(modulo, f)?;
    c.is_subset_of(modulo)
}

/// `I^2 : w^∞`, the witness-based symbolic square. Requires `I : w = I`.
pub fn symbolic_square(i: &IdealHandle, w: &Polynomial) -> Result<IdealHandle> {
    if !is_nonzerodivisor(w, i)? {
        return Err(Error::precondition("witness is a zerodivisor on T/I (I : w ≠ I)"));
    }
    let sq = power(i, 2)?;
    Ok(saturate(&sq, w)?.0)
}
