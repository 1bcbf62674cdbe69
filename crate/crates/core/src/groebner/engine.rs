//! Buchberger's algorithm over free modules `A^r`, `A` a polynomial ring over
//! a field. Ideals are the case `r = 1`.
//!
//! Terms are ordered position-over-term: a lower component index beats any
//! monomial in a higher one. Callers exploit this to put "payload"
//! components first and bookkeeping tags after them.

use std::cmp::Ordering;

use crate::algebra::monomial::Monomial;
use crate::algebra::poly::{Polynomial, Term};
use crate::algebra::ring::PolyRing;
use crate::algebra::scalar::Scalar;
use crate::error::{Error, Result};
use crate::groebner::limits::{self, Limits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTerm {
    pub coeff: Scalar,
    pub mono: Monomial,
    pub comp: usize,
}

/// A module element: terms strictly descending in the module order.
pub type MVec = Vec<MTerm>;

/// A free module `A^r` with degree shifts (used only for sugar).
#[derive(Clone, Debug)]
pub struct Space {
    pub ring: PolyRing,
    pub shifts: Vec<u64>,
}

impl Space {
    pub fn new(ring: &PolyRing, shifts: Vec<u64>) -> Space {
        Space { ring: ring.clone(), shifts }
    }

    pub fn ideal(ring: &PolyRing) -> Space {
        Space::new(ring, vec![0])
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn cmp_terms(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        bc.cmp(&ac).then_with(|| self.ring.cmp_monomials(am, bm))
    }

    fn cmp(&self, a: &MTerm, b: &MTerm) -> Ordering {
        self.cmp_terms(&a.mono, a.comp, &b.mono, b.comp)
    }

    fn term_degree(&self, t: &MTerm) -> u64 {
        t.mono.weighted_degree(self.ring.weights()) + self.shifts[t.comp]
    }

    pub fn degree(&self, v: &[MTerm]) -> u64 {
        v.iter().map(|t| self.term_degree(t)).max().unwrap_or(0)
    }

    pub fn canonicalize(&self, mut v: MVec) -> MVec {
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: MVec = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(l) if l.mono == t.mono && l.comp == t.comp => l.coeff = &l.coeff + &t.coeff,
                _ => {
                    if matches!(out.last(), Some(l) if l.coeff.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if matches!(out.last(), Some(l) if l.coeff.is_zero()) {
            out.pop();
        }
        out
    }

    /// `a − c·m·b`.
    pub fn sub_mul(&self, a: &[MTerm], c: &Scalar, m: &Monomial, b: &[MTerm]) -> MVec {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &MTerm| MTerm { coeff: -&(&t.coeff * c), mono: t.mono.mul(m), comp: t.comp };
        while i < a.len() && j < b.len() {
            let bm = b[j].mono.mul(m);
            match self.cmp_terms(&a[i].mono, a[i].comp, &bm, b[j].comp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(MTerm { coeff: -&(&b[j].coeff * c), mono: bm, comp: b[j].comp });
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].coeff - &(&b[j].coeff * c);
                    if !v.is_zero() {
                        out.push(MTerm { coeff: v, mono: bm, comp: b[j].comp });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(scaled));
        out
    }

    pub fn add(&self, a: &[MTerm], b: &[MTerm]) -> MVec {
        let one = Monomial::one(self.ring.nvars());
        let minus_one = -&self.ring.domain().one();
        self.sub_mul(a, &minus_one, &one, b)
    }

    pub fn scale(&self, v: &[MTerm], c: &Scalar, m: &Monomial) -> MVec {
        if c.is_zero() {
            return Vec::new();
        }
        v.iter()
            .map(|t| MTerm { coeff: &t.coeff * c, mono: t.mono.mul(m), comp: t.comp })
            .filter(|t| !t.coeff.is_zero())
            .collect()
    }

    pub fn monic(&self, v: MVec) -> Result<MVec> {
        match v.first() {
            None => Ok(v),
            Some(t) if t.coeff.is_one() => Ok(v),
            Some(t) => {
                let inv = t.coeff.inv()?;
                Ok(self.scale(&v, &inv, &Monomial::one(self.ring.nvars())))
            }
        }
    }

    /// Embeds a polynomial into component `comp`.
    pub fn from_poly(&self, p: &Polynomial, comp: usize) -> MVec {
        p.terms().iter().map(|t| MTerm { coeff: t.coeff.clone(), mono: t.mono.clone(), comp }).collect()
    }

    pub fn from_polys(&self, coords: &[Polynomial]) -> MVec {
        let mut v = Vec::new();
        for (c, p) in coords.iter().enumerate() {
            v.extend(self.from_poly(p, c));
        }
        self.canonicalize(v)
    }

    /// Splits a vector into its coordinate polynomials.
    pub fn to_polys(&self, v: &[MTerm]) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); self.rank()];
        for t in v {
            buckets[t.comp].push(Term { coeff: t.coeff.clone(), mono: t.mono.clone() });
        }
        buckets.into_iter().map(|ts| Polynomial::from_sorted_terms(&self.ring, ts)).collect()
    }

    pub fn to_poly(&self, v: &[MTerm]) -> Polynomial {
        debug_assert!(v.iter().all(|t| t.comp == 0));
        let ts = v.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.clone() }).collect();
        Polynomial::from_sorted_terms(&self.ring, ts)
    }
}

struct Elem {
    v: MVec,
    sugar: u64,
    mask: u64,
}

impl Elem {
    fn lead(&self) -> &MTerm {
        &self.v[0]
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: u64,
}

/// Divisibility lookup over a fixed list of leading terms.
pub struct Reducer<'a> {
    space: &'a Space,
    basis: Vec<(&'a [MTerm], u64)>,
}

impl<'a> Reducer<'a> {
    pub fn new(space: &'a Space, basis: &'a [MVec]) -> Reducer<'a> {
        let basis = basis.iter().filter(|v| !v.is_empty()).map(|v| (v.as_slice(), v[0].mono.support_mask())).collect();
        Reducer { space, basis }
    }

    fn find(&self, t: &MTerm) -> Option<&'a [MTerm]> {
        let mask = t.mono.support_mask();
        self.basis
            .iter()
            .find(|(g, gm)| gm & !mask == 0 && g[0].comp == t.comp && g[0].mono.divides(&t.mono))
            .map(|(g, _)| *g)
    }

    /// Full normal form.
    pub fn reduce(&self, v: MVec) -> Result<MVec> {
        reduce_with(self.space, v, 0, |t| self.find(t).map(|g| (g, 0)), &limits::limits()).map(|(v, _)| v)
    }
}

fn reduce_with<'b>(
    space: &Space,
    mut p: MVec,
    mut sugar: u64,
    find: impl Fn(&MTerm) -> Option<(&'b [MTerm], u64)>,
    lim: &Limits,
) -> Result<(MVec, u64)> {
    let mut rem: MVec = Vec::new();
    let mut steps = 0u64;
    let mut pos = 0;
    // Terms before `pos` are irreducible and already moved to `rem`.
    while pos < p.len() {
        steps += 1;
        if steps.is_multiple_of(4096) {
            limits::check_time(lim)?;
        }
        let lt = &p[pos];
        match find(lt) {
            Some((g, gs)) => {
                let m = g[0].mono.quotient_of(&lt.mono).expect("divisor");
                let c = &lt.coeff * &g[0].coeff.inv()?;
                sugar = sugar.max(gs + m.weighted_degree(space.ring.weights()));
                p = space.sub_mul(&p[pos..], &c, &m, g);
                pos = 0;
            }
            None => {
                rem.push(lt.clone());
                pos += 1;
            }
        }
    }
    Ok((rem, sugar))
}

/// Computes the reduced Gröbner basis of the submodule generated by `input`,
/// sorted by increasing leading term.
pub fn buchberger(space: &Space, input: Vec<MVec>) -> Result<Vec<MVec>> {
    buchberger_truncated(space, input, usize::MAX)
}

/// Like [`buchberger`], but discards every element whose leading component
/// is `>= discard_from`. With tag components placed after the payload this
/// yields a Gröbner basis of the payload part together with cofactors,
/// without computing the syzygy part.
pub fn buchberger_truncated(space: &Space, input: Vec<MVec>, discard_from: usize) -> Result<Vec<MVec>> {
    if !space.ring.domain().is_field() {
        return Err(Error::IntegerGroebner);
    }
    let lim = limits::limits();
    let ideal = space.rank() == 1;
    let mut elems: Vec<Elem> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut queue: Vec<(MVec, u64)> = input
        .into_iter()
        .map(|v| space.canonicalize(v))
        .filter(|v| !v.is_empty())
        .map(|v| {
            let s = space.degree(&v);
            (v, s)
        })
        .collect();
    // Insert inputs smallest first so that early reductions are cheap.
    queue.sort_by(|(a, sa), (b, sb)| sa.cmp(sb).then_with(|| space.cmp(&a[0], &b[0])));

    let weights = space.ring.weights().to_vec();
    let insert = |v: MVec,
                  sugar: u64,
                  elems: &mut Vec<Elem>,
                  active: &mut Vec<usize>,
                  pairs: &mut Vec<Pair>|
     -> Result<bool> {
        let v = space.monic(v)?;
        let unit = ideal && v[0].mono.is_one();
        let k = elems.len();
        elems.push(Elem { mask: v[0].mono.support_mask(), v, sugar });
        if unit {
            return Ok(true);
        }
        gm_update(ideal, &weights, elems, active, pairs, k);
        Ok(false)
    };

    for (v, s) in queue {
        let (r, s) = {
            let es = &elems;
            let act = &active;
            reduce_with(space, v, s, |t| find_in(es, act, t), &lim)?
        };
        if r.is_empty() || r[0].comp >= discard_from {
            continue;
        }
        if insert(r, s, &mut elems, &mut active, &mut pairs)? {
            return Ok(vec![vec![MTerm { coeff: space.ring.domain().one(), mono: Monomial::one(space.ring.nvars()), comp: 0 }]]);
        }
    }

    while !pairs.is_empty() {
        limits::check_time(&lim)?;
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| space.cmp_terms(&p.lcm, p.comp, &q.lcm, q.comp))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        limits::check_degree(&lim, pair.sugar)?;
        let s = spoly(space, &elems[pair.i], &elems[pair.j], &pair.lcm);
        let (r, sugar) = {
            let es = &elems;
            let act = &active;
            reduce_with(space, s, pair.sugar, |t| find_in(es, act, t), &lim)?
        };
        if r.is_empty() || r[0].comp >= discard_from {
            continue;
        }
        if insert(r, sugar, &mut elems, &mut active, &mut pairs)? {
            return Ok(vec![vec![MTerm { coeff: space.ring.domain().one(), mono: Monomial::one(space.ring.nvars()), comp: 0 }]]);
        }
    }

    // Active elements already have pairwise non-dividing leading terms;
    // reduce tails against each other.
    let mut basis: Vec<MVec> = active.iter().map(|&k| elems[k].v.clone()).collect();
    basis.sort_by(|a, b| space.cmp(&a[0], &b[0]));
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<(&[MTerm], u64)> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, g)| (g.as_slice(), g[0].mono.support_mask()))
            .collect();
        let head = basis[k][0].clone();
        let tail = basis[k][1..].to_vec();
        let find = |t: &MTerm| {
            let mask = t.mono.support_mask();
            others
                .iter()
                .find(|(g, gm)| gm & !mask == 0 && g[0].comp == t.comp && g[0].mono.divides(&t.mono))
                .map(|(g, _)| (*g, 0))
        };
        let (tail, _) = reduce_with(space, tail, 0, find, &lim)?;
        let mut v = vec![head];
        v.extend(tail);
        out.push(v);
    }
    Ok(out)
}

fn find_in<'b>(elems: &'b [Elem], active: &[usize], t: &MTerm) -> Option<(&'b [MTerm], u64)> {
    let mask = t.mono.support_mask();
    active.iter().map(|&k| &elems[k]).find_map(|e| {
        let l = e.lead();
        (e.mask & !mask == 0 && l.comp == t.comp && l.mono.divides(&t.mono)).then_some((e.v.as_slice(), e.sugar))
    })
}

fn spoly(space: &Space, a: &Elem, b: &Elem, lcm: &Monomial) -> MVec {
    let ma = a.lead().mono.quotient_of(lcm).expect("lcm");
    let mb = b.lead().mono.quotient_of(lcm).expect("lcm");
    // both inputs are monic
    let one = space.ring.domain().one();
    let sa = space.scale(&a.v, &one, &ma);
    space.sub_mul(&sa, &one, &mb, &b.v)
}

/// Gebauer–Möller installation of element `k`.
fn gm_update(
    ideal: bool,
    weights: &[u32],
    elems: &[Elem],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    k: usize,
) {
    let h = elems[k].lead();
    let sugar_of = |i: usize, lcm: &Monomial| -> u64 {
        let e = &elems[i];
        let m = e.lead().mono.quotient_of(lcm).expect("lcm");
        e.sugar + m.weighted_degree(weights)
    };

    // candidate new pairs (g, h)
    let mut cands: Vec<(usize, Monomial, bool)> = active
        .iter()
        .filter(|&&g| elems[g].lead().comp == h.comp)
        .map(|&g| {
            let gl = &elems[g].lead().mono;
            (g, gl.lcm(&h.mono), ideal && gl.is_coprime(&h.mono))
        })
        .collect();

    // chain criterion among new pairs: drop (g,h) if another new pair's lcm
    // properly divides its lcm; among equal lcms keep one, preferring a
    // coprime representative (whose presence kills the whole class).
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (la, lb) = (&cands[a].1, &cands[b].1);
            if lb.divides(la) && lb != la {
                keep[a] = false;
                break;
            }
        }
    }
    let mut survivors: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, c) in cands.drain(..).enumerate() {
        if !keep[idx] {
            continue;
        }
        if let Some(s) = survivors.iter_mut().find(|s| s.1 == c.1) {
            s.2 |= c.2;
            continue;
        }
        survivors.push(c);
    }

    // criterion B on old pairs
    pairs.retain(|p| {
        if p.comp != h.comp || !h.mono.divides(&p.lcm) {
            return true;
        }
        let li = elems[p.i].lead().mono.lcm(&h.mono);
        let lj = elems[p.j].lead().mono.lcm(&h.mono);
        li == p.lcm || lj == p.lcm
    });

    for (g, lcm, coprime) in survivors {
        if coprime {
            continue;
        }
        let sugar = sugar_of(g, &lcm).max(sugar_of(k, &lcm));
        pairs.push(Pair { i: g, j: k, lcm, comp: h.comp, sugar });
    }

    active.retain(|&g| {
        let gl = elems[g].lead();
        !(gl.comp == h.comp && h.mono.divides(&gl.mono))
    });
    active.push(k);
}
