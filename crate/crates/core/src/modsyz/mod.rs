//! Submodules of free modules over `T = k[x]/Q`: syzygies, submodule
//! membership, minimal presentations, truncated minimal free resolutions,
//! Betti tables and projective dimension.

mod betti;

pub use betti::BettiTable;

use std::fmt;

use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{PolyRing, RingContext};
use crate::error::{Error, Result};
use crate::groebner::engine::{self, MTerm, MVec, Reducer, Space};
use crate::idealcalc::IdealHandle;

/// A homogeneous map of graded free modules, stored by rows: row `i` is the
/// image of the `i`-th source generator, a vector over the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    pub rows: Vec<Vec<Polynomial>>,
    /// Degrees of the source generators (one per row).
    pub row_degrees: Vec<u64>,
    /// Degrees of the target generators (one per column).
    pub col_degrees: Vec<u64>,
}

impl GradedMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column `j` as a list of entries, one per row.
    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Degrees of the nonzero entries.
    pub fn entry_degrees(&self) -> Vec<u64> {
        self.rows.iter().flatten().filter(|p| !p.is_zero()).map(|p| p.degree()).collect()
    }

    /// Whether some nonzero entry is a constant.
    pub fn has_unit_entry(&self) -> bool {
        self.rows.iter().flatten().any(|p| p.is_unit_constant())
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

fn require_graded(ctx: &RingContext) -> Result<()> {
    ctx.check_graded()
}

/// Degree of a homogeneous vector under the target shifts, or an error if
/// the vector is not homogeneous. Zero vectors have degree 0.
pub fn vector_degree(v: &[Polynomial], shifts: &[u64]) -> Result<u64> {
    let mut deg = None;
    for (p, &s) in v.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        let (d, homog) = p.degree_check()?;
        if !homog || deg.is_some_and(|e| e != d + s) {
            return Err(Error::NonHomogeneous(format!("[{}]", v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))));
        }
        deg = Some(d + s);
    }
    Ok(deg.unwrap_or(0))
}

fn unit(ring: &PolyRing, comp: usize) -> MTerm {
    MTerm { coeff: ring.domain().one(), mono: Monomial::one(ring.nvars()), comp }
}

fn placed(space: &Space, p: &Polynomial, comp: usize) -> MVec {
    space.from_poly(p, comp)
}

/// Generators of `(coeff)·T^m + Q·T^m` as module elements.
fn ideal_multiples(space: &Space, coeff: &[Polynomial], m: usize) -> Vec<MVec> {
    let mut out = Vec::new();
    for c in 0..m {
        for g in coeff {
            if !g.is_zero() {
                out.push(placed(space, g, c));
            }
        }
    }
    out
}

fn reorder_all(v: &[Polynomial], ring: &PolyRing) -> Result<Vec<Polynomial>> {
    v.iter().map(|p| p.reorder(ring)).collect()
}

/// Generators of the syzygy module of `gens ⊆ T^m` (target degrees
/// `shifts`): all `a ∈ T^k` with `Σ a_i·gens_i = 0` in `T^m`. Every row is
/// replayed. When `minimize` is set the rows are a minimal generating set.
pub fn syzygies(ctx: &RingContext, gens: &[Vec<Polynomial>], shifts: &[u64], minimize: bool) -> Result<GradedMatrix> {
    require_graded(ctx)?;
    let ring = ctx.ring().clone();
    let m = shifts.len();
    let k = gens.len();
    let mut degs = Vec::with_capacity(k);
    for g in gens {
        if g.len() != m {
            return Err(Error::precondition("vector length differs from the target rank"));
        }
        degs.push(vector_degree(g, shifts)?);
    }
    let mut all_shifts = shifts.to_vec();
    all_shifts.extend(&degs);
    let space = Space::new(&ring, all_shifts);
    let rels = reorder_all(ctx.relations(), &ring)?;
    let mut input = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut v: MVec = Vec::new();
        for (c, p) in g.iter().enumerate() {
            v.extend(placed(&space, &p.reorder(&ring)?, c));
        }
        v.push(unit(&ring, m + i));
        input.push(space.canonicalize(v));
    }
    input.extend(ideal_multiples(&space, &rels, m));
    for i in 0..k {
        for q in &rels {
            input.push(placed(&space, q, m + i));
        }
    }
    let basis = engine::buchberger(&space, input)?;
    let q_ideal = IdealHandle::new(ctx, Vec::new())?;
    let mut rows = Vec::new();
    for v in basis.iter().filter(|v| v[0].comp >= m) {
        let coords = space.to_polys(v);
        let row: Vec<Polynomial> = coords[m..].to_vec();
        if q_ideal.contains_all(&row)? {
            continue;
        }
        rows.push(row);
    }
    let mut out = GradedMatrix { row_degrees: Vec::new(), col_degrees: degs.clone(), rows: Vec::new() };
    let rows = if minimize { minimal_generators(ctx, &rows, &degs)? } else { rows };
    for r in rows {
        out.row_degrees.push(vector_degree(&r, &degs)?);
        out.rows.push(r);
    }
    check_composition(ctx, gens, &out)?;
    Ok(out)
}

/// Syzygies of an ideal's generator list.
pub fn syzygy_matrix(ctx: &RingContext, gens: &[Polynomial]) -> Result<GradedMatrix> {
    let vecs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    syzygies(ctx, &vecs, &[0], false)
}

/// Checks `Σ_j row_j · gens_j ≡ 0` modulo the relations for every row.
fn check_composition(ctx: &RingContext, gens: &[Vec<Polynomial>], m: &GradedMatrix) -> Result<()> {
    let q = IdealHandle::new(ctx, Vec::new())?;
    let ring = ctx.ring();
    let width = gens.first().map_or(0, |g| g.len());
    for row in &m.rows {
        for c in 0..width {
            let mut acc = ring.zero();
            for (a, g) in row.iter().zip(gens) {
                acc = acc.try_add(&a.reorder(ring)?.try_mul(&g[c].reorder(ring)?)?)?;
            }
            if !q.contains(&acc)? {
                return Err(Error::invariant("syzygy row does not annihilate the generators"));
            }
        }
    }
    Ok(())
}

/// Whether `v` lies in `span(gens) + coeff·T^m` (relations included), with
/// cofactors `x_i` such that `v − Σ x_i·gens_i ∈ coeff·T^m + Q·T^m`.
pub fn module_member(
    ctx: &RingContext,
    v: &[Polynomial],
    gens: &[Vec<Polynomial>],
    coeff: &[Polynomial],
) -> Result<Option<Vec<Polynomial>>> {
    let ring = ctx.ring().clone();
    let m = v.len();
    let mut shifts = vec![0u64; m];
    shifts.extend(std::iter::repeat_n(0, gens.len()));
    let space = Space::new(&ring, shifts);
    let mut input = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.len() != m {
            return Err(Error::precondition("vector length differs from the target rank"));
        }
        let mut e: MVec = Vec::new();
        for (c, p) in g.iter().enumerate() {
            e.extend(placed(&space, &p.reorder(&ring)?, c));
        }
        e.push(unit(&ring, m + i));
        input.push(space.canonicalize(e));
    }
    let mut coeff_all = reorder_all(coeff, &ring)?;
    coeff_all.extend(reorder_all(ctx.relations(), &ring)?);
    input.extend(ideal_multiples(&space, &coeff_all, m));
    let basis = engine::buchberger_truncated(&space, input, m)?;
    let mut target: MVec = Vec::new();
    for (c, p) in v.iter().enumerate() {
        target.extend(placed(&space, &p.reorder(&ring)?, c));
    }
    let r = Reducer::new(&space, &basis).reduce(space.canonicalize(target))?;
    if r.iter().any(|t| t.comp < m) {
        return Ok(None);
    }
    let coords = space.to_polys(&r);
    let xs: Vec<Polynomial> = coords[m..].iter().map(|c| -c).collect();
    // replay: v − Σ x_i gens_i must have every coordinate in coeff + Q
    let coeff_ideal = IdealHandle::new(ctx, coeff.to_vec())?;
    for c in 0..m {
        let mut acc = v[c].reorder(&ring)?;
        for (x, g) in xs.iter().zip(gens) {
            acc = acc.try_sub(&x.try_mul(&g[c].reorder(&ring)?)?)?;
        }
        if !coeff_ideal.contains(&acc)? {
            return Err(Error::invariant("module membership cofactors do not replay"));
        }
    }
    Ok(Some(xs))
}

/// A minimal generating set of the submodule of `T^m` spanned by `vectors`,
/// chosen greedily in order of increasing degree (graded Nakayama).
pub fn minimal_generators(ctx: &RingContext, vectors: &[Vec<Polynomial>], shifts: &[u64]) -> Result<Vec<Vec<Polynomial>>> {
    require_graded(ctx)?;
    let ring = ctx.ring().clone();
    let m = shifts.len();
    let mut cands: Vec<(u64, usize)> = Vec::with_capacity(vectors.len());
    for (i, v) in vectors.iter().enumerate() {
        cands.push((vector_degree(v, shifts)?, i));
    }
    cands.sort();
    let space = Space::new(&ring, shifts.to_vec());
    let rels = reorder_all(ctx.relations(), &ring)?;
    let base = ideal_multiples(&space, &rels, m);
    let to_mvec = |v: &[Polynomial]| -> Result<MVec> {
        let mut e = Vec::new();
        for (c, p) in v.iter().enumerate() {
            e.extend(placed(&space, &p.reorder(&ring)?, c));
        }
        Ok(space.canonicalize(e))
    };
    let mut kept: Vec<Vec<Polynomial>> = Vec::new();
    let mut kept_m: Vec<MVec> = Vec::new();
    let mut basis = engine::buchberger(&space, base.clone())?;
    for (_, i) in cands {
        let v = to_mvec(&vectors[i])?;
        if Reducer::new(&space, &basis).reduce(v.clone())?.is_empty() {
            continue;
        }
        kept.push(vectors[i].clone());
        kept_m.push(v);
        let mut input = base.clone();
        input.extend(kept_m.iter().cloned());
        basis = engine::buchberger(&space, input)?;
    }
    Ok(kept)
}

/// Minimal generators of an ideal together with their syzygy matrix.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<Polynomial>,
    pub matrix: GradedMatrix,
}

/// Minimal presentation `T^m → T^n → I → 0` of a homogeneous ideal.
pub fn minimal_presentation(i: &IdealHandle) -> Result<Presentation> {
    let ctx = i.ctx();
    let nz = i.nonzero_gens()?;
    let vecs: Vec<Vec<Polynomial>> = nz.iter().map(|g| vec![g.clone()]).collect();
    let gens: Vec<Polynomial> = minimal_generators(ctx, &vecs, &[0])?.into_iter().map(|mut v| v.remove(0)).collect();
    let vecs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let matrix = syzygies(ctx, &vecs, &[0], true)?;
    if matrix.has_unit_entry() {
        return Err(Error::invariant("minimal presentation has a unit entry"));
    }
    Ok(Presentation { generators: gens, matrix })
}

/// A truncated minimal graded free resolution of `T/I`.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `d_1, …, d_L`; `d_1` has one column (the generators of `I`).
    pub differentials: Vec<GradedMatrix>,
    pub betti: BettiTable,
    /// Whether the resolution ended (a zero syzygy module was reached).
    pub complete: bool,
    /// One line per composition check `d_i ∘ d_{i+1} ≡ 0`.
    pub transcript: Vec<String>,
}

impl Resolution {
    pub fn projective_dimension(&self) -> Option<usize> {
        self.complete.then(|| self.betti.length())
    }
}

/// Resolves `T/I` up to homological degree `length`.
pub fn resolve(i: &IdealHandle, length: usize) -> Result<Resolution> {
    if length < 1 {
        return Err(Error::precondition("resolution length must be at least 1"));
    }
    let ctx = i.ctx();
    require_graded(ctx)?;
    if !i.is_homogeneous() {
        return Err(Error::NonHomogeneous(i.to_string()));
    }
    let mut betti = BettiTable::default();
    if i.is_unit()? {
        return Ok(Resolution { differentials: Vec::new(), betti, complete: true, transcript: Vec::new() });
    }
    betti.push(vec![0]);
    let pres_gens = {
        let nz = i.nonzero_gens()?;
        let vecs: Vec<Vec<Polynomial>> = nz.iter().map(|g| vec![g.clone()]).collect();
        minimal_generators(ctx, &vecs, &[0])?
    };
    if pres_gens.is_empty() {
        return Ok(Resolution { differentials: Vec::new(), betti, complete: true, transcript: Vec::new() });
    }
    let mut degs = Vec::new();
    for g in &pres_gens {
        degs.push(vector_degree(g, &[0])?);
    }
    let mut diffs = vec![GradedMatrix { rows: pres_gens.clone(), row_degrees: degs.clone(), col_degrees: vec![0] }];
    betti.push(degs);
    let mut transcript = Vec::new();
    let mut complete = false;
    while diffs.len() < length {
        let prev = diffs.last().expect("nonempty");
        let next = syzygies(ctx, &prev.rows, &prev.col_degrees, true)?;
        if next.has_unit_entry() {
            return Err(Error::invariant("non-minimal differential"));
        }
        transcript.push(format!("d_{} ∘ d_{} ≡ 0: ok ({} rows)", diffs.len(), diffs.len() + 1, next.nrows()));
        if next.is_empty() {
            complete = true;
            break;
        }
        betti.push(next.row_degrees.clone());
        diffs.push(next);
    }
    if !complete && diffs.len() == length {
        // peek one step further to learn whether the resolution stops here
        let prev = diffs.last().expect("nonempty");
        let next = syzygies(ctx, &prev.rows, &prev.col_degrees, false)?;
        complete = next.is_empty();
    }
    Ok(Resolution { differentials: diffs, betti, complete, transcript })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjDim {
    Finite(usize),
    Infinite,
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Finite(n) => write!(f, "Finite({n})"),
            ProjDim::Infinite => write!(f, "Infinite"),
        }
    }
}

/// Projective dimension of `T/I` over a polynomial ring or a hypersurface.
/// A resolution still running at step `dim + 1` has infinite length, since
/// finite projective dimension is bounded by the depth of the ring.
pub fn pd_decide(i: &IdealHandle) -> Result<ProjDim> {
    if i.ctx().relations().len() > 1 {
        return Err(Error::precondition("projective dimension is decided only over polynomial rings and hypersurfaces"));
    }
    let bound = i.ctx().ambient_dim() + 1;
    let res = resolve(i, bound)?;
    Ok(match res.projective_dimension() {
        Some(n) if n <= bound => ProjDim::Finite(n),
        _ => ProjDim::Infinite,
    })
}
