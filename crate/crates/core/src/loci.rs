//! Loci of `f = Σ a_i f_i ∈ I` over which `T/I` fails a property as a
//! module over `T/(f)`, enumerated over a prime field, and the closed-form
//! not-weakly-liftable locus from the socle criteria.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::linalg;
use crate::algebra::poly::Polynomial;
use crate::algebra::scalar::{is_prime, Domain};
use crate::error::{Error, Result};
use crate::idealcalc::{self, socle_data, IdealHandle};
use crate::liftcrit::{self, Verdict};
use crate::modsyz::{self, ProjDim};

pub const MAX_FIELD: u64 = 7;
pub const MAX_FRAME: usize = 8;
pub const MAX_POINTS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    /// Not weakly liftable, decided by the presentation criterion.
    NotWeaklyLiftable,
    /// Infinite projective dimension over `T/(f)`.
    InfiniteProjDim,
    /// Some necessary condition of the obstruction suite fails.
    ObstructionFails,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::NotWeaklyLiftable => "nwl",
            Property::InfiniteProjDim => "npd",
            Property::ObstructionFails => "obstruction-fail",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    InLocus,
    NotInLocus,
    /// `f` is zero or a zerodivisor on `T`; outside the definition.
    ZeroDivisorSkipped,
}

#[derive(Clone, Debug)]
pub struct LocusResult {
    pub q: u64,
    pub frame: Vec<Polynomial>,
    pub property: Property,
    /// Every point of `F_q^n` in lexicographic order with its class.
    pub points: Vec<(Vec<u64>, PointClass)>,
    pub additive: bool,
    pub scalar: bool,
}

impl LocusResult {
    pub fn in_locus(&self) -> Vec<&[u64]> {
        self.points.iter().filter(|(_, c)| *c == PointClass::InLocus).map(|(a, _)| a.as_slice()).collect()
    }

    pub fn count(&self, class: PointClass) -> usize {
        self.points.iter().filter(|(_, c)| *c == class).count()
    }
}

fn point(index: u64, q: u64, n: usize) -> Vec<u64> {
    let mut a = vec![0; n];
    let mut rest = index;
    for k in (0..n).rev() {
        a[k] = rest % q;
        rest /= q;
    }
    a
}

fn combination(frame: &[Polynomial], a: &[u64], domain: Domain) -> Result<Polynomial> {
    let ring = frame[0].ring();
    let mut f = ring.zero();
    for (g, &c) in frame.iter().zip(a) {
        if c != 0 {
            f = f.try_add(&g.scalar_mul(&domain.from_i64(c as i64))?)?;
        }
    }
    Ok(f)
}

fn classify(i: &IdealHandle, f: &Polynomial, property: Property, samples: &[IdealHandle]) -> Result<PointClass> {
    let zero = i.with_gens(Vec::new())?;
    if zero.contains(f)? || (!i.ctx().is_polynomial_ring() && !idealcalc::is_nonzerodivisor(f, &zero)?) {
        return Ok(PointClass::ZeroDivisorSkipped);
    }
    let inside = match property {
        Property::NotWeaklyLiftable => liftcrit::weaklift_cyclic(i, f)?.verdict == Verdict::NotWeaklyLiftable,
        Property::InfiniteProjDim => {
            let r = i.ctx().hypersurface(f)?;
            modsyz::pd_decide(&IdealHandle::new(&r, i.gens().to_vec())?)? == ProjDim::Infinite
        }
        Property::ObstructionFails => liftcrit::obstruction_suite(i, f, samples)?.verdict == Verdict::ObstructionFound,
    };
    Ok(if inside { PointClass::InLocus } else { PointClass::NotInLocus })
}

/// Classifies every `a ∈ F_q^n` by whether `T/I` has `property` over
/// `T/(Σ a_i f_i)`. The zero point is in every locus by convention.
pub fn enumerate_locus(
    i: &IdealHandle,
    frame: &[Polynomial],
    q: u64,
    property: Property,
    samples: &[IdealHandle],
) -> Result<LocusResult> {
    let domain = i.ring().domain();
    if !is_prime(q) || q > MAX_FIELD {
        return Err(Error::precondition(format!("field size {q} must be a prime at most {MAX_FIELD}")));
    }
    if domain != Domain::prime_field(q)? {
        return Err(Error::DomainMismatch(domain.to_string(), format!("GF({q})")));
    }
    let n = frame.len();
    if n == 0 || n > MAX_FRAME {
        return Err(Error::precondition(format!("frame must have 1 to {MAX_FRAME} generators")));
    }
    let total = q.checked_pow(n as u32).filter(|&t| t <= MAX_POINTS).ok_or_else(|| Error::precondition("too many points"))?;
    let frame: Vec<Polynomial> = frame.iter().map(|g| g.reorder(i.ring())).collect::<Result<_>>()?;
    if frame.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous("locus frame".into()));
    }
    if frame.iter().any(|g| g.degree() != frame[0].degree()) {
        return Err(Error::precondition("frame elements must share one degree so every combination is homogeneous"));
    }
    if !i.with_gens(frame.clone())?.same_ideal(i)? {
        return Err(Error::precondition("frame does not generate I"));
    }
    let points: Vec<(Vec<u64>, PointClass)> = (0..total)
        .into_par_iter()
        .map(|k| {
            let a = point(k, q, n);
            if k == 0 {
                return Ok((a, PointClass::InLocus));
            }
            let f = combination(&frame, &a, domain)?;
            let class = classify(i, &f, property, samples)?;
            Ok((a, class))
        })
        .collect::<Result<_>>()?;
    let mut out = LocusResult { q, frame, property, points, additive: false, scalar: false };
    let (additive, scalar) = subspace_check(&out)?;
    out.additive = additive;
    out.scalar = scalar;
    Ok(out)
}

/// Closure of the in-locus set under addition and under scalars. Over a
/// prime field a nonempty set is additively closed iff it contains zero and
/// has `q^rank` elements.
pub fn subspace_check(result: &LocusResult) -> Result<(bool, bool)> {
    let q = result.q;
    let pts = result.in_locus();
    let set: HashSet<&[u64]> = pts.iter().copied().collect();
    let scalar = pts.iter().all(|a| (2..q).all(|c| set.contains(a.iter().map(|x| x * c % q).collect::<Vec<_>>().as_slice())));
    if pts.is_empty() {
        return Ok((true, scalar));
    }
    let n = result.frame.len();
    if !set.contains(vec![0; n].as_slice()) {
        return Ok((false, scalar));
    }
    let domain = Domain::prime_field(q)?;
    let rows: Vec<Vec<_>> = pts.iter().map(|a| a.iter().map(|&x| domain.from_i64(x as i64)).collect()).collect();
    let rank = linalg::rank(&rows, n)?;
    Ok((q.pow(rank as u32) == set.len() as u64, scalar))
}

/// The not-weakly-liftable locus `I^2 : u` for zero-dimensional Gorenstein
/// `T/I`, or `(IJ + I^(2)) : u` with `u` the socle generator of `T/(I+J)`
/// and `I^(2) = I^2 : w^∞` in the one-dimensional case. The locus within
/// `I` is the intersection with `I`.
pub fn locus_formula_nwl(i: &IdealHandle, canonical: Option<(&IdealHandle, &Polynomial)>) -> Result<IdealHandle> {
    let (target, socle_of) = match canonical {
        None => (idealcalc::power(i, 2)?, i.clone()),
        Some((j, w)) => {
            let sym = idealcalc::symbolic_square(i, w)?;
            (idealcalc::sum(&idealcalc::product(i, j)?, &sym)?, idealcalc::sum(i, j)?)
        }
    };
    let sd = socle_data(&socle_of)?;
    let Some(u) = sd.generator.filter(|_| sd.zero_dimensional) else {
        return Err(Error::precondition("socle quotient is not zero-dimensional Gorenstein"));
    };
    idealcalc::colon_element(&target, &u)
}
