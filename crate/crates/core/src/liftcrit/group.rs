use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::poly::Polynomial;
use crate::algebra::ring::{PolyRing, RingContext};
use crate::algebra::scalar::{is_prime, Domain};
use crate::error::{Error, Result};
use crate::idealcalc::IdealHandle;
use crate::liftcrit::{Certificate, LiftDecision, Verdict};

/// Largest prime accepted; `F_p[Y]/(Y^p)` has dimension `p`.
const MAX_PRIME: u64 = 1009;

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, j| acc * (n - j) / (j + 1))
}

/// `C(p, j)/p mod p` for `j = 1, …, p−1`: the coefficients of
/// `((X^p − 1) − (X − 1)^p)/p` in `Y = X − 1`, reduced mod `p`.
pub fn group_ring_coefficients(p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) || p > MAX_PRIME {
        return Err(Error::InvalidModulus(p));
    }
    let bp = BigUint::from(p);
    (1..p)
        .map(|j| {
            let (q, r) = binomial(p, j).div_rem(&bp);
            debug_assert!(r.is_zero());
            (q % &bp).to_u64().ok_or_else(|| Error::invariant("residue exceeds u64"))
        })
        .collect()
}

/// The group ring of the cyclic group of order `p` over a complete DVR with
/// residue field `F_p`, and its module `T/((X−1)^i, p)`: weakly liftable iff
/// `i ∈ {1, p}` or `ḡ ∈ (Y^{p−i}, Y^i)` in `F_p[Y]/(Y^p)`.
pub fn group_ring_weaklift(p: u64, i: u64) -> Result<LiftDecision> {
    let coeffs = group_ring_coefficients(p)?;
    if p == 2 {
        return Err(Error::precondition("the group ring criterion needs an odd prime"));
    }
    if !(1..=p).contains(&i) {
        return Err(Error::precondition(format!("i = {i} outside 1..={p}")));
    }
    let mut d = LiftDecision::new();
    let ring = PolyRing::new(Domain::prime_field(p)?, &["Y"])?;
    let y = ring.var(0);
    let ctx = RingContext::quotient(&ring, vec![y.pow(p as u32)?])?;
    let target = IdealHandle::new(&ctx, vec![y.pow((p - i) as u32)?, y.pow(i as u32)?])?;
    if i == 1 || i == p {
        d.check("i ∈ {1, p}", true, format!("i = {i}"));
        return Ok(d.finish(Verdict::WeaklyLiftable, Certificate::GroupRing { coefficients: coeffs, target: Vec::new() }));
    }
    let mut g = Polynomial::zero(&ring);
    for (j, &c) in coeffs.iter().enumerate() {
        g = g.try_add(&y.pow(j as u32 + 1)?.scalar_mul(&ring.domain().from_i64(c as i64))?)?;
    }
    let member = target.contains(&g)?;
    d.check("ḡ ∈ (Y^(p−i), Y^i)", member, format!("ḡ = {g}"));
    let verdict = if member { Verdict::WeaklyLiftable } else { Verdict::NotWeaklyLiftable };
    Ok(d.finish(verdict, Certificate::GroupRing { coefficients: coeffs, target: target.gens().to_vec() }))
}
