//! Dimension, standard monomials and socles of quotients `T/I`.

use std::collections::{HashMap, VecDeque};

use crate::algebra::linalg;
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::idealcalc::IdealHandle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleData {
    pub zero_dimensional: bool,
    /// Normal-form representatives of a basis of `(I : m)/I`.
    pub basis: Vec<Polynomial>,
    pub gorenstein: bool,
    /// The socle generator when the socle is one-dimensional.
    pub generator: Option<Polynomial>,
}

fn support(m: &Monomial) -> u64 {
    m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Krull dimension of `T/I` from the leading monomials of a Gröbner basis:
/// the largest set of variables containing the support of no leading
/// monomial. `None` for the unit ideal.
pub fn krull_dim(i: &IdealHandle) -> Result<Option<usize>> {
    let gb = i.gb()?;
    if gb.is_unit() {
        return Ok(None);
    }
    let n = i.ring().nvars();
    if n > 20 {
        return Err(Error::precondition("dimension computation limited to 20 variables"));
    }
    let supports: Vec<u64> = gb.leading_monomials().iter().map(support).collect();
    let mut best = 0;
    for s in 0u64..(1 << n) {
        let size = s.count_ones() as usize;
        if size > best && supports.iter().all(|&l| l & !s != 0) {
            best = size;
        }
    }
    Ok(Some(best))
}

/// Monomials outside the leading ideal, in breadth-first order, or `None`
/// if there are infinitely many.
pub fn standard_monomials(i: &IdealHandle) -> Result<Option<Vec<Monomial>>> {
    let gb = i.gb()?;
    let lts = gb.leading_monomials();
    let n = i.ring().nvars();
    let mut pure = vec![false; n];
    for m in &lts {
        if let Some(v) = m.pure_power_var() {
            pure[v] = true;
        }
    }
    if gb.is_unit() {
        return Ok(Some(Vec::new()));
    }
    if !pure.iter().all(|&p| p) {
        return Ok(None);
    }
    let mut seen: HashMap<Monomial, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([Monomial::one(n)]);
    seen.insert(Monomial::one(n), ());
    while let Some(m) = queue.pop_front() {
        out.push(m.clone());
        for v in 0..n {
            let next = m.mul(&Monomial::var(n, v));
            if seen.contains_key(&next) || lts.iter().any(|l| l.divides(&next)) {
                continue;
            }
            seen.insert(next.clone(), ());
            queue.push_back(next);
        }
    }
    Ok(Some(out))
}

/// Socle of `T/I` for zero-dimensional `I`, by linear algebra on normal forms.
pub fn socle_data(i: &IdealHandle) -> Result<SocleData> {
    if i.is_unit()? {
        return Err(Error::precondition("socle of the zero ring (I is the unit ideal)"));
    }
    let Some(mut basis) = standard_monomials(i)? else {
        return Ok(SocleData { zero_dimensional: false, basis: Vec::new(), gorenstein: false, generator: None });
    };
    let ring = i.ring().clone();
    let domain = ring.domain();
    // largest monomials first, so kernel vectors lead with high-degree terms
    basis.sort_by(|a, b| ring.cmp_monomials(b, a));
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let b = basis.len();
    let n = ring.nvars();
    let mut rows = vec![vec![domain.zero(); b]; n * b];
    for (col, m) in basis.iter().enumerate() {
        for v in 0..n {
            let p = Polynomial::monomial(&ring, domain.one(), m.mul(&Monomial::var(n, v)));
            let nf = i.normal_form(&p)?;
            for t in nf.terms() {
                let k = *index.get(&t.mono).ok_or_else(|| Error::invariant("normal form left the standard monomials"))?;
                rows[v * b + k][col] = t.coeff.clone();
            }
        }
    }
    let kernel = linalg::kernel(&rows, b, domain)?;
    let mut socle = Vec::with_capacity(kernel.len());
    for v in kernel {
        let terms = v.into_iter().zip(&basis).filter(|(c, _)| !c.is_zero()).map(|(c, m)| (c, m.clone())).collect();
        socle.push(Polynomial::from_terms(&ring, terms)?.monic()?);
    }
    socle.sort_by(|a, b| ring.cmp_monomials(b.leading_monomial().expect("nonzero"), a.leading_monomial().expect("nonzero")));
    let gorenstein = socle.len() == 1;
    Ok(SocleData { zero_dimensional: true, generator: gorenstein.then(|| socle[0].clone()), basis: socle, gorenstein })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{PolyRing, RingContext};
    use crate::algebra::scalar::Domain;

    fn ctx(vars: &[&str]) -> RingContext {
        RingContext::polynomial(&PolyRing::new(Domain::Rationals, vars).unwrap())
    }

    #[test]
    fn socles() {
        let c = ctx(&["x", "y"]);
        let s = socle_data(&IdealHandle::parse(&c, &["x^2", "y^2"]).unwrap()).unwrap();
        assert!(s.gorenstein);
        assert_eq!(s.generator.unwrap(), c.ring().parse("x*y").unwrap());
        let s = socle_data(&IdealHandle::parse(&c, &["x^2", "x*y", "y^2"]).unwrap()).unwrap();
        assert!(!s.gorenstein);
        assert_eq!(s.basis.len(), 2);
        let s = socle_data(&IdealHandle::parse(&c, &["x", "y"]).unwrap()).unwrap();
        assert_eq!(s.generator.unwrap(), c.ring().one());
        let s = socle_data(&IdealHandle::parse(&c, &["x^2"]).unwrap()).unwrap();
        assert!(!s.zero_dimensional);
    }

    #[test]
    fn dimensions() {
        let c = ctx(&["x", "y", "z"]);
        assert_eq!(krull_dim(&IdealHandle::parse(&c, &["x", "y"]).unwrap()).unwrap(), Some(1));
        assert_eq!(krull_dim(&IdealHandle::parse(&c, &["x*y"]).unwrap()).unwrap(), Some(2));
        assert_eq!(krull_dim(&IdealHandle::parse(&c, &["1"]).unwrap()).unwrap(), None);
        assert_eq!(krull_dim(&IdealHandle::parse(&c, &[]).unwrap()).unwrap(), Some(3));
    }
}
