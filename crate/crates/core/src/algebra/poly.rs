//! Canonical sparse multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::monomial::Monomial;
use crate::algebra::ring::PolyRing;
use crate::algebra::scalar::{Domain, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// A polynomial in canonical form: nonzero coefficients, distinct monomials,
/// terms strictly descending in the ring's order. Equality is equality of
/// term sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

fn canonicalize(ring: &PolyRing, mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| ring.cmp_monomials(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => last.coeff = &last.coeff + &t.coeff,
            _ => {
                if let Some(last) = out.last() {
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                out.push(t);
            }
        }
    }
    if matches!(out.last(), Some(t) if t.coeff.is_zero()) {
        out.pop();
    }
    out
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: Scalar) -> Polynomial {
        Polynomial::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_int(ring: &PolyRing, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.domain().from_i64(n))
    }

    pub fn var(ring: &PolyRing, i: usize) -> Polynomial {
        Polynomial::monomial(ring, ring.domain().one(), Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &PolyRing, coeff: Scalar, mono: Monomial) -> Polynomial {
        assert_eq!(mono.nvars(), ring.nvars(), "monomial length matches ring");
        assert_eq!(coeff.domain(), ring.domain(), "coefficient domain matches ring");
        if coeff.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { coeff, mono }] }
    }

    /// Canonicalizes an arbitrary term list.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Scalar, Monomial)>) -> Result<Polynomial> {
        let mut ts = Vec::with_capacity(terms.len());
        for (coeff, mono) in terms {
            if coeff.domain() != ring.domain() {
                return Err(Error::DomainMismatch(coeff.domain().to_string(), ring.domain().to_string()));
            }
            if mono.nvars() != ring.nvars() {
                return Err(Error::precondition("monomial length differs from variable count"));
            }
            ts.push(Term { coeff, mono });
        }
        Ok(Polynomial { ring: ring.clone(), terms: canonicalize(ring, ts) })
    }

    /// Terms already known to be canonical for `ring`.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn domain(&self) -> Domain {
        self.ring.domain()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.ring.domain() != other.ring.domain() {
            return Err(Error::DomainMismatch(self.domain().to_string(), other.domain().to_string()));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |t: &Term| -> Term {
            if negate_other {
                Term { coeff: -&t.coeff, mono: t.mono.clone() }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match self.ring.cmp_monomials(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(take_b(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].coeff - &b[j].coeff } else { &a[i].coeff + &b[j].coeff };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, mono: a[i].mono.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(take_b));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.coeff, &t.mono));
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.coeff, &t.mono));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(Term { coeff: &a.coeff * &b.coeff, mono: a.mono.checked_mul(&b.mono)? });
            }
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: canonicalize(&self.ring, prods) })
    }

    /// `c · m · self`. Term order is preserved because orders are multiplicative.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let coeff = &t.coeff * c;
                (!coeff.is_zero()).then(|| Term { coeff, mono: t.mono.mul(m) })
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scalar_mul(&self, c: &Scalar) -> Result<Polynomial> {
        if c.domain() != self.domain() {
            return Err(Error::DomainMismatch(c.domain().to_string(), self.domain().to_string()));
        }
        Ok(self.mul_term(c, &Monomial::one(self.ring.nvars())))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Power with a signed exponent, rejecting negative values.
    pub fn pow_signed(&self, e: i64) -> Result<Polynomial> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        let e = u32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        self.pow(e)
    }

    /// Scales so the leading coefficient is one (fields only).
    pub fn monic(&self) -> Result<Polynomial> {
        match self.leading_coeff() {
            None => Ok(self.clone()),
            Some(c) if c.is_one() => Ok(self.clone()),
            Some(c) => self.scalar_mul(&c.inv()?),
        }
    }

    /// Weighted total degree and homogeneity flag. The zero polynomial has no degree.
    pub fn degree_check(&self) -> Result<(u64, bool)> {
        let w = self.ring.weights();
        let mut degs = self.terms.iter().map(|t| t.mono.weighted_degree(w));
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        let (mut max, mut homog) = (first, true);
        for d in degs {
            homog &= d == first;
            max = max.max(d);
        }
        Ok((max, homog))
    }

    /// Weighted degree of the (homogeneous) polynomial; zero has degree 0 here.
    pub fn degree(&self) -> u64 {
        self.degree_check().map(|(d, _)| d).unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_check().map(|(_, h)| h).unwrap_or(true)
    }

    /// Coefficient-wise reduction from `ZZ` or `QQ` into `GF(p)`.
    pub fn reduce_mod_prime(&self, p: u32) -> Result<Polynomial> {
        let target = self.ring.with_domain(Domain::prime_field(p as u64)?);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((t.coeff.reduce_mod(p)?, t.mono.clone()));
        }
        Polynomial::from_terms(&target, terms)
    }

    /// Reinterprets an integer polynomial over the rationals.
    pub fn to_rationals(&self) -> Result<Polynomial> {
        let target = self.ring.with_domain(Domain::Rationals);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Scalar::Int(n) => Domain::Rationals.from_bigint(n),
                Scalar::Rat(_) => t.coeff.clone(),
                Scalar::Mod(_) => {
                    return Err(Error::DomainMismatch(self.domain().to_string(), "QQ".into()));
                }
            };
            terms.push((c, t.mono.clone()));
        }
        Polynomial::from_terms(&target, terms)
    }

    /// The same polynomial in a ring with the same variables but another order.
    pub fn reorder(&self, target: &PolyRing) -> Result<Polynomial> {
        if !self.ring.same_variables(target) {
            return Err(Error::RingMismatch);
        }
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp_monomials(&b.mono, &a.mono));
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Embeds into a ring obtained by prepending `offset` variables.
    pub fn embed(&self, target: &PolyRing, offset: usize) -> Polynomial {
        assert_eq!(target.nvars(), self.ring.nvars() + offset);
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut e = vec![0u32; offset];
            e.extend(t.mono.exponents().iter().map(|&x| x as u32));
            terms.push(Term { coeff: t.coeff.clone(), mono: Monomial::from_exponents(&e).expect("fits") });
        }
        terms.sort_by(|a, b| target.cmp_monomials(&b.mono, &a.mono));
        Polynomial { ring: target.clone(), terms }
    }

    /// Restricts to the variables `keep` (indices into this ring), failing if
    /// any other variable occurs.
    pub fn restrict(&self, target: &PolyRing, keep: &[usize]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let e = t.mono.exponents();
            let kept: u64 = keep.iter().map(|&i| e[i] as u64).sum();
            if kept != t.mono.total_degree() {
                return None;
            }
            let m: Vec<u32> = keep.iter().map(|&i| e[i] as u32).collect();
            terms.push(Term { coeff: t.coeff.clone(), mono: Monomial::from_exponents(&m).expect("fits") });
        }
        terms.sort_by(|a, b| target.cmp_monomials(&b.mono, &a.mono));
        Some(Polynomial { ring: target.clone(), terms })
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::precondition("one image per variable required"));
        }
        let target = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let c = if t.coeff.domain() == target.domain() {
                t.coeff.clone()
            } else {
                match (&t.coeff, target.domain()) {
                    (Scalar::Int(n), d) => d.from_bigint(n),
                    (Scalar::Rat(q), d) => d.from_ratio(q.numer(), q.denom())?,
                    _ => return Err(Error::DomainMismatch(t.coeff.domain().to_string(), target.domain().to_string())),
                }
            };
            let mut m = Polynomial::constant(&target, c);
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    m = m.try_mul(&images[i].pow(e as u32)?)?;
                }
            }
            acc = acc.try_add(&m)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_same(d)?;
        let lead = d.leading_term().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = lead.coeff.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.terms.first() {
            let Some(m) = lead.mono.quotient_of(&t.mono) else {
                return Ok(None);
            };
            let c = &t.coeff * &lc_inv;
            rem = rem.merge(&d.mul_term(&c, &m), true);
            quot.push(Term { coeff: c, mono: m });
        }
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quot }))
    }

    /// Names of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                used[i] |= e > 0;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }
}

/// Whether `lhs − rhs` canonicalizes to zero.
pub fn verify_identity(lhs: &Polynomial, rhs: &Polynomial) -> Result<bool> {
    Ok(lhs.try_sub(rhs)?.is_zero())
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.vars()[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Prints in the expression syntax accepted by the parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { -&t.coeff } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_monomial(f, &self.ring, &t.mono)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials share a ring")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials share a ring")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials share a ring")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() }).collect(),
        }
    }
}
