//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// A monomial as a dense exponent vector; its length is the variable count
/// of the owning ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[Exponent; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        let mut v = SmallVec::with_capacity(exps.len());
        for &e in exps {
            v.push(Exponent::try_from(e).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial(v))
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut v = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            v.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial(v))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set iff variable `i` (taken mod 64) occurs; a cheap necessary
    /// condition for divisibility.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    /// Index of the single variable if this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Monomial orders. All are global and multiplicative; `Grevlex` honours the
/// ring's grading weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Eliminates the first `k` variables: they are compared first (graded
    /// reverse lexicographic, unweighted), then the rest by weighted grevlex.
    Block(usize),
}

fn revlex_tail(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[Exponent], b: &[Exponent], weights: Option<&[u32]>) -> Ordering {
    let deg = |m: &[Exponent]| -> u64 {
        match weights {
            Some(w) => m.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum(),
            None => m.iter().map(|&e| e as u64).sum(),
        }
    };
    deg(a).cmp(&deg(b)).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b, Some(weights)),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k], None)
                    .then_with(|| grevlex(&a[k..], &b[k..], Some(&weights[k..])))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_basics() {
        let w = [1, 1, 1];
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.compare(&mono(&[2, 0, 0]), &mono(&[1, 1, 0]), &w), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 1, 0]), &mono(&[0, 2, 0]), &w), Ordering::Greater);
        // x z  vs  y^2: same degree, last variable decides
        assert_eq!(o.compare(&mono(&[1, 0, 1]), &mono(&[0, 2, 0]), &w), Ordering::Less);
        assert_eq!(o.compare(&mono(&[0, 0, 1]), &mono(&[1, 1, 0]), &w), Ordering::Less);
    }

    #[test]
    fn lex_and_block() {
        let w = [1, 1, 1];
        assert_eq!(MonomialOrder::Lex.compare(&mono(&[1, 0, 0]), &mono(&[0, 5, 5]), &w), Ordering::Greater);
        let b = MonomialOrder::Block(1);
        assert_eq!(b.compare(&mono(&[1, 0, 0]), &mono(&[0, 9, 9]), &w), Ordering::Greater);
        assert_eq!(b.compare(&mono(&[2, 0, 0]), &mono(&[1, 3, 0]), &w), Ordering::Greater);
        assert_eq!(b.compare(&mono(&[0, 1, 1]), &mono(&[0, 2, 0]), &w), Ordering::Less);
    }

    #[test]
    fn weighted_grevlex_uses_weights() {
        let w = [1, 3];
        // x^2 has weight 2, y weight 3
        assert_eq!(MonomialOrder::Grevlex.compare(&mono(&[2, 0]), &mono(&[0, 1]), &w), Ordering::Less);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(|v| mono(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (0usize..5).prop_map(MonomialOrder::Block),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total_multiplicative_global(
            a in arb_mono(), b in arb_mono(), c in arb_mono(), o in arb_order(),
            w in proptest::collection::vec(1u32..4, 4),
        ) {
            let ab = o.compare(&a, &b, &w);
            prop_assert_eq!(ab, o.compare(&b, &a, &w).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less {
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c), &w), Ordering::Less);
            }
            prop_assert_ne!(o.compare(&Monomial::one(4), &a, &w), Ordering::Greater);
        }
    }
}
