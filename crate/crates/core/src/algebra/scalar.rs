//! Coefficient domains: the integers, the rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MODULUS_BOUND: u64 = 1 << 31;

/// A coefficient domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Integers,
    Rationals,
    PrimeField(u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Domain {
    /// Builds `GF(p)`, rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<Domain> {
        if p >= MODULUS_BOUND || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Domain::PrimeField(p as u32))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integers)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Domain::PrimeField(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Domain::Integers => Scalar::Int(BigInt::from(n)),
            Domain::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Domain::PrimeField(p) => Scalar::Mod(Fp::new(n.rem_euclid(p as i64) as u32, p)),
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Domain::Integers => Scalar::Int(n.clone()),
            Domain::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            Domain::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits");
                Scalar::Mod(Fp::new(r, p))
            }
        }
    }

    /// The element `num / den`, failing when `den` is not a unit of the domain.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let n = self.from_bigint(num);
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::NotInvertible(den.to_string(), self.to_string()));
        }
        let inv = d
            .inv()
            .map_err(|_| Error::NotInvertible(den.to_string(), self.to_string()))?;
        Ok(&n * &inv)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integers => write!(f, "ZZ"),
            Domain::Rationals => write!(f, "QQ"),
            Domain::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of `GF(p)`; the modulus travels with the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: u32, modulus: u32) -> Fp {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    fn check(self, other: Fp) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::DomainMismatch(
                format!("GF({})", self.modulus),
                format!("GF({})", other.modulus),
            ));
        }
        Ok(())
    }

    fn add(self, other: Fp) -> Fp {
        let s = self.value as u64 + other.value as u64;
        Fp::new((s % self.modulus as u64) as u32, self.modulus)
    }

    fn sub(self, other: Fp) -> Fp {
        let s = self.value as u64 + self.modulus as u64 - other.value as u64;
        Fp::new((s % self.modulus as u64) as u32, self.modulus)
    }

    fn mul(self, other: Fp) -> Fp {
        let s = self.value as u64 * other.value as u64;
        Fp::new((s % self.modulus as u64) as u32, self.modulus)
    }

    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            Fp::new(self.modulus - self.value, self.modulus)
        }
    }

    fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, modulus)
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(Fp::new(t0.rem_euclid(self.modulus as i64) as u32, self.modulus))
    }
}

/// An exact scalar.
///
/// Rationals are kept in lowest terms with a positive denominator (the
/// `num-rational` normal form) and prime-field values live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod(Fp),
}

impl Scalar {
    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Int(_) => Domain::Integers,
            Scalar::Rat(_) => Domain::Rationals,
            Scalar::Mod(x) => Domain::PrimeField(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod(x) => x.value == 1,
        }
    }

    /// Sign used when printing; prime-field values are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_negative(),
            Scalar::Rat(q) => q.is_negative(),
            Scalar::Mod(_) => false,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::DomainMismatch(self.domain().to_string(), other.domain().to_string())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a + b)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a + b)),
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b)?;
                Ok(Scalar::Mod(a.add(*b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a - b)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a - b)),
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b)?;
                Ok(Scalar::Mod(a.sub(*b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(a * b)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b)?;
                Ok(Scalar::Mod(a.mul(*b)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    /// Multiplicative inverse. Over the integers only `±1` are units.
    pub fn inv(&self) -> Result<Scalar> {
        let fail = || Error::NotInvertible(self.to_string(), self.domain().to_string());
        match self {
            Scalar::Int(n) => {
                if n.is_one() || (-n).is_one() {
                    Ok(self.clone())
                } else {
                    Err(fail())
                }
            }
            Scalar::Rat(q) => {
                if q.is_zero() {
                    Err(fail())
                } else {
                    Ok(Scalar::Rat(q.recip()))
                }
            }
            Scalar::Mod(x) => x.inv().map(Scalar::Mod).ok_or_else(fail),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.domain().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reduction of an integer or `p`-integral rational into `GF(p)`.
    pub fn reduce_mod(&self, p: u32) -> Result<Scalar> {
        let target = Domain::PrimeField(p);
        match self {
            Scalar::Int(n) => Ok(target.from_bigint(n)),
            Scalar::Rat(q) => target.from_ratio(q.numer(), q.denom()),
            Scalar::Mod(x) if x.modulus == p => Ok(self.clone()),
            Scalar::Mod(_) => Err(Error::DomainMismatch(self.domain().to_string(), target.to_string())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod(x) => write!(f, "{}", x.value),
        }
    }
}

// Operator forms assume matching domains; every polynomial carries a single
// domain, so a mismatch here is a kernel bug rather than user error.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar domains agree")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar domains agree")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar domains agree")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(-n),
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod(x) => Scalar::Mod(x.neg()),
        }
    }
}
