mod common;

use liftcheck_core::algebra::{Domain, PolyRing, Polynomial};
use liftcheck_core::Error;
use proptest::prelude::*;

fn qq() -> PolyRing {
    PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap()
}

fn zz() -> PolyRing {
    PolyRing::new(Domain::Integers, &["x", "y", "z"]).unwrap()
}

/// Polynomials as term lists `(coefficient, exponents)` rendered in the DSL.
fn poly_text() -> impl Strategy<Value = String> {
    prop::collection::vec((-9i64..=9, 0u32..4, 0u32..4, 0u32..4), 0..6).prop_map(|terms| {
        if terms.is_empty() {
            return "0".to_string();
        }
        terms.iter().map(|(c, a, b, e)| format!("({c})*x^{a}*y^{b}*z^{e}")).collect::<Vec<_>>().join(" + ")
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_text(), b in poly_text(), c in poly_text()) {
        let r = qq();
        let (a, b, c) = (r.parse(&a).unwrap(), r.parse(&b).unwrap(), r.parse(&c).unwrap());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &r.one(), a.clone());
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in poly_text(), b in poly_text(), p in prop::sample::select(vec![2u32, 3, 5, 7, 101])) {
        let r = zz();
        let (a, b) = (r.parse(&a).unwrap(), r.parse(&b).unwrap());
        let red = |q: &Polynomial| q.reduce_mod_prime(p).unwrap();
        prop_assert_eq!(red(&(&a + &b)), &red(&a) + &red(&b));
        prop_assert_eq!(red(&(&a * &b)), &red(&a) * &red(&b));
    }

    #[test]
    fn display_round_trips(a in poly_text()) {
        for r in [qq(), zz(), qq().with_domain(Domain::prime_field(7).unwrap())] {
            let p = r.parse(&a).unwrap();
            prop_assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in poly_text()) {
        let r = qq();
        let p = r.parse(&a).unwrap();
        let terms = p.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone())).collect();
        let again = Polynomial::from_terms(&r, terms).unwrap();
        prop_assert_eq!(&again, &p);
        let mut doubled: Vec<_> = p.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone())).collect();
        doubled.reverse();
        doubled.extend(p.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone())));
        prop_assert_eq!(Polynomial::from_terms(&r, doubled).unwrap(), &p + &p);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_text(), b in poly_text()) {
        let r = qq();
        let (a, b) = (r.parse(&a).unwrap(), r.parse(&b).unwrap());
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), Some(a));
    }
}

#[test]
fn parse_errors() {
    let r = qq();
    assert!(matches!(r.parse("x +"), Err(Error::Parse { .. })));
    assert!(matches!(r.parse("q"), Err(Error::UnknownVariable(_))));
    assert!(matches!(r.parse("x^-1"), Err(Error::NegativeExponent(-1))));
    assert!(matches!(r.parse("x/0"), Err(Error::NotInvertible(..))));
    assert_eq!(r.parse("(x − y)^2").unwrap(), r.parse("x^2 - 2*x*y + y^2").unwrap());
    assert_eq!(r.parse("3/4*x").unwrap().to_string(), "3/4*x");
}

#[test]
fn domain_mismatch_is_an_error() {
    let a = qq().parse("x").unwrap();
    let b = zz().parse("x").unwrap();
    assert!(matches!(a.try_add(&b), Err(Error::DomainMismatch(..))));
}
