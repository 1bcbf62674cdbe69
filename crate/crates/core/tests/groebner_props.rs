mod common;

use common::{macaulay_member, random_homogeneous, random_member};
use liftcheck_core::algebra::{Domain, MonomialOrder, PolyRing, Polynomial, RingContext};
use liftcheck_core::groebner::{self, certify_membership, groebner_basis};
use liftcheck_core::idealcalc::IdealHandle;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_gens(r: &PolyRing, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    (0..rng.gen_range(1..=4)).map(|_| random_homogeneous(r, rng.gen_range(1..=3), 0.5, rng)).collect()
}

fn domains() -> Vec<Domain> {
    vec![Domain::Rationals, Domain::prime_field(32003).unwrap(), Domain::prime_field(5).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn reduced_basis_ignores_generator_order(seed in any::<u64>(), which in 0usize..3, order in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)][order];
        let r = PolyRing::new(domains()[which], &["x", "y", "z"]).unwrap();
        let c = RingContext::polynomial(&r);
        let mut gens = random_gens(&r, &mut rng);
        let a = groebner_basis(&gens, &c, order).unwrap();
        gens.shuffle(&mut rng);
        gens.push(gens[0].try_mul(&r.var(1)).unwrap());
        let b = groebner_basis(&gens, &c, order).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
        prop_assert!(a.satisfies_buchberger_criterion().unwrap());
        for g in &gens {
            prop_assert!(a.contains(g).unwrap());
        }
    }

    #[test]
    fn normal_form_is_additive_and_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap();
        let gb = groebner_basis(&random_gens(&r, &mut rng), &RingContext::polynomial(&r), MonomialOrder::Grevlex).unwrap();
        let p = random_homogeneous(&r, 3, 0.5, &mut rng);
        let q = random_homogeneous(&r, 3, 0.5, &mut rng);
        let np = gb.normal_form(&p).unwrap();
        prop_assert_eq!(gb.normal_form(&np).unwrap(), np.clone());
        let nq = gb.normal_form(&q).unwrap();
        prop_assert_eq!(gb.normal_form(&(&p + &q)).unwrap(), &np + &nq);
    }

    #[test]
    fn membership_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap();
        let gens = random_gens(&r, &mut rng);
        let i = IdealHandle::new(&RingContext::polynomial(&r), gens.clone()).unwrap();
        let d = gens.iter().map(|g| g.degree()).max().unwrap() as u32 + rng.gen_range(0..=2);
        let mut q = random_member(&r, &gens, d, &mut rng);
        if rng.gen_bool(0.5) {
            q = &q + &random_homogeneous(&r, d, 0.3, &mut rng);
        }
        prop_assert_eq!(i.contains(&q).unwrap(), macaulay_member(&gens, &q, 3));
    }

    #[test]
    fn certificates_replay(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap();
        let rel = random_homogeneous(&r, 2, 0.5, &mut rng);
        let c = RingContext::quotient(&r, vec![rel.clone()]).unwrap();
        let gens = random_gens(&r, &mut rng);
        let mut all = gens.clone();
        all.push(rel.clone());
        let q = random_member(&r, &all, 4, &mut rng);
        let cert = certify_membership(&q, &gens, &c).unwrap().expect("member");
        prop_assert_eq!(cert.replay(&gens, &[rel]).unwrap(), q);
    }
}

#[test]
fn lex_elimination_of_twisted_cubic() {
    let r = PolyRing::new(Domain::Rationals, &["t", "x", "y", "z"]).unwrap();
    let c = RingContext::polynomial(&r);
    let gens: Vec<Polynomial> = ["x - t", "y - t^2", "z - t^3"].iter().map(|s| r.parse(s).unwrap()).collect();
    let (sub, implicit) = groebner::eliminate(&gens, &c, &[0]).unwrap();
    let i = IdealHandle::new(&RingContext::polynomial(&sub), implicit).unwrap();
    for s in ["y - x^2", "z - x^3", "x*z - y^2"] {
        assert!(i.contains(&sub.parse(s).unwrap()).unwrap(), "{s}");
    }
    assert!(!i.contains(&sub.parse("x").unwrap()).unwrap());
}
