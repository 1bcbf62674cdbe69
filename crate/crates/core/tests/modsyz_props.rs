mod common;

use common::{ctx, ideal, poly, random_homogeneous};
use liftcheck_core::algebra::{Domain, PolyRing, Polynomial, RingContext};
use liftcheck_core::idealcalc::IdealHandle;
use liftcheck_core::modsyz::{self, ProjDim};
use liftcheck_core::Error;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_ideal(r: &PolyRing, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    (0..rng.gen_range(1..=4)).map(|_| random_homogeneous(r, rng.gen_range(1..=3), 0.4, rng)).collect()
}

#[test]
fn syzygy_rows_annihilate_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    for _ in 0..20 {
        let gens = random_ideal(c.ring(), &mut rng);
        let m = modsyz::syzygy_matrix(&c, &gens).unwrap();
        for row in &m.rows {
            let mut acc = c.ring().zero();
            for (a, g) in row.iter().zip(&gens) {
                acc = &acc + &(a * g);
            }
            assert!(acc.is_zero());
        }
    }
}

#[test]
fn projective_dimension_bounded_over_polynomial_ring() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    for _ in 0..30 {
        let i = IdealHandle::new(&c, random_ideal(c.ring(), &mut rng)).unwrap();
        if i.is_unit().unwrap() {
            continue;
        }
        match modsyz::pd_decide(&i).unwrap() {
            ProjDim::Finite(n) => assert!(n <= 3, "pd {n} for {i}"),
            ProjDim::Infinite => panic!("infinite pd over a regular ring for {i}"),
        }
    }
}

#[test]
fn residue_field_betti_numbers_stabilize_over_quadrics() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = PolyRing::new(Domain::Rationals, &["x", "y", "z"]).unwrap();
    for _ in 0..5 {
        let q = random_homogeneous(&r, 2, 0.6, &mut rng);
        let a = RingContext::quotient(&r, vec![q.clone()]).unwrap();
        let res = modsyz::resolve(&IdealHandle::maximal(&a), 7).unwrap();
        let b = res.betti.totals();
        assert_eq!(b.len(), 8, "{q}: {b:?}");
        assert_eq!(b[..2], [1, 3]);
        assert!(b[3..].iter().all(|&x| x == b[3]), "not eventually constant over {q}: {b:?}");
        assert!(res.transcript.iter().all(|l| l.contains("ok")));
    }
}

#[test]
fn betti_numbers_ignore_generator_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    for _ in 0..10 {
        let mut gens = random_ideal(c.ring(), &mut rng);
        let a = modsyz::resolve(&IdealHandle::new(&c, gens.clone()).unwrap(), 3).unwrap();
        gens.shuffle(&mut rng);
        gens.push(&gens[0] * &c.ring().var(2));
        let b = modsyz::resolve(&IdealHandle::new(&c, gens).unwrap(), 3).unwrap();
        assert_eq!(a.betti, b.betti);
    }
}

#[test]
fn minimal_differentials_have_no_constants() {
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    let i = ideal(&c, &["z", "x^2", "x*y", "y^2", "x^2 + z*x"]);
    let res = modsyz::resolve(&i, 4).unwrap();
    assert_eq!(res.betti.totals(), vec![1, 4, 5, 2]);
    assert_eq!(res.projective_dimension(), Some(3));
    for d in &res.differentials {
        assert!(!d.has_unit_entry());
    }
    assert_eq!(res.betti.get(1, 1), 1);
    assert_eq!(res.betti.get(1, 2), 3);
    assert_eq!(res.betti.get(3, 4), 2);
}

#[test]
fn jorgensen_presentation_absorbs_f() {
    let c = ctx(Domain::Rationals, &["x1", "x2", "x3", "x4"]);
    let i = ideal(&c, &["x1*x2 - x3^2", "-x2*x3 + x2*x4", "x1*x3 + x2*x3", "-x2^2 - x3*x4", "x1^2 - x2^2 + x3^2 - x4^2"]);
    let p = modsyz::minimal_presentation(&i).unwrap();
    assert_eq!(p.generators.len(), 5);
    assert!(!p.matrix.is_empty());
    assert!(p.matrix.entry_degrees().iter().all(|&d| d > 0));
    // the syzygy realizing −x3·i1 + x4·i2 + x1·i3 + x2·f = 0 lies in the row space
    let gens: Vec<Vec<Polynomial>> = p.matrix.rows.clone();
    let v: Vec<Polynomial> = ["x2", "-x3", "x4", "x1", "0"].iter().map(|s| poly(&c, s)).collect();
    assert!(modsyz::module_member(&c, &v, &gens, &[]).unwrap().is_some());
}

#[test]
fn non_homogeneous_input_is_rejected() {
    let c = ctx(Domain::Rationals, &["x", "y"]);
    let gens = vec![poly(&c, "x + 1"), poly(&c, "y")];
    assert!(matches!(modsyz::syzygy_matrix(&c, &gens), Err(Error::NonHomogeneous(_))));
    let i = ideal(&c, &["x^2 + y"]);
    assert!(matches!(modsyz::resolve(&i, 2), Err(Error::NonHomogeneous(_))));
}

#[test]
fn betti_table_display() {
    let c = ctx(Domain::Rationals, &["x", "y"]);
    let res = modsyz::resolve(&ideal(&c, &["x^2", "x*y", "y^2"]), 3).unwrap();
    let shown = res.betti.to_string();
    assert!(shown.starts_with("total:   1   3   2"), "{shown}");
    assert!(shown.contains("1:   .   3   2"), "{shown}");
}
