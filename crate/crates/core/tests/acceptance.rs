//! End-to-end acceptance criteria. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line with its wall-clock time.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{ctx, ideal, macaulay_member, poly, random_homogeneous, random_member, ring};
use liftcheck_core::algebra::{verify_identity, Domain, PolyRing, Polynomial, RingContext};
use liftcheck_core::idealcalc::{self, IdealHandle};
use liftcheck_core::liftcrit::{self, Certificate, Verdict};
use liftcheck_core::loci::{self, PointClass, Property};
use liftcheck_core::modsyz::{self, ProjDim};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Expands `lhs` against every sign choice on `terms` added to `base` and
/// returns the indices of the patterns that balance.
fn sign_audit(lhs: &Polynomial, base: &Polynomial, terms: &[Polynomial]) -> Result<Vec<u32>, String> {
    let mut hits = Vec::new();
    for mask in 0u32..(1 << terms.len()) {
        let mut rhs = base.clone();
        for (k, t) in terms.iter().enumerate() {
            rhs = ok(if mask & (1 << k) != 0 { rhs.try_sub(t) } else { rhs.try_add(t) })?;
        }
        if ok(verify_identity(lhs, &rhs))? {
            hits.push(mask);
        }
    }
    Ok(hits)
}

fn hochster_obstruction() -> Outcome {
    let zz = ring(Domain::Integers, &["x", "y", "z", "a", "b", "c"]);
    let p = |s: &str| zz.parse(s).unwrap();
    let g = p("x*a*y*b + y*b*z*c + z*c*x*a");
    let two_g = ok(g.scalar_mul(&Domain::Integers.from_i64(2)))?;
    let terms = [p("x^2*a^2"), p("y^2*b^2"), p("z^2*c^2")];
    let hits = sign_audit(&two_g, &p("(x*a + y*b + z*c)^2"), &terms)?;
    ensure!(hits == vec![0b111], "sign audit found {hits:?}, expected only all-minus");
    // each right-hand term is a product of two generators of I, so 2g ∈ I^2 and g ∈ (I^2 : 2)
    let f2 = RingContext::polynomial(&zz.with_domain(Domain::prime_field(2).unwrap()));
    let i2 = ideal(&f2, &["x^2", "y^2", "z^2", "a^2", "b^2", "c^2", "x*a + y*b + z*c"]);
    let g2 = ok(g.reduce_mod_prime(2))?;
    ensure!(!ok(i2.contains(&g2))?, "g reduced mod 2 lies in I");
    ensure!(ok(i2.gb())?.satisfies_buchberger_criterion().unwrap(), "mod-2 basis fails the S-pair check");
    Ok(())
}

fn jorgensen() -> Outcome {
    let c = ctx(Domain::Rationals, &["x1", "x2", "x3", "x4"]);
    let f = poly(&c, "x1*x2 - x3^2");
    let gens = ["x1*x2 - x3^2", "-x2*x3 + x2*x4", "x1*x3 + x2*x3", "-x2^2 - x3*x4", "x1^2 - x2^2 + x3^2 - x4^2"];
    let i = ideal(&c, &gens);
    let d = ok(liftcrit::weaklift_cyclic(&i, &f))?;
    ensure!(d.verdict == Verdict::NotWeaklyLiftable, "weaklift_cyclic gave {}", d.verdict);
    let j = ideal(&c, &["x1", "x3", "x4", "x2^2"]);
    let o = ok(liftcrit::obstruction_suite(&i, &f, std::slice::from_ref(&j)))?;
    let x2 = poly(&c, "x2");
    match &o.certificate {
        Certificate::Witness { element, .. } if *element == x2 && o.verdict == Verdict::ObstructionFound => {}
        other => return Err(format!("obstruction suite gave {} with {other:?}", o.verdict)),
    }
    // the witness: −x3 i1 + x4 i2 + x1 i3 = −x2 f
    let ig: Vec<Polynomial> = gens.iter().map(|s| poly(&c, s)).collect();
    let combo = &(&(&poly(&c, "-x3") * &ig[1]) + &(&poly(&c, "x4") * &ig[2])) + &(&poly(&c, "x1") * &ig[3]);
    ensure!(ok(verify_identity(&combo, &(&poly(&c, "-x2") * &f)))?, "Jorgensen syzygy does not balance");
    let r = ok(c.hypersurface(&f))?;
    let pd = ok(modsyz::pd_decide(&ok(IdealHandle::new(&r, i.gens().to_vec()))?))?;
    ensure!(pd == ProjDim::Finite(3), "pd over R is {pd}");
    ensure!(ok(idealcalc::radical_member(&x2, &j))?, "x2 not in rad J");
    Ok(())
}

fn group_ring() -> Outcome {
    for p in [3u64, 5, 7] {
        for i in 1..=p {
            let v = ok(liftcrit::group_ring_weaklift(p, i))?.verdict;
            let expect = if [1, p - 1, p].contains(&i) { Verdict::WeaklyLiftable } else { Verdict::NotWeaklyLiftable };
            ensure!(v == expect, "p = {p}, i = {i}: {v}");
        }
    }
    Ok(())
}

fn eleven_variables() -> Outcome {
    let vars = ["x", "y", "z", "a", "b", "c", "u", "v", "w", "t"];
    let zz = ring(Domain::Integers, &vars);
    let p = |s: &str| zz.parse(s).unwrap();
    let two_g = p("2*(x*a*y*b + y*b*z*c + z*c*x*a)");
    let terms = [p("(t*u - x^2)*a^2"), p("(t*v - y^2)*b^2"), p("(t*w - z^2)*c^2"), p("t*(u*a^2 + v*b^2 + w*c^2)")];
    let hits = sign_audit(&two_g, &p("(x*a + y*b + z*c)^2"), &terms)?;
    ensure!(hits == vec![0b1000], "PJ identity sign audit found {hits:?}");
    let f2 = RingContext::polynomial(&zz.with_domain(Domain::prime_field(2).unwrap()));
    let i = ideal(&f2, &["t*u - x^2", "t*v - y^2", "t*w - z^2", "x*a + y*b + z*c"]);
    let (sat, _) = ok(idealcalc::saturate(&i, &poly(&f2, "t")))?;
    for q in ["u*a^2 + v*b^2 + w*c^2", "u*a*y*z + v*b*z*x + w*c*x*y"] {
        ensure!(ok(sat.contains(&poly(&f2, q)))?, "{q} not in I : t^inf");
    }
    let mut jg = sat.gens().to_vec();
    jg.extend(["t", "a^2", "b^2", "c^2"].iter().map(|s| poly(&f2, s)));
    let j = ok(sat.with_gens(jg))?;
    let g = poly(&f2, "x*a*y*b + y*b*z*c + z*c*x*a");
    ensure!(!ok(j.contains(&g))?, "g lies in J over GF(2)");
    // modulo u, v, w, t the generators of J land in the ideal of the 3-variable-pair example
    let small = ring(Domain::prime_field(2).unwrap(), &vars[..6]);
    let mut images: Vec<Polynomial> = (0..6).map(|k| small.var(k)).collect();
    images.extend((0..4).map(|_| small.zero()));
    let reduced: Vec<Polynomial> = j.gens().iter().map(|h| h.substitute(&images).unwrap()).collect();
    let base = ideal(&RingContext::polynomial(&small), &["x^2", "y^2", "z^2", "a^2", "b^2", "c^2", "x*a + y*b + z*c"]);
    let jbar = ok(base.with_gens(reduced))?;
    ensure!(ok(jbar.is_subset_of(&base))?, "reduction of J is not inside the 3.x ideal");
    ensure!(!ok(base.contains(&ok(g.substitute(&images))?))?, "g lies in the reduced ideal");
    Ok(())
}

fn random_f_in(ideal_gens: &[Polynomial], r: &PolyRing, rng: &mut ChaCha8Rng) -> Polynomial {
    let top = ideal_gens.iter().map(|g| g.degree()).max().unwrap() as u32;
    let d = top + rng.gen_range(0..=1);
    random_member(r, ideal_gens, d, rng)
}

fn socle_vs_presentation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut agreed = 0;
    let mut liftable = 0;
    for domain in [Domain::Rationals, Domain::prime_field(5).unwrap()] {
        let c = ctx(domain, &["x", "y"]);
        for a in 1..=4 {
            for b in 1..=4 {
                let i = ideal(&c, &[&format!("x^{a}"), &format!("y^{b}")]);
                for _ in 0..3 {
                    let f = random_f_in(i.gens(), c.ring(), &mut rng);
                    let g0 = ok(liftcrit::weaklift_gor0(&i, &f))?.verdict;
                    let cy = ok(liftcrit::weaklift_cyclic(&i, &f))?.verdict;
                    ensure!(g0 == cy, "(x^{a}, y^{b}), f = {f} over {domain}: socle {g0}, presentation {cy}");
                    agreed += 1;
                    liftable += usize::from(g0 == Verdict::WeaklyLiftable);
                }
            }
        }
    }
    ensure!(agreed == 96, "only {agreed} comparisons ran");
    ensure!(liftable > 0 && liftable < agreed, "all {agreed} verdicts coincide ({liftable} liftable)");
    Ok(())
}

fn quadric_loci() -> Outcome {
    let r = ring(Domain::prime_field(5).unwrap(), &["x", "y", "z"]);
    let t = ok(RingContext::quotient(&r, vec![r.parse("x^2 + y^2 + z^2").unwrap()]))?;
    let m = IdealHandle::maximal(&t);
    let res = ok(loci::enumerate_locus(&m, m.gens(), 5, Property::NotWeaklyLiftable, &[]))?;
    ensure!(res.count(PointClass::NotInLocus) == 124, "{} weakly liftable points", res.count(PointClass::NotInLocus));
    ensure!(res.in_locus() == vec![&[0u64, 0, 0][..]], "locus is not {{0}}");
    let formula = ok(loci::locus_formula_nwl(&m, None))?;
    ensure!(ok(formula.same_ideal(&ok(idealcalc::power(&m, 2))?))?, "formula gave {formula}");
    ensure!(ok(loci::subspace_check(&res))? == (true, true), "subspace check failed");
    // the lift of T/m along f = x uses I_1 = (x, y + 2z) with 2^2 = -1 in GF(5)
    let lift = ideal(&t, &["x", "y + 2*z"]);
    let f = poly(&t, "z");
    ensure!(ok(liftcrit::certify_lift_cyclic(&m, &f, &lift))?.verdict == Verdict::LiftCertified, "quadric lift not certified");
    Ok(())
}

fn betti_relations() -> Outcome {
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    let z = poly(&c, "z");
    let i = ideal(&c, &["z", "x^2", "x*y", "y^2"]);
    let lift = ideal(&c, &["x^2", "x*y", "y^2"]);
    ensure!(ok(liftcrit::certify_lift_cyclic(&i, &z, &lift))?.verdict == Verdict::LiftCertified, "(z, m^2) lift");
    let rep = ok(liftcrit::betti_relations(&i, &z, 4))?;
    ensure!(rep.over_t == vec![1, 4, 5, 2], "b^T = {:?}", rep.over_t);
    ensure!(rep.over_r == vec![1, 3, 2, 0], "b^R = {:?}", rep.over_r);
    ensure!(rep.weak_lift_relation, "b^T_i = b^R_i + b^R_(i-1) fails");
    let i = ideal(&c, &["z", "x^2"]);
    ensure!(ok(liftcrit::certify_lift_cyclic(&i, &z, &ideal(&c, &["x^2"])))?.verdict == Verdict::LiftCertified, "(z, x^2) lift");
    let rep = ok(liftcrit::betti_relations(&i, &z, 4))?;
    ensure!(rep.over_t == vec![1, 2, 1, 0] && rep.t_complete, "b^T = {:?}", rep.over_t);
    ensure!(rep.quotient_by_square == Some(vec![1]), "P^T / (1+t)^2 = {:?}", rep.quotient_by_square);
    Ok(())
}

fn shamash() -> Outcome {
    let c = ctx(Domain::Rationals, &["x", "y"]);
    let i = ideal(&c, &["x^2", "x*y", "y^2"]);
    let f = poly(&c, "x^4 + y^4");
    let rep = ok(liftcrit::betti_relations(&i, &f, 6))?;
    ensure!(rep.over_r == vec![1, 3, 3, 3, 3, 3], "b^R = {:?}", rep.over_r);
    ensure!(rep.over_t[..3] == [1, 3, 2], "b^T = {:?}", rep.over_t);
    ensure!(rep.shamash_relation, "b^R_i = b^T_i + b^R_(i-2) fails");
    let r = ok(c.hypersurface(&f))?;
    ensure!(ok(modsyz::pd_decide(&ok(IdealHandle::new(&r, i.gens().to_vec()))?))? == ProjDim::Infinite, "pd finite over x^4+y^4");
    let r = ok(c.hypersurface(&poly(&c, "x^2 + y^2")))?;
    ensure!(ok(modsyz::pd_decide(&ok(IdealHandle::new(&r, i.gens().to_vec()))?))? == ProjDim::Infinite, "pd finite over x^2+y^2");
    Ok(())
}

fn random_ideal(r: &PolyRing, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = rng.gen_range(1..=3);
    (0..n).map(|_| random_homogeneous(r, rng.gen_range(1..=3), 0.4, rng)).collect()
}

fn linear_colon_radical() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let c = ctx(Domain::Rationals, &["x", "y", "z"]);
    for k in 0..50 {
        let i = ok(IdealHandle::new(&c, random_ideal(c.ring(), &mut rng)))?;
        let j = ok(IdealHandle::new(&c, random_ideal(c.ring(), &mut rng)))?;
        let f = random_homogeneous(c.ring(), 1, 0.7, &mut rng);
        let col = ok(idealcalc::colon_element(&ok(idealcalc::product(&i, &j))?, &f))?;
        let ipj = ok(idealcalc::sum(&i, &j))?;
        for g in col.gens() {
            ensure!(ok(idealcalc::radical_member(g, &ipj))?, "instance {k}: {g} ∉ rad({ipj}) with I = {i}, J = {j}, f = {f}");
        }
    }
    Ok(())
}

fn oracle_membership() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut members, mut non_members) = (0, 0);
    for k in 0..100 {
        let n = rng.gen_range(1..=3);
        let r = ring(Domain::Rationals, &["x", "y", "z"][..n]);
        let c = RingContext::polynomial(&r);
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_homogeneous(&r, rng.gen_range(1..=4), 0.5, &mut rng)).collect();
        let i = ok(IdealHandle::new(&c, gens.clone()))?;
        let d = rng.gen_range(gens.iter().map(|g| g.degree()).min().unwrap() as u32..=6);
        let mut q = random_member(&r, &gens, d.max(gens.iter().map(|g| g.degree()).max().unwrap() as u32), &mut rng);
        if rng.gen_bool(0.5) {
            q = ok(q.try_add(&random_homogeneous(&r, q.degree() as u32, 0.3, &mut rng)))?;
        }
        let lib = ok(i.contains(&q))?;
        let oracle = macaulay_member(&gens, &q, n);
        ensure!(lib == oracle, "instance {k}: library {lib}, oracle {oracle} for {q} in {i}");
        if lib {
            members += 1;
        } else {
            non_members += 1;
        }
    }
    ensure!(members > 10 && non_members > 10, "unbalanced sample: {members} members, {non_members} non-members");
    Ok(())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("Hochster obstruction: 2g identity over ZZ, g not in I over GF(2)", 2, hochster_obstruction),
        ("Jorgensen: not weakly liftable, witness x2, pd_R = 3, x2 in rad J", 30, jorgensen),
        ("group ring: weakly liftable iff i in {1, p-1, p} for p = 3, 5, 7", 1, group_ring),
        ("11-variable example: saturation, PJ identity, g not in J mod 2", 60, eleven_variables),
        ("socle criterion agrees with presentation criterion on (x^a, y^b)", 60, socle_vs_presentation),
        ("quadric loci over GF(5): V_nwl = {0}, formula m^2, subspace", 120, quadric_loci),
        ("Betti relations for certified lifts", 10, betti_relations),
        ("Shamash relation for f in mI and infinite pd", 10, shamash),
        ("(IJ:f) in rad(I+J) for 50 random instances with linear f", 120, linear_colon_radical),
        ("ideal membership agrees with the Macaulay-matrix oracle", 60, oracle_membership),
    ];
    let mut failed = 0;
    for (n, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if took > Duration::from_secs(*limit) {
                Err(format!("took {took:.2?}, limit {limit}s"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({:.2}s)", n + 1, took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({:.2}s): {e}", n + 1, took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
