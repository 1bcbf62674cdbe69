//! Built-in worked examples with recorded expected outcomes. Each fixture
//! recomputes its claims from scratch; a fixture passes when every
//! observation matches its expectation.

use std::thread;
use std::time::Instant;

use liftcheck_core::algebra::{verify_identity, Domain, PolyRing, Polynomial, RingContext};
use liftcheck_core::idealcalc::{self, IdealHandle};
use liftcheck_core::liftcrit::{self, Certificate, Verdict};
use liftcheck_core::loci::{self, PointClass, Property};
use liftcheck_core::modsyz::{self, ProjDim};
use liftcheck_core::Result;

use crate::report::{self, CorpusReport, FixtureReport, Observation};

pub struct Fixture {
    pub name: &'static str,
    pub claim: &'static str,
    run: fn() -> Result<Vec<Observation>>,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "hochster-grothendieck",
        claim: "In ZZ[x,y,z,a,b,c] the only sign pattern with 2g = (xa+yb+zc)^2 ± x^2a^2 ± y^2b^2 ± z^2c^2, \
                g = xayb + ybzc + zcxa, is all minus, so g ∈ (I^2 : 2) for I = (x^2,y^2,z^2,a^2,b^2,c^2, xa+yb+zc); \
                over GF(2) g ∉ I, so the necessary condition (I^2 : f) ⊆ I fails for f = 2.",
        run: hochster_grothendieck,
    },
    Fixture {
        name: "jorgensen",
        claim: "For f = x1x2 − x3^2 and I = (f, −x2x3 + x2x4, x1x3 + x2x3, −x2^2 − x3x4, x1^2 − x2^2 + x3^2 − x4^2) in QQ[x1..x4], \
                T/I is not weakly liftable to T although pd over T/(f) is 3; with J = (x1,x3,x4,x2^2) the element x2 \
                lies in (IJ : f) and in rad J but not in I + J.",
        run: jorgensen,
    },
    Fixture {
        name: "group-ring-p5",
        claim: "Over GF(5)[Y]/(Y^5) with f = ḡ, the cyclic module (Y^i) is weakly liftable exactly for i ∈ {1, 4, 5}.",
        run: group_ring_p5,
    },
    Fixture {
        name: "hochster-prime-dim11",
        claim: "For I = (tu − x^2, tv − y^2, tw − z^2, xa + yb + zc) over GF(2), the saturation I : t^∞ contains \
                ua^2 + vb^2 + wc^2 and uayz + vbzx + wcxy; over ZZ 2g equals (xa+yb+zc)^2 + Σ(tu − x^2)a^2 − t(ua^2+vb^2+wc^2); \
                and g stays outside the saturation plus (t, a^2, b^2, c^2), as it does after setting u, v, w, t to zero.",
        run: hochster_prime_dim11,
    },
    Fixture {
        name: "quadric-loci-gf5",
        claim: "On T = GF(5)[x,y,z]/(x^2+y^2+z^2) with I the maximal ideal, every nonzero linear form f gives a weakly \
                liftable T/I; the closed-form locus is m^2 : 1 = m^2 and the enumerated locus {0} is a subspace.",
        run: quadric_loci,
    },
    Fixture {
        name: "betti-certified-lift",
        claim: "I = (z, x^2, xy, y^2) lifts along f = z to (x^2, xy, y^2), Betti numbers over T are (1,4,5,2) and \
                satisfy b^T_i = b^R_i + b^R_(i−1); for I = (z, x^2) the series P^T is exactly (1+t)^2.",
        run: betti_certified_lift,
    },
    Fixture {
        name: "shamash-m2",
        claim: "For I = (x,y)^2 and f = x^4 + y^4 ∈ mI, the Betti numbers over T/(f) are (1,3,3,3,3,3,...) with \
                b^R_i = b^T_i + b^R_(i−2), and the projective dimension over T/(f) is infinite, as it is over x^2 + y^2.",
        run: shamash_m2,
    },
    Fixture {
        name: "gorenstein-ci",
        claim: "For I = (x^2, y^2) in QQ[x,y] the socle generator is xy; f = x^2 + y^2 gives xy·f ∉ I^2, hence weakly \
                liftable, while f = x^2·y is in mI with xy·f ∈ I^2, hence not; the presentation criterion agrees.",
        run: gorenstein_ci,
    },
];

fn poly_ring(domain: Domain, vars: &[&str]) -> PolyRing {
    PolyRing::new(domain, vars).expect("fixture ring")
}

fn parse(r: &PolyRing, s: &str) -> Polynomial {
    r.parse(s).expect("fixture polynomial")
}

fn ideal(c: &RingContext, gens: &[&str]) -> Result<IdealHandle> {
    IdealHandle::parse(c, gens)
}

/// Signs (`+`/`-` per correction term) for which `lhs = base ± terms` holds.
fn balancing_signs(lhs: &Polynomial, base: &Polynomial, terms: &[Polynomial]) -> Result<Vec<String>> {
    let mut hits = Vec::new();
    for mask in 0u32..(1 << terms.len()) {
        let mut rhs = base.clone();
        for (k, t) in terms.iter().enumerate() {
            rhs = if mask & (1 << k) != 0 { rhs.try_sub(t)? } else { rhs.try_add(t)? };
        }
        if verify_identity(lhs, &rhs)? {
            hits.push((0..terms.len()).map(|k| if mask & (1 << k) != 0 { '-' } else { '+' }).collect());
        }
    }
    Ok(hits)
}

fn hochster_grothendieck() -> Result<Vec<Observation>> {
    let zz = poly_ring(Domain::Integers, &["x", "y", "z", "a", "b", "c"]);
    let g = parse(&zz, "x*a*y*b + y*b*z*c + z*c*x*a");
    let two_g = g.scalar_mul(&Domain::Integers.from_i64(2))?;
    let terms = ["x^2*a^2", "y^2*b^2", "z^2*c^2"].map(|s| parse(&zz, s));
    let signs = balancing_signs(&two_g, &parse(&zz, "(x*a + y*b + z*c)^2"), &terms)?;
    let f2 = RingContext::polynomial(&zz.with_domain(Domain::prime_field(2)?));
    let i = ideal(&f2, &["x^2", "y^2", "z^2", "a^2", "b^2", "c^2", "x*a + y*b + z*c"])?;
    Ok(vec![
        Observation::new("balancing sign patterns", "---", signs.join(",")),
        Observation::new("g in I over GF(2)", false, i.contains(&g.reduce_mod_prime(2)?)?),
    ])
}

fn jorgensen() -> Result<Vec<Observation>> {
    let r = poly_ring(Domain::Rationals, &["x1", "x2", "x3", "x4"]);
    let c = RingContext::polynomial(&r);
    let f = parse(&r, "x1*x2 - x3^2");
    let i = ideal(&c, &["x1*x2 - x3^2", "-x2*x3 + x2*x4", "x1*x3 + x2*x3", "-x2^2 - x3*x4", "x1^2 - x2^2 + x3^2 - x4^2"])?;
    let j = ideal(&c, &["x1", "x3", "x4", "x2^2"])?;
    let verdict = liftcrit::weaklift_cyclic(&i, &f)?.verdict;
    let suite = liftcrit::obstruction_suite(&i, &f, std::slice::from_ref(&j))?;
    let witness = match &suite.certificate {
        Certificate::Witness { element, .. } => element.to_string(),
        _ => "none".into(),
    };
    let hyper = c.hypersurface(&f)?;
    let pd = modsyz::pd_decide(&IdealHandle::new(&hyper, i.gens().to_vec())?)?;
    let g = i.gens();
    let combo = parse(&r, "-x3").try_mul(&g[1])?.try_add(&parse(&r, "x4").try_mul(&g[2])?)?.try_add(&parse(&r, "x1").try_mul(&g[3])?)?;
    let x2 = parse(&r, "x2");
    Ok(vec![
        Observation::new("weaklift_cyclic", Verdict::NotWeaklyLiftable, verdict),
        Observation::new("obstruction_suite", Verdict::ObstructionFound, suite.verdict),
        Observation::new("witness", "x2", witness),
        Observation::new("-x3*i1 + x4*i2 + x1*i3 = -x2*f", true, verify_identity(&combo, &x2.try_mul(&f)?.scalar_mul(&Domain::Rationals.from_i64(-1))?)?),
        Observation::new("pd over T/(f)", ProjDim::Finite(3), pd),
        Observation::new("x2 in rad J", true, idealcalc::radical_member(&x2, &j)?),
    ])
}

fn group_ring_p5() -> Result<Vec<Observation>> {
    let verdicts: Vec<String> = (1..=5).map(|i| liftcrit::group_ring_weaklift(5, i).map(|d| d.verdict.to_string())).collect::<Result<_>>()?;
    let expected = ["WeaklyLiftable", "NotWeaklyLiftable", "NotWeaklyLiftable", "WeaklyLiftable", "WeaklyLiftable"];
    Ok(vec![
        Observation::new("verdicts for i = 1..5", expected.join(","), verdicts.join(",")),
        Observation::new("coefficients of ḡ", "1,2,2,1", liftcrit::group_ring_coefficients(5)?.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
    ])
}

fn hochster_prime_dim11() -> Result<Vec<Observation>> {
    let vars = ["x", "y", "z", "a", "b", "c", "u", "v", "w", "t"];
    let zz = poly_ring(Domain::Integers, &vars);
    let two_g = parse(&zz, "2*(x*a*y*b + y*b*z*c + z*c*x*a)");
    let terms = ["(t*u - x^2)*a^2", "(t*v - y^2)*b^2", "(t*w - z^2)*c^2", "t*(u*a^2 + v*b^2 + w*c^2)"].map(|s| parse(&zz, s));
    let signs = balancing_signs(&two_g, &parse(&zz, "(x*a + y*b + z*c)^2"), &terms)?;
    let f2 = RingContext::polynomial(&zz.with_domain(Domain::prime_field(2)?));
    let i = ideal(&f2, &["t*u - x^2", "t*v - y^2", "t*w - z^2", "x*a + y*b + z*c"])?;
    let (sat, _) = idealcalc::saturate(&i, &parse(f2.ring(), "t"))?;
    let mut out = vec![Observation::new("balancing sign patterns", "+++-", signs.join(","))];
    for q in ["u*a^2 + v*b^2 + w*c^2", "u*a*y*z + v*b*z*x + w*c*x*y"] {
        out.push(Observation::new(format!("{q} in I : t^inf"), true, sat.contains(&parse(f2.ring(), q))?));
    }
    let mut jg = sat.gens().to_vec();
    jg.extend(["t", "a^2", "b^2", "c^2"].map(|s| parse(f2.ring(), s)));
    let j = sat.with_gens(jg)?;
    let g = parse(f2.ring(), "x*a*y*b + y*b*z*c + z*c*x*a");
    out.push(Observation::new("g in J", false, j.contains(&g)?));
    let small = poly_ring(Domain::prime_field(2)?, &vars[..6]);
    let mut images: Vec<Polynomial> = small.variables();
    images.extend((0..4).map(|_| small.zero()));
    let base = ideal(&RingContext::polynomial(&small), &["x^2", "y^2", "z^2", "a^2", "b^2", "c^2", "x*a + y*b + z*c"])?;
    let reduced = base.with_gens(j.gens().iter().map(|h| h.substitute(&images)).collect::<Result<_>>()?)?;
    out.push(Observation::new("J mod (u,v,w,t) inside the six-variable ideal", true, reduced.is_subset_of(&base)?));
    out.push(Observation::new("g in the six-variable ideal", false, base.contains(&g.substitute(&images)?)?));
    Ok(out)
}

fn quadric_loci() -> Result<Vec<Observation>> {
    let r = poly_ring(Domain::prime_field(5)?, &["x", "y", "z"]);
    let t = RingContext::quotient(&r, vec![parse(&r, "x^2 + y^2 + z^2")])?;
    let m = IdealHandle::maximal(&t);
    let res = loci::enumerate_locus(&m, m.gens(), 5, Property::NotWeaklyLiftable, &[])?;
    let formula = loci::locus_formula_nwl(&m, None)?;
    Ok(vec![
        Observation::new("weakly liftable nonzero points", 124, res.count(PointClass::NotInLocus)),
        Observation::new("points in the locus", 1, res.count(PointClass::InLocus)),
        Observation::new("formula equals m^2", true, formula.same_ideal(&idealcalc::power(&m, 2)?)?),
        Observation::new("additive, scalar", "true,true", format!("{},{}", res.additive, res.scalar)),
    ])
}

fn betti_certified_lift() -> Result<Vec<Observation>> {
    let r = poly_ring(Domain::Rationals, &["x", "y", "z"]);
    let c = RingContext::polynomial(&r);
    let z = parse(&r, "z");
    let i = ideal(&c, &["z", "x^2", "x*y", "y^2"])?;
    let lift = liftcrit::certify_lift_cyclic(&i, &z, &ideal(&c, &["x^2", "x*y", "y^2"])?)?;
    let rep = liftcrit::betti_relations(&i, &z, 4)?;
    let small = ideal(&c, &["z", "x^2"])?;
    let rep2 = liftcrit::betti_relations(&small, &z, 4)?;
    Ok(vec![
        Observation::new("certify_lift", Verdict::LiftCertified, lift.verdict),
        Observation::new("b^T", "[1, 4, 5, 2]", format!("{:?}", rep.over_t)),
        Observation::new("b^T_i = b^R_i + b^R_(i-1)", true, rep.weak_lift_relation),
        Observation::new("P^T / (1+t)^2 for (z, x^2)", "Some([1])", format!("{:?}", rep2.quotient_by_square)),
    ])
}

fn shamash_m2() -> Result<Vec<Observation>> {
    let r = poly_ring(Domain::Rationals, &["x", "y"]);
    let c = RingContext::polynomial(&r);
    let i = ideal(&c, &["x^2", "x*y", "y^2"])?;
    let f = parse(&r, "x^4 + y^4");
    let rep = liftcrit::betti_relations(&i, &f, 6)?;
    let pd = |g: &str| -> Result<ProjDim> { modsyz::pd_decide(&IdealHandle::new(&c.hypersurface(&parse(&r, g))?, i.gens().to_vec())?) };
    Ok(vec![
        Observation::new("b^R", "[1, 3, 3, 3, 3, 3]", format!("{:?}", rep.over_r)),
        Observation::new("b^R_i = b^T_i + b^R_(i-2)", true, rep.shamash_relation),
        Observation::new("pd over x^4 + y^4", ProjDim::Infinite, pd("x^4 + y^4")?),
        Observation::new("pd over x^2 + y^2", ProjDim::Infinite, pd("x^2 + y^2")?),
    ])
}

fn gorenstein_ci() -> Result<Vec<Observation>> {
    let r = poly_ring(Domain::Rationals, &["x", "y"]);
    let c = RingContext::polynomial(&r);
    let i = ideal(&c, &["x^2", "y^2"])?;
    let mut out = Vec::new();
    for (f, expected) in [("x^2 + y^2", Verdict::WeaklyLiftable), ("x^2*y", Verdict::NotWeaklyLiftable)] {
        let p = parse(&r, f);
        out.push(Observation::new(format!("weaklift_gor0, f = {f}"), expected, liftcrit::weaklift_gor0(&i, &p)?.verdict));
        out.push(Observation::new(format!("weaklift_cyclic, f = {f}"), expected, liftcrit::weaklift_cyclic(&i, &p)?.verdict));
    }
    Ok(out)
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

fn run_one(f: &Fixture, timing: bool) -> FixtureReport {
    let start = Instant::now();
    let (checks, error) = match (f.run)() {
        Ok(c) => (c, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    FixtureReport {
        name: f.name.to_string(),
        claim: f.claim.to_string(),
        passed: error.is_none() && checks.iter().all(Observation::holds),
        checks,
        error,
        time_ms: timing.then(|| start.elapsed().as_millis()),
    }
}

/// Runs fixtures on separate threads; the report keeps the input order.
pub fn run(fixtures: &[&'static Fixture], timing: bool) -> CorpusReport {
    let fixtures = thread::scope(|s| {
        let handles: Vec<_> = fixtures.iter().map(|f| s.spawn(move || run_one(f, timing))).collect();
        handles.into_iter().map(|h| h.join().expect("fixture thread")).collect()
    });
    CorpusReport { schema: report::SCHEMA_VERSION, tool: report::tool_version(), fixtures }
}
