use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::idealcalc::{self, krull_dim, socle_data, IdealHandle};
use crate::liftcrit::{Certificate, LiftDecision, Verdict, Warning};
use crate::modsyz;

/// Shared preconditions: `f ∈ I`, `f` nonzero and a nonzerodivisor on `T`.
fn setup(i: &IdealHandle, f: &Polynomial, d: &mut LiftDecision) -> Result<Polynomial> {
    i.check_element(f)?;
    let f = f.reorder(i.ring())?;
    let zero = i.with_gens(Vec::new())?;
    if zero.contains(&f)? {
        return Err(Error::precondition("f is zero in T"));
    }
    if !i.contains(&f)? {
        return Err(Error::precondition(format!("f = {f} is not in I")));
    }
    d.check("f ∈ I", true, f.to_string());
    if !i.ctx().is_polynomial_ring() && !idealcalc::is_nonzerodivisor(&f, &zero)? {
        return Err(Error::precondition(format!("f = {f} is a zerodivisor on T")));
    }
    d.check("f nonzerodivisor on T", true, "");
    if !(i.ctx().is_graded() && i.is_homogeneous() && f.is_homogeneous()) {
        d.warnings.push(Warning::NonGraded);
    }
    Ok(f)
}

fn graded(d: &LiftDecision) -> bool {
    !d.warnings.contains(&Warning::NonGraded)
}

/// `(f, f_1, …, f_n)`: `f` first, then the generators of `I` that are
/// nonzero in `T`, without repeats or scalar multiples of `f`.
fn presentation_generators(i: &IdealHandle, f: &Polynomial) -> Result<Vec<Polynomial>> {
    let fm = f.monic()?;
    let mut out = vec![f.clone()];
    let mut seen = vec![fm];
    for g in i.nonzero_gens()? {
        let gm = g.monic()?;
        if !seen.contains(&gm) {
            seen.push(gm);
            out.push(g);
        }
    }
    Ok(out)
}

/// Checks `r − Σ x_i·rows_i ∈ I·T^m` coordinatewise.
pub fn replay_cofactors(i: &IdealHandle, r: &[Polynomial], rows: &[Vec<Polynomial>], x: &[Polynomial]) -> Result<bool> {
    if rows.len() != x.len() || rows.iter().any(|row| row.len() != r.len()) {
        return Err(Error::precondition("cofactor shapes do not match"));
    }
    for (c, rc) in r.iter().enumerate() {
        let mut acc = rc.reorder(i.ring())?;
        for (xi, row) in x.iter().zip(rows) {
            acc = acc.try_sub(&xi.reorder(i.ring())?.try_mul(&row[c].reorder(i.ring())?)?)?;
        }
        if !i.contains(&acc)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Condition (4) of the presentation criterion: with `X` the syzygy matrix
/// of `(f, f_1, …, f_n)`, `r` its `f`-row and `r_i` the others, `T/I` is
/// weakly liftable iff `r ∈ span(r_i) + I·T^m`.
pub fn weaklift_cyclic(i: &IdealHandle, f: &Polynomial) -> Result<LiftDecision> {
    let mut d = LiftDecision::new();
    let f = setup(i, f, &mut d)?;
    if !graded(&d) {
        return Err(Error::NonHomogeneous(format!("I = {i}, f = {f}")));
    }
    let gens = presentation_generators(i, &f)?;
    let vecs: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let x = modsyz::syzygies(i.ctx(), &vecs, &[0], false)?;
    d.check("presentation", true, format!("{} generators, {} syzygies", gens.len(), x.nrows()));
    let r = x.column(0);
    let rows: Vec<Vec<Polynomial>> = (1..gens.len()).map(|j| x.column(j)).collect();
    if x.is_empty() {
        d.check("r ∈ span(r_i) + I·T^m", true, "no syzygies");
        let zeros = vec![i.ring().zero(); rows.len()];
        return Ok(d.finish(Verdict::WeaklyLiftable, Certificate::Cofactors { generators: gens, r, rows, x: zeros }));
    }
    match modsyz::module_member(i.ctx(), &r, &rows, i.gens())? {
        Some(xs) => {
            if !replay_cofactors(i, &r, &rows, &xs)? {
                return Err(Error::invariant("weak-lift cofactors do not replay"));
            }
            d.check("r ∈ span(r_i) + I·T^m", true, "cofactors replayed");
            Ok(d.finish(Verdict::WeaklyLiftable, Certificate::Cofactors { generators: gens, r, rows, x: xs }))
        }
        None => {
            d.check("r ∈ span(r_i) + I·T^m", false, "f-row is not a member");
            Ok(d.finish(Verdict::NotWeaklyLiftable, Certificate::NonMember { generators: gens, r, rows }))
        }
    }
}

fn socle_test(d: LiftDecision, u: Polynomial, f: &Polynomial, target: &IdealHandle) -> Result<LiftDecision> {
    let mut d = d;
    let product = u.try_mul(f)?;
    let (member, cert) = target.member(&product, true)?;
    d.check("u·f ∉ target", !member, format!("u = {u}, u·f = {product}"));
    let verdict = if member { Verdict::NotWeaklyLiftable } else { Verdict::WeaklyLiftable };
    Ok(d.finish(verdict, Certificate::Socle { u, product, target: target.gens().to_vec(), membership: cert }))
}

/// Zero-dimensional Gorenstein `T/I` with socle generator `u`: weakly
/// liftable iff `u·f ∉ I^2`.
pub fn weaklift_gor0(i: &IdealHandle, f: &Polynomial) -> Result<LiftDecision> {
    let mut d = LiftDecision::new();
    let f = setup(i, f, &mut d)?;
    let sd = socle_data(i)?;
    if !sd.zero_dimensional {
        return Err(Error::precondition("T/I is not zero-dimensional; use weaklift_cyclic"));
    }
    let Some(u) = sd.generator else {
        return Err(Error::precondition(format!(
            "T/I is not Gorenstein (socle dimension {}); use weaklift_cyclic",
            sd.basis.len()
        )));
    };
    d.check("T/I zero-dimensional Gorenstein", true, format!("socle generator {u}"));
    let i2 = idealcalc::power(i, 2)?;
    socle_test(d, u, &f, &i2)
}

/// One-dimensional Cohen–Macaulay generically Gorenstein `T/I` with
/// canonical ideal represented by `J`, `u` the socle generator of `T/(I+J)`:
/// weakly liftable iff `u·f ∉ IJ + I^(2)`, with `I^(2) = I^2 : w^∞`.
pub fn weaklift_cm1(i: &IdealHandle, f: &Polynomial, j: &IdealHandle, w: &Polynomial) -> Result<LiftDecision> {
    let mut d = LiftDecision::new();
    let f = setup(i, f, &mut d)?;
    i.check_same_ring(j)?;
    match krull_dim(i)? {
        Some(1) => {}
        Some(0) => return Err(Error::precondition("T/I is zero-dimensional; use weaklift_gor0")),
        other => {
            return Err(Error::precondition(format!("T/I has dimension {other:?}, expected 1")));
        }
    }
    d.check("dim T/I = 1", true, "");
    let w = w.reorder(i.ring())?;
    if !idealcalc::is_nonzerodivisor(&w, i)? {
        return Err(Error::precondition(format!("witness {w} is a zerodivisor on T/I")));
    }
    let positive = w.is_homogeneous() && w.degree() > 0;
    d.check("witness regular on T/I", true, if positive { "T/I is Cohen-Macaulay" } else { "" });
    let ij = idealcalc::sum(i, j)?;
    let sd = socle_data(&ij)?;
    let Some(u) = sd.generator.filter(|_| sd.zero_dimensional) else {
        return Err(Error::precondition("T/(I+J) is not zero-dimensional Gorenstein"));
    };
    d.check("T/(I+J) zero-dimensional Gorenstein", true, format!("socle generator {u}"));
    d.warnings.push(Warning::WitnessConditional(w.clone()));
    d.warnings.push(Warning::CallerAssertion(format!("J = {j} represents the canonical ideal of T/I")));
    d.warnings.push(Warning::CallerAssertion("T/I is generically Gorenstein".into()));
    if !positive {
        d.warnings.push(Warning::CallerAssertion("T/I is Cohen-Macaulay".into()));
    }
    let sym = idealcalc::symbolic_square(i, &w)?;
    let target = idealcalc::sum(&idealcalc::product(i, j)?, &sym)?;
    socle_test(d, u, &f, &target)
}

/// Single-degree criterion: `I` generated in degree `a`, `f ∈ I` of degree
/// `a` with `(f) ⊊ I`. If every entry of a minimal presentation matrix has
/// degree `< a`, `T/I` is not weakly liftable.
pub fn graded_obstruction(i: &IdealHandle, f: &Polynomial) -> Result<LiftDecision> {
    let na = |s: String| Err(Error::NotApplicable(s));
    if !i.ctx().is_graded() || !i.is_homogeneous() || !f.is_homogeneous() {
        return na("input is not homogeneous".into());
    }
    if i.ring().weights().contains(&0) {
        return na("a variable has degree zero".into());
    }
    let mut d = LiftDecision::new();
    let f = setup(i, f, &mut d)?;
    let pres = modsyz::minimal_presentation(i)?;
    let a = f.degree();
    if let Some(g) = pres.generators.iter().find(|g| g.degree() != a) {
        return na(format!("I is not generated in the single degree {a} of f (generator {g})"));
    }
    let principal = i.with_gens(vec![f.clone()])?;
    if i.is_subset_of(&principal)? {
        return na("(f) = I".into());
    }
    d.check("I generated in degree of f, (f) ⊊ I", true, format!("a = {a}"));
    let degs = pres.matrix.entry_degrees();
    let low = !degs.is_empty() && degs.iter().all(|&b| b < a);
    d.check("all presentation entries of degree < a", low, format!("{degs:?}"));
    let cert = Certificate::Presentation { generator_degree: a, entry_degrees: degs };
    Ok(d.finish(if low { Verdict::NotWeaklyLiftable } else { Verdict::Inconclusive }, cert))
}

/// `T/L` is a lift of `T/I` iff `L + (f) = I` and `f` is regular on `T/L`.
pub fn certify_lift_cyclic(i: &IdealHandle, f: &Polynomial, l: &IdealHandle) -> Result<LiftDecision> {
    i.check_same_ring(l)?;
    i.check_element(f)?;
    let f = f.reorder(i.ring())?;
    let mut d = LiftDecision::new();
    if !(i.ctx().is_graded() && i.is_homogeneous() && l.is_homogeneous() && f.is_homogeneous()) {
        d.warnings.push(Warning::NonGraded);
    }
    let mut lf = l.gens().to_vec();
    lf.push(f.clone());
    let sum = l.with_gens(lf)?;
    if !d.check("L + (f) = I", sum.same_ideal(i)?, format!("L = {l}")) {
        return Ok(d.finish(Verdict::Inconclusive, Certificate::None));
    }
    let zero = i.with_gens(Vec::new())?;
    let regular = !zero.contains(&f)? && idealcalc::is_nonzerodivisor(&f, l)?;
    if !d.check("f nonzerodivisor on T/L", regular, "") {
        return Ok(d.finish(Verdict::Inconclusive, Certificate::None));
    }
    d.check("lift implies weak lift", true, "T/I is weakly liftable");
    Ok(d.finish(Verdict::LiftCertified, Certificate::Lift { ideal: l.gens().to_vec() }))
}

/// Lowest-degree generator of the reduced presentation of `c` outside `target`.
fn lowest_outside(c: &IdealHandle, target: &IdealHandle) -> Result<Option<Polynomial>> {
    let mut gens = c.reduced_presentation()?.gens().to_vec();
    gens.sort_by_key(|g| g.degree());
    for g in gens {
        if !target.contains(&g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Necessary conditions for weak liftability: `(I^2 : f) ⊆ I` and, for each
/// sample `J`, `(IJ : f) ⊆ I + J` and `(IJ : f) ⊆ rad(I + J)`.
pub fn obstruction_suite(i: &IdealHandle, f: &Polynomial, samples: &[IdealHandle]) -> Result<LiftDecision> {
    let mut d = LiftDecision::new();
    let f = setup(i, f, &mut d)?;
    let c = idealcalc::colon_element(&idealcalc::power(i, 2)?, &f)?;
    let inclusion = "(I^2 : f) ⊆ I".to_string();
    if let Some(w) = lowest_outside(&c, i)? {
        d.check(&inclusion, false, format!("witness {w}"));
        return Ok(d.finish(Verdict::ObstructionFound, Certificate::Witness { element: w, inclusion }));
    }
    d.check(inclusion, true, "");
    for (k, j) in samples.iter().enumerate() {
        i.check_same_ring(j)?;
        let c = idealcalc::colon_element(&idealcalc::product(i, j)?, &f)?;
        let ipj = idealcalc::sum(i, j)?;
        let inclusion = format!("(IJ : f) ⊆ I + J for J_{k} = {j}");
        if let Some(w) = lowest_outside(&c, &ipj)? {
            d.check(&inclusion, false, format!("witness {w}"));
            return Ok(d.finish(Verdict::ObstructionFound, Certificate::Witness { element: w, inclusion }));
        }
        d.check(inclusion, true, "");
        let inclusion = format!("(IJ : f) ⊆ rad(I + J) for J_{k} = {j}");
        for g in c.gens() {
            if !idealcalc::radical_member(g, &ipj)? {
                d.check(&inclusion, false, format!("witness {g}"));
                return Ok(d.finish(Verdict::ObstructionFound, Certificate::Witness { element: g.clone(), inclusion }));
            }
        }
        d.check(inclusion, true, "");
    }
    Ok(d.finish(Verdict::Inconclusive, Certificate::None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{PolyRing, RingContext};
    use crate::algebra::scalar::Domain;

    fn ctx(vars: &[&str]) -> RingContext {
        RingContext::polynomial(&PolyRing::new(Domain::Rationals, vars).unwrap())
    }

    fn jorgensen() -> (IdealHandle, Polynomial) {
        let c = ctx(&["x1", "x2", "x3", "x4"]);
        let i = IdealHandle::parse(
            &c,
            &["x1*x2 - x3^2", "-x2*x3 + x2*x4", "x1*x3 + x2*x3", "-x2^2 - x3*x4", "x1^2 - x2^2 + x3^2 - x4^2"],
        )
        .unwrap();
        let f = c.ring().parse("x1*x2 - x3^2").unwrap();
        (i, f)
    }

    #[test]
    fn jorgensen_is_not_weakly_liftable() {
        let (i, f) = jorgensen();
        let d = weaklift_cyclic(&i, &f).unwrap();
        assert_eq!(d.verdict, Verdict::NotWeaklyLiftable);
        let j = IdealHandle::parse(i.ctx(), &["x1", "x3", "x4", "x2^2"]).unwrap();
        let o = obstruction_suite(&i, &f, &[j]).unwrap();
        assert_eq!(o.verdict, Verdict::ObstructionFound);
        match o.certificate {
            Certificate::Witness { element, .. } => assert_eq!(element, i.ring().parse("x2").unwrap()),
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn hyperplane_section_lifts() {
        let c = ctx(&["x", "y", "z"]);
        let i = IdealHandle::parse(&c, &["z", "x", "y"]).unwrap();
        let z = c.ring().parse("z").unwrap();
        let d = weaklift_cyclic(&i, &z).unwrap();
        assert_eq!(d.verdict, Verdict::WeaklyLiftable);
        if let Certificate::Cofactors { r, rows, x, .. } = &d.certificate {
            assert!(replay_cofactors(&i, r, rows, x).unwrap());
        } else {
            panic!("expected cofactors");
        }
        let l = IdealHandle::parse(&c, &["x", "y"]).unwrap();
        assert_eq!(certify_lift_cyclic(&i, &z, &l).unwrap().verdict, Verdict::LiftCertified);
        assert_eq!(certify_lift_cyclic(&i, &z, &i).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn square_of_maximal_ideal_over_sum_of_squares() {
        let c = ctx(&["x", "y"]);
        let i = IdealHandle::parse(&c, &["x^2", "x*y", "y^2"]).unwrap();
        let f = c.ring().parse("x^2 + y^2").unwrap();
        assert_eq!(weaklift_cyclic(&i, &f).unwrap().verdict, Verdict::NotWeaklyLiftable);
        assert_eq!(graded_obstruction(&i, &f).unwrap().verdict, Verdict::NotWeaklyLiftable);
        let p = IdealHandle::parse(&c, &["x^2 + y^2"]).unwrap();
        assert!(matches!(graded_obstruction(&p, &f), Err(Error::NotApplicable(_))));
        assert_eq!(weaklift_cyclic(&p, &f).unwrap().verdict, Verdict::WeaklyLiftable);
        let m = IdealHandle::maximal(&c);
        assert_eq!(obstruction_suite(&p, &f, &[m]).unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn gorenstein_socle_criterion() {
        let c = ctx(&["x", "y"]);
        let i = IdealHandle::parse(&c, &["x^2", "y^2"]).unwrap();
        let f = c.ring().parse("x^2 + y^2").unwrap();
        let d = weaklift_gor0(&i, &f).unwrap();
        assert_eq!(d.verdict, Verdict::WeaklyLiftable);
        assert_eq!(weaklift_cyclic(&i, &f).unwrap().verdict, Verdict::WeaklyLiftable);
        let g = c.ring().parse("x^4 + y^4").unwrap();
        let d = weaklift_gor0(&i, &g).unwrap();
        assert_eq!(d.verdict, Verdict::NotWeaklyLiftable);
        assert_eq!(weaklift_cyclic(&i, &g).unwrap().verdict, Verdict::NotWeaklyLiftable);
        let l = IdealHandle::parse(&c, &["x^2"]).unwrap();
        assert_eq!(certify_lift_cyclic(&i, &f, &l).unwrap().verdict, Verdict::LiftCertified);
        let m = IdealHandle::maximal(&c);
        assert_eq!(obstruction_suite(&i, &f, &[m]).unwrap().verdict, Verdict::Inconclusive);
        let not_gor = IdealHandle::parse(&c, &["x^2", "x*y", "y^2"]).unwrap();
        assert!(weaklift_gor0(&not_gor, &f).is_err());
    }

    #[test]
    fn one_dimensional_criterion() {
        let c = ctx(&["x", "y", "z"]);
        let i = IdealHandle::parse(&c, &["x^2", "y"]).unwrap();
        let j = IdealHandle::parse(&c, &["x^2", "y", "z"]).unwrap();
        let z = c.ring().parse("z").unwrap();
        for (f, expect) in [("y", Verdict::WeaklyLiftable), ("x^2", Verdict::WeaklyLiftable), ("y*z", Verdict::NotWeaklyLiftable)] {
            let f = c.ring().parse(f).unwrap();
            let d = weaklift_cm1(&i, &f, &j, &z).unwrap();
            assert_eq!(d.verdict, expect, "f = {f}");
            assert_eq!(weaklift_cyclic(&i, &f).unwrap().verdict, expect);
            assert!(d.warnings.contains(&Warning::WitnessConditional(z.clone())));
        }
        let zero_dim = IdealHandle::parse(&c, &["x^2", "y^2", "z"]).unwrap();
        assert!(weaklift_cm1(&zero_dim, &z, &j, &z).is_err());
        let x = c.ring().parse("x").unwrap();
        assert!(weaklift_cm1(&i, &c.ring().parse("y").unwrap(), &j, &x).is_err());
    }

    #[test]
    fn preconditions() {
        let c = ctx(&["x", "y"]);
        let i = IdealHandle::parse(&c, &["x"]).unwrap();
        assert!(weaklift_cyclic(&i, &c.ring().parse("y").unwrap()).is_err());
        assert!(weaklift_cyclic(&i, &c.ring().zero()).is_err());
        let r = PolyRing::new(Domain::Rationals, &["x", "y"]).unwrap();
        let q = RingContext::quotient(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let iq = IdealHandle::parse(&q, &["x"]).unwrap();
        assert!(weaklift_cyclic(&iq, &r.parse("x").unwrap()).is_err());
    }
}
