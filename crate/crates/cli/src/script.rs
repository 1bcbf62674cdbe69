//! Evaluation of parsed scripts: declarations build rings, ideals and
//! elements; tasks call into the core library and fill a [`Report`].

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use liftcheck_core::algebra::{Domain, MonomialOrder, PolyRing, Polynomial, RingContext};
use liftcheck_core::groebner::{self, Limits};
use liftcheck_core::idealcalc::IdealHandle;
use liftcheck_core::liftcrit::{self, LiftDecision};
use liftcheck_core::loci::{self, PointClass, Property};
use liftcheck_core::modsyz;
use serde_json::json;

use crate::dsl::{Arg, Expr, Pos, Script, Stmt, Value};
use crate::error::CliError;
use crate::report::{self, strings, Report, RingInfo, TaskReport};

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub timing: bool,
    pub max_degree: Option<u64>,
    pub timeout: Option<Duration>,
}

/// A finished run: the report plus one diagnostic per failed task.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub errors: Vec<(usize, CliError)>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        self.errors.iter().map(|(_, e)| e.exit_code()).max().unwrap_or(0)
    }
}

enum Binding {
    Ring,
    Ideal(usize, IdealHandle),
    Elem(usize, Polynomial),
}

#[derive(Default)]
pub struct Env {
    rings: Vec<(String, RingContext)>,
    names: HashMap<String, Binding>,
    current: Option<usize>,
}

fn kind_of(b: &Binding) -> &'static str {
    match b {
        Binding::Ring => "a ring",
        Binding::Ideal(..) => "an ideal",
        Binding::Elem(..) => "an element",
    }
}

impl Env {
    fn declare(&mut self, name: &str, b: Binding, pos: Pos) -> Result<(), CliError> {
        if self.names.contains_key(name) {
            return Err(CliError::semantic(pos, format!("`{name}` is already declared")));
        }
        self.names.insert(name.to_string(), b);
        Ok(())
    }

    fn current(&self, pos: Pos) -> Result<usize, CliError> {
        self.current.ok_or_else(|| CliError::semantic(pos, "no ring declared yet"))
    }

    fn ring_name(&self, r: usize) -> &str {
        &self.rings[r].0
    }

    pub fn ctx(&self, r: usize) -> &RingContext {
        &self.rings[r].1
    }

    pub fn eval(&self, r: usize, e: &Expr) -> Result<Polynomial, CliError> {
        let ring = self.ctx(r).ring();
        Ok(match e {
            Expr::Int(n) => Polynomial::constant(ring, ring.domain().from_bigint(n)),
            Expr::Name(s, pos) => {
                if let Some(i) = ring.var_index(s) {
                    ring.var(i)
                } else {
                    match self.names.get(s) {
                        Some(Binding::Elem(er, p)) if *er == r => p.clone(),
                        Some(Binding::Elem(er, _)) => {
                            return Err(CliError::semantic(*pos, format!("`{s}` belongs to ring `{}`", self.ring_name(*er))))
                        }
                        Some(b) => return Err(CliError::semantic(*pos, format!("`{s}` is {}, expected a polynomial", kind_of(b)))),
                        None => return Err(CliError::Undeclared { what: "name", name: s.clone(), pos: *pos }),
                    }
                }
            }
            Expr::Neg(a) => ring.zero().try_sub(&self.eval(r, a)?)?,
            Expr::Add(a, b) => self.eval(r, a)?.try_add(&self.eval(r, b)?)?,
            Expr::Sub(a, b) => self.eval(r, a)?.try_sub(&self.eval(r, b)?)?,
            Expr::Mul(a, b) => self.eval(r, a)?.try_mul(&self.eval(r, b)?)?,
            Expr::Div(a, b) => {
                let d = self.eval(r, b)?;
                let c = match d.leading_coeff() {
                    Some(c) if d.is_constant() => c.inv()?,
                    _ => return Err(CliError::Eval(format!("division by the non-constant `{d}`"))),
                };
                self.eval(r, a)?.scalar_mul(&c)?
            }
            Expr::Pow(a, e) => self.eval(r, a)?.pow(*e)?,
        })
    }

    fn declare_ring(&mut self, stmt: &Stmt, pos: Pos) -> Result<(), CliError> {
        let Stmt::Ring { name, domain, modulus, vars, relations, weights } = stmt else { unreachable!("ring statement") };
        let domain = match (domain.as_str(), *modulus) {
            ("QQ", None) => Domain::Rationals,
            ("ZZ", None) => Domain::Integers,
            ("GF", Some(p)) => Domain::prime_field(p)?,
            _ => return Err(CliError::semantic(pos, format!("unknown coefficient domain `{domain}`: use QQ, ZZ or GF(p)"))),
        };
        let mut ring = PolyRing::new(domain, vars)?;
        if !weights.is_empty() {
            ring = ring.with_weights(weights)?;
        }
        // relations are written in the new ring's variables only
        self.rings.push((name.to_string(), RingContext::polynomial(&ring)));
        let idx = self.rings.len() - 1;
        let rels = relations.iter().map(|e| self.eval(idx, e)).collect::<Result<Vec<_>, _>>();
        let rels = match rels {
            Ok(r) => r,
            Err(e) => {
                self.rings.pop();
                return Err(e);
            }
        };
        if !rels.is_empty() {
            self.rings[idx].1 = RingContext::quotient(&ring, rels)?;
        }
        self.declare(name, Binding::Ring, pos)?;
        self.current = Some(idx);
        Ok(())
    }

    fn apply(&mut self, stmt: &Stmt, pos: Pos) -> Result<(), CliError> {
        match stmt {
            Stmt::Ring { .. } => self.declare_ring(stmt, pos),
            Stmt::Ideal { name, gens } => {
                let r = self.current(pos)?;
                let gens = gens.iter().map(|g| self.eval(r, g)).collect::<Result<Vec<_>, _>>()?;
                let i = IdealHandle::new(self.ctx(r), gens)?;
                self.declare(name, Binding::Ideal(r, i), pos)
            }
            Stmt::Elem { name, value } => {
                let r = self.current(pos)?;
                let p = self.eval(r, value)?;
                self.declare(name, Binding::Elem(r, p), pos)
            }
            Stmt::Task { .. } => Ok(()),
        }
    }

    /// Every declared ideal with its ring, in declaration order of rings.
    pub fn ideals(&self) -> Vec<(&str, &str, &IdealHandle)> {
        let mut out: Vec<_> = self
            .names
            .iter()
            .filter_map(|(n, b)| match b {
                Binding::Ideal(r, i) => Some((*r, n.as_str(), i)),
                _ => None,
            })
            .collect();
        out.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        out.into_iter().map(|(r, n, i)| (self.ring_name(r), n, i)).collect()
    }
}

/// Named task arguments, consumed as they are read so that leftovers can be
/// reported.
struct Args<'a> {
    env: &'a Env,
    args: &'a [Arg],
    used: BTreeSet<usize>,
    pos: Pos,
    ring: Option<usize>,
}

impl<'a> Args<'a> {
    fn new(env: &'a Env, args: &'a [Arg], pos: Pos) -> Result<Args<'a>, CliError> {
        let mut seen = BTreeSet::new();
        for a in args {
            if !seen.insert(a.name.as_str()) {
                return Err(CliError::semantic(a.pos, format!("argument `{}` given twice", a.name)));
            }
        }
        Ok(Args { env, args, used: BTreeSet::new(), pos, ring: None })
    }

    fn take(&mut self, name: &str) -> Option<&'a Arg> {
        let k = self.args.iter().position(|a| a.name == name)?;
        self.used.insert(k);
        Some(&self.args[k])
    }

    fn require(&mut self, name: &str) -> Result<&'a Arg, CliError> {
        let pos = self.pos;
        self.take(name).ok_or_else(|| CliError::semantic(pos, format!("missing argument `{name}`")))
    }

    fn finish(&self) -> Result<(), CliError> {
        match (0..self.args.len()).find(|k| !self.used.contains(k)) {
            Some(k) => Err(CliError::semantic(self.args[k].pos, format!("unexpected argument `{}`", self.args[k].name))),
            None => Ok(()),
        }
    }

    fn ring(&mut self, pos: Pos) -> Result<usize, CliError> {
        match self.ring {
            Some(r) => Ok(r),
            None => {
                let r = self.env.current(pos)?;
                self.ring = Some(r);
                Ok(r)
            }
        }
    }

    fn bind_ring(&mut self, r: usize, pos: Pos) -> Result<(), CliError> {
        match self.ring {
            Some(s) if s != r => Err(CliError::semantic(
                pos,
                format!("task mixes rings `{}` and `{}`", self.env.ring_name(s), self.env.ring_name(r)),
            )),
            _ => {
                self.ring = Some(r);
                Ok(())
            }
        }
    }

    fn ideal_value(&mut self, arg: &Arg, e: &Value) -> Result<IdealHandle, CliError> {
        match e {
            Value::Expr(Expr::Name(s, pos)) => match self.env.names.get(s) {
                Some(Binding::Ideal(r, i)) => {
                    self.bind_ring(*r, *pos)?;
                    Ok(i.clone())
                }
                Some(b) => Err(CliError::semantic(*pos, format!("`{s}` is {}, expected an ideal", kind_of(b)))),
                None => Err(CliError::Undeclared { what: "ideal", name: s.clone(), pos: *pos }),
            },
            Value::List(gens) => {
                let r = self.ring(arg.pos)?;
                let gens = gens.iter().map(|g| self.env.eval(r, g)).collect::<Result<Vec<_>, _>>()?;
                Ok(IdealHandle::new(self.env.ctx(r), gens)?)
            }
            Value::Expr(_) => Err(CliError::semantic(arg.pos, format!("argument `{}` must name an ideal or list generators", arg.name))),
        }
    }

    fn ideal(&mut self, name: &str) -> Result<IdealHandle, CliError> {
        let arg = self.require(name)?;
        self.ideal_value(arg, &arg.value)
    }

    fn opt_ideal(&mut self, name: &str) -> Result<Option<IdealHandle>, CliError> {
        match self.take(name) {
            Some(arg) => Ok(Some(self.ideal_value(arg, &arg.value)?)),
            None => Ok(None),
        }
    }

    fn ideal_list(&mut self, name: &str) -> Result<Vec<IdealHandle>, CliError> {
        let Some(arg) = self.take(name) else { return Ok(Vec::new()) };
        match &arg.value {
            Value::List(items) => items.iter().map(|e| self.ideal_value(arg, &Value::Expr(e.clone()))).collect(),
            Value::Expr(_) => Ok(vec![self.ideal_value(arg, &arg.value)?]),
        }
    }

    fn poly(&mut self, name: &str) -> Result<Polynomial, CliError> {
        let arg = self.require(name)?;
        match &arg.value {
            Value::Expr(e) => {
                let r = self.ring(arg.pos)?;
                self.env.eval(r, e)
            }
            Value::List(_) => Err(CliError::semantic(arg.pos, format!("argument `{name}` must be a polynomial"))),
        }
    }

    fn opt_poly(&mut self, name: &str) -> Result<Option<Polynomial>, CliError> {
        if self.args.iter().any(|a| a.name == name) {
            self.poly(name).map(Some)
        } else {
            Ok(None)
        }
    }

    fn poly_list(&mut self, name: &str) -> Result<Option<Vec<Polynomial>>, CliError> {
        let Some(arg) = self.take(name) else { return Ok(None) };
        let r = self.ring(arg.pos)?;
        match &arg.value {
            Value::List(items) => Ok(Some(items.iter().map(|e| self.env.eval(r, e)).collect::<Result<_, _>>()?)),
            Value::Expr(_) => Err(CliError::semantic(arg.pos, format!("argument `{name}` must be a list"))),
        }
    }

    fn int(&mut self, name: &str, default: Option<u64>) -> Result<u64, CliError> {
        let Some(arg) = self.take(name) else {
            let pos = self.pos;
            return default.ok_or_else(|| CliError::semantic(pos, format!("missing argument `{name}`")));
        };
        match &arg.value {
            Value::Expr(Expr::Int(n)) => {
                u64::try_from(n).map_err(|_| CliError::semantic(arg.pos, format!("argument `{name}` is out of range")))
            }
            _ => Err(CliError::semantic(arg.pos, format!("argument `{name}` must be a non-negative integer"))),
        }
    }

    fn word(&mut self, name: &str, default: &str) -> Result<(String, Pos), CliError> {
        let Some(arg) = self.take(name) else { return Ok((default.to_string(), self.pos)) };
        match &arg.value {
            Value::Expr(Expr::Name(s, p)) => Ok((s.clone(), *p)),
            _ => Err(CliError::semantic(arg.pos, format!("argument `{name}` must be a keyword"))),
        }
    }
}

struct Done {
    decision: Option<LiftDecision>,
    result: Option<serde_json::Value>,
    warnings: Vec<String>,
}

impl Done {
    fn decision(d: LiftDecision) -> Done {
        Done { decision: Some(d), result: None, warnings: Vec::new() }
    }

    fn result(v: serde_json::Value) -> Done {
        Done { decision: None, result: Some(v), warnings: Vec::new() }
    }
}

pub const TASK_KINDS: [&str; 12] = [
    "weaklift_cyclic",
    "weaklift_gor0",
    "weaklift_cm1",
    "graded_obstruction",
    "obstruction_suite",
    "certify_lift",
    "betti",
    "group_ring",
    "locus",
    "locus_formula",
    "gb",
    "resolve",
];

fn run_task(env: &Env, kind: &str, args: &[Arg], pos: Pos) -> Result<(Option<usize>, Done), CliError> {
    let mut a = Args::new(env, args, pos)?;
    let done = match kind {
        "weaklift_cyclic" | "weaklift_gor0" | "graded_obstruction" => {
            let i = a.ideal("ideal")?;
            let f = a.poly("f")?;
            a.finish()?;
            Done::decision(match kind {
                "weaklift_cyclic" => liftcrit::weaklift_cyclic(&i, &f)?,
                "weaklift_gor0" => liftcrit::weaklift_gor0(&i, &f)?,
                _ => liftcrit::graded_obstruction(&i, &f)?,
            })
        }
        "weaklift_cm1" => {
            let i = a.ideal("ideal")?;
            let f = a.poly("f")?;
            let j = a.ideal("j")?;
            let w = a.poly("w")?;
            a.finish()?;
            Done::decision(liftcrit::weaklift_cm1(&i, &f, &j, &w)?)
        }
        "obstruction_suite" => {
            let i = a.ideal("ideal")?;
            let f = a.poly("f")?;
            let samples = a.ideal_list("samples")?;
            a.finish()?;
            Done::decision(liftcrit::obstruction_suite(&i, &f, &samples)?)
        }
        "certify_lift" => {
            let i = a.ideal("ideal")?;
            let f = a.poly("f")?;
            let l = a.ideal("lift")?;
            a.finish()?;
            Done::decision(liftcrit::certify_lift_cyclic(&i, &f, &l)?)
        }
        "betti" => {
            let i = a.ideal("ideal")?;
            let f = a.poly("f")?;
            let length = a.int("length", Some(4))? as usize;
            a.finish()?;
            let b = liftcrit::betti_relations(&i, &f, length)?;
            Done::result(json!({
                "truncation": b.truncation,
                "over_t": b.over_t,
                "over_r": b.over_r,
                "table_t": b.table_t.to_string().lines().collect::<Vec<_>>(),
                "table_r": b.table_r.to_string().lines().collect::<Vec<_>>(),
                "t_complete": b.t_complete,
                "r_complete": b.r_complete,
                "weak_lift_relation": b.weak_lift_relation,
                "shamash_relation": b.shamash_relation,
                "divisibility_applies": b.divisibility_applies,
                "quotient_by_square": b.quotient_by_square,
            }))
        }
        "group_ring" => {
            let p = a.int("p", None)?;
            let i = a.int("i", None)?;
            a.finish()?;
            Done::decision(liftcrit::group_ring_weaklift(p, i)?)
        }
        "locus" => {
            let i = a.ideal("ideal")?;
            let q = a.int("q", None)?;
            let (word, wpos) = a.word("property", "nwl")?;
            let property = match word.as_str() {
                "nwl" => Property::NotWeaklyLiftable,
                "npd" => Property::InfiniteProjDim,
                "obstruction_fail" => Property::ObstructionFails,
                other => {
                    return Err(CliError::semantic(wpos, format!("unknown property `{other}`: use nwl, npd or obstruction_fail")))
                }
            };
            let frame = a.poly_list("frame")?.unwrap_or_else(|| i.gens().to_vec());
            let samples = a.ideal_list("samples")?;
            a.finish()?;
            let res = loci::enumerate_locus(&i, &frame, q, property, &samples)?;
            let pick = |c: PointClass| res.points.iter().filter(|(_, k)| *k == c).map(|(p, _)| p.clone()).collect::<Vec<_>>();
            Done::result(json!({
                "q": res.q,
                "property": res.property.to_string(),
                "frame": strings(&res.frame),
                "points": res.points.len(),
                "in_locus": pick(PointClass::InLocus),
                "not_in_locus": res.count(PointClass::NotInLocus),
                "zerodivisor_skipped": pick(PointClass::ZeroDivisorSkipped),
                "additive": res.additive,
                "scalar": res.scalar,
            }))
        }
        "locus_formula" => {
            let i = a.ideal("ideal")?;
            let j = a.opt_ideal("j")?;
            let w = a.opt_poly("w")?;
            a.finish()?;
            let canonical = match (&j, &w) {
                (Some(j), Some(w)) => Some((j, w)),
                (None, None) => None,
                _ => return Err(CliError::semantic(pos, "`j` and `w` must be given together")),
            };
            let l = loci::locus_formula_nwl(&i, canonical)?;
            let gb = l.gb()?;
            let mut done = Done::result(json!({ "generators": strings(l.gens()), "groebner_basis": strings(gb.elements()) }));
            if canonical.is_some() {
                done.warnings.push(format!("symbolic square computed as I^2 : ({})^inf", w.as_ref().map(ToString::to_string).unwrap_or_default()));
            }
            done
        }
        "gb" => {
            let i = a.ideal("ideal")?;
            let (word, wpos) = a.word("order", "grevlex")?;
            let order = match word.as_str() {
                "grevlex" => MonomialOrder::Grevlex,
                "lex" => MonomialOrder::Lex,
                "block" => MonomialOrder::Block(a.int("block", None)? as usize),
                other => return Err(CliError::semantic(wpos, format!("unknown order `{other}`: use grevlex, lex or block"))),
            };
            a.finish()?;
            let gb = i.gb_in(order)?;
            let mut done = Done::result(json!({
                "order": word,
                "basis": strings(gb.elements()),
                "is_unit": gb.is_unit(),
            }));
            if !i.is_homogeneous() {
                done.warnings.push("non-graded input: computations are global, not local".into());
            }
            done
        }
        "resolve" => {
            let i = a.ideal("ideal")?;
            let length = a.int("length", Some(i.ring().nvars() as u64 + 1))? as usize;
            a.finish()?;
            let res = modsyz::resolve(&i, length)?;
            Done::result(json!({
                "betti": res.betti.totals(),
                "table": res.betti.to_string().lines().collect::<Vec<_>>(),
                "complete": res.complete,
                "projective_dimension": res.projective_dimension(),
                "differentials": res.differentials.iter().map(|d| d.rows.iter().map(|r| strings(r)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "transcript": res.transcript,
            }))
        }
        other => {
            return Err(CliError::semantic(pos, format!("unknown task `{other}`; known tasks: {}", TASK_KINDS.join(", "))));
        }
    };
    Ok((a.ring, done))
}

/// Builds the environment from every declaration, ignoring tasks.
pub fn declarations(script: &Script) -> Result<Env, CliError> {
    let mut env = Env::default();
    for (stmt, pos) in &script.stmts {
        env.apply(stmt, *pos)?;
    }
    Ok(env)
}

/// Runs a script. Parse and declaration errors abort the run; task errors
/// are recorded in the report and the remaining tasks still execute.
pub fn run(src: &str, opts: &Options) -> Result<Outcome, CliError> {
    let script = Script::parse(src)?;
    let mut env = Env::default();
    let mut report = Report { schema: report::SCHEMA_VERSION, tool: report::tool_version(), input_sha256: report::digest(src), tasks: Vec::new() };
    let mut errors = Vec::new();
    for (stmt, pos) in &script.stmts {
        let Stmt::Task { kind, args } = stmt else {
            env.apply(stmt, *pos)?;
            continue;
        };
        let index = report.tasks.len();
        let mut tr = TaskReport::new(index, kind, pos.line);
        groebner::set_limits(Limits { max_degree: opts.max_degree, deadline: opts.timeout.map(|t| Instant::now() + t) });
        let start = Instant::now();
        let outcome = run_task(&env, kind, args, *pos);
        let took = start.elapsed();
        groebner::set_limits(Limits::default());
        match outcome {
            Ok((ring, done)) => {
                tr.ring = ring.map(|r| RingInfo::new(env.ring_name(r), env.ctx(r)));
                if let Some(d) = &done.decision {
                    tr.record(d);
                }
                tr.warnings.extend(done.warnings);
                tr.result = done.result;
            }
            Err(e) => {
                tr.error = Some(e.to_string());
                errors.push((index, e));
            }
        }
        if opts.timing {
            tr.time_ms = Some(took.as_secs_f64() * 1e3);
        }
        report.tasks.push(tr);
    }
    Ok(Outcome { report, errors })
}
