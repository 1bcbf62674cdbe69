#![allow(dead_code)]

use std::collections::BTreeMap;

use liftcheck_core::algebra::{Domain, PolyRing, Polynomial, RingContext};
use liftcheck_core::idealcalc::IdealHandle;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Dense = BTreeMap<Vec<u32>, BigRational>;

pub fn ring(domain: Domain, vars: &[&str]) -> PolyRing {
    PolyRing::new(domain, vars).unwrap()
}

pub fn ctx(domain: Domain, vars: &[&str]) -> RingContext {
    RingContext::polynomial(&ring(domain, vars))
}

pub fn ideal(c: &RingContext, gens: &[&str]) -> IdealHandle {
    IdealHandle::parse(c, gens).unwrap()
}

pub fn poly(c: &RingContext, s: &str) -> Polynomial {
    c.ring().parse(s).unwrap()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Coefficients of a rational polynomial keyed by exponent vector. The
/// `Display` form is parsed back so no library arithmetic is involved.
pub fn to_dense(p: &Polynomial) -> Dense {
    let mut out = Dense::new();
    for t in p.terms() {
        let exps: Vec<u32> = t.mono.exponents().iter().map(|&e| e as u32).collect();
        let c: BigRational = t.coeff.to_string().parse().unwrap();
        out.insert(exps, c);
    }
    out
}

fn dense_mul_monomial(p: &Dense, m: &[u32]) -> Dense {
    p.iter().map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone())).collect()
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &rows[r][c];
            for k in c..ncols {
                let sub = &factor * &rows[r][k];
                rows[i][k] -= sub;
            }
        }
        r += 1;
    }
    r
}

/// Membership of a homogeneous `g` in the ideal of homogeneous rational
/// `gens` (standard grading), by comparing ranks of the degree-`deg g`
/// Macaulay matrix with and without `g`.
pub fn macaulay_member(gens: &[Polynomial], g: &Polynomial, nvars: usize) -> bool {
    if g.is_zero() {
        return true;
    }
    let gd = to_dense(g);
    let d: u32 = gd.keys().next().unwrap().iter().sum();
    let cols = monomials_of_degree(nvars, d);
    let index: BTreeMap<&Vec<u32>, usize> = cols.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let to_row = |p: &Dense| {
        let mut row = vec![BigRational::zero(); cols.len()];
        for (e, c) in p {
            row[index[e]] = c.clone();
        }
        row
    };
    let mut rows = Vec::new();
    for f in gens.iter().filter(|f| !f.is_zero()) {
        let fd = to_dense(f);
        let e: u32 = fd.keys().next().unwrap().iter().sum();
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - e) {
            rows.push(to_row(&dense_mul_monomial(&fd, &m)));
        }
    }
    let base = rank(rows.clone());
    rows.push(to_row(&gd));
    rank(rows) == base
}

/// A random homogeneous polynomial of degree `d` with small integer
/// coefficients, standard grading.
pub fn random_homogeneous(r: &PolyRing, d: u32, density: f64, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = r.nvars();
    loop {
        let mut text = Vec::new();
        for m in monomials_of_degree(n, d) {
            if !rng.gen_bool(density) {
                continue;
            }
            let c: i64 = rng.gen_range(-3..=3);
            if c == 0 {
                continue;
            }
            let mono: Vec<String> = m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, e)| format!("{}^{}", r.vars()[k], e)).collect();
            let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            text.push(format!("({c})*{mono}"));
        }
        if text.is_empty() {
            continue;
        }
        let p = r.parse(&text.join(" + ")).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random homogeneous element of the ideal generated by `gens` in degree `d`.
pub fn random_member(r: &PolyRing, gens: &[Polynomial], d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let mut acc = r.zero();
        for g in gens {
            let e = g.degree() as u32;
            if e > d || rng.gen_bool(0.3) {
                continue;
            }
            let c = random_homogeneous(r, d - e, 0.6, rng);
            acc = acc.try_add(&c.try_mul(g).unwrap()).unwrap();
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}
