use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};
use crate::idealcalc::{krull_dim, IdealHandle};
use crate::modsyz::{self, BettiTable};

/// Betti numbers of `T/I` over `T` and over `R = T/(f)`, truncated to `L`
/// homological degrees, and the relations between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub truncation: usize,
    /// `b^T_0, …, b^T_{L−1}`, zero-padded past the end of the resolution.
    pub over_t: Vec<usize>,
    pub over_r: Vec<usize>,
    pub table_t: BettiTable,
    pub table_r: BettiTable,
    pub t_complete: bool,
    pub r_complete: bool,
    /// `b^T_i = b^R_i + b^R_{i−1}` for `i < L` (consequence of a weak lift).
    pub weak_lift_relation: bool,
    /// `b^R_i = b^T_i + b^R_{i−2}` for `i < L` (the case `f ∈ m·I`).
    pub shamash_relation: bool,
    /// `P^T(t) / (1+t)^2` when the `T`-resolution is complete and
    /// `dim T/I < dim R`; `None` if not applicable or not divisible.
    pub quotient_by_square: Option<Vec<i64>>,
    /// Whether the divisibility test applied.
    pub divisibility_applies: bool,
}

fn padded(totals: Vec<usize>, len: usize) -> Vec<usize> {
    let mut v = totals;
    v.resize(len, 0);
    v.truncate(len);
    v
}

/// Divides by `(1+t)^2`, returning the quotient if the remainder is zero.
fn divide_by_square(p: &[usize]) -> Option<Vec<i64>> {
    let mut rem: Vec<i64> = p.iter().map(|&b| b as i64).collect();
    while rem.last() == Some(&0) {
        rem.pop();
    }
    if rem.len() < 3 {
        return None;
    }
    // synthetic division by (1 + t) twice, from the top coefficient
    for _ in 0..2 {
        let n = rem.len();
        let mut q = vec![0i64; n - 1];
        let mut carry = 0;
        for k in (1..n).rev() {
            q[k - 1] = rem[k] - carry;
            carry = q[k - 1];
        }
        if rem[0] != carry {
            return None;
        }
        rem = q;
    }
    Some(rem)
}

pub fn betti_relations(i: &IdealHandle, f: &Polynomial, truncation: usize) -> Result<BettiReport> {
    if truncation < 2 {
        return Err(Error::precondition("Betti truncation must be at least 2"));
    }
    i.check_element(f)?;
    let f = f.reorder(i.ring())?;
    if !i.contains(&f)? {
        return Err(Error::precondition(format!("f = {f} is not in I")));
    }
    let res_t = modsyz::resolve(i, truncation - 1)?;
    let r_ctx = i.ctx().hypersurface(&f)?;
    let i_r = IdealHandle::new(&r_ctx, i.gens().to_vec())?;
    let res_r = modsyz::resolve(&i_r, truncation - 1)?;
    let bt = padded(res_t.betti.totals(), truncation);
    let br = padded(res_r.betti.totals(), truncation);
    let at = |v: &[usize], k: isize| if k < 0 { 0 } else { v[k as usize] };
    let weak = (0..truncation as isize).all(|k| at(&bt, k) == at(&br, k) + at(&br, k - 1));
    let shamash = (0..truncation as isize).all(|k| at(&br, k) == at(&bt, k) + at(&br, k - 2));
    let dim_m = krull_dim(i)?;
    let dim_r = krull_dim(&IdealHandle::new(i.ctx(), vec![f.clone()])?)?;
    let applies = res_t.complete && matches!((dim_m, dim_r), (Some(a), Some(b)) if a < b);
    let quotient = if applies { divide_by_square(&res_t.betti.totals()) } else { None };
    Ok(BettiReport {
        truncation,
        over_t: bt,
        over_r: br,
        table_t: res_t.betti,
        table_r: res_r.betti,
        t_complete: res_t.complete,
        r_complete: res_r.complete,
        weak_lift_relation: weak,
        shamash_relation: shamash,
        quotient_by_square: quotient,
        divisibility_applies: applies,
    })
}
