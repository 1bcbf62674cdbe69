//! Dense exact linear algebra over a field of scalars.

use crate::algebra::scalar::{Domain, Scalar};
use crate::error::Result;

/// Reduces `rows` (all of width `ncols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot column of each row.
pub fn rref(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv()?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let sub = &f * &rows[r][k];
                    rows[i][k] = &rows[i][k] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Ok(pivots)
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> Result<usize> {
    let mut m = rows.to_vec();
    Ok(rref(&mut m, ncols)?.len())
}

/// A basis of `{v : A·v = 0}` for `A` given by `rows`, in the standard form
/// where each basis vector has a single free coordinate equal to one.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize, domain: Domain) -> Result<Vec<Vec<Scalar>>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols)?;
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![domain.zero(); ncols];
        v[free] = domain.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        out.push(v);
    }
    Ok(out)
}
