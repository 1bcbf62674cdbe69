use std::collections::BTreeMap;
use std::fmt;

/// Graded Betti numbers `b_{i,j}`: column `i` lists the degrees of the
/// generators of the `i`-th free module, with multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    columns: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn push(&mut self, mut degrees: Vec<u64>) {
        degrees.sort_unstable();
        self.columns.push(degrees);
    }

    /// Total Betti numbers `b_i = Σ_j b_{i,j}`.
    pub fn totals(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn get(&self, i: usize, j: u64) -> usize {
        self.columns.get(i).map_or(0, |c| c.iter().filter(|&&d| d == j).count())
    }

    /// Highest homological index present (0 for a single column).
    pub fn length(&self) -> usize {
        self.columns.len().saturating_sub(1)
    }

    pub fn columns(&self) -> &[Vec<u64>] {
        &self.columns
    }

    /// Nonzero entries as `(i, j, b_{i,j})`.
    pub fn entries(&self) -> Vec<(usize, u64, usize)> {
        let mut out = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
            for &d in c {
                *counts.entry(d).or_default() += 1;
            }
            out.extend(counts.into_iter().map(|(j, n)| (i, j, n)));
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Rows are indexed by `j − i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries = self.entries();
        let Some(max_row) = entries.iter().map(|&(i, j, _)| j as i64 - i as i64).max() else {
            return write!(f, "total: 0");
        };
        let min_row = entries.iter().map(|&(i, j, _)| j as i64 - i as i64).min().unwrap_or(0);
        let width = self.columns.len();
        let totals: Vec<String> = self.totals().iter().map(|t| format!("{t:>4}")).collect();
        write!(f, "total:{}", totals.join(""))?;
        for r in min_row..=max_row {
            write!(f, "\n{r:>5}:")?;
            for i in 0..width {
                let j = r + i as i64;
                let n = if j < 0 { 0 } else { self.get(i, j as u64) };
                if n == 0 {
                    write!(f, "{:>4}", ".")?;
                } else {
                    write!(f, "{n:>4}")?;
                }
            }
        }
        Ok(())
    }
}
