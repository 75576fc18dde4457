//! Sub-permutation 0-1 matrices and their survival-zero statistics.

use super::{LaguerreWord, Letter};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// An n×n 0-1 matrix with at most one 1 per row and per column; cell (i,j)
/// is 1-based. Round-trips with Laguerre words via π_i = j ⟺ (i,j) ∈ ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroOneMatrix {
    n: usize,
    ones: BTreeSet<(usize, usize)>,
}

impl ZeroOneMatrix {
    pub fn new(n: usize, ones: BTreeSet<(usize, usize)>) -> Result<Self> {
        let mut row_used = vec![false; n + 1];
        let mut col_used = vec![false; n + 1];
        for &(i, j) in &ones {
            if i == 0 || i > n || j == 0 || j > n {
                return Err(Error::InvalidArgument(format!(
                    "cell ({i},{j}) outside [{n}]²"
                )));
            }
            if row_used[i] || col_used[j] {
                return Err(Error::InvalidArgument(format!(
                    "row or column of ({i},{j}) already holds a 1"
                )));
            }
            row_used[i] = true;
            col_used[j] = true;
        }
        Ok(ZeroOneMatrix { n, ones })
    }

    pub fn from_word(w: &LaguerreWord) -> Self {
        let ones = w
            .letters()
            .iter()
            .enumerate()
            .filter_map(|(i, l)| match l {
                Letter::Num(v) => Some((i + 1, *v as usize)),
                Letter::Hole => None,
            })
            .collect();
        ZeroOneMatrix { n: w.n(), ones }
    }

    pub fn to_word(&self) -> LaguerreWord {
        let mut row_one = vec![None; self.n + 1];
        for &(i, j) in &self.ones {
            row_one[i] = Some(j as u32);
        }
        let letters = (1..=self.n)
            .map(|i| match row_one[i] {
                Some(j) => Letter::Num(j),
                None => Letter::Hole,
            })
            .collect();
        LaguerreWord::new(self.n, letters).expect("a valid matrix row-reads to a valid word")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ones(&self) -> &BTreeSet<(usize, usize)> {
        &self.ones
    }

    fn row_col_ones(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut row_one = vec![None; self.n + 1]; // row -> its 1's column
        let mut col_one = vec![None; self.n + 1]; // col -> its 1's row
        for &(i, j) in &self.ones {
            row_one[i] = Some(j);
            col_one[j] = Some(i);
        }
        (row_one, col_one)
    }

    /// Counts the zeros surviving the inv deletion rules: delete 0's below a
    /// 1 in their column, 0's right of a 1 in their row, and 0's with no 1
    /// in either their row or their column.
    pub fn survivor_inv(&self) -> usize {
        let (row_one, col_one) = self.row_col_ones();
        let mut count = 0;
        #[allow(clippy::needless_range_loop)]
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.ones.contains(&(i, j)) {
                    continue;
                }
                if let Some(r) = col_one[j] {
                    if r < i {
                        continue; // below the 1 of its column
                    }
                } else if row_one[i].is_none() {
                    continue; // no 1 in row nor column
                }
                if let Some(c) = row_one[i] {
                    if c < j {
                        continue; // right of the 1 of its row
                    }
                }
                count += 1;
            }
        }
        count
    }

    /// Counts the zeros satisfying the maj rules: above a column-1 whose
    /// row-above contains a 1 strictly to its right, above a column-1 with
    /// no 1 in the row above, or left of a row-1 when their column has no 1.
    pub fn survivor_maj(&self) -> usize {
        let (row_one, col_one) = self.row_col_ones();
        let mut count = 0;
        #[allow(clippy::needless_range_loop)]
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.ones.contains(&(i, j)) {
                    continue;
                }
                let survives = match col_one[j] {
                    Some(r) => {
                        i < r
                            && match row_one[r - 1] {
                                Some(c2) => c2 > j,
                                None => true,
                            }
                    }
                    None => matches!(row_one[i], Some(c) if c > j),
                };
                if survives {
                    count += 1;
                }
            }
        }
        count
    }
}
