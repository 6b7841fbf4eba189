//! Sparse binary matrices stored as sorted row supports, with GF(2)
//! elimination.

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryMatrix {
    m: usize,
    n: usize,
    row_supports: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// Builds an `m x n` matrix from row supports; supports are sorted and
    /// deduplicated.
    pub fn new(n: usize, row_supports: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = row_supports;
        for (j, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            if let Some(&bad) = row.iter().find(|&&i| i >= n) {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has support index {bad} outside 0..{n}"
                )));
            }
        }
        Ok(BinaryMatrix {
            m: rows.len(),
            n,
            row_supports: rows,
        })
    }

    /// Builds from dense 0/1 rows.
    pub fn from_dense(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("ragged dense matrix".into()));
        }
        let supports = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect())
            .collect();
        BinaryMatrix::new(n, supports)
    }

    pub fn identity(n: usize) -> Self {
        BinaryMatrix {
            m: n,
            n,
            row_supports: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// Circulant matrix whose row `i` is `first_row` shifted right by `i`.
    pub fn circulant(n: usize, first_row: &[usize]) -> Result<Self> {
        let rows = (0..n)
            .map(|i| first_row.iter().map(|&x| (x + i) % n).collect())
            .collect();
        BinaryMatrix::new(n, rows)
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn row_support(&self, j: usize) -> &[usize] {
        &self.row_supports[j]
    }

    pub fn row_supports(&self) -> &[Vec<usize>] {
        &self.row_supports
    }

    pub fn get(&self, j: usize, i: usize) -> bool {
        self.row_supports[j].binary_search(&i).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0 || self.n == 0
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.row_supports.iter().map(Vec::len).collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.n];
        for row in &self.row_supports {
            for &i in row {
                w[i] += 1;
            }
        }
        w
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.row_supports.swap(a, b);
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        self.row_supports
            .iter()
            .map(|r| {
                let mut d = vec![0u8; self.n];
                r.iter().for_each(|&i| d[i] = 1);
                d
            })
            .collect()
    }

    pub fn row_bits(&self) -> Vec<Bits> {
        self.row_supports
            .iter()
            .map(|r| Bits::from_indices(self.n, r.iter().copied()))
            .collect()
    }

    /// True iff every row is the cyclic right-shift of row 0 by its index.
    pub fn is_circulant(&self) -> Result<bool> {
        if self.m != self.n {
            return Err(Error::NotSquare {
                rows: self.m,
                cols: self.n,
            });
        }
        let n = self.n;
        Ok(self.row_supports.iter().enumerate().all(|(i, row)| {
            let mut shifted: Vec<usize> = self.row_supports[0].iter().map(|&x| (x + i) % n).collect();
            shifted.sort_unstable();
            &shifted == row
        }))
    }

    /// Syndrome test `H x^T = 0 (mod 2)` for a 0/1 vector.
    pub fn is_codeword(&self, x: &[u8]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self
            .row_supports
            .iter()
            .all(|row| row.iter().filter(|&&i| x[i] & 1 == 1).count() % 2 == 0))
    }

    /// Rank over GF(2).
    pub fn rank_gf2(&self) -> usize {
        gf2_echelon(self.row_bits(), self.n).1.len()
    }

    /// A basis of the GF(2) null space, i.e. a generator set of the code.
    pub fn nullspace_gf2(&self) -> Vec<Bits> {
        let (reduced, pivots) = gf2_echelon(self.row_bits(), self.n);
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Bits::new(self.n);
                v.insert(f);
                for (row, &pc) in reduced.iter().zip(&pivots) {
                    if row.contains(f) {
                        v.insert(pc);
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form over GF(2); returns the nonzero rows and their
/// pivot columns.
fn gf2_echelon(mut rows: Vec<Bits>, ncols: usize) -> (Vec<Bits>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].contains(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.contains(col) {
                row.xor_with(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}
