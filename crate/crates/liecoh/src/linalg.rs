//! Dense exact linear algebra over the prime field `F_p`.
//!
//! Everything here is elementary row reduction, kept deliberately simple: the
//! matrices that arise degreewise from the differentials in this crate are at
//! most a few hundred rows and columns, so a dense representation with `u32`
//! entries (and `u64` intermediate products) is both exact and fast enough.

use crate::{Error, Result};

/// Dense row-major matrix over `F_p` for a prime `p < 2^16`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFp {
    p: u32,
    nrows: usize,
    ncols: usize,
    data: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl MatrixFp {
    /// Zero matrix of the given shape.
    pub fn zero(p: u32, nrows: usize, ncols: usize) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 16) {
            return Err(Error::InvalidInput(format!(
                "matrix modulus must be a prime below 2^16, got {p}"
            )));
        }
        Ok(MatrixFp {
            p,
            nrows,
            ncols,
            data: vec![0; nrows * ncols],
        })
    }

    pub fn from_rows(p: u32, ncols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut m = MatrixFp::zero(p, rows.len(), ncols)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::InvalidInput(format!(
                    "row {i} has length {} instead of {ncols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.ncols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.ncols + j] = v % self.p;
    }

    fn inv_mod(&self, a: u32) -> u32 {
        // Fermat: a^(p-2) mod p.
        let p = self.p as u64;
        let mut base = a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// In-place reduction to reduced row echelon form.  Returns the pivot
    /// columns in increasing order; the rank is their number.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.ncols {
            if row == self.nrows {
                break;
            }
            // Find a pivot in this column at or below `row`.
            let Some(pr) = (row..self.nrows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for j in 0..self.ncols {
                    self.data.swap(row * self.ncols + j, pr * self.ncols + j);
                }
            }
            // Normalise the pivot row.
            let inv = self.inv_mod(self.get(row, col)) as u64;
            for j in col..self.ncols {
                let v = self.get(row, j) as u64 * inv % p;
                self.set(row, j, v as u32);
            }
            // Eliminate the column everywhere else.
            for r in 0..self.nrows {
                if r == row || self.get(r, col) == 0 {
                    continue;
                }
                let f = self.get(r, col) as u64;
                for j in col..self.ncols {
                    let v = (self.get(r, j) as u64 + (p - f % p) * self.get(row, j) as u64) % p;
                    self.set(r, j, v as u32);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank of the matrix (does not mutate the receiver).
    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of `{x : M x = 0}` as column vectors of length `ncols`.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let p = self.p as u64;
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u32; self.ncols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                // x[pc] = -m[r][free]
                let a = m.get(r, free) as u64;
                v[pc] = ((p - a % p) % p) as u32;
            }
            basis.push(v);
        }
        basis
    }

    /// Does `v` lie in the column span of the matrix?
    pub fn image_membership(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.nrows {
            return Err(Error::InvalidInput(format!(
                "vector length {} does not match row count {}",
                v.len(),
                self.nrows
            )));
        }
        let mut aug = MatrixFp::zero(self.p, self.nrows, self.ncols + 1)?;
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.ncols, v[i]);
        }
        Ok(aug.rank() == self.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel_small() {
        // Rows of a 3x3 over F_5 with rank 2.
        let m = MatrixFp::from_rows(
            5,
            3,
            &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        // Check M k = 0.
        for row in 0..3 {
            let mut acc = 0u64;
            for col in 0..3 {
                acc += m.get(row, col) as u64 * ker[0][col] as u64;
            }
            assert_eq!(acc % 5, 0);
        }
    }

    #[test]
    fn rank_nullity() {
        let m = MatrixFp::from_rows(
            2,
            4,
            &[vec![1, 1, 0, 1], vec![0, 1, 1, 1], vec![1, 0, 1, 0]],
        )
        .unwrap();
        assert_eq!(m.rank() + m.kernel_basis().len(), 4);
    }

    #[test]
    fn membership() {
        let m = MatrixFp::from_rows(3, 2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        // Columns span {(a, b, a+b)}.
        assert!(m.image_membership(&[1, 2, 0]).unwrap());
        assert!(!m.image_membership(&[1, 2, 1]).unwrap());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(MatrixFp::zero(6, 2, 2).is_err());
    }
}
