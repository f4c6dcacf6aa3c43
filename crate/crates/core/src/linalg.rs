//! Dense matrices over a small prime field and their rank.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField(u32);

impl PrimeField {
    pub const F2: PrimeField = PrimeField(2);
    pub const F3: PrimeField = PrimeField(3);

    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2
            && (2..)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(self) -> u32 {
        self.0
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        let mut result = 1u32;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::F2
    }
}

/// Row-major dense matrix with entries already reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from nested rows, reducing entries into `field`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize, field: PrimeField) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::MalformedRepresentation(alloc::format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, &x) in row.iter().enumerate() {
                m.set(r, c, field.reduce(x));
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries_below(&self, p: u32) -> bool {
        self.data.iter().all(|&x| x < p)
    }

    /// Rank over `field` by Gaussian elimination. Pivots are chosen as the
    /// first nonzero entry in row-major scan of the remaining block, so the
    /// elimination sequence is reproducible.
    pub fn rank(&self, field: PrimeField) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in col..cols {
                    a.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = field.inv(a[rank * cols + col]);
            for c in col..cols {
                a[rank * cols + c] = field.mul(a[rank * cols + c], inv);
            }
            for r in rank + 1..rows {
                let factor = a[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let v = field.mul(factor, a[rank * cols + c]);
                    a[r * cols + c] = field.sub(a[r * cols + c], v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rank_small() {
        let f = PrimeField::F2;
        let m = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3, f).unwrap();
        // rows sum to zero mod 2
        assert_eq!(m.rank(f), 2);
        let f3 = PrimeField::F3;
        let m3 = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3, f3).unwrap();
        assert_eq!(m3.rank(f3), 3);
        assert_eq!(Matrix::identity(4).rank(f), 4);
        assert_eq!(Matrix::zeros(3, 5).rank(f), 0);
        assert_eq!(Matrix::zeros(0, 5).rank(f), 0);
    }

    #[test]
    fn block_diag_rank_adds() {
        let f = PrimeField::F3;
        let a = Matrix::from_rows(&[vec![1, 2], vec![2, 1]], 2, f).unwrap();
        let b = Matrix::from_rows(&[vec![1, 1, 1]], 3, f).unwrap();
        let d = a.block_diag(&b);
        assert_eq!((d.rows(), d.cols()), (3, 5));
        assert_eq!(d.rank(f), a.rank(f) + b.rank(f));
    }
}
