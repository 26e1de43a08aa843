//! Dense row-major matrices over `GF(p)`.

use super::field::{inv_mod, Fp};
use std::fmt;

/// A dense matrix over `GF(p)`. Entries are stored as reduced residues, so
/// `==` is exact equality of matrices over the same field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Mat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_flat(p: u32, rows: usize, cols: usize, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        let m = i64::from(p);
        Mat {
            p,
            rows,
            cols,
            data: data.into_iter().map(|v| v.rem_euclid(m) as u32).collect(),
        }
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let flat: Vec<i64> = rows
            .iter()
            .inspect(|r| assert_eq!(r.len(), cols, "ragged rows"))
            .flatten()
            .copied()
            .collect();
        Mat::from_flat(p, rows.len(), cols, flat)
    }

    /// A single-row matrix holding `v`.
    pub fn row_vec(p: u32, v: &[u32]) -> Self {
        Mat {
            p,
            rows: 1,
            cols: v.len(),
            data: v.iter().map(|&x| x % p).collect(),
        }
    }

    /// A single-column matrix holding `v`.
    pub fn col_vec(p: u32, v: &[u32]) -> Self {
        Mat {
            p,
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|&x| x % p).collect(),
        }
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> Fp {
        Fp::new(i64::from(self.raw(i, j)), self.p)
    }

    #[inline]
    pub fn raw(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fp) {
        assert_eq!(v.prime(), self.p);
        self.set_raw(i, j, v.value());
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.raw(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn flat(&self) -> &[u32] {
        &self.data
    }

    fn check(&self, rhs: &Mat) {
        assert_eq!(self.p, rhs.p, "mixed primes");
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        self.check(rhs);
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| (a + b) % self.p)
            .collect();
        Mat { data, ..*self }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.check(rhs);
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| (a + self.p - b) % self.p)
            .collect();
        Mat { data, ..*self }
    }

    pub fn neg(&self) -> Mat {
        let data = self.data.iter().map(|&a| (self.p - a) % self.p).collect();
        Mat { data, ..*self }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let c = u64::from(c % self.p);
        let m = u64::from(self.p);
        let data = self
            .data
            .iter()
            .map(|&a| (u64::from(a) * c % m) as u32)
            .collect();
        Mat { data, ..*self }
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        self.check(rhs);
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let m = u64::from(self.p);
        let mut out = Mat::zeros(self.p, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = u64::from(self.raw(i, k));
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = u64::from(out.data[i * rhs.cols + j]);
                    out.data[i * rhs.cols + j] =
                        ((cur + a * u64::from(rhs.raw(k, j))) % m) as u32;
                }
            }
        }
        out
    }

    /// `self * v` for a flat column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let m = u64::from(self.p);
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for j in 0..self.cols {
                    acc = (acc + u64::from(self.raw(i, j)) * u64::from(v[j] % self.p)) % m;
                }
                acc as u32
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.raw(i, j);
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Mat) -> Mat {
        self.check(rhs);
        assert_eq!(self.rows, rhs.rows);
        let mut out = Mat::zeros(self.p, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols].copy_from_slice(rhs.row(i));
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Mat) -> Mat {
        self.check(rhs);
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Mat {
            p: self.p,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(i0, j0)`.
    pub fn paste(&mut self, i0: usize, j0: usize, block: &Mat) {
        self.check(block);
        assert!(i0 + block.rows <= self.rows && j0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(i0 + i) * self.cols + (j0 + j)] = block.raw(i, j);
            }
        }
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        let mut out = Mat::zeros(self.p, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.data[(i - r0) * out.cols + (j - c0)] = self.raw(i, j);
            }
        }
        out
    }

    /// Gauss–Jordan elimination. Returns the reduced row-echelon form and the
    /// pivot column indices (one per pivot row, strictly increasing).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let p64 = u64::from(self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.raw(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = u64::from(inv_mod(m.raw(r, c), m.p));
            for j in c..m.cols {
                let v = u64::from(m.raw(r, j)) * inv % p64;
                m.data[r * m.cols + j] = v as u32;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = u64::from(m.raw(i, c));
                if f == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = u64::from(m.raw(i, j)) + (p64 - 1) * f % p64 * u64::from(m.raw(r, j));
                    m.data[i * m.cols + j] = (v % p64) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : self·v = 0}`, one vector per row.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.p, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set_raw(k, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = r.raw(pr, fc);
                if v != 0 {
                    out.set_raw(k, pc, self.p - v);
                }
            }
        }
        out
    }

    /// Solves `self · X = rhs` for any solution `X`; `None` if inconsistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        self.check(rhs);
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // Inconsistent iff some pivot falls in the rhs block.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.p, self.cols, rhs.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set_raw(pc, j, r.raw(pr, self.cols + j));
            }
        }
        Some(x)
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_gf2() {
        let id = Mat::identity(2, 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(id.kernel().rows(), 0);
    }

    #[test]
    fn rref_zero() {
        let z = Mat::zeros(2, 3, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().rows(), 3);
    }

    #[test]
    fn kernel_of_ones_gf2_matches_enumeration() {
        // Oracle: enumerate all 4 vectors of GF(2)^2.
        let m = Mat::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        let mut ker_vecs = Vec::new();
        for a in 0..2u32 {
            for b in 0..2u32 {
                if m.apply(&[a, b]).iter().all(|&v| v == 0) {
                    ker_vecs.push(vec![a, b]);
                }
            }
        }
        assert_eq!(ker_vecs, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.rows(), 1);
        assert_eq!(k.row(0), &[1, 1]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Mat::from_rows(5, &[vec![1, 2], vec![3, 4]]);
        let rhs = Mat::col_vec(5, &[1, 2]);
        let x = a.solve(&rhs).unwrap();
        assert_eq!(a.mul(&x), rhs);

        let sing = Mat::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert!(sing.solve(&Mat::col_vec(2, &[1, 0])).is_none());
    }

    proptest! {
        #[test]
        fn rank_nullity(p in prop::sample::select(vec![2u32, 3, 5]),
                        rows in 0usize..6, cols in 0usize..6,
                        seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as i64 };
            let data: Vec<i64> = (0..rows*cols).map(|_| next()).collect();
            let m = Mat::from_flat(p, rows, cols, data);
            prop_assert_eq!(m.rank() + m.kernel().rows(), cols);
        }

        #[test]
        fn kernel_rows_are_killed(p in prop::sample::select(vec![2u32, 3]),
                                  rows in 1usize..5, cols in 1usize..5,
                                  seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as i64 };
            let data: Vec<i64> = (0..rows*cols).map(|_| next()).collect();
            let m = Mat::from_flat(p, rows, cols, data);
            let k = m.kernel();
            for i in 0..k.rows() {
                prop_assert!(m.apply(k.row(i)).iter().all(|&v| v == 0));
            }
        }
    }
}
