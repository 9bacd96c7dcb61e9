//! Dense linear algebra over a prime field.

use crate::field::Field;

/// Row-major dense matrix with entries in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_to(&mut self, f: Field, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.data[i] = f.add(self.data[i], v);
    }

    pub fn mul(&self, f: Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_to(f, i, j, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn rank(&self, f: Field) -> usize {
        let mut span = Span::new(self.cols);
        for r in 0..self.rows {
            span.insert(f, self.data[r * self.cols..(r + 1) * self.cols].to_vec());
        }
        span.dim()
    }

    pub fn is_invertible(&self, f: Field) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel(&self, f: Field) -> Vec<Vec<u32>> {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(pr) = (row..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..cols {
                    m.swap(pr * cols + c, row * cols + c);
                }
            }
            let inv = f.inv(m[row * cols + col]);
            for c in col..cols {
                m[row * cols + c] = f.mul(m[row * cols + c], inv);
            }
            for r in 0..rows {
                if r == row {
                    continue;
                }
                let factor = m[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let v = f.mul(factor, m[row * cols + c]);
                    m[r * cols + c] = f.sub(m[r * cols + c], v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut is_pivot = vec![false; cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[i * cols + free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Incrementally built subspace of `F_p^n` in reduced echelon form.
///
/// Optionally tracks, for each reduced row, its expression in terms of the
/// inserted vectors, so that membership queries can return coefficients.
#[derive(Clone, Debug)]
pub struct Span {
    n: usize,
    rows: Vec<(usize, Vec<u32>, Vec<u32>)>,
    inserted: usize,
}

impl Span {
    pub fn new(n: usize) -> Span {
        Span { n, rows: Vec::new(), inserted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    fn reduce(&self, f: Field, v: &mut [u32], combo: &mut Vec<u32>) {
        for (pivot, row, rc) in &self.rows {
            let a = v[*pivot];
            if a == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row.iter()) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
            if combo.len() < rc.len() {
                combo.resize(rc.len(), 0);
            }
            for (x, &y) in combo.iter_mut().zip(rc.iter()) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
        }
    }

    /// Inserts `v`; returns true when it was independent of the span.
    pub fn insert(&mut self, f: Field, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.n);
        let idx = self.inserted;
        self.inserted += 1;
        let mut combo = vec![0; idx + 1];
        combo[idx] = 1;
        self.reduce(f, &mut v, &mut combo);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for x in combo.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row, rc) in self.rows.iter_mut() {
            let a = row[pivot];
            if a == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(v.iter()) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
            if rc.len() < combo.len() {
                rc.resize(combo.len(), 0);
            }
            for (x, &y) in rc.iter_mut().zip(combo.iter()) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(a, y));
                }
            }
        }
        self.rows.push((pivot, v, combo));
        true
    }

    pub fn contains(&self, f: Field, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        let mut combo = Vec::new();
        self.reduce(f, &mut w, &mut combo);
        w.iter().all(|&x| x == 0)
    }

    /// Coefficients `c` over the inserted vectors with `sum c_i v_i = v`,
    /// or `None` when `v` is outside the span.
    pub fn solve(&self, f: Field, v: &[u32]) -> Option<Vec<u32>> {
        let mut w = v.to_vec();
        let mut combo = Vec::new();
        self.reduce(f, &mut w, &mut combo);
        if w.iter().any(|&x| x != 0) {
            return None;
        }
        combo.resize(self.inserted, 0);
        Some(combo.iter().map(|&x| f.neg(x)).collect())
    }
}
