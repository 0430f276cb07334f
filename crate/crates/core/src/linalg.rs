//! Dense linear algebra over a prime field `F_p`.
//!
//! Every semilinear system in the crate (hom spaces, eigenrings, kernels of
//! `x -> f*x mod p`, idealizers) is flattened to prime-subfield coordinates,
//! where the twisted maps become honest `F_p`-linear maps, and solved here.

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut base = a as u64 % p64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = FpMatrix::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduces in place to reduced row echelon form and returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), self.p) as u64;
            for j in c..self.cols {
                let v = self.get(r, j) as u64 * inv % p;
                self.set(r, j, v as u32);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c) as u64;
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let sub = factor * self.get(r, j) as u64 % p;
                    let v = (self.get(i, j) as u64 + p - sub) % p;
                    self.set(i, j, v as u32);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Indices of a maximal set of linearly independent columns, chosen greedily
    /// from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.clone().rref()
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let a = m.get(r, free);
                v[pc] = (p - a) % p;
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i] % self.p);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols);
        }
        Some(x)
    }

    pub fn mul_vec(&self, x: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0u64, |acc, j| (acc + self.get(i, j) as u64 * x[j] as u64) % p)
                    as u32
            })
            .collect()
    }
}

/// All `F_p`-linear combinations of `basis`, in little-endian mixed-radix order
/// of the coefficient vectors. Callers bound the size beforehand.
pub fn span(p: u32, basis: &[Vec<u32>]) -> impl Iterator<Item = Vec<u32>> + '_ {
    let n = basis.first().map_or(0, |b| b.len());
    let count = (p as u128).pow(basis.len() as u32);
    (0..count).map(move |mut idx| {
        let mut v = vec![0u32; n];
        for b in basis {
            let c = (idx % p as u128) as u64;
            idx /= p as u128;
            if c != 0 {
                for (vi, &bi) in v.iter_mut().zip(b) {
                    *vi = ((*vi as u64 + c * bi as u64) % p as u64) as u32;
                }
            }
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one_matrix() {
        // [1 2 3] over F_5
        let m = FpMatrix::from_columns(5, 1, &[vec![1], vec![2], vec![3]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
    }

    #[test]
    fn solve_inconsistent_system() {
        // x = 1 and x = 0 (two rows, one column)
        let m = FpMatrix::from_columns(2, 2, &[vec![1, 1]]);
        assert_eq!(m.solve(&[1, 0]), None);
        assert_eq!(m.solve(&[1, 1]), Some(vec![1]));
    }

    #[test]
    fn independent_columns_prefers_left() {
        let m = FpMatrix::from_columns(3, 2, &[vec![1, 0], vec![2, 0], vec![0, 1]]);
        assert_eq!(m.independent_columns(), vec![0, 2]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn span_enumerates_every_combination_once() {
        let all: Vec<_> = span(3, &[vec![1, 0], vec![0, 1]]).collect();
        assert_eq!(all.len(), 9);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
    }
}
