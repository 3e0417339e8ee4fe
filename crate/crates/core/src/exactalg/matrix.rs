use std::fmt;

use super::field::{add_mod, check_modulus, inv_mod, mul_mod, reduce_i64, sub_mod, Fp};
use crate::error::{shape_err, Error, Result};

/// Dense matrix over F_p, row-major. A morphism `V -> W` is stored as a
/// `dim W x dim V` matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    /// Builds a matrix from row-major entries, reducing each one mod `p`.
    pub fn new(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        check_modulus(p as u64)?;
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                context: "matrix entries".into(),
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", entries.len()),
            });
        }
        let data = entries.into_iter().map(|v| v % p).collect();
        Ok(FpMatrix {
            p,
            rows,
            cols,
            data,
        })
    }

    pub fn from_i64(p: u32, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        check_modulus(p as u64)?;
        let reduced = entries.iter().map(|&v| reduce_i64(v, p)).collect();
        Self::new(p, rows, cols, reduced)
    }

    /// Convenience constructor from nested rows; panics on ragged input.
    pub fn from_rows(p: u32, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let flat: Vec<i64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_i64(p, rows.len(), cols, &flat).expect("valid modulus")
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_fn(
        p: u32,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = reduce_i64(f(i, j), p);
            }
        }
        m
    }

    /// Column vector with a single 1 in position `i`.
    pub fn basis_vector(p: u32, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(p, n, 1);
        v.data[i] = 1 % p;
        v
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of {}x{}",
            self.rows,
            self.cols
        );
        self.data[i * self.cols + j]
    }

    pub fn at(&self, i: usize, j: usize) -> Fp {
        Fp::new(self.get(i, j) as i64, self.p)
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = reduce_i64(v, self.p);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.p, self.rows)
    }

    pub fn column(&self, j: usize) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.rows, 1, |i, _| self.get(i, j) as i64)
    }

    pub fn transpose(&self) -> FpMatrix {
        FpMatrix::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i) as i64)
    }

    fn same_modulus(&self, other: &FpMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// Matrix product `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.same_modulus(rhs)?;
        if self.cols != rhs.rows {
            return Err(shape_err(
                "matrix product",
                (self.cols, rhs.cols),
                (rhs.rows, rhs.cols),
            ));
        }
        let p = self.p;
        let n = rhs.cols;
        let mut acc = vec![0u64; self.rows * n];
        for i in 0..self.rows {
            let row = &mut acc[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * n..(k + 1) * n];
                for (slot, &b) in row.iter_mut().zip(rrow) {
                    if b != 0 {
                        *slot += mul_mod(a, b, p) as u64;
                    }
                }
            }
        }
        Ok(FpMatrix {
            p,
            rows: self.rows,
            cols: n,
            data: acc.into_iter().map(|v| (v % p as u64) as u32).collect(),
        })
    }

    fn zip_with(
        &self,
        rhs: &FpMatrix,
        context: &str,
        f: impl Fn(u32, u32, u32) -> u32,
    ) -> Result<FpMatrix> {
        self.same_modulus(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(shape_err(context, self.shape(), rhs.shape()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f(a, b, self.p))
            .collect();
        Ok(FpMatrix { data, ..*self })
    }

    pub fn add(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.zip_with(rhs, "matrix sum", add_mod)
    }

    pub fn sub(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.zip_with(rhs, "matrix difference", sub_mod)
    }

    pub fn scale(&self, c: i64) -> FpMatrix {
        let c = reduce_i64(c, self.p);
        FpMatrix {
            data: self.data.iter().map(|&v| mul_mod(v, c, self.p)).collect(),
            ..*self
        }
    }

    /// Kronecker product with row-major block layout:
    /// entry `(i·N.rows + k, j·N.cols + l)` is `M[i,j]·N[k,l]`.
    pub fn kron(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.same_modulus(rhs)?;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = FpMatrix::zeros(self.p, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.data[i * self.cols + j];
                if a == 0 {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.data[k * rhs.cols + l];
                        out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] =
                            mul_mod(a, b, self.p);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product of a sequence, left to right. Empty input is the 1x1 identity.
    pub fn kron_all(p: u32, factors: &[&FpMatrix]) -> Result<FpMatrix> {
        factors
            .iter()
            .try_fold(FpMatrix::identity(p, 1), |acc, f| acc.kron(f))
    }

    pub fn pow(&self, e: u32) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(shape_err(
                "matrix power",
                (self.rows, self.rows),
                self.shape(),
            ));
        }
        let mut acc = FpMatrix::identity(self.p, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn hstack(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.same_modulus(rhs)?;
        if self.rows != rhs.rows {
            return Err(shape_err("hstack", (self.rows, rhs.cols), rhs.shape()));
        }
        let cols = self.cols + rhs.cols;
        Ok(FpMatrix::from_fn(self.p, self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j) as i64
            } else {
                rhs.get(i, j - self.cols) as i64
            }
        }))
    }

    pub fn vstack(&self, rhs: &FpMatrix) -> Result<FpMatrix> {
        self.same_modulus(rhs)?;
        if self.cols != rhs.cols {
            return Err(shape_err("vstack", (rhs.rows, self.cols), rhs.shape()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(FpMatrix {
            p: self.p,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// First `(row, col)` at which two same-shaped matrices differ.
    pub fn first_difference(&self, other: &FpMatrix) -> Option<(usize, usize)> {
        debug_assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols.max(1), k % self.cols.max(1)))
    }

    /// Reduced row echelon form. Columns are scanned left to right; the pivot
    /// is the first nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let p = self.p;
        let mut r = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..r.cols {
            if row == r.rows {
                break;
            }
            let Some(piv) = (row..r.rows).find(|&i| r.data[i * r.cols + col] != 0) else {
                continue;
            };
            if piv != row {
                for j in 0..r.cols {
                    r.data.swap(piv * r.cols + j, row * r.cols + j);
                }
            }
            let inv = inv_mod(r.data[row * r.cols + col], p).expect("nonzero pivot");
            for j in 0..r.cols {
                let v = &mut r.data[row * r.cols + j];
                *v = mul_mod(*v, inv, p);
            }
            for i in 0..r.rows {
                if i == row {
                    continue;
                }
                let factor = r.data[i * r.cols + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..r.cols {
                    let sub = mul_mod(factor, r.data[row * r.cols + j], p);
                    let v = &mut r.data[i * r.cols + j];
                    *v = sub_mod(*v, sub, p);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            reduced: r,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `N` with `self · N = I`, if `self` has full row rank.
    pub fn right_inverse(&self) -> Option<FpMatrix> {
        let n = self.rows;
        let aug = self
            .hstack(&FpMatrix::identity(self.p, n))
            .expect("augmenting with identity");
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        let pivots: Vec<usize> = pivots.into_iter().filter(|&c| c < self.cols).collect();
        if pivots.len() != n {
            return None;
        }
        // Free variables are set to zero; pivot variable in row i reads the augmented block.
        let mut out = FpMatrix::zeros(self.p, self.cols, n);
        for (i, &pc) in pivots.iter().enumerate() {
            for k in 0..n {
                out.data[pc * n + k] = reduced.get(i, self.cols + k);
            }
        }
        Some(out)
    }

    /// `N` with `N · self = I`, if `self` has full column rank.
    pub fn left_inverse(&self) -> Option<FpMatrix> {
        self.transpose().right_inverse().map(|m| m.transpose())
    }

    /// Two-sided inverse of a square matrix.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        self.right_inverse()
    }

    /// Basis of `{v : self·v = 0}` as the columns of a `cols x k` matrix,
    /// ordered by free-column index.
    pub fn kernel_basis(&self) -> FpMatrix {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FpMatrix::zeros(self.p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.data[f * free.len() + k] = 1 % self.p;
            for (i, &pc) in pivots.iter().enumerate() {
                out.data[pc * free.len() + k] = sub_mod(0, reduced.get(i, f), self.p);
            }
        }
        out
    }

    /// Surjection `target -> target / im(self)` as an `r x rows` matrix whose
    /// kernel is exactly the image of `self`.
    pub fn cokernel_basis(&self) -> FpMatrix {
        self.transpose().kernel_basis().transpose()
    }

    /// The columns of `self` as column vectors.
    pub fn columns(&self) -> impl Iterator<Item = FpMatrix> + '_ {
        (0..self.cols).map(move |j| self.column(j))
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FpMatrix<F_{}>{}x{} {:?}",
            self.p, self.rows, self.cols, self.data
        )
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", self.get(i, j))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
