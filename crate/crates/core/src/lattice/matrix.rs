use std::fmt;

use crate::exactfield::{Field, Rational};

use super::LatticeError;

/// Dense rectangular matrix with exact entries from a single field.
#[derive(Clone)]
pub struct ExactMatrix<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for ExactMatrix<F> {}

impl<F: Field> fmt::Debug for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(ctx: &F::Ctx, rows: usize, cols: usize, data: Vec<F>) -> Result<Self, LatticeError> {
        if data.len() != rows * cols {
            return Err(LatticeError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, ctx: ctx.clone(), data })
    }

    pub fn from_rows(ctx: &F::Ctx, rows: Vec<Vec<F>>) -> Result<Self, LatticeError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LatticeError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ctx, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, ctx: ctx.clone(), data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j).add(&a.mul(rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(F::zero(&self.ctx), |acc, (a, b)| acc.add(&a.mul(b))))
            .collect()
    }

    pub fn scale(&self, c: &F) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            data: self.data.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> ExactMatrix<G> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            ctx: ctx.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Fraction-free (Bareiss) forward elimination. Returns the echelon form,
    /// the pivot columns and the parity of the row swaps performed.
    fn bareiss(&self) -> (Vec<Vec<F>>, Vec<usize>, bool) {
        let mut m = self.to_rows();
        let mut prev = F::one(&self.ctx);
        let mut pivots = Vec::new();
        let mut odd_swaps = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap(p, r);
                odd_swaps = !odd_swaps;
            }
            let pivot = m[r][c].clone();
            let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
            for i in (r + 1)..self.rows {
                let lead = m[i][c].clone();
                for j in (c + 1)..self.cols {
                    let v = pivot.mul(&m[i][j]).sub(&lead.mul(&m[r][j]));
                    m[i][j] = v.mul(&prev_inv);
                }
                m[i][c] = F::zero(&self.ctx);
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        (m, pivots, odd_swaps)
    }

    /// Rank over the field, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    pub fn determinant(&self) -> Result<F, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        if self.rows == 0 {
            return Ok(F::one(&self.ctx));
        }
        let (m, pivots, odd) = self.bareiss();
        if pivots.len() < self.rows {
            return Ok(F::zero(&self.ctx));
        }
        let d = m[self.rows - 1][self.cols - 1].clone();
        Ok(if odd { d.neg() } else { d })
    }

    /// Reduced row echelon form with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let inv = m[r][c].inv().expect("nonzero pivot");
            for j in c..self.cols {
                m[r][j] = m[r][j].mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let factor = m[i][c].clone();
                for j in c..self.cols {
                    let v = m[i][j].sub(&factor.mul(&m[r][j]));
                    m[i][j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out =
            Self::from_rows(&self.ctx, m).unwrap_or_else(|_| Self::zeros(&self.ctx, self.rows, self.cols));
        (out, pivots)
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    ///
    /// The basis is the standard one read off the reduced echelon form: the
    /// `k`-th vector has a `1` in the `k`-th free column and `0` in every
    /// other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(row, f).neg();
                }
                v
            })
            .collect()
    }

    /// Free columns of the reduced echelon form, aligned with
    /// [`ExactMatrix::kernel_basis`].
    pub fn free_columns(&self) -> Vec<usize> {
        let (_, pivots) = self.rref();
        (0..self.cols).filter(|c| !pivots.contains(c)).collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one(&self.ctx));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl ExactMatrix<Rational> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::from_rows(
            &(),
            rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(&(), v)).collect()).collect(),
        )
    }
}

/// Rank of a matrix (convenience wrapper).
pub fn rank<F: Field>(m: &ExactMatrix<F>) -> usize {
    m.rank()
}

/// Basis of the right kernel (convenience wrapper).
pub fn kernel_basis<F: Field>(m: &ExactMatrix<F>) -> Vec<Vec<F>> {
    m.kernel_basis()
}
