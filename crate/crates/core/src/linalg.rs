//! Dense exact linear algebra over the rationals.
//!
//! Every matrix in this crate is small enough (a few hundred rows and
//! columns) that a dense row-major layout with exact Gauss-Jordan
//! elimination is adequate. Row operations skip zero entries, which keeps
//! the very sparse differentials cheap in practice.

use std::fmt;

use num_traits::{One, Zero};

use crate::Scalar;

/// A dense `rows × cols` matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from a list of equally long rows.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            entries.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            entries,
        }
    }

    /// Convenience constructor from small integers, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    /// Adds `value` to entry `(i, j)`.
    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.entries[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    /// Matrix product `self · rhs`. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let rhs_support: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..rhs.cols).filter(|&j| !rhs.get(k, j).is_zero()).collect())
            .collect();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, support) in rhs_support.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in support {
                    let prod = a * rhs.get(k, j);
                    out.add_to(i, j, &prod);
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics on a dimension mismatch.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn row_reduce(&self) -> Echelon {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        rows.truncate(rank);
        Echelon {
            cols: self.cols,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// The nonzero rows of a reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub cols: usize,
    /// One row per pivot; row `k` has a 1 in column `pivots[k]` and zeros in
    /// every other pivot column.
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right kernel, one vector per free column in ascending order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[free] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_zero() {
                        v[p] = -row[free].clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Gauss-Jordan elimination in place; returns the pivot columns in order.
/// The pivot for each column is the first nonzero entry at or below the
/// current row.
fn rref_in_place(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);

        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut().filter(|x| !x.is_zero()) {
            *x *= &inv;
        }
        let support: Vec<usize> = (col..cols).filter(|&j| !rows[next][j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[next]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    rref_in_place(&mut rows, m.cols).len()
}

/// Reduced-echelon basis of the right kernel, ordered by free column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.row_reduce().kernel_basis()
}

/// One solution of `a · x = b`, with every free variable set to zero, or
/// `None` when `b` is outside the column space.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), a.rows, "right-hand side length mismatch");
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref_in_place(&mut rows, a.cols + 1);
    if pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); a.cols];
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[a.cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_integer(x.into())
    }

    #[test]
    fn identity_rank_and_kernel() {
        let id = Matrix::identity(2);
        assert_eq!(rank(&id), 2);
        assert!(kernel_basis(&id).is_empty());
    }

    #[test]
    fn zero_matrix() {
        let z = Matrix::zeros(3, 5);
        assert_eq!(rank(&z), 0);
        let k = kernel_basis(&Matrix::zeros(2, 3));
        assert_eq!(k.len(), 3);
        for (c, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if j == c { s(1) } else { s(0) });
            }
        }
    }

    #[test]
    fn solve_identity() {
        let x = solve(&Matrix::identity(2), &[s(1), s(2)]).unwrap();
        assert_eq!(x, vec![s(1), s(2)]);
    }

    #[test]
    fn solve_inconsistent() {
        assert!(solve(&Matrix::zeros(2, 2), &[s(0), s(1)]).is_none());
        assert_eq!(solve(&Matrix::zeros(2, 2), &[s(0), s(0)]), Some(vec![s(0), s(0)]));
    }

    #[test]
    fn solve_sets_free_variables_to_zero() {
        let a = Matrix::from_i64(&[&[1, 2, 0], &[0, 0, 3]]);
        let x = solve(&a, &[s(4), s(6)]).unwrap();
        assert_eq!(x, vec![s(4), s(0), s(2)]);
    }

    #[test]
    fn rational_pivots() {
        let a = Matrix::from_i64(&[&[2, 4, 6], &[1, 3, 5], &[3, 7, 11]]);
        assert_eq!(rank(&a), 2);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(Zero::is_zero));
        assert_eq!(k[0], vec![s(1), s(-2), s(1)]);
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_i64(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), Matrix::from_i64(&[&[1, 0], &[2, 1]]));
    }
}
