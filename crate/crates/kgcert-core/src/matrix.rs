//! Sparse exact matrices and deterministic Gaussian elimination.
//!
//! Everything here reduces to one routine: a fully reduced row echelon form with
//! a fixed pivot rule (lowest column index first; among candidate rows, fewest
//! stored entries, then lowest row index). Because the reduced echelon form of a
//! matrix is unique, results are reproducible no matter how rows arrive.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{FieldSpec, Scalar};
use crate::{Error, Result};

/// Sparse matrix over one field; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl ExactMatrix {
    pub fn new(spec: &FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix { spec: spec.clone(), rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(spec: &FieldSpec, n: usize) -> Self {
        let mut m = Self::new(spec, n, n);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one(spec));
        }
        m
    }

    pub fn from_dense(spec: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(spec, nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::BadParameters("ragged rows".into()));
            }
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v)?;
            }
        }
        Ok(m)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Stores `v` at (r, c); storing zero deletes the entry.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::BadParameters(format!("index ({r}, {c}) out of range")));
        }
        if v.spec() != &self.spec {
            return Err(Error::FieldMismatch);
        }
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        self.entries.get(&(r, c))
    }

    /// Entries of row `r` as (col, value), ascending by column.
    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.range((r, 0)..=(r, self.cols.max(1) - 1)).map(|((_, c), v)| (*c, v))
    }

    /// A·x, exact.
    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::BadParameters("vector length mismatch".into()));
        }
        let mut out = vec![Scalar::zero(&self.spec); self.rows];
        for ((r, c), v) in &self.entries {
            let term = v.mul(&x[*c])?;
            out[*r] = out[*r].add(&term)?;
        }
        Ok(out)
    }

    fn sparse_rows(&self) -> Vec<BTreeMap<usize, Scalar>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].insert(*c, v.clone());
        }
        rows
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix {
            spec: self.spec.clone(),
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|((r, c), v)| ((*c, *r), v.clone()))
                .collect(),
        }
    }
}

/// A reduced basis of a matrix's row space: one row per pivot, each pivot
/// entry 1 and cleared from every other basis row, sorted by pivot column.
pub struct RowBasis {
    /// Basis rows as sparse column→value maps.
    pub rows: Vec<BTreeMap<usize, Scalar>>,
    /// Pivot column of each basis row, strictly increasing.
    pub pivot_cols: Vec<usize>,
}

/// Row-reduces a matrix and returns the nonzero rows as a row-space basis.
pub fn row_basis(matrix: &ExactMatrix) -> Result<RowBasis> {
    let red = reduce(matrix, None)?;
    let mut rows = Vec::new();
    let mut pivot_cols = Vec::new();
    for &(col, row) in &red.pivots {
        rows.push(red.rows[row].clone());
        pivot_cols.push(col);
    }
    Ok(RowBasis { rows, pivot_cols })
}

/// Row echelon data: the reduced rows, plus (column, row) pivot pairs in
/// ascending column order.
struct Reduced {
    rows: Vec<BTreeMap<usize, Scalar>>,
    rhs: Option<Vec<Scalar>>,
    pivots: Vec<(usize, usize)>,
}

/// Runs full Gauss–Jordan elimination. Pivot choice per column: among not-yet-
/// pivotal rows with a nonzero entry in that column, take the sparsest (fewest
/// stored entries), breaking ties by lowest row index.
fn reduce(matrix: &ExactMatrix, rhs: Option<&[Scalar]>) -> Result<Reduced> {
    let spec = &matrix.spec;
    let mut rows = matrix.sparse_rows();
    let mut b = rhs.map(<[Scalar]>::to_vec);
    if let Some(b) = &b {
        if b.len() != matrix.rows {
            return Err(Error::BadParameters("rhs length mismatch".into()));
        }
        for v in b {
            if v.spec() != spec {
                return Err(Error::FieldMismatch);
            }
        }
    }
    let mut pivotal = vec![false; rows.len()];
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..matrix.cols {
        let candidate = rows
            .iter()
            .enumerate()
            .filter(|(r, row)| !pivotal[*r] && row.contains_key(&col))
            .map(|(r, row)| (row.len(), r))
            .min();
        let Some((_, prow)) = candidate else { continue };
        pivotal[prow] = true;
        pivots.push((col, prow));

        // Normalize the pivot row so the pivot entry is 1.
        let inv = rows[prow][&col].inv()?;
        if !inv.is_one() {
            let scaled: BTreeMap<usize, Scalar> = rows[prow]
                .iter()
                .map(|(c, v)| Ok((*c, v.mul(&inv)?)))
                .collect::<Result<_>>()?;
            rows[prow] = scaled;
            if let Some(b) = &mut b {
                b[prow] = b[prow].mul(&inv)?;
            }
        }

        // Clear the column from every other row.
        let pivot_row = rows[prow].clone();
        let pivot_b = b.as_ref().map(|b| b[prow].clone());
        for r in 0..rows.len() {
            if r == prow {
                continue;
            }
            let Some(factor) = rows[r].get(&col).cloned() else { continue };
            for (c, v) in &pivot_row {
                let delta = factor.mul(v)?;
                let cur = rows[r].remove(c).unwrap_or_else(|| Scalar::zero(spec));
                let next = cur.sub(&delta)?;
                if !next.is_zero() {
                    rows[r].insert(*c, next);
                }
            }
            if let (Some(b), Some(pb)) = (&mut b, &pivot_b) {
                let delta = factor.mul(pb)?;
                b[r] = b[r].sub(&delta)?;
            }
        }
    }
    Ok(Reduced { rows, rhs: b, pivots })
}

/// Exact solution of A·x = b, or `None` when the system is inconsistent.
/// Free variables are set to zero, so the answer is the canonical particular
/// solution read off the reduced echelon form.
pub fn solve_linear(matrix: &ExactMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    let red = reduce(matrix, Some(b))?;
    let rhs = red.rhs.expect("rhs threaded through");
    // A row wiped out by elimination but with a surviving right-hand side
    // witnesses 0 = nonzero: the system is inconsistent.
    for (r, row) in red.rows.iter().enumerate() {
        if row.is_empty() && !rhs[r].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Scalar::zero(&matrix.spec); matrix.cols];
    for &(col, row) in &red.pivots {
        x[col] = rhs[row].clone();
    }
    Ok(Some(x))
}

/// Exact basis of {x : A·x = 0}, one vector per free column in ascending
/// column order, each with a 1 in its free coordinate (reduced echelon
/// parametrization). Empty exactly when the nullspace is trivial.
pub fn nullspace(matrix: &ExactMatrix) -> Result<Vec<Vec<Scalar>>> {
    let red = reduce(matrix, None)?;
    let spec = &matrix.spec;
    let pivot_cols: BTreeMap<usize, usize> = red.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..matrix.cols {
        if pivot_cols.contains_key(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(spec); matrix.cols];
        v[free] = Scalar::one(spec);
        for (&pcol, &prow) in &pivot_cols {
            if let Some(entry) = red.rows[prow].get(&free) {
                v[pcol] = entry.neg();
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(n: i64) -> Scalar {
        Scalar::from_i64(&FieldSpec::rationals(), n)
    }

    #[test]
    fn identity_system_returns_rhs() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::identity(&spec, 3);
        let b = vec![qs(4), qs(-1), qs(7)];
        assert_eq!(solve_linear(&a, &b).unwrap(), Some(b));
    }

    #[test]
    fn symmetric_two_by_two() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::from_dense(
            &spec,
            vec![vec![qs(1), qs(1)], vec![qs(1), qs(-1)]],
        )
        .unwrap();
        let x = solve_linear(&a, &[qs(2), qs(0)]).unwrap().unwrap();
        assert_eq!(x, vec![qs(1), qs(1)]);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::from_dense(
            &spec,
            vec![vec![qs(1), qs(1)], vec![qs(2), qs(2)]],
        )
        .unwrap();
        assert_eq!(solve_linear(&a, &[qs(1), qs(3)]).unwrap(), None);
    }

    #[test]
    fn underdetermined_solution_multiplies_back() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::from_dense(&spec, vec![vec![qs(1), qs(2), qs(3)]]).unwrap();
        let b = vec![qs(6)];
        let x = solve_linear(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn nullspace_of_zero_matrix_is_full() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::new(&spec, 2, 3);
        let basis = nullspace(&a).unwrap();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            assert!(v[i].is_one());
        }
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        let spec = FieldSpec::rationals();
        let a = ExactMatrix::identity(&spec, 3);
        assert!(nullspace(&a).unwrap().is_empty());
    }

    #[test]
    fn nullspace_vectors_multiply_to_zero() {
        let spec = FieldSpec::prime(7).unwrap();
        let mk = |n: i64| Scalar::from_i64(&spec, n);
        let a = ExactMatrix::from_dense(
            &spec,
            vec![
                vec![mk(1), mk(2), mk(0), mk(4)],
                vec![mk(0), mk(0), mk(1), mk(3)],
            ],
        )
        .unwrap();
        let basis = nullspace(&a).unwrap();
        assert_eq!(basis.len(), 2);
        let zero = vec![Scalar::zero(&spec); 2];
        for v in &basis {
            assert_eq!(a.mul_vec(v).unwrap(), zero);
        }
    }

    #[test]
    fn set_zero_removes_entry() {
        let spec = FieldSpec::rationals();
        let mut a = ExactMatrix::new(&spec, 2, 2);
        a.set(0, 0, qs(5)).unwrap();
        assert_eq!(a.nnz(), 1);
        a.set(0, 0, qs(0)).unwrap();
        assert_eq!(a.nnz(), 0);
        assert_eq!(a.get(0, 0), None);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let q = FieldSpec::rationals();
        let gf5 = FieldSpec::prime(5).unwrap();
        let mut a = ExactMatrix::new(&q, 1, 1);
        assert!(matches!(a.set(0, 0, Scalar::one(&gf5)), Err(Error::FieldMismatch)));
    }

    #[test]
    fn row_basis_reduces_to_unit_pivots() {
        let spec = FieldSpec::rationals();
        let m = ExactMatrix::from_dense(
            &spec,
            vec![
                vec![qs(1), qs(2)],
                vec![qs(2), qs(4)],
                vec![qs(0), qs(1)],
            ],
        )
        .unwrap();
        let basis = row_basis(&m).unwrap();
        assert_eq!(basis.pivot_cols, vec![0, 1]);
        assert_eq!(basis.rows.len(), 2);
        assert_eq!(basis.rows[0], BTreeMap::from([(0, qs(1))]));
        assert_eq!(basis.rows[1], BTreeMap::from([(1, qs(1))]));
    }

    #[test]
    fn transpose_flips_indices() {
        let spec = FieldSpec::rationals();
        let m = ExactMatrix::from_dense(&spec, vec![vec![qs(1), qs(2), qs(0)]]).unwrap();
        let t = m.transpose();
        assert_eq!((t.rows(), t.cols()), (3, 1));
        assert_eq!(t.get(1, 0), Some(&qs(2)));
        assert_eq!(t.get(2, 0), None);
    }
}
