//! Exact dense linear algebra over the active coefficient field:
//! reduced row echelon form, rank, kernel bases, and linear solving.
//! Pivoting is deterministic (first nonzero entry in column order), so
//! downstream reports are stable.

use crate::scalars::{FieldSpec, Scalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // first nonzero entry at or below `row`
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv().expect("pivot nonzero");
            for c in col..self.cols {
                let v = self.get(row, c).mul(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c).sub(&factor.mul(self.get(row, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : Ax = 0}, one vector per free
    /// column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                // x_pcol = -A'[prow][fc]
                v[pcol] = m.get(prow, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution x of Ax = b, or None when inconsistent. The solution
    /// with all free variables zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.get(prow, self.cols).clone();
        }
        Some(x)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Determinant via fraction-free-ish elimination (fine at desk scale).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return self.field.zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot nonzero");
            for r in (col + 1)..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for c in col..n {
                    let v = m.get(r, c).sub(&factor.mul(m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(f: &FieldSpec, n: i64) -> Scalar {
        f.from_int(n)
    }

    #[test]
    fn kernel_of_rank_deficient() {
        let f = FieldSpec::rational();
        // rows: [1, 2, 3], [2, 4, 6] -> kernel dim 2
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![fi(&f, 1), fi(&f, 2), fi(&f, 3)],
                vec![fi(&f, 2), fi(&f, 4), fi(&f, 6)],
            ],
        );
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..2 {
                let mut acc = f.zero();
                for c in 0..3 {
                    acc = acc.add(&m.get(r, c).mul(&v[c]));
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = FieldSpec::rational();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![fi(&f, 1), fi(&f, 1)],
                vec![fi(&f, 1), fi(&f, -1)],
            ],
        );
        let x = m.solve(&[fi(&f, 3), fi(&f, 1)]).unwrap();
        assert_eq!(x, vec![fi(&f, 2), fi(&f, 1)]);

        let sing = Matrix::from_rows(
            &f,
            vec![
                vec![fi(&f, 1), fi(&f, 1)],
                vec![fi(&f, 2), fi(&f, 2)],
            ],
        );
        assert!(sing.solve(&[fi(&f, 1), fi(&f, 3)]).is_none());
        assert!(sing.solve(&[fi(&f, 1), fi(&f, 2)]).is_some());
    }

    #[test]
    fn det_values() {
        let f = FieldSpec::rational();
        let m = Matrix::from_rows(
            &f,
            vec![
                vec![fi(&f, 0), fi(&f, 1)],
                vec![fi(&f, 1), fi(&f, 0)],
            ],
        );
        assert_eq!(m.det(), fi(&f, -1));
    }
}
