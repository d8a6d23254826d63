//! Dense matrices over a finite field: multiplication, reduced row echelon
//! form, null spaces, inverses and affine solving. Elimination uses a fixed
//! pivot order (first nonzero entry scanning rows top-down, columns left to
//! right), so every result is deterministic.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::field::{FieldDescriptor, FieldElement};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    field: Arc<FieldDescriptor>,
    data: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn zeros(field: &Arc<FieldDescriptor>, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            field: field.clone(),
            data: alloc::vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<FieldDescriptor>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Arc<FieldDescriptor>, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch);
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(e);
            }
        }
        Ok(FieldMatrix {
            rows: nrows,
            cols: ncols,
            field: field.clone(),
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = FieldMatrix::zeros(&self.field, self.rows, rhs.cols);
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
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    acc = acc.add(&self.get(i, j).mul(x));
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(pivot_row) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, pivot_row);
            let inv = self.get(pr, pc).inv().expect("pivot nonzero");
            for c in 0..self.cols {
                let v = self.get(pr, c).mul(&inv);
                self.set(pr, c, v);
            }
            for r in 0..self.rows {
                if r != pr && !self.get(r, pc).is_zero() {
                    let factor = self.get(r, pc).clone();
                    for c in 0..self.cols {
                        let v = self.get(r, c).sub(&factor.mul(self.get(pr, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right null space `{x : A x = 0}`, one vector per free
    /// column, ordered by free column index. The basis is the standard RREF
    /// parametrization (free variable set to one, others to zero).
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = alloc::vec![None; self.cols];
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = alloc::vec![self.field.zero(); self.cols];
            vec[free] = self.field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                vec[pc] = m.get(row, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    pub fn inverse(&self) -> Result<FieldMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut aug = FieldMatrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::DivisionByZero);
        }
        let mut inv = FieldMatrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if pivot_row != col {
                m.swap_rows(col, pivot_row);
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot nonzero");
            for r in col + 1..n {
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
        Ok(det)
    }
}

/// Solution of an affine system `A x = b`: one particular solution plus a
/// basis of the homogeneous kernel.
#[derive(Debug, Clone)]
pub struct AffineSolution {
    pub particular: Vec<FieldElement>,
    pub kernel: Vec<Vec<FieldElement>>,
}

impl AffineSolution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Solves `A x = b` deterministically. Returns `None` when inconsistent.
pub fn solve_affine(a: &FieldMatrix, b: &[FieldElement]) -> Option<AffineSolution> {
    assert_eq!(a.rows(), b.len(), "system dimension mismatch");
    let field = a.field().clone();
    let mut aug = FieldMatrix::zeros(&field, a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols(), b[i].clone());
    }
    let pivots = aug.rref();
    if pivots.last().is_some_and(|&p| p == a.cols()) {
        return None;
    }
    let mut particular = alloc::vec![field.zero(); a.cols()];
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = aug.get(row, a.cols()).clone();
    }
    Some(AffineSolution {
        particular,
        kernel: a.kernel_basis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_field;

    fn mat(field: &Arc<FieldDescriptor>, rows: &[&[u64]]) -> FieldMatrix {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v).unwrap()).collect())
            .collect();
        FieldMatrix::from_rows(field, rows).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let f2 = build_field(2, 1).unwrap();
        let mut m = mat(&f2, &[&[1, 0, 1, 1], &[0, 1, 1, 0], &[1, 1, 0, 1]]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f4 = build_field(2, 2).unwrap();
        let m = mat(&f4, &[&[1, 2, 3, 0], &[0, 1, 2, 3]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f4 = build_field(2, 2).unwrap();
        let m = mat(&f4, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FieldMatrix::identity(&f4, 2));
        assert_eq!(inv.mul(&m), FieldMatrix::identity(&f4, 2));

        let singular = mat(&f4, &[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn determinant_matches_invertibility() {
        let f3 = build_field(3, 1).unwrap();
        for enc in 0..81u64 {
            let entries = [enc % 3, (enc / 3) % 3, (enc / 9) % 3, (enc / 27) % 3];
            let m = mat(&f3, &[&entries[0..2], &entries[2..4]]);
            let det = m.determinant().unwrap();
            // 2x2 determinant by hand: ad - bc.
            let ad = m.get(0, 0).mul(m.get(1, 1));
            let bc = m.get(0, 1).mul(m.get(1, 0));
            assert_eq!(det, ad.sub(&bc));
            assert_eq!(m.inverse().is_ok(), !det.is_zero());
        }
    }

    #[test]
    fn solve_affine_consistent_and_not() {
        let f2 = build_field(2, 1).unwrap();
        let a = mat(&f2, &[&[1, 0, 1], &[0, 1, 1]]);
        let b = alloc::vec![f2.one(), f2.zero()];
        let sol = solve_affine(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&sol.particular), b);
        assert_eq!(sol.kernel.len(), 1);
        // Adding a kernel vector stays a solution.
        let shifted: Vec<_> = sol
            .particular
            .iter()
            .zip(&sol.kernel[0])
            .map(|(x, k)| x.add(k))
            .collect();
        assert_eq!(a.mul_vec(&shifted), b);

        let inconsistent = mat(&f2, &[&[1, 1, 0], &[1, 1, 0]]);
        let b2 = alloc::vec![f2.one(), f2.zero()];
        assert!(solve_affine(&inconsistent, &b2).is_none());
    }
}
