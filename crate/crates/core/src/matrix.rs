//! Dense exact matrices with reduced row echelon form, kernels, determinants.
//!
//! Row reduction pivots on the first nonzero entry in column order, with no
//! magnitude heuristics, so reduced bases are reproducible across runs.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        let field = entries
            .first()
            .map(|s| s.field())
            .ok_or_else(|| Error::ShapeMismatch("empty matrix needs explicit field".into()))?;
        for e in &entries {
            if e.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "mixed entries {field} and {}",
                    e.field()
                )));
            }
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Build from row-major i64 literals.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64], field: Field) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            rows,
            cols,
            field,
            entries: data.iter().map(|&n| Scalar::from_i64(n, field)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch in set");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// The symmetric transform along the antidiagonal: entry (i,j) moves to
    /// (m-j+1, m-i+1) in 1-based terms. Anti-multiplicative: d(MN) = dN dM.
    pub fn antitranspose(&self) -> Matrix {
        assert!(self.is_square(), "antitranspose needs a square matrix");
        let n = self.rows;
        let mut m = Matrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                m.set(n - 1 - j, n - 1 - i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field, "field mismatch in mul");
        let mut m = Matrix::zero(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).add(&a.mul(b));
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Reduced row echelon form together with the rank. Exact; deterministic
    /// pivot choice (first nonzero entry in column order).
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            if r != pivot_row {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(r, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = m.get(pivot_row, col).inv().unwrap();
            for j in 0..m.cols {
                let v = m.get(pivot_row, j).mul(&inv);
                m.set(pivot_row, j, v);
            }
            for i in 0..m.rows {
                if i == pivot_row || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(pivot_row, j)));
                    m.set(i, j, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of { v : M v = 0 }, as columns-of-length-cols vectors.
    /// Dimension is cols - rank. The basis is the standard one read off the
    /// reduced echelon form (free variable set to 1, pivots solved).
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (r, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut row = 0;
        for col in 0..r.cols {
            if row < rank && !r.get(row, col).is_zero() {
                pivot_cols.push(col);
                row += 1;
            }
        }
        let pivot_set: std::collections::HashSet<usize> = pivot_cols.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..r.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = Matrix::zero(r.cols, 1, self.field);
            v.set(free, 0, Scalar::one(self.field));
            for (row_idx, &pc) in pivot_cols.iter().enumerate() {
                v.set(pc, 0, r.get(row_idx, free).neg());
            }
            basis.push(v);
        }
        basis
    }

    /// Exact determinant by fraction-tracking elimination.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant needs a square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one(self.field);
        for col in 0..n {
            let found = (col..n).find(|&r| !m.get(r, col).is_zero());
            let r = match found {
                Some(r) => r,
                None => return Scalar::zero(self.field),
            };
            if r != col {
                for j in 0..n {
                    let a = m.get(r, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(r, j, b);
                    m.set(col, j, a);
                }
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().unwrap();
            for i in col + 1..n {
                if m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).mul(&inv);
                for j in col..n {
                    let v = m.get(i, j).sub(&f.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.field));
        }
        let (r, _) = aug.rref();
        // invertible exactly when the left block reduces to the identity
        if r.submatrix(0..n, 0..n) != Matrix::identity(n, self.field) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zero(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Matrix power for small exponents.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows, self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Columns i..j (exclusive) as a submatrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zero(self.rows, range.len(), self.field);
        for i in 0..self.rows {
            for (jj, j) in range.clone().enumerate() {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Submatrix rows i0..i1, cols j0..j1 (exclusive).
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zero(rows.len(), cols.len(), self.field);
        for (ii, i) in rows.clone().enumerate() {
            for (jj, j) in cols.clone().enumerate() {
                m.set(ii, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Paste `block` with its top-left corner at (i0, j0).
    pub fn set_block(&mut self, i0: usize, j0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(i0 + i, j0 + j, block.get(i, j).clone());
            }
        }
    }

    /// Horizontal concatenation.
    pub fn hconcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zero(self.rows, self.cols + other.cols, self.field);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    /// Flatten to a single row vector (row-major), used to coordinatize
    /// matrices inside linear systems.
    pub fn flatten_row(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Map the entries of an integer-valued rational matrix into GF(p).
    /// Errors if a denominator is divisible by p.
    pub fn reduce_mod(&self, p: u64) -> Result<Matrix> {
        let mut out = Matrix::zero(self.rows, self.cols, Field::Fp(p));
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = match self.get(i, j) {
                    Scalar::Q(r) => {
                        let pn = num_bigint::BigInt::from(p);
                        let num = r.numer().clone() % &pn;
                        let den = r.denom().clone() % &pn;
                        let num = ((num % &pn) + &pn) % &pn;
                        let den = ((den % &pn) + &pn) % &pn;
                        let num_u: u64 = num.try_into().unwrap();
                        let den_u: u64 = den.try_into().unwrap();
                        if den_u == 0 {
                            return Err(Error::FieldMismatch(format!(
                                "denominator divisible by {p}"
                            )));
                        }
                        Scalar::Fp { p, v: num_u }.div(&Scalar::Fp { p, v: den_u })
                    }
                    s => s.clone(),
                };
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    entries: Vec<serde_json::Value>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            p: match self.field {
                Field::Q => None,
                Field::Fp(p) => Some(p),
            },
            entries: self.entries.iter().map(|e| e.to_json_value()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        let field = match repr.p {
            None => Field::Q,
            Some(p) => Field::Fp(p),
        };
        let entries = repr
            .entries
            .iter()
            .map(|v| Scalar::from_json_value(v, field).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Matrix::new(repr.rows, repr.cols, entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational(n, d)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(3, Field::Q);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 3);

        let z = Matrix::zero(2, 4, Field::Q);
        let (r, rank) = z.rref();
        assert_eq!(r, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one_hand_reduction() {
        // [[1,2],[2,4]] row-reduces by hand to [[1,2],[0,0]], rank 1.
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4], Field::Q);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64(2, 2, &[1, 2, 0, 0], Field::Q));
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(3, 4, &[2, 4, 1, 7, 0, 3, 3, 1, 2, 7, 4, 8], Field::Q);
        let (r, _) = m.rref();
        let (r2, _) = r.rref();
        assert_eq!(r, r2);
    }

    #[test]
    fn nullspace_dimensions() {
        let id = Matrix::identity(4, Field::Q);
        assert!(id.nullspace().is_empty());

        let z = Matrix::zero(2, 3, Field::Q);
        assert_eq!(z.nullspace().len(), 3);

        // [[1,1,0]]: kernel dim 2, every basis vector has b1 + b2 = 0.
        let m = Matrix::from_i64(1, 3, &[1, 1, 0], Field::Q);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(v.get(0, 0).add(v.get(1, 0)).is_zero());
            assert!(m.mul(v).is_zero());
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut seed = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            (seed % 7) as i64 - 3
        };
        for _ in 0..25 {
            let data: Vec<i64> = (0..20).map(|_| next()).collect();
            let m = Matrix::from_i64(4, 5, &data, Field::Q);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 1, 1, 1, 0, 3, 1], Field::Q);
        // det = 2(1-3) - 1(1-0) = -5
        assert_eq!(m.det(), q(-5, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3, Field::Q));
        // singular matrices are rejected, including ones with a zero leading
        // pivot
        let sing = Matrix::from_i64(2, 2, &[0, 0, 0, 2], Field::Q);
        assert!(matches!(sing.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn antitranspose_antimultiplicative() {
        let a = Matrix::from_i64(3, 3, &[1, 2, 0, 0, 1, 4, 5, 0, 1], Field::Q);
        let b = Matrix::from_i64(3, 3, &[2, 0, 1, 3, 1, 0, 0, 1, 1], Field::Q);
        assert_eq!(
            a.mul(&b).antitranspose(),
            b.antitranspose().mul(&a.antitranspose())
        );
    }

    #[test]
    fn json_roundtrip_q_and_fp() {
        let m = Matrix::new(1, 3, vec![q(1, 2), q(-3, 1), q(0, 1)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.contains("\"1/2\""));
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);

        let f = Matrix::from_i64(2, 2, &[1, 0, 4, 2], Field::Fp(5));
        let s = serde_json::to_string(&f).unwrap();
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn json_rejects_non_canonical() {
        let bad = r#"{"rows":1,"cols":1,"entries":["2/4"]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
        let bad_fp = r#"{"rows":1,"cols":1,"p":5,"entries":[7]}"#;
        assert!(serde_json::from_str::<Matrix>(bad_fp).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let e = Matrix::new(1, 2, vec![q(1, 1), Scalar::from_i64(1, Field::Fp(3))]);
        assert!(matches!(e, Err(Error::FieldMismatch(_))));
    }
}
