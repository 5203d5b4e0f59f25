//! Linear subspaces of a matrix space, stored by a reduced basis.
//!
//! Used for Lie algebras, tangent spaces and plain vector subspaces (ambient
//! shape n x 1). The basis is canonicalized through row reduction of the
//! coordinate matrix, so equal subspaces compare equal.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatSpace {
    ambient: (usize, usize),
    field: Field,
    basis: Vec<Matrix>,
}

impl MatSpace {
    /// Span of the given matrices; dependent members are dropped by the
    /// canonicalization.
    pub fn span(ambient: (usize, usize), field: Field, members: &[Matrix]) -> Result<MatSpace> {
        for m in members {
            if (m.rows(), m.cols()) != ambient {
                return Err(Error::AmbientMismatch(format!(
                    "member is {}x{}, ambient is {}x{}",
                    m.rows(),
                    m.cols(),
                    ambient.0,
                    ambient.1
                )));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(format!(
                    "member over {}, space over {}",
                    m.field(),
                    field
                )));
            }
        }
        let basis = canonical_basis(ambient, field, members);
        Ok(MatSpace {
            ambient,
            field,
            basis,
        })
    }

    pub fn zero(ambient: (usize, usize), field: Field) -> MatSpace {
        MatSpace {
            ambient,
            field,
            basis: Vec::new(),
        }
    }

    pub fn ambient(&self) -> (usize, usize) {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn coordinate_matrix(&self) -> Matrix {
        let n = self.ambient.0 * self.ambient.1;
        let mut m = Matrix::zero(self.basis.len(), n, self.field);
        for (i, b) in self.basis.iter().enumerate() {
            for (j, e) in b.flatten_row().into_iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        if (m.rows(), m.cols()) != self.ambient || m.field() != self.field {
            return false;
        }
        if m.is_zero() {
            return true;
        }
        let mut stacked = self.coordinate_matrix();
        let row = m.flatten_row();
        let mut with = Matrix::zero(stacked.rows() + 1, stacked.cols(), self.field);
        with.set_block(0, 0, &stacked);
        for (j, e) in row.into_iter().enumerate() {
            with.set(stacked.rows(), j, e);
        }
        stacked = with;
        stacked.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &MatSpace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &MatSpace) -> Result<MatSpace> {
        self.check_compatible(other)?;
        let mut members = self.basis.clone();
        members.extend(other.basis.iter().cloned());
        MatSpace::span(self.ambient, self.field, &members)
    }

    /// Intersection A and B. Internally checks the dimension formula
    /// dim(A cap B) + dim(A + B) = dim A + dim B.
    pub fn intersect(&self, other: &MatSpace) -> Result<MatSpace> {
        self.check_compatible(other)?;
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Ok(MatSpace::zero(self.ambient, self.field));
        }
        // Solve sum a_i A_i - sum b_j B_j = 0 in the coordinates; the A-part of
        // each kernel vector spans the intersection.
        let n = self.ambient.0 * self.ambient.1;
        let mut system = Matrix::zero(n, ka + kb, self.field);
        for (col, b) in self.basis.iter().enumerate() {
            for (j, e) in b.flatten_row().into_iter().enumerate() {
                system.set(j, col, e);
            }
        }
        for (col, b) in other.basis.iter().enumerate() {
            for (j, e) in b.flatten_row().into_iter().enumerate() {
                system.set(j, ka + col, e.neg());
            }
        }
        let kernel = system.nullspace();
        let mut members = Vec::new();
        for v in kernel {
            let mut m = Matrix::zero(self.ambient.0, self.ambient.1, self.field);
            for (i, b) in self.basis.iter().enumerate() {
                let c = v.get(i, 0);
                if !c.is_zero() {
                    m = m.add(&b.scale(c));
                }
            }
            members.push(m);
        }
        let inter = MatSpace::span(self.ambient, self.field, &members)?;
        let total = self.sum(other)?;
        if inter.dim() + total.dim() != ka + kb {
            return Err(Error::Internal(format!(
                "dimension formula failed: {} + {} != {} + {}",
                inter.dim(),
                total.dim(),
                ka,
                kb
            )));
        }
        Ok(inter)
    }

    fn check_compatible(&self, other: &MatSpace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(format!(
                "{:?} vs {:?}",
                self.ambient, other.ambient
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }
}

fn canonical_basis(ambient: (usize, usize), field: Field, members: &[Matrix]) -> Vec<Matrix> {
    if members.is_empty() {
        return Vec::new();
    }
    let n = ambient.0 * ambient.1;
    let mut m = Matrix::zero(members.len(), n, field);
    for (i, b) in members.iter().enumerate() {
        for (j, e) in b.flatten_row().into_iter().enumerate() {
            m.set(i, j, e);
        }
    }
    let (r, rank) = m.rref();
    let mut basis = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut out = Matrix::zero(ambient.0, ambient.1, field);
        for j in 0..n {
            out.set(j / ambient.1, j % ambient.1, r.get(i, j).clone());
        }
        basis.push(out);
    }
    basis
}

/// Solve a homogeneous linear system over matrix entries: each constraint is a
/// row of length rows*cols, and the solutions are returned as a MatSpace of
/// rows x cols matrices.
pub fn solution_space(
    rows: usize,
    cols: usize,
    field: Field,
    constraints: &[Vec<Scalar>],
) -> MatSpace {
    let n = rows * cols;
    let system = if constraints.is_empty() {
        Matrix::zero(1, n, field)
    } else {
        let mut m = Matrix::zero(constraints.len(), n, field);
        for (i, c) in constraints.iter().enumerate() {
            assert_eq!(c.len(), n, "constraint length mismatch");
            for (j, e) in c.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        m
    };
    let kernel = system.nullspace();
    let members: Vec<Matrix> = kernel
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zero(rows, cols, field);
            for j in 0..n {
                m.set(j / cols, j % cols, v.get(j, 0).clone());
            }
            m
        })
        .collect();
    MatSpace::span((rows, cols), field, &members).unwrap()
}

/// Span of the columns of `m` as a space of column vectors.
pub fn column_space(m: &Matrix) -> MatSpace {
    let members: Vec<Matrix> = (0..m.cols()).map(|j| m.columns(j..j + 1)).collect();
    MatSpace::span((m.rows(), 1), m.field(), &members).unwrap()
}

/// Image of a vector space under a linear map.
pub fn image(map: &Matrix, space: &MatSpace) -> MatSpace {
    let members: Vec<Matrix> = space.basis().iter().map(|v| map.mul(v)).collect();
    MatSpace::span((map.rows(), 1), map.field(), &members).unwrap()
}
