//! Permutations in one-line notation, with the matrix identification used
//! throughout the crate.
//!
//! A permutation p of {1..m} is stored by its images, images[i-1] = p(i).
//! Its matrix M(p) has M[p(j)][j] = 1 (columns convention), so that
//! M(p o q) = M(p) M(q) and flags transform by prefix spans of columns.
//! Under this identification check_of(p) equals the antitranspose of the
//! inverse matrix, matching the antidiagonal symmetry operator.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Perm {
        Perm {
            images: (1..=m).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v == 0 || v > m || seen[v] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// Transposition (a b) in S_m, 1-based.
    pub fn transposition(m: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(m);
        p.images[a - 1] = b;
        p.images[b - 1] = a;
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// p(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Function composition: (self o other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: (1..=self.degree())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.degree())
            .filter(|&i| self.apply(i) == i)
            .collect()
    }

    /// Number of inversions #{i<j : p(i) > p(j)}; the length in S_m.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The antidiagonal-symmetry conjugate i -> m - p(m - i + 1) + 1.
    pub fn check_of(&self) -> Perm {
        let m = self.degree();
        Perm {
            images: (1..=m).map(|i| m - self.apply(m - i + 1) + 1).collect(),
        }
    }

    /// The permutation u with u(j) = rank of p(k+j) among {p(k+1)..p(k+m)}.
    /// Satisfies: p composed with the inverse block embedding of u is
    /// increasing on the window.
    pub fn induced(&self, k: usize, m: usize) -> Perm {
        assert!(k + m <= self.degree(), "window out of range");
        let vals: Vec<usize> = (1..=m).map(|j| self.apply(k + j)).collect();
        let mut sorted: Vec<usize> = vals.clone();
        sorted.sort_unstable();
        let images = vals
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Perm { images }
    }

    /// Block-diagonal assembly: the blocks act on consecutive windows.
    pub fn block_diag(blocks: &[&Perm]) -> Perm {
        let mut images = Vec::new();
        let mut offset = 0;
        for b in blocks {
            images.extend(b.images.iter().map(|&v| v + offset));
            offset += b.degree();
        }
        Perm { images }
    }

    /// The block of a block-diagonal permutation on window [k+1, k+m], shifted
    /// back to {1..m}. Errors if the window is not stable.
    pub fn extract_block(&self, k: usize, m: usize) -> Result<Perm> {
        let mut images = Vec::with_capacity(m);
        for j in 1..=m {
            let v = self.apply(k + j);
            if v <= k || v > k + m {
                return Err(Error::NotBlockDiagonal);
            }
            images.push(v - k);
        }
        Ok(Perm { images })
    }

    /// Is the one-line word increasing on positions [k+1, k+m]?
    pub fn increasing_on(&self, k: usize, m: usize) -> bool {
        (1..m).all(|j| self.apply(k + j) < self.apply(k + j + 1))
    }

    pub fn decreasing_on(&self, k: usize, m: usize) -> bool {
        (1..m).all(|j| self.apply(k + j) > self.apply(k + j + 1))
    }

    /// Permutation matrix with M[p(j)][j] = 1.
    pub fn to_matrix(&self, field: Field) -> Matrix {
        let m = self.degree();
        let mut out = Matrix::zero(m, m, field);
        for j in 1..=m {
            out.set(self.apply(j) - 1, j - 1, Scalar::one(field));
        }
        out
    }

    /// The permutation underlying a monomial matrix (one nonzero per row and
    /// column), forgetting the scalars.
    pub fn from_monomial(m: &Matrix) -> Result<Perm> {
        if !m.is_square() {
            return Err(Error::NotMonomial);
        }
        let n = m.rows();
        let mut images = vec![0usize; n];
        for j in 0..n {
            let mut hits = 0;
            for i in 0..n {
                if !m.get(i, j).is_zero() {
                    images[j] = i + 1;
                    hits += 1;
                }
            }
            if hits != 1 {
                return Err(Error::NotMonomial);
            }
        }
        Perm::from_images(images).map_err(|_| Error::NotMonomial)
    }

    /// Argsort: the permutation s with values[s(i)-1] increasing in i.
    /// Assumes distinct values.
    pub fn sorting(values: &[usize]) -> Perm {
        let mut idx: Vec<usize> = (1..=values.len()).collect();
        idx.sort_by_key(|&i| values[i - 1]);
        Perm { images: idx }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let images = s
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {w:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        Perm::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn inversions_basics() {
        assert_eq!(p(&[3, 1, 4, 2, 5]).inversions(), 3);
        assert_eq!(Perm::identity(6).inversions(), 0);
        assert_eq!(p(&[5, 4, 3, 2, 1]).inversions(), 10);
    }

    #[test]
    fn check_of_examples() {
        assert_eq!(Perm::identity(4).check_of(), Perm::identity(4));
        let anti = p(&[5, 4, 3, 2, 1]);
        assert_eq!(anti.check_of(), anti);
        assert_eq!(p(&[2, 1, 3]).check_of(), p(&[1, 3, 2]));
    }

    #[test]
    fn check_of_is_involution_and_antihom() {
        let a = p(&[2, 3, 1, 5, 4]);
        let b = p(&[4, 1, 5, 3, 2]);
        assert_eq!(a.check_of().check_of(), a);
        // check is conjugation by the reversal, so it respects composition
        assert_eq!(
            a.compose(&b).check_of(),
            a.check_of().compose(&b.check_of())
        );
    }

    #[test]
    fn matrix_identification() {
        // M(p o q) = M(p) M(q)
        let a = p(&[2, 3, 1, 4]);
        let b = p(&[4, 1, 3, 2]);
        let lhs = a.compose(&b).to_matrix(Field::Q);
        let rhs = a.to_matrix(Field::Q).mul(&b.to_matrix(Field::Q));
        assert_eq!(lhs, rhs);

        // check_of(p) = antitranspose of the inverse matrix
        let m_check = a.check_of().to_matrix(Field::Q);
        let m_other = a.inverse().to_matrix(Field::Q).antitranspose();
        assert_eq!(m_check, m_other);

        // antitranspose is anti-multiplicative on permutation matrices too
        let ma = a.to_matrix(Field::Q);
        let mb = b.to_matrix(Field::Q);
        assert_eq!(
            ma.mul(&mb).antitranspose(),
            mb.antitranspose().mul(&ma.antitranspose())
        );
    }

    #[test]
    fn induced_permutation() {
        // values (1, 4) on the window are already increasing
        assert_eq!(p(&[3, 1, 4, 2]).induced(1, 2), Perm::identity(2));
        // any window of length 1 induces the trivial permutation
        assert_eq!(p(&[3, 1, 4, 2]).induced(2, 1), Perm::identity(1));
        assert_eq!(Perm::identity(5).induced(1, 3), Perm::identity(3));
        // ranks: p = [3,1,2] on {1,2} gives (2,1)
        assert_eq!(p(&[3, 1, 2]).induced(0, 2), p(&[2, 1]));
    }

    #[test]
    fn induced_satisfies_defining_predicate() {
        // p composed with the block embedding of u^{-1} increases on the window
        let cases = [
            (p(&[3, 1, 4, 2, 5]), 1usize, 3usize),
            (p(&[5, 2, 4, 1, 3]), 0, 4),
        ];
        for (perm, k, m) in cases {
            let u = perm.induced(k, m);
            let blocks = Perm::block_diag(&[
                &Perm::identity(k),
                &u.inverse(),
                &Perm::identity(perm.degree() - k - m),
            ]);
            let composed = perm.compose(&blocks);
            assert!(composed.increasing_on(k, m), "{perm:?} window {k}+{m}");
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        let w: Perm = "3 1 4 2 5".parse().unwrap();
        assert_eq!(w, p(&[3, 1, 4, 2, 5]));
        assert_eq!(w.to_string(), "3 1 4 2 5");
        assert!("3 1 1".parse::<Perm>().is_err());
        assert!("0 1".parse::<Perm>().is_err());
    }
}
