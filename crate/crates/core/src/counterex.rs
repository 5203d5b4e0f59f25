//! Exact reproduction of the orthogonal non-continuity counter-example: an
//! eight-dimensional quadratic space, an order-two antiadjoint nilpotent, a
//! one-parameter centralizer family whose flag limit exists, and the map phi
//! whose value jumps at the limit.
//!
//! The limit is never taken topologically: the family is rewritten in the
//! parameter u = 1/t with polynomial entries, the row span is saturated at
//! u = 0, and the substitution is exact.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::matspace::{image, MatSpace};
use crate::perm::Perm;
use crate::scalar::{Field, Scalar};
use serde::Serialize;

const DIM: usize = 8;
const HALF: usize = 4;

/// Flags: nested subspaces stored as canonical bases of column vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct Flag {
    pub dims: Vec<usize>,
    pub spaces: Vec<MatSpace>,
}

impl Flag {
    /// Prefix spans of the chain vectors at the orthogonal dimensions
    /// 1..n-1, n+1..2n-1.
    pub fn from_chain(vectors: &[Matrix], dims: &[usize]) -> Result<Flag> {
        let mut spaces = Vec::new();
        for &d in dims {
            let members: Vec<Matrix> = vectors[..d].to_vec();
            let space = MatSpace::span((DIM, 1), Field::Q, &members)?;
            if space.dim() != d {
                return Err(Error::PreconditionViolated(format!(
                    "chain prefix of length {d} is degenerate"
                )));
            }
            spaces.push(space);
        }
        for pair in spaces.windows(2) {
            if !pair[0].is_subspace_of(&pair[1]) {
                return Err(Error::Internal("flag nesting failed".into()));
            }
        }
        Ok(Flag {
            dims: dims.to_vec(),
            spaces,
        })
    }

    pub fn space_of_dim(&self, d: usize) -> Option<&MatSpace> {
        self.dims
            .iter()
            .position(|&x| x == d)
            .map(|i| &self.spaces[i])
    }

    /// V_{2n-i} = V_i-perp for every stored pair.
    pub fn is_orthogonal(&self, gram: &Matrix) -> bool {
        self.dims
            .iter()
            .zip(&self.spaces)
            .all(|(&d, space)| match self.space_of_dim(DIM - d) {
                Some(big) => &perp(space, gram) == big,
                None => false,
            })
    }

    pub fn is_stable_under(&self, op: &Matrix) -> bool {
        self.spaces.iter().all(|v| image(op, v).is_subspace_of(v))
    }
}

/// Orthogonal complement with respect to a bilinear form.
pub fn perp(space: &MatSpace, gram: &Matrix) -> MatSpace {
    let k = space.dim();
    let n = gram.rows();
    if k == 0 {
        let cols: Vec<Matrix> = (0..n)
            .map(|i| {
                let mut v = Matrix::zero(n, 1, gram.field());
                v.set(i, 0, Scalar::one(gram.field()));
                v
            })
            .collect();
        return MatSpace::span((n, 1), gram.field(), &cols).unwrap();
    }
    let mut rows = Matrix::zero(k, n, gram.field());
    for (i, b) in space.basis().iter().enumerate() {
        let gb = gram.mul(b);
        for j in 0..n {
            rows.set(i, j, gb.get(j, 0).clone());
        }
    }
    MatSpace::span((n, 1), gram.field(), &rows.nullspace()).unwrap()
}

/// The fixed scene of the counter-example: dimension 8, antidiagonal form,
/// the split order-two nilpotent of rank 4, the two flag operators and the
/// one-parameter centralizer family.
pub struct Scene {
    pub omega: Matrix,
    pub nilpotent: Matrix,
    pub w: Perm,
    pub s: Perm,
    pub base_flag_dims: Vec<usize>,
}

impl Scene {
    pub fn u_of(&self, t: &Scalar) -> Matrix {
        let mut u = Matrix::identity(DIM, Field::Q);
        u.set(2, 4, t.clone());
        u.set(3, 5, t.neg());
        u
    }

    /// The operator sending f_k to f_{p(k)}.
    pub fn operator(&self, p: &Perm) -> Matrix {
        p.to_matrix(Field::Q)
    }

    fn basis_vector(i: usize) -> Matrix {
        let mut v = Matrix::zero(DIM, 1, Field::Q);
        v.set(i - 1, 0, Scalar::one(Field::Q));
        v
    }

    /// The standard flag twisted by an operator: prefix spans of the images
    /// of f_1..f_8 at the orthogonal dimensions.
    pub fn flag_of_operator(&self, op: &Matrix) -> Result<Flag> {
        let vectors: Vec<Matrix> = (1..=DIM).map(|i| op.mul(&Self::basis_vector(i))).collect();
        Flag::from_chain(&vectors, &self.base_flag_dims)
    }

    /// Preimage of a vector of the image under the nilpotent.
    fn preimage(&self, v: &Matrix) -> Result<Matrix> {
        let n = &self.nilpotent;
        let aug = n.hconcat(v);
        let (r, _) = aug.rref();
        // read a particular solution off the reduced system
        let mut x = Matrix::zero(DIM, 1, Field::Q);
        let mut row = 0;
        for col in 0..DIM {
            if row < r.rows()
                && r.get(row, col).is_one()
                && (0..col).all(|c| r.get(row, c).is_zero())
            {
                x.set(col, 0, r.get(row, DIM).clone());
                row += 1;
            }
        }
        if &n.mul(&x) != v {
            return Err(Error::Internal("vector is not in the image".into()));
        }
        Ok(x)
    }

    /// The symplectic form alpha on the image: alpha(u, N v) = omega(u, v).
    pub fn alpha(&self, a: &Matrix, b: &Matrix) -> Result<Scalar> {
        let pre = self.preimage(b)?;
        Ok(self.omega_pairing(a, &pre))
    }

    fn omega_pairing(&self, a: &Matrix, b: &Matrix) -> Scalar {
        self.omega.mul(b).transpose().mul(a).get(0, 0).clone()
    }

    pub fn alpha_isotropic(&self, space: &MatSpace) -> Result<bool> {
        let basis = space.basis();
        for (i, a) in basis.iter().enumerate() {
            for b in basis.iter().skip(i + 1) {
                if !self.alpha(a, b)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Construct the scene and verify its invariants exactly.
pub fn build_scene() -> Result<Scene> {
    let field = Field::Q;
    let mut omega = Matrix::zero(DIM, DIM, field);
    for i in 0..DIM {
        omega.set(i, DIM - 1 - i, Scalar::one(field));
    }
    let mut nilpotent = Matrix::zero(DIM, DIM, field);
    for i in 0..2 {
        nilpotent.set(i, HALF + i, Scalar::one(field));
    }
    for i in 2..4 {
        nilpotent.set(i, HALF + i, Scalar::from_i64(-1, field));
    }
    let w = Perm::from_images(vec![1, 5, 2, 6, 3, 7, 4, 8]).unwrap();
    let s = Perm::from_images(vec![1, 3, 2, 4, 5, 7, 6, 8]).unwrap();
    let scene = Scene {
        omega,
        nilpotent,
        w,
        s,
        base_flag_dims: vec![1, 2, 3, 5, 6, 7],
    };

    // construction-time invariants, all exact
    if !scene.nilpotent.pow(2).is_zero() {
        return Err(Error::Internal("N is not of order two".into()));
    }
    if scene.nilpotent.rank() != 4 {
        return Err(Error::Internal("N does not have rank 4".into()));
    }
    if scene.nilpotent.antitranspose() != scene.nilpotent.neg() {
        return Err(Error::Internal("N is not antiadjoint for omega".into()));
    }
    for p in [&scene.w, &scene.s] {
        let m = scene.operator(p);
        if m.antitranspose().mul(&m) != Matrix::identity(DIM, field) || !m.det().is_one() {
            return Err(Error::Internal(format!("{p} is not special orthogonal")));
        }
    }
    for t in [
        Scalar::from_i64(1, field),
        Scalar::from_i64(2, field),
        Scalar::from_i64(-3, field),
        Scalar::rational(1, 2),
    ] {
        let u = scene.u_of(&t);
        if u.mul(&scene.nilpotent) != scene.nilpotent.mul(&u) {
            return Err(Error::Internal("U(t) does not centralize N".into()));
        }
        if u.antitranspose().mul(&u) != Matrix::identity(DIM, field) {
            return Err(Error::Internal("U(t) does not preserve omega".into()));
        }
        let minus = scene.u_of(&t.neg());
        if u.mul(&minus) != Matrix::identity(DIM, field) {
            return Err(Error::Internal("U(t) U(-t) is not the identity".into()));
        }
    }
    Ok(scene)
}

/// phi(V) = sum over i < n of V_i cap N(V_i-perp).
pub fn phi(flag: &Flag, scene: &Scene) -> Result<MatSpace> {
    let mut acc = MatSpace::zero((DIM, 1), Field::Q);
    for i in 1..HALF {
        let vi = flag
            .space_of_dim(i)
            .ok_or_else(|| Error::ShapeMismatch(format!("flag misses dimension {i}")))?;
        let perp_i = perp(vi, &scene.omega);
        let n_perp = image(&scene.nilpotent, &perp_i);
        acc = acc.sum(&vi.intersect(&n_perp)?)?;
    }
    Ok(acc)
}

// ---- polynomial limit machinery --------------------------------------------

/// Polynomials over Q in the limit parameter, dense coefficients.
#[derive(Clone, PartialEq, Debug)]
struct Poly(Vec<Scalar>);

impl Poly {
    fn zero() -> Poly {
        Poly(Vec::new())
    }

    fn constant(c: Scalar) -> Poly {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    fn linear(c0: Scalar, c1: Scalar) -> Poly {
        let mut p = Poly(vec![c0, c1]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn constant_term(&self) -> Scalar {
        self.0
            .first()
            .cloned()
            .unwrap_or_else(|| Scalar::zero(Field::Q))
    }

    fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    fn shift_down(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        Poly(self.0[k..].to_vec())
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let zero = Scalar::zero(Field::Q);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).unwrap_or(&zero);
            let b = other.0.get(i).unwrap_or(&zero);
            out.push(a.add(b));
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn scale(&self, c: &Scalar) -> Poly {
        let mut p = Poly(self.0.iter().map(|a| a.mul(c)).collect());
        p.trim();
        p
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(Field::Q); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Scalar::from_i64(-1, Field::Q)))
    }
}

type PolyRow = Vec<Poly>;

fn row_valuation(row: &PolyRow) -> Option<usize> {
    row.iter().filter_map(|p| p.valuation()).min()
}

fn strip_row(row: &mut PolyRow) {
    if let Some(v) = row_valuation(row) {
        if v > 0 {
            for p in row.iter_mut() {
                *p = p.shift_down(v);
            }
        }
    }
}

/// Echelonize over the rational function field by cross-multiplication,
/// stripping powers of the parameter, and drop dependent rows.
fn echelonize(mut rows: Vec<PolyRow>) -> Vec<PolyRow> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut done = 0usize;
    for col in 0..cols {
        let pivot = (done..rows.len()).find(|&i| !rows[i][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(done, pivot);
        let piv = rows[done].clone();
        for i in 0..rows.len() {
            if i == done || rows[i][col].is_zero() {
                continue;
            }
            let a = piv[col].clone();
            let b = rows[i][col].clone();
            for j in 0..cols {
                rows[i][j] = rows[i][j].mul(&a).sub(&piv[j].mul(&b));
            }
            strip_row(&mut rows[i]);
        }
        done += 1;
    }
    rows.retain(|r| r.iter().any(|p| !p.is_zero()));
    for r in rows.iter_mut() {
        strip_row(r);
    }
    rows
}

/// The exact limit of the row span at parameter zero, computed by saturating
/// the polynomial row module: whenever the constant terms become dependent,
/// the dependent combination is divided by the parameter.
fn limit_subspace_at_zero(rows: Vec<PolyRow>) -> Result<MatSpace> {
    let mut rows = echelonize(rows);
    let rank = rows.len();
    let cols = rows.first().map_or(0, |r| r.len());
    for _ in 0..10_000 {
        // constant-term matrix
        let mut consts = Matrix::zero(rank, cols, Field::Q);
        for (i, row) in rows.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                consts.set(i, j, p.constant_term());
            }
        }
        if consts.rank() == rank {
            let members: Vec<Matrix> = (0..rank)
                .map(|i| {
                    let mut v = Matrix::zero(cols, 1, Field::Q);
                    for j in 0..cols {
                        v.set(j, 0, consts.get(i, j).clone());
                    }
                    v
                })
                .collect();
            return MatSpace::span((cols, 1), Field::Q, &members);
        }
        // find a dependent combination of the constant rows and divide by u
        let kernel = consts.transpose().nullspace();
        let kappa = kernel
            .first()
            .ok_or_else(|| Error::Internal("missing kernel vector".into()))?;
        let mut combo: PolyRow = vec![Poly::zero(); cols];
        let mut last = None;
        for i in 0..rank {
            let c = kappa.get(i, 0).clone();
            if c.is_zero() {
                continue;
            }
            last = Some(i);
            for j in 0..cols {
                combo[j] = combo[j].add(&rows[i][j].scale(&c));
            }
        }
        let last = last.ok_or_else(|| Error::Internal("zero kernel vector".into()))?;
        match row_valuation(&combo) {
            None => return Err(Error::Internal("span dropped rank in the limit".into())),
            Some(0) => return Err(Error::Internal("combination did not vanish at zero".into())),
            Some(_) => {
                strip_row(&mut combo);
                rows[last] = combo;
            }
        }
    }
    Err(Error::Internal("limit saturation did not stabilize".into()))
}

// ---- the verification -------------------------------------------------------

#[derive(Serialize)]
pub struct NonContinuityReport {
    /// phi along the one-parameter family (constant in t).
    pub family_phi: Vec<Vec<String>>,
    /// does the exact limit of the family equal the expected flag
    pub limit_flag_equal: bool,
    /// phi of the limit flag
    pub phi_limit: Vec<Vec<String>>,
    pub phi_values_differ: bool,
    pub discontinuous: bool,
    pub sampled_t: Vec<String>,
}

fn space_strings(space: &MatSpace) -> Vec<Vec<String>> {
    space
        .basis()
        .iter()
        .map(|v| (0..v.rows()).map(|i| v.get(i, 0).to_string()).collect())
        .collect()
}

fn span_of(vectors: &[Matrix]) -> MatSpace {
    MatSpace::span((DIM, 1), Field::Q, vectors).unwrap()
}

/// Run the complete non-continuity verification.
pub fn verify_noncontinuity() -> Result<NonContinuityReport> {
    let scene = build_scene()?;
    let e = |i: usize| {
        let mut v = Matrix::zero(DIM, 1, Field::Q);
        v.set(i - 1, 0, Scalar::one(Field::Q));
        v
    };

    // the base flag twisted by w, and its N-stability
    let w_op = scene.operator(&scene.w);
    let w_flag = scene.flag_of_operator(&w_op)?;
    if !w_flag.is_orthogonal(&scene.omega) {
        return Err(Error::Internal("w-flag is not orthogonal".into()));
    }
    if !w_flag.is_stable_under(&scene.nilpotent) {
        return Err(Error::Internal("w-flag is not stable under N".into()));
    }

    let expected_family = span_of(&[e(1), e(2)]);
    let expected_limit_phi = span_of(&[e(1), e(3)]);

    // (1) for sampled nonzero t the twisted flag matches the rewritten chain
    let sampled = vec![
        Scalar::from_i64(1, Field::Q),
        Scalar::from_i64(2, Field::Q),
        Scalar::from_i64(-3, Field::Q),
        Scalar::rational(1, 2),
    ];
    let chain_at = |uval: &Scalar| -> Vec<Matrix> {
        vec![
            e(1),
            e(3).add(&e(5).scale(uval)),
            e(2),
            e(4).sub(&e(6).scale(uval)),
            e(3),
            e(7),
            e(4),
            e(8),
        ]
    };
    for t in &sampled {
        let u_op = scene.u_of(t);
        let moved = u_op.mul(&w_op);
        let flag = scene.flag_of_operator(&moved)?;
        let uval = t.inv().unwrap();
        let claimed = Flag::from_chain(&chain_at(&uval), &scene.base_flag_dims)?;
        if flag != claimed {
            return Err(Error::Internal(format!(
                "family flag at t={t} does not match the rewritten chain"
            )));
        }
        // (3a) phi along the family stays put
        let val = phi(&flag, &scene)?;
        if val != expected_family {
            return Err(Error::Internal(format!("family phi moved at t={t}")));
        }
    }
    let w_phi = phi(&w_flag, &scene)?;
    let family_ok = w_phi == expected_family;

    // (2) the exact limit of the chain at 1/t -> 0 is the s-twisted flag
    let s_op = scene.operator(&scene.s);
    let s_flag = scene.flag_of_operator(&s_op)?;
    let poly_chain: Vec<PolyRow> = {
        let zero = || Poly::zero();
        let one = Scalar::one(Field::Q);
        let mut rows: Vec<PolyRow> = Vec::new();
        // f1, f3 + u f5, f2, f4 - u f6, f3, f7, f4, f8 as coefficient rows
        let mut mk = |entries: Vec<(usize, Poly)>| {
            let mut row: PolyRow = (0..DIM).map(|_| zero()).collect();
            for (i, p) in entries {
                row[i - 1] = p;
            }
            rows.push(row);
        };
        mk(vec![(1, Poly::constant(one.clone()))]);
        mk(vec![
            (3, Poly::constant(one.clone())),
            (5, Poly::linear(Scalar::zero(Field::Q), one.clone())),
        ]);
        mk(vec![(2, Poly::constant(one.clone()))]);
        mk(vec![
            (4, Poly::constant(one.clone())),
            (
                6,
                Poly::linear(Scalar::zero(Field::Q), Scalar::from_i64(-1, Field::Q)),
            ),
        ]);
        mk(vec![(3, Poly::constant(one.clone()))]);
        mk(vec![(7, Poly::constant(one.clone()))]);
        mk(vec![(4, Poly::constant(one.clone()))]);
        mk(vec![(8, Poly::constant(one))]);
        rows
    };
    let mut limit_flag_equal = true;
    for (idx, &d) in scene.base_flag_dims.iter().enumerate() {
        let limit = limit_subspace_at_zero(poly_chain[..d].to_vec())?;
        if limit != s_flag.spaces[idx] {
            limit_flag_equal = false;
        }
    }

    // (3b) phi of the limit flag
    let s_phi = phi(&s_flag, &scene)?;
    let phi_limit_ok = s_phi == expected_limit_phi;

    // both outputs are alpha-isotropic of dimension two
    for space in [&w_phi, &s_phi] {
        if space.dim() != 2 || !scene.alpha_isotropic(space)? {
            return Err(Error::Internal(
                "phi output is not a Lagrangian plane".into(),
            ));
        }
    }

    let phi_values_differ = w_phi != s_phi;
    Ok(NonContinuityReport {
        family_phi: space_strings(&w_phi),
        limit_flag_equal,
        phi_limit: space_strings(&s_phi),
        phi_values_differ,
        discontinuous: family_ok && limit_flag_equal && phi_limit_ok && phi_values_differ,
        sampled_t: sampled.iter().map(|t| t.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scene_invariants() {
        let scene = build_scene().unwrap();
        // omega(f1, f8) = 1
        let gram = &scene.omega;
        assert!(gram.get(0, 7).is_one());
        // N f5 = f1, N f6 = f2, N f7 = -f3, N f8 = -f4
        assert!(scene.nilpotent.get(0, 4).is_one());
        assert!(scene.nilpotent.get(1, 5).is_one());
        assert_eq!(scene.nilpotent.get(2, 6), &Scalar::from_i64(-1, Field::Q));
        assert_eq!(scene.nilpotent.get(3, 7), &Scalar::from_i64(-1, Field::Q));
    }

    #[test]
    fn phi_golden_values() {
        let scene = build_scene().unwrap();
        let e = |i: usize| {
            let mut v = Matrix::zero(DIM, 1, Field::Q);
            v.set(i - 1, 0, Scalar::one(Field::Q));
            v
        };
        let w_flag = scene.flag_of_operator(&scene.operator(&scene.w)).unwrap();
        assert_eq!(phi(&w_flag, &scene).unwrap(), span_of(&[e(1), e(2)]));
        let s_flag = scene.flag_of_operator(&scene.operator(&scene.s)).unwrap();
        assert_eq!(phi(&s_flag, &scene).unwrap(), span_of(&[e(1), e(3)]));
    }

    #[test]
    fn full_report_passes() {
        let rep = verify_noncontinuity().unwrap();
        assert!(rep.limit_flag_equal);
        assert!(rep.phi_values_differ);
        assert!(rep.discontinuous);
    }

    #[test]
    fn limit_machinery_rescales() {
        // span{u e1 + e2} tends to span{e2}; span{e1 + u e2, e1} needs the
        // saturation step and tends to span{e1, e2}
        let one = Scalar::one(Field::Q);
        let rows = vec![vec![
            Poly::linear(Scalar::zero(Field::Q), one.clone()),
            Poly::constant(one.clone()),
        ]];
        let lim = limit_subspace_at_zero(rows).unwrap();
        assert_eq!(lim.dim(), 1);
        assert!(lim.basis()[0].get(0, 0).is_zero());

        let rows = vec![
            vec![
                Poly::constant(one.clone()),
                Poly::linear(Scalar::zero(Field::Q), one.clone()),
            ],
            vec![Poly::constant(one.clone()), Poly::zero()],
        ];
        let lim = limit_subspace_at_zero(rows).unwrap();
        assert_eq!(lim.dim(), 2);
    }
}
