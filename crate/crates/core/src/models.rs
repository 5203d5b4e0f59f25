//! The matrix models: group membership equations, the order-two nilpotent,
//! the Theta and Pi maps, Lie algebra bases over exact fields, the Dickson
//! invariant and the characteristic-2 chi sequence.
//!
//! Type A is the general linear model on n letters. Types B, C, D are cut out
//! by antidiagonal form equations; type B is realized in size n+1 (with a
//! marked fixed vector) so that the group scheme stays smooth, and all of its
//! matrix-level objects live there.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::matspace::{solution_space, MatSpace};
use crate::perm::Perm;
use crate::rng::Rng;
use crate::scalar::{Field, Scalar};
use crate::weyl::{ambient_perm_matrix, Family, ModelSpec};

/// The distinguished subgroups of a model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupTag {
    /// The full group of the model.
    G,
    /// The Borel of upper-triangular members.
    Borel,
    /// The diagonal maximal torus.
    T,
    /// The block-upper parabolic with corner blocks of size r.
    P,
    /// The Levi of block-diagonal members.
    L,
    /// The centralizer of the nilpotent.
    Z,
    /// The corner-coupled reductive subgroup with trivial middle block.
    H,
    /// The Borel conjugated by a Weyl element: w B w^{-1}.
    BorelConj(Perm),
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupTag::G => write!(f, "G"),
            GroupTag::Borel => write!(f, "B"),
            GroupTag::T => write!(f, "T"),
            GroupTag::P => write!(f, "P"),
            GroupTag::L => write!(f, "L"),
            GroupTag::Z => write!(f, "Z"),
            GroupTag::H => write!(f, "H"),
            GroupTag::BorelConj(w) => write!(f, "Bw:{w}"),
        }
    }
}

/// One of the concrete matrix groups a model is assembled from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    /// Gl_m.
    Gl(usize),
    /// The even orthogonal model in size d (d even), with the refined
    /// isotropy rows and the Dickson component condition.
    OrthEven(usize),
    /// The odd orthogonal model for degree n (ambient n+1), fixing the
    /// difference of the two middle basis vectors.
    OrthOdd(usize),
    /// The symplectic model in size d.
    Symp(usize),
}

impl GroupKind {
    pub fn ambient(&self) -> usize {
        match self {
            GroupKind::Gl(m) => *m,
            GroupKind::OrthEven(d) => *d,
            GroupKind::OrthOdd(n) => *n + 1,
            GroupKind::Symp(d) => *d,
        }
    }
}

impl ModelSpec {
    pub fn group_kind(&self) -> GroupKind {
        match self.family {
            Family::A => GroupKind::Gl(self.n),
            Family::B => GroupKind::OrthOdd(self.n),
            Family::D => GroupKind::OrthEven(self.n),
            Family::C => GroupKind::Symp(self.n),
        }
    }

    pub fn middle_group_kind(&self) -> GroupKind {
        let m = self.middle();
        match self.family {
            Family::A => GroupKind::Gl(m),
            Family::B => GroupKind::OrthOdd(m),
            Family::D => GroupKind::OrthEven(m),
            Family::C => GroupKind::Symp(m),
        }
    }

    /// The group cut out on the corner block A of Z: for B/D it is the
    /// symplectic model in size r; for C the plain antidiagonal orthogonal
    /// group; type A has a free corner.
    pub fn corner_is_symplectic(&self) -> bool {
        matches!(self.family, Family::B | Family::D)
    }

    /// Block boundaries of the ambient: (r, ambient-2r, r).
    pub fn block_of(&self, idx: usize) -> usize {
        let r = self.r;
        let alen = self.ambient();
        if idx < r {
            0
        } else if idx < alen - r {
            1
        } else {
            2
        }
    }
}

/// The matrix I_{eps,m}: identity on the first ceil(m/2) coordinates, eps on
/// the rest.
pub fn i_eps(eps: i64, m: usize, field: Field) -> Matrix {
    let mut out = Matrix::identity(m, field);
    for i in (m + 1) / 2..m {
        out.set(i, i, Scalar::from_i64(eps, field));
    }
    out
}

/// The order-two nilpotent of the model: the corner block is I_r for type A
/// and I_{-eps,r} for B/C/D, in ambient size (n+1 for type B).
pub struct NilpotentE {
    pub matrix: Matrix,
    pub ambient: usize,
    pub rank: usize,
}

pub fn nilpotent_e(spec: &ModelSpec, field: Field) -> NilpotentE {
    let alen = spec.ambient();
    let r = spec.r;
    let mut m = Matrix::zero(alen, alen, field);
    let corner = match spec.family {
        Family::A => Matrix::identity(r, field),
        _ => i_eps(-spec.epsilon(), r, field),
    };
    m.set_block(0, alen - r, &corner);
    debug_assert!(m.pow(2).is_zero());
    debug_assert_eq!(m.rank(), r);
    NilpotentE {
        matrix: m,
        ambient: alen,
        rank: r,
    }
}

/// The marked vector of the odd orthogonal model: e_m - e_{m+1} in ambient
/// size n+1 with m = (n+1)/2.
fn dagger(n: usize, field: Field) -> Matrix {
    let alen = n + 1;
    let m = (n + 1) / 2;
    let mut v = Matrix::zero(alen, 1, field);
    v.set(m - 1, 0, Scalar::one(field));
    v.set(m, 0, Scalar::from_i64(-1, field));
    v
}

/// Value of the Dickson invariant on an orthogonal matrix over GF(2),
/// evaluated as rank(g + 1) mod 2. Errors on non-orthogonal input.
pub fn dickson(g: &Matrix, m: usize) -> Result<u8> {
    if g.field() != Field::Fp(2) {
        return Err(Error::FieldMismatch("dickson expects GF(2)".into()));
    }
    if !orthogonal_form_member(g, 2 * m) {
        return Err(Error::NotAMember(format!("O_{}(GF(2))", 2 * m)));
    }
    let rank = g.add(&Matrix::identity(2 * m, g.field())).rank();
    Ok((rank % 2) as u8)
}

/// Membership in the full orthogonal group of the antidiagonal quadratic
/// form (no component condition): the matrix form equation plus the refined
/// isotropy rows that matter in characteristic 2.
fn orthogonal_form_member(g: &Matrix, d: usize) -> bool {
    if g.rows() != d || g.cols() != d {
        return false;
    }
    if g.antitranspose().mul(g) != Matrix::identity(d, g.field()) {
        return false;
    }
    // each column stays isotropic for the quadratic form itself
    let m = d / 2;
    for i in 0..d {
        let mut acc = Scalar::zero(g.field());
        for k in 0..m {
            acc = acc.add(&g.get(k, i).mul(g.get(d - 1 - k, i)));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

fn component_is_neutral(g: &Matrix) -> bool {
    match g.field() {
        Field::Fp(2) => {
            let n = g.rows();
            g.add(&Matrix::identity(n, g.field())).rank() % 2 == 0
        }
        _ => g.det().is_one(),
    }
}

/// Membership in one of the concrete groups.
pub fn group_member(kind: GroupKind, g: &Matrix) -> bool {
    let alen = kind.ambient();
    if g.rows() != alen || g.cols() != alen {
        return false;
    }
    match kind {
        GroupKind::Gl(_) => !g.det().is_zero(),
        GroupKind::OrthEven(d) => orthogonal_form_member(g, d) && component_is_neutral(g),
        GroupKind::OrthOdd(n) => {
            let dag = dagger(n, g.field());
            orthogonal_form_member(g, n + 1) && component_is_neutral(g) && g.mul(&dag) == dag
        }
        GroupKind::Symp(d) => {
            let i = i_eps(-1, d, g.field());
            i.mul(&g.antitranspose()).mul(&i).mul(g) == Matrix::identity(d, g.field())
        }
    }
}

/// Evaluate the model's defining equations for a subgroup tag.
pub fn member(g: &Matrix, tag: &GroupTag, spec: &ModelSpec) -> Result<bool> {
    let alen = spec.ambient();
    if g.rows() != alen || g.cols() != alen {
        return Err(Error::ShapeMismatch(format!(
            "expected {}x{} for {}",
            alen, alen, spec
        )));
    }
    let in_g = group_member(spec.group_kind(), g);
    if !in_g {
        return Ok(false);
    }
    let ok = match tag {
        GroupTag::G => true,
        GroupTag::Borel => upper_triangular(g),
        GroupTag::T => diagonal(g),
        GroupTag::P => block_lower_zero(g, spec),
        GroupTag::L => block_diagonal(g, spec),
        GroupTag::Z => {
            let e = nilpotent_e(spec, g.field()).matrix;
            g.mul(&e) == e.mul(g)
        }
        GroupTag::H => h_pattern(g, spec),
        GroupTag::BorelConj(w) => {
            let p = ambient_perm_matrix(w, spec, g.field());
            let conj = p.inverse().unwrap().mul(g).mul(&p);
            upper_triangular(&conj)
        }
    };
    Ok(ok)
}

fn upper_triangular(g: &Matrix) -> bool {
    for i in 0..g.rows() {
        for j in 0..i {
            if !g.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

fn diagonal(g: &Matrix) -> bool {
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            if i != j && !g.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

fn block_lower_zero(g: &Matrix, spec: &ModelSpec) -> bool {
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            if spec.block_of(i) > spec.block_of(j) && !g.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

fn block_diagonal(g: &Matrix, spec: &ModelSpec) -> bool {
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            if spec.block_of(i) != spec.block_of(j) && !g.get(i, j).is_zero() {
                return false;
            }
        }
    }
    true
}

fn h_pattern(g: &Matrix, spec: &ModelSpec) -> bool {
    if !block_diagonal(g, spec) {
        return false;
    }
    let r = spec.r;
    let alen = spec.ambient();
    let field = g.field();
    let mid = g.submatrix(r..alen - r, r..alen - r);
    if mid != Matrix::identity(alen - 2 * r, field) {
        return false;
    }
    let a = g.submatrix(0..r, 0..r);
    let c = g.submatrix(alen - r..alen, alen - r..alen);
    let expected = match spec.family {
        Family::A => a,
        _ => {
            let i = i_eps(-spec.epsilon(), r, field);
            i.mul(&a).mul(&i)
        }
    };
    c == expected
}

/// The model involution on the Levi: swap the corner blocks, conjugating by
/// I_{-eps,r} outside type A.
pub fn apply_theta(l: &Matrix, spec: &ModelSpec) -> Result<Matrix> {
    if !member(l, &GroupTag::L, spec)? {
        return Err(Error::NotAMember("L".into()));
    }
    let r = spec.r;
    let alen = spec.ambient();
    let field = l.field();
    let a = l.submatrix(0..r, 0..r);
    let b = l.submatrix(r..alen - r, r..alen - r);
    let c = l.submatrix(alen - r..alen, alen - r..alen);
    let (new_a, new_c) = match spec.family {
        Family::A => (c, a),
        _ => {
            let i = i_eps(-spec.epsilon(), r, field);
            (i.mul(&c).mul(&i), i.mul(&a).mul(&i))
        }
    };
    let mut out = Matrix::zero(alen, alen, field);
    out.set_block(0, 0, &new_a);
    out.set_block(r, r, &b);
    out.set_block(alen - r, alen - r, &new_c);
    Ok(out)
}

/// The retraction from Z to H: keep the corner blocks, reset the middle to
/// the identity, kill the strict upper blocks.
pub fn apply_varpi(z: &Matrix, spec: &ModelSpec) -> Result<Matrix> {
    if !member(z, &GroupTag::Z, spec)? {
        return Err(Error::NotAMember("Z".into()));
    }
    let r = spec.r;
    let alen = spec.ambient();
    let field = z.field();
    let a = z.submatrix(0..r, 0..r);
    let corner = match spec.family {
        Family::A => a.clone(),
        _ => {
            let i = i_eps(-spec.epsilon(), r, field);
            i.mul(&a).mul(&i)
        }
    };
    let mut out = Matrix::zero(alen, alen, field);
    out.set_block(0, 0, &a);
    out.set_block(r, r, &Matrix::identity(alen - 2 * r, field));
    out.set_block(alen - r, alen - r, &corner);
    Ok(out)
}

// ---- Lie algebra bases ----------------------------------------------------

struct RowBuilder {
    n: usize,
    rows: Vec<Vec<Scalar>>,
    field: Field,
}

impl RowBuilder {
    fn new(n: usize, field: Field) -> RowBuilder {
        RowBuilder {
            n,
            rows: Vec::new(),
            field,
        }
    }

    fn row(&mut self, terms: &[(usize, usize, i64)]) {
        let mut r = vec![Scalar::zero(self.field); self.n * self.n];
        for &(i, j, c) in terms {
            let idx = i * self.n + j;
            r[idx] = r[idx].add(&Scalar::from_i64(c, self.field));
        }
        self.rows.push(r);
    }
}

/// Constraint rows cutting out the Lie algebra of one of the concrete groups
/// inside the full matrix space.
fn lie_group_rows(kind: GroupKind, field: Field, rb: &mut RowBuilder) {
    let alen = kind.ambient();
    match kind {
        GroupKind::Gl(_) => {}
        GroupKind::OrthEven(_) | GroupKind::OrthOdd(_) => {
            // dX + X = 0, and the linearized refined isotropy rows: the
            // antidiagonal entries vanish (these matter only in char 2)
            for i in 0..alen {
                for j in 0..alen {
                    rb.row(&[(i, j, 1), (alen - 1 - j, alen - 1 - i, 1)]);
                }
                rb.row(&[(alen - 1 - i, i, 1)]);
            }
            if let GroupKind::OrthOdd(n) = kind {
                let dag = dagger(n, field);
                // X dagger = 0
                for i in 0..alen {
                    let terms: Vec<(usize, usize, i64)> = (0..alen)
                        .filter(|&k| !dag.get(k, 0).is_zero())
                        .map(|k| {
                            let c = if dag.get(k, 0).is_one() { 1 } else { -1 };
                            (i, k, c)
                        })
                        .collect();
                    rb.row(&terms);
                }
            }
        }
        GroupKind::Symp(d) => {
            // I dX I + X = 0 with I = I_{-1,d}
            let sign = |x: usize| if x < (d + 1) / 2 { 1i64 } else { -1 };
            for i in 0..d {
                for j in 0..d {
                    rb.row(&[(i, j, 1), (d - 1 - j, d - 1 - i, sign(i) * sign(j))]);
                }
            }
        }
    }
}

/// Basis of the tangent space at the identity cut out by the linearized
/// defining equations of the tagged subgroup.
pub fn lie_basis(tag: &GroupTag, spec: &ModelSpec, field: Field) -> Result<MatSpace> {
    if spec.family == Family::C && field.characteristic() == 2 {
        return Err(Error::CharTwoUnsupported(
            "type C has no smooth model in characteristic 2".into(),
        ));
    }
    let alen = spec.ambient();
    let mut rb = RowBuilder::new(alen, field);
    lie_group_rows(spec.group_kind(), field, &mut rb);
    match tag {
        GroupTag::G => {}
        GroupTag::Borel => {
            for i in 0..alen {
                for j in 0..i {
                    rb.row(&[(i, j, 1)]);
                }
            }
        }
        GroupTag::T => {
            for i in 0..alen {
                for j in 0..alen {
                    if i != j {
                        rb.row(&[(i, j, 1)]);
                    }
                }
            }
        }
        GroupTag::P => {
            for i in 0..alen {
                for j in 0..alen {
                    if spec.block_of(i) > spec.block_of(j) {
                        rb.row(&[(i, j, 1)]);
                    }
                }
            }
        }
        GroupTag::L => {
            for i in 0..alen {
                for j in 0..alen {
                    if spec.block_of(i) != spec.block_of(j) {
                        rb.row(&[(i, j, 1)]);
                    }
                }
            }
        }
        GroupTag::Z => {
            // [X, e] = 0
            let e = nilpotent_e(spec, field).matrix;
            for i in 0..alen {
                for j in 0..alen {
                    let mut terms = Vec::new();
                    for k in 0..alen {
                        let ekj = e.get(k, j);
                        if !ekj.is_zero() {
                            terms.push((i, k, if ekj.is_one() { 1 } else { -1 }));
                        }
                        let eik = e.get(i, k);
                        if !eik.is_zero() {
                            terms.push((k, j, if eik.is_one() { -1 } else { 1 }));
                        }
                    }
                    if !terms.is_empty() {
                        rb.row(&terms);
                    }
                }
            }
        }
        GroupTag::H => {
            let r = spec.r;
            for i in 0..alen {
                for j in 0..alen {
                    let (bi, bj) = (spec.block_of(i), spec.block_of(j));
                    if bi != bj || (bi == 1 && bj == 1) {
                        rb.row(&[(i, j, 1)]);
                    }
                }
            }
            // corner coupling: X_33 = X_11 (type A) or I X_11 I (B/C/D)
            let sign = |x: usize| {
                if spec.family == Family::A || x < (r + 1) / 2 {
                    1i64
                } else {
                    -spec.epsilon()
                }
            };
            for i in 0..r {
                for j in 0..r {
                    rb.row(&[(alen - r + i, alen - r + j, 1), (i, j, -sign(i) * sign(j))]);
                }
            }
        }
        GroupTag::BorelConj(w) => {
            let p = ambient_perm_matrix(w, spec, field);
            let pi = Perm::from_monomial(&p).unwrap();
            for i in 1..=alen {
                for j in 1..=i - 1 {
                    rb.row(&[(pi.apply(i) - 1, pi.apply(j) - 1, 1)]);
                }
            }
        }
    }
    Ok(solution_space(alen, alen, field, &rb.rows))
}

/// The space of matrices supported on the strict upper block pattern (the
/// nilradical pattern of P), not intersected with the Lie algebra.
pub fn strict_upper_block_space(spec: &ModelSpec, field: Field) -> MatSpace {
    let alen = spec.ambient();
    let mut rb = RowBuilder::new(alen, field);
    for i in 0..alen {
        for j in 0..alen {
            if spec.block_of(i) >= spec.block_of(j) {
                rb.row(&[(i, j, 1)]);
            }
        }
    }
    solution_space(alen, alen, field, &rb.rows)
}

/// Constraint rows for the corner group of Z (the form condition on the A
/// block): I_{-eps,r} dX I_{-eps,r} + X = 0.
pub fn corner_lie_space(spec: &ModelSpec, field: Field) -> MatSpace {
    let r = spec.r;
    let mut rb = RowBuilder::new(r, field);
    match spec.family {
        Family::A => {}
        _ => {
            let meps = -spec.epsilon();
            let sign = |x: usize| if x < (r + 1) / 2 { 1i64 } else { meps };
            for i in 0..r {
                for j in 0..r {
                    rb.row(&[(i, j, 1), (r - 1 - j, r - 1 - i, sign(i) * sign(j))]);
                }
            }
        }
    }
    solution_space(r, r, field, &rb.rows)
}

pub fn middle_lie_space(spec: &ModelSpec, field: Field) -> MatSpace {
    let m = spec.ambient_middle();
    let mut rb = RowBuilder::new(m, field);
    lie_group_rows(spec.middle_group_kind(), field, &mut rb);
    solution_space(m, m, field, &rb.rows)
}

/// Lie algebra of the upper-triangular Borel of the middle-block group, in
/// the middle's own ambient size.
pub fn middle_borel_lie(spec: &ModelSpec, field: Field) -> MatSpace {
    let m = spec.ambient_middle();
    let mut rb = RowBuilder::new(m, field);
    lie_group_rows(spec.middle_group_kind(), field, &mut rb);
    for i in 0..m {
        for j in 0..i {
            rb.row(&[(i, j, 1)]);
        }
    }
    solution_space(m, m, field, &rb.rows)
}

/// Membership in the middle-block group of the model.
pub fn middle_group_member(spec: &ModelSpec, g: &Matrix) -> bool {
    group_member(spec.middle_group_kind(), g)
}

/// Embed a middle-sized matrix as the central block of an ambient-sized one,
/// identity elsewhere when `unital`, zero otherwise.
pub fn embed_middle(spec: &ModelSpec, block: &Matrix, unital: bool) -> Matrix {
    let alen = spec.ambient();
    let r = spec.r;
    let mut out = if unital {
        Matrix::identity(alen, block.field())
    } else {
        Matrix::zero(alen, alen, block.field())
    };
    out.set_block(r, r, block);
    out
}

/// Cayley transform (1 - X)^{-1}(1 + X): maps form-skew matrices into the
/// corresponding group over a characteristic-zero field.
pub fn cayley(x: &Matrix) -> Result<Matrix> {
    let n = x.rows();
    let id = Matrix::identity(n, x.field());
    let num = id.add(x);
    let den = id.sub(x);
    Ok(den.inverse()?.mul(&num))
}

fn random_in_space(space: &MatSpace, rng: &mut Rng, range: u64) -> Matrix {
    let (rows, cols) = space.ambient();
    let mut out = Matrix::zero(rows, cols, space.field());
    for b in space.basis() {
        let c = Scalar::from_i64(rng.small_int(range), space.field());
        if !c.is_zero() {
            out = out.add(&b.scale(&c));
        }
    }
    out
}

fn random_cayley(space: &MatSpace, rng: &mut Rng) -> Matrix {
    loop {
        let x = random_in_space(space, rng, 2);
        if let Ok(g) = cayley(&x) {
            return g;
        }
    }
}

fn random_invertible(n: usize, rng: &mut Rng, field: Field) -> Matrix {
    loop {
        let data: Vec<i64> = (0..n * n).map(|_| rng.small_int(3)).collect();
        let m = Matrix::from_i64(n, n, &data, field);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// A pseudorandom rational point of Z, assembled from a random fixed-part
/// Levi element and a random unipotent from the strict-upper part of Lie Z.
pub fn random_z_element(spec: &ModelSpec, rng: &mut Rng) -> Result<Matrix> {
    let field = Field::Q;
    let alen = spec.ambient();
    let r = spec.r;
    let (a, b) = match spec.family {
        Family::A => (
            random_invertible(r, rng, field),
            random_invertible(spec.middle(), rng, field),
        ),
        _ => (
            random_cayley(&corner_lie_space(spec, field), rng),
            random_cayley(&middle_lie_space(spec, field), rng),
        ),
    };
    let corner = match spec.family {
        Family::A => a.clone(),
        _ => {
            let i = i_eps(-spec.epsilon(), r, field);
            i.mul(&a).mul(&i)
        }
    };
    let mut levi = Matrix::zero(alen, alen, field);
    levi.set_block(0, 0, &a);
    levi.set_block(r, r, &b);
    levi.set_block(alen - r, alen - r, &corner);

    let lie_z = lie_basis(&GroupTag::Z, spec, field)?;
    let upper = lie_z.intersect(&strict_upper_block_space(spec, field))?;
    let unip = cayley(&random_in_space(&upper, rng, 2))?;
    let z = levi.mul(&unip);
    if !member(&z, &GroupTag::Z, spec)? {
        return Err(Error::Internal("sampled element left Z".into()));
    }
    Ok(z)
}

// ---- characteristic 2 -----------------------------------------------------

/// The quadratic form q(y) = sum y_k y_{n-k+1} over k up to (n+1)/2 (the
/// middle term is a square for odd n).
fn quad_form(v: &Matrix) -> Scalar {
    let n = v.rows();
    let mut acc = Scalar::zero(v.field());
    for k in 0..(n + 1) / 2 {
        acc = acc.add(&v.get(k, 0).mul(v.get(n - 1 - k, 0)));
    }
    acc
}

fn polar_form(u: &Matrix, v: &Matrix) -> Scalar {
    let sum = u.add(v);
    quad_form(&sum).sub(&quad_form(u)).sub(&quad_form(v))
}

/// Does the quadratic form and its polar form vanish identically on the
/// subspace?
pub fn totally_isotropic(space: &MatSpace) -> bool {
    let basis = space.basis();
    for (i, u) in basis.iter().enumerate() {
        if !quad_form(u).is_zero() {
            return false;
        }
        for v in basis.iter().skip(i + 1) {
            if !polar_form(u, v).is_zero() {
                return false;
            }
        }
    }
    true
}

/// For m = 1..m_max, the minimal l with N^l(Ker N^m) totally isotropic.
/// N must be nilpotent over GF(2).
pub fn chi_sequence(n_mat: &Matrix, n: usize, m_max: usize) -> Result<Vec<usize>> {
    if n_mat.field() != Field::Fp(2) {
        return Err(Error::FieldMismatch("chi sequence expects GF(2)".into()));
    }
    if n_mat.rows() != n || n_mat.cols() != n {
        return Err(Error::ShapeMismatch("chi sequence".into()));
    }
    if !n_mat.pow(n).is_zero() {
        return Err(Error::PreconditionViolated("N is not nilpotent".into()));
    }
    let field = n_mat.field();
    let mut out = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let kernel = MatSpace::span((n, 1), field, &n_mat.pow(m).nullspace())?;
        let mut l = 0usize;
        loop {
            let mut image = kernel.clone();
            for _ in 0..l {
                image = crate::matspace::image(n_mat, &image);
            }
            if totally_isotropic(&image) {
                break;
            }
            l += 1;
            if l > n {
                return Err(Error::Internal("chi sequence failed to stabilize".into()));
            }
        }
        out.push(l);
    }
    Ok(out)
}
