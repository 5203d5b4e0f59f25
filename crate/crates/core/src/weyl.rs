//! Weyl-group combinatorics for the matrix models: membership, lengths,
//! longest elements, parabolic decomposition, Bruhat order.
//!
//! Elements of all four families are carried as plain permutations. For types
//! B, C, D the group is the set of check-symmetric permutations of {1..n}
//! (with an even-count condition in type D), and the simple reflections are
//! realized concretely inside S_n.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Perm;
use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A matrix model: family plus (n, r).
///
/// Constraints: r <= floor(n/2); B needs odd n and even r; D needs even n and
/// even r; C needs even n and odd r.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: Family,
    pub n: usize,
    pub r: usize,
}

impl ModelSpec {
    pub fn new(family: Family, n: usize, r: usize) -> Result<ModelSpec> {
        if n == 0 {
            return Err(Error::InvalidModel("n must be positive".into()));
        }
        if r > n / 2 {
            return Err(Error::InvalidModel(format!("r={r} exceeds floor({n}/2)")));
        }
        match family {
            Family::A => {}
            Family::B => {
                if n % 2 == 0 {
                    return Err(Error::InvalidModel("type B needs odd n".into()));
                }
                if r % 2 != 0 {
                    return Err(Error::InvalidModel("type B needs even r".into()));
                }
            }
            Family::D => {
                if n % 2 != 0 {
                    return Err(Error::InvalidModel("type D needs even n".into()));
                }
                if r % 2 != 0 {
                    return Err(Error::InvalidModel("type D needs even r".into()));
                }
            }
            Family::C => {
                if n % 2 != 0 {
                    return Err(Error::InvalidModel("type C needs even n".into()));
                }
                if r % 2 != 1 {
                    return Err(Error::InvalidModel("type C needs odd r".into()));
                }
            }
        }
        Ok(ModelSpec { family, n, r })
    }

    /// The form sign: +1 for B and D, -1 for C. Not meaningful for A.
    pub fn epsilon(&self) -> i64 {
        match self.family {
            Family::C => -1,
            _ => 1,
        }
    }

    /// Ambient matrix size: n, except n+1 for type B (the odd orthogonal
    /// group is realized inside the even one, fixing a marked vector).
    pub fn ambient(&self) -> usize {
        match self.family {
            Family::B => self.n + 1,
            _ => self.n,
        }
    }

    /// Width of the middle block at the permutation level.
    pub fn middle(&self) -> usize {
        self.n - 2 * self.r
    }

    /// Width of the middle block at the matrix level (n+1-2r for B).
    pub fn ambient_middle(&self) -> usize {
        self.ambient() - 2 * self.r
    }

    pub fn weyl_kind(&self) -> WeylKind {
        match self.family {
            Family::A => WeylKind::Sym(self.n),
            _ => WeylKind::Signed {
                eps: self.epsilon(),
                d: self.n,
            },
        }
    }

    pub fn middle_kind(&self) -> WeylKind {
        match self.family {
            Family::A => WeylKind::Sym(self.middle()),
            _ => WeylKind::Signed {
                eps: self.epsilon(),
                d: self.middle(),
            },
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, r={})", self.family, self.n, self.r)
    }
}

/// Either the full symmetric group S_m, or the check-symmetric subgroup of
/// S_d cut out by a model with sign eps (the raw (eps, m) form).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WeylKind {
    Sym(usize),
    Signed { eps: i64, d: usize },
}

impl WeylKind {
    pub fn degree(&self) -> usize {
        match self {
            WeylKind::Sym(m) => *m,
            WeylKind::Signed { d, .. } => *d,
        }
    }
}

/// Membership test for the model Weyl group.
///
/// Type A: everything. B/C/D: check_of(p) = p, and for eps = +1 with even d
/// the count #{i <= d/2 : p(i) > d/2} must be even.
pub fn in_weyl(p: &Perm, kind: WeylKind) -> bool {
    match kind {
        WeylKind::Sym(m) => p.degree() == m,
        WeylKind::Signed { eps, d } => {
            if p.degree() != d || p.check_of() != *p {
                return false;
            }
            if eps == 1 && d % 2 == 0 {
                top_half_count(p) % 2 == 0
            } else {
                true
            }
        }
    }
}

/// #{i <= floor(d/2) : p(i) > floor(d/2)}.
pub fn top_half_count(p: &Perm) -> usize {
    let h = p.degree() / 2;
    (1..=h).filter(|&i| p.apply(i) > h).count()
}

/// Length in the model's own Coxeter system, computed from inversions:
/// type A it is the inversion count; B/C/D it is
/// (inversions(p) - eps * top_half_count(p)) / 2.
pub fn type_length(p: &Perm, kind: WeylKind) -> Result<usize> {
    if !in_weyl(p, kind) {
        return Err(Error::NotInWeylGroup(p.to_string()));
    }
    match kind {
        WeylKind::Sym(_) => Ok(p.inversions()),
        WeylKind::Signed { eps, .. } => {
            let inv = p.inversions() as i64;
            let q = top_half_count(p) as i64;
            let num = inv - eps * q;
            if num < 0 || num % 2 != 0 {
                return Err(Error::Internal(format!(
                    "length formula gave non-integral value for {p}"
                )));
            }
            Ok((num / 2) as usize)
        }
    }
}

/// The realized simple reflections of the model, as permutations of {1..d}.
pub fn simple_reflections(kind: WeylKind) -> Vec<Perm> {
    match kind {
        WeylKind::Sym(m) => (1..m).map(|i| Perm::transposition(m, i, i + 1)).collect(),
        WeylKind::Signed { eps, d } => {
            let m = d / 2;
            let mut gens = Vec::new();
            for i in 1..m {
                let s = Perm::transposition(d, i, i + 1).compose(&Perm::transposition(
                    d,
                    d - i,
                    d - i + 1,
                ));
                gens.push(s);
            }
            if eps == -1 {
                // type C: the long simple reflection swaps the middle pair
                if m >= 1 {
                    gens.push(Perm::transposition(d, m, m + 1));
                }
            } else if d % 2 == 1 {
                // type B: swap across the fixed middle point
                if m >= 1 {
                    gens.push(Perm::transposition(d, m, m + 2));
                }
            } else if m >= 2 {
                // type D: the fork generator
                let s =
                    Perm::transposition(d, m - 1, m + 1).compose(&Perm::transposition(d, m, m + 2));
                gens.push(s);
            }
            gens
        }
    }
}

/// Length recomputed by greedy descent: repeatedly right-multiply by a
/// realized simple reflection that strictly decreases the inversion count.
/// Cross-checked against type_length in tests, not assumed here.
pub fn coxeter_length(p: &Perm, kind: WeylKind) -> Result<usize> {
    if !in_weyl(p, kind) {
        return Err(Error::NotInWeylGroup(p.to_string()));
    }
    let gens = simple_reflections(kind);
    let mut cur = p.clone();
    let mut steps = 0usize;
    while !cur.is_identity() {
        let inv = cur.inversions();
        let next = gens
            .iter()
            .map(|s| cur.compose(s))
            .find(|c| c.inversions() < inv);
        match next {
            Some(c) => {
                cur = c;
                steps += 1;
            }
            None => {
                return Err(Error::Internal(format!(
                    "no descending simple reflection at {cur}"
                )))
            }
        }
    }
    Ok(steps)
}

/// The longest element of the model Weyl group: the antidiagonal, except in
/// type D with d/2 odd where the middle pair is fixed (the plain antidiagonal
/// fails the even-count condition there).
pub fn longest_element(kind: WeylKind) -> Perm {
    let d = kind.degree();
    let anti = Perm::from_images((1..=d).map(|i| d + 1 - i).collect()).unwrap();
    match kind {
        WeylKind::Sym(_) => anti,
        WeylKind::Signed { eps, d } => {
            if eps == 1 && d % 2 == 0 && (d / 2) % 2 == 1 {
                let mut images: Vec<usize> = (1..=d).map(|i| d + 1 - i).collect();
                images[d / 2 - 1] = d / 2;
                images[d / 2] = d / 2 + 1;
                Perm::from_images(images).unwrap()
            } else {
                anti
            }
        }
    }
}

/// The longest element of the middle-block Weyl group of the model.
pub fn u0(spec: &ModelSpec) -> Perm {
    longest_element(spec.middle_kind())
}

/// All elements of the model's Weyl group, sorted lexicographically.
/// For B/C/D an element is determined by its images on the bottom half (the
/// check-symmetry forces the rest), and type D keeps the even-count half.
pub fn enumerate_weyl(kind: WeylKind) -> Vec<Perm> {
    let mut out = Vec::new();
    match kind {
        WeylKind::Sym(m) => {
            let mut images: Vec<usize> = (1..=m).collect();
            permute_all(&mut images, 0, &mut |p| {
                out.push(Perm::from_images(p.to_vec()).unwrap())
            });
        }
        WeylKind::Signed { eps: _, d } => {
            let m = d / 2;
            let mut bottom = Vec::with_capacity(m);
            let mut used_pairs = vec![false; m + 1];
            signed_rec(d, m, &mut bottom, &mut used_pairs, &mut out);
            out.retain(|p| in_weyl(p, kind));
        }
    }
    out.sort();
    out
}

fn permute_all(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

fn signed_rec(
    d: usize,
    m: usize,
    bottom: &mut Vec<usize>,
    used_pairs: &mut Vec<bool>,
    out: &mut Vec<Perm>,
) {
    if bottom.len() == m {
        let mut images = vec![0usize; d];
        for (i, &v) in bottom.iter().enumerate() {
            images[i] = v;
            images[d - 1 - i] = d + 1 - v;
        }
        if d % 2 == 1 {
            images[m] = m + 1;
        }
        out.push(Perm::from_images(images).unwrap());
        return;
    }
    // choose the image of position bottom.len()+1: one element of an unused
    // bar pair {v, d+1-v}
    for pair in 1..=m {
        if used_pairs[pair] {
            continue;
        }
        used_pairs[pair] = true;
        for v in [pair, d + 1 - pair] {
            bottom.push(v);
            signed_rec(d, m, bottom, used_pairs, out);
            bottom.pop();
        }
        used_pairs[pair] = false;
    }
}

/// Order of the model Weyl group, closed form.
pub fn weyl_order(kind: WeylKind) -> u128 {
    fn fact(m: usize) -> u128 {
        (1..=m as u128)
            .try_fold(1u128, u128::checked_mul)
            .expect("factorial overflow")
    }
    match kind {
        WeylKind::Sym(m) => fact(m),
        WeylKind::Signed { eps, d } => {
            let m = d / 2;
            if m == 0 {
                return 1;
            }
            let full = (1u128 << m) * fact(m);
            if eps == 1 && d % 2 == 0 {
                full / 2
            } else {
                full
            }
        }
    }
}

/// The simple reflections of W_P, embedded as permutations of {1..n}: the
/// corner-block transpositions plus the middle model's own generators.
pub fn parabolic_simple_reflections(spec: &ModelSpec) -> Vec<Perm> {
    let (n, r) = (spec.n, spec.r);
    let mid = n - 2 * r;
    let mut gens = Vec::new();
    match spec.family {
        Family::A => {
            for i in 1..r {
                gens.push(Perm::transposition(n, i, i + 1));
            }
            for i in 1..mid {
                gens.push(Perm::transposition(n, r + i, r + i + 1));
            }
            for i in 1..r {
                gens.push(Perm::transposition(n, n - r + i, n - r + i + 1));
            }
        }
        _ => {
            for i in 1..r {
                let s = Perm::transposition(n, i, i + 1).compose(&Perm::transposition(
                    n,
                    n - i,
                    n - i + 1,
                ));
                gens.push(s);
            }
            let idr = Perm::identity(r);
            for t in simple_reflections(spec.middle_kind()) {
                gens.push(Perm::block_diag(&[&idr, &t, &idr]));
            }
        }
    }
    gens
}

/// Minimal coset representative condition for W^P: u is in W and has no
/// descent at any simple reflection of W_P. For type A this is exactly the
/// increasing-block condition; for B/C/D it agrees with the increasing-block
/// plus midpoint conditions whenever the middle block is wide enough to carry
/// the middle model's final generator.
pub fn in_wp_min(u: &Perm, spec: &ModelSpec) -> bool {
    let kind = spec.weyl_kind();
    if !in_weyl(u, kind) {
        return false;
    }
    if spec.family == Family::A {
        let (n, r) = (spec.n, spec.r);
        return u.increasing_on(0, r) && u.increasing_on(r, n - 2 * r) && u.increasing_on(n - r, r);
    }
    let lu = type_length(u, kind).unwrap();
    parabolic_simple_reflections(spec)
        .iter()
        .all(|s| type_length(&u.compose(s), kind).unwrap() > lu)
}

/// Elements of W_P: block-diagonal patterns diag(s1, s2, s3) for type A and
/// diag(s, v, check(s)) with v in the middle Weyl group otherwise.
pub fn enumerate_wp_parabolic(spec: &ModelSpec) -> Vec<Perm> {
    let r = spec.r;
    let mut out = Vec::new();
    match spec.family {
        Family::A => {
            for s1 in enumerate_weyl(WeylKind::Sym(r)) {
                for s2 in enumerate_weyl(WeylKind::Sym(spec.middle())) {
                    for s3 in enumerate_weyl(WeylKind::Sym(r)) {
                        out.push(Perm::block_diag(&[&s1, &s2, &s3]));
                    }
                }
            }
        }
        _ => {
            for s in enumerate_weyl(WeylKind::Sym(r)) {
                for v in enumerate_weyl(spec.middle_kind()) {
                    out.push(Perm::block_diag(&[&s, &v, &s.check_of()]));
                }
            }
        }
    }
    out.sort();
    out
}

/// Is tau in W_P (the block pattern of the model)?
pub fn in_parabolic(tau: &Perm, spec: &ModelSpec) -> bool {
    let (n, r) = (spec.n, spec.r);
    let b1 = tau.extract_block(0, r);
    let b2 = tau.extract_block(r, n - 2 * r);
    let b3 = tau.extract_block(n - r, r);
    let (b1, b2, b3) = match (b1, b2, b3) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return false,
    };
    match spec.family {
        Family::A => true,
        _ => b3 == b1.check_of() && in_weyl(&b2, spec.middle_kind()),
    }
}

/// The unique factorization w = tau o nu with tau in W_P and nu^{-1} in W^P.
pub fn coset_decompose(w: &Perm, spec: &ModelSpec) -> Result<(Perm, Perm)> {
    if !in_weyl(w, spec.weyl_kind()) {
        return Err(Error::NotInWeylGroup(w.to_string()));
    }
    let (n, r) = (spec.n, spec.r);
    let winv = w.inverse();
    let tau = match spec.family {
        Family::A => {
            let sort_block = |k: usize, m: usize| -> Perm {
                let vals: Vec<usize> = (1..=m).map(|j| winv.apply(k + j)).collect();
                Perm::sorting(&vals)
            };
            Perm::block_diag(&[
                &sort_block(0, r),
                &sort_block(r, n - 2 * r),
                &sort_block(n - r, r),
            ])
        }
        _ => {
            let vals: Vec<usize> = (1..=r).map(|j| winv.apply(j)).collect();
            let sigma = Perm::sorting(&vals);
            let mut found: Option<Perm> = None;
            for v in enumerate_weyl(spec.middle_kind()) {
                let tau = Perm::block_diag(&[&sigma, &v, &sigma.check_of()]);
                let candidate = winv.compose(&tau);
                if in_wp_min(&candidate, spec) {
                    if found.is_some() {
                        return Err(Error::Internal(format!(
                            "coset decomposition of {w} is not unique"
                        )));
                    }
                    found = Some(tau);
                }
            }
            found.ok_or_else(|| Error::Internal(format!("no coset decomposition found for {w}")))?
        }
    };
    let u = winv.compose(&tau);
    debug_assert!(in_wp_min(&u, spec), "minimal representative check");
    // w^{-1} = u o tau^{-1}, hence w = tau o u^{-1}
    let nu = u.inverse();
    debug_assert_eq!(tau.compose(&nu), *w);
    Ok((tau, nu))
}

/// The involution induced on W_P by the model's Theta: swap the two corner
/// blocks (type A) or replace diag(s, v, check(s)) by diag(check(s), v, s).
pub fn theta_on_wp(tau: &Perm, spec: &ModelSpec) -> Result<Perm> {
    let (n, r) = (spec.n, spec.r);
    let b1 = tau.extract_block(0, r)?;
    let b2 = tau.extract_block(r, n - 2 * r)?;
    let b3 = tau.extract_block(n - r, r)?;
    Ok(match spec.family {
        Family::A => Perm::block_diag(&[&b3, &b2, &b1]),
        _ => Perm::block_diag(&[&b3.check_of(), &b2, &b1.check_of()]),
    })
}

/// Strong Bruhat order via the standard descent recursion.
pub fn bruhat_leq(u: &Perm, w: &Perm, kind: WeylKind) -> Result<bool> {
    if !in_weyl(u, kind) {
        return Err(Error::NotInWeylGroup(u.to_string()));
    }
    if !in_weyl(w, kind) {
        return Err(Error::NotInWeylGroup(w.to_string()));
    }
    let gens = simple_reflections(kind);
    fn go(u: &Perm, w: &Perm, lu: usize, lw: usize, kind: WeylKind, gens: &[Perm]) -> bool {
        if u == w || u.is_identity() {
            return true;
        }
        if lw == 0 || lu > lw {
            return false;
        }
        let s = gens
            .iter()
            .find(|s| coxeter_step_down(w, s))
            .expect("non-identity element has a descent");
        let ws = w.compose(s);
        let us = u.compose(s);
        let lus = type_length(&us, kind).unwrap();
        if lus < lu {
            go(&us, &ws, lus, lw - 1, kind, gens)
        } else {
            go(u, &ws, lu, lw - 1, kind, gens)
        }
    }
    let lu = type_length(u, kind)?;
    let lw = type_length(w, kind)?;
    Ok(go(u, w, lu, lw, kind, &gens))
}

fn coxeter_step_down(w: &Perm, s: &Perm) -> bool {
    w.compose(s).inversions() < w.inversions()
}

/// Build the ambient-size permutation matrix of a Weyl element: for type B
/// the element of S_n is doubled at the midpoint into S_{n+1}, with the side
/// of the middle pair fixed by the even-count condition.
pub fn ambient_perm_matrix(w: &Perm, spec: &ModelSpec, field: Field) -> Matrix {
    match spec.family {
        Family::B => embed_middle_double(w).to_matrix(field),
        _ => w.to_matrix(field),
    }
}

/// The embedding of a check-symmetric p in S_n (n odd) into S_{n+1}: the
/// fixed midpoint splits into a pair, whose swap is chosen to make the
/// even-count condition hold in S_{n+1}.
pub fn embed_middle_double(p: &Perm) -> Perm {
    let n = p.degree();
    assert!(n % 2 == 1, "middle doubling needs odd degree");
    let m = (n + 1) / 2;
    debug_assert_eq!(p.apply(m), m, "check-symmetric odd permutation fixes m");
    let shift = |x: usize| if x < m { x } else { x + 1 };
    let mut images = vec![0usize; n + 1];
    for i in 1..=n {
        if i == m {
            continue;
        }
        images[shift(i) - 1] = shift(p.apply(i));
    }
    // fix the middle pair, then swap if the parity condition demands it
    images[m - 1] = m;
    images[m] = m + 1;
    let candidate = Perm::from_images(images.clone()).unwrap();
    if top_half_count(&candidate) % 2 == 0 {
        candidate
    } else {
        images[m - 1] = m + 1;
        images[m] = m;
        Perm::from_images(images).unwrap()
    }
}

/// Monomial lift of a Weyl element into the model group over Q, i.e. an
/// honest member of the group whose underlying permutation is the ambient
/// image of w. Entries are 0 and +-1.
pub fn monomial_lift(w: &Perm, kind: WeylKind, field: Field) -> Matrix {
    match kind {
        WeylKind::Sym(_) => w.to_matrix(field),
        WeylKind::Signed { eps: 1, d } if d % 2 == 0 => w.to_matrix(field),
        WeylKind::Signed { eps: 1, d } => {
            // odd orthogonal: embed and negate the middle pair when swapped
            let m = (d + 1) / 2;
            let emb = embed_middle_double(w);
            let mut out = emb.to_matrix(field);
            if emb.apply(m) != m {
                out = out.mul(&diag_signs(d + 1, &[(m, -1), (m + 1, -1)], field));
            }
            out
        }
        WeylKind::Signed { eps: -1, d } => monomial_lift_symplectic(w, d, field),
        _ => unreachable!(),
    }
}

fn diag_signs(n: usize, signs: &[(usize, i64)], field: Field) -> Matrix {
    let mut m = Matrix::identity(n, field);
    for &(i, s) in signs {
        m.set(i - 1, i - 1, Scalar::from_i64(s, field));
    }
    m
}

/// Lift into the group {X : I_{-1,d} dX I_{-1,d} X = I}: the permutation
/// matrix adjusted by signs at the target positions where the permutation
/// crosses the two halves.
fn monomial_lift_symplectic(w: &Perm, d: usize, field: Field) -> Matrix {
    assert!(d % 2 == 0);
    let m = d / 2;
    let sgn = |x: usize| if x <= m { 1i64 } else { -1 };
    let mut out = Matrix::zero(d, d, field);
    let winv = w.inverse();
    for j in 1..=d {
        let i = w.apply(j);
        let s = if i <= m {
            1i64
        } else {
            sgn(winv.apply(i)) * sgn(i)
        };
        out.set(i - 1, j - 1, Scalar::from_i64(s, field));
    }
    out
}

/// Lift of a check-symmetric s in S_r into {X : I_{-1,r} dX I_{-1,r} X = I}
/// following the sign-vector recipe: left-multiply the permutation matrix by
/// diag(lambda, 1) with lambda_i = sign(i) * sign(s^{-1}(i)) on the top half.
pub fn monomial_lift_minus_form(s: &Perm, field: Field) -> Matrix {
    monomial_lift_symplectic(s, s.degree(), field)
}

/// Lift of a check-symmetric s in S_r (odd r) into the plain orthogonal group
/// {X : dX X = I} with determinant one: scale the middle entry by det(s).
pub fn monomial_lift_plus_form_odd(s: &Perm, field: Field) -> Matrix {
    let r = s.degree();
    assert!(r % 2 == 1);
    let mid = (r + 1) / 2;
    let base = s.to_matrix(field);
    base.mul(&diag_signs(r, &[(mid, s.sign())], field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Perm {
        Perm::from_images(images.to_vec()).unwrap()
    }

    fn spec(f: Family, n: usize, r: usize) -> ModelSpec {
        ModelSpec::new(f, n, r).unwrap()
    }

    #[test]
    fn model_constraints() {
        assert!(ModelSpec::new(Family::A, 5, 2).is_ok());
        assert!(ModelSpec::new(Family::A, 5, 3).is_err());
        assert!(ModelSpec::new(Family::B, 5, 2).is_ok());
        assert!(ModelSpec::new(Family::B, 6, 2).is_err());
        assert!(ModelSpec::new(Family::B, 5, 1).is_err());
        assert!(ModelSpec::new(Family::D, 6, 2).is_ok());
        assert!(ModelSpec::new(Family::D, 5, 2).is_err());
        assert!(ModelSpec::new(Family::C, 6, 1).is_ok());
        assert!(ModelSpec::new(Family::C, 6, 2).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(in_weyl(
            &p(&[4, 3, 2, 1]),
            WeylKind::Signed { eps: 1, d: 4 }
        ));
        assert!(in_weyl(
            &p(&[3, 4, 1, 2]),
            WeylKind::Signed { eps: -1, d: 4 }
        ));
        assert!(in_weyl(
            &Perm::identity(4),
            WeylKind::Signed { eps: 1, d: 4 }
        ));
        // check-symmetric with odd count: in type C but not in type D
        assert!(in_weyl(
            &p(&[4, 2, 3, 1]),
            WeylKind::Signed { eps: -1, d: 4 }
        ));
        assert!(!in_weyl(
            &p(&[4, 2, 3, 1]),
            WeylKind::Signed { eps: 1, d: 4 }
        ));
        // not check-symmetric
        assert!(!in_weyl(&p(&[2, 1, 3]), WeylKind::Signed { eps: 1, d: 3 }));
    }

    #[test]
    fn type_length_examples() {
        assert_eq!(
            type_length(&p(&[3, 2, 1]), WeylKind::Signed { eps: 1, d: 3 }).unwrap(),
            1
        );
        assert_eq!(
            type_length(&p(&[6, 5, 3, 4, 2, 1]), WeylKind::Signed { eps: 1, d: 6 }).unwrap(),
            6
        );
        assert_eq!(
            type_length(&Perm::identity(6), WeylKind::Signed { eps: 1, d: 6 }).unwrap(),
            0
        );
        assert_eq!(
            type_length(&p(&[2, 1]), WeylKind::Signed { eps: -1, d: 2 }).unwrap(),
            1
        );
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(WeylKind::Sym(5)), p(&[5, 4, 3, 2, 1]));
        // D with n/2 odd fixes the middle pair
        assert_eq!(
            longest_element(WeylKind::Signed { eps: 1, d: 6 }),
            p(&[6, 5, 3, 4, 2, 1])
        );
        assert_eq!(
            longest_element(WeylKind::Signed { eps: 1, d: 8 }),
            p(&[8, 7, 6, 5, 4, 3, 2, 1])
        );
        for kind in [
            WeylKind::Signed { eps: 1, d: 5 },
            WeylKind::Signed { eps: 1, d: 6 },
            WeylKind::Signed { eps: -1, d: 6 },
        ] {
            assert!(in_weyl(&longest_element(kind), kind));
        }
        // u0 for (A,5,2) lives on one letter
        assert_eq!(u0(&spec(Family::A, 5, 2)), Perm::identity(1));
    }

    #[test]
    fn longest_element_is_maximum() {
        for kind in [
            WeylKind::Sym(4),
            WeylKind::Signed { eps: 1, d: 5 },
            WeylKind::Signed { eps: 1, d: 6 },
            WeylKind::Signed { eps: -1, d: 4 },
        ] {
            let w0 = longest_element(kind);
            let l0 = type_length(&w0, kind).unwrap();
            for w in enumerate_weyl(kind) {
                assert!(type_length(&w, kind).unwrap() <= l0);
                assert!(bruhat_leq(&w, &w0, kind).unwrap());
                assert!(bruhat_leq(&Perm::identity(kind.degree()), &w, kind).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(enumerate_weyl(WeylKind::Sym(4)).len(), 24);
        assert_eq!(enumerate_weyl(WeylKind::Signed { eps: 1, d: 5 }).len(), 8);
        assert_eq!(enumerate_weyl(WeylKind::Signed { eps: 1, d: 6 }).len(), 24);
        assert_eq!(enumerate_weyl(WeylKind::Signed { eps: -1, d: 6 }).len(), 48);
        for kind in [
            WeylKind::Sym(5),
            WeylKind::Signed { eps: 1, d: 7 },
            WeylKind::Signed { eps: 1, d: 8 },
            WeylKind::Signed { eps: -1, d: 8 },
        ] {
            assert_eq!(enumerate_weyl(kind).len() as u128, weyl_order(kind));
        }
    }

    #[test]
    fn greedy_length_matches_formula_small() {
        for kind in [
            WeylKind::Signed { eps: 1, d: 6 },
            WeylKind::Signed { eps: -1, d: 6 },
            WeylKind::Signed { eps: 1, d: 5 },
            WeylKind::Sym(5),
        ] {
            for w in enumerate_weyl(kind) {
                assert_eq!(
                    type_length(&w, kind).unwrap(),
                    coxeter_length(&w, kind).unwrap(),
                    "mismatch at {w} in {kind:?}"
                );
            }
        }
        // spec example: the longest element of D with d=4 has length 2
        assert_eq!(
            coxeter_length(&p(&[4, 3, 2, 1]), WeylKind::Signed { eps: 1, d: 4 }).unwrap(),
            2
        );
    }

    #[test]
    fn coset_decompose_examples() {
        let s = spec(Family::A, 5, 2);
        let w = p(&[3, 1, 4, 2, 5]);
        let (tau, nu) = coset_decompose(&w, &s).unwrap();
        assert!(tau.is_identity());
        assert_eq!(nu, w);

        let w = p(&[1, 2, 3, 5, 4]);
        let (tau, nu) = coset_decompose(&w, &s).unwrap();
        assert_eq!(tau, p(&[1, 2, 3, 5, 4]));
        assert!(nu.is_identity());

        let (tau, nu) = coset_decompose(&Perm::identity(5), &s).unwrap();
        assert!(tau.is_identity() && nu.is_identity());
    }

    #[test]
    fn coset_decompose_length_additive() {
        for s in [
            spec(Family::A, 5, 2),
            spec(Family::D, 6, 2),
            spec(Family::B, 5, 2),
        ] {
            let kind = s.weyl_kind();
            for w in enumerate_weyl(kind) {
                let (tau, nu) = coset_decompose(&w, &s).unwrap();
                assert!(in_parabolic(&tau, &s), "tau {tau} not in W_P");
                assert!(in_wp_min(&nu.inverse(), &s), "nu^-1 {nu} not minimal");
                assert_eq!(tau.compose(&nu), w);
                assert_eq!(
                    type_length(&w, kind).unwrap(),
                    type_length(&tau, kind).unwrap() + type_length(&nu, kind).unwrap(),
                    "lengths not additive at {w} in {s}"
                );
            }
        }
    }

    #[test]
    fn theta_examples_and_involution() {
        let s = spec(Family::A, 5, 2);
        assert_eq!(
            theta_on_wp(&p(&[1, 2, 3, 5, 4]), &s).unwrap(),
            p(&[2, 1, 3, 4, 5])
        );
        assert_eq!(
            theta_on_wp(&Perm::identity(5), &s).unwrap(),
            Perm::identity(5)
        );
        for tau in enumerate_wp_parabolic(&s) {
            let t2 = theta_on_wp(&theta_on_wp(&tau, &s).unwrap(), &s).unwrap();
            assert_eq!(t2, tau);
        }
        let sd = spec(Family::D, 6, 2);
        for tau in enumerate_wp_parabolic(&sd) {
            let t = theta_on_wp(&tau, &sd).unwrap();
            assert!(in_parabolic(&t, &sd));
            assert_eq!(theta_on_wp(&t, &sd).unwrap(), tau);
        }
        assert!(theta_on_wp(&p(&[3, 1, 4, 2, 5]), &s).is_err());
    }

    #[test]
    fn minimal_reps_have_index_count() {
        // includes the small-middle models where the closed-form midpoint
        // condition does not apply
        for s in [
            spec(Family::B, 5, 2),
            spec(Family::D, 6, 2),
            spec(Family::D, 8, 2),
            spec(Family::C, 6, 1),
            spec(Family::A, 5, 2),
        ] {
            let kind = s.weyl_kind();
            let w_all = enumerate_weyl(kind);
            let wp = enumerate_wp_parabolic(&s);
            let min_count = w_all.iter().filter(|u| in_wp_min(u, &s)).count();
            assert_eq!(
                min_count * wp.len(),
                w_all.len(),
                "index count fails for {s}"
            );
            // every coset has exactly one minimal representative
            for w in &w_all {
                let mins = wp.iter().filter(|p| in_wp_min(&w.compose(p), &s)).count();
                assert_eq!(mins, 1, "coset of {w} in {s}");
            }
        }
    }

    #[test]
    fn bruhat_subword_example() {
        // [2,1,3] <= [3,1,2] in S_3 by the subword criterion
        assert!(bruhat_leq(&p(&[2, 1, 3]), &p(&[3, 1, 2]), WeylKind::Sym(3)).unwrap());
        assert!(!bruhat_leq(&p(&[3, 1, 2]), &p(&[2, 1, 3]), WeylKind::Sym(3)).unwrap());
    }

    #[test]
    fn middle_doubling() {
        // [3,2,1] in S_3 embeds into S_4 as the full antidiagonal
        assert_eq!(embed_middle_double(&p(&[3, 2, 1])), p(&[4, 3, 2, 1]));
        assert_eq!(embed_middle_double(&Perm::identity(3)), Perm::identity(4));
    }

    #[test]
    fn length_formula_prelim_ii_and_check_identity() {
        // the unconditional inversion identity for check(v) o v^{-1}, d <= 6
        for d in 1..=6usize {
            for v in enumerate_weyl(WeylKind::Sym(d)) {
                let lhs = v.check_of().compose(&v.inverse()).inversions();
                let mut cross = 0usize;
                for i in 1..=d {
                    for j in i + 1..=d {
                        if v.apply(i) > v.apply(j) && v.apply(d + 1 - i) < v.apply(d + 1 - j) {
                            cross += 1;
                        }
                    }
                }
                assert_eq!(lhs, 2 * v.inversions() - 2 * cross, "failed at {v}");
                // the conditional identity: when the alternative holds the
                // cross count vanishes
                let alternative = (1..=d).all(|i| {
                    (i + 1..=d)
                        .all(|j| v.apply(i) < v.apply(j) || v.apply(d + 1 - i) > v.apply(d + 1 - j))
                });
                if alternative {
                    assert_eq!(lhs, 2 * v.inversions());
                }
            }
        }
    }
}
