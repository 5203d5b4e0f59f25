//! Parametrization and counting of the centralizer orbits in the flag
//! variety: minimal coset representatives, orbit counts, the d_v/s_v
//! statistics, the rank-matrix Bruhat cell classifier and the monomial
//! T-fixed representatives.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::models::i_eps;
use crate::perm::Perm;
use crate::weyl::{
    enumerate_weyl, in_weyl, in_wp_min, longest_element, weyl_order, Family, ModelSpec, WeylKind,
};

/// Parameter of an orbit: a permutation u (an involution outside type A)
/// together with a minimal coset representative v.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitParam {
    pub u: Perm,
    pub v: Perm,
}

impl OrbitParam {
    pub fn new(u: Perm, v: Perm, spec: &ModelSpec) -> Result<OrbitParam> {
        if u.degree() != spec.r {
            return Err(Error::ShapeMismatch(format!(
                "u acts on {} letters, expected r={}",
                u.degree(),
                spec.r
            )));
        }
        match spec.family {
            Family::A => {}
            Family::B | Family::D => {
                if !u.is_involution() || !u.fixed_points().is_empty() {
                    return Err(Error::PreconditionViolated(
                        "types B and D need a fixed-point-free involution".into(),
                    ));
                }
            }
            Family::C => {
                if !u.is_involution() {
                    return Err(Error::PreconditionViolated(
                        "type C needs an involution".into(),
                    ));
                }
            }
        }
        if !in_wp_min(&v, spec) {
            return Err(Error::PreconditionViolated(format!(
                "v = {v} is not a minimal coset representative"
            )));
        }
        Ok(OrbitParam { u, v })
    }
}

/// The middle statistics of a Weyl element: the crossing count d_v and the
/// middle transposition s_v it may force.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitStats {
    pub d_v: usize,
    pub s_v: Perm,
}

/// All minimal coset representatives, sorted lexicographically.
pub fn enumerate_wp(spec: &ModelSpec) -> Vec<Perm> {
    match spec.family {
        Family::A => {
            // choose the increasing images of the three blocks
            let n = spec.n;
            let r = spec.r;
            let mut out = Vec::new();
            let all: Vec<usize> = (1..=n).collect();
            for first in combinations(&all, r) {
                let rest: Vec<usize> = all.iter().copied().filter(|x| !first.contains(x)).collect();
                for mid in combinations(&rest, n - 2 * r) {
                    let last: Vec<usize> =
                        rest.iter().copied().filter(|x| !mid.contains(x)).collect();
                    let mut images = Vec::with_capacity(n);
                    images.extend(&first);
                    images.extend(&mid);
                    images.extend(&last);
                    out.push(Perm::from_images(images).unwrap());
                }
            }
            out.sort();
            out
        }
        _ => enumerate_weyl(spec.weyl_kind())
            .into_iter()
            .filter(|u| in_wp_min(u, spec))
            .collect(),
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut tail in combinations(&items[i + 1..], k - 1) {
            let mut c = vec![x];
            c.append(&mut tail);
            out.push(c);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, u128::checked_mul).expect("factorial overflow")
}

/// Number of involutions of S_r (the telephone numbers).
pub fn involution_count(r: usize) -> u128 {
    let mut t = vec![0u128; r + 2];
    t[0] = 1;
    t[1] = 1;
    for k in 2..=r.max(1) {
        t[k] = t[k - 1] + (k as u128 - 1) * t[k - 2];
    }
    t[r]
}

/// Number of fixed-point-free involutions of S_r: (r-1)!! for even r.
pub fn fixed_point_free_involution_count(r: usize) -> u128 {
    if r % 2 == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut k = r as u128;
    while k > 1 {
        acc *= k - 1;
        k -= 2;
    }
    acc
}

/// Size of W^P as |W| / |W_P|. The parabolic has two free corner blocks in
/// type A and a single coupled one otherwise.
pub fn wp_count(spec: &ModelSpec) -> u128 {
    let w = weyl_order(spec.weyl_kind());
    let corner = match spec.family {
        Family::A => factorial(spec.r) * factorial(spec.r),
        _ => factorial(spec.r),
    };
    let wp = corner * weyl_order(spec.middle_kind());
    assert_eq!(w % wp, 0, "parabolic order must divide the group order");
    w / wp
}

/// Number of orbits of the centralizer on the flag variety:
/// r! * |W^P| for type A, (#involutions) * |W^P| for C, and
/// (#fixed-point-free involutions) * |W^P| for B and D.
pub fn count_orbits(spec: &ModelSpec) -> u128 {
    let per_coset = match spec.family {
        Family::A => factorial(spec.r),
        Family::B | Family::D => fixed_point_free_involution_count(spec.r),
        Family::C => involution_count(spec.r),
    };
    per_coset * wp_count(spec)
}

/// Number of standard Young tableaux of the two-column shape (2^r, 1^{n-2r})
/// by the hook length formula.
pub fn hook_component_count(n: usize, r: usize) -> u128 {
    assert!(2 * r <= n, "r exceeds floor(n/2)");
    // hooks: first column cell i of r doubled rows: (n-r-i+2); second column
    // cell i: (r-i+1); single-column cells: (n-r-i+1) for i in r+1..=n-r
    let mut denom = 1u128;
    for i in 1..=r {
        denom *= (n - r - i + 2) as u128;
        denom *= (r - i + 1) as u128;
    }
    for i in r + 1..=n - r {
        denom *= (n - r - i + 1) as u128;
    }
    let num = factorial(n);
    assert_eq!(num % denom, 0, "hook product must divide the factorial");
    num / denom
}

/// d_v = #{r+1 <= i <= floor(n/2) : v^{-1}(i) > floor(n/2)} and the middle
/// transposition s_v (nontrivial only for eps = 1, even n, odd d_v).
pub fn orbit_stats(v: &Perm, spec: &ModelSpec) -> Result<OrbitStats> {
    if !in_weyl(v, spec.weyl_kind()) {
        return Err(Error::NotInWeylGroup(v.to_string()));
    }
    let half = spec.n / 2;
    let vinv = v.inverse();
    let d_v = (spec.r + 1..=half)
        .filter(|&i| vinv.apply(i) > half)
        .count();
    let mid = spec.middle();
    let s_v = if spec.epsilon() == 1 && spec.n % 2 == 0 && d_v % 2 == 1 {
        Perm::transposition(mid, mid / 2, mid / 2 + 1)
    } else {
        Perm::identity(mid)
    };
    Ok(OrbitStats { d_v, s_v })
}

/// The permutation sigma with g in B sigma B for the upper-triangular Borel,
/// recovered from the lower-left rank matrix.
pub fn bruhat_cell(g: &Matrix) -> Result<Perm> {
    if !g.is_square() {
        return Err(Error::ShapeMismatch("bruhat cell".into()));
    }
    let m = g.rows();
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    // rank of rows i.., cols ..j (1-based i, j)
    let rank_lower_left = |i: usize, j: usize| -> usize {
        if j == 0 {
            return 0;
        }
        g.submatrix(i - 1..m, 0..j).rank()
    };
    let mut images = Vec::with_capacity(m);
    for j in 1..=m {
        let mut sigma_j = 0;
        for i in (1..=m).rev() {
            if rank_lower_left(i, j) > rank_lower_left(i, j - 1) {
                sigma_j = i;
                break;
            }
        }
        images.push(sigma_j);
    }
    Perm::from_images(images)
}

/// The orbit invariant of a corner coset x B_r: the involution
/// u = w0 o bruhat_cell(I dx I x) with w0 the antidiagonal of S_r and
/// I = I_{-eps,r}.
pub fn classify_orbit_u(x: &Matrix, spec: &ModelSpec) -> Result<Perm> {
    let r = spec.r;
    if x.rows() != r || x.cols() != r {
        return Err(Error::ShapeMismatch(format!("expected {r}x{r}")));
    }
    let i = i_eps(-spec.epsilon(), r, x.field());
    let twisted = i.mul(&x.antitranspose()).mul(&i).mul(x);
    let cell = bruhat_cell(&twisted)?;
    let w0 = longest_element(WeylKind::Sym(r));
    let u = w0.compose(&cell);
    if !u.is_involution() {
        return Err(Error::Internal(format!(
            "classifier produced a non-involution {u}"
        )));
    }
    if spec.epsilon() == 1 && !u.fixed_points().is_empty() {
        return Err(Error::Internal(format!(
            "classifier produced a fixed point for eps = 1: {u}"
        )));
    }
    Ok(u)
}

/// A T-fixed representative of the orbit with the given parameters, as a
/// permutation coset, when one exists.
///
/// Type A: diag(u, 1, 1) o v^{-1} always. Types B/D: a monomial-derived
/// representative diag(s, 1, check(s)) o v^{-1} with s conjugating the
/// antidiagonal to u. Type C: only for fixed-point-free u, otherwise none.
pub fn t_fixed_rep(param: &OrbitParam, spec: &ModelSpec) -> Option<Perm> {
    let r = spec.r;
    let mid = Perm::identity(spec.n - 2 * r);
    match spec.family {
        Family::A => {
            let blocks = Perm::block_diag(&[&param.u, &mid, &Perm::identity(r)]);
            Some(blocks.compose(&param.v.inverse()))
        }
        _ => {
            if !param.u.fixed_points().is_empty() {
                return None;
            }
            let s = conjugator_to_antidiagonal(&param.u);
            let blocks = Perm::block_diag(&[&s, &mid, &s.check_of()]);
            Some(blocks.compose(&param.v.inverse()))
        }
    }
}

/// For a fixed-point-free involution u of S_r, a permutation s with
/// s^{-1} w0 s = u.
fn conjugator_to_antidiagonal(u: &Perm) -> Perm {
    let r = u.degree();
    let mut images = vec![0usize; r];
    let mut k = 0usize;
    for a in 1..=r {
        let b = u.apply(a);
        if b <= a {
            continue;
        }
        k += 1;
        images[a - 1] = k;
        images[b - 1] = r + 1 - k;
    }
    let s = Perm::from_images(images).expect("pairing covers all letters");
    debug_assert_eq!(
        s.inverse()
            .compose(&longest_element(WeylKind::Sym(r)))
            .compose(&s),
        *u
    );
    s
}
