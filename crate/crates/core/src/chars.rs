//! Root systems, rho characters, restriction to the small torus, and the
//! dominance condition behind the rationality argument.
//!
//! Weights are integer vectors in torus coordinates. All rho computations are
//! done doubled (2 rho) to stay integral; halving happens only at the end,
//! with an exactness assertion.

use crate::error::{Error, Result};
use crate::weyl::{Family, ModelSpec};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn halve(&self) -> Result<Weight> {
        if self.coords.iter().any(|c| c % 2 != 0) {
            return Err(Error::Internal(format!(
                "weight {:?} is not divisible by two",
                self.coords
            )));
        }
        Ok(Weight {
            coords: self.coords.iter().map(|c| c / 2).collect(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Group {
    /// The ambient group of the model.
    G,
    /// The corner-coupled reductive subgroup.
    H,
}

/// The abstract root-system type of a torus: rank plus family letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootType {
    A(usize), // gl_{m}: rank m torus, roots e_i - e_j
    B(usize),
    C(usize),
    D(usize),
}

impl RootType {
    pub fn rank(&self) -> usize {
        match *self {
            RootType::A(m) => m,
            RootType::B(m) | RootType::C(m) | RootType::D(m) => m,
        }
    }

    /// Positive roots in torus coordinates.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let rank = self.rank();
        let mut roots = Vec::new();
        let e = |i: usize, j: Option<usize>, sign: i64| {
            let mut c = vec![0i64; rank];
            c[i] += 1;
            if let Some(j) = j {
                c[j] += sign;
            }
            Weight { coords: c }
        };
        match *self {
            RootType::A(m) => {
                for i in 0..m {
                    for j in i + 1..m {
                        roots.push(e(i, Some(j), -1));
                    }
                }
            }
            RootType::B(m) => {
                for i in 0..m {
                    for j in i + 1..m {
                        roots.push(e(i, Some(j), -1));
                        roots.push(e(i, Some(j), 1));
                    }
                    roots.push(e(i, None, 0));
                }
            }
            RootType::C(m) => {
                for i in 0..m {
                    for j in i + 1..m {
                        roots.push(e(i, Some(j), -1));
                        roots.push(e(i, Some(j), 1));
                    }
                    let mut c = vec![0i64; m];
                    c[i] = 2;
                    roots.push(Weight { coords: c });
                }
            }
            RootType::D(m) => {
                for i in 0..m {
                    for j in i + 1..m {
                        roots.push(e(i, Some(j), -1));
                        roots.push(e(i, Some(j), 1));
                    }
                }
            }
        }
        roots
    }

    /// Simple coroots in torus coordinates: pairing a weight against them
    /// decides dominance.
    pub fn simple_coroots(&self) -> Vec<Weight> {
        let rank = self.rank();
        let mut out = Vec::new();
        let unit = |i: usize, j: i64, rank: usize| {
            let mut c = vec![0i64; rank];
            c[i] = j;
            Weight { coords: c }
        };
        for i in 0..rank.saturating_sub(1) {
            let mut c = vec![0i64; rank];
            c[i] = 1;
            c[i + 1] = -1;
            out.push(Weight { coords: c });
        }
        match *self {
            RootType::A(_) => {}
            RootType::B(m) => {
                // short simple root e_m: coroot 2 e_m
                if m >= 1 {
                    out.push(unit(m - 1, 2, m));
                }
            }
            RootType::C(m) => {
                // long simple root 2 e_m: coroot e_m
                if m >= 1 {
                    out.push(unit(m - 1, 1, m));
                }
            }
            RootType::D(m) => {
                if m >= 2 {
                    let mut c = vec![0i64; m];
                    c[m - 2] = 1;
                    c[m - 1] = 1;
                    out.push(Weight { coords: c });
                }
            }
        }
        out
    }

    pub fn dominant(&self, w: &Weight) -> bool {
        self.simple_coroots().iter().all(|co| dot(w, co) >= 0)
    }
}

fn dot(a: &Weight, b: &Weight) -> i64 {
    a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).sum()
}

/// The root type of the model group or of the small subgroup H; for H the
/// type is A_{r-1} on r coordinates (type A models), C_{r/2} (B and D), or
/// B_{(r-1)/2} (type C).
pub fn root_type(group: Group, spec: &ModelSpec) -> RootType {
    match group {
        Group::G => match spec.family {
            Family::A => RootType::A(spec.n),
            Family::B => RootType::B(spec.n / 2),
            Family::C => RootType::C(spec.n / 2),
            Family::D => RootType::D(spec.n / 2),
        },
        Group::H => match spec.family {
            Family::A => RootType::A(spec.r),
            Family::B | Family::D => RootType::C(spec.r / 2),
            Family::C => RootType::B((spec.r - 1) / 2),
        },
    }
}

/// 2 rho: the sum of the positive roots of the group, in its own torus
/// coordinates.
pub fn rho2(group: Group, spec: &ModelSpec) -> Weight {
    let rt = root_type(group, spec);
    let mut acc = Weight::zero(rt.rank());
    for root in rt.positive_roots() {
        acc = acc.add(&root);
    }
    acc
}

/// Restriction of a weight on the model torus to the torus of H.
///
/// Type A identifies the two corner blocks (mu_i = lambda_i + lambda_{n-r+i});
/// types B and D identify them with a flip and a sign
/// (mu_i = lambda_i - lambda_{r-i+1}); type C does the same and drops the odd
/// middle coordinate. All middle-block coordinates restrict to zero.
pub fn restrict(lambda: &Weight, spec: &ModelSpec) -> Result<Weight> {
    let expected = root_type(Group::G, spec).rank();
    if lambda.rank() != expected {
        return Err(Error::ShapeMismatch(format!(
            "weight has rank {}, model torus has rank {}",
            lambda.rank(),
            expected
        )));
    }
    let r = spec.r;
    let coords = match spec.family {
        Family::A => (0..r)
            .map(|i| lambda.coords[i] + lambda.coords[spec.n - r + i])
            .collect(),
        Family::B | Family::D => (0..r / 2)
            .map(|i| lambda.coords[i] - lambda.coords[r - 1 - i])
            .collect(),
        Family::C => (0..(r - 1) / 2)
            .map(|i| lambda.coords[i] - lambda.coords[r - 1 - i])
            .collect(),
    };
    Ok(Weight { coords })
}

/// The character 2 rho_H - rho_G|T_H together with its dominance flag:
/// zero and dominant in type A, all ones and dominant in types B and D,
/// all minus-ones and non-dominant in type C.
pub fn dominance_character(spec: &ModelSpec) -> Result<(Weight, bool)> {
    let doubled = rho2(Group::H, spec)
        .scale(2)
        .add(&restrict(&rho2(Group::G, spec), spec)?.scale(-1));
    let w = doubled.halve()?;
    let dominant = root_type(Group::H, spec).dominant(&w);
    Ok((w, dominant))
}
