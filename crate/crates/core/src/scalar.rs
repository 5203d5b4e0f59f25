//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Every computation in this crate is exact. `Scalar` is either a `BigRational`
//! or a residue mod a prime `p` (odd or 2). No floating point anywhere.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field a matrix lives over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// The rationals.
    Q,
    /// The prime field GF(p). The caller supplies p; there is no default.
    Fp(u64),
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact scalar: a canonical rational or a reduced residue in [0, p).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn zero(field: Field) -> Scalar {
        Scalar::from_i64(0, field)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_i64(1, field)
    }

    pub fn from_i64(n: i64, field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => {
                let m = n.rem_euclid(p as i64);
                Scalar::Fp { p, v: m as u64 }
            }
        }
    }

    /// Rational a/b, in lowest terms.
    pub fn rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    fn check_same(&self, other: &Scalar) -> Field {
        let (fa, fb) = (self.field(), other.field());
        assert!(
            fa == fb,
            "scalar field mismatch in arithmetic: {fa} vs {fb}"
        );
        fa
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                p: *p,
                v: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { p, v } => {
                // extended Euclid on (v, p)
                let (mut t, mut new_t): (i128, i128) = (0, 1);
                let (mut r, mut new_r): (i128, i128) = (*p as i128, *v as i128);
                while new_r != 0 {
                    let q = r / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (r, new_r) = (new_r, r - q * new_r);
                }
                assert!(r == 1, "{v} is not invertible mod {p}");
                Scalar::Fp {
                    p: *p,
                    v: t.rem_euclid(*p as i128) as u64,
                }
            }
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }

    /// Serialize to the wire form: "a/b" string over Q, bare integer over GF(p).
    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            Scalar::Q(r) => serde_json::Value::String(format_rational(r)),
            Scalar::Fp { v, .. } => serde_json::Value::Number((*v).into()),
        }
    }

    /// Parse the wire form back. Rejects non-canonical rationals such as "2/4",
    /// "1/-2" or "-0/3".
    pub fn from_json_value(value: &serde_json::Value, field: Field) -> Result<Scalar> {
        match (field, value) {
            (Field::Q, serde_json::Value::String(s)) => parse_rational(s),
            (Field::Fp(p), serde_json::Value::Number(n)) => {
                let v = n
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("bad residue {n}")))?;
                if v >= p {
                    return Err(Error::NonCanonicalRational(format!(
                        "residue {v} not reduced mod {p}"
                    )));
                }
                Ok(Scalar::Fp { p, v })
            }
            _ => Err(Error::Parse(format!(
                "entry {value} does not match field {field}"
            ))),
        }
    }
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Scalar> {
    let (num_s, den_s) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let den: BigInt = den_s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    if !den.is_positive() {
        return Err(Error::NonCanonicalRational(s.to_string()));
    }
    if num.gcd(&den) != BigInt::one() {
        return Err(Error::NonCanonicalRational(s.to_string()));
    }
    Ok(Scalar::Q(BigRational::new_raw(num, den)))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{}", format_rational(r)),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let a = Scalar::rational(2, 4);
        let b = Scalar::rational(1, 2);
        assert_eq!(a, b);
        let c = Scalar::rational(1, -2);
        assert_eq!(c, Scalar::rational(-1, 2));
    }

    #[test]
    fn fp_inverse_roundtrip() {
        for p in [2u64, 3, 5, 7, 11] {
            for v in 1..p {
                let s = Scalar::Fp { p, v };
                let inv = s.inv().unwrap();
                assert!(s.mul(&inv).is_one(), "p={p} v={v}");
            }
        }
    }

    #[test]
    fn wire_format_rejects_non_canonical() {
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("-3/6").is_err());
        assert_eq!(parse_rational("-3/2").unwrap(), Scalar::rational(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), Scalar::rational(5, 1));
    }
}
