//! Exact scalars: arbitrary-precision rationals or a prime field of
//! odd characteristic. Every value carries its field so mixed-field
//! arithmetic is caught immediately.

use num::rational::BigRational;
use num::{BigInt, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LieError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    /// Characteristic two is excluded; moduli must be prime.
    pub fn validate(&self) -> Result<(), LieError> {
        match self {
            Field::Q => Ok(()),
            Field::Fp(2) => Err(LieError::BadField(
                "characteristic two is not supported".into(),
            )),
            Field::Fp(p) if !is_prime(*p) => {
                Err(LieError::BadField(format!("{p} is not prime")))
            }
            Field::Fp(_) => Ok(()),
        }
    }

    pub fn zero(&self) -> K {
        self.from_i64(0)
    }

    pub fn one(&self) -> K {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> K {
        match self {
            Field::Q => K::Q(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => K::Fp {
                p: *p,
                v: n.rem_euclid(*p as i64) as u64,
            },
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl K {
    pub fn field(&self) -> Field {
        match self {
            K::Q(_) => Field::Q,
            K::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            K::Q(r) => r.is_zero(),
            K::Fp { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &K) -> K {
        match (self, other) {
            (K::Q(a), K::Q(b)) => K::Q(a + b),
            (K::Fp { p, v: a }, K::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                K::Fp {
                    p: *p,
                    v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, other: &K) -> K {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &K) -> K {
        match (self, other) {
            (K::Q(a), K::Q(b)) => K::Q(a * b),
            (K::Fp { p, v: a }, K::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                K::Fp {
                    p: *p,
                    v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self) -> K {
        match self {
            K::Q(a) => K::Q(-a),
            K::Fp { p, v } => K::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }

    pub fn inv(&self) -> Option<K> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            K::Q(a) => K::Q(a.recip()),
            K::Fp { p, v } => K::Fp {
                p: *p,
                v: mod_inverse(*v, *p),
            },
        })
    }

    /// Exact division; panics on zero divisor (internal pivots are
    /// checked nonzero before use).
    pub fn div(&self, other: &K) -> K {
        self.mul(&other.inv().expect("division by zero scalar"))
    }

    /// Integer value when the scalar is an integer that fits; the
    /// prime-field case reports the canonical representative.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            K::Q(r) => {
                if r.is_integer() {
                    r.to_integer().to_i64()
                } else {
                    None
                }
            }
            K::Fp { v, .. } => (*v).to_i64(),
        }
    }
}

fn mod_inverse(v: u64, p: u64) -> u64 {
    // Extended Euclid on (v, p); p prime and v nonzero mod p.
    let (mut r0, mut r1) = (v as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "inverse of non-unit");
    s0.rem_euclid(p as i128) as u64
}

/// Signed magnitude used by the fraction-free elimination to scale
/// rational rows to integers.
pub(crate) fn rational_denominator(k: &K) -> Option<BigInt> {
    match k {
        K::Q(r) => Some(r.denom().abs()),
        K::Fp { .. } => None,
    }
}

pub(crate) fn scale_by_int(k: &K, m: &BigInt) -> K {
    match k {
        K::Q(r) => K::Q(r * BigRational::from(m.clone())),
        K::Fp { .. } => unreachable!("integer scaling is a rational-path step"),
    }
}
