//! Exact rational scalars.
//!
//! Values stay on machine words while they fit and promote to big integers
//! on overflow. The representation is always canonical, so derived equality
//! and hashing agree with numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, Debug)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(BigRational),
}

fn to_big(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn demote(r: BigRational) -> Scalar {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        // i64::MIN cannot be negated safely inside Ratio ops
        (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Scalar::Small(Ratio::new_raw(n, d)),
        _ => Scalar::Big(r),
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Scalar::Small(Ratio::from_integer(1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Small(Ratio::from_integer(n))
    }

    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        demote(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_big(r: BigRational) -> Self {
        demote(r)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.numer().is_zero(),
            Scalar::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(r) => r.is_one(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_integer(),
            Scalar::Big(r) => r.is_integer(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if !self.is_integer() {
            return None;
        }
        match self {
            Scalar::Small(r) => Some(*r.numer()),
            Scalar::Big(r) => r.numer().to_i64(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(r) => to_big(r),
            Scalar::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Scalar::Small(r) => BigInt::from(*r.numer()),
            Scalar::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Scalar::Small(r) => BigInt::from(*r.denom()),
            Scalar::Big(r) => r.denom().clone(),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Small(r) => Scalar::Small(r.recip()),
            Scalar::Big(r) => demote(r.recip()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(r) => r.is_negative(),
        }
    }

    /// Rough size used to prefer cheap pivots.
    pub fn complexity(&self) -> u64 {
        match self {
            Scalar::Small(r) => {
                let n = r.numer().unsigned_abs();
                let d = r.denom().unsigned_abs();
                (64 - n.leading_zeros() as u64) + (64 - d.leading_zeros() as u64)
            }
            Scalar::Big(r) => r.numer().bits() + r.denom().bits(),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident, $op:tt) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
                    if let Some(r) = a.$checked(b) {
                        return Scalar::Small(r);
                    }
                }
                demote(self.to_big() $op rhs.to_big())
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_div(b) {
                return Scalar::Small(r);
            }
        }
        demote(self.to_big() / rhs.to_big())
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(r) if *r.numer() != i64::MIN => Scalar::Small(-*r),
            _ => demote(-self.to_big()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => a == b,
            (Scalar::Big(a), Scalar::Big(b)) => a == b,
            // canonical form: a Big value never fits in Small
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Small(r) => {
                0u8.hash(state);
                r.hash(state)
            }
            Scalar::Big(r) => {
                1u8.hash(state);
                r.hash(state)
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) => write!(f, "{}", r),
            Scalar::Big(r) => write!(f, "{}", r),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational `{}`", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `n`, `-n` and `n/d`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseScalarError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(demote(BigRational::new(n, d)))
    }
}

/// Greatest common divisor of machine integers, used by integer matrix code.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
