//! Coefficient fields.
//!
//! Every algorithm in this crate is characteristic-free, so the polynomial
//! machinery is generic over [`Field`]. Exact rationals ([`Rational`]) are the
//! default; [`Fp`] gives a small prime field for cross-checks.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

/// An exact coefficient field.
///
/// The arithmetic operators work on owned values; the `*_ref` methods exist so
/// that big-number fields can avoid clones in the inner reduction loops.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Ord
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Parses an unsigned literal, either an integer `n` or a fraction `p/q`.
    fn parse_literal(s: &str) -> Option<Self>;

    /// True when the value prints with a leading minus sign.
    fn is_negative(&self) -> bool;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.clone() / other.clone()
    }
}

impl Field for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn parse_literal(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.parse().ok()?;
                let q: BigInt = q.parse().ok()?;
                if q.is_zero() {
                    return None;
                }
                Some(BigRational::new(p, q))
            }
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

/// The prime field `Z/PZ`. `P` must be a prime below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;

    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat
        self.pow(P as u64 - 2)
    }

    fn parse_literal(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((p, q)) => {
                let q = Self::parse_literal(q)?;
                if q.is_zero() {
                    return None;
                }
                Some(Self::parse_literal(p)? / q)
            }
            None => {
                let v: BigInt = s.parse().ok()?;
                let r = v % BigInt::from(P);
                let r: i64 = r.try_into().ok()?;
                Some(Fp::new(r))
            }
        }
    }

    fn is_negative(&self) -> bool {
        false
    }
}
