//! Scalar arithmetic behind every coefficient.
//!
//! The whole kernel is generic over [`Scalar`]. Two implementations ship:
//! arbitrary-precision rationals ([`Rational`], the default — every
//! operation is exact, no rounding anywhere) and `f64` (useful for
//! benchmarking the product kernels; the operations that need `1/k!`
//! refuse to run on it).

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

/// Coefficient ring for multivectors, tensors and forms.
///
/// Methods take references so big-integer implementations avoid
/// needless clones in the product kernels.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// True when arithmetic is exact; operations that divide by
    /// factorials insist on it.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn from_int(n: i64) -> Self;
    /// num/den as a scalar; `den` must be nonzero.
    fn ratio(num: i64, den: u64) -> Self;
    /// Parse "p", "p/q" (and for floats, decimal notation). `None` on bad syntax.
    fn parse(text: &str) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;
}

/// Exact rational scalar, the session default.
pub type Rational = BigRational;

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn ratio(num: i64, den: u64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn parse(text: &str) -> Option<Self> {
        BigRational::from_str(text).ok()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_one(&self) -> bool {
        *self == 1.0
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn ratio(num: i64, den: u64) -> Self {
        num as f64 / den as f64
    }
    fn parse(text: &str) -> Option<Self> {
        if let Some((n, d)) = text.split_once('/') {
            let n = BigInt::from_str(n.trim()).ok()?.to_f64()?;
            let d = BigInt::from_str(d.trim()).ok()?.to_f64()?;
            if d == 0.0 {
                return None;
            }
            Some(n / d)
        } else {
            f64::from_str(text.trim()).ok()
        }
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}
