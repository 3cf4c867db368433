use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::Param;

/// Arbitrary-precision rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient field of a [`Poly`](super::Poly).
///
/// `param` lets a field absorb the parameters `t`, `q` (as `QtScalar` does);
/// fields returning `None` keep them as polynomial variables.
pub trait Coeff: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn param(_p: Param) -> Option<Self> {
        None
    }
    fn from_scalar(s: &Scalar) -> Self;
    /// Short human-readable rendering; `needs_parens` asks whether it reads as a sum.
    fn render(&self) -> String;
    fn needs_parens(&self) -> bool;
    fn is_negative_unit_like(&self) -> bool;
}

impl Coeff for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        scalar(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn needs_parens(&self) -> bool {
        false
    }
    fn is_negative_unit_like(&self) -> bool {
        self.is_negative()
    }
}
