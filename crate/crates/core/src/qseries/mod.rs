//! Exact truncated power series in `q` over pluggable coefficient rings.

mod poch;
mod quad;
mod series;
mod tracked;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub(crate) use poch::euler_sum;
pub use poch::{
    euler_dissection, euler_product_check, poch_finite, poch_infinite, FactorSpec, Monomial,
};
pub use quad::QuadElem;
pub use series::TruncatedSeries;
pub use tracked::TrackedPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
    #[error("product with step {step} and q-exponent {q_exponent} cannot be truncated")]
    NotTruncatable { q_exponent: usize, step: usize },
    #[error("{value} is not divisible by {divisor}")]
    InexactDivision { value: String, divisor: String },
    #[error("coefficient ring has no tracking variable (requested degree {0})")]
    UntrackedRing(usize),
}

/// Commutative ring contract shared by all coefficient types.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    /// Exact division by a nonzero integer; `None` if some component is not
    /// divisible.
    fn div_exact_int(&self, d: &BigInt) -> Option<Self>;

    /// `v^degree` for the tracking variable. Rings without one only accept
    /// degree 0.
    fn tracking_power(degree: usize) -> Result<Self, SeriesError> {
        if degree == 0 {
            Ok(Self::one())
        } else {
            Err(SeriesError::UntrackedRing(degree))
        }
    }

    /// Wire form of one coefficient.
    fn to_json(&self) -> serde_json::Value;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
    fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        Zero::is_zero(&r).then_some(q)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

#[cfg(test)]
pub(crate) fn int(n: i64) -> BigInt {
    BigInt::from(n)
}
