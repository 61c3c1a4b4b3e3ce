use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Ring, SeriesError};

/// `a + b·√2` with integer `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadElem {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadElem {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadElem {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn sqrt2() -> Self {
        QuadElem::new(0, 1)
    }

    pub fn conjugate(&self) -> Self {
        QuadElem {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − 2b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    /// `(a + b√2)/√2 = b + (a/2)√2`, defined only for even `a`.
    pub fn div_sqrt2(&self) -> Result<Self, SeriesError> {
        if self.a.is_even() {
            Ok(QuadElem {
                a: self.b.clone(),
                b: &self.a / 2,
            })
        } else {
            Err(SeriesError::InexactDivision {
                value: self.to_string(),
                divisor: "√2".into(),
            })
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}√2", self.a, -&self.b)
        } else {
            write!(f, "{} + {}√2", self.a, self.b)
        }
    }
}

impl Ring for QuadElem {
    fn zero() -> Self {
        QuadElem::default()
    }
    fn one() -> Self {
        QuadElem::new(1, 0)
    }
    fn from_int(n: &BigInt) -> Self {
        QuadElem {
            a: n.clone(),
            b: <BigInt as Zero>::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, o: &Self) -> Self {
        QuadElem {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }
    fn neg(&self) -> Self {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        QuadElem {
            a: &self.a * &o.a + BigInt::from(2) * &self.b * &o.b,
            b: &self.a * &o.b + &o.a * &self.b,
        }
    }
    fn add_assign(&mut self, o: &Self) {
        self.a += &o.a;
        self.b += &o.b;
    }
    /// Units are exactly the elements of norm ±1.
    fn unit_inverse(&self) -> Option<Self> {
        let n = self.norm();
        if !n.abs().is_one() {
            return None;
        }
        let c = self.conjugate();
        Some(QuadElem {
            a: &c.a * &n,
            b: &c.b * &n,
        })
    }
    fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        let (qa, ra) = self.a.div_rem(d);
        let (qb, rb) = self.b.div_rem(d);
        (Zero::is_zero(&ra) && Zero::is_zero(&rb)).then_some(QuadElem { a: qa, b: qb })
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.a.to_string(), self.b.to_string()])
    }
}

impl Serialize for QuadElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let parse = |s: &str| s.parse::<BigInt>().map_err(serde::de::Error::custom);
        Ok(QuadElem {
            a: parse(&a)?,
            b: parse(&b)?,
        })
    }
}
