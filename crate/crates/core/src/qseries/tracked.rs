use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Ring, SeriesError};

/// Integer polynomial in a tracking variable (`z` or `t`), coefficients by
/// ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TrackedPoly(Vec<BigInt>);

impl TrackedPoly {
    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        TrackedPoly(c)
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut c = vec![<BigInt as Zero>::zero(); degree + 1];
        c[degree] = coeff;
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.0.get(degree).cloned().unwrap_or_default()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Value at 1.
    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }
}

impl Ring for TrackedPoly {
    fn zero() -> Self {
        TrackedPoly(Vec::new())
    }
    fn one() -> Self {
        TrackedPoly(vec![<BigInt as One>::one()])
    }
    fn from_int(n: &BigInt) -> Self {
        Self::from_coeffs(vec![n.clone()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }
    fn add_assign(&mut self, o: &Self) {
        if self.0.len() < o.0.len() {
            self.0.resize(o.0.len(), <BigInt as Zero>::zero());
        }
        for (x, y) in self.0.iter_mut().zip(&o.0) {
            *x += y;
        }
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }
    fn neg(&self) -> Self {
        TrackedPoly(self.0.iter().map(|x| -x).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Self::zero();
        }
        let mut out = vec![<BigInt as Zero>::zero(); self.0.len() + o.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in o.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::from_coeffs(out)
    }
    /// Only the constants ±1 are units.
    fn unit_inverse(&self) -> Option<Self> {
        (self.0.len() == 1 && self.0[0].abs().is_one()).then(|| self.clone())
    }
    fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for x in &self.0 {
            let (q, r) = x.div_rem(d);
            if !Zero::is_zero(&r) {
                return None;
            }
            out.push(q);
        }
        Some(TrackedPoly(out))
    }
    fn tracking_power(degree: usize) -> Result<Self, SeriesError> {
        Ok(Self::monomial(<BigInt as One>::one(), degree))
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.0
                .iter()
                .map(|x| serde_json::Value::String(x.to_string()))
                .collect(),
        )
    }
}

impl Serialize for TrackedPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TrackedPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let c = v
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TrackedPoly::from_coeffs(c))
    }
}
