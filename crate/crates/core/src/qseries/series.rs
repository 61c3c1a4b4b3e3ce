use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{Ring, SeriesError};

// Cauchy products below this order run sequentially.
const PARALLEL_ORDER: usize = 96;

/// Power series in `q` known modulo `q^(order+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    /// `c·q^e`, which is zero when `e > order`.
    pub fn monomial(c: R, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.add(y))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x.sub(y))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Coefficientwise map that may fail (exact divisions).
    pub fn try_map<S: Ring>(
        &self,
        f: impl Fn(&R) -> Result<S, SeriesError>,
    ) -> Result<TruncatedSeries<S>, SeriesError> {
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_exact_int(&self, d: &BigInt) -> Result<Self, SeriesError> {
        self.try_map(|x| {
            x.div_exact_int(d).ok_or_else(|| SeriesError::InexactDivision {
                value: format!("{x:?}"),
                divisor: d.to_string(),
            })
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let coeff = |k: usize| {
            let mut acc = R::zero();
            for i in 0..=k {
                let (x, y) = (&self.coeffs[i], &other.coeffs[k - i]);
                if !x.is_zero() && !y.is_zero() {
                    acc.add_assign(&x.mul(y));
                }
            }
            acc
        };
        let coeffs = if n >= PARALLEL_ORDER {
            (0..=n).into_par_iter().map(coeff).collect()
        } else {
            (0..=n).map(coeff).collect()
        };
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplies in place by `(1 − a·q^e)`.
    pub fn mul_binomial(&mut self, a: &R, e: usize) {
        if e == 0 {
            let f = R::one().sub(a);
            for c in &mut self.coeffs {
                *c = c.mul(&f);
            }
            return;
        }
        for k in (e..self.coeffs.len()).rev() {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let t = self.coeffs[k - e].mul(a);
            self.coeffs[k] = self.coeffs[k].sub(&t);
        }
    }

    /// Divides in place by `(1 − a·q^e)`, `e ≥ 1`.
    pub fn div_binomial(&mut self, a: &R, e: usize) {
        assert!(e >= 1, "constant binomials go through invert");
        for k in e..self.coeffs.len() {
            if self.coeffs[k - e].is_zero() {
                continue;
            }
            let t = self.coeffs[k - e].mul(a);
            self.coeffs[k].add_assign(&t);
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for k in e..=n {
            coeffs[k] = self.coeffs[k - e].clone();
        }
        TruncatedSeries { coeffs }
    }

    /// The reciprocal, which exists iff the constant term is a unit.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| SeriesError::NonUnitConstantTerm(format!("{:?}", self.coeffs[0])))?;
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let mut acc = R::zero();
            for i in 1..=k {
                let f = &self.coeffs[i];
                if !f.is_zero() && !g[k - i].is_zero() {
                    acc.add_assign(&f.mul(&g[k - i]));
                }
            }
            g.push(acc.mul(&inv0).neg());
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// First index where the two series disagree.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeffs.get(i) != other.coeffs.get(i))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(R::to_json).collect())
    }
}

impl<R: Ring> Serialize for TruncatedSeries<R> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{int, QuadElem};

    fn ints(v: &[i64], order: usize) -> TruncatedSeries<BigInt> {
        TruncatedSeries::from_coeffs(v.iter().map(|&x| int(x)).collect(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = ints(&[1, 1], 2);
        let b = ints(&[1, -1], 2);
        assert_eq!(a.mul(&b).unwrap(), ints(&[1, 0, -1], 2));
    }

    #[test]
    fn geometric_series() {
        let inv = ints(&[1, -1], 6).invert().unwrap();
        assert_eq!(inv, ints(&[1; 7], 6));
    }

    #[test]
    fn inversion_contract_over_quad() {
        let f = TruncatedSeries::from_coeffs(
            vec![QuadElem::new(1, 1), QuadElem::new(3, -2), QuadElem::new(0, 5)],
            5,
        );
        let g = f.invert().unwrap();
        assert_eq!(f.mul(&g).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn errors() {
        assert_eq!(
            ints(&[1], 2).mul(&ints(&[1], 3)).unwrap_err(),
            SeriesError::OrderMismatch { left: 2, right: 3 }
        );
        assert!(matches!(
            ints(&[0, 1], 3).invert(),
            Err(SeriesError::NonUnitConstantTerm(_))
        ));
        assert!(matches!(
            ints(&[2, 1], 3).invert(),
            Err(SeriesError::NonUnitConstantTerm(_))
        ));
        assert!(matches!(
            ints(&[2, 3], 3).div_exact_int(&int(2)),
            Err(SeriesError::InexactDivision { .. })
        ));
    }

    #[test]
    fn binomial_and_shift() {
        let mut s = TruncatedSeries::<BigInt>::one(4);
        s.mul_binomial(&int(1), 1);
        s.mul_binomial(&int(1), 2);
        assert_eq!(s, ints(&[1, -1, -1, 1], 4));
        assert_eq!(s.shift(2), ints(&[0, 0, 1, -1, -1], 4));
        let mut back = s.clone();
        back.div_binomial(&int(1), 2);
        back.div_binomial(&int(1), 1);
        assert_eq!(back, TruncatedSeries::one(4));
        assert_eq!(
            serde_json::to_string(&ints(&[1, -2], 2)).unwrap(),
            r#"["1","-2","0"]"#
        );
    }
}
