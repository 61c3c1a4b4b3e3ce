//! q-Pochhammer products and Euler's sum/product identity.
//!
//! `(a; q^s)_n = ∏_{i<n} (1 − a·q^{i·s})` and the infinite product
//! `(a; q^s)_∞`, where `a = c·q^e·v^d` is a monomial with coefficient `c`,
//! q-exponent `e`, and degree `d` in the tracking variable `v`.

use std::time::Instant;

use num_bigint::BigInt;

use super::{Ring, SeriesError, TruncatedSeries};
use crate::report::VerificationReport;

/// `coefficient · q^q_exponent · v^tracking_exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial<R> {
    pub coefficient: R,
    pub q_exponent: usize,
    pub tracking_exponent: usize,
}

impl<R: Ring> Monomial<R> {
    pub fn new(coefficient: R, q_exponent: usize, tracking_exponent: usize) -> Self {
        Monomial {
            coefficient,
            q_exponent,
            tracking_exponent,
        }
    }

    /// `q^e`.
    pub fn q_power(q_exponent: usize) -> Self {
        Self::new(R::one(), q_exponent, 0)
    }

    pub fn negated(&self) -> Self {
        Monomial {
            coefficient: self.coefficient.neg(),
            ..self.clone()
        }
    }

    /// The q-free part `c·v^d` as a ring element.
    pub fn ring_part(&self) -> Result<R, SeriesError> {
        Ok(self
            .coefficient
            .mul(&R::tracking_power(self.tracking_exponent)?))
    }

    /// `a^n`.
    pub fn pow(&self, n: usize) -> Self {
        Monomial {
            coefficient: self.coefficient.pow(n as u64),
            q_exponent: self.q_exponent * n,
            tracking_exponent: self.tracking_exponent * n,
        }
    }
}

/// Base monomial and step of a product `(a; q^step)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorSpec<R> {
    pub base: Monomial<R>,
    pub step: usize,
}

impl<R: Ring> FactorSpec<R> {
    pub fn new(base: Monomial<R>, step: usize) -> Self {
        FactorSpec { base, step }
    }

    /// `(sign·q^e; q^step)` with an integer sign.
    pub fn signed_q(sign: i64, q_exponent: usize, step: usize) -> Self {
        FactorSpec {
            base: Monomial::new(R::from_int(&BigInt::from(sign)), q_exponent, 0),
            step,
        }
    }

    /// `(sign·v·q^e; q^step)`, tracking one unit per factor.
    pub fn tracked_q(sign: i64, q_exponent: usize, step: usize) -> Self {
        FactorSpec {
            base: Monomial::new(R::from_int(&BigInt::from(sign)), q_exponent, 1),
            step,
        }
    }

    /// q-degree of factor `i`.
    fn degree(&self, i: usize) -> usize {
        self.base.q_exponent + i * self.step
    }
}

/// `(a; q^step)_n` modulo `q^(order+1)`.
pub fn poch_finite<R: Ring>(
    spec: &FactorSpec<R>,
    n: usize,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    let a = spec.base.ring_part()?;
    let mut out = TruncatedSeries::one(order);
    for i in 0..n {
        let e = spec.degree(i);
        if e > order {
            if spec.step == 0 {
                continue;
            }
            break;
        }
        out.mul_binomial(&a, e);
    }
    Ok(out)
}

/// `(a; q^step)_∞` modulo `q^(order+1)`. Only factors of q-degree at most
/// `order` contribute; a zero step never terminates.
pub fn poch_infinite<R: Ring>(
    spec: &FactorSpec<R>,
    order: usize,
) -> Result<TruncatedSeries<R>, SeriesError> {
    if spec.step == 0 {
        return Err(SeriesError::NotTruncatable {
            q_exponent: spec.base.q_exponent,
            step: spec.step,
        });
    }
    let count = if spec.base.q_exponent > order {
        0
    } else {
        (order - spec.base.q_exponent) / spec.step + 1
    };
    poch_finite(spec, count, order)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `Σ_{n ∈ terms} q^{C(n,2)} a^n / (q;q)_n`, truncated. Terms whose lowest
/// q-degree exceeds `order` are dropped.
pub(crate) fn euler_sum<R: Ring>(
    a: &Monomial<R>,
    order: usize,
    keep: impl Fn(usize) -> bool,
) -> Result<TruncatedSeries<R>, SeriesError> {
    let mut total = TruncatedSeries::zero(order);
    // 1/(q;q)_n, built one factor at a time
    let mut inv = TruncatedSeries::<R>::one(order);
    let mut n = 0usize;
    loop {
        let low = binom2(n) + n * a.q_exponent;
        if low > order {
            break;
        }
        if n > 0 {
            inv.div_binomial(&R::one(), n);
        }
        if keep(n) {
            let an = a.pow(n);
            let term = inv.scale(&an.ring_part()?).shift(low);
            total = total.add(&term)?;
        }
        n += 1;
    }
    Ok(total)
}

/// Checks `Σ_{n≥0} q^{C(n,2)} a^n/(q;q)_n = (−a; q)_∞` to `order`.
pub fn euler_product_check<R: Ring>(
    a: &Monomial<R>,
    order: usize,
) -> Result<VerificationReport, SeriesError> {
    let started = Instant::now();
    let lhs = euler_sum(a, order, |_| true)?;
    let rhs = poch_infinite(&FactorSpec::new(a.negated(), 1), order)?;
    Ok(VerificationReport::compare("euler-product", &lhs, &rhs, started))
}

/// Checks the even and odd parts in `a` of Euler's identity:
///
/// ```text
/// Σ q^{C(2n,2)} a^{2n}/(q;q)_{2n}   = ((−a;q)_∞ + (a;q)_∞)/2
/// Σ q^{C(2n+1,2)} a^{2n+1}/(q;q)_{2n+1} = ((−a;q)_∞ − (a;q)_∞)/2
/// ```
///
/// Both halvings must be exact in `R`.
pub fn euler_dissection<R: Ring>(
    a: &Monomial<R>,
    order: usize,
) -> Result<(VerificationReport, VerificationReport), SeriesError> {
    let started = Instant::now();
    let plus = poch_infinite(&FactorSpec::new(a.negated(), 1), order)?;
    let minus = poch_infinite(&FactorSpec::new(a.clone(), 1), order)?;
    let two = BigInt::from(2);

    let even_lhs = euler_sum(a, order, |n| n % 2 == 0)?;
    let even_rhs = plus.add(&minus)?.div_exact_int(&two)?;
    let even = VerificationReport::compare("euler-even", &even_lhs, &even_rhs, started);

    let started = Instant::now();
    let odd_lhs = euler_sum(a, order, |n| n % 2 == 1)?;
    let odd_rhs = plus.sub(&minus)?.div_exact_int(&two)?;
    let odd = VerificationReport::compare("euler-odd", &odd_lhs, &odd_rhs, started);
    Ok((even, odd))
}
