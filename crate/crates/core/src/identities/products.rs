//! Infinite-product generating functions.

use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::IdentityError;
use crate::partition::Profile;
use crate::qseries::{poch_infinite, FactorSpec, SeriesError, TrackedPoly, TruncatedSeries};
use crate::report::VerificationReport;

/// `s(i, j) = c_i + ... + c_j` with 1-based indices; an empty range
/// (`j < i`, including `i = k + 1`) sums to 0.
pub fn s_range(c: &Profile, i: usize, j: usize) -> Result<usize, IdentityError> {
    let k = c.rank();
    if j < i && i <= k + 1 {
        return Ok(0);
    }
    if i == 0 || j > k || i > k {
        return Err(IdentityError::IndexOutOfRange { i, j, k });
    }
    Ok(c.entries()[i - 1..j].iter().sum())
}

/// The factors of the triple product: `1/(q^t; q^t)_∞` times
/// `1/(q^e; q^t)_∞` for every `e` in `exponents`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BorodinFactors {
    pub modulus: usize,
    pub exponents: Vec<usize>,
}

pub fn borodin_factors(c: &Profile) -> BorodinFactors {
    let k = c.rank();
    let t = c.modulus();
    let cs = c.entries();
    let s = |i, j| s_range(c, i, j).expect("indices stay within the profile");
    let mut exponents = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            for m in 1..=cs[i - 1] {
                exponents.push(m + j - i + s(i + 1, j));
            }
        }
    }
    for i in 2..=k {
        for j in 2..=i {
            for m in 1..=cs[i - 1] {
                exponents.push(t + j - m - i - s(j, i - 1));
            }
        }
    }
    BorodinFactors {
        modulus: t,
        exponents,
    }
}

/// Divides `series` by `(q^e; q^step)_∞`.
pub(crate) fn divide_by_poch(series: &mut TruncatedSeries<BigInt>, e: usize, step: usize) {
    let one = BigInt::from(1);
    let mut d = e;
    while d <= series.order() {
        series.div_binomial(&one, d);
        d += step;
    }
}

/// Expands a (possibly altered) factor list.
pub fn borodin_from_factors(
    f: &BorodinFactors,
    order: usize,
) -> Result<TruncatedSeries<BigInt>, SeriesError> {
    if f.modulus == 0 || f.exponents.contains(&0) {
        return Err(SeriesError::NotTruncatable {
            q_exponent: 0,
            step: f.modulus,
        });
    }
    let mut out = TruncatedSeries::one(order);
    divide_by_poch(&mut out, f.modulus, f.modulus);
    for &e in &f.exponents {
        divide_by_poch(&mut out, e, f.modulus);
    }
    Ok(out)
}

pub fn borodin_series(c: &Profile, order: usize) -> TruncatedSeries<BigInt> {
    borodin_from_factors(&borodin_factors(c), order).expect("profile exponents are positive")
}

/// `(−q; q²)_∞ / (q; q)_∞`.
pub fn f11_closed(order: usize) -> TruncatedSeries<BigInt> {
    let mut s = poch_infinite(&FactorSpec::signed_q(-1, 1, 2), order).expect("positive step");
    divide_by_poch(&mut s, 1, 1);
    s
}

/// `(−q²; q²)_∞ / (q; q)_∞`.
pub fn f20_closed(order: usize) -> TruncatedSeries<BigInt> {
    let mut s = poch_infinite(&FactorSpec::signed_q(-1, 2, 2), order).expect("positive step");
    divide_by_poch(&mut s, 1, 1);
    s
}

/// `(−zq; q²)_∞ / (zq; q)_∞`, `z` marking the largest part.
pub fn f11_bivariate(order: usize) -> TruncatedSeries<TrackedPoly> {
    let mut s = poch_infinite(&FactorSpec::<TrackedPoly>::tracked_q(-1, 1, 2), order)
        .expect("positive step");
    let z = TrackedPoly::monomial(BigInt::from(1), 1);
    for e in 1..=order {
        s.div_binomial(&z, e);
    }
    s
}

/// `1/(q²; q⁴)_∞ = (−q²; q²)_∞`.
pub fn eq23_check(order: usize) -> VerificationReport {
    let started = Instant::now();
    let mut lhs = TruncatedSeries::one(order);
    divide_by_poch(&mut lhs, 2, 4);
    let rhs = poch_infinite(&FactorSpec::signed_q(-1, 2, 2), order).expect("positive step");
    VerificationReport::compare("eq23", &lhs, &rhs, started)
}

/// Integer series helper for tests and tables.
pub fn to_u64(series: &TruncatedSeries<BigInt>) -> Vec<u64> {
    series
        .coeffs()
        .iter()
        .map(|c| u64::try_from(c).unwrap_or(u64::MAX))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_sequence, PartFilter};
    use crate::qseries::Ring;

    fn prof(v: &[usize]) -> Profile {
        Profile::new(v.to_vec()).unwrap()
    }

    #[test]
    fn s_range_cases() {
        assert_eq!(s_range(&prof(&[1, 1]), 1, 2).unwrap(), 2);
        assert_eq!(s_range(&prof(&[1, 2, 0]), 2, 3).unwrap(), 2);
        assert_eq!(s_range(&prof(&[1, 2, 0]), 2, 1).unwrap(), 0);
        assert_eq!(s_range(&prof(&[1, 1]), 3, 2).unwrap(), 0);
        assert!(s_range(&prof(&[1, 1]), 1, 3).is_err());
        assert!(s_range(&prof(&[1, 1]), 0, 1).is_err());
    }

    #[test]
    fn borodin_exponents_for_small_profiles() {
        let f = borodin_factors(&prof(&[1, 1]));
        assert_eq!(f.modulus, 4);
        assert_eq!(f.exponents, vec![1, 3, 1, 3]);
        let f = borodin_factors(&prof(&[2, 0]));
        assert_eq!(f.exponents, vec![1, 2, 2, 3]);
    }

    #[test]
    fn borodin_matches_enumeration() {
        assert_eq!(to_u64(&borodin_series(&prof(&[1, 1]), 4)), vec![1, 2, 3, 6, 10]);
        for (c, n) in [(vec![1, 1], 14), (vec![2, 0], 14), (vec![1, 2, 0], 10), (vec![2, 1], 10)] {
            let c = prof(&c);
            assert_eq!(
                to_u64(&borodin_series(&c, n)),
                count_sequence(&c, n as u64, PartFilter::None),
                "{c}"
            );
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(to_u64(&f11_closed(4)), vec![1, 2, 3, 6, 10]);
        assert_eq!(to_u64(&f20_closed(1)), vec![1, 1]);
        assert_eq!(to_u64(&f11_closed(0)), vec![1]);
        assert_eq!(borodin_series(&Profile::one_one(), 120), f11_closed(120));
        assert_eq!(borodin_series(&Profile::two_zero(), 120), f20_closed(120));
    }

    #[test]
    fn bivariate_small_coefficients() {
        let s = f11_bivariate(6);
        assert_eq!(s.coefficient(0), &TrackedPoly::one());
        assert_eq!(s.coefficient(1).coefficient(1), BigInt::from(2));
        for n in 0..=6 {
            assert!(s.coefficient(n).degree().unwrap_or(0) <= n);
        }
    }

    #[test]
    fn eq23_small_and_large() {
        assert!(eq23_check(0).pass);
        assert!(eq23_check(300).pass);
        let mut lhs = TruncatedSeries::one(4);
        divide_by_poch(&mut lhs, 2, 4);
        assert_eq!(to_u64(&lhs), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn mutated_factor_list_fails() {
        let c = Profile::one_one();
        let mut f = borodin_factors(&c);
        f.exponents[0] += 1;
        let bad = borodin_from_factors(&f, 10).unwrap();
        assert_ne!(bad, borodin_series(&c, 10));
        f.exponents[0] = 0;
        assert!(borodin_from_factors(&f, 10).is_err());
    }
}
