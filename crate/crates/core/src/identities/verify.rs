//! The verification suite: named groups of checks run at configurable orders.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lemmas::{d11_bivariate, d11_series, d20_bivariate, d20_series, specialize, thm33_checks};
use super::oc::oc_forms_check;
use super::products::{borodin_series, eq23_check, f11_bivariate, f11_closed, f20_closed};
use super::IdentityError;
use crate::bijection::{forward, inverse, pairs_of_weight, DependencyRule, Flavor};
use crate::enumerate::{count_sequence, enumerate_cylindric, refined_counts, PartFilter};
use crate::partition::Profile;
use crate::qseries::{TrackedPoly, TruncatedSeries};
use crate::report::VerificationReport;

/// Truncation orders per kind of check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Product and sum identities over `Z` and `Z[√2]`.
    pub univariate: usize,
    pub eq23: usize,
    /// `t = 1` specialization of the bivariate sums.
    pub bivariate: usize,
    pub two_row: u64,
    pub three_row: u64,
    /// Largest-part refinement of all profile-(1,1) objects.
    pub refined: u64,
    pub distinct: u64,
    pub refined_distinct: u64,
    /// Weight bound for the bijection round trips.
    pub bijection: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            univariate: 200,
            eq23: 500,
            bivariate: 20,
            two_row: 25,
            three_row: 15,
            refined: 18,
            distinct: 22,
            refined_distinct: 16,
            bijection: 20,
        }
    }
}

impl VerifyConfig {
    /// Sets the series orders to `n` and caps every enumeration order at `n`.
    pub fn with_order(n: usize) -> Self {
        let d = Self::default();
        let cap = |x: u64| x.min(n as u64);
        VerifyConfig {
            univariate: n,
            eq23: n,
            bivariate: d.bivariate.min(n),
            two_row: cap(d.two_row),
            three_row: cap(d.three_row),
            refined: cap(d.refined),
            distinct: cap(d.distinct),
            refined_distinct: cap(d.refined_distinct),
            bijection: cap(d.bijection),
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "borodin-closed",
    "borodin-enumeration",
    "eq23",
    "f11z",
    "lemmas",
    "lemmas-bivariate",
    "thm33",
    "oc-forms",
    "bijection",
];

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn counts_report(name: &str, left: &[u64], right: &[u64], started: Instant) -> VerificationReport {
    VerificationReport::compare_counts(name, &big(left), &big(right), started)
}

/// Bivariate series assembled from a refined count table.
fn refined_series(profile: &Profile, order: u64, filter: PartFilter) -> TruncatedSeries<TrackedPoly> {
    let table = refined_counts(profile, order, filter);
    let mut coeffs = vec![vec![BigInt::from(0); order as usize + 1]; order as usize + 1];
    for (m, n, c) in table.entries() {
        coeffs[n as usize][m as usize] = BigInt::from(c);
    }
    TruncatedSeries::from_coeffs(
        coeffs.into_iter().map(TrackedPoly::from_coeffs).collect(),
        order as usize,
    )
}

fn borodin_closed(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let n = cfg.univariate;
    let started = Instant::now();
    let a = VerificationReport::compare(
        "borodin-f11",
        &borodin_series(&Profile::one_one(), n),
        &f11_closed(n),
        started,
    );
    let started = Instant::now();
    let b = VerificationReport::compare(
        "borodin-f20",
        &borodin_series(&Profile::two_zero(), n),
        &f20_closed(n),
        started,
    );
    vec![a, b]
}

fn borodin_enumeration(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let cases: [(&[usize], u64); 4] = [
        (&[1, 1], cfg.two_row),
        (&[2, 0], cfg.two_row),
        (&[2, 1], cfg.two_row),
        (&[1, 2, 0], cfg.three_row),
    ];
    cases
        .par_iter()
        .map(|&(c, n)| {
            let started = Instant::now();
            let profile = Profile::new(c.to_vec()).expect("nonempty profile");
            let series = borodin_series(&profile, n as usize);
            let counts = TruncatedSeries::from_coeffs(
                big(&count_sequence(&profile, n, PartFilter::None)),
                n as usize,
            );
            VerificationReport::compare(&format!("borodin-enum-{profile}"), &series, &counts, started)
        })
        .collect()
}

fn f11z(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let started = Instant::now();
    let n = cfg.refined;
    let oracle = refined_series(&Profile::one_one(), n, PartFilter::None);
    vec![VerificationReport::compare("f11z-refined", &f11_bivariate(n as usize), &oracle, started)]
}

fn lemmas(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let n = cfg.distinct;
    let mut out = Vec::new();
    for (name, series, profile) in [
        ("d11-distinct", d11_series(n as usize), Profile::one_one()),
        ("d20-distinct", d20_series(n as usize), Profile::two_zero()),
    ] {
        let started = Instant::now();
        let counts = TruncatedSeries::from_coeffs(
            big(&count_sequence(&profile, n, PartFilter::Distinct)),
            n as usize,
        );
        out.push(VerificationReport::compare(name, &series, &counts, started));
    }
    out
}

fn lemmas_bivariate(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let n = cfg.refined_distinct;
    let mut out = Vec::new();
    for (name, series, profile) in [
        ("d11t-refined", d11_bivariate(n as usize), Profile::one_one()),
        ("d20t-refined", d20_bivariate(n as usize), Profile::two_zero()),
    ] {
        let started = Instant::now();
        let oracle = refined_series(&profile, n, PartFilter::Distinct);
        out.push(
            VerificationReport::compare(name, &series, &oracle, started)
                .with_note("the n = 0 summand is taken as 1"),
        );
    }
    let b = cfg.bivariate;
    let started = Instant::now();
    out.push(VerificationReport::compare(
        "d11t-at-one",
        &specialize(&d11_bivariate(b)),
        &d11_series(b),
        started,
    ));
    let started = Instant::now();
    out.push(VerificationReport::compare(
        "d20t-at-one",
        &specialize(&d20_bivariate(b)),
        &d20_series(b),
        started,
    ));
    out
}

/// Round trips in both directions, tallied per weight.
fn bijection_checks(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let max = cfg.bijection;
    let mut out = Vec::new();
    for flavor in [Flavor::DistinctOdd, Flavor::DistinctEven] {
        let profile = flavor.profile();
        let started = Instant::now();
        let (counts, objects_ok): (Vec<u64>, Vec<u64>) = (0..=max)
            .into_par_iter()
            .map(|n| {
                let all = enumerate_cylindric(&profile, n, PartFilter::None);
                let ok = all
                    .iter()
                    .filter(|lam| {
                        forward(lam, flavor)
                            .and_then(|(p, _)| inverse(&p))
                            .is_ok_and(|(back, _)| &back == *lam)
                    })
                    .count();
                (all.len() as u64, ok as u64)
            })
            .unzip();
        out.push(counts_report(
            &format!("round-trip-{flavor}-objects"),
            &counts,
            &objects_ok,
            started,
        ));
        let started = Instant::now();
        let pairs_ok: Vec<u64> = (0..=max)
            .into_par_iter()
            .map(|n| {
                pairs_of_weight(flavor, n, DependencyRule::AtMost)
                    .iter()
                    .filter(|p| {
                        inverse(p)
                            .and_then(|(lam, _)| forward(&lam, flavor))
                            .is_ok_and(|(back, _)| &back == *p)
                    })
                    .count() as u64
            })
            .collect();
        out.push(counts_report(
            &format!("round-trip-{flavor}-pairs"),
            &counts,
            &pairs_ok,
            started,
        ));
    }
    let started = Instant::now();
    let (pairs, ok): (Vec<u64>, Vec<u64>) = (0..=max)
        .into_par_iter()
        .map(|n| {
            let all = pairs_of_weight(Flavor::DoubledOdd, n, DependencyRule::AtMost);
            let ok = all
                .iter()
                .filter(|p| match inverse(p) {
                    Ok((lam, _)) => {
                        lam.has_odd_parts()
                            && lam.weight() == n
                            && forward(&lam, Flavor::DoubledOdd).is_ok_and(|(back, _)| &back == *p)
                    }
                    Err(_) => false,
                })
                .count();
            (all.len() as u64, ok as u64)
        })
        .unzip();
    out.push(counts_report("round-trip-doubled-odd", &pairs, &ok, started));
    out
}

/// Runs one named group, or every group for `"all"`.
pub fn run_check(name: &str, cfg: &VerifyConfig) -> Result<Vec<VerificationReport>, IdentityError> {
    Ok(match name {
        "all" => verify_all(cfg),
        "borodin-closed" => borodin_closed(cfg),
        "borodin-enumeration" => borodin_enumeration(cfg),
        "eq23" => vec![eq23_check(cfg.eq23)],
        "f11z" => f11z(cfg),
        "lemmas" => lemmas(cfg),
        "lemmas-bivariate" => lemmas_bivariate(cfg),
        "thm33" => thm33_checks(cfg.univariate),
        "oc-forms" => vec![oc_forms_check(cfg.univariate)],
        "bijection" => bijection_checks(cfg),
        other => return Err(IdentityError::UnknownCheck(other.to_string())),
    })
}

/// Every group in [`CHECK_NAMES`] order; groups run concurrently.
pub fn verify_all(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    CHECK_NAMES
        .par_iter()
        .map(|name| run_check(name, cfg).expect("listed names are known"))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_order_passes() {
        let cfg = VerifyConfig::with_order(0);
        let reports = verify_all(&cfg);
        assert!(reports.len() >= 15);
        for r in &reports {
            assert!(r.pass, "{}", r.summary_line());
        }
    }

    #[test]
    fn small_order_passes() {
        for r in verify_all(&VerifyConfig::with_order(8)) {
            assert!(r.pass, "{}", r.summary_line());
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            run_check("nope", &VerifyConfig::default()),
            Err(IdentityError::UnknownCheck("nope".into()))
        );
    }

    #[test]
    fn order_capping() {
        let c = VerifyConfig::with_order(12);
        assert_eq!((c.univariate, c.two_row, c.three_row, c.refined), (12, 12, 12, 12));
        let c = VerifyConfig::with_order(300);
        assert_eq!((c.univariate, c.eq23, c.two_row), (300, 300, 25));
    }
}
