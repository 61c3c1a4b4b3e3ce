//! The all-odd profile-(1,1) series in its two displayed forms, and a
//! comparison table against enumeration.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::products::to_u64;
use crate::bijection::{inverse_odd_11, pairs_of_weight, DependencyRule, Flavor};
use crate::enumerate::{count_sequence, PartFilter};
use crate::partition::Profile;
use crate::qseries::TruncatedSeries;
use crate::report::VerificationReport;

fn one() -> BigInt {
    BigInt::from(1)
}

/// `Σ_{2k≤N} q^{2k}(−q²;q⁴)_k/(q²;q²)_{2k} + Σ_{2k+1≤N} q^{2k+1}(−q²;q⁴)_{k+1}/(q²;q²)_{2k+1}`.
pub fn oc_two_sum(order: usize) -> TruncatedSeries<BigInt> {
    let minus_one = BigInt::from(-1);
    let mut total = TruncatedSeries::zero(order);
    // (−q²;q⁴)_k / (q²;q²)_{2k}
    let mut core = TruncatedSeries::one(order);
    let mut k = 0usize;
    while 2 * k <= order {
        total = total.add(&core.shift(2 * k)).expect("same order");
        if 2 * k < order {
            let mut odd = core.clone();
            odd.mul_binomial(&minus_one, 4 * k + 2);
            odd.div_binomial(&one(), 4 * k + 2);
            total = total.add(&odd.shift(2 * k + 1)).expect("same order");
        }
        core.mul_binomial(&minus_one, 4 * k + 2);
        core.div_binomial(&one(), 4 * k + 2);
        core.div_binomial(&one(), 4 * k + 4);
        k += 1;
    }
    total
}

/// `Σ_k q^{2k}(−q²;q⁴)_k (1 + q − q^{4k+2} + q^{4k+3}) / (q²;q²)_{2k+1}`.
pub fn oc_closed(order: usize) -> TruncatedSeries<BigInt> {
    let mut total = TruncatedSeries::zero(order);
    let mut k = 0usize;
    while 2 * k <= order {
        let mut base = TruncatedSeries::one(order);
        for i in 0..k {
            base.mul_binomial(&BigInt::from(-1), 4 * i + 2);
        }
        for i in 1..=2 * k + 1 {
            base.div_binomial(&one(), 2 * i);
        }
        let term = base
            .add(&base.shift(1))
            .and_then(|s| s.sub(&base.shift(4 * k + 2)))
            .and_then(|s| s.add(&base.shift(4 * k + 3)))
            .expect("same order");
        total = total.add(&term.shift(2 * k)).expect("same order");
        k += 1;
    }
    total
}

pub fn oc_forms_check(order: usize) -> VerificationReport {
    let started = Instant::now();
    VerificationReport::compare("oc-forms", &oc_two_sum(order), &oc_closed(order), started)
}

/// One weight of the comparison table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OcRow {
    pub n: u64,
    /// Coefficient of `q^n` in the displayed series.
    pub series: u64,
    /// All-odd profile-(1,1) cylindric partitions of weight `n`.
    pub enumeration: u64,
    /// Doubled-odd pairs of effective weight `n`, largest β part at most the bound.
    pub image: u64,
    /// Same, with the largest β part equal to the bound.
    pub strict: u64,
    /// `enumeration − series`.
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OcTable {
    pub rows: Vec<OcRow>,
    /// Smallest weight where series and enumeration differ.
    pub first_diff: Option<u64>,
    /// Smallest weight where series and the pair count differ.
    pub first_image_diff: Option<u64>,
}

/// Builds the table for weights `0..=order`. Every counted pair is mapped
/// back and must land on an all-odd cylindric partition of the same weight.
pub fn oc_vs_enumeration(order: u64) -> OcTable {
    let series = to_u64(&oc_two_sum(order as usize));
    let enumeration = count_sequence(&Profile::one_one(), order, PartFilter::Odd);
    let rows: Vec<OcRow> = (0..=order)
        .into_par_iter()
        .map(|n| {
            let pairs = pairs_of_weight(Flavor::DoubledOdd, n, DependencyRule::AtMost);
            for p in &pairs {
                let lam = inverse_odd_11(p).expect("valid pair maps back");
                assert!(lam.has_odd_parts() && lam.weight() == n);
            }
            let strict = pairs
                .iter()
                .filter(|p| p.validate(DependencyRule::Exactly).is_ok())
                .count() as u64;
            let i = n as usize;
            OcRow {
                n,
                series: series[i],
                enumeration: enumeration[i],
                image: pairs.len() as u64,
                strict,
                delta: enumeration[i] as i64 - series[i] as i64,
            }
        })
        .collect();
    let first_diff = rows.iter().find(|r| r.delta != 0).map(|r| r.n);
    let first_image_diff = rows.iter().find(|r| r.image != r.series).map(|r| r.n);
    OcTable {
        rows,
        first_diff,
        first_image_diff,
    }
}

impl OcTable {
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("| n | series | all-odd enumeration | doubled-odd pairs (at most) | doubled-odd pairs (exactly) | enumeration − series |\n");
        s.push_str("|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} |",
                r.n, r.series, r.enumeration, r.image, r.strict, r.delta
            );
        }
        let fmt = |x: Option<u64>| x.map_or("none".to_string(), |n| n.to_string());
        let _ = writeln!(
            s,
            "\nFirst weight where series and enumeration differ: {}",
            fmt(self.first_diff)
        );
        let _ = writeln!(
            s,
            "First weight where series and the pair count differ: {}",
            fmt(self.first_image_diff)
        );
        s
    }
}
