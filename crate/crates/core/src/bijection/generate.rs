//! Exhaustive lists of valid pairs, ordered by `(β, μ)`.

use super::{DependencyRule, Flavor, PartitionPair};
use crate::partition::Partition;

/// Partitions of `n` into parts accepted by `allowed`, no part above `cap`.
fn restricted(n: u64, cap: u64, distinct: bool, allowed: &dyn Fn(u64) -> bool) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(n)).rev().filter(|&p| allowed(p)) {
        let next_cap = if distinct { first - 1 } else { first };
        for mut rest in restricted(n - first, next_cap, distinct, allowed) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every pair of the given flavor with effective weight exactly `n` that
/// passes [`PartitionPair::validate`] under `rule`.
pub fn pairs_of_weight(flavor: Flavor, n: u64, rule: DependencyRule) -> Vec<PartitionPair> {
    let beta_ok: Box<dyn Fn(u64) -> bool> = match flavor {
        Flavor::DistinctEven => Box::new(|p| p % 2 == 0),
        _ => Box::new(|p| p % 2 == 1),
    };
    let mu_ok: Box<dyn Fn(u64) -> bool> = match flavor {
        Flavor::DoubledOdd => Box::new(|p| p % 2 == 1),
        _ => Box::new(|_| true),
    };
    let k = if flavor == Flavor::DoubledOdd { 2 } else { 1 };
    let mut out = Vec::new();
    for b in 0..=n / k {
        for beta in restricted(b, b, true, &*beta_ok) {
            let rest = n - k * b;
            for mu in restricted(rest, rest, false, &*mu_ok) {
                let pair = PartitionPair::new(
                    Partition::new(mu).expect("generated in decreasing order"),
                    Partition::new(beta.clone()).expect("generated in decreasing order"),
                    flavor,
                );
                if pair.validate(rule).is_ok() {
                    out.push(pair);
                }
            }
        }
    }
    out
}
