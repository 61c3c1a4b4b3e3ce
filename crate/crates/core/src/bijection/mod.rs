//! Move-based correspondences between two-row cylindric partitions and
//! pairs of ordinary partitions.
//!
//! | profile | flavor        | μ            | β                              |
//! |---------|---------------|--------------|--------------------------------|
//! | (1,1)   | distinct-odd  | unrestricted | distinct odd parts             |
//! | (2,0)   | distinct-even | unrestricted | distinct even parts            |
//! | (1,1)   | doubled-odd   | odd parts    | distinct odd parts, weight 2×  |
//!
//! The forward direction reads the rows as pairs `[b_j, a_j]` (top row `a`,
//! bottom row `b`, profile (2,0) keeps an extra leading `a_0`) and scans
//! `j = r, ..., 1`. Whenever `a_j > b_j` the pair is switched and the
//! entries above and to the left of the moved `a_j` are lowered; the number
//! of lowered entries becomes a part of β. The inverse replays the moves
//! from the smallest part of β upward.

mod generate;
mod paired;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{CylindricPartition, Partition, Profile, ValidationError};

pub use generate::pairs_of_weight;
pub use paired::{pad_11, pad_20, PairedForm11, PairedForm20};
use paired::Pairs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    DistinctOdd,
    DistinctEven,
    DoubledOdd,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::DistinctOdd => "distinct-odd",
            Flavor::DistinctEven => "distinct-even",
            Flavor::DoubledOdd => "doubled-odd",
        })
    }
}

impl Flavor {
    pub fn profile(self) -> Profile {
        match self {
            Flavor::DistinctOdd | Flavor::DoubledOdd => Profile::one_one(),
            Flavor::DistinctEven => Profile::two_zero(),
        }
    }

    /// Amount added to or subtracted from each touched entry per move.
    fn amount(self) -> i64 {
        match self {
            Flavor::DoubledOdd => 2,
            _ => 1,
        }
    }

    fn has_head(self) -> bool {
        self == Flavor::DistinctEven
    }

    /// β part recorded by a move at pair `j`.
    fn part_for(self, j: usize) -> u64 {
        match self {
            Flavor::DistinctEven => 2 * j as u64,
            _ => 2 * j as u64 - 1,
        }
    }

    fn pair_for(self, part: u64) -> usize {
        match self {
            Flavor::DistinctEven => (part / 2) as usize,
            _ => part.div_ceil(2) as usize,
        }
    }
}

/// Reading of the constraint tying `len(μ)` to `max(β)` for doubled-odd
/// pairs: with `len(μ) = 2k` the bound is `2k−1`, with `len(μ) = 2k+1` it
/// is `2k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DependencyRule {
    /// `max(β)` is at most the bound (β may be empty).
    #[default]
    AtMost,
    /// `max(β)` equals the bound; β is empty only when the bound is below 1.
    Exactly,
}

impl DependencyRule {
    pub fn bound(mu_len: usize) -> i64 {
        if mu_len % 2 == 0 {
            mu_len as i64 - 1
        } else {
            mu_len as i64
        }
    }

    pub fn holds(self, mu_len: usize, beta: &Partition) -> bool {
        let bound = Self::bound(mu_len);
        match (self, beta.is_empty()) {
            (DependencyRule::AtMost, true) => true,
            (DependencyRule::AtMost, false) => beta.largest() as i64 <= bound,
            (DependencyRule::Exactly, true) => bound < 1,
            (DependencyRule::Exactly, false) => beta.largest() as i64 == bound,
        }
    }
}

/// Image `(μ, β)` of a cylindric partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionPair {
    pub mu: Partition,
    pub beta: Partition,
    pub flavor: Flavor,
}

impl PartitionPair {
    pub fn new(mu: Partition, beta: Partition, flavor: Flavor) -> Self {
        PartitionPair { mu, beta, flavor }
    }

    /// `|μ| + |β|`, with β counted twice for the doubled flavor.
    pub fn effective_weight(&self) -> u64 {
        let k = if self.flavor == Flavor::DoubledOdd { 2 } else { 1 };
        self.mu.weight() + k * self.beta.weight()
    }

    /// Checks the flavor invariants; doubled-odd pairs are checked against
    /// `rule`.
    pub fn validate(&self, rule: DependencyRule) -> Result<(), BijectionError> {
        match self.flavor {
            Flavor::DistinctOdd => {
                if !(self.beta.is_distinct() && self.beta.all_odd()) {
                    return Err(BijectionError::BetaNotDistinctOdd(self.beta.clone()));
                }
            }
            Flavor::DistinctEven => {
                if !(self.beta.is_distinct() && self.beta.all_even()) {
                    return Err(BijectionError::BetaNotDistinctEven(self.beta.clone()));
                }
            }
            Flavor::DoubledOdd => {
                if !(self.beta.is_distinct() && self.beta.all_odd()) {
                    return Err(BijectionError::BetaNotDistinctOdd(self.beta.clone()));
                }
                if !self.mu.all_odd() {
                    return Err(BijectionError::MuNotOdd(self.mu.clone()));
                }
                if !rule.holds(self.mu.len(), &self.beta) {
                    return Err(BijectionError::DependencyViolated {
                        mu_len: self.mu.len(),
                        beta_max: self.beta.largest(),
                    });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// One switch-and-lower (forward) or raise-and-switch (backward) move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveStep {
    pub direction: Direction,
    /// 1-based pair index.
    pub j: usize,
    /// Change applied to each touched entry.
    pub amount: u64,
    /// β part emitted (forward) or consumed (backward).
    pub part: u64,
    /// Weight of the paired form after the move.
    pub weight_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MoveTrace {
    pub steps: Vec<MoveStep>,
}

impl MoveTrace {
    /// Parts in the order they were emitted or consumed.
    pub fn parts(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.part).collect()
    }

    pub fn pairs(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.j).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("expected profile {expected}, got {got}")]
    WrongProfile { expected: Profile, got: Profile },
    #[error("row lengths {top} and {bottom} differ by more than one")]
    RowLengthGap { top: usize, bottom: usize },
    #[error("expected a {expected} pair, got {got}")]
    FlavorMismatch { expected: Flavor, got: Flavor },
    #[error("beta {0} does not have distinct odd parts")]
    BetaNotDistinctOdd(Partition),
    #[error("beta {0} does not have distinct even parts")]
    BetaNotDistinctEven(Partition),
    #[error("mu {0} has an even part")]
    MuNotOdd(Partition),
    #[error("mu has {mu_len} parts but the largest part of beta is {beta_max}")]
    DependencyViolated { mu_len: usize, beta_max: u64 },
    #[error("the cylindric partition has an even part")]
    NotAllOdd,
    #[error("not in the image of the doubled map: {reason}")]
    NotInImage { j: usize, reason: String },
    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

fn require_profile(lam: &CylindricPartition, flavor: Flavor) -> Result<(), BijectionError> {
    let expected = flavor.profile();
    if lam.profile() != &expected {
        return Err(BijectionError::WrongProfile {
            expected,
            got: lam.profile().clone(),
        });
    }
    Ok(())
}

fn broken(e: ValidationError) -> BijectionError {
    BijectionError::Invariant(e.to_string())
}

fn run_forward(
    lam: &CylindricPartition,
    flavor: Flavor,
) -> Result<(PartitionPair, MoveTrace), BijectionError> {
    require_profile(lam, flavor)?;
    if flavor == Flavor::DoubledOdd && !lam.has_odd_parts() {
        return Err(BijectionError::NotAllOdd);
    }
    let profile = flavor.profile();
    let mut form = Pairs::from_cylindric(lam, flavor.has_head())?;
    let amount = flavor.amount();
    let total = lam.weight();
    let mut beta = Vec::new();
    let mut trace = MoveTrace::default();
    // any failure on the doubled flavor means the input has no preimage
    let fail = |j: usize, e: ValidationError| {
        if flavor == Flavor::DoubledOdd {
            BijectionError::NotInImage {
                j,
                reason: e.to_string(),
            }
        } else {
            broken(e)
        }
    };
    for j in (1..=form.r()).rev() {
        if form.a[j - 1] <= form.b[j - 1] {
            continue;
        }
        form.switch(j);
        form.check(&profile).map_err(|e| fail(j, e))?;
        form.shift_left_of(j, -amount);
        form.check(&profile).map_err(|e| fail(j, e))?;
        let part = flavor.part_for(j);
        beta.push(part);
        let weight_after = form.weight() as u64;
        debug_assert_eq!(
            weight_after + (amount as u64) * beta.iter().sum::<u64>(),
            total
        );
        trace.steps.push(MoveStep {
            direction: Direction::Forward,
            j,
            amount: amount as u64,
            part,
            weight_after,
        });
    }
    let mu = Partition::new(form.interleave())
        .map_err(|e| BijectionError::Invariant(format!("relabeled parts: {e}")))?;
    let beta = Partition::new(beta).map_err(|e| BijectionError::Invariant(e.to_string()))?;
    let pair = PartitionPair::new(mu, beta, flavor);
    if flavor == Flavor::DoubledOdd {
        pair.validate(DependencyRule::AtMost)
            .map_err(|e| BijectionError::NotInImage {
                j: 0,
                reason: e.to_string(),
            })?;
    }
    Ok((pair, trace))
}

fn run_inverse(
    pair: &PartitionPair,
    flavor: Flavor,
    rule: DependencyRule,
) -> Result<(CylindricPartition, MoveTrace), BijectionError> {
    if pair.flavor != flavor {
        return Err(BijectionError::FlavorMismatch {
            expected: flavor,
            got: pair.flavor,
        });
    }
    pair.validate(rule)?;
    let profile = flavor.profile();
    let amount = flavor.amount();
    let mut form = Pairs::from_relabeled(pair.mu.parts(), flavor.has_head());
    let mut consumed = 0u64;
    let mut trace = MoveTrace::default();
    for &part in pair.beta.parts().iter().rev() {
        let j = flavor.pair_for(part);
        form.ensure_pairs(j);
        form.shift_left_of(j, amount);
        form.check(&profile).map_err(broken)?;
        form.switch(j);
        form.check(&profile).map_err(broken)?;
        consumed += part;
        let weight_after = form.weight() as u64;
        debug_assert_eq!(
            weight_after,
            pair.mu.weight() + amount as u64 * consumed
        );
        trace.steps.push(MoveStep {
            direction: Direction::Backward,
            j,
            amount: amount as u64,
            part,
            weight_after,
        });
    }
    let lam = CylindricPartition::validate(&form.rows(), &profile).map_err(broken)?;
    if flavor == Flavor::DoubledOdd && !lam.has_odd_parts() {
        return Err(BijectionError::Invariant(format!(
            "doubled inverse produced an even part in {lam}"
        )));
    }
    Ok((lam, trace))
}

/// `Λ ↦ (μ, β)` for profile (1,1), β into distinct odd parts.
pub fn forward_11(
    lam: &CylindricPartition,
) -> Result<(PartitionPair, MoveTrace), BijectionError> {
    run_forward(lam, Flavor::DistinctOdd)
}

pub fn inverse_11(pair: &PartitionPair) -> Result<CylindricPartition, BijectionError> {
    inverse_11_traced(pair).map(|(lam, _)| lam)
}

pub fn inverse_11_traced(
    pair: &PartitionPair,
) -> Result<(CylindricPartition, MoveTrace), BijectionError> {
    run_inverse(pair, Flavor::DistinctOdd, DependencyRule::AtMost)
}

/// `Λ ↦ (μ, β)` for profile (2,0), β into distinct even parts. The leading
/// top-row entry is lowered by every move.
pub fn forward_20(
    lam: &CylindricPartition,
) -> Result<(PartitionPair, MoveTrace), BijectionError> {
    run_forward(lam, Flavor::DistinctEven)
}

pub fn inverse_20(pair: &PartitionPair) -> Result<CylindricPartition, BijectionError> {
    inverse_20_traced(pair).map(|(lam, _)| lam)
}

pub fn inverse_20_traced(
    pair: &PartitionPair,
) -> Result<(CylindricPartition, MoveTrace), BijectionError> {
    run_inverse(pair, Flavor::DistinctEven, DependencyRule::AtMost)
}

/// The profile-(1,1) moves with every change doubled, on all-odd input.
/// Partial: a move that drives an entry negative, or a result violating the
/// doubled-odd invariants, yields [`BijectionError::NotInImage`].
pub fn forward_odd_11(
    lam: &CylindricPartition,
) -> Result<(PartitionPair, MoveTrace), BijectionError> {
    run_forward(lam, Flavor::DoubledOdd)
}

pub fn inverse_odd_11(pair: &PartitionPair) -> Result<CylindricPartition, BijectionError> {
    inverse_odd_11_with(pair, DependencyRule::AtMost).map(|(lam, _)| lam)
}

pub fn inverse_odd_11_with(
    pair: &PartitionPair,
    rule: DependencyRule,
) -> Result<(CylindricPartition, MoveTrace), BijectionError> {
    run_inverse(pair, Flavor::DoubledOdd, rule)
}

/// Largest part of the cylindric partition a distinct-odd pair maps back
/// to: each part of β raises the largest part of μ by one.
pub fn largest_part_statistic(pair: &PartitionPair) -> u64 {
    pair.mu.largest() + pair.beta.len() as u64
}

/// Undoes a forward trace starting from its image, one recorded move at a
/// time in reverse order, without consulting β.
pub fn replay_backward(
    pair: &PartitionPair,
    trace: &MoveTrace,
) -> Result<CylindricPartition, BijectionError> {
    let flavor = pair.flavor;
    let profile = flavor.profile();
    let mut form = Pairs::from_relabeled(pair.mu.parts(), flavor.has_head());
    for step in trace.steps.iter().rev() {
        if step.direction != Direction::Forward || step.j == 0 {
            return Err(BijectionError::Invariant(format!(
                "cannot replay step {step:?} backward"
            )));
        }
        form.ensure_pairs(step.j);
        form.shift_left_of(step.j, step.amount as i64);
        form.switch(step.j);
        form.check(&profile).map_err(broken)?;
    }
    CylindricPartition::validate(&form.rows(), &profile).map_err(broken)
}

/// Forward map for the pair's profile and flavor.
pub fn forward(
    lam: &CylindricPartition,
    flavor: Flavor,
) -> Result<(PartitionPair, MoveTrace), BijectionError> {
    run_forward(lam, flavor)
}

/// Inverse map selected by the pair's flavor.
pub fn inverse(pair: &PartitionPair) -> Result<(CylindricPartition, MoveTrace), BijectionError> {
    run_inverse(pair, pair.flavor, DependencyRule::AtMost)
}

#[cfg(test)]
mod tests;
