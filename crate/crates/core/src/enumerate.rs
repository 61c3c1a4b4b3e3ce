//! Exhaustive enumeration of cylindric partitions of a fixed weight.
//!
//! Rows are filled left to right, top to bottom. Each entry of row `i+1` is
//! capped by the shifted entry of row `i`, so only the wrap-around
//! inequality needs checking once a full tuple is built. The search is split
//! on the first entry of the top row and the branches run in parallel;
//! results are sorted afterwards, so output order never depends on the
//! thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{check_rows, CylindricPartition, Profile};

/// Restriction on the entries of enumerated objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartFilter {
    #[default]
    None,
    /// All entries pairwise distinct across all rows.
    Distinct,
    /// Every entry odd.
    Odd,
}

impl FromStr for PartFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(PartFilter::None),
            "distinct" => Ok(PartFilter::Distinct),
            "odd" => Ok(PartFilter::Odd),
            other => Err(format!("unknown filter {other:?}")),
        }
    }
}

impl fmt::Display for PartFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartFilter::None => "none",
            PartFilter::Distinct => "distinct",
            PartFilter::Odd => "odd",
        })
    }
}

struct Search<'a, F> {
    profile: &'a Profile,
    filter: PartFilter,
    rows: Vec<Vec<u64>>,
    // used[v] for the distinct filter
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[Vec<u64>])> Search<'_, F> {
    fn cap(&self, row: usize, pos: usize) -> u64 {
        let same_row = if pos == 0 {
            u64::MAX
        } else {
            self.rows[row][pos - 1]
        };
        if row == 0 {
            return same_row;
        }
        let shift = self.profile.shift(row);
        let above = if pos >= shift {
            self.rows[row - 1].get(pos - shift).copied().unwrap_or(0)
        } else {
            u64::MAX
        };
        same_row.min(above)
    }

    fn allowed(&self, v: u64) -> bool {
        match self.filter {
            PartFilter::None => true,
            PartFilter::Odd => v % 2 == 1,
            PartFilter::Distinct => !self.used[v as usize],
        }
    }

    fn place(&mut self, row: usize, v: u64) {
        self.rows[row].push(v);
        if self.filter == PartFilter::Distinct {
            self.used[v as usize] = true;
        }
    }

    fn unplace(&mut self, row: usize) {
        let v = self.rows[row].pop().expect("placed before");
        if self.filter == PartFilter::Distinct {
            self.used[v as usize] = false;
        }
    }

    /// Extends `row` at its current end with remaining weight `rest`.
    fn extend(&mut self, row: usize, rest: u64) {
        let k = self.profile.rank();
        // close the row here
        if row + 1 < k {
            self.extend(row + 1, rest);
        } else if rest == 0 && self.wrap_ok() {
            (self.visit)(&self.rows);
        }
        let pos = self.rows[row].len();
        let cap = self.cap(row, pos).min(rest);
        for v in (1..=cap).rev() {
            if !self.allowed(v) {
                continue;
            }
            self.place(row, v);
            self.extend(row, rest - v);
            self.unplace(row);
        }
    }

    fn wrap_ok(&self) -> bool {
        let k = self.profile.rank();
        let last = &self.rows[k - 1];
        let first = &self.rows[0];
        let shift = self.profile.shift(0);
        (0..first.len().saturating_sub(shift))
            .all(|j| last.get(j).copied().unwrap_or(0) >= first[j + shift])
    }
}

fn search_branch<F: FnMut(&[Vec<u64>])>(
    profile: &Profile,
    weight: u64,
    filter: PartFilter,
    first: u64,
    visit: F,
) {
    let mut s = Search {
        profile,
        filter,
        rows: vec![Vec::new(); profile.rank()],
        used: vec![false; weight as usize + 1],
        visit,
    };
    if first == 0 {
        // empty top row
        if profile.rank() == 1 {
            if weight == 0 {
                (s.visit)(&s.rows);
            }
        } else {
            s.extend(1, weight);
        }
    } else if s.allowed(first) {
        s.place(0, first);
        s.extend(0, weight - first);
    }
}

/// Runs `visit` on every cylindric partition of the given weight, one branch
/// per leading top-row entry, and folds the branch results with `merge`.
fn fold_branches<T, V, M>(profile: &Profile, weight: u64, filter: PartFilter, make: V, merge: M) -> T
where
    T: Send + Default,
    V: Fn(u64, &mut T, &[Vec<u64>]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    (0..=weight)
        .into_par_iter()
        .map(|first| {
            let mut acc = T::default();
            search_branch(profile, weight, filter, first, |rows| {
                make(first, &mut acc, rows)
            });
            acc
        })
        .reduce(T::default, &merge)
}

/// Every cylindric partition of weight `n` with the given profile and
/// filter, in lexicographic order of the row lists.
pub fn enumerate_cylindric(profile: &Profile, n: u64, filter: PartFilter) -> Vec<CylindricPartition> {
    let mut rows: Vec<Vec<Vec<u64>>> = fold_branches(
        profile,
        n,
        filter,
        |_, acc: &mut Vec<Vec<Vec<u64>>>, rows| acc.push(rows.to_vec()),
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    rows.sort();
    rows.into_iter()
        .map(|r| {
            let signed: Vec<Vec<i64>> = r
                .iter()
                .map(|row| row.iter().map(|&x| x as i64).collect())
                .collect();
            debug_assert!(check_rows(&signed, profile).is_ok());
            CylindricPartition::validate(&signed, profile).expect("search emits valid objects")
        })
        .collect()
}

fn count_weight(profile: &Profile, n: u64, filter: PartFilter) -> u64 {
    fold_branches(profile, n, filter, |_, acc: &mut u64, _| *acc += 1, |a, b| a + b)
}

/// Entry `n` is the number of objects of weight `n`, for `n = 0..=order`.
pub fn count_sequence(profile: &Profile, order: u64, filter: PartFilter) -> Vec<u64> {
    (0..=order).map(|n| count_weight(profile, n, filter)).collect()
}

/// Counts keyed by (largest part, weight).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedCounts {
    pub max_weight: u64,
    table: BTreeMap<(u64, u64), u64>,
}

impl RefinedCounts {
    pub fn count(&self, largest: u64, weight: u64) -> u64 {
        self.table.get(&(largest, weight)).copied().unwrap_or(0)
    }

    /// Sum over the largest part; reproduces [`count_sequence`].
    pub fn marginal(&self) -> Vec<u64> {
        let mut out = vec![0; self.max_weight as usize + 1];
        for (&(_, n), &c) in &self.table {
            out[n as usize] += c;
        }
        out
    }

    /// Nonzero entries as `(largest, weight, count)` in key order.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.table.iter().map(|(&(m, n), &c)| (m, n, c))
    }
}

pub fn refined_counts(profile: &Profile, order: u64, filter: PartFilter) -> RefinedCounts {
    let mut table = BTreeMap::new();
    for n in 0..=order {
        let by_max: BTreeMap<u64, u64> = fold_branches(
            profile,
            n,
            filter,
            |_, acc: &mut BTreeMap<u64, u64>, rows| {
                let m = rows.iter().filter_map(|r| r.first()).max().copied().unwrap_or(0);
                *acc.entry(m).or_default() += 1;
            },
            |mut a, b| {
                for (m, c) in b {
                    *a.entry(m).or_default() += c;
                }
                a
            },
        );
        for (m, c) in by_max {
            table.insert((m, n), c);
        }
    }
    RefinedCounts {
        max_weight: order,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_of(v: &[CylindricPartition]) -> Vec<Vec<Vec<u64>>> {
        v.iter().map(CylindricPartition::to_rows).collect()
    }

    #[test]
    fn weight_one_profile_11() {
        let got = enumerate_cylindric(&Profile::one_one(), 1, PartFilter::None);
        assert_eq!(rows_of(&got), vec![vec![vec![], vec![1]], vec![vec![1], vec![]]]);
    }

    #[test]
    fn weight_two_profile_11() {
        let got = enumerate_cylindric(&Profile::one_one(), 2, PartFilter::None);
        assert_eq!(
            rows_of(&got),
            vec![
                vec![vec![], vec![2]],
                vec![vec![1], vec![1]],
                vec![vec![2], vec![]],
            ]
        );
    }

    #[test]
    fn weight_one_profile_20() {
        let got = enumerate_cylindric(&Profile::two_zero(), 1, PartFilter::None);
        assert_eq!(rows_of(&got), vec![vec![vec![1], vec![]]]);
    }

    #[test]
    fn distinct_weight_three() {
        assert_eq!(
            enumerate_cylindric(&Profile::one_one(), 3, PartFilter::Distinct).len(),
            4
        );
    }

    #[test]
    fn small_count_sequences() {
        let pr = Profile::one_one();
        assert_eq!(count_sequence(&pr, 4, PartFilter::None), vec![1, 2, 3, 6, 10]);
        assert_eq!(
            count_sequence(&pr, 5, PartFilter::Distinct),
            vec![1, 2, 2, 4, 4, 6]
        );
        for prof in [vec![1, 1], vec![2, 0], vec![1, 2, 0], vec![3]] {
            let pr = Profile::new(prof).unwrap();
            assert_eq!(count_sequence(&pr, 0, PartFilter::Odd), vec![1]);
        }
    }

    #[test]
    fn refined_small_values() {
        let rc = refined_counts(&Profile::one_one(), 6, PartFilter::None);
        assert_eq!(rc.count(0, 0), 1);
        assert_eq!(rc.count(1, 1), 2);
        for n in 1..=6 {
            assert_eq!(rc.count(0, n), 0);
            for m in n + 1..=8 {
                assert_eq!(rc.count(m, n), 0);
            }
        }
        assert_eq!(rc.marginal(), count_sequence(&Profile::one_one(), 6, PartFilter::None));
    }

    #[test]
    fn filters_are_respected() {
        for lam in enumerate_cylindric(&Profile::one_one(), 9, PartFilter::Odd) {
            assert!(lam.has_odd_parts());
        }
        for lam in enumerate_cylindric(&Profile::two_zero(), 9, PartFilter::Distinct) {
            assert!(lam.has_distinct_parts());
        }
    }
}
