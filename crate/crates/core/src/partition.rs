//! Ordinary partitions, profiles, and cylindric partitions.
//!
//! A cylindric partition with profile `c = (c_1, ..., c_k)` is a k-tuple of
//! partitions `(λ^(1), ..., λ^(k))` with
//!
//! ```text
//! λ^(i)_j ≥ λ^(i+1)_{j + c_{i+1}}      for 1 ≤ i < k
//! λ^(k)_j ≥ λ^(1)_{j + c_1}            (wrap-around)
//! ```
//!
//! where entries past the end of a row read as zero. Rows are stored without
//! trailing zeros.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u64>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("partition contains a negative part at index {index}")]
    NegativePart { index: usize },
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts, dropping zeros. The nonzero parts must
    /// already be weakly decreasing.
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        let mut parts = parts;
        // zeros may only trail
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotWeaklyDecreasing { index: index + 1 });
            }
        }
        Ok(Partition(parts))
    }

    /// Like [`Partition::new`] but accepts signed input, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Self, PartitionError> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &p) in parts.iter().enumerate() {
            if p < 0 {
                return Err(PartitionError::NegativePart { index });
            }
            out.push(p as u64);
        }
        Partition::new(out)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Entry `j` (0-based), reading past the end as 0.
    pub fn get(&self, j: usize) -> u64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn is_distinct(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(d)?;
        Partition::from_signed(&raw).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The composition `c = (c_1, ..., c_k)` fixing the row shifts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Profile(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("a profile needs at least one entry")]
    Empty,
    #[error("cannot parse profile entry {0:?}")]
    Parse(String),
}

impl Profile {
    pub fn new(entries: Vec<usize>) -> Result<Self, ProfileError> {
        if entries.is_empty() {
            return Err(ProfileError::Empty);
        }
        Ok(Profile(entries))
    }

    /// The two-row profile `(1,1)`.
    pub fn one_one() -> Self {
        Profile(vec![1, 1])
    }

    /// The two-row profile `(2,0)`.
    pub fn two_zero() -> Self {
        Profile(vec![2, 0])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Sum of the entries.
    pub fn ell(&self) -> usize {
        self.0.iter().sum()
    }

    /// Modulus `k + ell` of the product formula.
    pub fn modulus(&self) -> usize {
        self.rank() + self.ell()
    }

    /// Shift applied when comparing row `i` (0-based) against its predecessor.
    pub fn shift(&self, i: usize) -> usize {
        self.0[i]
    }
}

impl TryFrom<Vec<usize>> for Profile {
    type Error = ProfileError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Profile::new(v)
    }
}

impl From<Profile> for Vec<usize> {
    fn from(p: Profile) -> Self {
        p.0
    }
}

impl std::str::FromStr for Profile {
    type Err = ProfileError;

    /// Parses `"1,2,0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| ProfileError::Parse(t.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Profile::new(entries)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Why a list of rows is not a cylindric partition. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("expected {expected} rows, got {got}")]
    WrongRowCount { expected: usize, got: usize },
    #[error("row {row} has a negative part at position {position}")]
    NegativePart { row: usize, position: usize },
    #[error("row {row} is not weakly decreasing at position {position}")]
    RowNotWeaklyDecreasing { row: usize, position: usize },
    /// `λ^(i)_j ≥ λ^(i+1)_{j+c_{i+1}}` fails (`i = k` is the wrap-around).
    #[error("cyclic inequality ({i}, {j}) violated: {upper} < {lower}")]
    CyclicInequalityViolated {
        i: usize,
        j: usize,
        upper: i64,
        lower: i64,
    },
}

/// Checks the row conditions on signed data. Rows may carry trailing zeros.
pub(crate) fn check_rows(rows: &[Vec<i64>], profile: &Profile) -> Result<(), ValidationError> {
    let k = profile.rank();
    if rows.len() != k {
        return Err(ValidationError::WrongRowCount {
            expected: k,
            got: rows.len(),
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if let Some(p) = row.iter().position(|&x| x < 0) {
            return Err(ValidationError::NegativePart {
                row: r + 1,
                position: p + 1,
            });
        }
    }
    for (r, row) in rows.iter().enumerate() {
        if let Some(p) = row.windows(2).position(|w| w[0] < w[1]) {
            return Err(ValidationError::RowNotWeaklyDecreasing {
                row: r + 1,
                position: p + 2,
            });
        }
    }
    let at = |row: &Vec<i64>, j: usize| row.get(j).copied().unwrap_or(0);
    for i in 0..k {
        let next = (i + 1) % k;
        let shift = profile.shift(next);
        let upper_row = &rows[i];
        let lower_row = &rows[next];
        // only positions where the shifted lower entry exists can fail
        for j in 0..lower_row.len().saturating_sub(shift) {
            let upper = at(upper_row, j);
            let lower = at(lower_row, j + shift);
            if upper < lower {
                return Err(ValidationError::CyclicInequalityViolated {
                    i: i + 1,
                    j: j + 1,
                    upper,
                    lower,
                });
            }
        }
    }
    Ok(())
}

/// A validated cylindric partition in canonical (zero-stripped) form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CylindricPartition {
    profile: Profile,
    rows: Vec<Partition>,
}

impl PartialOrd for Profile {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Profile {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl CylindricPartition {
    /// Validates `rows` against `profile`; trailing zeros are stripped.
    pub fn validate(rows: &[Vec<i64>], profile: &Profile) -> Result<Self, ValidationError> {
        check_rows(rows, profile)?;
        let rows = rows
            .iter()
            .map(|r| Partition::from_signed(r).expect("rows checked above"))
            .collect();
        Ok(CylindricPartition {
            profile: profile.clone(),
            rows,
        })
    }

    pub fn from_unsigned(rows: &[Vec<u64>], profile: &Profile) -> Result<Self, ValidationError> {
        let signed: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        Self::validate(&signed, profile)
    }

    pub fn empty(profile: &Profile) -> Self {
        CylindricPartition {
            profile: profile.clone(),
            rows: vec![Partition::empty(); profile.rank()],
        }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Partition {
        &self.rows[i]
    }

    pub fn weight(&self) -> u64 {
        self.rows.iter().map(Partition::weight).sum()
    }

    /// Largest entry over all rows; 0 for the empty object.
    pub fn max_part(&self) -> u64 {
        self.rows.iter().map(Partition::largest).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Partition::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flat_map(|r| r.parts().iter().copied())
    }

    /// All entries pairwise distinct across rows.
    pub fn has_distinct_parts(&self) -> bool {
        let mut all: Vec<u64> = self.entries().collect();
        all.sort_unstable();
        all.windows(2).all(|w| w[0] != w[1])
    }

    pub fn has_odd_parts(&self) -> bool {
        self.entries().all(|p| p % 2 == 1)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.parts().to_vec()).collect()
    }
}

impl fmt::Display for CylindricPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ") profile {}", self.profile)
    }
}

/// Wire form: `{"profile":[1,1],"rows":[[7,4,4,3],[6,5,4]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct CylindricJson {
    profile: Profile,
    rows: Vec<Vec<i64>>,
}

impl Serialize for CylindricPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CylindricJson {
            profile: self.profile.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.parts().iter().map(|&x| x as i64).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CylindricPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = CylindricJson::deserialize(d)?;
        CylindricPartition::validate(&raw.rows, &raw.profile).map_err(serde::de::Error::custom)
    }
}
