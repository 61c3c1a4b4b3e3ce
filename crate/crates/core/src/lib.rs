//! Cylindric partitions with profiles `(1,1)` and `(2,0)`.
//!
//! * [`partition`]: partitions, profiles, validation of cylindric partitions.
//! * [`enumerate`]: brute-force enumeration, the oracle behind every check.
//! * [`qseries`]: exact truncated q-series over `Z`, `Z[√2]` and `Z[v]`.
//! * [`bijection`]: the move-based correspondences `Λ ↔ (μ, β)`.
//! * [`identities`]: generating functions and their verification.

pub mod bijection;
pub mod enumerate;
pub mod identities;
pub mod partition;
pub mod qseries;
pub mod report;

pub use bijection::{Flavor, PartitionPair};
pub use enumerate::{count_sequence, enumerate_cylindric, refined_counts, PartFilter, RefinedCounts};
pub use partition::{CylindricPartition, Partition, Profile, ValidationError};
pub use report::VerificationReport;
