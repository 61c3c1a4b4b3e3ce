//! Equal-length paired forms used by the move procedures.

use serde::Serialize;

use super::BijectionError;
use crate::partition::{check_rows, CylindricPartition, Profile, ValidationError};

/// Profile (1,1) read as pairs `[b_j, a_j]`, padded to equal length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairedForm11 {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl PairedForm11 {
    pub fn r(&self) -> usize {
        self.a.len()
    }
}

/// Profile (2,0): the unpaired leading part `a0` plus pairs `[b_j, a_j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairedForm20 {
    pub a0: u64,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl PairedForm20 {
    pub fn r(&self) -> usize {
        self.a.len()
    }
}

/// Pads a profile-(1,1) object: a missing last bottom entry or a missing
/// last top entry becomes a zero.
pub fn pad_11(lam: &CylindricPartition) -> Result<PairedForm11, BijectionError> {
    if lam.profile() != &Profile::one_one() {
        return Err(BijectionError::WrongProfile {
            expected: Profile::one_one(),
            got: lam.profile().clone(),
        });
    }
    let p = Pairs::from_cylindric(lam, false)?;
    Ok(PairedForm11 {
        a: p.a.iter().map(|&x| x as u64).collect(),
        b: p.b.iter().map(|&x| x as u64).collect(),
    })
}

pub fn pad_20(lam: &CylindricPartition) -> Result<PairedForm20, BijectionError> {
    if lam.profile() != &Profile::two_zero() {
        return Err(BijectionError::WrongProfile {
            expected: Profile::two_zero(),
            got: lam.profile().clone(),
        });
    }
    let p = Pairs::from_cylindric(lam, true)?;
    Ok(PairedForm20 {
        a0: p.head.unwrap_or(0) as u64,
        a: p.a.iter().map(|&x| x as u64).collect(),
        b: p.b.iter().map(|&x| x as u64).collect(),
    })
}

/// Working state shared by all flavors. Signed so that an overdrawn
/// doubled move shows up as a negative entry instead of wrapping.
#[derive(Debug, Clone)]
pub(super) struct Pairs {
    pub head: Option<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Pairs {
    pub fn from_cylindric(lam: &CylindricPartition, with_head: bool) -> Result<Self, BijectionError> {
        let signed = |p: &[u64]| p.iter().map(|&x| x as i64).collect::<Vec<_>>();
        let top = signed(lam.row(0).parts());
        let bottom = signed(lam.row(1).parts());
        let (head, mut a) = if with_head {
            match top.split_first() {
                Some((h, rest)) => (Some(*h), rest.to_vec()),
                None => (Some(0), Vec::new()),
            }
        } else {
            if top.len().abs_diff(bottom.len()) > 1 {
                return Err(BijectionError::RowLengthGap {
                    top: top.len(),
                    bottom: bottom.len(),
                });
            }
            (None, top)
        };
        let mut b = bottom;
        let r = a.len().max(b.len());
        a.resize(r, 0);
        b.resize(r, 0);
        Ok(Pairs { head, a, b })
    }

    /// Lays μ out as `b_1, a_1, b_2, a_2, ...` (after `a_0` when present).
    pub fn from_relabeled(mu: &[u64], with_head: bool) -> Self {
        let mut it = mu.iter().map(|&x| x as i64);
        let head = with_head.then(|| it.next().unwrap_or(0));
        let rest: Vec<i64> = it.collect();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for chunk in rest.chunks(2) {
            b.push(chunk[0]);
            a.push(chunk.get(1).copied().unwrap_or(0));
        }
        Pairs { head, a, b }
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn ensure_pairs(&mut self, j: usize) {
        if self.a.len() < j {
            self.a.resize(j, 0);
            self.b.resize(j, 0);
        }
    }

    pub fn switch(&mut self, j: usize) {
        std::mem::swap(&mut self.a[j - 1], &mut self.b[j - 1]);
    }

    /// Adds `delta` to the head, to `a_1..a_{j-1}` and to `b_1..b_j`: the
    /// entries weakly above and to the left of the bottom entry of pair `j`.
    pub fn shift_left_of(&mut self, j: usize, delta: i64) {
        if let Some(h) = self.head.as_mut() {
            *h += delta;
        }
        for x in &mut self.a[..j - 1] {
            *x += delta;
        }
        for x in &mut self.b[..j] {
            *x += delta;
        }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        let mut top: Vec<i64> = self.head.into_iter().collect();
        top.extend(&self.a);
        vec![top, self.b.clone()]
    }

    pub fn weight(&self) -> i64 {
        self.head.unwrap_or(0) + self.a.iter().sum::<i64>() + self.b.iter().sum::<i64>()
    }

    /// Zero padding is allowed; everything else must satisfy the profile.
    pub fn check(&self, profile: &Profile) -> Result<(), ValidationError> {
        check_rows(&self.rows(), profile)
    }

    /// `a_0, b_1, a_1, b_2, a_2, ...`
    pub fn interleave(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self.head.iter().map(|&h| h as u64).collect();
        for (b, a) in self.b.iter().zip(&self.a) {
            out.push(*b as u64);
            out.push(*a as u64);
        }
        out
    }
}
