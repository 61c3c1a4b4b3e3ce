use super::*;
use crate::enumerate::{enumerate_cylindric, PartFilter};
use proptest::prelude::*;

fn p(v: &[u64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn lam11(top: &[u64], bottom: &[u64]) -> CylindricPartition {
    CylindricPartition::from_unsigned(&[top.to_vec(), bottom.to_vec()], &Profile::one_one())
        .unwrap()
}

fn lam20(top: &[u64], bottom: &[u64]) -> CylindricPartition {
    CylindricPartition::from_unsigned(&[top.to_vec(), bottom.to_vec()], &Profile::two_zero())
        .unwrap()
}

fn pair(mu: &[u64], beta: &[u64], flavor: Flavor) -> PartitionPair {
    PartitionPair::new(p(mu), p(beta), flavor)
}

/// All partitions of `n` with parts at most `cap`, largest part first.
fn partitions(n: u64, cap: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Distinct-part partitions with every part from `allowed`, of total ≤ `max`.
fn distinct_subsets(allowed: &[u64], max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &x in allowed.iter().rev() {
        let more: Vec<Vec<u64>> = out
            .iter()
            .filter(|s| s.iter().sum::<u64>() + x <= max)
            .map(|s| {
                let mut t = s.clone();
                t.push(x);
                t.sort_unstable_by(|a, b| b.cmp(a));
                t
            })
            .collect();
        out.extend(more);
    }
    out
}

fn all_pairs(flavor: Flavor, max: u64) -> Vec<PartitionPair> {
    let allowed: Vec<u64> = match flavor {
        Flavor::DistinctEven => (1..=max).filter(|x| x % 2 == 0).collect(),
        _ => (1..=max).filter(|x| x % 2 == 1).collect(),
    };
    let k = if flavor == Flavor::DoubledOdd { 2 } else { 1 };
    let mut out = Vec::new();
    for beta in distinct_subsets(&allowed, max / k) {
        let rest = max - k * beta.iter().sum::<u64>();
        for n in 0..=rest {
            for mu in partitions(n, n) {
                out.push(pair(&mu, &beta, flavor));
            }
        }
    }
    out
}

#[test]
fn padding() {
    let f = pad_11(&lam11(&[7, 4, 4, 3], &[6, 5, 4])).unwrap();
    assert_eq!(f.a, vec![7, 4, 4, 3]);
    assert_eq!(f.b, vec![6, 5, 4, 0]);
    let f = pad_11(&lam11(&[], &[1])).unwrap();
    assert_eq!((f.a, f.b), (vec![0], vec![1]));
    assert_eq!(pad_11(&lam11(&[], &[])).unwrap().r(), 0);
    let g = pad_20(&lam20(&[2, 1], &[1])).unwrap();
    assert_eq!((g.a0, g.a, g.b), (2, vec![1], vec![1]));
    assert!(matches!(
        pad_11(&lam20(&[1], &[])),
        Err(BijectionError::WrongProfile { .. })
    ));
}

#[test]
fn forward_11_worked_example() {
    let (out, trace) = forward_11(&lam11(&[7, 4, 4, 3], &[6, 5, 4])).unwrap();
    assert_eq!(out.mu, p(&[5, 5, 4, 3, 3, 3, 2]));
    assert_eq!(out.beta, p(&[7, 1]));
    assert_eq!(trace.pairs(), vec![4, 1]);
    assert_eq!(trace.parts(), vec![7, 1]);
    assert!(trace.steps.iter().all(|s| s.direction == Direction::Forward && s.amount == 1));
    assert_eq!(trace.steps[0].weight_after, 26);
    assert_eq!(trace.steps[1].weight_after, 25);
}

#[test]
fn forward_11_small_cases() {
    let (e, t) = forward_11(&lam11(&[], &[])).unwrap();
    assert_eq!(e, pair(&[], &[], Flavor::DistinctOdd));
    assert!(t.steps.is_empty());
    assert_eq!(forward_11(&lam11(&[1], &[])).unwrap().0, pair(&[], &[1], Flavor::DistinctOdd));
    assert_eq!(forward_11(&lam11(&[], &[1])).unwrap().0, pair(&[1], &[], Flavor::DistinctOdd));
}

#[test]
fn inverse_11_worked_example() {
    let input = pair(&[6, 5, 5, 3, 1], &[9, 7, 3], Flavor::DistinctOdd);
    let (lam, trace) = inverse_11_traced(&input).unwrap();
    assert_eq!(lam, lam11(&[8, 8, 2, 2, 1], &[9, 5, 3, 1]));
    assert_eq!(trace.parts(), vec![3, 7, 9]);
    assert_eq!(trace.pairs(), vec![2, 4, 5]);
    assert_eq!(lam.max_part(), 9);
    assert_eq!(largest_part_statistic(&input), 9);
    assert_eq!(forward_11(&lam).unwrap().0, input);
}

#[test]
fn inverse_11_small_cases() {
    assert_eq!(inverse_11(&pair(&[1], &[], Flavor::DistinctOdd)).unwrap(), lam11(&[], &[1]));
    assert_eq!(inverse_11(&pair(&[], &[1], Flavor::DistinctOdd)).unwrap(), lam11(&[1], &[]));
    assert_eq!(largest_part_statistic(&pair(&[], &[], Flavor::DistinctOdd)), 0);
    assert_eq!(largest_part_statistic(&pair(&[], &[1], Flavor::DistinctOdd)), 1);
}

#[test]
fn inverse_rejects_bad_beta() {
    let err = inverse_11(&pair(&[], &[3, 3], Flavor::DistinctOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::BetaNotDistinctOdd(_)));
    let err = inverse_11(&pair(&[], &[2], Flavor::DistinctOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::BetaNotDistinctOdd(_)));
    let err = inverse_20(&pair(&[], &[3], Flavor::DistinctEven)).unwrap_err();
    assert!(matches!(err, BijectionError::BetaNotDistinctEven(_)));
    let err = inverse_20(&pair(&[], &[1], Flavor::DistinctOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::FlavorMismatch { .. }));
}

#[test]
fn forward_20_cases() {
    assert_eq!(forward_20(&lam20(&[2], &[])).unwrap().0, pair(&[2], &[], Flavor::DistinctEven));
    let (out, trace) = forward_20(&lam20(&[1, 1], &[])).unwrap();
    assert_eq!(out, pair(&[], &[2], Flavor::DistinctEven));
    assert_eq!(trace.pairs(), vec![1]);
    assert_eq!(forward_20(&lam20(&[], &[])).unwrap().0, pair(&[], &[], Flavor::DistinctEven));
    assert_eq!(forward_20(&lam20(&[1], &[1])).unwrap().0, pair(&[1, 1], &[], Flavor::DistinctEven));
}

#[test]
fn inverse_20_cases() {
    assert_eq!(inverse_20(&pair(&[2], &[], Flavor::DistinctEven)).unwrap(), lam20(&[2], &[]));
    assert_eq!(inverse_20(&pair(&[], &[2], Flavor::DistinctEven)).unwrap(), lam20(&[1, 1], &[]));
    assert_eq!(
        inverse_20(&pair(&[2, 1, 1], &[], Flavor::DistinctEven)).unwrap(),
        lam20(&[2, 1], &[1])
    );
}

#[test]
fn odd_flavor_cases() {
    let err = forward_odd_11(&lam11(&[1], &[])).unwrap_err();
    assert!(matches!(err, BijectionError::NotInImage { j: 1, .. }));
    assert_eq!(forward_odd_11(&lam11(&[], &[1])).unwrap().0, pair(&[1], &[], Flavor::DoubledOdd));
    let (out, trace) = forward_odd_11(&lam11(&[3], &[])).unwrap();
    assert_eq!(out, pair(&[1], &[1], Flavor::DoubledOdd));
    assert_eq!(trace.steps[0].amount, 2);
    assert!(matches!(forward_odd_11(&lam11(&[2], &[])), Err(BijectionError::NotAllOdd)));

    assert_eq!(inverse_odd_11(&pair(&[1], &[], Flavor::DoubledOdd)).unwrap(), lam11(&[], &[1]));
    assert_eq!(inverse_odd_11(&pair(&[1], &[1], Flavor::DoubledOdd)).unwrap(), lam11(&[3], &[]));
    assert_eq!(inverse_odd_11(&pair(&[], &[], Flavor::DoubledOdd)).unwrap(), lam11(&[], &[]));
}

#[test]
fn odd_flavor_errors() {
    let err = inverse_odd_11(&pair(&[2], &[], Flavor::DoubledOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::MuNotOdd(_)));
    let err = inverse_odd_11(&pair(&[1], &[3], Flavor::DoubledOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::DependencyViolated { mu_len: 1, beta_max: 3 }));
    let err = inverse_odd_11(&pair(&[], &[1, 1], Flavor::DoubledOdd)).unwrap_err();
    assert!(matches!(err, BijectionError::BetaNotDistinctOdd(_)));
}

#[test]
fn dependency_rules() {
    let strict = DependencyRule::Exactly;
    assert!(DependencyRule::AtMost.holds(1, &p(&[])));
    assert!(!strict.holds(1, &p(&[])));
    assert!(strict.holds(1, &p(&[1])));
    assert!(strict.holds(0, &p(&[])));
    assert!(strict.holds(2, &p(&[1])));
    assert!(!strict.holds(4, &p(&[1])));
    assert!(DependencyRule::AtMost.holds(4, &p(&[3, 1])));
    assert!(!DependencyRule::AtMost.holds(2, &p(&[3])));
}

#[test]
fn round_trip_11_up_to_20() {
    let profile = Profile::one_one();
    let mut count = 0usize;
    for n in 0..=20 {
        for lam in enumerate_cylindric(&profile, n, PartFilter::None) {
            let (out, trace) = forward_11(&lam).unwrap();
            assert_eq!(out.effective_weight(), lam.weight());
            assert_eq!(inverse_11(&out).unwrap(), lam);
            assert_eq!(replay_backward(&out, &trace).unwrap(), lam);
            let parts = trace.parts();
            assert!(parts.windows(2).all(|w| w[0] > w[1]));
            count += 1;
        }
    }
    let pairs = all_pairs(Flavor::DistinctOdd, 20);
    assert_eq!(pairs.len(), count);
    for pr in pairs {
        let lam = inverse_11(&pr).unwrap();
        assert_eq!(lam.weight(), pr.effective_weight());
        assert_eq!(lam.max_part(), largest_part_statistic(&pr));
        assert_eq!(forward_11(&lam).unwrap().0, pr);
    }
}

#[test]
fn round_trip_20_up_to_20() {
    let profile = Profile::two_zero();
    let mut count = 0usize;
    for n in 0..=20 {
        for lam in enumerate_cylindric(&profile, n, PartFilter::None) {
            let (out, trace) = forward_20(&lam).unwrap();
            assert_eq!(out.effective_weight(), lam.weight());
            assert_eq!(inverse_20(&out).unwrap(), lam);
            assert_eq!(replay_backward(&out, &trace).unwrap(), lam);
            count += 1;
        }
    }
    let pairs = all_pairs(Flavor::DistinctEven, 20);
    assert_eq!(pairs.len(), count);
    for pr in pairs {
        assert_eq!(forward_20(&inverse_20(&pr).unwrap()).unwrap().0, pr);
    }
}

#[test]
fn odd_flavor_round_trip_up_to_20() {
    for pr in all_pairs(Flavor::DoubledOdd, 20) {
        if pr.validate(DependencyRule::AtMost).is_err() {
            continue;
        }
        let lam = inverse_odd_11(&pr).unwrap();
        assert!(lam.has_odd_parts());
        assert_eq!(lam.weight(), pr.effective_weight());
        assert_eq!(forward_odd_11(&lam).unwrap().0, pr);
    }
}

#[test]
fn odd_forward_is_partial_but_injective() {
    let profile = Profile::one_one();
    let mut seen = std::collections::HashSet::new();
    for n in 0..=20 {
        for lam in enumerate_cylindric(&profile, n, PartFilter::Odd) {
            match forward_odd_11(&lam) {
                Ok((pr, _)) => {
                    assert_eq!(inverse_odd_11(&pr).unwrap(), lam);
                    assert!(seen.insert(pr));
                }
                Err(BijectionError::NotInImage { .. }) => {}
                Err(e) => panic!("{lam}: {e}"),
            }
        }
    }
}

#[test]
fn pair_json() {
    let pr = pair(&[3, 1], &[5], Flavor::DistinctOdd);
    let s = serde_json::to_string(&pr).unwrap();
    assert_eq!(s, r#"{"mu":[3,1],"beta":[5],"flavor":"distinct-odd"}"#);
    assert_eq!(serde_json::from_str::<PartitionPair>(&s).unwrap(), pr);
    let (_, trace) = forward_11(&lam11(&[1], &[])).unwrap();
    let t = serde_json::to_value(&trace).unwrap();
    assert_eq!(t[0]["direction"], "forward");
    assert_eq!(t[0]["j"], 1);
}

fn arb_pair11() -> impl Strategy<Value = PartitionPair> {
    (
        proptest::collection::vec(0u64..12, 0..8),
        proptest::collection::btree_set(0u64..8, 0..5),
    )
        .prop_map(|(mut mu, js)| {
            mu.sort_unstable_by(|a, b| b.cmp(a));
            let beta: Vec<u64> = js.iter().rev().map(|j| 2 * j + 1).collect();
            pair(&mu, &beta, Flavor::DistinctOdd)
        })
}

proptest! {
    #[test]
    fn inverse_then_forward_is_identity(pr in arb_pair11()) {
        let (lam, back) = inverse_11_traced(&pr).unwrap();
        prop_assert_eq!(lam.weight(), pr.effective_weight());
        prop_assert_eq!(lam.max_part(), largest_part_statistic(&pr));
        let mut consumed = 0;
        for s in &back.steps {
            consumed += s.part;
            prop_assert_eq!(s.weight_after, pr.mu.weight() + consumed);
        }
        let (again, trace) = forward_11(&lam).unwrap();
        prop_assert_eq!(&again, &pr);
        let mut emitted = 0;
        for s in &trace.steps {
            emitted += s.part;
            prop_assert_eq!(s.weight_after + emitted, lam.weight());
        }
        prop_assert_eq!(replay_backward(&again, &trace).unwrap(), lam);
    }
}
