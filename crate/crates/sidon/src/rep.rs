//! Representation functions and B_h[g] membership.
//!
//! For a set `A` and fold order `h`, the representation function
//! `r_{A,h}(m)` counts the nondecreasing h-tuples of elements of `A` that sum
//! to `m`. `A` is a B_h[g]-set when `r_{A,h}(m) <= g` for every integer `m`;
//! a Sidon set is a B_2[1]-set.
//!
//! Two deliberately independent computation routes live here:
//! [`representation_count`] walks nondecreasing tuples directly with interval
//! pruning, while [`representation_table`] runs a multiset knapsack over the
//! elements. They are cross-checked against each other in the tests.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::CoreError;
use crate::set::IntegerSet;

/// Largest tuple count for which membership checking materializes and sorts
/// all tuple sums; beyond it, sums are tallied in a map with early exit so
/// memory stays bounded by the number of distinct sums.
const SORT_PATH_LIMIT: u128 = 1 << 20;

/// One representation of `target` as a nondecreasing sum of `fold` elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    summands: Vec<u64>,
    target: u64,
}

impl Representation {
    /// Build from a nonempty nondecreasing tuple of positive integers.
    /// The target is the (checked) sum of the tuple.
    pub fn new(summands: Vec<u64>) -> Result<Self, CoreError> {
        if summands.is_empty() {
            return Err(CoreError::MalformedRepresentation(
                "tuple must be nonempty".into(),
            ));
        }
        let mut target: u64 = 0;
        let mut prev = 0u64;
        for &s in &summands {
            if s < 1 {
                return Err(CoreError::MalformedRepresentation(
                    "summands must be positive".into(),
                ));
            }
            if s < prev {
                return Err(CoreError::MalformedRepresentation(format!(
                    "tuple is not nondecreasing: {prev} before {s}"
                )));
            }
            prev = s;
            target = target
                .checked_add(s)
                .ok_or(CoreError::SumOverflow { h: summands.len() as u32, n: s })?;
        }
        Ok(Self { summands, target })
    }

    pub fn summands(&self) -> &[u64] {
        &self.summands
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// Fold order `h` of this representation.
    pub fn fold(&self) -> u32 {
        self.summands.len() as u32
    }

    /// Whether every summand belongs to `a`.
    pub fn is_over(&self, a: &IntegerSet) -> bool {
        self.summands.iter().all(|&s| a.contains(s))
    }
}

/// The full representation function of a set at one fold order: a map from
/// `m` to `r_{A,h}(m)` whose support is exactly the h-fold sumset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTable {
    h: u32,
    counts: BTreeMap<u64, u64>,
}

impl RepTable {
    pub fn h(&self) -> u32 {
        self.h
    }

    /// `r_{A,h}(m)`; zero off the sumset.
    pub fn get(&self, m: u64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&m, &c)| (m, c))
    }

    /// The sumset hA in increasing order.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all representation counts; equals C(k+h-1, h) for |A| = k.
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| u128::from(c)).sum()
    }

    /// `(m, r_{A,h}(m))` with the maximal count, smallest such `m` first.
    pub fn max_entry(&self) -> Option<(u64, u64)> {
        let mut best: Option<(u64, u64)> = None;
        for (&m, &c) in &self.counts {
            match best {
                Some((_, bc)) if bc >= c => {}
                _ => best = Some((m, c)),
            }
        }
        best
    }
}

fn validate(a: &IntegerSet, h: u32) -> Result<u64, CoreError> {
    if h == 0 {
        return Err(CoreError::ZeroFold);
    }
    u64::from(h)
        .checked_mul(a.universe())
        .ok_or(CoreError::SumOverflow { h, n: a.universe() })
}

/// `r_{A,h}(m)`: the number of nondecreasing h-tuples of elements of `A`
/// summing to `m`; zero when `m` lies outside `[h, h*n]` or `A` is empty.
pub fn representation_count(a: &IntegerSet, h: u32, m: u64) -> Result<u64, CoreError> {
    validate(a, h)?;
    Ok(count_tuples(a.elements(), h, m))
}

fn count_tuples(elems: &[u64], h_left: u32, m_left: u64) -> u64 {
    if h_left == 0 {
        return u64::from(m_left == 0);
    }
    let Some((&lo, rest)) = elems.split_first() else {
        return 0;
    };
    let hi = *elems.last().expect("nonempty");
    // every remaining summand lies in [lo, hi]
    if m_left < lo.saturating_mul(u64::from(h_left)) || m_left > hi.saturating_mul(u64::from(h_left)) {
        return 0;
    }
    let with_lo = count_tuples(elems, h_left - 1, m_left - lo);
    let without_lo = count_tuples(rest, h_left, m_left);
    with_lo
        .checked_add(without_lo)
        .expect("representation count overflowed u64")
}

/// The full table `m -> r_{A,h}(m)`, computed in one multiset-knapsack pass
/// over the elements (sparse, so memory follows the true sumset size).
pub fn representation_table(a: &IntegerSet, h: u32) -> Result<RepTable, CoreError> {
    validate(a, h)?;
    let hu = h as usize;
    // cur[j][m] = number of nondecreasing j-tuples over the processed prefix
    // of A summing to m.
    let mut cur: Vec<BTreeMap<u64, u64>> = vec![BTreeMap::new(); hu + 1];
    cur[0].insert(0, 1);
    for &e in a.elements() {
        let mut next: Vec<BTreeMap<u64, u64>> = Vec::with_capacity(hu + 1);
        next.push(cur[0].clone());
        for j in 1..=hu {
            let mut t = cur[j].clone();
            // appending one more copy of e to any (j-1)-tuple that already
            // ends at or below e, i.e. anything counted in next[j-1]
            for (&m, &v) in &next[j - 1] {
                let entry = t.entry(m + e).or_insert(0);
                *entry = entry
                    .checked_add(v)
                    .expect("representation count overflowed u64");
            }
            next.push(t);
        }
        cur = next;
    }
    Ok(RepTable { h, counts: cur.pop().expect("h+1 tables") })
}

/// All representations of `m` as nondecreasing h-tuples over `A`, in
/// lexicographic order.
pub fn representations(a: &IntegerSet, h: u32, m: u64) -> Result<Vec<Representation>, CoreError> {
    validate(a, h)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(h as usize);
    collect_tuples(a.elements(), h, m, &mut prefix, &mut out);
    Ok(out)
}

fn collect_tuples(
    elems: &[u64],
    h_left: u32,
    m_left: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Representation>,
) {
    if h_left == 0 {
        if m_left == 0 {
            out.push(Representation {
                summands: prefix.clone(),
                target: prefix.iter().sum(),
            });
        }
        return;
    }
    for (i, &e) in elems.iter().enumerate() {
        let lo = e.saturating_mul(u64::from(h_left));
        if lo > m_left {
            break; // later elements are larger still
        }
        let hi = elems.last().unwrap().saturating_mul(u64::from(h_left));
        if hi < m_left {
            return;
        }
        prefix.push(e);
        collect_tuples(&elems[i..], h_left - 1, m_left - e, prefix, out);
        prefix.pop();
    }
}

/// The h-fold sumset `hA`, as a set over the universe `{1, ..., h*n}`.
pub fn sumset(a: &IntegerSet, h: u32) -> Result<IntegerSet, CoreError> {
    let hn = validate(a, h)?;
    if a.is_empty() {
        return Ok(IntegerSet::empty(hn));
    }
    let mut sums: Vec<u64> = a.elements().to_vec();
    for _ in 1..h {
        let mut next: Vec<u64> = Vec::with_capacity(sums.len() * a.len());
        for &s in &sums {
            for &e in a.elements() {
                next.push(s + e);
            }
        }
        next.sort_unstable();
        next.dedup();
        sums = next;
    }
    Ok(IntegerSet::new(sums, hn).expect("sums are increasing and within h*n"))
}

/// Whether `A` is a B_h[g]-set: `r_{A,h}(m) <= g` for every `m`.
///
/// Vacuously true for empty sets and singletons, and short-circuited whenever
/// `g >= C(k+h-1, h)` (no count can exceed the total number of tuples).
pub fn is_bhg(a: &IntegerSet, h: u32, g: u64) -> Result<bool, CoreError> {
    validate(a, h)?;
    if g == 0 {
        return Err(CoreError::ZeroBound);
    }
    let k = a.len();
    if k <= 1 {
        return Ok(true);
    }
    let tuples = tuple_count(k as u64, h);
    if tuples <= u128::from(g) {
        return Ok(true);
    }
    if tuples <= SORT_PATH_LIMIT {
        let mut sums = Vec::with_capacity(tuples as usize);
        let _ = for_each_tuple_sum(a.elements(), h, &mut |s| {
            sums.push(s);
            ControlFlow::Continue(())
        });
        sums.sort_unstable();
        let mut run = 1u64;
        for w in sums.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run > g {
                    return Ok(false);
                }
            } else {
                run = 1;
            }
        }
        Ok(true)
    } else {
        let mut counts: HashMap<u64, u64> = HashMap::new();
        let flow = for_each_tuple_sum(a.elements(), h, &mut |s| {
            let c = counts.entry(s).or_insert(0);
            *c += 1;
            if *c > g {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(flow.is_continue())
    }
}

/// C(k+h-1, h) saturating at `u128::MAX`.
fn tuple_count(k: u64, h: u32) -> u128 {
    let mut result: u128 = 1;
    for i in 0..u128::from(h) {
        let Some(num) = result.checked_mul(u128::from(k).saturating_add(i)) else {
            return u128::MAX;
        };
        result = num / (i + 1);
    }
    result
}

fn for_each_tuple_sum(
    elems: &[u64],
    h_left: u32,
    f: &mut impl FnMut(u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        elems: &[u64],
        h_left: u32,
        partial: u64,
        f: &mut impl FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if h_left == 0 {
            return f(partial);
        }
        for (i, &e) in elems.iter().enumerate() {
            rec(&elems[i..], h_left - 1, partial + e, f)?;
        }
        ControlFlow::Continue(())
    }
    rec(elems, h_left, 0, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::binomial;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn set(elems: &[u64]) -> IntegerSet {
        IntegerSet::from_elements(elems.to_vec()).unwrap()
    }

    /// Independent oracle: count ordered h-tuples and keep the sorted ones.
    fn ordered_oracle_count(elems: &[u64], h: u32, m: u64) -> u64 {
        let mut idx = vec![0usize; h as usize];
        let mut count = 0;
        if elems.is_empty() {
            return 0;
        }
        loop {
            let tuple: Vec<u64> = idx.iter().map(|&i| elems[i]).collect();
            if tuple.windows(2).all(|w| w[0] <= w[1]) && tuple.iter().sum::<u64>() == m {
                count += 1;
            }
            // odometer over all index tuples
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return count;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(representation_count(&set(&[1, 2, 3, 4, 5]), 3, 8).unwrap(), 4);
        assert_eq!(representation_count(&set(&[1, 2, 3]), 5, 10).unwrap(), 3);
        assert_eq!(representation_count(&set(&[1]), 2, 2).unwrap(), 1);
        assert_eq!(representation_count(&set(&[1]), 2, 3).unwrap(), 0);
        assert_eq!(representation_count(&IntegerSet::empty(5), 2, 4).unwrap(), 0);
        // outside [h, h*n]
        assert_eq!(representation_count(&set(&[1, 2]), 2, 1).unwrap(), 0);
        assert_eq!(representation_count(&set(&[1, 2]), 2, 5).unwrap(), 0);
    }

    #[test]
    fn zero_fold_rejected() {
        assert_eq!(
            representation_count(&set(&[1, 2]), 0, 2),
            Err(CoreError::ZeroFold)
        );
        assert!(representation_table(&set(&[1, 2]), 0).is_err());
        assert!(sumset(&set(&[1, 2]), 0).is_err());
        assert!(is_bhg(&set(&[1, 2]), 0, 1).is_err());
        assert_eq!(is_bhg(&set(&[1, 2]), 2, 0), Err(CoreError::ZeroBound));
    }

    #[test]
    fn table_examples() {
        let t = representation_table(&set(&[1, 2]), 2).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(2, 1), (3, 1), (4, 1)]);

        let t = representation_table(&set(&[1, 2, 3, 4, 5]), 3).unwrap();
        assert_eq!(t.get(8), 4);

        let t = representation_table(&set(&[2, 5, 9]), 2).unwrap();
        assert_eq!(t.total(), 6); // C(3+2-1, 2)
    }

    #[test]
    fn table_support_is_sumset() {
        for (elems, h) in [(vec![1u64, 2, 5, 11], 2u32), (vec![3, 7, 8], 3), (vec![2], 4)] {
            let a = set(&elems);
            let t = representation_table(&a, h).unwrap();
            let s = sumset(&a, h).unwrap();
            assert_eq!(t.support().collect::<Vec<_>>(), s.elements());
        }
    }

    #[test]
    fn sum_identity_small() {
        for (elems, h) in [
            (vec![1u64, 2, 3], 2u32),
            (vec![2, 5, 9], 2),
            (vec![1, 4, 9, 11], 3),
            (vec![1, 2, 3, 4, 5, 6, 7], 4),
        ] {
            let a = set(&elems);
            let t = representation_table(&a, h).unwrap();
            let expect = binomial(a.len() as u64 + u64::from(h) - 1, i64::from(h));
            assert_eq!(BigUint::from(t.total()), expect);
        }
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&set(&[1, 2]), 2).unwrap().elements(), &[2, 3, 4]);
        assert_eq!(sumset(&set(&[1, 2, 5, 11]), 2).unwrap().len(), 10);
        let interval = IntegerSet::new((1..=9).collect(), 9).unwrap();
        let s = sumset(&interval, 2).unwrap();
        assert_eq!(s.elements(), (2..=18).collect::<Vec<_>>().as_slice());
        assert!(sumset(&IntegerSet::empty(5), 3).unwrap().is_empty());
    }

    #[test]
    fn membership_examples() {
        assert!(is_bhg(&set(&[1, 2, 5, 11]), 2, 1).unwrap());
        assert!(!is_bhg(&set(&[1, 2, 3, 4, 5]), 3, 1).unwrap());
        for h in 1..=5 {
            for g in 1..=3 {
                assert!(is_bhg(&set(&[7]), h, g).unwrap());
                assert!(is_bhg(&IntegerSet::empty(9), h, g).unwrap());
            }
        }
        // short-circuit: g >= C(k+h-1, h) = C(4, 2) = 10 over a blatantly
        // non-Sidon set
        let a = IntegerSet::new((1..=3).collect(), 3).unwrap();
        assert!(is_bhg(&a, 2, 10).unwrap());
        assert!(!is_bhg(&a, 2, 1).unwrap());
    }

    #[test]
    fn representations_listed_lexicographically() {
        let reps = representations(&set(&[1, 2, 3, 4, 5]), 3, 8).unwrap();
        let tuples: Vec<&[u64]> = reps.iter().map(|r| r.summands()).collect();
        assert_eq!(
            tuples,
            vec![&[1, 2, 5][..], &[1, 3, 4][..], &[2, 2, 4][..], &[2, 3, 3][..]]
        );
        for r in &reps {
            assert_eq!(r.target(), 8);
            assert_eq!(r.fold(), 3);
            assert!(r.is_over(&set(&[1, 2, 3, 4, 5])));
        }
    }

    #[test]
    fn representation_validation() {
        assert!(Representation::new(vec![]).is_err());
        assert!(Representation::new(vec![3, 2]).is_err());
        assert!(Representation::new(vec![0, 1]).is_err());
        let r = Representation::new(vec![1, 1, 2, 3, 3]).unwrap();
        assert_eq!(r.target(), 10);
    }

    #[test]
    fn max_entry_prefers_smallest_witness() {
        // {1,2,3}: pair sums 2,3,4,4,5,6 -> max count 2 attained only at 4
        let t = representation_table(&set(&[1, 2, 3]), 2).unwrap();
        assert_eq!(t.max_entry(), Some((4, 2)));
        // all counts 1: smallest m wins
        let t = representation_table(&set(&[1, 2]), 2).unwrap();
        assert_eq!(t.max_entry(), Some((2, 1)));
    }

    fn subset_strategy(n: u64, max_k: usize) -> impl Strategy<Value = IntegerSet> {
        proptest::collection::btree_set(1..=n, 0..=max_k)
            .prop_map(move |s| IntegerSet::new(s.into_iter().collect(), n).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn count_matches_table_and_ordered_oracle(
            a in subset_strategy(18, 7),
            h in 1u32..=4,
        ) {
            let t = representation_table(&a, h).unwrap();
            let hn = u64::from(h) * a.universe();
            for m in 0..=hn + 1 {
                let c = representation_count(&a, h, m).unwrap();
                prop_assert_eq!(c, t.get(m));
                prop_assert_eq!(c, ordered_oracle_count(a.elements(), h, m));
                prop_assert_eq!(c, representations(&a, h, m).unwrap().len() as u64);
            }
        }

        #[test]
        fn sum_identity_random(a in subset_strategy(40, 10), h in 1u32..=4) {
            let t = representation_table(&a, h).unwrap();
            let expect = binomial(a.len() as u64 + u64::from(h) - 1, i64::from(h));
            prop_assert_eq!(BigUint::from(t.total()), expect);
        }

        #[test]
        fn membership_agrees_with_table_route(
            a in subset_strategy(24, 8),
            h in 1u32..=3,
            g in 1u64..=3,
        ) {
            let via_table = representation_table(&a, h)
                .unwrap()
                .iter()
                .all(|(_, c)| c <= g);
            prop_assert_eq!(is_bhg(&a, h, g).unwrap(), via_table);
        }

        #[test]
        fn membership_monotone_in_fold(
            a in subset_strategy(24, 8),
            h in 2u32..=4,
            g in 1u64..=2,
        ) {
            // a B_h[g]-set is also a B_(h-1)[g]-set
            if is_bhg(&a, h, g).unwrap() {
                prop_assert!(is_bhg(&a, h - 1, g).unwrap());
            }
        }

        #[test]
        fn translation_covariance(
            a in subset_strategy(20, 6),
            h in 1u32..=3,
            g in 1u64..=2,
            t in 1u64..=10,
        ) {
            let shifted = IntegerSet::new(
                a.elements().iter().map(|&x| x + t).collect(),
                a.universe() + t,
            ).unwrap();
            prop_assert_eq!(is_bhg(&a, h, g).unwrap(), is_bhg(&shifted, h, g).unwrap());
            let hn = u64::from(h) * a.universe();
            for m in u64::from(h)..=hn {
                prop_assert_eq!(
                    representation_count(&a, h, m).unwrap(),
                    representation_count(&shifted, h, m + u64::from(h) * t).unwrap()
                );
            }
        }

        #[test]
        fn ordered_pair_consistency(a in subset_strategy(30, 8)) {
            // ordered count o(m) = 2 r_{A,2}(m) - [m even and m/2 in A],
            // with o computed by an independent convolution-style loop
            let t = representation_table(&a, 2).unwrap();
            let mut ordered: BTreeMap<u64, u64> = BTreeMap::new();
            for &x in a.elements() {
                for &y in a.elements() {
                    *ordered.entry(x + y).or_insert(0) += 1;
                }
            }
            for m in 0..=2 * a.universe() {
                let o = ordered.get(&m).copied().unwrap_or(0);
                let diag = u64::from(m % 2 == 0 && a.contains(m / 2));
                prop_assert_eq!(o, 2 * t.get(m) - diag);
            }
        }
    }
}
