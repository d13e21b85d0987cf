//! Canonical triple form of a representation.
//!
//! A nondecreasing h-tuple with `r` distinct values corresponds to exactly
//! one triple `(r, (h_1..h_r), (a'_1 < ... < a'_r))` where `h_j` is the
//! multiplicity of `a'_j`, the `h_j` sum to `h`, and `sum(h_j * a'_j)` is the
//! represented integer. [`decompose`] and [`recompose`] realize the two
//! directions of that bijection.

use crate::error::CoreError;
use crate::rep::Representation;

/// Canonical form `(r, (h_j), (a'_j))` of one representation: `r` distinct
/// summands with multiplicities `h_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepTriple {
    parts: Vec<u32>,
    distincts: Vec<u64>,
}

impl RepTriple {
    /// Build a validated triple: equally long, nonempty `parts` (all >= 1)
    /// and strictly increasing positive `distincts`.
    pub fn new(parts: Vec<u32>, distincts: Vec<u64>) -> Result<Self, CoreError> {
        if parts.is_empty() {
            return Err(CoreError::MalformedTriple("no parts".into()));
        }
        if parts.len() != distincts.len() {
            return Err(CoreError::MalformedTriple(format!(
                "{} parts against {} distinct summands",
                parts.len(),
                distincts.len()
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(CoreError::MalformedTriple("zero multiplicity".into()));
        }
        let increasing = distincts.windows(2).all(|w| w[0] < w[1]);
        if !increasing || distincts[0] < 1 {
            return Err(CoreError::MalformedTriple(
                "distinct summands must be strictly increasing positive integers".into(),
            ));
        }
        Ok(Self { parts, distincts })
    }

    /// Number of distinct summands `r`.
    pub fn r(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Multiplicities `(h_1, ..., h_r)`.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Distinct summands `(a'_1 < ... < a'_r)`.
    pub fn distincts(&self) -> &[u64] {
        &self.distincts
    }

    /// Fold order `h = sum(h_j)`.
    pub fn fold(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Represented integer `m = sum(h_j * a'_j)`.
    pub fn target(&self) -> u64 {
        self.parts
            .iter()
            .zip(&self.distincts)
            .map(|(&p, &a)| u64::from(p) * a)
            .sum()
    }
}

/// Run-length encode a representation into its canonical triple.
pub fn decompose(rep: &Representation) -> RepTriple {
    let mut parts: Vec<u32> = Vec::new();
    let mut distincts: Vec<u64> = Vec::new();
    for &s in rep.summands() {
        if distincts.last() == Some(&s) {
            *parts.last_mut().expect("parts tracks distincts") += 1;
        } else {
            distincts.push(s);
            parts.push(1);
        }
    }
    RepTriple { parts, distincts }
}

/// Expand a triple back into its nondecreasing tuple; inverse of
/// [`decompose`]. The triple is re-validated so hand-built values with
/// non-increasing summands or zero multiplicities are rejected.
pub fn recompose(t: &RepTriple) -> Result<Representation, CoreError> {
    let t = RepTriple::new(t.parts.clone(), t.distincts.clone())?;
    let mut summands = Vec::with_capacity(t.fold() as usize);
    for (&p, &a) in t.parts.iter().zip(&t.distincts) {
        summands.extend(std::iter::repeat(a).take(p as usize));
    }
    Representation::new(summands)
}

/// All ordered partitions of `h` into exactly `r` positive parts, in
/// lexicographic order.
pub fn compositions(h: u32, r: u32) -> Result<Vec<Vec<u32>>, CoreError> {
    if r < 1 || r > h {
        return Err(CoreError::CompositionRange { h, r });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(r as usize);
    fn rec(h_left: u32, r_left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r_left == 1 {
            prefix.push(h_left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // leave at least 1 for each of the remaining r_left - 1 parts
        for first in 1..=h_left - (r_left - 1) {
            prefix.push(first);
            rec(h_left - first, r_left - 1, prefix, out);
            prefix.pop();
        }
    }
    rec(h, r, &mut prefix, &mut out);
    Ok(out)
}

/// `pi_r(h)`, the number of ordered partitions of `h` into `r` positive
/// parts; equals C(h-1, r-1).
pub fn composition_count(h: u32, r: u32) -> Result<u128, CoreError> {
    if r < 1 || r > h {
        return Err(CoreError::CompositionRange { h, r });
    }
    let (n, k) = (u128::from(h) - 1, u128::from(r) - 1);
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result
            .checked_mul(n - i)
            .expect("composition count overflowed u128")
            / (i + 1);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::representations;
    use crate::set::IntegerSet;

    fn rep(summands: &[u64]) -> Representation {
        Representation::new(summands.to_vec()).unwrap()
    }

    #[test]
    fn decompose_examples() {
        let t = decompose(&rep(&[1, 1, 2, 3, 3]));
        assert_eq!(t.r(), 3);
        assert_eq!(t.parts(), &[2, 1, 2]);
        assert_eq!(t.distincts(), &[1, 2, 3]);
        assert_eq!(t.target(), 10);
        assert_eq!(t.fold(), 5);

        let t = decompose(&rep(&[4, 4, 4]));
        assert_eq!((t.r(), t.parts(), t.distincts()), (1, &[3][..], &[4][..]));

        let t = decompose(&rep(&[1, 2, 5]));
        assert_eq!((t.r(), t.parts(), t.distincts()), (3, &[1, 1, 1][..], &[1, 2, 5][..]));
    }

    #[test]
    fn recompose_examples() {
        let t = RepTriple::new(vec![2, 1, 2], vec![1, 2, 3]).unwrap();
        assert_eq!(recompose(&t).unwrap().summands(), &[1, 1, 2, 3, 3]);

        let t = RepTriple::new(vec![4], vec![9]).unwrap();
        assert_eq!(recompose(&t).unwrap().summands(), &[9, 9, 9, 9]);
    }

    #[test]
    fn malformed_triples_rejected() {
        assert!(RepTriple::new(vec![], vec![]).is_err());
        assert!(RepTriple::new(vec![1, 2], vec![3]).is_err());
        assert!(RepTriple::new(vec![1, 0], vec![1, 2]).is_err());
        assert!(RepTriple::new(vec![1, 1], vec![2, 2]).is_err());
        assert!(RepTriple::new(vec![1, 1], vec![5, 3]).is_err());
        assert!(RepTriple::new(vec![1], vec![0]).is_err());
    }

    #[test]
    fn round_trip_over_enumerated_representations() {
        let a = IntegerSet::new((1..=5).collect(), 5).unwrap();
        let reps = representations(&a, 3, 8).unwrap();
        assert_eq!(reps.len(), 4);
        for r in &reps {
            let t = decompose(r);
            assert_eq!(&recompose(&t).unwrap(), r);
            assert_eq!(t.target(), 8);
            assert_eq!(t.fold(), 3);
        }
    }

    #[test]
    fn composition_examples() {
        assert_eq!(compositions(3, 2).unwrap(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(
            compositions(4, 2).unwrap(),
            vec![vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(compositions(7, 1).unwrap(), vec![vec![7]]);
        assert_eq!(composition_count(3, 2).unwrap(), 2);
        assert_eq!(composition_count(4, 2).unwrap(), 3);
        assert_eq!(composition_count(7, 1).unwrap(), 1);
        assert!(compositions(3, 4).is_err());
        assert!(compositions(3, 0).is_err());
        assert!(composition_count(3, 4).is_err());
    }

    /// Independent counter: first part takes j, recurse on the rest.
    fn composition_count_recursive(h: u32, r: u32) -> u128 {
        if r == 0 {
            return u128::from(h == 0);
        }
        if h == 0 {
            return 0;
        }
        (1..=h).map(|j| composition_count_recursive(h - j, r - 1)).sum()
    }

    #[test]
    fn composition_count_matches_enumeration_and_recursion() {
        for h in 1..=12u32 {
            for r in 1..=h {
                let by_formula = composition_count(h, r).unwrap();
                let listed = compositions(h, r).unwrap();
                assert_eq!(by_formula, listed.len() as u128, "pi_{r}({h})");
                assert_eq!(by_formula, composition_count_recursive(h, r));
                // every listed composition is a valid ordered partition
                for c in &listed {
                    assert_eq!(c.len(), r as usize);
                    assert!(c.iter().all(|&p| p >= 1));
                    assert_eq!(c.iter().sum::<u32>(), h);
                }
                // lexicographic order, no duplicates
                assert!(listed.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
