//! Finite sets of positive integers inside a bounded universe `{1, ..., n}`.

use thiserror::Error;

/// Construction errors for [`IntegerSet`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("elements must be strictly increasing, got {prev} before {next}")]
    NotIncreasing { prev: u64, next: u64 },
    #[error("element {element} lies outside the universe [1, {universe}]")]
    OutOfUniverse { element: u64, universe: u64 },
}

/// A strictly increasing sequence of positive integers contained in
/// `{1, ..., n}`, where `n` is the universe bound.
///
/// This is the set `A` that every other module operates on. The empty set is
/// permitted as a degenerate value so that census boundary cases `k = 0, 1`
/// stay well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerSet {
    elements: Vec<u64>,
    universe: u64,
}

impl IntegerSet {
    /// Build a set from strictly increasing elements in `[1, universe]`.
    pub fn new(elements: Vec<u64>, universe: u64) -> Result<Self, SetError> {
        let mut prev: Option<u64> = None;
        for &e in &elements {
            if e < 1 || e > universe {
                return Err(SetError::OutOfUniverse { element: e, universe });
            }
            if let Some(p) = prev {
                if e <= p {
                    return Err(SetError::NotIncreasing { prev: p, next: e });
                }
            }
            prev = Some(e);
        }
        Ok(Self { elements, universe })
    }

    /// Build a set whose universe bound is its own largest element.
    pub fn from_elements(elements: Vec<u64>) -> Result<Self, SetError> {
        let universe = elements.last().copied().unwrap_or(0);
        Self::new(elements, universe)
    }

    /// The empty set over `{1, ..., universe}`.
    pub fn empty(universe: u64) -> Self {
        Self { elements: Vec::new(), universe }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// Cardinality `k = |A|`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Universe bound `n`.
    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_strictly_increasing() {
        let a = IntegerSet::new(vec![1, 2, 5, 11], 11).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a.universe(), 11);
        assert!(a.contains(5));
        assert!(!a.contains(3));
    }

    #[test]
    fn rejects_non_increasing() {
        assert_eq!(
            IntegerSet::new(vec![5, 2], 10),
            Err(SetError::NotIncreasing { prev: 5, next: 2 })
        );
        assert_eq!(
            IntegerSet::new(vec![3, 3], 10),
            Err(SetError::NotIncreasing { prev: 3, next: 3 })
        );
    }

    #[test]
    fn rejects_out_of_universe() {
        assert_eq!(
            IntegerSet::new(vec![1, 7], 5),
            Err(SetError::OutOfUniverse { element: 7, universe: 5 })
        );
        assert_eq!(
            IntegerSet::new(vec![0], 5),
            Err(SetError::OutOfUniverse { element: 0, universe: 5 })
        );
    }

    #[test]
    fn empty_set_is_degenerate_but_legal() {
        let a = IntegerSet::empty(10);
        assert!(a.is_empty());
        assert_eq!(a.len(), 0);
    }

    #[test]
    fn from_elements_takes_max_as_universe() {
        let a = IntegerSet::from_elements(vec![2, 9]).unwrap();
        assert_eq!(a.universe(), 9);
    }
}
