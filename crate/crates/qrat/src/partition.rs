//! Integer partitions with Young-diagram containment.

use std::fmt;

/// A weakly decreasing sequence of positive integers; the empty partition is
/// the empty sequence. Trailing zeros in the input are stripped.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Diagram containment: `other <= self` iff every row of `other` fits.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Whether the diagram fits inside a `rows x cols` rectangle.
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }
}

impl fmt::Display for Partition {
    /// Plain-text notation, e.g. `(4,4,3,1)`; the empty partition is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_strips_zeros() {
        let p = Partition::new(vec![3, 2, 2, 0, 0]);
        assert_eq!(p.parts(), &[3, 2, 2]);
        assert_eq!(p.size(), 7);
        assert!(Partition::new(vec![]).is_empty());
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn construction_rejects_increasing() {
        Partition::new(vec![1, 2]);
    }

    #[test]
    fn containment() {
        let lam = Partition::new(vec![2, 2, 2]);
        let mu = Partition::new(vec![1, 1]);
        assert!(lam.contains(&mu));
        assert!(!mu.contains(&lam));
        assert!(lam.contains(&Partition::empty()));
        assert!(lam.contains(&lam));
        assert!(!Partition::new(vec![3]).contains(&Partition::new(vec![1, 1])));
    }

    #[test]
    fn box_fit_and_display() {
        let lam = Partition::new(vec![4, 4, 3, 1]);
        assert!(lam.fits_in_box(4, 4));
        assert!(!lam.fits_in_box(3, 4));
        assert!(!lam.fits_in_box(4, 3));
        assert_eq!(lam.to_string(), "(4,4,3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}
