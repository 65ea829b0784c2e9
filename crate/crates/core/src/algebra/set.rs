use std::fmt;

use super::Element;

/// A finite set of elements kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(Vec<Element>);

impl ElementSet {
    pub fn new() -> Self {
        ElementSet(Vec::new())
    }

    pub fn singleton(a: Element) -> Self {
        ElementSet(vec![a])
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        ElementSet((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(elements: Vec<Element>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        ElementSet(elements)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: Element) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Element> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Element] {
        &self.0
    }

    pub fn first(&self) -> Option<Element> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&a| other.contains(a))
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&a| !other.contains(a))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(
            self.0
                .iter()
                .copied()
                .filter(|&a| other.contains(a))
                .collect(),
        )
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    /// `{0, .., n-1} \ self`.
    pub fn complement(&self, n: usize) -> ElementSet {
        ElementSet((0..n).filter(|&a| !self.contains(a)).collect())
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut v: Vec<Element> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Element;
    type IntoIter = std::slice::Iter<'a, Element>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<ElementSet> for Vec<Element> {
    fn from(set: ElementSet) -> Self {
        set.0
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}
