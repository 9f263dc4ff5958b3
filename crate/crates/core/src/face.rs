use std::fmt;

/// A subset of the variable indices `{0, .., n-1}` stored as a bitmask.
///
/// Used both for the free-variable set `sigma` of a Stanley pair and for
/// simplices of the fan (which are complements `sigma-hat`). Display and the
/// serialized formats are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(pub u64);

pub const MAX_VARS: usize = 64;

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn full(n: usize) -> Face {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Face {
        Face(indices.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    /// Build from 1-based indices, as they appear in files and in the literature.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Face {
        Face::from_indices(indices.into_iter().map(|i| i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn with(self, i: usize) -> Face {
        Face(self.0 | (1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Face {
        Face(!self.0 & Face::full(n).0)
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Face) -> bool {
        self.0 & other.0 != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.indices().collect()
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// Lexicographic comparison on the sorted index lists.
    pub fn lex_cmp(self, other: Face) -> std::cmp::Ordering {
        self.to_vec().cmp(&other.to_vec())
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.to_one_based().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = Face::from_one_based([1, 3]);
        assert!(a.contains(0) && a.contains(2) && !a.contains(1));
        assert_eq!(a.complement(4), Face::from_one_based([2, 4]));
        assert!(Face::EMPTY.is_subset_of(a));
        assert_eq!(a.to_string(), "{1,3}");
        assert_eq!(a.len(), 2);
    }
}
