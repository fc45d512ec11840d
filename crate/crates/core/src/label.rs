use std::fmt;

use smallvec::SmallVec;

/// The label `(a_1, ..., a_m)` of a partition avoiding `(m+1)`-nestings.
///
/// Entries are non-decreasing and at least one. The last entry is the number of
/// children of the partition in the generating tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(SmallVec<[u16; 8]>);

impl Label {
    /// The label of the empty partition, `(1, ..., 1)`.
    pub fn root(m: usize) -> Self {
        assert!(m >= 1, "label length must be positive");
        Label(SmallVec::from_elem(1, m))
    }

    /// Builds a label, returning `None` when the entries are not a non-decreasing
    /// sequence of positive integers.
    pub fn new(entries: &[u16]) -> Option<Self> {
        if entries.is_empty() || entries[0] == 0 || entries.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        Some(Label(SmallVec::from_slice(entries)))
    }

    pub(crate) fn from_vec_unchecked(entries: SmallVec<[u16; 8]>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        Label(entries)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// Entry `a_j` with 1-based `j`.
    pub fn get(&self, j: usize) -> u16 {
        self.0[j - 1]
    }

    /// The last entry `a_m`, which is the number of children.
    pub fn last(&self) -> u16 {
        *self.0.last().expect("labels are non-empty")
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// Labels of the `a_m` children, in generating-tree order: the singleton
    /// extension first, then joining the new element to blocks `1..a_m`.
    ///
    /// For block index `l`, let `j` be the unique index with `a_{j-1} <= l < a_j`
    /// (with `a_0 = 1`). The child has `a_i + 1` in positions before `j`, `l + 1`
    /// at position `j`, and is unchanged after `j`.
    pub fn children(&self) -> Vec<Label> {
        let a = &self.0;
        let m = a.len();
        let mut out = Vec::with_capacity(self.last() as usize);
        out.push(Label(a.iter().map(|&x| x + 1).collect()));
        let mut j = 0usize;
        for l in 1..self.last() {
            while l >= a[j] {
                j += 1;
            }
            let mut child = a.clone();
            for x in child.iter_mut().take(j) {
                *x += 1;
            }
            child[j] = l + 1;
            debug_assert!(j < m);
            out.push(Label(child));
        }
        out
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as `[a_1,a_2,...]`, the form used in label dumps.
impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}
