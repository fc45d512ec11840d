//! Level-by-level evolution of label multisets under the children rule.
//!
//! Each level holds, for every label, the number of partitions of that size
//! carrying it. Partitions themselves are never materialized.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::label::Label;

/// Parent labels per parallel work unit.
const CHUNK: usize = 512;

/// One level of the generating tree, counted by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMultiset {
    m: usize,
    level: usize,
    counts: HashMap<Label, BigUint>,
}

impl LabelMultiset {
    /// Level 0: the empty partition with label `(1, ..., 1)`.
    pub fn root(m: usize) -> Self {
        let mut counts = HashMap::new();
        counts.insert(Label::root(m), BigUint::from(1u32));
        LabelMultiset {
            m,
            level: 0,
            counts,
        }
    }

    /// Builds a multiset from explicit counts, checking label length and bounds.
    pub fn from_counts(
        m: usize,
        level: usize,
        counts: impl IntoIterator<Item = (Label, BigUint)>,
    ) -> Result<Self> {
        let mut map = HashMap::new();
        for (label, count) in counts {
            if label.m() != m || label.last() as usize > level + 1 {
                return Err(Error::InvalidInput(format!(
                    "label {label} not valid at level {level}"
                )));
            }
            if !count.is_zero() {
                *map.entry(label).or_insert_with(BigUint::zero) += count;
            }
        }
        Ok(LabelMultiset {
            m,
            level,
            counts: map,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, label: &Label) -> Option<&BigUint> {
        self.counts.get(label)
    }

    /// Counts in label order.
    pub fn sorted(&self) -> BTreeMap<Label, BigUint> {
        self.counts
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// Number of partitions at this level.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Number of partitions at the next level: each partition has `a_m` children.
    pub fn children_total(&self) -> BigUint {
        self.counts
            .iter()
            .map(|(label, count)| count * BigUint::from(label.last()))
            .sum()
    }

    /// The next level, computed on the current rayon pool. Parent labels are
    /// split into chunks whose child maps are merged by addition, so the result
    /// is independent of the number of workers.
    pub fn next_level(&self) -> LabelMultiset {
        let parents: Vec<(&Label, &BigUint)> = self.counts.iter().collect();
        let counts = parents
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut acc: HashMap<Label, BigUint> = HashMap::new();
                for (label, count) in chunk {
                    for child in label.children() {
                        *acc.entry(child).or_insert_with(BigUint::zero) += *count;
                    }
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge_into(b, a);
                }
                for (k, v) in b {
                    *a.entry(k).or_insert_with(BigUint::zero) += v;
                }
                a
            });
        LabelMultiset {
            m: self.m,
            level: self.level + 1,
            counts,
        }
    }

    /// Distribution of the entry `a_j` over the multiset. For `j = m = 2` this is
    /// the table `k -> F_n(k)`.
    pub fn marginal(&self, j: usize) -> Result<BTreeMap<u16, BigUint>> {
        if j == 0 || j > self.m {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.m,
            });
        }
        let mut out = BTreeMap::new();
        for (label, count) in &self.counts {
            *out.entry(label.get(j)).or_insert_with(BigUint::zero) += count;
        }
        Ok(out)
    }
}

fn merge_into(
    mut a: HashMap<Label, BigUint>,
    b: HashMap<Label, BigUint>,
) -> HashMap<Label, BigUint> {
    for (k, v) in b {
        *a.entry(k).or_insert_with(BigUint::zero) += v;
    }
    a
}

/// Iterator over the levels `0, 1, 2, ...` of the generating tree for a fixed `m`.
pub struct Levels {
    current: Option<LabelMultiset>,
}

impl Iterator for Levels {
    type Item = LabelMultiset;

    fn next(&mut self) -> Option<LabelMultiset> {
        let cur = self.current.take()?;
        self.current = Some(cur.next_level());
        Some(cur)
    }
}

/// Levels of the tree for partitions with maximal nesting number at most `m`.
pub fn levels(m: usize) -> Levels {
    Levels {
        current: Some(LabelMultiset::root(m)),
    }
}

/// The level-`n` multiset.
pub fn level(m: usize, n: usize) -> LabelMultiset {
    let mut ms = LabelMultiset::root(m);
    for _ in 0..n {
        ms = ms.next_level();
    }
    ms
}

/// Counts of partitions of sizes `0..=terms` with maximal nesting number at most `m`.
pub fn sequence(m: usize, terms: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(terms + 1);
    let mut ms = LabelMultiset::root(m);
    out.push(ms.total());
    for _ in 0..terms {
        // the last level is only needed for its total
        if out.len() == terms {
            out.push(ms.children_total());
            break;
        }
        ms = ms.next_level();
        out.push(ms.total());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(v: &[u16]) -> Label {
        Label::new(v).unwrap()
    }

    fn nums(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.to_string().parse().unwrap()).collect()
    }

    #[test]
    fn root_step() {
        let one = LabelMultiset::root(3).next_level();
        assert_eq!(one.level(), 1);
        assert_eq!(
            one.sorted().into_iter().collect::<Vec<_>>(),
            vec![(lab(&[2, 2, 2]), 1u32.into())]
        );
    }

    #[test]
    fn catalan_step() {
        let ms = LabelMultiset::from_counts(1, 1, [(lab(&[2]), 1u32.into())]).unwrap();
        let next = ms.next_level().sorted();
        let expected: BTreeMap<Label, BigUint> =
            [(lab(&[2]), 1u32.into()), (lab(&[3]), 1u32.into())]
                .into_iter()
                .collect();
        assert_eq!(next, expected);
    }

    #[test]
    fn level_three_to_four() {
        let ms = LabelMultiset::from_counts(
            2,
            3,
            [
                (lab(&[4, 4]), 1u32.into()),
                (lab(&[3, 3]), 2u32.into()),
                (lab(&[2, 2]), 1u32.into()),
                (lab(&[2, 3]), 1u32.into()),
            ],
        )
        .unwrap();
        assert_eq!(ms.children_total(), BigUint::from(15u32));
        assert_eq!(ms.next_level().total(), BigUint::from(15u32));
        assert_eq!(level(2, 3), ms);
    }

    #[test]
    fn sequences() {
        assert_eq!(
            nums(&sequence(2, 8)),
            vec![1, 1, 2, 5, 15, 52, 202, 859, 3930]
        );
        let s3 = nums(&sequence(3, 10));
        assert_eq!(&s3[8..], &[4139, 21119, 115495]);
        let s1 = nums(&sequence(1, 15));
        assert_eq!(s1[15], 9_694_845);
        assert_eq!(nums(&sequence(2, 0)), vec![1]);
        assert_eq!(nums(&sequence(2, 1)), vec![1, 1]);
    }

    #[test]
    fn marginals() {
        let m1 = level(2, 1).marginal(2).unwrap();
        assert_eq!(m1.into_iter().collect::<Vec<_>>(), vec![(2, 1u32.into())]);
        let m0 = level(2, 0).marginal(2).unwrap();
        assert_eq!(m0.into_iter().collect::<Vec<_>>(), vec![(1, 1u32.into())]);
        let weighted: BigUint = level(2, 3)
            .marginal(2)
            .unwrap()
            .into_iter()
            .map(|(k, v)| v * BigUint::from(k))
            .sum();
        assert_eq!(weighted, BigUint::from(15u32));
        assert_eq!(
            level(2, 2).marginal(3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
    }

    #[test]
    fn from_counts_rejects_out_of_range() {
        assert!(LabelMultiset::from_counts(2, 1, [(lab(&[2, 3]), 1u32.into())]).is_err());
        assert!(LabelMultiset::from_counts(2, 1, [(lab(&[2]), 1u32.into())]).is_err());
    }
}
