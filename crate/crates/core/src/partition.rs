//! Set partitions, their arc diagrams, nesting and crossing statistics, and the
//! exhaustive enumeration oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::label::Label;

/// Default largest size the exhaustive oracle will enumerate. Bell(13) is about 27.6M.
pub const DEFAULT_ORACLE_BOUND: usize = 13;

/// A set partition of `[n]` stored as its restricted-growth string.
///
/// `rgs[i]` is the 1-based index of the block holding `i + 1`, where blocks are
/// numbered by their minimal element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u16>,
}

impl SetPartition {
    pub fn empty() -> Self {
        SetPartition { rgs: Vec::new() }
    }

    pub fn from_rgs(rgs: Vec<u16>) -> Result<Self> {
        let mut max = 0u16;
        for (i, &r) in rgs.iter().enumerate() {
            if r == 0 || r > max + 1 {
                return Err(Error::InvalidInput(format!(
                    "restricted-growth string breaks at position {}",
                    i + 1
                )));
            }
            max = max.max(r);
        }
        Ok(SetPartition { rgs })
    }

    /// Builds the partition from explicit blocks of `1..=n`.
    pub fn from_blocks(blocks: &[Vec<usize>]) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n || owner[x - 1] != usize::MAX {
                    return Err(Error::InvalidInput(format!(
                        "element {x} invalid or repeated"
                    )));
                }
                owner[x - 1] = b;
            }
        }
        let mut relabel = vec![0u16; blocks.len()];
        let mut next = 0u16;
        let rgs = owner
            .into_iter()
            .map(|b| {
                if relabel[b] == 0 {
                    next += 1;
                    relabel[b] = next;
                }
                relabel[b]
            })
            .collect();
        Ok(SetPartition { rgs })
    }

    pub fn size(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u16] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().copied().max().unwrap_or(0) as usize
    }

    /// Blocks in restricted-growth order (by minimal element).
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (i, &r) in self.rgs.iter().enumerate() {
            out[r as usize - 1].push(i + 1);
        }
        out
    }

    /// Restricted-growth block ids ordered by maximal element, descending.
    /// Position `l - 1` holds the id of "block `l`" in the generating-tree numbering.
    pub fn blocks_by_max_desc(&self) -> Vec<u16> {
        let mut last = vec![0usize; self.block_count()];
        for (i, &r) in self.rgs.iter().enumerate() {
            last[r as usize - 1] = i + 1;
        }
        let mut ids: Vec<u16> = (1..=self.block_count() as u16).collect();
        ids.sort_by(|a, b| last[*b as usize - 1].cmp(&last[*a as usize - 1]));
        ids
    }

    /// Partition of `[n + 1]` with `n + 1` added as a singleton.
    pub fn with_singleton(&self) -> SetPartition {
        let mut rgs = self.rgs.clone();
        rgs.push(self.block_count() as u16 + 1);
        SetPartition { rgs }
    }

    /// Partition of `[n + 1]` with `n + 1` joined to block `l` (1-based, blocks
    /// numbered by maximal element descending).
    pub fn joined_to_block(&self, l: usize) -> Result<SetPartition> {
        let order = self.blocks_by_max_desc();
        let id = *order.get(l.wrapping_sub(1)).ok_or(Error::IndexOutOfRange {
            index: l,
            max: order.len(),
        })?;
        let mut rgs = self.rgs.clone();
        rgs.push(id);
        Ok(SetPartition { rgs })
    }

    pub fn standard_representation(&self) -> ArcDiagram {
        let mut last = vec![0usize; self.block_count()];
        let mut arcs = Vec::with_capacity(self.size().saturating_sub(self.block_count()));
        for (i, &r) in self.rgs.iter().enumerate() {
            let slot = &mut last[r as usize - 1];
            if *slot != 0 {
                arcs.push((*slot, i + 1));
            }
            *slot = i + 1;
        }
        arcs.sort_unstable();
        ArcDiagram {
            n: self.size(),
            arcs,
        }
    }

    pub fn max_nesting(&self) -> usize {
        self.standard_representation().max_nesting()
    }

    pub fn max_crossing(&self) -> usize {
        self.standard_representation().max_crossing()
    }

    /// The label `(a_1, ..., a_m)`.
    ///
    /// `a_j` is one plus the number of blocks whose maximum lies strictly right of
    /// the minimal vertex of the rightmost `j`-nesting, or one plus the number of
    /// blocks when there is no `j`-nesting. Only the position of that minimal
    /// vertex matters, so ties between several rightmost nestings are irrelevant.
    /// Values for partitions with nestings longer than `m` are unspecified.
    pub fn label(&self, m: usize) -> Label {
        assert!(m >= 1, "label length must be positive");
        let diagram = self.standard_representation();
        let depth = diagram.nesting_depths();
        let mut block_max = vec![0usize; self.block_count()];
        for (i, &r) in self.rgs.iter().enumerate() {
            block_max[r as usize - 1] = i + 1;
        }
        let blocks = self.block_count() as u16;
        let entries: SmallVec<[u16; 8]> = (1..=m)
            .map(|j| {
                let rightmost = diagram
                    .arcs
                    .iter()
                    .zip(&depth)
                    .filter(|(_, &d)| d >= j)
                    .map(|(&(i, _), _)| i)
                    .max();
                match rightmost {
                    None => 1 + blocks,
                    Some(v) => 1 + block_max.iter().filter(|&&b| b > v).count() as u16,
                }
            })
            .collect();
        Label::from_vec_unchecked(entries)
    }

    /// Children of this partition in the generating tree of partitions with
    /// maximal nesting number at most `m`: the singleton extension followed by
    /// joining `n + 1` to blocks `1..a_m`.
    pub fn children(&self, m: usize) -> Result<Vec<SetPartition>> {
        let nest = self.max_nesting();
        if nest > m {
            return Err(Error::NestingTooLarge {
                found: nest,
                max: m,
            });
        }
        let a_m = self.label(m).last() as usize;
        let order = self.blocks_by_max_desc();
        let mut out = Vec::with_capacity(a_m);
        out.push(self.with_singleton());
        for &id in order.iter().take(a_m - 1) {
            let mut rgs = self.rgs.clone();
            rgs.push(id);
            out.push(SetPartition { rgs });
        }
        Ok(out)
    }
}

impl fmt::Display for SetPartition {
    /// Blocks in restricted-growth order, e.g. `1|2 5 6 8|3 7|4`; `∅` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rgs.is_empty() {
            return f.write_str("∅");
        }
        let blocks = self.blocks();
        for (b, block) in blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(SetPartition::empty());
        }
        let blocks = s
            .split('|')
            .map(|block| {
                block
                    .split_whitespace()
                    .map(|x| {
                        x.parse::<usize>()
                            .map_err(|e| Error::InvalidInput(e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::from_blocks(&blocks)
    }
}

/// The standard representation: arcs between consecutive elements of each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    pub n: usize,
    /// Sorted lexicographically.
    pub arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        ArcDiagram { n, arcs }
    }

    /// For each arc, the length of the longest nesting chain having it as the
    /// outermost arc. Longest-chain DP over strict containment, inner arcs first.
    pub fn nesting_depths(&self) -> Vec<usize> {
        let k = self.arcs.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&a| self.arcs[a].1 - self.arcs[a].0);
        let mut depth = vec![1usize; k];
        for (pos, &a) in order.iter().enumerate() {
            let (i, j) = self.arcs[a];
            let best = order[..pos]
                .iter()
                .filter(|&&b| {
                    let (p, q) = self.arcs[b];
                    i < p && q < j
                })
                .map(|&b| depth[b])
                .max()
                .unwrap_or(0);
            depth[a] = best + 1;
        }
        depth
    }

    /// Largest `m` such that the diagram has an `m`-nesting.
    pub fn max_nesting(&self) -> usize {
        self.nesting_depths().into_iter().max().unwrap_or(0)
    }

    /// Largest `m` such that the diagram has an `m`-crossing.
    ///
    /// Depth-first search over families sorted by opener, memoized on
    /// (last arc, first closer): a family `i_1 < ... < i_k < j_1 < ... < j_k` is
    /// extended by an arc opening after `i_k` and before `j_1`, closing after `j_k`.
    pub fn max_crossing(&self) -> usize {
        let arcs = &self.arcs;
        let mut memo = std::collections::HashMap::new();
        fn extend(
            arcs: &[(usize, usize)],
            last: usize,
            first_close: usize,
            memo: &mut std::collections::HashMap<(usize, usize), usize>,
        ) -> usize {
            if let Some(&v) = memo.get(&(last, first_close)) {
                return v;
            }
            let (li, lj) = arcs[last];
            let best = (last + 1..arcs.len())
                .filter(|&b| {
                    let (i, j) = arcs[b];
                    i > li && i < first_close && j > lj
                })
                .map(|b| 1 + extend(arcs, b, first_close, memo))
                .max()
                .unwrap_or(0);
            memo.insert((last, first_close), best);
            best
        }
        (0..arcs.len())
            .map(|a| 1 + extend(arcs, a, arcs[a].1, &mut memo))
            .max()
            .unwrap_or(0)
    }
}

/// Iterator over all set partitions of `[n]` in lexicographic restricted-growth order.
pub struct Partitions {
    rgs: Vec<u16>,
    /// `prefix_max[i]` = max of `rgs[..=i]`.
    prefix_max: Vec<u16>,
    fixed: usize,
    done: bool,
}

impl Partitions {
    fn with_prefix(n: usize, prefix: &[u16]) -> Self {
        let mut rgs = Vec::with_capacity(n);
        rgs.extend_from_slice(prefix);
        rgs.resize(n, 1);
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0;
        for &r in &rgs {
            m = m.max(r);
            prefix_max.push(m);
        }
        Partitions {
            rgs,
            prefix_max,
            fixed: prefix.len().max(1),
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        let mut i = n;
        while i > self.fixed {
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for k in i + 1..n {
                    self.rgs[k] = 1;
                    self.prefix_max[k] = self.prefix_max[k - 1];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition {
            rgs: self.rgs.clone(),
        };
        self.done = !self.advance();
        Some(out)
    }
}

/// Every set partition of `[n]`, each exactly once. `n = 0` yields the empty partition.
pub fn enumerate(n: usize) -> Partitions {
    Partitions::with_prefix(n, &[])
}

/// All restricted-growth prefixes of length `len`.
fn rgs_prefixes(len: usize) -> Vec<Vec<u16>> {
    enumerate(len).map(|p| p.rgs).collect()
}

/// Exhaustive enumeration oracle with a size guard.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_n: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_n: DEFAULT_ORACLE_BOUND,
        }
    }
}

impl Oracle {
    pub fn new(max_n: usize) -> Self {
        Oracle { max_n }
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::ResourceGuard {
                n,
                bound: self.max_n,
            })
        } else {
            Ok(())
        }
    }

    /// Folds every partition of `[n]` in parallel, split by restricted-growth prefix.
    /// The merge is associative, so the result does not depend on scheduling.
    fn fold<T, F, M>(
        &self,
        n: usize,
        init: impl Fn() -> T + Sync + Send,
        f: F,
        merge: M,
    ) -> Result<T>
    where
        T: Send,
        F: Fn(&mut T, &SetPartition) + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        self.guard(n)?;
        let split = n.min(5);
        let prefixes = rgs_prefixes(split);
        let parts: Vec<T> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut acc = init();
                for p in Partitions::with_prefix(n, prefix) {
                    f(&mut acc, &p);
                }
                acc
            })
            .collect();
        Ok(parts.into_iter().fold(init(), merge))
    }

    /// Number of partitions of `[n]` with maximal nesting number at most `m`.
    pub fn count_nonnesting(&self, n: usize, m: usize) -> Result<BigUint> {
        self.fold(
            n,
            || 0u64,
            |acc, p| *acc += (p.max_nesting() <= m) as u64,
            |a, b| a + b,
        )
        .map(BigUint::from)
    }

    /// Number of partitions of `[n]` with maximal crossing number at most `m`.
    pub fn count_noncrossing(&self, n: usize, m: usize) -> Result<BigUint> {
        self.fold(
            n,
            || 0u64,
            |acc, p| *acc += (p.max_crossing() <= m) as u64,
            |a, b| a + b,
        )
        .map(BigUint::from)
    }

    /// Distribution of labels over partitions of `[n]` with maximal nesting number at most `m`.
    pub fn label_distribution(&self, n: usize, m: usize) -> Result<BTreeMap<Label, BigUint>> {
        let counts = self.fold(
            n,
            BTreeMap::<Label, u64>::new,
            |acc, p| {
                if p.max_nesting() <= m {
                    *acc.entry(p.label(m)).or_default() += 1;
                }
            },
            merge_counts,
        )?;
        Ok(counts
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect())
    }

    /// Joint distribution of (maximal nesting, maximal crossing) over partitions of `[n]`.
    pub fn nesting_crossing_stats(&self, n: usize) -> Result<BTreeMap<(usize, usize), BigUint>> {
        let counts = self.fold(
            n,
            BTreeMap::<(usize, usize), u64>::new,
            |acc, p| {
                let d = p.standard_representation();
                *acc.entry((d.max_nesting(), d.max_crossing())).or_default() += 1;
            },
            merge_counts,
        )?;
        Ok(counts
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect())
    }
}

fn merge_counts<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// [`Oracle::count_nonnesting`] with the default size bound.
pub fn count_nonnesting(n: usize, m: usize) -> Result<BigUint> {
    Oracle::default().count_nonnesting(n, m)
}

/// [`Oracle::count_noncrossing`] with the default size bound.
pub fn count_noncrossing(n: usize, m: usize) -> Result<BigUint> {
    Oracle::default().count_noncrossing(n, m)
}

/// [`Oracle::label_distribution`] with the default size bound.
pub fn label_distribution(n: usize, m: usize) -> Result<BTreeMap<Label, BigUint>> {
    Oracle::default().label_distribution(n, m)
}
