//! The serialized form of a computed sequence, and the on-disk cache built on it.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::numbers::{bell_numbers, catalan_numbers};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    /// Seconds since the Unix epoch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl Meta {
    pub fn current() -> Self {
        Meta {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: None,
            wall_time_secs: None,
        }
    }
}

/// A counting sequence as emitted on the command line and stored in the cache.
/// Counts are decimal strings, indexed from `n = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub m: usize,
    pub engine: Engine,
    pub terms: Vec<String>,
    pub meta: Meta,
}

impl SequenceRecord {
    pub fn new(m: usize, engine: Engine, counts: &[BigUint], meta: Meta) -> Self {
        SequenceRecord {
            m,
            engine,
            terms: counts.iter().map(BigUint::to_string).collect(),
            meta,
        }
    }

    /// Parses the terms back into integers. `None` if any term is not a
    /// non-negative decimal integer or the first term is not 1.
    pub fn counts(&self) -> Option<Vec<BigUint>> {
        if self.terms.first().map(String::as_str) != Some("1") {
            return None;
        }
        self.terms
            .iter()
            .map(|t| {
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    None
                } else {
                    t.parse().ok()
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Checks a cached record before reuse: well-formed counts, agreement with
    /// the Bell numbers below `2m + 2`, no term above its Bell number,
    /// `c(n) <= c(n + 1) <= (n + 1) c(n)` between consecutive terms, and for
    /// `m = 1` the Catalan value of the last term.
    pub fn plausible(&self) -> bool {
        let Some(counts) = self.counts() else {
            return false;
        };
        let bell = bell_numbers(counts.len().saturating_sub(1));
        for (n, (c, b)) in counts.iter().zip(&bell).enumerate() {
            if c > b || (n < 2 * self.m + 2 && c != b) {
                return false;
            }
        }
        for (n, pair) in counts.windows(2).enumerate() {
            if pair[1] < pair[0] || pair[1] > &pair[0] * (n + 1) {
                return false;
            }
        }
        if self.m == 1 {
            let last = counts.len() - 1;
            let cat = &catalan_numbers(last)[last];
            if cat.magnitude() != &counts[last] {
                return false;
            }
        }
        true
    }
}

/// Directory of cached records, one file `m{M}_{engine}.json` per parameter and engine.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, m: usize, engine: Engine) -> PathBuf {
        self.dir.join(format!("m{m}_{}.json", engine.name()))
    }

    /// The first `terms + 1` counts of a cached record, if present, long enough and plausible.
    pub fn lookup(&self, m: usize, engine: Engine, terms: usize) -> Option<Vec<BigUint>> {
        let text = fs::read_to_string(self.path(m, engine)).ok()?;
        let record = SequenceRecord::from_json(&text).ok()?;
        if record.m != m
            || record.engine != engine
            || record.terms.len() <= terms
            || !record.plausible()
        {
            return None;
        }
        let mut counts = record.counts()?;
        counts.truncate(terms + 1);
        Some(counts)
    }

    pub fn store(&self, record: &SequenceRecord) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(record.m, record.engine);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, record.to_json())?;
        fs::rename(tmp, path)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtree;

    #[test]
    fn json_round_trip() {
        let rec = SequenceRecord::new(2, Engine::Gtree, &gtree::sequence(2, 10), Meta::current());
        assert_eq!(SequenceRecord::from_json(&rec.to_json()).unwrap(), rec);
        assert!(rec.to_json().contains("\"engine\":\"gtree\""));
        assert!(rec.to_json().contains("\"97566\""));
    }

    #[test]
    fn plausibility() {
        let good = SequenceRecord::new(1, Engine::Gtree, &gtree::sequence(1, 9), Meta::current());
        assert!(good.plausible());
        let mut bad = good.clone();
        bad.terms[9] = "4863".into();
        assert!(!bad.plausible());
        bad.terms[9] = "-1".into();
        assert!(!bad.plausible());
        let mut prefix =
            SequenceRecord::new(3, Engine::Gtree, &gtree::sequence(3, 9), Meta::current());
        assert!(prefix.plausible());
        prefix.terms[4] = "14".into();
        assert!(!prefix.plausible());
        let mut jump =
            SequenceRecord::new(2, Engine::Gtree, &gtree::sequence(2, 9), Meta::current());
        jump.terms[8] = "2000".into();
        assert!(!jump.plausible());
    }

    #[test]
    fn cache_store_and_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let counts = gtree::sequence(2, 8);
        cache
            .store(&SequenceRecord::new(
                2,
                Engine::Gtree,
                &counts,
                Meta::current(),
            ))
            .unwrap();
        assert!(cache.path(2, Engine::Gtree).ends_with("m2_gtree.json"));
        assert_eq!(cache.lookup(2, Engine::Gtree, 8).unwrap(), counts);
        assert_eq!(
            cache.lookup(2, Engine::Gtree, 5).unwrap(),
            counts[..6].to_vec()
        );
        assert!(cache.lookup(2, Engine::Gtree, 9).is_none());
        assert!(cache.lookup(2, Engine::Useries, 5).is_none());
    }
}
