use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gtree;
use crate::partition::Oracle;
use crate::series::{u_engine, x_engine};

/// The four independent ways of counting partitions with bounded nesting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Exhaustive enumeration of restricted-growth strings.
    Oracle,
    /// Label multisets of the generating tree.
    Gtree,
    /// The u-equation with exact divided differences.
    Useries,
    /// Fixed-point iteration of the kernel equation in the x variables.
    Xseries,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Oracle,
        Engine::Gtree,
        Engine::Useries,
        Engine::Xseries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Gtree => "gtree",
            Engine::Useries => "useries",
            Engine::Xseries => "xseries",
        }
    }

    /// Counts for sizes `0..=terms`.
    pub fn sequence(self, m: usize, terms: usize) -> Result<Vec<BigUint>> {
        if m == 0 {
            return Err(Error::InvalidInput(
                "maximal nesting must be at least 1".into(),
            ));
        }
        match self {
            Engine::Oracle => {
                let oracle = Oracle::default();
                (0..=terms).map(|n| oracle.count_nonnesting(n, m)).collect()
            }
            Engine::Gtree => Ok(gtree::sequence(m, terms)),
            Engine::Useries => u_engine(m, terms),
            Engine::Xseries => x_engine(m, terms),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Engine> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown engine {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_engines_agree_small() {
        let expected = Engine::Gtree.sequence(2, 7).unwrap();
        for e in Engine::ALL {
            assert_eq!(e.sequence(2, 7).unwrap(), expected, "{e}");
        }
    }

    #[test]
    fn names_round_trip() {
        for e in Engine::ALL {
            assert_eq!(e.name().parse::<Engine>().unwrap(), e);
        }
        assert!("maple".parse::<Engine>().is_err());
    }

    #[test]
    fn oracle_guard_propagates() {
        assert!(matches!(
            Engine::Oracle.sequence(1, 14),
            Err(Error::ResourceGuard { .. })
        ));
        assert!(Engine::Gtree.sequence(0, 3).is_err());
    }
}
