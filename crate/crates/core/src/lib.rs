//! Exact enumeration of set partitions avoiding long nestings.
//!
//! A partition of `[n]` has an `m`-nesting when `m` of its arcs (consecutive
//! elements of a block) are nested one inside the next. This crate counts the
//! partitions whose maximal nesting number is at most `m` in four independent
//! ways, each usable as a check on the others:
//!
//! - [`partition::Oracle`] enumerates every partition (small sizes only);
//! - [`gtree`] evolves label multisets of the generating tree;
//! - [`series::u_engine`] solves the functional equation in the label variables;
//! - [`series::x_engine`] iterates the kernel form of that equation.
//!
//! [`formulas`] holds the closed forms and constant-term extractions for
//! `m = 1` and `m = 2`, and [`verify`] bundles the cross-checks run by the
//! `nestcount verify` command.
//!
//! ```
//! use nestcount::Engine;
//!
//! let counts = Engine::Useries.sequence(2, 6).unwrap();
//! let shown: Vec<String> = counts.iter().map(ToString::to_string).collect();
//! assert_eq!(shown.join(","), "1,1,2,5,15,52,202");
//! ```
//!
//! The `examples/` directory has one runnable program per capability:
//! `enumerate_partitions`, `labels_and_children`, `generating_tree`,
//! `u_series`, `x_series`, `v_identity`, `catalan`, `m2_formulas`, `table1`,
//! `sequence_cache`, `verify_suites` and `engine_timings`.

pub mod cli;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod gtree;
pub mod label;
pub mod numbers;
pub mod partition;
pub mod poly;
pub mod record;
pub mod series;
pub mod table1;
pub mod verify;

pub use engine::Engine;
pub use error::{Error, Result};
pub use label::Label;
pub use partition::{ArcDiagram, SetPartition};
