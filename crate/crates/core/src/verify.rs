//! Named verification suites. Each suite runs a list of checks and reports
//! PASS/FAIL per check, with the first counterexample on failure.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::formulas::{
    catalan_convolution_check, catalan_recurrence, ct_reference, m1_series_check, m2_first_term,
    m2_full_expression, m2_second_term, m2_third_term, CoefficientTable, M2Reading, Term,
};
use crate::gtree;
use crate::numbers::{bell_numbers, catalan_numbers};
use crate::partition::{enumerate, Oracle, SetPartition};
use crate::table1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    #[value(name = "table1")]
    Table1,
    #[value(name = "cross-engine")]
    CrossEngine,
    #[value(name = "oracle")]
    Oracle,
    #[value(name = "catalan")]
    Catalan,
    #[value(name = "labels")]
    Labels,
    #[value(name = "equidistribution")]
    Equidistribution,
    #[value(name = "bell-prefix")]
    BellPrefix,
    #[value(name = "m2-formula")]
    M2Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First counterexample on failure.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Informational lines that do not affect the outcome.
    pub notes: Vec<String>,
}

impl Report {
    pub fn check(&mut self, name: impl Into<String>, outcome: std::result::Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e)),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.detail {
                None => writeln!(f, "PASS  {}", c.name)?,
                Some(d) => writeln!(f, "FAIL  {}: {d}", c.name)?,
            }
        }
        for n in &self.notes {
            writeln!(f, "INFO  {n}")?;
        }
        let total = self.checks.len();
        let failed = self.failures();
        writeln!(
            f,
            "{}: {} passed, {failed} failed",
            if failed == 0 { "ok" } else { "FAILED" },
            total - failed
        )
    }
}

/// Compares two sequences term by term.
pub fn compare<T: PartialEq + fmt::Display>(
    expected: &[T],
    got: &[T],
) -> std::result::Result<(), String> {
    if let Some(n) = expected.iter().zip(got).position(|(a, b)| a != b) {
        return Err(format!("n = {n}: expected {}, got {}", expected[n], got[n]));
    }
    if expected.len() != got.len() {
        return Err(format!("length {} vs {}", expected.len(), got.len()));
    }
    Ok(())
}

fn engine_result(e: Engine, m: usize, terms: usize) -> std::result::Result<Vec<BigUint>, String> {
    e.sequence(m, terms)
        .map_err(|err| format!("{e} failed: {err}"))
}

/// Runs one suite. Fails with [`Error::InvalidInput`] when the parameters are
/// outside what the suite supports.
pub fn run(suite: Suite, m: usize, terms: usize) -> Result<Report> {
    if m == 0 {
        return Err(Error::InvalidInput(
            "maximal nesting must be at least 1".into(),
        ));
    }
    match suite {
        Suite::Table1 => table1_suite(m, terms),
        Suite::CrossEngine => Ok(cross_engine(m, terms)),
        Suite::Oracle => oracle_suite(m, terms),
        Suite::Catalan => Ok(catalan_suite(terms)),
        Suite::Labels => labels_suite(m, terms),
        Suite::Equidistribution => equidistribution(m, terms),
        Suite::BellPrefix => Ok(bell_prefix(m, terms)),
        Suite::M2Formula => Ok(m2_formula(terms)),
    }
}

pub fn table1_suite(m: usize, terms: usize) -> Result<Report> {
    if m > table1::MAX_M || terms > table1::MAX_N {
        return Err(Error::InvalidInput(format!(
            "the table covers m <= {} and n <= {}",
            table1::MAX_M,
            table1::MAX_N
        )));
    }
    let mut r = Report::default();
    let expected = &table1::row(m).expect("m checked")[..=terms];
    let got = gtree::sequence(m, terms);
    r.check(
        format!(
            "table1: gtree m={m} n=0..{terms} matches {}",
            table1::OEIS[m - 1]
        ),
        compare(expected, &got),
    );
    Ok(r)
}

pub fn cross_engine(m: usize, terms: usize) -> Report {
    let mut r = Report::default();
    let reference = gtree::sequence(m, terms);
    for e in [Engine::Useries, Engine::Xseries] {
        r.check(
            format!("cross-engine: {e} = gtree for m={m} n=0..{terms}"),
            engine_result(e, m, terms).and_then(|got| compare(&reference, &got)),
        );
    }
    r
}

pub fn oracle_suite(m: usize, terms: usize) -> Result<Report> {
    let oracle = Oracle::default();
    if terms > oracle.max_n {
        return Err(Error::ResourceGuard {
            n: terms,
            bound: oracle.max_n,
        });
    }
    let mut r = Report::default();
    let reference = Engine::Oracle.sequence(m, terms)?;
    for e in [Engine::Gtree, Engine::Useries, Engine::Xseries] {
        r.check(
            format!("oracle: {e} = exhaustive count for m={m} n=0..{terms}"),
            engine_result(e, m, terms).and_then(|got| compare(&reference, &got)),
        );
    }
    Ok(r)
}

pub fn catalan_suite(terms: usize) -> Report {
    let mut r = Report::default();
    let closed = catalan_numbers(terms);
    let rec = catalan_recurrence(terms);
    r.check(
        format!("catalan: recurrence = closed form n=0..{terms}"),
        compare(&closed, &rec),
    );
    let tree: Vec<BigInt> = gtree::sequence(1, terms)
        .into_iter()
        .map(BigInt::from)
        .collect();
    r.check(
        format!("catalan: recurrence = gtree m=1 n=0..{terms}"),
        compare(&rec, &tree),
    );
    r.check(
        format!("catalan: convolution identity n=0..{terms}"),
        if catalan_convolution_check(terms) {
            Ok(())
        } else {
            Err("identity fails".into())
        },
    );
    let series_terms = terms.min(12);
    r.check(
        format!("catalan: m=1 kernel equation expansion through t^{series_terms}"),
        if m1_series_check(series_terms) {
            Ok(())
        } else {
            Err("expansions differ".into())
        },
    );
    r
}

/// Exhaustive check of the children rule on every partition of `[n]`,
/// `n <= max_n`, with maximal nesting number at most `m`. The true children are
/// found by trying all `block_count + 1` extensions and keeping those with
/// maximal nesting number at most `m`. They must be the singleton extension
/// followed by blocks `1..a_m`, there must be `a_m` of them, their labels must
/// be the ones predicted from the parent label, and `SetPartition::children`
/// must list the same partitions.
pub fn children_soundness(m: usize, max_n: usize) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in 0..=max_n {
        for p in enumerate(n) {
            if p.max_nesting() > m {
                continue;
            }
            let label = p.label(m);
            let a_m = label.last() as usize;
            let mut extensions = vec![(0, p.with_singleton())];
            for l in 1..=p.block_count() {
                extensions.push((l, p.joined_to_block(l).map_err(|e| e.to_string())?));
            }
            let valid: Vec<(usize, SetPartition)> = extensions
                .into_iter()
                .filter(|(_, q)| q.max_nesting() <= m)
                .collect();
            if valid.len() != a_m {
                return Err(format!("{p}: {} children, label {label}", valid.len()));
            }
            if let Some((l, q)) = valid.iter().find(|(l, _)| *l >= a_m) {
                return Err(format!(
                    "{p}: joining {} to block {l} gives {q} within nesting {m}",
                    n + 1
                ));
            }
            let predicted = label.children();
            for ((_, kid), want) in valid.iter().zip(&predicted) {
                let got = kid.label(m);
                if &got != want {
                    return Err(format!("{p} child {kid}: label {got}, predicted {want}"));
                }
            }
            let listed = p.children(m).map_err(|e| format!("{p}: {e}"))?;
            if listed.iter().ne(valid.iter().map(|(_, q)| q)) {
                return Err(format!(
                    "{p}: SetPartition::children disagrees with the extensions"
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

pub fn labels_suite(m: usize, terms: usize) -> Result<Report> {
    let oracle = Oracle::default();
    if terms > oracle.max_n {
        return Err(Error::ResourceGuard {
            n: terms,
            bound: oracle.max_n,
        });
    }
    let mut r = Report::default();
    let depth = terms.min(8);
    r.check(
        format!("labels: children rule sound for m={m} n=0..{depth}"),
        children_soundness(m, depth).map(|_| ()),
    );
    let outcome = gtree::levels(m)
        .take(terms + 1)
        .enumerate()
        .try_for_each(|(n, level)| {
            let want = oracle.label_distribution(n, m).map_err(|e| e.to_string())?;
            if level.sorted() != want {
                return Err(format!("label multiset differs at n = {n}"));
            }
            Ok(())
        });
    r.check(
        format!("labels: gtree multisets = exhaustive label counts for m={m} n=0..{terms}"),
        outcome,
    );
    Ok(r)
}

pub fn equidistribution(m: usize, terms: usize) -> Result<Report> {
    let oracle = Oracle::default();
    if terms > oracle.max_n {
        return Err(Error::ResourceGuard {
            n: terms,
            bound: oracle.max_n,
        });
    }
    let mut r = Report::default();
    let mut nest = Vec::new();
    let mut cross = Vec::new();
    for n in 0..=terms {
        nest.push(oracle.count_nonnesting(n, m)?);
        cross.push(oracle.count_noncrossing(n, m)?);
    }
    r.check(
        format!("equidistribution: nesting <= {m} and crossing <= {m} equinumerous n=0..{terms}"),
        compare(&nest, &cross),
    );
    Ok(r)
}

pub fn bell_prefix(m: usize, terms: usize) -> Report {
    let mut r = Report::default();
    let bell = bell_numbers(terms);
    let seq = gtree::sequence(m, terms);
    let prefix = terms.min(2 * m + 1);
    r.check(
        format!("bell-prefix: m={m} terms equal Bell numbers for n=0..{prefix}"),
        compare(&bell[..=prefix], &seq[..=prefix]),
    );
    let edge = 2 * m + 2;
    if terms >= edge {
        let expected = &bell[edge] - 1u32;
        r.check(
            format!("bell-prefix: m={m} term n={edge} equals Bell({edge}) - 1 = {expected}"),
            compare(&[expected], &seq[edge..=edge]),
        );
    } else {
        r.note(format!(
            "bell-prefix: n={edge} not reached with {terms} terms"
        ));
    }
    r
}

pub fn m2_formula(terms: usize) -> Report {
    let mut r = Report::default();
    let table = CoefficientTable::from_gtree(2, terms);
    r.check(
        format!("m2-formula: coefficient table invariants n=0..{terms}"),
        table.check_invariants(),
    );
    let first = (0..=terms).try_for_each(|n| {
        let closed = m2_first_term(n).map_err(|e| e.to_string())?;
        let ct = ct_reference(Term::First, n, None).map_err(|e| e.to_string())?;
        if closed != ct {
            return Err(format!("n = {n}: closed form {closed}, constant term {ct}"));
        }
        Ok(())
    });
    r.check(
        format!("m2-formula: first term closed form = constant term n=0..{terms}"),
        first,
    );
    let rest = (0..=terms).try_for_each(|n| {
        let second = m2_second_term(n, &table, M2Reading::RECONCILED).map_err(|e| e.to_string())?;
        let ct2 = ct_reference(Term::Second, n, Some(&table)).map_err(|e| e.to_string())?;
        let third = m2_third_term(n, &table).map_err(|e| e.to_string())?;
        let ct3 = ct_reference(Term::Third, n, Some(&table)).map_err(|e| e.to_string())?;
        if second != ct2 {
            return Err(format!(
                "n = {n}: second term {second}, constant term {ct2}"
            ));
        }
        if third != ct3 {
            return Err(format!("n = {n}: third term {third}, constant term {ct3}"));
        }
        Ok(())
    });
    r.check(
        format!("m2-formula: second and third closed forms = constant terms n=0..{terms}"),
        rest,
    );
    let expected: Vec<BigInt> = table.totals.iter().cloned().map(BigInt::from).collect();
    let tabulated = table1::row(2).expect("row 2 exists");
    let n_pub = terms.min(table1::MAX_N);
    r.check(
        format!("m2-formula: generating tree = table1 row m=2 n=0..{n_pub}"),
        compare(&tabulated[..=n_pub], &table.totals[..=n_pub]),
    );
    for reading in M2Reading::all() {
        let got: std::result::Result<Vec<BigInt>, _> = (0..=terms)
            .map(|n| m2_full_expression(n, &table, reading))
            .collect();
        let outcome = got
            .map_err(|e| e.to_string())
            .and_then(|g| compare(&expected, &g));
        if reading == M2Reading::RECONCILED {
            r.check(
                format!(
                    "m2-formula: assembled expression ({}) = counts n=0..{terms}",
                    reading.describe()
                ),
                outcome,
            );
        } else {
            match outcome {
                Ok(()) => r.note(format!(
                    "m2-formula: {} reading also reproduces the counts",
                    reading.describe()
                )),
                Err(e) => r.note(format!(
                    "m2-formula: {} reading disagrees with the counts, {e}",
                    reading.describe()
                )),
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_formatting() {
        let mut r = Report::default();
        r.check("a", Ok(()));
        r.check("b", Err("n = 3: expected 5, got 4".into()));
        r.note("extra");
        let text = r.to_string();
        assert!(text.contains("PASS  a\n"));
        assert!(text.contains("FAIL  b: n = 3"));
        assert!(text.contains("INFO  extra"));
        assert!(text.ends_with("FAILED: 1 passed, 1 failed\n"));
        assert!(!r.passed());
    }

    #[test]
    fn compare_reports_first_mismatch() {
        assert_eq!(compare(&[1, 2, 3], &[1, 2, 3]), Ok(()));
        assert_eq!(
            compare(&[1, 2, 3], &[1, 5, 6]).unwrap_err(),
            "n = 1: expected 2, got 5"
        );
    }

    #[test]
    fn small_suites_pass() {
        assert!(run(Suite::Table1, 3, 10).unwrap().passed());
        assert!(run(Suite::CrossEngine, 2, 6).unwrap().passed());
        assert!(run(Suite::BellPrefix, 2, 7).unwrap().passed());
        assert!(run(Suite::Labels, 2, 6).unwrap().passed());
        assert!(run(Suite::M2Formula, 2, 6).unwrap().passed());
    }

    #[test]
    fn usage_errors() {
        assert!(run(Suite::Table1, 7, 5).is_err());
        assert!(run(Suite::Table1, 2, 16).is_err());
        assert!(run(Suite::Oracle, 2, 20).is_err());
        assert!(run(Suite::CrossEngine, 0, 3).is_err());
    }
}
