//! Acceptance suite. Prints one PASS/FAIL line per criterion, plus INFO lines
//! for timings and recorded discrepancies, and exits nonzero if any criterion fails.

use std::process::Command;
use std::time::Instant;

use nestcount::formulas::{
    catalan_convolution_check, catalan_recurrence, ct_reference, m1_series_check, m2_first_term,
    m2_full_expression, CoefficientTable, M2Reading, Term,
};
use nestcount::numbers::{bell_numbers, catalan_numbers};
use nestcount::partition::{count_noncrossing, count_nonnesting};
use nestcount::series::{u_engine, x_engine, x_engine_with_bound};
use nestcount::{gtree, table1, verify, Engine};
use num_bigint::{BigInt, BigUint};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    what: impl FnOnce() -> String,
    want: &T,
    got: &T,
) -> Outcome {
    if want == got {
        Ok(())
    } else {
        Err(format!("{}: expected {want:?}, got {got:?}", what()))
    }
}

fn table1_reproduction() -> Outcome {
    let mut checked = 0;
    for m in 1..=6 {
        let row = table1::row(m).ok_or(format!("no row for m = {m}"))?;
        let seq = gtree::sequence(m, 15);
        for n in 1..=15 {
            expect_eq(|| format!("m = {m}, n = {n}"), &row[n], &seq[n])?;
            checked += 1;
        }
    }
    expect_eq(|| "number of equalities".into(), &90, &checked)
}

fn cross_engine() -> Outcome {
    for m in 1..=4 {
        let tree = gtree::sequence(m, 12);
        let start = Instant::now();
        let u = u_engine(m, 12).map_err(|e| e.to_string())?;
        let tu = start.elapsed();
        let start = Instant::now();
        let x = x_engine(m, 12).map_err(|e| e.to_string())?;
        let tx = start.elapsed();
        println!(
            "INFO  m={m} N=12: u-engine {:.3}s, x-engine {:.3}s",
            tu.as_secs_f64(),
            tx.as_secs_f64()
        );
        expect_eq(|| format!("u-engine m = {m}"), &tree, &u)?;
        expect_eq(|| format!("x-engine m = {m}"), &tree, &x)?;
    }
    Ok(())
}

fn benchmark_m2() {
    for engine in [Engine::Useries, Engine::Xseries] {
        let start = Instant::now();
        let result = engine.sequence(2, 40);
        let secs = start.elapsed().as_secs_f64();
        let agrees = result.map(|s| s == gtree::sequence(2, 40)).unwrap_or(false);
        println!(
            "INFO  benchmark (non-gating) m=2 N=40 {}: {secs:.3}s, agrees with gtree: {agrees}, target < 600s",
            engine.name()
        );
    }
}

fn oracle_equality() -> Outcome {
    for m in 1..=4 {
        let oracle: Vec<BigUint> = (0..=10)
            .map(|n| count_nonnesting(n, m))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for engine in Engine::ALL {
            let seq = engine.sequence(m, 10).map_err(|e| e.to_string())?;
            expect_eq(|| format!("{} m = {m}", engine.name()), &oracle, &seq)?;
        }
    }
    Ok(())
}

fn equidistribution() -> Outcome {
    for m in 1..=4 {
        for n in 0..=10 {
            let nn = count_nonnesting(n, m).map_err(|e| e.to_string())?;
            let nc = count_noncrossing(n, m).map_err(|e| e.to_string())?;
            expect_eq(|| format!("m = {m}, n = {n}"), &nn, &nc)?;
        }
    }
    Ok(())
}

fn bell_prefix() -> Outcome {
    let bell = bell_numbers(14);
    for m in 1..=6 {
        let edge = 2 * m + 2;
        let seq = gtree::sequence(m, edge);
        for n in 0..=2 * m + 1 {
            expect_eq(|| format!("m = {m}, n = {n}"), &bell[n], &seq[n])?;
        }
        let below = &bell[edge] - 1u32;
        expect_eq(|| format!("m = {m}, n = {edge}"), &below, &seq[edge])?;
    }
    Ok(())
}

fn children_soundness() -> Outcome {
    for m in 1..=3 {
        let checked = verify::children_soundness(m, 8)?;
        println!("INFO  children rule m={m}: {checked} partitions checked exhaustively");
    }
    Ok(())
}

fn catalan_suite() -> Outcome {
    expect_eq(
        || "recurrence n <= 30".into(),
        &catalan_numbers(30),
        &catalan_recurrence(30),
    )?;
    if !catalan_convolution_check(30) {
        return Err("convolution identity fails at 30 terms".into());
    }
    if !m1_series_check(8) {
        return Err("m = 1 kernel equation check fails at 8 terms".into());
    }
    Ok(())
}

fn m2_formulas() -> Outcome {
    for n in 0..=12 {
        let closed = m2_first_term(n).map_err(|e| e.to_string())?;
        let ct = ct_reference(Term::First, n, None).map_err(|e| e.to_string())?;
        expect_eq(|| format!("first term n = {n}"), &ct, &closed)?;
    }
    let table = CoefficientTable::from_gtree(2, 10);
    let row = table1::row(2).ok_or("no row for m = 2")?;
    for (n, count) in row.iter().enumerate().take(11) {
        let full =
            m2_full_expression(n, &table, M2Reading::RECONCILED).map_err(|e| e.to_string())?;
        expect_eq(
            || format!("full expression n = {n}"),
            &BigInt::from(count.clone()),
            &full,
        )?;
    }
    for reading in M2Reading::all() {
        if reading == M2Reading::RECONCILED {
            continue;
        }
        let values: Vec<String> = (0..=10)
            .map(|n| match m2_full_expression(n, &table, reading) {
                Ok(v) => v.to_string(),
                Err(e) => format!("error({e})"),
            })
            .collect();
        let agrees = (0..=10).all(|n| values[n] == row[n].to_string());
        println!(
            "INFO  {} reading, n=0..10: {} ({})",
            reading.describe(),
            values.join(","),
            if agrees {
                "matches the counts"
            } else {
                "differs from the counts"
            }
        );
    }
    Ok(())
}

fn truncation_soundness() -> Outcome {
    for m in 1..=3 {
        for n in 0..=8 {
            let base = x_engine(m, n).map_err(|e| e.to_string())?;
            let doubled = x_engine_with_bound(m, n, 2 * n).map_err(|e| e.to_string())?;
            expect_eq(|| format!("m = {m}, N = {n}"), &base, &doubled)?;
        }
    }
    Ok(())
}

fn run_cli(args: &[&str], threads: usize) -> Result<Vec<u8>, String> {
    let output = Command::new(env!("CARGO_BIN_EXE_nestcount"))
        .arg("--threads")
        .arg(threads.to_string())
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !output.status.success() {
        return Err(format!(
            "{args:?} exited with {}: {}",
            output.status,
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    Ok(output.stdout)
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 8] = [
        &["sequence", "--max-nesting", "2", "--terms", "15"],
        &[
            "sequence",
            "--max-nesting",
            "3",
            "--terms",
            "12",
            "--engine",
            "useries",
            "--format",
            "json",
        ],
        &[
            "sequence",
            "--max-nesting",
            "3",
            "--terms",
            "10",
            "--engine",
            "xseries",
            "--format",
            "json",
        ],
        &[
            "sequence",
            "--max-nesting",
            "2",
            "--terms",
            "9",
            "--engine",
            "oracle",
        ],
        &["labels", "--max-nesting", "3", "--size", "9"],
        &[
            "labels",
            "--max-nesting",
            "2",
            "--size",
            "8",
            "--engine",
            "oracle",
            "--format",
            "json",
        ],
        &["stats", "--size", "9"],
        &[
            "verify",
            "--suite",
            "cross-engine",
            "--max-nesting",
            "2",
            "--terms",
            "10",
        ],
    ];
    for args in commands {
        let reference = run_cli(args, 1)?;
        for threads in [1, 2, 4, 8] {
            for _ in 0..2 {
                let again = run_cli(args, threads)?;
                if again != reference {
                    return Err(format!("{args:?} differs with {threads} threads"));
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 table1 reproduction m=1..6 n=1..15", table1_reproduction),
        ("2 cross-engine equality m=1..4 N=12", cross_engine),
        ("3 oracle equality n<=10 m=1..4", oracle_equality),
        ("4 equidistribution n<=10 m=1..4", equidistribution),
        ("5 bell prefix m=1..6", bell_prefix),
        ("6 children soundness n<=8 m<=3", children_soundness),
        ("7 catalan suite", catalan_suite),
        ("8 m=2 coefficient formulas", m2_formulas),
        ("9 truncation soundness m<=3 N<=8", truncation_soundness),
        ("10 determinism of CLI output", determinism),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        let start = Instant::now();
        let outcome = criterion();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  {name} ({secs:.2}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name} ({secs:.2}s): {e}");
            }
        }
    }
    benchmark_m2();
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
