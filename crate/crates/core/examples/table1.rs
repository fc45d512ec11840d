//! Recomputes the reference table of counts for m = 1..6, n = 1..15.

use nestcount::{gtree, table1};

fn main() {
    for m in 1..=table1::MAX_M {
        let row = table1::row(m).expect("embedded row");
        let seq = gtree::sequence(m, table1::MAX_N);
        let status = if row == seq { "ok" } else { "MISMATCH" };
        let shown: Vec<String> = seq[1..].iter().map(ToString::to_string).collect();
        println!(
            "m={m} {:<8} {status:<8} {}",
            table1::OEIS[m - 1],
            shown.join(" ")
        );
    }
}
