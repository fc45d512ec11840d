//! Enumerates the set partitions of [n] in restricted-growth order and prints
//! each one with its arcs and its maximal nesting and crossing numbers.
//!
//! `cargo run --example enumerate_partitions -- 5`

use nestcount::partition::{count_noncrossing, count_nonnesting, enumerate};

fn main() -> nestcount::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("size"));

    for p in enumerate(n) {
        let arcs = p.standard_representation();
        println!(
            "{:<16} rgs={:?} arcs={:?} nest={} cross={}",
            p.to_string(),
            p.rgs(),
            arcs.arcs,
            p.max_nesting(),
            p.max_crossing()
        );
    }

    println!();
    println!("m  nonnesting  noncrossing");
    for m in 1..=n.max(1) {
        println!(
            "{m}  {:>10}  {:>11}",
            count_nonnesting(n, m)?,
            count_noncrossing(n, m)?
        );
    }
    Ok(())
}
