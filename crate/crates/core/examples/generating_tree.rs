//! Walks the generating tree level by level, keeping only label multiplicities.
//!
//! `cargo run --release --example generating_tree -- 2 20`

use nestcount::gtree;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(2);
    let terms = args.next().unwrap_or(20);

    for level in gtree::levels(m).take(terms + 1) {
        println!(
            "n={:<3} distinct labels={:<6} partitions={}",
            level.level(),
            level.len(),
            level.total()
        );
    }

    let small = gtree::level(m, 4);
    println!();
    println!("label multiset at n = 4:");
    for (label, count) in small.sorted() {
        println!("  {label} x {count}");
    }
    if let Ok(marginal) = small.marginal(m) {
        println!("distribution of a_{m} at n = 4: {marginal:?}");
    }
}
