//! Expands the u-series order by order. The coefficient of `u^a t^n` is the
//! number of partitions of [n] with label `a`.

use nestcount::gtree;
use nestcount::series::{u_engine, u_series};

fn main() -> nestcount::Result<()> {
    let m = 2;
    let series = u_series(m, 4)?;
    for (n, order) in series.orders().iter().enumerate() {
        println!("t^{n}: {}", order.to_string().replace('x', "u"));
    }

    for (label, count) in gtree::level(m, 4).sorted() {
        let exps: Vec<i16> = label.as_slice().iter().map(|&a| a as i16).collect();
        assert_eq!(series.order(4).coeff(&exps), count.into());
    }

    println!();
    for m in 1..=4 {
        let counts: Vec<String> = u_engine(m, 12)?.iter().map(ToString::to_string).collect();
        println!("m={m}: {}", counts.join(", "));
    }
    Ok(())
}
