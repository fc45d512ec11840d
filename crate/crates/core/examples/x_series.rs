//! Iterates the kernel equation in the x variables and watches the constant
//! terms settle, one more order per application.
//!
//! `cargo run --release --example x_series -- 3 10`

use nestcount::series::{x_engine_with_bound, XEngine};

fn main() -> nestcount::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(3);
    let terms = args.next().unwrap_or(10);

    let engine = XEngine::new(m, terms);
    println!(
        "m={m}, terms={terms}, weight bound {}",
        engine.weight_bound()
    );
    let mut state = engine.initial();
    for step in 1..=terms + 1 {
        state = engine.apply(&state)?;
        let ct: Vec<String> = state
            .constant_terms()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("after {step:>2}: {}", ct.join(" "));
    }

    let doubled = x_engine_with_bound(m, terms, 2 * terms)?;
    let ct: Vec<String> = doubled.iter().map(ToString::to_string).collect();
    println!("bound {}: {}", 2 * terms, ct.join(" "));
    Ok(())
}
