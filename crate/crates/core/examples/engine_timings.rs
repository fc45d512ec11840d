//! Times every engine on the same parameters and checks that they agree.
//!
//! `cargo run --release --example engine_timings -- 4 12`

use std::time::Instant;

use nestcount::Engine;

fn main() -> nestcount::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(3);
    let terms = args.next().unwrap_or(10);

    let mut reference = None;
    for engine in Engine::ALL {
        if engine == Engine::Oracle && terms > 11 {
            println!("{:>8}  skipped (n > 11)", engine.name());
            continue;
        }
        let start = Instant::now();
        let counts = engine.sequence(m, terms)?;
        let elapsed = start.elapsed();
        let agrees = match &reference {
            None => {
                reference = Some(counts.clone());
                true
            }
            Some(r) => r == &counts,
        };
        println!(
            "{:>8}  {:>10.3}s  last={}  {}",
            engine.name(),
            elapsed.as_secs_f64(),
            counts.last().expect("terms include n = 0"),
            if agrees { "agrees" } else { "DISAGREES" }
        );
    }
    Ok(())
}
