//! Stores computed sequences as JSON records in a cache directory and reads
//! them back.

use std::time::Instant;

use nestcount::record::{Cache, Meta, SequenceRecord};
use nestcount::Engine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("nestcount-example-cache");
    let cache = Cache::new(&dir);

    for engine in [Engine::Gtree, Engine::Useries] {
        let start = Instant::now();
        let counts = engine.sequence(2, 30)?;
        let meta = Meta {
            wall_time_secs: Some(start.elapsed().as_secs_f64()),
            ..Meta::current()
        };
        cache.store(&SequenceRecord::new(2, engine, &counts, meta))?;
        println!("stored {}", cache.path(2, engine).display());
    }

    let hit = cache.lookup(2, Engine::Gtree, 20).expect("cached");
    println!("first 21 terms from cache: {hit:?}");
    println!(
        "longer request misses: {}",
        cache.lookup(2, Engine::Gtree, 40).is_none()
    );

    let text = std::fs::read_to_string(cache.path(2, Engine::Useries))?;
    let record = SequenceRecord::from_json(&text)?;
    println!(
        "record for {} is plausible: {}",
        record.engine,
        record.plausible()
    );
    Ok(())
}
