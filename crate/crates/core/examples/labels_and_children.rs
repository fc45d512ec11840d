//! Labels of a partition and its children in the generating tree.

use nestcount::{Label, SetPartition};

fn main() -> nestcount::Result<()> {
    let p: SetPartition = "1|2 5 6 8|3 7|4".parse()?;
    let m = 3;
    let label = p.label(m);
    println!("{p}: max nesting {}, label {label}", p.max_nesting());

    // Children come from the partition itself and from the label alone; both agree.
    for (kid, predicted) in p.children(m)?.iter().zip(label.children()) {
        println!(
            "  {:<20} label {}  predicted {predicted}",
            kid.to_string(),
            kid.label(m)
        );
    }

    // Joining 9 to a block numbered a_m or higher creates a 4-nesting.
    for l in label.last() as usize..=p.block_count() {
        let q = p.joined_to_block(l)?;
        println!(
            "  join to block {l}: {q} has max nesting {}",
            q.max_nesting()
        );
    }

    println!();
    println!("children of the root label for m = 2:");
    let mut frontier = vec![Label::root(2)];
    for depth in 1..=3 {
        frontier = frontier.iter().flat_map(Label::children).collect();
        let shown: Vec<String> = frontier.iter().map(ToString::to_string).collect();
        println!("  depth {depth}: {}", shown.join(" "));
    }
    Ok(())
}
