//! For m = 1 the counts are the Catalan numbers.

use nestcount::formulas::{catalan_convolution_check, catalan_recurrence, m1_series_check};
use nestcount::gtree;

fn main() {
    let rec = catalan_recurrence(20);
    let tree = gtree::sequence(1, 20);
    for (n, (c, t)) in rec.iter().zip(&tree).enumerate() {
        println!("n={n:<2} recurrence={c:<12} generating tree={t}");
    }
    println!(
        "convolution identity to 30: {}",
        catalan_convolution_check(30)
    );
    println!("kernel equation to t^10:    {}", m1_series_check(10));
}
