//! Published counts of partitions of `[n]` avoiding an `(m+1)`-nesting, for
//! `m = 1..=6` and `n = 1..=15`.

use num_bigint::BigUint;

/// OEIS identifier of each row. Metadata only.
pub const OEIS: [&str; 6] = [
    "A000108", "A108304", "A108305", "A192126", "A192127", "A192128",
];

/// Rows indexed by `m - 1`, columns by `n - 1`.
pub const ROWS: [[u64; 15]; 6] = [
    [
        1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845,
    ],
    [
        1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566, 520257, 2877834, 16434105, 96505490,
        580864901,
    ],
    [
        1, 2, 5, 15, 52, 203, 877, 4139, 21119, 115495, 671969, 4132936, 26723063, 180775027,
        1274056792,
    ],
    [
        1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115974, 678530, 4212654, 27627153, 190624976,
        1378972826,
    ],
    [
        1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213596, 27644383, 190897649,
        1382919174,
    ],
    [
        1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437, 190899321,
        1382958475,
    ],
];

pub const MAX_M: usize = 6;
pub const MAX_N: usize = 15;

/// The row for `m`, prefixed with the count 1 for `n = 0`. `None` outside `1..=6`.
pub fn row(m: usize) -> Option<Vec<BigUint>> {
    let r = ROWS.get(m.checked_sub(1)?)?;
    Some(
        std::iter::once(1)
            .chain(r.iter().copied())
            .map(BigUint::from)
            .collect(),
    )
}

/// The tabulated count for `(m, n)`, `n` from 0.
pub fn value(m: usize, n: usize) -> Option<BigUint> {
    row(m)?.get(n).cloned()
}
