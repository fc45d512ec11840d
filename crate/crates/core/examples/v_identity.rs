//! Checks the change of variables linking the x-series and the u-series at a
//! few exact rational points.

use nestcount::series::{v_identity_check, SamplePoint};
use num_rational::BigRational;

fn point(coords: &[(i64, i64)]) -> SamplePoint {
    coords
        .iter()
        .map(|&(p, q)| BigRational::new(p.into(), q.into()))
        .collect()
}

fn main() -> nestcount::Result<()> {
    let points = [
        vec![point(&[(1, 2)]), point(&[(-3, 7)])],
        vec![point(&[(1, 1), (2, 1)]), point(&[(1, 3), (-5, 2)])],
        vec![
            point(&[(1, 2), (1, 3), (1, 5)]),
            point(&[(2, 1), (-1, 4), (3, 1)]),
        ],
    ];
    for (m, pts) in (1..).zip(&points) {
        let ok = v_identity_check(m, 6, pts)?;
        println!(
            "m={m}, through t^6, {} points: {}",
            pts.len(),
            if ok { "holds" } else { "FAILS" }
        );
    }

    match v_identity_check(2, 3, &[point(&[(0, 1), (1, 1)])]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("a zero coordinate was accepted"),
    }
    Ok(())
}
