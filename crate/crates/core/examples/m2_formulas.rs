//! Closed forms for m = 2 assembled from three constant-term pieces, checked
//! against direct constant-term extraction and against the counts.

use nestcount::formulas::{
    ct_reference, m2_first_term, m2_full_expression, m2_second_term, m2_third_term,
    CoefficientTable, M2Reading, Term,
};

fn main() -> nestcount::Result<()> {
    let terms = 10;
    let table = CoefficientTable::from_gtree(2, terms);

    println!("n   first  (ct)     second  (ct)     third  (ct)     total");
    for n in 0..=terms {
        let first = m2_first_term(n)?;
        let second = m2_second_term(n, &table, M2Reading::RECONCILED)?;
        let third = m2_third_term(n, &table)?;
        println!(
            "{n:<3} {first:<6} {:<8} {second:<7} {:<8} {third:<6} {:<8} {}",
            ct_reference(Term::First, n, None)?,
            ct_reference(Term::Second, n, Some(&table))?,
            ct_reference(Term::Third, n, Some(&table))?,
            m2_full_expression(n, &table, M2Reading::RECONCILED)?
        );
    }

    println!();
    for reading in M2Reading::all() {
        let values: Vec<String> = (0..=terms)
            .map(|n| m2_full_expression(n, &table, reading).map(|v| v.to_string()))
            .collect::<nestcount::Result<_>>()?;
        println!("{:<20} {}", reading.describe(), values.join(","));
    }
    Ok(())
}
