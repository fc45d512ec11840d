//! Closed forms and coefficient-extraction formulas for the two smallest cases:
//! partitions avoiding 2-nestings (Catalan numbers) and avoiding 3-nestings.

mod catalan;
mod m2;

pub use catalan::{
    catalan_convolution_check, catalan_recurrence, m1_series_check, m1_series_check_with,
};
pub use m2::{
    ct_reference, m2_first_term, m2_full_expression, m2_second_term, m2_third_term,
    CoefficientTable, M2Reading, Term,
};
