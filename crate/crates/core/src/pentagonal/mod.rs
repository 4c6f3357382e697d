//! Classical and q-deformed period-6 sums, Euler's pentagonal tower, and the
//! identity checks that tie them together.

mod checks;
mod sums;
mod tower;

pub use checks::{
    ansatz_check, classic_check, errata_2_15_check, errata_2_23_check, jacobi_triple_product_check, main_identity_check,
    q_inverse_check, recurrence_suite, specialization_check, telescoping_check, tower_closed_form_check,
    tower_r_check, tower_recursion_check, MainIdentity, RecurrenceFamily, PRINTED_S_Q_EXPANSION, f_limit_check,
};
pub use sums::{
    classic_sum, closed_form_s, f_limit_series, f_sum, q_sum_s, series_s, series_s_symbolic, AMode, APoly,
    ClassicalSum, ExponentAnsatz, QSum, QSumValue,
};
pub use tower::{
    calp_sparse, euler_tower_p_series, pentagonal_product, pentagonal_sum, s_q_sparse, s_q_sparse_printed, s_sparse,
    tower_bar_closed, tower_p_closed, tower_p_specialized,
};
