//! The approximation sequences and the exact identities they satisfy.

mod approx;
mod convergence;
mod harmonic;
mod recurrence;
mod symbolic;
mod tail;

pub use approx::{a2_numerators, integrality_check, p_seq, p_value, p_value_cached, q_seq, q_value};
pub use convergence::{
    convergence_row, default_digits, write_csv, write_json, ApproxRecord, CSV_HEADER,
};
pub use harmonic::{harmonic, r_val, HarmonicCache};
pub use recurrence::{
    aptekarev_seq, aptekarev_value, make_paper_recurrences, recurrence_check, reference_sequence, rivoal_seq,
    RecurrenceReport, RecurrenceSpec,
};
pub use symbolic::{f_deriv_sym, f_sum_sym, leading_gamma_coeff, lemma1_residual, linear_form_residual};
pub use tail::{tail_bound, tail_series};
