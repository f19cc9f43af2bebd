//! Hilbert series of `S(𝔤)^K` for the ten classical symmetric pairs, their
//! stable limits, and the identities that connect them to the closed-form
//! products.

mod cases;
mod identities;
mod stability;

pub use cases::{
    h_d, hilbert_series, stable_h_d, stable_series, FamilyTag, Formula, Shape, StableFamily,
    SymPairCase,
};
pub use identities::{
    ctheorem_check, g_series, h_sum_check, harmonic_series, kostant_factorization_check,
    skew_identity_check, skew_identity_sides, stable_branching_multiplicity, stan84_check, stanley_comparison,
};
pub use stability::{
    cases_up_to, stability_check, stability_sweep, stability_threshold, stable_family_equalities,
    STABILITY_PAIRS,
};
