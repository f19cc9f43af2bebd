//! Exact Hilbert series of `S(𝔤)^K` for the ten classical symmetric pairs,
//! computed from Littlewood–Richardson sums, together with the symmetric
//! function machinery and brute-force oracles used to verify them.
//!
//! ```
//! use lrh::{hilbert_series, stable_h_d, StableFamily, SymPairCase};
//!
//! let u11 = hilbert_series(&SymPairCase::Upq { p: 1, q: 1 }, 4);
//! assert_eq!(u11.to_string(), "1 2 4 6 9");
//! assert_eq!(stable_h_d(StableFamily::ClassGlC, 3), 14);
//! ```

pub mod error;
pub mod hilbert;
pub mod lr;
pub mod memo;
pub mod oracle;
pub mod partition;
pub mod record;
pub mod report;
pub mod series;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
pub use hilbert::{
    ctheorem_check, g_series, h_d, h_sum_check, harmonic_series, hilbert_series,
    skew_identity_check, stability_check, stable_branching_multiplicity, stable_family_equalities,
    stable_h_d, stable_series, stan84_check, stanley_comparison, FamilyTag, StableFamily,
    SymPairCase,
};
pub use lr::{
    branching_expansion, lr_coefficient, product_expansion, skew_expansion, SchurExpansion,
};
pub use partition::{partitions_of, partitions_up_to, Partition, SignedTuple};
pub use record::OutputRecord;
pub use report::{CheckReport, ComparisonReport};
pub use series::{named_series, principal_spec, product_over_k, Factor, NamedSeries, TruncatedSeries};
pub use symgroup::{character_value, kronecker_coefficient, CycleType};
