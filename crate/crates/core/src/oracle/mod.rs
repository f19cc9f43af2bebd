//! Independent brute-force layer: truncated multivariate polynomials, Schur
//! polynomials from semistandard tableaux, Schur-basis decomposition, power
//! sums, and polynomial checks of the classical multiplicity-free
//! decompositions. Nothing here is tuned for speed; it exists to validate
//! the coefficient engines.

mod checks;
mod poly;
mod schur;

pub use checks::{
    alt2_check, cauchy_check, cauchy_kernel, cauchy_schur_side, compare_polys,
    conjugation_character_check, lr_product_oracle_check, pairs_up_to, specialized_schur,
    sym2_check, triple_cauchy_g_check, two_block_split_check,
};
pub use poly::{block_product, Exponents, TruncatedMultiPoly};
pub use schur::{power_sum, power_sum_product, schur_decompose, schur_decompose_blocks, schur_poly};
