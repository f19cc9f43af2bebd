//! Identities tying the Hilbert series to Kronecker coefficients, principal
//! specializations and closed-form products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::lr::{lr_coefficient, skew_expansion};
use crate::oracle::{block_product, schur_poly, TruncatedMultiPoly};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::report::{CheckReport, ComparisonReport};
use crate::series::{named_series, principal_spec, NamedSeries, TruncatedSeries};
use crate::symgroup::kronecker_coefficient;

use super::cases::{hilbert_series, stable_series, FamilyTag, StableFamily, SymPairCase};

/// `G_{μν}(t) = Σ_λ g_{λμν} s_λ(t, t², …)` through `t^D`. Zero when
/// `|μ| ≠ |ν|`.
///
/// ```
/// use lrh::{g_series, part, principal_spec};
/// assert_eq!(g_series(&part![1, 1], &part![2], 6), principal_spec(&part![1, 1], 6));
/// ```
pub fn g_series(mu: &Partition, nu: &Partition, max_degree: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(max_degree);
    if mu.size() != nu.size() || mu.size() > max_degree {
        return out;
    }
    for lambda in partitions_of(mu.size(), None, None) {
        let g = kronecker_coefficient(&lambda, mu, nu).expect("sizes agree");
        if g > 0 {
            let term = principal_spec(&lambda, max_degree).scale(&BigRational::from_integer(g.into()));
            out = &out + &term;
        }
    }
    out
}

/// `Σ_λ c^ρ_{λμ} c^ρ_{λν}`: the multiplicity of the mixed irreducible
/// `(μ, ν)` in the stable restriction of `ρ`.
pub fn stable_branching_multiplicity(rho: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() != nu.size() || mu.size() > rho.size() {
        return 0;
    }
    let width = rho.largest() as usize;
    partitions_of(rho.size() - mu.size(), Some(rho.length()), Some(width))
        .filter(|lambda| lambda.is_contained_in(rho))
        .map(|lambda| lr_coefficient(rho, &lambda, mu) * lr_coefficient(rho, &lambda, nu))
        .sum()
}

fn compare_series(report: &mut CheckReport, left: &TruncatedSeries, right: &TruncatedSeries) {
    for d in 0..=left.max_degree().max(right.max_degree()) {
        let (a, b) = (left.coeff(d), right.coeff(d));
        report.record(a == b, || format!("t^{d}: {a} vs {b}"));
    }
}

/// `Σ_ρ m(ρ; μ, ν) t^{|ρ|} = G_{μν}(t) · I(t)` through `t^D`.
pub fn stan84_check(mu: &Partition, nu: &Partition, max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("stable branching series for ({mu}; {nu}) to t^{max_degree}"));
    if mu.size() != nu.size() {
        report.fail(format!("|μ| = {} differs from |ν| = {}", mu.size(), nu.size()));
        return report;
    }
    let left: Vec<u64> = (0..=max_degree)
        .map(|d| {
            partitions_of(d, None, None)
                .map(|rho| stable_branching_multiplicity(&rho, mu, nu))
                .sum()
        })
        .collect();
    let left = TruncatedSeries::from_integers(left, max_degree);
    let i = named_series(NamedSeries::I, max_degree).expect("I(t) converges");
    let right = &g_series(mu, nu, max_degree) * &i;
    compare_series(&mut report, &left, &right);
    report
}

/// `Σ_μ G_{μμ}(t) = H(t)` through `t^D`.
pub fn h_sum_check(max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("sum of diagonal G series equals H to t^{max_degree}"));
    let left = partitions_up_to(max_degree)
        .map(|mu| g_series(&mu, &mu, max_degree))
        .fold(TruncatedSeries::zero(max_degree), |acc, g| &acc + &g);
    let right = named_series(NamedSeries::H, max_degree).expect("H(t) converges");
    compare_series(&mut report, &left, &right);
    report
}

/// Stable `GL(n,ℂ)` coefficients against `∏ 1/(1 − 2t^k)`.
pub fn ctheorem_check(max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("sum of squared LR coefficients equals F to t^{max_degree}"));
    let left = stable_series(StableFamily::ClassGlC, max_degree);
    let right = named_series(NamedSeries::F, max_degree).expect("F(t) converges");
    compare_series(&mut report, &left, &right);
    report
}

/// `F = I · H` through `t^D`.
pub fn kostant_factorization_check(max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("F = I * H to t^{max_degree}"));
    let f = named_series(NamedSeries::F, max_degree).expect("converges");
    let i = named_series(NamedSeries::I, max_degree).expect("converges");
    let h = named_series(NamedSeries::H, max_degree).expect("converges");
    compare_series(&mut report, &f, &(&i * &h));
    report
}

/// `U(p,q)`-invariants in the harmonics: the Hilbert series divided by
/// `I_{p+q}(t)`. Errors if a coefficient is fractional or negative.
///
/// ```
/// let h = lrh::harmonic_series(1, 1, 4).unwrap();
/// assert_eq!(h.to_string(), "1 1 1 1 1");
/// ```
pub fn harmonic_series(p: usize, q: usize, max_degree: usize) -> Result<TruncatedSeries> {
    let full = hilbert_series(&SymPairCase::Upq { p, q }, max_degree);
    let invariants = named_series(NamedSeries::In { n: p + q }, max_degree)?;
    let quotient = &full * &invariants.reciprocal()?;
    quotient.to_naturals()?;
    Ok(quotient)
}

/// Both sides of the skew Cauchy identity
/// `Σ_{ρ,λ} s_{ρ/λ}(x) s_{ρ/λ}(y) t^{|ρ|} = ∏_k 1/(1 − t^k) ∏_{i,j} 1/(1 − t^k x_i y_j)`
/// with `nvars` variables in each of `x` and `y`, through `t^D`.
///
/// The variables are ordered `t, x₁…x_n, y₁…y_n`. A monomial of `t`-degree at
/// most `D` has `x`- and `y`-degree at most `D` on both sides, so truncating
/// the total degree at `3D` is exact below `t^{D+1}`.
pub fn skew_identity_sides(max_degree: usize, nvars: usize) -> (TruncatedMultiPoly, TruncatedMultiPoly) {
    let nv = 1 + 2 * nvars;
    let total = 3 * max_degree;

    let mut left = TruncatedMultiPoly::zero(nv, total);
    for rho in partitions_up_to(max_degree) {
        let t_power = TruncatedMultiPoly::monomial(1, total, vec![rho.size() as u32], BigInt::one());
        for lambda in partitions_up_to(rho.size()).filter(|l| l.is_contained_in(&rho)) {
            let mut skew = TruncatedMultiPoly::zero(nvars, total);
            for (gamma, c) in skew_expansion(&rho, &lambda).iter() {
                skew = &skew + &schur_poly(gamma, nvars, gamma.size()).scale(c);
            }
            if skew.is_zero() {
                continue;
            }
            left = &left + &block_product(&[&t_power, &skew, &skew], total);
        }
    }

    let mut right = TruncatedMultiPoly::one(nv, total);
    for k in 1..=max_degree as u32 {
        let mut e = vec![0; nv];
        e[0] = k;
        right = &right * &TruncatedMultiPoly::geometric(nv, total, &e, &BigInt::one());
        for i in 0..nvars {
            for j in 0..nvars {
                let mut e = vec![0; nv];
                e[0] = k;
                e[1 + i] = 1;
                e[1 + nvars + j] = 1;
                right = &right * &TruncatedMultiPoly::geometric(nv, total, &e, &BigInt::one());
            }
        }
    }

    let keep = |e: &[u32]| e[0] as usize <= max_degree;
    (left.filter(keep), right.filter(keep))
}

/// Compares the two sides of the skew Cauchy identity coefficientwise. The
/// listed values are the sides at `x = y = 1`, by power of `t`.
pub fn skew_identity_check(max_degree: usize, nvars: usize) -> ComparisonReport {
    let (left, right) = skew_identity_sides(max_degree, nvars);
    let at_ones = |f: &TruncatedMultiPoly| -> Vec<String> {
        let mut by_t = vec![BigInt::zero(); max_degree + 1];
        for (e, c) in f.terms() {
            by_t[e[0] as usize] += c;
        }
        by_t.iter().map(|c| c.to_string()).collect()
    };
    let mut keys: Vec<&Vec<u32>> = left.terms().chain(right.terms()).map(|(e, _)| e).collect();
    keys.sort();
    keys.dedup();
    let first_discrepancy = keys.into_iter().find_map(|e| {
        let (a, b) = (left.coefficient(e), right.coefficient(e));
        (a != b).then(|| format!("exponent {e:?}: {a} vs {b}"))
    });
    ComparisonReport {
        name: format!("skew Cauchy series, {nvars}+{nvars} variables, to t^{max_degree}"),
        left_label: "skew Schur sum at x=y=1".into(),
        right_label: "product at x=y=1".into(),
        left: at_ones(&left),
        right: at_ones(&right),
        agree: first_discrepancy.is_none(),
        first_discrepancy,
        notes: vec![
            "product taken with the inner factor 1/(1 - t^k x_i y_j); the form with a k-independent inner factor does not converge".into(),
        ],
    }
}

/// The stable `GL(n,ℝ)` coefficients beside Stanley's square-root product as
/// printed. Only the combinatorial side is asserted: it must equal
/// `1, 1, 3, 5` through `t³`, and the even-row and even-column forms of the
/// sum must agree in every degree.
pub fn stanley_comparison(max_degree: usize) -> (ComparisonReport, CheckReport) {
    let combinatorial = stable_series(StableFamily::ClassGlR, max_degree);
    let product = named_series(NamedSeries::Stanley, max_degree).expect("product converges");

    let mut check = CheckReport::new(format!("stable GL(n,R) coefficients to t^{max_degree}"));
    let known = [1, 1, 3, 5];
    for (d, &v) in known.iter().enumerate().take(max_degree + 1) {
        let got = combinatorial.coeff(d);
        check.record(got == BigRational::from_integer(v.into()), || {
            format!("t^{d}: expected {v}, computed {got}")
        });
    }
    let columns = FamilyTag::GLmH.unbounded_formula();
    for d in 0..=max_degree {
        let (a, b) = (combinatorial.coeff(d), BigRational::from_integer(columns.evaluate(d).into()));
        check.record(a == b, || format!("t^{d}: even-row form {a}, even-column form {b}"));
    }

    let first_discrepancy = (0..=max_degree)
        .find(|&d| combinatorial.coeff(d) != product.coeff(d))
        .map(|d| {
            format!(
                "t^{d}: combinatorial {}, product {}",
                combinatorial.coeff(d),
                product.coeff(d)
            )
        });
    let comparison = ComparisonReport {
        name: format!("stable GL(n,R) series against the square-root product, to t^{max_degree}"),
        left_label: "combinatorial".into(),
        right_label: "product as printed".into(),
        left: combinatorial.coefficient_strings(),
        right: product.coefficient_strings(),
        agree: first_discrepancy.is_none(),
        first_discrepancy,
        notes: vec!["equality of the two sides is not asserted".into()],
    };
    (comparison, check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn g_series_examples() {
        assert_eq!(g_series(&Partition::empty(), &Partition::empty(), 4), TruncatedSeries::one(4));
        assert_eq!(g_series(&part![1], &part![1], 5), principal_spec(&part![1], 5));
        assert_eq!(g_series(&part![1, 1], &part![2], 7), principal_spec(&part![1, 1], 7));
        assert_eq!(g_series(&part![1], &part![2], 5), TruncatedSeries::zero(5));
    }

    #[test]
    fn branching_multiplicities() {
        let e = Partition::empty();
        for rho in partitions_up_to(5) {
            assert_eq!(stable_branching_multiplicity(&rho, &e, &e), 1);
        }
        assert_eq!(stable_branching_multiplicity(&part![1], &part![1], &part![1]), 1);
        assert_eq!(stable_branching_multiplicity(&part![2, 1], &part![1], &part![1]), 2);
        assert_eq!(stable_branching_multiplicity(&part![1], &part![2], &part![1, 1]), 0);
    }

    #[test]
    fn stan84_examples() {
        assert!(stan84_check(&Partition::empty(), &Partition::empty(), 6).passed);
        assert!(stan84_check(&part![1], &part![1], 4).passed);
        assert!(stan84_check(&part![1, 1], &part![2], 4).passed);
        assert!(!stan84_check(&part![1], &part![2], 4).passed);
    }

    #[test]
    fn h_and_f_chains() {
        assert!(h_sum_check(0).passed);
        assert!(h_sum_check(4).passed);
        assert!(ctheorem_check(4).passed);
        assert!(kostant_factorization_check(12).passed);
    }

    #[test]
    fn harmonics() {
        assert_eq!(harmonic_series(1, 1, 4).unwrap().to_string(), "1 1 1 1 1");
        assert_eq!(harmonic_series(1, 1, 0).unwrap(), TruncatedSeries::one(0));
        let h = named_series(NamedSeries::H, 4).unwrap();
        assert_eq!(harmonic_series(4, 4, 4).unwrap(), h);
    }

    #[test]
    fn skew_identity() {
        let (left, _) = skew_identity_sides(1, 2);
        // t¹: ρ = (1) with λ = ∅ and λ = (1)
        let t1 = left.filter(|e| e[0] == 1);
        assert_eq!(t1.coefficient(&[1, 0, 0, 0, 0]), BigInt::one());
        assert_eq!(t1.coefficient(&[1, 1, 0, 0, 1]), BigInt::one());
        assert_eq!(t1.len(), 5);
        assert!(skew_identity_check(0, 2).agree);
        assert!(skew_identity_check(2, 2).agree);
    }

    #[test]
    fn stanley_sides() {
        let (cmp, check) = stanley_comparison(3);
        assert!(check.passed);
        assert_eq!(cmp.left, vec!["1", "1", "3", "5"]);
        assert_eq!(cmp.right[1], "1/2");
        assert!(!cmp.agree);
    }
}
