use lrh::lr::count_lr_tableaux;
use lrh::symgroup::factorial;
use lrh::{
    kronecker_coefficient, lr_coefficient, partitions_of, product_expansion, skew_expansion,
    Partition,
};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|d| {
        let all: Vec<Partition> = partitions_of(d, None, None).collect();
        proptest::sample::select(all)
    })
}

/// Number of standard tableaux, by the hook length formula.
fn f(lambda: &Partition) -> BigInt {
    let hooks: BigInt = lambda.hooks().iter().map(|&h| BigInt::from(h)).product();
    factorial(lambda.size()) / hooks
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lr_is_symmetric_in_mu_nu(lambda in partition(9), mu in partition(5), nu in partition(5)) {
        prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu), lr_coefficient(&lambda, &nu, &mu));
        prop_assert_eq!(count_lr_tableaux(&lambda, &mu, &nu), lr_coefficient(&lambda, &mu, &nu));
    }

    #[test]
    fn lr_is_transpose_invariant(lambda in partition(9), mu in partition(5)) {
        for nu in partitions_of(lambda.size().saturating_sub(mu.size()), None, None) {
            prop_assert_eq!(
                lr_coefficient(&lambda, &mu, &nu),
                lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())
            );
        }
    }

    // f^μ f^ν C(|μ|+|ν|, |μ|) = Σ_λ c^λ_{μν} f^λ: dimensions of induced modules
    #[test]
    fn products_preserve_dimension(mu in partition(5), nu in partition(5)) {
        let e = product_expansion(&mu, &nu, None);
        let total: BigInt = e.iter().map(|(lambda, c)| c * f(lambda)).sum();
        prop_assert_eq!(total, f(&mu) * f(&nu) * binomial(mu.size() + nu.size(), mu.size()));
        prop_assert!(e.all_positive());
    }

    #[test]
    fn skew_by_empty_is_identity(lambda in partition(8)) {
        let e = skew_expansion(&lambda, &Partition::empty());
        prop_assert_eq!(e.len(), 1);
        prop_assert_eq!(e.coefficient(&lambda), BigInt::one());
    }

    #[test]
    fn kronecker_with_trivial_and_sign(pair in (1usize..=6).prop_flat_map(|m| {
        let all: Vec<Partition> = partitions_of(m, None, None).collect();
        (proptest::sample::select(all.clone()), proptest::sample::select(all))
    })) {
        let (lambda, mu) = pair;
        let m = lambda.size();
        let trivial = Partition::new(vec![m as u32]).unwrap();
        let sign = trivial.conjugate();
        prop_assert_eq!(kronecker_coefficient(&lambda, &mu, &trivial).unwrap(), u64::from(lambda == mu));
        prop_assert_eq!(kronecker_coefficient(&lambda, &mu, &sign).unwrap(), u64::from(lambda == mu.conjugate()));
    }
}
