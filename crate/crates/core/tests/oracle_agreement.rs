use lrh::oracle::{lr_product_oracle_check, specialized_schur, two_block_split_check};
use lrh::{part, partitions_up_to, principal_spec, product_expansion};
use num_bigint::BigInt;

#[test]
fn principal_specialization_matches_tableau_sum() {
    let d = 8;
    for lambda in partitions_up_to(5) {
        // variables beyond t^d cannot reach degree d
        let brute = specialized_schur(&lambda, d, d);
        let closed = principal_spec(&lambda, d).to_integers().unwrap();
        assert_eq!(brute, closed, "{lambda}");
    }
}

#[test]
fn products_in_few_variables_drop_long_shapes() {
    for n in 1..=3 {
        for mu in partitions_up_to(3) {
            for nu in partitions_up_to(3) {
                let r = lr_product_oracle_check(&mu, &nu, n);
                assert!(r.passed, "{r}");
            }
        }
    }
}

#[test]
fn branching_into_unequal_blocks() {
    for lambda in partitions_up_to(5) {
        for (p, q) in [(1, 2), (2, 1), (1, 4), (3, 2)] {
            if lambda.length() <= p + q {
                let r = two_block_split_check(&lambda, p, q);
                assert!(r.passed, "{r}");
            }
        }
    }
}

#[test]
fn classical_products() {
    // s₂₁ · s₂₁ in full
    let e = product_expansion(&part![2, 1], &part![2, 1], None);
    let expected = [
        (part![4, 2], 1),
        (part![4, 1, 1], 1),
        (part![3, 3], 1),
        (part![3, 2, 1], 2),
        (part![3, 1, 1, 1], 1),
        (part![2, 2, 2], 1),
        (part![2, 2, 1, 1], 1),
    ];
    assert_eq!(e.len(), expected.len());
    for (lambda, c) in expected {
        assert_eq!(e.coefficient(&lambda), BigInt::from(c), "{lambda}");
    }
}
