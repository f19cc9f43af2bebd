//! Brute-force polynomial checks of the multiplicity-free decompositions and
//! of the coefficient engines.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{block_product, TruncatedMultiPoly};
use super::schur::{power_sum_product, schur_decompose, schur_decompose_blocks, schur_poly};
use crate::lr::{branching_expansion, product_expansion, SchurExpansion};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::report::CheckReport;
use crate::symgroup::{conjugation_multiplicity, kronecker_coefficient};

/// Compares two polynomials coefficientwise, naming each offending exponent.
pub fn compare_polys(name: &str, left: &TruncatedMultiPoly, right: &TruncatedMultiPoly) -> CheckReport {
    let mut report = CheckReport::new(name);
    let mut keys: Vec<&Vec<u32>> = left.terms().map(|(e, _)| e).collect();
    keys.extend(right.terms().map(|(e, _)| e));
    keys.sort();
    keys.dedup();
    for e in keys {
        let (a, b) = (left.coefficient(e), right.coefficient(e));
        report.record(a == b, || format!("exponent {e:?}: {a} vs {b}"));
    }
    if report.checked == 0 {
        report.checked = 1;
    }
    report
}

/// `∏_{i≤k, j≤m} 1/(1 − x_i y_j)` in `k + m` variables up to total degree `2D`.
pub fn cauchy_kernel(k: usize, m: usize, max_block_degree: usize) -> TruncatedMultiPoly {
    let nv = k + m;
    let dd = 2 * max_block_degree;
    let mut acc = TruncatedMultiPoly::one(nv, dd);
    for i in 0..k {
        for j in 0..m {
            let mut e = vec![0; nv];
            e[i] = 1;
            e[k + j] = 1;
            acc = &acc * &TruncatedMultiPoly::geometric(nv, dd, &e, &BigInt::one());
        }
    }
    acc
}

/// `Σ_{|λ|≤D, ℓ(λ)≤min(k,m)} s_λ(x̄) s_λ(ȳ)`.
pub fn cauchy_schur_side(k: usize, m: usize, max_block_degree: usize) -> TruncatedMultiPoly {
    let dd = 2 * max_block_degree;
    let mut acc = TruncatedMultiPoly::zero(k + m, dd);
    for d in 0..=max_block_degree {
        for lambda in partitions_of(d, Some(k.min(m)), None) {
            let sx = schur_poly(&lambda, k, d);
            let sy = schur_poly(&lambda, m, d);
            acc = &acc + &block_product(&[&sx, &sy], dd);
        }
    }
    acc
}

/// Cauchy identity for `k × m` matrices up to block degree `D`.
pub fn cauchy_check(k: usize, m: usize, max_block_degree: usize) -> CheckReport {
    compare_polys(
        &format!("cauchy(k={k}, m={m}, D={max_block_degree})"),
        &cauchy_kernel(k, m, max_block_degree),
        &cauchy_schur_side(k, m, max_block_degree),
    )
}

fn quadratic_kernel(n: usize, max_half_degree: usize, diagonal: bool) -> TruncatedMultiPoly {
    let dd = 2 * max_half_degree;
    let mut acc = TruncatedMultiPoly::one(n, dd);
    for i in 0..n {
        for j in i..n {
            if i == j && !diagonal {
                continue;
            }
            let mut e = vec![0; n];
            e[i] += 1;
            e[j] += 1;
            acc = &acc * &TruncatedMultiPoly::geometric(n, dd, &e, &BigInt::one());
        }
    }
    acc
}

/// Symmetric matrices: `∏_{i≤j} 1/(1 − x_i x_j) = Σ_{|λ|≤D, ℓ(λ)≤n} s_{2λ}`.
pub fn sym2_check(n: usize, max_degree: usize) -> CheckReport {
    let dd = 2 * max_degree;
    let mut rhs = TruncatedMultiPoly::zero(n, dd);
    for d in 0..=max_degree {
        for lambda in partitions_of(d, Some(n), None) {
            rhs = &rhs + &schur_poly(&lambda.double(), n, dd);
        }
    }
    compare_polys(
        &format!("sym2(n={n}, D={max_degree})"),
        &quadratic_kernel(n, max_degree, true),
        &rhs,
    )
}

/// Skew-symmetric matrices: `∏_{i<j} 1/(1 − x_i x_j) = Σ_{|λ|≤D, ℓ((2λ)′)≤n} s_{(2λ)′}`.
pub fn alt2_check(n: usize, max_degree: usize) -> CheckReport {
    let dd = 2 * max_degree;
    let mut rhs = TruncatedMultiPoly::zero(n, dd);
    for d in 0..=max_degree {
        for lambda in partitions_of(d, None, None) {
            let shape = lambda.double_conjugate();
            if shape.length() <= n {
                rhs = &rhs + &schur_poly(&shape, n, dd);
            }
        }
    }
    compare_polys(
        &format!("alt2(n={n}, D={max_degree})"),
        &quadratic_kernel(n, max_degree, false),
        &rhs,
    )
}

/// Expands `∏_{i,j,k} 1/(1 − x_i y_j z_k)` with `nv` variables per block to
/// tri-degree `(m, m, m)` and matches every `s_μ(x̄) s_ν(ȳ) s_λ(z̄)`
/// coefficient against the character-theoretic Kronecker coefficient.
pub fn triple_cauchy_g_check(m: usize, nv: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("triple-cauchy(m={m}, nv={nv})"));
    if nv < m {
        report.fail(format!("need nv ≥ m, got nv={nv}, m={m}"));
        return report;
    }
    let total = 3 * nv;
    let dd = 3 * m;
    let mut kernel = TruncatedMultiPoly::one(total, dd);
    for i in 0..nv {
        for j in 0..nv {
            for k in 0..nv {
                let mut e = vec![0; total];
                e[i] = 1;
                e[nv + j] = 1;
                e[2 * nv + k] = 1;
                kernel = &kernel * &TruncatedMultiPoly::geometric(total, dd, &e, &BigInt::one());
            }
        }
    }
    let decomposition = match schur_decompose_blocks(&kernel, &[nv, nv, nv], &[m, m, m]) {
        Ok(d) => d,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    let shapes: Vec<Partition> = partitions_of(m, None, None).collect();
    for mu in &shapes {
        for nu in &shapes {
            for lambda in &shapes {
                let key = vec![mu.clone(), nu.clone(), lambda.clone()];
                let from_kernel = decomposition.get(&key).cloned().unwrap_or_default();
                let g = kronecker_coefficient(lambda, mu, nu).expect("equal sizes");
                report.record(from_kernel == BigInt::from(g), || {
                    format!("g[{lambda}; {mu}, {nu}]: kernel {from_kernel} vs characters {g}")
                });
            }
        }
    }
    report
}

/// `Σ_{λ⊢m} (Σ_μ g_{λμμ}) s_λ = Σ_{μ⊢m} p_μ`, both sides in the Schur basis
/// in `m` variables.
pub fn conjugation_character_check(m: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("conjugation-character(m={m})"));
    let mut power_side = TruncatedMultiPoly::zero(m, m);
    for mu in partitions_of(m, None, None) {
        power_side = &power_side + &power_sum_product(&mu, m, m);
    }
    let expansion = match schur_decompose(&power_side, m) {
        Ok(e) => e,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    for lambda in partitions_of(m, None, None) {
        let lhs = BigInt::from(conjugation_multiplicity(&lambda));
        let rhs = expansion.coefficient(&lambda);
        report.record(lhs == rhs, || format!("λ={lambda}: Σ_μ g = {lhs}, power sums give {rhs}"));
    }
    report
}

/// `product_expansion(μ, ν, n)` against the Schur decomposition of the
/// polynomial product `s_μ · s_ν` in `n` variables.
pub fn lr_product_oracle_check(mu: &Partition, nu: &Partition, n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("lr-product({mu} × {nu}, n={n})"));
    let d = mu.size() + nu.size();
    let product = &schur_poly(mu, n, d) * &schur_poly(nu, n, d);
    // peeling in n variables sees exactly the shapes with ℓ(λ) ≤ n
    let oracle = schur_decompose_blocks(&product, &[n], &[d]).map(|blocks| {
        blocks
            .into_iter()
            .map(|(mut k, c)| (k.pop().expect("one block"), c))
            .collect::<SchurExpansion>()
    });
    match oracle {
        Ok(oracle) => {
            let engine = product_expansion(mu, nu, Some(n));
            report.record(oracle == engine, || format!("oracle {oracle:?} vs engine {engine:?}"));
        }
        Err(e) => report.fail(e.to_string()),
    }
    report
}

/// `branching_expansion(λ, p, q)` against the two-block split of
/// `s_λ(x₁..x_p, y₁..y_q)`.
pub fn two_block_split_check(lambda: &Partition, p: usize, q: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("two-block({lambda}, p={p}, q={q})"));
    let d = lambda.size();
    let s = schur_poly(lambda, p + q, d);
    let engine = match branching_expansion(lambda, p, q) {
        Ok(b) => b,
        Err(e) => {
            report.fail(e.to_string());
            return report;
        }
    };
    for k in 0..=d {
        let split = match schur_decompose_blocks(&s, &[p, q], &[k, d - k]) {
            Ok(split) => split,
            Err(e) => {
                report.fail(e.to_string());
                return report;
            }
        };
        for (shapes, c) in &split {
            let got = engine
                .get(&(shapes[0].clone(), shapes[1].clone()))
                .copied()
                .unwrap_or(0);
            report.record(*c == BigInt::from(got), || {
                format!("({}, {}): oracle {c} vs engine {got}", shapes[0], shapes[1])
            });
        }
        let engine_terms = engine.keys().filter(|(m, _)| m.size() == k).count();
        report.record(engine_terms == split.len(), || {
            format!("block degree {k}: engine has {engine_terms} terms, oracle {}", split.len())
        });
    }
    report
}

/// Principal specialization `x_i ↦ t^i` of `s_λ` in `n` variables.
pub fn specialized_schur(lambda: &Partition, n: usize, max_t_degree: usize) -> Vec<BigInt> {
    let weights: Vec<usize> = (1..=n).collect();
    schur_poly(lambda, n, max_t_degree).specialize(&weights, max_t_degree)
}

/// All pairs `(μ, ν)` with `|μ| + |ν| ≤ max_total`.
pub fn pairs_up_to(max_total: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for mu in partitions_up_to(max_total) {
        for nu in partitions_up_to(max_total - mu.size()) {
            out.push((mu.clone(), nu));
        }
    }
    out
}
