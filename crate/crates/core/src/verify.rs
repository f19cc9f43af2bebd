//! Named verification suites, as run by `lrh verify`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hilbert::{
    ctheorem_check, h_d, h_sum_check, harmonic_series, hilbert_series, kostant_factorization_check,
    skew_identity_check, stability_sweep, stable_family_equalities, stable_h_d, stable_series,
    stan84_check, stanley_comparison, FamilyTag, StableFamily, SymPairCase,
};
use crate::lr::lr_coefficient;
use crate::oracle::{
    alt2_check, cauchy_check, conjugation_character_check, lr_product_oracle_check, pairs_up_to,
    sym2_check, triple_cauchy_g_check, two_block_split_check,
};
use crate::partition::{partitions_of, partitions_up_to};
use crate::report::{CheckReport, ComparisonReport};
use crate::series::{named_series, product_over_k, Factor, NamedSeries, TruncatedSeries};
use crate::symgroup::kronecker_coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Lr,
    Kronecker,
    Cauchy,
    Cases,
    Stability,
    Stan84,
    Hsum,
    Ctheorem,
    Skew,
    Stanley,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Lr,
        Suite::Kronecker,
        Suite::Cauchy,
        Suite::Cases,
        Suite::Stability,
        Suite::Stan84,
        Suite::Hsum,
        Suite::Ctheorem,
        Suite::Skew,
        Suite::Stanley,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lr => "lr",
            Suite::Kronecker => "kronecker",
            Suite::Cauchy => "cauchy",
            Suite::Cases => "cases",
            Suite::Stability => "stability",
            Suite::Stan84 => "stan84",
            Suite::Hsum => "hsum",
            Suite::Ctheorem => "ctheorem",
            Suite::Skew => "skew",
            Suite::Stanley => "stanley",
        }
    }

    /// Degree used when none is given; every suite finishes well under a
    /// minute at its default.
    pub fn default_degree(&self) -> usize {
        match self {
            Suite::All => 0,
            Suite::Lr | Suite::Kronecker | Suite::Ctheorem => 6,
            Suite::Cauchy | Suite::Stanley => 3,
            Suite::Cases | Suite::Stability | Suite::Hsum => 4,
            Suite::Stan84 => 5,
            Suite::Skew => 2,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|t| t.as_str() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Asserted checks plus informational comparisons.
#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    pub checks: Vec<CheckReport>,
    pub comparisons: Vec<ComparisonReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn extend(&mut self, other: SuiteOutcome) {
        self.checks.extend(other.checks);
        self.comparisons.extend(other.comparisons);
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for c in &self.comparisons {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "{} checks, {failed} failed, {} comparison reports",
            self.checks.len(),
            self.comparisons.len()
        )
    }
}

/// Runs a suite. `max_degree` overrides the suite's default degree; for
/// `all` it is passed to every member suite.
pub fn run_suite(suite: Suite, max_degree: Option<usize>) -> SuiteOutcome {
    let d = max_degree.unwrap_or(suite.default_degree());
    let mut out = SuiteOutcome::default();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                out.extend(run_suite(s, max_degree));
            }
        }
        Suite::Lr => {
            out.checks.push(lr_oracle_sweep(d, d.max(1)));
            out.checks.push(transpose_symmetry_sweep(d + 2));
            out.checks.push(branching_sweep(d.min(6), 3));
        }
        Suite::Kronecker => {
            out.checks.push(kronecker_symmetry_sweep(d.min(5)));
            for m in 0..=d.min(3) {
                out.checks.push(triple_cauchy_g_check(m, m.max(1)));
            }
            for m in 1..=d {
                out.checks.push(conjugation_character_check(m));
            }
        }
        Suite::Cauchy => {
            out.checks.push(cauchy_check(2, 2, d));
            out.checks.push(sym2_check(3, d));
            out.checks.push(alt2_check(4, d));
        }
        Suite::Cases => out.checks.push(case_sanity(d)),
        Suite::Stability => {
            out.checks.push(stability_sweep(4, d));
            out.checks.push(stable_family_equalities(d));
        }
        Suite::Stan84 => {
            let mut report = CheckReport::new(format!("stable branching series, |μ| = |ν| <= 3, to t^{d}"));
            for k in 0..=3 {
                for mu in partitions_of(k, None, None) {
                    for nu in partitions_of(k, None, None) {
                        report.absorb(stan84_check(&mu, &nu, d));
                    }
                }
            }
            out.checks.push(report);
        }
        Suite::Hsum => {
            out.checks.push(h_sum_check(d));
            out.checks.push(kostant_factorization_check(3 * d));
            out.checks.push(class_count_check(d.min(3)));
            out.checks.push(harmonic_check(3, d + 2, d));
        }
        Suite::Ctheorem => out.checks.push(ctheorem_check(d)),
        Suite::Skew => out.comparisons.push(skew_identity_check(d, 2)),
        Suite::Stanley => {
            let (comparison, check) = stanley_comparison(d);
            out.comparisons.push(comparison);
            out.checks.push(check);
        }
    }
    out
}

/// [`lr_product_oracle_check`] for every pair with `|μ| + |ν| ≤ max_total`.
pub fn lr_oracle_sweep(max_total: usize, n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("LR products against the oracle, |μ|+|ν| <= {max_total}, n = {n}"));
    for (mu, nu) in pairs_up_to(max_total) {
        report.absorb(lr_product_oracle_check(&mu, &nu, n));
    }
    report
}

/// `c^γ_{αβ} = c^{γ′}_{α′β′}` for every triple with `|γ| ≤ max_size`.
pub fn transpose_symmetry_sweep(max_size: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("transpose symmetry, |γ| <= {max_size}"));
    for gamma in partitions_up_to(max_size) {
        let gamma_t = gamma.conjugate();
        for alpha in partitions_up_to(gamma.size()) {
            let alpha_t = alpha.conjugate();
            for beta in partitions_of(gamma.size() - alpha.size(), None, None) {
                let a = lr_coefficient(&gamma, &alpha, &beta);
                let b = lr_coefficient(&gamma_t, &alpha_t, &beta.conjugate());
                report.record(a == b, || format!("c[{gamma}; {alpha}, {beta}] = {a}, transposed {b}"));
            }
        }
    }
    report
}

/// [`two_block_split_check`] for `|λ| ≤ max_size` and `p, q ≤ max_block`.
pub fn branching_sweep(max_size: usize, max_block: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "two-block branching, |λ| <= {max_size}, p,q <= {max_block}"
    ));
    for p in 1..=max_block {
        for q in 1..=max_block {
            for lambda in partitions_up_to(max_size).filter(|l| l.length() <= p + q) {
                report.absorb(two_block_split_check(&lambda, p, q));
            }
        }
    }
    report
}

/// `g_{λμν}` is unchanged under all six permutations of its indices.
pub fn kronecker_symmetry_sweep(max_m: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("Kronecker permutation symmetry, m <= {max_m}"));
    for m in 0..=max_m {
        let shapes: Vec<_> = partitions_of(m, None, None).collect();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let g = |x, y, z| kronecker_coefficient(x, y, z).expect("equal sizes");
                    let base = g(a, b, c);
                    let perms = [g(a, c, b), g(b, a, c), g(b, c, a), g(c, a, b), g(c, b, a)];
                    report.record(perms.iter().all(|&v| v == base), || {
                        format!("g[{a}, {b}, {c}] = {base}, permutations give {perms:?}")
                    });
                }
            }
        }
    }
    report
}

/// Dimension of the weight-zero subspace of `S^d(𝔤𝔩₂)` under the diagonal
/// torus: `E₁₂` and `E₂₁` must pair up, the two diagonal units are free.
pub fn weight_zero_count(d: usize) -> u64 {
    (0..=d / 2).map(|c| (d - 2 * c + 1) as u64).sum()
}

/// Number of algebra generators in degree `k` of the stable invariants,
/// counted as trace words. Words in two letters are taken up to rotation
/// and the family's transpose involution: none for pairs of matrices under
/// `GL_n`, reversal with the letters `A, Aᵀ` swapped for one matrix under
/// `O_n`, and plain reversal for two antisymmetric matrices under `O_n`. In
/// the last case transposition also contributes the sign `(−1)^k`, so an odd
/// word equivalent to its own reversal has vanishing trace.
pub fn trace_word_generators(family: StableFamily, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let mask = (1u32 << k) - 1;
    let rotate = |w: u32| ((w << 1) | (w >> (k - 1))) & mask;
    let reverse = |w: u32| (0..k).fold(0, |acc, i| acc | ((w >> i & 1) << (k - 1 - i)));
    let rotations = |w: u32| {
        let mut out = Vec::with_capacity(k);
        let mut x = w;
        for _ in 0..k {
            out.push(x);
            x = rotate(x);
        }
        out
    };
    let mut seen = vec![false; 1 << k];
    let mut count = 0;
    for w in 0..=mask {
        if seen[w as usize] {
            continue;
        }
        let own = rotations(w);
        let image = match family {
            StableFamily::ClassGlC => w,
            StableFamily::ClassGlR => reverse(w) ^ mask,
            StableFamily::ClassOrthSymp => reverse(w),
        };
        let self_dual = own.contains(&image);
        for x in own.into_iter().chain(rotations(image)) {
            seen[x as usize] = true;
        }
        let vanishes = family == StableFamily::ClassOrthSymp && k % 2 == 1 && self_dual;
        if !vanishes {
            count += 1;
        }
    }
    count
}

/// `∏_k (1 − t^k)^{−g_k}` with `g_k` from [`trace_word_generators`]: the
/// stable Hilbert series of a free algebra on the trace words.
pub fn trace_word_series(family: StableFamily, max_degree: usize) -> TruncatedSeries {
    product_over_k(max_degree, |k| {
        let mut base = TruncatedSeries::one(max_degree);
        base.set_coeff(k, BigRational::from_integer((-1).into()));
        let g = trace_word_generators(family, k) as i64;
        Factor::Series(base.powi(-g).expect("unit constant term"))
    })
    .expect("factors are 1 + O(t^k)")
}

/// Main-theorem sums against independent counts, through degree `D`.
pub fn case_sanity(max_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("case formulas against independent counts, d <= {max_degree}"));
    let upq = hilbert_series(&SymPairCase::Upq { p: 1, q: 1 }, max_degree);
    let glr = hilbert_series(&SymPairCase::GLnR { n: 1 }, max_degree);
    let glc = hilbert_series(&SymPairCase::GLnC { n: 1 }, max_degree.max(6));
    let int = |v: u64| BigRational::from_integer(v.into());
    for d in 0..=max_degree {
        let w = weight_zero_count(d);
        report.record(upq.coeff(d) == int(w), || format!("U(1,1) d={d}: {} vs weight count {w}", upq.coeff(d)));
        report.record(glr.coeff(d) == int(1), || format!("GL(1,R) d={d}: {}", glr.coeff(d)));
    }
    for d in 0..=max_degree.max(6) {
        let expected = int(d as u64 + 1);
        report.record(glc.coeff(d) == expected, || format!("GL(1,C) d={d}: {}", glc.coeff(d)));
    }
    for family in StableFamily::ALL {
        let sums = stable_series(family, max_degree);
        let words = trace_word_series(family, max_degree);
        for d in 0..=max_degree {
            let (a, b) = (sums.coeff(d), words.coeff(d));
            report.record(a == b, || format!("stable {family} d={d}: {a} vs trace words {b}"));
        }
    }
    for tag in FamilyTag::ALL {
        for d in 0..=max_degree {
            let case = SymPairCase::with_all_params(tag, d.max(1));
            let (a, b) = (h_d(&case, d), stable_h_d(tag.stable_family(), d));
            report.record(a == b, || format!("{case} d={d}: {a}, stable value {b}"));
        }
    }
    report
}

/// Conjugacy classes of `GL(n, F₂)` by counting commuting pairs (Burnside):
/// `#classes = #{(g, h) : gh = hg} / |G|`. Matrices are bit-packed by row.
pub fn gl_f2_class_count(n: usize) -> u64 {
    assert!(n <= 3, "brute force is limited to n <= 3");
    if n == 0 {
        return 1;
    }
    let mul = |a: u32, b: u32| -> u32 {
        let mut out = 0;
        for i in 0..n {
            let row = (a >> (i * n)) & ((1 << n) - 1);
            let mut acc = 0;
            for k in 0..n {
                if row >> k & 1 == 1 {
                    acc ^= (b >> (k * n)) & ((1 << n) - 1);
                }
            }
            out |= acc << (i * n);
        }
        out
    };
    let identity: u32 = (0..n).map(|i| 1 << (i * n + i)).sum();
    let all: Vec<u32> = (0..1u32 << (n * n)).collect();
    let group: Vec<u32> = all
        .iter()
        .copied()
        .filter(|&g| all.iter().any(|&h| mul(g, h) == identity))
        .collect();
    let commuting = group
        .iter()
        .map(|&g| group.iter().filter(|&&h| mul(g, h) == mul(h, g)).count() as u64)
        .sum::<u64>();
    commuting / group.len() as u64
}

/// `∏ (1 − t^k)/(1 − 2t^k)` against brute-force class counts of `GL(n, F₂)`.
pub fn class_count_check(max_n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("GL(n,F2) class counts, n <= {max_n}"));
    let series = named_series(NamedSeries::GLq { q: 2 }, max_n).expect("converges");
    for n in 0..=max_n {
        let count = gl_f2_class_count(n);
        report.record(series.coeff(n) == BigRational::from_integer(count.into()), || {
            format!("n={n}: series {}, brute force {count}", series.coeff(n))
        });
    }
    report
}

/// Harmonic series for `p, q ≤ max_pq` through `t^D` are non-negative
/// integers, and with `p = q = stable_degree` they reproduce `H(t)`.
pub fn harmonic_check(max_pq: usize, max_degree: usize, stable_degree: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "harmonic series, p,q <= {max_pq} to t^{max_degree}; stable to t^{stable_degree}"
    ));
    for p in 1..=max_pq {
        for q in 1..=max_pq {
            let r = harmonic_series(p, q, max_degree);
            report.record(r.is_ok(), || format!("U({p},{q}): {}", r.unwrap_err()));
        }
    }
    let k = stable_degree.max(1);
    let stable = harmonic_series(k, k, stable_degree);
    let h = named_series(NamedSeries::H, stable_degree).expect("converges");
    match stable {
        Ok(s) => report.record(s == h, || format!("stable harmonics {s} vs H {h}")),
        Err(e) => report.fail(e.to_string()),
    }
    report
}
