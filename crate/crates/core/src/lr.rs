//! Littlewood–Richardson coefficients `c^λ_{μν}` and the expansions built
//! from them: tensor products, two-block branching, and skew Schur functions.
//!
//! Coefficients are counted directly as LR tableaux: fillings of `λ/μ` with
//! content `ν`, weakly increasing along rows, strictly increasing down
//! columns, whose reverse reading word (rows top to bottom, each read right
//! to left) is a lattice word. The search runs cell by cell in reading order
//! and prunes on the lattice prefix condition.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{partitions_of, Partition};

/// A finite integer combination `Σ a_λ s_λ` of Schur functions. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · s_λ`, dropping the term if it cancels.
    pub fn add_term(&mut self, lambda: Partition, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keeps only the terms with `ℓ(λ) ≤ n`.
    pub fn restrict_length(&self, n: usize) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.length() <= n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigInt)>>(iter: I) -> Self {
        let mut out = SchurExpansion::new();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

type Triple = (Partition, Partition, Partition);

fn cache() -> &'static Memo<Triple, u64> {
    static CACHE: OnceLock<Memo<Triple, u64>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// Cached entries as `(λ, μ, ν, c)` with `μ ≤ ν` lexicographically.
pub fn cache_entries() -> Vec<(Partition, Partition, Partition, u64)> {
    cache()
        .entries()
        .into_iter()
        .map(|((l, m, n), c)| (l, m, n, c))
        .collect()
}

/// Seeds the cache, e.g. from an on-disk store. Entries are re-normalized.
pub fn preload_cache(entries: impl IntoIterator<Item = (Partition, Partition, Partition, u64)>) {
    for (l, m, n, c) in entries {
        cache().insert(cache_key(&l, &m, &n), c);
    }
}

pub fn clear_cache() {
    cache().clear();
}

fn cache_key(lambda: &Partition, mu: &Partition, nu: &Partition) -> Triple {
    if mu <= nu {
        (lambda.clone(), mu.clone(), nu.clone())
    } else {
        (lambda.clone(), nu.clone(), mu.clone())
    }
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`.
///
/// ```
/// use lrh::{lr_coefficient, part};
/// assert_eq!(lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
/// assert_eq!(lr_coefficient(&part![4, 2], &part![2, 1], &part![2, 1]), 1);
/// ```
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size()
        || !mu.is_contained_in(lambda)
        || !nu.is_contained_in(lambda)
    {
        return 0;
    }
    if mu.is_empty() || nu.is_empty() {
        return 1;
    }
    let key = cache_key(lambda, mu, nu);
    cache().get_or_compute(&key, || count_lr_tableaux(lambda, mu, nu))
}

/// Counts LR tableaux of shape `λ/μ` and content `ν`, without caching.
pub fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !mu.is_contained_in(lambda) {
        return 0;
    }
    let rows = lambda.length();
    let mut cells = Vec::with_capacity(nu.size());
    for r in 0..rows {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut search = LrSearch {
        lambda: lambda.parts(),
        mu,
        content: nu.parts(),
        grid: lambda.parts().iter().map(|&p| vec![0u32; p as usize]).collect(),
        used: vec![0; nu.length() + 1],
        cells: &cells,
    };
    search.count(0)
}

struct LrSearch<'a> {
    lambda: &'a [u32],
    mu: &'a Partition,
    content: &'a [u32],
    grid: Vec<Vec<u32>>,
    // used[v] = occurrences of letter v so far (1-based letters)
    used: Vec<u32>,
    cells: &'a [(usize, usize)],
}

impl LrSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let letters = self.content.len() as u32;
        let hi = if c + 1 < self.lambda[r] as usize {
            self.grid[r][c + 1]
        } else {
            letters
        }
        .min(r as u32 + 1);
        let lo = if r > 0 && c >= self.mu.part(r - 1) as usize {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let vi = v as usize;
            if self.used[vi] >= self.content[vi - 1] {
                continue;
            }
            if vi > 1 && self.used[vi] + 1 > self.used[vi - 1] {
                continue;
            }
            self.used[vi] += 1;
            self.grid[r][c] = v;
            total += self.count(idx + 1);
            self.used[vi] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// `s_μ · s_ν = Σ c^λ_{μν} s_λ`, keeping only `ℓ(λ) ≤ max_length` when given.
///
/// ```
/// use lrh::{product_expansion, part};
/// let e = product_expansion(&part![1], &part![1], None);
/// assert_eq!(e.len(), 2);
/// assert_eq!(product_expansion(&part![1], &part![1], Some(1)).len(), 1);
/// ```
pub fn product_expansion(mu: &Partition, nu: &Partition, max_length: Option<usize>) -> SchurExpansion {
    let size = mu.size() + nu.size();
    let mut len_cap = mu.length() + nu.length();
    if let Some(n) = max_length {
        len_cap = len_cap.min(n);
    }
    let part_cap = (mu.largest() + nu.largest()) as usize;
    let mut out = SchurExpansion::new();
    for lambda in partitions_of(size, Some(len_cap), Some(part_cap)) {
        if !mu.is_contained_in(&lambda) || !nu.is_contained_in(&lambda) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        if c > 0 {
            out.add_term(lambda, c);
        }
    }
    out
}

/// Restriction of the `GL_{p+q}` irreducible `λ` to `GL_p × GL_q`:
/// `{(μ, ν) ↦ c^λ_{μν}}` over `ℓ(μ) ≤ p`, `ℓ(ν) ≤ q`.
pub fn branching_expansion(
    lambda: &Partition,
    p: usize,
    q: usize,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    if lambda.length() > p + q {
        return Err(Error::TooLong {
            what: "ℓ(λ)",
            length: lambda.length(),
            bound: p + q,
        });
    }
    let n = lambda.size();
    let width = lambda.largest() as usize;
    let mut out = BTreeMap::new();
    for k in 0..=n {
        for mu in partitions_of(k, Some(p), Some(width)) {
            if !mu.is_contained_in(lambda) {
                continue;
            }
            for nu in partitions_of(n - k, Some(q), Some(width)) {
                let c = lr_coefficient(lambda, &mu, &nu);
                if c > 0 {
                    out.insert((mu.clone(), nu), c);
                }
            }
        }
    }
    Ok(out)
}

/// `s_{α/β} = Σ_γ c^α_{βγ} s_γ`; empty when `β ⊄ α`.
pub fn skew_expansion(alpha: &Partition, beta: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    if !beta.is_contained_in(alpha) {
        return out;
    }
    let width = alpha.largest() as usize;
    for gamma in partitions_of(alpha.size() - beta.size(), Some(alpha.length()), Some(width)) {
        let c = lr_coefficient(alpha, beta, &gamma);
        if c > 0 {
            out.add_term(gamma, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_up_to;

    fn expansion(terms: &[(Partition, i64)]) -> SchurExpansion {
        terms.iter().map(|(p, c)| (p.clone(), BigInt::from(*c))).collect()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&part![2], &part![1], &part![1]), 1);
        assert_eq!(lr_coefficient(&part![1, 1], &part![1], &part![1]), 1);
        assert_eq!(lr_coefficient(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
        assert_eq!(lr_coefficient(&part![4, 2], &part![2, 1], &part![2, 1]), 1);
        assert_eq!(count_lr_tableaux(&part![3, 2, 1], &part![2, 1], &part![2, 1]), 2);
    }

    #[test]
    fn empty_content() {
        for lambda in partitions_up_to(5) {
            for mu in partitions_up_to(5) {
                let want = u64::from(lambda == mu);
                assert_eq!(lr_coefficient(&lambda, &mu, &Partition::empty()), want);
                assert_eq!(count_lr_tableaux(&lambda, &mu, &Partition::empty()), want);
            }
        }
    }

    #[test]
    fn wrong_size_or_shape_is_zero() {
        assert_eq!(lr_coefficient(&part![3], &part![1], &part![1]), 0);
        assert_eq!(lr_coefficient(&part![1, 1], &part![2], &Partition::empty()), 0);
        assert_eq!(lr_coefficient(&part![2, 2], &part![3], &part![1]), 0);
    }

    #[test]
    fn products() {
        assert_eq!(
            product_expansion(&part![1], &part![1], None),
            expansion(&[(part![2], 1), (part![1, 1], 1)])
        );
        assert_eq!(
            product_expansion(&part![2], &part![2], None),
            expansion(&[(part![4], 1), (part![3, 1], 1), (part![2, 2], 1)])
        );
        assert_eq!(
            product_expansion(&part![1], &part![1], Some(1)),
            expansion(&[(part![2], 1)])
        );
        let sq = product_expansion(&part![2, 1], &part![2, 1], None);
        assert_eq!(sq.coefficient(&part![3, 2, 1]), BigInt::from(2));
        assert!(sq.all_positive());
        assert_eq!(sq.iter().filter(|(_, c)| **c == BigInt::from(2)).count(), 1);
    }

    #[test]
    fn branching() {
        let b = branching_expansion(&part![1], 1, 1).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[&(part![1], Partition::empty())], 1);
        assert_eq!(b[&(Partition::empty(), part![1])], 1);

        let b = branching_expansion(&part![2, 2], 1, 1).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[&(part![2], part![2])], 1);

        let b = branching_expansion(&part![2, 1], 1, 1).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b[&(part![2], part![1])], 1);
        assert_eq!(b[&(part![1], part![2])], 1);

        assert!(branching_expansion(&part![1, 1, 1], 1, 1).is_err());
    }

    #[test]
    fn skew() {
        assert_eq!(
            skew_expansion(&part![2, 1], &part![2, 1]),
            expansion(&[(Partition::empty(), 1)])
        );
        assert_eq!(
            skew_expansion(&part![2, 1], &part![1]),
            expansion(&[(part![2], 1), (part![1, 1], 1)])
        );
        assert!(skew_expansion(&part![1], &part![2]).is_empty());
    }

    #[test]
    fn argument_symmetry_up_to_size_8() {
        for n in 0..=8 {
            for lambda in partitions_of(n, None, None) {
                for k in 0..=n {
                    for mu in partitions_of(k, None, None) {
                        for nu in partitions_of(n - k, None, None) {
                            assert_eq!(
                                count_lr_tableaux(&lambda, &mu, &nu),
                                count_lr_tableaux(&lambda, &nu, &mu),
                                "{lambda} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn support_is_contained() {
        for n in 0..=6 {
            for lambda in partitions_of(n, None, None) {
                for k in 0..=n {
                    for mu in partitions_of(k, None, None) {
                        for nu in partitions_of(n - k, None, None) {
                            if lr_coefficient(&lambda, &mu, &nu) > 0 {
                                assert!(mu.is_contained_in(&lambda));
                                assert!(nu.is_contained_in(&lambda));
                            }
                        }
                    }
                }
            }
        }
    }
}
