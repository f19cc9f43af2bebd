//! Symmetric-group character theory: cycle types, centralizer orders,
//! Murnaghan–Nakayama character values and Kronecker coefficients.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::{partitions_of, Partition};

/// The cycle structure of a permutation, as a partition of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn shape(&self) -> &Partition {
        &self.0
    }

    /// Order of the centralizer: `z_ρ = ∏ i^{a_i} a_i!`.
    pub fn z(&self) -> BigInt {
        z_of(&self.0)
    }

    /// Number of permutations with this cycle type, `m!/z_ρ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.0.size()) / self.z()
    }

    /// All cycle types of `S_m`, in decreasing lexicographic order.
    pub fn all(m: usize) -> impl Iterator<Item = CycleType> {
        partitions_of(m, None, None).map(CycleType)
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> Self {
        CycleType(p)
    }
}

pub fn z_of(rho: &Partition) -> BigInt {
    rho.multiplicities()
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &a)| {
            acc * BigInt::from(i + 1).pow(a as u32) * factorial(a)
        })
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn character_cache() -> &'static Memo<(Partition, Partition), i64> {
    static CACHE: OnceLock<Memo<(Partition, Partition), i64>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

fn kronecker_cache() -> &'static Memo<(Partition, Partition, Partition), u64> {
    static CACHE: OnceLock<Memo<(Partition, Partition, Partition), u64>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

pub fn kronecker_cache_entries() -> Vec<((Partition, Partition, Partition), u64)> {
    kronecker_cache().entries()
}

pub fn preload_kronecker_cache(entries: impl IntoIterator<Item = ((Partition, Partition, Partition), u64)>) {
    for (k, v) in entries {
        kronecker_cache().insert(k, v);
    }
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
///
/// ```
/// use lrh::{character_value, part};
/// let values: Vec<i64> = [part![1, 1, 1], part![2, 1], part![3]]
///     .iter()
///     .map(|rho| character_value(&part![2, 1], &rho.clone().into()).unwrap())
///     .collect();
/// assert_eq!(values, vec![2, 0, -1]);
/// ```
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.0.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but the cycle type {} has size {}",
            lambda.size(),
            rho.0,
            rho.0.size()
        )));
    }
    Ok(mn_character(lambda, rho.0.parts()))
}

fn mn_character(lambda: &Partition, cycles: &[u32]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_unsorted(cycles.to_vec()));
    if let Some(v) = character_cache().get(&key) {
        return v;
    }
    let v = remove_border_strips(lambda, k as usize)
        .into_iter()
        .map(|(sign, shape)| sign * mn_character(&shape, rest))
        .sum();
    character_cache().insert(key, v);
    v
}

/// Every way to remove a border strip of size `k` from `λ`, with the sign
/// `(−1)^{height}` of the strip.
fn remove_border_strips(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let len = lambda.length();
    // beta numbers (first-column hook lengths), strictly decreasing
    let beta: Vec<usize> = (0..len)
        .map(|i| lambda.part(i) as usize + (len - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (len - 1 - j)) as u32)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_unsorted(parts)));
    }
    out
}

/// The Kronecker coefficient `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`.
///
/// Panics if the class sum is not a non-negative integer, which can only
/// happen through a defect in the character evaluation.
///
/// ```
/// use lrh::{kronecker_coefficient, part};
/// assert_eq!(kronecker_coefficient(&part![2, 1], &part![2, 1], &part![2, 1]).unwrap(), 1);
/// assert_eq!(kronecker_coefficient(&part![1, 1], &part![1, 1], &part![2]).unwrap(), 1);
/// ```
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let m = lambda.size();
    if mu.size() != m || nu.size() != m {
        return Err(Error::SizeMismatch(format!(
            "Kronecker coefficient needs equal sizes, got |{lambda}|={m}, |{mu}|={}, |{nu}|={}",
            mu.size(),
            nu.size()
        )));
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    Ok(kronecker_cache().get_or_compute(&key, || {
        let mut sum = BigRational::zero();
        for rho in CycleType::all(m) {
            let prod = mn_character(lambda, rho.0.parts())
                * mn_character(mu, rho.0.parts())
                * mn_character(nu, rho.0.parts());
            if prod != 0 {
                sum += BigRational::new(BigInt::from(prod), rho.z());
            }
        }
        assert!(sum.is_integer(), "Kronecker class sum is not integral: {sum}");
        assert!(!sum.is_negative(), "Kronecker class sum is negative: {sum}");
        sum.to_integer().to_u64().expect("Kronecker coefficient fits in u64")
    }))
}

/// `Σ_μ g_{λμμ}`: the multiplicity of the irreducible `λ` in the conjugation
/// representation of `S_m` on its group algebra.
pub fn conjugation_multiplicity(lambda: &Partition) -> u64 {
    partitions_of(lambda.size(), None, None)
        .map(|mu| kronecker_coefficient(lambda, &mu, &mu).expect("equal sizes"))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn chi(l: Partition, r: Partition) -> i64 {
        character_value(&l, &CycleType(r)).unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        for m in 0..=6 {
            for rho in CycleType::all(m) {
                let triv = if m == 0 { Partition::empty() } else { part![m] };
                assert_eq!(character_value(&triv, &rho).unwrap(), 1);
                let sign_rep = triv.conjugate();
                let cycles = rho.0.length();
                let want = if (m - cycles) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character_value(&sign_rep, &rho).unwrap(), want);
            }
        }
        assert_eq!(chi(part![1, 1, 1], part![3]), 1);
        assert_eq!(chi(part![1, 1, 1], part![2, 1]), -1);
    }

    #[test]
    fn s3_table() {
        assert_eq!(chi(part![2, 1], part![1, 1, 1]), 2);
        assert_eq!(chi(part![2, 1], part![2, 1]), 0);
        assert_eq!(chi(part![2, 1], part![3]), -1);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(character_value(&part![2], &CycleType(part![1])).is_err());
        assert!(kronecker_coefficient(&part![2], &part![1], &part![2]).is_err());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(z_of(&part![2, 1, 1]), BigInt::from(4));
        assert_eq!(z_of(&part![3, 3]), BigInt::from(18));
        assert_eq!(z_of(&Partition::empty()), BigInt::one());
        for m in 0..=8 {
            let total: BigInt = CycleType::all(m).map(|r| r.class_size()).sum();
            assert_eq!(total, factorial(m));
        }
    }

    #[test]
    fn orthogonality_up_to_6() {
        for m in 0..=6 {
            let shapes: Vec<_> = partitions_of(m, None, None).collect();
            for a in &shapes {
                for b in &shapes {
                    let mut s = BigRational::zero();
                    for rho in CycleType::all(m) {
                        let p = chi(a.clone(), rho.0.clone()) * chi(b.clone(), rho.0.clone());
                        s += BigRational::new(p.into(), rho.z());
                    }
                    let want = if a == b { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(s, want, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn sum_of_squared_degrees_up_to_7() {
        for m in 0..=7 {
            let id = if m == 0 { Partition::empty() } else { Partition::new(vec![1; m]).unwrap() };
            let s: BigInt = partitions_of(m, None, None)
                .map(|l| BigInt::from(chi(l, id.clone())).pow(2))
                .sum();
            assert_eq!(s, factorial(m));
        }
    }

    #[test]
    fn kronecker_values() {
        for m in 1..=5 {
            let triv = part![m];
            for l in partitions_of(m, None, None) {
                for mu in partitions_of(m, None, None) {
                    let g = kronecker_coefficient(&l, &mu, &triv).unwrap();
                    assert_eq!(g, u64::from(l == mu));
                }
            }
        }
        assert_eq!(kronecker_coefficient(&part![1, 1], &part![1, 1], &part![2]).unwrap(), 1);
        assert_eq!(kronecker_coefficient(&part![2, 1], &part![2, 1], &part![2, 1]).unwrap(), 1);
    }

    #[test]
    fn full_permutation_symmetry_up_to_5() {
        for m in 0..=5 {
            let shapes: Vec<_> = partitions_of(m, None, None).collect();
            for a in &shapes {
                for b in &shapes {
                    for c in &shapes {
                        let g = kronecker_coefficient(a, b, c).unwrap();
                        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                            assert_eq!(kronecker_coefficient(x, y, z).unwrap(), g);
                        }
                    }
                }
            }
        }
    }
}
