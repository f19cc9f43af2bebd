//! Integer partitions, their statistics, bounded enumeration, and the signed
//! `(μ, ν)` embedding into weakly decreasing integer tuples.
//!
//! A [`Partition`] stores only its positive parts. Padding with zeros to a
//! fixed length `n` is a view ([`Partition::padded`]), never part of the value,
//! so equality and hashing are canonical.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the zero partition `∅`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// The zero partition.
    pub const fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts, ignoring trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing or a zero appears before a
    /// positive part.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that the caller guarantees are weakly
    /// decreasing and positive.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Sum of parts, `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The first (largest) part, 0 for `∅`.
    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// Transpose of the Young diagram: `(λ′)_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `2λ`: every part doubled.
    pub fn double(&self) -> Partition {
        Partition(self.0.iter().map(|&p| 2 * p).collect())
    }

    /// `(2λ)′`: the even-column partition built from `λ`.
    pub fn double_conjugate(&self) -> Partition {
        self.double().conjugate()
    }

    /// True if every part is even, i.e. `λ = 2δ` for some `δ`.
    pub fn is_even_rows(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// True if `λ = (2δ)′` for some `δ`.
    pub fn is_even_columns(&self) -> bool {
        self.conjugate().is_even_rows()
    }

    /// Halves every part of an even-row partition: the inverse of [`double`](Self::double).
    pub fn halve_rows(&self) -> Option<Partition> {
        self.is_even_rows()
            .then(|| Partition(self.0.iter().map(|&p| p / 2).collect()))
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The parts padded with zeros to length `n`; `None` if `ℓ(λ) > n`.
    pub fn padded(&self, n: usize) -> Option<Vec<u32>> {
        if self.length() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Hook lengths of every cell, in row-major order.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - 1 - j as u32;
                let leg = conj.0[j] - 1 - i as u32;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// `n(λ) = Σ (i−1)·λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i * p as usize)
            .sum()
    }

    /// Multiplicity of each part size: entry `k-1` counts parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest() as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self, Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the canonical text form `4,2,1`. The empty partition is spelled
/// `[]` or `none`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "[]" || s.eq_ignore_ascii_case("none") {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::NotAPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(Error::NotAPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// Shorthand used in tests and doc examples: `part![3, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p as u32),+]).expect("weakly decreasing parts")
    };
}

/// Streams the partitions of `d` with at most `max_length` parts, each at
/// most `max_part`, in decreasing lexicographic order.
pub fn partitions_of(d: usize, max_length: Option<usize>, max_part: Option<usize>) -> Partitions {
    Partitions::new(d, max_length, max_part)
}

/// Every partition of size at most `d`, grouped by size then in decreasing
/// lexicographic order.
pub fn partitions_up_to(d: usize) -> impl Iterator<Item = Partition> {
    (0..=d).flat_map(|k| partitions_of(k, None, None))
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    max_length: usize,
}

impl Partitions {
    fn new(d: usize, max_length: Option<usize>, max_part: Option<usize>) -> Self {
        let max_length = max_length.unwrap_or(d);
        let max_part = max_part.unwrap_or(d).min(d);
        let current = greedy_fill(d, max_part as u32, max_length);
        Partitions {
            current,
            max_length,
        }
    }
}

/// Lexicographically largest sequence of parts `≤ cap` summing to `total`
/// with at most `slots` parts.
fn greedy_fill(total: usize, cap: u32, slots: usize) -> Option<Vec<u32>> {
    if total == 0 {
        return Some(Vec::new());
    }
    if cap == 0 || total > cap as usize * slots {
        return None;
    }
    let mut out = Vec::new();
    let mut rest = total;
    while rest > 0 {
        let p = rest.min(cap as usize);
        out.push(p as u32);
        rest -= p;
    }
    Some(out)
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // successor: decrease the rightmost part that still admits a refill
        let mut tail: usize = 0;
        for i in (0..cur.len()).rev() {
            tail += cur[i] as usize;
            let new = cur[i] - 1;
            if new == 0 {
                continue;
            }
            let rest = tail - new as usize;
            if let Some(fill) = greedy_fill(rest, new, self.max_length - i - 1) {
                let mut succ = cur[..i].to_vec();
                succ.push(new);
                succ.extend(fill);
                self.current = Some(succ);
                break;
            }
        }
        Some(Partition::from_sorted(cur))
    }
}

/// A weakly decreasing `n`-tuple of integers: the `(μ, ν)` notation
/// `(μ₁, …, μ_p, 0, …, 0, −ν_q, …, −ν₁)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedTuple(Vec<i64>);

impl SignedTuple {
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotMonotone(format!("{entries:?}")));
        }
        Ok(SignedTuple(entries))
    }

    /// Embeds `(μ, ν)` into `n` entries. Requires `ℓ(μ) + ℓ(ν) ≤ n`.
    pub fn embed(mu: &Partition, nu: &Partition, n: usize) -> Result<Self, Error> {
        if mu.length() + nu.length() > n {
            return Err(Error::TooLong {
                what: "ℓ(μ)+ℓ(ν)",
                length: mu.length() + nu.length(),
                bound: n,
            });
        }
        let mut v: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
        v.resize(n - nu.length(), 0);
        v.extend(nu.parts().iter().rev().map(|&p| -(p as i64)));
        Ok(SignedTuple(v))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Splits into `(μ, ν)`: positive entries form `μ`, negated negative
    /// entries read from the right form `ν`.
    pub fn split(&self) -> (Partition, Partition) {
        let mu = self.0.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        let nu = self
            .0
            .iter()
            .rev()
            .filter(|&&x| x < 0)
            .map(|&x| (-x) as u32)
            .collect();
        (Partition::from_sorted(mu), Partition::from_sorted(nu))
    }
}

/// Validating form of [`SignedTuple::split`] for raw input.
pub fn split_signed_tuple(entries: &[i64]) -> Result<(Partition, Partition), Error> {
    Ok(SignedTuple::new(entries.to_vec())?.split())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Partition numbers by Euler's pentagonal recurrence.
    fn partition_numbers(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p
    }

    #[test]
    fn size_and_length() {
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(part![3, 1].size(), 4);
        assert_eq!(part![2, 2, 1].size(), 5);
        assert_eq!(part![2, 2, 1].length(), 3);
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![2, 2].conjugate(), part![2, 2]);
        assert_eq!(part![4, 2, 1].conjugate().length(), 4);
    }

    #[test]
    fn doubling() {
        assert_eq!(part![2, 1].double(), part![4, 2]);
        assert_eq!(part![1].double_conjugate(), part![1, 1]);
        assert_eq!(Partition::empty().double(), Partition::empty());
        assert_eq!(Partition::empty().double_conjugate(), Partition::empty());
        assert!(part![3, 1].double().is_even_rows());
        assert!(part![3, 1].double_conjugate().is_even_columns());
        assert!(!part![2, 1].is_even_columns());
        assert_eq!(part![4, 2].halve_rows(), Some(part![2, 1]));
        assert_eq!(part![3].halve_rows(), None);
    }

    #[test]
    fn enumeration_small() {
        let all: Vec<_> = partitions_of(0, None, None).collect();
        assert_eq!(all, vec![Partition::empty()]);
        let four: Vec<_> = partitions_of(4, None, None).collect();
        assert_eq!(
            four,
            vec![part![4], part![3, 1], part![2, 2], part![2, 1, 1], part![1, 1, 1, 1]]
        );
        let three: Vec<_> = partitions_of(3, Some(2), None).collect();
        assert_eq!(three, vec![part![3], part![2, 1]]);
        let capped: Vec<_> = partitions_of(4, None, Some(2)).collect();
        assert_eq!(capped, vec![part![2, 2], part![2, 1, 1], part![1, 1, 1, 1]]);
        assert_eq!(partitions_of(5, Some(1), Some(4)).count(), 0);
        assert_eq!(partitions_of(3, Some(0), None).count(), 0);
    }

    #[test]
    fn enumeration_counts_match_pentagonal_recurrence() {
        let p = partition_numbers(20);
        for d in 0..=20 {
            assert_eq!(partitions_of(d, None, None).count() as i64, p[d], "d={d}");
        }
    }

    #[test]
    fn bounded_enumeration_is_the_filtered_full_list() {
        for d in 0..=9 {
            for l in 0..=d + 1 {
                for m in 0..=d + 1 {
                    let fast: Vec<_> = partitions_of(d, Some(l), Some(m)).collect();
                    let slow: Vec<_> = partitions_of(d, None, None)
                        .filter(|p| p.length() <= l && p.largest() as usize <= m)
                        .collect();
                    assert_eq!(fast, slow, "d={d} l={l} m={m}");
                }
            }
        }
    }

    #[test]
    fn signed_tuples() {
        assert_eq!(
            split_signed_tuple(&[2, 1, 0, 0, -3]).unwrap(),
            (part![2, 1], part![3])
        );
        assert_eq!(
            split_signed_tuple(&[0, 0, 0]).unwrap(),
            (Partition::empty(), Partition::empty())
        );
        assert_eq!(
            split_signed_tuple(&[1, 1, -1, -1]).unwrap(),
            (part![1, 1], part![1, 1])
        );
        assert!(split_signed_tuple(&[0, 1]).is_err());
        let w = SignedTuple::embed(&part![2, 1], &part![3], 5).unwrap();
        assert_eq!(w.entries(), &[2, 1, 0, 0, -3]);
        assert!(SignedTuple::embed(&part![2, 1], &part![3, 1], 3).is_err());
    }

    #[test]
    fn hooks_and_n() {
        assert_eq!(part![1].hooks(), vec![1]);
        assert_eq!(part![1].n_stat(), 0);
        let mut h = part![2, 1].hooks();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(part![2, 1].n_stat(), 1);
        assert_eq!(part![3].hooks(), vec![3, 2, 1]);
        assert_eq!(part![3].n_stat(), 0);
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(part![4, 2, 1].to_string(), "4,2,1");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), part![4, 2, 1]);
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("none".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&part![3, 1]).unwrap(), "[3,1]");
        let p: Partition = serde_json::from_str("[2,2,1]").unwrap();
        assert_eq!(p, part![2, 2, 1]);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
