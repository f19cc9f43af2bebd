use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The `k`-th factor of an infinite product.
#[derive(Clone, Debug)]
pub enum Factor {
    Series(TruncatedSeries),
    /// `base^exponent` for a rational exponent; `base` must have constant term 1.
    Power {
        base: TruncatedSeries,
        exponent: BigRational,
    },
}

fn is_one_plus_order(s: &TruncatedSeries, k: usize) -> bool {
    s.coeff(0).is_one() && (1..k.min(s.max_degree() + 1)).all(|d| s.coeff(d).is_zero())
}

/// `∏_{k=1}^{D} factor(k)` truncated at `D`. Each factor must be
/// `1 + O(t^k)`, so the factors beyond `D` contribute nothing.
pub fn product_over_k(
    max_degree: usize,
    mut factor: impl FnMut(usize) -> Factor,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(max_degree);
    for k in 1..=max_degree {
        let f = match factor(k) {
            Factor::Series(s) => s.truncate(max_degree),
            Factor::Power { base, exponent } => {
                if !is_one_plus_order(&base, k) {
                    return Err(Error::NonConvergentFactor { k });
                }
                base.truncate(max_degree).pow_rational(&exponent)?
            }
        };
        if f.max_degree() < max_degree || !is_one_plus_order(&f, k) {
            return Err(Error::NonConvergentFactor { k });
        }
        acc = &acc * &f;
    }
    Ok(acc)
}

/// `1 − c·t^k` at degree `D`.
fn one_minus(c: i64, k: usize, max_degree: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(max_degree);
    if k <= max_degree {
        s.set_coeff(k, BigRational::from_integer((-c).into()));
    }
    s
}

/// `(1 − t^k) / (1 − q·t^k)`.
fn class_count_factor(q: i64, k: usize, max_degree: usize) -> Factor {
    let den = one_minus(q, k, max_degree).reciprocal().expect("unit constant term");
    Factor::Series(&one_minus(1, k, max_degree) * &den)
}

/// The closed-form products that appear alongside the Hilbert series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    /// `I(t) = ∏_{k≥1} 1/(1 − t^k)`, the stable invariant-polynomial series.
    I,
    /// `I_n(t) = ∏_{k=1}^{n} 1/(1 − t^k)`: generators in degrees `1..n`.
    In { n: usize },
    /// `F(t) = ∏_{k≥1} 1/(1 − 2t^k)`.
    F,
    /// `H(t) = ∏_{k≥1} (1 − t^k)/(1 − 2t^k)`.
    H,
    /// `∏_{k≥1} (1 − t^k)/(1 − q t^k)`: conjugacy classes of `GL(n, F_q)`.
    GLq { q: u32 },
    /// `∏_i (1 − t^i)^{−1/2} · ∏_j (1 − t^{2j})^{−2^{j−2}}`, evaluated as printed.
    Stanley,
}

impl NamedSeries {
    /// Resolves a name from the command line, with its required parameter.
    pub fn parse(name: &str, q: Option<u32>, n: Option<usize>) -> Result<Self> {
        let missing = |what: &str| Error::InvalidParameters(format!("{name} needs --{what}"));
        match name.to_ascii_lowercase().as_str() {
            "i" => Ok(NamedSeries::I),
            "in" => Ok(NamedSeries::In { n: n.ok_or_else(|| missing("n"))? }),
            "f" => Ok(NamedSeries::F),
            "h" => Ok(NamedSeries::H),
            "glq" => Ok(NamedSeries::GLq { q: q.ok_or_else(|| missing("q"))? }),
            "stanley" => Ok(NamedSeries::Stanley),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedSeries::I => "I",
            NamedSeries::In { .. } => "In",
            NamedSeries::F => "F",
            NamedSeries::H => "H",
            NamedSeries::GLq { .. } => "glq",
            NamedSeries::Stanley => "stanley",
        }
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSeries::In { n } => write!(f, "In(n={n})"),
            NamedSeries::GLq { q } => write!(f, "glq(q={q})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    /// Parameter-free names only; use [`NamedSeries::parse`] for `In`/`glq`.
    fn from_str(s: &str) -> Result<Self> {
        NamedSeries::parse(s, None, None)
    }
}

/// Expands a named product through `t^D`.
///
/// ```
/// use lrh::{named_series, NamedSeries};
/// let f = named_series(NamedSeries::F, 4).unwrap();
/// assert_eq!(f.to_string(), "1 2 6 14 34");
/// ```
pub fn named_series(name: NamedSeries, max_degree: usize) -> Result<TruncatedSeries> {
    let d = max_degree;
    match name {
        NamedSeries::I => product_over_k(d, |k| {
            Factor::Series(one_minus(1, k, d).reciprocal().expect("unit"))
        }),
        NamedSeries::In { n } => {
            if n == 0 {
                return Err(Error::InvalidParameters("I_n needs n ≥ 1".into()));
            }
            product_over_k(d, |k| {
                if k <= n {
                    Factor::Series(one_minus(1, k, d).reciprocal().expect("unit"))
                } else {
                    Factor::Series(TruncatedSeries::one(d))
                }
            })
        }
        NamedSeries::F => product_over_k(d, |k| {
            Factor::Series(one_minus(2, k, d).reciprocal().expect("unit"))
        }),
        NamedSeries::H => product_over_k(d, |k| class_count_factor(2, k, d)),
        NamedSeries::GLq { q } => {
            if q < 2 {
                return Err(Error::InvalidParameters(format!("glq needs q ≥ 2, got {q}")));
            }
            product_over_k(d, |k| class_count_factor(q as i64, k, d))
        }
        NamedSeries::Stanley => {
            let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
            let first = product_over_k(d, |i| Factor::Power {
                base: one_minus(1, i, d),
                exponent: half.clone(),
            })?;
            // (1 − t^{2j})^{−2^{j−2}}: exponent −1/2 at j = 1
            let second = product_over_k(d, |k| {
                if k % 2 == 1 {
                    return Factor::Series(TruncatedSeries::one(d));
                }
                let j = (k / 2) as u32;
                let magnitude = if j == 1 {
                    BigRational::new(BigInt::one(), BigInt::from(2))
                } else {
                    BigRational::from_integer(BigInt::from(2).pow(j - 2))
                };
                Factor::Power {
                    base: one_minus(1, k, d),
                    exponent: -magnitude,
                }
            })?;
            Ok(&first * &second)
        }
    }
}

/// `s_λ(t, t², t³, …) = t^{|λ| + n(λ)} ∏_{u ∈ λ} 1/(1 − t^{h(u)})`.
///
/// ```
/// use lrh::{principal_spec, part};
/// assert_eq!(principal_spec(&part![2], 6).to_string(), "0 0 1 1 2 2 3");
/// ```
pub fn principal_spec(lambda: &Partition, max_degree: usize) -> TruncatedSeries {
    let shift = lambda.size() + lambda.n_stat();
    let mut s = TruncatedSeries::monomial(shift, BigRational::one(), max_degree);
    if shift > max_degree {
        return s;
    }
    for h in lambda.hooks() {
        let f = one_minus(1, h as usize, max_degree).reciprocal().expect("unit");
        s = &s * &f;
    }
    s
}
