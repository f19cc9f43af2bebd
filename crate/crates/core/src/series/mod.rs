//! Truncated univariate power series over exact rationals.

mod products;

pub use products::{named_series, principal_spec, product_over_k, Factor, NamedSeries};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `Σ_{d ≤ D} a_d t^d` with exact rational coefficients.
///
/// Arithmetic between series of different truncation degrees truncates to
/// the smaller one, so every result is exact through its own degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(max_degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); max_degree + 1],
        }
    }

    pub fn one(max_degree: usize) -> Self {
        Self::monomial(0, BigRational::one(), max_degree)
    }

    /// `c · t^k`, or zero if `k > D`.
    pub fn monomial(k: usize, c: BigRational, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        if k <= max_degree {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series from leading coefficients, zero-padded or cut to degree `D`.
    pub fn from_rationals(mut coeffs: Vec<BigRational>, max_degree: usize) -> Self {
        coeffs.resize(max_degree + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>, max_degree: usize) -> Self {
        Self::from_rationals(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
            max_degree,
        )
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, c: BigRational) {
        if d <= self.max_degree() {
            self.coeffs[d] = c;
        }
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_rationals(self.coeffs.clone(), max_degree.min(self.max_degree()))
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Position of the lowest nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, failing on the first fractional one.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotIntegral {
                        degree: d,
                        value: c.to_string(),
                    })
                }
            })
            .collect()
    }

    /// Integer coefficients that must also be non-negative.
    pub fn to_naturals(&self) -> Result<Vec<BigInt>> {
        let ints = self.to_integers()?;
        if let Some((d, c)) = ints.iter().enumerate().find(|(_, c)| c.is_negative()) {
            return Err(Error::Negative {
                degree: d,
                value: c.to_string(),
            });
        }
        Ok(ints)
    }

    /// Exact coefficient strings, `"14"` or `"1/2"`.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_string).collect()
    }

    /// `1/S`; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::BadConstantTerm {
                expected: "nonzero",
                found: "0".into(),
            });
        }
        let inv0 = a0.recip();
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        out[0] = inv0.clone();
        for n in 1..out.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal derivative, keeping the truncation degree (top coefficient 0).
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.max_degree());
        for d in 1..self.coeffs.len() {
            out.coeffs[d - 1] = &self.coeffs[d] * BigRational::from_integer(d.into());
        }
        out
    }

    /// Formal antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut out = Self::zero(self.max_degree());
        for d in 1..self.coeffs.len() {
            out.coeffs[d] = &self.coeffs[d - 1] / BigRational::from_integer(d.into());
        }
        out
    }

    /// `log S`; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        self.require_unit()?;
        let quotient = &self.derivative() * &self.reciprocal()?;
        Ok(quotient.integral())
    }

    /// `exp S`; requires constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm {
                expected: "0",
                found: rational_string(&self.coeffs[0]),
            });
        }
        // n e_n = Σ_{k≥1} k s_k e_{n−k}
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        out[0] = BigRational::one();
        for n in 1..out.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k] * BigRational::from_integer(k.into());
                }
            }
            out[n] = acc / BigRational::from_integer(n.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `S^a` for rational `a`; requires constant term 1.
    pub fn pow_rational(&self, a: &BigRational) -> Result<Self> {
        self.require_unit()?;
        // from P′S = aS′P: n p_n = Σ_{k≥1} (a·k − (n−k)) s_k p_{n−k}
        let mut out = vec![BigRational::zero(); self.coeffs.len()];
        out[0] = BigRational::one();
        for n in 1..out.len() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = a * BigRational::from_integer(k.into())
                    - BigRational::from_integer((n - k).into());
                acc += weight * &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc / BigRational::from_integer(n.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `S^k` for an integer exponent (negative powers via the reciprocal).
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.reciprocal()? } else { self.clone() };
        let mut out = Self::one(self.max_degree());
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    fn require_unit(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::BadConstantTerm {
                expected: "1",
                found: rational_string(&self.coeffs[0]),
            })
        }
    }
}

pub(crate) fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses `"14"`, `"-3"` or `"1/2"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = self.max_degree().min(rhs.max_degree());
        TruncatedSeries {
            coeffs: (0..=d).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = self.max_degree().min(rhs.max_degree());
        TruncatedSeries {
            coeffs: (0..=d).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let d = self.max_degree().min(rhs.max_degree());
        let mut out = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(d + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + O(t^{})", self.coefficient_strings().join(", "), self.max_degree() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.coefficient_strings().join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesWire {
    max_degree: usize,
    coefficients: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesWire {
            max_degree: self.max_degree(),
            coefficients: self.coefficient_strings(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = SeriesWire::deserialize(deserializer)?;
        if wire.coefficients.len() != wire.max_degree + 1 {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, found {}",
                wire.max_degree + 1,
                wire.coefficients.len()
            )));
        }
        let coeffs = wire
            .coefficients
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .into_iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn reciprocal_of_one_minus_t() {
        let s = TruncatedSeries::from_integers([1, -1], 6);
        assert_eq!(ints(&s.reciprocal().unwrap()), vec![1; 7]);
        assert!(TruncatedSeries::from_integers([0, 1], 3).reciprocal().is_err());
    }

    #[test]
    fn binomial_half_power() {
        let s = TruncatedSeries::from_integers([1, -1], 4);
        let p = s.pow_rational(&q(-1, 2)).unwrap();
        assert_eq!(p.coeff(1), q(1, 2));
        assert_eq!(p.coeff(2), q(3, 8));
        assert!(TruncatedSeries::from_integers([2, 1], 3).pow_rational(&q(1, 2)).is_err());
    }

    #[test]
    fn exp_log_round_trip() {
        let s = TruncatedSeries::from_integers([1, 1, 1], 5);
        let back = s.log().unwrap().exp().unwrap();
        assert_eq!(back, s);
        assert!(TruncatedSeries::from_integers([2, 1], 3).log().is_err());
        assert!(TruncatedSeries::from_integers([1, 1], 3).exp().is_err());
    }

    #[test]
    fn wire_format() {
        let s = TruncatedSeries::from_rationals(vec![q(1, 1), q(1, 2), q(14, 1)], 2);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"max_degree":2,"coefficients":["1","1/2","14"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"max_degree":1,"coefficients":["1"]}"#).is_err());
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"max_degree":0,"coefficients":["1/0"]}"#).is_err());
    }

    #[test]
    fn integrality_and_sign() {
        let s = TruncatedSeries::from_rationals(vec![q(1, 1), q(1, 2)], 1);
        assert!(!s.is_integral());
        assert!(matches!(s.to_integers(), Err(Error::NotIntegral { degree: 1, .. })));
        let s = TruncatedSeries::from_integers([1, -2], 1);
        assert!(matches!(s.to_naturals(), Err(Error::Negative { degree: 1, .. })));
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-4i64..5, 1i64..4), 8).prop_map(|v| {
            let mut c: Vec<BigRational> = v.into_iter().map(|(n, d)| q(n, d)).collect();
            c[0] = BigRational::one();
            TruncatedSeries::from_rationals(c, 8)
        })
    }

    proptest! {
        #[test]
        fn square_root_squares_back(s in unit_series()) {
            let half = s.pow_rational(&q(1, 2)).unwrap();
            prop_assert_eq!(half.pow_rational(&q(2, 1)).unwrap(), s.clone());
            prop_assert_eq!(&half * &half, s);
        }

        #[test]
        fn powers_add(s in unit_series(), a in -3i64..4, b in -3i64..4) {
            let pa = s.pow_rational(&q(a, 2)).unwrap();
            let pb = s.pow_rational(&q(b, 3)).unwrap();
            let pab = s.pow_rational(&(q(a, 2) + q(b, 3))).unwrap();
            prop_assert_eq!(&pa * &pb, pab);
        }

        #[test]
        fn pow_agrees_with_exp_log(s in unit_series(), a in -3i64..4) {
            let via_log = s.log().unwrap().scale(&q(a, 2)).exp().unwrap();
            prop_assert_eq!(s.pow_rational(&q(a, 2)).unwrap(), via_log);
        }

        #[test]
        fn truncation_stable(s in unit_series(), t in unit_series()) {
            prop_assert_eq!((&s * &t).truncate(4), &s.truncate(4) * &t.truncate(4));
            prop_assert_eq!(s.reciprocal().unwrap().truncate(4), s.truncate(4).reciprocal().unwrap());
        }
    }
}
