use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Multivariate integer polynomial truncated at a total degree.
///
/// Every stored monomial has `num_vars` exponents and total degree at most
/// `max_degree`; products discard everything above the truncation, which is
/// exact below it. Terms are kept in lexicographic order of exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedMultiPoly {
    num_vars: usize,
    max_degree: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl TruncatedMultiPoly {
    pub fn zero(num_vars: usize, max_degree: usize) -> Self {
        TruncatedMultiPoly {
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize, max_degree: usize) -> Self {
        Self::monomial(num_vars, max_degree, vec![0; num_vars], BigInt::one())
    }

    /// `coeff · x^exps`, or zero if the monomial lies above the truncation.
    pub fn monomial(num_vars: usize, max_degree: usize, exps: Exponents, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), num_vars, "exponent vector length");
        let mut p = Self::zero(num_vars, max_degree);
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn variable(num_vars: usize, max_degree: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(num_vars, max_degree, e, BigInt::one())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// The lexicographically largest monomial.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Adds `coeff · x^exps` in place (ignored above the truncation).
    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.num_vars);
        if coeff.is_zero() || degree(&exps) > self.max_degree {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial viewed with a different truncation bound.
    pub fn truncate(&self, max_degree: usize) -> Self {
        TruncatedMultiPoly {
            num_vars: self.num_vars,
            max_degree,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| degree(e) <= max_degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        self.filter(|e| degree(e) == d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&[u32]) -> bool) -> Self {
        TruncatedMultiPoly {
            num_vars: self.num_vars,
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.num_vars, self.max_degree);
        }
        TruncatedMultiPoly {
            num_vars: self.num_vars,
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// `1/(1 − c·x^exps) = Σ_k (c·x^exps)^k` up to the truncation. The
    /// monomial must have positive degree.
    pub fn geometric(num_vars: usize, max_degree: usize, exps: &[u32], coeff: &BigInt) -> Self {
        let d = degree(exps);
        assert!(d > 0, "geometric series of a constant");
        let mut p = Self::zero(num_vars, max_degree);
        let mut power = BigInt::one();
        for k in 0..=max_degree / d {
            p.add_term(exps.iter().map(|&x| x * k as u32).collect(), power.clone());
            power *= coeff;
        }
        p
    }

    /// Substitutes `x_i ↦ t^{w_i}` and returns coefficients of `t⁰..t^D`.
    pub fn specialize(&self, weights: &[usize], max_t_degree: usize) -> Vec<BigInt> {
        assert_eq!(weights.len(), self.num_vars);
        let mut out = vec![BigInt::zero(); max_t_degree + 1];
        for (e, c) in &self.terms {
            let w: usize = e.iter().zip(weights).map(|(&x, &w)| x as usize * w).sum();
            if w <= max_t_degree {
                out[w] += c;
            }
        }
        out
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
    }
}

impl Add for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn add(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self.check_compatible(rhs);
        let mut out = self.truncate(self.max_degree.min(rhs.max_degree));
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn sub(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn neg(self) -> TruncatedMultiPoly {
        TruncatedMultiPoly {
            num_vars: self.num_vars,
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &TruncatedMultiPoly {
    type Output = TruncatedMultiPoly;

    fn mul(self, rhs: &TruncatedMultiPoly) -> TruncatedMultiPoly {
        self.check_compatible(rhs);
        let max_degree = self.max_degree.min(rhs.max_degree);
        let mut out = TruncatedMultiPoly::zero(self.num_vars, max_degree);
        let right: Vec<_> = rhs.terms.iter().map(|(e, c)| (e, c, degree(e))).collect();
        for (ea, ca) in &self.terms {
            let da = degree(ea);
            for &(eb, cb, db) in &right {
                if da + db > max_degree {
                    continue;
                }
                let e = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for TruncatedMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedMultiPoly(n={}, D={}) {{", self.num_vars, self.max_degree)?;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}·{e:?}")?;
        }
        f.write_str("}")
    }
}

/// Product of polynomials in disjoint variable blocks: the result lives in
/// the concatenated variables.
pub fn block_product(factors: &[&TruncatedMultiPoly], max_degree: usize) -> TruncatedMultiPoly {
    let num_vars = factors.iter().map(|p| p.num_vars).sum();
    let mut acc: Vec<(Exponents, BigInt)> = vec![(Vec::new(), BigInt::one())];
    for p in factors {
        let mut next = Vec::with_capacity(acc.len() * p.len());
        for (ea, ca) in &acc {
            for (eb, cb) in &p.terms {
                let mut e = ea.clone();
                e.extend_from_slice(eb);
                next.push((e, ca * cb));
            }
        }
        acc = next;
    }
    let mut out = TruncatedMultiPoly::zero(num_vars, max_degree);
    for (e, c) in acc {
        out.add_term(e, c);
    }
    out
}
