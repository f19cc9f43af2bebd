//! The ten classical symmetric pairs and the Littlewood–Richardson sums that
//! give `h_d = dim S^d(𝔤)^K` for each of them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lr::product_expansion;
use crate::partition::{partitions_of, Partition};
use crate::series::TruncatedSeries;

/// A symmetric pair, named by its real form, with the integers that define it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymPairCase {
    /// `U(p,q)`: `(𝔤𝔩_{p+q}, GL_p × GL_q)`.
    Upq { p: usize, q: usize },
    /// `GL(n,ℝ)`: `(𝔤𝔩_n, O_n)`.
    GLnR { n: usize },
    /// `GL(n,ℂ)`: `(𝔤𝔩_n ⊕ 𝔤𝔩_n, GL_n)`.
    GLnC { n: usize },
    /// `GL(m,ℍ)`: `(𝔤𝔩_{2m}, Sp_{2m})`.
    GLmH { m: usize },
    /// `SO*(2m)`: `(𝔰𝔬_{2m}, GL_m)`.
    SOstar2m { m: usize },
    /// `Sp(m,ℝ)`: `(𝔰𝔭_{2m}, GL_m)`.
    SpmR { m: usize },
    /// `O(n,ℂ)`: `(𝔰𝔬_n ⊕ 𝔰𝔬_n, O_n)`.
    OnC { n: usize },
    /// `Sp(m,ℂ)`: `(𝔰𝔭_{2m} ⊕ 𝔰𝔭_{2m}, Sp_{2m})`.
    SpmC { m: usize },
    /// `O(p,q)`: `(𝔰𝔬_{p+q}, O_p × O_q)`.
    Opq { p: usize, q: usize },
    /// `Sp(p,q)`: `(𝔰𝔭_{2p+2q}, Sp_{2p} × Sp_{2q})`.
    Sppq { p: usize, q: usize },
}

/// Command-line tag of a family, without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Upq,
    GLnR,
    GLnC,
    GLmH,
    SOstar2m,
    SpmR,
    OnC,
    SpmC,
    Opq,
    Sppq,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::Upq,
        FamilyTag::GLnR,
        FamilyTag::GLnC,
        FamilyTag::GLmH,
        FamilyTag::SOstar2m,
        FamilyTag::SpmR,
        FamilyTag::OnC,
        FamilyTag::SpmC,
        FamilyTag::Opq,
        FamilyTag::Sppq,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyTag::Upq => "upq",
            FamilyTag::GLnR => "glnr",
            FamilyTag::GLnC => "glnc",
            FamilyTag::GLmH => "glmh",
            FamilyTag::SOstar2m => "sostar",
            FamilyTag::SpmR => "spmr",
            FamilyTag::OnC => "onc",
            FamilyTag::SpmC => "spmc",
            FamilyTag::Opq => "opq",
            FamilyTag::Sppq => "sppq",
        }
    }

    /// Names of the parameters the family takes.
    pub fn parameter_names(&self) -> &'static [&'static str] {
        match self {
            FamilyTag::Upq | FamilyTag::Opq | FamilyTag::Sppq => &["p", "q"],
            FamilyTag::GLnR | FamilyTag::GLnC | FamilyTag::OnC => &["n"],
            FamilyTag::GLmH | FamilyTag::SOstar2m | FamilyTag::SpmR | FamilyTag::SpmC => &["m"],
        }
    }

    pub fn stable_family(&self) -> StableFamily {
        match self {
            FamilyTag::GLnR | FamilyTag::SpmR | FamilyTag::GLmH | FamilyTag::SOstar2m => {
                StableFamily::ClassGlR
            }
            FamilyTag::OnC | FamilyTag::Sppq | FamilyTag::SpmC | FamilyTag::Opq => {
                StableFamily::ClassOrthSymp
            }
            FamilyTag::GLnC | FamilyTag::Upq => StableFamily::ClassGlC,
        }
    }

    /// The defining sum in plain ASCII, as written to output records.
    pub fn equation(&self) -> &'static str {
        match self {
            FamilyTag::Upq => "sum c(l;m,n)^2, len(l)<=p+q, len(m)<=p, len(n)<=q",
            FamilyTag::GLnR => "sum c(2l;m,m), len(l)<=n, len(m)<=n",
            FamilyTag::GLnC => "sum c(l;m,n)^2, len(l),len(m),len(n)<=n",
            FamilyTag::GLmH => "sum c((2l)';m,m), len((2l)')<=2m, len(m)<=2m",
            FamilyTag::SOstar2m => "sum c((2l)';m,m), len((2l)')<=2m, len(m)<=m",
            FamilyTag::SpmR => "sum c(2l;m,m), len(l)<=2m, len(m)<=m",
            FamilyTag::OnC => "sum c(2l;(2m)',(2n)'), len(l),len((2m)'),len((2n)')<=n",
            FamilyTag::SpmC => "sum c((2l)';2m,2n), len((2l)'),len(m),len(n)<=2m",
            FamilyTag::Opq => "sum c((2l)';2m,2n), len((2l)')<=p+q, len(m)<=p, len(n)<=q",
            FamilyTag::Sppq => "sum c(2l;(2m)',(2n)'), len(l)<=2(p+q), len((2m)')<=2p, len((2n)')<=2q",
        }
    }

    /// [`FamilyTag::equation`] without its length bounds.
    pub fn unbounded_equation(&self) -> &'static str {
        self.equation().split(", ").next().expect("non-empty")
    }

    /// The family's sum with every length bound dropped.
    pub fn unbounded_formula(&self) -> Formula {
        match self {
            FamilyTag::Upq | FamilyTag::GLnC => Formula::SquaredLr {
                outer: None,
                left: None,
                right: None,
            },
            FamilyTag::GLnR | FamilyTag::SpmR => Formula::SelfPaired {
                outer_shape: Shape::Rows,
                outer: None,
                content: None,
            },
            FamilyTag::GLmH | FamilyTag::SOstar2m => Formula::SelfPaired {
                outer_shape: Shape::Columns,
                outer: None,
                content: None,
            },
            FamilyTag::OnC | FamilyTag::Sppq => Formula::Paired {
                outer_shape: Shape::Rows,
                content_shape: Shape::Columns,
                outer: None,
                left: None,
                right: None,
            },
            FamilyTag::SpmC | FamilyTag::Opq => Formula::Paired {
                outer_shape: Shape::Columns,
                content_shape: Shape::Rows,
                outer: None,
                left: None,
                right: None,
            },
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The three classes of stable limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StableFamily {
    /// `GL(n,ℝ)`, `Sp(m,ℝ)`, `GL(m,ℍ)`, `SO*(2m)`.
    ClassGlR,
    /// `O(n,ℂ)`, `Sp(p,q)`, `Sp(m,ℂ)`, `O(p,q)`.
    ClassOrthSymp,
    /// `GL(n,ℂ)`, `U(p,q)`.
    ClassGlC,
}

impl StableFamily {
    pub const ALL: [StableFamily; 3] = [
        StableFamily::ClassGlR,
        StableFamily::ClassOrthSymp,
        StableFamily::ClassGlC,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StableFamily::ClassGlR => "gl-r",
            StableFamily::ClassOrthSymp => "orthsymp",
            StableFamily::ClassGlC => "gl-c",
        }
    }

    pub fn members(&self) -> &'static [FamilyTag] {
        match self {
            StableFamily::ClassGlR => &[
                FamilyTag::GLnR,
                FamilyTag::GLmH,
                FamilyTag::SOstar2m,
                FamilyTag::SpmR,
            ],
            StableFamily::ClassOrthSymp => &[
                FamilyTag::OnC,
                FamilyTag::SpmC,
                FamilyTag::Opq,
                FamilyTag::Sppq,
            ],
            StableFamily::ClassGlC => &[FamilyTag::Upq, FamilyTag::GLnC],
        }
    }

    /// The member whose sum defines the stable value.
    pub fn representative(&self) -> FamilyTag {
        match self {
            StableFamily::ClassGlR => FamilyTag::GLnR,
            StableFamily::ClassOrthSymp => FamilyTag::OnC,
            StableFamily::ClassGlC => FamilyTag::GLnC,
        }
    }
}

impl fmt::Display for StableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StableFamily::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Which doubled shape an index runs over: `2δ` (even rows) or `(2δ)′`
/// (even columns).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Rows,
    Columns,
}

impl Shape {
    pub fn apply(&self, delta: &Partition) -> Partition {
        match self {
            Shape::Rows => delta.double(),
            Shape::Columns => delta.double_conjugate(),
        }
    }

    pub fn admits(&self, lambda: &Partition) -> bool {
        match self {
            Shape::Rows => lambda.is_even_rows(),
            Shape::Columns => lambda.is_even_columns(),
        }
    }

    /// Bounds on `δ` that are equivalent to `ℓ(shape(δ)) ≤ bound`, as
    /// `(max_length, max_part)` for [`partitions_of`].
    fn delta_bounds(&self, bound: Option<usize>) -> (Option<usize>, Option<usize>) {
        match (self, bound) {
            (_, None) => (None, None),
            (Shape::Rows, Some(b)) => (Some(b), None),
            (Shape::Columns, Some(b)) => (None, Some(b / 2)),
        }
    }
}

/// One of the three sum shapes behind the ten cases. Every bound is a cap on
/// the length of the partition as it appears in the LR coefficient (after
/// doubling or transposing); `None` drops the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `Σ (c^λ_{μν})²` over `|λ| = |μ| + |ν| = d`.
    SquaredLr {
        outer: Option<usize>,
        left: Option<usize>,
        right: Option<usize>,
    },
    /// `Σ c^{shape(λ)}_{μμ}` over `|λ| = |μ| = d`.
    SelfPaired {
        outer_shape: Shape,
        outer: Option<usize>,
        content: Option<usize>,
    },
    /// `Σ c^{outer(λ)}_{content(μ), content(ν)}` over `|λ| = |μ| + |ν| = d`.
    Paired {
        outer_shape: Shape,
        content_shape: Shape,
        outer: Option<usize>,
        left: Option<usize>,
        right: Option<usize>,
    },
}

impl Formula {
    /// Evaluates the sum in degree `d`.
    pub fn evaluate(&self, d: usize) -> u64 {
        match *self {
            Formula::SquaredLr { outer, left, right } => {
                let mut total = 0;
                for k in 0..=d {
                    for mu in partitions_of(k, left, None) {
                        for nu in partitions_of(d - k, right, None) {
                            total += product_expansion(&mu, &nu, outer)
                                .iter()
                                .map(|(_, c)| {
                                    let c = u64::try_from(c).expect("LR coefficient fits in u64");
                                    c * c
                                })
                                .sum::<u64>();
                        }
                    }
                }
                total
            }
            Formula::SelfPaired {
                outer_shape,
                outer,
                content,
            } => {
                let mut total = 0;
                for mu in partitions_of(d, content, None) {
                    total += shaped_sum(&product_expansion(&mu, &mu, outer), outer_shape);
                }
                total
            }
            Formula::Paired {
                outer_shape,
                content_shape,
                outer,
                left,
                right,
            } => {
                let (left_len, left_part) = content_shape.delta_bounds(left);
                let (right_len, right_part) = content_shape.delta_bounds(right);
                let mut total = 0;
                for k in 0..=d {
                    for mu in partitions_of(k, left_len, left_part) {
                        let a = content_shape.apply(&mu);
                        for nu in partitions_of(d - k, right_len, right_part) {
                            let b = content_shape.apply(&nu);
                            total += shaped_sum(&product_expansion(&a, &b, outer), outer_shape);
                        }
                    }
                }
                total
            }
        }
    }

    /// The same sum with every length bound dropped.
    pub fn unbounded(&self) -> Formula {
        match *self {
            Formula::SquaredLr { .. } => Formula::SquaredLr {
                outer: None,
                left: None,
                right: None,
            },
            Formula::SelfPaired { outer_shape, .. } => Formula::SelfPaired {
                outer_shape,
                outer: None,
                content: None,
            },
            Formula::Paired {
                outer_shape,
                content_shape,
                ..
            } => Formula::Paired {
                outer_shape,
                content_shape,
                outer: None,
                left: None,
                right: None,
            },
        }
    }
}

fn shaped_sum(expansion: &crate::lr::SchurExpansion, shape: Shape) -> u64 {
    expansion
        .iter()
        .filter(|(lambda, _)| shape.admits(lambda))
        .map(|(_, c)| u64::try_from(c).expect("LR coefficient fits in u64"))
        .sum()
}

impl SymPairCase {
    /// Builds a case from its tag and the command-line parameters. Exactly the
    /// parameters the family takes must be present, and all must be positive.
    pub fn from_tag(
        tag: FamilyTag,
        p: Option<usize>,
        q: Option<usize>,
        n: Option<usize>,
        m: Option<usize>,
    ) -> Result<Self> {
        let supplied = [("p", p), ("q", q), ("n", n), ("m", m)];
        let wanted = tag.parameter_names();
        for (name, value) in supplied {
            match (wanted.contains(&name), value) {
                (true, None) => {
                    return Err(Error::InvalidParameters(format!("{tag} needs --{name}")))
                }
                (false, Some(_)) => {
                    return Err(Error::InvalidParameters(format!("{tag} does not take --{name}")))
                }
                (_, Some(0)) => {
                    return Err(Error::InvalidParameters(format!("--{name} must be positive")))
                }
                _ => {}
            }
        }
        let (p, q, n, m) = (p.unwrap_or(0), q.unwrap_or(0), n.unwrap_or(0), m.unwrap_or(0));
        Ok(match tag {
            FamilyTag::Upq => SymPairCase::Upq { p, q },
            FamilyTag::GLnR => SymPairCase::GLnR { n },
            FamilyTag::GLnC => SymPairCase::GLnC { n },
            FamilyTag::GLmH => SymPairCase::GLmH { m },
            FamilyTag::SOstar2m => SymPairCase::SOstar2m { m },
            FamilyTag::SpmR => SymPairCase::SpmR { m },
            FamilyTag::OnC => SymPairCase::OnC { n },
            FamilyTag::SpmC => SymPairCase::SpmC { m },
            FamilyTag::Opq => SymPairCase::Opq { p, q },
            FamilyTag::Sppq => SymPairCase::Sppq { p, q },
        })
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            SymPairCase::Upq { .. } => FamilyTag::Upq,
            SymPairCase::GLnR { .. } => FamilyTag::GLnR,
            SymPairCase::GLnC { .. } => FamilyTag::GLnC,
            SymPairCase::GLmH { .. } => FamilyTag::GLmH,
            SymPairCase::SOstar2m { .. } => FamilyTag::SOstar2m,
            SymPairCase::SpmR { .. } => FamilyTag::SpmR,
            SymPairCase::OnC { .. } => FamilyTag::OnC,
            SymPairCase::SpmC { .. } => FamilyTag::SpmC,
            SymPairCase::Opq { .. } => FamilyTag::Opq,
            SymPairCase::Sppq { .. } => FamilyTag::Sppq,
        }
    }

    pub fn stable_family(&self) -> StableFamily {
        self.tag().stable_family()
    }

    /// Parameters by name, in a fixed order.
    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        let pairs: Vec<(&'static str, usize)> = match *self {
            SymPairCase::Upq { p, q } | SymPairCase::Opq { p, q } | SymPairCase::Sppq { p, q } => {
                vec![("p", p), ("q", q)]
            }
            SymPairCase::GLnR { n } | SymPairCase::GLnC { n } | SymPairCase::OnC { n } => {
                vec![("n", n)]
            }
            SymPairCase::GLmH { m }
            | SymPairCase::SOstar2m { m }
            | SymPairCase::SpmR { m }
            | SymPairCase::SpmC { m } => vec![("m", m)],
        };
        pairs.into_iter().collect()
    }

    /// The length-bounded LR sum that computes `h_d` for this case.
    pub fn formula(&self) -> Formula {
        use Shape::{Columns, Rows};
        match *self {
            SymPairCase::Upq { p, q } => Formula::SquaredLr {
                outer: Some(p + q),
                left: Some(p),
                right: Some(q),
            },
            SymPairCase::GLnR { n } => Formula::SelfPaired {
                outer_shape: Rows,
                outer: Some(n),
                content: Some(n),
            },
            SymPairCase::GLnC { n } => Formula::SquaredLr {
                outer: Some(n),
                left: Some(n),
                right: Some(n),
            },
            SymPairCase::GLmH { m } => Formula::SelfPaired {
                outer_shape: Columns,
                outer: Some(2 * m),
                content: Some(2 * m),
            },
            SymPairCase::SOstar2m { m } => Formula::SelfPaired {
                outer_shape: Columns,
                outer: Some(2 * m),
                content: Some(m),
            },
            SymPairCase::SpmR { m } => Formula::SelfPaired {
                outer_shape: Rows,
                outer: Some(2 * m),
                content: Some(m),
            },
            SymPairCase::OnC { n } => Formula::Paired {
                outer_shape: Rows,
                content_shape: Columns,
                outer: Some(n),
                left: Some(n),
                right: Some(n),
            },
            SymPairCase::SpmC { m } => Formula::Paired {
                outer_shape: Columns,
                content_shape: Rows,
                outer: Some(2 * m),
                left: Some(2 * m),
                right: Some(2 * m),
            },
            SymPairCase::Opq { p, q } => Formula::Paired {
                outer_shape: Columns,
                content_shape: Rows,
                outer: Some(p + q),
                left: Some(p),
                right: Some(q),
            },
            SymPairCase::Sppq { p, q } => Formula::Paired {
                outer_shape: Rows,
                content_shape: Columns,
                outer: Some(2 * (p + q)),
                left: Some(2 * p),
                right: Some(2 * q),
            },
        }
    }

    /// The same family with every parameter set to `k`.
    pub fn with_all_params(tag: FamilyTag, k: usize) -> SymPairCase {
        let wanted = tag.parameter_names();
        let pick = |name: &str| wanted.contains(&name).then_some(k);
        SymPairCase::from_tag(tag, pick("p"), pick("q"), pick("n"), pick("m"))
            .expect("positive parameters")
    }
}

impl fmt::Display for SymPairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymPairCase::Upq { p, q } => write!(f, "U({p},{q})"),
            SymPairCase::GLnR { n } => write!(f, "GL({n},R)"),
            SymPairCase::GLnC { n } => write!(f, "GL({n},C)"),
            SymPairCase::GLmH { m } => write!(f, "GL({m},H)"),
            SymPairCase::SOstar2m { m } => write!(f, "SO*({})", 2 * m),
            SymPairCase::SpmR { m } => write!(f, "Sp({m},R)"),
            SymPairCase::OnC { n } => write!(f, "O({n},C)"),
            SymPairCase::SpmC { m } => write!(f, "Sp({m},C)"),
            SymPairCase::Opq { p, q } => write!(f, "O({p},{q})"),
            SymPairCase::Sppq { p, q } => write!(f, "Sp({p},{q})"),
        }
    }
}

/// `h_d(𝔤, K)` for the case.
///
/// ```
/// use lrh::{h_d, SymPairCase};
/// assert_eq!(h_d(&SymPairCase::Upq { p: 1, q: 1 }, 2), 4);
/// assert_eq!(h_d(&SymPairCase::GLnR { n: 2 }, 2), 3);
/// ```
pub fn h_d(case: &SymPairCase, d: usize) -> u64 {
    case.formula().evaluate(d)
}

/// `h_0, …, h_D` as an integer-valued series. Degrees are evaluated in
/// parallel; the result does not depend on scheduling.
pub fn hilbert_series(case: &SymPairCase, max_degree: usize) -> TruncatedSeries {
    let formula = case.formula();
    let values: Vec<u64> = (0..=max_degree)
        .into_par_iter()
        .map(|d| formula.evaluate(d))
        .collect();
    TruncatedSeries::from_integers(values, max_degree)
}

/// The stable value `lim h_d` for a class: the representative's sum with all
/// length bounds dropped, which equals the bounded sum once the parameters
/// reach `d` because `ℓ(λ) ≤ |λ|`.
pub fn stable_h_d(family: StableFamily, d: usize) -> u64 {
    family.representative().unbounded_formula().evaluate(d)
}

/// Stable coefficients `0..=D` of a class.
pub fn stable_series(family: StableFamily, max_degree: usize) -> TruncatedSeries {
    let values: Vec<u64> = (0..=max_degree)
        .into_par_iter()
        .map(|d| stable_h_d(family, d))
        .collect();
    TruncatedSeries::from_integers(values, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(case: SymPairCase, d: usize) -> Vec<u64> {
        (0..=d).map(|k| h_d(&case, k)).collect()
    }

    #[test]
    fn degree_zero_is_one_everywhere() {
        for tag in FamilyTag::ALL {
            for k in 1..=3 {
                assert_eq!(h_d(&SymPairCase::with_all_params(tag, k), 0), 1, "{tag}");
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(h_d(&SymPairCase::Upq { p: 1, q: 1 }, 2), 4);
        assert_eq!(series(SymPairCase::Upq { p: 1, q: 1 }, 4), vec![1, 2, 4, 6, 9]);
        assert_eq!(series(SymPairCase::GLnR { n: 1 }, 5), vec![1; 6]);
        assert_eq!(h_d(&SymPairCase::GLnR { n: 2 }, 2), 3);
        assert_eq!(series(SymPairCase::GLnC { n: 1 }, 3), vec![1, 2, 3, 4]);
        assert_eq!(h_d(&SymPairCase::OnC { n: 4 }, 1), 0);
        assert_eq!(h_d(&SymPairCase::OnC { n: 4 }, 2), 3);
    }

    #[test]
    fn stable_values() {
        let glc: Vec<u64> = (0..=4).map(|d| stable_h_d(StableFamily::ClassGlC, d)).collect();
        assert_eq!(glc, vec![1, 2, 6, 14, 34]);
        let glr: Vec<u64> = (0..=3).map(|d| stable_h_d(StableFamily::ClassGlR, d)).collect();
        assert_eq!(glr, vec![1, 1, 3, 5]);
        let os: Vec<u64> = (0..=3).map(|d| stable_h_d(StableFamily::ClassOrthSymp, d)).collect();
        assert_eq!(os, vec![1, 0, 3, 0]);
    }

    #[test]
    fn parameter_validation() {
        assert!(SymPairCase::from_tag(FamilyTag::GLnR, Some(1), None, Some(2), None).is_err());
        assert!(SymPairCase::from_tag(FamilyTag::Upq, Some(1), None, None, None).is_err());
        assert!(SymPairCase::from_tag(FamilyTag::Upq, Some(0), Some(1), None, None).is_err());
        assert_eq!(
            SymPairCase::from_tag(FamilyTag::Upq, Some(2), Some(3), None, None).unwrap(),
            SymPairCase::Upq { p: 2, q: 3 }
        );
        assert_eq!("sostar".parse::<FamilyTag>().unwrap(), FamilyTag::SOstar2m);
        assert!("sl2".parse::<FamilyTag>().is_err());
        assert_eq!("gl-c".parse::<StableFamily>().unwrap(), StableFamily::ClassGlC);
    }

    #[test]
    fn every_tag_in_exactly_one_class() {
        for tag in FamilyTag::ALL {
            let owners: Vec<_> = StableFamily::ALL
                .into_iter()
                .filter(|f| f.members().contains(&tag))
                .collect();
            assert_eq!(owners, vec![tag.stable_family()]);
        }
    }

    #[test]
    fn monotone_in_parameters() {
        for tag in FamilyTag::ALL {
            for d in 0..=4 {
                let names = tag.parameter_names();
                let grid: Vec<Vec<usize>> = if names.len() == 2 {
                    (1..=4).flat_map(|a| (1..=4).map(move |b| vec![a, b])).collect()
                } else {
                    (1..=4).map(|a| vec![a]).collect()
                };
                let make = |v: &[usize]| {
                    let get = |name: &str| names.iter().position(|n| *n == name).map(|i| v[i]);
                    SymPairCase::from_tag(tag, get("p"), get("q"), get("n"), get("m")).unwrap()
                };
                for v in &grid {
                    let base = h_d(&make(v), d);
                    for i in 0..v.len() {
                        if v[i] == 4 {
                            continue;
                        }
                        let mut w = v.clone();
                        w[i] += 1;
                        assert!(h_d(&make(&w), d) >= base, "{tag} {v:?} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn saturates_at_stable_value() {
        for tag in FamilyTag::ALL {
            for d in 0..=5 {
                let case = SymPairCase::with_all_params(tag, d.max(1));
                assert_eq!(h_d(&case, d), stable_h_d(tag.stable_family(), d), "{case} d={d}");
            }
        }
    }

    #[test]
    fn parallel_series_matches_sequential() {
        let case = SymPairCase::Opq { p: 2, q: 3 };
        let par = hilbert_series(&case, 5);
        let seq = TruncatedSeries::from_integers(series(case, 5), 5);
        assert_eq!(par, seq);
    }
}
