//! The machine-readable output record and its three renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::series::TruncatedSeries;

/// One computed series. Coefficients are exact strings (integers, or
/// fractions `a/b` for the square-root product).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub max_degree: usize,
    pub coefficients: Vec<String>,
    pub equation: String,
}

impl OutputRecord {
    pub fn new(
        family: impl Into<String>,
        params: impl IntoIterator<Item = (impl Into<String>, u64)>,
        series: &TruncatedSeries,
        equation: impl Into<String>,
    ) -> Self {
        OutputRecord {
            family: family.into(),
            params: params.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            max_degree: series.max_degree(),
            coefficients: series.coefficient_strings(),
            equation: equation.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// `degree,coefficient` rows under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,coefficient\n");
        for (d, c) in self.coefficients.iter().enumerate() {
            out.push_str(&format!("{d},{c}\n"));
        }
        out
    }

    /// Coefficients separated by single spaces.
    pub fn to_plain(&self) -> String {
        self.coefficients.join(" ")
    }
}
