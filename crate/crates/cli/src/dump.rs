use std::collections::BTreeMap;
use std::fmt::Write as _;

use gcenter_core::window::RingReport;
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::CliError;

/// Output of `compute`. Scalars are written as strings so that rationals
/// and prime-field elements round-trip exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterDump {
    pub config: RunConfig,
    pub degrees: Vec<DegreeDump>,
    pub ring_report: RingReportDump,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDump {
    pub degree: i64,
    pub dimension: usize,
    pub basis: Vec<BasisDump>,
    /// Products `b_left * c_right` with `b_left` from this degree, in the
    /// basis of degree `degree + right_degree`.
    pub mult: Vec<ProductDump>,
}

/// A basis element: object label to coordinates in `Hom(X, Σ^t X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDump {
    pub components: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDump {
    pub left: usize,
    pub right_degree: i64,
    pub right: usize,
    pub product: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReportDump {
    #[serde(flatten)]
    pub presentation: RingReport,
    pub graded_commutative: bool,
    /// Stable categories only: multiplication by `t` is bijective between
    /// degrees `d` and `d + 2` in range.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_is_unit: Option<bool>,
}

impl CenterDump {
    /// Canonical JSON: object keys sorted, two-space indentation, trailing
    /// newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("dump is serializable");
        let mut s = serde_json::to_string_pretty(&value).expect("value is serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("not a center dump: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,dimension\n");
        for d in &self.degrees {
            writeln!(s, "{},{}", d.degree, d.dimension).expect("writing to a string");
        }
        s
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dimension).collect()
    }

    pub fn degree(&self, d: i64) -> Option<&DegreeDump> {
        self.degrees.iter().find(|x| x.degree == d)
    }
}
