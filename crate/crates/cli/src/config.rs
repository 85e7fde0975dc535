use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::ValueEnum;
use gcenter_core::FieldTag;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    /// Perfect complexes over `k[x]/(x^n)` (only `n = 2`).
    KbprojSerial,
    /// Nilpotent representations of the cyclic quiver with `n` vertices.
    Tube,
    /// Representations of the linear quiver with `n` vertices.
    Line,
    /// Stable module category of `k[x]/(x^n)`.
    StableSerial,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// Inclusive degree range written `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub from: i64,
    pub to: i64,
}

impl Degrees {
    pub fn range(self) -> RangeInclusive<i64> {
        self.from..=self.to
    }
}

impl FromStr for Degrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let from = a.trim().parse().map_err(|_| format!("bad lower degree {a:?}"))?;
        let to = b.trim().parse().map_err(|_| format!("bad upper degree {b:?}"))?;
        if from > to {
            return Err(format!("empty degree range {from}..{to}"));
        }
        Ok(Degrees { from, to })
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.from, self.to)
    }
}

/// Everything that determines a computation; echoed verbatim in the dump.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub category: Category,
    pub n: usize,
    pub field: String,
    /// Size bound of the window; `None` for the stable category, which is
    /// finite.
    pub window: Option<usize>,
    pub degrees: Degrees,
    pub signed: bool,
}

impl RunConfig {
    /// Fills in the default window for the category.
    pub fn new(
        category: Category,
        n: usize,
        field: &str,
        window: Option<usize>,
        degrees: Degrees,
        signed: bool,
    ) -> Self {
        let window = match category {
            Category::StableSerial => None,
            Category::KbprojSerial => window.or(Some(8)),
            Category::Tube => window.or(Some(10)),
            Category::Line => window.or(Some(n)),
        };
        RunConfig { category, n, field: field.to_ascii_lowercase(), window, degrees, signed }
    }

    pub fn field_tag(&self) -> Result<FieldTag, CliError> {
        self.field.parse().map_err(|e: gcenter_core::Error| CliError::Usage(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.field_tag()?;
        let usage = |m: String| Err(CliError::Usage(m));
        match self.category {
            Category::KbprojSerial if self.n != 2 => usage(format!("kbproj-serial requires n = 2, got n = {}", self.n)),
            Category::StableSerial if self.n < 2 => usage(format!("stable-serial requires n >= 2, got n = {}", self.n)),
            Category::Tube | Category::Line if self.n < 1 => {
                usage(format!("{} requires n >= 1, got n = 0", self.category))
            }
            _ if self.window == Some(0) => usage("window must be at least 1".into()),
            _ => Ok(()),
        }
    }
}
