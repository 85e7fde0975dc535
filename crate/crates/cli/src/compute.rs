use std::collections::BTreeMap;

use gcenter_core::kbproj::{build_window_kbproj, match_presentation};
use gcenter_core::reps::{build_window_tube, match_tube_presentation, QuiverSpec};
use gcenter_core::stable::stable_center;
use gcenter_core::window::{CenterRing, GradedCategory, RingReport, WindowCategory};
use gcenter_core::{FieldTag, Fp, Rational, Scalar};

use crate::config::{Category, RunConfig};
use crate::dump::{BasisDump, CenterDump, DegreeDump, ProductDump, RingReportDump};
use crate::CliError;

/// Runs the center solve described by `cfg`.
pub fn compute(cfg: &RunConfig) -> Result<CenterDump, CliError> {
    cfg.validate()?;
    match cfg.field_tag()? {
        FieldTag::Rationals => compute_with::<Rational>(cfg),
        FieldTag::Prime(_) => compute_with::<Fp>(cfg),
    }
}

fn compute_with<S: Scalar>(cfg: &RunConfig) -> Result<CenterDump, CliError> {
    let field = cfg.field_tag()?;
    let degrees = cfg.degrees.range();
    let window = cfg.window.unwrap_or(0);
    match cfg.category {
        Category::KbprojSerial => {
            let w = build_window_kbproj::<S>(field, window);
            let ring = CenterRing::compute(&w, degrees, cfg.signed)?;
            let report = match_presentation(&w, &ring)?;
            Ok(assemble(cfg, &w, &ring, report, None))
        }
        Category::Tube | Category::Line => {
            let q = if cfg.category == Category::Tube { QuiverSpec::Cycle(cfg.n) } else { QuiverSpec::Line(cfg.n) };
            let w = build_window_tube::<S>(q, field, window)?;
            let ring = CenterRing::compute(&w, degrees, cfg.signed)?;
            let report = match_tube_presentation(&w, &ring)?;
            Ok(assemble(cfg, &w, &ring, report, None))
        }
        Category::StableSerial => {
            let (w, c) = stable_center::<S>(field, cfg.n, degrees, cfg.signed)?;
            Ok(assemble(cfg, &w, &c.ring, c.report, Some(c.t_is_unit)))
        }
    }
}

fn strings<S: Scalar>(v: &[S]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn assemble<C: GradedCategory>(
    cfg: &RunConfig,
    w: &WindowCategory<C>,
    ring: &CenterRing<C::Scalar>,
    report: RingReport,
    t_is_unit: Option<bool>,
) -> CenterDump {
    let labels = w.labels();
    let mut mult: BTreeMap<i64, Vec<ProductDump>> = BTreeMap::new();
    for (&(d1, i, d2, j), coords) in ring.table() {
        mult.entry(d1).or_default().push(ProductDump { left: i, right_degree: d2, right: j, product: strings(coords) });
    }
    let degrees = ring
        .degrees()
        .map(|d| {
            let basis = ring.basis(d).expect("degree in range");
            let elements = basis
                .elements()
                .into_iter()
                .map(|e| BasisDump {
                    components: labels.iter().cloned().zip(e.components.iter().map(|c| strings(c))).collect(),
                })
                .collect();
            DegreeDump { degree: d, dimension: basis.dim(), basis: elements, mult: mult.remove(&d).unwrap_or_default() }
        })
        .collect();
    let graded_commutative = ring.graded_commutativity_violations().is_empty();
    CenterDump {
        config: cfg.clone(),
        degrees,
        ring_report: RingReportDump { presentation: report, graded_commutative, t_is_unit },
    }
}
