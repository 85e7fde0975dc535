use std::fmt;

use clap::ValueEnum;
use gcenter_core::kbproj::{
    build_window_kbproj, ext_coordinate, extend_to_truncations, lift_elements, match_presentation, KbProj,
};
use gcenter_core::reps::{build_window_tube, match_tube_presentation, QuiverSpec};
use gcenter_core::stable::{singularity_map, stable_center};
use gcenter_core::window::{CenterRing, WindowCategory};
use gcenter_core::{FieldTag, Fp, Scalar};

use crate::CliError;

const F101: FieldTag = FieldTag::Prime(101);
const F2: FieldTag = FieldTag::Prime(2);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    DualNumbers,
    Tube,
    Line,
    Stable,
    Extension,
    Singularity,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The mathematical statement being checked.
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.statement)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn check(name: impl Into<String>, statement: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), statement: statement.into(), passed, detail: detail.into() }
}

fn dims<S: Scalar>(ring: &CenterRing<S>, degrees: impl Iterator<Item = i64>) -> Vec<usize> {
    degrees.map(|d| ring.dim(d).unwrap_or(usize::MAX)).collect()
}

pub fn run_suite(suite: Suite) -> Result<Vec<Check>, CliError> {
    match suite {
        Suite::DualNumbers => dual_numbers(),
        Suite::Tube => tube(),
        Suite::Line => line(),
        Suite::Stable => stable(),
        Suite::Extension => extension(),
        Suite::Singularity => singularity(),
    }
}

fn dual_numbers() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let w = build_window_kbproj::<Fp>(F101, 8);
    let ring = CenterRing::compute(&w, 0..=4, true)?;
    let report = match_presentation(&w, &ring)?;
    out.push(check(
        "dual-numbers/degree-zero",
        "degree-0 center on window 8 is T(k, k^9), spanned by 1 and eta_0..eta_8",
        ring.dim(0)? == 10 && report.is_match(),
        format!("dim {}, presentation {:?}", ring.dim(0)?, report.verdict),
    ));
    let signed = dims(&ring, 1..=4);
    out.push(check(
        "dual-numbers/signed-positive",
        "signed center in degrees 1..4 over F_101 has dims 0,1,0,1 (zeta_2, zeta_4 with zeta_2 zeta_2 = zeta_4)",
        signed == [0, 1, 0, 1],
        format!("{signed:?}"),
    ));
    let w2 = build_window_kbproj::<Fp>(F2, 8);
    let ring2 = CenterRing::compute(&w2, 1..=4, true)?;
    let d2 = dims(&ring2, 1..=4);
    out.push(check(
        "dual-numbers/characteristic-two",
        "signed center in degrees 1..4 over F_2 has dims 1,1,1,1",
        d2 == [1, 1, 1, 1],
        format!("{d2:?}"),
    ));
    let unsigned = CenterRing::compute(&w, 1..=4, false)?;
    let du = dims(&unsigned, 1..=4);
    out.push(check(
        "dual-numbers/unsigned-odd",
        "without the sign condition, odd degrees still vanish over F_101 (maps of type x: ΣA -> A force alternating signs)",
        du == [0, 1, 0, 1],
        format!("{du:?}"),
    ));
    for n in [2, 4, 8] {
        let wn = build_window_kbproj::<Fp>(F101, n);
        let neg = CenterRing::compute(&wn, -2..=-1, true)?;
        let dn = dims(&neg, -2..=-1);
        out.push(check(
            format!("dual-numbers/negative-window-{n}"),
            "the center is positively graded: degrees -2 and -1 vanish",
            dn == [0, 0],
            format!("{dn:?}"),
        ));
    }
    let violations = ring.graded_commutativity_violations().len();
    out.push(check(
        "dual-numbers/graded-commutative",
        "ab = (-1)^{|a||b|} ba on all computed products",
        violations == 0,
        format!("{} products, {violations} violations", ring.product_count()),
    ));
    Ok(out)
}

fn tube() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let w = build_window_tube::<Fp>(QuiverSpec::Cycle(n), F101, 10)?;
        let ring = CenterRing::compute(&w, 0..=1, true)?;
        let report = match_tube_presentation(&w, &ring)?;
        let got = dims(&ring, 0..=1);
        let expected = vec![9 / n + 1, if n == 1 { 10 } else { 0 }];
        out.push(check(
            format!("tube/Z_{n}"),
            if n == 1 {
                "window center is T(k[xi]/(xi^10), k^10) with eta^l in degree 1".to_string()
            } else {
                format!("window center is k[xi]/(xi^{}) in degree 0 and zero in degree 1", 9 / n + 1)
            },
            got == expected && report.is_match() && ring.graded_commutativity_violations().is_empty(),
            format!("dims {got:?}, presentation {:?}", report.verdict),
        ));
    }
    Ok(out)
}

fn line() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for m in 2..=6 {
        let w = build_window_tube::<Fp>(QuiverSpec::Line(m), F101, m)?;
        let ring = CenterRing::compute(&w, 0..=1, true)?;
        let report = match_tube_presentation(&w, &ring)?;
        let got = dims(&ring, 0..=1);
        out.push(check(
            format!("line/A_{m}"),
            "the center of a directed uniserial category is k",
            got == [1, 0] && report.is_match(),
            format!("dims {got:?}"),
        ));
    }
    Ok(out)
}

fn stable() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for field in [F2, F101] {
        for n in 2..=7 {
            let (_, c) = stable_center::<Fp>(field, n, -2..=3, true)?;
            let z1 = if field == F2 && n % 2 == 0 { n / 2 } else { (n - 1) / 2 };
            let expected: Vec<usize> = (-2i64..=3).map(|d| if d % 2 == 0 { n / 2 } else { z1 }).collect();
            let got = dims(&c.ring, -2..=3);
            out.push(check(
                format!("stable/n={n}/{field}"),
                format!("Z^even = k[x]/(x^{}), Z^odd has dim {z1}, t invertible", n / 2),
                got == expected
                    && c.report.is_match()
                    && c.t_is_unit
                    && c.ring.graded_commutativity_violations().is_empty(),
                format!("dims {got:?} over degrees -2..3, presentation {:?}, t unit {}", c.report.verdict, c.t_is_unit),
            ));
        }
    }
    Ok(out)
}

fn extension() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    let (window, depth) = (8, 12);
    let small = build_window_kbproj::<Fp>(F101, window);
    let big = WindowCategory::new(KbProj::<Fp>::new(F101, depth, 1));
    let ring = CenterRing::compute(&small, 0..=4, true)?;
    for d in 0..=4 {
        let basis = ring.basis(d)?;
        let lifted = lift_elements(&small, &big, &basis.elements(), true)?;
        let mut failures = Vec::new();
        let mut classes = Vec::new();
        for (i, e) in lifted.iter().enumerate() {
            match extend_to_truncations(&big, e, depth) {
                Ok(reps) => classes.push(ext_coordinate(reps.last().expect("nonempty"), d).to_string()),
                Err(err) => failures.push(format!("{i}: {err}")),
            }
        }
        out.push(check(
            format!("extension/degree-{d}"),
            format!("every degree-{d} basis element extends to the truncated resolution of S up to depth {depth}, frozen below each level"),
            failures.is_empty(),
            if failures.is_empty() { format!("{} elements, Ext classes {classes:?}", basis.dim()) } else { failures.join("; ") },
        ));
    }
    Ok(out)
}

fn singularity() -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for field in [F101, F2] {
        let r = singularity_map::<Fp>(field, 8, 12, -2..=4)?;
        out.push(check(
            format!("singularity/{field}/eta"),
            "eta_r maps to 0 for r <= 8",
            r.eta_images.iter().all(Scalar::is_zero),
            format!("{:?}", r.eta_images.iter().map(ToString::to_string).collect::<Vec<_>>()),
        ));
        out.push(check(
            format!("singularity/{field}/zeta"),
            "zeta_2 maps to a nonzero multiple of t",
            r.zeta2_to_t.as_ref().is_some_and(|c| !c.is_zero()),
            format!("{:?}", r.zeta2_to_t.as_ref().map(ToString::to_string)),
        ));
        out.push(check(
            format!("singularity/{field}/kernel"),
            "kernel is spanned by the eta_r",
            r.kernel_is_eta_span,
            format!("kernel dims {:?}", r.kernel_dims),
        ));
        out.push(check(
            format!("singularity/{field}/image"),
            "image is the stable center in degrees >= 0 (k[t] outside characteristic 2) and misses t^-1",
            r.image_is_nonnegative_part,
            format!("image dims {:?}", r.image_dims),
        ));
        out.push(check(
            format!("singularity/{field}/ring-map"),
            "the map is multiplicative",
            r.multiplicative,
            String::new(),
        ));
    }
    Ok(out)
}
