//! The identity catalog and the drivers that verify it.
//!
//! Every [`IdentitySpec`] pairs a builder for the left-hand integrand with an
//! evaluator for the closed-form right-hand side. [`verify`] integrates the
//! former, evaluates the latter, and classifies the comparison.

mod catalog_di;
mod catalog_gm;
mod kernels;
pub mod params;
pub mod series;

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{
    integrate_double, integrate_finite, integrate_semiinf, Domain, QuadConfig, QuadResult,
};
use crate::ComplexScalar;

pub use kernels::exp_diff_quotient;
pub use params::{format_complex, parse_complex, ParamAssignment, Sym};
pub use catalog_gm::triple_series;
pub use series::{sum_asymptotic, sum_axis};

/// Absolute error below which a comparison passes regardless of `rel_err`.
pub const ABS_FLOOR: f64 = 1e-12;

/// An integrand ready for quadrature.
pub enum Integrand {
    Single {
        domain: Domain,
        f: Box<dyn Fn(f64) -> Result<ComplexScalar> + Send + Sync>,
    },
    /// `int_outer int_inner f(outer, inner)`.
    Double {
        outer: Domain,
        inner: Domain,
        f: Box<dyn Fn(f64, f64) -> Result<ComplexScalar> + Send + Sync>,
    },
}

impl Integrand {
    pub fn dimension(&self) -> u8 {
        match self {
            Integrand::Single { .. } => 1,
            Integrand::Double { .. } => 2,
        }
    }

    pub fn integrate(&self, cfg: &QuadConfig) -> Result<QuadResult> {
        match self {
            Integrand::Single { domain, f } => match *domain {
                Domain::Finite { a, b, hint } => integrate_finite(f, a, b, hint, cfg),
                Domain::SemiInfinite { a, hint } => integrate_semiinf(f, a, hint, cfg),
            },
            Integrand::Double { outer, inner, f } => integrate_double(f, *outer, *inner, cfg),
        }
    }
}

pub type LhsBuilder = fn(&ParamAssignment) -> Result<Integrand>;
pub type RhsFn = fn(&ParamAssignment) -> Result<ComplexScalar>;

/// A parameter-domain condition with its human-readable statement.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub text: &'static str,
    pub check: fn(&ParamAssignment) -> Result<bool>,
}

/// How the right-hand side is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RhsKind {
    /// Special-function values only.
    ClosedForm,
    /// Convergent series summed with adaptive truncation.
    Series,
    /// Asymptotic series truncated at the smallest term.
    SeriesWithTruncation,
}

/// One identity of the catalog.
pub struct IdentitySpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub dimension: u8,
    /// Parameters the identity reads.
    pub params: &'static [Sym],
    /// Parameters the right-hand side depends on.
    pub rhs_params: &'static [Sym],
    /// Conditions as printed alongside the identity, kept verbatim.
    pub printed_conditions: &'static [&'static str],
    /// Conditions actually enforced.
    pub constraints: Vec<Constraint>,
    pub default_samples: Vec<ParamAssignment>,
    pub tolerance: f64,
    pub rhs_kind: RhsKind,
    pub lhs: LhsBuilder,
    pub rhs: RhsFn,
    /// A second, non-equal form that must differ from the LHS (errata check).
    pub contrast: Option<RhsFn>,
    /// The right-hand side as it appears in the summary table.
    pub table_label: Option<&'static str>,
    pub notes: &'static str,
}

impl IdentitySpec {
    fn new(
        id: &'static str,
        anchor: &'static str,
        dimension: u8,
        params: &'static [Sym],
        rhs_params: &'static [Sym],
        lhs: LhsBuilder,
        rhs: RhsFn,
    ) -> Self {
        IdentitySpec {
            id,
            anchor,
            dimension,
            params,
            rhs_params,
            printed_conditions: &[],
            constraints: Vec::new(),
            default_samples: Vec::new(),
            tolerance: if dimension == 2 { 1e-4 } else { 1e-6 },
            rhs_kind: RhsKind::ClosedForm,
            lhs,
            rhs,
            contrast: None,
            table_label: None,
            notes: "",
        }
    }

    fn printed(mut self, conditions: &'static [&'static str]) -> Self {
        self.printed_conditions = conditions;
        self
    }

    fn constraint(mut self, text: &'static str, check: fn(&ParamAssignment) -> Result<bool>) -> Self {
        self.constraints.push(Constraint { text, check });
        self
    }

    fn sample(mut self, p: ParamAssignment) -> Self {
        self.default_samples.push(p);
        self
    }

    fn tol(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    fn kind(mut self, kind: RhsKind) -> Self {
        self.rhs_kind = kind;
        self
    }

    fn table(mut self, label: &'static str) -> Self {
        self.table_label = Some(label);
        self
    }

    fn contrast(mut self, f: RhsFn) -> Self {
        self.contrast = Some(f);
        self
    }

    fn notes(mut self, notes: &'static str) -> Self {
        self.notes = notes;
        self
    }

    /// Checks that every parameter is present and every constraint holds.
    pub fn check_domain(&self, p: &ParamAssignment) -> Result<()> {
        for &sym in self.params {
            if !p.contains(sym) {
                return Err(Error::domain(format!("{}: parameter {sym} is not set", self.id)));
            }
        }
        for c in &self.constraints {
            let ok = (c.check)(p)
                .map_err(|e| Error::domain(format!("{}: {} ({e})", self.id, c.text)))?;
            if !ok {
                return Err(Error::domain(format!("{}: violates {}", self.id, c.text)));
            }
        }
        Ok(())
    }

    pub fn rhs_value(&self, p: &ParamAssignment) -> Result<ComplexScalar> {
        self.check_domain(p)?;
        (self.rhs)(p)
    }

    pub fn lhs_integrand(&self, p: &ParamAssignment) -> Result<Integrand> {
        self.check_domain(p)?;
        (self.lhs)(p)
    }

    pub fn lhs_value(&self, p: &ParamAssignment, cfg: &QuadConfig) -> Result<QuadResult> {
        self.lhs_integrand(p)?.integrate(cfg)
    }
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("dimension", &self.dimension)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

/// The full catalog in its fixed order.
pub fn catalog() -> &'static [IdentitySpec] {
    static CATALOG: OnceLock<Vec<IdentitySpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut all = catalog_di::entries();
        all.extend(catalog_gm::entries());
        all.extend(catalog_di::table_entries());
        all
    })
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Catalog listing entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityInfo {
    pub id: String,
    pub anchor: String,
    pub dimension: u8,
    pub params: Vec<Sym>,
}

pub fn list_identities() -> Vec<IdentityInfo> {
    catalog()
        .iter()
        .map(|s| IdentityInfo {
            id: s.id.to_string(),
            anchor: s.anchor.to_string(),
            dimension: s.dimension,
            params: s.params.to_vec(),
        })
        .collect()
}

pub fn rhs_value(id: &str, p: &ParamAssignment) -> Result<ComplexScalar> {
    lookup(id)?.rhs_value(p)
}

pub fn lhs_value(id: &str, p: &ParamAssignment, cfg: &QuadConfig) -> Result<QuadResult> {
    lookup(id)?.lhs_value(p, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DomainViolation,
    QuadratureFailure,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DomainViolation => "domain-violation",
            Status::QuadratureFailure => "quadrature-failure",
        })
    }
}

/// Outcome of comparing the two sides at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub id: String,
    pub params: ParamAssignment,
    #[serde(with = "opt_complex")]
    pub lhs: Option<ComplexScalar>,
    #[serde(with = "opt_complex")]
    pub rhs: Option<ComplexScalar>,
    #[serde(with = "opt_float")]
    pub abs_err: Option<f64>,
    #[serde(with = "opt_float")]
    pub rel_err: Option<f64>,
    #[serde(with = "opt_float")]
    pub lhs_err_estimate: Option<f64>,
    pub lhs_converged: bool,
    #[serde(with = "params::float_str")]
    pub tol: f64,
    #[serde(with = "params::float_str")]
    pub abs_floor: f64,
    /// Relative distance of the LHS from the contrast form, if any.
    #[serde(with = "opt_float")]
    pub contrast_rel_err: Option<f64>,
    pub status: Status,
    pub message: Option<String>,
}

impl VerificationResult {
    fn failed(id: &str, p: &ParamAssignment, tol: f64, status: Status, err: &Error) -> Self {
        VerificationResult {
            id: id.to_string(),
            params: p.clone(),
            lhs: None,
            rhs: None,
            abs_err: None,
            rel_err: None,
            lhs_err_estimate: None,
            lhs_converged: false,
            tol,
            abs_floor: ABS_FLOOR,
            contrast_rel_err: None,
            status,
            message: Some(err.to_string()),
        }
    }
}

/// Tightens the quadrature tolerances to at least 100 times the
/// verification tolerance.
pub fn effective_config(cfg: &QuadConfig, tol: f64) -> QuadConfig {
    let q = (tol / 100.0).max(1e-14);
    QuadConfig {
        rel_tol: cfg.rel_tol.min(q),
        outer_rel_tol: cfg.outer_rel_tol.min(q),
        ..*cfg
    }
}

/// Compares LHS and RHS of `id` at `p`. Errors only for an unknown id;
/// every other failure is encoded in the status.
pub fn verify(id: &str, p: &ParamAssignment, tol: f64, cfg: &QuadConfig) -> Result<VerificationResult> {
    Ok(verify_spec(lookup(id)?, p, tol, cfg))
}

pub fn verify_spec(spec: &IdentitySpec, p: &ParamAssignment, tol: f64, cfg: &QuadConfig) -> VerificationResult {
    let fail = |status, e: &Error| VerificationResult::failed(spec.id, p, tol, status, e);
    if let Err(e) = spec.check_domain(p) {
        return fail(Status::DomainViolation, &e);
    }
    let rhs = match (spec.rhs)(p) {
        Ok(v) => v,
        Err(e) if e.is_domain_like() => return fail(Status::DomainViolation, &e),
        Err(e) => return fail(Status::Fail, &e),
    };
    let quad = match (spec.lhs)(p).and_then(|f| f.integrate(&effective_config(cfg, tol))) {
        Ok(q) => q,
        Err(e) if e.is_domain_like() => return fail(Status::DomainViolation, &e),
        Err(e) => {
            let mut r = fail(Status::QuadratureFailure, &e);
            r.rhs = Some(rhs);
            return r;
        }
    };
    let lhs = quad.value;
    let abs_err = (lhs - rhs).norm();
    let rel_err = abs_err / rhs.norm();
    let mut pass = rel_err <= tol || abs_err <= ABS_FLOOR;
    let mut message = None;
    let mut contrast_rel_err = None;
    if let Some(contrast) = spec.contrast {
        match contrast(p) {
            Ok(c) => {
                let d = (lhs - c).norm() / c.norm();
                contrast_rel_err = Some(d);
                if !(d > 1e3 * tol) {
                    pass = false;
                    message = Some(format!("contrast form is within {d:.3e} of the LHS"));
                }
            }
            Err(e) => message = Some(format!("contrast form not evaluable: {e}")),
        }
    }
    if !lhs.is_finite() {
        pass = false;
    }
    if !quad.converged && message.is_none() {
        message = Some(format!(
            "quadrature stopped at level {} with error estimate {:.3e}",
            quad.levels, quad.err_estimate
        ));
    }
    VerificationResult {
        id: spec.id.to_string(),
        params: p.clone(),
        lhs: Some(lhs),
        rhs: Some(rhs),
        abs_err: Some(abs_err),
        rel_err: Some(rel_err),
        lhs_err_estimate: Some(quad.err_estimate),
        lhs_converged: quad.converged,
        tol,
        abs_floor: ABS_FLOOR,
        contrast_rel_err,
        status: if pass { Status::Pass } else { Status::Fail },
        message,
    }
}

/// Verifies every default sample of the given entries, in catalog order.
/// `tol` overrides the per-entry tolerance.
pub fn verify_samples(specs: &[&IdentitySpec], tol: Option<f64>, cfg: &QuadConfig) -> Vec<VerificationResult> {
    let jobs: Vec<(&IdentitySpec, &ParamAssignment)> = specs
        .iter()
        .flat_map(|s| s.default_samples.iter().map(move |p| (*s, p)))
        .collect();
    jobs.par_iter()
        .map(|(s, p)| verify_spec(s, p, tol.unwrap_or(s.tolerance), cfg))
        .collect()
}

/// Result of a parameter sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub id: String,
    pub param: Sym,
    pub results: Vec<VerificationResult>,
    /// Largest `|L_i - L_j| / max(|L_i|, |L_j|)` over successful points.
    #[serde(with = "params::float_str")]
    pub max_deviation: f64,
}

/// Evaluates the LHS of `id` at each value of `param`, the other parameters
/// taken from `fixed`. `param` must not enter the right-hand side.
pub fn sweep_invariance(
    id: &str,
    param: Sym,
    values: &[ComplexScalar],
    fixed: &ParamAssignment,
    tol: Option<f64>,
    cfg: &QuadConfig,
) -> Result<SweepResult> {
    let spec = lookup(id)?;
    if spec.rhs_params.contains(&param) {
        return Err(Error::domain(format!(
            "{id}: the right-hand side depends on {param}, so it cannot be swept"
        )));
    }
    let tol = tol.unwrap_or(spec.tolerance);
    let results: Vec<VerificationResult> = values
        .par_iter()
        .map(|&v| {
            let p = fixed.clone().with(param, v);
            verify_spec(spec, &p, tol, cfg)
        })
        .collect();
    let lhs: Vec<ComplexScalar> = results.iter().filter_map(|r| r.lhs).collect();
    let mut max_deviation = 0.0f64;
    for (i, a) in lhs.iter().enumerate() {
        for b in &lhs[i + 1..] {
            let d = (a - b).norm() / a.norm().max(b.norm());
            max_deviation = max_deviation.max(if d.is_nan() { f64::INFINITY } else { d });
        }
    }
    Ok(SweepResult {
        id: id.to_string(),
        param,
        results,
        max_deviation,
    })
}

/// One row of the summary table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub id: String,
    pub label: String,
    pub result: VerificationResult,
}

/// Entries that appear in the summary table, in table order.
pub fn table_entries() -> Vec<&'static IdentitySpec> {
    catalog_di::TABLE_ORDER
        .iter()
        .map(|id| lookup(id).expect("table ids are in the catalog"))
        .collect()
}

/// Evaluates every table entry at its first default sample.
pub fn table_rows(cfg: &QuadConfig) -> Vec<TableRow> {
    table_entries()
        .par_iter()
        .map(|s| {
            let p = s.default_samples.first().cloned().unwrap_or_default();
            TableRow {
                id: s.id.to_string(),
                label: s.table_label.unwrap_or("").to_string(),
                result: verify_spec(s, &p, s.tolerance, cfg),
            }
        })
        .collect()
}

pub(crate) mod opt_complex {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct W(#[serde(with = "params::complex_text")] ComplexScalar);

    pub fn serialize<S: Serializer>(z: &Option<ComplexScalar>, ser: S) -> std::result::Result<S::Ok, S::Error> {
        z.map(W).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Option<ComplexScalar>, D::Error> {
        Ok(Option::<W>::deserialize(de)?.map(|w| w.0))
    }
}

pub(crate) mod opt_float {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct W(#[serde(with = "params::float_str")] f64);

    pub fn serialize<S: Serializer>(x: &Option<f64>, ser: S) -> std::result::Result<S::Ok, S::Error> {
        x.map(W).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Option<f64>, D::Error> {
        Ok(Option::<W>::deserialize(de)?.map(|w| w.0))
    }
}
