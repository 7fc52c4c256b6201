//! Top-level formulas and the consolidated per-spec report.

use std::fmt;

use serde::Serialize;

use crate::meander::{self, central_components, Meander};
use crate::notation::{Flavor, SeaweedSpec};
use crate::oracle::{
    breadth_randomized, center_dim_oracle, index_randomized, is_ideal, is_nilpotent,
    nilradical_basis, seaweed_basis, FieldConfig, OracleError,
};
use crate::weighted;

/// Index of the nilradical: central components plus total meander weight,
/// minus one for sl.
pub fn index_nilradical(spec: &SeaweedSpec) -> usize {
    let cen = central_components(spec).len();
    let wt = weighted::total_weight(spec);
    match spec.flavor() {
        Flavor::Gl => cen + wt,
        Flavor::Sl => cen + wt - 1,
    }
}

/// Lower bound for the nilradical index: simple edges plus central
/// components, minus one for sl.
pub fn lower_bound_nilradical(spec: &SeaweedSpec) -> usize {
    let e1 = Meander::from_spec(spec).simple_edges().len();
    let cen = central_components(spec).len();
    match spec.flavor() {
        Flavor::Gl => e1 + cen,
        Flavor::Sl => e1 + cen - 1,
    }
}

/// A recognized closed-form shape and its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub tag: String,
    pub value: usize,
}

/// Detects the three special sl shapes with a closed-form nilradical index:
/// `pA a|b/N` and `pA a|b/c|d` give `ab`; `pA a|b|c/N` gives
/// `ac + b|a-c|`. Detection is by literal shape only.
pub fn closed_form_special(spec: &SeaweedSpec) -> Option<ClosedForm> {
    if spec.flavor() != Flavor::Sl {
        return None;
    }
    let top = spec.top().parts();
    let bottom = spec.bottom().parts();
    match (top, bottom) {
        ([a, b], [_]) | ([a, b], [_, _]) => Some(ClosedForm {
            tag: "ab".into(),
            value: a * b,
        }),
        ([a, b, c], [_]) => Some(ClosedForm {
            tag: "ac+b|a-c|".into(),
            value: a * c + b * a.abs_diff(*c),
        }),
        _ => None,
    }
}

/// Breadth of the seaweed: `dim - N` for gl, `dim - N + 1` for sl.
pub fn breadth_seaweed(spec: &SeaweedSpec) -> usize {
    match spec.flavor() {
        Flavor::Gl => spec.dim() - spec.n(),
        Flavor::Sl => spec.dim() + 1 - spec.n(),
    }
}

/// Matrix-oracle results attached to a report on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSection {
    pub index_seaweed_oracle: usize,
    pub index_nilradical_oracle: usize,
    pub center_oracle: usize,
    pub nilpotency_ok: bool,
    pub ideal_ok: bool,
    pub breadth_oracle: usize,
}

impl OracleSection {
    pub fn compute(spec: &SeaweedSpec, cfg: &FieldConfig) -> Result<Self, OracleError> {
        let seaweed = seaweed_basis(spec);
        let nilradical = nilradical_basis(spec);
        Ok(OracleSection {
            index_seaweed_oracle: index_randomized(&seaweed, cfg)?,
            index_nilradical_oracle: index_randomized(&nilradical, cfg)?,
            center_oracle: center_dim_oracle(&seaweed, cfg)?,
            nilpotency_ok: is_nilpotent(&nilradical, cfg)?,
            ideal_ok: is_ideal(&nilradical, &seaweed, cfg)?,
            breadth_oracle: breadth_randomized(&seaweed, cfg)?,
        })
    }

    /// Whether the oracle values agree with the given formula values.
    pub fn matches(
        &self,
        index_seaweed: usize,
        index_nilradical: usize,
        center_dim: usize,
        breadth: usize,
    ) -> bool {
        self.index_seaweed_oracle == index_seaweed
            && self.index_nilradical_oracle == index_nilradical
            && self.center_oracle == center_dim
            && self.nilpotency_ok
            && self.ideal_ok
            && self.breadth_oracle == breadth
    }
}

/// Every invariant of one spec in a single record. Serializes to a stable
/// JSON object; optional sections are omitted when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub spec: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub dim: usize,
    pub index_seaweed: usize,
    pub center_dim: usize,
    pub n_central: usize,
    pub total_weight: usize,
    pub index_nilradical: usize,
    pub lower_bound: usize,
    pub e1_count: usize,
    pub breadth_seaweed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedForm>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
}

/// Computes the whole report. The oracle section is attached only when
/// requested; expect its cost to grow quickly with `N`.
pub fn full_report(
    spec: &SeaweedSpec,
    with_oracle: bool,
    cfg: &FieldConfig,
) -> Result<InvariantReport, OracleError> {
    let n_central = central_components(spec).len();
    let total_weight = weighted::total_weight(spec);
    let sl_shift = usize::from(spec.flavor() == Flavor::Sl);
    let report = InvariantReport {
        spec: spec.to_string(),
        n: spec.n(),
        dim: spec.dim(),
        index_seaweed: meander::index_seaweed(spec),
        center_dim: n_central - sl_shift,
        n_central,
        total_weight,
        index_nilradical: index_nilradical(spec),
        lower_bound: lower_bound_nilradical(spec),
        e1_count: Meander::from_spec(spec).simple_edges().len(),
        breadth_seaweed: breadth_seaweed(spec),
        closed_form: closed_form_special(spec),
        oracle: if with_oracle {
            Some(OracleSection::compute(spec, cfg)?)
        } else {
            None
        },
    };
    assert_eq!(
        report.index_nilradical,
        report.n_central + report.total_weight - sl_shift,
        "nilradical index disagrees with its own decomposition for {spec}"
    );
    assert!(
        report.index_nilradical >= report.lower_bound,
        "nilradical index under its lower bound for {spec}"
    );
    Ok(report)
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spec              {}", self.spec)?;
        writeln!(f, "N                 {}", self.n)?;
        writeln!(f, "dim               {}", self.dim)?;
        writeln!(f, "index_seaweed     {}", self.index_seaweed)?;
        writeln!(f, "center_dim        {}", self.center_dim)?;
        writeln!(f, "n_central         {}", self.n_central)?;
        writeln!(f, "total_weight      {}", self.total_weight)?;
        writeln!(f, "index_nilradical  {}", self.index_nilradical)?;
        writeln!(f, "lower_bound       {}", self.lower_bound)?;
        writeln!(f, "e1_count          {}", self.e1_count)?;
        writeln!(f, "breadth_seaweed   {}", self.breadth_seaweed)?;
        if let Some(cf) = &self.closed_form {
            writeln!(f, "closed_form       {} = {}", cf.tag, cf.value)?;
        }
        if let Some(o) = &self.oracle {
            writeln!(f, "oracle:")?;
            writeln!(f, "  index_seaweed_oracle     {}", o.index_seaweed_oracle)?;
            writeln!(
                f,
                "  index_nilradical_oracle  {}",
                o.index_nilradical_oracle
            )?;
            writeln!(f, "  center_oracle            {}", o.center_oracle)?;
            writeln!(f, "  nilpotency_ok            {}", o.nilpotency_ok)?;
            writeln!(f, "  ideal_ok                 {}", o.ideal_ok)?;
            writeln!(f, "  breadth_oracle           {}", o.breadth_oracle)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> SeaweedSpec {
        SeaweedSpec::parse(text).unwrap()
    }

    #[test]
    fn nilradical_index_examples() {
        assert_eq!(index_nilradical(&spec("p 2|3|1|2|2/7|3")), 7);
        assert_eq!(index_nilradical(&spec("p 3|3|5|2/6|2|1|2|2")), 16);
        assert_eq!(index_nilradical(&spec("pA 3|3|5|2/6|2|1|2|2")), 15);
        assert_eq!(index_nilradical(&spec("pA 1|1/1|1")), 1);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_nilradical(&spec("p 2|3|1|2|2/7|3")), 7);
        assert_eq!(lower_bound_nilradical(&spec("p 1|2|1/4")), 2);
        assert_eq!(index_nilradical(&spec("p 1|2|1/4")), 2);
        assert_eq!(lower_bound_nilradical(&spec("pA 5/5")), 0);
    }

    #[test]
    fn closed_form_detection() {
        let cf = closed_form_special(&spec("pA 2|3/5")).unwrap();
        assert_eq!((cf.tag.as_str(), cf.value), ("ab", 6));
        let cf = closed_form_special(&spec("pA 2|3|4/9")).unwrap();
        assert_eq!((cf.tag.as_str(), cf.value), ("ac+b|a-c|", 14));
        let cf = closed_form_special(&spec("pA 2|3/1|4")).unwrap();
        assert_eq!((cf.tag.as_str(), cf.value), ("ab", 6));
        assert!(closed_form_special(&spec("p 2|3/5")).is_none());
        assert!(closed_form_special(&spec("pA 2|3|4/1|8")).is_none());
    }

    #[test]
    fn breadth_examples() {
        assert_eq!(breadth_seaweed(&spec("p 2/2")), 2);
        assert_eq!(breadth_seaweed(&spec("p 2|4/1|2|3")), 11);
        assert_eq!(breadth_seaweed(&spec("pA 2/2")), 2);
    }

    #[test]
    fn report_of_remark_pair() {
        let cfg = FieldConfig::default();
        let r = full_report(&spec("p 1|2/2|1"), false, &cfg).unwrap();
        assert_eq!(r.index_nilradical, 3);
        let r = full_report(&spec("p 1|2|1/4"), false, &cfg).unwrap();
        assert_eq!(r.index_nilradical, 2);
        assert_eq!(r.index_seaweed, 3);
    }

    #[test]
    fn report_of_full_sl4() {
        let cfg = FieldConfig::default();
        let r = full_report(&spec("pA 4/4"), false, &cfg).unwrap();
        assert_eq!(r.index_seaweed, 3);
        assert_eq!(r.index_nilradical, 0);
        assert_eq!(r.dim, 15);
    }

    #[test]
    fn report_with_oracle_agrees_on_worked_example() {
        let cfg = FieldConfig::default();
        let r = full_report(&spec("p 2|3|1|2|2/7|3"), true, &cfg).unwrap();
        let o = r.oracle.as_ref().unwrap();
        assert_eq!(r.index_nilradical, 7);
        assert_eq!(o.index_nilradical_oracle, 7);
        assert!(o.matches(
            r.index_seaweed,
            r.index_nilradical,
            r.center_dim,
            r.breadth_seaweed
        ));
    }

    #[test]
    fn json_shape_is_stable() {
        let cfg = FieldConfig::default();
        let r = full_report(&spec("pA 2|3/5"), false, &cfg).unwrap();
        let json = r.to_json();
        assert!(json.starts_with("{\"spec\":\"pA 2|3/5\",\"N\":5,"));
        assert!(json.contains("\"closed_form\":{\"tag\":\"ab\",\"value\":6}"));
        assert!(!json.contains("oracle"));
        // identical runs serialize identically
        assert_eq!(
            json,
            full_report(&spec("pA 2|3/5"), false, &cfg)
                .unwrap()
                .to_json()
        );
    }
}
