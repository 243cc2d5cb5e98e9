//! JSON report objects. Field order is fixed by the struct layout, so output
//! is deterministic apart from `timing_ms`.

use serde::{Deserialize, Serialize};

use sigmanil::analysis::Analysis;
use sigmanil::classify::{ClassificationReport, Witness};
use sigmanil::theorems::TheoremReport;
use sigmanil::{classical, Subgroup};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub sigma_nilpotent: bool,
    pub nilpotent: bool,
    pub sigma_soluble: bool,
    pub semi: bool,
    pub weak: bool,
    /// The weak flag under the other subnormality variant.
    pub weak_other_variant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallEntry {
    pub block: String,
    pub order: usize,
    pub normal: bool,
}

/// One σ-Carter subgroup per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarterEntry {
    pub order: usize,
    pub conjugates: usize,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroups {
    pub f_sigma_order: usize,
    pub z_sigma_order: usize,
    pub residual_order: usize,
    pub fitting_order: usize,
    /// Absent when some Hall σ_i-subgroup does not exist.
    pub hall: Option<Vec<HallEntry>>,
    pub carter: Vec<CarterEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInfo {
    pub subgroups: usize,
    pub joins: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    /// `semi`, `weak` or `weak_other_variant`.
    pub flag: String,
    pub reason: String,
    pub subgroup: Vec<usize>,
    pub normalizer: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub theorem: String,
    pub holds: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseEntry {
    pub id: String,
    pub verdict: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub group: GroupInfo,
    pub sigma: String,
    pub subnormal_variant: String,
    pub flags: Flags,
    pub subgroups: Subgroups,
    pub lattice: LatticeInfo,
    pub witnesses: Vec<WitnessEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hypothesis: Option<Hypothesis>,
    pub clauses: Vec<ClauseEntry>,
    pub timing_ms: u64,
}

fn witness_entry(flag: &str, w: &Witness) -> WitnessEntry {
    WitnessEntry {
        flag: flag.into(),
        reason: w.reason.to_string(),
        subgroup: w.subgroup.elements(),
        normalizer: w.normalizer.elements(),
    }
}

pub fn variant_name(v: sigmanil::classify::SubnormalVariant) -> &'static str {
    match v {
        sigmanil::classify::SubnormalVariant::Classic => "classic",
        sigmanil::classify::SubnormalVariant::Sigma => "sigma",
    }
}

fn carter_entries(an: &Analysis<'_>) -> Vec<CarterEntry> {
    let g = an.group();
    let mut reps: Vec<(Subgroup, usize)> = Vec::new();
    for i in an.sigma_carter_subgroups() {
        let h = an.subgroup(i);
        match reps.iter_mut().find(|(r, _)| classical::are_conjugate(g, r, h)) {
            Some((_, n)) => *n += 1,
            None => reps.push((h.clone(), 1)),
        }
    }
    reps.into_iter()
        .map(|(h, conjugates)| CarterEntry {
            order: h.order(),
            conjugates,
            elements: h.elements(),
        })
        .collect()
}

/// Builds the analysis part of a report; clauses are filled by `verify`.
pub fn build(an: &Analysis<'_>, c: &ClassificationReport) -> Result<Report, sigmanil::Error> {
    let g = an.group();
    let sigma = an.sigma();
    let hall = an.hall_set()?.map(|set| {
        set.members
            .iter()
            .map(|m| HallEntry {
                block: sigma.block_label(m.block),
                order: m.subgroup.order(),
                normal: m.normal,
            })
            .collect()
    });
    let mut witnesses = Vec::new();
    for (flag, w) in [
        ("semi", &c.witness_semi),
        ("weak", &c.witness_weak),
        ("weak_other_variant", &c.witness_weak_other),
    ] {
        if let Some(w) = w {
            witnesses.push(witness_entry(flag, w));
        }
    }
    Ok(Report {
        tool_version: TOOL_VERSION.into(),
        group: GroupInfo {
            name: g.name().into(),
            order: g.order(),
            provenance: g.provenance().to_string(),
        },
        sigma: sigma.to_string(),
        subnormal_variant: variant_name(c.variant).into(),
        flags: Flags {
            sigma_nilpotent: c.sigma_nilpotent,
            nilpotent: c.nilpotent,
            sigma_soluble: an.is_sigma_soluble(),
            semi: c.semi,
            weak: c.weak,
            weak_other_variant: c.weak_other_variant,
        },
        subgroups: Subgroups {
            f_sigma_order: an.sigma_fitting()?.order(),
            z_sigma_order: an.sigma_hypercentre().order(),
            residual_order: an.sigma_residual()?.order(),
            fitting_order: an.fitting()?.order(),
            hall,
            carter: carter_entries(an),
        },
        lattice: LatticeInfo {
            subgroups: c.lattice_size,
            joins: c.joins,
        },
        witnesses,
        hypothesis: None,
        clauses: Vec::new(),
        timing_ms: 0,
    })
}

pub fn add_theorem(report: &mut Report, t: &TheoremReport) {
    report.hypothesis = Some(Hypothesis {
        theorem: t.theorem.to_string(),
        holds: t.hypothesis_holds,
        reason: t.hypothesis_reason.clone(),
    });
    report.clauses = t
        .clauses
        .iter()
        .map(|c| ClauseEntry {
            id: c.id.into(),
            verdict: c.verdict.as_str().into(),
            detail: c.detail.clone(),
            witness: (!c.witness.is_empty()).then(|| c.witness.iter().map(Subgroup::elements).collect()),
        })
        .collect();
}

/// Serialized report with `timing_ms` zeroed, for byte comparisons.
pub fn canonical_json(report: &Report) -> String {
    let mut r = report.clone();
    r.timing_ms = 0;
    serde_json::to_string_pretty(&r).expect("reports serialize")
}
