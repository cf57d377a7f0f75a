//! Brute-force search counterparts of the closed formulas: minimum
//! rainbow-plus-monochromatic copy totals over canonical coloring classes,
//! and bounded verification of gr/bgr values.
//!
//! Searches reduce over canonical classes with a deterministic minimum (ties
//! broken by the lexicographic order of the canonical witness), so results
//! are identical for any thread count.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coloring::{
    all_profiles, enumerate_exact_colorings, unrestricted_enum_allowed, ColorClassProfile, ColoringClass,
    EdgeColoring,
};
use crate::counting::{count_mono_in, count_rainbow_in, has_rainbow_in};
use crate::engine::formula::Setting;
use crate::error::{Error, Result};
use crate::host::{EdgeId, HostGraph};
use crate::pattern::{enumerate_copies, PatternGraph};

fn ser_u128<S: Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Per-class detail attached to a [`SearchReport`] on request.
#[derive(Debug, Clone, Serialize)]
pub struct ClassStat {
    pub coloring: EdgeColoring,
    #[serde(serialize_with = "ser_u128")]
    pub orbit_colorings: u128,
    /// rainbow-G plus monochromatic-H copies under this class
    pub total: u64,
}

/// Outcome of a multiplicity search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    /// minimum of (rainbow G copies + monochromatic H copies)
    pub value: u64,
    /// a coloring attaining the minimum (canonical representative)
    pub witness: EdgeColoring,
    pub classes_examined: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_class: Option<Vec<ClassStat>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_agreement: Option<bool>,
}

/// The coloring classes to sweep for `(host, k)`: a single unrestricted
/// enumeration where the guard allows it, otherwise one profiled enumeration
/// per class-size profile consistent with `(m, k)`.
pub(crate) fn classes_for_search(
    host: &HostGraph,
    k: u32,
    profile: Option<&ColorClassProfile>,
) -> Result<Vec<ColoringClass>> {
    match profile {
        Some(p) => enumerate_exact_colorings(host, k, Some(p)),
        None if unrestricted_enum_allowed(host) => enumerate_exact_colorings(host, k, None),
        None => {
            let mut classes = Vec::new();
            for p in all_profiles(host.edge_count(), k) {
                classes.extend(enumerate_exact_colorings(host, k, Some(&p))?);
            }
            Ok(classes)
        }
    }
}

/// Minimum over exact k-colorings of the host of (rainbow copies of `g` +
/// monochromatic copies of `h`), with a witness attaining it.
///
/// When `profile` is given only colorings with that class-size profile are
/// swept; otherwise every profile consistent with `(m, k)` is. Monochromatic
/// H copies are always counted, even when hypotheses elsewhere make them
/// vanish — the search rediscovers that fact rather than assuming it.
pub fn gm_search(
    host: &HostGraph,
    k: u32,
    g: &PatternGraph,
    h: &PatternGraph,
    profile: Option<&ColorClassProfile>,
    collect_per_class: bool,
) -> Result<SearchReport> {
    let copies_g = enumerate_copies(host, g)?;
    let copies_h = enumerate_copies(host, h)?;
    let classes = classes_for_search(host, k, profile)?;
    if classes.is_empty() {
        return Err(Error::invalid(format!("no exact {k}-colorings of {host} to search")));
    }

    let totals: Vec<u64> = classes
        .par_iter()
        .map(|class| count_rainbow_in(&class.coloring, &copies_g) + count_mono_in(&class.coloring, &copies_h))
        .collect();

    let (best_idx, value) = totals
        .iter()
        .copied()
        .enumerate()
        .min_by(|(i, a), (j, b)| {
            a.cmp(b).then_with(|| classes[*i].coloring.colors().cmp(classes[*j].coloring.colors()))
        })
        .expect("non-empty class list");

    let per_class = collect_per_class.then(|| {
        classes
            .iter()
            .zip(&totals)
            .map(|(class, &total)| ClassStat {
                coloring: class.coloring.clone(),
                orbit_colorings: class.orbit_colorings,
                total,
            })
            .collect()
    });

    Ok(SearchReport {
        value,
        witness: classes[best_idx].coloring.clone(),
        classes_examined: classes.len() as u64,
        per_class,
        formula_agreement: None,
    })
}

/// Verdict for one host size in a [`gr_search`] sweep.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GrStatus {
    /// every exact k-coloring contains a rainbow G or a monochromatic H
    Good,
    /// a counterexample coloring exists
    Bad { witness: EdgeColoring },
    /// k exceeds the edge count, so no exact k-coloring exists; counts as
    /// not-Good, matching the lower-bound convention
    NoExactColorings,
}

#[derive(Debug, Clone, Serialize)]
pub struct GrVerdict {
    pub n: u32,
    #[serde(flatten)]
    pub status: GrStatus,
}

/// Result of a bounded gr/bgr verification sweep.
#[derive(Debug, Clone, Serialize)]
pub struct GrReport {
    pub setting: Setting,
    pub k: u32,
    pub verdicts: Vec<GrVerdict>,
    /// least N in range with every n in [N, n_max] Good; None when n_max
    /// itself is not Good
    pub bounded_n: Option<u32>,
    pub note: String,
}

/// Checks for each `n` in the range whether every canonical exact k-coloring
/// of the host of size `n` contains a rainbow `g` or a monochromatic `h`, and
/// reports the least N from which the whole tail of the range is Good.
///
/// This is bounded verification only: the theorems' "for all n >= N"
/// quantifier is not decided by search.
pub fn gr_search(
    setting: Setting,
    g: &PatternGraph,
    h: &PatternGraph,
    k: u32,
    n_range: std::ops::RangeInclusive<u32>,
) -> Result<GrReport> {
    if n_range.is_empty() {
        return Err(Error::invalid("empty host size range".to_string()));
    }
    let mut verdicts = Vec::new();
    for n in n_range.clone() {
        let host = setting.host(n)?;
        if k > host.edge_count() {
            verdicts.push(GrVerdict { n, status: GrStatus::NoExactColorings });
            continue;
        }
        let copies_g = enumerate_copies(&host, g)?;
        let copies_h = enumerate_copies(&host, h)?;
        let mut bad: Option<EdgeColoring> = None;
        crate::coloring::for_each_exact_coloring_class(&host, k, None, |class| {
            if bad.is_some() {
                return;
            }
            let ok = has_rainbow_in(&class.coloring, &copies_g)
                || count_mono_in(&class.coloring, &copies_h) > 0;
            if !ok {
                bad = Some(class.coloring);
            }
        })?;
        verdicts.push(GrVerdict {
            n,
            status: match bad {
                Some(witness) => GrStatus::Bad { witness },
                None => GrStatus::Good,
            },
        });
    }
    let mut bounded_n = None;
    for v in verdicts.iter().rev() {
        match v.status {
            GrStatus::Good => bounded_n = Some(v.n),
            _ => break,
        }
    }
    Ok(GrReport {
        setting,
        k,
        verdicts,
        bounded_n,
        note: format!(
            "bounded verification over n in {}..={} only; the for-all-n claim beyond the range is not decided by search",
            n_range.start(),
            n_range.end()
        ),
    })
}

/// True iff the coloring's copy total for (rainbow g, mono h) equals the
/// reported search value; used to re-check witnesses.
pub fn witness_consistent(report: &SearchReport, g: &PatternGraph, h: &PatternGraph) -> Result<bool> {
    let host = report.witness.host();
    let copies_g = enumerate_copies(host, g)?;
    let copies_h = enumerate_copies(host, h)?;
    Ok(count_rainbow_in(&report.witness, &copies_g) + count_mono_in(&report.witness, &copies_h) == report.value)
}

/// First rainbow copy of `g` in the witness, if any; handy for reports.
pub fn witness_rainbow_copy(report: &SearchReport, g: &PatternGraph) -> Result<Option<Vec<EdgeId>>> {
    crate::counting::rainbow_witness(&report.witness, g)
}
