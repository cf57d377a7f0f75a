//! The verification harness: reproduces the multiplicity tables cell by cell
//! (formula vs search), and checks the guaranteed-rainbow threshold
//! propositions with sharpness witnesses.

use serde::Serialize;

use crate::coloring::{ColoringClass, EdgeColoring};
use crate::counting::{count_mono_in, count_rainbow_in, has_rainbow_in};
use crate::engine::formula::{gm_formula, gm_table_value, FormulaQuery, Setting};
use crate::engine::search::classes_for_search;
use crate::error::{Error, Result};
use crate::pattern::{enumerate_copies, BuiltinPattern, PatternGraph, RainbowTarget};
use crate::structure::{generate_structure, PartFill, StructureSpec};

/// One (family, offset, t) cell of a multiplicity table, with the formula
/// value, the search value, and their agreement flag.
#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    /// e.g. `complete-K13`
    pub family: String,
    pub setting: Setting,
    pub target: RainbowTarget,
    pub offset: i32,
    pub t: u32,
    /// actual color count swept: `C(t,2)+offset` or `t^2+offset`
    pub colors: u32,
    pub formula: u64,
    pub search: u64,
    pub agree: bool,
    /// name of the monochromatic target used on the search side
    pub h_name: String,
    /// set when the theorem's hypothesis on H is unsatisfiable at this cell
    /// and the formula value is the displayed branch
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_file: Option<String>,
    #[serde(skip)]
    pub witness: Option<EdgeColoring>,
}

/// Default table ranges: the verified complete-host families at `t = 4..=7`
/// (`P4plus` and `P5` from `t = 5`), bipartite at `t = 3..=5`.
pub fn default_table_plan(offsets: &[i32]) -> Vec<(Setting, RainbowTarget, i32, u32)> {
    let mut plan = Vec::new();
    for &offset in offsets {
        for t in 4..=7 {
            for target in [RainbowTarget::K13, RainbowTarget::P4, RainbowTarget::P4Plus, RainbowTarget::P5] {
                if matches!(target, RainbowTarget::P4Plus | RainbowTarget::P5) && t < 5 {
                    continue;
                }
                plan.push((Setting::Complete, target, offset, t));
            }
        }
        for t in 3..=5 {
            for target in [RainbowTarget::K13, RainbowTarget::P4, RainbowTarget::P5] {
                plan.push((Setting::Bipartite, target, offset, t));
            }
        }
    }
    plan
}

/// A monochromatic target satisfying the cell's hypotheses when one exists:
/// the star with exactly the required edge count. Returns the unsatisfiable
/// note instead when no H can satisfy them (the star bound is smaller than
/// the required edge count).
fn choose_h(setting: Setting, target: RainbowTarget, offset: i32, colors: u32) -> (PatternGraph, Option<String>) {
    let needed = (2 - offset) as u32;
    let h = BuiltinPattern::Star(needed).pattern().expect("small star");
    let bound = match (setting, target) {
        (Setting::Bipartite, RainbowTarget::P4) => Some(colors),
        (Setting::Bipartite, _) => Some((colors - 1).div_ceil(2)),
        (Setting::Complete, _) => None,
    };
    let note = match bound {
        Some(j) if needed > j => Some(format!(
            "no H satisfies |E(H)| >= {needed} and H subgraph of K_(1,{j}); \
             formula value is the displayed branch, search counts mono H = K1_{needed} (always zero here)"
        )),
        _ => None,
    };
    (h, note)
}

/// Evaluates every requested cell: formula value (through [`gm_formula`] with
/// a conforming H where one exists), search value over all consistent
/// profiles, and exact agreement. Fails on internal errors only; disagreement
/// is report content.
pub fn verify_tables(plan: &[(Setting, RainbowTarget, i32, u32)]) -> Result<Vec<TableCell>> {
    let mut cells = Vec::new();
    // classes are shared across targets of one (setting, t, offset) sweep
    let mut cached: Option<((Setting, u32, i32), Vec<ColoringClass>)> = None;
    for &(setting, target, offset, t) in plan {
        if gm_table_value(setting, target, offset, t).is_none() {
            continue; // below the family's stated range
        }
        let k_table = setting.table_k(t);
        let colors = (k_table as i64 + offset as i64) as u32;
        let host = setting.host(t)?;
        let (h, note) = choose_h(setting, target, offset, colors);

        let result = gm_formula(&FormulaQuery { setting, target, k: k_table, offset, h: h.clone() })?;
        let formula = match result.value {
            Some(v) => v,
            None if note.is_some() => gm_table_value(setting, target, offset, t).expect("checked above"),
            None => {
                return Err(Error::invalid(format!(
                    "hypotheses unexpectedly failed for {} {target} offset {offset} t {t}: {:?}",
                    setting.name(),
                    result.failing_conditions()
                )))
            }
        };

        let key = (setting, t, offset);
        if cached.as_ref().map(|(k, _)| *k) != Some(key) {
            cached = Some((key, classes_for_search(&host, colors, None)?));
        }
        let classes = &cached.as_ref().expect("just filled").1;

        let copies_g = enumerate_copies(&host, &target.pattern())?;
        let copies_h = enumerate_copies(&host, &h)?;
        let (search, witness) = classes
            .iter()
            .map(|class| {
                (
                    count_rainbow_in(&class.coloring, &copies_g) + count_mono_in(&class.coloring, &copies_h),
                    &class.coloring,
                )
            })
            .min_by(|(a, ca), (b, cb)| a.cmp(b).then_with(|| ca.colors().cmp(cb.colors())))
            .ok_or_else(|| Error::invalid("empty class sweep".to_string()))?;

        cells.push(TableCell {
            family: format!("{}-{}", setting.name(), target.name()),
            setting,
            target,
            offset,
            t,
            colors,
            formula,
            search,
            agree: formula == search,
            h_name: h.name().unwrap_or("H").to_string(),
            hypothesis_note: note,
            witness_file: None,
            witness: Some(witness.clone()),
        });
    }
    Ok(cells)
}

/// Per-k outcome of a threshold sweep.
#[derive(Debug, Clone, Serialize)]
pub struct KVerdict {
    pub k: u32,
    /// every exact k-coloring of the host contains a rainbow copy
    pub all_rainbow: bool,
}

/// Outcome of [`rainbow_threshold_check`].
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub setting: Setting,
    pub n: u32,
    pub pattern: String,
    /// the proposition's lower threshold
    pub expected_threshold: u32,
    /// least k from which every larger k (up to m) is all-rainbow
    pub observed_threshold: Option<u32>,
    pub per_k: Vec<KVerdict>,
    /// a coloring without a rainbow copy at expected_threshold - 1
    pub sharpness_witness: Option<EdgeColoring>,
    /// whether the witness came from a colored-structure generator
    pub witness_from_structure: bool,
    pub agrees: bool,
}

fn expected_threshold(setting: Setting, n: u32, p: BuiltinPattern) -> Result<u32> {
    match (setting, p) {
        (Setting::Complete, BuiltinPattern::P5) if n >= 5 => Ok(n + 1),
        (Setting::Complete, BuiltinPattern::K13) if n >= 4 => Ok((n + 3).div_ceil(2)),
        (Setting::Bipartite, BuiltinPattern::P4) if n >= 2 => Ok(n + 1),
        (Setting::Bipartite, BuiltinPattern::P5) if n >= 3 => Ok(n + 2),
        (Setting::Bipartite, BuiltinPattern::K13) if n >= 3 => Ok(n + 2),
        _ => Err(Error::unsupported(format!(
            "no guaranteed-rainbow proposition for {p:?} on a size-{n} {} host",
            setting.name()
        ))),
    }
}

/// A structure-generated coloring of the size-`n` host with
/// `expected_threshold - 1` colors and no rainbow copy of `p`.
fn structure_witness(setting: Setting, n: u32, p: BuiltinPattern) -> Result<EdgeColoring> {
    let spec = match (setting, p) {
        (Setting::Complete, BuiltinPattern::K13) => {
            // parts of size 2 for every color but the base
            let own_parts = (n + 1).div_ceil(2) - 1;
            let mut part_sizes = vec![n - 2 * own_parts];
            let mut part_fills = vec![PartFill::Base];
            part_sizes.extend(std::iter::repeat(2).take(own_parts as usize));
            part_fills.extend(std::iter::repeat(PartFill::Own).take(own_parts as usize));
            StructureSpec::Structure1 { n, part_sizes, part_fills }
        }
        (Setting::Complete, BuiltinPattern::P5) => {
            StructureSpec::Structure2 { n, spoke_colors: (2..=n).collect() }
        }
        (Setting::Bipartite, BuiltinPattern::P4) => StructureSpec::Structure3 { n, u_sizes: vec![1; n as usize] },
        (Setting::Bipartite, BuiltinPattern::P5) => {
            let mut v_sizes = vec![0];
            v_sizes.extend(std::iter::repeat(1).take(n as usize));
            StructureSpec::Structure4 { n, u1_size: 1, v_sizes }
        }
        (Setting::Bipartite, BuiltinPattern::K13) => {
            let mut sizes = vec![0];
            sizes.extend(std::iter::repeat(1).take(n as usize));
            StructureSpec::Structure5 {
                n,
                u_sizes: sizes.clone(),
                v_sizes: sizes,
                part_fills: std::iter::once(PartFill::Base)
                    .chain(std::iter::repeat(PartFill::Own).take(n as usize))
                    .collect(),
            }
        }
        _ => return Err(Error::unsupported("no structure witness for this combination".to_string())),
    };
    generate_structure(&spec)
}

/// Sweeps every exact k-coloring of the host for `k = 2..=m` and reports for
/// which k all colorings contain a rainbow `p`, confirming the proposition's
/// lower threshold and exhibiting a sharpness witness at threshold - 1.
pub fn rainbow_threshold_check(setting: Setting, n: u32, p: BuiltinPattern) -> Result<ThresholdReport> {
    let expected = expected_threshold(setting, n, p)?;
    let host = setting.host(n)?;
    let m = host.edge_count();
    let pattern = p.pattern()?;
    let copies = enumerate_copies(&host, &pattern)?;

    let mut per_k = Vec::new();
    let mut swept_witness: Option<EdgeColoring> = None;
    for k in 2..=m {
        let mut all_rainbow = true;
        let mut counterexample: Option<EdgeColoring> = None;
        crate::coloring::for_each_exact_coloring_class(&host, k, None, |class| {
            if !all_rainbow {
                return;
            }
            if !has_rainbow_in(&class.coloring, &copies) {
                all_rainbow = false;
                counterexample = Some(class.coloring);
            }
        })?;
        if k + 1 == expected {
            swept_witness = counterexample;
        }
        per_k.push(KVerdict { k, all_rainbow });
    }

    // least k with the whole tail all-rainbow
    let mut observed = None;
    for v in per_k.iter().rev() {
        if v.all_rainbow {
            observed = Some(v.k);
        } else {
            break;
        }
    }

    let (sharpness_witness, witness_from_structure) = match structure_witness(setting, n, p) {
        Ok(w) if w.k() == expected - 1 && !has_rainbow_in(&w, &copies) => (Some(w), true),
        _ => (swept_witness, false),
    };

    let agrees = observed == Some(expected) && sharpness_witness.is_some();
    Ok(ThresholdReport {
        setting,
        n,
        pattern: format!("{p:?}"),
        expected_threshold: expected,
        observed_threshold: observed,
        per_k,
        sharpness_witness,
        witness_from_structure,
        agrees,
    })
}
