//! Closed-form evaluation of the Gallai-Ramsey number and multiplicity
//! formulas, with strict hypothesis checking: a value is emitted only when
//! every hypothesis of the selected theorem passes, even though the branch
//! expression would be computable outside its proven range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::host::HostGraph;
use crate::pattern::{embeds_in_balanced_multipartite, embeds_in_star, PatternGraph, RainbowTarget};
use crate::util::{binomial, binomial_sat, sub_sat};

/// Which host family a query concerns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Setting {
    Complete,
    Bipartite,
}

impl Setting {
    pub fn host(&self, n: u32) -> Result<HostGraph> {
        match self {
            Setting::Complete => HostGraph::complete(n),
            Setting::Bipartite => HostGraph::bipartite(n),
        }
    }

    /// The color count of a full host of size `t`: `C(t,2)` or `t^2`.
    pub fn table_k(&self, t: u32) -> u32 {
        match self {
            Setting::Complete => t * (t - 1) / 2,
            Setting::Bipartite => t * t,
        }
    }

    /// Inverse of [`table_k`](Self::table_k), if `k` is attainable.
    pub fn t_from_k(&self, k: u32) -> Option<u32> {
        let mut t = 1;
        loop {
            let kk = self.table_k(t);
            if kk == k {
                return Some(t);
            }
            if kk > k {
                return None;
            }
            t += 1;
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Setting::Complete => "complete",
            Setting::Bipartite => "bipartite",
        }
    }
}

/// The smallest host size admitting an exact k-coloring: least `n >= 2` with
/// `C(n,2) >= k` for complete hosts, least `n >= 1` with `n^2 >= k` for
/// bipartite hosts. Exact integer arithmetic, no radicals.
pub fn least_host_size(setting: Setting, k: u32) -> u32 {
    let mut n = match setting {
        Setting::Complete => 2,
        Setting::Bipartite => 1,
    };
    while setting.table_k(n) < k {
        n += 1;
    }
    n
}

/// A formula query: `k` is the actual color count for `gr` formulas; for
/// multiplicity formulas it is the full-host color count (`C(t,2)` or `t^2`)
/// and `offset` selects `GM_k`, `GM_{k-1}` or `GM_{k-2}`.
#[derive(Debug, Clone)]
pub struct FormulaQuery {
    pub setting: Setting,
    pub target: RainbowTarget,
    pub k: u32,
    pub offset: i32,
    pub h: PatternGraph,
}

/// One checked hypothesis of a theorem.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisCheck {
    pub condition: String,
    pub pass: bool,
}

/// Outcome of a formula evaluation; `value` is present only when every
/// hypothesis passes.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaResult {
    pub value: Option<u64>,
    pub branch: String,
    pub hypotheses: Vec<HypothesisCheck>,
}

impl FormulaResult {
    fn failed(branch: impl Into<String>, hypotheses: Vec<HypothesisCheck>) -> Self {
        FormulaResult { value: None, branch: branch.into(), hypotheses }
    }

    pub fn failing_conditions(&self) -> Vec<&str> {
        self.hypotheses.iter().filter(|h| !h.pass).map(|h| h.condition.as_str()).collect()
    }
}

struct Hypotheses {
    checks: Vec<HypothesisCheck>,
}

impl Hypotheses {
    fn new() -> Self {
        Hypotheses { checks: Vec::new() }
    }

    fn require(&mut self, condition: impl Into<String>, pass: bool) -> &mut Self {
        self.checks.push(HypothesisCheck { condition: condition.into(), pass });
        self
    }

    fn all_pass(&self) -> bool {
        self.checks.iter().all(|h| h.pass)
    }
}

fn h_multipartite_check(h: &PatternGraph, parts: u32, hy: &mut Hypotheses) {
    hy.require(
        format!("H is a subgraph of the balanced complete {parts}-partite graph K_({parts}x2)"),
        embeds_in_balanced_multipartite(h, parts, 2),
    );
}

fn h_star_check(h: &PatternGraph, leaves: u32, hy: &mut Hypotheses) {
    hy.require(format!("H is a subgraph of K_(1,{leaves})"), embeds_in_star(h, leaves));
}

fn h_edges_check(h: &PatternGraph, min_edges: u32, hy: &mut Hypotheses) {
    hy.require(format!("|E(H)| >= {min_edges}"), h.edge_count() >= min_edges);
}

/// Exact Gallai-Ramsey / bipartite Gallai-Ramsey number for the supported
/// rainbow targets; `q.k` is the actual color count and `q.offset` is ignored.
pub fn gr_formula(q: &FormulaQuery) -> Result<FormulaResult> {
    let k = q.k;
    let mut hy = Hypotheses::new();
    match (q.setting, q.target) {
        (Setting::Complete, RainbowTarget::K13) => {
            hy.require(format!("k >= 4 (k = {k})"), k >= 4);
            if k >= 2 {
                h_multipartite_check(&q.h, k - 1, &mut hy);
            }
            let n = least_host_size(Setting::Complete, k);
            finish(hy, n as u64, format!("least n with C(n,2) >= {k}"))
        }
        (Setting::Complete, RainbowTarget::P4) => {
            hy.require(format!("k >= 4 (k = {k})"), k >= 4);
            let n = least_host_size(Setting::Complete, k);
            finish(hy, n as u64, format!("least n with C(n,2) >= {k}; no condition on H"))
        }
        (Setting::Complete, RainbowTarget::P4Plus) => {
            hy.require(format!("k >= 5 (k = {k})"), k >= 5);
            if k >= 2 {
                h_multipartite_check(&q.h, k - 1, &mut hy);
            }
            if (5..=6).contains(&k) {
                finish(hy, 5, "5 for 5 <= k <= 6".to_string())
            } else {
                let n = least_host_size(Setting::Complete, k);
                finish(hy, n as u64, format!("least n with C(n,2) >= {k} for k >= 7"))
            }
        }
        (Setting::Complete, RainbowTarget::P5) => {
            hy.require(format!("k >= 5 (k = {k})"), k >= 5);
            let vh = q.h.vertex_count();
            if k >= vh + 1 {
                let n = least_host_size(Setting::Complete, k).max(5);
                finish(hy, n as u64, format!("max(least n with C(n,2) >= {k}, 5) for k >= |V(H)|+1"))
            } else if k == vh {
                if q.h.is_complete() {
                    let n = (vh as u64 - 1) * (vh as u64 - 1) + 1;
                    finish(hy, n, "(|V(H)|-1)^2+1 for k = |V(H)| with H complete".to_string())
                } else {
                    finish(hy, vh as u64 + 1, "|V(H)|+1 for k = |V(H)| with H not complete".to_string())
                }
            } else {
                hy.require(format!("k >= |V(H)| (k = {k}, |V(H)| = {vh})"), false);
                Ok(FormulaResult::failed("no branch covers k < |V(H)|", hy.checks))
            }
        }
        (Setting::Bipartite, RainbowTarget::P4) => {
            hy.require(format!("k >= 3 (k = {k})"), k >= 3);
            h_star_check(&q.h, k, &mut hy);
            let n = least_host_size(Setting::Bipartite, k);
            finish(hy, n as u64, format!("least n with n^2 >= {k}"))
        }
        (Setting::Bipartite, RainbowTarget::P5) | (Setting::Bipartite, RainbowTarget::K13) => {
            hy.require(format!("k >= 5 (k = {k})"), k >= 5);
            if k >= 2 {
                h_star_check(&q.h, (k - 1).div_ceil(2), &mut hy);
            }
            let n = least_host_size(Setting::Bipartite, k);
            finish(hy, n as u64, format!("least n with n^2 >= {k}"))
        }
        (Setting::Bipartite, RainbowTarget::P4Plus) => {
            Err(Error::unsupported("no bipartite theorem covers rainbow P4plus".to_string()))
        }
    }
}

fn finish(hy: Hypotheses, value: u64, branch: String) -> Result<FormulaResult> {
    if hy.all_pass() {
        Ok(FormulaResult { value: Some(value), branch, hypotheses: hy.checks })
    } else {
        Ok(FormulaResult::failed(branch, hy.checks))
    }
}

/// The multiplicity value of the theorem branch at `(setting, target, offset,
/// t)`, as pure arithmetic on `t`; `None` when `t` is below the family's
/// stated range. Hypotheses on H are NOT checked here — see [`gm_formula`].
pub fn gm_table_value(setting: Setting, target: RainbowTarget, offset: i32, t: u32) -> Option<u64> {
    let t64 = t as u64;
    let c = |k: u64| binomial(t64, k);
    match (setting, target, offset) {
        (Setting::Complete, RainbowTarget::K13, 0) if t >= 4 => Some(t64 * binomial(t64 - 1, 3)),
        (Setting::Complete, RainbowTarget::K13, -1) if t >= 4 => Some(match t {
            4 => 3,
            5 => 18,
            _ => (t64 - 1) * binomial(t64 - 1, 3) + binomial(t64 - 3, 3) + 2 * binomial(t64 - 3, 2),
        }),
        (Setting::Complete, RainbowTarget::K13, -2) if t >= 4 => Some(match t {
            4 => 1,
            5 => 14,
            _ => (t64 - 3) * binomial(t64 - 1, 3) + 3 * binomial(t64 - 3, 3) + 6 * binomial(t64 - 3, 2),
        }),
        (Setting::Complete, RainbowTarget::P4Plus, 0) if t >= 5 => Some(60 * c(5)),
        (Setting::Complete, RainbowTarget::P4Plus, -1) if t >= 5 => Some(60 * c(5) - 5 * (t64 - 3) * (t64 - 4)),
        (Setting::Complete, RainbowTarget::P4Plus, -2) if t >= 5 => Some(60 * c(5) - 15 * (t64 - 3) * (t64 - 4)),
        (Setting::Complete, RainbowTarget::P4, 0) if t >= 4 => Some(12 * c(4)),
        (Setting::Complete, RainbowTarget::P4, -1) if t >= 4 => {
            Some(if t == 4 { 8 } else { 12 * c(4) - 2 * (t64 - 3) })
        }
        (Setting::Complete, RainbowTarget::P4, -2) if t >= 4 => {
            Some(if t == 4 { 4 } else { 12 * c(4) - 6 * (t64 - 3) })
        }
        (Setting::Complete, RainbowTarget::P5, 0) if t >= 5 => Some(60 * c(5)),
        (Setting::Complete, RainbowTarget::P5, -1) if t >= 5 => Some(if t <= 6 {
            60 * c(5) - 12 * (t64 - 4)
        } else {
            60 * c(5) - 3 * (t64 - 3) * (t64 - 4)
        }),
        (Setting::Complete, RainbowTarget::P5, -2) if t >= 5 => Some(match t {
            5 => 38,
            6 => 288,
            _ => 60 * c(5) - 9 * (t64 - 3) * (t64 - 4),
        }),
        (Setting::Bipartite, RainbowTarget::P4, 0) if t >= 2 => Some(t64 * t64 * (t64 - 1) * (t64 - 1)),
        (Setting::Bipartite, RainbowTarget::P4, -1) if t >= 2 => {
            Some(t64 * t64 * (t64 - 1) * (t64 - 1) - 2 * (t64 - 1))
        }
        (Setting::Bipartite, RainbowTarget::P4, -2) if t >= 3 => {
            Some(t64 * t64 * (t64 - 1) * (t64 - 1) - 6 * (t64 - 1))
        }
        (Setting::Bipartite, RainbowTarget::P5, 0) if t >= 3 => {
            Some(t64 * t64 * (t64 - 1) * (t64 - 1) * (t64 - 2))
        }
        (Setting::Bipartite, RainbowTarget::P5, -1) if t >= 3 => {
            Some(t64 * t64 * (t64 - 1) * (t64 - 1) * (t64 - 2) - 3 * (t64 - 1) * (t64 - 2))
        }
        (Setting::Bipartite, RainbowTarget::P5, -2) if t >= 3 => {
            Some(t64 * t64 * (t64 - 1) * (t64 - 1) * (t64 - 2) - 9 * (t64 - 1) * (t64 - 2))
        }
        (Setting::Bipartite, RainbowTarget::K13, 0) if t >= 3 => Some(2 * t64 * c(3)),
        (Setting::Bipartite, RainbowTarget::K13, -1) if t >= 3 => Some(match t {
            3 => 5,
            4 => 30,
            _ => (2 * t64 - 1) * c(3) + binomial(t64 - 2, 3) + 2 * binomial(t64 - 2, 2),
        }),
        (Setting::Bipartite, RainbowTarget::K13, -2) if t >= 3 => Some(match t {
            3 => 4,
            4 => 28,
            5 => 93,
            _ => (2 * t64 - 1) * c(3) + binomial(t64 - 3, 3) + 3 * binomial(t64 - 3, 2),
        }),
        _ => None,
    }
}

/// Exact Gallai-Ramsey / bipartite multiplicity for `q.target` at
/// `GM_{k+offset}`, where `q.k` must equal `C(t,2)` (complete) or `t^2`
/// (bipartite) for some `t`. Errors on an invalid `(k, t)` pairing; emits no
/// value when the theorem's hypotheses on H fail.
pub fn gm_formula(q: &FormulaQuery) -> Result<FormulaResult> {
    if !(-2..=0).contains(&q.offset) {
        return Err(Error::invalid(format!("offset must be 0, -1 or -2, got {}", q.offset)));
    }
    let Some(t) = q.setting.t_from_k(q.k) else {
        return Err(Error::invalid(format!(
            "k = {} is not of the form {} for any t",
            q.k,
            match q.setting {
                Setting::Complete => "C(t,2)",
                Setting::Bipartite => "t^2",
            }
        )));
    };
    let colors = q.k as i64 + q.offset as i64;
    if colors < 1 {
        return Err(Error::invalid(format!("k + offset = {colors} leaves no colors")));
    }
    let colors = colors as u32;
    let min_edges = (2 - q.offset) as u32;
    let mut hy = Hypotheses::new();
    h_edges_check(&q.h, min_edges, &mut hy);

    match (q.setting, q.target) {
        (Setting::Complete, RainbowTarget::K13) => {
            hy.require(format!("k = C(t,2) >= 6 (k = {})", q.k), q.k >= 6);
            if colors >= 2 {
                h_multipartite_check(&q.h, colors - 1, &mut hy);
            }
        }
        (Setting::Complete, RainbowTarget::P4Plus) => {
            hy.require(format!("k = C(t,2) >= 10 (k = {})", q.k), q.k >= 10);
            if colors >= 2 {
                h_multipartite_check(&q.h, colors - 1, &mut hy);
            }
        }
        (Setting::Complete, RainbowTarget::P4) => {
            hy.require(format!("k = C(t,2) >= 6 (k = {})", q.k), q.k >= 6);
        }
        (Setting::Complete, RainbowTarget::P5) => {
            let min_k = (q.h.vertex_count() + min_edges - 1).max(10);
            hy.require(
                format!("k = C(t,2) >= max(|V(H)|+{}, 10) = {min_k} (k = {})", min_edges - 1, q.k),
                q.k >= min_k,
            );
        }
        (Setting::Bipartite, RainbowTarget::P4) => {
            let min_k = if q.offset == -2 { 9 } else { 4 };
            hy.require(format!("k = t^2 >= {min_k} (k = {})", q.k), q.k >= min_k);
            h_star_check(&q.h, colors, &mut hy);
        }
        (Setting::Bipartite, RainbowTarget::P5) | (Setting::Bipartite, RainbowTarget::K13) => {
            hy.require(format!("k = t^2 >= 9 (k = {})", q.k), q.k >= 9);
            if colors >= 2 {
                h_star_check(&q.h, (colors - 1).div_ceil(2), &mut hy);
            }
        }
        (Setting::Bipartite, RainbowTarget::P4Plus) => {
            return Err(Error::unsupported("no bipartite theorem covers rainbow P4plus".to_string()));
        }
    }

    let branch = format!(
        "GM at {} colors on the size-{t} {} host, target {}",
        colors,
        q.setting.name(),
        q.target
    );
    match gm_table_value(q.setting, q.target, q.offset, t) {
        Some(value) if hy.all_pass() => Ok(FormulaResult { value: Some(value), branch, hypotheses: hy.checks }),
        Some(_) => Ok(FormulaResult::failed(branch, hy.checks)),
        None => Err(Error::invalid(format!("t = {t} is below the stated range for {branch}"))),
    }
}

/// Shape formed by the duplicated-color edges of an otherwise rainbow
/// coloring: either three edges of one repeated color, or two repeated colors
/// of two edges each meeting at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuplicateShape {
    /// three pairwise disjoint edges of the repeated color
    ThreeDisjoint,
    /// a two-edge path plus a disjoint edge
    PathPlusDisjoint,
    /// a path on four vertices
    FourPath,
    /// a triangle (complete hosts only)
    Triangle,
    /// a three-edge star
    ThreeStar,
    /// two colors, two edges each, all four meeting at one vertex
    TwoPairsAtVertex,
}

/// Rainbow `K_{1,3}` count in `K_t` when the duplicated-color edges form
/// `shape` and every other edge has a fresh color. Evaluated under the
/// saturating convention `C(a,b) = 0`, `a - b = 0` for `a < b`.
pub fn star_rainbow_after_duplicates_complete(t: u32, shape: DuplicateShape) -> u64 {
    let t = t as i64;
    let lead = |coef: i64| sub_sat(t, coef) * binomial_sat(t - 1, 3);
    match shape {
        DuplicateShape::ThreeDisjoint => sub_sat(t, 0) * binomial_sat(t - 1, 3),
        DuplicateShape::PathPlusDisjoint => lead(1) + binomial_sat(t - 3, 3) + 2 * binomial_sat(t - 3, 2),
        DuplicateShape::FourPath => lead(2) + 2 * binomial_sat(t - 3, 3) + 4 * binomial_sat(t - 3, 2),
        DuplicateShape::Triangle => lead(3) + 3 * binomial_sat(t - 3, 3) + 6 * binomial_sat(t - 3, 2),
        DuplicateShape::ThreeStar => lead(1) + binomial_sat(t - 4, 3) + 3 * binomial_sat(t - 4, 2),
        DuplicateShape::TwoPairsAtVertex => {
            lead(1) + binomial_sat(t - 5, 3) + 4 * binomial_sat(t - 5, 2) + 4 * sub_sat(t, 5)
        }
    }
}

/// Rainbow `K_{1,3}` count in `K_{t,t}` for the same constructions; `None`
/// for the triangle, which is not bipartite.
pub fn star_rainbow_after_duplicates_bipartite(t: u32, shape: DuplicateShape) -> Option<u64> {
    let t = t as i64;
    let lead = |coef: i64| sub_sat(2 * t, coef) * binomial_sat(t, 3);
    Some(match shape {
        DuplicateShape::ThreeDisjoint => lead(0),
        DuplicateShape::PathPlusDisjoint => lead(1) + binomial_sat(t - 2, 3) + 2 * binomial_sat(t - 2, 2),
        DuplicateShape::FourPath => lead(2) + 2 * binomial_sat(t - 2, 3) + 4 * binomial_sat(t - 2, 2),
        DuplicateShape::Triangle => return None,
        DuplicateShape::ThreeStar => lead(1) + binomial_sat(t - 3, 3) + 3 * binomial_sat(t - 3, 2),
        DuplicateShape::TwoPairsAtVertex => {
            lead(1) + binomial_sat(t - 4, 3) + 4 * binomial_sat(t - 4, 2) + 4 * sub_sat(t, 4)
        }
    })
}
