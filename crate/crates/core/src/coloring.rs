//! Exact k-edge-colorings of a host: validation, canonical forms under
//! (color relabeling x host automorphism), and enumeration of one
//! representative per equivalence class with orbit sizes.
//!
//! Colorings are stored as one 1-based color label per edge index, which is
//! also the JSON wire format: `{"host": "Kn:5", "k": 9, "colors": [...]}`.
//!
//! Equivalence classes are enumerated through set partitions of the edge set
//! (color relabeling quotients away the labels), anchored so that classes are
//! created in increasing order of their minimal edge. A partition is kept iff
//! its multiset of non-singleton classes is lexicographically minimal over
//! all host automorphisms; singleton classes are forced, so that multiset
//! determines the partition. The emitted representative is the
//! lexicographically least color sequence in the orbit after first-occurrence
//! relabeling — an arbitrary but fixed convention that makes reports
//! reproducible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::host::{EdgeId, HostGraph, HostKind};
use crate::util::factorial_u128;

/// Enumeration guards: unrestricted sweeps materialize every set partition of
/// the edge set, profiled sweeps (at most three non-singleton classes) stay
/// tractable one size up.
pub const MAX_COMPLETE_ENUM: u32 = 6;
pub const MAX_COMPLETE_ENUM_PROFILED: u32 = 7;
pub const MAX_BIPARTITE_ENUM: u32 = 4;
pub const MAX_BIPARTITE_ENUM_PROFILED: u32 = 5;
/// A profile counts as restricted when all but this many classes are singletons.
pub const MAX_PROFILED_NON_SINGLETON: u32 = 3;

/// An edge coloring of a host with colors `1..=k`, one label per edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct EdgeColoring {
    host: HostGraph,
    k: u32,
    colors: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    host: HostGraph,
    k: u32,
    colors: Vec<u32>,
}

impl From<EdgeColoring> for RawColoring {
    fn from(c: EdgeColoring) -> RawColoring {
        RawColoring { host: c.host, k: c.k, colors: c.colors }
    }
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<EdgeColoring> {
        let c = EdgeColoring::new(raw.host, raw.k, raw.colors);
        // files must parse into structurally valid colorings; exactness and
        // the rest stay reportable through validate()
        if raw_length_bad(&c) {
            return Err(Error::invalid(format!(
                "coloring length {} does not match edge count {} of {}",
                c.colors.len(),
                c.host.edge_count(),
                c.host
            )));
        }
        Ok(c)
    }
}

fn raw_length_bad(c: &EdgeColoring) -> bool {
    c.colors.len() != c.host.edge_count() as usize
}

/// A single problem reported by [`EdgeColoring::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    LengthMismatch { expected: u32, got: u32 },
    ColorCountOutOfRange { k: u32, edge_count: u32 },
    LabelOutOfRange { edge: u32, label: u32 },
    MissingColor { color: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LengthMismatch { expected, got } => {
                write!(f, "color sequence length {got} differs from edge count {expected}")
            }
            Violation::ColorCountOutOfRange { k, edge_count } => {
                write!(f, "k = {k} outside 1..={edge_count}")
            }
            Violation::LabelOutOfRange { edge, label } => {
                write!(f, "edge {edge} carries label {label} outside 1..=k")
            }
            Violation::MissingColor { color } => write!(f, "color {color} unused"),
        }
    }
}

impl EdgeColoring {
    /// Wraps a color sequence without validation; diagnose with [`validate`](Self::validate).
    pub fn new(host: HostGraph, k: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { host, k, colors }
    }

    /// Builds the exact coloring in which the given pairwise-disjoint edge
    /// groups share one fresh color each and every remaining edge gets its
    /// own color. Groups must be non-empty and disjoint.
    pub fn with_repeated_classes(host: &HostGraph, groups: &[Vec<EdgeId>]) -> Result<Self> {
        let m = host.edge_count();
        let mut colors = vec![0u32; m as usize];
        let mut next = 0u32;
        for group in groups {
            if group.is_empty() {
                return Err(Error::invalid("repeated class must be non-empty".to_string()));
            }
            next += 1;
            for &e in group {
                host.check_edge(e)?;
                if colors[e.0 as usize] != 0 {
                    return Err(Error::invalid(format!("edge {} assigned to two classes", e.0)));
                }
                colors[e.0 as usize] = next;
            }
        }
        for slot in colors.iter_mut() {
            if *slot == 0 {
                next += 1;
                *slot = next;
            }
        }
        Ok(EdgeColoring::new(*host, next, colors).relabeled_by_first_occurrence())
    }

    pub fn host(&self) -> &HostGraph {
        &self.host
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e.0 as usize]
    }

    /// Reports every violation of the exact-coloring invariants: length
    /// mismatch, k out of range, out-of-range labels, unused colors.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = self.host.edge_count();
        if self.colors.len() != m as usize {
            out.push(Violation::LengthMismatch { expected: m, got: self.colors.len() as u32 });
        }
        if self.k < 1 || self.k > m {
            out.push(Violation::ColorCountOutOfRange { k: self.k, edge_count: m });
        }
        let mut used = vec![false; self.k as usize + 1];
        for (e, &label) in self.colors.iter().enumerate() {
            if label < 1 || label > self.k {
                out.push(Violation::LabelOutOfRange { edge: e as u32, label });
            } else {
                used[label as usize] = true;
            }
        }
        if self.colors.len() == m as usize {
            for color in 1..=self.k {
                if !used[color as usize] {
                    out.push(Violation::MissingColor { color });
                }
            }
        }
        out
    }

    /// True when [`validate`](Self::validate) reports nothing: the coloring is
    /// an exact k-edge-coloring of its host.
    pub fn is_exact(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn require_exact(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            return Ok(());
        }
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        Err(Error::invalid(format!("coloring is not exact: {}", list.join("; "))))
    }

    /// The edges of each color, indexed by color label.
    pub fn color_classes(&self) -> Vec<Vec<EdgeId>> {
        let mut classes = vec![Vec::new(); self.k as usize];
        for (e, &label) in self.colors.iter().enumerate() {
            if (1..=self.k).contains(&label) {
                classes[label as usize - 1].push(EdgeId(e as u32));
            }
        }
        classes
    }

    /// Relabels colors in order of first occurrence along the edge sequence.
    pub fn relabeled_by_first_occurrence(&self) -> EdgeColoring {
        EdgeColoring::new(self.host, self.k, normalize_first_occurrence(&self.colors))
    }

    /// The coloring obtained by pushing this one forward through an edge
    /// permutation: edge `perm[e]` receives the old color of `e`.
    pub fn apply_edge_perm(&self, perm: &[u32]) -> EdgeColoring {
        let mut colors = vec![0u32; self.colors.len()];
        for (e, &label) in self.colors.iter().enumerate() {
            colors[perm[e] as usize] = label;
        }
        EdgeColoring::new(self.host, self.k, colors)
    }
}

fn normalize_first_occurrence(colors: &[u32]) -> Vec<u32> {
    let mut map = vec![0u32; colors.len() + 2];
    let mut next = 0u32;
    colors
        .iter()
        .map(|&label| {
            let slot = &mut map[label as usize];
            if *slot == 0 {
                next += 1;
                *slot = next;
            }
            *slot
        })
        .collect()
}

/// The orbit representative of a coloring under (host automorphism x color
/// relabeling): the minimal color sequence after first-occurrence relabeling,
/// minimized over all host automorphisms. Two exact colorings are equivalent
/// iff their canonical forms are equal.
pub fn canonicalize(c: &EdgeColoring) -> Result<EdgeColoring> {
    c.require_exact()?;
    let perms = c.host().edge_automorphisms()?;
    let mut best: Option<Vec<u32>> = None;
    for perm in &perms {
        let candidate = normalize_first_occurrence(&c.apply_edge_perm(perm).colors);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    Ok(EdgeColoring::new(*c.host(), c.k(), best.expect("automorphism group is non-empty")))
}

/// A multiset of color-class sizes: `k` parts, each >= 1, summing to the
/// host's edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ColorClassProfile {
    sizes: Vec<u32>, // sorted descending
}

impl ColorClassProfile {
    pub fn new(mut sizes: Vec<u32>) -> Result<Self> {
        if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
            return Err(Error::invalid("profile parts must be positive".to_string()));
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ColorClassProfile { sizes })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn class_count(&self) -> u32 {
        self.sizes.len() as u32
    }

    pub fn total(&self) -> u32 {
        self.sizes.iter().sum()
    }

    pub fn non_singleton_count(&self) -> u32 {
        self.sizes.iter().filter(|&&s| s > 1).count() as u32
    }

    pub fn check_consistent(&self, host: &HostGraph, k: u32) -> Result<()> {
        if self.class_count() != k || self.total() != host.edge_count() {
            return Err(Error::invalid(format!(
                "profile {self} is inconsistent with m = {} and k = {k}",
                host.edge_count()
            )));
        }
        Ok(())
    }

    /// The class-size profile of an exact coloring.
    pub fn of(c: &EdgeColoring) -> Result<Self> {
        c.require_exact()?;
        ColorClassProfile::new(c.color_classes().iter().map(|cls| cls.len() as u32).collect())
    }

    /// Parses `"3,1,1"` or the run-length form `"2,2,1^17"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut sizes = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (size, reps) = match piece.split_once('^') {
                Some((size, reps)) => (size, reps),
                None => (piece, "1"),
            };
            let size: u32 = size
                .parse()
                .map_err(|_| Error::invalid(format!("malformed profile part {piece:?}")))?;
            let reps: u32 = reps
                .parse()
                .map_err(|_| Error::invalid(format!("malformed profile repetition {piece:?}")))?;
            sizes.extend(std::iter::repeat(size).take(reps as usize));
        }
        ColorClassProfile::new(sizes)
    }
}

impl fmt::Display for ColorClassProfile {
    /// Run-length rendering, e.g. `2^2,1^17`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn emit(f: &mut fmt::Formatter<'_>, size: u32, count: u32, first: &mut bool) -> fmt::Result {
            if !*first {
                write!(f, ",")?;
            }
            *first = false;
            if count == 1 {
                write!(f, "{size}")
            } else {
                write!(f, "{size}^{count}")
            }
        }
        let mut first = true;
        let mut run: Option<(u32, u32)> = None;
        for &s in &self.sizes {
            match run {
                Some((size, count)) if size == s => run = Some((size, count + 1)),
                Some((size, count)) => {
                    emit(f, size, count, &mut first)?;
                    run = Some((s, 1));
                }
                None => run = Some((s, 1)),
            }
        }
        if let Some((size, count)) = run {
            emit(f, size, count, &mut first)?;
        }
        Ok(())
    }
}

impl From<ColorClassProfile> for Vec<u32> {
    fn from(p: ColorClassProfile) -> Vec<u32> {
        p.sizes
    }
}

impl TryFrom<Vec<u32>> for ColorClassProfile {
    type Error = Error;

    fn try_from(sizes: Vec<u32>) -> Result<Self> {
        ColorClassProfile::new(sizes)
    }
}

/// All class-size profiles consistent with `(m, k)`: the integer partitions
/// of `m` into exactly `k` positive parts, in descending-lex order.
pub fn all_profiles(m: u32, k: u32) -> Vec<ColorClassProfile> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(remaining: u32, slots: u32, max: u32, parts: &mut Vec<u32>, out: &mut Vec<ColorClassProfile>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(ColorClassProfile::new(parts.clone()).expect("positive parts"));
            }
            return;
        }
        let hi = max.min(remaining.saturating_sub(slots - 1));
        for next in (1..=hi).rev() {
            parts.push(next);
            rec(remaining - next, slots - 1, next, parts, out);
            parts.pop();
        }
    }
    if k >= 1 && k <= m {
        rec(m, k, m, &mut parts, &mut out);
    }
    out
}

/// One equivalence class of exact colorings under (color relabeling x host
/// automorphism).
#[derive(Debug, Clone)]
pub struct ColoringClass {
    /// Canonical representative: the lexicographically least relabeled color
    /// sequence in the orbit.
    pub coloring: EdgeColoring,
    /// Orbit size among unlabeled edge partitions, i.e. under host
    /// automorphisms alone.
    pub orbit_partitions: u64,
    /// Orbit size among labeled-color colorings: `orbit_partitions * k!`.
    /// Summed over all classes this gives `k! * S(m, k)` (restricted to the
    /// profile when one is given).
    pub orbit_colorings: u128,
    /// Number of host automorphisms fixing the partition setwise.
    pub stabilizer: u64,
}

/// Whether the host is small enough for an unprofiled full enumeration.
pub(crate) fn unrestricted_enum_allowed(host: &HostGraph) -> bool {
    match host.kind() {
        HostKind::Complete => host.size() <= MAX_COMPLETE_ENUM,
        HostKind::CompleteBipartite => host.size() <= MAX_BIPARTITE_ENUM,
    }
}

fn enumeration_guard(host: &HostGraph, profile: Option<&ColorClassProfile>) -> Result<()> {
    let restricted = profile.is_some_and(|p| p.non_singleton_count() <= MAX_PROFILED_NON_SINGLETON);
    let (limit, what) = match (host.kind(), restricted) {
        (HostKind::Complete, false) => (MAX_COMPLETE_ENUM, "unrestricted complete coloring enumeration (n)"),
        (HostKind::Complete, true) => (MAX_COMPLETE_ENUM_PROFILED, "profiled complete coloring enumeration (n)"),
        (HostKind::CompleteBipartite, false) => {
            (MAX_BIPARTITE_ENUM, "unrestricted bipartite coloring enumeration (n)")
        }
        (HostKind::CompleteBipartite, true) => {
            (MAX_BIPARTITE_ENUM_PROFILED, "profiled bipartite coloring enumeration (n)")
        }
    };
    if host.size() > limit {
        return Err(Error::GuardExceeded { what, limit: limit as u64, got: host.size() as u64 });
    }
    Ok(())
}

/// Streams one [`ColoringClass`] per equivalence class of exact k-colorings
/// of the host, optionally restricted to a class-size profile.
pub fn for_each_exact_coloring_class(
    host: &HostGraph,
    k: u32,
    profile: Option<&ColorClassProfile>,
    mut visit: impl FnMut(ColoringClass),
) -> Result<()> {
    let m = host.edge_count();
    if k < 1 || k > m {
        return Err(Error::invalid(format!("exact colorings need 1 <= k <= m, got k = {k}, m = {m}")));
    }
    if let Some(p) = profile {
        p.check_consistent(host, k)?;
    }
    enumeration_guard(host, profile)?;
    let perms = host.edge_automorphisms()?;
    let group_order = perms.len() as u64;
    let k_factorial = factorial_u128(k as u64);

    let mut gen = PartitionGen {
        m: m as usize,
        k: k as usize,
        profiled: profile.is_some(),
        size_counts: profile.map(|p| aggregate_sizes(p.sizes())).unwrap_or_default(),
        assigned: vec![false; m as usize],
        unassigned: m as usize,
        classes: Vec::with_capacity(k as usize),
        emit: &mut |classes: &[Vec<u32>]| {
            let support: Vec<&Vec<u32>> = classes.iter().filter(|c| c.len() >= 2).collect();
            let Some(stab) = support_stabilizer(&support, &perms) else {
                return; // a lexicographically smaller image exists elsewhere in the orbit
            };
            let orbit_partitions = group_order / stab;
            let coloring = canonical_coloring_of_partition(host, k, classes, &perms);
            visit(ColoringClass {
                coloring,
                orbit_partitions,
                orbit_colorings: orbit_partitions as u128 * k_factorial,
                stabilizer: stab,
            });
        },
    };
    gen.next_class();
    Ok(())
}

/// Collects [`for_each_exact_coloring_class`] into a vector.
pub fn enumerate_exact_colorings(
    host: &HostGraph,
    k: u32,
    profile: Option<&ColorClassProfile>,
) -> Result<Vec<ColoringClass>> {
    let mut out = Vec::new();
    for_each_exact_coloring_class(host, k, profile, |class| out.push(class))?;
    Ok(out)
}

fn aggregate_sizes(sizes: &[u32]) -> Vec<(u32, u32)> {
    let mut counts: Vec<(u32, u32)> = Vec::new();
    for &s in sizes {
        match counts.iter_mut().find(|(size, _)| *size == s) {
            Some((_, c)) => *c += 1,
            None => counts.push((s, 1)),
        }
    }
    counts
}

/// Anchored set-partition generator: each class is opened at the smallest
/// unassigned edge, so every unordered partition is produced exactly once.
struct PartitionGen<'a> {
    m: usize,
    k: usize,
    profiled: bool,
    /// Remaining (size, count) pairs when a profile restricts the shape.
    size_counts: Vec<(u32, u32)>,
    assigned: Vec<bool>,
    unassigned: usize,
    classes: Vec<Vec<u32>>,
    emit: &'a mut dyn FnMut(&[Vec<u32>]),
}

impl PartitionGen<'_> {
    fn next_class(&mut self) {
        let Some(anchor) = self.assigned.iter().position(|&a| !a) else {
            if self.classes.len() == self.k {
                (self.emit)(&self.classes);
            }
            return;
        };
        let classes_left = self.k - self.classes.len();
        if classes_left == 0 || self.unassigned < classes_left {
            return;
        }
        let max_size = (self.unassigned - (classes_left - 1)) as u32;
        if self.profiled {
            for idx in 0..self.size_counts.len() {
                let (size, remaining) = self.size_counts[idx];
                if remaining == 0 || size > max_size {
                    continue;
                }
                self.size_counts[idx].1 -= 1;
                self.open_class(anchor, size);
                self.size_counts[idx].1 += 1;
            }
        } else {
            for size in 1..=max_size {
                self.open_class(anchor, size);
            }
        }
    }

    fn open_class(&mut self, anchor: usize, size: u32) {
        self.assigned[anchor] = true;
        self.unassigned -= 1;
        self.classes.push(vec![anchor as u32]);
        self.fill_members(anchor + 1, size - 1);
        self.classes.pop();
        self.assigned[anchor] = false;
        self.unassigned += 1;
    }

    fn fill_members(&mut self, from: usize, need: u32) {
        if need == 0 {
            self.next_class();
            return;
        }
        for e in from..self.m {
            if self.assigned[e] {
                continue;
            }
            self.assigned[e] = true;
            self.unassigned -= 1;
            self.classes.last_mut().unwrap().push(e as u32);
            self.fill_members(e + 1, need - 1);
            self.classes.last_mut().unwrap().pop();
            self.assigned[e] = false;
            self.unassigned += 1;
        }
    }
}

/// Returns the setwise stabilizer order when the non-singleton support is the
/// lexicographic minimum of its orbit, `None` otherwise (early exit on the
/// first smaller image).
fn support_stabilizer(support: &[&Vec<u32>], perms: &[Vec<u32>]) -> Option<u64> {
    let mut stab = 0u64;
    let mut mapped: Vec<Vec<u32>> = support.iter().map(|c| Vec::with_capacity(c.len())).collect();
    for perm in perms {
        for (slot, class) in mapped.iter_mut().zip(support) {
            slot.clear();
            slot.extend(class.iter().map(|&e| perm[e as usize]));
            slot.sort_unstable();
        }
        mapped.sort_unstable();
        match compare_supports(&mapped, support) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => stab += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    Some(stab)
}

fn compare_supports(mapped: &[Vec<u32>], original: &[&Vec<u32>]) -> std::cmp::Ordering {
    for (a, b) in mapped.iter().zip(original.iter()) {
        match a.as_slice().cmp(b.as_slice()) {
            std::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

fn canonical_coloring_of_partition(
    host: &HostGraph,
    k: u32,
    classes: &[Vec<u32>],
    perms: &[Vec<u32>],
) -> EdgeColoring {
    let m = host.edge_count() as usize;
    let mut colors = vec![0u32; m];
    for (i, class) in classes.iter().enumerate() {
        for &e in class {
            colors[e as usize] = i as u32 + 1;
        }
    }
    let mut permuted = vec![0u32; m];
    let mut best: Option<Vec<u32>> = None;
    for perm in perms {
        for (e, &label) in colors.iter().enumerate() {
            permuted[perm[e] as usize] = label;
        }
        let candidate = normalize_first_occurrence(&permuted);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    EdgeColoring::new(*host, k, best.expect("non-empty automorphism group"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::VertexId;

    fn k4() -> HostGraph {
        HostGraph::complete(4).unwrap()
    }

    fn edge(host: &HostGraph, a: u32, b: u32) -> EdgeId {
        host.edge_index(VertexId(a), VertexId(b)).unwrap()
    }

    #[test]
    fn validate_examples() {
        let ok = EdgeColoring::new(k4(), 6, vec![1, 2, 3, 4, 5, 6]);
        assert!(ok.validate().is_empty());

        let missing = EdgeColoring::new(k4(), 2, vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(missing.validate(), vec![Violation::MissingColor { color: 2 }]);

        let short = EdgeColoring::new(HostGraph::bipartite(2).unwrap(), 3, vec![1, 2, 3]);
        assert!(short
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::LengthMismatch { expected: 4, got: 3 })));
    }

    #[test]
    fn canonicalize_is_idempotent_and_merges_equivalent_pairs() {
        let host = k4();
        // repeated color on {0,1},{2,3} vs {0,2},{1,3}: both disjoint pairs
        let a = EdgeColoring::with_repeated_classes(&host, &[vec![edge(&host, 0, 1), edge(&host, 2, 3)]]).unwrap();
        let b = EdgeColoring::with_repeated_classes(&host, &[vec![edge(&host, 0, 2), edge(&host, 1, 3)]]).unwrap();
        let ca = canonicalize(&a).unwrap();
        let cb = canonicalize(&b).unwrap();
        assert_eq!(ca, cb);
        assert_eq!(canonicalize(&ca).unwrap(), ca);

        // adjacency of the repeated pair is invariant, so this one differs
        let c = EdgeColoring::with_repeated_classes(&host, &[vec![edge(&host, 0, 1), edge(&host, 0, 2)]]).unwrap();
        assert_ne!(canonicalize(&c).unwrap(), ca);
    }

    #[test]
    fn enumerate_rainbow_class_is_unique() {
        let classes = enumerate_exact_colorings(&k4(), 6, None).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].orbit_partitions, 1);
        assert_eq!(classes[0].orbit_colorings, factorial_u128(6));
    }

    #[test]
    fn enumerate_single_pair_classes() {
        let profile = ColorClassProfile::parse("2,1,1,1,1").unwrap();
        let classes = enumerate_exact_colorings(&k4(), 5, Some(&profile)).unwrap();
        assert_eq!(classes.len(), 2);
        let mut orbits: Vec<u64> = classes.iter().map(|c| c.orbit_partitions).collect();
        orbits.sort_unstable();
        assert_eq!(orbits, vec![3, 12]); // disjoint pair, adjacent pair
        let labeled: u128 = classes.iter().map(|c| c.orbit_colorings).sum();
        assert_eq!(labeled, 15 * factorial_u128(5));
    }

    #[test]
    fn enumerate_matching_profile_contains_perfect_matching_coloring() {
        let host = k4();
        let profile = ColorClassProfile::parse("2,2,2").unwrap();
        let classes = enumerate_exact_colorings(&host, 3, Some(&profile)).unwrap();
        let pm = EdgeColoring::with_repeated_classes(
            &host,
            &[
                vec![edge(&host, 0, 1), edge(&host, 2, 3)],
                vec![edge(&host, 0, 2), edge(&host, 1, 3)],
                vec![edge(&host, 0, 3), edge(&host, 1, 2)],
            ],
        )
        .unwrap();
        let canonical_pm = canonicalize(&pm).unwrap();
        assert!(classes.iter().any(|c| c.coloring == canonical_pm));
        let total: u64 = classes.iter().map(|c| c.orbit_partitions).sum();
        assert_eq!(total, 15); // 6!/(2!^3 3!)
    }

    #[test]
    fn orbit_sums_match_stirling_counts() {
        // S(m, k) by the standard recurrence, recomputed here independently
        let m = 6usize;
        let mut stirling = vec![vec![0u128; m + 1]; m + 1];
        stirling[0][0] = 1;
        for n in 1..=m {
            for k in 1..=n {
                stirling[n][k] = stirling[n - 1][k - 1] + k as u128 * stirling[n - 1][k];
            }
        }
        assert_eq!(stirling[6][3], 90);
        assert_eq!(stirling[6][4], 65);
        assert_eq!(stirling[6][5], 15);
        assert_eq!(stirling[6][6], 1);
        for k in 3..=6u32 {
            let classes = enumerate_exact_colorings(&k4(), k, None).unwrap();
            let labeled: u128 = classes.iter().map(|c| c.orbit_colorings).sum();
            assert_eq!(labeled, factorial_u128(k as u64) * stirling[6][k as usize], "k = {k}");
        }
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        let host = HostGraph::bipartite(2).unwrap();
        for k in 1..=4u32 {
            let classes = enumerate_exact_colorings(&host, k, None).unwrap();
            let mut seen = std::collections::HashSet::new();
            for class in &classes {
                assert!(class.coloring.is_exact());
                assert_eq!(canonicalize(&class.coloring).unwrap(), class.coloring);
                assert!(seen.insert(class.coloring.colors().to_vec()));
            }
        }
    }

    #[test]
    fn profile_parsing_and_consistency() {
        let p = ColorClassProfile::parse("2,2,1^17").unwrap();
        assert_eq!(p.class_count(), 19);
        assert_eq!(p.total(), 21);
        assert_eq!(p.non_singleton_count(), 2);
        assert_eq!(p.to_string(), "2^2,1^17");
        assert!(ColorClassProfile::parse("0,1").is_err());

        let host = HostGraph::complete(5).unwrap();
        let p = ColorClassProfile::parse("2,1^8").unwrap();
        assert!(p.check_consistent(&host, 9).is_ok());
        assert!(p.check_consistent(&host, 8).is_err());
    }

    #[test]
    fn infeasible_profile_and_guards() {
        let host = HostGraph::complete(7).unwrap();
        // unrestricted K_7 exceeds the guard, a light profile does not
        assert!(enumerate_exact_colorings(&host, 20, None).is_err());
        let p = ColorClassProfile::parse("2,1^19").unwrap();
        assert!(enumerate_exact_colorings(&host, 20, Some(&p)).is_ok());
        // k out of range
        assert!(enumerate_exact_colorings(&k4(), 7, None).is_err());
        assert!(enumerate_exact_colorings(&k4(), 0, None).is_err());
    }

    #[test]
    fn all_profiles_enumerates_integer_partitions() {
        let profiles = all_profiles(6, 3);
        let rendered: Vec<String> = profiles.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["4,1^2", "3,2,1", "2^3"]);
        assert!(all_profiles(4, 5).is_empty());
    }

    #[test]
    fn coloring_json_roundtrip() {
        let host = HostGraph::complete(5).unwrap();
        let c = EdgeColoring::with_repeated_classes(&host, &[vec![EdgeId(0), EdgeId(4)]]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"Kn:5\""));
        let back: EdgeColoring = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"host":"Kn:4","k":3,"colors":[1,2,3]}"#;
        assert!(serde_json::from_str::<EdgeColoring>(bad).is_err());
    }
}
