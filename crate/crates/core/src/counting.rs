//! Copy counting: the closed-form total count on complete hosts, the five
//! edge-pair counting lemmas with their brute-force oracle, and
//! rainbow/monochromatic classification of copies on colored hosts.
//!
//! Counting is exact integer arithmetic over the copy streams produced by
//! [`pattern::enumerate_copies`]; the closed forms are restricted to exactly
//! the lemma-backed cases and everything else routes to the oracle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::host::{EdgeId, HostGraph, HostKind};
use crate::pattern::{enumerate_copies, BuiltinPattern, PatternGraph};
use crate::util::{binomial, factorial_u128};

/// Classification totals for the copies of one pattern in one coloring.
///
/// Every copy with at least two edges is rainbow, monochromatic, or other,
/// and the three buckets partition the total. Single-edge patterns are
/// simultaneously rainbow and monochromatic; they are counted as
/// monochromatic only, which keeps the partition identity unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub total: u64,
    pub rainbow: u64,
    /// Monochromatic copies per color; colors without copies are omitted.
    pub mono: BTreeMap<u32, u64>,
    pub other: u64,
}

impl CountReport {
    pub fn mono_total(&self) -> u64 {
        self.mono.values().sum()
    }
}

/// Total number of copies of `p` in `K_n`: `|V(p)|! C(n, |V(p)|) / |Aut(p)|`,
/// and 0 when `n < |V(p)|`.
pub fn fox_count(n: u32, p: &PatternGraph) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid(format!("fox_count needs n >= 2, got {n}")));
    }
    let v = p.vertex_count();
    if n < v {
        return Ok(0);
    }
    let embeddings = factorial_u128(v as u64) * binomial(n as u64, v as u64) as u128;
    Ok((embeddings / p.aut_order()? as u128) as u64)
}

/// Number of copies of `p` containing both edges, by the closed-form counting
/// lemmas. Supported exactly for `P4`, `P5`, `P4plus` on complete hosts
/// (`t >= 4`, `5`, `5`) and `P4`, `P5` on bipartite hosts (`t >= 3`); every
/// other combination must use [`count_containing_oracle`].
pub fn count_containing(host: &HostGraph, p: BuiltinPattern, e1: EdgeId, e2: EdgeId) -> Result<u64> {
    if e1 == e2 {
        return Err(Error::invalid("count_containing needs two distinct edges".to_string()));
    }
    host.check_edge(e1)?;
    host.check_edge(e2)?;
    let t = host.size() as u64;
    let adjacent = host.edges_adjacent(e1, e2)?;
    let unsupported = || {
        Error::unsupported(format!(
            "no closed-form edge-pair count for {p:?} on {host}; use the oracle"
        ))
    };
    let require_t = |min: u64| {
        if t < min {
            Err(Error::invalid(format!("closed form needs t >= {min} on {host}")))
        } else {
            Ok(())
        }
    };
    match (host.kind(), p) {
        (HostKind::Complete, BuiltinPattern::P4) => {
            require_t(4)?;
            Ok(if adjacent { 2 * (t - 3) } else { 4 })
        }
        (HostKind::Complete, BuiltinPattern::P5) => {
            require_t(5)?;
            Ok(if adjacent { 3 * (t - 3) * (t - 4) } else { 12 * (t - 4) })
        }
        (HostKind::Complete, BuiltinPattern::P4Plus) => {
            require_t(5)?;
            Ok(if adjacent { 5 * (t - 3) * (t - 4) } else { 8 * (t - 4) })
        }
        (HostKind::CompleteBipartite, BuiltinPattern::P4) => {
            require_t(3)?;
            Ok(if adjacent { 2 * (t - 1) } else { 2 })
        }
        (HostKind::CompleteBipartite, BuiltinPattern::P5) => {
            require_t(3)?;
            Ok(if adjacent { 3 * (t - 1) * (t - 2) } else { 6 * (t - 2) })
        }
        _ => Err(unsupported()),
    }
}

/// Number of copies of `p` containing every edge of `required`, by filtering
/// the brute-force copy stream. Works for any embeddable pattern and any
/// required-set size, generalizing the closed-form lemmas.
pub fn count_containing_oracle(host: &HostGraph, p: &PatternGraph, required: &[EdgeId]) -> Result<u64> {
    if required.is_empty() {
        return Err(Error::invalid("count_containing_oracle needs a non-empty edge set".to_string()));
    }
    for &e in required {
        host.check_edge(e)?;
    }
    let copies = enumerate_copies(host, p)?;
    Ok(copies
        .iter()
        .filter(|copy| required.iter().all(|e| copy.binary_search(e).is_ok()))
        .count() as u64)
}

fn require_countable(c: &EdgeColoring) -> Result<()> {
    c.require_exact()
}

/// Classifies every copy of `p` under the coloring: rainbow iff all edge
/// colors are distinct, monochromatic iff all are equal, other otherwise.
pub fn count_colored(c: &EdgeColoring, p: &PatternGraph) -> Result<CountReport> {
    require_countable(c)?;
    let copies = enumerate_copies(c.host(), p)?;
    Ok(classify_copies(c, &copies))
}

/// [`count_colored`] over a precomputed copy stream.
pub fn classify_copies(c: &EdgeColoring, copies: &[Vec<EdgeId>]) -> CountReport {
    let mut report = CountReport {
        total: copies.len() as u64,
        rainbow: 0,
        mono: BTreeMap::new(),
        other: 0,
    };
    for copy in copies {
        if copy.len() == 1 {
            *report.mono.entry(c.color(copy[0])).or_insert(0) += 1;
            continue;
        }
        match copy_class(c, copy) {
            CopyClass::Rainbow => report.rainbow += 1,
            CopyClass::Mono(color) => *report.mono.entry(color).or_insert(0) += 1,
            CopyClass::Other => report.other += 1,
        }
    }
    report
}

enum CopyClass {
    Rainbow,
    Mono(u32),
    Other,
}

fn copy_class(c: &EdgeColoring, copy: &[EdgeId]) -> CopyClass {
    let first = c.color(copy[0]);
    let mut all_equal = true;
    let mut all_distinct = true;
    for (i, &e) in copy.iter().enumerate().skip(1) {
        let col = c.color(e);
        if col != first {
            all_equal = false;
        }
        if all_distinct {
            for &prev in &copy[..i] {
                if c.color(prev) == col {
                    all_distinct = false;
                    break;
                }
            }
        }
    }
    if all_equal {
        CopyClass::Mono(first)
    } else if all_distinct {
        CopyClass::Rainbow
    } else {
        CopyClass::Other
    }
}

fn is_rainbow_copy(c: &EdgeColoring, copy: &[EdgeId]) -> bool {
    copy.len() >= 2 && matches!(copy_class(c, copy), CopyClass::Rainbow)
}

/// Whether the coloring contains at least one rainbow copy of `p`; exits at
/// the first hit in the fixed enumeration order.
pub fn has_rainbow(c: &EdgeColoring, p: &PatternGraph) -> Result<bool> {
    Ok(rainbow_witness(c, p)?.is_some())
}

/// The first rainbow copy of `p` in enumeration order, if any.
pub fn rainbow_witness(c: &EdgeColoring, p: &PatternGraph) -> Result<Option<Vec<EdgeId>>> {
    require_countable(c)?;
    let copies = enumerate_copies(c.host(), p)?;
    Ok(first_rainbow_in(c, &copies).cloned())
}

/// Rainbow count over a precomputed copy stream.
pub fn count_rainbow_in(c: &EdgeColoring, copies: &[Vec<EdgeId>]) -> u64 {
    copies.iter().filter(|copy| is_rainbow_copy(c, copy)).count() as u64
}

/// Monochromatic count over a precomputed copy stream (single-edge copies are
/// monochromatic by convention).
pub fn count_mono_in(c: &EdgeColoring, copies: &[Vec<EdgeId>]) -> u64 {
    copies
        .iter()
        .filter(|copy| copy.len() == 1 || matches!(copy_class(c, copy), CopyClass::Mono(_)))
        .count() as u64
}

/// Early-exit rainbow test over a precomputed copy stream.
pub fn has_rainbow_in(c: &EdgeColoring, copies: &[Vec<EdgeId>]) -> bool {
    first_rainbow_in(c, copies).is_some()
}

fn first_rainbow_in<'a>(c: &EdgeColoring, copies: &'a [Vec<EdgeId>]) -> Option<&'a Vec<EdgeId>> {
    copies.iter().find(|copy| is_rainbow_copy(c, copy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::VertexId;
    use crate::pattern::builtin;

    fn k(n: u32) -> HostGraph {
        HostGraph::complete(n).unwrap()
    }

    fn knn(n: u32) -> HostGraph {
        HostGraph::bipartite(n).unwrap()
    }

    fn e(host: &HostGraph, a: u32, b: u32) -> EdgeId {
        host.edge_index(VertexId(a), VertexId(b)).unwrap()
    }

    fn be(host: &HostGraph, i: u32, j: u32) -> EdgeId {
        host.edge_index(host.u_vertex(i).unwrap(), host.v_vertex(j).unwrap()).unwrap()
    }

    /// exact coloring with the given repeated classes, fresh colors elsewhere
    fn with_classes(host: &HostGraph, groups: &[Vec<EdgeId>]) -> EdgeColoring {
        EdgeColoring::with_repeated_classes(host, groups).unwrap()
    }

    #[test]
    fn fox_examples() {
        assert_eq!(fox_count(7, &builtin("P5").unwrap()).unwrap(), 1260);
        assert_eq!(fox_count(4, &builtin("P4").unwrap()).unwrap(), 12);
        assert_eq!(fox_count(3, &builtin("P5").unwrap()).unwrap(), 0);
        assert!(fox_count(1, &builtin("P2").unwrap()).is_err());
    }

    #[test]
    fn fox_matches_enumeration() {
        for name in ["P3", "P5", "K13", "S3plus"] {
            let p = builtin(name).unwrap();
            for n in 3..=7 {
                assert_eq!(
                    fox_count(n, &p).unwrap(),
                    enumerate_copies(&k(n), &p).unwrap().len() as u64,
                    "{name} in K_{n}"
                );
            }
        }
    }

    #[test]
    fn lemma_examples() {
        let h5 = k(5);
        assert_eq!(count_containing(&h5, BuiltinPattern::P4Plus, e(&h5, 0, 1), e(&h5, 2, 3)).unwrap(), 8);
        let h6 = k(6);
        assert_eq!(count_containing(&h6, BuiltinPattern::P5, e(&h6, 0, 1), e(&h6, 0, 2)).unwrap(), 18);
        let b4 = knn(4);
        assert_eq!(count_containing(&b4, BuiltinPattern::P4, be(&b4, 0, 0), be(&b4, 0, 1)).unwrap(), 6);
    }

    #[test]
    fn lemma_errors() {
        let h5 = k(5);
        assert!(count_containing(&h5, BuiltinPattern::P4, e(&h5, 0, 1), e(&h5, 0, 1)).is_err());
        assert!(count_containing(&h5, BuiltinPattern::K13, e(&h5, 0, 1), e(&h5, 2, 3)).is_err());
        assert!(count_containing(&knn(3), BuiltinPattern::P4Plus, be(&knn(3), 0, 0), be(&knn(3), 1, 1)).is_err());
        assert!(count_containing(&k(4), BuiltinPattern::P5, e(&k(4), 0, 1), e(&k(4), 2, 3)).is_err());
    }

    #[test]
    fn oracle_examples() {
        let h5 = k(5);
        assert_eq!(
            count_containing_oracle(&h5, &builtin("P4").unwrap(), &[e(&h5, 0, 1), e(&h5, 2, 3)]).unwrap(),
            4
        );
        let h4 = k(4);
        assert_eq!(count_containing_oracle(&h4, &builtin("K13").unwrap(), &[e(&h4, 0, 1)]).unwrap(), 2);
        let triangle = [e(&h5, 0, 1), e(&h5, 0, 2), e(&h5, 1, 2)];
        assert_eq!(count_containing_oracle(&h5, &builtin("P5").unwrap(), &triangle).unwrap(), 0);
        assert!(count_containing_oracle(&h5, &builtin("P4").unwrap(), &[]).is_err());
    }

    #[test]
    fn lemma_agrees_with_oracle_on_small_hosts() {
        for t in 4..=6 {
            let host = k(t);
            for (p, name) in [(BuiltinPattern::P4, "P4"), (BuiltinPattern::P5, "P5"), (BuiltinPattern::P4Plus, "P4plus")]
            {
                if name != "P4" && t < 5 {
                    continue;
                }
                let pat = builtin(name).unwrap();
                for (a, b) in [(e(&host, 0, 1), e(&host, 0, 2)), (e(&host, 0, 1), e(&host, 2, 3))] {
                    assert_eq!(
                        count_containing(&host, p, a, b).unwrap(),
                        count_containing_oracle(&host, &pat, &[a, b]).unwrap(),
                        "{name} on K_{t}"
                    );
                }
            }
        }
    }

    #[test]
    fn count_colored_examples() {
        // all edges distinct on K_5: every P5 copy rainbow
        let h5 = k(5);
        let rainbow = with_classes(&h5, &[]);
        let report = count_colored(&rainbow, &builtin("P5").unwrap()).unwrap();
        assert_eq!(report.rainbow, 60);
        assert_eq!(report.mono_total(), 0);
        assert_eq!(report.total, 60);

        // monochromatic K_4: all 12 P4 copies mono in color 1
        let mono = EdgeColoring::new(k(4), 1, vec![1; 6]);
        let report = count_colored(&mono, &builtin("P4").unwrap()).unwrap();
        assert_eq!(report.rainbow, 0);
        assert_eq!(report.mono.get(&1), Some(&12));

        // one red adjacent pair in K_5 leaves 18 rainbow K13 copies
        let pair = with_classes(&h5, &[vec![e(&h5, 0, 1), e(&h5, 0, 2)]]);
        assert_eq!(pair.k(), 9);
        let report = count_colored(&pair, &builtin("K13").unwrap()).unwrap();
        assert_eq!(report.rainbow, 18);
    }

    #[test]
    fn partition_identity_and_single_edge_convention() {
        let host = k(4);
        for coloring in [
            EdgeColoring::new(host, 1, vec![1; 6]),
            with_classes(&host, &[vec![e(&host, 0, 1), e(&host, 2, 3)]]),
            with_classes(&host, &[vec![e(&host, 0, 1), e(&host, 0, 2), e(&host, 1, 2)]]),
        ] {
            for name in ["P2", "P3", "P4", "K13", "K3"] {
                let p = builtin(name).unwrap();
                let r = count_colored(&coloring, &p).unwrap();
                assert_eq!(r.rainbow + r.other + r.mono_total(), r.total, "{name}");
                if name == "P2" {
                    assert_eq!(r.rainbow, 0); // single-edge copies are mono only
                    assert_eq!(r.mono_total(), r.total);
                }
            }
        }
    }

    #[test]
    fn relabeling_and_automorphism_invariance() {
        let host = k(5);
        let c = with_classes(&host, &[vec![e(&host, 0, 1), e(&host, 2, 3)], vec![e(&host, 0, 2), e(&host, 1, 4)]]);
        let p = builtin("P4").unwrap();
        let base = count_colored(&c, &p).unwrap();

        // swap two color labels: totals unchanged, mono counts permute
        let swapped: Vec<u32> = c.colors().iter().map(|&col| match col {
            1 => 2,
            2 => 1,
            other => other,
        }).collect();
        let swapped = EdgeColoring::new(host, c.k(), swapped);
        let r = count_colored(&swapped, &p).unwrap();
        assert_eq!((r.total, r.rainbow, r.other, r.mono_total()), (base.total, base.rainbow, base.other, base.mono_total()));

        // push through every automorphism: full report unchanged
        for perm in host.edge_automorphisms().unwrap().iter().step_by(7) {
            let moved = c.apply_edge_perm(perm);
            assert_eq!(count_colored(&moved, &p).unwrap().rainbow, base.rainbow);
            assert_eq!(count_colored(&moved, &p).unwrap().mono_total(), base.mono_total());
        }
    }

    #[test]
    fn rainbow_star_counts_for_duplicated_color_shapes() {
        // red triangle in K_5, every other edge fresh: 14 rainbow K13 copies
        let h5 = k(5);
        let star = builtin("K13").unwrap();
        let triangle = with_classes(&h5, &[vec![e(&h5, 0, 1), e(&h5, 0, 2), e(&h5, 1, 2)]]);
        assert_eq!(count_colored(&triangle, &star).unwrap().rainbow, 14);

        // three disjoint red edges in K_6: every K13 copy stays rainbow
        let h6 = k(6);
        let matching = with_classes(&h6, &[vec![e(&h6, 0, 1), e(&h6, 2, 3), e(&h6, 4, 5)]]);
        assert_eq!(count_colored(&matching, &star).unwrap().rainbow, 60);

        // red triangle in K_7: 128
        let h7 = k(7);
        let triangle7 = with_classes(&h7, &[vec![e(&h7, 0, 1), e(&h7, 0, 2), e(&h7, 1, 2)]]);
        assert_eq!(count_colored(&triangle7, &star).unwrap().rainbow, 128);

        // red P3 + disjoint red edge in K_7: 136
        let path_plus = with_classes(&h7, &[vec![e(&h7, 0, 1), e(&h7, 0, 2), e(&h7, 3, 4)]]);
        assert_eq!(count_colored(&path_plus, &star).unwrap().rainbow, 136);

        // red pair and blue pair sharing a vertex in K_7: 132
        let two_pairs = with_classes(
            &h7,
            &[vec![e(&h7, 0, 1), e(&h7, 0, 2)], vec![e(&h7, 0, 3), e(&h7, 0, 4)]],
        );
        assert_eq!(count_colored(&two_pairs, &star).unwrap().rainbow, 132);
    }

    #[test]
    fn rainbow_star_counts_on_bipartite_shapes() {
        let star = builtin("K13").unwrap();
        // red K13 centered on one side of K_{5,5}: 93 rainbow K13 copies
        let b5 = knn(5);
        let red_star = with_classes(&b5, &[vec![be(&b5, 0, 0), be(&b5, 0, 1), be(&b5, 0, 2)]]);
        assert_eq!(count_colored(&red_star, &star).unwrap().rainbow, 93);

        // red P4 in K_{4,4}: 28
        let b4 = knn(4);
        let red_path = with_classes(&b4, &[vec![be(&b4, 0, 0), be(&b4, 1, 0), be(&b4, 1, 1)]]);
        assert_eq!(count_colored(&red_path, &star).unwrap().rainbow, 28);
    }

    #[test]
    fn has_rainbow_and_witness() {
        let host = k(4);
        let rainbow = with_classes(&host, &[]);
        assert!(has_rainbow(&rainbow, &builtin("P4").unwrap()).unwrap());
        let witness = rainbow_witness(&rainbow, &builtin("P4").unwrap()).unwrap().unwrap();
        assert_eq!(witness.len(), 3);

        let mono = EdgeColoring::new(host, 1, vec![1; 6]);
        assert!(!has_rainbow(&mono, &builtin("P4").unwrap()).unwrap());
    }

    #[test]
    fn report_serialization_shape() {
        let host = k(4);
        let mono = EdgeColoring::new(host, 1, vec![1; 6]);
        let report = count_colored(&mono, &builtin("P4").unwrap()).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["mono"]["1"], 12);
        assert_eq!(json["total"], 12);
    }
}
