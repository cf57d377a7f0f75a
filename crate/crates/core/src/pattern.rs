//! Small target graphs: the rainbow targets G and monochromatic targets H,
//! their automorphism-group orders, copy enumeration inside hosts, and the
//! subgraph-containment checks behind theorem hypotheses.
//!
//! A *copy* of a pattern in a host is a distinct edge-id set arising as the
//! image of an embedding. Embeddings that differ by a pattern automorphism
//! give the same copy, which is emitted once; this is the convention that
//! makes copy counts divide by `|Aut(G)|`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::host::{EdgeId, HostGraph, VertexId};
use crate::util::permutations;

/// Hard cap on pattern size; counting operations guard at 8, larger patterns
/// (up to 12 vertices) exist only as bound graphs for containment tests.
pub const MAX_PATTERN_VERTICES: u32 = 12;
/// Largest pattern usable as a counting target or automorphism-order query.
pub const MAX_COUNTING_VERTICES: u32 = 8;

/// A small simple labeled graph without isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPattern", into = "RawPattern")]
pub struct PatternGraph {
    vertices: u32,
    edges: Vec<(u32, u32)>,
    bipartition: Option<Vec<u8>>,
    name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawPattern {
    vertices: u32,
    edges: Vec<(u32, u32)>,
    bipartition: Option<Vec<u8>>,
    name: Option<String>,
}

impl From<PatternGraph> for RawPattern {
    fn from(p: PatternGraph) -> RawPattern {
        RawPattern {
            vertices: p.vertices,
            edges: p.edges,
            bipartition: p.bipartition,
            name: p.name,
        }
    }
}

impl TryFrom<RawPattern> for PatternGraph {
    type Error = Error;

    fn try_from(raw: RawPattern) -> Result<PatternGraph> {
        let mut p = PatternGraph::new(raw.vertices, &raw.edges, raw.bipartition)?;
        p.name = raw.name;
        Ok(p)
    }
}

impl PatternGraph {
    /// Builds and validates a pattern: simple, no loops, no duplicate edges,
    /// no isolated vertices; if a bipartition tag is given, every edge must
    /// cross it.
    pub fn new(vertices: u32, edges: &[(u32, u32)], bipartition: Option<Vec<u8>>) -> Result<Self> {
        if vertices == 0 || vertices > MAX_PATTERN_VERTICES {
            return Err(Error::invalid(format!(
                "pattern must have 1..={MAX_PATTERN_VERTICES} vertices, got {vertices}"
            )));
        }
        let mut seen = HashSet::new();
        let mut degree = vec![0u32; vertices as usize];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= vertices || b >= vertices {
                return Err(Error::invalid(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::invalid(format!("duplicate edge ({},{})", e.0, e.1)));
            }
            degree[a as usize] += 1;
            degree[b as usize] += 1;
            normalized.push(e);
        }
        if let Some(v) = degree.iter().position(|&d| d == 0) {
            return Err(Error::invalid(format!("isolated vertex {v}")));
        }
        if let Some(tag) = &bipartition {
            if tag.len() != vertices as usize {
                return Err(Error::invalid("bipartition tag length mismatch".to_string()));
            }
            if tag.iter().any(|&s| s > 1) {
                return Err(Error::invalid("bipartition tag entries must be 0 or 1".to_string()));
            }
            for &(a, b) in &normalized {
                if tag[a as usize] == tag[b as usize] {
                    return Err(Error::invalid(format!("edge ({a},{b}) does not cross the bipartition tag")));
                }
            }
        }
        normalized.sort_unstable();
        Ok(PatternGraph {
            vertices,
            edges: normalized,
            bipartition,
            name: None,
        })
    }

    fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertices
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.len() as u32
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count() as u32
    }

    /// A proper 2-coloring of the vertices, if one exists. Componentwise BFS;
    /// a present bipartition tag is already validated, so it is returned as is.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        if let Some(tag) = &self.bipartition {
            return Some(tag.clone());
        }
        let n = self.vertices as usize;
        let mut color = vec![u8::MAX; n];
        let adj = self.adjacency();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    let w = w as usize;
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when the pattern is a complete graph on its vertex set.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.vertices * (self.vertices - 1) / 2
    }

    /// `Some(s)` when the pattern is the star `K_{1,s}`.
    pub fn star_order(&self) -> Option<u32> {
        let e = self.edge_count();
        if self.vertices != e + 1 {
            return None;
        }
        (0..self.vertices).find(|&v| self.degree(v) == e).map(|_| e)
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.vertices as usize];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }

    /// Exact order of the automorphism group, by brute force over vertex
    /// permutations. Guarded at 8 vertices.
    pub fn aut_order(&self) -> Result<u64> {
        if self.vertices > MAX_COUNTING_VERTICES {
            return Err(Error::GuardExceeded {
                what: "pattern automorphism brute force (vertices)",
                limit: MAX_COUNTING_VERTICES as u64,
                got: self.vertices as u64,
            });
        }
        let edge_set: HashSet<(u32, u32)> = self.edges.iter().copied().collect();
        let mut count = 0u64;
        permutations(self.vertices, &mut |p| {
            let ok = self.edges.iter().all(|&(a, b)| {
                let (x, y) = (p[a as usize], p[b as usize]);
                edge_set.contains(&(x.min(y), x.max(y)))
            });
            if ok {
                count += 1;
            }
        });
        Ok(count)
    }
}

impl fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{name}"),
            None => write!(f, "graph(v={}, e={})", self.vertices, self.edges.len()),
        }
    }
}

/// The named patterns addressable from the CLI and from theorem statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinPattern {
    P2,
    P3,
    P4,
    P5,
    K13,
    P4Plus,
    K3,
    S3Plus,
    /// The star `K_{1,k}`.
    Star(u32),
    /// The balanced complete multipartite graph with `parts` parts of `size` vertices.
    BalancedMultipartite { parts: u32, size: u32 },
    /// `j` pairwise disjoint edges.
    Matching(u32),
}

impl BuiltinPattern {
    /// Parses the builtin name grammar: `P2`..`P5`, `K13`, `P4plus`, `K3`,
    /// `S3plus`, `K1_<k>`, `Kmulti_<parts>x<size>`, `M<j>`.
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "P2" => return Some(BuiltinPattern::P2),
            "P3" => return Some(BuiltinPattern::P3),
            "P4" => return Some(BuiltinPattern::P4),
            "P5" => return Some(BuiltinPattern::P5),
            "K13" => return Some(BuiltinPattern::K13),
            "P4plus" => return Some(BuiltinPattern::P4Plus),
            "K3" => return Some(BuiltinPattern::K3),
            "S3plus" => return Some(BuiltinPattern::S3Plus),
            _ => {}
        }
        if let Some(k) = name.strip_prefix("K1_") {
            return k.parse().ok().map(BuiltinPattern::Star);
        }
        if let Some(spec) = name.strip_prefix("Kmulti_") {
            let (parts, size) = spec.split_once('x')?;
            return Some(BuiltinPattern::BalancedMultipartite {
                parts: parts.parse().ok()?,
                size: size.parse().ok()?,
            });
        }
        if let Some(j) = name.strip_prefix('M') {
            return j.parse().ok().map(BuiltinPattern::Matching);
        }
        None
    }

    /// Expands the builtin into a concrete labeled pattern.
    pub fn pattern(&self) -> Result<PatternGraph> {
        let path = |n: u32| {
            let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let tag: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
            PatternGraph::new(n, &edges, Some(tag))
        };
        match *self {
            BuiltinPattern::P2 => Ok(path(2)?.with_name("P2")),
            BuiltinPattern::P3 => Ok(path(3)?.with_name("P3")),
            BuiltinPattern::P4 => Ok(path(4)?.with_name("P4")),
            BuiltinPattern::P5 => Ok(path(5)?.with_name("P5")),
            BuiltinPattern::K13 => BuiltinPattern::Star(3).pattern().map(|p| p.with_name("K13")),
            // K_{1,3} plus a pendent edge at one of its leaves
            BuiltinPattern::P4Plus => Ok(PatternGraph::new(
                5,
                &[(0, 1), (0, 2), (0, 3), (3, 4)],
                Some(vec![0, 1, 1, 1, 0]),
            )?
            .with_name("P4plus")),
            BuiltinPattern::K3 => Ok(PatternGraph::new(3, &[(0, 1), (0, 2), (1, 2)], None)?.with_name("K3")),
            // triangle with a pendent edge
            BuiltinPattern::S3Plus => {
                Ok(PatternGraph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)], None)?.with_name("S3plus"))
            }
            BuiltinPattern::Star(k) => {
                if k == 0 {
                    return Err(Error::invalid("star K1_k needs k >= 1".to_string()));
                }
                let edges: Vec<(u32, u32)> = (1..=k).map(|i| (0, i)).collect();
                let mut tag = vec![1u8; (k + 1) as usize];
                tag[0] = 0;
                Ok(PatternGraph::new(k + 1, &edges, Some(tag))?.with_name(&format!("K1_{k}")))
            }
            BuiltinPattern::BalancedMultipartite { parts, size } => {
                if parts < 2 || size == 0 {
                    return Err(Error::invalid(
                        "balanced multipartite pattern needs parts >= 2 and size >= 1".to_string(),
                    ));
                }
                let n = parts * size;
                let part_of = |v: u32| v / size;
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if part_of(a) != part_of(b) {
                            edges.push((a, b));
                        }
                    }
                }
                let tag = (parts == 2).then(|| (0..n).map(|v| part_of(v) as u8).collect());
                Ok(PatternGraph::new(n, &edges, tag)?.with_name(&format!("Kmulti_{parts}x{size}")))
            }
            BuiltinPattern::Matching(j) => {
                if j == 0 {
                    return Err(Error::invalid("matching M_j needs j >= 1".to_string()));
                }
                let edges: Vec<(u32, u32)> = (0..j).map(|i| (2 * i, 2 * i + 1)).collect();
                let tag: Vec<u8> = (0..2 * j).map(|v| (v % 2) as u8).collect();
                Ok(PatternGraph::new(2 * j, &edges, Some(tag))?.with_name(&format!("M{j}")))
            }
        }
    }
}

/// Looks a pattern up by builtin name.
pub fn builtin(name: &str) -> Result<PatternGraph> {
    BuiltinPattern::parse(name)
        .ok_or_else(|| Error::invalid(format!("unknown builtin pattern {name:?}")))?
        .pattern()
}

/// Enumerates every distinct copy of `p` in the host exactly once, as sorted
/// edge-id lists in lexicographic order.
///
/// Bipartite hosts require a bipartite pattern; each component may land on
/// either side, so both side assignments contribute copies.
pub fn enumerate_copies(host: &HostGraph, p: &PatternGraph) -> Result<Vec<Vec<EdgeId>>> {
    if p.vertices > MAX_COUNTING_VERTICES {
        return Err(Error::GuardExceeded {
            what: "copy enumeration pattern size (vertices)",
            limit: MAX_COUNTING_VERTICES as u64,
            got: p.vertices as u64,
        });
    }
    if host.is_bipartite() && !p.is_bipartite() {
        return Err(Error::invalid(format!(
            "pattern {p} is not bipartite and cannot embed into {host}"
        )));
    }
    if p.vertices > host.vertex_count() {
        return Ok(Vec::new());
    }

    // Order pattern vertices so every non-root follows one of its neighbors;
    // earlier_neighbors[i] lists neighbors of order[i] already placed.
    let adj = p.adjacency();
    let n = p.vertices as usize;
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            for &w in &adj[v] {
                if !placed[w as usize] {
                    placed[w as usize] = true;
                    order.push(w as usize);
                }
            }
            head += 1;
        }
    }
    let earlier_neighbors: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(idx, &v)| {
            adj[v]
                .iter()
                .filter_map(|&w| order[..idx].iter().position(|&x| x == w as usize))
                .collect()
        })
        .collect();

    let host_n = host.vertex_count() as usize;
    let mut image = vec![0u32; n];
    let mut used = vec![false; host_n];
    let mut found: HashSet<Vec<EdgeId>> = HashSet::new();

    fn rec(
        depth: usize,
        host: &HostGraph,
        p: &PatternGraph,
        order: &[usize],
        earlier: &[Vec<usize>],
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        found: &mut HashSet<Vec<EdgeId>>,
    ) {
        if depth == order.len() {
            let mut copy: Vec<EdgeId> = p
                .edges()
                .iter()
                .map(|&(a, b)| {
                    host.edge_index(VertexId(image[a as usize]), VertexId(image[b as usize]))
                        .expect("embedding produced a non-edge")
                })
                .collect();
            copy.sort_unstable();
            found.insert(copy);
            return;
        }
        let v = order[depth];
        for cand in 0..used.len() as u32 {
            if used[cand as usize] {
                continue;
            }
            let ok = earlier[depth].iter().all(|&snapshot_idx| {
                let placed_host = image[order[snapshot_idx]];
                host.vertices_adjacent(VertexId(cand), VertexId(placed_host))
            });
            if !ok {
                continue;
            }
            image[v] = cand;
            used[cand as usize] = true;
            rec(depth + 1, host, p, order, earlier, image, used, found);
            used[cand as usize] = false;
        }
    }

    rec(0, host, p, &order, &earlier_neighbors, &mut image, &mut used, &mut found);
    let mut copies: Vec<Vec<EdgeId>> = found.into_iter().collect();
    copies.sort_unstable();
    Ok(copies)
}

/// Number of distinct copies of `p` in the host.
pub fn copy_count(host: &HostGraph, p: &PatternGraph) -> Result<u64> {
    Ok(enumerate_copies(host, p)?.len() as u64)
}

/// True iff `h` is isomorphic to a subgraph of `bound` (not necessarily
/// induced), by backtracking. Guarded at 12 vertices.
pub fn contains_subgraph(bound: &PatternGraph, h: &PatternGraph) -> Result<bool> {
    if h.vertices > MAX_PATTERN_VERTICES || bound.vertices > MAX_PATTERN_VERTICES {
        return Err(Error::GuardExceeded {
            what: "subgraph containment size (vertices)",
            limit: MAX_PATTERN_VERTICES as u64,
            got: h.vertices.max(bound.vertices) as u64,
        });
    }
    if h.vertices > bound.vertices || h.edge_count() > bound.edge_count() {
        return Ok(false);
    }

    let h_adj = h.adjacency();
    let bn = bound.vertices as usize;
    let mut bound_adj = vec![vec![false; bn]; bn];
    for &(a, b) in bound.edges() {
        bound_adj[a as usize][b as usize] = true;
        bound_adj[b as usize][a as usize] = true;
    }
    let bound_deg: Vec<u32> = (0..bound.vertices).map(|v| bound.degree(v)).collect();

    // Map h's vertices in descending-degree order; roughly the most
    // constrained vertices first.
    let mut order: Vec<usize> = (0..h.vertices as usize).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h_adj[v].len()));

    let mut image = vec![usize::MAX; h.vertices as usize];
    let mut used = vec![false; bn];

    fn rec(
        depth: usize,
        order: &[usize],
        h_adj: &[Vec<u32>],
        h_deg: &dyn Fn(usize) -> usize,
        bound_adj: &[Vec<bool>],
        bound_deg: &[u32],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..used.len() {
            if used[cand] || (bound_deg[cand] as usize) < h_deg(v) {
                continue;
            }
            let ok = h_adj[v].iter().all(|&w| {
                let w_img = image[w as usize];
                w_img == usize::MAX || bound_adj[cand][w_img]
            });
            if !ok {
                continue;
            }
            image[v] = cand;
            used[cand] = true;
            if rec(depth + 1, order, h_adj, h_deg, bound_adj, bound_deg, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    let h_deg = |v: usize| h_adj[v].len();
    Ok(rec(0, &order, &h_adj, &h_deg, &bound_adj, &bound_deg, &mut image, &mut used))
}

/// True iff `h` embeds into the balanced complete multipartite graph with
/// `parts` parts of size `part_size`, checked directly by assigning each
/// vertex a part (parts must be independent and hold at most `part_size`
/// vertices). Unlike [`contains_subgraph`] this has no size guard on the
/// bound side, so it serves formula hypotheses at large color counts.
pub fn embeds_in_balanced_multipartite(h: &PatternGraph, parts: u32, part_size: u32) -> bool {
    if parts == 0 || part_size == 0 || h.vertices > parts * part_size {
        return false;
    }
    if h.vertices <= parts {
        return true; // one part per vertex
    }
    let adj = h.adjacency();
    let n = h.vertices as usize;
    let mut assignment = vec![usize::MAX; n];
    let mut loads: Vec<u32> = Vec::new();

    fn rec(
        v: usize,
        n: usize,
        parts: u32,
        part_size: u32,
        adj: &[Vec<u32>],
        assignment: &mut Vec<usize>,
        loads: &mut Vec<u32>,
    ) -> bool {
        if v == n {
            return true;
        }
        // used parts, plus one fresh part (they are interchangeable)
        let options = loads.len() + usize::from((loads.len() as u32) < parts);
        for c in 0..options {
            let fresh = c == loads.len();
            if !fresh && loads[c] >= part_size {
                continue;
            }
            if adj[v].iter().any(|&w| assignment[w as usize] == c) {
                continue;
            }
            if fresh {
                loads.push(0);
            }
            loads[c] += 1;
            assignment[v] = c;
            if rec(v + 1, n, parts, part_size, adj, assignment, loads) {
                return true;
            }
            assignment[v] = usize::MAX;
            loads[c] -= 1;
            if fresh {
                loads.pop();
            }
        }
        false
    }

    rec(0, n, parts, part_size, &adj, &mut assignment, &mut loads)
}

/// True iff `h` is a subgraph of the star `K_{1,j}`: since patterns carry no
/// isolated vertices, exactly the stars `K_{1,s}` with `s <= j`.
pub fn embeds_in_star(h: &PatternGraph, j: u32) -> bool {
    h.star_order().is_some_and(|s| s <= j)
}

/// The rainbow target graphs of the multiplicity theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RainbowTarget {
    P4,
    P5,
    K13,
    P4Plus,
}

impl RainbowTarget {
    pub fn pattern(&self) -> PatternGraph {
        let builtin = match self {
            RainbowTarget::P4 => BuiltinPattern::P4,
            RainbowTarget::P5 => BuiltinPattern::P5,
            RainbowTarget::K13 => BuiltinPattern::K13,
            RainbowTarget::P4Plus => BuiltinPattern::P4Plus,
        };
        builtin.pattern().expect("builtin targets are valid")
    }

    pub fn name(&self) -> &'static str {
        match self {
            RainbowTarget::P4 => "P4",
            RainbowTarget::P5 => "P5",
            RainbowTarget::K13 => "K13",
            RainbowTarget::P4Plus => "P4plus",
        }
    }
}

impl fmt::Display for RainbowTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which theorem family a hypothesis bound graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    CompleteCase(RainbowTarget),
    BipartiteCase(RainbowTarget),
}

/// The hypothesis bound graph for a rainbow target at `k` colors:
/// `K_{(k-1)x2}` for the complete-host star and `P4plus` theorems,
/// `K_{1,k}` for bipartite `P4`, and `K_{1,ceil((k-1)/2)}` for bipartite
/// `P5`/`K13`. The complete-host `P4` and `P5` theorems place no subgraph
/// bound on H, signaled as an unsupported (Unbounded) combination.
pub fn bound_graph(family: BoundFamily, k: u32) -> Result<PatternGraph> {
    match family {
        BoundFamily::CompleteCase(RainbowTarget::K13) | BoundFamily::CompleteCase(RainbowTarget::P4Plus) => {
            if k < 3 {
                return Err(Error::invalid(format!("bound graph K_((k-1)x2) needs k >= 3, got {k}")));
            }
            if 2 * (k - 1) > MAX_PATTERN_VERTICES {
                return Err(Error::GuardExceeded {
                    what: "bound graph size (vertices)",
                    limit: MAX_PATTERN_VERTICES as u64,
                    got: 2 * (k - 1) as u64,
                });
            }
            BuiltinPattern::BalancedMultipartite { parts: k - 1, size: 2 }.pattern()
        }
        BoundFamily::CompleteCase(RainbowTarget::P4) | BoundFamily::CompleteCase(RainbowTarget::P5) => {
            Err(Error::unsupported(format!(
                "the complete-host {} theorem places no subgraph bound on H (Unbounded)",
                match family {
                    BoundFamily::CompleteCase(t) => t.name(),
                    _ => unreachable!(),
                }
            )))
        }
        BoundFamily::BipartiteCase(RainbowTarget::P4) => star_bound(k),
        BoundFamily::BipartiteCase(RainbowTarget::P5) | BoundFamily::BipartiteCase(RainbowTarget::K13) => {
            if k < 2 {
                return Err(Error::invalid(format!("star bound K_(1,ceil((k-1)/2)) needs k >= 2, got {k}")));
            }
            star_bound((k - 1).div_ceil(2))
        }
        BoundFamily::BipartiteCase(RainbowTarget::P4Plus) => {
            Err(Error::unsupported("no bipartite theorem covers rainbow P4plus".to_string()))
        }
    }
}

fn star_bound(leaves: u32) -> Result<PatternGraph> {
    if leaves == 0 {
        return Err(Error::invalid("star bound needs at least one leaf".to_string()));
    }
    if leaves + 1 > MAX_PATTERN_VERTICES {
        return Err(Error::GuardExceeded {
            what: "bound graph size (vertices)",
            limit: MAX_PATTERN_VERTICES as u64,
            got: (leaves + 1) as u64,
        });
    }
    BuiltinPattern::Star(leaves).pattern()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{binomial, factorial_u128};

    fn k(n: u32) -> HostGraph {
        HostGraph::complete(n).unwrap()
    }

    fn knn(n: u32) -> HostGraph {
        HostGraph::bipartite(n).unwrap()
    }

    #[test]
    fn aut_orders() {
        assert_eq!(builtin("P4").unwrap().aut_order().unwrap(), 2);
        assert_eq!(builtin("P4plus").unwrap().aut_order().unwrap(), 2);
        assert_eq!(builtin("K13").unwrap().aut_order().unwrap(), 6);
        assert_eq!(builtin("K3").unwrap().aut_order().unwrap(), 6);
        assert_eq!(builtin("S3plus").unwrap().aut_order().unwrap(), 2);
        for j in 1..=5 {
            let star = BuiltinPattern::Star(j).pattern().unwrap();
            assert_eq!(star.aut_order().unwrap() as u128, factorial_u128(j as u64));
        }
        let m3 = builtin("M3").unwrap();
        assert_eq!(m3.aut_order().unwrap(), 48); // 3! * 2^3
    }

    #[test]
    fn copies_examples() {
        assert_eq!(enumerate_copies(&k(4), &builtin("K13").unwrap()).unwrap().len(), 4);
        assert!(enumerate_copies(&k(3), &builtin("P5").unwrap()).unwrap().is_empty());
        assert_eq!(enumerate_copies(&knn(3), &builtin("K13").unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn copies_are_distinct_edge_sets() {
        let copies = enumerate_copies(&k(6), &builtin("P4").unwrap()).unwrap();
        let set: HashSet<_> = copies.iter().cloned().collect();
        assert_eq!(set.len(), copies.len());
        assert!(copies.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn copy_counts_match_orbit_formula() {
        // |V(p)|! C(n, |V(p)|) / |Aut(p)| on complete hosts
        for name in ["P2", "P3", "P4", "P5", "K13", "P4plus", "K3", "S3plus", "M2"] {
            let p = builtin(name).unwrap();
            for n in p.vertex_count()..=7 {
                let expected = factorial_u128(p.vertex_count() as u64)
                    * binomial(n as u64, p.vertex_count() as u64) as u128
                    / p.aut_order().unwrap() as u128;
                assert_eq!(
                    copy_count(&k(n), &p).unwrap() as u128,
                    expected,
                    "pattern {name} in K_{n}"
                );
            }
        }
    }

    #[test]
    fn non_bipartite_pattern_rejected_on_bipartite_host() {
        assert!(enumerate_copies(&knn(3), &builtin("K3").unwrap()).is_err());
        assert!(enumerate_copies(&knn(4), &builtin("S3plus").unwrap()).is_err());
    }

    #[test]
    fn bipartite_path_counts() {
        // t^2 (t-1)^2 paths on four vertices, t^2 (t-1)^2 (t-2) on five
        for t in 2..=4u64 {
            let host = knn(t as u32);
            assert_eq!(copy_count(&host, &builtin("P4").unwrap()).unwrap(), t * t * (t - 1) * (t - 1));
        }
        for t in 3..=4u64 {
            let host = knn(t as u32);
            assert_eq!(
                copy_count(&host, &builtin("P5").unwrap()).unwrap(),
                t * t * (t - 1) * (t - 1) * (t - 2)
            );
        }
    }

    #[test]
    fn containment_examples() {
        let bound = BuiltinPattern::BalancedMultipartite { parts: 5, size: 2 }.pattern().unwrap();
        assert!(contains_subgraph(&bound, &builtin("K13").unwrap()).unwrap());
        let star4 = BuiltinPattern::Star(4).pattern().unwrap();
        assert!(!contains_subgraph(&star4, &builtin("P4").unwrap()).unwrap());
        assert!(contains_subgraph(&star4, &star4).unwrap());
    }

    #[test]
    fn containment_is_reflexive_and_transitive_on_samples() {
        let samples: Vec<PatternGraph> = ["P3", "P4", "K13", "K3", "S3plus", "P4plus"]
            .iter()
            .map(|n| builtin(n).unwrap())
            .collect();
        for p in &samples {
            assert!(contains_subgraph(p, p).unwrap());
        }
        let k6 = BuiltinPattern::BalancedMultipartite { parts: 3, size: 2 }.pattern().unwrap();
        for h in &samples {
            if contains_subgraph(&k6, h).unwrap() {
                for smaller in &samples {
                    if contains_subgraph(h, smaller).unwrap() {
                        assert!(contains_subgraph(&k6, smaller).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn containment_agrees_with_direct_multipartite_check() {
        let patterns = ["P2", "P3", "P4", "P5", "K13", "K3", "S3plus", "P4plus", "M2", "M3"];
        for parts in 2..=5u32 {
            let bound = BuiltinPattern::BalancedMultipartite { parts, size: 2 }.pattern().unwrap();
            for name in patterns {
                let h = builtin(name).unwrap();
                assert_eq!(
                    contains_subgraph(&bound, &h).unwrap(),
                    embeds_in_balanced_multipartite(&h, parts, 2),
                    "{name} vs K_({parts}x2)"
                );
            }
        }
    }

    #[test]
    fn star_containment() {
        assert!(embeds_in_star(&builtin("K1_4").unwrap(), 4));
        assert!(!embeds_in_star(&builtin("K1_4").unwrap(), 3));
        assert!(embeds_in_star(&builtin("P2").unwrap(), 1));
        assert!(!embeds_in_star(&builtin("P4").unwrap(), 9));
    }

    #[test]
    fn bound_graph_examples() {
        let b = bound_graph(BoundFamily::CompleteCase(RainbowTarget::K13), 6).unwrap();
        assert_eq!(b.vertex_count(), 10);
        assert_eq!(b.edge_count(), binomial(10, 2) as u32 - 5);

        let b = bound_graph(BoundFamily::BipartiteCase(RainbowTarget::P4), 4).unwrap();
        assert_eq!(b.star_order(), Some(4));

        let b = bound_graph(BoundFamily::BipartiteCase(RainbowTarget::P5), 9).unwrap();
        assert_eq!(b.star_order(), Some(4));

        assert!(bound_graph(BoundFamily::CompleteCase(RainbowTarget::P4), 6).is_err());
        assert!(bound_graph(BoundFamily::CompleteCase(RainbowTarget::P5), 10).is_err());
    }

    #[test]
    fn pattern_validation() {
        assert!(PatternGraph::new(3, &[(0, 0)], None).is_err());
        assert!(PatternGraph::new(3, &[(0, 1), (1, 0)], None).is_err());
        assert!(PatternGraph::new(3, &[(0, 1)], None).is_err()); // vertex 2 isolated
        assert!(PatternGraph::new(3, &[(0, 1), (1, 2)], Some(vec![0, 0, 1])).is_err());
        assert!(PatternGraph::new(13, &[(0, 1)], None).is_err());
    }

    #[test]
    fn pattern_json_roundtrip() {
        let p = builtin("P4plus").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: PatternGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        // malformed files are rejected on deserialization
        let bad = r#"{"vertices": 2, "edges": [[0,0]], "bipartition": null, "name": null}"#;
        assert!(serde_json::from_str::<PatternGraph>(bad).is_err());
    }

    #[test]
    fn builtin_names() {
        for name in ["P2", "P3", "P4", "P5", "K13", "P4plus", "K3", "S3plus", "K1_4", "Kmulti_3x2", "M3"] {
            assert_eq!(builtin(name).unwrap().name(), Some(name));
        }
        assert!(builtin("Q7").is_err());
    }
}
