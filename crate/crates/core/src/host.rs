//! Host graphs: the complete graph `K_n` and the balanced complete bipartite
//! graph `K_{n,n}`, with a fixed edge-index scheme and materialized vertex
//! automorphism groups.
//!
//! Edge indices are the wire format used by coloring files, so the scheme is
//! fixed: complete hosts index pairs `{i,j}` (`i < j`) in lexicographic order,
//! bipartite hosts index `(u_i, v_j)` as `i*n + j`. Bipartite vertices are laid
//! out flat: `0..n` is the `U` side, `n..2n` is the `V` side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest complete host whose automorphism group is materialized.
pub const MAX_COMPLETE_AUT: u32 = 8;
/// Largest per-side size of a bipartite host whose automorphism group is materialized.
pub const MAX_BIPARTITE_AUT: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HostKind {
    Complete,
    CompleteBipartite,
}

/// Side of the bipartition of `K_{n,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

/// A vertex of a host graph, as a flat index.
///
/// For complete hosts the index runs over `0..n`. For bipartite hosts,
/// `0..n` is side `U` and `n..2n` is side `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

/// An edge of a host graph, valid only relative to that host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

/// A permutation of host vertices, as the image of each flat vertex index.
pub type VertexPerm = Vec<u32>;
/// The edge permutation induced by a vertex permutation.
pub type EdgePerm = Vec<u32>;

/// A complete or balanced complete bipartite host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct HostGraph {
    kind: HostKind,
    n: u32,
}

impl HostGraph {
    /// The complete graph `K_n`, `n >= 2`.
    pub fn complete(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("complete host needs n >= 2, got {n}")));
        }
        Ok(HostGraph { kind: HostKind::Complete, n })
    }

    /// The balanced complete bipartite graph `K_{n,n}`, `n >= 1`.
    pub fn bipartite(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("bipartite host needs n >= 1".to_string()));
        }
        Ok(HostGraph { kind: HostKind::CompleteBipartite, n })
    }

    pub fn kind(&self) -> HostKind {
        self.kind
    }

    /// `n`: the vertex count for complete hosts, the per-side size for bipartite hosts.
    pub fn size(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> u32 {
        match self.kind {
            HostKind::Complete => self.n,
            HostKind::CompleteBipartite => 2 * self.n,
        }
    }

    /// `m = n(n-1)/2` for complete hosts, `m = n^2` for bipartite hosts.
    pub fn edge_count(&self) -> u32 {
        match self.kind {
            HostKind::Complete => self.n * (self.n - 1) / 2,
            HostKind::CompleteBipartite => self.n * self.n,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        self.kind == HostKind::CompleteBipartite
    }

    /// Vertex `u_i` of a bipartite host.
    pub fn u_vertex(&self, i: u32) -> Result<VertexId> {
        self.require_bipartite("u_vertex")?;
        if i >= self.n {
            return Err(Error::invalid(format!("u_{i} out of range for {self}")));
        }
        Ok(VertexId(i))
    }

    /// Vertex `v_j` of a bipartite host.
    pub fn v_vertex(&self, j: u32) -> Result<VertexId> {
        self.require_bipartite("v_vertex")?;
        if j >= self.n {
            return Err(Error::invalid(format!("v_{j} out of range for {self}")));
        }
        Ok(VertexId(self.n + j))
    }

    /// Which side a vertex lies on; `None` for complete hosts.
    pub fn side_of(&self, v: VertexId) -> Option<Side> {
        match self.kind {
            HostKind::Complete => None,
            HostKind::CompleteBipartite => Some(if v.0 < self.n { Side::U } else { Side::V }),
        }
    }

    fn require_bipartite(&self, what: &str) -> Result<()> {
        if !self.is_bipartite() {
            return Err(Error::invalid(format!("{what} is only meaningful on bipartite hosts")));
        }
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 >= self.vertex_count() {
            return Err(Error::invalid(format!("vertex {} out of range for {self}", v.0)));
        }
        Ok(())
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 >= self.edge_count() {
            return Err(Error::invalid(format!("edge {} out of range for {self}", e.0)));
        }
        Ok(())
    }

    /// The index of the edge `{u, v}` under the fixed scheme.
    ///
    /// Complete hosts rank pairs `{i, j}` with `i < j` lexicographically;
    /// bipartite hosts map `(u_i, v_j)` to `i*n + j`.
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("edge endpoints must differ, got vertex {} twice", u.0)));
        }
        match self.kind {
            HostKind::Complete => {
                let (i, j) = if u.0 < v.0 { (u.0, v.0) } else { (v.0, u.0) };
                // rank of {i,j} in lexicographic pair order
                let before_row = i * self.n - i * (i + 1) / 2;
                Ok(EdgeId(before_row + (j - i - 1)))
            }
            HostKind::CompleteBipartite => {
                let (su, sv) = (self.side_of(u).unwrap(), self.side_of(v).unwrap());
                if su == sv {
                    return Err(Error::invalid(format!(
                        "vertices {} and {} lie on the same side of {self}",
                        u.0, v.0
                    )));
                }
                let (i, j) = if su == Side::U { (u.0, v.0 - self.n) } else { (v.0, u.0 - self.n) };
                Ok(EdgeId(i * self.n + j))
            }
        }
    }

    /// Inverse of [`edge_index`](Self::edge_index); endpoints come back with
    /// the smaller flat index first.
    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.check_edge(e)?;
        match self.kind {
            HostKind::Complete => {
                let mut idx = e.0;
                let mut i = 0;
                loop {
                    let row = self.n - 1 - i;
                    if idx < row {
                        return Ok((VertexId(i), VertexId(i + 1 + idx)));
                    }
                    idx -= row;
                    i += 1;
                }
            }
            HostKind::CompleteBipartite => {
                Ok((VertexId(e.0 / self.n), VertexId(self.n + e.0 % self.n)))
            }
        }
    }

    /// Whether two distinct in-range vertices are joined by a host edge.
    pub fn vertices_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        if a == b || a.0 >= self.vertex_count() || b.0 >= self.vertex_count() {
            return false;
        }
        match self.kind {
            HostKind::Complete => true,
            HostKind::CompleteBipartite => self.side_of(a) != self.side_of(b),
        }
    }

    /// Whether two distinct edges share an endpoint.
    pub fn edges_adjacent(&self, e1: EdgeId, e2: EdgeId) -> Result<bool> {
        if e1 == e2 {
            return Err(Error::invalid(format!("edges_adjacent needs distinct edges, got {} twice", e1.0)));
        }
        let (a, b) = self.endpoints(e1)?;
        let (c, d) = self.endpoints(e2)?;
        Ok(a == c || a == d || b == c || b == d)
    }

    /// All edges of the host, in index order.
    pub fn edges(&self) -> Vec<EdgeId> {
        (0..self.edge_count()).map(EdgeId).collect()
    }

    /// The full automorphism group acting on vertices.
    ///
    /// `Aut(K_n)` is `S_n`; the balanced bipartite host admits independent
    /// permutations of each side plus the side swap, so the group order is
    /// `2 * (n!)^2`. Materialization is guarded at `n <= 8` (complete) and
    /// `n <= 5` per side (bipartite).
    pub fn automorphisms(&self) -> Result<Vec<VertexPerm>> {
        match self.kind {
            HostKind::Complete => {
                if self.n > MAX_COMPLETE_AUT {
                    return Err(Error::GuardExceeded {
                        what: "complete host automorphism materialization (n)",
                        limit: MAX_COMPLETE_AUT as u64,
                        got: self.n as u64,
                    });
                }
                let mut out = Vec::new();
                permutations(self.n, &mut |p| out.push(p.to_vec()));
                Ok(out)
            }
            HostKind::CompleteBipartite => {
                if self.n > MAX_BIPARTITE_AUT {
                    return Err(Error::GuardExceeded {
                        what: "bipartite host automorphism materialization (n per side)",
                        limit: MAX_BIPARTITE_AUT as u64,
                        got: self.n as u64,
                    });
                }
                let n = self.n;
                let mut side_perms = Vec::new();
                permutations(n, &mut |p| side_perms.push(p.to_vec()));
                let mut out = Vec::with_capacity(2 * side_perms.len() * side_perms.len());
                for sigma in &side_perms {
                    for tau in &side_perms {
                        for swap in [false, true] {
                            let mut perm = vec![0u32; 2 * n as usize];
                            for i in 0..n as usize {
                                if swap {
                                    perm[i] = n + sigma[i];
                                    perm[n as usize + i] = tau[i];
                                } else {
                                    perm[i] = sigma[i];
                                    perm[n as usize + i] = n + tau[i];
                                }
                            }
                            out.push(perm);
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// The edge permutations induced by [`automorphisms`](Self::automorphisms).
    pub fn edge_automorphisms(&self) -> Result<Vec<EdgePerm>> {
        let m = self.edge_count();
        let verts = self.automorphisms()?;
        let mut out = Vec::with_capacity(verts.len());
        for perm in &verts {
            let mut edge_perm = vec![0u32; m as usize];
            for e in 0..m {
                let (a, b) = self.endpoints(EdgeId(e))?;
                let image = self.edge_index(VertexId(perm[a.0 as usize]), VertexId(perm[b.0 as usize]))?;
                edge_perm[e as usize] = image.0;
            }
            out.push(edge_perm);
        }
        Ok(out)
    }
}

/// Emits all permutations of `0..n` (as images) to `visit`.
fn permutations(n: u32, visit: &mut impl FnMut(&[u32])) {
    let mut items: Vec<u32> = (0..n).collect();
    fn rec(items: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
        if k == items.len() {
            visit(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, visit);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, visit);
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HostKind::Complete => write!(f, "Kn:{}", self.n),
            HostKind::CompleteBipartite => write!(f, "Knn:{}", self.n),
        }
    }
}

impl FromStr for HostGraph {
    type Err = Error;

    /// Parses the host descriptor grammar: `Kn:<n>` or `Knn:<n>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("malformed host descriptor {s:?}, expected Kn:<n> or Knn:<n>"));
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "Kn" => HostGraph::complete(n),
            "Knn" => HostGraph::bipartite(n),
            _ => Err(bad()),
        }
    }
}

impl From<HostGraph> for String {
    fn from(h: HostGraph) -> String {
        h.to_string()
    }
}

impl TryFrom<String> for HostGraph {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: u32) -> HostGraph {
        HostGraph::complete(n).unwrap()
    }

    fn knn(n: u32) -> HostGraph {
        HostGraph::bipartite(n).unwrap()
    }

    #[test]
    fn edge_index_complete_examples() {
        let host = k(4);
        assert_eq!(host.edge_index(VertexId(0), VertexId(1)).unwrap(), EdgeId(0));
        assert_eq!(host.edge_index(VertexId(2), VertexId(3)).unwrap(), EdgeId(5));
        assert_eq!(host.edge_index(VertexId(3), VertexId(2)).unwrap(), EdgeId(5));
    }

    #[test]
    fn edge_index_bipartite_example() {
        let host = knn(3);
        let u2 = host.u_vertex(2).unwrap();
        let v1 = host.v_vertex(1).unwrap();
        assert_eq!(host.edge_index(u2, v1).unwrap(), EdgeId(7));
    }

    #[test]
    fn endpoints_inverts_edge_index() {
        for host in [k(2), k(5), k(8), knn(1), knn(3), knn(5)] {
            for e in 0..host.edge_count() {
                let (a, b) = host.endpoints(EdgeId(e)).unwrap();
                assert_eq!(host.edge_index(a, b).unwrap(), EdgeId(e));
                assert!(a < b);
            }
        }
    }

    #[test]
    fn edge_index_rejects_bad_pairs() {
        let host = k(4);
        assert!(host.edge_index(VertexId(1), VertexId(1)).is_err());
        assert!(host.edge_index(VertexId(0), VertexId(4)).is_err());
        let host = knn(3);
        assert!(host
            .edge_index(host.u_vertex(0).unwrap(), host.u_vertex(2).unwrap())
            .is_err());
    }

    #[test]
    fn adjacency_examples() {
        let host = k(4);
        let e = |a, b| host.edge_index(VertexId(a), VertexId(b)).unwrap();
        assert!(host.edges_adjacent(e(0, 1), e(0, 2)).unwrap());
        assert!(!host.edges_adjacent(e(0, 1), e(2, 3)).unwrap());
        assert!(host.edges_adjacent(e(0, 1), e(0, 2)).unwrap() == host.edges_adjacent(e(0, 2), e(0, 1)).unwrap());
        assert!(host.edges_adjacent(e(0, 1), e(0, 1)).is_err());

        let host = knn(3);
        let u0 = host.u_vertex(0).unwrap();
        let e1 = host.edge_index(u0, host.v_vertex(0).unwrap()).unwrap();
        let e2 = host.edge_index(u0, host.v_vertex(2).unwrap()).unwrap();
        assert!(host.edges_adjacent(e1, e2).unwrap());
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(k(4).automorphisms().unwrap().len(), 24);
        assert_eq!(knn(2).automorphisms().unwrap().len(), 8);
        assert_eq!(knn(3).automorphisms().unwrap().len(), 72);
    }

    #[test]
    fn bipartite_group_equals_brute_force_isomorphism_count() {
        // Independent oracle: count all vertex bijections of K_{3,3} that
        // preserve adjacency, by trying every permutation of the six vertices.
        let host = knn(3);
        let adjacent = |a: u32, b: u32| (a < 3) != (b < 3);
        let mut count = 0u32;
        permutations(6, &mut |p| {
            let ok = (0..6).all(|a| (a + 1..6).all(|b| adjacent(a, b) == adjacent(p[a as usize], p[b as usize])));
            if ok {
                count += 1;
            }
        });
        assert_eq!(count, 72);
        assert_eq!(count as usize, host.automorphisms().unwrap().len());
    }

    #[test]
    fn automorphisms_preserve_edge_set() {
        for host in [k(5), knn(3)] {
            let m = host.edge_count();
            for perm in host.edge_automorphisms().unwrap() {
                let mut seen = vec![false; m as usize];
                for &img in &perm {
                    assert!(!seen[img as usize]);
                    seen[img as usize] = true;
                }
            }
        }
    }

    #[test]
    fn edge_automorphisms_form_a_group() {
        let host = knn(2);
        let perms = host.edge_automorphisms().unwrap();
        let identity: Vec<u32> = (0..host.edge_count()).collect();
        assert!(perms.contains(&identity));
        // closure on sampled pairs
        for a in perms.iter().step_by(3) {
            for b in perms.iter().step_by(2) {
                let composed: Vec<u32> = (0..a.len()).map(|e| b[a[e] as usize]).collect();
                assert!(perms.contains(&composed));
            }
        }
    }

    #[test]
    fn materialization_guards() {
        assert!(k(8).automorphisms().is_ok());
        assert!(matches!(k(9).automorphisms(), Err(Error::GuardExceeded { .. })));
        assert!(matches!(knn(6).automorphisms(), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn descriptor_roundtrip() {
        for host in [k(5), knn(4)] {
            let s = host.to_string();
            assert_eq!(s.parse::<HostGraph>().unwrap(), host);
        }
        assert!("K:5".parse::<HostGraph>().is_err());
        assert!("Kn:x".parse::<HostGraph>().is_err());
        assert!("Kn:1".parse::<HostGraph>().is_err());
    }
}
