//! The five canonical rainbow-free coloring templates (Colored Structures
//! 1-5): parameterized generators and a classifier that recovers the template
//! from a coloring.
//!
//! Structures 1-2 live on complete hosts, 3-5 on balanced bipartite hosts:
//!
//! 1. vertex parts `V_1..V_k`; edges inside `V_i` colored 1 or `i`, all
//!    cross edges colored 1;
//! 2. `K_n - v` monochromatic for some vertex `v`;
//! 3. one side split into `k` non-empty parts, all edges leaving part `i`
//!    colored `i`;
//! 4. one side split into `U_1`/`U_2`, the other into `V_1..V_k`; `V_i`-`U_1`
//!    edges colored `i`, `V_i`-`U_2` edges colored 1;
//! 5. both sides split into `k` parts; `U_i`-`V_i` edges colored 1 or `i`,
//!    everything else colored 1.
//!
//! The classifier tries every color in the role of "color 1" and each side in
//! the role of `U`, so matching is invariant under color relabeling and host
//! automorphism. Degenerate parts are allowed where the templates allow them
//! (`|U_2| = 0` and `|V_1| = 0` in Structure 4, `|U_1| = |V_1| = 0` in
//! Structure 5).

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::host::{HostGraph, Side};

/// Which internal color a part uses where the template allows "either 1 or i".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartFill {
    /// the shared base color (role "1")
    Base,
    /// the part's own color (role "i")
    Own,
}

/// Parameters instantiating one of the five colored structures. Part lists
/// are indexed by color role: entry 0 is the role-1 part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub enum StructureSpec {
    /// Structure 1 on `K_n`.
    Structure1 { n: u32, part_sizes: Vec<u32>, part_fills: Vec<PartFill> },
    /// Structure 2 on `K_n`: vertex 0 is the distinguished vertex, the rest is
    /// monochromatic in color 1; `spoke_colors[j]` colors the edge to vertex `j+1`.
    Structure2 { n: u32, spoke_colors: Vec<u32> },
    /// Structure 3 on `K_{n,n}`.
    Structure3 { n: u32, u_sizes: Vec<u32> },
    /// Structure 4 on `K_{n,n}`: `u1_size` vertices in `U_1`, the rest in `U_2`.
    Structure4 { n: u32, u1_size: u32, v_sizes: Vec<u32> },
    /// Structure 5 on `K_{n,n}`; `part_fills[i]` picks the color inside the
    /// `U_i`-`V_i` block.
    Structure5 { n: u32, u_sizes: Vec<u32>, v_sizes: Vec<u32>, part_fills: Vec<PartFill> },
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    structure_id: u8,
    n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    part_sizes: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    part_fills: Option<Vec<PartFill>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spoke_colors: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u_sizes: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    u1_size: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v_sizes: Option<Vec<u32>>,
}

impl From<StructureSpec> for RawSpec {
    fn from(spec: StructureSpec) -> RawSpec {
        let mut raw = RawSpec {
            structure_id: spec.structure_id(),
            n: 0,
            part_sizes: None,
            part_fills: None,
            spoke_colors: None,
            u_sizes: None,
            u1_size: None,
            v_sizes: None,
        };
        match spec {
            StructureSpec::Structure1 { n, part_sizes, part_fills } => {
                raw.n = n;
                raw.part_sizes = Some(part_sizes);
                raw.part_fills = Some(part_fills);
            }
            StructureSpec::Structure2 { n, spoke_colors } => {
                raw.n = n;
                raw.spoke_colors = Some(spoke_colors);
            }
            StructureSpec::Structure3 { n, u_sizes } => {
                raw.n = n;
                raw.u_sizes = Some(u_sizes);
            }
            StructureSpec::Structure4 { n, u1_size, v_sizes } => {
                raw.n = n;
                raw.u1_size = Some(u1_size);
                raw.v_sizes = Some(v_sizes);
            }
            StructureSpec::Structure5 { n, u_sizes, v_sizes, part_fills } => {
                raw.n = n;
                raw.u_sizes = Some(u_sizes);
                raw.v_sizes = Some(v_sizes);
                raw.part_fills = Some(part_fills);
            }
        }
        raw
    }
}

impl TryFrom<RawSpec> for StructureSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<StructureSpec> {
        let n = raw.n;
        match raw.structure_id {
            1 => {
                let part_sizes = raw.part_sizes.ok_or_else(|| Error::invalid("structure 1 needs part_sizes"))?;
                let part_fills = raw
                    .part_fills
                    .unwrap_or_else(|| default_fills(part_sizes.len()));
                Ok(StructureSpec::Structure1 { n, part_sizes, part_fills })
            }
            2 => Ok(StructureSpec::Structure2 {
                n,
                spoke_colors: raw
                    .spoke_colors
                    .ok_or_else(|| Error::invalid("structure 2 needs spoke_colors"))?,
            }),
            3 => Ok(StructureSpec::Structure3 {
                n,
                u_sizes: raw.u_sizes.ok_or_else(|| Error::invalid("structure 3 needs u_sizes"))?,
            }),
            4 => Ok(StructureSpec::Structure4 {
                n,
                u1_size: raw.u1_size.ok_or_else(|| Error::invalid("structure 4 needs u1_size"))?,
                v_sizes: raw.v_sizes.ok_or_else(|| Error::invalid("structure 4 needs v_sizes"))?,
            }),
            5 => {
                let u_sizes = raw.u_sizes.ok_or_else(|| Error::invalid("structure 5 needs u_sizes"))?;
                let v_sizes = raw.v_sizes.ok_or_else(|| Error::invalid("structure 5 needs v_sizes"))?;
                let part_fills = raw.part_fills.unwrap_or_else(|| default_fills(u_sizes.len()));
                Ok(StructureSpec::Structure5 { n, u_sizes, v_sizes, part_fills })
            }
            other => Err(Error::invalid(format!("structure_id must be 1..=5, got {other}"))),
        }
    }
}

fn default_fills(parts: usize) -> Vec<PartFill> {
    // base for the role-1 part, own color everywhere else
    (0..parts).map(|i| if i == 0 { PartFill::Base } else { PartFill::Own }).collect()
}

impl StructureSpec {
    pub fn structure_id(&self) -> u8 {
        match self {
            StructureSpec::Structure1 { .. } => 1,
            StructureSpec::Structure2 { .. } => 2,
            StructureSpec::Structure3 { .. } => 3,
            StructureSpec::Structure4 { .. } => 4,
            StructureSpec::Structure5 { .. } => 5,
        }
    }

    /// The host the spec instantiates on: complete for structures 1-2,
    /// bipartite for 3-5.
    pub fn host(&self) -> Result<HostGraph> {
        match self {
            StructureSpec::Structure1 { n, .. } | StructureSpec::Structure2 { n, .. } => HostGraph::complete(*n),
            StructureSpec::Structure3 { n, .. }
            | StructureSpec::Structure4 { n, .. }
            | StructureSpec::Structure5 { n, .. } => HostGraph::bipartite(*n),
        }
    }
}

/// A vertex part labeled by the color whose role it plays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorPart {
    pub color: u32,
    pub vertices: Vec<u32>,
}

/// The partition recovered by a successful classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "structure")]
pub enum RecoveredStructure {
    /// Structure 1: `parts[0]` is the base-color part (possibly empty).
    Structure1 { base_color: u32, parts: Vec<ColorPart> },
    /// Structure 2.
    Structure2 { hub: u32, body_color: u32 },
    /// Structure 3: `side` is the partitioned side.
    Structure3 { side: Side, parts: Vec<ColorPart> },
    /// Structure 4: `side` plays the role of `U`.
    Structure4 { side: Side, base_color: u32, u1: Vec<u32>, u2: Vec<u32>, v_parts: Vec<ColorPart> },
    /// Structure 5.
    Structure5 { base_color: u32, u_parts: Vec<ColorPart>, v_parts: Vec<ColorPart> },
}

impl RecoveredStructure {
    pub fn structure_id(&self) -> u8 {
        match self {
            RecoveredStructure::Structure1 { .. } => 1,
            RecoveredStructure::Structure2 { .. } => 2,
            RecoveredStructure::Structure3 { .. } => 3,
            RecoveredStructure::Structure4 { .. } => 4,
            RecoveredStructure::Structure5 { .. } => 5,
        }
    }
}

/// Outcome of [`classify_structure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StructureVerdict {
    Matched { structure_id: u8, witness: RecoveredStructure },
    NoMatch,
}

impl StructureVerdict {
    pub fn matched(&self) -> Option<u8> {
        match self {
            StructureVerdict::Matched { structure_id, .. } => Some(*structure_id),
            StructureVerdict::NoMatch => None,
        }
    }
}

/// Realizes a structure spec verbatim as an exact edge coloring. The declared
/// color count equals the number of parts (or the largest spoke color), and
/// generation fails if any declared color would go unused.
pub fn generate_structure(spec: &StructureSpec) -> Result<EdgeColoring> {
    let host = spec.host()?;
    let m = host.edge_count() as usize;
    let mut colors = vec![0u32; m];
    let k;
    match spec {
        StructureSpec::Structure1 { n, part_sizes, part_fills } => {
            check_parts("structure 1", part_sizes, part_fills, *n)?;
            k = part_sizes.len() as u32;
            let part_of = assign_parts(part_sizes);
            for e in 0..m as u32 {
                let (u, v) = host.endpoints(crate::host::EdgeId(e))?;
                let (pu, pv) = (part_of[u.0 as usize], part_of[v.0 as usize]);
                colors[e as usize] = if pu == pv && part_fills[pu as usize - 1] == PartFill::Own {
                    pu
                } else {
                    1
                };
            }
        }
        StructureSpec::Structure2 { n, spoke_colors } => {
            if spoke_colors.len() != (*n as usize).saturating_sub(1) {
                return Err(Error::invalid(format!(
                    "structure 2 on K_{n} needs {} spoke colors, got {}",
                    n - 1,
                    spoke_colors.len()
                )));
            }
            k = spoke_colors.iter().copied().max().unwrap_or(1).max(1);
            for e in 0..m as u32 {
                let (u, v) = host.endpoints(crate::host::EdgeId(e))?;
                colors[e as usize] = if u.0 == 0 {
                    spoke_colors[v.0 as usize - 1]
                } else {
                    1
                };
            }
        }
        StructureSpec::Structure3 { n, u_sizes } => {
            if u_sizes.iter().any(|&s| s == 0) {
                return Err(Error::invalid("structure 3 parts must be non-empty".to_string()));
            }
            if u_sizes.iter().sum::<u32>() != *n {
                return Err(Error::invalid(format!("structure 3 part sizes must sum to {n}")));
            }
            k = u_sizes.len() as u32;
            let part_of = assign_parts(u_sizes);
            for e in 0..m as u32 {
                let (u, _v) = host.endpoints(crate::host::EdgeId(e))?;
                colors[e as usize] = part_of[u.0 as usize];
            }
        }
        StructureSpec::Structure4 { n, u1_size, v_sizes } => {
            if *u1_size < 1 || *u1_size > *n {
                return Err(Error::invalid(format!("structure 4 needs 1 <= |U_1| <= {n}")));
            }
            if v_sizes.is_empty() || v_sizes.iter().skip(1).any(|&s| s == 0) {
                return Err(Error::invalid("structure 4 needs |V_j| >= 1 for j >= 2".to_string()));
            }
            if v_sizes.iter().sum::<u32>() != *n {
                return Err(Error::invalid(format!("structure 4 V part sizes must sum to {n}")));
            }
            k = v_sizes.len() as u32;
            let v_part_of = assign_parts(v_sizes);
            for e in 0..m as u32 {
                let (u, v) = host.endpoints(crate::host::EdgeId(e))?;
                let in_u1 = u.0 < *u1_size;
                colors[e as usize] = if in_u1 { v_part_of[(v.0 - n) as usize] } else { 1 };
            }
        }
        StructureSpec::Structure5 { n, u_sizes, v_sizes, part_fills } => {
            if u_sizes.len() != v_sizes.len() || u_sizes.len() != part_fills.len() {
                return Err(Error::invalid("structure 5 needs equally many U parts, V parts and fills".to_string()));
            }
            if u_sizes.iter().skip(1).any(|&s| s == 0) || v_sizes.iter().skip(1).any(|&s| s == 0) {
                return Err(Error::invalid("structure 5 needs |U_j|, |V_j| >= 1 for j >= 2".to_string()));
            }
            if u_sizes.iter().sum::<u32>() != *n || v_sizes.iter().sum::<u32>() != *n {
                return Err(Error::invalid(format!("structure 5 part sizes must sum to {n} on each side")));
            }
            k = u_sizes.len() as u32;
            let u_part_of = assign_parts(u_sizes);
            let v_part_of = assign_parts(v_sizes);
            for e in 0..m as u32 {
                let (u, v) = host.endpoints(crate::host::EdgeId(e))?;
                let (pu, pv) = (u_part_of[u.0 as usize], v_part_of[(v.0 - n) as usize]);
                colors[e as usize] =
                    if pu == pv && part_fills[pu as usize - 1] == PartFill::Own { pu } else { 1 };
            }
        }
    }
    let coloring = EdgeColoring::new(host, k, colors);
    let violations = coloring.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(Error::invalid(format!(
            "structure spec does not realize an exact {k}-coloring: {}",
            list.join("; ")
        )));
    }
    Ok(coloring)
}

fn check_parts(what: &str, sizes: &[u32], fills: &[PartFill], n: u32) -> Result<()> {
    if sizes.is_empty() || sizes.len() != fills.len() {
        return Err(Error::invalid(format!("{what} needs matching part_sizes and part_fills")));
    }
    if fills[0] != PartFill::Base {
        return Err(Error::invalid(format!("{what}: the role-1 part colors its inside with the base color")));
    }
    if sizes.iter().sum::<u32>() != n {
        return Err(Error::invalid(format!("{what} part sizes must sum to {n}")));
    }
    Ok(())
}

/// part index (1-based, = color role) per consecutive vertex
fn assign_parts(sizes: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(sizes.iter().sum::<u32>() as usize);
    for (i, &s) in sizes.iter().enumerate() {
        out.extend(std::iter::repeat(i as u32 + 1).take(s as usize));
    }
    out
}

/// Tests an exact coloring against the structures of its host kind
/// (1 then 2 on complete hosts, 3 then 4 then 5 on bipartite hosts), trying
/// every color in the base role and each side in the `U` role, and returns
/// the first match with its recovered partition.
pub fn classify_structure(c: &EdgeColoring) -> Result<StructureVerdict> {
    c.require_exact()?;
    let host = c.host();
    let matched = if host.is_bipartite() {
        try_structure3(c).or_else(|| try_structure4(c)).or_else(|| try_structure5(c))
    } else {
        try_structure1(c).or_else(|| try_structure2(c))
    };
    Ok(match matched {
        Some(witness) => StructureVerdict::Matched { structure_id: witness.structure_id(), witness },
        None => StructureVerdict::NoMatch,
    })
}

/// endpoints of every edge of each color, as flat vertex sets
fn color_support(c: &EdgeColoring) -> Vec<Vec<u32>> {
    let host = c.host();
    let mut support = vec![Vec::new(); c.k() as usize + 1];
    for e in 0..host.edge_count() {
        let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
        let slot = &mut support[c.color(crate::host::EdgeId(e)) as usize];
        slot.push(u.0);
        slot.push(v.0);
    }
    for slot in support.iter_mut() {
        slot.sort_unstable();
        slot.dedup();
    }
    support
}

fn try_structure1(c: &EdgeColoring) -> Option<RecoveredStructure> {
    let host = c.host();
    let n = host.vertex_count();
    let support = color_support(c);
    'base: for base in 1..=c.k() {
        // parts are forced: W_i = vertices touched by color i; they must be
        // pairwise disjoint, everything else goes to the base part
        let mut part_of = vec![0u32; n as usize]; // 0 = base part
        for i in 1..=c.k() {
            if i == base {
                continue;
            }
            for &v in &support[i as usize] {
                if part_of[v as usize] != 0 {
                    continue 'base;
                }
                part_of[v as usize] = i;
            }
        }
        for e in 0..host.edge_count() {
            let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
            let col = c.color(crate::host::EdgeId(e));
            let (pu, pv) = (part_of[u.0 as usize], part_of[v.0 as usize]);
            let ok = if pu == pv && pu != 0 { col == base || col == pu } else { col == base };
            if !ok {
                continue 'base;
            }
        }
        let mut parts = vec![ColorPart { color: base, vertices: Vec::new() }];
        for i in 1..=c.k() {
            if i != base {
                parts.push(ColorPart { color: i, vertices: support[i as usize].clone() });
            }
        }
        parts[0].vertices = (0..n).filter(|&v| part_of[v as usize] == 0).collect();
        return Some(RecoveredStructure::Structure1 { base_color: base, parts });
    }
    None
}

fn try_structure2(c: &EdgeColoring) -> Option<RecoveredStructure> {
    let host = c.host();
    let n = host.vertex_count();
    'hub: for hub in 0..n {
        let mut body_color = None;
        for e in 0..host.edge_count() {
            let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
            if u.0 == hub || v.0 == hub {
                continue;
            }
            let col = c.color(crate::host::EdgeId(e));
            match body_color {
                None => body_color = Some(col),
                Some(b) if b == col => {}
                Some(_) => continue 'hub,
            }
        }
        if let Some(body_color) = body_color {
            return Some(RecoveredStructure::Structure2 { hub, body_color });
        }
    }
    None
}

/// star colors per vertex of one side, `None` when some star is not monochromatic
fn side_star_colors(c: &EdgeColoring, side: Side) -> Vec<Vec<u32>> {
    let host = c.host();
    let n = host.size();
    let mut palette = vec![Vec::new(); n as usize];
    for e in 0..host.edge_count() {
        let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
        let x = match side {
            Side::U => u.0,
            Side::V => v.0 - n,
        };
        let col = c.color(crate::host::EdgeId(e));
        if !palette[x as usize].contains(&col) {
            palette[x as usize].push(col);
        }
    }
    palette
}

fn try_structure3(c: &EdgeColoring) -> Option<RecoveredStructure> {
    for side in [Side::U, Side::V] {
        let palette = side_star_colors(c, side);
        if palette.iter().all(|p| p.len() == 1) {
            let mut parts: Vec<ColorPart> =
                (1..=c.k()).map(|color| ColorPart { color, vertices: Vec::new() }).collect();
            for (x, p) in palette.iter().enumerate() {
                parts[p[0] as usize - 1].vertices.push(flat_vertex(c.host(), side, x as u32));
            }
            return Some(RecoveredStructure::Structure3 { side, parts });
        }
    }
    None
}

fn flat_vertex(host: &HostGraph, side: Side, x: u32) -> u32 {
    match side {
        Side::U => x,
        Side::V => host.size() + x,
    }
}

fn try_structure4(c: &EdgeColoring) -> Option<RecoveredStructure> {
    let host = c.host();
    let n = host.size();
    for side in [Side::U, Side::V] {
        let palette = side_star_colors(c, side);
        for base in 1..=c.k() {
            // U_2 is forced to the all-base rows; each remaining column must
            // be monochromatic toward U_1
            let u2: Vec<u32> = (0..n).filter(|&x| palette[x as usize] == [base]).collect();
            let u1: Vec<u32> = (0..n).filter(|&x| palette[x as usize] != [base]).collect();
            if u1.is_empty() {
                if c.k() == 1 {
                    // everything is one color; any row works as U_1 with V = V_1
                    return Some(RecoveredStructure::Structure4 {
                        side,
                        base_color: base,
                        u1: vec![flat_vertex(host, side, 0)],
                        u2: (1..n).map(|x| flat_vertex(host, side, x)).collect(),
                        v_parts: vec![ColorPart {
                            color: 1,
                            vertices: (0..n).map(|y| flat_vertex(host, side.flip(), y)).collect(),
                        }],
                    });
                }
                continue;
            }
            let mut col_color = vec![None::<u32>; n as usize];
            let mut ok = true;
            'scan: for e in 0..host.edge_count() {
                let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
                let (x, y) = match side {
                    Side::U => (u.0, v.0 - n),
                    Side::V => (v.0 - n, u.0),
                };
                if !u1.contains(&x) {
                    continue;
                }
                let col = c.color(crate::host::EdgeId(e));
                match col_color[y as usize] {
                    None => col_color[y as usize] = Some(col),
                    Some(existing) if existing == col => {}
                    Some(_) => {
                        ok = false;
                        break 'scan;
                    }
                }
            }
            if !ok {
                continue;
            }
            let mut v_parts: Vec<ColorPart> =
                (1..=c.k()).map(|color| ColorPart { color, vertices: Vec::new() }).collect();
            for y in 0..n {
                let color = col_color[y as usize].expect("U_1 is non-empty");
                v_parts[color as usize - 1].vertices.push(flat_vertex(host, side.flip(), y));
            }
            return Some(RecoveredStructure::Structure4 {
                side,
                base_color: base,
                u1: u1.iter().map(|&x| flat_vertex(host, side, x)).collect(),
                u2: u2.iter().map(|&x| flat_vertex(host, side, x)).collect(),
                v_parts,
            });
        }
    }
    None
}

fn try_structure5(c: &EdgeColoring) -> Option<RecoveredStructure> {
    let host = c.host();
    let n = host.size();
    'base: for base in 1..=c.k() {
        // each non-base color must confine its U endpoints and V endpoints to
        // its own diagonal block; disjointness is the whole check
        let mut u_part = vec![0u32; n as usize];
        let mut v_part = vec![0u32; n as usize];
        for e in 0..host.edge_count() {
            let (u, v) = host.endpoints(crate::host::EdgeId(e)).expect("edge in range");
            let col = c.color(crate::host::EdgeId(e));
            if col == base {
                continue;
            }
            let (x, y) = (u.0, v.0 - n);
            if u_part[x as usize] != 0 && u_part[x as usize] != col {
                continue 'base;
            }
            if v_part[y as usize] != 0 && v_part[y as usize] != col {
                continue 'base;
            }
            u_part[x as usize] = col;
            v_part[y as usize] = col;
        }
        let collect = |parts: &[u32], side: Side| -> Vec<ColorPart> {
            let mut out = vec![ColorPart { color: base, vertices: Vec::new() }];
            for color in 1..=c.k() {
                if color == base {
                    continue;
                }
                out.push(ColorPart {
                    color,
                    vertices: (0..n)
                        .filter(|&x| parts[x as usize] == color)
                        .map(|x| flat_vertex(host, side, x))
                        .collect(),
                });
            }
            out[0].vertices = (0..n)
                .filter(|&x| parts[x as usize] == 0)
                .map(|x| flat_vertex(host, side, x))
                .collect();
            out
        };
        return Some(RecoveredStructure::Structure5 {
            base_color: base,
            u_parts: collect(&u_part, Side::U),
            v_parts: collect(&v_part, Side::V),
        });
    }
    None
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

/// Re-checks a recovered structure against the coloring it came from: every
/// edge must satisfy the template's color constraint for the recovered
/// partition. Regenerating from the partition with the input's free-edge
/// choices therefore reproduces the input exactly.
pub fn verify_witness(c: &EdgeColoring, witness: &RecoveredStructure) -> bool {
    let host = c.host();
    let part_lookup = |parts: &[ColorPart]| {
        let mut map = vec![None::<u32>; host.vertex_count() as usize];
        for part in parts {
            for &v in &part.vertices {
                map[v as usize] = Some(part.color);
            }
        }
        map
    };
    let all_edges = || (0..host.edge_count()).map(crate::host::EdgeId);
    match witness {
        RecoveredStructure::Structure1 { base_color, parts } => {
            let map = part_lookup(parts);
            all_edges().all(|e| {
                let (u, v) = host.endpoints(e).expect("edge in range");
                let col = c.color(e);
                match (map[u.0 as usize], map[v.0 as usize]) {
                    (Some(p), Some(q)) if p == q && p != *base_color => col == *base_color || col == p,
                    _ => col == *base_color,
                }
            })
        }
        RecoveredStructure::Structure2 { hub, body_color } => all_edges().all(|e| {
            let (u, v) = host.endpoints(e).expect("edge in range");
            u.0 == *hub || v.0 == *hub || c.color(e) == *body_color
        }),
        RecoveredStructure::Structure3 { parts, .. } => {
            let map = part_lookup(parts);
            all_edges().all(|e| {
                let (u, v) = host.endpoints(e).expect("edge in range");
                let col = c.color(e);
                map[u.0 as usize] == Some(col) || map[v.0 as usize] == Some(col)
            })
        }
        RecoveredStructure::Structure4 { base_color, u1, u2, v_parts, .. } => {
            let map = part_lookup(v_parts);
            all_edges().all(|e| {
                let (u, v) = host.endpoints(e).expect("edge in range");
                let col = c.color(e);
                let (row, colv) = if u1.contains(&u.0) || u2.contains(&u.0) { (u.0, v.0) } else { (v.0, u.0) };
                if u2.contains(&row) {
                    col == *base_color
                } else {
                    map[colv as usize] == Some(col)
                }
            })
        }
        RecoveredStructure::Structure5 { base_color, u_parts, v_parts } => {
            let umap = part_lookup(u_parts);
            let vmap = part_lookup(v_parts);
            all_edges().all(|e| {
                let (u, v) = host.endpoints(e).expect("edge in range");
                let col = c.color(e);
                if col == *base_color {
                    return true;
                }
                umap[u.0 as usize] == Some(col) && vmap[v.0 as usize] == Some(col)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::{EdgeId, VertexId};

    fn fills(spec: &str) -> Vec<PartFill> {
        spec.chars()
            .map(|c| if c == 'o' { PartFill::Own } else { PartFill::Base })
            .collect()
    }

    fn battery() -> Vec<StructureSpec> {
        vec![
            StructureSpec::Structure1 { n: 5, part_sizes: vec![1, 2, 2], part_fills: fills("boo") },
            StructureSpec::Structure1 { n: 6, part_sizes: vec![0, 2, 2, 2], part_fills: fills("booo") },
            StructureSpec::Structure2 { n: 5, spoke_colors: vec![2, 3, 4, 5] },
            StructureSpec::Structure2 { n: 6, spoke_colors: vec![2, 2, 3, 4, 5] },
            StructureSpec::Structure3 { n: 3, u_sizes: vec![1, 1, 1] },
            StructureSpec::Structure3 { n: 4, u_sizes: vec![2, 1, 1] },
            StructureSpec::Structure4 { n: 3, u1_size: 1, v_sizes: vec![0, 1, 1, 1] },
            StructureSpec::Structure4 { n: 4, u1_size: 2, v_sizes: vec![1, 2, 1] },
            StructureSpec::Structure5 { n: 3, u_sizes: vec![0, 2, 1], v_sizes: vec![1, 1, 1], part_fills: fills("boo") },
            StructureSpec::Structure5 {
                n: 4,
                u_sizes: vec![0, 2, 1, 1],
                v_sizes: vec![0, 1, 2, 1],
                part_fills: fills("booo"),
            },
        ]
    }

    #[test]
    fn generate_examples() {
        let c = generate_structure(&StructureSpec::Structure1 {
            n: 5,
            part_sizes: vec![1, 2, 2],
            part_fills: fills("boo"),
        })
        .unwrap();
        assert_eq!(c.k(), 3);
        assert!(c.is_exact());
        // cross edge {0,1} lies between parts, so it carries the base color
        assert_eq!(c.color(c.host().edge_index(VertexId(0), VertexId(1)).unwrap()), 1);

        let c = generate_structure(&StructureSpec::Structure2 { n: 5, spoke_colors: vec![2, 3, 4, 5] }).unwrap();
        assert_eq!(c.k(), 5);
        assert!(c.is_exact());

        let c = generate_structure(&StructureSpec::Structure3 { n: 3, u_sizes: vec![1, 1, 1] }).unwrap();
        assert_eq!(c.k(), 3);
        assert!(c.is_exact());
    }

    #[test]
    fn classify_roundtrip_matches_generator() {
        for spec in battery() {
            let c = generate_structure(&spec).unwrap();
            assert!(c.is_exact(), "{spec:?}");
            let verdict = classify_structure(&c).unwrap();
            match &verdict {
                StructureVerdict::Matched { structure_id, witness } => {
                    assert_eq!(*structure_id, spec.structure_id(), "{spec:?}");
                    assert!(verify_witness(&c, witness), "{spec:?}");
                }
                StructureVerdict::NoMatch => panic!("no match for {spec:?}"),
            }
        }
    }

    #[test]
    fn rainbow_colorings_do_not_match() {
        let host = HostGraph::complete(4).unwrap();
        let rainbow = EdgeColoring::new(host, 6, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(classify_structure(&rainbow).unwrap(), StructureVerdict::NoMatch);

        let host = HostGraph::bipartite(2).unwrap();
        let rainbow = EdgeColoring::new(host, 4, vec![1, 2, 3, 4]);
        assert_eq!(classify_structure(&rainbow).unwrap(), StructureVerdict::NoMatch);
    }

    #[test]
    fn classification_survives_color_relabeling_and_automorphism() {
        let spec = StructureSpec::Structure2 { n: 6, spoke_colors: vec![2, 3, 4, 5, 6] };
        let c = generate_structure(&spec).unwrap();
        // push through an automorphism and swap two color labels
        let perm = &c.host().edge_automorphisms().unwrap()[17];
        let moved = c.apply_edge_perm(perm);
        let relabeled: Vec<u32> = moved
            .colors()
            .iter()
            .map(|&col| match col {
                2 => 6,
                6 => 2,
                other => other,
            })
            .collect();
        let moved = EdgeColoring::new(*c.host(), c.k(), relabeled);
        assert_eq!(classify_structure(&moved).unwrap().matched(), Some(2));
    }

    #[test]
    fn invalid_specs_rejected() {
        // sizes do not sum to n
        assert!(generate_structure(&StructureSpec::Structure1 {
            n: 5,
            part_sizes: vec![1, 2],
            part_fills: fills("bo"),
        })
        .is_err());
        // part 2 of size 1 cannot use its own color: color 2 unused
        assert!(generate_structure(&StructureSpec::Structure1 {
            n: 3,
            part_sizes: vec![2, 1],
            part_fills: fills("bo"),
        })
        .is_err());
        // structure 3 parts must be non-empty
        assert!(generate_structure(&StructureSpec::Structure3 { n: 3, u_sizes: vec![0, 2, 1] }).is_err());
        // structure 4 requires |U_1| >= 1
        assert!(generate_structure(&StructureSpec::Structure4 {
            n: 3,
            u1_size: 0,
            v_sizes: vec![0, 2, 1],
        })
        .is_err());
        // spoke colors must cover 1..=k: color 3 missing
        assert!(generate_structure(&StructureSpec::Structure2 { n: 4, spoke_colors: vec![2, 4, 4] }).is_err());
    }

    #[test]
    fn spec_json_roundtrip() {
        for spec in battery() {
            let json = serde_json::to_string(&spec).unwrap();
            let back: StructureSpec = serde_json::from_str(&json).unwrap();
            assert_eq!(back, spec);
        }
        let text = r#"{"structure_id": 4, "n": 3, "u1_size": 1, "v_sizes": [0, 1, 1, 1]}"#;
        let spec: StructureSpec = serde_json::from_str(text).unwrap();
        assert_eq!(spec.structure_id(), 4);
    }

    #[test]
    fn degenerate_parts_recovered() {
        // |U_2| = 0 in structure 4 collapses to structure 3 (every column is
        // monochromatic), which the classifier reports first
        let c = generate_structure(&StructureSpec::Structure4 { n: 3, u1_size: 3, v_sizes: vec![1, 1, 1] }).unwrap();
        assert_eq!(classify_structure(&c).unwrap().matched(), Some(3));

        // |U_1| = |V_1| = 0 in structure 5
        let c = generate_structure(&StructureSpec::Structure5 {
            n: 3,
            u_sizes: vec![0, 2, 1],
            v_sizes: vec![0, 2, 1],
            part_fills: fills("boo"),
        })
        .unwrap();
        let verdict = classify_structure(&c).unwrap();
        assert_eq!(verdict.matched(), Some(5));
    }
}
