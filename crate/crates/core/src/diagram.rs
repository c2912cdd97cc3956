//! Planar link diagrams encoded as counterclockwise crossing incidences.
//!
//! A diagram is a list of 4-valent crossings. Each crossing stores the four
//! incident edge ids in counterclockwise order with the incoming under-edge
//! first, which matches the widely used PD-code tabulation convention. Edges
//! are dense ids `0..edge_count`; `labels` keeps the original 1-indexed labels
//! for display. Components without any crossing are counted separately in
//! `extra_loops` since they carry no incidence data.

use crate::error::{Error, Result};

/// A single 4-valent crossing.
///
/// `edges[0]` is the incoming under-edge and the entries follow the
/// counterclockwise rotation at the crossing; `edges[2]` is therefore the
/// outgoing under-edge and `edges[1]`, `edges[3]` carry the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub edges: [usize; 4],
    sign: i8,
}

impl Crossing {
    /// Crossing sign: +1 when the over-strand enters at slot 3, -1 when it
    /// enters at slot 1 (right-hand rule with the under-strand).
    pub fn sign(&self) -> i8 {
        self.sign
    }
}

/// Per-crossing resolution choice for a state of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    A,
    B,
}

impl Resolution {
    /// Slot pairs joined by this smoothing: A joins (0,1) and (2,3),
    /// B joins (0,3) and (1,2).
    pub fn joined_slots(self) -> [(u8, u8); 2] {
        match self {
            Resolution::A => [(0, 1), (2, 3)],
            Resolution::B => [(0, 3), (1, 2)],
        }
    }
}

/// A choice of A/B resolution at every crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateAssignment(pub Vec<Resolution>);

impl StateAssignment {
    pub fn all_a(len: usize) -> Self {
        StateAssignment(vec![Resolution::A; len])
    }

    pub fn all_b(len: usize) -> Self {
        StateAssignment(vec![Resolution::B; len])
    }

    /// Build from the low `len` bits of `mask`; bit set means B.
    pub fn from_bits(mask: u64, len: usize) -> Self {
        StateAssignment(
            (0..len)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Resolution::B
                    } else {
                        Resolution::A
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One pass of a strand through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pass {
    pub crossing: usize,
    pub under: bool,
}

/// A validated planar link diagram.
#[derive(Debug, Clone)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    labels: Vec<u64>,
    extra_loops: usize,
    // Derived traversal data, filled in by validation.
    succ: Vec<usize>,
    in_slot: Vec<(usize, u8)>,
    out_slot: Vec<(usize, u8)>,
    components: Vec<Vec<usize>>,
    comp_of_edge: Vec<usize>,
    pieces: Vec<Vec<usize>>,
    piece_of_crossing: Vec<usize>,
    faces: Vec<Vec<(usize, u8)>>,
    face_of_corner: Vec<[usize; 4]>,
}

impl PartialEq for PlanarDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.extra_loops == other.extra_loops
            && self.labels == other.labels
            && self.crossings.len() == other.crossings.len()
            && self
                .crossings
                .iter()
                .zip(&other.crossings)
                .all(|(a, b)| a.edges == b.edges)
    }
}

impl Eq for PlanarDiagram {}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flow {
    In,
    Out,
}

impl Flow {
    fn flip(self) -> Flow {
        match self {
            Flow::In => Flow::Out,
            Flow::Out => Flow::In,
        }
    }
}

impl PlanarDiagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// The crossingless diagram of an `n`-component unlink.
    pub fn unlink(n: usize) -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            labels: Vec::new(),
            extra_loops: n,
            succ: Vec::new(),
            in_slot: Vec::new(),
            out_slot: Vec::new(),
            components: Vec::new(),
            comp_of_edge: Vec::new(),
            pieces: Vec::new(),
            piece_of_crossing: Vec::new(),
            faces: Vec::new(),
            face_of_corner: Vec::new(),
        }
    }

    /// Build a diagram from oriented incidence tuples (slot 0 is the incoming
    /// under-edge at every crossing). Edge ids must be dense `0..2c`.
    pub fn from_oriented(tuples: Vec<[usize; 4]>, extra_loops: usize) -> Result<Self> {
        let n = tuples.len();
        Self::build(tuples, None, extra_loops, &vec![true; n])
    }

    /// Build a diagram from incidence tuples whose under-strand direction is
    /// not yet known; slots (0,2) must still carry the under-strand. The
    /// orientation solver decides the flow and rotates tuples so that slot 0
    /// is the incoming under-edge.
    pub fn from_unoriented(tuples: Vec<[usize; 4]>, extra_loops: usize) -> Result<Self> {
        let n = tuples.len();
        Self::build(tuples, None, extra_loops, &vec![false; n])
    }

    pub(crate) fn build(
        mut tuples: Vec<[usize; 4]>,
        labels: Option<Vec<u64>>,
        extra_loops: usize,
        under_forced: &[bool],
    ) -> Result<Self> {
        let c = tuples.len();
        let edge_count = if c == 0 { 0 } else { 2 * c };
        let labels = labels.unwrap_or_else(|| (0..edge_count as u64).map(|i| i + 1).collect());
        let label_of = |e: usize| -> String {
            labels
                .get(e)
                .map(|l| l.to_string())
                .unwrap_or_else(|| format!("#{e}"))
        };

        // Each edge id must occur exactly twice across all incidence slots.
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); edge_count];
        for (ci, t) in tuples.iter().enumerate() {
            for (si, &e) in t.iter().enumerate() {
                if e >= edge_count {
                    return Err(Error::MalformedToken {
                        token: format!("edge id {e}"),
                        reason: format!("edge ids must be dense below {edge_count}"),
                    });
                }
                occ[e].push((ci, si as u8));
                if occ[e].len() > 2 {
                    return Err(Error::EdgeLabelCount {
                        label: label_of(e),
                        count: occ[e].len(),
                    });
                }
            }
        }
        for e in 0..edge_count {
            if occ[e].len() != 2 {
                return Err(Error::EdgeLabelCount {
                    label: label_of(e),
                    count: occ[e].len(),
                });
            }
        }

        // Orient: 2-color the 4c incidence slots with In/Out so that the two
        // occurrences of an edge disagree and the paired slots (0,2), (1,3)
        // of each crossing disagree. Under-forced crossings seed slot 0 = In.
        let slot_id = |ci: usize, si: u8| ci * 4 + si as usize;
        let mut color: Vec<Option<Flow>> = vec![None; 4 * c];
        let mut queue: Vec<usize> = Vec::new();
        for ci in 0..c {
            if under_forced[ci] {
                color[slot_id(ci, 0)] = Some(Flow::In);
                color[slot_id(ci, 2)] = Some(Flow::Out);
                queue.push(slot_id(ci, 0));
                queue.push(slot_id(ci, 2));
            }
        }
        let other_end = |ci: usize, si: u8| -> (usize, u8) {
            let e = tuples[ci][si as usize];
            let [a, b] = [occ[e][0], occ[e][1]];
            if a == (ci, si) {
                b
            } else {
                a
            }
        };
        let mut propagate = |color: &mut Vec<Option<Flow>>, queue: &mut Vec<usize>| -> Result<()> {
            while let Some(s) = queue.pop() {
                let (ci, si) = (s / 4, (s % 4) as u8);
                let cur = color[s].expect("queued slots are colored");
                let (oc, os) = other_end(ci, si);
                for (nc, ns) in [(oc, os), (ci, si ^ 2)] {
                    let ns_id = slot_id(nc, ns);
                    match color[ns_id] {
                        None => {
                            color[ns_id] = Some(cur.flip());
                            queue.push(ns_id);
                        }
                        Some(f) if f == cur => {
                            return Err(Error::OrientationConflict {
                                label: label_of(tuples[ci][si as usize]),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
            Ok(())
        };
        propagate(&mut color, &mut queue)?;
        // Anchor any remaining unforced pieces: the lowest uncolored edge id
        // departs from its first listed occurrence.
        for e in 0..edge_count {
            let (ci, si) = occ[e][0];
            let s = slot_id(ci, si);
            if color[s].is_none() {
                color[s] = Some(Flow::Out);
                queue.push(s);
                propagate(&mut color, &mut queue)?;
            }
        }

        // Normalize: rotate unforced tuples so slot 0 is the incoming
        // under-edge, carrying the flow colors through the rotation.
        for ci in 0..c {
            if color[slot_id(ci, 0)] == Some(Flow::Out) {
                debug_assert!(!under_forced[ci]);
                tuples[ci].rotate_left(2);
                color.swap(slot_id(ci, 0), slot_id(ci, 2));
                color.swap(slot_id(ci, 1), slot_id(ci, 3));
            }
        }

        // Re-derive occurrences and per-edge flow on the normalized tuples.
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); edge_count];
        for (ci, t) in tuples.iter().enumerate() {
            for (si, &e) in t.iter().enumerate() {
                occ[e].push((ci, si as u8));
            }
        }
        let mut in_slot = vec![(usize::MAX, 0u8); edge_count];
        let mut out_slot = vec![(usize::MAX, 0u8); edge_count];
        for (e, slots) in occ.iter().enumerate() {
            for &(ci, si) in slots {
                match color[slot_id(ci, si)] {
                    Some(Flow::In) => {
                        if in_slot[e].0 != usize::MAX {
                            return Err(Error::OrientationConflict { label: label_of(e) });
                        }
                        in_slot[e] = (ci, si);
                    }
                    Some(Flow::Out) => {
                        if out_slot[e].0 != usize::MAX {
                            return Err(Error::OrientationConflict { label: label_of(e) });
                        }
                        out_slot[e] = (ci, si);
                    }
                    None => unreachable!("all slots colored"),
                }
            }
        }

        // Successor along the strand: arrive at a crossing, leave by the
        // opposite slot.
        let mut succ = vec![usize::MAX; edge_count];
        for e in 0..edge_count {
            let (ci, si) = in_slot[e];
            succ[e] = tuples[ci][(si ^ 2) as usize];
        }

        // Components are the cycles of the successor permutation.
        let mut comp_of_edge = vec![usize::MAX; edge_count];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for start in 0..edge_count {
            if comp_of_edge[start] != usize::MAX {
                continue;
            }
            let idx = components.len();
            let mut cycle = Vec::new();
            let mut e = start;
            loop {
                comp_of_edge[e] = idx;
                cycle.push(e);
                e = succ[e];
                if e == start {
                    break;
                }
            }
            components.push(cycle);
        }

        // Connected pieces of the underlying projection.
        let mut piece_of_crossing = vec![usize::MAX; c];
        let mut pieces: Vec<Vec<usize>> = Vec::new();
        for start in 0..c {
            if piece_of_crossing[start] != usize::MAX {
                continue;
            }
            let idx = pieces.len();
            let mut stack = vec![start];
            let mut piece = Vec::new();
            piece_of_crossing[start] = idx;
            while let Some(ci) = stack.pop() {
                piece.push(ci);
                for si in 0..4u8 {
                    let e = tuples[ci][si as usize];
                    for &(oc, _) in &occ[e] {
                        if piece_of_crossing[oc] == usize::MAX {
                            piece_of_crossing[oc] = idx;
                            stack.push(oc);
                        }
                    }
                }
            }
            piece.sort_unstable();
            pieces.push(piece);
        }

        // Faces: orbits of the corner successor. The corner between slots
        // (s, s+1) continues across the edge at slot s+1 to its other end.
        let mut face_of_corner = vec![[usize::MAX; 4]; c];
        let mut faces: Vec<Vec<(usize, u8)>> = Vec::new();
        for ci in 0..c {
            for si in 0..4u8 {
                if face_of_corner[ci][si as usize] != usize::MAX {
                    continue;
                }
                let idx = faces.len();
                let mut orbit = Vec::new();
                let (mut cc, mut cs) = (ci, si);
                loop {
                    face_of_corner[cc][cs as usize] = idx;
                    orbit.push((cc, cs));
                    let next_slot = (cs + 1) % 4;
                    let e = tuples[cc][next_slot as usize];
                    let [a, b] = [occ[e][0], occ[e][1]];
                    let (nc, ns) = if a == (cc, next_slot) { b } else { a };
                    cc = nc;
                    cs = ns;
                    if (cc, cs) == (ci, si) {
                        break;
                    }
                }
                faces.push(orbit);
            }
        }

        // Euler check per connected piece certifies planarity of the encoding.
        for (pi, piece) in pieces.iter().enumerate() {
            let v = piece.len();
            let e = 2 * v;
            let f = faces
                .iter()
                .filter(|orbit| piece_of_crossing[orbit[0].0] == pi)
                .count();
            if v + f != e + 2 {
                return Err(Error::EulerCheckFailed {
                    vertices: v,
                    edges: e,
                    faces: f,
                });
            }
        }

        // Crossing signs from the over-strand direction.
        let crossings = tuples
            .iter()
            .enumerate()
            .map(|(ci, t)| {
                let over_in = in_slot[t[3] as usize];
                let sign = if over_in == (ci, 3) { 1 } else { -1 };
                debug_assert!(sign == 1 || in_slot[t[1] as usize] == (ci, 1));
                Crossing { edges: *t, sign }
            })
            .collect();

        Ok(PlanarDiagram {
            crossings,
            labels,
            extra_loops,
            succ,
            in_slot,
            out_slot,
            components,
            comp_of_edge,
            pieces,
            piece_of_crossing,
            faces,
            face_of_corner,
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.len()
    }

    /// Number of link components, counting crossingless loops.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.extra_loops
    }

    /// Components that pass through at least one crossing, as edge cycles in
    /// traversal order.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn extra_loops(&self) -> usize {
        self.extra_loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn edge_label(&self, e: usize) -> u64 {
        self.labels[e]
    }

    /// Successor edge along the strand orientation.
    pub fn successor(&self, e: usize) -> usize {
        self.succ[e]
    }

    pub(crate) fn in_slot(&self, e: usize) -> (usize, u8) {
        self.in_slot[e]
    }

    #[allow(dead_code)]
    pub(crate) fn out_slot(&self, e: usize) -> (usize, u8) {
        self.out_slot[e]
    }

    pub fn component_of_edge(&self, e: usize) -> usize {
        self.comp_of_edge[e]
    }

    /// Connected pieces of the underlying 4-valent projection (crossing ids).
    pub fn pieces(&self) -> &[Vec<usize>] {
        &self.pieces
    }

    pub fn piece_of_crossing(&self, c: usize) -> usize {
        self.piece_of_crossing[c]
    }

    /// True when the projection is a single connected piece. A lone
    /// crossingless loop counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            self.extra_loops == 1
        } else {
            self.extra_loops == 0 && self.pieces.len() == 1
        }
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    pub(crate) fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub(crate) fn face_orbits(&self) -> &[Vec<(usize, u8)>] {
        &self.faces
    }

    pub(crate) fn face_of_corner(&self, ci: usize, si: u8) -> usize {
        self.face_of_corner[ci][si as usize]
    }

    /// Faces of the rotation system as edge cycles. Requires a connected
    /// diagram; the crossingless unknot has two faces.
    pub fn trace_faces(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::Disconnected {
                operation: "trace_faces",
            });
        }
        if self.crossings.is_empty() {
            return Ok(vec![Vec::new(), Vec::new()]);
        }
        Ok(self
            .faces
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .map(|&(ci, si)| self.crossings[ci].edges[((si + 1) % 4) as usize])
                    .collect()
            })
            .collect())
    }

    /// The sequence of crossing passes along component `k`, starting from the
    /// pass at the end of `base` (which must lie on component `k`).
    pub fn component_passes(&self, k: usize, base: usize) -> Result<Vec<Pass>> {
        if k >= self.components.len() {
            return Err(Error::CrossinglessComponent { component: k });
        }
        if self.comp_of_edge[base] != k {
            return Err(Error::EdgeNotOnComponent {
                edge: base,
                component: k,
            });
        }
        let mut passes = Vec::with_capacity(self.components[k].len());
        let mut e = base;
        loop {
            let (ci, si) = self.in_slot[e];
            passes.push(Pass {
                crossing: ci,
                under: si == 0,
            });
            e = self.succ[e];
            if e == base {
                break;
            }
        }
        Ok(passes)
    }

    /// Swap over and under at crossing `k`. Applying twice returns a diagram
    /// equal to the original.
    pub fn crossing_change(&self, k: usize) -> Result<PlanarDiagram> {
        if k >= self.crossings.len() {
            return Err(Error::CrossingIndexOutOfRange {
                index: k,
                count: self.crossings.len(),
            });
        }
        let mut tuples: Vec<[usize; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        // Rotate so the old incoming over-edge lands in slot 0.
        if self.crossings[k].sign() > 0 {
            tuples[k].rotate_right(1);
        } else {
            tuples[k].rotate_left(1);
        }
        Self::build(
            tuples,
            Some(self.labels.clone()),
            self.extra_loops,
            &vec![true; self.crossings.len()],
        )
    }

    /// Connected sum spliced along edges `e1` of `self` and `e2` of `other`,
    /// respecting both orientations.
    pub fn connected_sum(&self, other: &PlanarDiagram, e1: usize, e2: usize) -> Result<PlanarDiagram> {
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let offset = self.edge_count();
        let mut tuples: Vec<[usize; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        for cr in &other.crossings {
            tuples.push([
                cr.edges[0] + offset,
                cr.edges[1] + offset,
                cr.edges[2] + offset,
                cr.edges[3] + offset,
            ]);
        }
        let c1 = self.crossings.len();
        // e1 now flows into other's consumer of e2, and e2 flows back into
        // self's consumer of e1.
        let (ci1, si1) = self.in_slot[e1];
        let (ci2, si2) = other.in_slot[e2];
        tuples[c1 + ci2][si2 as usize] = e1;
        tuples[ci1][si1 as usize] = e2 + offset;
        let n = tuples.len();
        let built = Self::build(
            remap_dense(&mut tuples),
            None,
            self.extra_loops + other.extra_loops,
            &vec![true; n],
        )?;
        Ok(built)
    }

    /// PD text form using the stored display labels.
    pub fn pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|c| {
                format!(
                    "X({},{},{},{})",
                    self.labels[c.edges[0]],
                    self.labels[c.edges[1]],
                    self.labels[c.edges[2]],
                    self.labels[c.edges[3]]
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Compact arbitrary edge ids in `tuples` to dense `0..2c`, preserving order.
pub(crate) fn remap_dense(tuples: &mut Vec<[usize; 4]>) -> Vec<[usize; 4]> {
    let mut seen: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for t in tuples.iter() {
        for &e in t {
            let next = seen.len();
            seen.entry(e).or_insert(next);
        }
    }
    // BTreeMap iteration assigned ids in first-seen order above only if keys
    // arrive sorted; rebuild in key order for a deterministic dense map.
    let mut ordered: Vec<usize> = seen.keys().copied().collect();
    ordered.sort_unstable();
    let map: std::collections::HashMap<usize, usize> = ordered
        .into_iter()
        .enumerate()
        .map(|(new, old)| (old, new))
        .collect();
    tuples
        .iter()
        .map(|t| [map[&t[0]], map[&t[1]], map[&t[2]], map[&t[3]]])
        .collect()
}
