//! State loop counting, the Turaev genus of a diagram, and alternating
//! 2-tangle extensions.

use crate::diagram::{PlanarDiagram, Resolution, StateAssignment};
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of simple closed curves after resolving every crossing per `s`.
/// Crossingless components each contribute one loop.
pub fn state_loop_count(d: &PlanarDiagram, s: &StateAssignment) -> Result<usize> {
    if s.len() != d.crossing_count() {
        return Err(Error::StateLengthMismatch {
            got: s.len(),
            expected: d.crossing_count(),
        });
    }
    let mut uf = UnionFind::new(d.edge_count());
    for (cr, &res) in d.crossings().iter().zip(&s.0) {
        for (a, b) in res.joined_slots() {
            uf.union(cr.edges[a as usize], cr.edges[b as usize]);
        }
    }
    let mut roots: Vec<usize> = (0..d.edge_count()).map(|e| uf.find(e)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len() + d.extra_loops())
}

/// Loop counts of the all-A and all-B states.
pub fn extreme_state_loops(d: &PlanarDiagram) -> (usize, usize) {
    let c = d.crossing_count();
    let a = state_loop_count(d, &StateAssignment::all_a(c)).expect("lengths match");
    let b = state_loop_count(d, &StateAssignment::all_b(c)).expect("lengths match");
    (a, b)
}

/// Genus of the state cobordism surface of a connected diagram:
/// `(2 + c - |s_A| - |s_B|) / 2`.
pub fn turaev_genus_diagram(d: &PlanarDiagram) -> Result<u32> {
    if !d.is_connected() {
        return Err(Error::Disconnected {
            operation: "turaev_genus_diagram",
        });
    }
    let (a, b) = extreme_state_loops(d);
    let doubled = 2 + d.crossing_count() as i64 - a as i64 - b as i64;
    debug_assert!(doubled >= 0 && doubled % 2 == 0);
    Ok((doubled / 2) as u32)
}

/// Per-piece genus for split diagrams. The aggregate genus of a split diagram
/// is refused by `turaev_genus_diagram`; this reports each connected piece of
/// the projection separately (crossingless loops are genus-0 spheres and are
/// not listed).
pub fn turaev_genus_pieces(d: &PlanarDiagram) -> Vec<u32> {
    let mut out = Vec::with_capacity(d.pieces().len());
    for piece in d.pieces() {
        let mut uf_a = UnionFind::new(d.edge_count());
        let mut uf_b = UnionFind::new(d.edge_count());
        let mut edges: Vec<usize> = Vec::new();
        for &ci in piece {
            let cr = &d.crossings()[ci];
            edges.extend_from_slice(&cr.edges);
            for (a, b) in Resolution::A.joined_slots() {
                uf_a.union(cr.edges[a as usize], cr.edges[b as usize]);
            }
            for (a, b) in Resolution::B.joined_slots() {
                uf_b.union(cr.edges[a as usize], cr.edges[b as usize]);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let count = |uf: &mut UnionFind| {
            let mut roots: Vec<usize> = edges.iter().map(|&e| uf.find(e)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len() as i64
        };
        let (a, b) = (count(&mut uf_a), count(&mut uf_b));
        let doubled = 2 + piece.len() as i64 - a - b;
        debug_assert!(doubled >= 0 && doubled % 2 == 0);
        out.push((doubled / 2) as u32);
    }
    out
}

/// An alternating 2-tangle fragment with boundary stubs `B1..B4` in
/// counterclockwise order. Slots (0,2) of each tuple carry the under-strand;
/// the flow direction is resolved when the fragment is glued.
#[derive(Debug, Clone)]
pub struct Tangle {
    tuples: Vec<[usize; 4]>,
    edge_count: usize,
    stubs: [usize; 4],
}

impl Tangle {
    pub fn new(tuples: Vec<[usize; 4]>, edge_count: usize, stubs: [usize; 4]) -> Result<Self> {
        let mut counts = vec![0usize; edge_count];
        for t in &tuples {
            for &e in t {
                if e >= edge_count {
                    return Err(Error::MalformedToken {
                        token: format!("edge id {e}"),
                        reason: "tangle edge id out of range".to_string(),
                    });
                }
                counts[e] += 1;
            }
        }
        for (i, &s) in stubs.iter().enumerate() {
            if counts[s] != 1 {
                return Err(Error::TangleBoundaryCount {
                    stub: format!("B{}", i + 1),
                    count: counts[s],
                });
            }
        }
        for (e, &c) in counts.iter().enumerate() {
            if !stubs.contains(&e) && c != 2 {
                return Err(Error::EdgeLabelCount {
                    label: format!("{e}"),
                    count: c,
                });
            }
        }
        Ok(Tangle {
            tuples,
            edge_count,
            stubs,
        })
    }

    /// Vertical twist stack with `n >= 1` crossings. The single-crossing
    /// stack is exactly the crossing `X(B1,B2,B3,B4)`, so gluing it back over
    /// a crossing reproduces the original diagram.
    pub fn twist(n: usize) -> Self {
        assert!(n >= 1);
        let base = 2 * (n - 1);
        let stubs = [base, base + 1, base + 2, base + 3];
        let level = |i: usize| -> (usize, usize) {
            if i == 0 {
                (stubs[0], stubs[1])
            } else if i == n {
                (stubs[3], stubs[2])
            } else {
                (2 * (i - 1), 2 * (i - 1) + 1)
            }
        };
        let tuples = (0..n)
            .map(|i| {
                let (bl, br) = level(i);
                let (tl, tr) = level(i + 1);
                [bl, br, tr, tl]
            })
            .collect();
        Tangle {
            tuples,
            edge_count: base + 4,
            stubs,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.tuples.len()
    }

    /// Strand-walk alternation check. Open strands run stub to stub; closed
    /// components are checked cyclically.
    pub fn is_alternating(&self) -> bool {
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); self.edge_count];
        for (ci, t) in self.tuples.iter().enumerate() {
            for (si, &e) in t.iter().enumerate() {
                occ[e].push((ci, si as u8));
            }
        }
        let mut visited = vec![[false; 4]; self.tuples.len()];
        let mut walk_ok = |mut ci: usize, mut si: u8, visited: &mut Vec<[bool; 4]>| -> bool {
            // Enter crossing ci at slot si, walking until a stub; returns
            // whether passes alternate.
            let mut last_under: Option<bool> = None;
            loop {
                let under = si % 2 == 0;
                if let Some(prev) = last_under {
                    if prev == under {
                        return false;
                    }
                }
                last_under = Some(under);
                visited[ci][si as usize] = true;
                let out_slot = si ^ 2;
                visited[ci][out_slot as usize] = true;
                let e = self.tuples[ci][out_slot as usize];
                if self.stubs.contains(&e) {
                    return true;
                }
                let ends = &occ[e];
                let (nc, ns) = if ends[0] == (ci, out_slot) {
                    ends[1]
                } else {
                    ends[0]
                };
                ci = nc;
                si = ns;
            }
        };
        // Open strands from each stub.
        for &s in &self.stubs {
            let (ci, si) = occ[s][0];
            if !walk_ok(ci, si, &mut visited) {
                return false;
            }
        }
        // Remaining closed components: adjacent passes must differ, also
        // across the wrap-around.
        for start_c in 0..self.tuples.len() {
            for start_s in 0..4u8 {
                if visited[start_c][start_s as usize] {
                    continue;
                }
                let (mut ci, mut si) = (start_c, start_s);
                let mut passes: Vec<bool> = Vec::new();
                loop {
                    passes.push(si % 2 == 0);
                    visited[ci][si as usize] = true;
                    let out_slot = si ^ 2;
                    visited[ci][out_slot as usize] = true;
                    let e = self.tuples[ci][out_slot as usize];
                    let ends = &occ[e];
                    let (nc, ns) = if ends[0] == (ci, out_slot) {
                        ends[1]
                    } else {
                        ends[0]
                    };
                    ci = nc;
                    si = ns;
                    if (ci, si) == (start_c, start_s) {
                        break;
                    }
                }
                for i in 0..passes.len() {
                    if passes[i] == passes[(i + 1) % passes.len()] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when some resolution of all but one crossing leaves a single
    /// crossing whose under-strand joins B1 to B3 and over-strand joins B2 to
    /// B4, with no closed loops.
    pub fn extends_crossing(&self) -> bool {
        let c = self.tuples.len();
        for x in 0..c {
            let others: Vec<usize> = (0..c).filter(|&i| i != x).collect();
            'res: for mask in 0u64..(1u64 << others.len()) {
                let mut uf = UnionFind::new(self.edge_count);
                for (bit, &ci) in others.iter().enumerate() {
                    let res = if mask >> bit & 1 == 1 {
                        Resolution::B
                    } else {
                        Resolution::A
                    };
                    for (a, b) in res.joined_slots() {
                        uf.union(
                            self.tuples[ci][a as usize],
                            self.tuples[ci][b as usize],
                        );
                    }
                }
                let t = self.tuples[x];
                let a1 = uf.find(self.stubs[0]);
                let a2 = uf.find(self.stubs[1]);
                let a3 = uf.find(self.stubs[2]);
                let a4 = uf.find(self.stubs[3]);
                let u_in = uf.find(t[0]);
                let u_out = uf.find(t[2]);
                let o1 = uf.find(t[1]);
                let o2 = uf.find(t[3]);
                if a1 == a3 || a2 == a4 {
                    continue;
                }
                let under_ok = (a1 == u_in && a3 == u_out) || (a1 == u_out && a3 == u_in);
                let over_ok = (a2 == o1 && a4 == o2) || (a2 == o2 && a4 == o1);
                if !under_ok || !over_ok {
                    continue;
                }
                // Exactly four arcs and no closed loops.
                let mut roots: Vec<usize> = (0..self.edge_count).map(|e| uf.find(e)).collect();
                roots.sort_unstable();
                roots.dedup();
                if roots.len() != 4 {
                    continue 'res;
                }
                return true;
            }
        }
        false
    }
}

/// Replace crossing `k` of `d` by the alternating tangle `tau`, identifying
/// stubs `B1..B4` with the crossing's slots 0..3. The result has
/// `c(d) - 1 + c(tau)` crossings.
pub fn tangle_extend(d: &PlanarDiagram, k: usize, tau: &Tangle) -> Result<PlanarDiagram> {
    if k >= d.crossing_count() {
        return Err(Error::CrossingIndexOutOfRange {
            index: k,
            count: d.crossing_count(),
        });
    }
    if !tau.is_alternating() {
        return Err(Error::TangleNotAlternating);
    }
    if !tau.extends_crossing() {
        return Err(Error::TangleDoesNotExtend {
            reason: "no resolution of all but one crossing leaves a single matching crossing"
                .to_string(),
        });
    }

    let replaced = d.crossings()[k].edges;
    let offset = d.edge_count();
    // Tangle edge -> glued edge id: stubs take the replaced crossing's edges,
    // internal edges move past the diagram's id range.
    let glue = |e: usize| -> usize {
        if let Some(pos) = tau.stubs.iter().position(|&s| s == e) {
            replaced[pos]
        } else {
            offset + e
        }
    };

    // Splice the tangle crossings in place of crossing k so the identity
    // extension reproduces the diagram verbatim.
    let mut tuples: Vec<[usize; 4]> = Vec::new();
    let mut forced: Vec<bool> = Vec::new();
    for (ci, cr) in d.crossings().iter().enumerate() {
        if ci == k {
            for t in &tau.tuples {
                tuples.push([glue(t[0]), glue(t[1]), glue(t[2]), glue(t[3])]);
                forced.push(false);
            }
        } else {
            tuples.push(cr.edges);
            forced.push(true);
        }
    }
    let dense = crate::diagram::remap_dense(&mut tuples);
    PlanarDiagram::build(dense, None, d.extra_loops(), &forced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, BraidWord};
    use crate::parse::{parse_pd, parse_tangle};

    fn trefoil() -> PlanarDiagram {
        braid_closure(&BraidWord::new(2, vec![1, 1, 1]).unwrap())
    }

    #[test]
    fn trefoil_extreme_states() {
        let d = trefoil();
        let c = d.crossing_count();
        assert_eq!(
            state_loop_count(&d, &StateAssignment::all_a(c)).unwrap(),
            2
        );
        assert_eq!(
            state_loop_count(&d, &StateAssignment::all_b(c)).unwrap(),
            3
        );
    }

    #[test]
    fn unknot_empty_state_has_one_loop() {
        let u = PlanarDiagram::unknot();
        assert_eq!(
            state_loop_count(&u, &StateAssignment::all_a(0)).unwrap(),
            1
        );
    }

    #[test]
    fn state_length_mismatch_is_reported() {
        let d = trefoil();
        assert!(matches!(
            state_loop_count(&d, &StateAssignment::all_a(2)),
            Err(Error::StateLengthMismatch { got: 2, expected: 3 })
        ));
    }

    #[test]
    fn alternating_diagrams_have_genus_zero() {
        assert_eq!(turaev_genus_diagram(&trefoil()).unwrap(), 0);
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(turaev_genus_diagram(&f8).unwrap(), 0);
        assert_eq!(turaev_genus_diagram(&PlanarDiagram::unknot()).unwrap(), 0);
    }

    #[test]
    fn torus_3_4_diagram_genus_is_at_least_one() {
        let d = braid_closure(&BraidWord::new(3, vec![1, 2, 1, 2, 1, 2, 1, 2]).unwrap());
        assert!(turaev_genus_diagram(&d).unwrap() >= 1);
    }

    #[test]
    fn genus_parity_holds_on_samples() {
        for (p, letters) in [
            (2usize, vec![1i64, 1]),
            (3, vec![1, -2, 1, -2]),
            (3, vec![1, 2, 1, 2, 1, 2]),
            (4, vec![1, 2, 3, 1, 2, 3]),
        ] {
            let d = braid_closure(&BraidWord::new(p, letters).unwrap());
            if d.is_connected() {
                // Constructor would panic on odd parity via the debug assert.
                let _ = turaev_genus_diagram(&d).unwrap();
            }
        }
    }

    #[test]
    fn disconnected_genus_is_refused_but_pieces_are_reported() {
        let d = braid_closure(&BraidWord::new(4, vec![1, 1, 3, 3]).unwrap());
        assert!(!d.is_connected());
        assert!(matches!(
            turaev_genus_diagram(&d),
            Err(Error::Disconnected { .. })
        ));
        assert_eq!(turaev_genus_pieces(&d), vec![0, 0]);
    }

    #[test]
    fn identity_tangle_extension_reproduces_the_diagram() {
        let d = trefoil();
        let tau = Tangle::twist(1);
        for k in 0..3 {
            let e = tangle_extend(&d, k, &tau).unwrap();
            assert_eq!(e.crossing_count(), d.crossing_count());
            let (a0, b0) = extreme_state_loops(&d);
            let (a1, b1) = extreme_state_loops(&e);
            assert_eq!((a0, b0), (a1, b1));
        }
    }

    #[test]
    fn twist_extension_preserves_turaev_genus() {
        let d = trefoil();
        let tau = Tangle::twist(3);
        assert!(tau.is_alternating());
        assert!(tau.extends_crossing());
        let e = tangle_extend(&d, 0, &tau).unwrap();
        assert_eq!(e.crossing_count(), 5);
        assert_eq!(turaev_genus_diagram(&e).unwrap(), 0);
        let (a0, b0) = extreme_state_loops(&d);
        let (a1, b1) = extreme_state_loops(&e);
        assert_eq!(
            a0 + b0 - d.crossing_count(),
            a1 + b1 - e.crossing_count()
        );
    }

    #[test]
    fn parsed_tangle_matches_twist_builder() {
        let tau = parse_tangle("X(B1,B2,B3,B4)").unwrap();
        assert!(tau.is_alternating());
        assert!(tau.extends_crossing());
        let d = trefoil();
        let e = tangle_extend(&d, 1, &tau).unwrap();
        assert_eq!(e, d);
    }

    #[test]
    fn connected_sum_state_loops_add() {
        let t = trefoil();
        let f8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let s = t.connected_sum(&f8, 0, 0).unwrap();
        let (sa_t, sb_t) = extreme_state_loops(&t);
        let (sa_f, sb_f) = extreme_state_loops(&f8);
        let (sa_s, sb_s) = extreme_state_loops(&s);
        assert_eq!(sa_s, sa_t + sa_f - 1);
        assert_eq!(sb_s, sb_t + sb_f - 1);
        assert_eq!(
            turaev_genus_diagram(&s).unwrap(),
            turaev_genus_diagram(&t).unwrap() + turaev_genus_diagram(&f8).unwrap()
        );
    }
}
