//! Alternation tests, the two alternating assignments of a projection, and
//! the diagram dealternating number.

use crate::diagram::PlanarDiagram;

/// True when the passes alternate over/under along every component,
/// including across the wrap-around. Crossingless components alternate
/// vacuously.
pub fn is_alternating(d: &PlanarDiagram) -> bool {
    for (k, comp) in d.components().iter().enumerate() {
        let passes = d
            .component_passes(k, comp[0])
            .expect("component indices are in range");
        for i in 0..passes.len() {
            if passes[i].under == passes[(i + 1) % passes.len()].under {
                return false;
            }
        }
    }
    true
}

/// The two crossing-flip sets per connected piece of the projection that
/// produce an alternating assignment. The two sets partition the piece's
/// crossings; the first never contains the piece's lowest crossing index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceFlips {
    pub crossings: Vec<usize>,
    pub flips: [Vec<usize>; 2],
}

/// For each connected piece, exactly two over/under assignments make it
/// alternating and they differ by flipping every crossing of the piece.
pub fn alternating_assignments(d: &PlanarDiagram) -> Vec<PieceFlips> {
    let c = d.crossing_count();
    // flip[x] xor flip[y] is forced for crossings consecutive along a strand:
    // equal when the passes already alternate, opposite otherwise.
    let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c];
    for (k, comp) in d.components().iter().enumerate() {
        let passes = d
            .component_passes(k, comp[0])
            .expect("component indices are in range");
        for i in 0..passes.len() {
            let a = passes[i];
            let b = passes[(i + 1) % passes.len()];
            let opposite = a.under == b.under;
            adjacency[a.crossing].push((b.crossing, opposite));
            adjacency[b.crossing].push((a.crossing, opposite));
        }
    }

    let mut flip: Vec<Option<bool>> = vec![None; c];
    let mut out = Vec::with_capacity(d.pieces().len());
    for piece in d.pieces() {
        let anchor = piece[0];
        flip[anchor] = Some(false);
        let mut stack = vec![anchor];
        while let Some(x) = stack.pop() {
            let fx = flip[x].expect("stacked crossings are assigned");
            for &(y, opposite) in &adjacency[x] {
                let fy = fx ^ opposite;
                match flip[y] {
                    None => {
                        flip[y] = Some(fy);
                        stack.push(y);
                    }
                    Some(prev) => {
                        debug_assert_eq!(prev, fy, "planar projections admit two alternating assignments");
                    }
                }
            }
        }
        let set: Vec<usize> = piece
            .iter()
            .copied()
            .filter(|&x| flip[x] == Some(true))
            .collect();
        let complement: Vec<usize> = piece
            .iter()
            .copied()
            .filter(|&x| flip[x] == Some(false))
            .collect();
        out.push(PieceFlips {
            crossings: piece.clone(),
            flips: [set, complement],
        });
    }
    out
}

/// Minimum number of crossing changes that make the diagram alternating:
/// the smaller flip set per connected piece, summed.
pub fn dealternating_number_diagram(d: &PlanarDiagram) -> usize {
    alternating_assignments(d)
        .iter()
        .map(|p| p.flips[0].len().min(p.flips[1].len()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, BraidWord};
    use crate::parse::parse_pd;

    fn closure(p: usize, letters: Vec<i64>) -> PlanarDiagram {
        braid_closure(&BraidWord::new(p, letters).unwrap())
    }

    #[test]
    fn trefoil_is_alternating() {
        let d = closure(2, vec![1, 1, 1]);
        assert!(is_alternating(&d));
        assert_eq!(dealternating_number_diagram(&d), 0);
        let pieces = alternating_assignments(&d);
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].flips[0], Vec::<usize>::new());
        assert_eq!(pieces[0].flips[1], vec![0, 1, 2]);
    }

    #[test]
    fn crossingless_unknot_is_alternating() {
        let u = PlanarDiagram::unknot();
        assert!(is_alternating(&u));
        assert_eq!(dealternating_number_diagram(&u), 0);
        assert!(alternating_assignments(&u).is_empty());
    }

    #[test]
    fn torus_3_4_diagram_is_not_alternating() {
        let d = closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]);
        assert!(!is_alternating(&d));
        assert!(dealternating_number_diagram(&d) >= 1);
    }

    #[test]
    fn wiggle_unknot_needs_two_changes() {
        let d = closure(2, vec![-1, 1, -1, 1, -1]);
        assert!(!is_alternating(&d));
        assert_eq!(dealternating_number_diagram(&d), 2);
    }

    #[test]
    fn flip_sets_partition_each_piece() {
        for (p, letters) in [
            (2usize, vec![1i64, -1, 1, -1]),
            (3, vec![1, 2, 1, 2]),
            (4, vec![1, -2, 3, -2, 1, 3]),
        ] {
            let d = closure(p, letters);
            for piece in alternating_assignments(&d) {
                let mut union: Vec<usize> =
                    piece.flips[0].iter().chain(&piece.flips[1]).copied().collect();
                union.sort_unstable();
                assert_eq!(union, piece.crossings);
            }
        }
    }

    #[test]
    fn applying_the_small_flip_set_makes_the_diagram_alternating() {
        let d = closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]);
        let pieces = alternating_assignments(&d);
        let mut changed = d.clone();
        for piece in &pieces {
            let flips = if piece.flips[0].len() <= piece.flips[1].len() {
                &piece.flips[0]
            } else {
                &piece.flips[1]
            };
            for &k in flips {
                changed = changed.crossing_change(k).unwrap();
            }
        }
        assert!(is_alternating(&changed));
    }

    #[test]
    fn alternating_iff_dealternating_zero() {
        for (p, letters) in [
            (2usize, vec![1i64, 1]),
            (2, vec![1, -1]),
            (3, vec![1, -2, 1, -2]),
            (3, vec![1, 2, 1, 2, 1, 2]),
        ] {
            let d = closure(p, letters);
            assert_eq!(is_alternating(&d), dealternating_number_diagram(&d) == 0);
        }
    }

    #[test]
    fn published_figure_eight_is_alternating() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert!(is_alternating(&d));
    }
}
