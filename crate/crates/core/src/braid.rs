//! Braid words and their closures.

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// A word in the braid group on `strands` strands. Letter `i > 0` is the
/// generator crossing strands `i` and `i+1` with the right strand on top;
/// `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::BraidParameter {
                reason: format!("strand count {strands} < 2"),
            });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::BraidParameter {
                    reason: format!("letter {l} outside 0 < |i| < {strands}"),
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// The permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of cycles of the strand permutation, which is the component
    /// count of the closure.
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }
}

/// Close a braid word into a planar diagram: one crossing per letter, with
/// strands untouched by any letter contributing crossingless loops.
pub fn braid_closure(word: &BraidWord) -> PlanarDiagram {
    let p = word.strands();
    let mut cur: Vec<usize> = (0..p).collect();
    let mut next_id = p;
    let mut tuples: Vec<[usize; 4]> = Vec::with_capacity(word.letters().len());
    for &letter in word.letters() {
        let i = letter.unsigned_abs() as usize - 1;
        let (u, v) = (cur[i], cur[i + 1]);
        let l = next_id;
        let r = next_id + 1;
        next_id += 2;
        if letter > 0 {
            // Right strand passes over: the left strand enters under.
            tuples.push([u, l, r, v]);
        } else {
            tuples.push([v, u, l, r]);
        }
        cur[i] = l;
        cur[i + 1] = r;
    }
    // Closure identifies the bottom of each strand with its top.
    let mut extra_loops = 0;
    let mut rename: Vec<usize> = (0..next_id).collect();
    for j in 0..p {
        if cur[j] == j {
            extra_loops += 1;
        } else {
            rename[cur[j]] = j;
        }
    }
    let mut renamed: Vec<[usize; 4]> = tuples
        .iter()
        .map(|t| [rename[t[0]], rename[t[1]], rename[t[2]], rename[t[3]]])
        .collect();
    let dense = crate::diagram::remap_dense(&mut renamed);
    let n = dense.len();
    PlanarDiagram::build(dense, None, extra_loops, &vec![true; n])
        .expect("braid closures are always valid diagrams")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_closes_to_unlink() {
        let w = BraidWord::new(3, vec![]).unwrap();
        let d = braid_closure(&w);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 3);
    }

    #[test]
    fn trefoil_closure_counts() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(w.cycle_count(), 1);
        let d = braid_closure(&w);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn torus_3_4_word_closes_to_a_knot() {
        let w = BraidWord::new(3, vec![1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
        let d = braid_closure(&w);
        assert_eq!(d.crossing_count(), 8);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn component_count_matches_cycle_count() {
        for (p, letters) in [
            (2usize, vec![1i64, 1]),
            (3, vec![1, 2]),
            (4, vec![1, 3]),
            (4, vec![1, 2, 3, 1, -2, 3]),
            (5, vec![1, 2, 3, 4]),
            (3, vec![2, 2]),
        ] {
            let w = BraidWord::new(p, letters).unwrap();
            let d = braid_closure(&w);
            assert_eq!(d.component_count(), w.cycle_count());
        }
    }

    #[test]
    fn rejects_out_of_band_letters() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_err());
    }
}
