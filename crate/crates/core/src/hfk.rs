//! Closed-form knot Floer dimensions for iterated Whitehead doubles of the
//! figure-eight knot, and the diagonal width of an HFK dimension map.

use crate::error::{Error, Result};
use crate::khovanov::{BigradedDimensions, GradingScheme};

fn binomial(n: u32, m: u32) -> u64 {
    if m > n {
        return 0;
    }
    let mut out = 1u64;
    for i in 0..m as u64 {
        out = out * (n as u64 - i) / (i + 1);
    }
    out
}

/// Hat-version knot Floer dimensions of the n-th iterated untwisted positive
/// Whitehead double of the figure-eight knot, keyed by (Maslov m, Alexander s):
/// at s = 1, dimension `2^n * C(n,m)` in grading `1 - m`; at s = 0, one
/// generator in grading 0 plus `2^(n+1) * C(n,m)` in grading `-m`; at s = -1,
/// `2^n * C(n,m)` in grading `-1 - m`.
pub fn hfk_whitehead_dims(n: u32) -> BigradedDimensions {
    let mut out = BigradedDimensions::new(GradingScheme::Hfk, 1);
    let side = 1u64 << n;
    out.add((0, 0), 1);
    for m in 0..=n {
        let b = binomial(n, m);
        out.add((1 - m as i64, 1), side * b);
        out.add((-(m as i64), 0), 2 * side * b);
        out.add((-1 - m as i64, -1), side * b);
    }
    out
}

/// HFK width: diagonal spread plus one, with the diagonal `s - m`.
pub fn hfk_width(dims: &BigradedDimensions) -> Result<u32> {
    debug_assert_eq!(dims.scheme, GradingScheme::Hfk);
    let (lo, hi) = dims.delta_range().ok_or(Error::EmptyDimensions)?;
    Ok((hi - lo + 1) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight_case_is_thin() {
        let dims = hfk_whitehead_dims(0);
        let got: Vec<((i64, i64), u64)> = dims.dims().collect();
        // s=1: one generator at m=1; s=0: 1 + 2 at m=0; s=-1: one at m=-1.
        assert_eq!(got, vec![((-1, -1), 1), ((0, 0), 3), ((1, 1), 1)]);
        assert_eq!(hfk_width(&dims).unwrap(), 1);
    }

    #[test]
    fn first_double_has_total_dimension_seventeen() {
        let dims = hfk_whitehead_dims(1);
        assert_eq!(dims.total_dimension(), 17);
        assert_eq!(hfk_width(&dims).unwrap(), 2);
    }

    #[test]
    fn width_is_n_plus_one() {
        for n in 0..=6u32 {
            assert_eq!(hfk_width(&hfk_whitehead_dims(n)).unwrap(), n + 1);
        }
    }

    #[test]
    fn second_double_spans_three_diagonals_at_alexander_one() {
        let dims = hfk_whitehead_dims(2);
        let deltas: Vec<i64> = dims
            .dims()
            .filter(|&((_, s), _)| s == 1)
            .map(|(g, _)| dims.delta(g))
            .collect();
        assert_eq!(deltas, vec![0, 1, 2]);
    }

    #[test]
    fn single_grading_map_has_width_one() {
        let mut dims = BigradedDimensions::new(GradingScheme::Hfk, 1);
        dims.add((3, 2), 5);
        assert_eq!(hfk_width(&dims).unwrap(), 1);
        let empty = BigradedDimensions::new(GradingScheme::Hfk, 1);
        assert!(hfk_width(&empty).is_err());
    }
}
