//! Link signatures: Goeritz matrix with the Gordon-Litherland correction
//! term, the torus-link signature recursion, its closed form, the torus
//! s-invariant, and signature/s bounds for modified torus links.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// Goeritz data of a checkerboard-colored diagram: the reduced symmetric
/// form on white regions and the signed count of type-II crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzForm {
    pub matrix: Vec<Vec<i64>>,
    pub correction: i64,
    pub(crate) unreduced: Vec<Vec<i64>>,
}

fn checkerboard(d: &PlanarDiagram, swap_colors: bool) -> Vec<bool> {
    // Two-color the faces; `true` is white. Face 0 is white unless swapped.
    let f = d.face_count();
    let mut color: Vec<Option<bool>> = vec![None; f];
    if f == 0 {
        return Vec::new();
    }
    color[0] = Some(!swap_colors);
    let mut stack = vec![0usize];
    while let Some(face) = stack.pop() {
        let cur = color[face].expect("stacked faces are colored");
        // Neighbors across each boundary edge: the two corners flanking a
        // slot belong to the two faces separated by that edge.
        for (ci, cr) in d.crossings().iter().enumerate() {
            for si in 0..4u8 {
                let f1 = d.face_of_corner(ci, si);
                let f2 = d.face_of_corner(ci, (si + 3) % 4);
                let _ = cr;
                let (a, b) = (f1, f2);
                if a != face && b != face {
                    continue;
                }
                let other = if a == face { b } else { a };
                match color[other] {
                    None => {
                        color[other] = Some(!cur);
                        stack.push(other);
                    }
                    Some(c) => debug_assert_ne!(
                        c, cur,
                        "4-valent planar projections are checkerboard colorable"
                    ),
                }
            }
        }
    }
    color
        .into_iter()
        .map(|c| c.expect("connected diagrams color completely"))
        .collect()
}

fn goeritz_form_shaded(d: &PlanarDiagram, swap_colors: bool) -> Result<GoeritzForm> {
    if !d.is_connected() {
        return Err(Error::Disconnected {
            operation: "goeritz_signature",
        });
    }
    if d.crossing_count() == 0 {
        return Ok(GoeritzForm {
            matrix: Vec::new(),
            correction: 0,
            unreduced: Vec::new(),
        });
    }
    let color = checkerboard(d, swap_colors);
    let whites: Vec<usize> = (0..d.face_count()).filter(|&f| color[f]).collect();
    let white_index: HashMap<usize, usize> = whites
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();

    let m = whites.len();
    let mut unreduced = vec![vec![0i64; m]; m];
    let mut correction = 0i64;
    for (ci, cr) in d.crossings().iter().enumerate() {
        let q0 = d.face_of_corner(ci, 0);
        let q1 = d.face_of_corner(ci, 1);
        let q2 = d.face_of_corner(ci, 2);
        let q3 = d.face_of_corner(ci, 3);
        debug_assert_eq!(color[q0], color[q2]);
        debug_assert_eq!(color[q1], color[q3]);
        debug_assert_ne!(color[q0], color[q1]);
        // eta is +1 when the white regions sit in the corners adjacent to
        // the incoming under-edge, i.e. the B-smoothing channel.
        let (eta, wa, wb) = if color[q0] {
            (1i64, q0, q2)
        } else {
            (-1i64, q1, q3)
        };
        let (i, j) = (white_index[&wa], white_index[&wb]);
        if i != j {
            unreduced[i][j] -= eta;
            unreduced[j][i] -= eta;
            unreduced[i][i] += eta;
            unreduced[j][j] += eta;
        }
        // Type II exactly when the crossing sign matches eta.
        if cr.sign() as i64 == eta {
            correction += eta;
        }
    }

    let matrix: Vec<Vec<i64>> = (1..m)
        .map(|i| (1..m).map(|j| unreduced[i][j]).collect())
        .collect();
    Ok(GoeritzForm {
        matrix,
        correction,
        unreduced,
    })
}

/// Goeritz form with the deterministic shading (face 0 white).
pub fn goeritz_form(d: &PlanarDiagram) -> Result<GoeritzForm> {
    goeritz_form_shaded(d, false)
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
pub fn symmetric_signature(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    let mut i = 0usize;
    while i < n {
        if m[i][i].is_zero() {
            // Prefer a later row with nonzero diagonal.
            if let Some(k) = (i + 1..n).find(|&k| !m[k][k].is_zero()) {
                m.swap(i, k);
                for row in m.iter_mut() {
                    row.swap(i, k);
                }
            } else if let Some((r, c)) = (i..n)
                .flat_map(|r| (r + 1..n).map(move |c| (r, c)))
                .find(|&(r, c)| !m[r][c].is_zero())
            {
                // Hyperbolic block: fold column c into row/col r to create a
                // nonzero diagonal entry, then retry.
                for j in 0..n {
                    let v = m[c][j].clone();
                    m[r][j] += v;
                }
                for row in m.iter_mut() {
                    let v = row[c].clone();
                    row[r] += v;
                }
                if r != i {
                    m.swap(i, r);
                    for row in m.iter_mut() {
                        row.swap(i, r);
                    }
                }
                continue;
            } else {
                break;
            }
        }
        let pivot = m[i][i].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for r in i + 1..n {
            if m[r][i].is_zero() {
                continue;
            }
            let factor = &m[r][i] / &pivot;
            for j in 0..n {
                let v = &m[i][j] * &factor;
                m[r][j] -= v;
            }
            for j in 0..n {
                let v = &m[j][i] * &factor;
                m[j][r] -= v;
            }
        }
        i += 1;
    }
    sig
}

/// Gordon-Litherland signature of a connected diagram: signature of the
/// reduced Goeritz form minus the type-II correction term. The sign
/// convention makes the positive trefoil -2.
pub fn goeritz_signature(d: &PlanarDiagram) -> Result<i64> {
    let form = goeritz_form(d)?;
    Ok(symmetric_signature(&form.matrix) - form.correction)
}

pub(crate) fn goeritz_signature_shaded(d: &PlanarDiagram, swap: bool) -> Result<i64> {
    let form = goeritz_form_shaded(d, swap)?;
    Ok(symmetric_signature(&form.matrix) - form.correction)
}

fn rec_memo(p: u64, q: u64, memo: &mut HashMap<(u64, u64), i64>) -> i64 {
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    if p <= 1 {
        return 0;
    }
    if let Some(&v) = memo.get(&(p, q)) {
        return v;
    }
    let p2 = (p * p) as i64;
    let v = if p == 2 {
        1 - q as i64
    } else if q == 2 * p {
        1 - p2
    } else if q > 2 * p {
        let tail = rec_memo(p, q - 2 * p, memo);
        if p % 2 == 1 {
            tail - p2 + 1
        } else {
            tail - p2
        }
    } else if q == p {
        // Self-referential case of the reflection rule, solved exactly.
        if p % 2 == 1 {
            (1 - p2) / 2
        } else {
            (2 - p2) / 2
        }
    } else {
        let tail = rec_memo(p, 2 * p - q, memo);
        if p % 2 == 1 {
            1 - p2 - tail
        } else {
            2 - p2 - tail
        }
    };
    memo.insert((p, q), v);
    v
}

/// Torus link signature by exact application of the recursion rules.
pub fn torus_signature_recursive(p: u64, q: u64) -> i64 {
    let mut memo = HashMap::new();
    rec_memo(p, q, &mut memo)
}

/// Closed-form torus signature for `q = n*p + r` with `0 < r < p`, split by
/// the parities of `p` and `n`. Agrees with the recursion everywhere.
pub fn torus_signature_closed(p: u64, n: u64, r: u64) -> Result<i64> {
    if r == 0 || r >= p {
        return Err(Error::TorusRemainderRange { p, r });
    }
    let p2 = (p * p) as i64;
    let n = n as i64;
    let v = match (p % 2 == 1, n % 2 == 0) {
        (true, true) => torus_signature_recursive(p, r) - n * (p2 - 1) / 2,
        (false, true) => torus_signature_recursive(p, r) - n * p2 / 2,
        (true, false) => -torus_signature_recursive(p, p - r) - (n + 1) * (p2 - 1) / 2,
        (false, false) => -torus_signature_recursive(p, p - r) - (n + 1) * p2 / 2 + 2,
    };
    Ok(v)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `s(T(p,q)) = pq - p - q + 1` for coprime positive p, q.
pub fn torus_s_invariant(p: u64, q: u64) -> Result<i64> {
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok((p as i64) * (q as i64) - p as i64 - q as i64 + 1)
}

/// A closed rational interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatInterval {
    pub lower: Rational64,
    pub upper: Rational64,
}

impl RatInterval {
    pub fn contains(&self, v: Rational64) -> bool {
        self.lower <= v && v <= self.upper
    }
}

/// Signature and s-invariant intervals for the torus knot `T(p,q)` and its
/// modified companion, for coprime `p, q >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModifiedTorusBounds {
    pub sigma_torus: RatInterval,
    pub sigma_modified: RatInterval,
    pub s_modified: RatInterval,
}

pub fn modified_torus_bounds(p: u64, q: u64) -> Result<ModifiedTorusBounds> {
    if p < 3 || q < 3 {
        return Err(Error::FamilyParameter {
            reason: format!("modified torus bounds need p,q >= 3 (got {p},{q})"),
        });
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let (p, q) = (p as i64, q as i64);
    let r = Rational64::from_integer;
    let lower_sigma = r(-(p - 1) * (p - 2)) - Rational64::new(p * q, 2);
    let sigma_torus = RatInterval {
        lower: lower_sigma,
        upper: r((p - 1) * (p - 2)) - Rational64::new((p - 1) * q, 2),
    };
    let sigma_modified = RatInterval {
        lower: lower_sigma,
        upper: r((p - 1) * (p - 1)) - Rational64::new((p - 1) * q, 2),
    };
    let s_modified = RatInterval {
        lower: r(p * q - 2 * p - q + 2),
        upper: r(p * q - p - q + 1),
    };
    Ok(ModifiedTorusBounds {
        sigma_torus,
        sigma_modified,
        s_modified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, BraidWord};
    use crate::parse::parse_pd;

    fn closure(p: usize, letters: Vec<i64>) -> PlanarDiagram {
        braid_closure(&BraidWord::new(p, letters).unwrap())
    }

    fn torus_closure(p: u64, q: u64) -> PlanarDiagram {
        let letters: Vec<i64> = (0..q).flat_map(|_| (1..p as i64)).collect();
        closure(p as usize, letters)
    }

    #[test]
    fn positive_trefoil_signature_is_minus_two() {
        assert_eq!(goeritz_signature(&closure(2, vec![1, 1, 1])).unwrap(), -2);
    }

    #[test]
    fn mirror_trefoil_signature_is_plus_two() {
        assert_eq!(goeritz_signature(&closure(2, vec![-1, -1, -1])).unwrap(), 2);
        let published = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(goeritz_signature(&published).unwrap(), 2);
    }

    #[test]
    fn figure_eight_signature_is_zero() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(goeritz_signature(&d).unwrap(), 0);
    }

    #[test]
    fn unknot_diagrams_have_zero_signature() {
        assert_eq!(goeritz_signature(&PlanarDiagram::unknot()).unwrap(), 0);
        assert_eq!(goeritz_signature(&parse_pd("X(1,2,2,1)").unwrap()).unwrap(), 0);
        assert_eq!(
            goeritz_signature(&closure(2, vec![-1, 1, -1, 1, -1])).unwrap(),
            0
        );
    }

    #[test]
    fn both_shadings_agree() {
        for d in [
            closure(2, vec![1, 1, 1]),
            closure(2, vec![1, 1]),
            closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
            closure(3, vec![1, 1, 1, 2]),
        ] {
            assert_eq!(
                goeritz_signature_shaded(&d, false).unwrap(),
                goeritz_signature_shaded(&d, true).unwrap(),
                "shading choice must not matter for {}",
                d.pd_string()
            );
        }
    }

    #[test]
    fn signature_is_invariant_on_trefoil_pair() {
        let a = closure(2, vec![1, 1, 1]);
        let b = closure(3, vec![1, 1, 1, 2]);
        assert_eq!(
            goeritz_signature(&a).unwrap(),
            goeritz_signature(&b).unwrap()
        );
    }

    #[test]
    fn unreduced_rows_sum_to_zero() {
        for d in [
            closure(2, vec![1, 1, 1]),
            closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
        ] {
            let form = goeritz_form(&d).unwrap();
            for row in &form.unreduced {
                assert_eq!(row.iter().sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn recursion_small_values() {
        assert_eq!(torus_signature_recursive(2, 3), -2);
        assert_eq!(torus_signature_recursive(2, 7), -6);
        assert_eq!(torus_signature_recursive(3, 4), -6);
        assert_eq!(torus_signature_recursive(3, 6), 1 - 9);
        assert_eq!(torus_signature_recursive(4, 8), 1 - 16);
        assert_eq!(torus_signature_recursive(5, 1), 0);
        assert_eq!(torus_signature_recursive(4, 3), torus_signature_recursive(3, 4));
    }

    #[test]
    fn recursion_matches_goeritz_on_torus_closures() {
        for p in 2..=6u64 {
            for q in p..=7u64 {
                let d = torus_closure(p, q);
                assert_eq!(
                    goeritz_signature(&d).unwrap(),
                    torus_signature_recursive(p, q),
                    "T({p},{q})"
                );
            }
        }
    }

    #[test]
    fn closed_form_matches_recursion() {
        for p in 2..=8u64 {
            for n in 0..=4u64 {
                for r in 1..p {
                    let q = n * p + r;
                    assert_eq!(
                        torus_signature_closed(p, n, r).unwrap(),
                        torus_signature_recursive(p, q),
                        "p={p} n={n} r={r}"
                    );
                }
            }
        }
        assert!(torus_signature_closed(3, 1, 0).is_err());
        assert!(torus_signature_closed(3, 1, 3).is_err());
    }

    #[test]
    fn closed_form_spec_values() {
        assert_eq!(torus_signature_closed(3, 0, 2).unwrap(), -2);
        assert_eq!(torus_signature_closed(3, 2, 1).unwrap(), -8);
        assert_eq!(torus_signature_closed(4, 1, 3).unwrap(), -14);
    }

    #[test]
    fn s_invariant_formula() {
        assert_eq!(torus_s_invariant(3, 4).unwrap(), 6);
        assert_eq!(torus_s_invariant(2, 3).unwrap(), 2);
        assert_eq!(torus_s_invariant(5, 1).unwrap(), 0);
        assert!(torus_s_invariant(4, 6).is_err());
    }

    #[test]
    fn modified_bounds_examples() {
        let b47 = modified_torus_bounds(4, 7).unwrap();
        assert_eq!(b47.s_modified.lower, Rational64::from_integer(15));
        assert_eq!(b47.s_modified.upper, Rational64::from_integer(18));
        assert_eq!(b47.sigma_modified.lower, Rational64::from_integer(-20));
        // (p-1)^2 - (p-1)q/2 = 9 - 21/2
        assert_eq!(b47.sigma_modified.upper, Rational64::new(-3, 2));
        let b34 = modified_torus_bounds(3, 4).unwrap();
        assert_eq!(b34.sigma_torus.lower, Rational64::from_integer(-8));
        assert_eq!(b34.sigma_torus.upper, Rational64::from_integer(-2));
        assert!(b34
            .sigma_torus
            .contains(Rational64::from_integer(torus_signature_recursive(3, 4))));
        assert!(modified_torus_bounds(4, 6).is_err());
        assert!(modified_torus_bounds(2, 5).is_err());
    }

    #[test]
    fn positive_braid_closures_have_negative_signature() {
        for (p, letters) in [
            (2usize, vec![1i64, 1, 1]),
            (2, vec![1, 1, 1, 1, 1]),
            (3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            (4, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]),
        ] {
            let d = closure(p, letters);
            assert_eq!(d.component_count(), 1);
            assert!(goeritz_signature(&d).unwrap() < 0);
        }
    }

    #[test]
    fn positive_to_negative_crossing_change_obeys_the_signature_step() {
        let samples = [
            closure(2, vec![1, 1, 1]),
            closure(2, vec![1, 1, 1, 1, 1]),
            closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
        ];
        for d in &samples {
            let sig_plus = goeritz_signature(d).unwrap();
            for k in 0..d.crossing_count() {
                if d.crossings()[k].sign() != 1 {
                    continue;
                }
                let minus = d.crossing_change(k).unwrap();
                if minus.component_count() != 1 {
                    continue;
                }
                let sig_minus = goeritz_signature(&minus).unwrap();
                assert!(sig_minus - 2 <= sig_plus && sig_plus <= sig_minus);
            }
        }
    }
}
