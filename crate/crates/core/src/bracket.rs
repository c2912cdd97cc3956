//! Kauffman bracket state sum, the Jones polynomial, and its span.

use num_rational::Rational64;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::{LaurentPolynomial, Var};

/// Default crossing cap for the 2^c state enumeration.
pub const DEFAULT_BRACKET_CAP: usize = 20;

struct SliceUnionFind {
    parent: Vec<u32>,
}

impl SliceUnionFind {
    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            self.parent[x as usize] = self.parent[self.parent[x as usize] as usize];
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra as usize] = rb;
            true
        }
    }
}

/// Histogram of states by (number of B choices, loop count). The bracket and
/// every state-sum invariant of the diagram is a function of this table.
fn state_histogram(d: &PlanarDiagram) -> Vec<Vec<u64>> {
    let c = d.crossing_count();
    let edges = d.edge_count();
    let max_loops = edges + d.extra_loops() + 1;
    let mut hist = vec![vec![0u64; max_loops + 1]; c + 1];
    let mut uf = SliceUnionFind {
        parent: vec![0; edges],
    };
    // Cache the two possible unions per crossing.
    let joins: Vec<[[(u32, u32); 2]; 2]> = d
        .crossings()
        .iter()
        .map(|cr| {
            let e = |i: usize| cr.edges[i] as u32;
            [
                [(e(0), e(1)), (e(2), e(3))],
                [(e(0), e(3)), (e(1), e(2))],
            ]
        })
        .collect();
    for state in 0u64..(1u64 << c) {
        uf.reset();
        let mut merges = 0usize;
        for (ci, join) in joins.iter().enumerate() {
            let pick = (state >> ci & 1) as usize;
            for &(a, b) in &join[pick] {
                if uf.union(a, b) {
                    merges += 1;
                }
            }
        }
        let loops = edges - merges + d.extra_loops();
        let b_count = state.count_ones() as usize;
        hist[b_count][loops] += 1;
    }
    if c == 0 {
        hist[0] = vec![0u64; max_loops + 1];
        hist[0][d.extra_loops()] = 1;
    }
    hist
}

/// The bracket polynomial: sum over all 2^c states of
/// `A^(a-b) * (-A^2 - A^(-2))^(loops - 1)`.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    kauffman_bracket_capped(d, DEFAULT_BRACKET_CAP)
}

pub fn kauffman_bracket_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPolynomial> {
    let c = d.crossing_count();
    if c > cap {
        return Err(Error::CapExceeded {
            operation: "kauffman_bracket",
            crossings: c,
            cap,
        });
    }
    let hist = state_histogram(d);
    let delta = LaurentPolynomial::from_int_terms(Var::A, &[(2, -1), (-2, -1)]);
    let mut delta_pow = LaurentPolynomial::one(Var::A);
    let mut powers: Vec<LaurentPolynomial> = Vec::new();
    let max_loops = hist[0].len();
    for _ in 0..max_loops {
        powers.push(delta_pow.clone());
        delta_pow = delta_pow.mul(&delta);
    }
    let mut out = LaurentPolynomial::zero(Var::A);
    for (b_count, row) in hist.iter().enumerate() {
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            debug_assert!(loops >= 1);
            let a_exp = c as i64 - 2 * b_count as i64;
            let term = powers[loops - 1].scale(count as i64);
            for (e, coeff) in term.terms() {
                out.add_term(e + 4 * a_exp, coeff);
            }
        }
    }
    Ok(out)
}

/// `V(t) = (-A)^(-3w) <D>` with `t = A^(-4)`.
pub fn jones_polynomial(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    jones_polynomial_capped(d, DEFAULT_BRACKET_CAP)
}

pub fn jones_polynomial_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket_capped(d, cap)?;
    let w = d.writhe();
    let sign = if (3 * w).rem_euclid(2) == 0 { 1 } else { -1 };
    let normalizer = LaurentPolynomial::monomial(Var::A, sign, 4 * (-3 * w));
    Ok(normalizer.mul(&bracket).bracket_to_jones())
}

/// Max degree minus min degree of the Jones polynomial.
pub fn jones_span(d: &PlanarDiagram) -> Result<Rational64> {
    jones_span_capped(d, DEFAULT_BRACKET_CAP)
}

pub fn jones_span_capped(d: &PlanarDiagram, cap: usize) -> Result<Rational64> {
    let v = jones_polynomial_capped(d, cap)?;
    v.span().ok_or(Error::EmptyDimensions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_closure, BraidWord};
    use crate::diagram::{Resolution, StateAssignment};
    use crate::parse::parse_pd;
    use std::collections::BTreeMap;

    fn closure(p: usize, letters: Vec<i64>) -> PlanarDiagram {
        braid_closure(&BraidWord::new(p, letters).unwrap())
    }

    /// Independent bracket oracle: explicit per-state evaluation with loop
    /// counting by cycle-walking the smoothing permutation instead of
    /// union-find, and polynomial arithmetic on raw maps.
    fn bracket_oracle(d: &PlanarDiagram) -> BTreeMap<i64, i64> {
        let c = d.crossing_count();
        let mut total: BTreeMap<i64, i64> = BTreeMap::new();
        for state in 0u64..(1u64 << c) {
            let assignment = StateAssignment::from_bits(state, c);
            // Walk loops: each edge end pairs with another edge end through
            // the smoothing arcs.
            let mut link: BTreeMap<(usize, u8), (usize, u8)> = BTreeMap::new();
            for (ci, res) in assignment.0.iter().enumerate() {
                for (a, b) in res.joined_slots() {
                    link.insert((ci, a), (ci, b));
                    link.insert((ci, b), (ci, a));
                }
            }
            // Edge ends: occurrences of each edge.
            let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); d.edge_count()];
            for (ci, cr) in d.crossings().iter().enumerate() {
                for (si, &e) in cr.edges.iter().enumerate() {
                    occ[e].push((ci, si as u8));
                }
            }
            let mut seen: std::collections::BTreeSet<(usize, u8)> = Default::default();
            let mut loops = d.extra_loops() as i64;
            for ci in 0..c {
                for si in 0..4u8 {
                    if seen.contains(&(ci, si)) {
                        continue;
                    }
                    loops += 1;
                    let (mut cc, mut cs) = (ci, si);
                    loop {
                        seen.insert((cc, cs));
                        let (jc, js) = link[&(cc, cs)];
                        seen.insert((jc, js));
                        let e = d.crossings()[jc].edges[js as usize];
                        let ends = &occ[e];
                        let (nc, ns) = if ends[0] == (jc, js) { ends[1] } else { ends[0] };
                        cc = nc;
                        cs = ns;
                        if (cc, cs) == (ci, si) {
                            break;
                        }
                    }
                }
            }
            if c == 0 {
                loops = d.extra_loops() as i64;
            }
            let b_count = assignment
                .0
                .iter()
                .filter(|r| matches!(r, Resolution::B))
                .count() as i64;
            let a_exp = c as i64 - 2 * b_count;
            // delta^(loops-1) via repeated map multiplication.
            let mut poly: BTreeMap<i64, i64> = BTreeMap::new();
            poly.insert(a_exp, 1);
            for _ in 0..(loops - 1) {
                let mut next: BTreeMap<i64, i64> = BTreeMap::new();
                for (&e, &co) in &poly {
                    *next.entry(e + 2).or_insert(0) += -co;
                    *next.entry(e - 2).or_insert(0) += -co;
                }
                next.retain(|_, v| *v != 0);
                poly = next;
            }
            for (e, co) in poly {
                let entry = total.entry(e).or_insert(0);
                *entry += co;
            }
        }
        total.retain(|_, v| *v != 0);
        total
    }

    fn assert_matches_oracle(d: &PlanarDiagram) {
        let got = kauffman_bracket(d).unwrap();
        let want = bracket_oracle(d);
        let got_map: BTreeMap<i64, i64> = got
            .terms()
            .map(|(e4, c)| {
                assert_eq!(e4 % 4, 0);
                (e4 / 4, c)
            })
            .collect();
        assert_eq!(got_map, want);
    }

    #[test]
    fn unknot_bracket_is_one() {
        let u = PlanarDiagram::unknot();
        assert_eq!(
            kauffman_bracket(&u).unwrap(),
            LaurentPolynomial::one(Var::A)
        );
        assert_eq!(
            jones_polynomial(&u).unwrap(),
            LaurentPolynomial::one(Var::T)
        );
    }

    #[test]
    fn two_component_unlink_bracket_is_delta() {
        let u = PlanarDiagram::unlink(2);
        assert_eq!(
            kauffman_bracket(&u).unwrap(),
            LaurentPolynomial::from_int_terms(Var::A, &[(2, -1), (-2, -1)])
        );
    }

    #[test]
    fn trefoil_bracket_matches_the_state_enumeration_oracle() {
        let d = closure(2, vec![1, 1, 1]);
        assert_matches_oracle(&d);
        // Frozen from the oracle: -A^5 - A^(-3) + A^(-7) for the positive trefoil.
        assert_eq!(
            kauffman_bracket(&d).unwrap(),
            LaurentPolynomial::from_int_terms(Var::A, &[(5, -1), (-3, -1), (-7, 1)])
        );
    }

    #[test]
    fn positive_trefoil_jones_is_the_torus_formula() {
        let d = closure(2, vec![1, 1, 1]);
        let v = jones_polynomial(&d).unwrap();
        assert_eq!(v.to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn oracle_agreement_on_small_corpus() {
        let samples: Vec<PlanarDiagram> = vec![
            closure(2, vec![1, 1]),
            closure(2, vec![-1, -1]),
            closure(2, vec![1, -1]),
            closure(2, vec![1, 1, 1, 1, 1]),
            closure(3, vec![1, -2, 1, -2]),
            closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            closure(2, vec![-1, 1, -1, 1, -1]),
            parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap(),
            parse_pd("X(1,2,2,1)").unwrap(),
        ];
        for d in &samples {
            assert_matches_oracle(d);
        }
    }

    #[test]
    fn jones_distinguishes_trefoil_from_unknot() {
        let t = jones_polynomial(&closure(2, vec![1, 1, 1])).unwrap();
        let u = jones_polynomial(&PlanarDiagram::unknot()).unwrap();
        assert_ne!(t, u);
    }

    #[test]
    fn kinked_unknots_normalize_to_one() {
        for d in [
            parse_pd("X(1,2,2,1)").unwrap(),
            closure(2, vec![-1, 1, -1, 1, -1]),
            closure(3, vec![1, -2]),
        ] {
            assert_eq!(
                jones_polynomial(&d).unwrap(),
                LaurentPolynomial::one(Var::T),
                "diagram {} should normalize to the unknot",
                d.pd_string()
            );
        }
    }

    #[test]
    fn jones_span_is_a_diagram_pair_invariant() {
        // Same knot, different diagrams (and mirrors): span agrees.
        let t1 = closure(2, vec![1, 1, 1]);
        let t2 = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let t3 = closure(3, vec![1, 1, 1, 2]);
        assert_eq!(jones_span(&t1).unwrap(), jones_span(&t2).unwrap());
        assert_eq!(jones_span(&t1).unwrap(), jones_span(&t3).unwrap());
        let f1 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let f2 = closure(3, vec![1, -2, 1, -2]);
        assert_eq!(jones_polynomial(&f1).unwrap(), jones_polynomial(&f2).unwrap());
    }

    #[test]
    fn span_is_bounded_by_crossing_number_with_equality_when_alternating() {
        use crate::alternating::is_alternating;
        for d in [
            closure(2, vec![1, 1, 1]),
            closure(2, vec![1, 1, 1, 1, 1]),
            closure(3, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
            closure(2, vec![1, 1]),
        ] {
            let span = jones_span(&d).unwrap();
            let c = Rational64::from_integer(d.crossing_count() as i64);
            assert!(span <= c);
            // Reduced alternating diagrams realize the bound.
            if is_alternating(&d) && d.crossing_count() >= 3 {
                assert_eq!(span, c);
            }
        }
    }

    #[test]
    fn cap_exceeded_is_a_named_error() {
        let d = closure(2, vec![1, 1, 1]);
        assert!(matches!(
            kauffman_bracket_capped(&d, 2),
            Err(Error::CapExceeded {
                operation: "kauffman_bracket",
                crossings: 3,
                cap: 2
            })
        ));
    }
}
