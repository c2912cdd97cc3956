//! Generators for the studied link families (torus braids, modified torus
//! braids, pretzels, Whitehead doubles) and the table of published invariant
//! values with their citations.

use num_rational::Rational64;

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::signature::{modified_torus_bounds, torus_signature_recursive};

/// `(sigma_1 ... sigma_{p-1})^q`, whose closure is the (p,q) torus link.
pub fn torus_braid(p: u64, q: u64) -> Result<BraidWord> {
    if p < 2 || q < 1 {
        return Err(Error::FamilyParameter {
            reason: format!("torus braid needs p >= 2, q >= 1 (got {p},{q})"),
        });
    }
    let letters: Vec<i64> = (0..q).flat_map(|_| 1..p as i64).collect();
    BraidWord::new(p as usize, letters)
}

/// `Delta_p^(q-1) * (sigma_1 sigma_2^-1 sigma_3 ...)`: the modified torus
/// braid, differing from the torus braid in `floor((p-1)/2)` letter signs.
pub fn modified_torus_braid(p: u64, q: u64) -> Result<BraidWord> {
    if p < 3 || q < 3 {
        return Err(Error::FamilyParameter {
            reason: format!("modified torus braid needs p,q >= 3 (got {p},{q})"),
        });
    }
    let mut letters: Vec<i64> = (0..q - 1).flat_map(|_| 1..p as i64).collect();
    for i in 1..p as i64 {
        letters.push(if i % 2 == 1 { i } else { -i });
    }
    BraidWord::new(p as usize, letters)
}

/// True when the toroidal-embedding hypotheses hold (p even >= 4, q odd >= 3,
/// q not 1 mod p) and the parity pattern verifies on the generated word: the
/// torus block's strand permutation preserves label parity, and in the
/// alternating block odd-labeled strands meet an under-crossing first while
/// the outgoing pattern is reversed.
pub fn toroidal_alternating_check(p: u64, q: u64) -> bool {
    if p < 4 || p % 2 != 0 || q < 3 || q % 2 != 1 || q % p == 1 {
        return false;
    }
    // Parity preservation by Delta_p^(q-1).
    let torus_part = torus_braid(p, q - 1).expect("parameters validated");
    let perm = torus_part.permutation();
    if !perm.iter().enumerate().all(|(i, &j)| (i + j) % 2 == 0) {
        return false;
    }
    // First/last encounters inside the alternating block.
    let strands = p as usize;
    let mut occupant: Vec<usize> = (0..strands).collect();
    let mut first: Vec<Option<bool>> = vec![None; strands]; // true = under
    let mut last: Vec<Option<bool>> = vec![None; strands];
    for i in 1..p as i64 {
        let positive = i % 2 == 1;
        let left = (i - 1) as usize;
        let (under_pos, over_pos) = if positive {
            (left, left + 1)
        } else {
            (left + 1, left)
        };
        for (pos, under) in [(under_pos, true), (over_pos, false)] {
            let s = occupant[pos];
            first[s].get_or_insert(under);
            last[s] = Some(under);
        }
        occupant.swap(left, left + 1);
    }
    for s in 0..strands {
        // 1-based label parity: odd labels go under first.
        let odd = s % 2 == 0;
        if first[s] != Some(odd) {
            return false;
        }
    }
    let mut final_pos = vec![0usize; strands];
    for (pos, &s) in occupant.iter().enumerate() {
        final_pos[s] = pos;
    }
    for s in 0..strands {
        let odd_out = final_pos[s] % 2 == 0;
        // Odd outgoing labels most recently passed over.
        if last[s] != Some(!odd_out) {
            return false;
        }
    }
    true
}

/// Standard pretzel diagram P(k_1, ..., k_m): vertical twist regions joined
/// along the top and bottom. Positive entries twist one way, negative the
/// other; a pretzel with all entries of one sign is alternating.
pub fn pretzel(ks: &[i64]) -> Result<PlanarDiagram> {
    if ks.is_empty() || ks.iter().any(|&k| k == 0) {
        return Err(Error::FamilyParameter {
            reason: "pretzel parameters must be nonzero".to_string(),
        });
    }
    let m = ks.len();
    // Ids: top arcs 0..m, bottom arcs m..2m, then region internals.
    let top = |i: usize| i % m;
    let bot = |i: usize| m + i % m;
    let mut next = 2 * m;
    let mut tuples: Vec<[usize; 4]> = Vec::new();
    for (i, &k) in ks.iter().enumerate() {
        let height = k.unsigned_abs() as usize;
        // Pair of edge ids at each level of the region, bottom to top.
        let mut levels: Vec<(usize, usize)> = Vec::with_capacity(height + 1);
        levels.push((bot(i + m - 1), bot(i)));
        for _ in 1..height {
            levels.push((next, next + 1));
            next += 2;
        }
        levels.push((top(i + m - 1), top(i)));
        for t in 0..height {
            let (bl, br) = levels[t];
            let (tl, tr) = levels[t + 1];
            if k > 0 {
                tuples.push([bl, br, tr, tl]);
            } else {
                tuples.push([br, tr, tl, bl]);
            }
        }
    }
    let dense = crate::diagram::remap_dense(&mut tuples);
    let n = dense.len();
    PlanarDiagram::build(dense, None, 0, &vec![false; n])
}

/// Positive t-twisted Whitehead double: the antiparallel blackboard 2-cable
/// of a knot diagram with `t - writhe` compensating full twists and a
/// positive clasp. Crossing count is `4c + 2 + 2|t - writhe|`.
pub fn whitehead_double(d: &PlanarDiagram, t: i64) -> Result<PlanarDiagram> {
    if d.component_count() != 1 {
        return Err(Error::MultiComponentDouble {
            components: d.component_count(),
        });
    }
    let c = d.crossing_count();
    let edges = d.edge_count();
    let twists = t - d.writhe();

    // Virtual id space: cable copies 2e (left of travel) and 2e+1, then four
    // internal edges per cabled crossing, then the insert.
    let mut next = 2 * edges + 4 * c;
    let mut fresh = || {
        let id = next;
        next += 1;
        id
    };

    let mut tuples: Vec<[usize; 4]> = Vec::new();
    for (ci, cr) in d.crossings().iter().enumerate() {
        let [a, b, cc, dd] = cr.edges;
        let (l, r) = (|e: usize| 2 * e, |e: usize| 2 * e + 1);
        let v_w = 2 * edges + 4 * ci;
        let v_e = v_w + 1;
        let h_s = v_w + 2;
        let h_n = v_w + 3;
        let positive = cr.sign() > 0;
        // Rows S/N hold the over-strand copies; which copy is in which row
        // depends on the over-strand direction.
        let (west_s, west_n) = if positive {
            (r(dd), l(dd))
        } else {
            (l(dd), r(dd))
        };
        let (east_s, east_n) = if positive {
            (r(b), l(b))
        } else {
            (l(b), r(b))
        };
        // Tuples are [S, E, N, W] with the vertical under-copies on (S, N).
        tuples.push([l(a), h_s, v_w, west_s]); // mini (W,S)
        tuples.push([r(a), east_s, v_e, h_s]); // mini (E,S)
        tuples.push([v_w, h_n, l(cc), west_n]); // mini (W,N)
        tuples.push([v_e, east_n, r(cc), h_n]); // mini (E,N)
    }

    // Cut the cable over edge 0 (when the companion has crossings) and give
    // the departure side fresh ids at the consumed ends of the copies.
    let (a_l, a_r);
    let (d_l, d_r);
    if c > 0 {
        let e_star = 0usize;
        a_l = 2 * e_star;
        a_r = 2 * e_star + 1;
        d_l = fresh();
        d_r = fresh();
        let (ci, si) = d.in_slot(e_star);
        let sign = d.crossings()[ci].sign();
        let mini = |kind: usize| 4 * ci + kind;
        // (mini tuple index, slot) of the consumed end per copy.
        let (left_at, right_at) = match (si, sign > 0) {
            (0, _) => ((mini(0), 0), (mini(1), 0)),
            (3, true) => ((mini(2), 3), (mini(0), 3)),
            (1, false) => ((mini(1), 1), (mini(3), 1)),
            _ => unreachable!("edges arrive under at slot 0 or over at the in-slot"),
        };
        tuples[left_at.0][left_at.1] = d_l;
        tuples[right_at.0][right_at.1] = d_r;
    } else {
        // Doubling the crossingless unknot: the cable arcs are single edges
        // from the insert top back around to its bottom.
        a_l = 0;
        a_r = 1;
        d_l = a_l;
        d_r = a_r;
    }

    // Twist stack on the arrival pair.
    let m = 2 * twists.unsigned_abs() as usize;
    let mut lambda = a_l;
    let mut rho = a_r;
    for step in 1..=m {
        let (nl, nr) = (fresh(), fresh());
        let up_enters_left = step % 2 == 1;
        if twists > 0 {
            // Positive twists: the downward leg passes over.
            if up_enters_left {
                tuples.push([lambda, rho, nr, nl]);
            } else {
                tuples.push([rho, nr, nl, lambda]);
            }
        } else if up_enters_left {
            tuples.push([nl, lambda, rho, nr]);
        } else {
            tuples.push([nr, nl, lambda, rho]);
        }
        lambda = nl;
        rho = nr;
    }

    // Positive clasp: the arrival pair turns around through the departure
    // pair's hook. Bar over on the left crossing, hook over on the right.
    let beta = fresh();
    let gamma = fresh();
    tuples.push([gamma, beta, d_l, lambda]);
    tuples.push([beta, gamma, rho, d_r]);

    let dense = crate::diagram::remap_dense(&mut tuples);
    let n = dense.len();
    let out = PlanarDiagram::build(dense, None, 0, &vec![false; n])?;
    debug_assert_eq!(out.crossing_count(), 4 * c + 2 + m);
    Ok(out)
}

/// The link families with published invariant values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// (3,q) torus knots, q > 3 coprime to 3.
    Torus3 { q: u64 },
    /// Modified torus knots, p,q >= 3 coprime.
    ModifiedTorus { p: u64, q: u64 },
    /// Iterated untwisted positive Whitehead doubles of the figure-eight.
    Whitehead { n: u32 },
}

/// A cited value: exact, a two-point set, or one-or-two-sided bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactValue {
    Exact(Rational64),
    TwoPoint(Rational64, Rational64),
    Bounds {
        lower: Option<Rational64>,
        upper: Option<Rational64>,
    },
}

impl FactValue {
    pub fn lower(&self) -> Option<Rational64> {
        match self {
            FactValue::Exact(v) => Some(*v),
            FactValue::TwoPoint(a, _) => Some(*a),
            FactValue::Bounds { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> Option<Rational64> {
        match self {
            FactValue::Exact(v) => Some(*v),
            FactValue::TwoPoint(_, b) => Some(*b),
            FactValue::Bounds { upper, .. } => *upper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub value: FactValue,
    pub citation: &'static str,
}

impl Fact {
    fn exact(v: i64, citation: &'static str) -> Self {
        Fact {
            value: FactValue::Exact(Rational64::from_integer(v)),
            citation,
        }
    }

    fn exact_rat(v: Rational64, citation: &'static str) -> Self {
        Fact {
            value: FactValue::Exact(v),
            citation,
        }
    }

    fn at_least(v: i64, citation: &'static str) -> Self {
        Fact {
            value: FactValue::Bounds {
                lower: Some(Rational64::from_integer(v)),
                upper: None,
            },
            citation,
        }
    }
}

/// Published values and intervals for one family member. Every stored fact
/// carries its citation key.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyFacts {
    pub alt: Option<Fact>,
    pub dalt: Option<Fact>,
    pub turaev_genus: Option<Fact>,
    pub alt_genus: Option<Fact>,
    pub warp: Option<Fact>,
    pub crossing_number: Option<Fact>,
    pub jones_span: Option<Fact>,
    pub s_invariant: Option<Fact>,
    pub signature: Option<Fact>,
    pub hfk_width: Option<Fact>,
}

/// Cited invariant values for a family member; errors outside the stated
/// parameter ranges rather than extrapolating.
pub fn known_values(family: Family) -> Result<FamilyFacts> {
    match family {
        Family::Torus3 { q } => {
            if q <= 3 || q % 3 == 0 {
                return Err(Error::FamilyParameter {
                    reason: format!("torus facts cover T(3,q) for q > 3 coprime to 3 (got q={q})"),
                });
            }
            let n = (q / 3) as i64;
            let alt = match q % 6 {
                1 | 2 => Fact::exact(2 * ((q / 6) as i64), "kanenobu_alternation_torus3"),
                4 | 5 if q <= 5 => Fact::exact(1, "kanenobu_alternation_torus3"),
                4 | 5 => {
                    let k = (q / 6) as i64;
                    Fact {
                        value: FactValue::TwoPoint(
                            Rational64::from_integer(2 * k),
                            Rational64::from_integer(2 * k + 1),
                        ),
                        citation: "kanenobu_alternation_torus3",
                    }
                }
                _ => unreachable!("q is coprime to 3 and not 3 mod 6"),
            };
            Ok(FamilyFacts {
                alt: Some(alt),
                dalt: Some(Fact::exact(n, "abe_kishimoto_turaev_dealternating_torus3")),
                turaev_genus: Some(Fact::exact(n, "abe_kishimoto_turaev_dealternating_torus3")),
                alt_genus: None,
                warp: Some(Fact::exact_rat(
                    Rational64::new(1, 2),
                    "shimizu_warping_example_torus3",
                )),
                crossing_number: Some(Fact::exact(2 * q as i64, "murasugi_torus_crossing_number")),
                jones_span: Some(Fact::exact(q as i64 + 1, "jones_murasugi_span_torus3")),
                s_invariant: Some(Fact::exact(2 * q as i64 - 2, "rasmussen_s_positive_torus")),
                signature: Some(Fact::exact(
                    torus_signature_recursive(3, q),
                    "glm_signature_recursion",
                )),
                hfk_width: None,
            })
        }
        Family::ModifiedTorus { p, q } => {
            let bounds = modified_torus_bounds(p, q)?;
            let toroidal = toroidal_alternating_check(p, q);
            Ok(FamilyFacts {
                alt: None,
                dalt: None,
                turaev_genus: None,
                alt_genus: toroidal.then(|| Fact {
                    value: FactValue::Bounds {
                        lower: None,
                        upper: Some(Rational64::from_integer(1)),
                    },
                    citation: "toroidal_alternating_parity",
                }),
                warp: None,
                crossing_number: None,
                jones_span: None,
                s_invariant: Some(Fact {
                    value: FactValue::Bounds {
                        lower: Some(bounds.s_modified.lower),
                        upper: Some(bounds.s_modified.upper),
                    },
                    citation: "s_bounds_modified_torus",
                }),
                signature: Some(Fact {
                    value: FactValue::Bounds {
                        lower: Some(bounds.sigma_modified.lower),
                        upper: Some(bounds.sigma_modified.upper),
                    },
                    citation: "signature_bounds_modified_torus",
                }),
                hfk_width: None,
            })
        }
        Family::Whitehead { n } => {
            if n == 0 {
                // The figure-eight itself: alternating, thin.
                return Ok(FamilyFacts {
                    alt: Some(Fact::exact(0, "figure_eight_alternating")),
                    dalt: Some(Fact::exact(0, "figure_eight_alternating")),
                    turaev_genus: Some(Fact::exact(0, "figure_eight_alternating")),
                    alt_genus: Some(Fact::exact(0, "figure_eight_alternating")),
                    warp: Some(Fact::exact(0, "figure_eight_alternating")),
                    crossing_number: Some(Fact::exact(4, "figure_eight_alternating")),
                    jones_span: Some(Fact::exact(4, "figure_eight_alternating")),
                    s_invariant: Some(Fact::exact(0, "figure_eight_alternating")),
                    signature: Some(Fact::exact(0, "figure_eight_alternating")),
                    hfk_width: Some(Fact::exact(1, "hedden_whitehead_hfk")),
                });
            }
            Ok(FamilyFacts {
                alt: Some(Fact::exact(1, "clasp_unknotting_alternation")),
                dalt: Some(Fact::at_least(n as i64, "hfk_width_turaev_lower_bound")),
                turaev_genus: Some(Fact::at_least(n as i64, "hfk_width_turaev_lower_bound")),
                alt_genus: Some(Fact::at_least(2, "satellite_toroidal_obstruction")),
                warp: None,
                crossing_number: None,
                jones_span: None,
                s_invariant: None,
                signature: None,
                hfk_width: Some(Fact::exact(n as i64 + 1, "hedden_whitehead_hfk")),
            })
        }
    }
}

/// The published figure-eight diagram, used as the Whitehead companion seed.
pub fn figure_eight() -> PlanarDiagram {
    crate::parse::parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")
        .expect("fixed code parses")
}

/// The n-th iterated untwisted positive Whitehead double of the figure-eight
/// knot, as a diagram. Crossing counts grow as 4^n so this is desk-scale
/// only for small n.
pub fn whitehead_iterate_diagram(n: u32) -> Result<PlanarDiagram> {
    let mut d = figure_eight();
    for _ in 0..n {
        d = whitehead_double(&d, 0)?;
    }
    Ok(d)
}

/// The bundled desk-scale corpus (all connected, at most 12 crossings),
/// used by the property suite and the reproduction harness.
pub fn desk_corpus() -> Vec<(String, PlanarDiagram)> {
    let braid = |p: usize, letters: Vec<i64>| {
        crate::braid::braid_closure(&BraidWord::new(p, letters).expect("fixed words are valid"))
    };
    let mut corpus: Vec<(String, PlanarDiagram)> = vec![
        ("unknot".into(), PlanarDiagram::unknot()),
        ("unknot-kink".into(), crate::parse::parse_pd("X(1,2,2,1)").unwrap()),
        ("unknot-wiggle".into(), braid(2, vec![-1, 1, -1, 1, -1])),
        ("trefoil".into(), braid(2, vec![1, 1, 1])),
        (
            "trefoil-mirror".into(),
            crate::parse::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap(),
        ),
        ("trefoil-kinked".into(), braid(3, vec![1, 1, 1, 2])),
        ("figure-eight".into(), figure_eight()),
        ("figure-eight-braid".into(), braid(3, vec![1, -2, 1, -2])),
        ("hopf".into(), braid(2, vec![1, 1])),
        ("hopf-mirror".into(), braid(2, vec![-1, -1])),
        ("t2-4".into(), braid(2, vec![1, 1, 1, 1])),
        ("t2-5".into(), braid(2, vec![1, 1, 1, 1, 1])),
        ("t2-7".into(), braid(2, vec![1, 1, 1, 1, 1, 1, 1])),
        ("t3-4".into(), braid(3, vec![1, 2, 1, 2, 1, 2, 1, 2])),
        ("t3-5".into(), braid(3, vec![1, 2, 1, 2, 1, 2, 1, 2, 1, 2])),
        ("mixed-3braid".into(), braid(3, vec![1, -2, 2, 1])),
        ("mixed-4braid".into(), braid(4, vec![1, -2, 3, -2, 1, 3])),
        ("modified-t3-3".into(), braid(3, vec![1, 2, 1, 2, 1, -2])),
        (
            "modified-t4-3".into(),
            braid(4, vec![1, 2, 3, 1, 2, 3, 1, -2, 3]),
        ),
        ("pretzel-5m32".into(), pretzel(&[5, -3, 2]).unwrap()),
        ("pretzel-532".into(), pretzel(&[5, 3, 2]).unwrap()),
        ("pretzel-m3m2m2".into(), pretzel(&[-3, -2, -2]).unwrap()),
        ("double-unknot-0".into(), whitehead_double(&PlanarDiagram::unknot(), 0).unwrap()),
        ("double-unknot-1".into(), whitehead_double(&PlanarDiagram::unknot(), 1).unwrap()),
        ("double-unknot-m2".into(), whitehead_double(&PlanarDiagram::unknot(), -2).unwrap()),
    ];
    let trefoil = braid(2, vec![1, 1, 1]);
    let f8 = figure_eight();
    corpus.push((
        "trefoil-sum-figure-eight".into(),
        trefoil.connected_sum(&f8, 0, 0).unwrap(),
    ));
    corpus.push((
        "granny".into(),
        trefoil.connected_sum(&trefoil, 0, 1).unwrap(),
    ));
    let pret = pretzel(&[5, -3, 2]).unwrap();
    corpus.push((
        "pretzel-extended".into(),
        crate::turaev::tangle_extend(&pret, 5, &crate::turaev::Tangle::twist(3)).unwrap(),
    ));
    corpus
}
