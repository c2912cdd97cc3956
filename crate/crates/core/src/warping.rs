//! Edge weights and the warping span of a diagram.
//!
//! Walking a component, the weight rises by one across an over-pass and
//! falls by one across an under-pass. Each component contributes
//! `(max - min - 1) / 2`; the diagram value is the maximum over components,
//! with crossingless components contributing zero.

use num_rational::Rational64;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};

/// Weights along one component, starting from a base edge at weight zero.
/// `closing_step` is the step taken by the final pass back onto the base
/// edge, closing the cyclic increment sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTraversal {
    pub component: usize,
    pub edges: Vec<usize>,
    pub weights: Vec<i64>,
    pub closing_step: i64,
}

impl WeightedTraversal {
    /// Signed weight steps between consecutive edges (cyclically closed).
    pub fn increments(&self) -> Vec<i64> {
        let n = self.weights.len();
        (0..n)
            .map(|i| {
                if i + 1 < n {
                    self.weights[i + 1] - self.weights[i]
                } else {
                    self.closing_step
                }
            })
            .collect()
    }

    fn span_halved(&self) -> Rational64 {
        let max = *self.weights.iter().max().expect("nonempty traversal");
        let min = *self.weights.iter().min().expect("nonempty traversal");
        Rational64::new(max - min - 1, 2)
    }
}

/// Weights for component `k` of `d`, based at edge `base` with weight 0.
pub fn edge_weights(d: &PlanarDiagram, k: usize, base: usize) -> Result<WeightedTraversal> {
    if k >= d.components().len() {
        return Err(Error::CrossinglessComponent { component: k });
    }
    if d.component_of_edge(base) != k {
        return Err(Error::EdgeNotOnComponent {
            edge: base,
            component: k,
        });
    }
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut w = 0i64;
    let mut e = base;
    let closing_step = loop {
        edges.push(e);
        weights.push(w);
        let (_, slot) = d.in_slot(e);
        let step = if slot == 0 { -1 } else { 1 };
        w += step;
        e = d.successor(e);
        if e == base {
            break step;
        }
    };
    Ok(WeightedTraversal {
        component: k,
        edges,
        weights,
        closing_step,
    })
}

/// Per-component warping values and the diagram value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpReport {
    pub value: Rational64,
    pub per_component: Vec<Rational64>,
    /// `2*warp + 1` for knot diagrams with at least one crossing; the
    /// warping-polynomial span of the underlying knot is bounded by it.
    pub spn: Option<Rational64>,
}

fn component_warp(d: &PlanarDiagram, k: usize) -> Rational64 {
    let comp = &d.components()[k];
    let base = comp[0];
    let t = edge_weights(d, k, base).expect("component exists");
    let total: i64 = {
        let last = *t.weights.last().unwrap();
        last + t.closing_step
    };
    if total == 0 {
        return t.span_halved();
    }
    // Unbalanced over/under passes (possible only at crossings with other
    // components): the linear span depends on the base edge, so take the
    // minimum over bases.
    comp.iter()
        .map(|&b| {
            edge_weights(d, k, b)
                .expect("edge lies on the component")
                .span_halved()
        })
        .min()
        .expect("component has at least one edge")
}

/// True when every component's over/under passes balance out, i.e. the
/// cyclic weight function is single-valued. Knot diagrams always balance;
/// a component can only be unbalanced at crossings with other components.
/// `warp(D) = 0 iff D is alternating` is guaranteed only on balanced
/// diagrams, and only balanced diagrams witness warping upper bounds.
pub fn weights_balanced(d: &PlanarDiagram) -> bool {
    (0..d.components().len()).all(|k| {
        let comp = &d.components()[k];
        let t = edge_weights(d, k, comp[0]).expect("component exists");
        *t.weights.last().unwrap() + t.closing_step == 0
    })
}

pub fn warp_report(d: &PlanarDiagram) -> WarpReport {
    let per_component: Vec<Rational64> = (0..d.components().len())
        .map(|k| component_warp(d, k))
        .collect();
    let zero = Rational64::from_integer(0);
    let value = per_component.iter().copied().max().unwrap_or(zero);
    let spn = if d.component_count() == 1 && d.crossing_count() > 0 {
        Some(value * 2 + 1)
    } else {
        None
    };
    WarpReport {
        value,
        per_component,
        spn,
    }
}

/// The warping span of the diagram: max over components, crossingless
/// components contribute 0. Independent of base edge and orientation.
pub fn warping_span_diagram(d: &PlanarDiagram) -> Rational64 {
    warp_report(d).value
}
