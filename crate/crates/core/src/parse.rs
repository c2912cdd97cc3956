//! Text grammars: PD codes, braid words, tangle fragments, and input lines.
//!
//! PD lines are whitespace-separated terms `X(a,b,c,d)` with 1-indexed
//! positive integer edge labels and an optional `name :` prefix. Braid lines
//! read `BR(p): i1 i2 ... ik` with signed nonzero letters, |i| < p. Tangle
//! fragments reuse the PD term syntax with the four boundary stubs `B1..B4`
//! appearing exactly once each, in counterclockwise order.

use std::collections::BTreeMap;

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::turaev::Tangle;

/// A parsed input line: either a PD code or a braid word.
#[derive(Debug, Clone)]
pub enum DiagramSource {
    Pd(PlanarDiagram),
    Braid(BraidWord),
}

impl DiagramSource {
    pub fn into_diagram(self) -> PlanarDiagram {
        match self {
            DiagramSource::Pd(d) => d,
            DiagramSource::Braid(w) => crate::braid::braid_closure(&w),
        }
    }
}

fn split_name(text: &str, marker: &str) -> Result<(Option<String>, usize)> {
    let pos = text.find(marker).expect("caller checked the marker");
    let prefix = text[..pos].trim();
    if prefix.is_empty() {
        return Ok((None, pos));
    }
    let Some(stripped) = prefix.strip_suffix(':') else {
        return Err(Error::MalformedToken {
            token: prefix.to_string(),
            reason: "expected `name :` before the diagram terms".to_string(),
        });
    };
    let name = stripped.trim();
    if name.is_empty() {
        Ok((None, pos))
    } else {
        Ok((Some(name.to_string()), pos))
    }
}

fn parse_x_term(token: &str) -> Result<[&str; 4]> {
    let inner = token
        .strip_prefix("X(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::MalformedToken {
            token: token.to_string(),
            reason: "expected X(a,b,c,d)".to_string(),
        })?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::MalformedToken {
            token: token.to_string(),
            reason: format!("expected 4 edge labels, found {}", parts.len()),
        });
    }
    Ok([parts[0], parts[1], parts[2], parts[3]])
}

fn parse_edge_label(token: &str, part: &str) -> Result<u64> {
    let label: u64 = part.trim().parse().map_err(|_| Error::MalformedToken {
        token: token.to_string(),
        reason: format!("edge label `{part}` is not a positive integer"),
    })?;
    if label == 0 {
        return Err(Error::MalformedToken {
            token: token.to_string(),
            reason: "edge labels are 1-indexed".to_string(),
        });
    }
    Ok(label)
}

/// Parse a PD code, ignoring an optional `name :` prefix.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    parse_pd_named(text).map(|(_, d)| d)
}

/// Parse a PD code keeping the optional name prefix.
pub fn parse_pd_named(text: &str) -> Result<(Option<String>, PlanarDiagram)> {
    let (name, body) = match text.find("X(") {
        Some(_) => {
            let (name, pos) = split_name(text, "X(")?;
            (name, &text[pos..])
        }
        None => {
            if text.trim().is_empty() {
                return Err(Error::EmptyInput);
            }
            return Err(Error::MalformedToken {
                token: text.trim().to_string(),
                reason: "no X(a,b,c,d) terms found".to_string(),
            });
        }
    };

    let mut raw: Vec<[u64; 4]> = Vec::new();
    for token in body.split_whitespace() {
        let parts = parse_x_term(token)?;
        let mut labels = [0u64; 4];
        for (i, part) in parts.iter().enumerate() {
            labels[i] = parse_edge_label(token, part)?;
        }
        raw.push(labels);
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    // Dense ids in ascending label order; the diagram keeps the labels.
    let mut ids: BTreeMap<u64, usize> = BTreeMap::new();
    for t in &raw {
        for &l in t {
            ids.entry(l).or_default();
        }
    }
    for (rank, (_, id)) in ids.iter_mut().enumerate() {
        *id = rank;
    }
    let labels: Vec<u64> = ids.keys().copied().collect();
    let tuples: Vec<[usize; 4]> = raw
        .iter()
        .map(|t| [ids[&t[0]], ids[&t[1]], ids[&t[2]], ids[&t[3]]])
        .collect();
    let n = tuples.len();
    let d = PlanarDiagram::build(tuples, Some(labels), 0, &vec![true; n])?;
    Ok((name, d))
}

/// Parse a braid word line `BR(p): i1 i2 ... ik`, ignoring a name prefix.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    parse_braid_named(text).map(|(_, w)| w)
}

pub fn parse_braid_named(text: &str) -> Result<(Option<String>, BraidWord)> {
    let Some(_) = text.find("BR(") else {
        if text.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        return Err(Error::MalformedToken {
            token: text.trim().to_string(),
            reason: "no BR(p): header found".to_string(),
        });
    };
    let (name, pos) = split_name(text, "BR(")?;
    let body = &text[pos + 3..];
    let close = body.find(')').ok_or_else(|| Error::MalformedToken {
        token: text.trim().to_string(),
        reason: "unterminated BR(p)".to_string(),
    })?;
    let strands: usize = body[..close].trim().parse().map_err(|_| Error::MalformedToken {
        token: body[..close].to_string(),
        reason: "strand count is not a positive integer".to_string(),
    })?;
    let rest = body[close + 1..].trim_start();
    let rest = rest.strip_prefix(':').ok_or_else(|| Error::MalformedToken {
        token: text.trim().to_string(),
        reason: "expected `:` after BR(p)".to_string(),
    })?;
    let mut letters = Vec::new();
    for token in rest.split_whitespace() {
        let letter: i64 = token.parse().map_err(|_| Error::MalformedToken {
            token: token.to_string(),
            reason: "braid letter is not a signed integer".to_string(),
        })?;
        letters.push(letter);
    }
    let word = BraidWord::new(strands, letters)?;
    Ok((name, word))
}

/// Parse one input-file line. Comments start with `#`; blank lines yield
/// `None`. Each non-blank line holds one diagram in PD or BR grammar.
pub fn parse_line(line: &str) -> Result<Option<(Option<String>, DiagramSource)>> {
    let line = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    if line.trim().is_empty() {
        return Ok(None);
    }
    if line.contains("BR(") {
        let (name, w) = parse_braid_named(line)?;
        Ok(Some((name, DiagramSource::Braid(w))))
    } else {
        let (name, d) = parse_pd_named(line)?;
        Ok(Some((name, DiagramSource::Pd(d))))
    }
}

/// Parse a tangle fragment: PD terms over internal labels plus the four
/// boundary stubs `B1..B4` (counterclockwise), each appearing exactly once.
pub fn parse_tangle(text: &str) -> Result<Tangle> {
    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum Label {
        Internal(u64),
        Stub(u8),
    }

    let mut raw: Vec<[Label; 4]> = Vec::new();
    for token in text.split_whitespace() {
        let parts = parse_x_term(token)?;
        let mut entry = [Label::Internal(0); 4];
        for (i, part) in parts.iter().enumerate() {
            let part = part.trim();
            entry[i] = match part {
                "B1" => Label::Stub(0),
                "B2" => Label::Stub(1),
                "B3" => Label::Stub(2),
                "B4" => Label::Stub(3),
                _ => Label::Internal(parse_edge_label(token, part)?),
            };
        }
        raw.push(entry);
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut counts: BTreeMap<Label, usize> = BTreeMap::new();
    for t in &raw {
        for &l in t {
            *counts.entry(l).or_default() += 1;
        }
    }
    for stub in 0..4u8 {
        let count = counts.get(&Label::Stub(stub)).copied().unwrap_or(0);
        if count != 1 {
            return Err(Error::TangleBoundaryCount {
                stub: format!("B{}", stub + 1),
                count,
            });
        }
    }
    for (l, &count) in &counts {
        if let Label::Internal(v) = l {
            if count != 2 {
                return Err(Error::EdgeLabelCount {
                    label: v.to_string(),
                    count,
                });
            }
        }
    }

    // Internal labels first (ascending), stubs at the end.
    let mut ids: BTreeMap<Label, usize> = BTreeMap::new();
    let internals: Vec<Label> = counts
        .keys()
        .filter(|l| matches!(l, Label::Internal(_)))
        .copied()
        .collect();
    for (rank, l) in internals.iter().enumerate() {
        ids.insert(*l, rank);
    }
    let base = internals.len();
    for stub in 0..4u8 {
        ids.insert(Label::Stub(stub), base + stub as usize);
    }
    let tuples: Vec<[usize; 4]> = raw
        .iter()
        .map(|t| [ids[&t[0]], ids[&t[1]], ids[&t[2]], ids[&t[3]]])
        .collect();
    Tangle::new(tuples, base + 4, [base, base + 1, base + 2, base + 3])
}
