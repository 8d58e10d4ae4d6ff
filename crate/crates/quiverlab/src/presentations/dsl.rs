//! Line-oriented text format for presentations.
//!
//! ```text
//! vertices: 1 2 3
//! arrow alpha: 1 -> 2
//! arrow beta: 2 -> 3
//! relation alpha*beta
//! ```

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Q;

use super::algebra::{BoundQuiver, DEFAULT_LMAX};
use super::quiver::{Element, Path, Quiver};

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn clean_line(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

pub(crate) fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

pub(crate) fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d == num_bigint::BigInt::from(0) {
        return None;
    }
    Some(Q::new(n, d))
}

/// Parses `e(v)` or an arrow label into a path.
fn parse_factor(q: &Quiver, f: &str, line: usize) -> Result<Path> {
    if let Some(v) = f.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
        return Ok(Path::trivial(q.vertex_index(v.trim())?));
    }
    let a = q.arrow_index(f).map_err(|_| parse_err(line, format!("unknown arrow `{f}`")))?;
    Ok(Path::arrow(q, a))
}

/// Parses a linear combination such as `alpha*beta - 2/3*gamma*delta`.
pub fn parse_element(q: &Quiver, expr: &str, line: usize) -> Result<Element> {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut depth = 0i32;
    for ch in expr.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if !cur.trim().is_empty() {
                    terms.push((negative, std::mem::take(&mut cur)));
                    negative = ch == '-';
                } else {
                    cur.clear();
                    if ch == '-' {
                        negative = !negative;
                    }
                }
            }
            _ => cur.push(ch),
        }
    }
    if expr.trim().is_empty() || expr.trim_end().ends_with(['+', '-']) {
        return Err(parse_err(line, format!("incomplete expression `{}`", expr.trim())));
    }
    terms.push((negative, cur));
    let mut e = Element::zero();
    for (neg, t) in terms {
        let mut coeff = Q::one();
        let mut path: Option<Path> = None;
        for f in t.split('*').map(str::trim) {
            if f.is_empty() {
                return Err(parse_err(line, format!("empty factor in `{}`", t.trim())));
            }
            if f.starts_with(|c: char| c.is_ascii_digit()) && parse_rational(f).is_some() && path.is_none() {
                coeff *= parse_rational(f).expect("checked");
                continue;
            }
            let p = parse_factor(q, f, line)?;
            path = Some(match path {
                None => p,
                Some(prev) => prev.concat(&p).ok_or_else(|| {
                    Error::InvalidPath(format!("`{}` is not a path", t.trim()))
                })?,
            });
        }
        let Some(p) = path else {
            return Err(parse_err(line, format!("term `{}` has no path", t.trim())));
        };
        e.add_term(if neg { -coeff } else { coeff }, p);
    }
    Ok(e)
}

/// The algebra block of a session: `vertices:`, `arrow` and `relation` lines.
pub(crate) struct AlgebraBlock {
    pub quiver: Quiver,
    pub relations: Vec<(usize, String)>,
}

pub(crate) fn parse_algebra_block(text: &str) -> Result<AlgebraBlock> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = clean_line(raw);
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("vertices:") {
            if vertices.is_some() {
                return Err(parse_err(line, "vertices declared twice"));
            }
            let vs: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if let Some(bad) = vs.iter().find(|v| !is_ident(v)) {
                return Err(parse_err(line, format!("invalid vertex label `{bad}`")));
            }
            vertices = Some(vs);
        } else if let Some(rest) = l.strip_prefix("arrow ") {
            let (name, ends) =
                rest.split_once(':').ok_or_else(|| parse_err(line, "expected `arrow name: src -> tgt`"))?;
            let (s, t) =
                ends.split_once("->").ok_or_else(|| parse_err(line, "expected `arrow name: src -> tgt`"))?;
            let name = name.trim();
            if !is_ident(name) || name == "e" {
                return Err(parse_err(line, format!("invalid arrow label `{name}`")));
            }
            arrows.push((name.to_string(), s.trim().to_string(), t.trim().to_string(), line));
        } else if let Some(rest) = l.strip_prefix("relation ") {
            relations.push((line, rest.trim().to_string()));
        } else if l.starts_with("module ") {
            continue;
        } else {
            return Err(parse_err(line, format!("unrecognized line `{l}`")));
        }
    }
    let vertices = vertices.ok_or_else(|| parse_err(0, "missing `vertices:` line"))?;
    let mut arr = Vec::new();
    for (name, s, t, _) in &arrows {
        let idx = |v: &str| vertices.iter().position(|x| x == v).ok_or_else(|| Error::UnknownVertex(v.to_string()));
        arr.push((name.clone(), idx(s)?, idx(t)?));
    }
    let quiver = Quiver::new(vertices, arr)?;
    Ok(AlgebraBlock { quiver, relations })
}

pub fn parse_presentation(text: &str) -> Result<BoundQuiver> {
    parse_presentation_with(text, DEFAULT_LMAX)
}

/// Parses the algebra block of `text`, ignoring module definitions.
pub fn parse_presentation_with(text: &str, lmax: usize) -> Result<BoundQuiver> {
    let block = parse_algebra_block(text)?;
    let mut rels = Vec::new();
    for (line, r) in &block.relations {
        rels.push(parse_element(&block.quiver, r, *line)?);
    }
    BoundQuiver::new(block.quiver, rels, lmax)
}

/// Serializes the algebra block; parsing the result gives back the same presentation.
pub fn serialize_presentation(a: &BoundQuiver) -> String {
    let q = a.quiver();
    let mut s = format!("vertices: {}\n", q.vertices().join(" "));
    for ar in q.arrows() {
        s.push_str(&format!("arrow {}: {} -> {}\n", ar.name, q.vertex_name(ar.source), q.vertex_name(ar.target)));
    }
    for r in a.relations() {
        s.push_str(&format!("relation {}\n", r.display(q)));
    }
    s
}
