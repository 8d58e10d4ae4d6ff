//! Session files: one algebra block followed by named module definitions.
//!
//! ```text
//! module U = string alpha/theta/omega^-1
//! module X = rep dims {1: 1, 2: 1} maps {alpha: [[1]]}
//! module T = P(1) + U + X
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::presentations::{
    clean_line, is_ident, parse_algebra_block, parse_element, parse_err, parse_rational, BoundQuiver, DEFAULT_LMAX,
};
use crate::representations::{standard_module, string_module, Representation, StandardKind, StringWord};

/// A named module, kept as its list of summands.
#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: String,
    pub definition: String,
    pub summands: Vec<Representation>,
}

impl NamedModule {
    pub fn sum(&self) -> Representation {
        Representation::direct_sum(&self.summands).expect("summands share the algebra")
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub algebra: Arc<BoundQuiver>,
    pub modules: Vec<NamedModule>,
}

impl Session {
    pub fn module(&self, name: &str) -> Result<&NamedModule> {
        self.modules.iter().find(|m| m.name == name).ok_or_else(|| Error::UnknownModule(name.to_string()))
    }

    /// The module named `T` if present, else the last defined module.
    pub fn default_module(&self) -> Option<&NamedModule> {
        self.modules.iter().find(|m| m.name == "T").or_else(|| self.modules.last())
    }
}

pub fn parse_session(text: &str) -> Result<Session> {
    parse_session_with(text, DEFAULT_LMAX)
}

pub fn parse_session_with(text: &str, lmax: usize) -> Result<Session> {
    let block = parse_algebra_block(text)?;
    let mut rels = Vec::new();
    for (line, r) in &block.relations {
        rels.push(parse_element(&block.quiver, r, *line)?);
    }
    let algebra = Arc::new(BoundQuiver::new(block.quiver, rels, lmax)?);
    let mut session = Session { algebra, modules: Vec::new() };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = clean_line(raw);
        let Some(rest) = l.strip_prefix("module ") else { continue };
        let (name, def) = rest.split_once('=').ok_or_else(|| parse_err(line, "expected `module NAME = ...`"))?;
        let name = name.trim();
        if !is_ident(name) {
            return Err(parse_err(line, format!("invalid module name `{name}`")));
        }
        if session.modules.iter().any(|m| m.name == name) {
            return Err(parse_err(line, format!("module `{name}` defined twice")));
        }
        let def = def.trim();
        let summands = parse_definition(&session, def, line)?;
        session.modules.push(NamedModule { name: name.to_string(), definition: def.to_string(), summands });
    }
    Ok(session)
}

fn parse_definition(s: &Session, def: &str, line: usize) -> Result<Vec<Representation>> {
    let a = &s.algebra;
    let q = a.quiver();
    if let Some(w) = def.strip_prefix("string ") {
        let word = StringWord::parse(q, w)?;
        return Ok(vec![string_module(a, &word)?]);
    }
    if let Some(body) = def.strip_prefix("rep ") {
        return Ok(vec![parse_rep(a, body, line)?]);
    }
    let mut out = Vec::new();
    for atom in def.split('+').map(str::trim) {
        if atom.is_empty() {
            return Err(parse_err(line, "empty summand"));
        }
        out.extend(parse_atom(s, atom, line)?);
    }
    Ok(out)
}

fn parse_atom(s: &Session, atom: &str, line: usize) -> Result<Vec<Representation>> {
    let a = &s.algebra;
    for (prefix, kind) in [("P(", StandardKind::Projective), ("S(", StandardKind::Simple), ("I(", StandardKind::Injective)] {
        if let Some(v) = atom.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let vi = a.quiver().vertex_index(v.trim())?;
            return Ok(vec![standard_module(a, kind, vi)?]);
        }
    }
    if is_ident(atom) {
        return Ok(s.module(atom)?.summands.clone());
    }
    Err(parse_err(line, format!("cannot parse summand `{atom}`")))
}

/// Contents of the first `{...}` after `key`, and the remainder.
fn braced<'t>(text: &'t str, key: &str, line: usize) -> Result<(&'t str, &'t str)> {
    let rest = text.trim_start().strip_prefix(key).ok_or_else(|| parse_err(line, format!("expected `{key}`")))?;
    let rest = rest.trim_start().strip_prefix('{').ok_or_else(|| parse_err(line, format!("expected `{{` after `{key}`")))?;
    let mut depth = 1;
    for (i, ch) in rest.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&rest[..i], &rest[i + 1..]));
                }
            }
            _ => {}
        }
    }
    Err(parse_err(line, "unbalanced braces"))
}

/// Splits on commas that are not nested inside brackets.
fn top_level_split(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_matrix(text: &str, line: usize) -> Result<Vec<Vec<Q>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_err(line, format!("expected a matrix, got `{t}`")))?;
    let mut rows = Vec::new();
    for row in top_level_split(inner) {
        let body = row
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err(line, format!("expected a matrix row, got `{row}`")))?;
        let entries = body
            .split(',')
            .map(str::trim)
            .filter(|e| !e.is_empty())
            .map(|e| parse_rational(e).ok_or_else(|| parse_err(line, format!("invalid number `{e}`"))))
            .collect::<Result<Vec<Q>>>()?;
        rows.push(entries);
    }
    Ok(rows)
}

fn parse_rep(a: &Arc<BoundQuiver>, body: &str, line: usize) -> Result<Representation> {
    let q = a.quiver();
    let (dims_text, rest) = braced(body, "dims", line)?;
    let (maps_text, rest) = braced(rest, "maps", line)?;
    if !rest.trim().is_empty() {
        return Err(parse_err(line, format!("trailing text `{}`", rest.trim())));
    }
    let mut dims = vec![0usize; q.vertex_count()];
    for entry in top_level_split(dims_text) {
        let (v, d) = entry.split_once(':').ok_or_else(|| parse_err(line, format!("expected `vertex: dim`, got `{entry}`")))?;
        let vi = q.vertex_index(v.trim())?;
        dims[vi] = d.trim().parse().map_err(|_| parse_err(line, format!("invalid dimension `{}`", d.trim())))?;
    }
    let mut maps: Vec<Matrix> = q.arrows().iter().map(|ar| Matrix::zeros(dims[ar.target], dims[ar.source])).collect();
    for entry in top_level_split(maps_text) {
        let (name, m) = entry.split_once(':').ok_or_else(|| parse_err(line, format!("expected `arrow: matrix`, got `{entry}`")))?;
        let ai = q.arrow_index(name.trim())?;
        let rows = parse_matrix(m, line)?;
        let ar = q.arrow(ai);
        let (r, c) = (dims[ar.target], dims[ar.source]);
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidRepresentation(format!("matrix of `{}` must be {r}x{c}", ar.name)));
        }
        maps[ai] = Matrix::from_rows(&rows);
        if r == 0 || c == 0 {
            maps[ai] = Matrix::zeros(r, c);
        }
    }
    Representation::new(a.clone(), dims, maps)
}

/// `rep dims {...} maps {...}` text for a module; parsing it gives back the same data.
pub fn serialize_rep(m: &Representation) -> String {
    let q = m.algebra().quiver();
    let dims: Vec<String> =
        (0..q.vertex_count()).filter(|&v| m.dim_at(v) > 0).map(|v| format!("{}: {}", q.vertex_name(v), m.dim_at(v))).collect();
    let maps: Vec<String> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(ai, _)| !m.map(*ai).is_zero())
        .map(|(ai, ar)| {
            let mat = m.map(ai);
            let rows: Vec<String> = (0..mat.rows())
                .map(|r| {
                    let e: Vec<String> = (0..mat.cols()).map(|c| crate::linalg::q_to_string(&mat[(r, c)])).collect();
                    format!("[{}]", e.join(", "))
                })
                .collect();
            format!("{}: [{}]", ar.name, rows.join(", "))
        })
        .collect();
    format!("rep dims {{{}}} maps {{{}}}", dims.join(", "), maps.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SESSION: &str = "vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
relation a*b
module X = rep dims {1: 1, 2: 2} maps {a: [[1], [-1/2]]}
module U = string b
module T = P(1) + X + U
";

    #[test]
    fn named_modules_and_default() {
        let s = parse_session(SESSION).unwrap();
        assert_eq!(s.modules.len(), 3);
        let t = s.default_module().unwrap();
        assert_eq!(t.name, "T");
        assert_eq!(t.summands.len(), 3);
        assert_eq!(t.sum().dims(), &[2, 4, 1]);
        assert!(matches!(s.module("V"), Err(Error::UnknownModule(_))));
    }

    #[test]
    fn representation_text_round_trips() {
        let s = parse_session(SESSION).unwrap();
        let x = &s.module("X").unwrap().summands[0];
        let text = format!("{}module Y = {}\n", SESSION, serialize_rep(x));
        let again = parse_session(&text).unwrap();
        let y = &again.module("Y").unwrap().summands[0];
        assert_eq!(y.dims(), x.dims());
        assert_eq!(y.maps(), x.maps());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = format!("{SESSION}module Z = rep dims {{1: 1\n");
        match parse_session(&bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("unexpected {other:?}"),
        }
    }
}
