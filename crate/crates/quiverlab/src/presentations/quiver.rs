use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q_to_string, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver. Arrows are stored sorted by label, so comparing arrow indices
/// compares labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_lookup: HashMap<String, usize>,
    arrow_lookup: HashMap<String, usize>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Quiver> {
        if vertices.is_empty() {
            return Err(Error::InvalidQuiver("at least one vertex is required".into()));
        }
        let mut vertex_lookup = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_lookup.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut arrows: Vec<Arrow> =
            arrows.into_iter().map(|(name, source, target)| Arrow { name, source, target }).collect();
        arrows.sort_by(|a, b| a.name.cmp(&b.name));
        let mut arrow_lookup = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow `{}` has an undeclared endpoint", a.name)));
            }
            if arrow_lookup.insert(a.name.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{}`", a.name)));
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for (i, a) in arrows.iter().enumerate() {
            out[a.source].push(i);
            inc[a.target].push(i);
        }
        Ok(Quiver { vertices, arrows, vertex_lookup, arrow_lookup, out, inc })
    }

    /// Convenience constructor from labels: `arrows` are `(name, source, target)`.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let idx = |name: &str| {
            vs.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut arr = Vec::new();
        for (n, s, t) in arrows {
            arr.push((n.to_string(), idx(s)?, idx(t)?));
        }
        Quiver::new(vs, arr)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertex_lookup.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrow_lookup.get(name).copied().ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_arrows(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    pub fn path_from_labels(&self, labels: &[&str]) -> Result<Path> {
        let arrows = labels.iter().map(|l| self.arrow_index(l)).collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, arrows)
    }
}

/// A path in a quiver; trivial paths carry only their vertex. Ordered by length,
/// then lexicographically on arrow labels, then by source vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        let ar = q.arrow(a);
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidPath("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidPath(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: q.arrow(first).source, target: q.arrow(last).target, arrows })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    // A trivial path is not empty, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> Option<Path> {
        let ar = q.arrow(a);
        if ar.source != self.target {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path { source: self.source, target: ar.target, arrows })
    }

    /// Subpath covering arrow positions `from..to`.
    pub fn subpath(&self, q: &Quiver, from: usize, to: usize) -> Path {
        assert!(from <= to && to <= self.len());
        if from == to {
            let v = if from == 0 { self.source } else { q.arrow(self.arrows[from - 1]).target };
            return Path::trivial(v);
        }
        let arrows = self.arrows[from..to].to_vec();
        Path { source: q.arrow(arrows[0]).source, target: q.arrow(arrows[arrows.len() - 1]).target, arrows }
    }

    /// Whether `other` occurs as a contiguous subpath (trivial paths occur at their vertex).
    pub fn contains(&self, q: &Quiver, other: &Path) -> bool {
        if other.is_trivial() {
            return self.vertices(q).contains(&other.source);
        }
        self.arrows.windows(other.len()).any(|w| w == other.arrows.as_slice())
    }

    pub fn contains_properly(&self, q: &Quiver, other: &Path) -> bool {
        self != other && self.contains(q, other)
    }

    /// Vertices visited, in order (length + 1 entries).
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut vs = vec![self.source];
        vs.extend(self.arrows.iter().map(|&a| q.arrow(a).target));
        vs
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e({})", q.vertex_name(self.source))
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// Formal linear combination of paths with canonical term order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Path, Q>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn from_path(p: Path) -> Element {
        Element::from_terms(vec![(Q::one(), p)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Q, Path)>) -> Element {
        let mut e = Element::zero();
        for (c, p) in terms {
            e.add_term(c, p);
        }
        e
    }

    pub fn add_term(&mut self, c: Q, p: Path) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn paths(&self) -> Vec<Path> {
        self.terms.keys().cloned().collect()
    }

    pub fn single_path(&self) -> Option<&Path> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn scale(&self, s: &Q) -> Element {
        Element::from_terms(self.terms.iter().map(|(p, c)| (c * s, p.clone())))
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut e = self.clone();
        for (p, c) in &other.terms {
            e.add_term(c.clone(), p.clone());
        }
        e
    }

    /// Product in the path algebra (non-composable products vanish).
    pub fn mul(&self, other: &Element) -> Element {
        let mut e = Element::zero();
        for (p, c) in &self.terms {
            for (r, d) in &other.terms {
                if let Some(pr) = p.concat(r) {
                    e.add_term(c * d, pr);
                }
            }
        }
        e
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Path) -> bool) -> Element {
        Element::from_terms(self.terms.iter().filter(|(p, _)| keep(p)).map(|(p, c)| (c.clone(), p.clone())))
    }

    pub fn is_parallel(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|p| p.source() == first.source() && p.target() == first.target()),
        }
    }

    pub fn min_len(&self) -> usize {
        self.terms.keys().map(|p| p.len()).min().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                let _ = write!(s, "{}*", q_to_string(&mag));
            }
            s.push_str(&p.display(q));
        }
        s
    }
}
