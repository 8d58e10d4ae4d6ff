use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::presentations::{classify_relations, BoundQuiver, Path, Quiver};

use super::module::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Direct(usize),
    Inverse(usize),
}

impl Letter {
    pub fn arrow(self) -> usize {
        match self {
            Letter::Direct(a) | Letter::Inverse(a) => a,
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Direct(a) => Letter::Inverse(a),
            Letter::Inverse(a) => Letter::Direct(a),
        }
    }

    /// Vertex the walk is at before the letter.
    pub fn start(self, q: &Quiver) -> usize {
        match self {
            Letter::Direct(a) => q.arrow(a).source,
            Letter::Inverse(a) => q.arrow(a).target,
        }
    }

    pub fn end(self, q: &Quiver) -> usize {
        match self {
            Letter::Direct(a) => q.arrow(a).target,
            Letter::Inverse(a) => q.arrow(a).source,
        }
    }
}

/// A walk of arrows and formal inverses; a trivial walk keeps its vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StringWord {
    start: usize,
    letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(v: usize) -> StringWord {
        StringWord { start: v, letters: Vec::new() }
    }

    /// Checks that consecutive letters compose.
    pub fn new(q: &Quiver, letters: Vec<Letter>) -> Result<StringWord> {
        let Some(first) = letters.first() else {
            return Err(Error::InvalidString("empty word".into()));
        };
        for w in letters.windows(2) {
            if w[0].end(q) != w[1].start(q) {
                return Err(Error::InvalidString(format!(
                    "letters {} and {} do not compose",
                    letter_text(q, w[0]),
                    letter_text(q, w[1])
                )));
            }
        }
        Ok(StringWord { start: first.start(q), letters })
    }

    /// Parses `e(v)` or `/`-separated letters such as `alpha/beta^-1`.
    pub fn parse(q: &Quiver, text: &str) -> Result<StringWord> {
        let t = text.trim();
        if let Some(v) = t.strip_prefix("e(").and_then(|r| r.strip_suffix(')')) {
            return Ok(StringWord::trivial(q.vertex_index(v.trim())?));
        }
        let mut letters = Vec::new();
        for part in t.split('/') {
            let part = part.trim();
            let (name, inv) = match part.strip_suffix("^-1") {
                Some(n) => (n.trim(), true),
                None => (part, false),
            };
            let a = q.arrow_index(name)?;
            letters.push(if inv { Letter::Inverse(a) } else { Letter::Direct(a) });
        }
        StringWord::new(q, letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    // A trivial word is not empty, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Vertices `v_0, ..., v_n` visited by the walk.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut vs = vec![self.start];
        vs.extend(self.letters.iter().map(|l| l.end(q)));
        vs
    }

    pub fn inverse(&self, q: &Quiver) -> StringWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let letters: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverse()).collect();
        StringWord { start: letters[0].start(q), letters }
    }

    /// Representative of `{w, w^-1}`: the smaller of the two.
    pub fn canonical(&self, q: &Quiver) -> StringWord {
        let inv = self.inverse(q);
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Maximal runs of direct or inverse letters, each as the path it spells.
    pub fn runs(&self, q: &Quiver) -> Vec<Path> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let direct = matches!(self.letters[i], Letter::Direct(_));
            let mut j = i;
            while j < self.letters.len() && matches!(self.letters[j], Letter::Direct(_)) == direct {
                j += 1;
            }
            let mut arrows: Vec<usize> = self.letters[i..j].iter().map(|l| l.arrow()).collect();
            if !direct {
                arrows.reverse();
            }
            out.push(Path::from_arrows(q, arrows).expect("runs of a walk compose"));
            i = j;
        }
        out
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.letters.is_empty() {
            return format!("e({})", q.vertex_name(self.start));
        }
        self.letters.iter().map(|&l| letter_text(q, l)).collect::<Vec<_>>().join("/")
    }
}

fn letter_text(q: &Quiver, l: Letter) -> String {
    match l {
        Letter::Direct(a) => q.arrow(a).name.clone(),
        Letter::Inverse(a) => format!("{}^-1", q.arrow(a).name),
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Direct(a) => write!(f, "{a}"),
            Letter::Inverse(a) => write!(f, "{a}^-1"),
        }
    }
}

/// Why `w` is not a string of `a`, if it is not.
pub fn string_violation(a: &BoundQuiver, w: &StringWord) -> Option<String> {
    let q = a.quiver();
    if !w.is_reduced() {
        return Some(format!("{} is not reduced", w.display(q)));
    }
    let binomial_paths: Vec<Path> =
        classify_relations(a).into_iter().filter_map(|c| c.binomial).flat_map(|(p, r)| [p, r]).collect();
    for run in w.runs(q) {
        if a.is_zero_path(&run) {
            return Some(format!("{} contains the zero path {}", w.display(q), run.display(q)));
        }
        if let Some(b) = binomial_paths.iter().find(|b| run.contains(q, b)) {
            return Some(format!("{} contains the binomial path {}", w.display(q), b.display(q)));
        }
    }
    None
}

/// The string module `M(w)`: one basis vector per position of the walk, each letter
/// mapping between consecutive positions by the identity.
pub fn string_module(a: &Arc<BoundQuiver>, w: &StringWord) -> Result<Representation> {
    let q = a.quiver();
    if let Some(reason) = string_violation(a, w) {
        return Err(Error::InvalidString(reason));
    }
    let vs = w.vertices(q);
    let mut dims = vec![0usize; q.vertex_count()];
    let mut local = Vec::with_capacity(vs.len());
    for &v in &vs {
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix> =
        q.arrows().iter().map(|ar| Matrix::zeros(dims[ar.target], dims[ar.source])).collect();
    for (i, &l) in w.letters().iter().enumerate() {
        let (from, to) = match l {
            Letter::Direct(_) => (i, i + 1),
            Letter::Inverse(_) => (i + 1, i),
        };
        maps[l.arrow()][(local[to], local[from])] = Q::one();
    }
    Representation::new(a.clone(), dims, maps)
        .map_err(|e| Error::InvalidString(format!("{}: {e}", w.display(q))))
}
