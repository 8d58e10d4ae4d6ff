use super::algebra::BoundQuiver;
use super::quiver::{Element, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationClass {
    ZeroRelation,
    Minimal,
    NonMinimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedRelation {
    pub generator: Element,
    pub class: RelationClass,
    /// The two maximal subpaths when the generator is a minimal two-term relation.
    pub binomial: Option<(Path, Path)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RecognitionReport {
    pub is_monomial: bool,
    pub is_special_biserial: bool,
    pub binomial_pairs: Vec<(Path, Path)>,
    pub violations: Vec<String>,
}

/// Sub-sums are checked exhaustively up to this many terms; longer generators are
/// treated as minimal only if no single term or co-single term lies in the ideal.
const SUBSET_LIMIT: usize = 14;

/// Whether no proper non-empty sub-sum of `g` lies in the ideal of `a`.
pub fn is_minimal_relation(a: &BoundQuiver, g: &Element) -> bool {
    let terms: Vec<_> = g.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    let m = terms.len();
    if m < 2 {
        return false;
    }
    let sub = |mask: u64| {
        Element::from_terms(terms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, (p, c))| (c.clone(), p.clone())))
    };
    if m <= SUBSET_LIMIT {
        let full = (1u64 << m) - 1;
        (1..full).all(|mask| !a.in_ideal(&sub(mask)))
    } else {
        let full = (1u64 << m) - 1;
        (0..m).all(|i| !a.in_ideal(&sub(1 << i)) && !a.in_ideal(&sub(full ^ (1 << i))))
    }
}

pub fn classify_relations(a: &BoundQuiver) -> Vec<ClassifiedRelation> {
    a.relations()
        .iter()
        .map(|g| {
            if g.term_count() == 1 {
                return ClassifiedRelation { generator: g.clone(), class: RelationClass::ZeroRelation, binomial: None };
            }
            let minimal = is_minimal_relation(a, g);
            let binomial = if minimal && g.term_count() == 2 {
                let ps = g.paths();
                Some((ps[0].clone(), ps[1].clone()))
            } else {
                None
            };
            let class = if minimal { RelationClass::Minimal } else { RelationClass::NonMinimal };
            ClassifiedRelation { generator: g.clone(), class, binomial }
        })
        .collect()
}

pub fn recognize_class(a: &BoundQuiver) -> RecognitionReport {
    let q = a.quiver();
    let classes = classify_relations(a);
    let is_monomial = classes.iter().all(|c| c.class == RelationClass::ZeroRelation);
    let mut violations = Vec::new();
    for v in 0..q.vertex_count() {
        let name = q.vertex_name(v);
        if q.out_arrows(v).len() > 2 {
            violations.push(format!("vertex {name} has {} outgoing arrows", q.out_arrows(v).len()));
        }
        if q.in_arrows(v).len() > 2 {
            violations.push(format!("vertex {name} has {} incoming arrows", q.in_arrows(v).len()));
        }
    }
    for (ai, arrow) in q.arrows().iter().enumerate() {
        let alpha = Path::arrow(q, ai);
        let after: Vec<&str> = q
            .out_arrows(arrow.target)
            .iter()
            .filter(|&&b| !a.is_zero_path(&alpha.then_arrow(q, b).expect("composable")))
            .map(|&b| q.arrow(b).name.as_str())
            .collect();
        if after.len() > 1 {
            violations.push(format!("arrow {} has nonzero continuations {}", arrow.name, after.join(", ")));
        }
        let before: Vec<&str> = q
            .in_arrows(arrow.source)
            .iter()
            .filter(|&&g| !a.is_zero_path(&Path::arrow(q, g).concat(&alpha).expect("composable")))
            .map(|&g| q.arrow(g).name.as_str())
            .collect();
        if before.len() > 1 {
            violations.push(format!("arrow {} has nonzero predecessors {}", arrow.name, before.join(", ")));
        }
    }
    let mut binomial_pairs = Vec::new();
    for c in &classes {
        match (&c.class, &c.binomial) {
            (RelationClass::ZeroRelation, _) => {}
            (_, Some(pair)) => binomial_pairs.push(pair.clone()),
            _ => violations.push(format!("relation {} is neither a path nor a binomial relation", c.generator.display(q))),
        }
    }
    RecognitionReport { is_monomial, is_special_biserial: violations.is_empty(), binomial_pairs, violations }
}
