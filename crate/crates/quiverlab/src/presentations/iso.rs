//! Isomorphism of bound quiver algebras up to relabeling vertices and arrows.

use super::{BoundQuiver, Element, Path, Quiver};

/// Relabeling carrying one presentation onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl Relabeling {
    pub fn map_path(&self, target: &Quiver, p: &Path) -> Path {
        if p.is_trivial() {
            return Path::trivial(self.vertices[p.source()]);
        }
        Path::from_arrows(target, p.arrows().iter().map(|&a| self.arrows[a]).collect()).expect("relabeling preserves composability")
    }

    pub fn map_element(&self, target: &Quiver, e: &Element) -> Element {
        Element::from_terms(e.terms().map(|(p, c)| (c.clone(), self.map_path(target, p))))
    }
}

fn arrow_counts(q: &Quiver) -> Vec<Vec<usize>> {
    let n = q.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for ar in q.arrows() {
        m[ar.source][ar.target] += 1;
    }
    m
}

/// A relabeling sending each arrow of `a` to an arrow of `b` and the relations of `a`
/// into the ideal of `b`. With equal dimensions that map is an algebra isomorphism.
/// Isomorphisms that need to send an arrow to a linear combination are not searched.
pub fn find_relabeling(a: &BoundQuiver, b: &BoundQuiver) -> Option<Relabeling> {
    let (qa, qb) = (a.quiver(), b.quiver());
    let n = qa.vertex_count();
    if n != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() || a.dim() != b.dim() {
        return None;
    }
    let (ca, cb) = (arrow_counts(qa), arrow_counts(qb));
    let signature = |q: &Quiver, bq: &BoundQuiver, v: usize| {
        (q.in_arrows(v).len(), q.out_arrows(v).len(), bq.block(v, v).len(), (0..n).map(|w| bq.block(v, w).len()).sum::<usize>())
    };
    let sa: Vec<_> = (0..n).map(|v| signature(qa, a, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(qb, b, v)).collect();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = None;
    assign(0, &mut sigma, &mut used, &ca, &cb, &sa, &sb, &mut |sigma| {
        let r = arrow_assignments(a, b, sigma);
        if r.is_some() {
            found = r;
            true
        } else {
            false
        }
    });
    found
}

#[allow(clippy::too_many_arguments)]
fn assign<S: PartialEq>(
    v: usize,
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    ca: &[Vec<usize>],
    cb: &[Vec<usize>],
    sa: &[S],
    sb: &[S],
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = sigma.len();
    if v == n {
        return done(sigma);
    }
    for w in 0..n {
        if used[w] || sa[v] != sb[w] {
            continue;
        }
        let consistent = (0..v).all(|u| ca[u][v] == cb[sigma[u]][w] && ca[v][u] == cb[w][sigma[u]]) && ca[v][v] == cb[w][w];
        if !consistent {
            continue;
        }
        sigma[v] = w;
        used[w] = true;
        if assign(v + 1, sigma, used, ca, cb, sa, sb, done) {
            return true;
        }
        used[w] = false;
    }
    sigma[v] = usize::MAX;
    false
}

/// Tries every matching of parallel arrows; relations of `a` must land in the ideal of `b`.
fn arrow_assignments(a: &BoundQuiver, b: &BoundQuiver, sigma: &[usize]) -> Option<Relabeling> {
    let (qa, qb) = (a.quiver(), b.quiver());
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (i, ar) in qa.arrows().iter().enumerate() {
        let key = (sigma[ar.source], sigma[ar.target]);
        if let Some(g) = groups.iter_mut().find(|(src, _)| {
            let x = qa.arrow(src[0]);
            (sigma[x.source], sigma[x.target]) == key
        }) {
            g.0.push(i);
            continue;
        }
        let targets = qb.arrows().iter().enumerate().filter(|(_, br)| (br.source, br.target) == key).map(|(j, _)| j).collect();
        groups.push((vec![i], targets));
    }
    let mut arrows = vec![usize::MAX; qa.arrow_count()];
    fn rec(
        g: usize,
        groups: &[(Vec<usize>, Vec<usize>)],
        arrows: &mut Vec<usize>,
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if g == groups.len() {
            return check(arrows);
        }
        let (src, dst) = &groups[g];
        permute(src, dst, 0, &mut vec![false; dst.len()], arrows, &mut |arrows| rec(g + 1, groups, arrows, check))
    }
    fn permute(
        src: &[usize],
        dst: &[usize],
        k: usize,
        taken: &mut Vec<bool>,
        arrows: &mut Vec<usize>,
        next: &mut dyn FnMut(&mut Vec<usize>) -> bool,
    ) -> bool {
        if k == src.len() {
            return next(arrows);
        }
        for j in 0..dst.len() {
            if taken[j] {
                continue;
            }
            taken[j] = true;
            arrows[src[k]] = dst[j];
            if permute(src, dst, k + 1, taken, arrows, next) {
                return true;
            }
            taken[j] = false;
        }
        false
    }
    let check = |arrows: &[usize]| {
        let r = Relabeling { vertices: sigma.to_vec(), arrows: arrows.to_vec() };
        a.relations().iter().all(|rel| b.in_ideal(&r.map_element(qb, rel)))
    };
    if rec(0, &groups, &mut arrows, &check) {
        Some(Relabeling { vertices: sigma.to_vec(), arrows })
    } else {
        None
    }
}

pub fn is_isomorphic_presentation(a: &BoundQuiver, b: &BoundQuiver) -> bool {
    find_relabeling(a, b).is_some()
}
