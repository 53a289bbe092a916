//! Paths of 1-simplices, elementary deformations, bounded homotopy search,
//! presentations of the fundamental group and homomorphism counting.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup};
use crate::poset::{Point, Poset};
use crate::simplicial::{Simplex1, SimplicialSet};
use crate::snf::Abelianization;

/// A nonempty sequence of composable 1-simplices, stored in traversal order
/// (`b₁` first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Simplex1>,
}

impl Path {
    pub fn new(steps: Vec<Simplex1>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::BadParameter("a path needs at least one step".into()));
        }
        for (i, w) in steps.windows(2).enumerate() {
            if w[0].face0 != w[1].face1 {
                return Err(Error::EndpointMismatch(format!("steps {} and {} are not composable", i + 1, i + 2)));
            }
        }
        Ok(Path { steps })
    }

    pub fn single(b: Simplex1) -> Self {
        Path { steps: vec![b] }
    }

    /// The path `σ₀(a)`.
    pub fn constant(a: Point) -> Self {
        Path::single(Simplex1::degenerate(a))
    }

    pub fn steps(&self) -> &[Simplex1] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `∂₁p`
    pub fn start(&self) -> Point {
        self.steps[0].face1
    }

    /// `∂₀p`
    pub fn end(&self) -> Point {
        self.steps[self.steps.len() - 1].face0
    }

    pub fn is_loop(&self) -> bool {
        self.start() == self.end()
    }

    /// `q * p`: first `p`, then `q`.
    pub fn compose(q: &Path, p: &Path) -> Result<Path> {
        if p.end() != q.start() {
            return Err(Error::EndpointMismatch("end of the first path is not the start of the second".into()));
        }
        let mut steps = p.steps.clone();
        steps.extend_from_slice(&q.steps);
        Ok(Path { steps })
    }

    pub fn reverse(&self) -> Path {
        Path { steps: self.steps.iter().rev().map(Simplex1::reverse).collect() }
    }

    /// Semicolon separated, last step first.
    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        PathDisplay { path: self, poset }
    }

    /// Parses the semicolon separated encoding with the last step first.
    pub fn parse(poset: &Poset, text: &str) -> Result<Path> {
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in text.trim().chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if ch == ';' && depth == 0 {
                parts.push(std::mem::take(&mut cur));
            } else if !ch.is_whitespace() {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            parts.push(cur);
        }
        let mut steps = parts.iter().map(|s| Simplex1::parse(poset, s)).collect::<Result<Vec<_>>>()?;
        steps.reverse();
        Path::new(steps)
    }
}

struct PathDisplay<'a> {
    path: &'a Path,
    poset: &'a Poset,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.path.steps.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{}", b.display(self.poset))?;
        }
        Ok(())
    }
}

fn to_indices(ss: &SimplicialSet, p: &Path) -> Vec<usize> {
    p.steps.iter().map(|b| ss.index1(b).expect("path steps belong to the poset")).collect()
}

fn from_indices(ss: &SimplicialSet, idx: &[usize]) -> Path {
    Path { steps: idx.iter().map(|&i| ss.sigma1()[i]).collect() }
}

fn deformations_idx(ss: &SimplicialSet, p: &[usize], out: &mut Vec<Vec<usize>>) {
    let l2 = ss.level2();
    for i in 0..p.len() {
        if let Some(cs) = l2.by_face1.get(&p[i]) {
            for &c in cs {
                let f = l2.faces[c];
                let mut q = Vec::with_capacity(p.len() + 1);
                q.extend_from_slice(&p[..i]);
                q.push(f[2]);
                q.push(f[0]);
                q.extend_from_slice(&p[i + 1..]);
                out.push(q);
            }
        }
        if i + 1 < p.len() {
            if let Some(cs) = l2.by_pair.get(&(p[i], p[i + 1])) {
                for &c in cs {
                    let f = l2.faces[c];
                    let mut q = Vec::with_capacity(p.len() - 1);
                    q.extend_from_slice(&p[..i]);
                    q.push(f[1]);
                    q.extend_from_slice(&p[i + 2..]);
                    out.push(q);
                }
            }
        }
    }
}

/// All paths one elementary deformation away from `p`, sorted.
pub fn deformations(ss: &SimplicialSet, p: &Path) -> Vec<Path> {
    let mut raw = Vec::new();
    deformations_idx(ss, &to_indices(ss, p), &mut raw);
    let set: BTreeSet<Path> = raw.iter().map(|q| from_indices(ss, q)).collect();
    set.into_iter().collect()
}

/// The paths reachable from `p` by deformations through paths of length at
/// most `bound`, with a parent link for each reached path.
pub struct DeformationComponent {
    nodes: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl DeformationComponent {
    pub fn explore(ss: &SimplicialSet, p: &Path, bound: usize, limit: usize) -> Result<Self> {
        Self::explore_until(ss, p, None, bound, limit)
    }

    /// Like [`explore`](Self::explore), stopping once `target` is reached.
    fn explore_until(
        ss: &SimplicialSet,
        p: &Path,
        target: Option<&[usize]>,
        bound: usize,
        limit: usize,
    ) -> Result<Self> {
        let start = to_indices(ss, p);
        let mut comp = DeformationComponent { nodes: vec![start.clone()], parent: vec![None], index: HashMap::new() };
        comp.index.insert(start, 0);
        let mut queue = VecDeque::from([0usize]);
        let mut buf = Vec::new();
        while let Some(n) = queue.pop_front() {
            buf.clear();
            deformations_idx(ss, &comp.nodes[n], &mut buf);
            for q in buf.drain(..) {
                if q.len() > bound || comp.index.contains_key(&q) {
                    continue;
                }
                if comp.nodes.len() >= limit {
                    return Err(Error::SearchLimitExceeded(format!("more than {limit} paths in the deformation search")));
                }
                let found = target == Some(q.as_slice());
                comp.index.insert(q.clone(), comp.nodes.len());
                comp.nodes.push(q);
                comp.parent.push(Some(n));
                if found {
                    return Ok(comp);
                }
                queue.push_back(comp.nodes.len() - 1);
            }
        }
        Ok(comp)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn paths<'a>(&'a self, ss: &'a SimplicialSet) -> impl Iterator<Item = Path> + 'a {
        self.nodes.iter().map(move |n| from_indices(ss, n))
    }

    pub fn contains(&self, ss: &SimplicialSet, q: &Path) -> bool {
        self.index.contains_key(&to_indices(ss, q))
    }

    /// Chain of paths from the start to `q`, each one deformation from the
    /// previous.
    pub fn certificate(&self, ss: &SimplicialSet, q: &Path) -> Option<Vec<Path>> {
        let mut n = *self.index.get(&to_indices(ss, q))?;
        let mut chain = vec![from_indices(ss, &self.nodes[n])];
        while let Some(m) = self.parent[n] {
            chain.push(from_indices(ss, &self.nodes[m]));
            n = m;
        }
        chain.reverse();
        Some(chain)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homotopy {
    /// A chain of elementary deformations from `p` to `q`.
    Yes(Vec<Path>),
    /// The classes of `p` and `q` differ in the abelianized fundamental
    /// group; carries the coordinates of both classes.
    No { p_class: Vec<i64>, q_class: Vec<i64> },
    Unknown,
}

/// Default cap on the number of paths visited by [`homotopic`].
pub const DEFAULT_STATE_LIMIT: usize = 2_000_000;

pub fn homotopic(ss: &SimplicialSet, p: &Path, q: &Path, bound: usize, limit: usize) -> Result<Homotopy> {
    if p.start() != q.start() || p.end() != q.end() {
        return Err(Error::EndpointMismatch("paths have different boundaries".into()));
    }
    if p == q {
        return Ok(Homotopy::Yes(vec![p.clone()]));
    }
    let pi1 = Pi1::new(ss, p.start())?;
    let ab = pi1.abelianization();
    let pv = pi1.presentation.exponent_vector(&pi1.path_to_word(p));
    let qv = pi1.presentation.exponent_vector(&pi1.path_to_word(q));
    let pc = ab.coordinates(&pv);
    let qc = ab.coordinates(&qv);
    if pc != qc {
        return Ok(Homotopy::No { p_class: pc, q_class: qc });
    }
    if p.len() > bound || q.len() > bound {
        return Ok(Homotopy::Unknown);
    }
    let target = to_indices(ss, q);
    let comp = DeformationComponent::explore_until(ss, p, Some(&target), bound, limit)?;
    Ok(match comp.certificate(ss, q) {
        Some(chain) => Homotopy::Yes(chain),
        None => Homotopy::Unknown,
    })
}

/// Checks that consecutive entries of a certificate differ by one
/// elementary deformation.
pub fn verify_certificate(ss: &SimplicialSet, chain: &[Path]) -> bool {
    chain.windows(2).all(|w| deformations(ss, &w[0]).contains(&w[1]))
}

// ---------------------------------------------------------------------------
// Spanning trees
// ---------------------------------------------------------------------------

/// A breadth-first spanning tree of the graph with vertices Σ₀ and edges Σ₁.
/// Tree edges are oriented from parent to child.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: Point,
    parent_edge: Vec<Option<usize>>,
    order: Vec<Point>,
    in_tree: Vec<bool>,
}

impl SpanningTree {
    pub fn new(ss: &SimplicialSet, root: Point) -> Result<Self> {
        let n = ss.poset().len();
        let mut parent_edge = vec![None; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; ss.sigma1().len()];
        let mut order = vec![root];
        seen[root.index()] = true;
        let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, b) in ss.sigma1().iter().enumerate() {
            outgoing[b.face1.index()].push(i);
        }
        let mut k = 0;
        while k < order.len() {
            let v = order[k];
            k += 1;
            for &i in &outgoing[v.index()] {
                let w = ss.sigma1()[i].face0;
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    parent_edge[w.index()] = Some(i);
                    in_tree[i] = true;
                    in_tree[ss.reverse_index(i)] = true;
                    order.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotConnected);
        }
        Ok(SpanningTree { root, parent_edge, order, in_tree })
    }

    pub fn root(&self) -> Point {
        self.root
    }

    /// Vertices in breadth-first order, root first.
    pub fn order(&self) -> &[Point] {
        &self.order
    }

    /// Index in Σ₁ of the tree edge into `a`, if `a` is not the root.
    pub fn parent_edge(&self, a: Point) -> Option<usize> {
        self.parent_edge[a.index()]
    }

    /// Whether the 1-simplex with this index, or its reverse, is a tree edge.
    pub fn is_tree_edge(&self, i: usize) -> bool {
        self.in_tree[i]
    }

    /// Σ₁ indices of the tree path from the root to `a`, in traversal order.
    pub fn edges_to(&self, ss: &SimplicialSet, a: Point) -> Vec<usize> {
        let mut out = Vec::new();
        let mut v = a;
        while let Some(i) = self.parent_edge[v.index()] {
            out.push(i);
            v = ss.sigma1()[i].face1;
        }
        out.reverse();
        out
    }

    /// The tree path `t_a` from the root to `a`; `σ₀(root)` for the root.
    pub fn path_to(&self, ss: &SimplicialSet, a: Point) -> Path {
        let e = self.edges_to(ss, a);
        if e.is_empty() {
            Path::constant(self.root)
        } else {
            from_indices(ss, &e)
        }
    }
}

// ---------------------------------------------------------------------------
// Words and presentations
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

pub type Word = Vec<Letter>;

pub fn word_inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn exponent_vector(&self, w: &[Letter]) -> Vec<i64> {
        let mut v = vec![0i64; self.generators.len()];
        for l in w {
            v[l.gen] += if l.inverse { -1 } else { 1 };
        }
        v
    }

    pub fn abelianization(&self) -> Abelianization {
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| self.exponent_vector(r)).collect();
        Abelianization::from_relators(self.generators.len(), &rows)
    }

    pub fn fmt_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|l| {
                let g = &self.generators[l.gen];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Evaluates a word under an assignment of generators.
    pub fn evaluate(&self, group: &FiniteGroup, values: &[Elem], w: &[Letter]) -> Elem {
        w.iter().fold(Elem::E, |acc, l| {
            let x = values[l.gen];
            group.mul(acc, if l.inverse { group.inv(x) } else { x })
        })
    }
}

/// The edge-path presentation of `π₁(P, a₀)` together with the map from
/// paths to words.
#[derive(Clone, Debug)]
pub struct Pi1 {
    pub presentation: Presentation,
    pub tree: SpanningTree,
    edge_words: Vec<Word>,
    edge_lookup: HashMap<Simplex1, usize>,
}

impl Pi1 {
    /// Builds and Tietze-simplifies the presentation.
    pub fn new(ss: &SimplicialSet, base: Point) -> Result<Self> {
        let raw = Pi1::unsimplified(ss, base)?;
        Ok(raw.simplify())
    }

    /// One generator per non-tree edge class, one relator per 2-simplex.
    pub fn unsimplified(ss: &SimplicialSet, base: Point) -> Result<Self> {
        let tree = SpanningTree::new(ss, base)?;
        let s1 = ss.sigma1();
        let mut generators = Vec::new();
        let mut gen_of: HashMap<usize, usize> = HashMap::new();
        for i in 0..s1.len() {
            let r = ss.reverse_index(i);
            if !tree.is_tree_edge(i) && i <= r {
                gen_of.insert(i, generators.len());
                generators.push(s1[i].display(ss.poset()).to_string());
            }
        }
        let edge_words: Vec<Word> = (0..s1.len())
            .map(|i| {
                if tree.is_tree_edge(i) {
                    vec![]
                } else if let Some(&g) = gen_of.get(&i) {
                    vec![Letter { gen: g, inverse: false }]
                } else {
                    vec![Letter { gen: gen_of[&ss.reverse_index(i)], inverse: true }]
                }
            })
            .collect();
        let relators = (0..ss.sigma2().len())
            .map(|c| {
                let f = ss.faces2(c);
                let mut w = edge_words[f[0]].clone();
                w.extend_from_slice(&edge_words[f[2]]);
                w.extend(word_inverse(&edge_words[f[1]]));
                free_reduce(&w)
            })
            .collect();
        let edge_lookup = s1.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        Ok(Pi1 { presentation: Presentation { generators, relators }, tree, edge_words, edge_lookup })
    }

    pub fn base(&self) -> Point {
        self.tree.root()
    }

    pub fn edge_word(&self, i: usize) -> &[Letter] {
        &self.edge_words[i]
    }

    pub fn path_to_word(&self, p: &Path) -> Word {
        let mut w = Vec::new();
        for b in p.steps() {
            w.extend_from_slice(&self.word_of(b));
        }
        free_reduce(&w)
    }

    fn word_of(&self, b: &Simplex1) -> Word {
        self.edge_words[self.edge_lookup[b]].clone()
    }

    pub fn abelianization(&self) -> Abelianization {
        self.presentation.abelianization()
    }

    /// Repeatedly removes a generator occurring exactly once in some
    /// relator, then drops trivial and duplicate relators.
    fn simplify(mut self) -> Self {
        loop {
            let mut rels: Vec<Word> =
                self.presentation.relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
            rels.sort();
            rels.dedup();
            self.presentation.relators = rels;
            let mut found = None;
            'search: for (ri, r) in self.presentation.relators.iter().enumerate() {
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for l in r {
                    *counts.entry(l.gen).or_default() += 1;
                }
                for (&g, &n) in &counts {
                    if n == 1 {
                        found = Some((ri, g));
                        break 'search;
                    }
                }
            }
            let Some((ri, g)) = found else { break };
            let r = self.presentation.relators.remove(ri);
            let pos = r.iter().position(|l| l.gen == g).unwrap();
            // r = A x^e B = 1  =>  x^e = A⁻¹ B⁻¹
            let a = &r[..pos];
            let b = &r[pos + 1..];
            let mut value = word_inverse(a);
            value.extend(word_inverse(b));
            if r[pos].inverse {
                value = word_inverse(&value);
            }
            let substitute = |w: &Word| -> Word {
                let mut out = Vec::with_capacity(w.len());
                for &l in w {
                    if l.gen == g {
                        if l.inverse {
                            out.extend(word_inverse(&value));
                        } else {
                            out.extend_from_slice(&value);
                        }
                    } else {
                        out.push(l);
                    }
                }
                free_reduce(&out)
            };
            self.presentation.relators = self.presentation.relators.iter().map(substitute).collect();
            self.edge_words = self.edge_words.iter().map(substitute).collect();
            // renumber generators above g
            let shift = |w: &Word| -> Word {
                w.iter().map(|l| Letter { gen: if l.gen > g { l.gen - 1 } else { l.gen }, inverse: l.inverse }).collect()
            };
            self.presentation.relators = self.presentation.relators.iter().map(shift).collect();
            self.edge_words = self.edge_words.iter().map(shift).collect();
            self.presentation.generators.remove(g);
        }
        self
    }
}

/// Number of homomorphisms from the presented group to `group`, up to
/// simultaneous conjugation.
pub fn count_hom_classes(pres: &Presentation, group: &FiniteGroup, limit: u64) -> Result<u64> {
    let n = pres.generators.len();
    let space = (group.order() as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if space > limit {
        return Err(Error::SearchLimitExceeded(format!(
            "{} assignments of {n} generators exceed the limit {limit}",
            space
        )));
    }
    // relators checked as soon as their largest generator is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ri, r) in pres.relators.iter().enumerate() {
        if let Some(m) = r.iter().map(|l| l.gen).max() {
            due[m].push(ri);
        }
    }
    let mut canon: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut values = vec![Elem::E; n];
    fn rec(
        k: usize,
        pres: &Presentation,
        group: &FiniteGroup,
        due: &[Vec<usize>],
        values: &mut Vec<Elem>,
        canon: &mut BTreeSet<Vec<Elem>>,
    ) {
        if k == values.len() {
            let best = group
                .elements()
                .map(|h| values.iter().map(|&x| group.conj(h, x)).collect::<Vec<_>>())
                .min()
                .expect("group is nonempty");
            canon.insert(best);
            return;
        }
        for x in group.elements() {
            values[k] = x;
            if due[k].iter().all(|&ri| pres.evaluate(group, values, &pres.relators[ri]) == Elem::E) {
                rec(k + 1, pres, group, due, values, canon);
            }
        }
        values[k] = Elem::E;
    }
    rec(0, pres, group, &due, &mut values, &mut canon);
    Ok(canon.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PosetKind;

    fn ss(kind: PosetKind, n: usize) -> SimplicialSet {
        SimplicialSet::new(Poset::generate(kind, n).unwrap())
    }

    fn b(ss: &SimplicialSet, s: &str) -> Simplex1 {
        Simplex1::parse(ss.poset(), s).unwrap()
    }

    #[test]
    fn compose_and_reverse() {
        let k = ss(PosetKind::Chain, 2);
        let x = k.poset().point("x1").unwrap();
        let c = Path::constant(x);
        let l = Path::compose(&c, &c).unwrap();
        assert_eq!(l.len(), 2);
        assert!(l.is_loop());
        let p = Path::single(b(&k, "(x2;x2,x1)"));
        let q = Path::single(b(&k, "(x2;x1,x2)"));
        let qp = Path::compose(&q, &p).unwrap();
        assert_eq!(qp.start(), p.start());
        assert_eq!(qp.end(), q.end());
        assert!(Path::compose(&p, &p).is_err());
        assert_eq!(qp.reverse().reverse(), qp);
        assert_eq!(c.reverse(), c);
    }

    #[test]
    fn text_encoding_is_last_step_first() {
        let k = ss(PosetKind::Chain, 2);
        let p = Path::parse(k.poset(), "(x2;x1,x2);(x2;x2,x1)").unwrap();
        assert_eq!(p.steps()[0], b(&k, "(x2;x2,x1)"));
        assert_eq!(p.display(k.poset()).to_string(), "(x2;x1,x2);(x2;x2,x1)");
        assert!(Path::parse(k.poset(), "(x2;x2,x1);(x2;x2,x1)").is_err());
    }

    #[test]
    fn deformations_expand_by_middle_face() {
        let k = ss(PosetKind::Chain, 2);
        let step = b(&k, "(x2;x1,x1)");
        let p = Path::single(step);
        let expected: BTreeSet<Path> = k
            .sigma2()
            .iter()
            .filter(|c| c.faces[1] == step)
            .map(|c| Path::new(vec![c.faces[2], c.faces[0]]).unwrap())
            .collect();
        let got: BTreeSet<Path> = deformations(&k, &p).into_iter().collect();
        assert_eq!(got, expected);
        for q in &got {
            assert_eq!((q.start(), q.end()), (p.start(), p.end()));
        }
    }

    #[test]
    fn homotopy_verdicts() {
        let k = ss(PosetKind::Circle, 2);
        let a1 = k.poset().point("a1").unwrap();
        let winding = Path::parse(k.poset(), "(o2;a1,a2);(o1;a2,a1)").unwrap();
        let trivial = Path::constant(a1);
        assert!(matches!(homotopic(&k, &winding, &trivial, 6, DEFAULT_STATE_LIMIT).unwrap(), Homotopy::No { .. }));
        assert!(matches!(homotopic(&k, &winding, &winding, 1, DEFAULT_STATE_LIMIT).unwrap(), Homotopy::Yes(_)));
        let padded = Path::compose(&winding, &trivial).unwrap();
        let Homotopy::Yes(cert) = homotopic(&k, &padded, &winding, 4, DEFAULT_STATE_LIMIT).unwrap() else {
            panic!("expected a certificate");
        };
        assert!(verify_certificate(&k, &cert));
        assert!(homotopic(&k, &winding, &Path::constant(k.poset().point("o1").unwrap()), 4, 100).is_err());
    }

    #[test]
    fn presentations_of_generated_posets() {
        for n in 1..=3 {
            let k = ss(PosetKind::Chain, n);
            let pi = Pi1::new(&k, k.poset().points().next().unwrap()).unwrap();
            assert!(pi.abelianization().is_trivial(), "chain {n}");
        }
        for n in 2..=3 {
            let k = ss(PosetKind::Circle, n);
            let pi = Pi1::new(&k, k.poset().point("a1").unwrap()).unwrap();
            assert_eq!(pi.abelianization().describe(), "Z", "circle {n}");
            let raw = Pi1::unsimplified(&k, k.poset().point("a1").unwrap()).unwrap();
            assert_eq!(raw.abelianization().describe(), "Z");
        }
    }

    #[test]
    fn hom_class_counts() {
        let k = ss(PosetKind::Circle, 2);
        let pi = Pi1::new(&k, k.poset().point("a1").unwrap()).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(count_hom_classes(&pi.presentation, &FiniteGroup::trivial(), 1000).unwrap(), 1);
        assert_eq!(count_hom_classes(&pi.presentation, &z3, 1000).unwrap(), 3);
        assert_eq!(count_hom_classes(&pi.presentation, &s3, 1000).unwrap(), 3);
        let raw = Pi1::unsimplified(&k, k.poset().point("a1").unwrap()).unwrap();
        assert!(matches!(count_hom_classes(&raw.presentation, &s3, 1000), Err(Error::SearchLimitExceeded(_))));
    }

    #[test]
    fn word_of_reverse_is_inverse() {
        let k = ss(PosetKind::Circle, 2);
        let pi = Pi1::new(&k, k.poset().point("a1").unwrap()).unwrap();
        let p = Path::parse(k.poset(), "(o2;a1,a2);(o1;a2,a1)").unwrap();
        assert_eq!(pi.path_to_word(&p.reverse()), word_inverse(&pi.path_to_word(&p)));
    }
}
