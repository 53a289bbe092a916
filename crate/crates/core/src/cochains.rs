//! Cochains of degree 0 to 3, the coboundary operator, cocycles, morphisms
//! of 1-cochains and cocycle classification.

use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup, GroupHom, InnerAut};
use crate::paths::{Path, SpanningTree};
use crate::poset::{Point, Poset};
use crate::search::Solver;
use crate::simplicial::{Simplex1, SimplicialSet};

/// Default cap on search nodes for cochain enumeration.
pub const DEFAULT_LIMIT: u64 = 5_000_000;

/// A poset, its simplices and a coefficient group.
pub struct Context {
    ss: SimplicialSet,
    group: FiniteGroup,
    tree: OnceLock<Option<SpanningTree>>,
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Context({}, {})", self.ss.poset().name(), self.group.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cochain0 {
    values: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cochain1 {
    values: Vec<Elem>,
}

/// A 2-cochain in normal form: `w₁(b) = (e, τ_b)`, `w₂(c) = (v(c), τ_{∂₁c})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    tau: Vec<InnerAut>,
    v: Vec<Elem>,
}

/// A 3-cochain in normal form: `τ` on Σ₁ and central values on Σ₃.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    tau: Vec<InnerAut>,
    v: Vec<Elem>,
}

/// A morphism `f` from `source` to `target`:
/// `f_{∂₀b} source(b) = target(b) f_{∂₁b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism1 {
    pub f: Vec<Elem>,
    pub source: Cochain1,
    pub target: Cochain1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleClass {
    pub representative: Cochain1,
    /// Number of tree-normalized cocycles in the class.
    pub members: usize,
}

impl Cochain0 {
    pub fn from_values(values: Vec<Elem>) -> Self {
        Cochain0 { values }
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn at(&self, a: Point) -> Elem {
        self.values[a.index()]
    }
}

impl Cochain1 {
    pub fn from_values(values: Vec<Elem>) -> Self {
        Cochain1 { values }
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Elem {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Cochain2 {
    pub fn tau(&self, b: usize) -> InnerAut {
        self.tau[b]
    }

    pub fn v(&self, c: usize) -> Elem {
        self.v[c]
    }

    pub fn v_values(&self) -> &[Elem] {
        &self.v
    }

    /// Builds without checking the intertwining relation.
    pub fn new_unchecked(tau: Vec<InnerAut>, v: Vec<Elem>) -> Self {
        Cochain2 { tau, v }
    }
}

impl Cochain3 {
    pub fn tau(&self, b: usize) -> InnerAut {
        self.tau[b]
    }

    pub fn v(&self, d: usize) -> Elem {
        self.v[d]
    }

    pub fn v_values(&self) -> &[Elem] {
        &self.v
    }
}

impl Context {
    pub fn new(poset: Poset, group: FiniteGroup) -> Self {
        Context { ss: SimplicialSet::new(poset), group, tree: OnceLock::new() }
    }

    pub fn ss(&self) -> &SimplicialSet {
        &self.ss
    }

    pub fn poset(&self) -> &Poset {
        self.ss.poset()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The spanning tree rooted at the first element.
    pub fn tree(&self) -> Result<&SpanningTree> {
        self.tree
            .get_or_init(|| {
                let root = self.poset().points().next()?;
                SpanningTree::new(&self.ss, root).ok()
            })
            .as_ref()
            .ok_or(Error::NotConnected)
    }

    pub fn base(&self) -> Result<Point> {
        Ok(self.tree()?.root())
    }

    fn g(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn edge(&self, i: usize) -> Simplex1 {
        self.ss.sigma1()[i]
    }

    pub fn edge_index(&self, b: &Simplex1) -> Result<usize> {
        self.ss
            .index1(b)
            .ok_or_else(|| Error::UnknownElement(b.display(self.poset()).to_string()))
    }

    pub fn value(&self, u: &Cochain1, b: &Simplex1) -> Result<Elem> {
        Ok(u.get(self.edge_index(b)?))
    }

    // --- constructors ---

    pub fn trivial0(&self) -> Cochain0 {
        Cochain0 { values: vec![Elem::E; self.poset().len()] }
    }

    /// `ι`, the cochain with constant value `e`.
    pub fn trivial1(&self) -> Cochain1 {
        Cochain1 { values: vec![Elem::E; self.ss.sigma1().len()] }
    }

    pub fn cochain0(&self, values: Vec<Elem>) -> Result<Cochain0> {
        if values.len() != self.poset().len() {
            return Err(Error::Mismatch("0-cochain must have one value per element".into()));
        }
        Ok(Cochain0 { values })
    }

    pub fn cochain1(&self, values: Vec<Elem>) -> Result<Cochain1> {
        if values.len() != self.ss.sigma1().len() {
            return Err(Error::Mismatch("1-cochain must have one value per 1-simplex".into()));
        }
        Ok(Cochain1 { values })
    }

    /// Validates the intertwining relation `ad(v(c)) τ_{∂₁c} = τ_{∂₀c} τ_{∂₂c}`.
    pub fn cochain2(&self, tau: Vec<InnerAut>, v: Vec<Elem>) -> Result<Cochain2> {
        if tau.len() != self.ss.sigma1().len() || v.len() != self.ss.sigma2().len() {
            return Err(Error::Mismatch("2-cochain has wrong shape".into()));
        }
        let g = self.g();
        for c in 0..v.len() {
            let f = self.ss.faces2(c);
            let lhs = g.aut_compose(g.ad(v[c]), tau[f[1]]);
            let rhs = g.aut_compose(tau[f[0]], tau[f[2]]);
            if lhs != rhs {
                return Err(Error::IntertwiningViolation(self.ss.sigma2()[c].display(self.poset()).to_string()));
            }
        }
        Ok(Cochain2 { tau, v })
    }

    pub fn random0(&self, rng: &mut impl Rng) -> Cochain0 {
        let n = self.g().order();
        Cochain0 { values: (0..self.poset().len()).map(|_| Elem::from_index(rng.gen_range(0..n))).collect() }
    }

    pub fn random1(&self, rng: &mut impl Rng) -> Cochain1 {
        let n = self.g().order();
        Cochain1 { values: (0..self.ss.sigma1().len()).map(|_| Elem::from_index(rng.gen_range(0..n))).collect() }
    }

    /// All `|G|^|Σ₁|` 1-cochains, in lexicographic order.
    pub fn all_cochains1(&self, limit: u64) -> Result<Vec<Cochain1>> {
        let n = self.ss.sigma1().len();
        let order = self.g().order() as u64;
        let total = order.checked_pow(n as u32).filter(|&t| t <= limit).ok_or_else(|| {
            Error::SearchLimitExceeded(format!("{order}^{n} 1-cochains exceed the limit {limit}"))
        })?;
        let mut out = Vec::with_capacity(total as usize);
        for mut k in 0..total {
            let mut values = vec![Elem::E; n];
            for slot in values.iter_mut().rev() {
                *slot = Elem::from_index((k % order) as usize);
                k /= order;
            }
            out.push(Cochain1 { values });
        }
        Ok(out)
    }

    // --- coboundaries ---

    /// `(dv)(b) = v(∂₀b) v(∂₁b)⁻¹`
    pub fn coboundary0(&self, v: &Cochain0) -> Cochain1 {
        let g = self.g();
        Cochain1 {
            values: self.ss.sigma1().iter().map(|b| g.mul(v.at(b.face0), g.inv(v.at(b.face1)))).collect(),
        }
    }

    /// `w_u(c) = u(∂₀c) u(∂₂c) u(∂₁c)⁻¹`
    pub fn w(&self, u: &Cochain1, c: usize) -> Elem {
        let g = self.g();
        let f = self.ss.faces2(c);
        g.mul(g.mul(u.get(f[0]), u.get(f[2])), g.inv(u.get(f[1])))
    }

    /// `τ_b = ad(u(b))`, `v = w_u`.
    pub fn coboundary1(&self, u: &Cochain1) -> Cochain2 {
        let g = self.g();
        Cochain2 {
            tau: u.values.iter().map(|&x| g.ad(x)).collect(),
            v: (0..self.ss.sigma2().len()).map(|c| self.w(u, c)).collect(),
        }
    }

    /// `x_w(d) = v(∂₀d) v(∂₂d) (τ_{∂₀₁d}(v(∂₃d)) v(∂₁d))⁻¹`
    pub fn x(&self, w: &Cochain2, d: usize) -> Elem {
        let g = self.g();
        let l3 = self.ss.level3();
        let f = l3.faces[d];
        let lhs = g.mul(w.v[f[0]], w.v[f[2]]);
        let rhs = g.mul(g.aut_apply(w.tau[l3.edge01[d]], w.v[f[3]]), w.v[f[1]]);
        g.mul(lhs, g.inv(rhs))
    }

    pub fn coboundary2(&self, w: &Cochain2) -> Result<Cochain3> {
        let n = self.ss.sigma3().len();
        let mut v = Vec::with_capacity(n);
        for d in 0..n {
            let x = self.x(w, d);
            if !self.g().is_central(x) {
                return Err(Error::CentralityViolation(format!("3-simplex #{d}")));
            }
            v.push(x);
        }
        Ok(Cochain3 { tau: w.tau.clone(), v })
    }

    /// `γ_c = τ_{∂₀c} τ_{∂₂c} τ_{∂₁c}⁻¹`
    pub fn gamma(&self, tau: &[InnerAut], c: usize) -> InnerAut {
        let g = self.g();
        let f = self.ss.faces2(c);
        g.aut_compose(g.aut_compose(tau[f[0]], tau[f[2]]), g.aut_inv(tau[f[1]]))
    }

    // --- cocycle predicates ---

    pub fn is_cocycle0(&self, v: &Cochain0) -> bool {
        self.ss.sigma1().iter().all(|b| v.at(b.face0) == v.at(b.face1))
    }

    pub fn is_cocycle1(&self, z: &Cochain1) -> bool {
        (0..self.ss.sigma2().len()).all(|c| self.w(z, c) == Elem::E)
    }

    pub fn is_cocycle2(&self, w: &Cochain2) -> bool {
        (0..self.ss.sigma3().len()).all(|d| self.x(w, d) == Elem::E)
    }

    /// First 2-simplex where the cocycle identity fails.
    pub fn cocycle_violation(&self, z: &Cochain1) -> Option<usize> {
        (0..self.ss.sigma2().len()).find(|&c| self.w(z, c) != Elem::E)
    }

    // --- paths and morphisms ---

    /// `v(p) = v(bₙ) ⋯ v(b₁)`
    pub fn extend_to_path(&self, v: &Cochain1, p: &Path) -> Result<Elem> {
        let g = self.g();
        let mut acc = Elem::E;
        for b in p.steps() {
            acc = g.mul(self.value(v, b)?, acc);
        }
        Ok(acc)
    }

    pub fn is_morphism(&self, f: &[Elem], source: &Cochain1, target: &Cochain1) -> bool {
        let g = self.g();
        self.ss.sigma1().iter().enumerate().all(|(i, b)| {
            g.mul(f[b.face0.index()], source.get(i)) == g.mul(target.get(i), f[b.face1.index()])
        })
    }

    /// Propagates `f_{∂₀b} = target(b) f_{∂₁b} source(b)⁻¹` along the tree.
    fn propagate(&self, tree: &SpanningTree, base: Elem, source: &Cochain1, target: &Cochain1) -> Vec<Elem> {
        let g = self.g();
        let mut f = vec![Elem::E; self.poset().len()];
        f[tree.root().index()] = base;
        for &a in &tree.order()[1..] {
            let i = tree.parent_edge(a).expect("non-root vertices have a parent edge");
            let b = self.edge(i);
            f[a.index()] = g.mul(g.mul(target.get(i), f[b.face1.index()]), g.inv(source.get(i)));
        }
        f
    }

    /// The first morphism from `source` to `target` in the order of base
    /// values, if any.
    pub fn find_morphism(&self, source: &Cochain1, target: &Cochain1) -> Result<Option<Morphism1>> {
        let tree = self.tree()?;
        for base in self.g().elements() {
            let f = self.propagate(tree, base, source, target);
            if self.is_morphism(&f, source, target) {
                return Ok(Some(Morphism1 { f, source: source.clone(), target: target.clone() }));
            }
        }
        Ok(None)
    }

    /// All morphisms from `source` to `target`.
    pub fn all_morphisms(&self, source: &Cochain1, target: &Cochain1) -> Result<Vec<Vec<Elem>>> {
        let tree = self.tree()?;
        Ok(self
            .g()
            .elements()
            .map(|base| self.propagate(tree, base, source, target))
            .filter(|f| self.is_morphism(f, source, target))
            .collect())
    }

    /// The cochain `b ↦ f_{∂₀b}⁻¹ v(b) f_{∂₁b}`, so that `f` is a morphism
    /// from it to `v`.
    pub fn transport(&self, v: &Cochain1, f: &[Elem]) -> Cochain1 {
        let g = self.g();
        Cochain1 {
            values: self
                .ss
                .sigma1()
                .iter()
                .enumerate()
                .map(|(i, b)| g.mul(g.mul(g.inv(f[b.face0.index()]), v.get(i)), f[b.face1.index()]))
                .collect(),
        }
    }

    /// Defines `f_a = v(t_a)` along tree paths and checks `v = df`.
    pub fn is_path_independent(&self, v: &Cochain1) -> Result<bool> {
        let tree = self.tree()?;
        let g = self.g();
        let f: Vec<Elem> = self
            .poset()
            .points()
            .map(|a| g.product(tree.edges_to(&self.ss, a).iter().rev().map(|&i| v.get(i))))
            .collect();
        Ok(self.coboundary0(&Cochain0 { values: f }) == *v)
    }

    /// The 1-coboundary `z(b) = s(∂₀b) s(∂₁b)⁻¹`; `s` is a global cross
    /// section of it.
    pub fn coboundary_from_assignment(&self, s: &Cochain0) -> Cochain1 {
        self.coboundary0(s)
    }

    /// `b ↦ γ(v(b))`, a cochain with values in the target of `γ`.
    pub fn pushforward(&self, gamma: &GroupHom, v: &Cochain1) -> Result<Cochain1> {
        if gamma.source() != self.g() {
            return Err(Error::Mismatch("homomorphism source is not the coefficient group".into()));
        }
        Ok(Cochain1 { values: v.values.iter().map(|&x| gamma.apply(x)).collect() })
    }

    /// The cocycle of the associated bundle for an action given as a
    /// homomorphism into a permutation group.
    pub fn associated_cocycle(&self, z: &Cochain1, action: &GroupHom) -> Result<Cochain1> {
        if !self.is_cocycle1(z) {
            return Err(Error::PreconditionViolated("input is not a 1-cocycle".into()));
        }
        self.pushforward(action, z)
    }

    // --- enumeration ---

    fn cocycle_solver(&self) -> Solver<'_> {
        let mut s = Solver::new(self.g(), self.ss.sigma1().len());
        for c in 0..self.ss.sigma2().len() {
            let f = self.ss.faces2(c);
            s.product(f[0], f[2], f[1]);
        }
        s
    }

    /// All 1-cocycles, or only those equal to `e` on tree edges.
    pub fn enumerate_cocycles(&self, tree_normalized: bool, limit: u64) -> Result<Vec<Cochain1>> {
        let mut s = self.cocycle_solver();
        if tree_normalized {
            let tree = self.tree()?;
            for i in 0..self.ss.sigma1().len() {
                if tree.is_tree_edge(i) {
                    s.fix(i, Elem::E);
                }
            }
        }
        let mut out = Vec::new();
        s.solve(limit, |v| {
            out.push(Cochain1 { values: v.to_vec() });
            true
        })?;
        Ok(out)
    }

    /// Cocycles agreeing with `u` on every inflating 1-simplex.
    pub fn cocycles_agreeing_on_inflating(&self, u: &Cochain1, limit: u64) -> Result<Vec<Cochain1>> {
        let mut s = self.cocycle_solver();
        for i in 0..self.ss.sigma1().len() {
            if self.ss.is_inflating1(i) {
                s.fix(i, u.get(i));
            }
        }
        let mut out = Vec::new();
        s.solve(limit, |v| {
            out.push(Cochain1 { values: v.to_vec() });
            true
        })?;
        Ok(out)
    }

    /// Equivalence classes of 1-cocycles, one representative each.
    pub fn classify_cocycles(&self, limit: u64) -> Result<Vec<CocycleClass>> {
        let mut classes: Vec<CocycleClass> = Vec::new();
        for z in self.enumerate_cocycles(true, limit)? {
            let mut placed = false;
            for class in classes.iter_mut() {
                if self.find_morphism(&z, &class.representative)?.is_some() {
                    class.members += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(CocycleClass { representative: z, members: 1 });
            }
        }
        Ok(classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PosetKind;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(kind: PosetKind, n: usize, g: FiniteGroup) -> Context {
        Context::new(Poset::generate(kind, n).unwrap(), g)
    }

    #[test]
    fn constant_and_trivial_coboundaries() {
        let k = ctx(PosetKind::Circle, 2, FiniteGroup::symmetric(3).unwrap());
        let g = k.group().elem("(123)").unwrap();
        let v = k.cochain0(vec![g; 4]).unwrap();
        assert_eq!(k.coboundary0(&v), k.trivial1());
        let du = k.coboundary1(&k.trivial1());
        assert!(du.v_values().iter().all(|&x| x == Elem::E));
        assert!((0..k.ss().sigma1().len()).all(|b| du.tau(b) == k.group().iota()));
    }

    #[test]
    fn dd_vanishes_on_random_cochains() {
        let k = ctx(PosetKind::Circle, 2, FiniteGroup::symmetric(3).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let u = k.random1(&mut rng);
            let w = k.coboundary1(&u);
            assert!(k.cochain2(w.tau.clone(), w.v.clone()).is_ok());
            let x = k.coboundary2(&w).unwrap();
            assert!(x.v_values().iter().all(|&e| e == Elem::E));
            let v = k.random0(&mut rng);
            assert!(k.coboundary1(&k.coboundary0(&v)).v_values().iter().all(|&e| e == Elem::E));
        }
    }

    #[test]
    fn zero_cocycles_are_constant() {
        let k = ctx(PosetKind::Chain, 2, FiniteGroup::cyclic(2).unwrap());
        let one = k.group().elem("1").unwrap();
        assert!(!k.is_cocycle0(&k.cochain0(vec![Elem::E, one]).unwrap()));
        assert!(k.is_cocycle0(&k.cochain0(vec![one, one]).unwrap()));
    }

    #[test]
    fn cross_section_hand_value() {
        let k = ctx(PosetKind::Chain, 2, FiniteGroup::symmetric(3).unwrap());
        let g = k.group().elem("(123)").unwrap();
        let s = k.cochain0(vec![Elem::E, g]).unwrap();
        let z = k.coboundary_from_assignment(&s);
        let b = Simplex1::parse(k.poset(), "(x2;x1,x2)").unwrap();
        assert_eq!(k.value(&z, &b).unwrap(), k.group().inv(g));
        assert!(k.is_cocycle1(&z));
        let f = k.find_morphism(&z, &k.trivial1()).unwrap().unwrap();
        assert!(k.is_morphism(&f.f, &z, &k.trivial1()));
    }

    #[test]
    fn classification_counts() {
        for (n, want) in [(2usize, 2usize), (3, 3)] {
            let k = ctx(PosetKind::Circle, 2, FiniteGroup::cyclic(n).unwrap());
            assert_eq!(k.classify_cocycles(DEFAULT_LIMIT).unwrap().len(), want);
        }
        let k = ctx(PosetKind::Circle, 2, FiniteGroup::symmetric(3).unwrap());
        assert_eq!(k.classify_cocycles(DEFAULT_LIMIT).unwrap().len(), 3);
        let k = ctx(PosetKind::Chain, 3, FiniteGroup::symmetric(3).unwrap());
        assert_eq!(k.classify_cocycles(DEFAULT_LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn raw_enumeration_matches_solver() {
        for g in [FiniteGroup::cyclic(2).unwrap(), FiniteGroup::symmetric(3).unwrap()] {
            let k = ctx(PosetKind::Chain, 2, g);
            let raw: Vec<Cochain1> =
                k.all_cochains1(u64::MAX).unwrap().into_iter().filter(|u| k.is_cocycle1(u)).collect();
            assert_eq!(k.enumerate_cocycles(false, DEFAULT_LIMIT).unwrap(), raw);
        }
    }

    #[test]
    fn intertwining_is_enforced() {
        let k = ctx(PosetKind::Chain, 2, FiniteGroup::symmetric(3).unwrap());
        let t = k.group().elem("(12)").unwrap();
        let tau = vec![k.group().iota(); k.ss().sigma1().len()];
        let mut v = vec![Elem::E; k.ss().sigma2().len()];
        v[0] = t;
        assert!(matches!(k.cochain2(tau, v), Err(Error::IntertwiningViolation(_))));
    }
}
