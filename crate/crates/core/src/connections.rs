//! Connections, curvature, induced cocycles, central connections, holonomy
//! and reduction to the holonomy group.

use rand::Rng;

use crate::cochains::{Cochain1, Cochain2, Context};
use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup, Subset};
use crate::paths::{Path, SpanningTree};
use crate::poset::Point;
use crate::search::Solver;
use crate::simplicial::Simplex1;

/// A nonflat connection together with the 2-simplex where its curvature is
/// nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nonflat {
    pub connection: Cochain1,
    /// Index in Σ₂ of a 2-simplex `c` with `w_u(c) ≠ e`.
    pub witness: usize,
}

/// `u = z_u · χ_u` for a central connection `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralDecomposition {
    pub cocycle: Cochain1,
    pub central_part: Cochain1,
}

/// Output of the reduction of a connection to its holonomy group.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub holonomy: Subset,
    /// The holonomy group as a group in its own right.
    pub subgroup: FiniteGroup,
    /// The reduced connection, valued in the holonomy group.
    pub reduced: Cochain1,
    /// The reduced connection with values re-indexed in `subgroup`.
    pub reduced_in_subgroup: Cochain1,
    /// Morphism from the reduced connection to the original one.
    pub morphism: Vec<Elem>,
}

impl Context {
    /// The first failure of the defining properties, if any.
    pub fn connection_violation(&self, u: &Cochain1) -> Option<String> {
        let g = self.group();
        let ss = self.ss();
        for i in 0..ss.sigma1().len() {
            if u.get(ss.reverse_index(i)) != g.inv(u.get(i)) {
                return Some(format!(
                    "value on the reverse of {} is not the inverse",
                    ss.sigma1()[i].display(self.poset())
                ));
            }
        }
        for c in 0..ss.sigma2().len() {
            if ss.is_inflating2(c) && self.w(u, c) != Elem::E {
                return Some(format!(
                    "cocycle identity fails on the inflating 2-simplex {}",
                    ss.sigma2()[c].display(self.poset())
                ));
            }
        }
        None
    }

    pub fn is_connection(&self, u: &Cochain1) -> bool {
        self.connection_violation(u).is_none()
    }

    fn require_connection(&self, u: &Cochain1) -> Result<()> {
        match self.connection_violation(u) {
            Some(msg) => Err(Error::NotAConnection(msg)),
            None => Ok(()),
        }
    }

    /// `W_u = du`, with `τ_b = ad(u(b))` and `v = w_u`.
    pub fn curvature(&self, u: &Cochain1) -> Result<Cochain2> {
        self.require_connection(u)?;
        Ok(self.coboundary1(u))
    }

    pub fn is_flat(&self, u: &Cochain1) -> Result<bool> {
        self.require_connection(u)?;
        Ok(self.is_cocycle1(u))
    }

    /// First 2-simplex with nontrivial curvature.
    pub fn curvature_witness(&self, u: &Cochain1) -> Option<usize> {
        self.cocycle_violation(u)
    }

    /// `z_{a₁,a}(o) = u(o;o,a₁)⁻¹ u(o;o,a)` for `a, a₁ ≤ o`.
    pub fn transition(&self, u: &Cochain1, o: Point, a1: Point, a: Point) -> Result<Elem> {
        let p = self.poset();
        if !p.leq(a1, o) || !p.leq(a, o) {
            return Err(Error::PreconditionViolated("transition arguments must lie below the support".into()));
        }
        let g = self.group();
        let x = self.value(u, &Simplex1::new(o, o, a1))?;
        let y = self.value(u, &Simplex1::new(o, o, a))?;
        Ok(g.mul(g.inv(x), y))
    }

    /// The unique cocycle agreeing with `u` on inflating 1-simplices:
    /// `z(b) = z_{∂₀b,∂₁b}(|b|)`.
    pub fn induced_cocycle(&self, u: &Cochain1) -> Result<Cochain1> {
        self.require_connection(u)?;
        let values = self
            .ss()
            .sigma1()
            .iter()
            .map(|b| self.transition(u, b.support, b.face0, b.face1))
            .collect::<Result<Vec<_>>>()?;
        self.cochain1(values)
    }

    /// `v(z)(b) = v(b̄)⁻¹ z(b) v(b)`.
    pub fn construct_from_cochain(&self, v: &Cochain1, z: &Cochain1) -> Result<Cochain1> {
        let ss = self.ss();
        let g = self.group();
        for i in 0..ss.sigma1().len() {
            let r = ss.reverse_index(i);
            if (ss.is_inflating1(i) || ss.is_inflating1(r)) && v.get(i) != Elem::E {
                return Err(Error::PreconditionViolated(format!(
                    "v is not neutral on {}",
                    ss.sigma1()[i].display(self.poset())
                )));
            }
        }
        if !self.is_cocycle1(z) {
            return Err(Error::PreconditionViolated("z is not a 1-cocycle".into()));
        }
        let values = (0..ss.sigma1().len())
            .map(|i| g.mul(g.mul(g.inv(v.get(ss.reverse_index(i))), z.get(i)), v.get(i)))
            .collect();
        self.cochain1(values)
    }

    /// Indices `i < reverse(i)` of 1-simplices with both orientations
    /// noninflating.
    pub fn doubly_noninflating(&self) -> Vec<usize> {
        let ss = self.ss();
        (0..ss.sigma1().len())
            .filter(|&i| {
                let r = ss.reverse_index(i);
                i < r && !ss.is_inflating1(i) && !ss.is_inflating1(r)
            })
            .collect()
    }

    /// A connection in `U¹(K, z)` that is not flat, built from the template
    /// with `g(b) = z(b)⁻¹`, `g(b̄) = g z(b)⁻¹` and `e` elsewhere.
    pub fn construct_nonflat(&self, z: &Cochain1, b: &Simplex1, g: Elem) -> Result<Nonflat> {
        let grp = self.group();
        if grp.order() == 1 {
            return Err(Error::TrivialGroup);
        }
        if self.doubly_noninflating().is_empty() {
            return Err(Error::NoSuchSimplex);
        }
        if g == Elem::E {
            return Err(Error::BadParameter("the twisting element must differ from the identity".into()));
        }
        let i = self.edge_index(b)?;
        let ss = self.ss();
        let r = ss.reverse_index(i);
        if ss.is_inflating1(i) || ss.is_inflating1(r) {
            return Err(Error::PreconditionViolated(format!(
                "{} or its reverse is inflating",
                b.display(self.poset())
            )));
        }
        let mut v = vec![Elem::E; ss.sigma1().len()];
        v[i] = grp.inv(z.get(i));
        v[r] = grp.mul(g, grp.inv(z.get(i)));
        let connection = self.construct_from_cochain(&self.cochain1(v)?, z)?;
        let witness = ss.index2(&ss.filler(b)).expect("filler is a 2-simplex");
        debug_assert_ne!(self.w(&connection, witness), Elem::E);
        Ok(Nonflat { connection, witness })
    }

    /// Some doubly-noninflating 1-simplex, for callers without a preference.
    pub fn default_nonflat_edge(&self) -> Result<Simplex1> {
        self.doubly_noninflating().first().map(|&i| self.edge(i)).ok_or(Error::NoSuchSimplex)
    }

    // --- central connections ---

    pub fn is_central(&self, u: &Cochain1) -> Result<bool> {
        self.require_connection(u)?;
        Ok((0..self.ss().sigma2().len()).all(|c| self.group().is_central(self.w(u, c))))
    }

    /// `u = z_u χ_u` with `z_u` the induced cocycle and
    /// `χ_u(b) = z_u(b)⁻¹ u(b) = w_u(c_b)⁻¹`.
    pub fn central_decompose(&self, u: &Cochain1) -> Result<CentralDecomposition> {
        if !self.is_central(u)? {
            return Err(Error::NotCentral);
        }
        let g = self.group();
        let z = self.induced_cocycle(u)?;
        let chi = (0..u.len()).map(|i| g.mul(g.inv(z.get(i)), u.get(i))).collect();
        Ok(CentralDecomposition { cocycle: z, central_part: self.cochain1(chi)? })
    }

    /// `(u ⋆ u₁)(b) = u(b) z(b)⁻¹ u₁(b)` for central connections inducing
    /// the same cocycle `z`.
    pub fn star_compose(&self, u: &Cochain1, u1: &Cochain1) -> Result<Cochain1> {
        if !self.is_central(u)? || !self.is_central(u1)? {
            return Err(Error::NotCentral);
        }
        let z = self.induced_cocycle(u)?;
        if self.induced_cocycle(u1)? != z {
            return Err(Error::MixedCocycles);
        }
        let g = self.group();
        let values = (0..u.len()).map(|i| g.mul(g.mul(u.get(i), g.inv(z.get(i))), u1.get(i))).collect();
        self.cochain1(values)
    }

    /// The ⋆-inverse `b ↦ z(b) χ_u(b)⁻¹`.
    pub fn star_inverse(&self, u: &Cochain1) -> Result<Cochain1> {
        let d = self.central_decompose(u)?;
        let g = self.group();
        let values = (0..u.len()).map(|i| g.mul(d.cocycle.get(i), g.inv(d.central_part.get(i)))).collect();
        self.cochain1(values)
    }

    // --- holonomy ---

    /// `f_a = u(t_a)` along the tree rooted at the base.
    pub fn tree_values(&self, u: &Cochain1, tree: &SpanningTree) -> Vec<Elem> {
        let g = self.group();
        let mut f = vec![Elem::E; self.poset().len()];
        for &a in &tree.order()[1..] {
            let i = tree.parent_edge(a).expect("non-root vertices have a parent edge");
            f[a.index()] = g.mul(u.get(i), f[self.edge(i).face1.index()]);
        }
        f
    }

    /// Generated by `u(t̄_{∂₀b} * b * t_{∂₁b})` over all 1-simplices.
    pub fn holonomy(&self, u: &Cochain1, a0: Point) -> Result<Subset> {
        self.require_connection(u)?;
        let tree = SpanningTree::new(self.ss(), a0)?;
        let f = self.tree_values(u, &tree);
        let g = self.group();
        let gens: Subset = self
            .ss()
            .sigma1()
            .iter()
            .enumerate()
            .map(|(i, b)| g.mul(g.mul(g.inv(f[b.face0.index()]), u.get(i)), f[b.face1.index()]))
            .collect();
        Ok(g.subgroup_generated(&gens))
    }

    /// Normal closure in the holonomy group of the tree-based boundary loops
    /// of all 2-simplices.
    pub fn restricted_holonomy(&self, u: &Cochain1, a0: Point) -> Result<Subset> {
        let h = self.holonomy(u, a0)?;
        let tree = SpanningTree::new(self.ss(), a0)?;
        let f = self.tree_values(u, &tree);
        let g = self.group();
        let ss = self.ss();
        let loops: Subset = (0..ss.sigma2().len())
            .map(|c| {
                let faces = ss.faces2(c);
                let v0 = ss.sigma1()[faces[1]].face1;
                let inner = g.conj(g.inv(u.get(faces[1])), self.w(u, c));
                g.conj(g.inv(f[v0.index()]), inner)
            })
            .collect();
        Ok(g.normal_closure(&loops, &h))
    }

    /// `u₁(b) = u(p̄_{∂₀b} * b * p_{∂₁b})` with tree paths `p_a`, and the
    /// morphism `f_a = u(p_a)` from `u₁` to `u`.
    pub fn ambrose_singer_reduce(&self, u: &Cochain1, a0: Point) -> Result<Reduction> {
        let holonomy = self.holonomy(u, a0)?;
        let tree = SpanningTree::new(self.ss(), a0)?;
        let f = self.tree_values(u, &tree);
        let reduced = self.transport(u, &f);
        if !reduced.values().iter().all(|x| holonomy.contains(x)) {
            return Err(Error::Mismatch("reduced connection leaves the holonomy group".into()));
        }
        if !self.is_connection(&reduced) || !self.is_morphism(&f, &reduced, u) {
            return Err(Error::Mismatch("reduction failed verification".into()));
        }
        let (subgroup, inclusion) = self.group().subgroup_as_group(&holonomy, "H")?;
        let back: std::collections::HashMap<Elem, Elem> =
            subgroup.elements().map(|h| (inclusion.apply(h), h)).collect();
        let reduced_in_subgroup = Cochain1::from_values(reduced.values().iter().map(|x| back[x]).collect());
        Ok(Reduction { holonomy, subgroup, reduced, reduced_in_subgroup, morphism: f })
    }

    /// `g = u(p)` for the tree path `p` from `a0` to `a1`, verified to
    /// satisfy `g H(a0) g⁻¹ = H(a1)`.
    pub fn holonomy_conjugacy_check(&self, u: &Cochain1, a0: Point, a1: Point) -> Result<Elem> {
        let tree = SpanningTree::new(self.ss(), a0)?;
        let p: Path = tree.path_to(self.ss(), a1);
        let g = self.extend_to_path(u, &p)?;
        let h0 = self.holonomy(u, a0)?;
        let h1 = self.holonomy(u, a1)?;
        if self.group().conjugate(&h0, g) != h1 {
            return Err(Error::Mismatch("holonomy groups are not conjugate by the path value".into()));
        }
        Ok(g)
    }

    // --- enumeration and sampling ---

    pub fn enumerate_connections(&self, limit: u64) -> Result<Vec<Cochain1>> {
        let ss = self.ss();
        let mut s = Solver::new(self.group(), ss.sigma1().len());
        for c in 0..ss.sigma2().len() {
            if ss.is_inflating2(c) {
                let f = ss.faces2(c);
                s.product(f[0], f[2], f[1]);
            }
        }
        for i in 0..ss.sigma1().len() {
            let r = ss.reverse_index(i);
            if i <= r {
                s.inverse(i, r);
            }
        }
        let mut out = Vec::new();
        s.solve(limit, |v| {
            out.push(Cochain1::from_values(v.to_vec()));
            true
        })?;
        Ok(out)
    }

    /// A uniformly random connection inducing a uniformly chosen cocycle
    /// from `cocycles`.
    pub fn random_connection(&self, cocycles: &[Cochain1], rng: &mut impl Rng) -> Cochain1 {
        let g = self.group();
        let z = &cocycles[rng.gen_range(0..cocycles.len())];
        let mut values = z.values().to_vec();
        for i in self.doubly_noninflating() {
            let x = Elem::from_index(rng.gen_range(0..g.order()));
            values[i] = x;
            values[self.ss().reverse_index(i)] = g.inv(x);
        }
        Cochain1::from_values(values)
    }
}
