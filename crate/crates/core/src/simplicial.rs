//! Singular simplices of dimension 0 to 3 over a poset.
//!
//! A singular n-simplex is an order preserving map from the nonempty
//! subsets of `{0, .., n}` into the poset. The public types store the nested
//! normal form (support plus faces); internally the subset-map form is used
//! to enumerate simplices and to apply degeneracies and vertex permutations.
//!
//! Face conventions: `face0` of a 1-simplex is its endpoint, `face1` its
//! starting point, so `(s; x, y)` runs from `y` to `x`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::poset::{Point, Poset};

/// 0-simplices are poset points.
pub type Simplex0 = Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex1 {
    pub support: Point,
    /// `∂₀b`, the endpoint.
    pub face0: Point,
    /// `∂₁b`, the starting point.
    pub face1: Point,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex2 {
    pub support: Point,
    pub faces: [Simplex1; 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex3 {
    pub support: Point,
    pub faces: [Simplex2; 4],
}

/// A simplex of any supported dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Simplex {
    S0(Point),
    S1(Simplex1),
    S2(Simplex2),
    S3(Simplex3),
}

impl Simplex1 {
    pub fn new(support: Point, face0: Point, face1: Point) -> Self {
        Simplex1 { support, face0, face1 }
    }

    /// `σ₀(a)`, the degenerate 1-simplex at `a`.
    pub fn degenerate(a: Point) -> Self {
        Simplex1 { support: a, face0: a, face1: a }
    }

    pub fn start(&self) -> Point {
        self.face1
    }

    pub fn end(&self) -> Point {
        self.face0
    }

    pub fn reverse(&self) -> Self {
        Simplex1 { support: self.support, face0: self.face1, face1: self.face0 }
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        poset.leq(self.face0, self.support) && poset.leq(self.face1, self.support)
    }

    pub fn is_inflating(&self, poset: &Poset) -> bool {
        poset.leq(self.face1, self.face0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.support == self.face0 && self.face0 == self.face1
    }

    pub fn boundary(&self, i: usize) -> Result<Point> {
        match i {
            0 => Ok(self.face0),
            1 => Ok(self.face1),
            _ => Err(Error::IndexOutOfRange { index: i, dim: 1 }),
        }
    }

    pub fn degeneracy(&self, i: usize) -> Result<Simplex2> {
        if i > 1 {
            return Err(Error::IndexOutOfRange { index: i, dim: 1 });
        }
        Ok(Shape::of1(self).degenerate(i).to2())
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        Displayed(move |f: &mut fmt::Formatter<'_>| {
            write!(f, "({};{},{})", poset.id(self.support), poset.id(self.face0), poset.id(self.face1))
        })
    }

    /// Parses the `(<support>;<face0>,<face1>)` encoding.
    pub fn parse(poset: &Poset, text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("bad 1-simplex `{t}`")))?;
        let (support, rest) =
            inner.split_once(';').ok_or_else(|| Error::parse(0, format!("bad 1-simplex `{t}`")))?;
        let (f0, f1) =
            rest.split_once(',').ok_or_else(|| Error::parse(0, format!("bad 1-simplex `{t}`")))?;
        let b = Simplex1::new(poset.point(support.trim())?, poset.point(f0.trim())?, poset.point(f1.trim())?);
        if !b.is_valid(poset) {
            return Err(Error::PreconditionViolated(format!("faces of `{t}` are not below its support")));
        }
        Ok(b)
    }
}

impl Simplex2 {
    /// Vertices `[v0, v1, v2]`; `face2` runs `v0 -> v1`, `face0` runs
    /// `v1 -> v2`, `face1` runs `v0 -> v2`.
    pub fn vertices(&self) -> [Point; 3] {
        [self.faces[1].face1, self.faces[0].face1, self.faces[0].face0]
    }

    pub fn face(&self, i: usize) -> Simplex1 {
        self.faces[i]
    }

    pub fn boundary(&self, i: usize) -> Result<Simplex1> {
        self.faces.get(i).copied().ok_or(Error::IndexOutOfRange { index: i, dim: 2 })
    }

    pub fn degeneracy(&self, i: usize) -> Result<Simplex3> {
        if i > 2 {
            return Err(Error::IndexOutOfRange { index: i, dim: 2 });
        }
        Ok(Shape::of2(self).degenerate(i).to3())
    }

    /// The three face-compatibility constraints.
    pub fn faces_compatible(&self) -> bool {
        let [f0, f1, f2] = self.faces;
        f0.face0 == f1.face0 && f0.face1 == f2.face0 && f1.face1 == f2.face1
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        self.faces_compatible()
            && self.faces.iter().all(|f| f.is_valid(poset) && poset.leq(f.support, self.support))
    }

    pub fn is_inflating(&self, poset: &Poset) -> bool {
        self.faces.iter().all(|f| f.is_inflating(poset))
    }

    /// `c = σ₀(∂₀c)` or `c = σ₁(∂₁c)`.
    pub fn is_degenerate(&self) -> bool {
        (0..2).any(|i| self.faces[i].degeneracy(i).is_ok_and(|d| d == *self))
    }

    /// Applies a vertex permutation: vertex `k` of the result is vertex
    /// `perm[k]` of `self`. The support is unchanged.
    pub fn permute(&self, perm: Perm3) -> Simplex2 {
        Shape::of2(self).permute(&perm.0).to2()
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        Displayed(move |f: &mut fmt::Formatter<'_>| {
            write!(
                f,
                "[{}|{} {} {}]",
                poset.id(self.support),
                self.faces[0].display(poset),
                self.faces[1].display(poset),
                self.faces[2].display(poset)
            )
        })
    }
}

impl Simplex3 {
    pub fn vertices(&self) -> [Point; 4] {
        let [v0, v1, v2] = self.faces[3].vertices();
        [v0, v1, v2, self.faces[0].vertices()[2]]
    }

    pub fn boundary(&self, i: usize) -> Result<Simplex2> {
        self.faces.get(i).copied().ok_or(Error::IndexOutOfRange { index: i, dim: 3 })
    }

    /// The six constraints `∂_i ∂_j = ∂_j ∂_{i+1}` for `i >= j`.
    pub fn faces_compatible(&self) -> bool {
        let c = &self.faces;
        c[0].faces[0] == c[1].faces[0]
            && c[0].faces[1] == c[2].faces[0]
            && c[0].faces[2] == c[3].faces[0]
            && c[1].faces[1] == c[2].faces[1]
            && c[1].faces[2] == c[3].faces[1]
            && c[2].faces[2] == c[3].faces[2]
    }

    pub fn is_valid(&self, poset: &Poset) -> bool {
        self.faces_compatible()
            && self.faces.iter().all(|c| c.is_valid(poset) && poset.leq(c.support, self.support))
    }

    pub fn is_inflating(&self, poset: &Poset) -> bool {
        self.faces.iter().all(|c| c.is_inflating(poset))
    }
}

impl Simplex {
    pub fn dim(&self) -> usize {
        match self {
            Simplex::S0(_) => 0,
            Simplex::S1(_) => 1,
            Simplex::S2(_) => 2,
            Simplex::S3(_) => 3,
        }
    }

    pub fn support(&self) -> Point {
        match self {
            Simplex::S0(a) => *a,
            Simplex::S1(b) => b.support,
            Simplex::S2(c) => c.support,
            Simplex::S3(d) => d.support,
        }
    }

    /// `∂_i`.
    pub fn boundary(&self, i: usize) -> Result<Simplex> {
        match self {
            Simplex::S0(_) => Err(Error::IndexOutOfRange { index: i, dim: 0 }),
            Simplex::S1(b) => b.boundary(i).map(Simplex::S0),
            Simplex::S2(c) => c.boundary(i).map(Simplex::S1),
            Simplex::S3(d) => d.boundary(i).map(Simplex::S2),
        }
    }

    /// `σ_i`, defined for dimensions 0 to 2.
    pub fn degeneracy(&self, i: usize) -> Result<Simplex> {
        match self {
            Simplex::S0(a) if i == 0 => Ok(Simplex::S1(Simplex1::degenerate(*a))),
            Simplex::S0(_) => Err(Error::IndexOutOfRange { index: i, dim: 0 }),
            Simplex::S1(b) => b.degeneracy(i).map(Simplex::S2),
            Simplex::S2(c) => c.degeneracy(i).map(Simplex::S3),
            Simplex::S3(_) => Err(Error::UnsupportedDimension(4)),
        }
    }

    pub fn is_inflating(&self, poset: &Poset) -> bool {
        match self {
            Simplex::S0(_) => true,
            Simplex::S1(b) => b.is_inflating(poset),
            Simplex::S2(c) => c.is_inflating(poset),
            Simplex::S3(d) => d.is_inflating(poset),
        }
    }

    pub fn display<'a>(&'a self, poset: &'a Poset) -> impl fmt::Display + 'a {
        Displayed(move |f: &mut fmt::Formatter<'_>| match self {
            Simplex::S0(a) => write!(f, "{}", poset.id(*a)),
            Simplex::S1(b) => write!(f, "{}", b.display(poset)),
            Simplex::S2(c) => write!(f, "{}", c.display(poset)),
            Simplex::S3(d) => {
                write!(f, "[{}|", poset.id(d.support))?;
                for (i, c) in d.faces.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", c.display(poset))?;
                }
                write!(f, "]")
            }
        })
    }
}

pub fn is_inflating(poset: &Poset, d: &Simplex) -> bool {
    d.is_inflating(poset)
}

pub fn reverse(b: &Simplex1) -> Simplex1 {
    b.reverse()
}

/// A permutation of the three vertices of a 2-simplex, written as the image
/// list `k -> perm[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3(pub [usize; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);
    /// `(01)`
    pub const T01: Perm3 = Perm3([1, 0, 2]);
    /// `(02)`
    pub const T02: Perm3 = Perm3([2, 1, 0]);
    /// `(12)`
    pub const T12: Perm3 = Perm3([0, 2, 1]);
    /// `(02)(01)`, composed left to right: faces become
    /// `(∂₂c, rev ∂₀c, rev ∂₁c)`.
    pub const C02_01: Perm3 = Perm3([2, 0, 1]);
    /// `(12)(01)`: faces become `(rev ∂₁c, rev ∂₂c, ∂₀c)`.
    pub const C12_01: Perm3 = Perm3([1, 2, 0]);

    pub const ALL: [Perm3; 6] =
        [Perm3::IDENTITY, Perm3::C02_01, Perm3::C12_01, Perm3::T01, Perm3::T02, Perm3::T12];

    pub fn is_even(&self) -> bool {
        let p = self.0;
        let mut inv = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 0
    }

    pub fn name(&self) -> &'static str {
        match self.0 {
            [0, 1, 2] => "id",
            [1, 0, 2] => "(01)",
            [2, 1, 0] => "(02)",
            [0, 2, 1] => "(12)",
            [2, 0, 1] => "(02)(01)",
            [1, 2, 0] => "(12)(01)",
            _ => "?",
        }
    }
}

/// The orientation action on 2-simplices.
pub fn permute2(c: &Simplex2, sigma: Perm3) -> Simplex2 {
    c.permute(sigma)
}

// ---------------------------------------------------------------------------
// Subset-map form
// ---------------------------------------------------------------------------

/// Order preserving map from nonempty subsets of `{0..=dim}` (bitmasks) to
/// the poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shape {
    dim: usize,
    vals: [Point; 16],
}

const NIL: Point = Point(u32::MAX);

/// Removes bit `m` from `mask` and shifts higher bits down.
fn squeeze(mask: usize, m: usize) -> usize {
    let low = mask & ((1 << m) - 1);
    let high = mask >> (m + 1);
    low | (high << m)
}

/// Inserts a zero bit at position `i` (the image of the coface map `d_i`).
fn coface(mask: usize, i: usize) -> usize {
    let low = mask & ((1 << i) - 1);
    let high = mask >> i;
    low | (high << (i + 1))
}

/// Image of a subset under the codegeneracy `s_i`: `k <= i -> k`, else `k-1`.
fn codegeneracy(mask: usize, i: usize) -> usize {
    let mut out = 0;
    let mut k = 0;
    let mut m = mask;
    while m != 0 {
        if m & 1 == 1 {
            let t = if k <= i { k } else { k - 1 };
            out |= 1 << t;
        }
        m >>= 1;
        k += 1;
    }
    out
}

impl Shape {
    fn full(&self) -> usize {
        (1 << (self.dim + 1)) - 1
    }

    fn of1(b: &Simplex1) -> Shape {
        let mut vals = [NIL; 16];
        vals[0b01] = b.face1;
        vals[0b10] = b.face0;
        vals[0b11] = b.support;
        Shape { dim: 1, vals }
    }

    fn of2(c: &Simplex2) -> Shape {
        let mut vals = [NIL; 16];
        vals[0b111] = c.support;
        for mask in 1..0b111usize {
            let m = (0..3).find(|&m| mask & (1 << m) == 0).unwrap();
            vals[mask] = Shape::of1(&c.faces[m]).vals[squeeze(mask, m)];
        }
        Shape { dim: 2, vals }
    }

    /// The `i`-th face, `d ∘ d_i`.
    fn face(&self, i: usize) -> Shape {
        let dim = self.dim - 1;
        let mut vals = [NIL; 16];
        for mask in 1..(1usize << (dim + 1)) {
            vals[mask] = self.vals[coface(mask, i)];
        }
        Shape { dim, vals }
    }

    /// `σ_i`, i.e. precomposition with `s_i`.
    fn degenerate(&self, i: usize) -> Shape {
        let dim = self.dim + 1;
        let mut vals = [NIL; 16];
        for mask in 1..(1usize << (dim + 1)) {
            vals[mask] = self.vals[codegeneracy(mask, i)];
        }
        Shape { dim, vals }
    }

    fn permute(&self, perm: &[usize]) -> Shape {
        let mut vals = [NIL; 16];
        for mask in 1..=self.full() {
            let mut image = 0;
            for (k, &p) in perm.iter().enumerate().take(self.dim + 1) {
                if mask & (1 << k) != 0 {
                    image |= 1 << p;
                }
            }
            vals[mask] = self.vals[image];
        }
        Shape { dim: self.dim, vals }
    }

    fn to1(&self) -> Simplex1 {
        debug_assert_eq!(self.dim, 1);
        Simplex1 { support: self.vals[0b11], face0: self.vals[0b10], face1: self.vals[0b01] }
    }

    fn to2(&self) -> Simplex2 {
        debug_assert_eq!(self.dim, 2);
        Simplex2 {
            support: self.vals[0b111],
            faces: [self.face(0).to1(), self.face(1).to1(), self.face(2).to1()],
        }
    }

    fn to3(&self) -> Simplex3 {
        debug_assert_eq!(self.dim, 3);
        Simplex3 {
            support: self.vals[0b1111],
            faces: [self.face(0).to2(), self.face(1).to2(), self.face(2).to2(), self.face(3).to2()],
        }
    }
}

/// Enumerates all order preserving maps on subsets of `{0..=dim}` with the
/// given top value, by assigning subsets in order of increasing size.
fn enumerate_shapes(poset: &Poset, dim: usize, mut emit: impl FnMut(&Shape)) {
    let full = (1usize << (dim + 1)) - 1;
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut shape = Shape { dim, vals: [NIL; 16] };
    fn rec(
        poset: &Poset,
        masks: &[usize],
        pos: usize,
        shape: &mut Shape,
        emit: &mut dyn FnMut(&Shape),
    ) {
        if pos == masks.len() {
            emit(shape);
            return;
        }
        let mask = masks[pos];
        for x in poset.points() {
            let ok = (0..4).all(|k| {
                if mask & (1 << k) == 0 || mask.count_ones() == 1 {
                    return true;
                }
                let sub = mask & !(1 << k);
                poset.leq(shape.vals[sub], x)
            });
            if ok {
                shape.vals[mask] = x;
                rec(poset, masks, pos + 1, shape, emit);
            }
        }
        shape.vals[mask] = NIL;
    }
    rec(poset, &masks, 0, &mut shape, &mut emit);
}

/// All simplices of dimension `n` (0 to 3) in lexicographic order of
/// (support, faces); optionally only the inflating ones.
pub fn enumerate(poset: &Poset, n: usize, inflating_only: bool) -> Result<Vec<Simplex>> {
    let mut out: Vec<Simplex> = match n {
        0 => poset.points().map(Simplex::S0).collect(),
        1 => {
            let mut v = Vec::new();
            enumerate_shapes(poset, 1, |s| v.push(Simplex::S1(s.to1())));
            v
        }
        2 => {
            let mut v = Vec::new();
            enumerate_shapes(poset, 2, |s| v.push(Simplex::S2(s.to2())));
            v
        }
        3 => {
            let mut v = Vec::new();
            enumerate_shapes(poset, 3, |s| v.push(Simplex::S3(s.to3())));
            v
        }
        _ => return Err(Error::UnsupportedDimension(n)),
    };
    if inflating_only {
        out.retain(|d| d.is_inflating(poset));
    }
    out.sort();
    Ok(out)
}

struct Displayed<F>(F);

impl<F: Fn(&mut fmt::Formatter<'_>) -> fmt::Result> fmt::Display for Displayed<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (self.0)(f)
    }
}

// ---------------------------------------------------------------------------
// Indexed simplicial set
// ---------------------------------------------------------------------------

/// A poset together with indexed enumerations of its simplices. Dimensions 2
/// and 3 are built lazily on first use.
pub struct SimplicialSet {
    poset: Poset,
    s1: Vec<Simplex1>,
    index1: HashMap<Simplex1, usize>,
    reverse1: Vec<usize>,
    inflating1: Vec<bool>,
    level2: OnceLock<Level2>,
    level3: OnceLock<Level3>,
}

pub(crate) struct Level2 {
    pub simplices: Vec<Simplex2>,
    pub faces: Vec<[usize; 3]>,
    pub index: HashMap<Simplex2, usize>,
    pub inflating: Vec<bool>,
    /// 2-simplices by the index of `∂₁c`.
    pub by_face1: HashMap<usize, Vec<usize>>,
    /// 2-simplices by `(∂₂c, ∂₀c)`, the traversal order of the pair.
    pub by_pair: HashMap<(usize, usize), Vec<usize>>,
}

pub(crate) struct Level3 {
    pub simplices: Vec<Simplex3>,
    pub faces: Vec<[usize; 4]>,
    /// Index in Σ₁ of `∂₀₁d`.
    pub edge01: Vec<usize>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("poset", &self.poset.name())
            .field("sigma1", &self.s1.len())
            .finish()
    }
}

impl SimplicialSet {
    pub fn new(poset: Poset) -> Self {
        let mut s1 = Vec::new();
        enumerate_shapes(&poset, 1, |s| s1.push(s.to1()));
        s1.sort();
        let index1: HashMap<Simplex1, usize> = s1.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let reverse1 = s1.iter().map(|b| index1[&b.reverse()]).collect();
        let inflating1 = s1.iter().map(|b| b.is_inflating(&poset)).collect();
        SimplicialSet {
            poset,
            s1,
            index1,
            reverse1,
            inflating1,
            level2: OnceLock::new(),
            level3: OnceLock::new(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn sigma0(&self) -> Vec<Point> {
        self.poset.points().collect()
    }

    pub fn sigma1(&self) -> &[Simplex1] {
        &self.s1
    }

    pub fn sigma2(&self) -> &[Simplex2] {
        &self.level2().simplices
    }

    pub fn sigma3(&self) -> &[Simplex3] {
        &self.level3().simplices
    }

    pub fn index1(&self, b: &Simplex1) -> Option<usize> {
        self.index1.get(b).copied()
    }

    pub fn index2(&self, c: &Simplex2) -> Option<usize> {
        self.level2().index.get(c).copied()
    }

    pub(crate) fn reverse_index(&self, i: usize) -> usize {
        self.reverse1[i]
    }

    pub fn is_inflating1(&self, i: usize) -> bool {
        self.inflating1[i]
    }

    pub fn is_inflating2(&self, i: usize) -> bool {
        self.level2().inflating[i]
    }

    pub(crate) fn faces2(&self, i: usize) -> [usize; 3] {
        self.level2().faces[i]
    }

    pub(crate) fn level2(&self) -> &Level2 {
        self.level2.get_or_init(|| {
            let mut simplices = Vec::new();
            enumerate_shapes(&self.poset, 2, |s| simplices.push(s.to2()));
            simplices.sort();
            let faces: Vec<[usize; 3]> = simplices
                .iter()
                .map(|c| [self.index1[&c.faces[0]], self.index1[&c.faces[1]], self.index1[&c.faces[2]]])
                .collect();
            let index = simplices.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let inflating = faces.iter().map(|f| f.iter().all(|&b| self.inflating1[b])).collect();
            let mut by_face1: HashMap<usize, Vec<usize>> = HashMap::new();
            let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for (i, f) in faces.iter().enumerate() {
                by_face1.entry(f[1]).or_default().push(i);
                by_pair.entry((f[2], f[0])).or_default().push(i);
            }
            Level2 { simplices, faces, index, inflating, by_face1, by_pair }
        })
    }

    pub(crate) fn level3(&self) -> &Level3 {
        self.level3.get_or_init(|| {
            let l2 = self.level2();
            let mut simplices = Vec::new();
            enumerate_shapes(&self.poset, 3, |s| simplices.push(s.to3()));
            simplices.sort();
            let faces: Vec<[usize; 4]> = simplices
                .iter()
                .map(|d| {
                    [l2.index[&d.faces[0]], l2.index[&d.faces[1]], l2.index[&d.faces[2]], l2.index[&d.faces[3]]]
                })
                .collect();
            let edge01 = simplices.iter().map(|d| self.index1[&d.faces[1].faces[0]]).collect();
            Level3 { simplices, faces, edge01 }
        })
    }

    pub fn enumerate(&self, n: usize, inflating_only: bool) -> Result<Vec<Simplex>> {
        let mut v: Vec<Simplex> = match n {
            0 => self.poset.points().map(Simplex::S0).collect(),
            1 => self.s1.iter().copied().map(Simplex::S1).collect(),
            2 => self.sigma2().iter().copied().map(Simplex::S2).collect(),
            3 => self.sigma3().iter().copied().map(Simplex::S3).collect(),
            _ => return Err(Error::UnsupportedDimension(n)),
        };
        if inflating_only {
            v.retain(|d| d.is_inflating(&self.poset));
        }
        Ok(v)
    }

    /// The 2-simplex `c_b` with `∂₁c_b = b`, `∂₀c_b = (|b|; ∂₀b, |b|)` and
    /// `∂₂c_b = (|b|; |b|, ∂₁b)`.
    pub fn filler(&self, b: &Simplex1) -> Simplex2 {
        let s = b.support;
        Simplex2 {
            support: s,
            faces: [Simplex1::new(s, b.face0, s), *b, Simplex1::new(s, s, b.face1)],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::PosetKind;

    fn chain(n: usize) -> Poset {
        Poset::generate(PosetKind::Chain, n).unwrap()
    }

    fn circle2() -> Poset {
        Poset::generate(PosetKind::Circle, 2).unwrap()
    }

    fn s1(p: &Poset, s: &str, f0: &str, f1: &str) -> Simplex1 {
        Simplex1::new(p.point(s).unwrap(), p.point(f0).unwrap(), p.point(f1).unwrap())
    }

    #[test]
    fn chain2_edges() {
        let p = chain(2);
        let got: Vec<String> = enumerate(&p, 1, false)
            .unwrap()
            .iter()
            .map(|d| d.display(&p).to_string())
            .collect();
        let mut want = vec!["(x1;x1,x1)", "(x2;x2,x2)", "(x2;x2,x1)", "(x2;x1,x2)", "(x2;x1,x1)"];
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
    }

    #[test]
    fn circle2_edge_count() {
        assert_eq!(enumerate(&circle2(), 1, false).unwrap().len(), 20);
        assert_eq!(enumerate(&circle2(), 0, false).unwrap().len(), 4);
        assert!(matches!(enumerate(&circle2(), 4, false), Err(Error::UnsupportedDimension(4))));
    }

    #[test]
    fn boundaries_and_degeneracies() {
        let p = chain(2);
        let b = s1(&p, "x2", "x1", "x2");
        assert_eq!(b.boundary(0).unwrap(), p.point("x1").unwrap());
        assert!(b.boundary(2).is_err());
        let a = p.point("x1").unwrap();
        let deg = Simplex1::degenerate(a);
        assert_eq!(deg.boundary(0).unwrap(), a);
        assert_eq!(deg.boundary(1).unwrap(), a);
        assert_eq!(Simplex::S0(a).degeneracy(0).unwrap(), Simplex::S1(deg));
        assert!(Simplex::S0(a).degeneracy(1).is_err());
    }

    #[test]
    fn explicit_degeneracy_faces() {
        let p = chain(3);
        for b in enumerate(&p, 1, false).unwrap() {
            let Simplex::S1(b) = b else { unreachable!() };
            let s0 = b.degeneracy(0).unwrap();
            assert_eq!(s0.faces, [b, b, Simplex1::degenerate(b.face1)]);
            let s1 = b.degeneracy(1).unwrap();
            assert_eq!(s1.faces, [Simplex1::degenerate(b.face0), b, b]);
            assert_eq!(s0.support, b.support);
            assert!(b.degeneracy(2).is_err());
        }
    }

    #[test]
    fn explicit_second_degeneracies() {
        let p = circle2();
        let ss = SimplicialSet::new(p);
        for c in ss.sigma2().iter().take(200) {
            let sig = |d: &Simplex1, i| d.degeneracy(i).unwrap();
            assert_eq!(c.degeneracy(0).unwrap().faces, [*c, *c, sig(&c.faces[1], 0), sig(&c.faces[2], 0)]);
            assert_eq!(c.degeneracy(1).unwrap().faces, [sig(&c.faces[0], 0), *c, *c, sig(&c.faces[2], 1)]);
            assert_eq!(c.degeneracy(2).unwrap().faces, [sig(&c.faces[0], 1), sig(&c.faces[1], 1), *c, *c]);
        }
    }

    #[test]
    fn inflating_and_reverse() {
        let p = chain(2);
        assert!(s1(&p, "x2", "x2", "x1").is_inflating(&p));
        assert!(!s1(&p, "x2", "x1", "x2").is_inflating(&p));
        let a = p.point("x1").unwrap();
        assert!(Simplex1::degenerate(a).is_inflating(&p));
        assert_eq!(s1(&p, "x2", "x1", "x2").reverse(), s1(&p, "x2", "x2", "x1"));
        assert_eq!(Simplex1::degenerate(a).reverse(), Simplex1::degenerate(a));
    }

    #[test]
    fn orientation_action_matches_explicit_faces() {
        let ss = SimplicialSet::new(circle2());
        for c in ss.sigma2() {
            let [f0, f1, f2] = c.faces;
            assert_eq!(c.permute(Perm3::IDENTITY), *c);
            assert_eq!(c.permute(Perm3::C02_01).faces, [f2, f0.reverse(), f1.reverse()]);
            assert_eq!(c.permute(Perm3::C12_01).faces, [f1.reverse(), f2.reverse(), f0]);
            assert_eq!(c.permute(Perm3::T01).faces, [f1, f0, f2.reverse()]);
            for even in [Perm3::C02_01, Perm3::C12_01] {
                let thrice = c.permute(even).permute(even).permute(even);
                assert_eq!(thrice, *c);
            }
            for p in Perm3::ALL {
                let q = c.permute(p);
                assert!(q.is_valid(ss.poset()));
                assert_eq!(q.support, c.support);
            }
        }
    }

    #[test]
    fn parse_simplex1() {
        let p = chain(2);
        let b = Simplex1::parse(&p, "(x2;x1,x2)").unwrap();
        assert_eq!(b.display(&p).to_string(), "(x2;x1,x2)");
        assert!(Simplex1::parse(&p, "(x1;x2,x2)").is_err());
        assert!(Simplex1::parse(&p, "x1;x2").is_err());
    }

    #[test]
    fn filler_is_valid() {
        let ss = SimplicialSet::new(circle2());
        for b in ss.sigma1() {
            let c = ss.filler(b);
            assert!(c.is_valid(ss.poset()));
            assert_eq!(c.faces[1], *b);
        }
    }
}
