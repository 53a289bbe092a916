//! Finite posets: construction from generating pairs, order-theoretic
//! predicates, the fundamental covering and a few standard generators.
//!
//! Elements are kept sorted by identifier and addressed by [`Point`]
//! indices into that order, so every enumeration built on top of a poset is
//! reproducible.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An element of a poset, as an index into its sorted identifier list.
///
/// Points double as 0-simplices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub(crate) u32);

impl Point {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Point(i as u32)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    name: String,
    ids: Vec<String>,
    lookup: HashMap<String, Point>,
    // leq[i * n + j] is true iff ids[i] <= ids[j]
    leq: Vec<bool>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("name", &self.name)
            .field("elements", &self.ids)
            .field("relations", &self.relation_pairs())
            .finish()
    }
}

/// An upward closed set of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenSet {
    members: BTreeSet<Point>,
}

impl OpenSet {
    pub fn members(&self) -> impl Iterator<Item = Point> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.members.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetKind {
    Chain,
    Vee,
    Circle,
}

impl std::str::FromStr for PosetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(PosetKind::Chain),
            "vee" => Ok(PosetKind::Vee),
            "circle" => Ok(PosetKind::Circle),
            other => Err(Error::BadParameter(format!("unknown poset kind `{other}`"))),
        }
    }
}

impl Poset {
    /// Builds the poset whose order is the reflexive-transitive closure of
    /// `relations` (pairs `(lower, upper)`).
    pub fn build<S: AsRef<str>>(name: &str, elements: &[S], relations: &[(S, S)]) -> Result<Self> {
        let mut ids: Vec<String> = Vec::with_capacity(elements.len());
        let mut seen = BTreeSet::new();
        for e in elements {
            let e = e.as_ref();
            if !seen.insert(e.to_string()) {
                return Err(Error::DuplicateElement(e.to_string()));
            }
            ids.push(e.to_string());
        }
        ids.sort();
        let lookup: HashMap<String, Point> =
            ids.iter().enumerate().map(|(i, s)| (s.clone(), Point::from_index(i))).collect();
        let n = ids.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in relations {
            let lo = lookup
                .get(lo.as_ref())
                .ok_or_else(|| Error::UnknownElement(lo.as_ref().to_string()))?;
            let hi = lookup
                .get(hi.as_ref())
                .ok_or_else(|| Error::UnknownElement(hi.as_ref().to_string()))?;
            leq[lo.index() * n + hi.index()] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if !leq[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::AntisymmetryViolation(ids[i].clone(), ids[j].clone()));
                }
            }
        }
        Ok(Poset { name: name.to_string(), ids, lookup, leq })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn points(&self) -> impl DoubleEndedIterator<Item = Point> + ExactSizeIterator {
        (0..self.ids.len()).map(Point::from_index)
    }

    pub fn id(&self, p: Point) -> &str {
        &self.ids[p.index()]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn point(&self, id: &str) -> Result<Point> {
        self.lookup.get(id).copied().ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn leq(&self, a: Point, b: Point) -> bool {
        self.leq[a.index() * self.ids.len() + b.index()]
    }

    pub fn comparable(&self, a: Point, b: Point) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// All pairs `(a, b)` with `a <= b`, reflexive ones included.
    pub fn relation_pairs(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for a in self.points() {
            for b in self.points() {
                if self.leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between them.
    pub fn cover_pairs(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for a in self.points() {
            for b in self.points() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = self
                    .points()
                    .any(|m| m != a && m != b && self.leq(a, m) && self.leq(m, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The down-set `{x | x <= a}`, sorted.
    pub fn down(&self, a: Point) -> Vec<Point> {
        self.points().filter(|&x| self.leq(x, a)).collect()
    }

    pub fn is_directed(&self) -> bool {
        self.points().all(|a| {
            self.points()
                .all(|b| self.points().any(|c| self.leq(a, c) && self.leq(b, c)))
        })
    }

    pub fn is_totally_ordered(&self) -> bool {
        self.points().all(|a| self.points().all(|b| self.comparable(a, b)))
    }

    /// Connectivity of the comparability graph. The empty poset counts as
    /// connected.
    pub fn is_pathwise_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([Point(0)]);
        seen[0] = true;
        while let Some(a) = queue.pop_front() {
            for b in self.points() {
                if !seen[b.index()] && self.comparable(a, b) {
                    seen[b.index()] = true;
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `U_a = {x | a <= x}`.
    pub fn fundamental_open(&self, a: Point) -> OpenSet {
        OpenSet { members: self.points().filter(|&x| self.leq(a, x)).collect() }
    }

    pub fn fundamental_open_by_id(&self, id: &str) -> Result<OpenSet> {
        Ok(self.fundamental_open(self.point(id)?))
    }

    pub fn is_open(&self, set: &OpenSet) -> bool {
        set.members().all(|x| self.points().all(|y| !self.leq(x, y) || set.contains(y)))
    }

    pub fn generate(kind: PosetKind, n: usize) -> Result<Self> {
        match kind {
            PosetKind::Chain => {
                if n < 1 {
                    return Err(Error::BadParameter("chain needs n >= 1".into()));
                }
                let elems: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
                let rels: Vec<(String, String)> =
                    (1..n).map(|i| (format!("x{i}"), format!("x{}", i + 1))).collect();
                Poset::build(&format!("chain{n}"), &elems, &rels)
            }
            PosetKind::Vee => {
                if n < 1 {
                    return Err(Error::BadParameter("vee needs n >= 1".into()));
                }
                let mut elems: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
                elems.push("o".into());
                let rels: Vec<(String, String)> =
                    (1..=n).map(|i| (format!("a{i}"), "o".to_string())).collect();
                Poset::build("vee", &elems, &rels)
            }
            PosetKind::Circle => {
                if n < 2 {
                    return Err(Error::BadParameter("circle needs n >= 2".into()));
                }
                let mut elems: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
                elems.extend((1..=n).map(|i| format!("o{i}")));
                let mut rels = Vec::new();
                for i in 1..=n {
                    rels.push((format!("a{i}"), format!("o{i}")));
                    rels.push((format!("a{}", i % n + 1), format!("o{i}")));
                }
                Poset::build(&format!("circle{n}"), &elems, &rels)
            }
        }
    }

    /// Renders the poset in its text format, listing cover pairs as the
    /// generating relations.
    pub fn to_text(&self) -> String {
        let mut s = format!("poset {}\n", self.name);
        s.push_str("elem");
        for id in &self.ids {
            s.push(' ');
            s.push_str(id);
        }
        s.push('\n');
        for (a, b) in self.cover_pairs() {
            s.push_str(&format!("le {} {}\n", self.id(a), self.id(b)));
        }
        s
    }

    /// Parses the line-oriented poset format (`poset`, `elem`, `le` lines,
    /// `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut elems: Vec<String> = Vec::new();
        let mut rels: Vec<(String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().unwrap_or_default();
            match head {
                "poset" => {
                    if name.is_some() {
                        return Err(Error::parse(line, "repeated `poset` header"));
                    }
                    let n = words.next().ok_or_else(|| Error::parse(line, "missing poset name"))?;
                    name = Some(n.to_string());
                }
                "elem" => {
                    if name.is_none() {
                        return Err(Error::parse(line, "`elem` before `poset` header"));
                    }
                    elems.extend(words.map(str::to_string));
                }
                "le" => {
                    let lo = words.next().ok_or_else(|| Error::parse(line, "`le` needs two ids"))?;
                    let hi = words.next().ok_or_else(|| Error::parse(line, "`le` needs two ids"))?;
                    if words.next().is_some() {
                        return Err(Error::parse(line, "`le` takes exactly two ids"));
                    }
                    rels.push((lo.to_string(), hi.to_string()));
                }
                other => return Err(Error::parse(line, format!("unexpected keyword `{other}`"))),
            }
        }
        let name = name.ok_or_else(|| Error::parse(1, "missing `poset` header"))?;
        Poset::build(&name, &elems, &rels)
    }
}
