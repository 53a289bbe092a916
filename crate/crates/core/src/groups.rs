//! Finite groups given by Cayley tables, inner automorphisms, the arrow
//! categories 2G and 3G, and homomorphisms.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Index of a group element; the identity is always `Elem(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u16);

impl Elem {
    pub const E: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        Elem(i as u16)
    }
}

pub type Subset = BTreeSet<Elem>;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    symbols: Vec<String>,
    lookup: HashMap<String, Elem>,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    central: Vec<bool>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a Cayley table; `table[i][j]` is the index of
    /// `symbols[i] * symbols[j]`, and `symbols[0]` must be the identity.
    pub fn from_table(name: &str, symbols: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = symbols.len();
        if n == 0 {
            return Err(Error::MalformedTable("no elements".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::MalformedTable("too many elements".into()));
        }
        let mut lookup = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if lookup.insert(s.clone(), Elem(i as u16)).is_some() {
                return Err(Error::MalformedTable(format!("duplicate element `{s}`")));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedTable(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::MalformedTable("entry out of range".into()));
        }
        let flat: Vec<Elem> = table.iter().flatten().map(|&x| Elem(x as u16)).collect();
        let m = |a: usize, b: usize| flat[a * n + b].index();
        if (0..n).any(|a| m(0, a) != a || m(a, 0) != a) {
            return Err(Error::NoIdentity(symbols[0].clone()));
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == 0 && m(b, a) == 0) {
                Some(b) => inverse.push(Elem(b as u16)),
                None => return Err(Error::NoInverse(symbols[a].clone())),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAssociative(
                            symbols[a].clone(),
                            symbols[b].clone(),
                            symbols[c].clone(),
                        ));
                    }
                }
            }
        }
        let central = (0..n).map(|a| (0..n).all(|b| m(a, b) == m(b, a))).collect();
        Ok(FiniteGroup { name: name.to_string(), symbols, lookup, table: flat, inverse, central })
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1).expect("order 1 is valid")
    }

    /// `Z_n` with symbols `0..n-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("cyclic group order must be positive".into()));
        }
        let symbols = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("Z{n}"), symbols, table)
    }

    /// The symmetric group on `n <= 5` letters in cycle notation, with
    /// `(g h)(k) = g(h(k))`. For `n = 3` the elements are
    /// `e (12) (13) (23) (123) (132)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::BadParameter("symmetric group degree must be 1..=5".into()));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permutations(&mut cur, 0, &mut perms);
        let mut named: Vec<(String, Vec<usize>)> = perms.into_iter().map(|p| (cycle_name(&p), p)).collect();
        named.sort_by(|a, b| (a.0 != "e", a.0.len(), &a.0).cmp(&(b.0 != "e", b.0.len(), &b.0)));
        let index: HashMap<Vec<usize>, usize> =
            named.iter().enumerate().map(|(i, (_, p))| (p.clone(), i)).collect();
        let table = named
            .iter()
            .map(|(_, g)| {
                named
                    .iter()
                    .map(|(_, h)| {
                        let gh: Vec<usize> = (0..n).map(|k| g[h[k]]).collect();
                        index[&gh]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(&format!("S{n}"), named.into_iter().map(|(s, _)| s).collect(), table)
    }

    /// Parses the `group` / `elems` / `table` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut symbols: Option<Vec<String>> = None;
        let mut rows: HashMap<String, (usize, Vec<String>)> = HashMap::new();
        let mut in_table = false;
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if in_table {
                let (head, rest) = line
                    .split_once(':')
                    .ok_or_else(|| Error::parse(line_no, "table row must be `<g>: <entries>`"))?;
                let head = head.trim().to_string();
                let entries = rest.split_whitespace().map(str::to_string).collect();
                if rows.insert(head.clone(), (line_no, entries)).is_some() {
                    return Err(Error::MalformedTable(format!("duplicate row for `{head}`")));
                }
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("group") => {
                    name = Some(words.collect::<Vec<_>>().join(" "));
                }
                Some("elems") => {
                    symbols = Some(words.map(str::to_string).collect());
                }
                Some("table") => in_table = true,
                Some(other) => return Err(Error::parse(line_no, format!("unexpected keyword `{other}`"))),
                None => {}
            }
        }
        let name = name.ok_or_else(|| Error::parse(1, "missing `group <name>` line"))?;
        let symbols = symbols.ok_or_else(|| Error::parse(1, "missing `elems` line"))?;
        if !in_table {
            return Err(Error::parse(1, "missing `table` section"));
        }
        let pos: HashMap<&str, usize> = symbols.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if pos.len() != symbols.len() {
            return Err(Error::MalformedTable("duplicate element in `elems`".into()));
        }
        if let Some(extra) = rows.keys().find(|k| !pos.contains_key(k.as_str())) {
            return Err(Error::MalformedTable(format!("row for unknown element `{extra}`")));
        }
        let mut table = Vec::with_capacity(symbols.len());
        for s in &symbols {
            let (line_no, entries) =
                rows.get(s).ok_or_else(|| Error::MalformedTable(format!("missing row for `{s}`")))?;
            if entries.len() != symbols.len() {
                return Err(Error::MalformedTable(format!(
                    "row `{s}` (line {line_no}) has {} entries, expected {}",
                    entries.len(),
                    symbols.len()
                )));
            }
            let row = entries
                .iter()
                .map(|e| {
                    pos.get(e.as_str())
                        .copied()
                        .ok_or_else(|| Error::MalformedTable(format!("unknown entry `{e}` in row `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        FiniteGroup::from_table(&name, symbols, table)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("group {}\nelems {}\ntable\n", self.name, self.symbols.join(" "));
        for a in self.elements() {
            let row: Vec<&str> = self.elements().map(|b| self.symbol(self.mul(a, b))).collect();
            out.push_str(&format!("{}: {}\n", self.symbol(a), row.join(" ")));
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.symbols.len()
    }

    pub fn identity(&self) -> Elem {
        Elem::E
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator {
        (0..self.symbols.len() as u16).map(Elem)
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, g: Elem) -> &str {
        &self.symbols[g.index()]
    }

    pub fn elem(&self, symbol: &str) -> Result<Elem> {
        self.lookup.get(symbol).copied().ok_or_else(|| Error::UnknownElement(symbol.to_string()))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a.index() * self.order() + b.index()]
    }

    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a.index()]
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(Elem::E, |acc, x| self.mul(acc, x))
    }

    /// `g h g⁻¹`
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.central.iter().all(|&c| c)
    }

    pub fn is_central(&self, g: Elem) -> bool {
        self.central[g.index()]
    }

    pub fn center(&self) -> Subset {
        self.elements().filter(|&g| self.is_central(g)).collect()
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        s.contains(&Elem::E) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, self.inv(b)))))
    }

    /// Closure of `s` under products and inverses.
    pub fn subgroup_generated(&self, s: &Subset) -> Subset {
        let mut out: Subset = [Elem::E].into_iter().collect();
        let mut work: Vec<Elem> = vec![Elem::E];
        while let Some(x) = work.pop() {
            for &g in s {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if out.insert(y) {
                        work.push(y);
                    }
                }
            }
        }
        out
    }

    pub fn centralizer(&self, s: &Subset) -> Subset {
        self.elements().filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect()
    }

    /// `g H g⁻¹`
    pub fn conjugate(&self, h: &Subset, g: Elem) -> Subset {
        h.iter().map(|&x| self.conj(g, x)).collect()
    }

    /// The smallest subgroup of `within` containing `s` and normalized by
    /// `within`.
    pub fn normal_closure(&self, s: &Subset, within: &Subset) -> Subset {
        let conjugates: Subset = within.iter().flat_map(|&h| s.iter().map(move |&x| (h, x))).map(|(h, x)| self.conj(h, x)).collect();
        self.subgroup_generated(&conjugates)
    }

    pub fn is_normal_in(&self, n: &Subset, h: &Subset) -> bool {
        h.iter().all(|&g| self.conjugate(n, g) == *n)
    }

    /// The subgroup `s` as a group in its own right, with its inclusion.
    pub fn subgroup_as_group(&self, s: &Subset, name: &str) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_subgroup(s) {
            return Err(Error::PreconditionViolated("subset is not a subgroup".into()));
        }
        let elems: Vec<Elem> = s.iter().copied().collect();
        let pos: HashMap<Elem, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let symbols = elems.iter().map(|&g| self.symbol(g).to_string()).collect();
        let table = elems.iter().map(|&a| elems.iter().map(|&b| pos[&self.mul(a, b)]).collect()).collect();
        let sub = FiniteGroup::from_table(name, symbols, table)?;
        let inclusion = GroupHom::new(sub.clone(), self.clone(), elems)?;
        Ok((sub, inclusion))
    }

    pub fn fmt_subset(&self, s: &Subset) -> String {
        let names: Vec<&str> = s.iter().map(|&g| self.symbol(g)).collect();
        format!("{{{}}}", names.join(", "))
    }

    // --- inner automorphisms ---

    /// `ad(g)`, canonicalized to the smallest element of `g Z(G)`.
    pub fn ad(&self, g: Elem) -> InnerAut {
        let rep = self
            .elements()
            .filter(|&z| self.is_central(z))
            .map(|z| self.mul(g, z))
            .min()
            .expect("center contains the identity");
        InnerAut { rep }
    }

    pub fn iota(&self) -> InnerAut {
        InnerAut { rep: Elem::E }
    }

    pub fn aut_compose(&self, a: InnerAut, b: InnerAut) -> InnerAut {
        self.ad(self.mul(a.rep, b.rep))
    }

    pub fn aut_inv(&self, a: InnerAut) -> InnerAut {
        self.ad(self.inv(a.rep))
    }

    pub fn aut_apply(&self, a: InnerAut, h: Elem) -> Elem {
        self.conj(a.rep, h)
    }

    pub fn fmt_aut(&self, a: InnerAut) -> String {
        format!("ad({})", self.symbol(a.rep))
    }

    // --- 2G and 3G ---

    pub fn compose_2g(&self, x: Arrow2G, y: Arrow2G, law: Law2) -> Result<Arrow2G> {
        match law {
            Law2::Times => Ok(Arrow2G {
                g: self.mul(x.g, self.aut_apply(x.tau, y.g)),
                tau: self.aut_compose(x.tau, y.tau),
            }),
            Law2::Diamond => {
                if self.aut_compose(self.ad(y.g), y.tau) != x.tau {
                    return Err(Error::DiamondUndefined);
                }
                Ok(Arrow2G { g: self.mul(x.g, y.g), tau: y.tau })
            }
        }
    }

    pub fn compose_3g(&self, x: Arrow3G, y: Arrow3G, law: Law3) -> Result<Arrow3G> {
        let g = self.mul(x.g, y.g);
        match law {
            Law3::Times => {
                let gamma = self.aut_compose(
                    self.aut_compose(x.gamma, x.tau),
                    self.aut_compose(y.gamma, self.aut_inv(x.tau)),
                );
                Ok(Arrow3G { g, tau: self.aut_compose(x.tau, y.tau), gamma })
            }
            Law3::Diamond => {
                if x.tau != self.aut_compose(y.gamma, y.tau) {
                    return Err(Error::DiamondUndefined);
                }
                Ok(Arrow3G { g, tau: y.tau, gamma: self.aut_compose(x.gamma, y.gamma) })
            }
            Law3::Dot => {
                if x.tau != y.tau || x.gamma != y.gamma {
                    return Err(Error::DotUndefined);
                }
                Ok(Arrow3G { g, tau: x.tau, gamma: x.gamma })
            }
        }
    }

    pub fn arrow3(&self, g: Elem, tau: InnerAut, gamma: InnerAut) -> Result<Arrow3G> {
        if !self.is_central(g) {
            return Err(Error::NotCentral);
        }
        Ok(Arrow3G { g, tau, gamma })
    }

    /// Every inner automorphism once.
    pub fn inner_auts(&self) -> Vec<InnerAut> {
        let set: BTreeSet<InnerAut> = self.elements().map(|g| self.ad(g)).collect();
        set.into_iter().collect()
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            out.push_str(&(k + 1).to_string());
            k = p[k];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// An inner automorphism, stored by a canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InnerAut {
    rep: Elem,
}

impl InnerAut {
    pub fn representative(&self) -> Elem {
        self.rep
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow2G {
    pub g: Elem,
    pub tau: InnerAut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow3G {
    pub g: Elem,
    pub tau: InnerAut,
    pub gamma: InnerAut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law2 {
    Times,
    Diamond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law3 {
    Times,
    Diamond,
    Dot,
}

impl FromStr for Law2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "times" => Ok(Law2::Times),
            "diamond" => Ok(Law2::Diamond),
            _ => Err(Error::BadParameter(format!("unknown 2G law `{s}`"))),
        }
    }
}

impl FromStr for Law3 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "times" => Ok(Law3::Times),
            "diamond" => Ok(Law3::Diamond),
            "dot" => Ok(Law3::Dot),
            _ => Err(Error::BadParameter(format!("unknown 3G law `{s}`"))),
        }
    }
}

/// A validated homomorphism between finite groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Mismatch(format!(
                "map has {} entries, source has order {}",
                map.len(),
                source.order()
            )));
        }
        if map.iter().any(|g| g.index() >= target.order()) {
            return Err(Error::Mismatch("map value outside target".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                let lhs = map[source.mul(a, b).index()];
                let rhs = target.mul(map[a.index()], map[b.index()]);
                if lhs != rhs {
                    return Err(Error::Mismatch(format!(
                        "not a homomorphism at ({}, {})",
                        source.symbol(a),
                        source.symbol(b)
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), map: g.elements().collect() }
    }

    /// The homomorphism `Z_n -> target` sending `1` to `g`.
    pub fn from_cyclic(n: usize, target: &FiniteGroup, g: Elem) -> Result<Self> {
        let source = FiniteGroup::cyclic(n)?;
        let mut map = Vec::with_capacity(n);
        let mut x = Elem::E;
        for _ in 0..n {
            map.push(x);
            x = target.mul(x, g);
        }
        GroupHom::new(source, target.clone(), map)
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, g: Elem) -> Elem {
        self.map[g.index()]
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<Elem> = self.map.iter().copied().collect();
        set.len() == self.map.len()
    }

    pub fn image(&self) -> Subset {
        self.map.iter().copied().collect()
    }
}

/// `γ ∘ ρ`.
pub fn hom_compose(gamma: &GroupHom, rho: &GroupHom) -> Result<GroupHom> {
    if rho.target != gamma.source {
        return Err(Error::Mismatch("target of the inner map differs from source of the outer".into()));
    }
    let map = rho.map.iter().map(|&x| gamma.apply(x)).collect();
    GroupHom::new(rho.source.clone(), gamma.target.clone(), map)
}
