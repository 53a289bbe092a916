//! The acceptance criteria, run against a fixture directory.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::path::Path as FsPath;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochains::{Cochain1, Context, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::format::parse_cochain;
use crate::groups::{Elem, FiniteGroup, Subset};
use crate::paths::{count_hom_classes, verify_certificate, DeformationComponent, Path, Pi1};
use crate::poset::{Point, Poset};
use crate::simplicial::{Perm3, SimplicialSet};

pub const POSET_FIXTURES: [&str; 5] = ["chain2", "chain3", "circle2", "vee", "theta"];
/// Group fixtures with their expected orders.
pub const GROUP_FIXTURES: [(&str, usize); 4] = [("z2", 2), ("z3", 3), ("z4", 4), ("s3", 6)];

const HOMOTOPY_BOUND: usize = 6;
const LOOP_ORACLE_LENGTH: usize = 8;

pub struct Fixtures {
    pub posets: BTreeMap<String, Poset>,
    /// Kept even when invalid so the group check can report it.
    pub groups: BTreeMap<String, Result<FiniteGroup>>,
    /// `circle2 × Z3`, tree-propagated.
    pub winding: Option<Cochain1>,
    /// `theta × S3` with holonomy all of S3.
    pub full_holonomy: Option<Cochain1>,
}

fn read(dir: &FsPath, file: &str) -> Result<String> {
    let path = dir.join(file);
    fs::read_to_string(&path).map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

impl Fixtures {
    /// Reads every fixture. Unreadable files and malformed posets or
    /// cochains are errors; malformed groups are recorded.
    pub fn load(dir: &FsPath) -> Result<Self> {
        let mut posets = BTreeMap::new();
        for name in POSET_FIXTURES {
            posets.insert(name.to_string(), Poset::parse(&read(dir, &format!("{name}.poset"))?)?);
        }
        let mut groups = BTreeMap::new();
        for (name, _) in GROUP_FIXTURES {
            groups.insert(name.to_string(), FiniteGroup::parse(&read(dir, &format!("{name}.group"))?));
        }
        let mut fx = Fixtures { posets, groups, winding: None, full_holonomy: None };
        let winding = read(dir, "winding.cochain")?;
        if let Ok(k) = fx.ctx("circle2", "z3") {
            fx.winding = Some(parse_cochain(&k, &winding)?.cochain);
        }
        let full = read(dir, "theta_full.cochain")?;
        if let Ok(k) = fx.ctx("theta", "s3") {
            fx.full_holonomy = Some(parse_cochain(&k, &full)?.cochain);
        }
        Ok(fx)
    }

    pub fn poset(&self, name: &str) -> std::result::Result<&Poset, String> {
        self.posets.get(name).ok_or_else(|| format!("poset fixture `{name}` missing"))
    }

    pub fn group(&self, name: &str) -> std::result::Result<&FiniteGroup, String> {
        match self.groups.get(name) {
            Some(Ok(g)) => Ok(g),
            Some(Err(e)) => Err(format!("group fixture `{name}` is invalid: {e}")),
            None => Err(format!("group fixture `{name}` missing")),
        }
    }

    pub fn ctx(&self, poset: &str, group: &str) -> std::result::Result<Context, String> {
        Ok(Context::new(self.poset(poset)?.clone(), self.group(group)?.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}: {}", self.id, self.title, self.detail)
    }
}

type Outcome = std::result::Result<String, String>;

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub type Criterion = (&'static str, &'static str, fn(&Fixtures) -> Outcome);

pub const CRITERIA: [Criterion; 13] = [
    ("G", "group-validate", group_validate),
    ("1", "second coboundary vanishes", dd_law),
    ("2", "cocycle classes match homomorphism classes", cocycles_vs_homs),
    ("3", "path independence iff coboundary", path_independence),
    ("4", "totally ordered posets carry only flat connections", totally_ordered_flat),
    ("5", "nonflat connections exist", nonflat_existence),
    ("6", "induced cocycle is unique", induced_uniqueness),
    ("7", "central decomposition round trip", central_round_trip),
    ("8", "Bianchi identity", bianchi),
    ("9", "reduction to the holonomy group", ambrose_singer),
    ("10", "gauge group sizes", gauge_sizes),
    ("11", "curvature symmetries", curvature_symmetries),
    ("12", "cocycles are homotopy invariant", homotopy_invariance),
];

pub fn run(fx: &Fixtures) -> Vec<Verdict> {
    CRITERIA
        .iter()
        .map(|&(id, title, check)| {
            let (passed, detail) = match check(fx) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Verdict { id, title, passed, detail }
        })
        .collect()
}

fn sample_connections(k: &Context, n: usize, seed: u64) -> std::result::Result<Vec<Cochain1>, String> {
    let cocycles = lift(k.enumerate_cocycles(false, DEFAULT_LIMIT))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n).map(|_| k.random_connection(&cocycles, &mut rng)).collect())
}

fn group_validate(fx: &Fixtures) -> Outcome {
    for (name, order) in GROUP_FIXTURES {
        let g = fx.group(name)?;
        ensure(g.order() == order, || format!("`{name}` has order {}, expected {order}", g.order()))?;
    }
    let s3 = fx.group("s3")?;
    ensure(!s3.is_abelian() && s3.center().len() == 1, || "`s3` is not S3".into())?;
    Ok(format!("{} group tables valid", GROUP_FIXTURES.len()))
}

fn dd_law(fx: &Fixtures) -> Outcome {
    let k = fx.ctx("chain2", "z2")?;
    let all = lift(k.all_cochains1(1 << 16))?;
    ensure(all.len() == 32, || format!("expected 32 cochains, found {}", all.len()))?;
    let vanishes = |k: &Context, u: &Cochain1| -> std::result::Result<(), String> {
        let x = lift(k.coboundary2(&k.coboundary1(u)))?;
        ensure(x.v_values().iter().all(|&g| g == Elem::E), || "second coboundary is not e".into())
    };
    for u in &all {
        vanishes(&k, u)?;
    }
    let k = fx.ctx("circle2", "s3")?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let random = 500;
    for _ in 0..random {
        vanishes(&k, &k.random1(&mut rng))?;
    }
    Ok(format!("{} exhaustive on chain2 x Z2, {random} random on circle2 x S3", all.len()))
}

fn cocycles_vs_homs(fx: &Fixtures) -> Outcome {
    let mut report = Vec::new();
    let cases = [
        ("circle2", "z2", Some(2)),
        ("circle2", "z3", Some(3)),
        ("circle2", "s3", Some(3)),
        ("chain2", "z2", Some(1)),
        ("chain2", "z3", Some(1)),
        ("chain2", "s3", Some(1)),
        ("chain3", "z2", Some(1)),
        ("chain3", "s3", Some(1)),
        ("vee", "s3", None),
        ("theta", "z2", None),
    ];
    for (p, g, expected) in cases {
        let k = fx.ctx(p, g)?;
        let classes = lift(k.classify_cocycles(DEFAULT_LIMIT))?.len() as u64;
        let pi = lift(Pi1::new(k.ss(), lift(k.base())?))?;
        let homs = lift(count_hom_classes(&pi.presentation, k.group(), DEFAULT_LIMIT))?;
        ensure(classes == homs, || format!("{p} x {g}: {classes} cocycle classes, {homs} hom classes"))?;
        if let Some(e) = expected {
            ensure(classes == e, || format!("{p} x {g}: {classes} classes, expected {e}"))?;
        }
        report.push(format!("{p}x{g}={classes}"));
    }
    Ok(report.join(" "))
}

/// Values of all paths of length at most `len`, keyed by endpoints.
fn bounded_path_values(k: &Context, u: &Cochain1, len: usize) -> HashMap<(Point, Point), HashSet<Elem>> {
    let g = k.group();
    let edges = k.ss().sigma1();
    let mut out: HashMap<(Point, Point), HashSet<Elem>> = HashMap::new();
    let mut layer: Vec<(Point, Point, Elem)> = k.poset().points().map(|a| (a, a, Elem::E)).collect();
    for _ in 0..len {
        let mut next = Vec::new();
        for &(s, t, x) in &layer {
            for (i, b) in edges.iter().enumerate() {
                if b.face1 == t {
                    let y = g.mul(u.get(i), x);
                    out.entry((s, b.face0)).or_default().insert(y);
                    next.push((s, b.face0, y));
                }
            }
        }
        next.sort_by_key(|&(s, t, x)| (s, t, x));
        next.dedup();
        layer = next;
    }
    out
}

fn path_independence(fx: &Fixtures) -> Outcome {
    let mut report = Vec::new();
    for p in ["chain2", "vee"] {
        let k = fx.ctx(p, "z2")?;
        let coboundaries: HashSet<Cochain1> = {
            let n = k.poset().len();
            (0..1usize << n)
                .map(|m| {
                    let s = (0..n).map(|i| Elem::from_index((m >> i) & 1)).collect();
                    lift(k.cochain0(s)).map(|s| k.coboundary0(&s))
                })
                .collect::<std::result::Result<_, _>>()?
        };
        let all = lift(k.all_cochains1(1 << 16))?;
        let mut independent = 0;
        for v in &all {
            let by_tree = lift(k.is_path_independent(v))?;
            let by_paths = bounded_path_values(&k, v, 3).values().all(|s| s.len() == 1);
            let exact = coboundaries.contains(v);
            ensure(by_tree == exact && by_paths == exact, || {
                format!("{p}: disagreement (tree {by_tree}, paths {by_paths}, coboundary {exact})")
            })?;
            independent += usize::from(exact);
        }
        report.push(format!("{p}: {independent}/{} path independent", all.len()));
    }
    Ok(report.join(", "))
}

fn totally_ordered_flat(fx: &Fixtures) -> Outcome {
    let k = fx.ctx("chain3", "z2")?;
    let conns = lift(k.enumerate_connections(DEFAULT_LIMIT))?;
    let raw: BTreeSet<Cochain1> =
        lift(k.all_cochains1(1 << 16))?.into_iter().filter(|u| k.is_connection(u)).collect();
    ensure(conns.iter().cloned().collect::<BTreeSet<_>>() == raw, || "solver and raw scan disagree".into())?;
    for u in &conns {
        ensure(lift(k.induced_cocycle(u))? == *u && lift(k.is_flat(u))?, || "a connection is not flat".into())?;
    }
    Ok(format!("{} connections on chain3 x Z2, all cocycles", conns.len()))
}

fn nonflat_existence(fx: &Fixtures) -> Outcome {
    let mut report = Vec::new();
    for g in ["z2", "s3"] {
        let k = fx.ctx("circle2", g)?;
        let b = lift(k.default_nonflat_edge())?;
        let mut witness = None;
        let mut n = 0;
        for z in lift(k.enumerate_cocycles(true, DEFAULT_LIMIT))? {
            for t in k.group().elements().skip(1) {
                let nf = lift(k.construct_nonflat(&z, &b, t))?;
                let u = &nf.connection;
                ensure(k.is_connection(u), || "result is not a connection".into())?;
                ensure(k.w(u, nf.witness) != Elem::E, || "witness has trivial curvature".into())?;
                ensure(lift(k.induced_cocycle(u))? == z, || "induced cocycle differs from input".into())?;
                witness.get_or_insert(nf.witness);
                n += 1;
            }
        }
        let c = &k.ss().sigma2()[witness.ok_or("no cocycles")?];
        report.push(format!("circle2 x {}: {n} built, witness {}", k.group().name(), c.display(k.poset())));
    }
    Ok(report.join("; "))
}

fn induced_uniqueness(fx: &Fixtures) -> Outcome {
    let k = fx.ctx("circle2", "z2")?;
    let sample = sample_connections(&k, 200, 6)?;
    for u in &sample {
        ensure(k.is_connection(u), || "sample is not a connection".into())?;
        let agreeing = lift(k.cocycles_agreeing_on_inflating(u, DEFAULT_LIMIT))?;
        ensure(agreeing.len() == 1, || format!("{} cocycles agree on inflating simplices", agreeing.len()))?;
        ensure(agreeing[0] == lift(k.induced_cocycle(u))?, || "scan disagrees with induced cocycle".into())?;
    }
    Ok(format!("{} sampled connections on circle2 x Z2", sample.len()))
}

fn central_round_trip(fx: &Fixtures) -> Outcome {
    let mut central = 0;
    for (g, seed) in [("z2", 7), ("s3", 8)] {
        let k = fx.ctx("circle2", g)?;
        let grp = k.group();
        let cocycles = lift(k.enumerate_cocycles(false, DEFAULT_LIMIT))?;
        let iota = k.trivial1();
        for u in sample_connections(&k, 200, seed)? {
            if !lift(k.is_central(&u))? {
                continue;
            }
            central += 1;
            let d = lift(k.central_decompose(&u))?;
            let rebuilt: Vec<Elem> =
                (0..u.len()).map(|i| grp.mul(d.cocycle.get(i), d.central_part.get(i))).collect();
            ensure(rebuilt == u.values(), || "u differs from z_u χ_u".into())?;
            ensure(d.central_part.values().iter().all(|&x| grp.is_central(x)), || "χ_u leaves the center".into())?;
            ensure(lift(k.induced_cocycle(&d.central_part))? == iota, || "χ_u does not induce ι".into())?;
            let splittings = cocycles
                .iter()
                .filter(|z| {
                    let chi = Cochain1::from_values(
                        (0..u.len()).map(|i| grp.mul(grp.inv(z.get(i)), u.get(i))).collect(),
                    );
                    chi.values().iter().all(|&x| grp.is_central(x))
                        && k.is_connection(&chi)
                        && k.induced_cocycle(&chi).ok() == Some(iota.clone())
                })
                .count();
            ensure(splittings == 1, || format!("{splittings} decompositions"))?;
        }
    }
    let k = fx.ctx("circle2", "z2")?;
    let mut by_cocycle: BTreeMap<Cochain1, Vec<Cochain1>> = BTreeMap::new();
    for u in lift(k.enumerate_connections(DEFAULT_LIMIT))? {
        by_cocycle.entry(lift(k.induced_cocycle(&u))?).or_default().push(u);
    }
    for (z, us) in &by_cocycle {
        let set: BTreeSet<&Cochain1> = us.iter().collect();
        ensure(set.contains(z), || "the cocycle is not in its own fibre".into())?;
        for a in us {
            ensure(lift(k.star_compose(a, z))? == *a, || "z is not a ⋆ unit".into())?;
            let inv = lift(k.star_inverse(a))?;
            ensure(set.contains(&inv) && lift(k.star_compose(a, &inv))? == *z, || "⋆ inverse fails".into())?;
            for b in us {
                let ab = lift(k.star_compose(a, b))?;
                ensure(set.contains(&ab), || "⋆ is not closed".into())?;
                ensure(ab == lift(k.star_compose(b, a))?, || "⋆ is not commutative".into())?;
                for c in us {
                    let l = lift(k.star_compose(&ab, c))?;
                    let r = lift(k.star_compose(a, &lift(k.star_compose(b, c))?))?;
                    ensure(l == r, || "⋆ is not associative".into())?;
                }
            }
        }
    }
    Ok(format!(
        "{central} central samples split uniquely; ⋆ axioms on {} fibres of circle2 x Z2",
        by_cocycle.len()
    ))
}

fn bianchi(fx: &Fixtures) -> Outcome {
    let mut checked = 0usize;
    for (p, g, seed) in [("circle2", "s3", 11), ("vee", "s3", 12), ("circle2", "z2", 13), ("vee", "z2", 14)] {
        let k = fx.ctx(p, g)?;
        let ss = k.ss();
        let grp = k.group();
        let idx2 = |c| ss.index2(c).expect("faces of 3-simplices are 2-simplices");
        let plan: Vec<([usize; 4], usize)> = ss
            .sigma3()
            .iter()
            .map(|d| {
                let faces = [0, 1, 2, 3].map(|i| idx2(&d.faces[i]));
                let e01 = ss.index1(&d.faces[1].faces[0]).expect("edge");
                (faces, e01)
            })
            .collect();
        for u in sample_connections(&k, 30, seed)? {
            let w: Vec<Elem> = (0..ss.sigma2().len()).map(|c| k.w(&u, c)).collect();
            for &(f, e01) in &plan {
                let lhs = grp.mul(w[f[0]], w[f[2]]);
                let rhs = grp.mul(grp.conj(u.get(e01), w[f[3]]), w[f[1]]);
                ensure(lhs == rhs, || format!("fails on {p} x {g}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (connection, 3-simplex) pairs on circle2 and vee"))
}

/// Holonomy values of loops at `a0` of length at most `len`.
fn loop_oracle(k: &Context, u: &Cochain1, a0: Point, len: usize) -> Subset {
    bounded_path_values(k, u, len).remove(&(a0, a0)).unwrap_or_default().into_iter().collect()
}

fn ambrose_singer(fx: &Fixtures) -> Outcome {
    let k = fx.ctx("circle2", "s3")?;
    let grp = k.group();
    let a0 = lift(k.base())?;
    let b = lift(k.default_nonflat_edge())?;
    let t12 = lift(grp.elem("(12)"))?;
    let t123 = lift(grp.elem("(123)"))?;
    let winding = lift(k.enumerate_cocycles(true, DEFAULT_LIMIT))?
        .into_iter()
        .find(|z| z.values().contains(&t123))
        .ok_or("no winding cocycle with value (123)")?;
    let mut cases = vec![
        lift(k.construct_nonflat(&k.trivial1(), &b, t12))?.connection,
        winding.clone(),
        lift(k.construct_nonflat(&winding, &b, t12))?.connection,
    ];
    cases.extend(sample_connections(&k, 20, 9)?);
    let mut sizes = BTreeSet::new();
    for u in &cases {
        let red = lift(k.ambrose_singer_reduce(u, a0))?;
        ensure(red.reduced.values().iter().all(|x| red.holonomy.contains(x)), || "u₁ leaves H".into())?;
        ensure(k.is_connection(&red.reduced), || "u₁ is not a connection".into())?;
        ensure(k.is_morphism(&red.morphism, &red.reduced, u), || "no morphism u₁ → u".into())?;
        ensure(loop_oracle(&k, u, a0, LOOP_ORACLE_LENGTH) == red.holonomy, || "loop oracle disagrees on H".into())?;
        let inner = Context::new(k.poset().clone(), red.subgroup.clone());
        let h1 = lift(inner.holonomy(&red.reduced_in_subgroup, a0))?;
        ensure(h1.len() == red.holonomy.len(), || "holonomy of u₁ is a proper subgroup of H".into())?;
        for a1 in k.poset().points() {
            lift(k.holonomy_conjugacy_check(u, a0, a1))?;
        }
        sizes.insert(red.holonomy.len());
    }
    Ok(format!("{} connections on circle2 x S3, |H| in {:?}", cases.len(), sizes))
}

fn gauge_sizes(fx: &Fixtures) -> Outcome {
    let mut report = Vec::new();
    let centralizer_matches = |k: &Context, z: &Cochain1, n: usize| -> std::result::Result<(), String> {
        let h = lift(k.holonomy(z, lift(k.base())?))?;
        let c = k.group().centralizer(&h).len();
        ensure(c == n, || format!("|G(z)| = {n} but the holonomy centralizer has {c} elements"))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for p in ["chain3", "circle2"] {
        let k = fx.ctx(p, "s3")?;
        for _ in 0..5 {
            let s = lift(k.cochain0((0..k.poset().len()).map(|_| Elem::from_index(rng.gen_range(0..6))).collect()))?;
            let z = k.coboundary0(&s);
            let n = lift(k.gauge_group(&z))?.len();
            ensure(n == 6, || format!("{p}: coboundary has |G(z)| = {n}"))?;
            centralizer_matches(&k, &z, n)?;
        }
    }
    report.push("coboundaries 6".to_string());
    let k = fx.ctx("circle2", "z3")?;
    let winding = fx.winding.as_ref().ok_or("winding fixture unavailable")?;
    ensure(k.is_cocycle1(winding), || "winding fixture is not a cocycle".into())?;
    let gg = lift(k.gauge_group(winding))?;
    ensure(gg.len() == 3 && gg.iter().all(|t| t.is_constant()), || "winding: not 3 constant maps".into())?;
    report.push("winding 3 constant".to_string());
    let k = fx.ctx("theta", "s3")?;
    let full = fx.full_holonomy.as_ref().ok_or("full holonomy fixture unavailable")?;
    ensure(lift(k.holonomy(full, lift(k.base())?))?.len() == 6, || "fixture holonomy is not S3".into())?;
    let n = lift(k.gauge_group(full))?.len();
    ensure(n == 1, || format!("full holonomy fixture has |G(z)| = {n}"))?;
    centralizer_matches(&k, full, n)?;
    report.push("full holonomy 1".to_string());
    let mut raw = 0;
    for p in ["chain2", "chain3", "circle2", "vee"] {
        for g in ["z2", "z3"] {
            let k = fx.ctx(p, g)?;
            for z in lift(k.enumerate_cocycles(false, DEFAULT_LIMIT))? {
                let gg = lift(k.gauge_group(&z))?;
                ensure(gg == lift(k.gauge_group_raw(&z, 1 << 16))?, || format!("{p} x {g}: raw scan differs"))?;
                ensure(gg.len() == k.group().order() && gg.iter().all(|t| t.is_constant()), || {
                    format!("{p} x {g}: abelian gauge group is not the constants")
                })?;
                centralizer_matches(&k, &z, gg.len())?;
                raw += 1;
            }
        }
    }
    report.push(format!("raw scan agrees on {raw} cocycles"));
    Ok(report.join(", "))
}

fn curvature_symmetries(fx: &Fixtures) -> Outcome {
    let mut checked = 0usize;
    for (p, g, seed) in [("circle2", "s3", 15), ("vee", "s3", 16), ("theta", "s3", 17)] {
        let k = fx.ctx(p, g)?;
        check_symmetries(&k, &sample_connections(&k, 50, seed)?, &mut checked)?;
    }
    let k = fx.ctx("circle2", "z2")?;
    check_symmetries(&k, &lift(k.enumerate_connections(DEFAULT_LIMIT))?, &mut checked)?;
    Ok(format!("{checked} (connection, 2-simplex) pairs"))
}

fn check_symmetries(k: &Context, conns: &[Cochain1], checked: &mut usize) -> std::result::Result<(), String> {
    let ss = k.ss();
    let grp = k.group();
    let swapped: Vec<usize> =
        ss.sigma2().iter().map(|c| ss.index2(&c.permute(Perm3::T01)).expect("permuted simplex")).collect();
    for u in conns {
        for (c, simplex) in ss.sigma2().iter().enumerate() {
            let w = k.w(u, c);
            ensure(k.w(u, swapped[c]) == grp.inv(w), || "w(c^(01)) is not w(c)⁻¹".into())?;
            if ss.is_inflating2(c) || simplex.is_degenerate() {
                ensure(w == Elem::E, || "curvature on an inflating or degenerate simplex".into())?;
            }
            *checked += 1;
        }
    }
    Ok(())
}

fn homotopy_invariance(fx: &Fixtures) -> Outcome {
    let mut pairs = 0usize;
    for p in ["circle2", "chain3"] {
        let poset = fx.poset(p)?;
        let ss = SimplicialSet::new(poset.clone());
        let mut seeds: Vec<Path> = ss.sigma1().iter().map(|b| Path::single(*b)).collect();
        if let Some((b0, b1)) = ss
            .sigma1()
            .iter()
            .flat_map(|x| ss.sigma1().iter().map(move |y| (x, y)))
            .find(|(x, y)| x.face0 == y.face1 && y.face0 == x.face1 && !x.is_degenerate())
        {
            seeds.push(lift(Path::new(vec![*b0, *b1]))?);
        }
        let mut tables = Vec::new();
        for g in ["z2", "s3"] {
            let k = fx.ctx(p, g)?;
            let cocycles = lift(k.enumerate_cocycles(false, DEFAULT_LIMIT))?;
            tables.push((k, cocycles));
        }
        for seed in &seeds {
            let comp = lift(DeformationComponent::explore(&ss, seed, HOMOTOPY_BOUND, 5_000_000))?;
            let members: Vec<Path> = comp.paths(&ss).collect();
            if let Some(far) = members.last() {
                let cert = comp.certificate(&ss, far).ok_or("no certificate for a member")?;
                ensure(verify_certificate(&ss, &cert), || "certificate does not verify".into())?;
            }
            for (k, cocycles) in &tables {
                let edge = |b| k.edge_index(b).expect("edge of the fixture");
                let seed_idx: Vec<usize> = seed.steps().iter().map(edge).collect();
                for q in &members {
                    let q_idx: Vec<usize> = q.steps().iter().map(edge).collect();
                    let value = |z: &Cochain1, idx: &[usize]| k.group().product(idx.iter().rev().map(|&i| z.get(i)));
                    for z in cocycles {
                        ensure(value(z, &seed_idx) == value(z, &q_idx), || {
                            format!("{p} x {}: cocycle differs across a homotopy", k.group().name())
                        })?;
                    }
                }
            }
            pairs += members.len();
        }
    }
    Ok(format!("{pairs} certificate-homotopic pairs, bound {HOMOTOPY_BOUND}, all cocycles for Z2 and S3"))
}
