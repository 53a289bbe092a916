use std::fs;
use std::path::Path as FsPath;

use posetbundle::acceptance::{self, Fixtures};
use posetbundle::cochains::{Cochain1, Context};
use posetbundle::format::{format_cochain, format_transform, parse_cochain, parse_path_file, parse_transform};
use posetbundle::gauge::GaugeTransformation;
use posetbundle::groups::{hom_compose, Arrow2G, Arrow3G, Elem, FiniteGroup, GroupHom, Law2, Law3, Subset};
use posetbundle::paths::{self, count_hom_classes, deformations, Homotopy, Path, Pi1};
use posetbundle::poset::{Point, Poset, PosetKind};
use posetbundle::simplicial::{permute2, Perm3, Simplex, Simplex1};

use crate::report::{Inputs, Report};
use crate::CliError;

pub struct Env {
    pub inputs: Inputs,
    pub limit: u64,
    pub report: Report,
}

type Out = Result<(), CliError>;

impl Env {
    fn poset(&mut self, path: &str) -> Result<Poset, CliError> {
        Ok(Poset::parse(&self.inputs.read(path)?)?)
    }

    fn group(&mut self, path: &str) -> Result<FiniteGroup, CliError> {
        Ok(FiniteGroup::parse(&self.inputs.read(path)?)?)
    }

    fn ctx(&mut self, poset: &str, group: &str) -> Result<Context, CliError> {
        Ok(Context::new(self.poset(poset)?, self.group(group)?))
    }

    /// Context over the trivial group, for commands that only need the poset.
    fn space(&mut self, poset: &str) -> Result<Context, CliError> {
        Ok(Context::new(self.poset(poset)?, FiniteGroup::trivial()))
    }

    fn cochain(&mut self, k: &Context, path: &str) -> Result<Cochain1, CliError> {
        Ok(parse_cochain(k, &self.inputs.read(path)?)?.cochain)
    }

    fn transform(&mut self, k: &Context, path: &str) -> Result<Vec<Elem>, CliError> {
        Ok(parse_transform(k, &self.inputs.read(path)?)?.1.values().to_vec())
    }

    fn path(&mut self, k: &Context, path: &str) -> Result<Path, CliError> {
        Ok(parse_path_file(k, &self.inputs.read(path)?)?)
    }

    fn rec(&mut self, key: impl Into<String>, value: impl std::fmt::Display) {
        self.report.record(key, value);
    }
}

fn point(k: &Context, id: Option<&str>) -> Result<Point, CliError> {
    match id {
        Some(id) => Ok(k.poset().point(id)?),
        None => Ok(k.base()?),
    }
}

fn elems(g: &FiniteGroup, list: &str, flag: &str) -> Result<Vec<Elem>, CliError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| g.elem(s).map_err(|e| CliError::Usage(format!("--{flag}: {e}"))))
        .collect()
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}

fn show_path(k: &Context, p: &Path) -> String {
    if p.is_empty() {
        format!("constant at {}", k.poset().id(p.start()))
    } else {
        p.display(k.poset()).to_string()
    }
}

fn show_elems(g: &FiniteGroup, xs: &[Elem]) -> String {
    xs.iter().map(|&x| g.symbol(x)).collect::<Vec<_>>().join(" ")
}

pub fn validate(env: &mut Env, file: &str) -> Out {
    let text = env.inputs.read(file)?;
    let p = match Poset::parse(&text) {
        Ok(p) => p,
        Err(e) => {
            env.rec("error", e);
            env.report.verdict("valid", false);
            return Ok(());
        }
    };
    env.rec("name", p.name());
    env.rec("elements", p.len());
    env.rec("strict-relations", p.relation_pairs().iter().filter(|(a, b)| a != b).count());
    env.rec("directed", p.is_directed());
    env.rec("totally-ordered", p.is_totally_ordered());
    env.rec("pathwise-connected", p.is_pathwise_connected());
    for a in p.points() {
        let members: Vec<&str> = p.fundamental_open(a).members().map(|x| p.id(x)).collect();
        env.rec(format!("open {}", p.id(a)), format!("{{{}}}", members.join(",")));
    }
    env.report.verdict("valid", true);
    Ok(())
}

pub fn gen(env: &mut Env, kind: PosetKind, n: usize, out: Option<&str>) -> Out {
    let p = Poset::generate(kind, n)?;
    let text = p.to_text();
    env.rec("name", p.name());
    env.rec("elements", p.len());
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
            env.rec("written", path);
        }
        None => env.rec("poset", text.trim_end()),
    }
    Ok(())
}

pub fn simplices(env: &mut Env, file: &str, dim: usize, inflating: bool) -> Out {
    let k = env.space(file)?;
    let all = k.ss().enumerate(dim, inflating)?;
    env.rec("dim", dim);
    env.rec("inflating-only", inflating);
    env.rec("count", all.len());
    env.rec("simplices", lines(all.iter().map(|s| s.display(k.poset()).to_string())));
    Ok(())
}

pub fn simplex(env: &mut Env, file: &str, edge: &str) -> Out {
    let k = env.space(file)?;
    let p = k.poset();
    let b = Simplex1::parse(p, edge).map_err(|e| CliError::Usage(format!("<edge>: {e}")))?;
    let d = Simplex::S1(b);
    env.rec("simplex", b.display(p));
    env.rec("inflating", d.is_inflating(p));
    for i in 0..2 {
        env.rec(format!("boundary {i}"), d.boundary(i)?.display(p));
    }
    for i in 0..2 {
        env.rec(format!("degeneracy {i}"), d.degeneracy(i)?.display(p));
    }
    env.rec("reverse", b.reverse().display(p));
    let c = k.ss().filler(&b);
    env.rec("filler", c.display(p));
    for perm in Perm3::ALL {
        let moved = permute2(&c, perm);
        env.rec(format!("filler {}", perm.name()), format!("{} inflating={}", moved.display(p), moved.is_inflating(p)));
    }
    Ok(())
}

pub fn pi1(env: &mut Env, file: &str, base: Option<&str>, path: Option<&str>) -> Out {
    let k = env.space(file)?;
    let p = match path {
        Some(file) => Some(env.path(&k, file)?),
        None => None,
    };
    let a0 = match (&p, base) {
        (Some(p), None) => p.start(),
        _ => point(&k, base)?,
    };
    let pi = Pi1::new(k.ss(), a0)?;
    let pres = &pi.presentation;
    env.rec("base", k.poset().id(a0));
    env.rec("generators", pres.generators.len());
    if !pres.generators.is_empty() {
        env.rec("generator-names", pres.generators.join(" "));
    }
    env.rec("relators", pres.relators.len());
    if !pres.relators.is_empty() {
        env.rec("relator-words", lines(pres.relators.iter().map(|r| pres.fmt_word(r))));
    }
    let ab = pi.abelianization();
    env.rec("abelianization", ab.describe());
    if let Some(p) = p {
        if !p.is_loop() || p.start() != a0 {
            return Err(CliError::Usage(format!("--p: path is not a loop at {}", k.poset().id(a0))));
        }
        let w = pi.path_to_word(&p);
        env.rec("word", pres.fmt_word(&w));
        env.rec("class", format!("{:?}", ab.coordinates(&pres.exponent_vector(&w))));
    }
    Ok(())
}

pub fn count_homs(env: &mut Env, poset: &str, group: &str, base: Option<&str>) -> Out {
    let k = env.ctx(poset, group)?;
    let a0 = point(&k, base)?;
    let pi = Pi1::new(k.ss(), a0)?;
    env.rec("base", k.poset().id(a0));
    env.rec("hom-classes", count_hom_classes(&pi.presentation, k.group(), env.limit)?);
    Ok(())
}

pub fn homotopic(env: &mut Env, file: &str, p: &str, q: &str, bound: usize) -> Out {
    let k = env.space(file)?;
    let p = env.path(&k, p)?;
    let q = env.path(&k, q)?;
    env.rec("p", show_path(&k, &p));
    env.rec("q", show_path(&k, &q));
    env.rec("bound", bound);
    match paths::homotopic(k.ss(), &p, &q, bound, env.limit as usize)? {
        Homotopy::Yes(chain) => {
            env.rec("result", "yes");
            env.rec("certificate", lines(chain.iter().map(|x| show_path(&k, x))));
            env.rec("certificate-verified", paths::verify_certificate(k.ss(), &chain));
            env.report.verdict("homotopic", true);
        }
        Homotopy::No { p_class, q_class } => {
            env.rec("result", "no");
            env.rec("p-class", format!("{p_class:?}"));
            env.rec("q-class", format!("{q_class:?}"));
            env.report.verdict("homotopic", false);
        }
        Homotopy::Unknown => env.rec("result", "unknown"),
    }
    Ok(())
}

pub fn path_ops(env: &mut Env, file: &str, p: &str, then: Option<&str>) -> Out {
    let k = env.space(file)?;
    let p = env.path(&k, p)?;
    env.rec("path", show_path(&k, &p));
    env.rec("length", p.len());
    env.rec("start", k.poset().id(p.start()));
    env.rec("end", k.poset().id(p.end()));
    env.rec("reverse", show_path(&k, &p.reverse()));
    if let Some(file) = then {
        let q = env.path(&k, file)?;
        env.rec("composite", show_path(&k, &Path::compose(&q, &p)?));
    }
    let ds = deformations(k.ss(), &p);
    env.rec("deformations", ds.len());
    if !ds.is_empty() {
        env.rec("deformation-list", lines(ds.iter().map(|d| show_path(&k, d))));
    }
    Ok(())
}

pub fn group_validate(env: &mut Env, file: &str) -> Out {
    let text = env.inputs.read(file)?;
    match FiniteGroup::parse(&text) {
        Ok(g) => {
            env.rec("name", g.name());
            env.rec("order", g.order());
            env.rec("identity", g.symbol(g.identity()));
            env.rec("abelian", g.is_abelian());
            env.rec("center", g.fmt_subset(&g.center()));
            env.rec("inner-automorphisms", g.inner_auts().len());
            env.report.verdict("valid", true);
        }
        Err(e) => {
            env.rec("error", e);
            env.report.verdict("valid", false);
        }
    }
    Ok(())
}

pub fn subgroup(env: &mut Env, file: &str, gens: &str, conj: Option<&str>) -> Out {
    let g = env.group(file)?;
    let s: Subset = elems(&g, gens, "gens")?.into_iter().collect();
    let h = g.subgroup_generated(&s);
    let all: Subset = g.elements().collect();
    env.rec("generated", g.fmt_subset(&h));
    env.rec("order", h.len());
    env.rec("normal", g.is_normal_in(&h, &all));
    env.rec("normal-closure", g.fmt_subset(&g.normal_closure(&h, &all)));
    env.rec("centralizer", g.fmt_subset(&g.centralizer(&h)));
    if let Some(x) = conj {
        let x = g.elem(x).map_err(|e| CliError::Usage(format!("--conj: {e}")))?;
        env.rec("conjugate", g.fmt_subset(&g.conjugate(&h, x)));
    }
    Ok(())
}

fn aut_arg(g: &FiniteGroup, s: &str, flag: &str) -> Result<posetbundle::groups::InnerAut, CliError> {
    Ok(g.ad(g.elem(s.trim()).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))?))
}

fn arrow2(g: &FiniteGroup, s: &str, flag: &str) -> Result<Arrow2G, CliError> {
    match s.split(',').collect::<Vec<_>>()[..] {
        [x, t] => Ok(Arrow2G { g: elems(g, x, flag)?[0], tau: aut_arg(g, t, flag)? }),
        _ => Err(CliError::Usage(format!("--{flag}: expected `g,t` with ad(t) as the automorphism"))),
    }
}

fn arrow3(g: &FiniteGroup, s: &str, flag: &str) -> Result<Arrow3G, CliError> {
    match s.split(',').collect::<Vec<_>>()[..] {
        [x, t, c] => Ok(g.arrow3(elems(g, x, flag)?[0], aut_arg(g, t, flag)?, aut_arg(g, c, flag)?)?),
        _ => Err(CliError::Usage(format!("--{flag}: expected `g,t,c` with ad(t), ad(c) as automorphisms"))),
    }
}

pub fn compose2(env: &mut Env, file: &str, x: &str, y: &str, law: Law2) -> Out {
    let g = env.group(file)?;
    let r = g.compose_2g(arrow2(&g, x, "x")?, arrow2(&g, y, "y")?, law)?;
    env.rec("law", format!("{law:?}").to_lowercase());
    env.rec("g", g.symbol(r.g));
    env.rec("tau", g.fmt_aut(r.tau));
    Ok(())
}

pub fn compose3(env: &mut Env, file: &str, x: &str, y: &str, law: Law3) -> Out {
    let g = env.group(file)?;
    let r = g.compose_3g(arrow3(&g, x, "x")?, arrow3(&g, y, "y")?, law)?;
    env.rec("law", format!("{law:?}").to_lowercase());
    env.rec("g", g.symbol(r.g));
    env.rec("tau", g.fmt_aut(r.tau));
    env.rec("gamma", g.fmt_aut(r.gamma));
    Ok(())
}

pub fn hom_compose_cmd(env: &mut Env, files: [&str; 3], rho: &str, gamma: &str) -> Out {
    let [a, b, c] = files;
    let (a, b, c) = (env.group(a)?, env.group(b)?, env.group(c)?);
    let rho_map = elems(&b, rho, "rho")?;
    let gamma_map = elems(&c, gamma, "gamma")?;
    let rho = GroupHom::new(a.clone(), b.clone(), rho_map)?;
    let gamma = GroupHom::new(b, c.clone(), gamma_map)?;
    let comp = hom_compose(&gamma, &rho)?;
    let images: Vec<Elem> = a.elements().map(|x| comp.apply(x)).collect();
    env.rec("source", a.name());
    env.rec("target", c.name());
    env.rec("images", show_elems(&c, &images));
    env.rec("injective", comp.is_injective());
    env.rec("image", c.fmt_subset(&comp.image()));
    Ok(())
}

pub fn check_cocycle(env: &mut Env, poset: &str, group: &str, cochain: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let z = env.cochain(&k, cochain)?;
    let violation = k.cocycle_violation(&z);
    if let Some(c) = violation {
        env.rec("violated-at", k.ss().sigma2()[c].display(k.poset()));
        env.rec("w", k.group().symbol(k.w(&z, c)));
    }
    env.report.verdict("cocycle", violation.is_none());
    Ok(())
}

pub fn classify(env: &mut Env, poset: &str, group: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let classes = k.classify_cocycles(env.limit)?;
    env.rec("classes", classes.len());
    for (i, c) in classes.iter().enumerate() {
        env.rec(format!("class {i} members"), c.members);
        env.rec(format!("class {i}"), format_cochain(&k, &format!("class{i}"), &c.representative).trim_end());
    }
    Ok(())
}

pub fn dd_check(env: &mut Env, poset: &str, group: &str, cochain: &str, transform: Option<&str>) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let w = k.coboundary1(&u);
    let x = k.coboundary2(&w)?;
    let trivial = |xs: &[Elem]| xs.iter().all(|&e| e == Elem::E);
    env.rec("sigma2", w.v_values().len());
    env.rec("sigma3", x.v_values().len());
    env.rec("cocycle", k.is_cocycle1(&u));
    env.rec("coboundary-is-2-cocycle", k.is_cocycle2(&w));
    let mut ok = trivial(x.v_values());
    env.rec("dd1-trivial", ok);
    if let Some(file) = transform {
        let s = k.cochain0(env.transform(&k, file)?)?;
        let d = k.coboundary0(&s);
        let dd = trivial(k.coboundary1(&d).v_values());
        env.rec("transform-is-0-cocycle", k.is_cocycle0(&s));
        env.rec("dd0-trivial", dd);
        ok &= dd;
    }
    env.report.verdict("dd-trivial", ok);
    Ok(())
}

pub fn path_value(env: &mut Env, poset: &str, group: &str, cochain: &str, p: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let p = env.path(&k, p)?;
    env.rec("path", show_path(&k, &p));
    env.rec("value", k.group().symbol(k.extend_to_path(&u, &p)?));
    Ok(())
}

pub fn find_morphism(env: &mut Env, poset: &str, group: &str, source: &str, target: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let s = env.cochain(&k, source)?;
    let t = env.cochain(&k, target)?;
    let found = k.find_morphism(&s, &t)?;
    if let Some(m) = &found {
        env.rec("morphism", format_transform(&k, "morphism", &m.f).trim_end());
    }
    env.report.verdict("morphism", found.is_some());
    Ok(())
}

pub fn path_independent(env: &mut Env, poset: &str, group: &str, cochain: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let yes = k.is_path_independent(&u)?;
    env.report.verdict("path-independent", yes);
    Ok(())
}

pub fn cross_section(env: &mut Env, poset: &str, group: &str, transform: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let s = k.cochain0(env.transform(&k, transform)?)?;
    let z = k.coboundary_from_assignment(&s);
    env.rec("coboundary", format_cochain(&k, "coboundary", &z).trim_end());
    env.report.verdict("cocycle", k.is_cocycle1(&z));
    Ok(())
}

pub fn pushforward(env: &mut Env, files: [&str; 4], images: &str, associated: bool) -> Out {
    let [poset, group, cochain, target] = files;
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let h = env.group(target)?;
    let hom = GroupHom::new(k.group().clone(), h.clone(), elems(&h, images, "images")?)?;
    let out = if associated { k.associated_cocycle(&u, &hom)? } else { k.pushforward(&hom, &u)? };
    let kh = Context::new(k.poset().clone(), h);
    env.rec("pushed", format_cochain(&kh, "pushed", &out).trim_end());
    env.rec("source-cocycle", k.is_cocycle1(&u));
    env.rec("pushed-cocycle", kh.is_cocycle1(&out));
    Ok(())
}

pub fn curvature(env: &mut Env, poset: &str, group: &str, cochain: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    if let Some(why) = k.connection_violation(&u) {
        env.rec("violation", why);
        env.report.verdict("connection", false);
        return Ok(());
    }
    let w = k.curvature(&u)?;
    let g = k.group();
    let nontrivial: Vec<String> = k
        .ss()
        .sigma2()
        .iter()
        .zip(w.v_values())
        .filter(|(_, &x)| x != Elem::E)
        .map(|(c, &x)| format!("{} = {}", c.display(k.poset()), g.symbol(x)))
        .collect();
    env.rec("flat", nontrivial.is_empty());
    env.rec("nontrivial", nontrivial.len());
    if !nontrivial.is_empty() {
        env.rec("curvature", lines(nontrivial));
    }
    env.report.verdict("connection", true);
    Ok(())
}

pub fn induce(env: &mut Env, poset: &str, group: &str, cochain: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let z = k.induced_cocycle(&u)?;
    env.rec("induced", format_cochain(&k, "induced", &z).trim_end());
    Ok(())
}

pub fn from_cochain(env: &mut Env, poset: &str, group: &str, cochain: &str, cocycle: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let v = env.cochain(&k, cochain)?;
    let z = env.cochain(&k, cocycle)?;
    let u = k.construct_from_cochain(&v, &z)?;
    env.rec("connection", format_cochain(&k, "connection", &u).trim_end());
    env.rec("flat", k.is_flat(&u)?);
    Ok(())
}

pub fn nonflat(env: &mut Env, poset: &str, group: &str, cocycle: Option<&str>, edge: Option<&str>, g: &str) -> Out {
    let k = env.ctx(poset, group)?;
    let z = match cocycle {
        Some(f) => env.cochain(&k, f)?,
        None => k.trivial1(),
    };
    let b = match edge {
        Some(e) => Simplex1::parse(k.poset(), e).map_err(|err| CliError::Usage(format!("--edge: {err}")))?,
        None => k.default_nonflat_edge()?,
    };
    let x = k.group().elem(g).map_err(|e| CliError::Usage(format!("--g: {e}")))?;
    let nf = k.construct_nonflat(&z, &b, x)?;
    let c = k.ss().sigma2()[nf.witness];
    env.rec("edge", b.display(k.poset()));
    env.rec("connection", format_cochain(&k, "nonflat", &nf.connection).trim_end());
    env.rec("witness", c.display(k.poset()));
    env.rec("curvature-at-witness", k.group().symbol(k.w(&nf.connection, nf.witness)));
    env.report.verdict("induces-input", k.induced_cocycle(&nf.connection)? == z);
    Ok(())
}

pub fn central(env: &mut Env, poset: &str, group: &str, cochain: &str, with: Option<&str>) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let yes = k.is_central(&u)?;
    if yes {
        let d = k.central_decompose(&u)?;
        env.rec("cocycle", format_cochain(&k, "cocycle", &d.cocycle).trim_end());
        env.rec("central-part", format_cochain(&k, "central", &d.central_part).trim_end());
        env.rec("star-inverse", format_cochain(&k, "inverse", &k.star_inverse(&u)?).trim_end());
        if let Some(file) = with {
            let u1 = env.cochain(&k, file)?;
            env.rec("star", format_cochain(&k, "star", &k.star_compose(&u, &u1)?).trim_end());
        }
    }
    env.report.verdict("central", yes);
    Ok(())
}

pub fn holonomy(env: &mut Env, files: [&str; 3], base: Option<&str>, restricted: bool, to: Option<&str>) -> Out {
    let [poset, group, cochain] = files;
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let a0 = point(&k, base)?;
    let g = k.group();
    let h = k.holonomy(&u, a0)?;
    env.rec("base", k.poset().id(a0));
    env.rec("holonomy", g.fmt_subset(&h));
    env.rec("order", h.len());
    if restricted {
        let h0 = k.restricted_holonomy(&u, a0)?;
        env.rec("restricted", g.fmt_subset(&h0));
        env.rec("restricted-order", h0.len());
    }
    if let Some(a1) = to {
        let a1 = k.poset().point(a1).map_err(|e| CliError::Usage(format!("--to: {e}")))?;
        let x = k.holonomy_conjugacy_check(&u, a0, a1)?;
        let h1 = k.holonomy(&u, a1)?;
        env.rec("conjugator", g.symbol(x));
        env.rec("holonomy-at-target", g.fmt_subset(&h1));
        env.report.verdict("conjugate", g.conjugate(&h, x) == h1);
    }
    Ok(())
}

pub fn reduce(env: &mut Env, poset: &str, group: &str, cochain: &str, base: Option<&str>) -> Out {
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let a0 = point(&k, base)?;
    let r = k.ambrose_singer_reduce(&u, a0)?;
    let g = k.group();
    env.rec("base", k.poset().id(a0));
    env.rec("holonomy", g.fmt_subset(&r.holonomy));
    env.rec("reduced", format_cochain(&k, "reduced", &r.reduced).trim_end());
    env.rec("morphism", format_transform(&k, "morphism", &r.morphism).trim_end());
    let inside = r.reduced.values().iter().all(|x| r.holonomy.contains(x));
    env.report.verdict("valued-in-holonomy", inside);
    env.report.verdict("morphism-verified", k.is_morphism(&r.morphism, &r.reduced, &u));
    Ok(())
}

pub fn gauge_group(env: &mut Env, poset: &str, group: &str, cocycle: &str, raw: bool) -> Out {
    let k = env.ctx(poset, group)?;
    let z = env.cochain(&k, cocycle)?;
    let gg = k.gauge_group(&z)?;
    let g = k.group();
    env.rec("order", gg.len());
    env.rec("all-constant", gg.iter().all(GaugeTransformation::is_constant));
    env.rec("elements", lines(gg.iter().map(|t| show_elems(g, &t.f))));
    if raw {
        let scan = k.gauge_group_raw(&z, env.limit)?;
        env.report.verdict("raw-scan-agrees", scan == gg);
    }
    Ok(())
}

pub fn gauge_act(env: &mut Env, files: [&str; 3], cocycle: Option<&str>, transform: &str) -> Out {
    let [poset, group, cochain] = files;
    let k = env.ctx(poset, group)?;
    let u = env.cochain(&k, cochain)?;
    let z = match cocycle {
        Some(f) => env.cochain(&k, f)?,
        None => k.induced_cocycle(&u)?,
    };
    let t = GaugeTransformation { f: env.transform(&k, transform)? };
    let moved = k.gauge_act(&t, &u, &z)?;
    env.rec("result", format_cochain(&k, "moved", &moved).trim_end());
    env.rec("flat", k.is_flat(&moved)?);
    env.report.verdict("same-bundle", k.induced_cocycle(&moved)? == z);
    Ok(())
}

pub fn suite(env: &mut Env, dir: &str) -> Out {
    let root = FsPath::new(dir);
    let mut names: Vec<String> = fs::read_dir(root)
        .map_err(|e| CliError::Io(format!("cannot read {dir}: {e}")))?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().is_file())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for name in &names {
        let bytes =
            fs::read(root.join(name)).map_err(|e| CliError::Io(format!("cannot read {dir}/{name}: {e}")))?;
        env.inputs.absorb(name.as_bytes());
        env.inputs.absorb(&bytes);
    }
    let fx = Fixtures::load(root)?;
    for v in acceptance::run(&fx) {
        env.rec(v.id, format!("{}: {}", v.title, v.detail));
        env.report.verdict(v.id, v.passed);
    }
    Ok(())
}
