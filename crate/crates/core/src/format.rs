//! Text formats for cochains, gauge transformations and paths.
//!
//! ```text
//! cochain winding over circle2 values Z3
//! (o1;a1,a1) = 0
//! ...
//! ```
//!
//! ```text
//! transform t
//! a1 = (12)
//! ...
//! ```

use std::collections::HashMap;

use crate::cochains::{Cochain0, Cochain1, Context};
use crate::error::{Error, Result};
use crate::groups::Elem;
use crate::paths::Path;
use crate::simplicial::Simplex1;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainFile {
    pub name: String,
    pub cochain: Cochain1,
}

/// Parses a 1-cochain file; every 1-simplex must appear exactly once and the
/// header must name the context's poset and group.
pub fn parse_cochain(ctx: &Context, text: &str) -> Result<CochainFile> {
    let mut lines = content_lines(text);
    let (hno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty cochain file"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let [kw, name, over, poset, values, group] = words.as_slice() else {
        return Err(Error::parse(hno, "header must be `cochain <name> over <poset> values <group>`"));
    };
    if *kw != "cochain" || *over != "over" || *values != "values" {
        return Err(Error::parse(hno, "header must be `cochain <name> over <poset> values <group>`"));
    }
    if *poset != ctx.poset().name() {
        return Err(Error::Mismatch(format!("cochain is over `{poset}`, poset is `{}`", ctx.poset().name())));
    }
    if *group != ctx.group().name() {
        return Err(Error::Mismatch(format!("cochain takes values in `{group}`, group is `{}`", ctx.group().name())));
    }
    let n = ctx.ss().sigma1().len();
    let mut slots: Vec<Option<Elem>> = vec![None; n];
    for (no, line) in lines {
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::parse(no, "expected `<1-simplex> = <element>`"))?;
        let b = Simplex1::parse(ctx.poset(), lhs).map_err(|e| Error::parse(no, e.to_string()))?;
        let i = ctx.edge_index(&b).map_err(|e| Error::parse(no, e.to_string()))?;
        let g = ctx.group().elem(rhs.trim()).map_err(|e| Error::parse(no, e.to_string()))?;
        if slots[i].replace(g).is_some() {
            return Err(Error::parse(no, format!("duplicate entry for {}", b.display(ctx.poset()))));
        }
    }
    if let Some(i) = slots.iter().position(Option::is_none) {
        let end = text.lines().count();
        return Err(Error::parse(end, format!("missing entry for {}", ctx.edge(i).display(ctx.poset()))));
    }
    let values = slots.into_iter().map(|x| x.expect("all slots filled")).collect();
    Ok(CochainFile { name: name.to_string(), cochain: Cochain1::from_values(values) })
}

pub fn format_cochain(ctx: &Context, name: &str, u: &Cochain1) -> String {
    let mut out = format!("cochain {name} over {} values {}\n", ctx.poset().name(), ctx.group().name());
    for (i, b) in ctx.ss().sigma1().iter().enumerate() {
        out.push_str(&format!("{} = {}\n", b.display(ctx.poset()), ctx.group().symbol(u.get(i))));
    }
    out
}

/// Parses a `transform` file mapping every element to a group element.
pub fn parse_transform(ctx: &Context, text: &str) -> Result<(String, Cochain0)> {
    let mut lines = content_lines(text);
    let (hno, header) = lines.next().ok_or_else(|| Error::parse(1, "empty transform file"))?;
    let name = header
        .strip_prefix("transform")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| Error::parse(hno, "header must be `transform <name>`"))?;
    let mut seen: HashMap<usize, Elem> = HashMap::new();
    for (no, line) in lines {
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::parse(no, "expected `<element> = <group element>`"))?;
        let a = ctx.poset().point(lhs.trim()).map_err(|e| Error::parse(no, e.to_string()))?;
        let g = ctx.group().elem(rhs.trim()).map_err(|e| Error::parse(no, e.to_string()))?;
        if seen.insert(a.index(), g).is_some() {
            return Err(Error::parse(no, format!("duplicate entry for `{}`", lhs.trim())));
        }
    }
    let values = (0..ctx.poset().len())
        .map(|i| {
            seen.get(&i)
                .copied()
                .ok_or_else(|| Error::parse(text.lines().count(), format!("missing entry for `{}`", ctx.poset().ids()[i])))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((name.to_string(), ctx.cochain0(values)?))
}

pub fn format_transform(ctx: &Context, name: &str, f: &[Elem]) -> String {
    let mut out = format!("transform {name}\n");
    for a in ctx.poset().points() {
        out.push_str(&format!("{} = {}\n", ctx.poset().id(a), ctx.group().symbol(f[a.index()])));
    }
    out
}

/// A path file holds one path encoding, possibly split over several lines.
pub fn parse_path_file(ctx: &Context, text: &str) -> Result<Path> {
    let joined: Vec<&str> = content_lines(text).map(|(_, l)| l).collect();
    Path::parse(ctx.poset(), &joined.join(""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::poset::{Poset, PosetKind};

    fn ctx() -> Context {
        Context::new(Poset::generate(PosetKind::Chain, 2).unwrap(), FiniteGroup::cyclic(2).unwrap())
    }

    #[test]
    fn cochain_round_trip() {
        let k = ctx();
        let u = Cochain1::from_values(vec![Elem::E, k.group().elem("1").unwrap(), Elem::E, Elem::E, Elem::E]);
        let text = format_cochain(&k, "u", &u);
        let back = parse_cochain(&k, &text).unwrap();
        assert_eq!(back.cochain, u);
        assert_eq!(back.name, "u");
    }

    #[test]
    fn cochain_must_cover_exactly() {
        let k = ctx();
        let text = format_cochain(&k, "u", &k.trivial1());
        let missing: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_cochain(&k, &missing), Err(Error::Parse { .. })));
        let dup = format!("{text}(x1;x1,x1) = 0\n");
        assert!(matches!(parse_cochain(&k, &dup), Err(Error::Parse { .. })));
        let wrong = text.replace("values Z2", "values Z3");
        assert!(matches!(parse_cochain(&k, &wrong), Err(Error::Mismatch(_))));
    }

    #[test]
    fn transform_round_trip() {
        let k = ctx();
        let f = vec![k.group().elem("1").unwrap(), Elem::E];
        let (name, back) = parse_transform(&k, &format_transform(&k, "t", &f)).unwrap();
        assert_eq!(name, "t");
        assert_eq!(back.values(), f.as_slice());
        assert!(parse_transform(&k, "transform t\nx1 = 1\n").is_err());
    }
}
