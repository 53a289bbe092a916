use posetbundle::groups::{hom_compose, Arrow2G, Arrow3G, Elem, FiniteGroup, GroupHom, Law2, Law3};
use proptest::prelude::*;

fn small_groups() -> Vec<FiniteGroup> {
    let mut v: Vec<FiniteGroup> = (1..=6).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
    v.push(FiniteGroup::symmetric(3).unwrap());
    v
}

fn arrows2(g: &FiniteGroup) -> Vec<Arrow2G> {
    let auts = g.inner_auts();
    g.elements().flat_map(|x| auts.iter().map(move |&tau| Arrow2G { g: x, tau })).collect()
}

fn arrows3(g: &FiniteGroup) -> Vec<Arrow3G> {
    let auts = g.inner_auts();
    let mut out = Vec::new();
    for x in g.elements().filter(|&x| g.is_central(x)) {
        for &tau in &auts {
            for &gamma in &auts {
                out.push(g.arrow3(x, tau, gamma).unwrap());
            }
        }
    }
    out
}

#[test]
fn inner_aut_equality_is_center_coset_equality() {
    for g in small_groups() {
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.ad(a) == g.ad(b), g.is_central(g.mul(a, g.inv(b))), "{}", g.name());
            }
        }
    }
}

#[test]
fn two_g_units_and_interchange() {
    for g in small_groups() {
        let arrows = arrows2(&g);
        let unit = Arrow2G { g: Elem::E, tau: g.iota() };
        let diamond_units: Vec<Arrow2G> = g.inner_auts().into_iter().map(|tau| Arrow2G { g: Elem::E, tau }).collect();
        for &x in &arrows {
            assert_eq!(g.compose_2g(unit, x, Law2::Times).unwrap(), x);
            assert_eq!(g.compose_2g(x, unit, Law2::Times).unwrap(), x);
        }
        let mut units = diamond_units.clone();
        for &a in &diamond_units {
            for &b in &diamond_units {
                units.push(g.compose_2g(a, b, Law2::Times).unwrap());
            }
        }
        assert!(diamond_units.contains(&unit));
        for &u in &units {
            for &x in &arrows {
                if let Ok(y) = g.compose_2g(x, u, Law2::Diamond) {
                    assert_eq!(y, x);
                }
                if let Ok(y) = g.compose_2g(u, x, Law2::Diamond) {
                    assert_eq!(y, x);
                }
            }
        }
        let defined: Vec<(Arrow2G, Arrow2G, Arrow2G)> = arrows
            .iter()
            .flat_map(|&x| arrows.iter().map(move |&y| (x, y)))
            .filter_map(|(x, y)| g.compose_2g(x, y, Law2::Diamond).ok().map(|xy| (x, y, xy)))
            .collect();
        for &(x, y, xy) in &defined {
            for &(x1, y1, xy1) in &defined {
                let lhs = g.compose_2g(xy, xy1, Law2::Times).unwrap();
                let top = g.compose_2g(x, x1, Law2::Times).unwrap();
                let bottom = g.compose_2g(y, y1, Law2::Times).unwrap();
                assert_eq!(g.compose_2g(top, bottom, Law2::Diamond).unwrap(), lhs, "{}", g.name());
            }
        }
    }
}

fn interchange3(g: &FiniteGroup, arrows: &[Arrow3G], outer: Law3, inner: Law3) {
    let defined: Vec<(Arrow3G, Arrow3G, Arrow3G)> = arrows
        .iter()
        .flat_map(|&x| arrows.iter().map(move |&y| (x, y)))
        .filter_map(|(x, y)| g.compose_3g(x, y, inner).ok().map(|xy| (x, y, xy)))
        .collect();
    for &(a, b, ab) in &defined {
        for &(c, d, cd) in &defined {
            let Ok(lhs) = g.compose_3g(ab, cd, outer) else { continue };
            let ac = g.compose_3g(a, c, outer).unwrap();
            let bd = g.compose_3g(b, d, outer).unwrap();
            assert_eq!(g.compose_3g(ac, bd, inner).unwrap(), lhs, "{}: {outer:?} over {inner:?}", g.name());
        }
    }
}

#[test]
fn three_g_units_interchange_and_dot_commutativity() {
    for g in small_groups() {
        let arrows = arrows3(&g);
        let iota = g.iota();
        let times_unit = g.arrow3(Elem::E, iota, iota).unwrap();
        for &x in &arrows {
            assert_eq!(g.compose_3g(times_unit, x, Law3::Times).unwrap(), x);
            assert_eq!(g.compose_3g(x, times_unit, Law3::Times).unwrap(), x);
        }
        for &u in arrows.iter().filter(|a| a.g == Elem::E) {
            for &x in &arrows {
                for law in [Law3::Diamond, Law3::Dot] {
                    if u.gamma != iota && law == Law3::Diamond {
                        continue;
                    }
                    if let Ok(y) = g.compose_3g(x, u, law) {
                        assert_eq!(y, x);
                    }
                    if let Ok(y) = g.compose_3g(u, x, law) {
                        assert_eq!(y, x);
                    }
                }
            }
        }
        for &a in &arrows {
            for &b in &arrows {
                if let Ok(ab) = g.compose_3g(a, b, Law3::Dot) {
                    assert_eq!(ab, g.compose_3g(b, a, Law3::Dot).unwrap());
                }
            }
        }
        interchange3(&g, &arrows, Law3::Times, Law3::Diamond);
        interchange3(&g, &arrows, Law3::Times, Law3::Dot);
        interchange3(&g, &arrows, Law3::Diamond, Law3::Dot);
    }
}

/// Negative control: on Z3, a second total law with the same unit that
/// interchanges with addition must be addition.
#[test]
fn eckmann_hilton_collapse_on_z3() {
    let z3 = FiniteGroup::cyclic(3).unwrap();
    let add = |a: usize, b: usize| z3.mul(Elem::from_index(a), Elem::from_index(b)).index();
    let mut survivors = 0;
    for code in 0..81usize {
        let entry = |a: usize, b: usize| -> usize {
            match (a, b) {
                (0, x) | (x, 0) => x,
                _ => code / 3usize.pow(((a - 1) * 2 + (b - 1)) as u32) % 3,
            }
        };
        let interchanges = (0..81).all(|q| {
            let (a, b, c, d) = (q % 3, q / 3 % 3, q / 9 % 3, q / 27);
            entry(add(a, b), add(c, d)) == add(entry(a, c), entry(b, d))
        });
        if interchanges {
            survivors += 1;
            for a in 0..3 {
                for b in 0..3 {
                    assert_eq!(entry(a, b), add(a, b));
                }
            }
        }
    }
    assert_eq!(survivors, 1);
}

#[test]
fn homomorphisms_compose_and_validate() {
    let z12 = FiniteGroup::cyclic(12).unwrap();
    let z6 = FiniteGroup::cyclic(6).unwrap();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let rho = GroupHom::from_cyclic(12, &z6, z6.elem("1").unwrap()).unwrap();
    let gamma = GroupHom::from_cyclic(6, &z2, z2.elem("1").unwrap()).unwrap();
    let c = hom_compose(&gamma, &rho).unwrap();
    for x in z12.elements() {
        assert_eq!(c.apply(x), gamma.apply(rho.apply(x)));
    }
    assert!(hom_compose(&rho, &gamma).is_err());
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let bad = (0..6).map(|i| Elem::from_index(i % 3)).collect();
    assert!(GroupHom::new(z6.clone(), s3, bad).is_err());
}

proptest! {
    #[test]
    fn text_round_trip_and_subgroup_laws(i in 0usize..7, picks in proptest::collection::vec(0usize..6, 0..3)) {
        let g = small_groups().swap_remove(i);
        let back = FiniteGroup::parse(&g.to_text()).unwrap();
        prop_assert_eq!(&back, &g);
        let gens = picks.into_iter().map(|k| Elem::from_index(k % g.order())).collect();
        let h = g.subgroup_generated(&gens);
        prop_assert!(g.is_subgroup(&h));
        prop_assert_eq!(g.order() % h.len(), 0);
        let n = g.normal_closure(&h, &g.elements().collect());
        prop_assert!(g.is_normal_in(&n, &g.elements().collect()));
        prop_assert!(h.is_subset(&n));
        let c = g.centralizer(&h);
        prop_assert!(g.is_subgroup(&c));
        prop_assert!(g.center().is_subset(&c));
    }
}
