use std::collections::{BTreeSet, HashMap};

use posetbundle::poset::{Point, Poset, PosetKind};
use posetbundle::simplicial::{Perm3, Simplex, Simplex2, Simplex3, SimplicialSet};
use proptest::prelude::*;

/// Counts order preserving maps from the nonempty subsets of `{0..n}`.
fn count_subset_maps(p: &Poset, n: usize) -> u64 {
    let full = (1u32 << (n + 1)) - 1;
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let points: Vec<Point> = p.points().collect();
    let mut value: HashMap<u32, Point> = HashMap::new();
    fn go(p: &Poset, pts: &[Point], masks: &[u32], k: usize, full: u32, value: &mut HashMap<u32, Point>) -> u64 {
        if k == masks.len() {
            return 1;
        }
        let m = masks[k];
        let uppers: Vec<Point> = (0..32).filter(|i| full >> i & 1 == 1 && m >> i & 1 == 0).map(|i| value[&(m | 1 << i)]).collect();
        let mut total = 0;
        for &x in pts {
            if uppers.iter().all(|&u| p.leq(x, u)) {
                value.insert(m, x);
                total += go(p, pts, masks, k + 1, full, value);
            }
        }
        value.remove(&m);
        total
    }
    go(p, &points, &masks, 0, full, &mut value)
}

fn fixture(kind: PosetKind, n: usize) -> Poset {
    Poset::generate(kind, n).unwrap()
}

#[test]
fn counts_match_subset_map_oracle() {
    let frozen: [(PosetKind, usize, [u64; 3]); 6] = [
        (PosetKind::Chain, 2, [5, 19, 167]),
        (PosetKind::Chain, 3, [14, 148, 7413]),
        (PosetKind::Chain, 4, [30, 719, 153367]),
        (PosetKind::Circle, 2, [20, 108, 976]),
        (PosetKind::Circle, 3, [30, 162, 1464]),
        (PosetKind::Vee, 2, [11, 55, 489]),
    ];
    for (kind, n, counts) in frozen {
        let p = fixture(kind, n);
        let ss = SimplicialSet::new(p.clone());
        let got = [ss.sigma1().len() as u64, ss.sigma2().len() as u64, ss.sigma3().len() as u64];
        assert_eq!(got, counts, "{kind:?} {n}");
        for (dim, &c) in counts.iter().enumerate() {
            assert_eq!(count_subset_maps(&p, dim + 1), c, "{kind:?} {n} dim {}", dim + 1);
        }
    }
}

fn naive_sigma2(ss: &SimplicialSet) -> BTreeSet<Simplex2> {
    let p = ss.poset();
    let mut out = BTreeSet::new();
    for s in p.points() {
        let below: Vec<_> = ss.sigma1().iter().filter(|b| p.leq(b.support, s)).collect();
        for &&f0 in &below {
            for &&f1 in &below {
                for &&f2 in &below {
                    if f0.face1 == f2.face0 && f0.face0 == f1.face0 && f1.face1 == f2.face1 {
                        out.insert(Simplex2 { support: s, faces: [f0, f1, f2] });
                    }
                }
            }
        }
    }
    out
}

fn naive_sigma3(ss: &SimplicialSet) -> BTreeSet<Simplex3> {
    let p = ss.poset();
    let s2 = ss.sigma2();
    let mut out = BTreeSet::new();
    for s in p.points() {
        let below: Vec<&Simplex2> = s2.iter().filter(|c| p.leq(c.support, s)).collect();
        for c3 in &below {
            for c2 in below.iter().filter(|c2| c2.faces[2] == c3.faces[2]) {
                for c1 in below.iter().filter(|c1| c1.faces[2] == c3.faces[1] && c1.faces[1] == c2.faces[1]) {
                    for c0 in below.iter().filter(|c0| {
                        c0.faces[2] == c3.faces[0] && c0.faces[1] == c2.faces[0] && c0.faces[0] == c1.faces[0]
                    }) {
                        out.insert(Simplex3 { support: s, faces: [**c0, **c1, **c2, **c3] });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn enumeration_is_complete_against_face_filtering() {
    for (kind, n) in [(PosetKind::Chain, 2), (PosetKind::Circle, 2), (PosetKind::Vee, 2)] {
        let ss = SimplicialSet::new(fixture(kind, n));
        let enumerated: BTreeSet<Simplex2> = ss.sigma2().iter().copied().collect();
        assert_eq!(enumerated, naive_sigma2(&ss));
        assert!(ss.sigma2().iter().all(|c| c.faces_compatible() && c.is_valid(ss.poset())));
        let enumerated: BTreeSet<Simplex3> = ss.sigma3().iter().copied().collect();
        assert_eq!(enumerated, naive_sigma3(&ss));
    }
}

fn all_simplices(ss: &SimplicialSet) -> Vec<Simplex> {
    (0..=3).flat_map(|n| ss.enumerate(n, false).unwrap()).collect()
}

fn check_identities(ss: &SimplicialSet) {
    for x in all_simplices(ss) {
        let n = x.dim();
        for j in 0..=n {
            if n >= 2 {
                for i in 0..j {
                    let lhs = x.boundary(j).unwrap().boundary(i).unwrap();
                    let rhs = x.boundary(i).unwrap().boundary(j - 1).unwrap();
                    assert_eq!(lhs, rhs, "∂{i}∂{j}");
                }
            }
            if n < 3 {
                let s = x.degeneracy(j).unwrap();
                for i in 0..=n + 1 {
                    let face = s.boundary(i).unwrap();
                    if i == j || i == j + 1 {
                        assert_eq!(face, x);
                    } else if i < j {
                        assert_eq!(face, x.boundary(i).unwrap().degeneracy(j - 1).unwrap());
                    } else {
                        assert_eq!(face, x.boundary(i - 1).unwrap().degeneracy(j).unwrap());
                    }
                }
                if n < 2 {
                    for i in 0..=j {
                        let lhs = x.degeneracy(j).unwrap().degeneracy(i).unwrap();
                        let rhs = x.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
                        assert_eq!(lhs, rhs, "s{i}s{j}");
                    }
                }
            }
        }
    }
}

fn check_inflating_closure(ss: &SimplicialSet) {
    let p = ss.poset();
    for x in all_simplices(ss).into_iter().filter(|x| x.is_inflating(p)) {
        for i in 0..=x.dim() {
            if x.dim() > 0 {
                assert!(x.boundary(i).unwrap().is_inflating(p));
            }
            if x.dim() < 3 {
                assert!(x.degeneracy(i).unwrap().is_inflating(p));
            }
        }
    }
    for c in ss.sigma2().iter().filter(|c| c.is_inflating(p)) {
        assert!(p.leq(c.faces[1].face1, c.faces[2].face0));
        assert!(p.leq(c.faces[2].face0, c.faces[0].face0));
    }
}

fn check_orientation(ss: &SimplicialSet) {
    for c in ss.sigma2() {
        let [v0, v1, v2] = c.vertices();
        let t = c.permute(Perm3::T01);
        assert_eq!(t.vertices(), [v1, v0, v2]);
        assert_eq!(t.permute(Perm3::T01), *c);
        let orbit: BTreeSet<Simplex2> =
            [Perm3::IDENTITY, Perm3::C02_01, Perm3::C12_01].iter().map(|&s| c.permute(s)).collect();
        assert!(orbit.len() <= 3);
        for d in &orbit {
            assert!(ss.index2(d).is_some());
            let again: BTreeSet<Simplex2> =
                [Perm3::IDENTITY, Perm3::C02_01, Perm3::C12_01].iter().map(|&s| d.permute(s)).collect();
            assert_eq!(again, orbit);
        }
        for s in Perm3::ALL {
            assert!(ss.index2(&c.permute(s)).is_some(), "{} leaves Σ₂", s.name());
        }
    }
}

#[test]
fn identities_closure_and_orientation_on_fixtures() {
    for (kind, n) in [(PosetKind::Chain, 2), (PosetKind::Chain, 3), (PosetKind::Circle, 2), (PosetKind::Vee, 2)] {
        let ss = SimplicialSet::new(fixture(kind, n));
        check_identities(&ss);
        check_inflating_closure(&ss);
        check_orientation(&ss);
    }
}

#[test]
fn dimension_four_is_rejected() {
    let ss = SimplicialSet::new(fixture(PosetKind::Chain, 2));
    assert!(ss.enumerate(4, false).is_err());
}

fn small_poset() -> impl Strategy<Value = Poset> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..6).prop_map(move |v| {
            let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let rels: Vec<(String, String)> =
                v.into_iter().filter(|(a, b)| a < b).map(|(a, b)| (names[a].clone(), names[b].clone())).collect();
            Poset::build("small", &names, &rels).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_posets_satisfy_simplicial_laws(p in small_poset()) {
        let ss = SimplicialSet::new(p.clone());
        prop_assert_eq!(ss.sigma1().len() as u64, count_subset_maps(&p, 1));
        prop_assert_eq!(ss.sigma2().len() as u64, count_subset_maps(&p, 2));
        prop_assert_eq!(ss.sigma3().len() as u64, count_subset_maps(&p, 3));
        let enumerated: BTreeSet<Simplex2> = ss.sigma2().iter().copied().collect();
        prop_assert_eq!(enumerated, naive_sigma2(&ss));
        check_identities(&ss);
        check_inflating_closure(&ss);
        check_orientation(&ss);
    }
}
