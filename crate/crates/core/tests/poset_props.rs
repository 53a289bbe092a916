use posetbundle::poset::{Poset, PosetKind};
use proptest::prelude::*;

/// Element names and generating pairs `(i, j)` with `i < j`, so the result
/// is always antisymmetric.
fn random_relations() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..12)
            .prop_map(|v| v.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>());
        (Just(n), pairs)
    })
}

fn build(n: usize, rels: &[(usize, usize)]) -> Poset {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(String, String)> = rels.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
    Poset::build("random", &names, &pairs).unwrap()
}

fn naive_closure(n: usize, rels: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in rels {
        m[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if m[i][k] && m[k][j] {
                    m[i][j] = true;
                }
            }
        }
    }
    m
}

proptest! {
    #[test]
    fn order_is_the_reflexive_transitive_closure((n, rels) in random_relations()) {
        let p = build(n, &rels);
        let m = naive_closure(n, &rels);
        for a in p.points() {
            for b in p.points() {
                let (i, j) = (p.id(a)[1..].parse::<usize>().unwrap(), p.id(b)[1..].parse::<usize>().unwrap());
                prop_assert_eq!(p.leq(a, b), m[i][j]);
            }
        }
    }

    #[test]
    fn fundamental_opens_are_upward_closed_and_cover((n, rels) in random_relations()) {
        let p = build(n, &rels);
        for a in p.points() {
            let u = p.fundamental_open(a);
            prop_assert!(p.is_open(&u));
            prop_assert!(u.contains(a));
            for x in u.members() {
                for y in p.points() {
                    if p.leq(x, y) {
                        prop_assert!(u.contains(y));
                    }
                }
            }
        }
    }

    #[test]
    fn order_predicates_are_nested((n, rels) in random_relations()) {
        let p = build(n, &rels);
        if p.is_totally_ordered() {
            prop_assert!(p.is_directed());
        }
        if p.is_directed() {
            prop_assert!(p.is_pathwise_connected());
        }
    }

    #[test]
    fn text_round_trip((n, rels) in random_relations()) {
        let p = build(n, &rels);
        let q = Poset::parse(&p.to_text()).unwrap();
        prop_assert_eq!(p.relation_pairs().len(), q.relation_pairs().len());
        for a in p.points() {
            for b in p.points() {
                let (qa, qb) = (q.point(p.id(a)).unwrap(), q.point(p.id(b)).unwrap());
                prop_assert_eq!(p.leq(a, b), q.leq(qa, qb));
            }
        }
    }
}

#[test]
fn generated_fixture_shapes() {
    let chain = Poset::generate(PosetKind::Chain, 4).unwrap();
    assert!(chain.is_totally_ordered());
    let circle = Poset::generate(PosetKind::Circle, 3).unwrap();
    assert_eq!(circle.len(), 6);
    assert!(circle.is_pathwise_connected() && !circle.is_directed());
    let vee = Poset::generate(PosetKind::Vee, 2).unwrap();
    assert!(vee.is_directed() && !vee.is_totally_ordered());
}
