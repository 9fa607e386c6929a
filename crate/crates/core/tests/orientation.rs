mod common;

use common::*;
use mtlz::graph::{FourCycle, Graph};
use mtlz::orientation::*;
use std::collections::BTreeSet;

type Name = (usize, usize, usize, usize);

/// Normal form of r_{acbd}: the pair and the two middles, each sorted.
fn normal((a, c, b, d): Name) -> Name {
    (a.min(b), a.max(b), c.min(d), c.max(d))
}

fn printed(names: &[&str]) -> BTreeSet<Name> {
    names.iter().map(|n| normal(parse_r_name(n))).collect()
}

fn positives(sys: &RConstraintSystem, r: &RAssignment) -> BTreeSet<Name> {
    r.positives(sys).map(|v| normal((v.a, v.c, v.b, v.d))).collect()
}

const SET_ONE: [&str; 8] = ["1263", "1273", "2607", "4608", "2637", "2648", "6270", "6284"];
const SET_TWO: [&str; 8] = ["1264", "1273", "2608", "4608", "2136", "2146", "6273", "6280"];
const FORCED: [&str; 12] =
    ["1284", "1495", "3607", "5709", "2157", "3146", "3157", "4159", "6490", "7280", "7590", "8490"];

#[test]
fn worked_example_system() {
    let g = family("1441-2");
    let sys = build_r_system(&g).unwrap();
    assert_eq!(sys.variables.len(), 36);
    assert_eq!(sys.pairs.len(), 20);
    assert_eq!(sys.pairs.iter().filter(|p| p.common.len() == 2).count(), 12);
    assert_eq!(sys.pairs.iter().filter(|p| p.common.len() == 3).count(), 8);
    let forced: BTreeSet<Name> =
        sys.forced.iter().map(|&i| sys.variables[i]).map(|v| normal((v.a, v.c, v.b, v.d))).collect();
    assert_eq!(forced, printed(&FORCED));
    for name in FORCED {
        let (a, c, b, d) = parse_r_name(name);
        assert!(sys.variable_index(a, c, b, d).is_some());
    }
}

#[test]
fn variable_census() {
    for name in ["q2", "q3", "k2,3", "k2,5", "k2*k2,3", "1441-2", "g1463", "g14631", "g13631", "clebsch16"] {
        let g = family(name);
        let sys = build_r_system(&g).unwrap();
        let expected: usize = g.distance_two_pairs().iter().map(|p| p.common.len() * (p.common.len() - 1) / 2).sum();
        assert_eq!(sys.variables.len(), expected, "{name}");
        let forced = g.distance_two_pairs().iter().filter(|p| p.common.len() == 2).count();
        assert_eq!(sys.forced.len(), forced, "{name}");
    }
    let c4 = build_r_system(&family("q2")).unwrap();
    assert_eq!((c4.variables.len(), c4.forced.len()), (2, 2));
    // Three spoke pairs with two paths each, and the hub pair with three.
    let k23 = build_r_system(&family("k2,3")).unwrap();
    assert_eq!((k23.variables.len(), k23.forced.len()), (6, 3));
}

#[test]
fn worked_example_branch_search() {
    let g = family("1441-2");
    let res = branch_search(&g).unwrap();
    assert_eq!(res.classes.len(), 2);
    for class in &res.classes {
        assert_eq!(class.r_solutions.len(), 2);
    }
    assert_eq!(res.reversal_classes, 4);
    assert_eq!(res.isomorphism_classes, 4);

    let (one, two) = (printed(&SET_ONE), printed(&SET_TWO));
    let matching: Vec<&RawSurvivor> = res
        .raw
        .iter()
        .filter(|s| {
            let sets: BTreeSet<BTreeSet<Name>> = s.r_solutions.iter().map(|r| positives(&res.system, r)).collect();
            sets == BTreeSet::from([one.clone(), two.clone()])
        })
        .collect();
    assert!(!matching.is_empty());

    // The printed sets satisfy r_{1263} = -r_{2136}.
    let (a, c, b, d) = parse_r_name("1263");
    let first = res.system.variable_index(a, c, b, d).unwrap();
    let (a, c, b, d) = parse_r_name("2136");
    let second = res.system.variable_index(a, c, b, d).unwrap();
    for s in &matching {
        for r in &s.r_solutions {
            assert_eq!(r.values[first], -r.values[second]);
        }
    }
}

#[test]
fn survivors_satisfy_their_systems() {
    for name in ["1441-2", "q3", "k2*k2,3", "fan4", "g14631", "g13631"] {
        let g = family(name);
        let res = branch_search(&g).unwrap();
        assert!(!res.raw.is_empty(), "{name}");
        for s in &res.raw {
            let sys = res.system.with_orientation(&s.orientation).unwrap();
            for c in g.four_cycles() {
                assert_ne!(classify_cycle(&s.orientation, &c), CycleOrientationClass::Invalid);
            }
            assert!(!s.r_solutions.is_empty());
            for r in &s.r_solutions {
                assert!(sys.is_satisfied_by(r));
                // Path signs reproduce every pairwise r.
                for (p, pair) in sys.pairs.iter().enumerate() {
                    let sigma = sys.sigma(r, p).unwrap();
                    for i in 0..pair.common.len() {
                        for j in i + 1..pair.common.len() {
                            let v = sys.variable_index(pair.a, pair.common[i], pair.b, pair.common[j]).unwrap();
                            assert_eq!(r.values[v], sigma[i] * sigma[j]);
                        }
                    }
                }
            }
            // Every other assignment fails.
            let n = sys.variables.len();
            if n <= 16 {
                let count = (0u64..1 << n)
                    .filter(|m| sys.is_satisfied_by(&RAssignment {
                        values: (0..n).map(|i| if m >> i & 1 == 1 { 1 } else { -1 }).collect(),
                    }))
                    .count();
                assert_eq!(count, s.r_solutions.len(), "{name}");
            }
        }
    }
}

#[test]
fn zero_two_graphs_have_no_survivors() {
    for name in ["g1463", "clebsch16"] {
        let res = branch_search(&family(name)).unwrap();
        assert!(res.classes.is_empty() && res.raw.is_empty(), "{name}");
        // Every cut comes from a cycle whose two forced diagonals must be
        // opposite, or from an invalid cycle.
        assert!(res.pruned.link_contradiction > 0);
        assert_eq!(res.pruned.sign_clause, 0);
        assert_eq!(res.pruned.leaf_unsolvable, 0);
    }
}

#[test]
fn output_is_invariant_under_relabeling() {
    let mut rng = rng(17);
    for name in ["1441-2", "k2*k2,3", "fan4"] {
        let g = family(name);
        let base = branch_search(&g).unwrap();
        let keys: BTreeSet<String> = base.classes.iter().map(|c| c.key.clone()).collect();
        let counts: BTreeSet<(String, usize)> =
            base.classes.iter().map(|c| (c.key.clone(), c.r_solutions.len())).collect();
        for _ in 0..5 {
            let h = g.permute(&random_permutation(g.n(), &mut rng));
            let res = branch_search(&h).unwrap();
            assert_eq!(res.classes.iter().map(|c| c.key.clone()).collect::<BTreeSet<_>>(), keys);
            assert_eq!(res.raw.len(), base.raw.len());
            assert_eq!(
                res.classes.iter().map(|c| (c.key.clone(), c.r_solutions.len())).collect::<BTreeSet<_>>(),
                counts
            );
        }
    }
}

#[test]
fn cycle_classes() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let cycle = FourCycle::from_cycle([0, 1, 2, 3]);
    let o = |arrows: &[(usize, usize)]| Orientation::from_arrows(&c4, arrows).unwrap();
    // Two layers, all arrows upward from {0, 2} to {1, 3}.
    assert_eq!(classify_cycle(&o(&[(0, 1), (2, 1), (2, 3), (0, 3)]), &cycle), CycleOrientationClass::BipartiteClass);
    // Three layers: 0 at the bottom, 2 at the top.
    assert_eq!(classify_cycle(&o(&[(0, 1), (1, 2), (3, 2), (0, 3)]), &cycle), CycleOrientationClass::NonBipartiteClass);
    assert_eq!(classify_cycle(&o(&[(0, 1), (1, 2), (2, 3), (3, 0)]), &cycle), CycleOrientationClass::Invalid);
    // Source 0 adjacent to sink 1.
    assert_eq!(classify_cycle(&o(&[(0, 1), (2, 1), (3, 2), (0, 3)]), &cycle), CycleOrientationClass::Invalid);
    assert_eq!(o(&[(0, 1), (1, 2), (3, 2), (0, 3)]).s(0, 1), -1);
}

#[test]
fn all_up_orientations() {
    let classes = |g: &Graph, root: usize| -> Vec<(usize, CycleOrientationClass)> {
        let o = all_up_orientation(g, root).unwrap();
        let ld = g.layer_decomposition(root).unwrap();
        g.four_cycles()
            .iter()
            .map(|c| {
                let layers: BTreeSet<usize> = c.vertices().iter().map(|&v| ld.layer_of(v).unwrap()).collect();
                (layers.len(), classify_cycle(&o, c))
            })
            .collect()
    };
    let g = family("g14631");
    let cs = classes(&g, 0);
    assert!(cs.iter().any(|c| c.0 == 2));
    for (span, class) in cs {
        let want =
            if span == 3 { CycleOrientationClass::NonBipartiteClass } else { CycleOrientationClass::BipartiteClass };
        assert_eq!(class, want);
    }
    let q3 = classes(&family("q3"), 0);
    assert_eq!(q3.len(), 6);
    assert!(q3.iter().all(|c| c.1 == CycleOrientationClass::NonBipartiteClass));
    assert_eq!(classes(&family("q2"), 0), vec![(3, CycleOrientationClass::NonBipartiteClass)]);
    assert!(all_up_orientation(&family("clebsch16"), 0).is_err());
}

#[test]
fn rejects_non_candidates() {
    assert_eq!(build_r_system(&family("k3,3")), Err(SystemError::NotCandidate));
    assert!(branch_search(&family("k3,3")).is_err());
}
