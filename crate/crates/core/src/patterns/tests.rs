use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::generators::{antihole, build_expansion, complete, cycle, spindle, wheel};

fn bull() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap()
}

fn claw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    Graph::from_adjacency(n, |_, _| rng.gen_bool(p))
}

/// Lexicographically first subset of size `t.n()` inducing a copy of `t`,
/// by plain enumeration of subsets and permutations.
fn brute_force(g: &Graph, t: &Graph) -> Option<Vec<usize>> {
    fn permutations(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(k - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, k - 1);
                out.push(q);
            }
        }
        out
    }
    let k = t.n();
    let perms = permutations(k);
    let n = g.n();
    let mut subset: Vec<usize> = (0..k).collect();
    if k > n {
        return None;
    }
    loop {
        let hit = perms.iter().any(|perm| {
            (0..k).all(|i| {
                (i + 1..k).all(|j| t.has_edge(i, j) == g.has_edge(subset[perm[i]], subset[perm[j]]))
            })
        });
        if hit {
            return Some(subset);
        }
        // Next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if subset[i] < n - k + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[test]
fn fixed_examples() {
    let w = find_fixed_pattern(&claw(), FixedPattern::Claw).unwrap();
    assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    assert_eq!(w.role("center"), Some(0));
    assert!(find_fixed_pattern(&cycle(6).unwrap(), FixedPattern::Bull).is_none());
    let w = find_fixed_pattern(&bull(), FixedPattern::Bull).unwrap();
    assert!(verify_witness(&bull(), &w));
    assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
    assert!(find_fixed_pattern(&spindle(2).unwrap(), FixedPattern::Claw).is_none());
    let k = find_fixed_pattern(&complete(5).unwrap(), FixedPattern::Clique(3)).unwrap();
    assert_eq!(k.vertices, vec![0, 1, 2]);
}

#[test]
fn bull_roles_follow_definition() {
    // Relabel the bull so the search has to discover the roles.
    let g = Graph::new(5, &[(4, 3), (3, 0), (0, 2), (2, 1), (3, 2)]).unwrap();
    let w = find_fixed_pattern(&g, FixedPattern::Bull).unwrap();
    assert!(verify_witness(&g, &w));
    assert_eq!(w.role("v3"), Some(0));
}

#[test]
fn fixed_patterns_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..400 {
        let n = 4 + round % 6;
        let p = [0.2, 0.35, 0.5, 0.65, 0.8][round % 5];
        let g = random_graph(&mut rng, n, p);
        for f in [
            FixedPattern::Bull,
            FixedPattern::Claw,
            FixedPattern::Chair,
            FixedPattern::C5,
        ] {
            let (_, t) = template(&f.kind());
            let expect = brute_force(&g, &t);
            let got = find_fixed_pattern(&g, f);
            assert_eq!(
                got.as_ref().map(|w| w.vertices.clone()),
                expect,
                "{f} on {g:?}"
            );
            if let Some(w) = got {
                assert!(verify_witness(&g, &w), "{f} witness on {g:?}");
            }
        }
    }
}

#[test]
fn witnesses_are_sound_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let search = PatternSearch::default();
    for round in 0..1000 {
        let n = 5 + round % 8;
        let p = [0.25, 0.45, 0.6, 0.75][round % 4];
        let g = random_graph(&mut rng, n, p);
        let mut found = vec![];
        for f in [
            FixedPattern::Bull,
            FixedPattern::Claw,
            FixedPattern::Chair,
            FixedPattern::C5,
            FixedPattern::Clique(4),
        ] {
            found.extend(find_fixed_pattern(&g, f));
        }
        found.extend(search.odd_hole(&g, 5).unwrap());
        found.extend(search.odd_antihole(&g, 5).unwrap());
        found.extend(search.odd_wheel(&g, None).unwrap());
        found.extend(search.spindle(&g).unwrap());
        for w in found {
            assert!(verify_witness(&g, &w), "{} on {g:?}", w.kind);
        }
    }
}

#[test]
fn hole_examples() {
    let c7 = cycle(7).unwrap();
    let w = find_odd_hole(&c7, 5).unwrap().unwrap();
    assert_eq!(w.kind, PatternKind::OddHole(7));
    assert_eq!(w.vertices, (0..7).collect::<Vec<_>>());
    assert!(find_odd_hole(&complete(5).unwrap(), 5).unwrap().is_none());
    let m10 = build_expansion(&[2, 1, 2, 1, 2, 1, 1]).unwrap();
    let w = find_odd_hole(&m10, 7).unwrap().unwrap();
    assert_eq!(w.kind, PatternKind::OddHole(7));
    assert!(verify_witness(&m10, &w));
    assert!(find_odd_hole(&cycle(6).unwrap(), 5).unwrap().is_none());
    assert!(find_odd_hole(&cycle(5).unwrap(), 7).unwrap().is_none());
}

#[test]
fn antihole_examples() {
    let a7 = antihole(7).unwrap();
    let w = find_odd_antihole(&a7, 7).unwrap().unwrap();
    assert_eq!(w.vertices, (0..7).collect::<Vec<_>>());
    let order = w.ordered();
    for i in 0..7 {
        assert!(!a7.has_edge(order[i], order[(i + 1) % 7]));
    }
    assert!(find_odd_antihole(&cycle(9).unwrap(), 7).unwrap().is_none());
    let k33 = Graph::from_adjacency(6, |u, v| (u < 3) != (v < 3));
    assert!(find_odd_antihole(&k33, 5).unwrap().is_none());
}

#[test]
fn spindle_examples() {
    let m7 = spindle(2).unwrap();
    let w = find_spindle(&m7).unwrap().unwrap();
    assert_eq!(w.kind, PatternKind::Spindle(2));
    assert_eq!(w.vertices.len(), 7);
    assert!(verify_witness(&m7, &w));
    assert!(find_spindle(&cycle(7).unwrap()).unwrap().is_none());
    let w = find_spindle(&complete(4).unwrap()).unwrap().unwrap();
    assert_eq!(w.kind, PatternKind::Spindle(1));
    for p in 3..=5 {
        let g = spindle(p).unwrap();
        let w = find_spindle(&g).unwrap().unwrap();
        assert_eq!(w.kind, PatternKind::Spindle(p));
        assert!(verify_witness(&g, &w));
    }
}

#[test]
fn spindle_template_search_without_expansion_shortcut() {
    // M7 plus a pendant vertex is not an expansion, so the template path runs.
    let mut edges = spindle(2).unwrap().edges();
    edges.push((0, 7));
    let g = Graph::new(8, &edges).unwrap();
    let w = find_spindle(&g).unwrap().unwrap();
    assert_eq!(w.kind, PatternKind::Spindle(2));
    assert!(verify_witness(&g, &w));
    // An expansion with big blocks next to each other has no spindle.
    let g = build_expansion(&[2, 2, 1, 1, 1, 1, 1]).unwrap();
    assert!(find_spindle(&g).unwrap().is_some()); // K4 from the two 2-blocks
    let g = build_expansion(&[2, 1, 1, 1, 1, 1, 1]).unwrap();
    assert!(find_spindle(&g).unwrap().is_none());
}

#[test]
fn wheel_examples() {
    let w5 = wheel(5).unwrap();
    let w = find_odd_wheel(&w5, None).unwrap().unwrap();
    assert_eq!(w.role("hub"), Some(5));
    assert_eq!(w.kind, PatternKind::OddWheel(5));
    assert!(find_odd_wheel(&complete(4).unwrap(), None)
        .unwrap()
        .is_none());
    let g = cycle(7).unwrap().join(&complete(1).unwrap());
    let w = find_odd_wheel(&g, None).unwrap().unwrap();
    assert_eq!(w.role("hub"), Some(7));
    assert!(find_odd_wheel(&g, Some(5)).unwrap().is_none());
    assert!(find_odd_wheel(&g, Some(7)).unwrap().is_some());
}

#[test]
fn perfection_examples() {
    assert!(is_perfect_desk(&cycle(6).unwrap()).unwrap());
    assert!(!is_perfect_desk(&cycle(5).unwrap()).unwrap());
    assert!(!is_perfect_desk(&antihole(9).unwrap()).unwrap());
    assert!(matches!(
        is_perfect_desk(&Graph::empty(26)),
        Err(Error::DeskCapExceeded(_))
    ));
}

#[test]
fn joins() {
    let g = antihole(7).unwrap().join(&complete(2).unwrap());
    let kind = PatternKind::join(PatternKind::OddAntihole(7), 2);
    let w = find_pattern(&g, &kind).unwrap().unwrap();
    assert_eq!(w.kind.to_string(), "C7bar+K2");
    assert!(verify_witness(&g, &w));
    assert!(
        find_pattern(&g, &PatternKind::join(PatternKind::OddAntihole(7), 3))
            .unwrap()
            .is_none()
    );
    let g = spindle(2).unwrap().join(&complete(1).unwrap());
    let w = find_pattern(&g, &PatternKind::join(PatternKind::Spindle(2), 1))
        .unwrap()
        .unwrap();
    assert_eq!(w.kind.to_string(), "M7+K1");
    assert_eq!(w.role("apex1"), Some(7));
}

#[test]
fn budget_is_enforced() {
    let g = build_expansion(&[1; 21]).unwrap();
    let tiny = PatternSearch::with_budget(5);
    assert!(matches!(
        tiny.odd_hole(&g, 5),
        Err(Error::TimeBudgetExceeded(5))
    ));
}

#[test]
fn witness_json_shape() {
    let w = find_fixed_pattern(&claw(), FixedPattern::Claw).unwrap();
    let v: serde_json::Value = serde_json::to_value(&w).unwrap();
    assert_eq!(v["kind"], "claw");
    assert_eq!(v["vertices"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(v["roles"]["center"], 0);
}

#[test]
fn tampered_witness_fails_verification() {
    let g = cycle(7).unwrap();
    let mut w = find_odd_hole(&g, 5).unwrap().unwrap();
    w.roles.swap(0, 1);
    let names: Vec<String> = (1..=7).map(|i| format!("v{i}")).collect();
    for (r, name) in w.roles.iter_mut().zip(names) {
        r.0 = name;
    }
    assert!(!verify_witness(&g, &w));
}

#[test]
fn pattern_names_parse() {
    assert_eq!("bull".parse::<FixedPattern>().unwrap(), FixedPattern::Bull);
    assert_eq!(
        "K6".parse::<FixedPattern>().unwrap(),
        FixedPattern::Clique(6)
    );
    assert!("wheel".parse::<FixedPattern>().is_err());
}
