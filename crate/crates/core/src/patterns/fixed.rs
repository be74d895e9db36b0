use crate::graph::Graph;

use super::{FixedPattern, PatternKind, PatternWitness};

/// The induced occurrence of `pattern` with the lexicographically smallest
/// sorted vertex set; ties keep the first role assignment enumerated.
pub fn find_fixed_pattern(g: &Graph, pattern: FixedPattern) -> Option<PatternWitness> {
    let roles = match pattern {
        FixedPattern::Clique(r) => first_clique(g, r),
        FixedPattern::Bull => smallest(bulls(g)),
        FixedPattern::Claw => smallest(claws(g)),
        FixedPattern::Chair => smallest(chairs(g)),
        FixedPattern::C5 => smallest(five_cycles(g)),
    }?;
    let kind = pattern.kind();
    Some(match pattern {
        FixedPattern::Claw => named(kind, &["center", "leaf1", "leaf2", "leaf3"], &roles),
        FixedPattern::Chair => named(kind, &["center", "leaf1", "leaf2", "mid", "end"], &roles),
        _ => PatternWitness::numbered(kind, "v", &roles),
    })
}

fn named(kind: PatternKind, names: &[&str], roles: &[usize]) -> PatternWitness {
    PatternWitness::new(
        kind,
        names
            .iter()
            .zip(roles)
            .map(|(n, &v)| (n.to_string(), v))
            .collect(),
    )
}

fn smallest(candidates: Vec<Vec<usize>>) -> Option<Vec<usize>> {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for roles in candidates {
        let mut key = roles.clone();
        key.sort_unstable();
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, roles));
        }
    }
    best.map(|(_, roles)| roles)
}

/// Ascending DFS; the first complete leaf is the lexicographically smallest.
fn first_clique(g: &Graph, r: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, r: usize, from: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == r {
            return true;
        }
        for v in from..g.n() {
            if g.n() - v < r - cur.len() {
                return false;
            }
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                if go(g, r, v + 1, cur) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::new();
    go(g, r, 0, &mut cur).then_some(cur)
}

/// Roles `v1 … v5`: triangle `v2 v3 v4` with pendants `v1` on `v2` and `v5`
/// on `v4`.
fn bulls(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v2 in 0..g.n() {
        for &v4 in g.neighbors(v2).iter().filter(|&&x| x > v2) {
            for &v3 in g.neighbors(v2).iter().filter(|&&x| g.has_edge(x, v4)) {
                let pendants = |a: usize, b: usize| -> Vec<usize> {
                    g.neighbors(a)
                        .iter()
                        .copied()
                        .filter(|&x| x != b && x != v3 && !g.has_edge(x, b) && !g.has_edge(x, v3))
                        .collect()
                };
                let left = pendants(v2, v4);
                let right = pendants(v4, v2);
                for &v1 in &left {
                    for &v5 in &right {
                        if v1 != v5 && !g.has_edge(v1, v5) {
                            out.push(vec![v1, v2, v3, v4, v5]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn independent_triples(g: &Graph, pool: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (i, &a) in pool.iter().enumerate() {
        for (j, &b) in pool.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &pool[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Roles `center, leaf1, leaf2, leaf3`.
fn claws(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .flat_map(|c| {
            independent_triples(g, g.neighbors(c))
                .into_iter()
                .map(move |[a, b, d]| vec![c, a, b, d])
        })
        .collect()
}

/// Roles `center, leaf1, leaf2, mid, end`: a claw whose third edge
/// `center–mid` is extended to `end`.
fn chairs(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for c in 0..g.n() {
        for &m in g.neighbors(c) {
            for &e in g.neighbors(m) {
                if e == c || g.has_edge(e, c) {
                    continue;
                }
                let leaves: Vec<usize> = g
                    .neighbors(c)
                    .iter()
                    .copied()
                    .filter(|&x| x != m && !g.has_edge(x, m) && !g.has_edge(x, e) && x != e)
                    .collect();
                for (i, &l1) in leaves.iter().enumerate() {
                    for &l2 in &leaves[i + 1..] {
                        if !g.has_edge(l1, l2) {
                            out.push(vec![c, l1, l2, m, e]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Roles `v1 … v5` in cycle order, `v1` the smallest vertex and `v2 < v5`.
fn five_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v1 in 0..g.n() {
        let nb: Vec<usize> = g
            .neighbors(v1)
            .iter()
            .copied()
            .filter(|&x| x > v1)
            .collect();
        for (i, &v2) in nb.iter().enumerate() {
            for &v5 in &nb[i + 1..] {
                if g.has_edge(v2, v5) {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 <= v1 || v3 == v5 || g.has_edge(v3, v1) || g.has_edge(v3, v5) {
                        continue;
                    }
                    for &v4 in g.neighbors(v3) {
                        if v4 > v1
                            && v4 != v2
                            && g.has_edge(v4, v5)
                            && !g.has_edge(v4, v1)
                            && !g.has_edge(v4, v2)
                        {
                            out.push(vec![v1, v2, v3, v4, v5]);
                        }
                    }
                }
            }
        }
    }
    out
}
