//! Constructors for the named graph families and seeded random sampling of
//! connected graphs avoiding a list of fixed patterns.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::feasibility;
use crate::graph::Graph;
use crate::patterns::{find_fixed_pattern, FixedPattern};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall(format!("cycle of length {n}")));
    }
    Ok(Graph::from_adjacency(n, |u, v| {
        v - u == 1 || (u == 0 && v == n - 1)
    }))
}

pub fn antihole(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::TooSmall(format!("antihole of length {n}")));
    }
    Ok(cycle(n)?.complement())
}

pub fn complete(r: usize) -> Result<Graph> {
    Ok(Graph::from_adjacency(r, |_, _| true))
}

/// The rim cycle on `0..rim_len` joined to a hub at index `rim_len`.
pub fn wheel(rim_len: usize) -> Result<Graph> {
    Ok(cycle(rim_len)?.join(&complete(1)?))
}

/// `M_{3p+1}` on vertices `u_0 … u_{3p}` (vertex `i` is `u_i`): the cycle
/// `u_0 u_1 … u_{3p} u_0`, each `u_{3i}` with `1 ≤ i < p` adjacent to
/// `u_{3i±1}, u_{3i±2}`, and each pair `u_{3i−2}, u_{3i−1}` joined to both
/// `u_{3i−3}` and `u_{3i}`.
pub fn spindle(p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::TooSmall("spindle with p = 0".into()));
    }
    let n = 3 * p + 1;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 1..p {
        let c = 3 * i;
        edges.extend([(c, c - 2), (c, c - 1), (c, c + 1), (c, c + 2)]);
    }
    for i in 1..=p {
        let (a, b) = (3 * i - 2, 3 * i - 1);
        edges.extend([
            (a, 3 * i - 3),
            (b, 3 * i - 3),
            (a, 3 * i % n),
            (b, 3 * i % n),
        ]);
    }
    Graph::new(n, &edges)
}

/// `C_p[sizes]` with blocks laid out consecutively in the given order.
pub fn build_expansion(sizes: &[usize]) -> Result<Graph> {
    if sizes.len() < 3 {
        return Err(Error::TooSmall(format!(
            "expansion of a cycle of length {}",
            sizes.len()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidSizes("blocks must be nonempty".into()));
    }
    let p = sizes.len();
    let block: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    Ok(Graph::from_adjacency(block.len(), |u, v| {
        let d = (block[v] + p - block[u]) % p;
        d == 0 || d == 1 || d == p - 1
    }))
}

/// Block layout of the spindle as an expansion of `C_{2p+1}`: `(2,1)` repeated
/// `p` times followed by a single `1`.
pub fn spindle_sizes(p: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = (0..p).flat_map(|_| [2, 1]).collect();
    sizes.push(1);
    sizes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExceptionalVariant {
    /// `[2, 2, …, 2, 1]` for k = 4; in general `(⌈k/2⌉, ⌊k/2⌋)` pairs and a 1.
    AllTwosOne,
    /// `[2, 2, 1, 3, 1, 3, …, 1]` for k = 4: one leading pair, a 1, then
    /// `(k−1, 1)` pairs.
    TwosThenOneThreeAlt,
}

pub fn exceptional_sizes(k: usize, i: usize, variant: ExceptionalVariant) -> Result<Vec<usize>> {
    if i < 2 {
        return Err(Error::TooSmall(format!(
            "exceptional expansion with i = {i}"
        )));
    }
    let (high, low) = (k.div_ceil(2), k / 2);
    let sizes: Vec<usize> = match variant {
        ExceptionalVariant::AllTwosOne => {
            let mut s: Vec<usize> = (0..i).flat_map(|_| [high, low]).collect();
            s.push(1);
            s
        }
        ExceptionalVariant::TwosThenOneThreeAlt => {
            let mut s = vec![high, low, 1];
            for _ in 1..i {
                s.extend([k - 1, 1]);
            }
            s
        }
    };
    let report = feasibility(&sizes, k)?;
    if report.pair_violation.is_some() || report.sum_slack >= 0 {
        return Err(Error::NotAnObstruction(sizes, k));
    }
    Ok(sizes)
}

/// The expansion from [`exceptional_sizes`]; it needs `k + 1` colors.
pub fn exceptional(k: usize, i: usize, variant: ExceptionalVariant) -> Result<Graph> {
    build_expansion(&exceptional_sizes(k, i, variant)?)
}

/// Seeded `G(n, p)` with local repair: while a forbidden pattern occurs,
/// one of its edges (picked from the seed stream) is deleted. A sample is
/// abandoned after `n²` repairs or if it ends disconnected, and the whole
/// call gives up after `max_tries` samples.
pub fn random_hfree(
    n: usize,
    edge_prob: f64,
    forbidden: &[FixedPattern],
    seed: u64,
    max_tries: usize,
) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                    edges.push((u, v));
                }
            }
        }
        if let Some(g) = repair(n, edges, forbidden, &mut rng) {
            return Some(g);
        }
    }
    None
}

/// Like [`random_hfree`] but starts from `base` on the first vertices and
/// attaches the remaining `n − base.n()` vertices at random. Repair may
/// damage the planted structure; callers check what survived.
pub fn random_planted(
    base: &Graph,
    n: usize,
    edge_prob: f64,
    forbidden: &[FixedPattern],
    seed: u64,
    max_tries: usize,
) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = base.n().min(n);
    for _ in 0..max_tries {
        let mut edges: Vec<(usize, usize)> = base
            .edges()
            .into_iter()
            .filter(|&(u, v)| u < b && v < b)
            .collect();
        for u in 0..n {
            for v in b.max(u + 1)..n {
                if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                    edges.push((u, v));
                }
            }
        }
        if let Some(g) = repair(n, edges, forbidden, &mut rng) {
            return Some(g);
        }
    }
    None
}

fn repair(
    n: usize,
    mut edges: Vec<(usize, usize)>,
    forbidden: &[FixedPattern],
    rng: &mut ChaCha8Rng,
) -> Option<Graph> {
    let mut g = Graph::new(n, &edges).expect("generated edges are valid");
    let mut repairs = 0;
    while let Some(w) = forbidden.iter().find_map(|&f| find_fixed_pattern(&g, f)) {
        repairs += 1;
        if repairs > n * n {
            return None;
        }
        let inside: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|(u, v)| w.vertices.contains(u) && w.vertices.contains(v))
            .collect();
        // Every listed pattern has an edge, so `inside` is nonempty.
        let &(u, v) = inside.choose(rng)?;
        edges.retain(|&e| e != (u, v) && e != (v, u));
        g = Graph::new(n, &edges).expect("subset of valid edges");
    }
    g.is_connected().then_some(g)
}

/// A connected graph with independence number exactly 2, built as the
/// complement of a random triangle-free graph with at least one edge.
/// Pairs are visited in seeded order and kept with probability `density`
/// whenever they close no triangle.
pub fn random_alpha2(n: usize, density: f64, seed: u64, max_tries: usize) -> Option<Graph> {
    if n < 2 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        pairs.shuffle(&mut rng);
        let mut adj = vec![vec![false; n]; n];
        let mut any = false;
        for (u, v) in pairs {
            if !rng.gen_bool(density.clamp(0.0, 1.0)) {
                continue;
            }
            if (0..n).any(|w| adj[u][w] && adj[v][w]) {
                continue;
            }
            adj[u][v] = true;
            adj[v][u] = true;
            any = true;
        }
        if !any {
            continue;
        }
        let g = Graph::from_adjacency(n, |u, v| !adj[u][v]);
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::{canonical_sizes, recognize_clique_expansion};
    use crate::oracle::chromatic_number;

    #[test]
    fn small_families() {
        let a5 = antihole(5).unwrap();
        assert!(a5.degrees().iter().all(|&d| d == 2));
        assert_eq!(a5.edge_count(), 5);
        assert!(antihole(7).unwrap().degrees().iter().all(|&d| d == 4));
        let w5 = wheel(5).unwrap();
        assert_eq!(w5.degree(5), 5);
        assert_eq!(chromatic_number(&w5).unwrap(), 4);
        assert!(matches!(cycle(2), Err(Error::TooSmall(_))));
        assert!(matches!(antihole(4), Err(Error::TooSmall(_))));
    }

    #[test]
    fn spindle_edge_counts() {
        assert_eq!(spindle(1).unwrap(), complete(4).unwrap());
        let m7 = spindle(2).unwrap();
        assert_eq!((m7.n(), m7.edge_count()), (7, 11));
        assert_eq!(chromatic_number(&m7).unwrap(), 4);
        let m10 = spindle(3).unwrap();
        assert_eq!((m10.n(), m10.edge_count()), (10, 16));
        assert_eq!(chromatic_number(&m10).unwrap(), 4);
    }

    #[test]
    fn spindle_neighborhood_equations() {
        for p in 1..=6 {
            let g = spindle(p).unwrap();
            let n = 3 * p + 1;
            for i in 1..=p {
                let c = 3 * i % n;
                if i < p {
                    let mut expect = vec![c - 2, c - 1, c + 1, c + 2];
                    expect.sort_unstable();
                    assert_eq!(g.neighbors(c), expect.as_slice());
                }
                let a = g.neighbors(3 * i - 2);
                let b = g.neighbors(3 * i - 1);
                let mut common: Vec<usize> = a
                    .iter()
                    .copied()
                    .filter(|x| b.contains(x) && *x != 3 * i - 2 && *x != 3 * i - 1)
                    .collect();
                common.sort_unstable();
                let mut expect = vec![3 * i - 3, c];
                expect.sort_unstable();
                expect.dedup();
                assert_eq!(common, expect, "p = {p}, i = {i}");
            }
        }
    }

    #[test]
    fn spindle_matches_expansion_shape() {
        for p in 2..=5 {
            let r = recognize_clique_expansion(&spindle(p).unwrap())
                .unwrap()
                .unwrap();
            assert_eq!(r.sizes, canonical_sizes(&spindle_sizes(p)));
        }
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(build_expansion(&[1; 5]).unwrap(), cycle(5).unwrap());
        let m10 = build_expansion(&[2, 1, 2, 1, 2, 1, 1]).unwrap();
        assert_eq!(chromatic_number(&m10).unwrap(), 4);
        assert_eq!(
            chromatic_number(&build_expansion(&[1, 3, 1, 3, 1]).unwrap()).unwrap(),
            5
        );
        assert!(matches!(build_expansion(&[1, 1]), Err(Error::TooSmall(_))));
    }

    #[test]
    fn exceptional_examples() {
        use ExceptionalVariant::*;
        assert_eq!(
            exceptional_sizes(4, 2, AllTwosOne).unwrap(),
            vec![2, 2, 2, 2, 1]
        );
        assert_eq!(
            exceptional_sizes(4, 2, TwosThenOneThreeAlt).unwrap(),
            vec![2, 2, 1, 3, 1]
        );
        assert_eq!(
            exceptional_sizes(4, 3, AllTwosOne).unwrap(),
            vec![2, 2, 2, 2, 2, 2, 1]
        );
        assert_eq!(
            exceptional_sizes(5, 2, AllTwosOne).unwrap(),
            vec![3, 2, 3, 2, 1]
        );
        for k in [4, 5] {
            for i in 2..=3 {
                for v in [AllTwosOne, TwosThenOneThreeAlt] {
                    let g = exceptional(k, i, v).unwrap();
                    if g.n() <= 14 {
                        assert_eq!(chromatic_number(&g).unwrap(), k + 1, "k={k} i={i} {v:?}");
                    }
                }
            }
        }
        assert!(matches!(
            exceptional(4, 1, AllTwosOne),
            Err(Error::TooSmall(_))
        ));
    }

    #[test]
    fn random_hfree_is_deterministic_and_free() {
        use FixedPattern::*;
        let a = random_hfree(8, 0.5, &[Bull, Claw], 1, 100).unwrap();
        let b = random_hfree(8, 0.5, &[Bull, Claw], 1, 100).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        let t = random_hfree(3, 1.0, &[Clique(3)], 7, 100).unwrap();
        assert!(t.edge_count() <= 2);
        let g = random_hfree(10, 0.4, &[Bull, Chair, C5], 42, 200).unwrap();
        for f in [Bull, Chair, C5] {
            assert!(find_fixed_pattern(&g, f).is_none());
        }
    }

    #[test]
    fn random_alpha2_has_alpha_two() {
        use crate::oracle::independence_number;
        for seed in 0..20 {
            let g = random_alpha2(9, 0.5, seed, 50).unwrap();
            assert_eq!(independence_number(&g).unwrap(), 2);
            assert!(g.is_connected());
        }
    }
}
