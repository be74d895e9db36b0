use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{PatternKind, PatternWitness};

/// Attachment type of a vertex outside a reference hole or antihole
/// `v1 … vp`. Indices are 1-based and cyclic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NeighborClass {
    /// Hole: neighbors `v_{i−1}, v_i, v_{i+1}`. Antihole of length 5:
    /// neighbors `v_i, v_{i+1}, v_{i+3}`.
    A(usize),
    /// Antihole of length 5: neighbors `v_i, …, v_{i+3}`.
    B(usize),
    /// Antihole: adjacent to every reference vertex.
    C,
    /// Hole: adjacent to every reference vertex.
    D,
    /// Antihole of length at least 7: the missing indices, no two of them
    /// consecutive.
    Partial(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborClassification {
    /// Reference vertices in (complement-)cycle order.
    pub reference: Vec<usize>,
    pub antihole: bool,
    pub classes: BTreeMap<usize, NeighborClass>,
    /// Number of reference neighbors of each classified vertex.
    pub degree: BTreeMap<usize, usize>,
    /// Vertices at distance exactly 2 from the reference.
    pub second: Vec<usize>,
    /// `(u, w)` with `u` in the second neighborhood, `w` a neighbor of the
    /// reference adjacent to `u` but not complete to the reference.
    pub incomplete_links: Vec<(usize, usize)>,
}

impl NeighborClassification {
    pub fn dominating(&self) -> bool {
        self.second.is_empty()
    }

    pub fn of_class(&self, pred: impl Fn(&NeighborClass) -> bool) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|(_, c)| pred(c))
            .map(|(&v, _)| v)
            .collect()
    }

    /// For an antihole of length at least 7, a neighbor `w` with exactly 4
    /// reference neighbors closes an induced `C5`
    /// `w, v_i, v_{i+2}, v_{i−1}, v_{i+1}` where `v_i, v_{i+1}` are
    /// neighbors and `v_{i−1}, v_{i+2}` are not.
    pub fn c5_from_degree_four(&self, g: &Graph) -> Option<PatternWitness> {
        let q = &self.reference;
        let p = q.len();
        if !self.antihole || p < 7 {
            return None;
        }
        for (&w, &d) in &self.degree {
            if d != 4 {
                continue;
            }
            let at = |i: usize| q[i % p];
            for i in 0..p {
                let (prev, a, b, next) = (at(i + p - 1), at(i), at(i + 1), at(i + 2));
                if g.has_edge(w, a)
                    && g.has_edge(w, b)
                    && !g.has_edge(w, prev)
                    && !g.has_edge(w, next)
                {
                    return Some(PatternWitness::numbered(
                        PatternKind::C5,
                        "v",
                        &[w, a, next, prev, b],
                    ));
                }
            }
        }
        None
    }
}

/// Classifies the neighbors of `reference` (a hole in cycle order, or an
/// antihole in complement-cycle order). Fails with
/// [`Error::UnclassifiedNeighbor`] on a neighbor that fits no class.
pub fn classify_against(
    g: &Graph,
    reference: &[usize],
    antihole: bool,
) -> Result<NeighborClassification> {
    let p = reference.len();
    for &v in reference {
        g.check_vertex(v)?;
    }
    let mut in_q = vec![false; g.n()];
    for &v in reference {
        in_q[v] = true;
    }
    let mut classes = BTreeMap::new();
    let mut degree = BTreeMap::new();
    for w in (0..g.n()).filter(|&w| !in_q[w]) {
        let hit: Vec<bool> = reference.iter().map(|&v| g.has_edge(w, v)).collect();
        let d = hit.iter().filter(|&&b| b).count();
        if d == 0 {
            continue;
        }
        degree.insert(w, d);
        let set = |idx: &[usize]| (0..p).all(|j| hit[j] == idx.contains(&j));
        let class = if antihole {
            if d == p {
                Some(NeighborClass::C)
            } else if p == 5 && d == 3 {
                (0..5)
                    .find(|&i| set(&[i, (i + 1) % 5, (i + 3) % 5]))
                    .map(|i| NeighborClass::A(i + 1))
            } else if p == 5 && d == 4 {
                (0..5)
                    .find(|&i| !hit[(i + 4) % 5])
                    .map(|i| NeighborClass::B(i + 1))
            } else if (0..p).all(|j| hit[j] || hit[(j + 1) % p]) {
                Some(NeighborClass::Partial(
                    (0..p).filter(|&j| !hit[j]).map(|j| j + 1).collect(),
                ))
            } else {
                None
            }
        } else if d == p {
            Some(NeighborClass::D)
        } else if d == 3 {
            (0..p)
                .find(|&i| set(&[(i + p - 1) % p, i, (i + 1) % p]))
                .map(|i| NeighborClass::A(i + 1))
        } else {
            None
        };
        match class {
            Some(c) => {
                classes.insert(w, c);
            }
            None => return Err(Error::UnclassifiedNeighbor(w)),
        }
    }
    let mut second = Vec::new();
    let mut incomplete_links = Vec::new();
    for u in (0..g.n()).filter(|&u| !in_q[u] && !degree.contains_key(&u)) {
        let links: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|w| degree.contains_key(w))
            .collect();
        if links.is_empty() {
            continue;
        }
        second.push(u);
        incomplete_links.extend(links.into_iter().filter(|w| degree[w] < p).map(|w| (u, w)));
    }
    Ok(NeighborClassification {
        reference: reference.to_vec(),
        antihole,
        classes,
        degree,
        second,
        incomplete_links,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{antihole, cycle};
    use crate::patterns::verify_witness;

    #[test]
    fn five_antihole_classes() {
        // C5 in antihole order 0..5, plus vertices of each type.
        let mut edges = antihole(5).unwrap().edges();
        // 5 ~ v1, v2, v4 (A_1); 6 ~ v2..v5 (B_2); 7 ~ all (C).
        edges.extend([(5, 0), (5, 1), (5, 3)]);
        edges.extend([(6, 1), (6, 2), (6, 3), (6, 4)]);
        edges.extend((0..5).map(|v| (7, v)));
        let g = Graph::new(8, &edges).unwrap();
        let c = classify_against(&g, &[0, 1, 2, 3, 4], true).unwrap();
        assert_eq!(c.classes[&5], NeighborClass::A(1));
        assert_eq!(c.classes[&6], NeighborClass::B(2));
        assert_eq!(c.classes[&7], NeighborClass::C);
        assert!(c.dominating());
    }

    #[test]
    fn consecutive_non_neighbors_are_rejected() {
        let mut edges = antihole(5).unwrap().edges();
        // Misses v1 and v2, which are consecutive in antihole order.
        edges.extend([(5, 2), (5, 3), (5, 4)]);
        let g = Graph::new(6, &edges).unwrap();
        assert!(matches!(
            classify_against(&g, &[0, 1, 2, 3, 4], true),
            Err(Error::UnclassifiedNeighbor(5))
        ));
    }

    #[test]
    fn hole_classes_and_second_neighborhood() {
        let mut edges = cycle(7).unwrap().edges();
        edges.extend([(7, 6), (7, 0), (7, 1)]);
        edges.extend((0..7).map(|v| (8, v)));
        edges.push((9, 8));
        let g = Graph::new(10, &edges).unwrap();
        let c = classify_against(&g, &(0..7).collect::<Vec<_>>(), false).unwrap();
        assert_eq!(c.classes[&7], NeighborClass::A(1));
        assert_eq!(c.classes[&8], NeighborClass::D);
        assert_eq!(c.second, vec![9]);
        assert!(c.incomplete_links.is_empty());
    }

    #[test]
    fn degree_four_neighbor_of_seven_antihole_gives_c5() {
        let mut edges = antihole(7).unwrap().edges();
        edges.extend([(7, 1), (7, 3), (7, 5), (7, 6)]);
        let g = Graph::new(8, &edges).unwrap();
        let c = classify_against(&g, &(0..7).collect::<Vec<_>>(), true).unwrap();
        let w = c.c5_from_degree_four(&g).unwrap();
        assert!(verify_witness(&g, &w));
    }
}
