//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Neighborhoods are stored twice: as sorted lists for deterministic
//! iteration and as bit rows for constant-time adjacency tests. Graphs are
//! immutable once built; every operation returns a new value.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Builds a graph, deduplicating repeated edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge(u, v, n));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_lists(adj))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_lists(vec![Vec::new(); n])
    }

    fn from_lists(mut adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let words = n.div_ceil(WORD).max(1);
        let mut bits = vec![vec![0u64; words]; n];
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &u in list.iter() {
                bits[v][u / WORD] |= 1 << (u % WORD);
            }
        }
        Graph { adj, bits }
    }

    pub(crate) fn from_adjacency(n: usize, mut has_edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if has_edge(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Self::from_lists(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Edge list with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v, self.n()))
        }
    }

    pub fn complement(&self) -> Graph {
        Graph::from_adjacency(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// `self ⊕ other`: disjoint union plus every cross edge. Vertices of
    /// `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let a = self.n();
        let n = a + other.n();
        Graph::from_adjacency(n, |u, v| match (u < a, v < a) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - a, v - a),
            _ => true,
        })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let a = self.n();
        Graph::from_adjacency(a + other.n(), |u, v| match (u < a, v < a) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - a, v - a),
            _ => false,
        })
    }

    /// Induced subgraph on `vertices`, keeping the given order as the new
    /// labelling. Duplicates are rejected as invalid vertices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Subgraph> {
        let mut seen = vec![false; self.n()];
        for &v in vertices {
            self.check_vertex(v)?;
            if seen[v] {
                return Err(Error::InvalidVertex(v, self.n()));
            }
            seen[v] = true;
        }
        let graph = Graph::from_adjacency(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        });
        Ok(Subgraph {
            graph,
            original: vertices.to_vec(),
        })
    }

    /// Same as [`Graph::induced_subgraph`] for sets already known to be valid.
    pub(crate) fn induce(&self, vertices: &[usize]) -> Graph {
        Graph::from_adjacency(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    /// Repeatedly removes vertices of current degree below `threshold`.
    pub fn reduce_min_degree(&self, threshold: usize) -> Reduction {
        let n = self.n();
        let mut deg = self.degrees();
        let mut removed = vec![false; n];
        let mut queued = vec![false; n];
        let mut queue = VecDeque::new();
        for v in 0..n {
            if deg[v] < threshold {
                queued[v] = true;
                queue.push_back(v);
            }
        }
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if removed[u] {
                    continue;
                }
                deg[u] -= 1;
                if deg[u] < threshold && !queued[u] {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        Reduction {
            graph: self.induce(&kept),
            kept,
            order,
            threshold,
        }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &u in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Vertices adjacent to every vertex of `set` (and not in it).
    pub fn common_neighbors(&self, set: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|v| !set.contains(v) && set.iter().all(|&s| self.has_edge(*v, s)))
            .collect()
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

/// An induced subgraph together with its new→original vertex map.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.original[v]).collect()
    }
}

/// Result of [`Graph::reduce_min_degree`].
#[derive(Debug, Clone)]
pub struct Reduction {
    /// The reduced graph, labelled in the order of `kept`.
    pub graph: Graph,
    /// Original ids of the surviving vertices, ascending.
    pub kept: Vec<usize>,
    /// Original ids in deletion order.
    pub order: Vec<usize>,
    pub threshold: usize,
}

impl Reduction {
    /// Extends a coloring of the reduced graph to the original graph by
    /// re-inserting deleted vertices in reverse order, each taking the
    /// smallest free color.
    pub fn extend(&self, original: &Graph, reduced: &Coloring) -> Result<Coloring> {
        if reduced.colors.len() != self.kept.len() {
            return Err(Error::InvalidColoring(format!(
                "expected {} colors, got {}",
                self.kept.len(),
                reduced.colors.len()
            )));
        }
        let mut colors = vec![0usize; original.n()];
        for (i, &v) in self.kept.iter().enumerate() {
            colors[v] = reduced.colors[i];
        }
        for &v in self.order.iter().rev() {
            let mut used = vec![false; reduced.k + 2];
            for &u in original.neighbors(v) {
                if colors[u] != 0 && colors[u] <= reduced.k {
                    used[colors[u]] = true;
                }
            }
            let c = (1..=reduced.k).find(|&c| !used[c]).ok_or_else(|| {
                Error::InvalidColoring(format!("no free color for re-inserted vertex {v}"))
            })?;
            colors[v] = c;
        }
        Ok(Coloring::new(colors, reduced.k))
    }
}

/// A total assignment of colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Self {
        Coloring { colors, k }
    }

    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Color classes indexed by `color - 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.max_color()];
        for (v, &c) in self.colors.iter().enumerate() {
            if c > 0 {
                out[c - 1].push(v);
            }
        }
        out
    }
}

/// True iff every vertex has a color in `1..=k` and no edge is monochromatic.
pub fn is_proper_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries for {} vertices",
            c.colors.len(),
            g.n()
        )));
    }
    if c.colors.iter().any(|&x| x == 0 || x > c.k) {
        return Ok(false);
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_adjacency(n, |_, _| true)
    }

    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degrees(), vec![1, 2, 1]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert!(cycle(5).degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn make_graph_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::InvalidEdge(0, 3, 3))
        ));
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::InvalidEdge(1, 1, 3))
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement().edge_count(), 0);
        let c5 = cycle(5);
        let c5bar = c5.complement();
        assert!(c5bar.degrees().iter().all(|&d| d == 2));
        assert!(c5bar.is_connected());
        let c7bar = cycle(7).complement();
        assert!(c7bar.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), complete(2));
        let g = cycle(5).join(&complete(2));
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 5 + 1 + 10);
    }

    #[test]
    fn induced_subgraph_examples() {
        let s = cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(s.graph.degrees(), vec![1, 2, 1]);
        assert_eq!(s.lift(&[2]), vec![2]);
        let k3 = complete(5).induced_subgraph(&[4, 1, 3]).unwrap();
        assert_eq!(k3.graph, complete(3));
        assert!(matches!(
            cycle(5).induced_subgraph(&[0, 7]),
            Err(Error::InvalidVertex(7, 5))
        ));
    }

    #[test]
    fn reduce_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = p3.reduce_min_degree(4);
        assert_eq!(r.graph.n(), 0);
        assert_eq!(r.order.len(), 3);

        let k5 = complete(5);
        let r = k5.reduce_min_degree(4);
        assert_eq!(r.graph, k5);
        assert!(r.order.is_empty());

        let mut edges = complete(5).edges();
        edges.push((0, 5));
        let g = Graph::new(6, &edges).unwrap();
        let r = g.reduce_min_degree(4);
        assert_eq!(r.graph, k5);
        assert_eq!(r.order, vec![5]);
        let c = Coloring::new(vec![1, 2, 3, 4, 5], 5);
        let full = r.extend(&g, &c).unwrap();
        assert!(is_proper_coloring(&g, &full).unwrap());
    }

    #[test]
    fn proper_coloring_examples() {
        let c5 = cycle(5);
        assert!(is_proper_coloring(&c5, &Coloring::new(vec![1, 2, 1, 2, 3], 3)).unwrap());
        assert!(!is_proper_coloring(&c5, &Coloring::new(vec![1, 2, 1, 2, 1], 2)).unwrap());
        assert!(is_proper_coloring(&complete(4), &Coloring::new(vec![1, 2, 3, 4], 4)).unwrap());
        assert!(!is_proper_coloring(&complete(2), &Coloring::new(vec![1, 3], 2)).unwrap());
        assert!(matches!(
            is_proper_coloring(&c5, &Coloring::new(vec![1, 2], 3)),
            Err(Error::InvalidColoring(_))
        ));
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(cycle(6).is_connected());
    }
}
