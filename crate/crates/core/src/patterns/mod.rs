//! Induced-structure detection with explicit vertex witnesses.
//!
//! Fixed patterns (at most five vertices) are found by role-directed
//! enumeration and the lexicographically smallest vertex set is reported.
//! Holes, antiholes, spindles, wheels and joins use exponential searches
//! bounded by a node budget.

mod embed;
mod fixed;
mod holes;

use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Budget, Error, Result};
use crate::graph::Graph;

pub use fixed::find_fixed_pattern;

pub const DEFAULT_PATTERN_BUDGET: u64 = 10_000_000;
/// Largest graph accepted by [`is_perfect_desk`].
pub const PERFECT_DESK_CAP: usize = 25;

/// Patterns of constant size with polynomial role-directed search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedPattern {
    Bull,
    Claw,
    Chair,
    C5,
    Clique(usize),
}

impl FixedPattern {
    pub fn kind(self) -> PatternKind {
        match self {
            FixedPattern::Bull => PatternKind::Bull,
            FixedPattern::Claw => PatternKind::Claw,
            FixedPattern::Chair => PatternKind::Chair,
            FixedPattern::C5 => PatternKind::C5,
            FixedPattern::Clique(r) => PatternKind::Clique(r),
        }
    }
}

impl fmt::Display for FixedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind().fmt(f)
    }
}

impl std::str::FromStr for FixedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "bull" => Ok(FixedPattern::Bull),
            "claw" => Ok(FixedPattern::Claw),
            "chair" => Ok(FixedPattern::Chair),
            "c5" => Ok(FixedPattern::C5),
            _ => lower
                .strip_prefix('k')
                .and_then(|r| r.parse().ok())
                .map(FixedPattern::Clique)
                .ok_or_else(|| Error::Parse(format!("unknown pattern '{s}'"))),
        }
    }
}

/// Every named structure a witness can carry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Bull,
    Claw,
    Chair,
    C5,
    Clique(usize),
    /// Induced cycle of the given odd length.
    OddHole(usize),
    /// Complement of an induced cycle of the given odd length.
    OddAntihole(usize),
    /// `M_{3p+1}`.
    Spindle(usize),
    /// Odd hole of the given length plus a hub adjacent to all of it.
    OddWheel(usize),
    /// `base ⊕ K_apex`.
    JoinObstruction {
        base: Box<PatternKind>,
        apex: usize,
    },
}

impl PatternKind {
    pub fn join(base: PatternKind, apex: usize) -> Self {
        PatternKind::JoinObstruction {
            base: Box::new(base),
            apex,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            PatternKind::Bull | PatternKind::C5 | PatternKind::Chair => 5,
            PatternKind::Claw => 4,
            PatternKind::Clique(r) | PatternKind::OddHole(r) | PatternKind::OddAntihole(r) => *r,
            PatternKind::Spindle(p) => 3 * p + 1,
            PatternKind::OddWheel(len) => len + 1,
            PatternKind::JoinObstruction { base, apex } => base.order() + apex,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Bull => write!(f, "bull"),
            PatternKind::Claw => write!(f, "claw"),
            PatternKind::Chair => write!(f, "chair"),
            PatternKind::C5 => write!(f, "C5"),
            PatternKind::Clique(r) => write!(f, "K{r}"),
            PatternKind::OddHole(len) => write!(f, "C{len}"),
            PatternKind::OddAntihole(len) => write!(f, "C{len}bar"),
            PatternKind::Spindle(p) => write!(f, "M{}", 3 * p + 1),
            PatternKind::OddWheel(len) => write!(f, "W{len}"),
            PatternKind::JoinObstruction { base, apex } => write!(f, "{base}+K{apex}"),
        }
    }
}

/// A named induced structure and the host vertices realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// Witness vertices, ascending.
    pub vertices: Vec<usize>,
    /// Role name → host vertex, in the template's role order.
    pub roles: Vec<(String, usize)>,
}

impl PatternWitness {
    pub(crate) fn new(kind: PatternKind, roles: Vec<(String, usize)>) -> Self {
        let mut vertices: Vec<usize> = roles.iter().map(|&(_, v)| v).collect();
        vertices.sort_unstable();
        PatternWitness {
            kind,
            vertices,
            roles,
        }
    }

    /// Witness whose roles are `prefix1, prefix2, …` in the given order.
    pub(crate) fn numbered(kind: PatternKind, prefix: &str, order: &[usize]) -> Self {
        let roles = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (format!("{prefix}{}", i + 1), v))
            .collect();
        Self::new(kind, roles)
    }

    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.iter().find(|(r, _)| r == name).map(|&(_, v)| v)
    }

    /// Host vertices in role order.
    pub fn ordered(&self) -> Vec<usize> {
        self.roles.iter().map(|&(_, v)| v).collect()
    }

    /// Vertices of roles named `prefix<number>`, in role order.
    pub fn prefixed(&self, prefix: &str) -> Vec<usize> {
        self.roles
            .iter()
            .filter(|(r, _)| {
                r.strip_prefix(prefix).is_some_and(|rest| {
                    !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())
                })
            })
            .map(|&(_, v)| v)
            .collect()
    }

    /// Renames vertices through `map` (subgraph id → host id).
    pub fn lift(&self, map: &[usize]) -> Self {
        let roles = self
            .roles
            .iter()
            .map(|(r, v)| (r.clone(), map[*v]))
            .collect();
        Self::new(self.kind.clone(), roles)
    }

    /// This witness extended by apex vertices adjacent to all of it.
    pub fn with_apex(&self, apex: &[usize]) -> Self {
        let mut roles = self.roles.clone();
        roles.extend(
            apex.iter()
                .enumerate()
                .map(|(i, &v)| (format!("apex{}", i + 1), v)),
        );
        Self::new(PatternKind::join(self.kind.clone(), apex.len()), roles)
    }
}

struct RolesMap<'a>(&'a [(String, usize)]);

impl Serialize for RolesMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (name, v) in self.0 {
            map.serialize_entry(name, v)?;
        }
        map.end()
    }
}

impl Serialize for PatternWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PatternWitness", 3)?;
        st.serialize_field("kind", &self.kind.to_string())?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("roles", &RolesMap(&self.roles))?;
        st.end()
    }
}

/// Role names of `kind` and the pattern graph on them (vertex `i` plays
/// role `i`).
pub fn template(kind: &PatternKind) -> (Vec<String>, Graph) {
    let numbered = |prefix: &str, count: usize, start: usize| -> Vec<String> {
        (0..count)
            .map(|i| format!("{prefix}{}", i + start))
            .collect()
    };
    let cyc =
        |len: usize| Graph::from_adjacency(len, |u, v| v - u == 1 || (u == 0 && v == len - 1));
    match kind {
        PatternKind::Bull => (
            numbered("v", 5, 1),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap(),
        ),
        PatternKind::Claw => (
            ["center", "leaf1", "leaf2", "leaf3"]
                .map(String::from)
                .to_vec(),
            Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ),
        PatternKind::Chair => (
            ["center", "leaf1", "leaf2", "mid", "end"]
                .map(String::from)
                .to_vec(),
            Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap(),
        ),
        PatternKind::C5 => (numbered("v", 5, 1), cyc(5)),
        PatternKind::Clique(r) => (numbered("v", *r, 1), Graph::from_adjacency(*r, |_, _| true)),
        PatternKind::OddHole(len) => (numbered("v", *len, 1), cyc(*len)),
        PatternKind::OddAntihole(len) => (numbered("v", *len, 1), cyc(*len).complement()),
        PatternKind::Spindle(p) => (
            numbered("u", 3 * p + 1, 0),
            crate::generators::spindle(*p).expect("p >= 1"),
        ),
        PatternKind::OddWheel(len) => {
            let mut names = numbered("v", *len, 1);
            names.push("hub".into());
            (
                names,
                cyc(*len).join(&Graph::from_adjacency(1, |_, _| true)),
            )
        }
        PatternKind::JoinObstruction { base, apex } => {
            let (mut names, g) = template(base);
            names.extend(numbered("apex", *apex, 1));
            (names, g.join(&Graph::from_adjacency(*apex, |_, _| true)))
        }
    }
}

/// Re-checks that the witness roles induce exactly the named pattern in `g`.
pub fn verify_witness(g: &Graph, w: &PatternWitness) -> bool {
    if matches!(w.kind, PatternKind::Spindle(0)) {
        return false;
    }
    let (names, t) = template(&w.kind);
    if names.len() != w.roles.len() {
        return false;
    }
    let mut hosts = Vec::with_capacity(names.len());
    for (name, (role, v)) in names.iter().zip(&w.roles) {
        if name != role || *v >= g.n() {
            return false;
        }
        hosts.push(*v);
    }
    let mut sorted = hosts.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != hosts.len() || sorted != w.vertices {
        return false;
    }
    (0..hosts.len())
        .all(|i| (i + 1..hosts.len()).all(|j| t.has_edge(i, j) == g.has_edge(hosts[i], hosts[j])))
}

/// Budgeted searches. Each call starts a fresh node counter.
#[derive(Debug, Clone, Copy)]
pub struct PatternSearch {
    pub budget: u64,
}

impl Default for PatternSearch {
    fn default() -> Self {
        PatternSearch {
            budget: DEFAULT_PATTERN_BUDGET,
        }
    }
}

/// Odd length bounds used by the hole searches: at least 5, at most `max`.
fn odd_floor(min_len: usize) -> usize {
    let m = min_len.max(5);
    m + (m + 1) % 2
}

impl PatternSearch {
    pub fn with_budget(budget: u64) -> Self {
        PatternSearch { budget }
    }

    fn counter(&self) -> Budget {
        Budget::new(self.budget)
    }

    /// An induced odd cycle of length at least `min_len` (rounded up to an
    /// odd number ≥ 5).
    pub fn odd_hole(&self, g: &Graph, min_len: usize) -> Result<Option<PatternWitness>> {
        self.odd_hole_between(g, odd_floor(min_len), usize::MAX)
    }

    pub fn odd_hole_between(
        &self,
        g: &Graph,
        min_len: usize,
        max_len: usize,
    ) -> Result<Option<PatternWitness>> {
        let found = holes::odd_hole(g, odd_floor(min_len), max_len, &mut self.counter())?;
        Ok(found.map(|c| PatternWitness::numbered(PatternKind::OddHole(c.len()), "v", &c)))
    }

    /// An odd antihole of length at least `min_len`. Roles `v1, v2, …` follow
    /// the complement cycle, so `v_i v_{i+1}` are the non-edges.
    pub fn odd_antihole(&self, g: &Graph, min_len: usize) -> Result<Option<PatternWitness>> {
        self.odd_antihole_between(g, min_len, usize::MAX)
    }

    pub fn odd_antihole_between(
        &self,
        g: &Graph,
        min_len: usize,
        max_len: usize,
    ) -> Result<Option<PatternWitness>> {
        let found = holes::odd_hole(
            &g.complement(),
            odd_floor(min_len),
            max_len,
            &mut self.counter(),
        )?;
        Ok(found.map(|c| PatternWitness::numbered(PatternKind::OddAntihole(c.len()), "v", &c)))
    }

    /// A hub plus an induced odd cycle of length ≥ 5 inside its
    /// neighborhood; `exact_len` pins the rim length.
    pub fn odd_wheel(&self, g: &Graph, exact_len: Option<usize>) -> Result<Option<PatternWitness>> {
        holes::odd_wheel(g, exact_len, &mut self.counter())
    }

    /// An induced `M_{3p+1}` for some `p ≥ 1`.
    pub fn spindle(&self, g: &Graph) -> Result<Option<PatternWitness>> {
        embed::find_spindle(g, &mut self.counter())
    }

    /// Perfection at desk scale: no odd hole and no odd antihole.
    pub fn is_perfect(&self, g: &Graph) -> Result<bool> {
        if g.n() > PERFECT_DESK_CAP {
            return Err(Error::DeskCapExceeded(format!(
                "perfection check accepts at most {PERFECT_DESK_CAP} vertices, got {}",
                g.n()
            )));
        }
        Ok(self.odd_hole(g, 5)?.is_none() && self.odd_antihole(g, 7)?.is_none())
    }

    /// An induced copy of `kind` (any named structure, including joins).
    pub fn find(&self, g: &Graph, kind: &PatternKind) -> Result<Option<PatternWitness>> {
        find_kind(g, kind, &mut self.counter())
    }

    /// Template search: an injective map from `template` vertices to host
    /// vertices preserving adjacency and non-adjacency.
    pub fn find_induced(&self, host: &Graph, template: &Graph) -> Result<Option<Vec<usize>>> {
        embed::find_induced(host, template, &mut self.counter())
    }
}

fn find_kind(g: &Graph, kind: &PatternKind, budget: &mut Budget) -> Result<Option<PatternWitness>> {
    Ok(match kind {
        PatternKind::Bull => find_fixed_pattern(g, FixedPattern::Bull),
        PatternKind::Claw => find_fixed_pattern(g, FixedPattern::Claw),
        PatternKind::Chair => find_fixed_pattern(g, FixedPattern::Chair),
        PatternKind::C5 => find_fixed_pattern(g, FixedPattern::C5),
        PatternKind::Clique(r) => find_fixed_pattern(g, FixedPattern::Clique(*r)),
        PatternKind::OddHole(len) => holes::odd_hole(g, *len, *len, budget)?
            .map(|c| PatternWitness::numbered(kind.clone(), "v", &c)),
        PatternKind::OddAntihole(len) => holes::odd_hole(&g.complement(), *len, *len, budget)?
            .map(|c| PatternWitness::numbered(kind.clone(), "v", &c)),
        PatternKind::OddWheel(len) => holes::odd_wheel(g, Some(*len), budget)?,
        PatternKind::Spindle(p) => embed::find_spindle_exact(g, *p, budget)?,
        PatternKind::JoinObstruction { base, apex } => find_join(g, base, *apex, budget)?,
    })
}

/// `base ⊕ K_apex`: tries apex cliques in lexicographic order and searches
/// the base inside their common neighborhood.
fn find_join(
    g: &Graph,
    base: &PatternKind,
    apex: usize,
    budget: &mut Budget,
) -> Result<Option<PatternWitness>> {
    let mut found = None;
    let mut clique = Vec::new();
    for_each_clique(g, apex, 0, &mut clique, &mut |c| {
        budget.tick()?;
        let common = g.common_neighbors(c);
        if common.len() < base.order() {
            return Ok(false);
        }
        let sub = g.induce(&common);
        if let Some(w) = find_kind(&sub, base, budget)? {
            found = Some(w.lift(&common).with_apex(c));
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(found)
}

/// Calls `f` on every `r`-clique in lexicographic order until it returns true.
fn for_each_clique(
    g: &Graph,
    r: usize,
    from: usize,
    clique: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if clique.len() == r {
        return f(clique);
    }
    for v in from..g.n() {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
            let stop = for_each_clique(g, r, v + 1, clique, f)?;
            clique.pop();
            if stop {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn find_odd_hole(g: &Graph, min_len: usize) -> Result<Option<PatternWitness>> {
    PatternSearch::default().odd_hole(g, min_len)
}

pub fn find_odd_antihole(g: &Graph, min_len: usize) -> Result<Option<PatternWitness>> {
    PatternSearch::default().odd_antihole(g, min_len)
}

pub fn find_spindle(g: &Graph) -> Result<Option<PatternWitness>> {
    PatternSearch::default().spindle(g)
}

pub fn find_odd_wheel(g: &Graph, exact_len: Option<usize>) -> Result<Option<PatternWitness>> {
    PatternSearch::default().odd_wheel(g, exact_len)
}

pub fn is_perfect_desk(g: &Graph) -> Result<bool> {
    PatternSearch::default().is_perfect(g)
}

pub fn find_pattern(g: &Graph, kind: &PatternKind) -> Result<Option<PatternWitness>> {
    PatternSearch::default().find(g, kind)
}

/// Antihole order of a 5-cycle given in hole order: `u1 u3 u5 u2 u4`.
pub fn antihole_order_of_c5(hole: &[usize]) -> Vec<usize> {
    vec![hole[0], hole[2], hole[4], hole[1], hole[3]]
}

#[cfg(test)]
mod tests;
