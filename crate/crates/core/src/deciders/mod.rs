//! k-colorability deciders for bull-free classes, each answering with a
//! certificate.
//!
//! Every decider guards its free-ness precondition, strips vertices of
//! degree below `k`, and handles each remaining component by the structural
//! dispatch for its class: clique expansions of odd cycles, perfect graphs,
//! odd antiholes and odd holes. Listed obstructions are searched in clause
//! order. Colorings are always checked before they are returned; when a
//! constructive step does not apply, the exact oracle colors the component,
//! and a component that is neither colorable nor blocked by a listed
//! structure is reported through a vertex-critical induced subgraph
//! ([`ObstructionKind::Critical`]).

mod alpha2;
mod classify;
mod five;
mod four_chair;
mod four_claw;
mod search;
mod three;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::expansion::feasibility;
use crate::graph::{is_proper_coloring, Coloring, Graph};
use crate::oracle::Oracle;
use crate::patterns::{
    find_fixed_pattern, verify_witness, FixedPattern, PatternKind, PatternSearch, PatternWitness,
    DEFAULT_PATTERN_BUDGET,
};

pub use alpha2::chi_alpha2;
pub use classify::{classify_against, NeighborClass, NeighborClassification};

/// Forbidden-subgraph classes with a decider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    BullClaw,
    BullChair,
    BullChairC5Free,
    BullClawC5Free,
}

impl Family {
    pub fn patterns(self) -> Vec<FixedPattern> {
        use FixedPattern::*;
        match self {
            Family::BullClaw => vec![Bull, Claw],
            Family::BullChair => vec![Bull, Chair],
            Family::BullChairC5Free => vec![Bull, Chair, C5],
            Family::BullClawC5Free => vec![Bull, Claw, C5],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::BullClaw => "bull-claw",
            Family::BullChair => "bull-chair",
            Family::BullChairC5Free => "bull-chair-c5free",
            Family::BullClawC5Free => "bull-claw-c5free",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bull-claw" => Ok(Family::BullClaw),
            "bull-chair" => Ok(Family::BullChair),
            "bull-chair-c5free" => Ok(Family::BullChairC5Free),
            "bull-claw-c5free" => Ok(Family::BullClawC5Free),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

/// The `(k, family)` pairs with a decider.
pub const SUPPORTED: [(usize, Family); 5] = [
    (3, Family::BullClaw),
    (3, Family::BullChair),
    (4, Family::BullClaw),
    (4, Family::BullChairC5Free),
    (5, Family::BullClawC5Free),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionKind {
    /// A named induced structure; the obstruction carries its witness.
    Pattern(PatternKind),
    /// An induced clique expansion of an odd cycle violating the sum bound.
    InfeasibleExpansion { sizes: Vec<usize> },
    /// An induced `C5` in a component with more than 8 vertices that the
    /// exact count confirms is not 4-colorable.
    C5TooLarge { order: usize },
    /// Independence number 2 on at least 11 vertices.
    AlphaTwoTooLarge { order: usize },
    /// Independence number 2 and a vertex of degree at least 9.
    AlphaTwoHighDegree { degree: usize },
    /// No listed structure applies: an induced subgraph that is not
    /// `k`-colorable while every single-vertex deletion of it is.
    Critical { order: usize },
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionKind::Pattern(k) => k.fmt(f),
            ObstructionKind::InfeasibleExpansion { .. } => f.write_str("InfeasibleExpansion"),
            ObstructionKind::C5TooLarge { .. } => f.write_str("C5TooLarge"),
            ObstructionKind::AlphaTwoTooLarge { .. } => f.write_str("AlphaTwoTooLarge"),
            ObstructionKind::AlphaTwoHighDegree { .. } => f.write_str("AlphaTwoHighDegree"),
            ObstructionKind::Critical { .. } => f.write_str("Critical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// Vertices whose induced subgraph needs more than `k` colors, ascending.
    pub witness: Vec<usize>,
    /// Role labelling of the named part (the whole witness for pattern kinds).
    pub pattern: Option<PatternWitness>,
    /// Blocks in cycle order for expansion kinds.
    pub blocks: Option<Vec<Vec<usize>>>,
}

impl Obstruction {
    pub fn pattern(w: PatternWitness) -> Self {
        Obstruction {
            kind: ObstructionKind::Pattern(w.kind.clone()),
            witness: w.vertices.clone(),
            pattern: Some(w),
            blocks: None,
        }
    }

    pub fn expansion(blocks: Vec<Vec<usize>>) -> Self {
        let mut witness: Vec<usize> = blocks.iter().flatten().copied().collect();
        witness.sort_unstable();
        Obstruction {
            kind: ObstructionKind::InfeasibleExpansion {
                sizes: blocks.iter().map(Vec::len).collect(),
            },
            witness,
            pattern: None,
            blocks: Some(blocks),
        }
    }

    fn sized(kind: ObstructionKind, mut witness: Vec<usize>, part: Option<PatternWitness>) -> Self {
        witness.sort_unstable();
        Obstruction {
            kind,
            witness,
            pattern: part,
            blocks: None,
        }
    }

    /// Renames vertices through `map` (component id → host id).
    pub fn lift(&self, map: &[usize]) -> Self {
        let mut witness: Vec<usize> = self.witness.iter().map(|&v| map[v]).collect();
        witness.sort_unstable();
        Obstruction {
            kind: self.kind.clone(),
            witness,
            pattern: self.pattern.as_ref().map(|w| w.lift(map)),
            blocks: self.blocks.as_ref().map(|b| {
                b.iter()
                    .map(|blk| blk.iter().map(|&v| map[v]).collect())
                    .collect()
            }),
        }
    }
}

impl Serialize for Obstruction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Obstruction", 5)?;
        st.serialize_field("kind", &self.kind.to_string())?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("pattern", &self.pattern)?;
        match &self.kind {
            ObstructionKind::InfeasibleExpansion { sizes } => st.serialize_field("sizes", sizes)?,
            _ => st.skip_field("sizes")?,
        }
        st.serialize_field("blocks", &self.blocks)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Colorable(Coloring),
    Obstruction(Obstruction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub k: usize,
    pub outcome: Outcome,
    /// Dispatch steps taken, in order.
    pub trace: Vec<String>,
}

impl Verdict {
    pub fn is_colorable(&self) -> bool {
        matches!(self.outcome, Outcome::Colorable(_))
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.outcome {
            Outcome::Colorable(c) => Some(c),
            Outcome::Obstruction(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match &self.outcome {
            Outcome::Colorable(_) => None,
            Outcome::Obstruction(o) => Some(o),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 6)?;
        st.serialize_field("schema", &1)?;
        st.serialize_field("colorable", &self.is_colorable())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("coloring", &self.coloring().map(|c| &c.colors))?;
        st.serialize_field("obstruction", &self.obstruction())?;
        st.serialize_field("trace", &self.trace)?;
        st.end()
    }
}

/// Node budgets for the pattern searches and the oracle.
#[derive(Debug, Clone, Copy)]
pub struct DeciderConfig {
    pub pattern_budget: u64,
    pub oracle_budget: u64,
}

impl Default for DeciderConfig {
    fn default() -> Self {
        DeciderConfig {
            pattern_budget: DEFAULT_PATTERN_BUDGET,
            oracle_budget: crate::oracle::DEFAULT_ORACLE_BUDGET,
        }
    }
}

/// First violated pattern of `family`, in list order.
pub fn check_freeness(g: &Graph, family: &[FixedPattern]) -> Option<PatternWitness> {
    family.iter().find_map(|&f| find_fixed_pattern(g, f))
}

/// Per-component result inside a decider.
pub(crate) enum Part {
    Colored(Coloring),
    Blocked(Obstruction),
}

/// Shared state of one decider run.
pub(crate) struct Ctx {
    pub k: usize,
    pub search: PatternSearch,
    pub oracle: Oracle,
    pub trace: Vec<String>,
}

impl Ctx {
    fn new(k: usize, cfg: &DeciderConfig) -> Self {
        Ctx {
            k,
            search: PatternSearch::with_budget(cfg.pattern_budget),
            oracle: Oracle::with_budget(cfg.oracle_budget),
            trace: Vec::new(),
        }
    }

    pub fn note(&mut self, step: impl Into<String>) {
        self.trace.push(step.into());
    }

    /// Accepts `attempt` if it is a proper coloring of `h` within `k`
    /// colors; otherwise colors `h` exactly, and if that is impossible runs
    /// `obstructions`.
    pub fn finish(
        &mut self,
        h: &Graph,
        attempt: Option<Coloring>,
        obstructions: impl FnOnce(&mut Ctx, &Graph) -> Result<Option<Obstruction>>,
    ) -> Result<Part> {
        if let Some(c) = attempt {
            if c.colors.len() == h.n() && c.max_color() <= self.k && is_proper_coloring(h, &c)? {
                return Ok(Part::Colored(Coloring::new(c.colors, self.k)));
            }
            self.note("constructed coloring rejected by the checker");
        }
        self.oracle_or_obstruction(h, obstructions)
    }

    pub fn oracle_or_obstruction(
        &mut self,
        h: &Graph,
        obstructions: impl FnOnce(&mut Ctx, &Graph) -> Result<Option<Obstruction>>,
    ) -> Result<Part> {
        if let Some(c) = self.oracle.exact_coloring(h, self.k)? {
            self.note("colored by exact search");
            return Ok(Part::Colored(c));
        }
        self.note("exact search: not colorable, searching listed obstructions");
        if let Some(o) = obstructions(self, h)? {
            return Ok(Part::Blocked(o));
        }
        self.note("no listed obstruction applies: shrinking to a vertex-critical subgraph");
        let critical = self.critical(h)?;
        Ok(Part::Blocked(Obstruction::sized(
            ObstructionKind::Critical {
                order: critical.len(),
            },
            critical,
            None,
        )))
    }

    /// Deletes vertices in index order while the rest stays
    /// non-`k`-colorable.
    fn critical(&self, h: &Graph) -> Result<Vec<usize>> {
        let mut keep: Vec<usize> = (0..h.n()).collect();
        let mut i = 0;
        while i < keep.len() {
            let mut rest = keep.clone();
            rest.remove(i);
            if self
                .oracle
                .exact_coloring(&h.induce(&rest), self.k)?
                .is_none()
            {
                keep = rest;
            } else {
                i += 1;
            }
        }
        Ok(keep)
    }
}

type ComponentFn = fn(&mut Ctx, &Graph) -> Result<Part>;

fn run(
    g: &Graph,
    k: usize,
    family: Family,
    cfg: &DeciderConfig,
    component: ComponentFn,
) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if let Some(w) = check_freeness(g, &family.patterns()) {
        return Err(Error::FreenessViolation(Box::new(w)));
    }
    let mut ctx = Ctx::new(k, cfg);
    let red = g.reduce_min_degree(k);
    ctx.note(format!(
        "reduce: removed {} vertices of degree below {k}, {} remain",
        red.order.len(),
        red.kept.len()
    ));
    let mut colors = vec![0usize; red.kept.len()];
    for (ci, comp) in red.graph.components().into_iter().enumerate() {
        let h = red.graph.induce(&comp);
        let map: Vec<usize> = comp.iter().map(|&i| red.kept[i]).collect();
        ctx.note(format!("component {ci}: {} vertices", h.n()));
        match component(&mut ctx, &h)? {
            Part::Colored(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    colors[v] = c.colors[i];
                }
            }
            Part::Blocked(o) => {
                let o = o.lift(&map);
                ctx.note(format!("obstruction: {}", o.kind));
                return Ok(Verdict {
                    k,
                    outcome: Outcome::Obstruction(o),
                    trace: ctx.trace,
                });
            }
        }
    }
    let full = red.extend(g, &Coloring::new(colors, k))?;
    if !is_proper_coloring(g, &full)? {
        return Err(Error::InvalidColoring(
            "assembled coloring is not proper".into(),
        ));
    }
    ctx.note("extended through the reduction order");
    Ok(Verdict {
        k,
        outcome: Outcome::Colorable(full),
        trace: ctx.trace,
    })
}

/// 3-colorability of connected (bull, claw)- or (bull, chair)-free graphs.
pub fn decide_3col(g: &Graph, family: Family) -> Result<Verdict> {
    decide_3col_with(g, family, &DeciderConfig::default())
}

pub fn decide_3col_with(g: &Graph, family: Family, cfg: &DeciderConfig) -> Result<Verdict> {
    match family {
        Family::BullClaw => run(g, 3, family, cfg, three::component_claw),
        Family::BullChair => run(g, 3, family, cfg, three::component_chair),
        _ => Err(Error::UnsupportedDecider(3, family.to_string())),
    }
}

pub fn decide_4col_bull_claw(g: &Graph) -> Result<Verdict> {
    run(
        g,
        4,
        Family::BullClaw,
        &DeciderConfig::default(),
        four_claw::component,
    )
}

pub fn decide_4col_bull_chair_c5free(g: &Graph) -> Result<Verdict> {
    run(
        g,
        4,
        Family::BullChairC5Free,
        &DeciderConfig::default(),
        four_chair::component,
    )
}

pub fn decide_5col_bull_claw_c5free(g: &Graph) -> Result<Verdict> {
    run(
        g,
        5,
        Family::BullClawC5Free,
        &DeciderConfig::default(),
        five::component,
    )
}

/// Dispatches to the decider for `(k, family)`.
pub fn decide(g: &Graph, k: usize, family: Family, cfg: &DeciderConfig) -> Result<Verdict> {
    match (k, family) {
        (3, Family::BullClaw | Family::BullChair) => decide_3col_with(g, family, cfg),
        (4, Family::BullClaw) => run(g, 4, family, cfg, four_claw::component),
        (4, Family::BullChairC5Free) => run(g, 4, family, cfg, four_chair::component),
        (5, Family::BullClawC5Free) => run(g, 5, family, cfg, five::component),
        _ => Err(Error::UnsupportedDecider(k, family.to_string())),
    }
}

/// Independent re-check of a verdict: colorings must be proper within `k`;
/// obstructions must have their claimed shape and the oracle must confirm
/// that the witness alone needs more than `k` colors.
pub fn verify_verdict(g: &Graph, v: &Verdict, oracle: &Oracle) -> Result<bool> {
    match &v.outcome {
        Outcome::Colorable(c) => {
            Ok(c.k == v.k && c.max_color() <= v.k && is_proper_coloring(g, c)?)
        }
        Outcome::Obstruction(o) => verify_obstruction(g, v.k, o, oracle),
    }
}

pub fn verify_obstruction(g: &Graph, k: usize, o: &Obstruction, oracle: &Oracle) -> Result<bool> {
    if o.witness.iter().any(|&v| v >= g.n()) || o.witness.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(false);
    }
    let sub = g.induce(&o.witness);
    let pattern_ok = |kind: Option<&PatternKind>| -> bool {
        o.pattern.as_ref().is_some_and(|w| {
            verify_witness(g, w)
                && kind.is_none_or(|k| &w.kind == k)
                && w.vertices.iter().all(|v| o.witness.contains(v))
        })
    };
    let shape = match &o.kind {
        ObstructionKind::Pattern(kind) => {
            pattern_ok(Some(kind)) && o.pattern.as_ref().is_some_and(|w| w.vertices == o.witness)
        }
        ObstructionKind::InfeasibleExpansion { sizes } => {
            let Some(blocks) = &o.blocks else {
                return Ok(false);
            };
            blocks.iter().map(Vec::len).eq(sizes.iter().copied())
                && is_expansion(g, blocks)
                && feasibility(sizes, k).is_ok_and(|r| !r.feasible)
        }
        ObstructionKind::C5TooLarge { order } => {
            pattern_ok(Some(&PatternKind::C5)) && *order == o.witness.len() && *order > 8
        }
        ObstructionKind::AlphaTwoTooLarge { order } => {
            *order == o.witness.len() && *order >= 11 && oracle.independence_number(&sub)? == 2
        }
        ObstructionKind::AlphaTwoHighDegree { degree } => {
            *degree >= 9 && sub.max_degree() >= *degree && oracle.independence_number(&sub)? == 2
        }
        ObstructionKind::Critical { order } => {
            if *order != o.witness.len() {
                return Ok(false);
            }
            for i in 0..o.witness.len() {
                let mut rest = o.witness.clone();
                rest.remove(i);
                if oracle.exact_coloring(&g.induce(&rest), k)?.is_none() {
                    return Ok(false);
                }
            }
            true
        }
    };
    Ok(shape && oracle.chromatic_number(&sub, Some(k))? > k)
}

/// `blocks` are cliques, consecutive blocks are fully joined and all other
/// pairs are non-adjacent.
pub(crate) fn is_expansion(g: &Graph, blocks: &[Vec<usize>]) -> bool {
    let p = blocks.len();
    if p < 3 {
        return false;
    }
    for i in 0..p {
        for j in i..p {
            let d = (j + p - i) % p;
            let want = d == 0 || d == 1 || d == p - 1;
            for (ai, &a) in blocks[i].iter().enumerate() {
                for (bi, &b) in blocks[j].iter().enumerate() {
                    if (i == j && bi <= ai) || a == b && i != j {
                        if a == b && i != j {
                            return false;
                        }
                        continue;
                    }
                    if g.has_edge(a, b) != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}
