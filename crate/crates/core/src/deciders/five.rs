//! 5-coloring of connected (bull, claw, C5)-free graphs of minimum degree
//! ≥ 5.

use crate::error::Result;
use crate::expansion::recognize_clique_expansion;
use crate::graph::Graph;
use crate::patterns::{FixedPattern, PatternKind, PatternWitness};

use super::search::{expansion_branch, infeasible_expansion, named};
use super::{chi_alpha2, classify_against, Ctx, Obstruction, ObstructionKind, Part};

fn prepass(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    for kind in [
        FixedPattern::Clique(6).kind(),
        PatternKind::join(PatternKind::OddAntihole(7), 2),
        PatternKind::join(PatternKind::OddAntihole(9), 1),
    ] {
        if let Some(o) = named(ctx, h, kind)? {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// The size conditions for independence number 2, if they apply.
fn alpha_two(ctx: &mut Ctx, h: &Graph, part: Option<PatternWitness>) -> Option<Obstruction> {
    if h.n() < 3 || chi_alpha2(h).is_err() {
        return None;
    }
    if h.n() >= 11 {
        ctx.note("independence number 2 on at least 11 vertices");
        let all: Vec<usize> = (0..h.n()).collect();
        return Some(Obstruction::sized(
            ObstructionKind::AlphaTwoTooLarge { order: h.n() },
            all,
            part,
        ));
    }
    let degree = h.max_degree();
    if degree >= 9 {
        ctx.note("independence number 2 and maximum degree at least 9");
        let v = (0..h.n()).find(|&v| h.degree(v) == degree).unwrap();
        let mut w = h.neighbors(v).to_vec();
        w.push(v);
        return Some(Obstruction::sized(
            ObstructionKind::AlphaTwoHighDegree { degree },
            w,
            part,
        ));
    }
    None
}

fn late(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    if let Some(o) = prepass(ctx, h)? {
        return Ok(Some(o));
    }
    let part = ctx.search.odd_antihole(h, 7)?;
    if let Some(o) = alpha_two(ctx, h, part) {
        return Ok(Some(o));
    }
    infeasible_expansion(ctx, h, 5)
}

pub(super) fn component(ctx: &mut Ctx, h: &Graph) -> Result<Part> {
    if let Some(o) = prepass(ctx, h)? {
        return Ok(Part::Blocked(o));
    }
    if let Some(exp) = recognize_clique_expansion(h)? {
        if exp.p() >= 7 && exp.p() % 2 == 1 {
            return expansion_branch(ctx, h, &exp, late);
        }
    }
    if let Some(w) = ctx.search.odd_antihole(h, 7)? {
        let q = w.ordered();
        let cls = classify_against(h, &q, true)?;
        ctx.note(format!(
            "antihole C{}bar, {} neighbors, dominating: {}",
            q.len(),
            cls.classes.len(),
            cls.dominating()
        ));
        if let Some(o) = alpha_two(ctx, h, Some(w)) {
            return Ok(Part::Blocked(o));
        }
        let attempt = super::four_claw::alpha2_attempt(ctx, h);
        return ctx.finish(h, attempt, late);
    }
    if ctx.search.odd_hole(h, 7)?.is_some() {
        ctx.note("odd hole outside a clique expansion");
        return ctx.finish(h, None, late);
    }
    ctx.note("perfect");
    ctx.oracle_or_obstruction(h, late)
}
