//! 4-coloring of connected (bull, chair, C5)-free graphs of minimum
//! degree ≥ 4.

use crate::error::{Error, Result};
use crate::expansion::{expansion_color, recognize_clique_expansion};
use crate::graph::{Coloring, Graph};
use crate::patterns::PatternKind;

use super::four_claw::alpha2_attempt;
use super::search::{expansion_branch, infeasible_expansion, join_any, named};
use super::{classify_against, Ctx, NeighborClass, Obstruction, Part};

/// `C̄7 ⊕ K1`, then `C_{2i+1} ⊕ K2` and `M_{3i+1} ⊕ K1` for any length.
fn prepass(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    if let Some(o) = named(ctx, h, PatternKind::join(PatternKind::OddAntihole(7), 1))? {
        return Ok(Some(o));
    }
    let search = ctx.search;
    if let Some(w) = join_any(h, 2, |sub| search.odd_hole(sub, 5))? {
        ctx.note(format!("found {}", w.kind));
        return Ok(Some(Obstruction::pattern(w)));
    }
    if let Some(w) = join_any(h, 1, |sub| search.spindle(sub))? {
        ctx.note(format!("found {}", w.kind));
        return Ok(Some(Obstruction::pattern(w)));
    }
    Ok(None)
}

/// Listed obstructions in clause order, then the 9-antihole.
fn late(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    if let Some(o) = prepass(ctx, h)? {
        return Ok(Some(o));
    }
    if let Some(o) = infeasible_expansion(ctx, h, 4)? {
        return Ok(Some(o));
    }
    named(ctx, h, PatternKind::OddAntihole(9))
}

pub(super) fn component(ctx: &mut Ctx, h: &Graph) -> Result<Part> {
    if let Some(o) = prepass(ctx, h)? {
        return Ok(Part::Blocked(o));
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
        let attempt = alpha2_attempt(ctx, h);
        return ctx.finish(h, attempt, late);
    }
    if let Some(w) = ctx.search.odd_hole(h, 5)? {
        return hole_branch(ctx, h, &w.ordered());
    }
    ctx.note("perfect");
    ctx.oracle_or_obstruction(h, late)
}

/// `Q` is an odd hole of length at least 7. Its neighbors split into
/// `A` (three consecutive) and `D` (all of `Q`); `Q ∪ A` is a clique
/// expansion of `Q`, `A` has no neighbor in the rest `R`, and each `D`
/// vertex is complete to every component of `R` it touches. With `D`
/// independent: 3 colors on `Q ∪ A`, one color on `D`, and 3 colors on each
/// component of `R`.
fn hole_branch(ctx: &mut Ctx, h: &Graph, q: &[usize]) -> Result<Part> {
    let cls = classify_against(h, q, false)?;
    let a = cls.of_class(|c| matches!(c, NeighborClass::A(_)));
    let d = cls.of_class(|c| *c == NeighborClass::D);
    let mut in_qad = vec![false; h.n()];
    for &v in q.iter().chain(&a).chain(&d) {
        in_qad[v] = true;
    }
    let r: Vec<usize> = (0..h.n()).filter(|&v| !in_qad[v]).collect();
    ctx.note(format!(
        "odd hole C{}: |A| = {}, |D| = {}, |R| = {}",
        q.len(),
        a.len(),
        d.len(),
        r.len()
    ));

    let mut qa: Vec<usize> = q.iter().chain(&a).copied().collect();
    qa.sort_unstable();
    let qa_graph = h.induce(&qa);
    let exp = match recognize_clique_expansion(&qa_graph)? {
        Some(e) if e.p() == q.len() => e,
        _ => {
            return Err(Error::SeparationViolation(format!(
                "hole plus its A-neighbors is not an expansion of C{}",
                q.len()
            )))
        }
    };
    if let Some((&x, &y)) = a
        .iter()
        .find_map(|x| r.iter().find(|&&y| h.has_edge(*x, y)).map(|y| (x, y)))
    {
        return Err(Error::SeparationViolation(format!(
            "A-vertex {x} is adjacent to {y} outside the hole's neighborhood"
        )));
    }
    let r_graph = h.induce(&r);
    let r_comps: Vec<Vec<usize>> = r_graph
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|i| r[i]).collect())
        .collect();
    for comp in &r_comps {
        for &w in &d {
            let touched = comp.iter().filter(|&&v| h.has_edge(w, v)).count();
            if touched != 0 && touched != comp.len() {
                return Err(Error::SeparationViolation(format!(
                    "D-vertex {w} sees only part of a component outside the hole's neighborhood"
                )));
            }
        }
    }
    if let Some((x, y)) = d.iter().find_map(|&x| {
        d.iter()
            .find(|&&y| y > x && h.has_edge(x, y))
            .map(|&y| (x, y))
    }) {
        let w = crate::patterns::PatternWitness::numbered(PatternKind::OddHole(q.len()), "v", q)
            .with_apex(&[x, y]);
        ctx.note(format!("adjacent complete neighbors give {}", w.kind));
        return Ok(Part::Blocked(Obstruction::pattern(w)));
    }

    if d.is_empty() {
        // Connected with empty D forces R = ∅, so `h` is the expansion itself.
        let exp = recognize_clique_expansion(h)?.expect("h equals the hole plus its A-neighbors");
        return expansion_branch(ctx, h, &exp, late);
    }
    let Some(c3) = expansion_color(&exp.sizes, 3)? else {
        ctx.note("hole plus A-neighbors is not 3-colorable");
        return ctx.finish(h, None, late);
    };
    let mut colors = vec![0usize; h.n()];
    for (m, v) in exp.vertex_order().into_iter().enumerate() {
        colors[qa[v]] = c3.colors[m];
    }
    for &w in &d {
        colors[w] = 4;
    }
    for comp in &r_comps {
        let sub = h.induce(comp);
        match ctx.oracle.exact_coloring(&sub, 3)? {
            Some(c) => {
                for (i, &v) in comp.iter().enumerate() {
                    colors[v] = c.colors[i];
                }
            }
            None => {
                ctx.note("a component beyond the hole's neighborhood is not 3-colorable");
                return ctx.finish(h, None, late);
            }
        }
    }
    ctx.note("3 colors on the expansion and the rest, 1 on D");
    ctx.finish(h, Some(Coloring::new(colors, 4)), late)
}
