//! 4-coloring of connected (bull, claw)-free graphs of minimum degree ≥ 4.

use crate::error::Result;
use crate::expansion::recognize_clique_expansion;
use crate::graph::{Coloring, Graph};
use crate::patterns::{antihole_order_of_c5, find_fixed_pattern, FixedPattern, PatternKind};

use super::search::{expansion_branch, infeasible_expansion, named};
use super::{
    chi_alpha2, classify_against, Ctx, NeighborClass, NeighborClassification, Obstruction,
    ObstructionKind, Part,
};

/// The finite listed obstructions, in clause order.
pub(super) fn prepass(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    for kind in [
        PatternKind::join(PatternKind::OddAntihole(7), 1),
        PatternKind::join(PatternKind::C5, 2),
        PatternKind::join(PatternKind::Spindle(1), 1),
        PatternKind::join(PatternKind::Spindle(2), 1),
    ] {
        if let Some(o) = named(ctx, h, kind)? {
            return Ok(Some(o));
        }
    }
    Ok(None)
}

/// All listed obstructions in clause order, then the 9-antihole, which is
/// not 4-colorable but contains none of the listed structures.
fn late(ctx: &mut Ctx, h: &Graph) -> Result<Option<Obstruction>> {
    if let Some(o) = prepass(ctx, h)? {
        return Ok(Some(o));
    }
    if let Some(o) = infeasible_expansion(ctx, h, 4)? {
        return Ok(Some(o));
    }
    if h.n() > 8 {
        if let Some(w) = find_fixed_pattern(h, FixedPattern::C5) {
            let all: Vec<usize> = (0..h.n()).collect();
            return Ok(Some(Obstruction::sized(
                ObstructionKind::C5TooLarge { order: h.n() },
                all,
                Some(w),
            )));
        }
    }
    named(ctx, h, PatternKind::OddAntihole(9))
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
    if let Some(c5) = find_fixed_pattern(h, FixedPattern::C5) {
        return c5_branch(ctx, h, &c5.ordered());
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
    if ctx.search.odd_hole(h, 7)?.is_some() {
        ctx.note("odd hole outside a clique expansion");
        return ctx.finish(h, None, late);
    }
    ctx.note("perfect");
    ctx.oracle_or_obstruction(h, late)
}

/// Optimal coloring through the complement matching, kept if it fits in
/// `k` colors.
pub(super) fn alpha2_attempt(ctx: &mut Ctx, h: &Graph) -> Option<Coloring> {
    match chi_alpha2(h) {
        Ok((chi, c)) => {
            ctx.note(format!("independence number 2, chromatic number {chi}"));
            (chi <= ctx.k).then_some(c)
        }
        Err(e) => {
            ctx.note(format!("complement matching not applicable: {e}"));
            None
        }
    }
}

fn c5_branch(ctx: &mut Ctx, h: &Graph, hole: &[usize]) -> Result<Part> {
    let q = antihole_order_of_c5(hole);
    let cls = classify_against(h, &q, true)?;
    ctx.note(format!(
        "C5 with {} A, {} B, {} C neighbors",
        cls.of_class(|c| matches!(c, NeighborClass::A(_))).len(),
        cls.of_class(|c| matches!(c, NeighborClass::B(_))).len(),
        cls.of_class(|c| *c == NeighborClass::C).len()
    ));
    if h.n() > 8 {
        ctx.note("C5 in a component with more than 8 vertices");
        let attempt = alpha2_attempt(ctx, h);
        return ctx.finish(h, attempt, late);
    }
    let attempt = match recipe(h, &q, &cls) {
        Some((c, name)) => {
            ctx.note(format!("recipe: {name}"));
            Some(c)
        }
        None => {
            ctx.note("recipe does not apply");
            alpha2_attempt(ctx, h)
        }
    };
    ctx.finish(h, attempt, late)
}

/// First color of `palette` not used on a neighbor, vertex by vertex.
fn greedy(h: &Graph, order: &[usize], colors: &mut [usize], palette: &[usize]) -> bool {
    for &v in order {
        if colors[v] != 0 {
            continue;
        }
        match palette
            .iter()
            .find(|&&c| h.neighbors(v).iter().all(|&u| colors[u] != c))
        {
            Some(&c) => colors[v] = c,
            None => return false,
        }
    }
    true
}

/// The explicit colorings for a `C5` with at most three outside vertices.
/// `q` is in antihole order.
fn recipe(
    h: &Graph,
    q: &[usize],
    cls: &NeighborClassification,
) -> Option<(Coloring, &'static str)> {
    let hole = [q[0], q[2], q[4], q[1], q[3]];
    let out = cls.of_class(|_| true);
    if out.len() > 3 || h.n() != 5 + out.len() {
        return None;
    }
    let full = cls.of_class(|c| *c == NeighborClass::C);
    let partial = cls.of_class(|c| *c != NeighborClass::C);
    let mut colors = vec![0usize; h.n()];
    // Gives `y` color `c` together with its first uncolored non-neighbor
    // on the cycle.
    let pair = |colors: &mut Vec<usize>, y: usize, c: usize| -> bool {
        colors[y] = c;
        match hole.iter().find(|&&u| colors[u] == 0 && !h.has_edge(y, u)) {
            Some(&u) => {
                colors[u] = c;
                true
            }
            None => false,
        }
    };
    // The cycle, read from just after its first colored vertex.
    let walk = |colors: &[usize]| -> Vec<usize> {
        let s = hole
            .iter()
            .position(|&u| colors[u] != 0)
            .map_or(0, |i| i + 1);
        (0..5).map(|t| hole[(s + t) % 5]).collect()
    };
    let name;
    if let Some(&w) = full.first() {
        name = "complete neighbor";
        colors[w] = 1;
        let mut others: Vec<usize> = full[1..].iter().chain(&partial).copied().collect();
        if let Some(i) = others.iter().position(|&x| !h.has_edge(w, x)) {
            colors[others.remove(i)] = 1;
        }
        for (j, &y) in others.iter().enumerate() {
            if !pair(&mut colors, y, 2 + j) {
                return None;
            }
        }
        let palette: Vec<usize> = (2 + others.len()..=4).collect();
        let order = walk(&colors);
        if !greedy(h, &order, &mut colors, &palette) {
            return None;
        }
    } else if partial.len() == 3 {
        let (a, b, c) = (partial[0], partial[1], partial[2]);
        let non = |y: usize| hole.iter().copied().filter(move |&u| !h.has_edge(y, u));
        let triple = non(a).find_map(|u| {
            non(b).filter(|&u2| u2 != u).find_map(|u2| {
                non(c)
                    .filter(|&u3| u3 != u && u3 != u2)
                    .find(|&u3| {
                        let rest: Vec<usize> = hole
                            .iter()
                            .copied()
                            .filter(|&v| ![u, u2, u3].contains(&v))
                            .collect();
                        !h.has_edge(rest[0], rest[1])
                    })
                    .map(|u3| (u, u2, u3))
            })
        });
        if let Some((u, u2, u3)) = triple {
            name = "three partial neighbors, matched";
            for (y, x, col) in [(a, u, 1), (b, u2, 2), (c, u3, 3)] {
                colors[y] = col;
                colors[x] = col;
            }
            for &v in &hole {
                if colors[v] == 0 {
                    colors[v] = 4;
                }
            }
        } else {
            name = "three partial neighbors, shared color";
            let (x, y) = [(a, b), (a, c), (b, c)]
                .into_iter()
                .find(|&(x, y)| !h.has_edge(x, y))?;
            let z = a + b + c - x - y;
            colors[x] = 1;
            colors[y] = 1;
            if !pair(&mut colors, z, 2) {
                return None;
            }
            let order = walk(&colors);
            if !greedy(h, &order, &mut colors, &[3, 4]) {
                return None;
            }
        }
    } else {
        name = "partial neighbors, each paired";
        for (j, &y) in partial.iter().enumerate() {
            if !pair(&mut colors, y, 1 + j) {
                return None;
            }
        }
        let palette: Vec<usize> = (1 + partial.len()..=4).collect();
        let order = walk(&colors);
        if !greedy(h, &order, &mut colors, &palette) {
            return None;
        }
    }
    Some((Coloring::new(colors, 4), name))
}
