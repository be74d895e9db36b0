//! Obstruction searches shared by the deciders.

use crate::error::Result;
use crate::expansion::{canonical_sizes, expansion_color_traced, feasibility, CliqueExpansion};
use crate::generators::build_expansion;
use crate::graph::{Coloring, Graph};
use crate::patterns::{PatternKind, PatternWitness};

use super::{Ctx, Obstruction, Part};

pub(crate) type Late = fn(&mut Ctx, &Graph) -> Result<Option<Obstruction>>;

/// `h` is the clique expansion `exp` of an odd cycle: color it by the
/// constructive routes when feasible, report a shrunken copy when only the
/// sum bound fails.
pub(crate) fn expansion_branch(
    ctx: &mut Ctx,
    h: &Graph,
    exp: &CliqueExpansion,
    late: Late,
) -> Result<Part> {
    let k = ctx.k;
    let r = feasibility(&exp.sizes, k)?;
    ctx.note(format!(
        "expansion of C{} with sizes {:?}: max pair {}, slack {}",
        exp.p(),
        exp.sizes,
        r.max_pair,
        r.sum_slack
    ));
    if r.feasible {
        let (c, route) =
            expansion_color_traced(&exp.sizes, k)?.expect("feasible vectors are colorable");
        ctx.note(format!("expansion colored by {route:?}"));
        let mut colors = vec![0; h.n()];
        for (m, v) in exp.vertex_order().into_iter().enumerate() {
            colors[v] = c.colors[m];
        }
        return ctx.finish(h, Some(Coloring::new(colors, k)), late);
    }
    if r.pair_violation.is_some() {
        return ctx.oracle_or_obstruction(h, late);
    }
    Ok(Part::Blocked(shrink_expansion(exp, k)))
}

/// Finds `kind` and wraps it as an obstruction.
pub(crate) fn named(ctx: &mut Ctx, h: &Graph, kind: PatternKind) -> Result<Option<Obstruction>> {
    let found = ctx.search.find(h, &kind)?;
    if let Some(w) = &found {
        ctx.note(format!("found {}", w.kind));
    }
    Ok(found.map(Obstruction::pattern))
}

/// `B ⊕ K_apex` where `B` is whatever `base` finds inside the common
/// neighborhood of an apex clique. Apex cliques are tried in lexicographic
/// order.
pub(crate) fn join_any(
    h: &Graph,
    apex: usize,
    mut base: impl FnMut(&Graph) -> Result<Option<PatternWitness>>,
) -> Result<Option<PatternWitness>> {
    fn rec(
        h: &Graph,
        apex: usize,
        from: usize,
        clique: &mut Vec<usize>,
        base: &mut dyn FnMut(&Graph) -> Result<Option<PatternWitness>>,
    ) -> Result<Option<PatternWitness>> {
        if clique.len() == apex {
            let common = h.common_neighbors(clique);
            if common.len() < 4 {
                return Ok(None);
            }
            let sub = h.induce(&common);
            return Ok(base(&sub)?.map(|w| w.lift(&common).with_apex(clique)));
        }
        for v in from..h.n() {
            if clique.iter().all(|&u| h.has_edge(u, v)) {
                clique.push(v);
                let found = rec(h, apex, v + 1, clique, base)?;
                clique.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
    rec(h, apex, 0, &mut Vec::new(), &mut base)
}

/// Drops vertices from the largest blocks of an infeasible expansion until
/// its total is exactly `n·k + 1`; pair sums only decrease, so the result is
/// still an induced, infeasible expansion.
pub(crate) fn shrink_expansion(exp: &CliqueExpansion, k: usize) -> Obstruction {
    let p = exp.parts.len();
    let target = (p - 1) / 2 * k + 1;
    let mut parts = exp.parts.clone();
    while parts.iter().map(Vec::len).sum::<usize>() > target {
        let max = parts.iter().map(Vec::len).max().unwrap_or(0);
        let i = parts.iter().position(|b| b.len() == max).unwrap();
        parts[i].pop();
    }
    Obstruction::expansion(parts)
}

/// Canonical size vectors of minimal infeasible expansions of `C_p` for `k`
/// colors: entries at least 1, consecutive sums at most `k`, total `n·k + 1`.
pub(crate) fn minimal_infeasible_vectors(p: usize, k: usize) -> Vec<Vec<usize>> {
    let total = (p - 1) / 2 * k + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(p: usize, k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == p {
            if left == 0 && cur[p - 1] + cur[0] <= k && canonical_sizes(cur) == *cur {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = p - i - 1;
        for s in 1..k {
            if s > left || left - s < remaining {
                break;
            }
            if i > 0 && cur[i - 1] + s > k {
                break;
            }
            cur.push(s);
            rec(p, k, left - s, cur, out);
            cur.pop();
        }
    }
    rec(p, k, total, &mut cur, &mut out);
    out
}

/// An induced minimal infeasible expansion of an odd cycle, by template
/// search over increasing `p` and the canonical vectors in order.
pub(crate) fn infeasible_expansion(
    ctx: &mut Ctx,
    h: &Graph,
    k: usize,
) -> Result<Option<Obstruction>> {
    let mut p = 5;
    while (p - 1) / 2 * k < h.n() {
        for sizes in minimal_infeasible_vectors(p, k) {
            let t = build_expansion(&sizes)?;
            if let Some(map) = ctx.search.find_induced(h, &t)? {
                let mut blocks = Vec::with_capacity(p);
                let mut at = 0;
                for &s in &sizes {
                    blocks.push(map[at..at + s].to_vec());
                    at += s;
                }
                ctx.note(format!("found infeasible expansion {sizes:?}"));
                return Ok(Some(Obstruction::expansion(blocks)));
            }
        }
        p += 2;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_vectors_for_four_colors_on_c5() {
        let v = minimal_infeasible_vectors(5, 4);
        assert_eq!(
            v,
            vec![
                vec![1, 1, 3, 1, 3],
                vec![1, 2, 2, 1, 3],
                vec![1, 2, 2, 2, 2]
            ]
        );
    }
}
